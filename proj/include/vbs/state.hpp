#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "vbs/weyl.hpp"

namespace vbs {

inline constexpr std::size_t kDefaultAmplitudeBudget = std::size_t{1} << 26;
inline constexpr std::size_t kDefaultMatrixBudget = 4096;

/// Contiguous run of sites [first, first + count) in a PureState's site list
/// (0-based).
struct SiteRange {
  std::size_t first = 0;
  std::size_t count = 0;

  std::size_t end() const { return first + count; }
};

/// Dense amplitude vector over a tensor-product basis. Site 0 is the most
/// significant digit of the flat index.
class PureState {
 public:
  PureState(std::vector<std::size_t> site_dims, std::vector<std::string> site_labels, Vector amplitudes);

  std::size_t site_count() const { return dims_.size(); }
  std::span<const std::size_t> site_dims() const { return dims_; }
  const std::vector<std::string>& site_labels() const { return labels_; }
  const Vector& amplitudes() const { return amplitudes_; }
  std::size_t dimension() const { return static_cast<std::size_t>(amplitudes_.size()); }

  // Product of the dimensions of the sites in `range`.
  std::size_t range_dimension(SiteRange range) const;

  double norm() const { return amplitudes_.norm(); }

 private:
  std::vector<std::size_t> dims_;
  std::vector<std::string> labels_;
  Vector amplitudes_;
};

// An adjoint site has n^2 - 1 basis states, one per non-identity Bell index.
// Slot s corresponds to the Bell index with linear() == s + 1.
inline int adjoint_dimension(int n) { return n * n - 1; }
BellIndex adjoint_label(int n, int slot);
int adjoint_slot(const BellIndex& label);

/// base^exponent, or 0 when the result would exceed `cap`.
std::size_t checked_power(std::size_t base, std::size_t exponent, std::size_t cap);

}  // namespace vbs
