#include "vbs/state.hpp"

#include <string>

#include "vbs/errors.hpp"

namespace vbs {

PureState::PureState(std::vector<std::size_t> site_dims, std::vector<std::string> site_labels, Vector amplitudes)
    : dims_(std::move(site_dims)), labels_(std::move(site_labels)), amplitudes_(std::move(amplitudes)) {
  if (labels_.size() != dims_.size()) {
    throw DomainError("site label count does not match site count");
  }
  std::size_t total = 1;
  for (std::size_t d : dims_) {
    if (d == 0) throw DomainError("site dimension must be positive");
    total *= d;
  }
  if (total != static_cast<std::size_t>(amplitudes_.size())) {
    throw DomainError("amplitude vector has " + std::to_string(amplitudes_.size()) +
                      " entries, basis has " + std::to_string(total));
  }
}

std::size_t PureState::range_dimension(SiteRange range) const {
  if (range.end() > dims_.size()) {
    throw DomainError("site range [" + std::to_string(range.first) + ", " + std::to_string(range.end()) +
                      ") exceeds " + std::to_string(dims_.size()) + " sites");
  }
  std::size_t total = 1;
  for (std::size_t s = range.first; s < range.end(); ++s) total *= dims_[s];
  return total;
}

BellIndex adjoint_label(int n, int slot) {
  if (slot < 0 || slot >= adjoint_dimension(n)) {
    throw DomainError("adjoint slot " + std::to_string(slot) + " out of range");
  }
  return BellIndex::from_linear(n, slot + 1);
}

int adjoint_slot(const BellIndex& label) {
  if (label.is_identity()) {
    throw DomainError("the singlet (0,0) is not an adjoint basis state");
  }
  return label.linear() - 1;
}

std::size_t checked_power(std::size_t base, std::size_t exponent, std::size_t cap) {
  std::size_t result = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    if (base != 0 && result > cap / base) return 0;
    result *= base;
  }
  return result > cap ? 0 : result;
}

}  // namespace vbs
