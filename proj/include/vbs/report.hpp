#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "vbs/weyl.hpp"

namespace vbs {

/// One output row of the spectrum/entropy commands. N = -1 encodes the open
/// chain, whose closed form does not depend on the chain length. A row with
/// `alpha` set but no `renyi` marks a Renyi branch point.
struct ResultRow {
  int n = 0;
  long long chain = -1;
  int block = 0;
  std::string boundary;
  double lambda_singlet = 0.0;
  double lambda_adjoint = 0.0;
  double entropy = 0.0;
  std::optional<Complex> alpha;
  std::optional<Complex> renyi;
  std::optional<bool> verified;
  std::optional<double> max_dev;

  friend bool operator==(const ResultRow&, const ResultRow&) = default;
};

std::string csv_header();
std::string to_csv(const ResultRow& row);
ResultRow row_from_csv(std::string_view line);

nlohmann::json to_json(const ResultRow& row);
ResultRow row_from_json(const nlohmann::json& j);

/// 17 significant digits, enough to round-trip any double.
std::string format_double(double value);
std::string format_alpha(Complex alpha);

/// Parses "a", "a+bi", "a-bi" or "bi" (no spaces).
Complex parse_alpha(std::string_view text);

/// Parses "k", "a..b" or comma-separated mixtures of both into an ascending,
/// duplicate-free list.
std::vector<int> parse_int_list(std::string_view text);

}  // namespace vbs
