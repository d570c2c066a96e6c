#include "vbs/report.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <set>
#include <sstream>

#include "vbs/errors.hpp"

namespace vbs {

namespace {

double parse_double(std::string_view text) {
  if (text.empty()) throw DomainError("empty number");
  // strtod handles inf/nan spellings and exponents uniformly.
  std::string owned(text);
  char* end = nullptr;
  const double value = std::strtod(owned.c_str(), &end);
  if (end != owned.c_str() + owned.size()) throw DomainError("not a number: '" + owned + "'");
  return value;
}

long long parse_integer(std::string_view text) {
  long long value = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  if (!text.empty() && text.front() == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) {
    throw DomainError("not an integer: '" + std::string(text) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::string optional_field(const std::optional<double>& v) { return v ? format_double(*v) : std::string(); }

}  // namespace

std::string format_double(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

std::string format_alpha(Complex alpha) {
  if (alpha.imag() == 0.0) return format_double(alpha.real());
  char buffer[96];
  std::snprintf(buffer, sizeof buffer, "%.17g%+.17gi", alpha.real(), alpha.imag());
  return buffer;
}

Complex parse_alpha(std::string_view text) {
  if (text.empty()) throw DomainError("empty alpha literal");
  if (text.back() != 'i') return {parse_double(text), 0.0};
  const std::string_view body = text.substr(0, text.size() - 1);
  // The imaginary part starts at the last sign that is not part of an exponent.
  std::size_t split_at = std::string_view::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
      split_at = i;
      break;
    }
  }
  if (split_at == std::string_view::npos) {
    if (body.empty() || body == "+" || body == "-") {
      throw DomainError("malformed alpha literal '" + std::string(text) + "'");
    }
    return {0.0, parse_double(body)};
  }
  const std::string_view imag = body.substr(split_at);
  if (imag.size() == 1) throw DomainError("malformed alpha literal '" + std::string(text) + "'");
  return {parse_double(body.substr(0, split_at)), parse_double(imag)};
}

std::vector<int> parse_int_list(std::string_view text) {
  std::set<int> values;
  for (std::string_view part : split(text, ',')) {
    if (part.empty()) throw DomainError("empty entry in integer list '" + std::string(text) + "'");
    const std::size_t dots = part.find("..");
    if (dots == std::string_view::npos) {
      values.insert(static_cast<int>(parse_integer(part)));
      continue;
    }
    const long long lo = parse_integer(part.substr(0, dots));
    const long long hi = parse_integer(part.substr(dots + 2));
    if (lo > hi) throw DomainError("empty range '" + std::string(part) + "'");
    if (hi - lo > 100000) throw DomainError("range '" + std::string(part) + "' is too long");
    for (long long v = lo; v <= hi; ++v) values.insert(static_cast<int>(v));
  }
  return {values.begin(), values.end()};
}

std::string csv_header() {
  return "n,N,L,boundary,lambda_singlet,lambda_adjoint,S,alpha,S_alpha_re,S_alpha_im,verified,max_dev";
}

std::string to_csv(const ResultRow& row) {
  std::ostringstream out;
  out << row.n << ',' << row.chain << ',' << row.block << ',' << row.boundary << ','
      << format_double(row.lambda_singlet) << ',' << format_double(row.lambda_adjoint) << ','
      << format_double(row.entropy) << ',' << (row.alpha ? format_alpha(*row.alpha) : "") << ','
      << (row.renyi ? format_double(row.renyi->real()) : "") << ','
      << (row.renyi ? format_double(row.renyi->imag()) : "") << ','
      << (row.verified ? (*row.verified ? "true" : "false") : "") << ',' << optional_field(row.max_dev);
  return out.str();
}

ResultRow row_from_csv(std::string_view line) {
  const std::vector<std::string_view> f = split(line, ',');
  if (f.size() != 12) throw DomainError("CSV row needs 12 fields, got " + std::to_string(f.size()));
  ResultRow row;
  row.n = static_cast<int>(parse_integer(f[0]));
  row.chain = parse_integer(f[1]);
  row.block = static_cast<int>(parse_integer(f[2]));
  row.boundary = std::string(f[3]);
  row.lambda_singlet = parse_double(f[4]);
  row.lambda_adjoint = parse_double(f[5]);
  row.entropy = parse_double(f[6]);
  if (!f[7].empty()) row.alpha = parse_alpha(f[7]);
  if (!f[8].empty()) row.renyi = Complex{parse_double(f[8]), parse_double(f[9])};
  if (!f[10].empty()) {
    if (f[10] != "true" && f[10] != "false") throw DomainError("verified must be true or false");
    row.verified = f[10] == "true";
  }
  if (!f[11].empty()) row.max_dev = parse_double(f[11]);
  return row;
}

nlohmann::json to_json(const ResultRow& row) {
  nlohmann::json j;
  j["n"] = row.n;
  j["N"] = row.chain;
  j["L"] = row.block;
  j["boundary"] = row.boundary;
  j["lambda_singlet"] = row.lambda_singlet;
  j["lambda_adjoint"] = row.lambda_adjoint;
  j["S"] = row.entropy;
  j["alpha"] = row.alpha ? nlohmann::json(format_alpha(*row.alpha)) : nlohmann::json(nullptr);
  j["S_alpha_re"] = row.renyi ? nlohmann::json(row.renyi->real()) : nlohmann::json(nullptr);
  j["S_alpha_im"] = row.renyi ? nlohmann::json(row.renyi->imag()) : nlohmann::json(nullptr);
  j["verified"] = row.verified ? nlohmann::json(*row.verified) : nlohmann::json(nullptr);
  j["max_dev"] = row.max_dev ? nlohmann::json(*row.max_dev) : nlohmann::json(nullptr);
  return j;
}

ResultRow row_from_json(const nlohmann::json& j) {
  ResultRow row;
  try {
    row.n = j.at("n").get<int>();
    row.chain = j.at("N").get<long long>();
    row.block = j.at("L").get<int>();
    row.boundary = j.at("boundary").get<std::string>();
    row.lambda_singlet = j.at("lambda_singlet").get<double>();
    row.lambda_adjoint = j.at("lambda_adjoint").get<double>();
    row.entropy = j.at("S").get<double>();
    if (!j.at("alpha").is_null()) row.alpha = parse_alpha(j.at("alpha").get<std::string>());
    if (!j.at("S_alpha_re").is_null()) {
      row.renyi = Complex{j.at("S_alpha_re").get<double>(), j.at("S_alpha_im").get<double>()};
    }
    if (!j.at("verified").is_null()) row.verified = j.at("verified").get<bool>();
    if (!j.at("max_dev").is_null()) row.max_dev = j.at("max_dev").get<double>();
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed result row: ") + e.what());
  }
  return row;
}

}  // namespace vbs
