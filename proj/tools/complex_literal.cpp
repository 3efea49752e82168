#include "complex_literal.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <string>

#include "janowski/error.hpp"

namespace janowski::cli {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void reject(std::string_view text, const char* what) {
  throw Error(ErrorCode::InvalidParams, std::string("cannot parse '") + std::string(text) + "' as " + what);
}

// Coefficient with an optional sign; "" and "+" mean 1, "-" means -1.
double coefficient(std::string_view s) {
  s = trim(s);
  if (s.empty() || s == "+") return 1.0;
  if (s == "-") return -1.0;
  return parse_real(s);
}

}  // namespace

double parse_real(std::string_view text) {
  std::string_view s = trim(text);
  double factor = 1.0;
  if (s.size() >= 2 && s.substr(s.size() - 2) == "pi") {
    factor = kPi;
    s.remove_suffix(2);
    s = trim(s);
    if (s.empty() || s == "+") return factor;
    if (s == "-") return -factor;
    if (s.back() == '*') s.remove_suffix(1);
  }
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double value = 0.0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || end != s.data() + s.size() || s.empty()) reject(text, "a real number");
  return value * factor;
}

Complex parse_complex(std::string_view text) {
  const std::string_view s = trim(text);
  if (s.empty()) reject(text, "a complex number");
  if (const auto at = s.find('@'); at != std::string_view::npos) {
    return std::polar(parse_real(s.substr(0, at)), parse_real(s.substr(at + 1)));
  }
  if (s.back() != 'i' || (s.size() >= 2 && s.substr(s.size() - 2) == "pi")) {
    return {parse_real(s), 0.0};
  }
  const std::string_view body = s.substr(0, s.size() - 1);
  // Split at the last sign that does not belong to an exponent.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string_view::npos) return {0.0, coefficient(body)};
  return {parse_real(body.substr(0, split)), coefficient(body.substr(split))};
}

}  // namespace janowski::cli
