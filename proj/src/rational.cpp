#include "alpharad/rational.hpp"

#include <charconv>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace alpharad {

Rational Rational::make(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  return {num / g, den / g};
}

std::string Rational::to_string() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

Alpha::Alpha(double value) : value_(value), exact_(std::nullopt) {
  if (!(value >= 0.0) || !std::isfinite(value)) throw std::invalid_argument("alpha must be a finite value >= 0");
  // Doubles are dyadic; keep the exact fraction when the denominator is small.
  for (int k = 0; k <= 30; ++k) {
    const double scaled = std::ldexp(value, k);
    if (scaled > 9.0e15) break;
    if (scaled == std::floor(scaled)) {
      exact_ = Rational::make(static_cast<std::int64_t>(scaled), std::int64_t{1} << k);
      break;
    }
  }
}

Alpha Alpha::fraction(std::int64_t num, std::int64_t den) {
  Rational r = Rational::make(num, den);
  if (r.num < 0) throw std::invalid_argument("alpha must be >= 0");
  Alpha a;
  a.value_ = r.to_double();
  a.exact_ = r;
  return a;
}

namespace {

bool parse_int(std::string_view text, std::int64_t& out) {
  if (text.empty()) return false;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc{} && ptr == text.data() + text.size();
}

}  // namespace

Alpha Alpha::parse(std::string_view text) {
  const std::string original(text);
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::int64_t p = 0;
    std::int64_t q = 0;
    if (!parse_int(text.substr(0, slash), p) || !parse_int(text.substr(slash + 1), q) || q == 0) {
      throw std::invalid_argument("malformed fraction '" + original + "'");
    }
    return fraction(p, q);
  }
  // Plain decimal: digits, optional '.', digits.
  auto dot = text.find('.');
  std::string_view whole = text.substr(0, dot);
  std::string_view frac = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
  const bool plain = !text.empty() && whole.find_first_not_of("0123456789") == std::string_view::npos &&
                     frac.find_first_not_of("0123456789") == std::string_view::npos &&
                     (!whole.empty() || !frac.empty()) && frac.size() <= 15;
  if (plain) {
    std::int64_t den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    std::int64_t w = 0;
    std::int64_t f = 0;
    if ((!whole.empty() && !parse_int(whole, w)) || (!frac.empty() && !parse_int(frac, f))) {
      throw std::invalid_argument("malformed alpha '" + original + "'");
    }
    return fraction(w * den + f, den);
  }
  double value = 0.0;
  std::istringstream in(original);
  if (!(in >> value) || !in.eof()) throw std::invalid_argument("malformed alpha '" + original + "'");
  Alpha a(value);
  return a;
}

std::string Alpha::to_string() const {
  if (exact_) return exact_->to_string();
  std::ostringstream out;
  out.precision(17);
  out << value_;
  return out.str();
}

}  // namespace alpharad
