#pragma once

#include <numeric>
#include <stdexcept>
#include <string>

namespace turmlab {

// Exact nonnegative rational for the slack parameters of the transforms.
// Threshold comparisons are done in cross-multiplied integer arithmetic,
// never in floating point.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n, long long d) : num(n), den(d) {
    if (den <= 0) throw std::invalid_argument("Rational: denominator must be positive");
    if (num < 0) throw std::invalid_argument("Rational: must be nonnegative");
    long long g = std::gcd(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  bool is_zero() const { return num == 0; }
  bool less_than_one() const { return num < den; }

  // Accepts "p/q", decimals like "0.3", and plain integers.
  static Rational parse(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("Rational: empty string");
    auto digits = [](const std::string& s) {
      if (s.empty()) return false;
      for (char c : s)
        if (c < '0' || c > '9') return false;
      return true;
    };
    auto slash = text.find('/');
    if (slash != std::string::npos) {
      std::string p = text.substr(0, slash), q = text.substr(slash + 1);
      if (!digits(p) || !digits(q))
        throw std::invalid_argument("Rational: malformed fraction '" + text + "'");
      return Rational(std::stoll(p), std::stoll(q));
    }
    auto dot = text.find('.');
    if (dot != std::string::npos) {
      std::string ip = text.substr(0, dot), fp = text.substr(dot + 1);
      if (ip.empty()) ip = "0";
      if (!digits(ip) || !digits(fp) || fp.size() > 15)
        throw std::invalid_argument("Rational: malformed decimal '" + text + "'");
      long long den = 1;
      for (std::size_t i = 0; i < fp.size(); ++i) den *= 10;
      return Rational(std::stoll(ip) * den + (fp.empty() ? 0 : std::stoll(fp)), den);
    }
    if (!digits(text)) throw std::invalid_argument("Rational: malformed number '" + text + "'");
    return Rational(std::stoll(text), 1);
  }

  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }

  bool operator==(const Rational&) const = default;
};

}  // namespace turmlab
