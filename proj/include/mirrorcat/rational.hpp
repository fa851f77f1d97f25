#pragma once

#include <compare>
#include <string>
#include <string_view>

namespace mirrorcat {

// Exact rational number on 64-bit numerator/denominator, always reduced,
// denominator > 0. Conformal weights and central charges are stored this way
// so integrality tests never go through floating point. Intermediates run
// through 128-bit arithmetic; anything leaving the 64-bit range throws
// std::overflow_error instead of wrapping.
class Rational {
 public:
  Rational() = default;
  Rational(long long n) : num_(n) {}  // NOLINT: implicit on purpose
  Rational(long long n, long long d);

  // Accepts "p", "-p", "p/q". Throws std::invalid_argument on anything else.
  static Rational parse(std::string_view text);

  long long num() const { return num_; }
  long long den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  bool is_nonnegative() const { return num_ >= 0; }

  // Canonical text form: "p" when integral, "p/q" otherwise.
  std::string str() const;

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  // Representative in [0, 1); used for phase angles measured in turns.
  Rational mod_one() const;

  Rational operator-() const { return Rational(-num_, den_); }
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  static Rational make(__int128 n, __int128 d);

  long long num_ = 0;
  long long den_ = 1;
};

}  // namespace mirrorcat
