#pragma once

#include <gmpxx.h>

#include <compare>
#include <ostream>
#include <string>

#include "dedekind/error.hpp"

namespace dedekind {

using Int = mpz_class;

struct EgcdResult {
  Int g;
  Int u;
  Int v;
};

// Extended Euclid on |x|, |y| with the signs folded back into u and v, so
// that u*x + v*y == g == gcd(|x|, |y|). egcd(0, 0) == {0, 0, 0}.
EgcdResult egcd(const Int& x, const Int& y);

// Unique r in [0, m) with x*r == 1 (mod m). m == 1 yields 0.
// Throws kInvalidArgument for m < 1 and kNotCoprime when gcd(x, m) != 1.
Int mod_inverse(const Int& x, const Int& m);

// Least nonnegative residue of x modulo m (m >= 1).
Int mod_floor(const Int& x, const Int& m);

Int gcd(const Int& x, const Int& y);

// Exact rational in lowest terms with a positive denominator. Zero is 0/1.
class Rat {
 public:
  Rat() : num_(0), den_(1) {}
  Rat(long value) : num_(value), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rat(const Int& value) : num_(value), den_(1) {}  // NOLINT(google-explicit-constructor)

  // Throws kZeroDenominator when den == 0.
  static Rat normalize(Int num, Int den);

  const Int& num() const noexcept { return num_; }
  const Int& den() const noexcept { return den_; }
  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  // Always "num/den", including "0/1" and "5/1".
  std::string to_string() const;

  Rat operator-() const;
  Rat& operator+=(const Rat& rhs);
  Rat& operator-=(const Rat& rhs);
  Rat& operator*=(const Rat& rhs);
  Rat& operator/=(const Rat& rhs);

  friend Rat operator+(Rat lhs, const Rat& rhs) { return lhs += rhs; }
  friend Rat operator-(Rat lhs, const Rat& rhs) { return lhs -= rhs; }
  friend Rat operator*(Rat lhs, const Rat& rhs) { return lhs *= rhs; }
  friend Rat operator/(Rat lhs, const Rat& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rat& lhs, const Rat& rhs) {
    return lhs.num_ == rhs.num_ && lhs.den_ == rhs.den_;
  }
  friend std::strong_ordering operator<=>(const Rat& lhs, const Rat& rhs);

 private:
  Rat(Int num, Int den, bool /*reduced*/)
      : num_(std::move(num)), den_(std::move(den)) {}

  Int num_;
  Int den_;
};

inline Rat rat_normalize(Int num, Int den) {
  return Rat::normalize(std::move(num), std::move(den));
}

std::ostream& operator<<(std::ostream& os, const Rat& value);

}  // namespace dedekind
