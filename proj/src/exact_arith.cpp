#include "dedekind/exact_arith.hpp"

#include <utility>

namespace dedekind {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kZeroDenominator: return "ZeroDenominator";
    case ErrorCode::kNotCoprime: return "NotCoprime";
    case ErrorCode::kNotOdd: return "NotOdd";
    case ErrorCode::kInvalidInstance: return "InvalidInstance";
    case ErrorCode::kEqualFractions: return "EqualFractions";
    case ErrorCode::kNoBranchApplies: return "NoBranchApplies";
    case ErrorCode::kPreconditionViolated: return "PreconditionViolated";
    case ErrorCode::kNotAdmissible: return "NotAdmissible";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::invalid_argument(std::string(error_code_name(code)) + ": " + detail),
      code_(code),
      detail_(detail) {}

EgcdResult egcd(const Int& x, const Int& y) {
  // Invariant: old_u*|x| + old_v*|y| == old_r and u*|x| + v*|y| == r.
  Int old_r = abs(x), r = abs(y);
  Int old_u = 1, u = 0;
  Int old_v = 0, v = 1;
  Int quot, tmp;
  while (r != 0) {
    mpz_tdiv_q(quot.get_mpz_t(), old_r.get_mpz_t(), r.get_mpz_t());
    tmp = old_r - quot * r;
    old_r = std::move(r);
    r = std::move(tmp);
    tmp = old_u - quot * u;
    old_u = std::move(u);
    u = std::move(tmp);
    tmp = old_v - quot * v;
    old_v = std::move(v);
    v = std::move(tmp);
  }
  if (x < 0) old_u = -old_u;
  if (y < 0) old_v = -old_v;
  return {old_r, old_u, old_v};
}

Int gcd(const Int& x, const Int& y) {
  Int g;
  mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  return g;
}

Int mod_floor(const Int& x, const Int& m) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return r;
}

Int mod_inverse(const Int& x, const Int& m) {
  if (m < 1) throw Error(ErrorCode::kInvalidArgument, "modulus must be >= 1");
  if (m == 1) return 0;
  const Int reduced = mod_floor(x, m);
  const EgcdResult e = egcd(reduced, m);
  if (e.g != 1) {
    throw Error(ErrorCode::kNotCoprime,
                "gcd(" + x.get_str() + ", " + m.get_str() + ") != 1");
  }
  return mod_floor(e.u, m);
}

Rat Rat::normalize(Int num, Int den) {
  if (den == 0) throw Error(ErrorCode::kZeroDenominator, "denominator is zero");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num == 0) return Rat();
  const Int g = gcd(num, den);
  if (g != 1) {
    mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den.get_mpz_t(), den.get_mpz_t(), g.get_mpz_t());
  }
  return Rat(std::move(num), std::move(den), true);
}

std::string Rat::to_string() const { return num_.get_str() + "/" + den_.get_str(); }

Rat Rat::operator-() const { return Rat(-num_, den_, true); }

Rat& Rat::operator+=(const Rat& rhs) {
  if (den_ == rhs.den_) {
    *this = normalize(num_ + rhs.num_, den_);
  } else {
    *this = normalize(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
  }
  return *this;
}

Rat& Rat::operator-=(const Rat& rhs) { return *this += -rhs; }

Rat& Rat::operator*=(const Rat& rhs) {
  *this = normalize(num_ * rhs.num_, den_ * rhs.den_);
  return *this;
}

Rat& Rat::operator/=(const Rat& rhs) {
  if (rhs.num_ == 0) throw Error(ErrorCode::kZeroDenominator, "division by zero");
  *this = normalize(num_ * rhs.den_, den_ * rhs.num_);
  return *this;
}

std::strong_ordering operator<=>(const Rat& lhs, const Rat& rhs) {
  const int c = cmp(Int(lhs.num_ * rhs.den_), Int(rhs.num_ * lhs.den_));
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rat& value) {
  return os << value.to_string();
}

}  // namespace dedekind
