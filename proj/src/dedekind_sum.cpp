#include "dedekind/dedekind_sum.hpp"

#include <cstdint>

namespace dedekind {

SumArgs SumArgs::make(Int a, Int b) {
  if (b < 1) {
    throw Error(ErrorCode::kInvalidArgument, "b must be >= 1, got " + b.get_str());
  }
  if (gcd(a, b) != 1) {
    throw Error(ErrorCode::kNotCoprime,
                "gcd(" + a.get_str() + ", " + b.get_str() + ") != 1");
  }
  return SumArgs(std::move(a), std::move(b));
}

Rat sawtooth(const Int& num, const Int& den) {
  if (den < 1) throw Error(ErrorCode::kInvalidArgument, "sawtooth denominator must be >= 1");
  const Int r = mod_floor(num, den);
  if (r == 0) return Rat();
  // r/den - 1/2
  return Rat::normalize(2 * r - den, 2 * den);
}

namespace detail {

Rat dedekind_sum_naive_rational(const SumArgs& args) {
  const Int& b = args.b();
  Rat sum;
  for (Int k = 1; k <= b; ++k) {
    sum += sawtooth(k, b) * sawtooth(Int(args.a() * k), b);
  }
  return sum;
}

}  // namespace detail

namespace {

Int from_i128(__int128 value) {
  const bool negative = value < 0;
  unsigned __int128 mag = negative ? -static_cast<unsigned __int128>(value)
                                   : static_cast<unsigned __int128>(value);
  const auto hi = static_cast<std::uint64_t>(mag >> 64);
  const auto lo = static_cast<std::uint64_t>(mag);
  Int out = hi;
  out <<= 64;
  out += lo;
  return negative ? Int(-out) : out;
}

}  // namespace

Rat dedekind_sum_naive(const SumArgs& args) {
  if (args.b() >= (Int(1) << 31)) return detail::dedekind_sum_naive_rational(args);

  // For 1 <= k < b both sawtooth arguments are non-integers (gcd(a, b) == 1),
  // so ((k/b)) = (2k - b) / 2b and ((ak/b)) = (2(ak mod b) - b) / 2b. The
  // k == b term is zero.
  const std::int64_t b = args.b().get_si();
  const std::int64_t a0 = mod_floor(args.a(), args.b()).get_si();
  __int128 acc = 0;
  std::int64_t ak = 0;
  for (std::int64_t k = 1; k < b; ++k) {
    ak += a0;
    if (ak >= b) ak -= b;
    acc += static_cast<__int128>(2 * k - b) * (2 * ak - b);
  }
  return Rat::normalize(from_i128(acc), Int(4 * Int(b) * b));
}

Rat dedekind_sum_fast(const SumArgs& args) {
  // s(a, b) = -s(b mod a, a) + (a^2 + b^2 + 1) / (12ab) - 1/4 for coprime
  // 1 <= a < b; s(., 1) = 0. Unrolled with an alternating sign.
  Int b = args.b();
  Int a = mod_floor(args.a(), b);
  Int num = 0;
  Int den = 1;
  bool positive = true;
  Int step_den, step_num, next;
  while (b > 1) {
    // term = (a^2 + b^2 + 1 - 3ab) / (12ab)
    step_den = 12 * a * b;
    step_num = a * a + b * b + 1 - 3 * a * b;
    if (!positive) step_num = -step_num;
    num = num * step_den + step_num * den;
    den *= step_den;
    const Int g = gcd(num, den);
    if (g != 1) {
      mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), g.get_mpz_t());
      mpz_divexact(den.get_mpz_t(), den.get_mpz_t(), g.get_mpz_t());
    }
    positive = !positive;
    mpz_tdiv_r(next.get_mpz_t(), b.get_mpz_t(), a.get_mpz_t());
    b = std::move(a);
    a = std::move(next);
  }
  return Rat::normalize(std::move(num), std::move(den));
}

Rat normalized_sum(const SumArgs& args) { return Rat(12) * dedekind_sum_fast(args); }

Rat normalized_sum(const Int& a, const Int& b) { return normalized_sum(SumArgs::make(a, b)); }

}  // namespace dedekind
