#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "dedekind/identities.hpp"

namespace dedekind {

using u64 = std::uint64_t;

struct PrimePower {
  u64 prime;
  unsigned exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

using Factorization = std::vector<PrimePower>;

// Trial division, primes ascending; {} for n == 1. Meant for n <= 1e12.
Factorization factorize(u64 n);

// Moduli t for which x^2 == -1 (mod t) is solvable: t = m or t = 2m with
// every prime divisor of m congruent to 1 mod 4.
struct AdmissibleWitness {
  u64 t = 1;
  Factorization factorization;
  u64 m = 1;             // odd part of t
  bool doubled = false;  // t == 2m
  std::vector<u64> roots;  // ascending, x in [0, t) with x^2 + 1 == 0 (mod t)
};

struct Admissibility {
  bool admissible = false;
  std::optional<AdmissibleWitness> witness;
};

// Throws kInvalidArgument for t == 0.
Admissibility is_admissible(u64 t);

// All square roots of -1 modulo t, ascending. Tonelli-Shanks per prime
// p == 1 (mod 4), Hensel lifting to p^e, then CRT. Throws kNotAdmissible.
std::vector<u64> sqrt_minus_one(u64 t);

// Square root of n modulo an odd prime p; nullopt if n is a non-residue.
// The non-residue for Tonelli-Shanks is the first of 2, 3, 4, ... found.
std::optional<u64> sqrt_mod_prime(u64 n, u64 p);

// Lazily yields every Theorem1Instance with t <= t_max, b <= b_max and
// a in [1, multiplier * t] with a^2 == -1 (mod t), in (t, a, b) order.
// multiplier = 1 takes a as the least positive representative of each root.
class Theorem1Stream {
 public:
  Theorem1Stream(u64 t_max, u64 b_max, u64 multiplier = 1);

  std::optional<Theorem1Instance> next();

 private:
  bool advance_t();

  u64 t_max_, b_max_, multiplier_;
  u64 t_ = 0;
  std::vector<u64> a_values_;
  std::size_t a_index_ = 0;
  u64 b_ = 0;
};

std::vector<Theorem1Instance> enumerate_theorem1_instances(u64 t_max, u64 b_max,
                                                           u64 multiplier = 1);

}  // namespace dedekind
