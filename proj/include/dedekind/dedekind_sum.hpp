#pragma once

#include "dedekind/exact_arith.hpp"

namespace dedekind {

// A validated argument pair for s(a, b): b >= 1 and gcd(a, b) == 1.
class SumArgs {
 public:
  // Throws kInvalidArgument if b < 1, kNotCoprime if gcd(a, b) != 1.
  static SumArgs make(Int a, Int b);

  const Int& a() const noexcept { return a_; }
  const Int& b() const noexcept { return b_; }

 private:
  SumArgs(Int a, Int b) : a_(std::move(a)), b_(std::move(b)) {}

  Int a_;
  Int b_;
};

// ((num/den)): 0 at integers, x - floor(x) - 1/2 otherwise. den >= 1.
Rat sawtooth(const Int& num, const Int& den);

// s(a, b) by summing ((k/b))((ak/b)) over k = 1..b. Linear in b.
Rat dedekind_sum_naive(const SumArgs& args);

// s(a, b) via the reciprocity recursion on (a mod b, b): one step per
// Euclidean division, so O(log b) steps.
Rat dedekind_sum_fast(const SumArgs& args);

// S(a, b) = 12 s(a, b), using the fast evaluator.
Rat normalized_sum(const SumArgs& args);

// Shorthand for normalized_sum(SumArgs::make(a, b)).
Rat normalized_sum(const Int& a, const Int& b);

namespace detail {

// Literal summation with Rat arithmetic at every term. The public naive
// evaluator switches to scaled 128-bit integer sums when b < 2^31; this
// entry point keeps the slow route testable.
Rat dedekind_sum_naive_rational(const SumArgs& args);

}  // namespace detail

}  // namespace dedekind
