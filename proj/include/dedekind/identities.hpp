#pragma once

#include <string_view>
#include <utility>

#include "dedekind/dedekind_sum.hpp"

namespace dedekind {

// Both sides of an identity evaluated exactly on one instance.
struct Evaluation {
  Rat lhs;
  Rat rhs;

  Rat residual() const { return lhs - rhs; }
  bool holds() const { return lhs == rhs; }
};

// Hypotheses of the parametrized reciprocity law: a, b, t >= 1,
// gcd(a, b) == gcd(b, t) == 1 and t | a^2 + 1. Carries a* = a^-1 mod b and
// b* = b^-1 mod a as residues in [0, b) and [0, a).
class Theorem1Instance {
 public:
  // Throws kInvalidInstance naming the first violated hypothesis.
  static Theorem1Instance make(Int t, Int a, Int b);

  const Int& t() const noexcept { return t_; }
  const Int& a() const noexcept { return a_; }
  const Int& b() const noexcept { return b_; }
  const Int& a_star() const noexcept { return a_star_; }
  const Int& b_star() const noexcept { return b_star_; }

 private:
  Theorem1Instance() = default;

  Int t_, a_, b_, a_star_, b_star_;
};

// Inputs of the three-term relation plus the quantities derived from them:
// q = ad - bc, eps = sign(q), a Bezout pair -cj + dk = 1, and r = aj - bk.
class ThreeTermWitness {
 public:
  // Picks (j, k) from egcd(-c, d). Throws kInvalidArgument for b, d < 1,
  // kNotCoprime for gcd(a, b) or gcd(c, d) != 1, kEqualFractions if a/b == c/d.
  static ThreeTermWitness make(Int a, Int b, Int c, Int d);
  // Same, with a caller-chosen Bezout pair; kInvalidInstance if -cj + dk != 1.
  static ThreeTermWitness make(Int a, Int b, Int c, Int d, Int j, Int k);

  const Int& a() const noexcept { return a_; }
  const Int& b() const noexcept { return b_; }
  const Int& c() const noexcept { return c_; }
  const Int& d() const noexcept { return d_; }
  const Int& q() const noexcept { return q_; }
  int eps() const noexcept { return eps_; }
  const Int& j() const noexcept { return j_; }
  const Int& k() const noexcept { return k_; }
  const Int& r() const noexcept { return r_; }

 private:
  ThreeTermWitness() = default;

  Int a_, b_, c_, d_, q_, j_, k_, r_;
  int eps_ = 1;
};

// Hypotheses as for Theorem1Instance, with c = b(a^2 + 1)/t and the two
// inverses of t modulo b and modulo a.
class Eq22Instance {
 public:
  static Eq22Instance make(Int a, Int b, Int t);

  const Int& a() const noexcept { return a_; }
  const Int& b() const noexcept { return b_; }
  const Int& t() const noexcept { return t_; }
  const Int& c() const noexcept { return c_; }
  const Int& t_star_mod_b() const noexcept { return t_star_mod_b_; }
  const Int& t_star_mod_a() const noexcept { return t_star_mod_a_; }

 private:
  Eq22Instance() = default;

  Int a_, b_, t_, c_, t_star_mod_b_, t_star_mod_a_;
};

enum class Corollary2Branch { kPlusMinusOne, kPlusA, kMinusA };

std::string_view branch_label(Corollary2Branch branch);

struct Corollary2Evaluation {
  Corollary2Branch branch;
  Evaluation eval;
};

enum class ClassicalFact { kInverse, kNegation, kVanish, kOneFormula };

std::string_view fact_label(ClassicalFact kind);

// S(a,b) + S(b,a) = (a^2 + b^2 + 1)/(ab) - 3 for coprime naturals.
Evaluation reciprocity_check(const Int& a, const Int& b);
// S(2a*, b) + S(2b*, a) = (a^2 + b^2 + 4)/(2ab) - 3 for coprime odd naturals.
Evaluation du_zhang_check(const Int& a, const Int& b);
// S(ta*, b) + S(tb*, a) = (a^2 + b^2 + t^2)/(tab) - 3 + S(ab, t).
Evaluation theorem1_check(const Theorem1Instance& inst);
// Closed forms for b == +-1 or b == +-a (mod t). The +-1 class is tried
// first. Throws kNoBranchApplies otherwise.
Corollary2Evaluation corollary2_check(const Theorem1Instance& inst);
// S(a,b) = S(c,d) + eps S(r, |q|) + (b^2 + d^2 + q^2)/(bdq) - 3 eps.
Evaluation three_term_check(const ThreeTermWitness& w);
// S(a,c) = (b^2 - 1)a/(tb) - S(ab, t) + S(a t*, b), with t t* == 1 (mod b).
Evaluation girstmair_th4_check(const Eq22Instance& inst);
// kOneFormula ignores a. Throws kPreconditionViolated.
Evaluation classical_fact_check(ClassicalFact kind, const Int& a, const Int& b);

// LHS - RHS of the checks above; each is 0/1 whenever the identity holds.
Rat reciprocity_residual(const Int& a, const Int& b);
Rat du_zhang_residual(const Int& a, const Int& b);
Rat theorem1_residual(const Theorem1Instance& inst);
Corollary2Branch corollary2_branch(const Theorem1Instance& inst);
std::pair<Corollary2Branch, Rat> corollary2_residual(const Theorem1Instance& inst);
Rat three_term_residual(const ThreeTermWitness& w);
Rat girstmair_th4_residual(const Eq22Instance& inst);
Rat classical_fact_residual(ClassicalFact kind, const Int& a, const Int& b);

}  // namespace dedekind
