#include "dedekind/identities.hpp"

#include <utility>

namespace dedekind {

namespace {

// S(x, m) with x reduced into [0, m) first.
Rat S(const Int& x, const Int& m) { return normalized_sum(mod_floor(x, m), m); }

Rat frac(const Int& num, const Int& den) { return Rat::normalize(num, den); }

void require_natural(const Int& v, const char* name) {
  if (v < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string(name) + " must be a natural number, got " + v.get_str());
  }
}

void require_coprime(const Int& x, const Int& y, const char* what) {
  if (gcd(x, y) != 1) throw Error(ErrorCode::kNotCoprime, std::string(what) + " != 1");
}

bool divides(const Int& d, const Int& n) { return mod_floor(n, d) == 0; }

}  // namespace

Theorem1Instance Theorem1Instance::make(Int t, Int a, Int b) {
  auto invalid = [](const std::string& why) { return Error(ErrorCode::kInvalidInstance, why); };
  if (t < 1) throw invalid("t must be >= 1");
  if (a < 1) throw invalid("a must be >= 1");
  if (b < 1) throw invalid("b must be >= 1");
  if (gcd(a, b) != 1) throw invalid("gcd(a, b) != 1");
  if (gcd(b, t) != 1) throw invalid("gcd(b, t) != 1");
  if (!divides(t, Int(a * a + 1))) throw invalid("a^2 + 1 not divisible by t");
  Theorem1Instance inst;
  inst.a_star_ = mod_inverse(a, b);
  inst.b_star_ = mod_inverse(b, a);
  inst.t_ = std::move(t);
  inst.a_ = std::move(a);
  inst.b_ = std::move(b);
  return inst;
}

ThreeTermWitness ThreeTermWitness::make(Int a, Int b, Int c, Int d) {
  require_natural(b, "b");
  require_natural(d, "d");
  // u(-c) + v d == gcd(c, d); only meaningful once coprimality is checked.
  const EgcdResult e = egcd(Int(-c), d);
  return make(std::move(a), std::move(b), std::move(c), std::move(d), e.u, e.v);
}

ThreeTermWitness ThreeTermWitness::make(Int a, Int b, Int c, Int d, Int j, Int k) {
  require_natural(b, "b");
  require_natural(d, "d");
  require_coprime(a, b, "gcd(a, b)");
  require_coprime(c, d, "gcd(c, d)");
  ThreeTermWitness w;
  w.q_ = a * d - b * c;
  if (w.q_ == 0) throw Error(ErrorCode::kEqualFractions, "a/b == c/d");
  if (-c * j + d * k != 1) throw Error(ErrorCode::kInvalidInstance, "-c*j + d*k != 1");
  w.eps_ = w.q_ > 0 ? 1 : -1;
  w.r_ = a * j - b * k;
  // (r, q) = (a, -b) * [[j, d], [k, c]] with a unimodular matrix.
  if (gcd(w.r_, w.q_) != 1) throw Error(ErrorCode::kInvalidInstance, "gcd(r, q) != 1");
  w.a_ = std::move(a);
  w.b_ = std::move(b);
  w.c_ = std::move(c);
  w.d_ = std::move(d);
  w.j_ = std::move(j);
  w.k_ = std::move(k);
  return w;
}

Eq22Instance Eq22Instance::make(Int a, Int b, Int t) {
  auto invalid = [](const std::string& why) { return Error(ErrorCode::kInvalidInstance, why); };
  if (a < 1) throw invalid("a must be >= 1");
  if (b < 1) throw invalid("b must be >= 1");
  if (t < 1) throw invalid("t must be >= 1");
  if (gcd(a, b) != 1) throw invalid("gcd(a, b) != 1");
  if (gcd(b, t) != 1) throw invalid("gcd(b, t) != 1");
  const Int a2p1 = a * a + 1;
  if (!divides(t, a2p1)) throw invalid("a^2 + 1 not divisible by t");
  Eq22Instance inst;
  inst.c_ = b * a2p1 / t;
  if (gcd(a, inst.c_) != 1) throw invalid("gcd(a, c) != 1");
  inst.t_star_mod_b_ = mod_inverse(t, b);
  inst.t_star_mod_a_ = mod_inverse(t, a);
  inst.a_ = std::move(a);
  inst.b_ = std::move(b);
  inst.t_ = std::move(t);
  return inst;
}

std::string_view branch_label(Corollary2Branch branch) {
  switch (branch) {
    case Corollary2Branch::kPlusMinusOne: return "B_PM1";
    case Corollary2Branch::kPlusA: return "B_PLUS_A";
    case Corollary2Branch::kMinusA: return "B_MINUS_A";
  }
  return "?";
}

std::string_view fact_label(ClassicalFact kind) {
  switch (kind) {
    case ClassicalFact::kInverse: return "INVERSE";
    case ClassicalFact::kNegation: return "NEGATION";
    case ClassicalFact::kVanish: return "VANISH";
    case ClassicalFact::kOneFormula: return "ONE_FORMULA";
  }
  return "?";
}

Evaluation reciprocity_check(const Int& a, const Int& b) {
  require_natural(a, "a");
  require_natural(b, "b");
  require_coprime(a, b, "gcd(a, b)");
  return {S(a, b) + S(b, a), frac(a * a + b * b + 1, a * b) - Rat(3)};
}

Evaluation du_zhang_check(const Int& a, const Int& b) {
  require_natural(a, "a");
  require_natural(b, "b");
  if (mpz_even_p(a.get_mpz_t()) || mpz_even_p(b.get_mpz_t())) {
    throw Error(ErrorCode::kNotOdd, "a and b must both be odd");
  }
  require_coprime(a, b, "gcd(a, b)");
  const Int a_star = mod_inverse(a, b);
  const Int b_star = mod_inverse(b, a);
  return {S(Int(2 * a_star), b) + S(Int(2 * b_star), a),
          frac(a * a + b * b + 4, 2 * a * b) - Rat(3)};
}

namespace {

Rat theorem1_lhs(const Theorem1Instance& inst) {
  return S(Int(inst.t() * inst.a_star()), inst.b()) + S(Int(inst.t() * inst.b_star()), inst.a());
}

Rat theorem1_base(const Theorem1Instance& inst) {
  const Int& t = inst.t();
  const Int& a = inst.a();
  const Int& b = inst.b();
  return frac(a * a + b * b + t * t, t * a * b);
}

}  // namespace

Evaluation theorem1_check(const Theorem1Instance& inst) {
  return {theorem1_lhs(inst),
          theorem1_base(inst) - Rat(3) + S(Int(inst.a() * inst.b()), inst.t())};
}

Corollary2Branch corollary2_branch(const Theorem1Instance& inst) {
  const Int& t = inst.t();
  const Int& a = inst.a();
  const Int& b = inst.b();
  if (divides(t, Int(b - 1)) || divides(t, Int(b + 1))) return Corollary2Branch::kPlusMinusOne;
  if (divides(t, Int(b - a))) return Corollary2Branch::kPlusA;
  if (divides(t, Int(b + a))) return Corollary2Branch::kMinusA;
  throw Error(ErrorCode::kNoBranchApplies,
              "b = " + b.get_str() + " is not congruent to +-1 or +-a mod " + t.get_str());
}

Corollary2Evaluation corollary2_check(const Theorem1Instance& inst) {
  const Corollary2Branch branch = corollary2_branch(inst);
  const Rat t(inst.t());
  const Rat two_over_t = Rat(2) / t;
  Rat rhs = theorem1_base(inst);
  switch (branch) {
    case Corollary2Branch::kPlusMinusOne: rhs -= Rat(3); break;
    case Corollary2Branch::kPlusA: rhs -= t + two_over_t; break;
    case Corollary2Branch::kMinusA: rhs += t + two_over_t - Rat(6); break;
  }
  return {branch, {theorem1_lhs(inst), std::move(rhs)}};
}

Evaluation three_term_check(const ThreeTermWitness& w) {
  const Int abs_q = abs(w.q());
  const Rat eps(static_cast<long>(w.eps()));
  Rat rhs = S(w.c(), w.d()) + eps * S(w.r(), abs_q) +
            frac(w.b() * w.b() + w.d() * w.d() + w.q() * w.q(), w.b() * w.d() * w.q()) -
            Rat(3) * eps;
  return {S(w.a(), w.b()), std::move(rhs)};
}

Evaluation girstmair_th4_check(const Eq22Instance& inst) {
  const Int& a = inst.a();
  const Int& b = inst.b();
  const Int& t = inst.t();
  Rat rhs = frac((b * b - 1) * a, t * b) - S(Int(a * b), t) + S(Int(a * inst.t_star_mod_b()), b);
  return {S(a, inst.c()), std::move(rhs)};
}

Evaluation classical_fact_check(ClassicalFact kind, const Int& a, const Int& b) {
  auto violated = [kind](const std::string& why) {
    return Error(ErrorCode::kPreconditionViolated, std::string(fact_label(kind)) + ": " + why);
  };
  if (b < 1) throw violated("b must be >= 1");
  if (kind == ClassicalFact::kOneFormula) {
    const Rat t(b);
    return {S(Int(1), b), t + Rat(2) / t - Rat(3)};
  }
  if (gcd(a, b) != 1) throw violated("gcd(a, b) != 1");
  switch (kind) {
    case ClassicalFact::kInverse:
      return {S(mod_inverse(a, b), b), S(a, b)};
    case ClassicalFact::kNegation:
      return {S(Int(-a), b), -S(a, b)};
    case ClassicalFact::kVanish:
      if (!divides(b, Int(a * a + 1))) throw violated("a^2 + 1 not divisible by b");
      return {S(a, b), Rat()};
    case ClassicalFact::kOneFormula:
      break;
  }
  throw violated("unknown fact");
}

Rat reciprocity_residual(const Int& a, const Int& b) { return reciprocity_check(a, b).residual(); }
Rat du_zhang_residual(const Int& a, const Int& b) { return du_zhang_check(a, b).residual(); }
Rat theorem1_residual(const Theorem1Instance& inst) { return theorem1_check(inst).residual(); }

std::pair<Corollary2Branch, Rat> corollary2_residual(const Theorem1Instance& inst) {
  const Corollary2Evaluation e = corollary2_check(inst);
  return {e.branch, e.eval.residual()};
}

Rat three_term_residual(const ThreeTermWitness& w) { return three_term_check(w).residual(); }
Rat girstmair_th4_residual(const Eq22Instance& inst) { return girstmair_th4_check(inst).residual(); }

Rat classical_fact_residual(ClassicalFact kind, const Int& a, const Int& b) {
  return classical_fact_check(kind, a, b).residual();
}

}  // namespace dedekind
