#include <gtest/gtest.h>

#include <random>

#include "dedekind/identities.hpp"
#include "oracle.hpp"

using namespace dedekind;

namespace {

Rat q(long n, long d) { return rat_normalize(n, d); }

Rat oracle_S(long a, long b) {
  const mpq_class v = oracle::S(a, b);
  return rat_normalize(v.get_num(), v.get_den());
}

template <typename F>
ErrorCode error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kInvalidArgument;
}

}  // namespace

TEST(Reciprocity, Examples) {
  EXPECT_EQ(reciprocity_residual(1, 2), Rat());
  const auto e = reciprocity_check(2, 3);
  EXPECT_EQ(e.lhs, oracle_S(2, 3) + oracle_S(3, 2));
  EXPECT_EQ(e.lhs, q(-2, 3));
  EXPECT_EQ(e.rhs, q(-2, 3));
  EXPECT_EQ(reciprocity_residual(34, 55), Rat());
  EXPECT_EQ(error_of([] { reciprocity_residual(4, 6); }), ErrorCode::kNotCoprime);
}

TEST(DuZhang, Examples) {
  EXPECT_EQ(du_zhang_residual(1, 1), Rat());
  const auto e = du_zhang_check(3, 5);
  EXPECT_EQ(oracle_S(4, 5), q(-12, 5));
  EXPECT_EQ(oracle_S(4, 3), q(2, 3));
  EXPECT_EQ(e.lhs, oracle_S(4, 5) + oracle_S(4, 3));
  EXPECT_EQ(e.rhs, q(38, 30) - Rat(3));
  EXPECT_EQ(du_zhang_residual(5, 7), Rat());
  EXPECT_EQ(error_of([] { du_zhang_residual(2, 3); }), ErrorCode::kNotOdd);
  EXPECT_EQ(error_of([] { du_zhang_residual(3, 9); }), ErrorCode::kNotCoprime);
}

TEST(Theorem1Instance, Validation) {
  const auto inst = Theorem1Instance::make(5, 2, 3);
  EXPECT_EQ(inst.a_star(), 2);
  EXPECT_EQ(inst.b_star(), 1);
  auto detail_of = [](long t, long a, long b) {
    try {
      Theorem1Instance::make(t, a, b);
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kInvalidInstance);
      return e.detail();
    }
    return std::string("ok");
  };
  EXPECT_EQ(detail_of(4, 2, 3), "a^2 + 1 not divisible by t");
  EXPECT_EQ(detail_of(5, 2, 4), "gcd(a, b) != 1");
  EXPECT_EQ(detail_of(5, 2, 5), "gcd(b, t) != 1");
  EXPECT_EQ(detail_of(0, 2, 3), "t must be >= 1");
  EXPECT_EQ(detail_of(1, 1, 1), "ok");
}

TEST(Theorem1, Examples) {
  EXPECT_EQ(theorem1_residual(Theorem1Instance::make(1, 2, 3)), Rat());
  const auto e = theorem1_check(Theorem1Instance::make(5, 2, 3));
  EXPECT_EQ(e.lhs, oracle_S(1, 3) + oracle_S(1, 2));
  EXPECT_EQ(e.lhs, q(2, 3));
  EXPECT_EQ(e.rhs, q(38, 30) - Rat(3) + oracle_S(1, 5));
  EXPECT_EQ(theorem1_residual(Theorem1Instance::make(13, 5, 2)), Rat());
  EXPECT_EQ(theorem1_residual(Theorem1Instance::make(2, 1, 1)), Rat());
}

TEST(Theorem1, ReducesToClassicalLawsForSmallT) {
  for (long a = 1; a <= 40; ++a) {
    for (long b = 1; b <= 40; ++b) {
      if (std::gcd(a, b) != 1) continue;
      EXPECT_EQ(theorem1_residual(Theorem1Instance::make(1, a, b)), reciprocity_residual(a, b));
      const auto t1 = theorem1_check(Theorem1Instance::make(1, a, b));
      EXPECT_EQ(t1.rhs, reciprocity_check(a, b).rhs);
      if (a % 2 == 1 && b % 2 == 1) {
        const auto t2 = theorem1_check(Theorem1Instance::make(2, a, b));
        const auto dz = du_zhang_check(a, b);
        EXPECT_EQ(t2.lhs, dz.lhs);
        EXPECT_EQ(t2.rhs, dz.rhs);
      }
    }
  }
}

TEST(Corollary2, Examples) {
  auto [branch, residual] = corollary2_residual(Theorem1Instance::make(5, 2, 11));
  EXPECT_EQ(branch, Corollary2Branch::kPlusMinusOne);
  EXPECT_EQ(residual, Rat());
  EXPECT_EQ(oracle_S(8, 11), q(-18, 11));

  const auto plus = corollary2_check(Theorem1Instance::make(5, 2, 7));
  EXPECT_EQ(plus.branch, Corollary2Branch::kPlusA);
  EXPECT_EQ(plus.eval.lhs, oracle_S(6, 7) + oracle_S(5, 2));
  EXPECT_EQ(plus.eval.lhs, q(-30, 7));
  EXPECT_EQ(plus.eval.rhs, q(78, 70) - Rat(5) - q(2, 5));

  const auto minus = corollary2_check(Theorem1Instance::make(5, 2, 3));
  EXPECT_EQ(minus.branch, Corollary2Branch::kMinusA);
  EXPECT_EQ(minus.eval.rhs, q(38, 30) + Rat(5) + q(2, 5) - Rat(6));
  EXPECT_EQ(minus.eval.rhs, q(2, 3));
  EXPECT_TRUE(minus.eval.holds());

  // t = 65, a = 8: b = 3 is none of +-1, +-8 mod 65.
  EXPECT_EQ(error_of([] { corollary2_check(Theorem1Instance::make(65, 8, 3)); }),
            ErrorCode::kNoBranchApplies);
  EXPECT_EQ(branch_label(Corollary2Branch::kPlusA), "B_PLUS_A");
}

TEST(Corollary2, PlusMinusOneWinsWhenClassesCoincide) {
  EXPECT_EQ(corollary2_branch(Theorem1Instance::make(1, 3, 4)), Corollary2Branch::kPlusMinusOne);
  EXPECT_EQ(corollary2_branch(Theorem1Instance::make(2, 1, 5)), Corollary2Branch::kPlusMinusOne);
}

TEST(Corollary2, AgreesWithTheorem1) {
  for (long t : {5L, 10L, 13L, 17L, 25L, 26L}) {
    for (long a = 1; a < t; ++a) {
      if ((a * a + 1) % t != 0) continue;
      for (long b = 1; b <= 80; ++b) {
        if (std::gcd(a, b) != 1 || std::gcd(b, t) != 1) continue;
        const auto inst = Theorem1Instance::make(t, a, b);
        const auto t1 = theorem1_check(inst);
        try {
          const auto c2 = corollary2_check(inst);
          EXPECT_EQ(c2.eval.lhs, t1.lhs);
          EXPECT_EQ(c2.eval.rhs, t1.rhs) << t << " " << a << " " << b;
        } catch (const Error& e) {
          EXPECT_EQ(e.code(), ErrorCode::kNoBranchApplies);
        }
      }
    }
  }
}

TEST(ThreeTerm, Examples) {
  auto w = ThreeTermWitness::make(1, 2, 1, 3);
  EXPECT_EQ(w.q(), 1);
  EXPECT_EQ(w.eps(), 1);
  EXPECT_EQ(-w.c() * w.j() + w.d() * w.k(), 1);
  EXPECT_EQ(mod_floor(w.r(), Int(1)), 0);
  EXPECT_EQ(three_term_residual(w), Rat());
  EXPECT_EQ(three_term_residual(ThreeTermWitness::make(1, 2, 1, 3, 2, 1)), Rat());

  w = ThreeTermWitness::make(1, 3, 1, 2, 1, 1);
  EXPECT_EQ(w.q(), -1);
  EXPECT_EQ(w.eps(), -1);
  EXPECT_EQ(w.r(), -2);
  const auto e = three_term_check(w);
  EXPECT_EQ(e.lhs, q(2, 3));
  EXPECT_EQ(e.rhs, Rat() - q(14, 6) + Rat(3));

  w = ThreeTermWitness::make(2, 3, 1, 2);
  EXPECT_EQ(w.q(), 1);
  EXPECT_EQ(three_term_check(w).lhs, q(-2, 3));
  EXPECT_EQ(three_term_residual(w), Rat());
}

TEST(ThreeTerm, Errors) {
  EXPECT_EQ(error_of([] { ThreeTermWitness::make(1, 2, 1, 2); }), ErrorCode::kEqualFractions);
  EXPECT_EQ(error_of([] { ThreeTermWitness::make(2, 4, 1, 3); }), ErrorCode::kNotCoprime);
  EXPECT_EQ(error_of([] { ThreeTermWitness::make(1, 0, 1, 3); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(error_of([] { ThreeTermWitness::make(1, 2, 1, 3, 1, 1); }),
            ErrorCode::kInvalidInstance);
}

TEST(ThreeTerm, RandomAgainstOracleAndBezoutShift) {
  std::mt19937_64 rng(33);
  std::uniform_int_distribution<long> dens(1, 60), shift(-5, 5);
  int positive = 0, negative = 0;
  for (int i = 0; i < 400; ++i) {
    const long b = dens(rng), d = dens(rng);
    long a = std::uniform_int_distribution<long>(-2 * b, 2 * b)(rng);
    long c = std::uniform_int_distribution<long>(-2 * d, 2 * d)(rng);
    if (std::gcd(a, b) != 1 || std::gcd(c, d) != 1 || a * d == b * c) continue;
    const auto w = ThreeTermWitness::make(a, b, c, d);
    (w.eps() > 0 ? positive : negative)++;
    const auto e = three_term_check(w);
    EXPECT_EQ(e.lhs, oracle_S(a, b));
    EXPECT_TRUE(e.holds()) << a << "/" << b << " " << c << "/" << d;
    const long n = shift(rng);
    const auto shifted =
        ThreeTermWitness::make(a, b, c, d, Int(w.j() + n * d), Int(w.k() + n * c));
    EXPECT_EQ(shifted.r(), w.r() + n * w.q());
    EXPECT_EQ(three_term_check(shifted).rhs, e.rhs);
  }
  EXPECT_GT(positive, 0);
  EXPECT_GT(negative, 0);
}

TEST(Eq22, Examples) {
  auto inst = Eq22Instance::make(2, 3, 5);
  EXPECT_EQ(inst.c(), 3);
  EXPECT_EQ(inst.t_star_mod_b(), 2);
  EXPECT_EQ(inst.t_star_mod_a(), 1);
  auto e = girstmair_th4_check(inst);
  EXPECT_EQ(e.lhs, q(-2, 3));
  EXPECT_EQ(e.rhs, q(16, 15) - q(36, 15) + q(10, 15));

  inst = Eq22Instance::make(1, 3, 2);
  EXPECT_EQ(inst.c(), 3);
  e = girstmair_th4_check(inst);
  EXPECT_EQ(e.lhs, q(2, 3));
  EXPECT_EQ(e.rhs, q(4, 3) - q(2, 3));

  inst = Eq22Instance::make(3, 2, 5);
  EXPECT_EQ(inst.c(), 4);
  e = girstmair_th4_check(inst);
  EXPECT_EQ(e.lhs, oracle_S(3, 4));
  EXPECT_EQ(e.rhs, q(9, 10) - q(12, 5));
  EXPECT_EQ(girstmair_th4_residual(inst), Rat());

  // c = 1 when a = b = 1, t = 2.
  EXPECT_EQ(girstmair_th4_residual(Eq22Instance::make(1, 1, 2)), Rat());
  EXPECT_EQ(error_of([] { Eq22Instance::make(2, 3, 4); }), ErrorCode::kInvalidInstance);
}

TEST(Eq22, InversesRelateCModA) {
  // c == b t* (mod a) with t t* == 1 (mod a).
  for (long t : {1L, 2L, 5L, 10L, 13L}) {
    for (long a = 1; a <= 60; ++a) {
      if ((a * a + 1) % t != 0) continue;
      for (long b = 1; b <= 30; ++b) {
        if (std::gcd(a, b) != 1 || std::gcd(b, t) != 1) continue;
        const auto inst = Eq22Instance::make(a, b, t);
        EXPECT_EQ(mod_floor(inst.c(), Int(a)), mod_floor(Int(b * inst.t_star_mod_a()), Int(a)));
      }
    }
  }
}

TEST(ClassicalFacts, Examples) {
  EXPECT_EQ(classical_fact_residual(ClassicalFact::kInverse, 3, 7), Rat());
  EXPECT_EQ(classical_fact_check(ClassicalFact::kInverse, 3, 7).lhs, oracle_S(5, 7));
  EXPECT_EQ(classical_fact_residual(ClassicalFact::kVanish, 2, 5), Rat());
  const auto one = classical_fact_check(ClassicalFact::kOneFormula, 1, 5);
  EXPECT_EQ(one.lhs, oracle_S(1, 5));
  EXPECT_EQ(one.rhs, q(12, 5));
  EXPECT_EQ(classical_fact_residual(ClassicalFact::kNegation, -4, 9), Rat());

  EXPECT_EQ(error_of([] { classical_fact_check(ClassicalFact::kVanish, 2, 7); }),
            ErrorCode::kPreconditionViolated);
  EXPECT_EQ(error_of([] { classical_fact_check(ClassicalFact::kInverse, 2, 4); }),
            ErrorCode::kPreconditionViolated);
  EXPECT_EQ(error_of([] { classical_fact_check(ClassicalFact::kOneFormula, 0, 0); }),
            ErrorCode::kPreconditionViolated);
}
