import json
import math
from fractions import Fraction

import pytest

import dedekind


def brute_S(a, b):
    def saw(n, d):
        return Fraction(0) if n % d == 0 else Fraction(n % d, d) - Fraction(1, 2)

    return 12 * sum(saw(k, b) * saw(a * k, b) for k in range(1, b + 1))


def test_sums_match_definition():
    for b in range(1, 30):
        for a in range(-b, b):
            if math.gcd(a, b) == 1:
                assert dedekind.normalized_sum(a, b) == brute_S(a, b)
                assert dedekind.dedekind_sum(a, b, naive=True) == brute_S(a, b) / 12


def test_examples():
    assert dedekind.normalized_sum(2, 3) == Fraction(-2, 3)
    assert dedekind.normalized_sum(1, 5) == Fraction(12, 5)
    assert dedekind.sawtooth(-1, 4) == Fraction(1, 4)
    assert dedekind.egcd(3, 5) == (1, 2, -1)
    assert dedekind.mod_inverse(2, 7) == 4


def test_big_integers_cross_the_boundary():
    b = 2**255 + 297
    a = 2**200 + 1
    if math.gcd(a, b) == 1:
        s = dedekind.normalized_sum(a, b)
        assert dedekind.normalized_sum(-a, b) == -s
        assert (s * b).denominator == 1


def test_residuals_are_zero():
    assert dedekind.reciprocity_residual(34, 55) == 0
    assert dedekind.du_zhang_residual(5, 7) == 0
    assert dedekind.theorem1_residual(5, 2, 3) == 0
    assert dedekind.corollary2_residual(5, 2, 7) == ("B_PLUS_A", 0)
    assert dedekind.three_term_residual(1, 3, 1, 2) == 0
    assert dedekind.three_term_residual(1, 3, 1, 2, j=1, k=1) == 0
    assert dedekind.girstmair_th4_residual(3, 2, 5) == 0
    assert dedekind.classical_fact_residual("vanish", 2, 5) == 0


def test_errors():
    with pytest.raises(dedekind.DedekindError):
        dedekind.normalized_sum(2, 4)
    with pytest.raises(ValueError, match="InvalidInstance"):
        dedekind.theorem1_residual(4, 2, 3)
    with pytest.raises(dedekind.DedekindError, match="NoBranchApplies"):
        dedekind.corollary2_residual(65, 8, 3)


def test_admissible():
    assert [t for t in range(1, 31) if dedekind.is_admissible(t)] == [1, 2, 5, 10, 13, 17, 25, 26, 29]
    assert dedekind.sqrt_minus_one(25) == [7, 18]
    w = dedekind.admissible_witness(26)
    assert w["m"] == 13 and w["doubled"] and w["roots"] == [5, 21]
    assert dedekind.admissible_witness(4) is None
    assert dedekind.factorize(65) == [(5, 1), (13, 1)]
    assert (5, 2, 3) in dedekind.theorem1_instances(5, 5)


def test_scan():
    ok, n, table = dedekind.scan("theorem1", t_max=5, b_max=20)
    assert ok and n > 0
    assert table.splitlines()[0] == "identity,t,a,b,lhs_num,lhs_den,rhs_num,rhs_den,residual_zero"
    ok, n2, js = dedekind.scan("theorem1", t_max=5, b_max=20, format="json", jobs=3)
    rows = json.loads(js)
    assert ok and n2 == n == len(rows)
    assert all(r["residual_zero"] for r in rows)
