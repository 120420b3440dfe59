from fractions import Fraction

import pytest

import powersum


P2 = [Fraction(0), Fraction(1, 6), Fraction(1, 2), Fraction(1, 3)]


def brute(d, n):
    return sum(m**d for m in range(n + 1))


@pytest.mark.parametrize("method", powersum.METHODS)
def test_p2_every_method(method):
    assert powersum.power_sum(2, method) == P2


@pytest.mark.parametrize("d", [0, 1, 5, 12])
def test_methods_agree_and_match_brute_force(d):
    polys = [powersum.power_sum(d, m) for m in powersum.METHODS]
    assert all(p == polys[0] for p in polys)
    for n in range(0, 30):
        assert powersum.evaluate(polys[0], n) == brute(d, n)
        assert powersum.brute_force_power_sum(d, n) == brute(d, n)


def test_unknown_method_raises():
    with pytest.raises(ValueError):
        powersum.power_sum(2, "cramer")


def test_lhopital_trace():
    limit, steps, at_one = powersum.lhopital_trace(4)
    assert steps == 5
    assert all(p == [] for p in at_one[:-1])
    assert limit == powersum.power_sum(4, "stirling")


def test_recovery_and_falling_sums():
    assert powersum.recover_p2_via_plain_derivative() == P2
    q2 = powersum.falling_power_sum(2)
    assert powersum.evaluate(q2, 2) == 20


def test_tables():
    assert powersum.stirling_row(4) == [0, 1, 7, 6, 1]
    b = powersum.bernoulli(6)
    assert b[:3] == [1, Fraction(1, 2), Fraction(1, 6)]
    assert b[4] == Fraction(-1, 30)


def test_linear_algebra():
    v = powersum.vandermonde(1)
    assert v == [[1, 1], [2, 4]]
    assert powersum.determinant(v) == 2
    assert powersum.cramer_solve(v, [1, 3]) == [Fraction(1, 2), Fraction(1, 2)]
    assert powersum.gauss_solve(v, [1, 3]) == [Fraction(1, 2), Fraction(1, 2)]
    with pytest.raises(ValueError, match="singular"):
        powersum.cramer_solve([[1, 1], [1, 1]], [1, 2])


def test_sequences():
    assert powersum.fib(12) == 144
    assert powersum.fib(300, "binet") == powersum.fib(300)
    assert powersum.fib_square_sum(11) == (12816, 12816)
    assert powersum.geometric_sum(1, Fraction(1, 2), 2) == Fraction(7, 4)
    assert powersum.geometric_sum(3, 1, 4) == 15


def test_formatting_and_cli():
    assert powersum.format_polynomial(P2) == "1/3*n^3 + 1/2*n^2 + 1/6*n"
    assert powersum.format_polynomial(P2, "latex").startswith(r"\frac{1}{3}n^{3}")
    code, out, _ = powersum.run_cli(["powersum", "1", "--eval", "100"])
    assert code == 0 and "5050" in out
    code, _, err = powersum.run_cli(["powersum", "-1"])
    assert code == 1 and "-1" in err


def test_verify_report():
    report = powersum.verify(6, 20)
    assert report["passed"] is True
    assert len(report["degrees"]) == 7
