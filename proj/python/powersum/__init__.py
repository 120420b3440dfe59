"""Exact power-sum polynomials p_d(n) = 0^d + 1^d + ... + n^d.

Thin wrappers over the C++ core. Coefficients come back as
``fractions.Fraction`` in ascending order (index i multiplies n**i).
"""

from fractions import Fraction
import json

from . import _core

__all__ = [
    "METHODS",
    "power_sum",
    "brute_force_power_sum",
    "falling_power_sum",
    "recover_p2_via_plain_derivative",
    "lhopital_trace",
    "stirling_row",
    "bernoulli",
    "vandermonde",
    "determinant",
    "cramer_solve",
    "gauss_solve",
    "geometric_sum",
    "fib",
    "fib_square_sum",
    "format_polynomial",
    "evaluate",
    "verify",
    "run_cli",
]

METHODS = tuple(_core.methods())


def _frac(s):
    return Fraction(s)


def _fracs(values):
    return [Fraction(v) for v in values]


def _strs(values):
    return [f"{Fraction(v).numerator}/{Fraction(v).denominator}" for v in values]


def power_sum(d, method="lhopital"):
    return _fracs(_core.power_sum(d, method))


def brute_force_power_sum(d, n):
    return int(_core.brute_force_power_sum(d, n))


def falling_power_sum(k):
    return _fracs(_core.falling_power_sum(k))


def recover_p2_via_plain_derivative():
    return _fracs(_core.recover_p2_via_plain_derivative())


def lhopital_trace(d):
    """(limit coefficients, differentiation steps, numerator at x=1 per step)."""
    limit, steps, at_one = _core.lhopital_trace(d)
    return _fracs(limit), steps, [_fracs(p) for p in at_one]


def stirling_row(k):
    return [int(v) for v in _core.stirling_row(k)]


def bernoulli(max_j):
    return _fracs(_core.bernoulli(max_j))


def vandermonde(d):
    return [_fracs(row) for row in _core.vandermonde(d)]


def determinant(matrix):
    return _frac(_core.determinant([_strs(row) for row in matrix]))


def cramer_solve(matrix, b):
    return _fracs(_core.cramer_solve([_strs(row) for row in matrix], _strs(b)))


def gauss_solve(matrix, b):
    return _fracs(_core.gauss_solve([_strs(row) for row in matrix], _strs(b)))


def geometric_sum(a0, r, n):
    return _frac(_core.geometric_sum(*_strs([a0, r]), n))


def fib(n, method="doubling"):
    if method == "doubling":
        return int(_core.fib_doubling(n))
    if method == "binet":
        return int(_core.fib_binet(n))
    raise ValueError(f"unknown method {method!r}")


def fib_square_sum(n):
    total, product = _core.fib_square_sum(n)
    return int(total), int(product)


def format_polynomial(coefficients, fmt="plain"):
    return _core.format_polynomial(_strs(coefficients), fmt)


def evaluate(coefficients, x):
    acc = Fraction(0)
    for c in reversed(coefficients):
        acc = acc * x + c
    return acc


def verify(dmax=20, nmax=50):
    return json.loads(_core.verify_json(dmax, nmax))


def run_cli(args):
    """Runs the command-line grammar in-process: (exit_code, stdout, stderr)."""
    return _core.run_cli(list(args))
