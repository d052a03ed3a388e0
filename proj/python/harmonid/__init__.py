"""Exact verification of harmonic-number summation identities.

Rational arguments and results are ``fractions.Fraction``; integers and
strings of the form ``"p/q"`` are accepted as input.
"""

from fractions import Fraction

from . import _core
from ._core import ArithmeticError, ModeError, PoleError, SamplingError, UsageError, gamma

__all__ = [
    "ArithmeticError",
    "ModeError",
    "PoleError",
    "SamplingError",
    "UsageError",
    "bench",
    "binomial",
    "catalog",
    "evaluate",
    "gamma",
    "harmonic",
    "pfq_exact",
    "pfq_exact_incremental",
    "pfq_float",
    "pochhammer",
    "reversal_symmetry_check",
    "verify",
]


def _enc(value):
    f = Fraction(value)
    return f"{f.numerator}/{f.denominator}"


def _dec(text):
    return Fraction(text)


def pochhammer(x, n):
    return _dec(_core.pochhammer(_enc(x), n))


def binomial(z, t):
    return _dec(_core.binomial(_enc(z), t))


def harmonic(n, ell=1, x=0):
    return _dec(_core.harmonic(n, ell, _enc(x)))


def pfq_exact(numerator, denominator, z=1):
    return _dec(_core.pfq_exact([_enc(a) for a in numerator], [_enc(b) for b in denominator], _enc(z)))


def pfq_exact_incremental(numerator, denominator, z=1):
    return _dec(_core.pfq_exact_incremental([_enc(a) for a in numerator], [_enc(b) for b in denominator], _enc(z)))


def pfq_float(numerator, denominator, z=1.0, tol=1e-14, max_terms=500000):
    """Returns (value, converged, terms)."""
    return _core.pfq_float([float(a) for a in numerator], [float(b) for b in denominator], float(z), tol, max_terms)


def reversal_symmetry_check(n, x, y):
    return _core.reversal_symmetry_check(n, _enc(x), _enc(y))


def catalog():
    return _core.catalog()


def evaluate(identity_id, **params):
    """Both sides of one identity at a point: Fractions in exact mode, floats otherwise."""
    lhs, rhs = _core.evaluate(identity_id, {k: _enc(v) for k, v in params.items()})
    if isinstance(lhs, str):
        return _dec(lhs), _dec(rhs)
    return lhs, rhs


def verify(ids=(), **config):
    return _core.verify(list(ids), **config)


def bench(grid=(10, 50, 100, 200)):
    return _core.bench(list(grid))
