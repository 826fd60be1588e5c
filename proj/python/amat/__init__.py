"""Exact number field arithmetic through arithmetic matrices.

Integers come back as ``int`` and rationals as ``fractions.Fraction``.
"""

from fractions import Fraction

from . import _core
from ._core import Error

__all__ = [
    "Error",
    "Field",
    "cubic_syzygy",
    "error_code",
    "form_discriminant",
    "is_irreducible",
    "matmul_count",
    "quartic_invariants",
    "quartic_syzygy",
    "search",
    "verify_tables",
]


def _s(values):
    return [str(Fraction(v)) for v in values]


def _q(text):
    value = Fraction(text)
    return value.numerator if value.denominator == 1 else value


def _qs(texts):
    return [_q(t) for t in texts]


def error_code(exc):
    """Stable error name, e.g. 'zero-element', of an amat.Error."""
    return str(exc).split(":", 1)[0]


def form_discriminant(coeffs):
    return int(_core.form_discriminant(_s(coeffs)))


def is_irreducible(coeffs):
    return _core.is_irreducible(_s(coeffs))


def quartic_invariants(coeffs):
    i, j = _core.quartic_invariants(_s(coeffs))
    return int(i), int(j)


def quartic_syzygy(coeffs):
    return _core.quartic_syzygy(_s(coeffs))


def cubic_syzygy(coeffs):
    return _core.cubic_syzygy(_s(coeffs))


def search(disc, degree, height, max_a0=1, threads=0):
    """Essential pairs as 'a0:a1,...' strings, sorted."""
    return _core.search(str(disc), degree, height, max_a0, threads)


def verify_tables(paths):
    """Returns (rows checked, [(line, reason), ...])."""
    return _core.verify_tables([str(p) for p in paths])


def matmul_count(size, strategy="ww", seed=1):
    """(scalar multiplications, scalar additions) of one random product."""
    return _core.matmul_count(size, strategy, seed)


class Field:
    """Field given by an essential pair [a0, B]; elements are coordinate lists."""

    def __init__(self, a0, coeffs):
        self._f = _core.NumberField(str(a0), _s(coeffs))

    @classmethod
    def parse(cls, pair):
        a0, coeffs = pair.split(":")
        return cls(int(a0), [int(c) for c in coeffs.split(",")])

    def __repr__(self):
        return f"Field({self._f.pair()!r})"

    @property
    def degree(self):
        return self._f.degree

    @property
    def a0(self):
        return int(self._f.a0)

    @property
    def coeffs(self):
        return [int(c) for c in self._f.coeffs]

    @property
    def discriminant(self):
        return int(self._f.discriminant)

    def matrix(self, alpha):
        return [_qs(row) for row in self._f.matrix(_s(alpha))]

    def symbolic_matrix(self):
        return self._f.symbolic_matrix()

    def basis_change(self):
        return [_qs(row) for row in self._f.basis_change()]

    def add(self, alpha, beta):
        return _qs(self._f.add(_s(alpha), _s(beta)))

    def sub(self, alpha, beta):
        return _qs(self._f.sub(_s(alpha), _s(beta)))

    def mul(self, alpha, beta, via="matrix"):
        if via == "fft":
            return _qs(self._f.mul_fft(_s(alpha), _s(beta)))
        if via != "matrix":
            raise ValueError(f"unknown multiplication method {via!r}")
        return _qs(self._f.mul(_s(alpha), _s(beta)))

    def inverse(self, alpha):
        return _qs(self._f.inverse(_s(alpha)))

    def norm(self, alpha):
        return _q(self._f.norm(_s(alpha)))

    def norm_oracle(self, alpha):
        return _q(self._f.norm_oracle(_s(alpha)))

    def trace(self, alpha):
        return _q(self._f.trace(_s(alpha)))

    def char_poly(self, alpha):
        """Coefficients from the constant term up; monic."""
        return _qs(self._f.char_poly(_s(alpha)))

    def diagonalization_residual(self, alpha):
        return self._f.diagonalization_residual(_s(alpha))
