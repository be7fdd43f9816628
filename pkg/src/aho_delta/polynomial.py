"""Dense univariate polynomials with real coefficients.

Coefficients are stored lowest power first, ``coeffs[p]`` multiplying
``x**p``.  Degrees in this package stay below ~40, so a dense array is the
natural representation.
"""

from __future__ import annotations

import numpy as np


class Polynomial:
    """Immutable dense polynomial ``sum_p coeffs[p] * x**p``."""

    __slots__ = ("_c",)

    def __init__(self, coeffs):
        c = np.array(coeffs, dtype=float).reshape(-1)
        if c.size == 0:
            c = np.zeros(1)
        if not np.all(np.isfinite(c)):
            raise ValueError("polynomial coefficients must be finite")
        nz = np.flatnonzero(c)
        c = c[: nz[-1] + 1] if nz.size else np.zeros(1)
        c.setflags(write=False)
        self._c = c

    @classmethod
    def zero(cls) -> Polynomial:
        return cls([0.0])

    @classmethod
    def monomial(cls, power: int, coeff: float = 1.0) -> Polynomial:
        c = np.zeros(power + 1)
        c[power] = coeff
        return cls(c)

    @property
    def coeffs(self) -> np.ndarray:
        return self._c

    @property
    def degree(self) -> int:
        # the zero polynomial is reported as degree 0
        return self._c.size - 1

    def is_zero(self) -> bool:
        return self._c.size == 1 and self._c[0] == 0.0

    def coeff(self, p: int) -> float:
        return float(self._c[p]) if 0 <= p < self._c.size else 0.0

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial([other])
        n = max(self._c.size, other._c.size)
        out = np.zeros(n)
        out[: self._c.size] += self._c
        out[: other._c.size] += other._c
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(-self._c)

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial([other])
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, a: float) -> Polynomial:
        return Polynomial(a * self._c)

    def shift(self, j: int) -> Polynomial:
        """Product with the monomial ``x**j``."""
        if j < 0:
            raise ValueError("monomial power must be >= 0")
        if self.is_zero():
            return self
        return Polynomial(np.concatenate([np.zeros(j), self._c]))

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            return Polynomial(np.convolve(self._c, other._c))
        return self.scale(other)

    __rmul__ = __mul__

    def derivative(self) -> Polynomial:
        if self._c.size == 1:
            return Polynomial.zero()
        return Polynomial(self._c[1:] * np.arange(1, self._c.size))

    def __call__(self, x):
        """Horner evaluation; ``x`` may be a scalar or an array."""
        x = np.asarray(x, dtype=float)
        acc = np.full(x.shape, self._c[-1])
        for c in self._c[-2::-1]:
            acc = acc * x + c
        return acc if acc.ndim else float(acc)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return np.array_equal(self._c, other._c)

    def __hash__(self):
        return hash(self._c.tobytes())

    def __repr__(self):
        return f"Polynomial({self._c.tolist()!r})"
