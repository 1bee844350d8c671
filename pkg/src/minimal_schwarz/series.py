"""Truncated complex power series with exact coefficient arithmetic.

Coefficients are stored as pairs of :class:`fractions.Fraction` so that
derivatives, antiderivatives and Cauchy products never round. Floating
point only enters at evaluation time.
"""
from __future__ import annotations

import math
import numbers
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "PowerSeries",
    "evaluate",
    "derivative",
    "antiderivative",
    "multiply",
    "add",
    "scale",
]

ExactComplex = tuple[Fraction, Fraction]


def _exact(value) -> ExactComplex:
    if isinstance(value, tuple) and len(value) == 2:
        re, im = value
        return _exact_real(re), _exact_real(im)
    if isinstance(value, (Fraction, numbers.Rational)):
        return Fraction(value), Fraction(0)
    if isinstance(value, numbers.Complex):
        c = complex(value)
        return _exact_real(c.real), _exact_real(c.imag)
    raise TypeError(f"cannot interpret {value!r} as a complex coefficient")


def _exact_real(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, numbers.Rational):
        return Fraction(x)
    x = float(x)
    if not math.isfinite(x):
        raise ValueError(f"non-finite coefficient {x!r}")
    return Fraction(x)


def _mul(a: ExactComplex, b: ExactComplex) -> ExactComplex:
    return a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0]


_ZERO: ExactComplex = (Fraction(0), Fraction(0))


class PowerSeries:
    """Polynomial ``sum_k c_k z**k`` with exact Gaussian-rational coefficients.

    Accepts ints, floats, complex numbers, Fractions or ``(re, im)`` pairs.
    Instances are immutable and hashable; equality ignores trailing zeros.
    """

    __slots__ = ("_exact", "_array")

    def __init__(self, coeffs: Iterable = (0,)):
        exact = tuple(_exact(c) for c in coeffs)
        if not exact:
            exact = (_ZERO,)
        object.__setattr__(self, "_exact", exact)
        arr = np.array([complex(float(re), float(im)) for re, im in exact])
        arr.setflags(write=False)
        object.__setattr__(self, "_array", arr)

    def __setattr__(self, name, value):
        raise AttributeError("PowerSeries is immutable")

    @classmethod
    def _from_exact(cls, exact: Sequence[ExactComplex]) -> "PowerSeries":
        return cls(exact)

    @property
    def exact(self) -> tuple[ExactComplex, ...]:
        return self._exact

    @property
    def coeffs(self) -> np.ndarray:
        """Read-only ``complex128`` view of the coefficients."""
        return self._array

    @property
    def degree(self) -> int:
        return len(self._exact) - 1

    def trimmed(self) -> tuple[ExactComplex, ...]:
        exact = list(self._exact)
        while len(exact) > 1 and exact[-1] == _ZERO:
            exact.pop()
        return tuple(exact)

    def is_zero(self) -> bool:
        return all(c == _ZERO for c in self._exact)

    def __call__(self, z):
        return evaluate(self, z)

    def __eq__(self, other):
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return self.trimmed() == other.trimmed()

    def __hash__(self):
        return hash(self.trimmed())

    def __add__(self, other):
        return add(self, _coerce(other))

    __radd__ = __add__

    def __sub__(self, other):
        return add(self, scale(_coerce(other), -1))

    def __rsub__(self, other):
        return add(_coerce(other), scale(self, -1))

    def __neg__(self):
        return scale(self, -1)

    def __mul__(self, other):
        if isinstance(other, PowerSeries):
            return multiply(self, other)
        return scale(self, other)

    __rmul__ = __mul__

    def __repr__(self):
        terms = ", ".join(repr(complex(c)) for c in self._array)
        return f"PowerSeries([{terms}])"

    def to_json(self) -> list[list[float]]:
        return [[float(c.real), float(c.imag)] for c in self._array]

    @classmethod
    def from_json(cls, data) -> "PowerSeries":
        pairs = []
        for item in data:
            if isinstance(item, (list, tuple)) and len(item) == 2:
                pairs.append(complex(float(item[0]), float(item[1])))
            elif isinstance(item, (int, float)) and not isinstance(item, bool):
                pairs.append(complex(item))
            else:
                raise ValueError(f"malformed coefficient {item!r}; expected [re, im]")
        return cls(pairs)


def _coerce(value) -> PowerSeries:
    return value if isinstance(value, PowerSeries) else PowerSeries([value])


def evaluate(s: PowerSeries, z):
    """Horner evaluation; ``z`` may be a scalar or an array of complex points."""
    coeffs = s.coeffs
    z = np.asarray(z, dtype=complex)
    out = np.full(z.shape, coeffs[-1], dtype=complex)
    for c in coeffs[-2::-1]:
        out = out * z + c
    if out.ndim == 0:
        return complex(out)
    return out


def derivative(s: PowerSeries) -> PowerSeries:
    exact = s.exact
    if len(exact) == 1:
        return PowerSeries([0])
    return PowerSeries._from_exact([(k * re, k * im) for k, (re, im) in enumerate(exact)][1:])


def antiderivative(s: PowerSeries) -> PowerSeries:
    """Termwise primitive vanishing at the origin."""
    if s.is_zero():
        return PowerSeries([0])
    out = [_ZERO]
    out.extend((re / (k + 1), im / (k + 1)) for k, (re, im) in enumerate(s.exact))
    return PowerSeries._from_exact(out)


def multiply(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    """Full Cauchy product, no truncation."""
    x, y = a.exact, b.exact
    out = [[Fraction(0), Fraction(0)] for _ in range(len(x) + len(y) - 1)]
    for i, ci in enumerate(x):
        if ci == _ZERO:
            continue
        for j, cj in enumerate(y):
            re, im = _mul(ci, cj)
            out[i + j][0] += re
            out[i + j][1] += im
    return PowerSeries._from_exact([tuple(c) for c in out])


def add(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    x, y = a.exact, b.exact
    n = max(len(x), len(y))
    x = x + (_ZERO,) * (n - len(x))
    y = y + (_ZERO,) * (n - len(y))
    return PowerSeries._from_exact([(p[0] + q[0], p[1] + q[1]) for p, q in zip(x, y)])


def scale(s: PowerSeries, factor) -> PowerSeries:
    f = _exact(factor)
    return PowerSeries._from_exact([_mul(f, c) for c in s.exact])
