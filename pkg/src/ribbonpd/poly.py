"""Dense exact-integer polynomials in one variable ``z``.

Coefficient sums of the enumeration polynomials reach ``2**(3n)`` for the
larger graph families, so all arithmetic stays in arbitrary-precision
integers.  Rational values (evaluations, means, division checks) use
:class:`fractions.Fraction`, which is kept reduced automatically.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union

Scalar = Union[int, Fraction]


class IntPolynomial:
    """Immutable dense polynomial over the integers, lowest degree first.

    The coefficient tuple carries no trailing zeros; the zero polynomial is
    the empty tuple.  Instances hash and compare by value and are safe to
    share between threads.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[int, ...] = tuple(cs)

    @classmethod
    def monomial(cls, coeff: int, power: int) -> "IntPolynomial":
        if power < 0:
            raise ValueError("power must be nonnegative")
        return cls([0] * power + [coeff])

    # -- basic queries ----------------------------------------------------

    def degree(self) -> int:
        """Degree, with the convention that the zero polynomial has -1."""
        return len(self.coeffs) - 1

    def coefficient(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def coefficient_sum(self) -> int:
        return sum(self.coeffs)

    def exponents(self) -> tuple[int, ...]:
        return tuple(i for i, c in enumerate(self.coeffs) if c)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    # -- ring operations --------------------------------------------------

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(out)

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial([-c for c in self.coeffs])

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other) -> "IntPolynomial":
        if isinstance(other, int):
            return IntPolynomial([c * other for c in self.coeffs])
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "IntPolynomial":
        if n < 0:
            raise ValueError("negative power")
        result = IntPolynomial([1])
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shifted(self, k: int) -> "IntPolynomial":
        """Multiply by ``z**k``."""
        if not self.coeffs:
            return self
        return IntPolynomial([0] * k + list(self.coeffs))

    def substituted_power(self, k: int) -> "IntPolynomial":
        """Substitute ``z -> z**k``."""
        if k < 1:
            raise ValueError("k must be >= 1")
        out = [0] * (k * len(self.coeffs))
        for i, c in enumerate(self.coeffs):
            out[i * k] = c
        return IntPolynomial(out)

    # -- evaluation -------------------------------------------------------

    def evaluate(self, x: Scalar) -> Scalar:
        """Exact Horner evaluation; the result type follows ``x``."""
        acc: Scalar = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial([i * c for i, c in enumerate(self.coeffs)][1:])

    def eval_derivatives(self, x: Scalar, order: int) -> tuple[Scalar, ...]:
        """Exact ``(p(x), p'(x), ..., p^(order)(x))`` for ``order <= 2``."""
        if not 0 <= order <= 2:
            raise ValueError("order must be 0, 1 or 2")
        out = [self.evaluate(x)]
        p = self
        for _ in range(order):
            p = p.derivative()
            out.append(p.evaluate(x))
        return tuple(out)

    # -- comparisons / presentation ----------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)!r})"

    def to_text(self) -> str:
        """Canonical text form, e.g. ``2 + 30*z + 4*z^2`` (zero terms omitted)."""
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                term = str(mag)
            elif i == 1:
                term = f"{mag}*z"
            else:
                term = f"{mag}*z^{i}"
            if not parts:
                parts.append(term if c > 0 else "-" + term)
            else:
                parts.append(("+ " if c > 0 else "- ") + term)
        return " ".join(parts)

    def to_csv_row(self) -> str:
        """CSV row ``degree,c0,c1,...`` (the zero polynomial is ``0,0``)."""
        deg = max(self.degree(), 0)
        cs = [self.coefficient(i) for i in range(deg + 1)]
        return ",".join([str(deg)] + [str(c) for c in cs])


ZERO = IntPolynomial()
ONE = IntPolynomial([1])
Z = IntPolynomial([0, 1])


def divexact(p: IntPolynomial, d: IntPolynomial) -> IntPolynomial:
    """Exact polynomial division ``p / d``.

    Long division is carried out over the rationals; a nonzero remainder or a
    non-integer quotient raises ``ValueError`` (callers use this as a runtime
    check that a divisibility hypothesis actually held).
    """
    if not d:
        raise ZeroDivisionError("polynomial division by zero")
    if not p:
        return IntPolynomial()
    rem = [Fraction(c) for c in p.coeffs]
    dc = [Fraction(c) for c in d.coeffs]
    dd = len(dc) - 1
    if len(rem) - 1 < dd:
        raise ValueError("nonzero remainder in exact polynomial division")
    q = [Fraction(0)] * (len(rem) - dd)
    for i in range(len(rem) - 1 - dd, -1, -1):
        f = rem[i + dd] / dc[dd]
        q[i] = f
        if f:
            for j, c in enumerate(dc):
                rem[i + j] -= f * c
    if any(rem):
        raise ValueError("nonzero remainder in exact polynomial division")
    if any(c.denominator != 1 for c in q):
        raise ValueError("quotient is not an integer polynomial")
    return IntPolynomial([int(c) for c in q])


def spectrum(p: IntPolynomial) -> tuple[tuple[int, ...], bool]:
    """Exponents with nonzero coefficient, and whether they form an interval."""
    exps = p.exponents()
    if len(exps) <= 1:
        return exps, True
    interpolating = exps[-1] - exps[0] + 1 == len(exps)
    return exps, interpolating
