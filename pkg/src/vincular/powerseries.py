"""Truncated power series over exact rationals.

A :class:`Series` stores coefficients 0..order of a formal power series in
one variable.  The order is a reliability bound: coefficients past it are
unknown, not zero.  Addition, subtraction and multiplication therefore
insist on equal orders (truncate explicitly to align operands), and
division shrinks the order by the valuation of the divisor, since dividing
by a series that starts at x^w costs w coefficients of certainty.

Coefficients are gmpy2 rationals when gmpy2 is available (roughly an order
of magnitude faster) and fractions.Fraction otherwise; both expose
numerator/denominator and compare equal to ints, so callers never notice.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence

try:
    from gmpy2 import mpq as Q
except ImportError:  # pragma: no cover
    from fractions import Fraction as Q

Scalar = object  # int or Q; isinstance(x, Series) is the real dispatch test


def as_int(value) -> int:
    """The exact integer a rational equals, or ValueError."""
    if value.denominator != 1:
        raise ValueError(f"not an integer: {value}")
    return int(value.numerator)


class Series:
    """Immutable truncated power series with exact coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable) -> None:
        self.coeffs: tuple = tuple(Q(c) for c in coeffs)
        if not self.coeffs:
            raise ValueError("a series needs at least the x^0 coefficient")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def zero(cls, order: int) -> "Series":
        return cls([0] * (order + 1))

    @classmethod
    def one(cls, order: int) -> "Series":
        return cls([1] + [0] * order)

    @classmethod
    def x(cls, order: int) -> "Series":
        return cls.monomial(1, order)

    @classmethod
    def monomial(cls, exp: int, order: int, coeff=1) -> "Series":
        if not 0 <= exp <= order:
            raise ValueError(f"exponent {exp} outside order {order}")
        c = [0] * (order + 1)
        c[exp] = coeff
        return cls(c)

    @classmethod
    def from_poly(cls, poly: Sequence, order: int) -> "Series":
        """Polynomial coefficients, zero-padded or truncated to the order."""
        c = list(poly[: order + 1])
        c += [0] * (order + 1 - len(c))
        return cls(c)

    def __getitem__(self, n: int):
        if not 0 <= n <= self.order:
            raise IndexError(f"coefficient {n} beyond order {self.order}")
        return self.coeffs[n]

    def val(self) -> int | None:
        """Valuation: index of the first nonzero coefficient, None if zero."""
        for idx, c in enumerate(self.coeffs):
            if c:
                return idx
        return None

    def is_zero(self) -> bool:
        return self.val() is None

    def truncate(self, order: int) -> "Series":
        if order > self.order:
            raise ValueError(
                f"cannot extend order {self.order} to {order}: "
                "the extra coefficients are unknown"
            )
        return Series(self.coeffs[: order + 1])

    def shifted(self, k: int) -> "Series":
        """Multiply by x^k exactly; the known order grows by k."""
        if k < 0:
            raise ValueError("shift must be nonnegative")
        return Series((0,) * k + self.coeffs)

    def _check_aligned(self, other: "Series", op: str) -> None:
        if self.order != other.order:
            raise ValueError(
                f"{op} needs equal orders, got {self.order} and {other.order}"
            )

    def __add__(self, other) -> "Series":
        if isinstance(other, Series):
            self._check_aligned(other, "+")
            return Series(a + b for a, b in zip(self.coeffs, other.coeffs))
        return Series((self.coeffs[0] + other,) + self.coeffs[1:])

    __radd__ = __add__

    def __neg__(self) -> "Series":
        return Series(-c for c in self.coeffs)

    def __sub__(self, other) -> "Series":
        return self + (-other if isinstance(other, Series) else -Q(other))

    def __rsub__(self, other) -> "Series":
        return -self + other

    def __mul__(self, other) -> "Series":
        if not isinstance(other, Series):
            return Series(c * other for c in self.coeffs)
        self._check_aligned(other, "*")
        n = self.order
        out = [Q(0)] * (n + 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j in range(n + 1 - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] += a * b
        return Series(out)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Series":
        if not isinstance(other, Series):
            return Series(c / Q(other) for c in self.coeffs)
        w = other.val()
        if w is None:
            raise ZeroDivisionError("division by the zero series")
        result_order = min(self.order, other.order) - w
        if result_order < 0:
            raise ValueError("divisor valuation exceeds known order")
        v = self.val()
        if v is None:
            return Series.zero(result_order)
        if v < w:
            raise ValueError(
                f"quotient is not a power series: valuations {v} < {w}"
            )
        f = self.coeffs[w:]
        g = other.coeffs[w:]
        inv_g0 = 1 / g[0]
        q = [Q(0)] * (result_order + 1)
        for n in range(result_order + 1):
            acc = f[n]
            for k in range(n):
                if q[k] and g[n - k]:
                    acc -= q[k] * g[n - k]
            q[n] = acc * inv_g0
        return Series(q)

    def __rtruediv__(self, other) -> "Series":
        return Series.from_poly([other], self.order) / self

    def __pow__(self, k: int) -> "Series":
        if k < 0:
            raise ValueError("negative powers: divide explicitly")
        out = Series.one(self.order)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, Series) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        head = ", ".join(str(c) for c in self.coeffs[:8])
        tail = ", ..." if self.order >= 8 else ""
        return f"Series([{head}{tail}], order={self.order})"


def expand_rational(num: Sequence, den: Sequence, order: int) -> Series:
    """Expansion of num(x)/den(x) to the given order, exactly.

    Both arguments are polynomial coefficient sequences (index = exponent).
    The denominator may vanish at 0 as long as the numerator vanishes at
    least as fast; headroom for the cancellation is added internally.

    >>> expand_rational([1], [1, -1], 5).coeffs == (1, 1, 1, 1, 1, 1)
    True
    >>> expand_rational([0, 0, 3], [0, 1, -2], 3).coeffs == (0, 3, 6, 12)
    True
    """
    w = next((i for i, c in enumerate(den) if c), None)
    if w is None:
        raise ZeroDivisionError("denominator polynomial is zero")
    f = Series.from_poly(num, order + w)
    g = Series.from_poly(den, order + w)
    return f / g
