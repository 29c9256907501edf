"""Exact arithmetic for integer-coefficient polynomials in the variable q.

QPoly is the universal scalar of this package: edge weights, path
generating functions and operator coefficients are all values of it, and
every comparison anywhere in the library is exact.
"""

from __future__ import annotations

import re
from typing import Iterable, Union

IntLike = Union[int, "QPoly"]


class QPoly:
    """Dense polynomial in q over the integers, kept in canonical form.

    Coefficients are stored ascending by degree with trailing zeros
    trimmed, so two values are equal iff their coefficient tuples are.
    Instances are immutable; all operations return new values.  Python
    integers are arbitrary precision, so coefficient arithmetic cannot
    overflow or wrap.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        for c in cs:
            if not isinstance(c, int) or isinstance(c, bool):
                raise TypeError(f"QPoly coefficients must be int, got {type(c).__name__}")
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs = tuple(cs)

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self._coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    def coefficient(self, k: int) -> int:
        if 0 <= k < len(self._coeffs):
            return self._coeffs[k]
        return 0

    def evaluate(self, c: int) -> int:
        """Substitute the integer c for q."""
        acc = 0
        for a in reversed(self._coeffs):
            acc = acc * c + a
        return acc

    @staticmethod
    def _coerce(x: IntLike) -> "QPoly":
        if isinstance(x, QPoly):
            return x
        if isinstance(x, int) and not isinstance(x, bool):
            return QPoly((x,))
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other: IntLike) -> "QPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return QPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "QPoly":
        return QPoly(tuple(-c for c in self._coeffs))

    def __sub__(self, other: IntLike) -> "QPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: IntLike) -> "QPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other: IntLike) -> "QPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero or other.is_zero:
            return ZERO
        a, b = self._coeffs, other._coeffs
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return QPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "QPoly":
        if not isinstance(n, int) or n < 0:
            raise ValueError("QPoly powers must be nonnegative integers")
        acc = ONE
        for _ in range(n):
            acc = acc * self
        return acc

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int) and not isinstance(other, bool):
            other = QPoly((other,))
        if not isinstance(other, QPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero

    def __repr__(self) -> str:
        return f"QPoly({list(self._coeffs)!r})"

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts: list[str] = []
        for k, c in enumerate(self._coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                head = "q" if k == 1 else f"q^{k}"
                body = head if mag == 1 else f"{mag}*{head}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)


ZERO = QPoly()
ONE = QPoly((1,))
Q = QPoly((0, 1))


def q_power(k: int, coeff: int = 1) -> QPoly:
    """The monomial coeff * q^k."""
    if k < 0:
        raise ValueError("q_power needs a nonnegative exponent")
    return QPoly((0,) * k + (coeff,))


def q_integer(n: int) -> QPoly:
    """1 + q + ... + q^(n-1); the zero polynomial for n = 0."""
    if n < 0:
        raise ValueError("q_integer needs a nonnegative argument")
    return QPoly((1,) * n)


def q_factorial(n: int) -> QPoly:
    """Product of q_integer(k) for k = 1..n; 1 for n = 0."""
    if n < 0:
        raise ValueError("q_factorial needs a nonnegative argument")
    acc = ONE
    for k in range(1, n + 1):
        acc = acc * q_integer(k)
    return acc


# One signed term of the textual grammar: "c", "c*q", "c*q^k", "q", "q^k".
_TERM_RE = re.compile(r"^([+-]?)(?:(\d+)(?:\*(?:q(?:\^(\d+))?))?|(q)(?:\^(\d+))?)$")


def parse_qpoly(text: str) -> QPoly:
    """Parse the rendering produced by str(QPoly), e.g. "1 + 2*q + q^3"."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty polynomial text")
    chunks = re.findall(r"[+-]?[^+-]+", s)
    if "".join(chunks) != s:
        raise ValueError(f"cannot parse polynomial {text!r}")
    coeffs: dict[int, int] = {}
    for chunk in chunks:
        m = _TERM_RE.match(chunk)
        if not m:
            raise ValueError(f"bad polynomial term {chunk!r} in {text!r}")
        sign = -1 if m.group(1) == "-" else 1
        if m.group(2) is not None:
            coeff = int(m.group(2))
            if "*q" in chunk:
                deg = int(m.group(3)) if m.group(3) else 1
            else:
                deg = 0
        else:
            coeff = 1
            deg = int(m.group(5)) if m.group(5) else 1
        coeffs[deg] = coeffs.get(deg, 0) + sign * coeff
    top = max(coeffs)
    return QPoly([coeffs.get(i, 0) for i in range(top + 1)])


class QSeries:
    """Truncated series in an outer variable t with QPoly coefficients.

    Only finitely many coefficients are represented; index n holds the
    coefficient of t^n.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[IntLike] = ()):
        cs = [c if isinstance(c, QPoly) else QPoly((c,)) for c in coeffs]
        while cs and cs[-1].is_zero:
            cs.pop()
        self._coeffs = tuple(cs)

    @classmethod
    def t_power(cls, n: int, coeff: IntLike = 1) -> "QSeries":
        return cls((ZERO,) * n + (coeff if isinstance(coeff, QPoly) else QPoly((coeff,)),))

    @property
    def coeffs(self) -> tuple[QPoly, ...]:
        return self._coeffs

    def coefficient(self, n: int) -> QPoly:
        if 0 <= n < len(self._coeffs):
            return self._coeffs[n]
        return ZERO

    @property
    def degree(self) -> int:
        return len(self._coeffs) - 1

    def q_derivative(self) -> "QSeries":
        """Send sum(a_n t^n) to sum([n]_q a_n t^(n-1)); constants map to 0."""
        return QSeries(tuple(q_integer(n) * a for n, a in enumerate(self._coeffs))[1:])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QSeries):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"QSeries({[list(c.coeffs) for c in self._coeffs]!r})"


def q_derivative(f: QSeries) -> QSeries:
    return f.q_derivative()
