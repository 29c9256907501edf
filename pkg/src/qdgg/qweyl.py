"""Symbolic side of the relation DU = qUD + r.

Words in the letters U and D are rewritten to normal form (all U's before
all D's) by replacing the leftmost DU with qUD + r until none remains;
the rewriting is confluent, so the strategy only fixes determinism.  The
results can be cross-evaluated against any built graph pair, where U acts
through gamma and D through gamma_prime.
"""

from __future__ import annotations

from .graded_graph import LinearCombination, QDGGPair
from .qpoly import ONE, Q, QPoly, QSeries, ZERO, q_integer, q_power


class NormalForm:
    """Finite sum of terms c_ij(q) U^i D^j with nonzero coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms=()):
        items = terms.items() if isinstance(terms, dict) else terms
        acc: dict[tuple[int, int], QPoly] = {}
        for (i, j), c in items:
            if i < 0 or j < 0:
                raise ValueError("operator exponents must be nonnegative")
            if not isinstance(c, QPoly):
                c = QPoly((c,))
            if c.is_zero:
                continue
            prev = acc.get((i, j))
            c = c if prev is None else prev + c
            if c.is_zero:
                acc.pop((i, j), None)
            else:
                acc[(i, j)] = c
        self._terms = acc

    def items(self) -> list[tuple[tuple[int, int], QPoly]]:
        return sorted(self._terms.items())

    def coefficient(self, i: int, j: int) -> QPoly:
        return self._terms.get((i, j), ZERO)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __add__(self, other: "NormalForm") -> "NormalForm":
        if not isinstance(other, NormalForm):
            return NotImplemented
        merged = dict(self._terms)
        for key, c in other._terms.items():
            merged[key] = merged.get(key, ZERO) + c
        return NormalForm(merged)

    def scale(self, c) -> "NormalForm":
        return NormalForm(((key, v * c) for key, v in self._terms.items()))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NormalForm):
            return NotImplemented
        return self._terms == other._terms

    def __repr__(self) -> str:
        return f"NormalForm({self.items()!r})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for (i, j), c in self.items():
            ops = " ".join(
                piece
                for piece in (
                    "" if i == 0 else ("U" if i == 1 else f"U^{i}"),
                    "" if j == 0 else ("D" if j == 1 else f"D^{j}"),
                )
                if piece
            )
            coeff = str(c) if len([x for x in c.coeffs if x]) == 1 and not ops else f"({c})"
            if not ops:
                parts.append(coeff)
            elif c == ONE:
                parts.append(ops)
            else:
                parts.append(f"{coeff} {ops}")
        return " + ".join(parts)


def _check_word(word: str) -> None:
    if set(word) - {"U", "D"}:
        raise ValueError(f"operator words may contain only U and D, got {word!r}")


def normal_order(word: str, r: int) -> NormalForm:
    """Rewrite a word with DU -> qUD + r (leftmost first) to normal form."""
    _check_word(word)
    if r < 1:
        raise ValueError("r must be a positive integer")
    pending: list[tuple[QPoly, str]] = [(ONE, word)]
    acc: dict[tuple[int, int], QPoly] = {}
    while pending:
        c, w = pending.pop()
        k = w.find("DU")
        if k < 0:
            i = w.count("U")
            j = len(w) - i
            acc[(i, j)] = acc.get((i, j), ZERO) + c
        else:
            pending.append((c * Q, w[:k] + "UD" + w[k + 2 :]))
            pending.append((c * r, w[:k] + w[k + 2 :]))
    return NormalForm(acc)


def d_power_rule(n: int, r: int) -> NormalForm:
    """Closed normal form of D U^n: r [n]_q U^(n-1) + q^n U^n D."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return NormalForm({(0, 1): ONE})
    return NormalForm({(n - 1, 0): q_integer(n) * r, (n, 1): q_power(n)})


def d_series_rule(f: QSeries, r: int) -> NormalForm:
    """Normal form of D f(U) via the derivative rule r f^q(U) + f(qU) D."""
    terms: dict[tuple[int, int], QPoly] = {}
    deriv = f.q_derivative()
    for n, a in enumerate(deriv.coeffs):
        terms[(n, 0)] = terms.get((n, 0), ZERO) + a * r
    for n, a in enumerate(f.coeffs):
        terms[(n, 1)] = terms.get((n, 1), ZERO) + a * q_power(n)
    return NormalForm(terms)


def evaluate_on_graph(word: str, pair: QDGGPair, x: LinearCombination) -> LinearCombination:
    """Apply a word right-to-left: U through gamma, D through gamma_prime.

    Every intermediate level must exist in the built pair; in particular a
    D step at level 0 is out of range.
    """
    _check_word(word)
    for letter in reversed(word):
        if letter == "U":
            x = pair.gamma.apply_up(x)
        else:
            x = pair.gamma_prime.apply_down(x)
    return x


def evaluate_normal_form(nf: NormalForm, pair: QDGGPair, x: LinearCombination) -> LinearCombination:
    """Apply sum c_ij U^i D^j to a combination.

    Terms with j larger than the level of x contribute nothing: they would
    push past the minimum, which the down operator annihilates.  All terms
    must shift the level by the same amount i - j (true of every normal
    form of a word), so the result is a single-level combination.
    """
    offsets = {i - j for (i, j), _ in nf.items()}
    if len(offsets) > 1:
        raise ValueError("normal form mixes level shifts; result would not be homogeneous")
    target = x.level + (offsets.pop() if offsets else 0)
    out = LinearCombination(max(target, 0))
    for (i, j), c in nf.items():
        if j > x.level:
            continue
        y = x
        for _ in range(j):
            y = pair.gamma_prime.apply_down(y)
        for _ in range(i):
            y = pair.gamma.apply_up(y)
        out = out + y.scale(c)
    return out
