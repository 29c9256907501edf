"""Words over the letters 1_1..1_r and 2, graded by the sum of letter values.

The up edges come in two forms: insert/remove the first 1-letter, or
toggle a 2 inside the leading run of 2s into a 1.  Weights are powers of
q counted from the affected position; the two graphs of the pair differ
only by one extra factor of q on the toggle edges.  Snakeshape tableaux
give a closed description of path weights, checked exactly here.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .graded_graph import QDGGPair, path_gf, path_gf_table
from .qpoly import ONE, QPoly, ZERO, q_power
from .report import CheckReport
from .reflection import build_by_reflection

TWO = "2"

Word = tuple[str, ...]


def one_letter(i: int) -> str:
    return f"1_{i}"


def letter_value(letter: str) -> int:
    return 2 if letter == TWO else 1


def word_height(w: Word) -> int:
    return sum(letter_value(l) for l in w)


def word_key(w: Word, r: int) -> str:
    """Compact key: "21121" style for r = 1, dotted letters for r >= 2."""
    if r == 1:
        return "".join("2" if l == TWO else "1" for l in w)
    return ".".join(w)


def parse_word(key: str, r: int) -> Word:
    if not key:
        return ()
    if r == 1:
        if set(key) - {"1", "2"}:
            raise ValueError(f"bad word key {key!r}")
        return tuple(TWO if ch == "2" else one_letter(1) for ch in key)
    letters = tuple(key.split("."))
    for l in letters:
        if l != TWO and not (l.startswith("1_") and l[2:].isdigit() and 1 <= int(l[2:]) <= r):
            raise ValueError(f"bad letter {l!r} in word key {key!r}")
    return letters


@lru_cache(maxsize=None)
def fib_words(r: int, height: int) -> tuple[Word, ...]:
    """All words of the given height: 1-first words, then 2-first words."""
    if height < 0:
        raise ValueError("height must be nonnegative")
    if height == 0:
        return ((),)
    out = [
        (one_letter(i),) + tail for i in range(1, r + 1) for tail in fib_words(r, height - 1)
    ]
    if height >= 2:
        out += [(TWO,) + tail for tail in fib_words(r, height - 2)]
    return tuple(out)


def _down_steps(w: Word, r: int):
    """Down neighbors of w: (word below, preceding-letter count, form).

    Form 1 removes the first 1-letter; form 2 turns a 2 from the leading
    run of 2s into one of the 1-letters.
    """
    for j, letter in enumerate(w):
        if letter != TWO:
            yield w[:j] + w[j + 1 :], j, 1
            break
    for j, letter in enumerate(w):
        if letter != TWO:
            break
        for i in range(1, r + 1):
            yield w[:j] + (one_letter(i),) + w[j + 1 :], j, 2


def fib_graphs(r: int, height: int) -> QDGGPair:
    """Build the word pair to the given height.

    Form-1 edges weigh q^s in both graphs; form-2 edges weigh q^(s+1) in
    gamma and q^s in gamma_prime, where s counts the letters before the
    affected one.
    """
    if r < 1:
        raise ValueError("r must be a positive integer")
    if height < 0:
        raise ValueError("height must be nonnegative")
    levels = [fib_words(r, n) for n in range(height + 1)]
    index = [{w: i for i, w in enumerate(level)} for level in levels]
    gamma_edges = []
    gamma_prime_edges = []
    for n in range(1, height + 1):
        g = []
        gp = []
        below = index[n - 1]
        for dst, w in enumerate(levels[n]):
            for v, s, form in _down_steps(w, r):
                src = below[v]
                if form == 1:
                    g.append((src, dst, q_power(s)))
                    gp.append((src, dst, q_power(s)))
                else:
                    g.append((src, dst, q_power(s + 1)))
                    gp.append((src, dst, q_power(s)))
        gamma_edges.append(g)
        gamma_prime_edges.append(gp)
    keys = [[word_key(w, r) for w in level] for level in levels]
    return QDGGPair.build(keys, gamma_edges, gamma_prime_edges, r)


def snakeshape(w: Word) -> tuple[int, ...]:
    """Column heights read off the letters, leftmost letter first."""
    return tuple(letter_value(l) for l in w)


@dataclass(frozen=True)
class YFTableau:
    """Bijective filling of a snakeshape.

    `lower` holds one entry per column; `upper` holds the second entry of
    each height-2 column and None elsewhere.  Valid fillings satisfy:
    lower < upper within a column; no entry right of a height-2 column
    (a, b) lies in [a, b]; no entry right of a height-1 column exceeds it.

    An entry records when its cell appeared along the matching path: the
    lower entry is the step that created the column as a 1, the upper
    entry the step that turned it into a 2.
    """

    shape: tuple[int, ...]
    lower: tuple[int, ...]
    upper: tuple[int | None, ...]

    def _position_when_placed(self, entry: int, col: int) -> int:
        # Columns to the left that already existed when `entry` was placed,
        # i.e. whose creating (lower) entry is smaller.
        return sum(1 for c in range(col) if self.lower[c] < entry)

    def wt(self) -> QPoly:
        """Product of q^position per entry, upper entries shifted by one.

        Positions count the columns already present to the left at the
        moment the entry is placed; this matches the edge weights along
        the corresponding path in gamma exactly.
        """
        total = 0
        for col, a in enumerate(self.lower):
            total += self._position_when_placed(a, col)
        for col, b in enumerate(self.upper):
            if b is not None:
                total += self._position_when_placed(b, col) + 1
        return q_power(total)

    def wt_prime(self) -> QPoly:
        """Like wt but without the shift: the gamma_prime path weight."""
        total = 0
        for col, a in enumerate(self.lower):
            total += self._position_when_placed(a, col)
        for col, b in enumerate(self.upper):
            if b is not None:
                total += self._position_when_placed(b, col)
        return q_power(total)


def enumerate_yf_tableaux(shape: tuple[int, ...]) -> list[YFTableau]:
    """All valid fillings, generated column by column with pruning.

    Everything still unplaced goes to the right, so a height-1 column must
    take the maximum of the remaining numbers, and a height-2 column
    (a, b) is allowed only when no remaining number lies in [a, b].
    """
    n = sum(shape)
    if n == 0:
        return [YFTableau((), (), ())]
    out: list[YFTableau] = []

    def go(col: int, remaining: set[int], lower: list[int], upper: list[int | None]):
        if col == len(shape):
            out.append(YFTableau(tuple(shape), tuple(lower), tuple(upper)))
            return
        if shape[col] == 1:
            a = max(remaining)
            lower.append(a)
            upper.append(None)
            go(col + 1, remaining - {a}, lower, upper)
            lower.pop()
            upper.pop()
        else:
            rem = sorted(remaining)
            for ai, a in enumerate(rem):
                for b in rem[ai + 1 :]:
                    rest = remaining - {a, b}
                    if any(a <= x <= b for x in rest):
                        continue
                    lower.append(a)
                    upper.append(b)
                    go(col + 1, rest, lower, upper)
                    lower.pop()
                    upper.pop()

    go(0, set(range(1, n + 1)), [], [])
    return out


def check_path_tableau_identity(w, pair: QDGGPair | None = None) -> CheckReport:
    """Tableau weight sums must equal the word's path generating functions.

    Only defined for r = 1.  `w` may be a word tuple or an r = 1 key like
    "21121"; a prebuilt pair of sufficient height may be supplied.
    """
    if isinstance(w, str):
        w = parse_word(w, 1)
    for letter in w:
        if letter not in (TWO, one_letter(1)):
            raise ValueError("tableau identity check is defined for r = 1 words only")
    n = word_height(w)
    if pair is None or pair.height < n:
        pair = fib_graphs(1, n)
    ref = pair.vertex(word_key(w, 1), n)
    tableaux = enumerate_yf_tableaux(snakeshape(w))
    lhs = ZERO
    lhs_prime = ZERO
    for t in tableaux:
        lhs = lhs + t.wt()
        lhs_prime = lhs_prime + t.wt_prime()
    report = CheckReport(f"tableau-paths('{word_key(w, 1)}')")
    report.add("tableau-sum", f"word '{word_key(w, 1)}' gamma", path_gf(pair.gamma, ref), lhs)
    report.add(
        "tableau-sum",
        f"word '{word_key(w, 1)}' gamma_prime",
        path_gf(pair.gamma_prime, ref),
        lhs_prime,
    )
    return report


def reflection_word_key(key: str, r: int) -> str:
    """Translate a reflection-built vertex key into a word key.

    A copy tag prepends the matching 1-letter, a mirror tag prepends 2;
    anything without a tag must already be a word key.
    """

    def to_word(k: str) -> Word:
        if k.startswith("c") and ":" in k:
            head, rest = k.split(":", 1)
            if head[1:].isdigit():
                i = int(head[1:])
                if not 1 <= i <= r:
                    raise ValueError(f"copy index out of range in key {k!r}")
                return (one_letter(i),) + to_word(rest)
        if k.startswith("p:"):
            return (TWO,) + to_word(k[2:])
        return parse_word(k, r)

    return word_key(to_word(key), r)


def check_reflection_agreement(
    r: int,
    height: int,
    reflected: QDGGPair | None = None,
    words: QDGGPair | None = None,
) -> CheckReport:
    """The reflection-built pair must match the word pair, after renaming.

    Levels must biject under reflection_word_key and every edge must map
    to an edge with the same weight, in both graphs.
    """
    if reflected is None:
        reflected = build_by_reflection(r, height)
    if words is None:
        words = fib_graphs(r, height)
    report = CheckReport(f"reflection-agreement(r={r}, H={height})")
    if reflected.height != height or words.height != height:
        raise ValueError("both pairs must be built exactly to the requested height")
    mapped_levels = []
    for n in range(height + 1):
        mapped = [reflection_word_key(k, r) for k in reflected.levels[n]]
        mapped_levels.append(mapped)
        report.add(
            "levels",
            f"height {n}",
            sorted(words.levels[n]),
            sorted(mapped),
        )
    for name, refl_graph, word_graph in (
        ("gamma", reflected.gamma, words.gamma),
        ("gamma_prime", reflected.gamma_prime, words.gamma_prime),
    ):
        for n in range(height):
            mapped_edges = {}
            for src, dst, w in refl_graph.edges(n):
                mapped_edges[(mapped_levels[n][src], mapped_levels[n + 1][dst])] = w
            word_edges = {}
            for src, dst, w in word_graph.edges(n):
                word_edges[(words.levels[n][src], words.levels[n + 1][dst])] = w
            report.add(
                "edges",
                f"{name} level {n}->{n + 1}",
                "equal weighted edge sets",
                "equal weighted edge sets" if mapped_edges == word_edges else "mismatch",
                mapped_edges == word_edges,
            )
    return report
