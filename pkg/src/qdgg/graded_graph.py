"""Leveled edge-weighted graphs, their up/down operators, and exact checks.

A WeightedGradedGraph stores vertices in indexed levels; each edge joins a
level to the next one up and carries a nonzero weight in N[q].  A QDGGPair
holds two such graphs on one shared level store together with a positive
integer r, the differential coefficient of the relation

    D'U - q UD' = rI

where U acts through the first graph and D' through the second.  All
checks here compare polynomials exactly.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

from .qpoly import ONE, Q, QPoly, ZERO, q_factorial, q_integer
from .report import CheckReport


@dataclass(frozen=True)
class VertexRef:
    """A vertex position: level (= height) and index within the level."""

    level: int
    index: int


class LinearCombination:
    """Finite formal sum of same-level vertices with QPoly coefficients.

    Combinations are homogeneous: every vertex lives at `level`.  Zero
    coefficients are dropped on construction, so equality is exact.
    """

    __slots__ = ("level", "_terms")

    def __init__(self, level: int, terms=()):
        if level < 0:
            raise ValueError("combination level must be nonnegative")
        items = terms.items() if isinstance(terms, dict) else terms
        acc: dict[int, QPoly] = {}
        for idx, c in items:
            if not isinstance(c, QPoly):
                c = QPoly((c,))
            if c.is_zero:
                continue
            prev = acc.get(idx)
            c = c if prev is None else prev + c
            if c.is_zero:
                acc.pop(idx, None)
            else:
                acc[idx] = c
        self.level = level
        self._terms = acc

    @classmethod
    def unit(cls, level: int, index: int) -> "LinearCombination":
        return cls(level, ((index, ONE),))

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, index: int) -> QPoly:
        return self._terms.get(index, ZERO)

    def items(self) -> list[tuple[int, QPoly]]:
        return sorted(self._terms.items())

    def support(self) -> tuple[int, ...]:
        return tuple(sorted(self._terms))

    def scale(self, c) -> "LinearCombination":
        return LinearCombination(self.level, ((i, v * c) for i, v in self._terms.items()))

    def __add__(self, other: "LinearCombination") -> "LinearCombination":
        if not isinstance(other, LinearCombination):
            return NotImplemented
        if other.level != self.level:
            raise ValueError(f"cannot add combinations at levels {self.level} and {other.level}")
        merged = dict(self._terms)
        for i, v in other._terms.items():
            merged[i] = merged.get(i, ZERO) + v
        return LinearCombination(self.level, merged)

    def __sub__(self, other: "LinearCombination") -> "LinearCombination":
        return self + other.scale(-1)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LinearCombination):
            return NotImplemented
        return self.level == other.level and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.level, tuple(sorted(self._terms.items()))))

    def __len__(self) -> int:
        return len(self._terms)

    def __repr__(self) -> str:
        body = ", ".join(f"{i}: {c}" for i, c in self.items())
        return f"LinearCombination(level={self.level}, {{{body}}})"


Edge = tuple[int, int, QPoly]


class WeightedGradedGraph:
    """Graded graph on indexed levels with N[q] edge weights.

    `levels[i]` is the tuple of vertex keys at height i; `edges(i)` is the
    tuple of (src, dst, weight) joining level i to level i + 1, sorted by
    (src, dst).  At most one edge per ordered pair is allowed, weights must
    be nonzero with nonnegative coefficients, and the structure is
    immutable after construction.
    """

    __slots__ = ("_levels", "_edges", "_up", "_down", "_weight")

    def __init__(self, levels: Sequence[Sequence[str]], up_edges: Sequence[Iterable[Edge]]):
        lv = tuple(tuple(level) for level in levels)
        if not lv:
            raise ValueError("a graded graph needs at least level 0")
        if len(up_edges) != len(lv) - 1:
            raise ValueError(
                f"expected {len(lv) - 1} edge groups for {len(lv)} levels, got {len(up_edges)}"
            )
        groups: list[tuple[Edge, ...]] = []
        for i, group in enumerate(up_edges):
            seen: set[tuple[int, int]] = set()
            norm: list[Edge] = []
            for src, dst, w in group:
                if not 0 <= src < len(lv[i]):
                    raise ValueError(f"edge source {src} out of range at level {i}")
                if not 0 <= dst < len(lv[i + 1]):
                    raise ValueError(f"edge target {dst} out of range at level {i + 1}")
                if (src, dst) in seen:
                    raise ValueError(f"duplicate edge ({src}, {dst}) at level {i}")
                if not isinstance(w, QPoly):
                    raise TypeError("edge weights must be QPoly values")
                if w.is_zero:
                    raise ValueError(f"zero weight on edge ({src}, {dst}) at level {i}")
                if any(c < 0 for c in w.coeffs):
                    raise ValueError(f"edge ({src}, {dst}) at level {i} has a negative coefficient")
                seen.add((src, dst))
                norm.append((src, dst, w))
            norm.sort(key=lambda e: (e[0], e[1]))
            groups.append(tuple(norm))
        self._levels = lv
        self._edges = tuple(groups)
        self._up = [[[] for _ in level] for level in lv]
        self._down = [[[] for _ in level] for level in lv]
        self._weight: list[dict[tuple[int, int], QPoly]] = [dict() for _ in groups]
        for i, group in enumerate(groups):
            for src, dst, w in group:
                self._up[i][src].append((dst, w))
                self._down[i + 1][dst].append((src, w))
                self._weight[i][(src, dst)] = w

    @property
    def height(self) -> int:
        return len(self._levels) - 1

    @property
    def levels(self) -> tuple[tuple[str, ...], ...]:
        return self._levels

    def level(self, i: int) -> tuple[str, ...]:
        return self._levels[i]

    def level_size(self, i: int) -> int:
        return len(self._levels[i])

    def edges(self, i: int) -> tuple[Edge, ...]:
        """Edges from level i to level i + 1."""
        return self._edges[i]

    def edge_weight(self, i: int, src: int, dst: int) -> QPoly | None:
        return self._weight[i].get((src, dst))

    def up_edges(self, level: int, index: int) -> list[tuple[int, QPoly]]:
        return list(self._up[level][index])

    def down_edges(self, level: int, index: int) -> list[tuple[int, QPoly]]:
        return list(self._down[level][index])

    def apply_up(self, x: LinearCombination) -> LinearCombination:
        """U(x): push a combination one level up, weighting by the edges."""
        if x.level >= len(self._levels) - 1:
            raise ValueError(f"no level {x.level + 1} in a graph of height {self.height}")
        acc: dict[int, QPoly] = {}
        for src, c in x.items():
            if src >= len(self._levels[x.level]):
                raise ValueError(f"vertex index {src} out of range at level {x.level}")
            for dst, w in self._up[x.level][src]:
                acc[dst] = acc.get(dst, ZERO) + c * w
        return LinearCombination(x.level + 1, acc)

    def apply_down(self, x: LinearCombination) -> LinearCombination:
        """D(x): push a combination one level down (the adjoint of apply_up).

        Applying D at level 0 is an error: the minimum has nothing below it,
        and silently returning zero would mask indexing bugs.
        """
        if x.level == 0:
            raise ValueError("down operator applied at level 0")
        if x.level > self.height:
            raise ValueError(f"no level {x.level} in a graph of height {self.height}")
        acc: dict[int, QPoly] = {}
        for dst, c in x.items():
            if dst >= len(self._levels[x.level]):
                raise ValueError(f"vertex index {dst} out of range at level {x.level}")
            for src, w in self._down[x.level][dst]:
                acc[src] = acc.get(src, ZERO) + c * w
        return LinearCombination(x.level - 1, acc)


class QDGGPair:
    """Two graded graphs on one shared vertex set plus the coefficient r.

    `gamma` carries the up operator U, `gamma_prime` the down operator D'.
    The two graphs must have identical levels; sharing is enforced at
    construction.
    """

    __slots__ = ("levels", "gamma", "gamma_prime", "r", "_index")

    def __init__(self, gamma: WeightedGradedGraph, gamma_prime: WeightedGradedGraph, r: int):
        if gamma.levels != gamma_prime.levels:
            raise ValueError("the two graphs of a pair must share one vertex set")
        if not isinstance(r, int) or r < 1:
            raise ValueError("the differential coefficient r must be a positive integer")
        self.levels = gamma.levels
        self.gamma = gamma
        self.gamma_prime = gamma_prime
        self.r = r
        self._index: list[dict[str, int]] = []
        for i, level in enumerate(self.levels):
            idx = {key: j for j, key in enumerate(level)}
            if len(idx) != len(level):
                raise ValueError(f"duplicate vertex keys at level {i}")
            self._index.append(idx)

    @classmethod
    def build(
        cls,
        levels: Sequence[Sequence[str]],
        gamma_edges: Sequence[Iterable[Edge]],
        gamma_prime_edges: Sequence[Iterable[Edge]],
        r: int,
    ) -> "QDGGPair":
        lv = tuple(tuple(str(k) for k in level) for level in levels)
        return cls(
            WeightedGradedGraph(lv, gamma_edges),
            WeightedGradedGraph(lv, gamma_prime_edges),
            r,
        )

    @property
    def height(self) -> int:
        return len(self.levels) - 1

    def vertex(self, key: str, level: int | None = None) -> VertexRef:
        """Resolve a vertex key to its (level, index) reference."""
        if level is not None:
            try:
                return VertexRef(level, self._index[level][key])
            except (IndexError, KeyError):
                raise KeyError(f"no vertex {key!r} at level {level}") from None
        for lvl, idx in enumerate(self._index):
            if key in idx:
                return VertexRef(lvl, idx[key])
        raise KeyError(f"no vertex {key!r} in the pair")

    def key_of(self, ref: VertexRef) -> str:
        return self.levels[ref.level][ref.index]

    def unit(self, key: str, level: int | None = None) -> LinearCombination:
        ref = self.vertex(key, level)
        return LinearCombination.unit(ref.level, ref.index)

    def path_refs(self, keys: Sequence[str]) -> list[VertexRef]:
        """References for a vertex-key path starting at level 0."""
        return [self.vertex(key, lvl) for lvl, key in enumerate(keys)]


def pairing(x: LinearCombination, v: VertexRef) -> QPoly:
    """Coefficient of the vertex v in x; levels must agree."""
    if x.level != v.level:
        raise ValueError(f"pairing levels differ: {x.level} vs {v.level}")
    return x.coefficient(v.index)


def format_combination(pair: QDGGPair, x: LinearCombination) -> str:
    if x.is_zero:
        return "0"
    parts = []
    for idx, c in x.items():
        key = pair.levels[x.level][idx]
        parts.append(f"'{key}'" if c == ONE else f"({c})*'{key}'")
    return " + ".join(parts)


def verify_qweyl(pair: QDGGPair, max_height: int) -> CheckReport:
    """Check D'U(v) - q UD'(v) = r v for every vertex of height <= max_height.

    Needs the pair built to max_height + 1 so the up step stays in range.
    D' annihilates the level-0 minimum, so the second term is zero there.
    Failing vertices are reported together with their discrepancy.
    """
    if max_height >= len(pair.levels):
        raise ValueError(
            f"verify_qweyl to height {max_height} needs level {max_height + 1}, "
            f"but the pair has height {pair.height}"
        )
    report = CheckReport(f"qweyl(r={pair.r})")
    for h in range(0, max_height + 1):
        bad: list[tuple[int, LinearCombination]] = []
        for idx in range(len(pair.levels[h])):
            x = LinearCombination.unit(h, idx)
            du = pair.gamma_prime.apply_down(pair.gamma.apply_up(x))
            if h == 0:
                ud = LinearCombination(h)
            else:
                ud = pair.gamma.apply_up(pair.gamma_prime.apply_down(x))
            disc = du - ud.scale(Q) - x.scale(pair.r)
            if not disc.is_zero:
                bad.append((idx, disc))
        report.add(
            "qweyl",
            f"height {h} ({len(pair.levels[h])} vertices)",
            "0 failing",
            f"{len(bad)} failing",
            not bad,
        )
        for idx, disc in bad:
            key = pair.levels[h][idx]
            report.add(
                "qweyl",
                f"vertex '{key}' at height {h}",
                "zero discrepancy",
                format_combination(pair, disc),
                False,
            )
    return report


def path_gf_table(graph: WeightedGradedGraph) -> list[list[QPoly]]:
    """Weight generating functions of paths from the unique minimum.

    Entry [n][i] is the sum over all paths from the level-0 vertex to
    vertex i of level n of the products of edge weights, computed by
    dynamic programming up the levels.
    """
    if graph.level_size(0) != 1:
        raise ValueError("path generating functions need a unique minimum at level 0")
    table: list[list[QPoly]] = [[ONE]]
    for i in range(graph.height):
        nxt = [ZERO] * graph.level_size(i + 1)
        for src, dst, w in graph.edges(i):
            nxt[dst] = nxt[dst] + table[i][src] * w
        table.append(nxt)
    return table


def path_gf(graph: WeightedGradedGraph, v: VertexRef) -> QPoly:
    """Weight generating function of paths from the minimum to v."""
    if not 0 <= v.level <= graph.height:
        raise ValueError(f"no level {v.level} in a graph of height {graph.height}")
    return path_gf_table(graph)[v.level][v.index]


def enumerate_paths(graph: WeightedGradedGraph, v: VertexRef) -> list[tuple[int, ...]]:
    """Every path from the minimum to v, as a tuple of per-level indices."""
    if graph.level_size(0) != 1:
        raise ValueError("path enumeration needs a unique minimum at level 0")

    def walk(level: int, index: int) -> list[tuple[int, ...]]:
        if level == 0:
            return [(index,)]
        out = []
        for src, _ in graph.down_edges(level, index):
            for p in walk(level - 1, src):
                out.append(p + (index,))
        return out

    return walk(v.level, v.index)


def brute_force_path_gf(graph: WeightedGradedGraph, v: VertexRef) -> QPoly:
    """Oracle for path_gf: explicitly enumerate paths and sum their weights."""
    total = ZERO
    for p in enumerate_paths(graph, v):
        w = ONE
        for i in range(len(p) - 1):
            w = w * graph.edge_weight(i, p[i], p[i + 1])
        total = total + w
    return total


def path_weight(graph: WeightedGradedGraph, refs: Sequence[VertexRef]) -> QPoly:
    """Product of edge weights along a given path; errors if an edge is missing."""
    total = ONE
    for a, b in zip(refs, refs[1:]):
        if b.level != a.level + 1:
            raise ValueError("path must climb one level per step")
        w = graph.edge_weight(a.level, a.index, b.index)
        if w is None:
            raise ValueError(f"no edge from level {a.level} index {a.index} to index {b.index}")
        total = total * w
    return total


def check_path_product_identity(pair: QDGGPair, n: int) -> CheckReport:
    """Sum of f_gamma(v) * f_gamma_prime(v) over level n must be r^n [n]_q!."""
    if not 0 <= n <= pair.height:
        raise ValueError(f"level {n} not built (height {pair.height})")
    tg = path_gf_table(pair.gamma)
    tp = path_gf_table(pair.gamma_prime)
    lhs = ZERO
    for fg, fp in zip(tg[n], tp[n]):
        lhs = lhs + fg * fp
    rhs = q_factorial(n) * (pair.r**n)
    report = CheckReport(f"path-product(n={n})")
    report.add("path-product", f"level {n}", rhs, lhs)
    return report


def up_power_of_minimum(pair: QDGGPair, n: int) -> LinearCombination:
    """U^n applied to the unique minimum, as a level-n combination."""
    if pair.gamma.level_size(0) != 1:
        raise ValueError("needs a unique minimum at level 0")
    x = LinearCombination.unit(0, 0)
    for _ in range(n):
        x = pair.gamma.apply_up(x)
    return x


def mixed_path_gf(pair: QDGGPair, w: VertexRef, n: int) -> tuple[QPoly, CheckReport]:
    """Generating function of up-then-down paths through level n ending at w.

    Computes (D'^(n-m) U^n min, w) for m = level of w, and checks it equals
    r^(n-m) [n]_q [n-1]_q ... [m+1]_q f_gamma(w).
    """
    m = w.level
    if m > n:
        raise ValueError(f"vertex level {m} exceeds path top {n}")
    if n > pair.height:
        raise ValueError(f"level {n} not built (height {pair.height})")
    x = up_power_of_minimum(pair, n)
    for _ in range(n - m):
        x = pair.gamma_prime.apply_down(x)
    value = pairing(x, w)
    factor = QPoly((pair.r ** (n - m),))
    for j in range(m + 1, n + 1):
        factor = factor * q_integer(j)
    expected = factor * path_gf(pair.gamma, w)
    report = CheckReport("mixed-path")
    report.add("mixed-path", f"w='{pair.key_of(w)}' m={m} n={n}", expected, value)
    return value, report


def check_mixed_all(pair: QDGGPair, n_max: int) -> CheckReport:
    """Vector form of the mixed path identity for all m <= n <= n_max."""
    if n_max > pair.height:
        raise ValueError(f"level {n_max} not built (height {pair.height})")
    table = path_gf_table(pair.gamma)
    report = CheckReport(f"mixed(n<={n_max})")
    for n in range(n_max + 1):
        x = up_power_of_minimum(pair, n)
        for k in range(n + 1):
            m = n - k
            factor = QPoly((pair.r**k,))
            for j in range(m + 1, n + 1):
                factor = factor * q_integer(j)
            expected = LinearCombination(
                m, ((i, f * factor) for i, f in enumerate(table[m]))
            )
            report.add(
                "mixed",
                f"n={n} m={m} ({len(pair.levels[m])} vertices)",
                "exact match",
                "exact match" if x == expected else "mismatch",
                x == expected,
            )
            if m > 0:
                x = pair.gamma_prime.apply_down(x)
    return report


class IntGradedGraph:
    """A graded graph with plain integer weights (a QPoly graph at q = c)."""

    __slots__ = ("levels", "up", "_up_adj", "_down_adj")

    def __init__(self, levels, up_edges):
        self.levels = tuple(tuple(level) for level in levels)
        self.up = tuple(tuple(group) for group in up_edges)
        self._up_adj = [[[] for _ in level] for level in self.levels]
        self._down_adj = [[[] for _ in level] for level in self.levels]
        for i, group in enumerate(self.up):
            for src, dst, w in group:
                self._up_adj[i][src].append((dst, w))
                self._down_adj[i + 1][dst].append((src, w))

    @property
    def height(self) -> int:
        return len(self.levels) - 1

    def apply_up(self, level: int, vec: dict[int, int]) -> dict[int, int]:
        acc: dict[int, int] = {}
        for src, c in vec.items():
            for dst, w in self._up_adj[level][src]:
                acc[dst] = acc.get(dst, 0) + c * w
        return {i: v for i, v in acc.items() if v}

    def apply_down(self, level: int, vec: dict[int, int]) -> dict[int, int]:
        acc: dict[int, int] = {}
        for dst, c in vec.items():
            for src, w in self._down_adj[level][dst]:
                acc[src] = acc.get(src, 0) + c * w
        return {i: v for i, v in acc.items() if v}


def specialize(graph: WeightedGradedGraph, c: int) -> IntGradedGraph:
    """Evaluate every edge weight at q = c."""
    groups = []
    for i in range(graph.height):
        groups.append(tuple((src, dst, w.evaluate(c)) for src, dst, w in graph.edges(i)))
    return IntGradedGraph(graph.levels, groups)


def check_specialization(pair: QDGGPair, c: int, max_height: int) -> CheckReport:
    """Check D'U - c UD' = rI on the pair with weights evaluated at q = c."""
    if max_height >= len(pair.levels):
        raise ValueError(
            f"specialization check to height {max_height} needs level {max_height + 1}"
        )
    g = specialize(pair.gamma, c)
    gp = specialize(pair.gamma_prime, c)
    report = CheckReport(f"specialization(q={c})")
    for h in range(0, max_height + 1):
        bad = []
        for idx in range(len(pair.levels[h])):
            vec = {idx: 1}
            du = gp.apply_down(h + 1, g.apply_up(h, vec))
            ud = {} if h == 0 else g.apply_up(h - 1, gp.apply_down(h, vec))
            disc = dict(du)
            for i, v in ud.items():
                disc[i] = disc.get(i, 0) - c * v
            disc[idx] = disc.get(idx, 0) - pair.r
            disc = {i: v for i, v in disc.items() if v}
            if disc:
                bad.append((idx, disc))
        report.add(
            f"q={c}",
            f"height {h} ({len(pair.levels[h])} vertices)",
            "0 failing",
            f"{len(bad)} failing",
            not bad,
        )
        for idx, disc in bad:
            report.add(
                f"q={c}",
                f"vertex '{pair.levels[h][idx]}' at height {h}",
                "zero discrepancy",
                str(disc),
                False,
            )
    return report


def pair_to_dict(pair: QDGGPair) -> dict:
    """Serializable form; polynomials become ascending coefficient arrays."""

    def edge_groups(graph: WeightedGradedGraph):
        return [
            [[src, dst, list(w.coeffs)] for src, dst, w in graph.edges(i)]
            for i in range(graph.height)
        ]

    return {
        "r": pair.r,
        "height": pair.height,
        "levels": [list(level) for level in pair.levels],
        "gamma_edges": edge_groups(pair.gamma),
        "gamma_prime_edges": edge_groups(pair.gamma_prime),
    }


def pair_from_dict(data: dict) -> QDGGPair:
    levels = [list(level) for level in data["levels"]]
    if data["height"] != len(levels) - 1:
        raise ValueError("height field disagrees with the number of levels")

    def edge_groups(raw):
        return [
            [(src, dst, QPoly(coeffs)) for src, dst, coeffs in group] for group in raw
        ]

    return QDGGPair.build(
        levels,
        edge_groups(data["gamma_edges"]),
        edge_groups(data["gamma_prime_edges"]),
        data["r"],
    )


def pair_to_json(pair: QDGGPair) -> str:
    return json.dumps(pair_to_dict(pair), sort_keys=True, separators=(",", ":"))


def pair_from_json(text: str) -> QDGGPair:
    return pair_from_dict(json.loads(text))
