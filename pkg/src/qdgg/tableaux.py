"""Standard Young tableaux graded by size.

Up edges in gamma: pick k in 1..n+1, shift the entries >= k up by one and
row-insert k; the weight q^(n+1-k) again counts new inversions of the
word being built.  Down edges in gamma_prime: delete the largest entry,
weight 1.  The row-insertion correspondence ties paths to recording
tableaux and is used as an independent cross-check.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from collections import defaultdict

from .graded_graph import QDGGPair, enumerate_paths, path_gf_table, path_weight
from .permutations import Perm, inversions, perms_of, standardize
from .qpoly import ONE, QPoly, ZERO, q_factorial, q_power
from .report import CheckReport

Tableau = tuple[tuple[int, ...], ...]


def tableau_key(p: Tableau) -> str:
    return "/".join(",".join(str(e) for e in row) for row in p)


def parse_tableau(key: str) -> Tableau:
    if not key:
        return ()
    return tuple(tuple(int(e) for e in row.split(",")) for row in key.split("/"))


def tableau_size(p: Tableau) -> int:
    return sum(len(row) for row in p)


def shape_of(p: Tableau) -> tuple[int, ...]:
    return tuple(len(row) for row in p)


def is_standard(p: Tableau) -> bool:
    """Rows and columns increase and the entries are exactly 1..n."""
    entries = [e for row in p for e in row]
    if sorted(entries) != list(range(1, len(entries) + 1)):
        return False
    for i, row in enumerate(p):
        if list(row) != sorted(row):
            return False
        if i > 0 and len(row) > len(p[i - 1]):
            return False
        if i > 0 and any(row[j] <= p[i - 1][j] for j in range(len(row))):
            return False
    return True


def row_insert(p: Tableau, x: int) -> tuple[Tableau, tuple[int, int]]:
    """Schensted row insertion; returns the new tableau and the new cell."""
    rows = [list(row) for row in p]
    cur = x
    for ri, row in enumerate(rows):
        j = bisect_right(row, cur)
        if j == len(row):
            row.append(cur)
            return tuple(tuple(r) for r in rows), (ri, j)
        cur, row[j] = row[j], cur
    rows.append([cur])
    return tuple(tuple(r) for r in rows), (len(rows) - 1, 0)


def insert_up(p: Tableau, k: int) -> tuple[Tableau, QPoly]:
    """Shift entries >= k up by one, row-insert k; weight q^(n+1-k)."""
    n = tableau_size(p)
    if not 1 <= k <= n + 1:
        raise ValueError(f"insertion value {k} outside 1..{n + 1}")
    shifted = tuple(tuple(e + 1 if e >= k else e for e in row) for row in p)
    out, _ = row_insert(shifted, k)
    return out, q_power(n + 1 - k)


def remove_top(p: Tableau) -> Tableau:
    """Delete the cell holding the largest entry (always a corner)."""
    if not p:
        raise ValueError("cannot remove from the empty tableau")
    n = tableau_size(p)
    rows = [list(row) for row in p]
    for row in rows:
        if row and row[-1] == n:
            row.pop()
            break
    return tuple(tuple(row) for row in rows if row)


def tab_graphs(height: int) -> QDGGPair:
    """Build the tableau pair to the given height (r = 1).

    Levels are produced by sweeping insert_up over every vertex and every
    k, in order, which reaches every standard tableau of the next size.
    """
    if height < 0:
        raise ValueError("height must be nonnegative")
    levels: list[list[Tableau]] = [[()]]
    gamma_edges = []
    gamma_prime_edges = []
    for n in range(height):
        index_next: dict[Tableau, int] = {}
        nxt: list[Tableau] = []
        g = []
        for src, p in enumerate(levels[n]):
            for k in range(1, n + 2):
                out, w = insert_up(p, k)
                if out not in index_next:
                    index_next[out] = len(nxt)
                    nxt.append(out)
                g.append((src, index_next[out], w))
        index_cur = {p: i for i, p in enumerate(levels[n])}
        gp = [(index_cur[remove_top(p)], dst, ONE) for dst, p in enumerate(nxt)]
        levels.append(nxt)
        gamma_edges.append(g)
        gamma_prime_edges.append(gp)
    keys = [[tableau_key(p) for p in level] for level in levels]
    return QDGGPair.build(keys, gamma_edges, gamma_prime_edges, 1)


def rs(w: Perm) -> tuple[Tableau, Tableau]:
    """Row-insertion correspondence: insertion and recording tableaux."""
    p: Tableau = ()
    q_rows: list[list[int]] = []
    for j, x in enumerate(w, start=1):
        p, (ri, ci) = row_insert(p, x)
        if ri == len(q_rows):
            q_rows.append([])
        q_rows[ri].append(j)
    return p, tuple(tuple(row) for row in q_rows)


def rs_inverse(p: Tableau, q: Tableau) -> Perm:
    """Invert rs: reverse-bump the cells in the order recorded by q."""
    if shape_of(p) != shape_of(q):
        raise ValueError("tableaux must have the same shape")
    rows = [list(row) for row in p]
    cell_of = {}
    for ri, row in enumerate(q):
        for ci, e in enumerate(row):
            cell_of[e] = (ri, ci)
    n = tableau_size(p)
    out = []
    for j in range(n, 0, -1):
        ri, ci = cell_of[j]
        x = rows[ri].pop(ci)
        for r in range(ri - 1, -1, -1):
            idx = bisect_left(rows[r], x) - 1
            x, rows[r][idx] = rows[r][idx], x
        out.append(x)
    return tuple(reversed(out))


def standard_tableaux_of_shape(shape: tuple[int, ...]) -> list[Tableau]:
    """All standard tableaux of a partition shape, by direct backtracking."""
    n = sum(shape)
    rows = [[0] * l for l in shape]
    fill: list[Tableau] = []

    def go(v: int):
        if v > n:
            fill.append(tuple(tuple(row) for row in rows))
            return
        for i, row in enumerate(rows):
            j = sum(1 for e in row if e)
            if j == len(row):
                continue
            if i > 0 and rows[i - 1][j] == 0:
                continue
            row[j] = v
            go(v + 1)
            row[j] = 0

    go(1)
    return fill


def recording_tableau_of_path(shapes: list[tuple[int, ...]]) -> Tableau:
    """Recording tableau of a shape chain starting at the empty shape."""
    rows: list[list[int]] = []
    for j in range(1, len(shapes)):
        prev, cur = shapes[j - 1], shapes[j]
        ri = len(prev) if len(cur) > len(prev) else next(
            i for i in range(len(prev)) if cur[i] > prev[i]
        )
        if ri == len(rows):
            rows.append([])
        rows[ri].append(j)
    return tuple(tuple(row) for row in rows)


def insertion_chain(w: Perm) -> list[Tableau]:
    """Insertion tableaux of the standardized prefixes of w."""
    return [rs(standardize(w[:j]))[0] for j in range(len(w) + 1)]


def check_insertion_path_weights(n: int, pair: QDGGPair | None = None) -> CheckReport:
    """Path/recording-tableau correspondence at size n, checked exactly.

    For every vertex P: the paths from the empty tableau biject with the
    standard tableaux of shape(P); each path weighs q^inv of the
    permutation recovered by rs_inverse; grouping q^inv over S_n by
    insertion tableau reproduces the path generating functions; and the
    per-level sum is [n]_q!.
    """
    if pair is None or pair.height < n:
        pair = tab_graphs(n)
    table = path_gf_table(pair.gamma)
    table_prime = path_gf_table(pair.gamma_prime)
    report = CheckReport(f"insertion-paths(n={n})")

    grouped: dict[Tableau, QPoly] = defaultdict(lambda: ZERO)
    for w in perms_of(n):
        p, _ = rs(w)
        grouped[p] = grouped[p] + q_power(inversions(w))

    total = ZERO
    bad_paths = 0
    bad_counts = []
    bad_groups = 0
    bad_prime = 0
    for idx, key in enumerate(pair.levels[n]):
        p = parse_tableau(key)
        paths = enumerate_paths(pair.gamma, pair.vertex(key, n))
        recordings = set()
        for path in paths:
            refs = pair.path_refs([pair.levels[lvl][i] for lvl, i in enumerate(path)])
            shapes = [shape_of(parse_tableau(pair.key_of(ref))) for ref in refs]
            q = recording_tableau_of_path(shapes)
            recordings.add(q)
            w = rs_inverse(p, q)
            if path_weight(pair.gamma, refs) != q_power(inversions(w)):
                bad_paths += 1
        expected_count = len(standard_tableaux_of_shape(shape_of(p)))
        if len(paths) != expected_count or len(recordings) != expected_count:
            bad_counts.append(key)
        if table[n][idx] != grouped[p]:
            bad_groups += 1
            report.add("grouped-sum", f"P='{key}'", grouped[p], table[n][idx])
        if table_prime[n][idx] != ONE:
            bad_prime += 1
            report.add("gamma-prime-gf", f"P='{key}'", ONE, table_prime[n][idx])
        total = total + table[n][idx]
    report.add("path-weights", f"level {n}", "0 bad paths", f"{bad_paths} bad paths", bad_paths == 0)
    report.add(
        "path-recording-bijection",
        f"level {n}",
        "0 mismatching vertices",
        f"{len(bad_counts)} mismatching vertices",
        not bad_counts,
    )
    report.add(
        "grouped-sum",
        f"all P at level {n}",
        "0 mismatching vertices",
        f"{bad_groups} mismatching vertices",
        bad_groups == 0,
    )
    report.add(
        "gamma-prime-gf",
        f"all P at level {n}",
        "0 mismatching vertices",
        f"{bad_prime} mismatching vertices",
        bad_prime == 0,
    )
    report.add("level-sum", f"level {n}", q_factorial(n), total)
    return report
