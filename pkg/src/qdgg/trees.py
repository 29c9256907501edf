"""Plane binary trees: splice/graft surgery and the graded pair it induces.

A tree is represented by what hangs below its implicit unary root: None
is the bare leaf, an internal node is a (left, right) pair.  Leaves are
numbered 0..p left to right, where p is the number of internal nodes.
Up edges in gamma splice at leaf i and re-graft (weight q^i); down edges
in gamma_prime remove the leftmost leaf and its parent (weight 1).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .graded_graph import QDGGPair, path_gf_table
from .permutations import Perm, inversions, perms_of
from .qpoly import ONE, QPoly, ZERO, q_power
from .report import CheckReport

Tree = object  # None for a leaf, or a (left, right) tuple of Trees


def tree_size(t: Tree) -> int:
    """Number of internal nodes."""
    if t is None:
        return 0
    return 1 + tree_size(t[0]) + tree_size(t[1])


def tree_key(t: Tree) -> str:
    """Balanced-parenthesis key: node -> "(" + left + ")" + right."""
    if t is None:
        return ""
    return "(" + tree_key(t[0]) + ")" + tree_key(t[1])


def parse_tree(key: str) -> Tree:
    def parse(s: str, pos: int) -> tuple[Tree, int]:
        if pos >= len(s) or s[pos] != "(":
            return None, pos
        depth = 0
        for j in range(pos, len(s)):
            if s[j] == "(":
                depth += 1
            elif s[j] == ")":
                depth -= 1
                if depth == 0:
                    left, end = parse(s, pos + 1)
                    if end != j:
                        raise ValueError(f"bad tree key {key!r}")
                    right, end = parse(s, j + 1)
                    return (left, right), end
        raise ValueError(f"unbalanced tree key {key!r}")

    t, end = parse(key, 0)
    if end != len(key):
        raise ValueError(f"trailing characters in tree key {key!r}")
    return t


@lru_cache(maxsize=None)
def all_trees(n: int) -> tuple[Tree, ...]:
    """All trees with n internal nodes, ordered by left-subtree size."""
    if n < 0:
        raise ValueError("tree size must be nonnegative")
    if n == 0:
        return (None,)
    out = []
    for k in range(n):
        for left in all_trees(k):
            for right in all_trees(n - 1 - k):
                out.append((left, right))
    return tuple(out)


def graft(t1: Tree, t2: Tree) -> Tree:
    """Join two trees under a new internal node, t1 on the left."""
    return (t1, t2)


def splice(t: Tree, i: int) -> tuple[Tree, Tree]:
    """Cut along the path from leaf i to the root.

    Nodes where the path descends to the right go to the left piece,
    nodes where it descends to the left go to the right piece; the pieces
    have i and size - i internal nodes.
    """
    if not 0 <= i <= tree_size(t):
        raise ValueError(f"leaf index {i} outside 0..{tree_size(t)}")
    if t is None:
        return None, None
    left, right = t
    pl = tree_size(left)
    if i <= pl:
        l1, l2 = splice(left, i)
        return l1, graft(l2, right)
    r1, r2 = splice(right, i - pl - 1)
    return graft(left, r1), r2


def sg(t: Tree, i: int) -> Tree:
    """Splice at leaf i, then graft the two pieces back together."""
    return graft(*splice(t, i))


def remove_leftmost(t: Tree) -> Tree:
    """Remove leaf 0 and erase its parent node."""
    if t is None:
        raise ValueError("cannot remove from the empty tree")
    left, right = t
    if left is None:
        return right
    return (remove_leftmost(left), right)


def tree_graphs(height: int) -> QDGGPair:
    """Build the tree pair to the given height (r = 1)."""
    if height < 0:
        raise ValueError("height must be nonnegative")
    levels = [all_trees(n) for n in range(height + 1)]
    index = [{t: i for i, t in enumerate(level)} for level in levels]
    gamma_edges = []
    gamma_prime_edges = []
    for n in range(height):
        g = []
        for src, t in enumerate(levels[n]):
            for i in range(n + 1):
                g.append((src, index[n + 1][sg(t, i)], q_power(i)))
        gp = [
            (index[n][remove_leftmost(t)], dst, ONE) for dst, t in enumerate(levels[n + 1])
        ]
        gamma_edges.append(g)
        gamma_prime_edges.append(gp)
    keys = [[tree_key(t) for t in level] for level in levels]
    return QDGGPair.build(keys, gamma_edges, gamma_prime_edges, 1)


def _internal_structure(t: Tree) -> tuple[list[tuple[int | None, int | None]], list[int]]:
    """Preorder ids of internal nodes: children pairs and the in-order list.

    Positions are tracked by traversal (not object identity), since equal
    subtrees may be shared tuples.
    """
    children: list[list[int | None]] = []
    inorder: list[int] = []

    def walk(node: Tree) -> int | None:
        if node is None:
            return None
        me = len(children)
        children.append([None, None])
        children[me][0] = walk(node[0])
        inorder.append(me)
        children[me][1] = walk(node[1])
        return me

    walk(t)
    return [tuple(c) for c in children], inorder


@dataclass(frozen=True)
class LinearExtension:
    """Ancestor-increasing labeling of the internal nodes of a tree.

    `labels[k]` is the label of the internal node with preorder id k.
    """

    tree: Tree
    labels: tuple[int, ...]


def linear_extensions(t: Tree) -> list[LinearExtension]:
    """All labelings where children carry bigger labels than ancestors."""
    children, _ = _internal_structure(t)
    p = len(children)
    if p == 0:
        return [LinearExtension(t, ())]
    labels = [0] * p
    out: list[LinearExtension] = []

    def assign(k: int, available: set[int]):
        if k > p:
            out.append(LinearExtension(t, tuple(labels)))
            return
        for node in sorted(available):
            labels[node] = k
            assign(k + 1, (available - {node}) | {c for c in children[node] if c is not None})

    assign(1, {0})
    return out


def perm_of(e: LinearExtension) -> Perm:
    """Labels read in the left-to-right planar order of internal nodes."""
    _, inorder = _internal_structure(e.tree)
    return tuple(e.labels[i] for i in inorder)


def check_extension_path_identity(p: int, pair: QDGGPair | None = None) -> CheckReport:
    """Path gfs equal inversion sums over linear extensions, tree by tree.

    Also checks that the extension permutations over all trees of size p
    tile S_p exactly once each, and that every gamma_prime gf is 1.
    """
    if pair is None or pair.height < p:
        pair = tree_graphs(p)
    table = path_gf_table(pair.gamma)
    table_prime = path_gf_table(pair.gamma_prime)
    report = CheckReport(f"extension-paths(p={p})")
    seen: list[Perm] = []
    bad = 0
    bad_prime = 0
    for idx, t in enumerate(all_trees(p)):
        target = ZERO
        for e in linear_extensions(t):
            w = perm_of(e)
            seen.append(w)
            target = target + q_power(inversions(w))
        if table[p][idx] != target:
            bad += 1
            report.add("extension-sum", f"T='{tree_key(t)}'", target, table[p][idx])
        if table_prime[p][idx] != ONE:
            bad_prime += 1
            report.add("gamma-prime-gf", f"T='{tree_key(t)}'", ONE, table_prime[p][idx])
    report.add(
        "extension-sum", f"all trees of size {p}", "0 mismatching", f"{bad} mismatching", bad == 0
    )
    report.add(
        "gamma-prime-gf",
        f"all trees of size {p}",
        "0 mismatching",
        f"{bad_prime} mismatching",
        bad_prime == 0,
    )
    report.add(
        "extension-tiling",
        f"size {p}",
        "each permutation once",
        "each permutation once" if sorted(seen) == perms_of(p) else "mismatch",
        sorted(seen) == perms_of(p),
    )
    return report
