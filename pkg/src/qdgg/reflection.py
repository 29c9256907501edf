"""Grow a pair satisfying the q-Weyl relation by one level at a time.

Each step adds, above the current top level n, r tagged copies of every
height-n vertex plus one mirrored copy of every height-(n-1) vertex, with
cross-weights arranged so that the relation D'U - q UD' = rI extends to
the new top.  Iterating from a single-vertex seed produces the same
graphs as the explicit word construction in `fibonacci`.
"""

from __future__ import annotations

from .graded_graph import QDGGPair, verify_qweyl
from .qpoly import ONE, Q


def copy_key(i: int, key: str) -> str:
    """Key of the i-th copy (1-based) of a top-level vertex."""
    return f"c{i}:{key}"


def mirror_key(key: str) -> str:
    """Key of the mirrored copy of a vertex from one level below the top."""
    return f"p:{key}"


def seed_pair(r: int) -> QDGGPair:
    """The single-vertex pair of height 0 with empty-string key."""
    return QDGGPair.build([[""]], [], [], r)


def reflect_once(pair: QDGGPair, validate: bool = True) -> QDGGPair:
    """Extend a partial pair of height n to height n + 1.

    New level: copies c1..cr of each height-n vertex, then mirrors of the
    height-(n-1) vertices.  Copy edges have weight 1 in both graphs.  Each
    gamma_prime edge (w, v) below the top contributes a gamma edge
    (v, mirror(w)) of weight q * m'(w, v); each gamma edge (w, v)
    contributes a gamma_prime edge (v, mirror(w)) of weight m(w, v).

    With `validate`, the input must satisfy the q-Weyl relation strictly
    below its top level.
    """
    n = pair.height
    if validate and n >= 1:
        rep = verify_qweyl(pair, n - 1)
        if not rep.passed:
            raise ValueError("input pair fails the q-Weyl relation below its top level")
    r = pair.r
    top = pair.levels[n]
    below = pair.levels[n - 1] if n >= 1 else ()
    new_level = [copy_key(i, key) for i in range(1, r + 1) for key in top]
    new_level += [mirror_key(key) for key in below]
    mirror_offset = r * len(top)

    gamma_new = []
    gamma_prime_new = []
    for i in range(r):
        for v in range(len(top)):
            dst = i * len(top) + v
            gamma_new.append((v, dst, ONE))
            gamma_prime_new.append((v, dst, ONE))
    if n >= 1:
        for w, v, m in pair.gamma_prime.edges(n - 1):
            gamma_new.append((v, mirror_offset + w, Q * m))
        for w, v, m in pair.gamma.edges(n - 1):
            gamma_prime_new.append((v, mirror_offset + w, m))

    levels = [list(level) for level in pair.levels] + [new_level]
    gamma_edges = [pair.gamma.edges(i) for i in range(n)] + [gamma_new]
    gamma_prime_edges = [pair.gamma_prime.edges(i) for i in range(n)] + [gamma_prime_new]
    return QDGGPair.build(levels, gamma_edges, gamma_prime_edges, r)


def build_by_reflection(r: int, height: int, validate: bool = True) -> QDGGPair:
    """Iterate reflect_once `height` times from the single-vertex seed."""
    if height < 0:
        raise ValueError("height must be nonnegative")
    pair = seed_pair(r)
    for _ in range(height):
        pair = reflect_once(pair, validate=validate)
    return pair
