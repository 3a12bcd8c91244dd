"""Simplicial transform of a pointed poset, face counts, and the new-face
numbers relating the two.

The transform replaces each object x by the full set of subsets of V(x),
then glues: a subset S names the same face under two objects exactly when
the objects are linked by comparabilities through objects whose vertex set
contains S.  The result always has boolean down-sets, one for each pair
(S, glueing component).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .errors import (
    CycleError,
    NoSuchRank,
    NotRegular,
    OrderNotAntisymmetric,
)
from .poset import PointedPoset, classify


def f_vector(P: PointedPoset) -> tuple[int, ...]:
    """Face counts by rank: entry i is the number of objects with i+1
    vertices below them.  Empty for the one-object poset."""
    n = P.norm
    counts = [0] * (n + 1)
    for x in P.objects:
        k = len(P.vertex_set(x))
        if k:
            counts[k - 1] += 1
    return tuple(counts)


@dataclass
class TransformResult:
    poset: PointedPoset
    to_class: dict
    embed: dict
    classes: dict


def _components(P: PointedPoset, members: set) -> dict:
    """Connected components of the cover graph induced on ``members``;
    returns member -> representative (smallest by string)."""
    adj = {m: [] for m in members}
    for a, b in P.covers:
        if a in members and b in members:
            adj[a].append(b)
            adj[b].append(a)
    rep = {}
    for start in sorted(members, key=str):
        if start in rep:
            continue
        comp = [start]
        stack = [start]
        seen = {start}
        while stack:
            cur = stack.pop()
            for nxt in adj[cur]:
                if nxt not in seen:
                    seen.add(nxt)
                    comp.append(nxt)
                    stack.append(nxt)
        r = min(comp, key=str)
        for m in comp:
            rep[m] = r
    return rep


def simplicial_transform(P: PointedPoset) -> TransformResult:
    """Glue the subset posets of all objects into one simplicial poset."""
    subsets: set = set()
    for x in P.objects:
        vx = sorted(P.vertex_set(x), key=str)
        for r in range(len(vx) + 1):
            for S in combinations(vx, r):
                subsets.add(frozenset(S))

    comp_of: dict = {}
    for S in subsets:
        members = {x for x in P.objects if S <= P.vertex_set(x)}
        comp_of[S] = _components(P, members)

    def class_name(x, S: frozenset) -> str:
        if not S:
            return P.base
        rep = comp_of[S][x]
        return f"{','.join(sorted(S, key=str))}@{rep}"

    to_class = {}
    classes = {}
    for x in P.objects:
        vx = sorted(P.vertex_set(x), key=str)
        for r in range(len(vx) + 1):
            for S in combinations(vx, r):
                fs = frozenset(S)
                name = class_name(x, fs)
                to_class[(x, fs)] = name
                if name not in classes:
                    rep = comp_of[fs].get(x)
                    members = tuple(sorted((m for m, rr in comp_of[fs].items() if rr == rep), key=str)) if fs else tuple(sorted(P.objects, key=str))
                    classes[name] = (fs, members)

    covers = set()
    for (x, fs), name in to_class.items():
        for v in fs:
            covers.add((to_class[(x, fs - {v})], name))
    try:
        SP = PointedPoset(sorted(classes, key=str), P.base, sorted(covers))
    except CycleError as e:
        raise OrderNotAntisymmetric(str(e)) from e
    embed = {x: to_class[(x, frozenset(P.vertex_set(x)))] for x in P.objects}
    return TransformResult(SP, to_class, embed, classes)


def check_embedding(P: PointedPoset) -> dict:
    """Whether x -> [x, V(x)] is injective and an order embedding.

    Report only; non-reduced posets typically fail injectivity.
    """
    t = simplicial_transform(P)
    out = {"injective": True, "order_embedding": True}
    seen: dict = {}
    for x in sorted(P.objects, key=str):
        img = t.embed[x]
        if img in seen:
            out["injective"] = False
            out.setdefault("witness_injective", (seen[img], x))
        else:
            seen[img] = x
    SP = t.poset
    for x in sorted(P.objects, key=str):
        for y in sorted(P.objects, key=str):
            if P.leq(x, y) != SP.leq(t.embed[x], t.embed[y]):
                out["order_embedding"] = False
                out.setdefault("witness_order", (x, y))
    return out


def _rank_object(P: PointedPoset, n: int):
    ranked = sorted((x for x in P.objects if len(P.vertex_set(x)) == n + 1), key=str)
    if not ranked:
        raise NoSuchRank(f"no object with {n + 1} vertices")
    return ranked[0]


def nu(P: PointedPoset, i: int, n: int, method: str = "direct", _memo=None) -> int:
    """Number of rank-i faces a rank-n object contributes beyond the faces
    its own down-set already provides.

    ``direct`` counts the (i+1)-subsets of V(x) not contained in the vertex
    set of anything strictly below x; ``recursive`` solves for the same
    number from the subset total and the face counts of the open down-set.
    Needs all rank-n objects to look alike, hence the regularity guard.
    """
    if _memo is None:
        if not classify(P).regular:
            raise NotRegular("rank classes are not isomorphic")
        _memo = {}
    if i == 0:
        return 0
    if (i, n) in _memo:
        return _memo[(i, n)]
    x = _rank_object(P, n)
    if method == "direct":
        vx = sorted(P.vertex_set(x), key=str)
        below = [P.vertex_set(w) for w in P.down_set(x) if w != x]
        val = 0
        for S in combinations(vx, i + 1):
            fs = frozenset(S)
            if not any(fs <= vw for vw in below):
                val += 1
    elif method == "recursive":
        Q = P.sub_poset(x, "down-strict")
        f = f_vector(Q)
        val = comb(n + 1, i + 1) - (f[i] if i < len(f) else 0)
        for k in range(i + 1, n):
            if k < len(f) and f[k]:
                val -= f[k] * nu(P, i, k, method="recursive", _memo=_memo)
    else:
        raise ValueError(f"unknown method {method!r}")
    _memo[(i, n)] = val
    return val


def f_transform_predict(P: PointedPoset, method: str = "direct") -> tuple[int, ...]:
    """Face counts of the transform predicted from the face counts of P and
    the new-face numbers."""
    if not classify(P).regular:
        raise NotRegular("rank classes are not isomorphic")
    f = f_vector(P)
    N = len(f)
    memo: dict = {}
    out = []
    for i in range(N):
        total = f[i]
        for k in range(i + 1, N):
            if f[k]:
                total += f[k] * nu(P, i, k, method=method, _memo=memo)
        out.append(total)
    return tuple(out)
