"""Diagrams of graded vector spaces over a pointed poset and their higher
limits.

A diagram assigns a graded vector space to every object and a structure map
F(y) -> F(x) to every cover x < y, so values restrict downward.  Higher
limits are computed from the cochain complex on strictly increasing chains

    C^n = sum over (x_0 < ... < x_n) of F(x_0)

with differential: face 0 pushes along F(x_1) -> F(x_0), face k >= 1 deletes
x_k with sign (-1)^k.  A variant over weakly increasing chains computes the
same cohomology and serves as an independent cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import PreconditionFailed
from .linalg import (
    QQ,
    FieldSpec,
    GradedLinearMap,
    GradedVectorSpace,
    mat_id,
    mat_mul,
    mat_zero,
    rank,
)
from .poset import PointedPoset


class PosetDiagram:
    """Graded vector spaces indexed by the objects, with downward structure
    maps given on covers and composed along cover paths elsewhere."""

    def __init__(self, poset: PointedPoset, spaces: dict, cover_maps: dict):
        self.poset = poset
        self.spaces = dict(spaces)
        self.cover_maps = {tuple(k): v for k, v in cover_maps.items()}
        missing = set(poset.objects) - set(self.spaces)
        if missing:
            raise PreconditionFailed(f"no space for objects {sorted(missing)}")
        self.field = self.spaces[poset.base].field
        self.truncation = self.spaces[poset.base].truncation

    @classmethod
    def constant(cls, poset: PointedPoset, space: GradedVectorSpace) -> "PosetDiagram":
        spaces = {x: space for x in poset.objects}
        maps = {(x, y): GradedLinearMap.identity(space) for x, y in poset.covers}
        return cls(poset, spaces, maps)

    @classmethod
    def indicator(cls, poset: PointedPoset, generators, field: FieldSpec = QQ, D: int = 0) -> "PosetDiagram":
        """Unit space on the up-set generated by ``generators``, zero below;
        identity maps inside the up-set."""
        up: set = set()
        for g in generators:
            up |= poset.up_set(g)
        unit = GradedVectorSpace.unit(field, D)
        zero = GradedVectorSpace.zero_space(field, D)
        spaces = {x: (unit if x in up else zero) for x in poset.objects}
        maps = {}
        for x, y in poset.covers:
            if x in up and y in up:
                maps[(x, y)] = GradedLinearMap.identity(unit)
            else:
                maps[(x, y)] = GradedLinearMap.zero(spaces[y], spaces[x])
        return cls(poset, spaces, maps)

    def space(self, x) -> GradedVectorSpace:
        return self.spaces[x]

    def cover_map(self, x, y) -> GradedLinearMap:
        return self.cover_maps[(x, y)]

    def composite(self, x, y) -> GradedLinearMap:
        """The structure map F(y) -> F(x) for x <= y, composed along a fixed
        cover path (smallest next object first)."""
        if not self.poset.leq(x, y):
            raise PreconditionFailed(f"{x!r} is not below {y!r}")
        cur = y
        acc = GradedLinearMap.identity(self.spaces[y])
        down = {}
        for a, b in self.poset.covers:
            down.setdefault(b, []).append(a)
        while cur != x:
            nxt = min(
                (u for u in down.get(cur, ()) if self.poset.leq(x, u)),
                key=str,
            )
            acc = self.cover_maps[(nxt, cur)].compose(acc)
            cur = nxt
        return acc


def check_diagram(diagram: PosetDiagram) -> list[str]:
    """Shape, field and commutativity problems, as human-readable strings."""
    problems = []
    P = diagram.poset
    covers = set(P.covers)
    keys = set(diagram.cover_maps)
    for k in sorted(keys - covers, key=str):
        problems.append(f"map on non-cover pair {k}")
    for k in sorted(covers - keys, key=str):
        problems.append(f"missing map on cover {k}")
    for (x, y) in sorted(covers & keys, key=str):
        f = diagram.cover_maps[(x, y)]
        if f.source.dims != diagram.spaces[y].dims or f.target.dims != diagram.spaces[x].dims:
            problems.append(f"map on cover ({x}, {y}) has wrong shape")
        if f.field != diagram.field:
            problems.append(f"map on cover ({x}, {y}) uses field {f.field}")
    if problems:
        return problems
    down = {}
    for a, b in P.covers:
        down.setdefault(b, []).append(a)

    def all_paths(x, y):
        # every composite along maximal cover chains from y down to x
        if x == y:
            return [GradedLinearMap.identity(diagram.spaces[y])]
        out = []
        for u in sorted(down.get(y, ()), key=str):
            if P.leq(x, u):
                for tail in all_paths(x, u):
                    out.append(tail.compose(diagram.cover_maps[(u, y)]))
        return out

    objs = sorted(P.objects, key=str)
    for x in objs:
        for y in objs:
            if x != y and P.lt(x, y):
                paths = all_paths(x, y)
                if any(p != paths[0] for p in paths[1:]):
                    problems.append(f"composites from {y} to {x} disagree")
    return problems


@dataclass
class CochainComplex:
    """Chain bases, per-level graded spaces, and the differentials
    delta[n]: C^n -> C^(n+1)."""

    chains: list
    spaces: list
    deltas: list

    def dims(self):
        return [tuple(s.dims) for s in self.spaces]


def _strict_chains(objs, leq, n):
    if n == 0:
        return [(x,) for x in objs]
    shorter = _strict_chains(objs, leq, n - 1)
    out = []
    for c in shorter:
        for x in objs:
            if x != c[-1] and leq(c[-1], x):
                out.append(c + (x,))
    return out


def _weak_chains(objs, leq, n):
    if n == 0:
        return [(x,) for x in objs]
    shorter = _weak_chains(objs, leq, n - 1)
    out = []
    for c in shorter:
        for x in objs:
            if leq(c[-1], x):
                out.append(c + (x,))
    return out


def cochain_complex(
    diagram: PosetDiagram,
    objects=None,
    weak: bool = False,
    max_n: int | None = None,
    check: bool = True,
) -> CochainComplex:
    """Build the chain-indexed cochain complex of the diagram.

    ``objects`` restricts the chains to a subset of the poset (the order is
    inherited); by default all objects are used.  ``max_n`` caps the levels;
    for strict chains the complex stops by itself at the longest chain.
    """
    P = diagram.poset
    field = diagram.field
    D = diagram.truncation
    objs = sorted(P.objects if objects is None else objects, key=str)
    leq = P.leq
    gen = _weak_chains if weak else _strict_chains
    if max_n is None:
        if weak:
            raise PreconditionFailed("weak chains need an explicit max_n")
        max_n = len(objs)

    levels = []
    for n in range(max_n + 2):
        cs = gen(objs, leq, n)
        if not cs and not weak:
            break
        levels.append(sorted(cs))
        if n == max_n + 1:
            break

    spaces = []
    offsets = []
    for cs in levels:
        dims = [0] * (D + 1)
        labels = [[] for _ in range(D + 1)]
        offs = {}
        for c in cs:
            F = diagram.spaces[c[0]]
            offs[c] = tuple(dims)
            for d in range(D + 1):
                dims[d] += F.dims[d]
                tag = ">".join(str(x) for x in c)
                labels[d].extend((tag,) + l for l in F.labels[d])
        spaces.append(GradedVectorSpace(field, dims, [tuple(ls) for ls in labels]))
        offsets.append(offs)

    deltas = []
    for n in range(len(levels) - 1):
        src, tgt = spaces[n], spaces[n + 1]
        mats = [mat_zero(tgt.dims[d], src.dims[d], field) for d in range(D + 1)]
        for c in levels[n + 1]:
            F0 = diagram.spaces[c[0]]
            roffs = offsets[n + 1][c]
            for k in range(len(c)):
                face = c[:k] + c[k + 1:]
                if not weak and k == 0 and face not in offsets[n]:
                    continue
                if weak and face not in offsets[n]:
                    continue
                coffs = offsets[n][face]
                if k == 0:
                    blk = diagram.composite(c[0], c[1]).mats
                    sign = field.one()
                else:
                    blk = [mat_id(F0.dims[d], field) for d in range(D + 1)]
                    sign = field.conv(-1 if k % 2 else 1)
                for d in range(D + 1):
                    r0, c0 = roffs[d], coffs[d]
                    for i, row in enumerate(blk[d]):
                        for j, v in enumerate(row):
                            if v != 0:
                                # distinct faces of a weak chain can coincide
                                mats[d][r0 + i][c0 + j] = field.add(
                                    mats[d][r0 + i][c0 + j], field.mul(sign, v)
                                )
        deltas.append(GradedLinearMap(src, tgt, mats))

    if check:
        for a, b in zip(deltas, deltas[1:]):
            if not b.compose(a).is_zero():
                raise AssertionError("differential does not square to zero")
    return CochainComplex(levels, spaces, deltas)


def higher_limits(
    diagram: PosetDiagram,
    objects=None,
    weak: bool = False,
    max_n: int | None = None,
    check: bool = True,
) -> list[tuple[int, ...]]:
    """Per-level, per-internal-degree dimensions of the higher limits.

    Entry n is a tuple of length D+1 giving dim lim^n in each internal
    degree; trailing all-zero levels are trimmed (level 0 always kept).
    """
    cx = cochain_complex(diagram, objects=objects, weak=weak, max_n=max_n, check=check)
    D = diagram.truncation
    want = len(cx.deltas) if weak else len(cx.spaces)
    if max_n is not None:
        want = min(want, max_n + 1)
    ranks = []
    for dl in cx.deltas:
        ranks.append([rank(dl.mats[d], dl.source.dims[d], diagram.field) for d in range(D + 1)])
    out = []
    for n in range(want):
        dims = []
        for d in range(D + 1):
            total = cx.spaces[n].dims[d] if n < len(cx.spaces) else 0
            r_out = ranks[n][d] if n < len(ranks) else 0
            r_in = ranks[n - 1][d] if n >= 1 else 0
            dims.append(total - r_out - r_in)
        out.append(tuple(dims))
    while len(out) > 1 and all(v == 0 for v in out[-1]):
        out.pop()
    return out


def lim0_basis(diagram: PosetDiagram):
    """Kernel of the first differential with labeled coordinates.

    Returns a list over internal degrees of (labels, basis vectors).
    """
    cx = cochain_complex(diagram)
    out = []
    if not cx.deltas:
        for d in range(diagram.truncation + 1):
            n = cx.spaces[0].dims[d]
            vecs = [[diagram.field.one() if j == i else diagram.field.zero() for j in range(n)] for i in range(n)]
            out.append((cx.spaces[0].labels[d], vecs))
        return out
    rk = cx.deltas[0].rank_kernel()
    for d, (_, _, kb) in enumerate(rk):
        out.append((cx.spaces[0].labels[d], kb))
    return out


def verify_lower_factoring(P: PointedPoset):
    """Look for pairs with a common upper bound but no maximal lower bound
    realizing the vertex-set intersection.

    Returns None when every such pair factors, else the first offending
    triple (x, y, z) with z a common upper bound.
    """
    objs = sorted(P.objects, key=str)
    for i, x in enumerate(objs):
        for y in objs[i + 1:]:
            b = P.bounds({x, y})
            if not b.min_upper:
                continue
            goal = P.vertex_set(x) & P.vertex_set(y)
            if not any(P.vertex_set(w) == goal for w in b.max_lower):
                return (x, y, b.min_upper[0])
    return None
