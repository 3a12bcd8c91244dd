"""Presentations of the level-zero limit ring of a polyhedral poset.

Generators are the non-base objects, graded by vertex count.  Relations come
in three families: covers with equal vertex sets are identified, products
over sets with no common upper bound vanish, and sets S with common upper
bounds satisfy an inclusion-exclusion identity

    prod over odd R in S of (meet R)  =  prod over even R of (meet R) * sum of [vee S]

The identity only evaluates to zero in the limit when every minimal upper
bound z of S satisfies V(z) = union of V over S, so sets failing that test
are skipped and counted; the quotient can then be strictly larger than the
limit.  ``presentation_report`` compares both sides and flags disagreement
instead of hiding it.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field as dc_field
from math import comb

from .errors import NotPolyhedral, NotSimplicial, PreconditionFailed
from .linalg import QQ, FieldSpec, rank
from .polytensor import MorphismCollection, polyhedral_tensor
from .poset import PointedPoset, classify, reduce_poset

Monomial = tuple  # sorted tuple of generator names, with repetition
Polynomial = dict  # Monomial -> coefficient


@dataclass
class RingPresentation:
    generators: tuple
    degrees: dict
    relations: list
    tags: list
    scale: int = 1
    skipped_unsound: int = 0
    bound: int = 2
    meta: dict = dc_field(default_factory=dict)

    def monomial_degree(self, mono: Monomial) -> int:
        return sum(self.degrees[g] for g in mono)

    def to_dict(self) -> dict:
        rels = []
        for poly, tag in zip(self.relations, self.tags):
            terms = sorted(
                ([int(c) if c == int(c) else str(c), list(m)] for m, c in poly.items()),
                key=lambda t: t[1],
            )
            rels.append({"terms": terms, "tag": list(tag)})
        return {
            "generators": list(self.generators),
            "degrees": {g: self.degrees[g] for g in self.generators},
            "relations": rels,
            "scale": self.scale,
            "bound": self.bound,
            "skipped_unsound": self.skipped_unsound,
        }


def _meet_of(P: PointedPoset, S) -> object | None:
    """Iterated pairwise meet; None when some step is not defined."""
    items = sorted(S, key=str)
    cur = items[0]
    for nxt in items[1:]:
        cur = P.meet(cur, nxt)
        if cur is None:
            return None
    return cur


def _add_term(poly: Polynomial, mono: Monomial, coef):
    c = poly.get(mono, 0) + coef
    if c == 0:
        poly.pop(mono, None)
    else:
        poly[mono] = c


def _assert_homogeneous(pres: RingPresentation):
    for poly, tag in zip(pres.relations, pres.tags):
        degs = {pres.monomial_degree(m) for m in poly}
        if len(degs) > 1:
            raise AssertionError(f"inhomogeneous relation from {tag}: degrees {sorted(degs)}")


def _antichains(P: PointedPoset, gens, size: int):
    for S in itertools.combinations(gens, size):
        if all(not P.leq(a, b) and not P.leq(b, a) for a, b in itertools.combinations(S, 2)):
            yield S


def _bound_relation(P: PointedPoset, S, uppers):
    """Inclusion-exclusion identity for a set with minimal upper bounds."""
    base = P.base
    lhs: list = []
    evens: list = []
    for r in range(1, len(S) + 1):
        for R in itertools.combinations(S, r):
            m = _meet_of(P, R)
            if m is None:
                return None
            if m != base:
                (lhs if r % 2 else evens).append(m)
    poly: Polynomial = {}
    _add_term(poly, tuple(sorted(lhs, key=str)), 1)
    for z in uppers:
        _add_term(poly, tuple(sorted(evens + [z], key=str)), -1)
    return poly or None


def ideal_generators(
    P: PointedPoset,
    scale: int = 1,
    bound: int = 3,
    include_vertex_sets: bool = True,
) -> RingPresentation:
    """Relation family for the level-zero limit ring of a polyhedral poset.

    ``bound`` caps the size of the subsets S considered; vertex sets V(x)
    of every object are always included when asked.  Subsets whose minimal
    upper bounds carry extra vertices are skipped (see module docstring) and
    counted in ``skipped_unsound``.
    """
    report = classify(P)
    if not report.polyhedral:
        raise NotPolyhedral(f"witness: {report.witnesses.get('polyhedral')}")
    gens = tuple(sorted((x for x in P.objects if x != P.base), key=str))
    degrees = {g: scale * len(P.vertex_set(g)) for g in gens}
    relations: list = []
    tags: list = []
    skipped = 0

    for x, y in P.covers:
        if x != P.base and P.vertex_set(x) == P.vertex_set(y):
            relations.append({(x,): 1, (y,): -1})
            tags.append(("cover", x, y))

    # bounds and meets must be taken after the cover identifications above,
    # i.e. in the reduction (its objects are a subset of ours)
    R, _ = reduce_poset(P)
    rgens = tuple(sorted((x for x in R.objects if x != R.base), key=str))
    candidates = []
    seen = set()
    for size in range(2, max(2, bound) + 1):
        for S in _antichains(R, rgens, size):
            candidates.append(S)
            seen.add(S)
    if include_vertex_sets:
        for x in rgens:
            S = tuple(sorted(R.vertex_set(x), key=str))
            if len(S) >= 2 and S not in seen:
                if all(not R.leq(a, b) and not R.leq(b, a) for a, b in itertools.combinations(S, 2)):
                    candidates.append(S)
                    seen.add(S)

    for S in sorted(candidates):
        ubs = R.bounds(S).min_upper
        if not ubs:
            # only the inclusion-minimal empty-bound sets are needed
            minimal = all(
                R.bounds(S[:i] + S[i + 1:]).min_upper or len(S) == 2
                for i in range(len(S))
            )
            if minimal:
                relations.append({tuple(sorted(S)): 1})
                tags.append(("no-upper", *S))
            continue
        union = set()
        for w in S:
            union |= R.vertex_set(w)
        if any(R.vertex_set(z) != union for z in ubs):
            skipped += 1
            continue
        poly = _bound_relation(R, S, ubs)
        if poly:
            relations.append(poly)
            tags.append(("bound", *S))

    pres = RingPresentation(
        generators=gens,
        degrees=degrees,
        relations=relations,
        tags=tags,
        scale=scale,
        skipped_unsound=skipped,
        bound=bound,
    )
    _assert_homogeneous(pres)
    return pres


def simplicial_ideal_generators(P: PointedPoset, scale: int = 1) -> RingPresentation:
    """Pairwise face-ring relations; on a simplicial poset the minimal upper
    bounds of a pair never carry extra vertices, so no set is skipped."""
    report = classify(P)
    if not report.simplicial:
        raise NotSimplicial(f"witness: {report.witnesses.get('simplicial')}")
    pres = ideal_generators(P, scale=scale, bound=2, include_vertex_sets=False)
    if pres.skipped_unsound:
        raise AssertionError("pair with extra vertices on a simplicial poset")
    return pres


def _monomials_of_degree(gens, degrees, d: int):
    """All monomials of weighted degree d, as sorted generator tuples."""
    out = []

    def rec(i, remaining, acc):
        if remaining == 0:
            out.append(tuple(acc))
            return
        if i == len(gens):
            return
        g = gens[i]
        w = degrees[g]
        rec(i + 1, remaining, acc)
        k = 1
        while w * k <= remaining:
            rec(i + 1, remaining - w * k, acc + [g] * k)
            k += 1

    rec(0, d, [])
    return sorted(out)


def quotient_dims(pres: RingPresentation, D: int, field: FieldSpec = QQ):
    """Dimensions of the graded quotient by the relation ideal, degrees 0..D."""
    gens = pres.generators
    dims = []
    for d in range(D + 1):
        basis = _monomials_of_degree(gens, pres.degrees, d)
        index = {m: i for i, m in enumerate(basis)}
        rows = []
        for poly in pres.relations:
            any_mono = next(iter(poly))
            e = pres.monomial_degree(any_mono)
            if e > d:
                continue
            for m in _monomials_of_degree(gens, pres.degrees, d - e):
                row = [field.zero()] * len(basis)
                for mono, coef in poly.items():
                    prod = tuple(sorted(mono + m))
                    row[index[prod]] = field.add(row[index[prod]], field.conv(coef))
                if any(x != 0 for x in row):
                    rows.append(row)
        r = rank(rows, len(basis), field) if rows else 0
        dims.append(len(basis) - r)
    return tuple(dims)


def hilbert_from_fvector(f, D: int, scale: int = 1):
    """Graded dimensions determined by a face-count vector: degree d holds
    sum over i of f[i] * C(d-1, i) once degrees are divided by the scale."""
    dims = [1]
    for d in range(1, D + 1):
        if d % scale:
            dims.append(0)
            continue
        e = d // scale
        dims.append(sum(fi * comb(e - 1, i) for i, fi in enumerate(f)))
    return tuple(dims)


def pi_evaluate(P: PointedPoset, poly: Polynomial, D: int, scale: int = 1):
    """Evaluate a polynomial in the object generators inside the limit.

    Works on the reduction of P: each generator maps to the monomial on its
    vertex set, supported on the objects above it.  Returns a dict keyed by
    object of the reduced poset, with exponent-vector components.
    """
    R, proj = reduce_poset(P)
    verts = sorted(R.vertices, key=str)
    out: dict = {y: {} for y in sorted(R.objects, key=str)}
    for mono, coef in poly.items():
        imgs = [proj[g] for g in mono]
        e = Counter()
        for g in imgs:
            for v in R.vertex_set(g):
                e[v] += 1
        if scale * sum(e.values()) > D:
            continue
        key = tuple(e.get(v, 0) for v in verts)
        support = [y for y in R.objects if all(R.leq(g, y) for g in imgs)]
        for y in support:
            comp = out[y]
            c = comp.get(key, 0) + coef
            if c == 0:
                comp.pop(key, None)
            else:
                comp[key] = c
    return {y: comp for y, comp in out.items() if comp}


def in_kernel(P: PointedPoset, poly: Polynomial, D: int, scale: int = 1) -> bool:
    """Whether the polynomial evaluates to zero in the limit, up to the
    truncation degree."""
    return not pi_evaluate(P, poly, D, scale=scale)


def presentation_report(
    P: PointedPoset,
    D: int = 4,
    scale: int = 1,
    bound: int = 3,
    auto_raise: bool = True,
    field: FieldSpec = QQ,
) -> dict:
    """Quotient dimensions against the limit dimensions, with honest
    disagreement reporting.

    On mismatch the subset-size bound is raised step by step (up to the
    number of generators) before giving up; the returned dict records both
    dimension vectors, the bound that was used, and how many subsets were
    skipped as unsound.
    """
    col = MorphismCollection.augmentation(P.vertices, D=D, gen_degree=scale, field=field)
    lims = polyhedral_tensor(P, col)
    limit_dims = tuple(lims[0]) if lims else (0,) * (D + 1)
    n_gens = len(P.objects) - 1
    b = bound
    while True:
        pres = ideal_generators(P, scale=scale, bound=b)
        qdims = quotient_dims(pres, D, field=field)
        agree = qdims == limit_dims
        if agree or not auto_raise or b >= n_gens:
            break
        b += 1
    return {
        "quotient_dims": list(qdims),
        "limit_dims": list(limit_dims),
        "agree": agree,
        "bound_used": b,
        "skipped_unsound": pres.skipped_unsound,
        "higher_limits_vanish": all(all(v == 0 for v in l) for l in lims[1:]),
    }
