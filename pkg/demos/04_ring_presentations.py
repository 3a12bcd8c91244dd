"""Presenting the level-zero limit as a quotient of a polynomial ring.

For a polyhedral poset the degree-0 limit of the augmentation tensor
diagram is a graded commutative ring, and one wants generators and
relations for it: one polynomial variable per object (the base excluded),
graded by vertex count, with an ideal cutting out the kernel of the
evaluation that sends an object's variable to the product of its vertex
generators over its up-set.

Run with ``python3 demos/04_ring_presentations.py``.
"""

from posetprod import PointedPoset, ideal_generators, presentation_report, quotient_dims, simplicial_transform
from posetprod.fixtures import cube, simplex
from posetprod.stanley import hilbert_from_fvector, in_kernel, simplicial_ideal_generators
from posetprod.transform import f_vector


def show(poly):
    """A relation is a dict {monomial tuple: coefficient}."""
    parts = []
    for mono, c in sorted(poly.items()):
        term = "*".join(mono) if mono else "1"
        parts.append(f"{'+' if c > 0 else '-'} {abs(c) if abs(c) != 1 or not mono else ''}{term}")
    return " ".join(parts).lstrip("+ ")


# On the triangle the presentation is the classical one: a face variable
# equals the product of its vertices, and products of faces with no common
# upper bound vanish.  The quotient is the polynomial ring on the three
# vertices.
tri = simplex(2)
pres = ideal_generators(tri)
print("triangle generators:", pres.generators)
print("degrees:", [pres.degrees[g] for g in pres.generators])
for rel, tag in zip(pres.relations, pres.tags):
    print(f"  [{tag[0]}] {show(rel)} = 0")

D = 4
print("quotient dims:", quotient_dims(pres, D))

# The simplicial route (pairwise meets only) produces the same ideal on
# simplicial posets.
spres = simplicial_ideal_generators(tri)
print("simplicial route agrees:", quotient_dims(spres, D) == quotient_dims(pres, D))

# The face-count formula sum_i f_i t^(i+1) / (1-t)^(i+1) gives the same
# Hilbert function from the f-vector alone, for simplicial posets.
print("from the f-vector:", hilbert_from_fvector(f_vector(tri), D))

# ``presentation_report`` computes the quotient AND the limit it is meant
# to present, and says whether they agree.  For the square they do; many
# candidate sets are skipped (their identities would be inhomogeneous),
# but the surviving relations already cut the quotient down to the limit.
square = cube(2)
rep = presentation_report(square, D=D)
print("\nsquare:", rep)

# The square itself is not simplicial, so the face-count formula does not
# apply to it directly; its simplicial transform is, has the same limit
# ring, and the formula then reproduces the dimensions above.
sq_t = simplicial_transform(square).poset
print("via the transform's f-vector:", hilbert_from_fvector(f_vector(sq_t), D))

# Kernel membership of individual polynomials is decidable directly.  In
# the full square the two horizontal edges multiply to the top face's
# variable; on the boundary (top face deleted) the same product vanishes
# outright because the edges no longer have a common upper bound.
print("0u * 1u - uu vanishes in the square:", in_kernel(square, {("0u", "1u"): 1, ("uu",): -1}, D))
boundary = square.sub_poset("uu", "delete")
print("0u * 1u vanishes on the boundary:", in_kernel(boundary, {("0u", "1u"): 1}, D))

# The relation family is honest about its limits.  Below, {v1, v2} has TWO
# minimal upper bounds e and t with different vertex sets, so the
# inclusion-exclusion identity for that set would be inhomogeneous
# (v1*v2 = e + t mixes degrees 2 and 3).  The set is skipped, and the
# quotient comes out strictly larger than the limit; the report says so
# instead of hiding it.
two_branch = PointedPoset(
    ["*", "v1", "v2", "v3", "e", "t"],
    "*",
    [
        ("*", "v1"), ("*", "v2"), ("*", "v3"),
        ("v1", "e"), ("v2", "e"),
        ("v1", "t"), ("v2", "t"), ("v3", "t"),
    ],
)
rep2 = presentation_report(two_branch, D=D)
print("\ntwo-branch report:")
for k, v in rep2.items():
    print(f"  {k}: {v}")

# The gap is real, not an artifact of a small generating bound: the kernel
# element e*(v1*v2 - e) is not generated by any catalogued relation, yet it
# evaluates to zero in the limit.
witness = {("e", "v1", "v2"): 1, ("e", "e"): -1}
print("e*(v1*v2 - e) lies in the kernel:", in_kernel(two_branch, witness, D))
