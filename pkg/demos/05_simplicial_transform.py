"""Turning a polyhedral poset into a simplicial one, with face counts.

The transform replaces each object by the poset of subsets of its vertex
set and glues the copies along the original order, tracking connected
components so that parallel faces stay distinct.  For regular posets the
face counts of the result are determined by those of the input through
correction counts nu_{i,n}: the number of (i+1)-subsets of an (n+1)-vertex
face that do not already span a face.

Run with ``python3 demos/05_simplicial_transform.py``.
"""

from posetprod import classify, f_transform_predict, f_vector, simplicial_transform
from posetprod.fixtures import cube, fix_b, simplex
from posetprod.transform import check_embedding, nu

# The f-vector counts objects by vertex-set size (rank).  The square has
# four vertices, four edges, no triangles, one 4-vertex face.
square = cube(2)
print("f(square) =", f_vector(square))

# The transform triangulates: each edge keeps its two vertices, and the
# square's top face becomes the full subset lattice on its four corners,
# adding the two diagonals, four triangles and one tetrahedron-like top.
t = simplicial_transform(square)
print("f(s(square)) =", f_vector(t.poset))
print("s(square) is simplicial:", classify(t.poset).simplicial)

# Objects embed via x -> [x, V(x)]; on reduced inputs this is injective
# and order-preserving.
print("embedding:", check_embedding(square))

# The correction counts are computable in two independent ways: directly
# (count subsets of a rank-n object spanning no face) or by a recursion on
# the f-vector of the boundary of such an object.  Regularity makes the
# answer independent of which object is chosen.
for i in (1, 2, 3):
    d = nu(square, i, 3, method="direct")
    r = nu(square, i, 3, method="recursive")
    print(f"nu_{i},3 = {d} (direct) = {r} (recursive)")

# With the corrections in hand the transformed f-vector is a formula in
# the original one; ``f_transform_predict`` evaluates it and matches the
# direct construction.
print("predicted:", f_transform_predict(square))
print("matches:  ", f_transform_predict(square) == f_vector(t.poset))

# Simplicial inputs are fixed points: every nu vanishes and the transform
# only renames.
tri = simplex(2)
print("\nf(triangle) =", f_vector(tri), "->", f_vector(simplicial_transform(tri).poset))

# The bigon shows why components matter: its two edges share both
# endpoints, and the transform keeps them as two distinct classes (two
# parallel 1-simplices) rather than merging them.
bigon = fix_b()
tb = simplicial_transform(bigon)
print("\nbigon classes:")
for name, (S, members) in sorted(tb.classes.items()):
    print(f"  {name}: subset {sorted(S)} carried by {members}")

# The 3-cube is regular, so the prediction covers it as well; the result
# of transforming is the full subset lattice on its eight vertices.
c3 = cube(3)
print("\nf(cube_3) =", f_vector(c3))
print("f(s(cube_3)) =", f_vector(simplicial_transform(c3).poset))
print("predicted:   ", f_transform_predict(c3))
