import random
from fractions import Fraction

import pytest

from posetprod.errors import MixedFields, MixedTruncation
from posetprod.linalg import (
    F2,
    QQ,
    FieldSpec,
    GradedLinearMap,
    GradedVectorSpace,
    _rank_f2_packed,
    _rank_modp_numpy,
    find_section,
    kernel_basis,
    kron,
    mat_id,
    mat_mul,
    rank,
    rref,
    solve_matrix,
    sparse_rank,
    tensor_collection,
    tensor_maps,
    truncated_polynomial,
)


def test_fieldspec_parse_and_arith():
    assert FieldSpec.parse("q") == QQ
    assert FieldSpec.parse("2") == F2
    assert str(FieldSpec.parse("101")) == "101"
    with pytest.raises(ValueError):
        FieldSpec.Fp(6)
    f5 = FieldSpec.Fp(5)
    assert f5.conv(Fraction(1, 2)) == 3
    assert f5.div(1, 2) == 3
    assert QQ.conv("2/3") == Fraction(2, 3)
    with pytest.raises(ZeroDivisionError):
        f5.conv(Fraction(1, 5))


def test_rref_and_rank_known_matrix():
    # difference matrix of the commuting square; one relation among the rows
    m = [[-1, 0, 1, 0], [-1, 0, 0, 1], [0, -1, 1, 0], [0, -1, 0, 1]]
    assert rank(m, 4, QQ) == 3
    kb = kernel_basis(m, 4, QQ)
    assert len(kb) == 1
    v = kb[0]
    scale = next(x for x in v if x != 0)
    assert [x / scale for x in v] == [1, 1, 1, 1]


def test_kernel_of_empty_and_zero():
    assert kernel_basis([], 3, QQ) == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    assert rank([[0, 0]], 2, QQ) == 0
    assert len(kernel_basis([[0, 0]], 2, QQ)) == 2


def test_solve_matrix():
    A = [[1, 2], [3, 4]]
    X = solve_matrix(A, mat_id(2, QQ), QQ)
    assert mat_mul(A, X, QQ) == mat_id(2, QQ)
    # inconsistent system
    assert solve_matrix([[1, 1], [1, 1]], [[1], [0]], QQ) is None
    # underdetermined: any solution acceptable
    X = solve_matrix([[1, 1]], [[5]], QQ)
    assert mat_mul([[1, 1]], X, QQ) == [[5]]


def test_fast_rank_paths_agree_with_generic():
    rng = random.Random(7)
    for _ in range(40):
        nr = rng.randrange(1, 8)
        nc = rng.randrange(1, 8)
        m = [[rng.randrange(-2, 3) for _ in range(nc)] for _ in range(nr)]
        r_q = len(rref(m, nc, QQ)[1])
        # entries are tiny so no minor can vanish mod a large prime
        assert _rank_modp_numpy(m, nc, 1009) == r_q
        rows = [{j: Fraction(x) for j, x in enumerate(row) if x} for row in m]
        assert sparse_rank(rows, QQ) == r_q
        r2 = _rank_f2_packed([[x % 2 for x in row] for row in m], nc)
        assert r2 == len(rref([[x % 2 for x in row] for row in m], nc, F2)[1])
        assert r2 <= r_q


def test_graded_space_and_mixing_errors():
    a = GradedVectorSpace(QQ, (1, 2, 0))
    b = GradedVectorSpace(F2, (1, 2, 0))
    c = GradedVectorSpace(QQ, (1, 2))
    with pytest.raises(MixedFields):
        tensor_collection([a, b])
    with pytest.raises(MixedTruncation):
        tensor_collection([a, c])
    assert a.truncation == 2
    assert a.total_dim() == 3
    with pytest.raises(ValueError):
        GradedVectorSpace(QQ, (2,), ((("x",),),))


def test_unit_and_truncated_polynomial():
    u = GradedVectorSpace.unit(QQ, 5)
    assert u.dims == (1, 0, 0, 0, 0, 0)
    m, aug = truncated_polynomial("v", 2, 5)
    assert m.dims == (1, 0, 1, 0, 1, 0)
    assert m.labels[2] == (("v^1",),)
    assert m.labels[4] == (("v^2",),)
    assert aug.source is m and aug.target.dims == u.dims
    s = find_section(aug)
    assert s is not None
    assert aug.compose(s).is_identity()
    m1, _ = truncated_polynomial("t", 1, 3)
    assert m1.dims == (1, 1, 1, 1)


def test_tensor_dims_are_convolutions():
    a = GradedVectorSpace(QQ, (1, 2, 1))
    b = GradedVectorSpace(QQ, (1, 0, 3))
    t = tensor_collection([a, b])
    assert t.dims == (1, 2, 1 + 3)
    # triple product dims match iterated convolution in any order
    c = GradedVectorSpace(QQ, (2, 1, 0))
    t1 = tensor_collection([a, b, c])
    t2 = tensor_collection([c, b, a])
    assert t1.dims == t2.dims
    u = GradedVectorSpace.unit(QQ, 2)
    assert tensor_collection([u, a]).dims == a.dims
    assert tensor_collection([u, a]).labels == a.labels


def test_tensor_labels_concatenate():
    a = GradedVectorSpace(QQ, (1, 1), ((("x0",),), (("x1",),)))
    b = GradedVectorSpace(QQ, (1, 1), ((("y0",),), (("y1",),)))
    t = tensor_collection([a, b])
    assert t.labels[1] == (("x0", "y1"), ("x1", "y0"))


def test_tensor_maps_match_label_order():
    a = GradedVectorSpace(QQ, (1, 1), ((("x0",),), (("x1",),)))
    b = GradedVectorSpace(QQ, (1, 2), ((("y0",),), (("y1",), ("y2",))))
    f = GradedLinearMap.identity(a)
    g = GradedLinearMap(b, b, [[[1]], [[0, 1], [1, 0]]])  # swap y1,y2
    t = tensor_maps([f, g])
    assert t.source.dims == (1, 3)
    # degree 1 basis is (x0y1, x0y2, x1y0); swap exchanges the first two
    assert t.mats[1] == [[0, 1, 0], [1, 0, 0], [0, 0, 1]]
    # functoriality: (f.f') tensor (g.g') == (f tensor g).(f' tensor g')
    g2 = GradedLinearMap(b, b, [[[2]], [[1, 1], [0, 1]]])
    lhs = tensor_maps([f.compose(f), g.compose(g2)])
    rhs = tensor_maps([f, g]).compose(tensor_maps([f, g2]))
    assert lhs == rhs


def test_tensor_of_maps_random_functoriality():
    rng = random.Random(21)
    for _ in range(10):
        D = 2
        dims1 = [rng.randrange(0, 3) for _ in range(D + 1)]
        dims2 = [rng.randrange(0, 3) for _ in range(D + 1)]
        s1 = GradedVectorSpace(QQ, dims1)
        s2 = GradedVectorSpace(QQ, dims2)

        def rmap(sp):
            return GradedLinearMap(
                sp, sp,
                [[[rng.randrange(-2, 3) for _ in range(n)] for _ in range(n)] for n in sp.dims],
            )

        f1, f2 = rmap(s1), rmap(s1)
        g1, g2 = rmap(s2), rmap(s2)
        lhs = tensor_maps([f1.compose(f2), g1.compose(g2)])
        rhs = tensor_maps([f1, g1]).compose(tensor_maps([f2, g2]))
        assert lhs == rhs


def test_graded_map_shapes_and_ops():
    a = GradedVectorSpace(QQ, (2, 1))
    idm = GradedLinearMap.identity(a)
    z = GradedLinearMap.zero(a, a)
    assert idm.is_identity() and not idm.is_zero()
    assert z.is_zero()
    assert idm.sub(idm) == z
    assert idm.add(z) == idm
    with pytest.raises(ValueError):
        GradedLinearMap(a, a, [[[1]], [[1]]])
    rk = idm.rank_kernel()
    assert [r for r, _, _ in rk] == [2, 1]
    assert [k for _, k, _ in rk] == [0, 0]


def test_find_section_absent_for_non_surjection():
    a = GradedVectorSpace(QQ, (1, 0))
    b = GradedVectorSpace(QQ, (1, 1))
    f = GradedLinearMap(a, b, [[[1]], [[]]])  # degree 1: 1x0 matrix
    assert find_section(f) is None
    g = GradedLinearMap(b, a, [[[1]], []])  # degree 1: 0x1 matrix
    s = find_section(g)
    assert s is not None and g.compose(s).is_identity()


def test_rank_agrees_over_q_and_large_prime():
    rng = random.Random(5)
    fp = FieldSpec.Fp(1009)
    for _ in range(25):
        nr, nc = rng.randrange(1, 6), rng.randrange(1, 6)
        m = [[rng.randrange(-2, 3) for _ in range(nc)] for _ in range(nr)]
        assert rank(m, nc, QQ) == rank(m, nc, fp)


def test_kron_block_convention():
    A = [[1, 2]]
    B = [[0, 1], [1, 0]]
    K = kron(A, B, QQ)
    assert K == [[0, 1, 0, 2], [1, 0, 2, 0]]
