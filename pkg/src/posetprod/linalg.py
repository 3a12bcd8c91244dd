"""Exact graded linear algebra over Q or a prime field.

Vector spaces are graded with a hard truncation degree D; maps are
degree-preserving and stored as one dense matrix per degree (rows index the
target basis).  All arithmetic is exact: Fraction entries over Q, canonical
representatives 0..p-1 over F_p.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import MixedFields, MixedTruncation


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Q (kind="Q") or the prime field F_p (kind="Fp")."""

    kind: str
    p: int | None = None

    @classmethod
    def Q(cls) -> "FieldSpec":
        return cls("Q", None)

    @classmethod
    def Fp(cls, p: int) -> "FieldSpec":
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        return cls("Fp", p)

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        t = str(text).strip().lower()
        if t in ("q", "rational", "rationals"):
            return cls.Q()
        return cls.Fp(int(t))

    def __str__(self):
        return "q" if self.kind == "Q" else str(self.p)

    # -- arithmetic -----------------------------------------------------

    def conv(self, x):
        """Coerce an int, Fraction or 'a/b' string into the field."""
        if isinstance(x, str):
            x = Fraction(x)
        if self.kind == "Q":
            return Fraction(x)
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ZeroDivisionError(f"denominator of {x} vanishes mod {self.p}")
            return (x.numerator * pow(x.denominator, -1, self.p)) % self.p
        return int(x) % self.p

    def zero(self):
        return Fraction(0) if self.kind == "Q" else 0

    def one(self):
        return Fraction(1) if self.kind == "Q" else 1

    def add(self, a, b):
        return a + b if self.kind == "Q" else (a + b) % self.p

    def sub(self, a, b):
        return a - b if self.kind == "Q" else (a - b) % self.p

    def mul(self, a, b):
        return a * b if self.kind == "Q" else (a * b) % self.p

    def neg(self, a):
        return -a if self.kind == "Q" else (-a) % self.p

    def inv(self, a):
        if self.kind == "Q":
            return Fraction(1) / a
        return pow(a, -1, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))


QQ = FieldSpec.Q()
F2 = FieldSpec.Fp(2)


# -- plain matrices (lists of row lists) --------------------------------


def mat_zero(nrows: int, ncols: int, field: FieldSpec):
    z = field.zero()
    return [[z] * ncols for _ in range(nrows)]


def mat_id(n: int, field: FieldSpec):
    m = mat_zero(n, n, field)
    for i in range(n):
        m[i][i] = field.one()
    return m


def mat_conv(rows, field: FieldSpec):
    return [[field.conv(x) for x in row] for row in rows]


def mat_mul(A, B, field: FieldSpec):
    n, k = len(A), len(B)
    m = len(B[0]) if B else 0
    if A and len(A[0]) != k:
        raise ValueError(f"shape mismatch {len(A)}x{len(A[0])} @ {k}x{m}")
    out = mat_zero(n, m, field)
    for i in range(n):
        Ai = A[i]
        oi = out[i]
        for t in range(k):
            a = Ai[t]
            if a == 0:
                continue
            Bt = B[t]
            for j in range(m):
                b = Bt[j]
                if b != 0:
                    oi[j] = field.add(oi[j], field.mul(a, b))
    return out


def mat_add(A, B, field: FieldSpec):
    return [[field.add(a, b) for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_sub(A, B, field: FieldSpec):
    return [[field.sub(a, b) for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def kron(A, B, field: FieldSpec):
    """Kronecker product; row/column order is (row_A, row_B) lexicographic."""
    na, nb = len(A), len(B)
    ma = len(A[0]) if A else 0
    mb = len(B[0]) if B else 0
    out = mat_zero(na * nb, ma * mb, field)
    for i in range(na):
        for t in range(nb):
            row = out[i * nb + t]
            for j in range(ma):
                a = A[i][j]
                if a == 0:
                    continue
                for s in range(mb):
                    b = B[t][s]
                    if b != 0:
                        row[j * mb + s] = field.mul(a, b)
    return out


def rref(rows, ncols: int, field: FieldSpec):
    """Reduced row echelon form; returns (reduced rows, pivot column list)."""
    R = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pr = None
        for i in range(r, len(R)):
            if R[i][c] != 0:
                pr = i
                break
        if pr is None:
            continue
        R[r], R[pr] = R[pr], R[r]
        inv = field.inv(R[r][c])
        R[r] = [field.mul(inv, x) for x in R[r]]
        for i in range(len(R)):
            if i != r and R[i][c] != 0:
                f = R[i][c]
                R[i] = [field.sub(x, field.mul(f, y)) for x, y in zip(R[i], R[r])]
        pivots.append(c)
        r += 1
        if r == len(R):
            break
    return R, pivots


def rank(rows, ncols: int, field: FieldSpec) -> int:
    if not rows or ncols == 0:
        return 0
    nr = len(rows)
    if field.kind == "Fp" and nr * ncols > 6400:
        if field.p == 2:
            return _rank_f2_packed(rows, ncols)
        return _rank_modp_numpy(rows, ncols, field.p)
    if field.kind == "Q" and nr * ncols > 6400:
        return _rank_q_sparse(rows, ncols)
    return len(rref(rows, ncols, field)[1])


def kernel_basis(rows, ncols: int, field: FieldSpec):
    """Basis of the right kernel as a list of length-ncols vectors."""
    if ncols == 0:
        return []
    if not rows:
        return [
            [field.one() if j == i else field.zero() for j in range(ncols)]
            for i in range(ncols)
        ]
    R, pivots = rref(rows, ncols, field)
    pivset = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        v = [field.zero()] * ncols
        v[free] = field.one()
        for i, p in enumerate(pivots):
            v[p] = field.neg(R[i][free])
        basis.append(v)
    return basis


def solve_matrix(A, B, field: FieldSpec):
    """One solution X of A X = B, or None.  A is n x m, B is n x k."""
    n = len(A)
    m = len(A[0]) if A else 0
    k = len(B[0]) if B else 0
    aug = [list(A[i]) + list(B[i]) for i in range(n)]
    R, pivots = rref(aug, m + k, field)
    if any(p >= m for p in pivots):
        return None
    X = mat_zero(m, k, field)
    for i, p in enumerate(pivots):
        for j in range(k):
            X[p][j] = R[i][m + j]
    return X


def _rank_modp_numpy(rows, ncols: int, p: int) -> int:
    M = np.array([[int(x) % p for x in r] for r in rows], dtype=np.int64)
    nr = M.shape[0]
    r = 0
    for c in range(ncols):
        if r == nr:
            break
        col = M[r:, c]
        nz = np.nonzero(col)[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            M[[r, i]] = M[[i, r]]
        inv = pow(int(M[r, c]), -1, p)
        M[r, c:] = (M[r, c:] * inv) % p
        below = M[r + 1:, c]
        hit = np.nonzero(below)[0]
        if hit.size:
            idx = r + 1 + hit
            M[idx, c:] = (M[idx, c:] - np.outer(M[idx, c], M[r, c:])) % p
        r += 1
    return r


def _rank_f2_packed(rows, ncols: int) -> int:
    nwords = (ncols + 63) // 64
    packed = []
    for row in rows:
        w = [0] * nwords
        for j, x in enumerate(row):
            if int(x) & 1:
                w[j >> 6] |= 1 << (j & 63)
        packed.append(w)
    rank_ = 0
    pivot_rows: list[list[int]] = []
    pivot_cols: list[int] = []
    for row in packed:
        for pc, pr in zip(pivot_cols, pivot_rows):
            if row[pc >> 6] >> (pc & 63) & 1:
                for t in range(nwords):
                    row[t] ^= pr[t]
        col = None
        for t in range(nwords):
            if row[t]:
                col = (t << 6) + (row[t] & -row[t]).bit_length() - 1
                break
        if col is not None:
            pivot_rows.append(row)
            pivot_cols.append(col)
            rank_ += 1
    return rank_


def _rank_q_sparse(rows, ncols: int) -> int:
    """Rank over Q by sparse fraction-free elimination on dict rows."""
    sparse = []
    for row in rows:
        if isinstance(row, dict):
            d = {j: Fraction(x) for j, x in row.items() if x != 0}
        else:
            d = {j: Fraction(x) for j, x in enumerate(row) if x != 0}
        if d:
            sparse.append(d)
    return sparse_rank(sparse, QQ)


def sparse_rank(rows: list[dict], field: FieldSpec) -> int:
    """Rank of a matrix given as dict rows {col: value}; destroys input."""
    rows = [dict(r) for r in rows if r]
    by_col: dict[int, set[int]] = {}
    alive = set(range(len(rows)))
    for i, r in enumerate(rows):
        for c in r:
            by_col.setdefault(c, set()).add(i)
    rank_ = 0
    while alive:
        # pick the pivot with the shortest row, then fewest column entries
        best = None
        for i in alive:
            r = rows[i]
            ln = len(r)
            if best is None or ln < best[0]:
                c = min(r, key=lambda col: (len(by_col.get(col, ())), col))
                best = (ln, i, c)
                if ln == 1:
                    break
        _, pi, pc = best
        prow = rows[pi]
        alive.discard(pi)
        rank_ += 1
        pval = prow[pc]
        targets = [i for i in by_col.get(pc, ()) if i in alive]
        for i in targets:
            r = rows[i]
            f = field.div(r[pc], pval)
            for c, v in prow.items():
                nv = field.sub(r.get(c, field.zero()), field.mul(f, v))
                if nv == 0:
                    if c in r:
                        del r[c]
                        s = by_col.get(c)
                        if s:
                            s.discard(i)
                else:
                    if c not in r:
                        by_col.setdefault(c, set()).add(i)
                    r[c] = nv
            if not r:
                alive.discard(i)
        for c in prow:
            s = by_col.get(c)
            if s:
                s.discard(pi)
    return rank_


# -- graded structures ---------------------------------------------------


class GradedVectorSpace:
    """Finite dimensional graded vector space truncated above degree D.

    ``labels[d]`` names the basis of degree d; labels are tuples so tensor
    factors stay readable.
    """

    def __init__(self, field: FieldSpec, dims, labels=None):
        self.field = field
        self.dims = tuple(int(d) for d in dims)
        if labels is None:
            labels = tuple(
                tuple((f"e{d}.{i}",) for i in range(self.dims[d]))
                for d in range(len(self.dims))
            )
        self.labels = tuple(tuple(tuple(l) for l in ls) for ls in labels)
        if len(self.labels) != len(self.dims):
            raise ValueError("labels and dims length differ")
        for d, ls in zip(self.dims, self.labels):
            if len(ls) != d:
                raise ValueError("label count does not match dimension")

    @property
    def truncation(self) -> int:
        return len(self.dims) - 1

    @classmethod
    def unit(cls, field: FieldSpec, D: int) -> "GradedVectorSpace":
        return cls(field, (1,) + (0,) * D, (((),),) + ((),) * D)

    @classmethod
    def zero_space(cls, field: FieldSpec, D: int) -> "GradedVectorSpace":
        return cls(field, (0,) * (D + 1), ((),) * (D + 1))

    def total_dim(self) -> int:
        return sum(self.dims)

    def __eq__(self, other):
        if not isinstance(other, GradedVectorSpace):
            return NotImplemented
        return self.field == other.field and self.dims == other.dims and self.labels == other.labels

    def __repr__(self):
        return f"GradedVectorSpace(dims={self.dims})"


def _check_pair(a: "GradedVectorSpace", b: "GradedVectorSpace"):
    if a.field != b.field:
        raise MixedFields(f"{a.field} vs {b.field}")
    if a.truncation != b.truncation:
        raise MixedTruncation(f"D={a.truncation} vs D={b.truncation}")


class GradedLinearMap:
    """Degree-preserving linear map; ``mats[d]`` has shape
    (target.dims[d], source.dims[d])."""

    def __init__(self, source: GradedVectorSpace, target: GradedVectorSpace, mats):
        _check_pair(source, target)
        self.field = source.field
        self.source = source
        self.target = target
        self.mats = []
        for d in range(len(source.dims)):
            m = [list(map(self.field.conv, row)) for row in mats[d]]
            if len(m) != target.dims[d] or any(len(r) != source.dims[d] for r in m):
                raise ValueError(
                    f"degree {d}: matrix shape {len(m)}x? does not match "
                    f"{target.dims[d]}x{source.dims[d]}"
                )
            self.mats.append(m)

    @classmethod
    def identity(cls, space: GradedVectorSpace) -> "GradedLinearMap":
        return cls(space, space, [mat_id(n, space.field) for n in space.dims])

    @classmethod
    def zero(cls, source: GradedVectorSpace, target: GradedVectorSpace) -> "GradedLinearMap":
        _check_pair(source, target)
        return cls(
            source, target,
            [mat_zero(target.dims[d], source.dims[d], source.field) for d in range(len(source.dims))],
        )

    def compose(self, other: "GradedLinearMap") -> "GradedLinearMap":
        """self after other."""
        if other.target.dims != self.source.dims:
            raise ValueError("composition shape mismatch")
        _check_pair(self.source, other.source)
        mats = [mat_mul(a, b, self.field) for a, b in zip(self.mats, other.mats)]
        return GradedLinearMap(other.source, self.target, mats)

    def add(self, other: "GradedLinearMap") -> "GradedLinearMap":
        return GradedLinearMap(
            self.source, self.target,
            [mat_add(a, b, self.field) for a, b in zip(self.mats, other.mats)],
        )

    def sub(self, other: "GradedLinearMap") -> "GradedLinearMap":
        return GradedLinearMap(
            self.source, self.target,
            [mat_sub(a, b, self.field) for a, b in zip(self.mats, other.mats)],
        )

    def is_zero(self) -> bool:
        return all(all(all(x == 0 for x in row) for row in m) for m in self.mats)

    def is_identity(self) -> bool:
        if self.source.dims != self.target.dims:
            return False
        return all(m == mat_id(n, self.field) for m, n in zip(self.mats, self.source.dims))

    def __eq__(self, other):
        if not isinstance(other, GradedLinearMap):
            return NotImplemented
        return (
            self.source.dims == other.source.dims
            and self.target.dims == other.target.dims
            and self.mats == other.mats
        )

    def rank_kernel(self):
        """Per-degree (rank, kernel dimension, kernel basis vectors)."""
        out = []
        for d, m in enumerate(self.mats):
            nc = self.source.dims[d]
            kb = kernel_basis(m, nc, self.field)
            out.append((nc - len(kb), len(kb), kb))
        return out

    def __repr__(self):
        return f"GradedLinearMap({self.source.dims} -> {self.target.dims})"


def tensor_collection(spaces: list[GradedVectorSpace]) -> GradedVectorSpace:
    """Tensor product in the given order; degree-d basis enumerates the
    splittings (i, d-i) with the left factor's degree ascending, labels are
    concatenated tuples."""
    if not spaces:
        raise ValueError("tensor of an empty list: pass [GradedVectorSpace.unit(...)]")
    acc = spaces[0]
    for s in spaces[1:]:
        _check_pair(acc, s)
        D = acc.truncation
        dims = []
        labels = []
        for d in range(D + 1):
            ls = []
            for i in range(d + 1):
                for la in acc.labels[i]:
                    for lb in s.labels[d - i]:
                        ls.append(la + lb)
            labels.append(tuple(ls))
            dims.append(len(ls))
        acc = GradedVectorSpace(acc.field, dims, labels)
    return acc


def tensor_maps(maps: list[GradedLinearMap]) -> GradedLinearMap:
    """Tensor product of maps, consistent with tensor_collection ordering."""
    if not maps:
        raise ValueError("tensor of an empty list of maps")
    acc = maps[0]
    src = tensor_collection([m.source for m in maps])
    tgt = tensor_collection([m.target for m in maps])
    for nxt in maps[1:]:
        field = acc.field
        D = acc.source.truncation
        s_acc, s_nxt = acc.source, nxt.source
        t_acc, t_nxt = acc.target, nxt.target
        new_src = tensor_collection([s_acc, s_nxt])
        new_tgt = tensor_collection([t_acc, t_nxt])
        mats = []
        for d in range(D + 1):
            m = mat_zero(new_tgt.dims[d], new_src.dims[d], field)
            # block-diagonal over the degree splitting, kron within a block
            roff = 0
            blocks_t = {}
            for i in range(d + 1):
                blocks_t[i] = roff
                roff += t_acc.dims[i] * t_nxt.dims[d - i]
            coff = 0
            for i in range(d + 1):
                A = acc.mats[i]
                B = nxt.mats[d - i]
                blk = kron(A, B, field)
                r0 = blocks_t[i]
                for r, row in enumerate(blk):
                    for c, x in enumerate(row):
                        if x != 0:
                            m[r0 + r][coff + c] = x
                coff += s_acc.dims[i] * s_nxt.dims[d - i]
            mats.append(m)
        acc = GradedLinearMap(new_src, new_tgt, mats)
    # rebuild against the canonical fold to keep labels
    return GradedLinearMap(src, tgt, acc.mats)


def truncated_polynomial(name: str, gen_degree: int, D: int, field: FieldSpec = QQ):
    """Truncated polynomial algebra on one generator of the given degree,
    together with its augmentation onto the unit space.

    Returns (space, augmentation).
    """
    if gen_degree < 1:
        raise ValueError("generator degree must be >= 1")
    dims = [1 if d % gen_degree == 0 else 0 for d in range(D + 1)]
    labels = []
    for d in range(D + 1):
        if d % gen_degree == 0:
            k = d // gen_degree
            labels.append(((f"{name}^{k}" if k else "1"),))
        else:
            labels.append(())
    space = GradedVectorSpace(field, dims, [tuple((l,) for l in ls) if ls else () for ls in labels])
    unit = GradedVectorSpace.unit(field, D)
    mats = [[[1]] if d == 0 else mat_zero(unit.dims[d], space.dims[d], field) for d in range(D + 1)]
    aug = GradedLinearMap(space, unit, mats)
    return space, aug


def find_section(a: GradedLinearMap) -> GradedLinearMap | None:
    """A right inverse s with a . s = id, degree by degree, or None."""
    mats = []
    for d in range(len(a.source.dims)):
        n = a.target.dims[d]
        if n == 0:
            mats.append([[] for _ in range(a.source.dims[d])])
            continue
        X = solve_matrix(a.mats[d], mat_id(n, a.field), a.field)
        if X is None:
            return None
        mats.append(X)
    return GradedLinearMap(a.target, a.source, mats)
