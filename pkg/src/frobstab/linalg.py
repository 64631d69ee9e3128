"""Dense exact matrices and canonical subspaces over a `Field`.

Conventions fixed package-wide:

* vectors are plain tuples of field scalars;
* a subspace is stored as the reduced row echelon basis of its span, with
  zero rows dropped, so two subspaces are equal iff their stored bases are
  equal entry for entry;
* `vec` is column-major (stacks the columns of a matrix), which gives the
  identity vec(A @ X @ B) == kron(B.transpose(), A) @ vec(X).

Everything is pure exact arithmetic; there is no floating point anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .errors import DimensionMismatch, FieldMismatch, IndexOutOfRange, NotASubspace
from .exactfield import Field


def _check_same_field(a: Field, b: Field) -> None:
    if a != b:
        raise FieldMismatch(f"mixed fields {a} and {b}")


def _rref_inplace(rows: list[list], ncols: int, field: Field) -> tuple[list[int], int]:
    """Full reduced row echelon form, in place.  Returns (pivot columns, rank).

    Skips zero coefficients throughout so that the common sparse inputs
    (block and permutation shaped matrices) reduce quickly.
    """
    sub, mul, inv = field.sub, field.mul, field.inv
    one = field.one
    nrows = len(rows)
    piv_cols: list[int] = []
    r = 0
    for c in range(ncols):
        pr = -1
        for i in range(r, nrows):
            if rows[i][c]:
                pr = i
                break
        if pr < 0:
            continue
        if pr != r:
            rows[r], rows[pr] = rows[pr], rows[r]
        piv = rows[r]
        f = piv[c]
        if f != one:
            finv = inv(f)
            for j in range(c, ncols):
                if piv[j]:
                    piv[j] = mul(piv[j], finv)
        support = [j for j in range(c, ncols) if piv[j]]
        for i in range(nrows):
            if i == r:
                continue
            row = rows[i]
            g = row[c]
            if g:
                for j in support:
                    row[j] = sub(row[j], mul(g, piv[j]))
        piv_cols.append(c)
        r += 1
        if r == nrows:
            break
    return piv_cols, r


@dataclass(frozen=True)
class Matrix:
    """Immutable dense matrix; entries stored row-major as one flat tuple."""

    field: Field
    nrows: int
    ncols: int
    entries: tuple

    def __post_init__(self):
        if self.nrows < 0 or self.ncols < 0:
            raise DimensionMismatch("negative matrix dimension")
        if len(self.entries) != self.nrows * self.ncols:
            raise DimensionMismatch(
                f"entry count {len(self.entries)} != {self.nrows}x{self.ncols}"
            )

    # construction ----------------------------------------------------

    @staticmethod
    def from_rows(field: Field, rows, ncols: int | None = None) -> "Matrix":
        rows = [list(r) for r in rows]
        if rows:
            ncols_seen = len(rows[0])
            if any(len(r) != ncols_seen for r in rows):
                raise DimensionMismatch("ragged rows")
            if ncols is not None and ncols != ncols_seen:
                raise DimensionMismatch(f"rows have {ncols_seen} columns, expected {ncols}")
            ncols = ncols_seen
        elif ncols is None:
            raise DimensionMismatch("empty matrix needs an explicit column count")
        flat = tuple(x for r in rows for x in r)
        return Matrix(field, len(rows), ncols, flat)

    @staticmethod
    def zeros(field: Field, nrows: int, ncols: int) -> "Matrix":
        return Matrix(field, nrows, ncols, (field.zero,) * (nrows * ncols))

    @staticmethod
    def identity(field: Field, n: int) -> "Matrix":
        z, o = field.zero, field.one
        ent = [z] * (n * n)
        for i in range(n):
            ent[i * n + i] = o
        return Matrix(field, n, n, tuple(ent))

    @staticmethod
    def stack_rows(mats: list["Matrix"]) -> "Matrix":
        if not mats:
            raise DimensionMismatch("nothing to stack")
        ncols = mats[0].ncols
        f = mats[0].field
        ent: list = []
        for m in mats:
            _check_same_field(f, m.field)
            if m.ncols != ncols:
                raise DimensionMismatch("column counts differ")
            ent.extend(m.entries)
        return Matrix(f, sum(m.nrows for m in mats), ncols, tuple(ent))

    @staticmethod
    def stack_cols(mats: list["Matrix"]) -> "Matrix":
        if not mats:
            raise DimensionMismatch("nothing to stack")
        nrows = mats[0].nrows
        f = mats[0].field
        rows: list[list] = [[] for _ in range(nrows)]
        for m in mats:
            _check_same_field(f, m.field)
            if m.nrows != nrows:
                raise DimensionMismatch("row counts differ")
            for i in range(nrows):
                rows[i].extend(m.row(i))
        return Matrix.from_rows(f, rows, ncols=sum(m.ncols for m in mats))

    # access ----------------------------------------------------------

    def at(self, i: int, j: int):
        if not (0 <= i < self.nrows and 0 <= j < self.ncols):
            raise IndexOutOfRange(f"({i},{j}) outside {self.nrows}x{self.ncols}")
        return self.entries[i * self.ncols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.ncols : (i + 1) * self.ncols]

    def col(self, j: int) -> tuple:
        return self.entries[j :: self.ncols] if self.ncols else ()

    def to_rows(self) -> list[list]:
        return [list(self.row(i)) for i in range(self.nrows)]

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def is_zero(self) -> bool:
        return not any(self.entries)

    # arithmetic ------------------------------------------------------

    def __add__(self, other: "Matrix") -> "Matrix":
        _check_same_field(self.field, other.field)
        if self.shape != other.shape:
            raise DimensionMismatch(f"add {self.shape} vs {other.shape}")
        add = self.field.add
        return Matrix(
            self.field, self.nrows, self.ncols,
            tuple(add(x, y) for x, y in zip(self.entries, other.entries)),
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        _check_same_field(self.field, other.field)
        if self.shape != other.shape:
            raise DimensionMismatch(f"sub {self.shape} vs {other.shape}")
        sub = self.field.sub
        return Matrix(
            self.field, self.nrows, self.ncols,
            tuple(sub(x, y) for x, y in zip(self.entries, other.entries)),
        )

    def __neg__(self) -> "Matrix":
        neg = self.field.neg
        return Matrix(self.field, self.nrows, self.ncols, tuple(neg(x) for x in self.entries))

    def scale(self, c) -> "Matrix":
        mul = self.field.mul
        return Matrix(self.field, self.nrows, self.ncols, tuple(mul(c, x) for x in self.entries))

    def __matmul__(self, other: "Matrix") -> "Matrix":
        _check_same_field(self.field, other.field)
        if self.ncols != other.nrows:
            raise DimensionMismatch(f"matmul {self.shape} @ {other.shape}")
        add, mul = self.field.add, self.field.mul
        zero = self.field.zero
        n, m, k = self.nrows, self.ncols, other.ncols
        out = [zero] * (n * k)
        se, oe = self.entries, other.entries
        for i in range(n):
            base = i * m
            obase = i * k
            for t in range(m):
                a = se[base + t]
                if a:
                    tb = t * k
                    for j in range(k):
                        b = oe[tb + j]
                        if b:
                            out[obase + j] = add(out[obase + j], mul(a, b))
        return Matrix(self.field, n, k, tuple(out))

    def apply(self, v: tuple) -> tuple:
        """Matrix-vector product; v has length ncols."""
        if len(v) != self.ncols:
            raise DimensionMismatch(f"apply {self.shape} to vector of length {len(v)}")
        add, mul = self.field.add, self.field.mul
        zero = self.field.zero
        out = [zero] * self.nrows
        e = self.entries
        for i in range(self.nrows):
            base = i * self.ncols
            acc = zero
            for j, x in enumerate(v):
                if x:
                    a = e[base + j]
                    if a:
                        acc = add(acc, mul(a, x))
            out[i] = acc
        return tuple(out)

    def transpose(self) -> "Matrix":
        e = self.entries
        n, m = self.nrows, self.ncols
        return Matrix(self.field, m, n, tuple(e[i * m + j] for j in range(m) for i in range(n)))

    # reductions ------------------------------------------------------

    def rref(self) -> tuple["Matrix", tuple[int, ...], int]:
        """(reduced echelon matrix, pivot columns, rank)."""
        rows = self.to_rows()
        piv, rank = _rref_inplace(rows, self.ncols, self.field)
        flat = tuple(x for r in rows for x in r)
        return Matrix(self.field, self.nrows, self.ncols, flat), tuple(piv), rank

    def rank(self) -> int:
        rows = self.to_rows()
        return _rref_inplace(rows, self.ncols, self.field)[1]

    def kernel_basis(self) -> "Subspace":
        """Right kernel {v : self @ v = 0} as a canonical subspace of F^ncols."""
        rows = self.to_rows()
        piv, rank = _rref_inplace(rows, self.ncols, self.field)
        piv_set = set(piv)
        free = [j for j in range(self.ncols) if j not in piv_set]
        neg = self.field.neg
        zero, one = self.field.zero, self.field.one
        vecs = []
        for f in free:
            v = [zero] * self.ncols
            v[f] = one
            for t, pc in enumerate(piv):
                coeff = rows[t][f]
                if coeff:
                    v[pc] = neg(coeff)
            vecs.append(v)
        return Subspace.from_vectors(self.field, self.ncols, vecs)

    def image_basis(self) -> "Subspace":
        """Column space as a canonical subspace of F^nrows."""
        cols = [list(self.col(j)) for j in range(self.ncols)]
        return Subspace.from_vectors(self.field, self.nrows, cols)

    def inverse(self) -> "Matrix | None":
        """Inverse of a square matrix, or None if singular."""
        if self.nrows != self.ncols:
            raise DimensionMismatch("inverse of a non-square matrix")
        n = self.nrows
        ident = Matrix.identity(self.field, n)
        aug = [list(self.row(i)) + list(ident.row(i)) for i in range(n)]
        piv, rank = _rref_inplace(aug, 2 * n, self.field)
        if rank < n or piv[:n] != list(range(n)):
            return None
        return Matrix.from_rows(self.field, [r[n:] for r in aug], ncols=n)

    def solve(self, b: tuple) -> "tuple | None":
        """One solution x of self @ x = b, or None if inconsistent."""
        if len(b) != self.nrows:
            raise DimensionMismatch("rhs length mismatch")
        aug = [list(self.row(i)) + [b[i]] for i in range(self.nrows)]
        piv, rank = _rref_inplace(aug, self.ncols + 1, self.field)
        if piv and piv[-1] == self.ncols:
            return None
        zero = self.field.zero
        x = [zero] * self.ncols
        for t, pc in enumerate(piv):
            x[pc] = aug[t][self.ncols]
        return tuple(x)


def kron(a: Matrix, b: Matrix) -> Matrix:
    """Kronecker product: kron(a, b)[i*p + k, j*q + l] = a[i,j] * b[k,l]."""
    _check_same_field(a.field, b.field)
    mul = a.field.mul
    zero = a.field.zero
    p, q = b.nrows, b.ncols
    nr, nc = a.nrows * p, a.ncols * q
    out = [zero] * (nr * nc)
    for i in range(a.nrows):
        for j in range(a.ncols):
            x = a.entries[i * a.ncols + j]
            if not x:
                continue
            rbase, cbase = i * p, j * q
            for k in range(p):
                obase = (rbase + k) * nc + cbase
                bbase = k * q
                for l in range(q):
                    y = b.entries[bbase + l]
                    if y:
                        out[obase + l] = mul(x, y)
    return Matrix(a.field, nr, nc, tuple(out))


def vec(m: Matrix) -> tuple:
    """Column-major vectorization: vec(m)[j*nrows + i] = m[i, j]."""
    e = m.entries
    n, c = m.nrows, m.ncols
    return tuple(e[i * c + j] for j in range(c) for i in range(n))


def unvec(field: Field, v: tuple, nrows: int, ncols: int) -> Matrix:
    """Inverse of `vec`: rebuild the nrows x ncols matrix from a flat vector."""
    if len(v) != nrows * ncols:
        raise DimensionMismatch(f"vector length {len(v)} != {nrows}x{ncols}")
    return Matrix(
        field, nrows, ncols,
        tuple(v[j * nrows + i] for i in range(nrows) for j in range(ncols)),
    )


@dataclass(frozen=True)
class Subspace:
    """A subspace of F^ambient in canonical (reduced row echelon) form.

    `basis` rows are the RREF basis with zero rows dropped; `pivots` are its
    pivot columns.  Structural equality of two Subspace values is exactly
    equality of subspaces.
    """

    field: Field
    ambient: int
    basis: Matrix
    pivots: tuple[int, ...] = dc_field(default=())

    @staticmethod
    def from_vectors(field: Field, ambient: int, vectors) -> "Subspace":
        rows = [list(v) for v in vectors]
        for r in rows:
            if len(r) != ambient:
                raise DimensionMismatch(f"vector length {len(r)} != ambient {ambient}")
        piv, rank = _rref_inplace(rows, ambient, field)
        basis = Matrix.from_rows(field, rows[:rank], ncols=ambient)
        return Subspace(field, ambient, basis, tuple(piv))

    @staticmethod
    def zero(field: Field, ambient: int) -> "Subspace":
        return Subspace(field, ambient, Matrix.from_rows(field, [], ncols=ambient), ())

    @staticmethod
    def full(field: Field, ambient: int) -> "Subspace":
        return Subspace(
            field, ambient, Matrix.identity(field, ambient), tuple(range(ambient))
        )

    @property
    def dim(self) -> int:
        return self.basis.nrows

    def basis_vectors(self) -> list[tuple]:
        return [self.basis.row(i) for i in range(self.dim)]

    def reduce(self, v: tuple) -> tuple:
        """Residual of v after subtracting its projection onto the basis.

        The residual is zero iff v lies in the subspace, and is the canonical
        coset representative supported off the pivot columns otherwise.
        """
        if len(v) != self.ambient:
            raise DimensionMismatch(f"vector length {len(v)} != ambient {self.ambient}")
        sub, mul = self.field.sub, self.field.mul
        w = list(v)
        for t, pc in enumerate(self.pivots):
            c = w[pc]
            if c:
                row = self.basis.row(t)
                for j in range(pc, self.ambient):
                    x = row[j]
                    if x:
                        w[j] = sub(w[j], mul(c, x))
        return tuple(w)

    def contains(self, v: tuple) -> bool:
        return not any(self.reduce(v))

    def contains_subspace(self, other: "Subspace") -> bool:
        self._check_compatible(other)
        return all(self.contains(v) for v in other.basis_vectors())

    def coords(self, v: tuple) -> "tuple | None":
        """Coefficients of v in the RREF basis, or None if v is outside.

        RREF makes this a read-off: the coefficient of basis row t is the
        entry of v at that row's pivot column.
        """
        c = tuple(v[pc] for pc in self.pivots)
        if any(self.reduce(v)):
            return None
        return c

    def _check_compatible(self, other: "Subspace") -> None:
        _check_same_field(self.field, other.field)
        if self.ambient != other.ambient:
            raise DimensionMismatch(
                f"ambient {self.ambient} vs {other.ambient}"
            )

    def __add__(self, other: "Subspace") -> "Subspace":
        self._check_compatible(other)
        return Subspace.from_vectors(
            self.field, self.ambient, self.basis_vectors() + other.basis_vectors()
        )

    def intersect(self, other: "Subspace") -> "Subspace":
        self._check_compatible(other)
        da, db = self.dim, other.dim
        if da == 0 or db == 0:
            return Subspace.zero(self.field, self.ambient)
        # Kernel of [A^T | -B^T]: a kernel vector (x, y) means
        # sum x_t a_t = sum y_s b_s, a vector lying in both spans.
        at = self.basis.transpose()
        bt = other.basis.transpose()
        neg = self.field.neg
        rows = []
        for i in range(self.ambient):
            rows.append(list(at.row(i)) + [neg(x) for x in bt.row(i)])
        k = Matrix.from_rows(self.field, rows, ncols=da + db).kernel_basis()
        vecs = [at.apply(kv[:da]) for kv in k.basis_vectors()]
        return Subspace.from_vectors(self.field, self.ambient, vecs)

    def quotient_dim(self, small: "Subspace") -> int:
        """dim(self / small); raises NotASubspace if small is not inside self."""
        self._check_compatible(small)
        if not self.contains_subspace(small):
            raise NotASubspace("quotient by a non-subspace")
        return self.dim - small.dim

    def complement_of(self, small: "Subspace") -> list[tuple]:
        """Rows of this basis that complete a basis of `small` to one of self.

        Deterministic: walks the canonical basis rows in order and keeps those
        independent of `small` plus the rows already kept.  The result is a
        list of coset representatives for self / small.
        """
        self._check_compatible(small)
        if not self.contains_subspace(small):
            raise NotASubspace("complement of a non-subspace")
        reps: list[tuple] = []
        work = small
        for v in self.basis_vectors():
            if not work.contains(v):
                reps.append(v)
                work = work + Subspace.from_vectors(self.field, self.ambient, [v])
        return reps


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    return a + b


def subspace_intersect(a: Subspace, b: Subspace) -> Subspace:
    return a.intersect(b)
