"""Finite-dimensional associative unital algebras over an exact field.

An algebra is given by structure constants: cells[i][j] lists the nonzero
coefficients (k, c) of the product (basis i) * (basis j) = sum_k c * basis k.
Elements are coefficient tuples in the fixed basis.  Tensor and enveloping
constructions use the i-major basis order: basis (i, j) of A (x) B sits at
flat index i * dim(B) + j.

Mathematical equality of algebras is structural on (field, dim, cells, unit);
the display name and basis names do not participate.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    DimensionMismatch,
    FieldMismatch,
    IndexOutOfRange,
    NotAssociative,
    ParseError,
    UnitMismatch,
)
from .exactfield import Field, field_from_json, field_to_json
from .linalg import Matrix, Subspace

ALGEBRA_FORMAT = "frobstab-algebra/1"

Cell = tuple[tuple[int, object], ...]


def _normalize_cells(field: Field, dim: int, raw) -> tuple[tuple[Cell, ...], ...]:
    out = []
    for i in range(dim):
        row = []
        for j in range(dim):
            acc: dict[int, object] = {}
            for k, v in raw[i][j]:
                if not (0 <= k < dim):
                    raise IndexOutOfRange(f"product index {k} outside basis")
                acc[k] = field.add(acc.get(k, field.zero), v)
            row.append(tuple((k, v) for k, v in sorted(acc.items()) if v))
        out.append(tuple(row))
    return tuple(out)


@dataclass
class AlgebraReport:
    """Validation outcome: every violated triple / unit index, not just the first."""

    associative_failures: list[tuple[int, int, int]]
    unit_failures: list[int]

    @property
    def ok(self) -> bool:
        return not self.associative_failures and not self.unit_failures


class StructureAlgebra:
    def __init__(self, field: Field, dim: int, cells, unit, name: str = "A",
                 basis_names=None, group=None):
        if dim < 0:
            raise DimensionMismatch("negative dimension")
        if len(unit) != dim:
            raise DimensionMismatch("unit vector has wrong length")
        if basis_names is not None and len(basis_names) != dim:
            raise DimensionMismatch("basis_names has wrong length")
        self.field = field
        self.dim = dim
        self.cells = _normalize_cells(field, dim, cells)
        self.unit = tuple(unit)
        self.name = name
        self.basis_names = tuple(basis_names) if basis_names is not None else None
        self.group = group

    @staticmethod
    def from_entries(field: Field, dim: int, entries, unit, name: str = "A",
                     basis_names=None, group=None) -> "StructureAlgebra":
        """Build from (i, j, k, coeff) quadruples; coeffs are field scalars."""
        raw = [[[] for _ in range(dim)] for _ in range(dim)]
        for i, j, k, v in entries:
            if not (0 <= i < dim and 0 <= j < dim):
                raise IndexOutOfRange(f"factor index ({i},{j}) outside basis")
            raw[i][j].append((k, v))
        return StructureAlgebra(field, dim, raw, unit, name, basis_names, group)

    # identity --------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, StructureAlgebra):
            return NotImplemented
        return (
            self.field == other.field
            and self.dim == other.dim
            and self.cells == other.cells
            and self.unit == other.unit
        )

    def __hash__(self):
        return hash((self.field, self.dim, self.cells, self.unit))

    def __repr__(self):
        return f"StructureAlgebra({self.name!r}, dim={self.dim})"

    # elements --------------------------------------------------------

    def zero_vector(self) -> tuple:
        return (self.field.zero,) * self.dim

    def basis_vector(self, i: int) -> tuple:
        if not (0 <= i < self.dim):
            raise IndexOutOfRange(f"basis index {i}")
        z = self.field.zero
        return tuple(self.field.one if t == i else z for t in range(self.dim))

    def mul(self, x: tuple, y: tuple) -> tuple:
        """Product of two elements given by coefficient tuples."""
        if len(x) != self.dim or len(y) != self.dim:
            raise DimensionMismatch("element length mismatch")
        add, mul = self.field.add, self.field.mul
        out = [self.field.zero] * self.dim
        for i, xi in enumerate(x):
            if not xi:
                continue
            row = self.cells[i]
            for j, yj in enumerate(y):
                if not yj:
                    continue
                c = mul(xi, yj)
                for k, v in row[j]:
                    out[k] = add(out[k], mul(c, v))
        return tuple(out)

    def left_mult_matrix(self, x: tuple) -> Matrix:
        """Matrix of a |-> x * a in the basis (columns are x * e_j)."""
        if len(x) != self.dim:
            raise DimensionMismatch("element length mismatch")
        add, mul = self.field.add, self.field.mul
        n = self.dim
        out = [self.field.zero] * (n * n)
        for i, xi in enumerate(x):
            if not xi:
                continue
            row = self.cells[i]
            for j in range(n):
                for k, v in row[j]:
                    idx = k * n + j
                    out[idx] = add(out[idx], mul(xi, v))
        return Matrix(self.field, n, n, tuple(out))

    def right_mult_matrix(self, x: tuple) -> Matrix:
        """Matrix of a |-> a * x in the basis (columns are e_j * x)."""
        if len(x) != self.dim:
            raise DimensionMismatch("element length mismatch")
        add, mul = self.field.add, self.field.mul
        n = self.dim
        out = [self.field.zero] * (n * n)
        for j in range(n):
            row = self.cells[j]
            for i, xi in enumerate(x):
                if not xi:
                    continue
                for k, v in row[i]:
                    idx = k * n + j
                    out[idx] = add(out[idx], mul(xi, v))
        return Matrix(self.field, n, n, tuple(out))

    # validation ------------------------------------------------------

    def validation_report(self) -> AlgebraReport:
        """Check associativity on all basis triples and the two-sided unit."""
        add, mul = self.field.add, self.field.mul
        n = self.dim
        assoc: list[tuple[int, int, int]] = []
        for i in range(n):
            ci = self.cells[i]
            for j in range(n):
                cij = ci[j]
                for k in range(n):
                    left: dict[int, object] = {}
                    for l, v in cij:
                        for m, w in self.cells[l][k]:
                            left[m] = add(left.get(m, self.field.zero), mul(v, w))
                    right: dict[int, object] = {}
                    for l, v in self.cells[j][k]:
                        for m, w in ci[l]:
                            right[m] = add(right.get(m, self.field.zero), mul(v, w))
                    keys = set(left) | set(right)
                    for m in keys:
                        if left.get(m, self.field.zero) != right.get(m, self.field.zero):
                            assoc.append((i, j, k))
                            break
        unit_bad = []
        for j in range(n):
            e = self.basis_vector(j)
            if self.mul(self.unit, e) != e or self.mul(e, self.unit) != e:
                unit_bad.append(j)
        return AlgebraReport(assoc, unit_bad)

    def validate(self) -> None:
        rep = self.validation_report()
        if rep.associative_failures:
            raise NotAssociative(
                f"{len(rep.associative_failures)} associativity violations, "
                f"first at {rep.associative_failures[0]}",
                witness=rep.associative_failures,
            )
        if rep.unit_failures:
            raise UnitMismatch(
                f"unit fails on basis indices {rep.unit_failures}",
                witness=rep.unit_failures,
            )

    # derived structure ----------------------------------------------

    def center_basis(self) -> Subspace:
        """Kernel of the stacked commutator maps a |-> e_i a - a e_i."""
        if self.dim == 0:
            return Subspace.zero(self.field, 0)
        blocks = []
        for i in range(self.dim):
            e = self.basis_vector(i)
            blocks.append(self.left_mult_matrix(e) - self.right_mult_matrix(e))
        return Matrix.stack_rows(blocks).kernel_basis()


def opposite(a: StructureAlgebra) -> StructureAlgebra:
    """Same space, reversed multiplication."""
    raw = [[a.cells[j][i] for j in range(a.dim)] for i in range(a.dim)]
    return StructureAlgebra(
        a.field, a.dim, raw, a.unit, name=f"{a.name}^op", basis_names=a.basis_names
    )


def tensor(a: StructureAlgebra, b: StructureAlgebra) -> StructureAlgebra:
    """Tensor product algebra on the i-major product basis."""
    if a.field != b.field:
        raise FieldMismatch("tensor factors over different fields")
    field = a.field
    nb = b.dim
    dim = a.dim * nb
    raw = [[None] * dim for _ in range(dim)]
    for i1 in range(a.dim):
        for j1 in range(nb):
            r = raw[i1 * nb + j1]
            for i2 in range(a.dim):
                ca = a.cells[i1][i2]
                for j2 in range(nb):
                    cb = b.cells[j1][j2]
                    r[i2 * nb + j2] = tuple(
                        (k1 * nb + k2, field.mul(v1, v2))
                        for k1, v1 in ca
                        for k2, v2 in cb
                    )
    unit = tuple(
        field.mul(a.unit[p], b.unit[q]) for p in range(a.dim) for q in range(nb)
    )
    names = None
    if a.basis_names is not None and b.basis_names is not None:
        names = tuple(
            f"{an}(x){bn}" for an in a.basis_names for bn in b.basis_names
        )
    return StructureAlgebra(
        field, dim, raw, unit, name=f"{a.name}(x){b.name}", basis_names=names
    )


def enveloping(a: StructureAlgebra) -> StructureAlgebra:
    """A (x) A^op, the algebra whose left modules are (A, A)-bimodules."""
    env = tensor(a, opposite(a))
    env.name = f"{a.name}^env"
    return env


# JSON ---------------------------------------------------------------


def algebra_to_json(a: StructureAlgebra, trace=None) -> dict:
    fmt = a.field.to_str
    obj: dict = {
        "format": ALGEBRA_FORMAT,
        "name": a.name,
        "field": field_to_json(a.field),
        "dim": a.dim,
    }
    if a.basis_names is not None:
        obj["basis_names"] = list(a.basis_names)
    obj["unit"] = [fmt(x) for x in a.unit]
    mult = []
    for i in range(a.dim):
        for j in range(a.dim):
            for k, v in a.cells[i][j]:
                mult.append([i, j, k, fmt(v)])
    obj["mult"] = mult
    if trace is not None:
        obj["trace"] = [fmt(x) for x in trace]
    return obj


def _require_keys(obj: dict, required: set[str], optional: set[str], what: str) -> None:
    if not isinstance(obj, dict):
        raise ParseError(f"{what} must be a JSON object")
    missing = required - set(obj)
    if missing:
        raise ParseError(f"{what} missing keys {sorted(missing)}")
    unknown = set(obj) - required - optional
    if unknown:
        raise ParseError(f"{what} has unknown keys {sorted(unknown)}")


def _check_index(x, dim: int, what: str) -> int:
    if not isinstance(x, int) or isinstance(x, bool) or not (0 <= x < dim):
        raise ParseError(f"{what} index {x!r} out of range [0, {dim})")
    return x


def algebra_from_json(obj) -> tuple[StructureAlgebra, tuple | None]:
    """Parse the strict algebra schema; returns (algebra, trace or None)."""
    _require_keys(
        obj, {"format", "name", "field", "dim", "unit", "mult"},
        {"basis_names", "trace"}, "algebra",
    )
    if obj["format"] != ALGEBRA_FORMAT:
        raise ParseError(f"unsupported format {obj['format']!r}")
    if not isinstance(obj["name"], str):
        raise ParseError("algebra name must be a string")
    field = field_from_json(obj["field"])
    dim = obj["dim"]
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 0:
        raise ParseError(f"bad dim {dim!r}")
    names = obj.get("basis_names")
    if names is not None:
        if not isinstance(names, list) or len(names) != dim or not all(
            isinstance(s, str) for s in names
        ):
            raise ParseError("basis_names must be a list of dim strings")
    unit = obj["unit"]
    if not isinstance(unit, list) or len(unit) != dim:
        raise ParseError("unit must be a list of dim scalars")
    unit_vec = tuple(field.parse(s) for s in unit)
    if not isinstance(obj["mult"], list):
        raise ParseError("mult must be a list")
    seen = set()
    entries = []
    for item in obj["mult"]:
        if not isinstance(item, list) or len(item) != 4:
            raise ParseError(f"mult entry {item!r} is not [i, j, k, scalar]")
        i = _check_index(item[0], dim, "mult")
        j = _check_index(item[1], dim, "mult")
        k = _check_index(item[2], dim, "mult")
        if (i, j, k) in seen:
            raise ParseError(f"duplicate mult entry ({i},{j},{k})")
        seen.add((i, j, k))
        v = field.parse(item[3])
        if v:
            entries.append((i, j, k, v))
    algebra = StructureAlgebra.from_entries(
        field, dim, entries, unit_vec, name=obj["name"], basis_names=names
    )
    trace = None
    if "trace" in obj:
        t = obj["trace"]
        if not isinstance(t, list) or len(t) != dim:
            raise ParseError("trace must be a list of dim scalars")
        trace = tuple(field.parse(s) for s in t)
    return algebra, trace
