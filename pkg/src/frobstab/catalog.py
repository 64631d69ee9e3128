"""Built-in instances: truncated polynomial rings and small group algebras.

Basis enumerations are fixed once and for all:

* k[x]/(x^n): 1, x, ..., x^(n-1); trace picks the top coefficient, with
  ordered dual bases a_i = x^i, b_i = x^(n-1-i);
* cyclic(k): e, g, g^2, ...; klein4: e, a, b, ab; s3: e, r, r2, s, rs, r2s
  (r a 3-cycle, s a transposition, products composed right-to-left);
* group algebras carry the identity-coefficient trace with dual bases
  {g} and {g^-1}.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .errors import IndexOutOfRange, NotAGroupAlgebra, ParseError
from .algebra import StructureAlgebra
from .exactfield import Field
from .frobenius import FrobeniusSystem, check_identities
from .linalg import Matrix
from .modrep import ModuleRep


class AlgebraInstance(NamedTuple):
    algebra: StructureAlgebra
    system: FrobeniusSystem


@dataclass(frozen=True)
class GroupTable:
    """A finite group by its multiplication table; mult[i][j] = index of g_i g_j."""

    name: str
    names: tuple[str, ...]
    mult: tuple[tuple[int, ...], ...]
    inverse: tuple[int, ...]
    identity: int = 0

    def __post_init__(self):
        n = len(self.names)
        assert len(self.mult) == n and all(len(r) == n for r in self.mult)
        e = self.identity
        for i in range(n):
            assert self.mult[e][i] == i and self.mult[i][e] == i
            assert self.mult[i][self.inverse[i]] == e
            assert self.mult[self.inverse[i]][i] == e
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    assert self.mult[self.mult[i][j]][k] == self.mult[i][self.mult[j][k]]

    @property
    def order(self) -> int:
        return len(self.names)


def cyclic_group(k: int) -> GroupTable:
    if k < 1:
        raise IndexOutOfRange("cyclic group order must be >= 1")
    names = tuple("e" if i == 0 else ("g" if i == 1 else f"g^{i}") for i in range(k))
    mult = tuple(tuple((i + j) % k for j in range(k)) for i in range(k))
    inverse = tuple((-i) % k for i in range(k))
    return GroupTable(f"cyclic_{k}", names, mult, inverse)


def klein_four_group() -> GroupTable:
    names = ("e", "a", "b", "ab")
    mult = ((0, 1, 2, 3), (1, 0, 3, 2), (2, 3, 0, 1), (3, 2, 1, 0))
    return GroupTable("klein4", names, mult, (0, 1, 2, 3))


def symmetric_group_3() -> GroupTable:
    perms = [(0, 1, 2), (1, 2, 0), (2, 0, 1), (1, 0, 2), (2, 1, 0), (0, 2, 1)]
    names = ("e", "r", "r2", "s", "rs", "r2s")
    index = {p: i for i, p in enumerate(perms)}

    def compose(p, q):
        return tuple(p[q[t]] for t in range(3))

    mult = tuple(
        tuple(index[compose(perms[i], perms[j])] for j in range(6)) for i in range(6)
    )
    inverse = tuple(
        index[tuple(sorted(range(3), key=lambda t: perms[i][t]))] for i in range(6)
    )
    return GroupTable("s3", names, mult, inverse)


def group_from_string(text: str) -> GroupTable:
    """Parse a group name: "cyclic:k", "klein4", or "s3"."""
    if text == "klein4":
        return klein_four_group()
    if text == "s3":
        return symmetric_group_3()
    if text.startswith("cyclic:"):
        try:
            k = int(text.split(":", 1)[1])
        except ValueError:
            raise ParseError(f"bad cyclic order in {text!r}") from None
        if k < 1:
            raise ParseError(f"cyclic order must be >= 1 in {text!r}")
        return cyclic_group(k)
    raise ParseError(f"unknown group {text!r}")


def group_algebra(g: GroupTable, field: Field) -> AlgebraInstance:
    """kG with its standard Frobenius system (trace = identity coefficient)."""
    n = g.order
    one = field.one
    entries = [(i, j, g.mult[i][j], one) for i in range(n) for j in range(n)]
    alg = StructureAlgebra.from_entries(
        field, n, entries,
        unit=tuple(one if i == g.identity else field.zero for i in range(n)),
        name=g.name, basis_names=g.names, group=g,
    )
    trace = tuple(one if i == g.identity else field.zero for i in range(n))
    a_basis = tuple(alg.basis_vector(i) for i in range(n))
    b_basis = tuple(alg.basis_vector(g.inverse[i]) for i in range(n))
    system = FrobeniusSystem(alg, trace, a_basis, b_basis)
    assert check_identities(system)
    return AlgebraInstance(alg, system)


def truncated_polynomial(n: int, field: Field) -> AlgebraInstance:
    """k[x]/(x^n) with the top-coefficient trace and ordered dual bases."""
    if n < 1:
        raise IndexOutOfRange("truncation order must be >= 1")
    one = field.one
    entries = [
        (i, j, i + j, one) for i in range(n) for j in range(n) if i + j < n
    ]
    names = tuple("1" if i == 0 else ("x" if i == 1 else f"x^{i}") for i in range(n))
    alg = StructureAlgebra.from_entries(
        field, n, entries,
        unit=tuple(one if i == 0 else field.zero for i in range(n)),
        name=f"trunc_poly_{n}", basis_names=names,
    )
    trace = tuple(one if i == n - 1 else field.zero for i in range(n))
    a_basis = tuple(alg.basis_vector(i) for i in range(n))
    b_basis = tuple(alg.basis_vector(n - 1 - i) for i in range(n))
    system = FrobeniusSystem(alg, trace, a_basis, b_basis)
    assert check_identities(system)
    return AlgebraInstance(alg, system)


def truncated_module(n: int, i: int, field: Field) -> ModuleRep:
    """V_i = k[x]/(x^(i+1)) as a module over k[x]/(x^n); V_(n-1) is regular."""
    alg = truncated_polynomial(n, field).algebra
    if not 0 <= i < n:
        raise IndexOutOfRange(f"module index {i} outside [0, {n})")
    d = i + 1
    zero, one = field.zero, field.one
    mats = []
    for j in range(n):
        rows = [[zero] * d for _ in range(d)]
        for c in range(d - j):
            rows[c + j][c] = one
        mats.append(Matrix.from_rows(field, rows, ncols=d))
    return ModuleRep(alg, d, tuple(mats), name=f"V{i}")


def truncated_projection(n: int, j: int, i: int, field: Field) -> Matrix:
    """The quotient map V_j -> V_i (kill x^(i+1) and above); needs j >= i."""
    if not 0 <= i <= j < n:
        raise IndexOutOfRange(f"need 0 <= {i} <= {j} < {n}")
    zero, one = field.zero, field.one
    rows = [[zero] * (j + 1) for _ in range(i + 1)]
    for t in range(i + 1):
        rows[t][t] = one
    return Matrix.from_rows(field, rows, ncols=j + 1)


def trivial_module(algebra: StructureAlgebra) -> ModuleRep:
    """The one-dimensional module where every group element acts as 1."""
    if algebra.group is None:
        raise NotAGroupAlgebra("trivial module needs a group algebra")
    one_mat = Matrix.identity(algebra.field, 1)
    return ModuleRep(algebra, 1, tuple(one_mat for _ in range(algebra.dim)), name="trivial")
