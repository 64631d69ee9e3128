"""Finite-dimensional left modules over a structure-constant algebra.

A module is its list of action matrices: action[i] is the matrix of the
i-th algebra basis element on the module's coordinate space.  Maps of
modules are handled downstream through vectorization; this module supplies
the constructions (regular, free, direct sum, sub, quotient) and the two
canonical maps in and out of the free cover:

* the embedding M -> A (x) M_0, v |-> sum_i a_i (x) (b_i v), split by
  a (x) v |-> trace(a) v, and
* the multiplication surjection A (x) M_0 -> M, a (x) v |-> a v.

Free modules on k generators use the (p, j) |-> p * k + j basis layout.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    AlgebraMismatch,
    DimensionMismatch,
    EmbeddingNotInjective,
    FieldMismatch,
    NotALinearMap,
    NotAModule,
    NotInvariant,
    ParseError,
)
from .algebra import StructureAlgebra, enveloping, _require_keys
from .exactfield import Field
from .frobenius import FrobeniusSystem
from .linalg import Matrix, Subspace, kron

MODULE_FORMAT = "frobstab-module/1"


@dataclass(frozen=True)
class ModuleRep:
    algebra: StructureAlgebra
    dim: int
    action: tuple[Matrix, ...]
    name: str = "M"

    def __post_init__(self):
        if len(self.action) != self.algebra.dim:
            raise DimensionMismatch(
                f"need {self.algebra.dim} action matrices, got {len(self.action)}"
            )
        for m in self.action:
            if m.shape != (self.dim, self.dim):
                raise DimensionMismatch(f"action matrix shape {m.shape} != square {self.dim}")
            if m.field != self.algebra.field:
                raise FieldMismatch("action matrix over wrong field")

    def action_of(self, x: tuple) -> Matrix:
        """Matrix of the element with coefficient tuple x."""
        if len(x) != self.algebra.dim:
            raise DimensionMismatch("element length mismatch")
        f = self.algebra.field
        acc = Matrix.zeros(f, self.dim, self.dim)
        for c, m in zip(x, self.action):
            if c:
                acc = acc + m.scale(c)
        return acc

    def same_algebra(self, other: "ModuleRep") -> None:
        if self.algebra != other.algebra:
            raise AlgebraMismatch(
                f"modules over different algebras ({self.name}, {other.name})"
            )


def validate_module(m: ModuleRep) -> None:
    """Unit acts as identity; products follow the structure constants."""
    alg = m.algebra
    if m.action_of(alg.unit) != Matrix.identity(alg.field, m.dim):
        raise NotAModule("unit does not act as identity", witness="unit")
    for i in range(alg.dim):
        for j in range(alg.dim):
            expect = Matrix.zeros(alg.field, m.dim, m.dim)
            for k, v in alg.cells[i][j]:
                expect = expect + m.action[k].scale(v)
            if m.action[i] @ m.action[j] != expect:
                raise NotAModule(
                    f"action breaks on basis product ({i},{j})", witness=(i, j)
                )


def regular_module(a: StructureAlgebra) -> ModuleRep:
    """A acting on itself by left multiplication."""
    action = tuple(a.left_mult_matrix(a.basis_vector(i)) for i in range(a.dim))
    return ModuleRep(a, a.dim, action, name="regular")


def free_module(a: StructureAlgebra, k: int) -> ModuleRep:
    """A^k with the left action on the first tensor factor."""
    if k < 0:
        raise DimensionMismatch("negative rank")
    ident = Matrix.identity(a.field, k)
    action = tuple(
        kron(a.left_mult_matrix(a.basis_vector(i)), ident) for i in range(a.dim)
    )
    return ModuleRep(a, a.dim * k, action, name=f"free{k}")


def canonical_embedding(system: FrobeniusSystem, m: ModuleRep) -> Matrix:
    """Matrix of v |-> sum_i a_i (x) (b_i v) from M into A (x) M_0.

    Checked on construction: the map intertwines the actions, and composing
    with the trace splitting a (x) v |-> trace(a) v gives the identity, so
    it is injective.
    """
    alg = system.algebra
    if m.algebra != alg:
        raise AlgebraMismatch("module is not over the system's algebra")
    f = alg.field
    n = alg.dim
    md = m.dim
    out = [[f.zero] * md for _ in range(n * md)]
    for a_i, b_i in zip(system.a_basis, system.b_basis):
        bmat = m.action_of(b_i)
        for p, c in enumerate(a_i):
            if not c:
                continue
            for r in range(md):
                base = p * md + r
                row = out[base]
                for col in range(md):
                    x = bmat.at(r, col)
                    if x:
                        row[col] = f.add(row[col], f.mul(c, x))
    phi = Matrix.from_rows(f, out, ncols=md)
    free = free_module(alg, md)
    for q in range(n):
        if free.action[q] @ phi != phi @ m.action[q]:
            raise NotALinearMap(f"embedding fails to intertwine basis {q}", witness=q)
    split_rows = [[f.zero] * (n * md) for _ in range(md)]
    for p in range(n):
        t = system.trace[p]
        if t:
            for j in range(md):
                split_rows[j][p * md + j] = t
    split = Matrix.from_rows(f, split_rows, ncols=n * md)
    if split @ phi != Matrix.identity(f, md):
        raise EmbeddingNotInjective("trace splitting does not recover the identity")
    return phi


def multiplication_surjection(m: ModuleRep) -> Matrix:
    """Matrix of A (x) M_0 -> M, e_p (x) v_j |-> e_p v_j."""
    cols: list[Matrix] = list(m.action)
    if not cols:
        return Matrix.from_rows(m.algebra.field, [[] for _ in range(m.dim)], ncols=0)
    return Matrix.stack_cols(cols)


def hom_bimodule(m: ModuleRep, n_: ModuleRep) -> ModuleRep:
    """Hom_k(M, N) as a module over A (x) A^op.

    Via vectorization, basis element e_i (x) e_j acts on vec(H) by
    kron(action_M(e_j)^T, action_N(e_i)), matching ((a (x) b) h)(v) = a h(b v).
    """
    m.same_algebra(n_)
    env = enveloping(m.algebra)
    action = []
    for i in range(m.algebra.dim):
        ni = n_.action[i]
        for j in range(m.algebra.dim):
            action.append(kron(m.action[j].transpose(), ni))
    return ModuleRep(env, n_.dim * m.dim, tuple(action), name=f"Hom({m.name},{n_.name})")


def bimodule_regular(a: StructureAlgebra) -> ModuleRep:
    """A as a module over A (x) A^op: (a (x) b) x = a x b."""
    env = enveloping(a)
    left = [a.left_mult_matrix(a.basis_vector(i)) for i in range(a.dim)]
    right = [a.right_mult_matrix(a.basis_vector(j)) for j in range(a.dim)]
    action = []
    for i in range(a.dim):
        for j in range(a.dim):
            action.append(left[i] @ right[j])
    return ModuleRep(env, a.dim, tuple(action), name=f"{a.name}-bimodule")


def direct_sum(mods: list[ModuleRep]) -> ModuleRep:
    if not mods:
        raise DimensionMismatch("empty direct sum")
    first = mods[0]
    for other in mods[1:]:
        first.same_algebra(other)
    f = first.algebra.field
    total = sum(m.dim for m in mods)
    action = []
    for i in range(first.algebra.dim):
        rows = [[f.zero] * total for _ in range(total)]
        off = 0
        for m in mods:
            blk = m.action[i]
            for r in range(m.dim):
                for c in range(m.dim):
                    x = blk.at(r, c)
                    if x:
                        rows[off + r][off + c] = x
            off += m.dim
        action.append(Matrix.from_rows(f, rows, ncols=total))
    name = "+".join(m.name for m in mods)
    return ModuleRep(first.algebra, total, tuple(action), name=name)


def submodule(m: ModuleRep, sub: Subspace) -> ModuleRep:
    """Restrict the action to an invariant subspace, in its canonical basis."""
    if sub.ambient != m.dim:
        raise DimensionMismatch("subspace of the wrong ambient space")
    f = m.algebra.field
    d = sub.dim
    action = []
    for i in range(m.algebra.dim):
        cols = []
        for v in sub.basis_vectors():
            w = m.action[i].apply(v)
            if not sub.contains(w):
                raise NotInvariant(f"subspace not stable under basis {i}", witness=i)
            cols.append([w[p] for p in sub.pivots])
        rows = [[cols[t][r] for t in range(d)] for r in range(d)]
        action.append(Matrix.from_rows(f, rows, ncols=d))
    return ModuleRep(m.algebra, d, tuple(action), name=f"{m.name}|sub{d}")


def quotient_module(m: ModuleRep, sub: Subspace) -> ModuleRep:
    """Action on M / sub, coordinatized by the non-pivot coset representatives."""
    if sub.ambient != m.dim:
        raise DimensionMismatch("subspace of the wrong ambient space")
    f = m.algebra.field
    piv = set(sub.pivots)
    npv = [q for q in range(m.dim) if q not in piv]
    d = len(npv)
    for i in range(m.algebra.dim):
        for v in sub.basis_vectors():
            if not sub.contains(m.action[i].apply(v)):
                raise NotInvariant(f"subspace not stable under basis {i}", witness=i)
    action = []
    for i in range(m.algebra.dim):
        cols = []
        for q in npv:
            e = tuple(f.one if t == q else f.zero for t in range(m.dim))
            w = sub.reduce(m.action[i].apply(e))
            cols.append([w[qq] for qq in npv])
        rows = [[cols[t][r] for t in range(d)] for r in range(d)]
        action.append(Matrix.from_rows(f, rows, ncols=d))
    return ModuleRep(m.algebra, d, tuple(action), name=f"{m.name}/sub{sub.dim}")


# JSON ---------------------------------------------------------------


def module_to_json(m: ModuleRep) -> dict:
    fmt = m.algebra.field.to_str
    return {
        "format": MODULE_FORMAT,
        "name": m.name,
        "algebra": m.algebra.name,
        "dim": m.dim,
        "action": [
            [[fmt(mat.at(r, c)) for c in range(m.dim)] for r in range(m.dim)]
            for mat in m.action
        ],
    }


def module_from_json(obj, algebra: StructureAlgebra, accept_names=None) -> ModuleRep:
    """Strict parse; the named algebra must match algebra.name or accept_names."""
    _require_keys(obj, {"format", "name", "algebra", "dim", "action"}, set(), "module")
    if obj["format"] != MODULE_FORMAT:
        raise ParseError(f"unsupported format {obj['format']!r}")
    if not isinstance(obj["name"], str) or not isinstance(obj["algebra"], str):
        raise ParseError("module name and algebra reference must be strings")
    accepted = {algebra.name} | set(accept_names or ())
    if obj["algebra"] not in accepted:
        raise AlgebraMismatch(
            f"module references algebra {obj['algebra']!r}, loaded {algebra.name!r}",
            witness=obj["algebra"],
        )
    dim = obj["dim"]
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 0:
        raise ParseError(f"bad dim {dim!r}")
    act = obj["action"]
    if not isinstance(act, list) or len(act) != algebra.dim:
        raise ParseError(f"action must list {algebra.dim} matrices")
    parse = algebra.field.parse
    mats = []
    for mat in act:
        if not isinstance(mat, list) or len(mat) != dim:
            raise ParseError("action matrix has wrong row count")
        rows = []
        for row in mat:
            if not isinstance(row, list) or len(row) != dim:
                raise ParseError("action matrix has wrong column count")
            rows.append([parse(s) for s in row])
        mats.append(Matrix.from_rows(algebra.field, rows, ncols=dim))
    return ModuleRep(algebra, dim, tuple(mats), name=obj["name"])
