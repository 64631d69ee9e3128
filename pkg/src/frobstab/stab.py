"""Stable morphism spaces over a Frobenius system.

The stable Hom between modules M, N is Hom_A(M, N) modulo the maps that
factor through a projective (equivalently injective) module.  With a
Frobenius system ({a_i}, {b_i}) the factoring maps are exactly the image of
the operator

    T : Hom_k(M, N) -> Hom_k(M, N),   T(h) = sum_i a_i h(b_i -),

acting on vectorized maps as sum_i kron(action_M(b_i)^T, action_N(a_i)).
`factoring_ideal_oracle` recomputes the same subspace along the definition
(maps factoring through the canonical embedding into A (x) M_0) and is kept
as an independent route; the two are compared, never merged.

Shifts are cokernel/kernel of the canonical embedding/multiplication maps,
iterated for stable Ext in either direction.  The stable center is the
ordinary center modulo the ideal sum_i a_i z b_i, with a second route
through endomorphisms of A as a bimodule over A (x) A^op.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    AlgebraMismatch,
    BudgetExceeded,
    DimensionMismatch,
    IdealClosureViolation,
    NotAGroupAlgebra,
)
from .algebra import StructureAlgebra
from .frobenius import FrobeniusSystem, enveloping_system
from .linalg import Matrix, Subspace, unvec
from .modrep import (
    ModuleRep,
    bimodule_regular,
    canonical_embedding,
    free_module,
    hom_bimodule,
    multiplication_surjection,
    quotient_module,
    submodule,
)


def _check_system_module(system: FrobeniusSystem, *mods: ModuleRep) -> None:
    for m in mods:
        if m.algebra != system.algebra:
            raise AlgebraMismatch(f"module {m.name} is not over the system's algebra")


def hom_A(m: ModuleRep, n_: ModuleRep) -> Subspace:
    """A-linear maps M -> N as a subspace of vectorized matrices.

    H is A-linear iff action_N(e_i) H = H action_M(e_i) for every basis
    element; the equations are assembled row by row and solved exactly.
    """
    m.same_algebra(n_)
    f = m.algebra.field
    add, sub = f.add, f.sub
    mn, mm = n_.dim, m.dim
    amb = mn * mm
    if amb == 0:
        return Subspace.zero(f, 0)
    rows: list[list] = []
    zero = f.zero
    for i in range(m.algebra.dim):
        rn, rm = n_.action[i], m.action[i]
        for c in range(mm):
            for r in range(mn):
                row = [zero] * amb
                base = c * mn
                for k in range(mn):
                    x = rn.at(r, k)
                    if x:
                        row[base + k] = add(row[base + k], x)
                for l in range(mm):
                    x = rm.at(l, c)
                    if x:
                        idx = l * mn + r
                        row[idx] = sub(row[idx], x)
                rows.append(row)
    return Matrix.from_rows(f, rows, ncols=amb).kernel_basis()


def null_homotopy_operator(system: FrobeniusSystem, m: ModuleRep, n_: ModuleRep) -> Matrix:
    """The operator T above on vec(Hom_k(M, N)); its image is the null space."""
    _check_system_module(system, m, n_)
    m.same_algebra(n_)
    f = m.algebra.field
    add, mul = f.add, f.mul
    mn, mm = n_.dim, m.dim
    amb = mn * mm
    out = [[f.zero] * amb for _ in range(amb)]
    for a_i, b_i in zip(system.a_basis, system.b_basis):
        am = n_.action_of(a_i)
        bt = m.action_of(b_i).transpose()
        for r1 in range(mm):
            for c1 in range(mm):
                x = bt.at(r1, c1)
                if not x:
                    continue
                rbase, cbase = r1 * mn, c1 * mn
                for r2 in range(mn):
                    row = out[rbase + r2]
                    for c2 in range(mn):
                        y = am.at(r2, c2)
                        if y:
                            row[cbase + c2] = add(row[cbase + c2], mul(x, y))
    return Matrix.from_rows(f, out, ncols=amb)


@dataclass
class StableHomResult:
    hom_dim: int
    null_dim: int
    stable_dim: int
    hom_basis: Subspace
    null_basis: Subspace
    coset_reps: list[Matrix]


def stable_hom(system: FrobeniusSystem, m: ModuleRep, n_: ModuleRep) -> StableHomResult:
    """Hom_A(M, N) modulo the image of T, with canonical coset representatives."""
    hom = hom_A(m, n_)
    t = null_homotopy_operator(system, m, n_)
    null = t.image_basis()
    assert hom.contains_subspace(null), "null-homotopic maps must be A-linear"
    reps = [unvec(m.algebra.field, v, n_.dim, m.dim) for v in hom.complement_of(null)]
    return StableHomResult(hom.dim, null.dim, hom.dim - null.dim, hom, null, reps)


def factoring_ideal_oracle(system: FrobeniusSystem, m: ModuleRep, n_: ModuleRep) -> Subspace:
    """Maps M -> N factoring through the free cover of M, by direct composition.

    Every A-map F = A (x) M_0 -> N composed with the canonical embedding
    M -> F is a factoring map, and all factoring maps arise this way.  This
    is the definitional route, independent of the operator T.
    """
    _check_system_module(system, m, n_)
    m.same_algebra(n_)
    f = m.algebra.field
    free = free_module(m.algebra, m.dim)
    through = hom_A(free, n_)
    amb = n_.dim * m.dim
    if m.dim == 0:
        return Subspace.zero(f, amb)
    phi = canonical_embedding(system, m)
    vecs = []
    for v in through.basis_vectors():
        big = unvec(f, v, n_.dim, free.dim)
        composed = big @ phi
        vecs.append(
            tuple(composed.at(i, j) for j in range(m.dim) for i in range(n_.dim))
        )
    return Subspace.from_vectors(f, amb, vecs)


# shifts and Ext -----------------------------------------------------


def shift_plus(system: FrobeniusSystem, m: ModuleRep, steps: int = 1) -> ModuleRep:
    """Cokernel of the canonical embedding, iterated `steps` times."""
    if steps < 0:
        raise DimensionMismatch("steps must be >= 0")
    _check_system_module(system, m)
    cur = m
    for _ in range(steps):
        phi = canonical_embedding(system, cur)
        free = free_module(system.algebra, cur.dim)
        cur = quotient_module(free, phi.image_basis())
    return ModuleRep(cur.algebra, cur.dim, cur.action, name=f"{m.name}[+{steps}]")


def shift_minus(m: ModuleRep, steps: int = 1) -> ModuleRep:
    """Kernel of the multiplication map A (x) M_0 -> M, iterated."""
    if steps < 0:
        raise DimensionMismatch("steps must be >= 0")
    cur = m
    for _ in range(steps):
        free = free_module(cur.algebra, cur.dim)
        mu = multiplication_surjection(cur)
        cur = submodule(free, mu.kernel_basis())
    return ModuleRep(cur.algebra, cur.dim, cur.action, name=f"{m.name}[-{steps}]")


def stable_ext(system: FrobeniusSystem, m: ModuleRep, n_: ModuleRep, degree: int) -> StableHomResult:
    """Stable Ext^degree(M, N): shift N up for positive degrees, down for negative."""
    if degree == 0:
        return stable_hom(system, m, n_)
    if degree > 0:
        return stable_hom(system, m, shift_plus(system, n_, degree))
    return stable_hom(system, m, shift_minus(n_, -degree))


# stable center ------------------------------------------------------


def frobenius_ideal(system: FrobeniusSystem) -> Subspace:
    """Image of z |-> sum_i a_i z b_i, an ideal of the center."""
    alg = system.algebra
    f = alg.field
    n = alg.dim
    acc = Matrix.zeros(f, n, n)
    for a_i, b_i in zip(system.a_basis, system.b_basis):
        acc = acc + alg.left_mult_matrix(a_i) @ alg.right_mult_matrix(b_i)
    return acc.image_basis()


@dataclass
class StableCenterResult:
    center_dim: int
    ideal_dim: int
    stable_center_dim: int
    reps: list[tuple]
    mult_table: list[tuple[int, int, int, object]]
    center: Subspace
    ideal: Subspace


def stable_center(system: FrobeniusSystem) -> StableCenterResult:
    """Center of A modulo the Frobenius ideal, with its ring structure.

    The ideal lands in the center and absorbs central multiplication; both
    facts are checked and IdealClosureViolation reports any failure.  The
    returned ring structure lists products of the coset representatives.
    """
    alg = system.algebra
    center = alg.center_basis()
    ideal = frobenius_ideal(system)
    if not center.contains_subspace(ideal):
        raise IdealClosureViolation("factoring ideal is not central")
    for s_i, z in enumerate(center.basis_vectors()):
        for t_i, w in enumerate(ideal.basis_vectors()):
            if not ideal.contains(alg.mul(z, w)):
                raise IdealClosureViolation(
                    "ideal not absorbing under central multiplication",
                    witness=(s_i, t_i),
                )
    reps = center.complement_of(ideal)
    k = len(reps)
    span_rows = list(reps) + list(ideal.basis_vectors())
    bt = Matrix.from_rows(alg.field, span_rows, ncols=alg.dim).transpose() if span_rows \
        else Matrix.from_rows(alg.field, [[] for _ in range(alg.dim)], ncols=0)
    table: list[tuple[int, int, int, object]] = []
    for s in range(k):
        for t in range(k):
            prod = alg.mul(reps[s], reps[t])
            x = bt.solve(prod)
            if x is None:
                raise IdealClosureViolation(
                    "central product escapes center + ideal", witness=(s, t)
                )
            for c in range(k):
                if x[c]:
                    table.append((s, t, c, x[c]))
    return StableCenterResult(
        center.dim, ideal.dim, center.dim - ideal.dim, reps, table, center, ideal
    )


def stable_center_via_enveloping(system: FrobeniusSystem) -> int:
    """Stable endomorphisms of A as a bimodule over A (x) A^op."""
    env_sys = enveloping_system(system)
    bim = bimodule_regular(system.algebra)
    return stable_hom(env_sys, bim, bim).stable_dim


def enveloping_comparison(
    system: FrobeniusSystem, m: ModuleRep, n_: ModuleRep, budget: int = 20000
) -> tuple[int, int]:
    """(direct stable dim, stable dim of Hom_k(M, N) over A (x) A^op).

    The second route computes stable Hom from A (as a bimodule) into
    Hom_k(M, N); the two numbers must agree.  `budget` caps the problem
    size dim(A)^2 * dim(M) * dim(N).
    """
    _check_system_module(system, m, n_)
    m.same_algebra(n_)
    alg = system.algebra
    q = alg.dim * alg.dim * m.dim * n_.dim
    if q > budget:
        raise BudgetExceeded(
            f"problem size {q} exceeds budget {budget}", witness=q
        )
    direct = stable_hom(system, m, n_).stable_dim
    env_sys = enveloping_system(system)
    via = stable_hom(env_sys, bimodule_regular(alg), hom_bimodule(m, n_)).stable_dim
    return direct, via


# Tate degree zero for group algebras --------------------------------


@dataclass
class Tate0Result:
    invariants_dim: int
    norm_image_dim: int
    tate_dim: int


def _is_standard_group_system(system: FrobeniusSystem) -> bool:
    alg = system.algebra
    g = alg.group
    if g is None:
        return False
    n = alg.dim
    f = alg.field
    want_trace = tuple(f.one if i == g.identity else f.zero for i in range(n))
    if system.trace != want_trace:
        return False
    for i in range(n):
        if system.a_basis[i] != alg.basis_vector(i):
            return False
        if system.b_basis[i] != alg.basis_vector(g.inverse[i]):
            return False
    return True


def tate0(system: FrobeniusSystem, m: ModuleRep, n_: ModuleRep) -> Tate0Result:
    """Degree-zero Tate cohomology of Hom_k(M, N) for a group algebra.

    Invariants are the A-linear maps; the norm image is built straight from
    the group's multiplication table (sum over g of h |-> g h(g^-1 -)),
    independently of the Frobenius system's dual bases.
    """
    _check_system_module(system, m, n_)
    m.same_algebra(n_)
    g = system.algebra.group
    if g is None or not _is_standard_group_system(system):
        raise NotAGroupAlgebra(
            "tate0 needs a group algebra with its standard system "
            "(identity-coefficient trace, dual bases g and g^-1)"
        )
    f = system.algebra.field
    inv = hom_A(m, n_)
    mn, mm = n_.dim, m.dim
    amb = mn * mm
    add, mul = f.add, f.mul
    out = [[f.zero] * amb for _ in range(amb)]
    for gi in range(system.algebra.dim):
        am = n_.action[gi]
        bt = m.action[g.inverse[gi]].transpose()
        for r1 in range(mm):
            for c1 in range(mm):
                x = bt.at(r1, c1)
                if not x:
                    continue
                rbase, cbase = r1 * mn, c1 * mn
                for r2 in range(mn):
                    row = out[rbase + r2]
                    for c2 in range(mn):
                        y = am.at(r2, c2)
                        if y:
                            row[cbase + c2] = add(row[cbase + c2], mul(x, y))
    norm = Matrix.from_rows(f, out, ncols=amb)
    image = norm.image_basis()
    assert inv.contains_subspace(image), "norm image must be invariant"
    return Tate0Result(inv.dim, image.dim, inv.dim - image.dim)
