"""Module representations, embeddings, bimodule constructions."""

from __future__ import annotations

import pytest

from frobstab.errors import (
    AlgebraMismatch,
    NotAModule,
    NotInvariant,
    ParseError,
)
from frobstab.exactfield import Field
from frobstab.catalog import (
    cyclic_group,
    group_algebra,
    symmetric_group_3,
    truncated_module,
    truncated_polynomial,
)
from frobstab.frobenius import enveloping_system
from frobstab.linalg import Matrix, Subspace
from frobstab.modrep import (
    ModuleRep,
    bimodule_regular,
    canonical_embedding,
    direct_sum,
    free_module,
    hom_bimodule,
    module_from_json,
    module_to_json,
    multiplication_surjection,
    quotient_module,
    regular_module,
    submodule,
    validate_module,
)
from frobstab.stab import hom_A

Q = Field.rationals()
GF2 = Field.prime(2)


def test_regular_action_matrices():
    alg = truncated_polynomial(2, GF2).algebra
    reg = regular_module(alg)
    validate_module(reg)
    assert reg.action[1] == Matrix.from_rows(GF2, [[0, 0], [1, 0]])
    assert reg.action[0] == Matrix.identity(GF2, 2)


def test_validate_module_catches_bad_unit():
    alg = truncated_polynomial(2, Q).algebra
    bad = ModuleRep(alg, 1, (Matrix.zeros(Q, 1, 1), Matrix.zeros(Q, 1, 1)))
    with pytest.raises(NotAModule) as exc:
        validate_module(bad)
    assert exc.value.witness == "unit"


def test_validate_module_catches_bad_product():
    alg = truncated_polynomial(2, Q).algebra
    # x acting as the identity: x.x = 0 must act as 0, but I @ I = I
    bad = ModuleRep(alg, 1, (Matrix.identity(Q, 1), Matrix.identity(Q, 1)))
    with pytest.raises(NotAModule) as exc:
        validate_module(bad)
    assert exc.value.witness == (1, 1)


def test_free_rank_one_is_regular():
    for inst in (truncated_polynomial(3, Q), group_algebra(symmetric_group_3(), GF2)):
        free1 = free_module(inst.algebra, 1)
        reg = regular_module(inst.algebra)
        assert free1.action == reg.action


def test_free_modules_validate():
    for k in (0, 1, 2):
        m = free_module(truncated_polynomial(2, GF2).algebra, k)
        validate_module(m)
        assert m.dim == 2 * k


def test_canonical_embedding_explicit():
    inst = truncated_polynomial(2, Q)
    v0 = truncated_module(2, 0, Q)
    phi = canonical_embedding(inst.system, v0)
    assert phi == Matrix.from_rows(Q, [[0], [1]])


def test_canonical_embedding_tower():
    # for the 2-dimensional module over k[x]/(x^3):
    # phi(m) = x (x) (x m) + x^2 (x) m
    inst = truncated_polynomial(3, Q)
    v1 = truncated_module(3, 1, Q)
    phi = canonical_embedding(inst.system, v1)
    expect = Matrix.from_rows(Q, [
        [0, 0],
        [0, 0],
        [0, 0],
        [1, 0],
        [1, 0],
        [0, 1],
    ])
    assert phi == expect
    assert phi.rank() == v1.dim


def test_canonical_embedding_of_regular_has_full_rank():
    for inst in (truncated_polynomial(4, GF2), group_algebra(cyclic_group(3), Q)):
        reg = regular_module(inst.algebra)
        phi = canonical_embedding(inst.system, reg)
        assert phi.rank() == reg.dim


def test_multiplication_surjection():
    inst = truncated_polynomial(3, Q)
    reg = regular_module(inst.algebra)
    mu = multiplication_surjection(reg)
    assert mu.shape == (3, 9)
    assert mu.rank() == 3
    # section: j -> unit (x) e_j
    for j in range(3):
        col = [Q.zero] * 9
        for p in range(3):
            col[p * 3 + j] = inst.algebra.unit[p]
        assert mu.apply(tuple(col)) == tuple(
            Q.one if t == j else Q.zero for t in range(3)
        )


def test_hom_bimodule_validates_over_enveloping():
    inst = truncated_polynomial(2, GF2)
    reg = regular_module(inst.algebra)
    v0 = truncated_module(2, 0, GF2)
    hm = hom_bimodule(reg, v0)
    assert hm.dim == 2
    validate_module(hm)
    validate_module(bimodule_regular(inst.algebra))


def test_bimodule_invariants_are_module_maps():
    # evaluation at 1 identifies Hom_{A-A}(A, Hom_k(M, N)) with Hom_A(M, N)
    inst = truncated_polynomial(3, GF2)
    env = enveloping_system(inst.system)
    m, n_ = truncated_module(3, 1, GF2), truncated_module(3, 2, GF2)
    maps = hom_A(bimodule_regular(inst.algebra), hom_bimodule(m, n_))
    direct = hom_A(m, n_)
    unit = inst.algebra.unit
    evaluated = []
    for f in maps.basis_vectors():
        # f is vec of a (dim 6) x (dim 9) matrix; apply to vec of unit
        mat = Matrix.from_rows(
            GF2,
            [
                [f[c * (m.dim * n_.dim) + r] for c in range(inst.algebra.dim)]
                for r in range(m.dim * n_.dim)
            ],
        )
        evaluated.append(mat.apply(unit))
    image = Subspace.from_vectors(GF2, m.dim * n_.dim, evaluated)
    assert image == direct
    assert env.algebra.dim == 9


def test_submodule_socle():
    inst = truncated_polynomial(3, Q)
    reg = regular_module(inst.algebra)
    socle = Subspace.from_vectors(Q, 3, [(Q.zero, Q.zero, Q.one)])
    sub = submodule(reg, socle)
    v0 = truncated_module(3, 0, Q)
    assert sub.action == v0.action


def test_submodule_rejects_non_invariant():
    inst = truncated_polynomial(3, Q)
    reg = regular_module(inst.algebra)
    line = Subspace.from_vectors(Q, 3, [(Q.zero, Q.one, Q.zero)])
    with pytest.raises(NotInvariant) as exc:
        submodule(reg, line)
    assert exc.value.witness == 1


def test_quotient_by_socle():
    inst = truncated_polynomial(3, Q)
    reg = regular_module(inst.algebra)
    socle = Subspace.from_vectors(Q, 3, [(Q.zero, Q.zero, Q.one)])
    quo = quotient_module(reg, socle)
    v1 = truncated_module(3, 1, Q)
    assert quo.dim == 2
    assert quo.action == v1.action


def test_sub_quotient_dims_add_up():
    alg = group_algebra(cyclic_group(2), GF2).algebra
    reg = regular_module(alg)
    rad = Subspace.from_vectors(GF2, 2, [(1, 1)])
    sub = submodule(reg, rad)
    quo = quotient_module(reg, rad)
    validate_module(sub)
    validate_module(quo)
    assert sub.dim + quo.dim == reg.dim


def test_direct_sum_hom_additivity():
    inst = truncated_polynomial(3, GF2)
    v0 = truncated_module(3, 0, GF2)
    v1 = truncated_module(3, 1, GF2)
    both = direct_sum([v0, v1])
    validate_module(both)
    assert both.dim == 3
    assert (
        hom_A(both, v1).dim
        == hom_A(v0, v1).dim + hom_A(v1, v1).dim
    )


def test_module_json_round_trip():
    inst = truncated_polynomial(3, GF2)
    v1 = truncated_module(3, 1, GF2)
    obj = module_to_json(v1)
    back = module_from_json(obj, inst.algebra, accept_names={obj["algebra"]})
    assert back.action == v1.action
    assert back.name == v1.name


def test_module_json_algebra_mismatch():
    inst = truncated_polynomial(3, GF2)
    v1 = truncated_module(3, 1, GF2)
    obj = dict(module_to_json(v1))
    obj["algebra"] = "somewhere-else"
    with pytest.raises(AlgebraMismatch):
        module_from_json(obj, inst.algebra, accept_names={"trunc_poly_3"})


def test_module_json_strictness():
    inst = truncated_polynomial(3, GF2)
    v1 = truncated_module(3, 1, GF2)
    good = module_to_json(v1)
    bad = dict(good)
    bad["padding"] = []
    with pytest.raises(ParseError):
        module_from_json(bad, inst.algebra, accept_names={good["algebra"]})


def test_same_algebra_guard():
    a2 = truncated_polynomial(2, GF2)
    a3 = truncated_polynomial(3, GF2)
    m = truncated_module(2, 0, GF2)
    n_ = truncated_module(3, 0, GF2)
    with pytest.raises(AlgebraMismatch):
        hom_A(m, n_)
    assert a2.algebra != a3.algebra
