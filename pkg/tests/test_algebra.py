"""Structure-constant algebra tests."""

from __future__ import annotations

import random

import pytest

from frobstab.errors import (
    DimensionMismatch,
    FieldMismatch,
    IndexOutOfRange,
    NotAssociative,
    ParseError,
    UnitMismatch,
)
from frobstab.exactfield import Field
from frobstab.algebra import (
    StructureAlgebra,
    algebra_from_json,
    algebra_to_json,
    enveloping,
    opposite,
    tensor,
)
from frobstab.catalog import (
    cyclic_group,
    group_algebra,
    klein_four_group,
    symmetric_group_3,
    truncated_polynomial,
)
from frobstab.linalg import Matrix, Subspace, kron

Q = Field.rationals()
GF2 = Field.prime(2)
GF3 = Field.prime(3)


def trunc2(field):
    one = field.one
    return StructureAlgebra.from_entries(
        field, 2,
        [(0, 0, 0, one), (0, 1, 1, one), (1, 0, 1, one)],
        unit=(one, field.zero), name="x2-by-hand",
    )


def rand_elem(alg, rng):
    if alg.field.kind == "rational":
        return tuple(alg.field.from_int(rng.randint(-3, 3)) for _ in range(alg.dim))
    return tuple(rng.randrange(alg.field.p) for _ in range(alg.dim))


def test_hand_built_algebra_validates():
    a = trunc2(Q)
    a.validate()
    rep = a.validation_report()
    assert rep.ok


def unital_entries(field, dim, extra):
    one = field.one
    out = []
    for j in range(dim):
        out.append((0, j, j, one))
        if j:
            out.append((j, 0, j, one))
    return out + list(extra)


def test_perturbed_constant_breaks_associativity():
    one = Q.one
    # x*x = y, x*y = 1, y*anything = 0: then (x*x)*y = y*y = 0 while
    # x*(x*y) = x*1 = x
    bad = StructureAlgebra.from_entries(
        Q, 3,
        unital_entries(Q, 3, [(1, 1, 2, one), (1, 2, 0, one)]),
        unit=(one, Q.zero, Q.zero),
    )
    rep = bad.validation_report()
    assert not rep.ok
    assert (1, 1, 2) in rep.associative_failures
    with pytest.raises(NotAssociative) as exc:
        bad.validate()
    assert exc.value.witness == rep.associative_failures


def test_broken_unit_reported():
    one = Q.one
    a = StructureAlgebra.from_entries(
        Q, 2, [(0, 0, 0, one), (0, 1, 1, one), (1, 0, 1, one)],
        unit=(Q.zero, one),
    )
    rep = a.validation_report()
    assert rep.unit_failures
    with pytest.raises(UnitMismatch):
        a.validate()


def test_basic_products():
    alg = truncated_polynomial(3, Q).algebra
    x = alg.basis_vector(1)
    assert alg.mul(x, x) == alg.basis_vector(2)
    assert alg.mul(x, alg.basis_vector(2)) == alg.zero_vector()
    e_plus_g = None
    kc2 = group_algebra(cyclic_group(2), GF2).algebra
    e_plus_g = (GF2.one, GF2.one)
    assert kc2.mul(e_plus_g, e_plus_g) == kc2.zero_vector()


def test_mult_matrices_against_products():
    rng = random.Random(17)
    for alg in (
        truncated_polynomial(4, GF3).algebra,
        group_algebra(symmetric_group_3(), GF2).algebra,
    ):
        for _ in range(10):
            a, b = rand_elem(alg, rng), rand_elem(alg, rng)
            la = alg.left_mult_matrix(a)
            rb = alg.right_mult_matrix(b)
            assert la.apply(b) == alg.mul(a, b)
            assert rb.apply(a) == alg.mul(a, b)
            # composition rules and commutation of left with right
            ab = alg.mul(a, b)
            assert alg.left_mult_matrix(ab) == la @ alg.left_mult_matrix(b)
            assert alg.right_mult_matrix(ab) == alg.right_mult_matrix(b) @ alg.right_mult_matrix(a)
            assert la @ rb == rb @ la
    alg = truncated_polynomial(3, Q).algebra
    assert alg.left_mult_matrix(alg.unit) == Matrix.identity(Q, 3)


def test_opposite():
    s3 = group_algebra(symmetric_group_3(), Q).algebra
    op = opposite(s3)
    assert op.cells != s3.cells
    assert opposite(op) == s3
    comm = truncated_polynomial(3, Q).algebra
    assert opposite(comm) == comm
    op.validate()


def test_tensor_dims_and_validity():
    a = truncated_polynomial(2, GF2).algebra
    b = group_algebra(cyclic_group(2), GF2).algebra
    t = tensor(a, b)
    assert t.dim == 4
    t.validate()
    with pytest.raises(FieldMismatch):
        tensor(a, group_algebra(cyclic_group(2), GF3).algebra)


def test_tensor_left_mult_is_kron():
    rng = random.Random(31)
    a = truncated_polynomial(2, GF3).algebra
    b = group_algebra(cyclic_group(3), GF3).algebra
    t = tensor(a, b)
    for _ in range(8):
        x, y = rand_elem(a, rng), rand_elem(b, rng)
        xy = tuple(
            GF3.mul(x[p], y[q]) for p in range(a.dim) for q in range(b.dim)
        )
        assert t.left_mult_matrix(xy) == kron(a.left_mult_matrix(x), b.left_mult_matrix(y))


def test_enveloping_dim_and_validity():
    a = truncated_polynomial(2, GF2).algebra
    env = enveloping(a)
    assert env.dim == 4
    env.validate()
    env_s3 = enveloping(group_algebra(symmetric_group_3(), GF2).algebra)
    assert env_s3.dim == 36


def test_center_of_commutative_is_everything():
    for n in (1, 2, 5):
        alg = truncated_polynomial(n, Q).algebra
        assert alg.center_basis().dim == n


def test_center_of_s3_is_class_sums():
    # independent oracle: the center of a group algebra is spanned by the
    # conjugacy class sums e, r + r2, s + rs + r2s
    for f in (Q, GF2, GF3):
        alg = group_algebra(symmetric_group_3(), f).algebra
        z = alg.center_basis()
        one, zero = f.one, f.zero
        sums = [
            (one, zero, zero, zero, zero, zero),
            (zero, one, one, zero, zero, zero),
            (zero, zero, zero, one, one, one),
        ]
        expected = Subspace.from_vectors(f, 6, sums)
        assert z == expected


def test_center_is_closed_under_products():
    rng = random.Random(3)
    alg = group_algebra(klein_four_group(), GF2).algebra
    z = alg.center_basis()
    for v in z.basis_vectors():
        for w in z.basis_vectors():
            assert z.contains(alg.mul(v, w))


def test_json_round_trip():
    inst = truncated_polynomial(3, GF2)
    obj = algebra_to_json(inst.algebra, trace=inst.system.trace)
    back, trace = algebra_from_json(obj)
    assert back == inst.algebra
    assert trace == inst.system.trace
    assert back.basis_names == inst.algebra.basis_names
    obj_q = algebra_to_json(group_algebra(symmetric_group_3(), Q).algebra)
    back_q, trace_q = algebra_from_json(obj_q)
    assert back_q == group_algebra(symmetric_group_3(), Q).algebra
    assert trace_q is None


def test_json_strictness():
    inst = truncated_polynomial(2, Q)
    good = algebra_to_json(inst.algebra, trace=inst.system.trace)

    bad = dict(good); bad["extra"] = 1
    with pytest.raises(ParseError):
        algebra_from_json(bad)

    bad = dict(good); del bad["unit"]
    with pytest.raises(ParseError):
        algebra_from_json(bad)

    bad = dict(good); bad["format"] = "frobstab-algebra/2"
    with pytest.raises(ParseError):
        algebra_from_json(bad)

    bad = dict(good); bad["mult"] = good["mult"] + [good["mult"][0]]
    with pytest.raises(ParseError):
        algebra_from_json(bad)

    bad = dict(good); bad["mult"] = [[0, 0, 5, "1"]]
    with pytest.raises(ParseError):
        algebra_from_json(bad)

    bad = dict(good); bad["mult"] = [[0, 0, 0, "1/0"]]
    with pytest.raises(ParseError):
        algebra_from_json(bad)

    # zero-valued entries are tolerated and dropped
    ok = dict(good); ok["mult"] = good["mult"] + [[1, 1, 0, "0"]]
    back, _ = algebra_from_json(ok)
    assert back == inst.algebra


def test_constructor_guards():
    with pytest.raises(DimensionMismatch):
        StructureAlgebra(Q, 2, [[(), ()], [(), ()]], unit=(Q.one,))
    with pytest.raises(IndexOutOfRange):
        StructureAlgebra.from_entries(Q, 2, [(0, 0, 7, Q.one)], unit=(Q.one, Q.zero))
    with pytest.raises(IndexOutOfRange):
        StructureAlgebra.from_entries(Q, 2, [(0, 3, 0, Q.one)], unit=(Q.one, Q.zero))
