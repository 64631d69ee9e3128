"""Frobenius systems: a nondegenerate trace with a pair of dual bases.

A system on an algebra A is (trace, {a_i}, {b_i}) with, for every a in A,

    sum_i a_i * trace(b_i * a) = a = sum_i trace(a * a_i) * b_i.

`derive_system` builds one from a trace alone: with a_i = e_i, duality
forces b_i = sum_k (G^-1)[i][k] e_k where G[i][j] = trace(e_i e_j) is the
Gram matrix, and nondegeneracy of the trace is exactly invertibility of G.
Systems form a torsor under the invertible elements (`twist`), and transport
to the enveloping algebra A (x) A^op (`enveloping_system`).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    CentralityViolation,
    DegenerateTrace,
    DimensionMismatch,
    NonInvertibleTwist,
    ParseError,
)
from .algebra import StructureAlgebra, enveloping
from .linalg import Matrix


@dataclass(frozen=True)
class FrobeniusSystem:
    algebra: StructureAlgebra
    trace: tuple
    a_basis: tuple[tuple, ...]
    b_basis: tuple[tuple, ...]

    def __post_init__(self):
        n = self.algebra.dim
        if len(self.trace) != n:
            raise DimensionMismatch("trace has wrong length")
        if len(self.a_basis) != n or len(self.b_basis) != n:
            raise DimensionMismatch("dual bases must have dim elements")
        for v in self.a_basis + self.b_basis:
            if len(v) != n:
                raise DimensionMismatch("dual basis element has wrong length")

    def trace_of(self, x: tuple):
        f = self.algebra.field
        acc = f.zero
        for c, t in zip(x, self.trace):
            if c and t:
                acc = f.add(acc, f.mul(c, t))
        return acc


def gram_matrix(algebra: StructureAlgebra, trace: tuple) -> Matrix:
    """G[i][j] = trace(e_i * e_j)."""
    f = algebra.field
    n = algebra.dim
    if len(trace) != n:
        raise DimensionMismatch("trace has wrong length")
    out = [f.zero] * (n * n)
    for i in range(n):
        for j in range(n):
            acc = f.zero
            for k, v in algebra.cells[i][j]:
                t = trace[k]
                if t:
                    acc = f.add(acc, f.mul(v, t))
            out[i * n + j] = acc
    return Matrix(f, n, n, tuple(out))


def derive_system(algebra: StructureAlgebra, trace: tuple) -> FrobeniusSystem:
    """Dual bases from a trace; DegenerateTrace (with rank deficit) if singular."""
    n = algebra.dim
    g = gram_matrix(algebra, trace)
    ginv = g.inverse()
    if ginv is None:
        deficit = n - g.rank()
        raise DegenerateTrace(
            f"trace Gram matrix has rank deficit {deficit}", witness=deficit
        )
    a_basis = tuple(algebra.basis_vector(i) for i in range(n))
    b_basis = tuple(ginv.row(i) for i in range(n))
    system = FrobeniusSystem(algebra, tuple(trace), a_basis, b_basis)
    assert check_identities(system)
    return system


def check_identities(system: FrobeniusSystem) -> bool:
    """Both defining identities, on every basis element."""
    alg = system.algebra
    f = alg.field
    n = alg.dim
    for j in range(n):
        e = alg.basis_vector(j)
        left = [f.zero] * n
        right = [f.zero] * n
        for i in range(n):
            c1 = system.trace_of(alg.mul(system.b_basis[i], e))
            if c1:
                for p, x in enumerate(system.a_basis[i]):
                    if x:
                        left[p] = f.add(left[p], f.mul(c1, x))
            c2 = system.trace_of(alg.mul(e, system.a_basis[i]))
            if c2:
                for p, x in enumerate(system.b_basis[i]):
                    if x:
                        right[p] = f.add(right[p], f.mul(c2, x))
        if tuple(left) != e or tuple(right) != e:
            return False
    return True


def frobenius_element(system: FrobeniusSystem) -> tuple:
    """sum_i a_i (x) b_i as a vector over the i-major product basis.

    Verifies the centrality property sum_i (a a_i) (x) b_i =
    sum_i a_i (x) (b_i a) on every basis element a before returning.
    """
    alg = system.algebra
    f = alg.field
    n = alg.dim
    out = [f.zero] * (n * n)
    for a_i, b_i in zip(system.a_basis, system.b_basis):
        for p, x in enumerate(a_i):
            if not x:
                continue
            base = p * n
            for q, y in enumerate(b_i):
                if y:
                    out[base + q] = f.add(out[base + q], f.mul(x, y))
    for t in range(n):
        e = alg.basis_vector(t)
        lhs = [f.zero] * (n * n)
        rhs = [f.zero] * (n * n)
        for a_i, b_i in zip(system.a_basis, system.b_basis):
            ea = alg.mul(e, a_i)
            for p, x in enumerate(ea):
                if not x:
                    continue
                base = p * n
                for q, y in enumerate(b_i):
                    if y:
                        lhs[base + q] = f.add(lhs[base + q], f.mul(x, y))
            be = alg.mul(b_i, e)
            for p, x in enumerate(a_i):
                if not x:
                    continue
                base = p * n
                for q, y in enumerate(be):
                    if y:
                        rhs[base + q] = f.add(rhs[base + q], f.mul(x, y))
        if lhs != rhs:
            raise CentralityViolation(
                f"centrality fails against basis element {t}", witness=t
            )
    return tuple(out)


def element_inverse(algebra: StructureAlgebra, d: tuple) -> tuple | None:
    """Two-sided inverse of d, or None (one-sided suffices in finite dimension)."""
    li = algebra.left_mult_matrix(d).inverse()
    if li is None:
        return None
    return li.apply(algebra.unit)


def twist(system: FrobeniusSystem, d: tuple, side: str = "left") -> FrobeniusSystem:
    """Replace the trace by x |-> trace(x d) (left) or x |-> trace(d x) (right).

    d must be invertible; the dual bases adjust to {a_i d^-1} / {d^-1 b_i}
    so the identities keep holding exactly.
    """
    alg = system.algebra
    d_inv = element_inverse(alg, d)
    if d_inv is None:
        raise NonInvertibleTwist("twist element is not invertible", witness=tuple(d))
    n = alg.dim
    if side == "left":
        new_trace = tuple(
            system.trace_of(alg.mul(alg.basis_vector(j), d)) for j in range(n)
        )
        a_basis = tuple(alg.mul(a, d_inv) for a in system.a_basis)
        b_basis = system.b_basis
    elif side == "right":
        new_trace = tuple(
            system.trace_of(alg.mul(d, alg.basis_vector(j))) for j in range(n)
        )
        a_basis = system.a_basis
        b_basis = tuple(alg.mul(d_inv, b) for b in system.b_basis)
    else:
        raise ParseError(f"twist side must be 'left' or 'right', got {side!r}")
    out = FrobeniusSystem(alg, new_trace, a_basis, b_basis)
    assert check_identities(out)
    return out


def enveloping_system(system: FrobeniusSystem) -> FrobeniusSystem:
    """Transport to A (x) A^op: trace (x) trace with dual bases
    {a_i (x) b_j} and {b_i (x) a_j}, indexed by the same (i, j) pairs."""
    alg = system.algebra
    f = alg.field
    n = alg.dim
    env = enveloping(alg)

    def outer(x: tuple, y: tuple) -> tuple:
        out = [f.zero] * (n * n)
        for p, c in enumerate(x):
            if not c:
                continue
            base = p * n
            for q, d in enumerate(y):
                if d:
                    out[base + q] = f.mul(c, d)
        return tuple(out)

    trace = outer(system.trace, system.trace)
    a_basis = []
    b_basis = []
    for i in range(n):
        for j in range(n):
            a_basis.append(outer(system.a_basis[i], system.b_basis[j]))
            b_basis.append(outer(system.b_basis[i], system.a_basis[j]))
    out = FrobeniusSystem(env, trace, tuple(a_basis), tuple(b_basis))
    assert check_identities(out)
    return out


# JSON ---------------------------------------------------------------


def system_to_json(system: FrobeniusSystem) -> dict:
    fmt = system.algebra.field.to_str
    return {
        "trace": [fmt(x) for x in system.trace],
        "a_basis": [[fmt(x) for x in v] for v in system.a_basis],
        "b_basis": [[fmt(x) for x in v] for v in system.b_basis],
    }


def system_from_json(algebra: StructureAlgebra, obj) -> FrobeniusSystem:
    if not isinstance(obj, dict) or set(obj) != {"trace", "a_basis", "b_basis"}:
        raise ParseError("system needs exactly trace, a_basis, b_basis")
    n = algebra.dim
    parse = algebra.field.parse

    def parse_vec(v) -> tuple:
        if not isinstance(v, list) or len(v) != n:
            raise ParseError("system vector has wrong length")
        return tuple(parse(s) for s in v)

    if not isinstance(obj["a_basis"], list) or not isinstance(obj["b_basis"], list):
        raise ParseError("dual bases must be lists")
    if len(obj["a_basis"]) != n or len(obj["b_basis"]) != n:
        raise ParseError("dual bases must have dim vectors")
    return FrobeniusSystem(
        algebra,
        parse_vec(obj["trace"]),
        tuple(parse_vec(v) for v in obj["a_basis"]),
        tuple(parse_vec(v) for v in obj["b_basis"]),
    )
