from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from tautilt.algebra import (AlgebraError, Arrow, Quiver, Relation, build_algebra, idempotent_quotient, is_dynkin,
                             linear_quiver, opposite, path_algebra, positive_root_count, tensor_construction)


def count_paths(quiver: Quiver) -> int:
    """Brute-force path count (including trivial paths) of an acyclic quiver."""
    out = {a.source: [] for a in quiver.arrows}
    for a in quiver.arrows:
        out[a.source].append(a.target)

    def from_vertex(v):
        return 1 + sum(from_vertex(w) for w in out.get(v, []))

    return sum(from_vertex(v) for v in quiver.vertices)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_linear_path_algebra_dimension(n):
    A = path_algebra(linear_quiver(n))
    assert A.dim == n * (n + 1) // 2 == count_paths(linear_quiver(n))
    assert A.check_associative()


def test_d4_path_algebra():
    q = Quiver(("1", "2", "3", "4"), (Arrow("a", "1", "2"), Arrow("b", "3", "2"), Arrow("c", "4", "2")))
    A = path_algebra(q)
    assert A.dim == count_paths(q) == 7
    assert is_dynkin(q) == ["D4"]
    assert positive_root_count(["D4"]) == 12


def test_kronecker_not_dynkin():
    q = Quiver(("1", "2"), (Arrow("a", "1", "2"), Arrow("b", "1", "2")))
    assert is_dynkin(q) is None


def test_kA2_basis_and_cartan(a2):
    assert [b.name for b in a2.basis] == ["e1", "e2", "a"]
    assert a2.cartan() == [[1, 1], [0, 1]]
    assert a2.is_hereditary()


def test_local_algebra(r_xy):
    assert r_xy.dim == 4
    assert r_xy.is_local() and r_xy.is_commutative()
    assert r_xy.radical_dimension() == 3
    assert not r_xy.is_hereditary()


def test_rad_square_quotient(a3rad2):
    assert a3rad2.dim == 5
    assert not a3rad2.is_hereditary()


def test_tensor_dimensions(lam, r_xy, dual_a3):
    assert lam.dim == r_xy.dim * 3 == 12
    assert dual_a3.dim == 2 * 6
    assert lam.check_associative()
    assert not lam.is_commutative()


def test_tensor_loops_commute_with_arrows(lam):
    # a x_1 = x_2 a as elements: compare the products of the corresponding basis elements
    idx = {lab: b for lab, b in lam.arrow_elems}
    ax = lam.mul(lam.unit_vec(idx["a"]), lam.unit_vec(idx["x_1"]))
    xa = lam.mul(lam.unit_vec(idx["x_2"]), lam.unit_vec(idx["a"]))
    assert ax == xa and any(ax)


def test_opposite_is_involution(lam):
    op = opposite(lam)
    assert opposite(op) is lam
    assert op.dim == lam.dim
    assert op.check_associative()
    assert op.cartan() == [list(r) for r in zip(*lam.cartan())]


def test_idempotent_quotient(lam, r_xy):
    Q = idempotent_quotient(lam, [0])
    assert Q.n == 1 and Q.dim == r_xy.dim
    assert Q.is_local() and Q.is_commutative()


def test_non_admissible_bound_rejected():
    q = Quiver(("1",), (Arrow("x", "1", "1"),))
    with pytest.raises(AlgebraError):
        build_algebra(q, [Relation.of((1, ("x", "x", "x")))], 2)


def test_tensor_requires_acyclic_quiver(r_xy):
    q = Quiver(("1",), (Arrow("z", "1", "1"),))
    with pytest.raises(AlgebraError):
        tensor_construction(r_xy, q)


@settings(max_examples=30, deadline=None)
@given(st.data())
def test_random_associativity(lam, data):
    vec = st.lists(st.integers(-2, 2), min_size=lam.dim, max_size=lam.dim)
    u, v, w = (list(map(Fraction, data.draw(vec))) for _ in range(3))
    assert lam.mul(lam.mul(u, v), w) == lam.mul(u, lam.mul(v, w))
