import pytest
from hypothesis import given, strategies as st

from tiltfan import lattice as la
from tiltfan.errors import DependentGenerators, DetNotUnit, NonSaturated, ZeroVector


def test_determinant_examples():
    assert la.determinant(((1, 0), (2, 1))) == 1
    assert la.determinant(((0, 2), (-2, 0))) == 4
    assert la.determinant(((2, 0), (0, 1))) == 2


def test_determinant_singular_and_empty():
    assert la.determinant(((1, 2), (2, 4))) == 0
    assert la.determinant(()) == 1


def test_invert_unimodular():
    ident = la.identity(3)
    assert la.invert_unimodular(ident) == ident
    m = ((-1, 0), (2, 1))
    assert la.invert_unimodular(m) == m  # involution: m * m = id
    assert la.matmul(m, m) == la.identity(2)
    with pytest.raises(DetNotUnit):
        la.invert_unimodular(((2, 0), (0, 1)))


def test_primitive():
    assert la.primitive((2, -4)) == (1, -2)
    assert la.primitive((0, -3)) == (0, -1)
    assert la.primitive((1, -2)) == (1, -2)  # idempotent
    with pytest.raises(ZeroVector):
        la.primitive((0, 0))


def test_quotient_projection_coordinate_kernel():
    q = la.quotient_projection([(1, 0, 0)], 3)
    assert len(q) == 2
    assert la.matvec(q, (1, 0, 0)) == (0, 0)


def test_quotient_projection_skew_kernel():
    q = la.quotient_projection([(1, -1, 0)], 3)
    assert la.matvec(q, (1, -1, 0)) == (0, 0)
    # surjectivity: the Smith form of q has both elementary divisors 1
    d, _u, _v = la._smith_normal_form(q)
    assert d[0][0] == 1 and d[1][1] == 1


def test_quotient_projection_full_rank():
    q = la.quotient_projection([(1, 0), (0, 1)], 2)
    assert q == ()


def test_quotient_projection_errors():
    with pytest.raises(DependentGenerators):
        la.quotient_projection([(1, 0), (2, 0)], 2)
    with pytest.raises(NonSaturated) as exc:
        la.quotient_projection([(2, 0)], 2)
    assert exc.value.divisor == 2


unimodular_elementary = st.sampled_from(
    [(i, j, c) for i in range(3) for j in range(3) if i != j for c in (-2, -1, 1, 2)]
)


@given(st.lists(unimodular_elementary, min_size=0, max_size=6))
def test_invert_unimodular_on_random_products(ops):
    m = la.identity(3)
    for i, j, c in ops:
        e = [list(r) for r in la.identity(3)]
        e[i][j] = c
        m = la.matmul(m, tuple(tuple(r) for r in e))
    assert la.determinant(m) in (1, -1)
    assert la.matmul(la.invert_unimodular(m), m) == la.identity(3)


@given(st.lists(st.integers(-30, 30), min_size=3, max_size=3))
def test_primitive_idempotent(entries):
    v = tuple(entries)
    if all(x == 0 for x in v):
        return
    p = la.primitive(v)
    assert la.primitive(p) == p


def test_quotient_projection_annihilates_generators():
    gens = [(1, 2, 0, -1), (0, 1, 1, 1)]
    q = la.quotient_projection(gens, 4)
    for g in gens:
        assert la.matvec(q, g) == (0, 0)


def test_kernel_functional():
    f = la.kernel_functional([(1, 0, 0), (0, 1, 0)], 3)
    assert f in ((0, 0, 1), (0, 0, -1))
    f = la.kernel_functional([(1, 1)], 2)
    assert la.dot(f, (1, 1)) == 0
