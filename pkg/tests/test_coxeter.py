import itertools
import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from coxgrowth.coxeter import (
    INF,
    CoxeterMatrix,
    finite_type,
    growth_poly_finite,
    steinberg_growth,
    tits_bfs_sphere_sizes,
)
from coxgrowth.errors import NotFinite, OracleTooLarge
from coxgrowth.polyalg import IntPoly, RatFunc, product, qint, taylor_coeffs


def chain(*labels):
    """Linear diagram with the given consecutive labels."""
    return CoxeterMatrix.from_labels(len(labels) + 1, [(i, i + 1, m) for i, m in enumerate(labels)])


def branch(a, b, c):
    """Star with arms of a, b, c nodes (all labels 3) around a centre node 0."""
    labels, nxt = [], 1
    for arm in (a, b, c):
        prev = 0
        for _ in range(arm):
            labels.append((prev, nxt, 3))
            prev, nxt = nxt, nxt + 1
    return CoxeterMatrix.from_labels(nxt, labels)


# Group orders from the classification, used as an independent check of the
# exponent tables through Solomon's formula at t = 1.
CATALOGUE = [
    (chain(3, 3), "A3", 24),
    (chain(3, 3, 3), "A4", 120),
    (chain(4, 3), "B3", 48),
    (chain(3, 3, 4), "B4", 384),
    (branch(1, 1, 1), "D4", 192),
    (branch(1, 1, 2), "D5", 1920),
    (branch(1, 2, 2), "E6", 51840),
    (branch(1, 2, 3), "E7", 2903040),
    (branch(1, 2, 4), "E8", 696729600),
    (chain(3, 4, 3), "F4", 1152),
    (chain(5, 3), "H3", 120),
    (chain(5, 3, 3), "H4", 14400),
    (chain(7), "I2(7)", 14),
    (chain(4), "B2", 8),
    (chain(3), "A2", 6),
]


@pytest.mark.parametrize("M,name,order", CATALOGUE, ids=[c[1] for c in CATALOGUE])
def test_catalogue_names_and_orders(M, name, order):
    ft = finite_type(M)
    assert ft is not None and ft.name == name
    f = growth_poly_finite(M)
    assert f(1) == order
    assert f.degree == sum(ft.exponents)  # number of reflections


def test_triangle_examples():
    assert finite_type(CoxeterMatrix.triangle(2, 5, 2)).name == "A1 x I2(5)"
    assert finite_type(CoxeterMatrix.triangle(2, 3, 6)) is None
    assert finite_type(CoxeterMatrix.triangle(5, 3, 2)).name == "H3"


@pytest.mark.parametrize("labels,exps", [
    ((2, 2, 7), (1, 1, 6)),
    ((2, 3, 3), (1, 2, 3)),
    ((2, 3, 4), (1, 3, 5)),
    ((2, 3, 5), (1, 5, 9)),
])
def test_triangle_exponents(labels, exps):
    a, b, c = labels
    # put the 2 between generators 0 and 2 so the diagram is a chain
    assert finite_type(CoxeterMatrix.triangle(b, c, a)).exponents == exps


def test_growth_poly_examples():
    n = 6
    assert growth_poly_finite(CoxeterMatrix.triangle(2, n, 2)) == qint(2) ** 2 * qint(n)
    assert growth_poly_finite(chain(n)) == qint(2) * qint(n)
    assert growth_poly_finite(chain(5, 3)) == qint(2) * qint(6) * qint(10)
    with pytest.raises(NotFinite):
        growth_poly_finite(CoxeterMatrix.triangle(3, 3, 3))


def test_affine_and_hyperbolic_are_infinite():
    for M in [chain(4, 4), chain(3, 6), chain(3, 3, 3, 3).permute(range(5)),
              branch(1, 1, 3).sub(range(6)), chain(5, 3, 3, 3), chain(3, 5, 3),
              chain(INF), chain(4, 3, 4), branch(2, 2, 2), branch(1, 3, 3)]:
        ft = finite_type(M)
        if M.rank == 5 and ft is not None:
            assert ft.name == "A5"
            continue
        if M.rank == 6 and ft is not None:
            assert ft.name == "D6"
            continue
        assert ft is None, M


def test_steinberg_examples():
    assert steinberg_growth(CoxeterMatrix.from_labels(1)) == RatFunc(IntPoly([1, 1]))
    f = steinberg_growth(chain(5, 3))
    assert f.is_polynomial() and f.as_poly() == qint(2) * qint(6) * qint(10)
    # (2,3,7): of the 12 words xyz with no letter repeated twice in a row,
    # aba and bab reduce, and abc=bac, cab=cba, bcb=cbc leave 7 elements
    assert taylor_coeffs(steinberg_growth(chain(3, 7)), 4) == [1, 3, 5, 7]
    # (2,4,5) does grow by 8 at length three
    assert taylor_coeffs(steinberg_growth(chain(4, 5)), 4) == [1, 3, 5, 8]


def _finite_matrices_rank_le_4():
    yield from (CoxeterMatrix.from_labels(1), chain(3), chain(4), chain(5), chain(6), chain(8))
    for labels in itertools.product((2, 3, 4, 5), repeat=3):
        M = CoxeterMatrix.triangle(*labels)
        if finite_type(M) is not None:
            yield M
    for labels in itertools.product((2, 3, 4, 5), repeat=6):
        pairs = list(itertools.combinations(range(4), 2))
        M = CoxeterMatrix.from_labels(4, [(i, j, m) for (i, j), m in zip(pairs, labels)])
        if finite_type(M) is not None:
            yield M


def test_steinberg_equals_solomon_for_finite_types():
    count = 0
    for M in _finite_matrices_rank_le_4():
        f = steinberg_growth(M)
        assert f.is_polynomial() and f.as_poly() == growth_poly_finite(M)
        count += 1
    assert count > 100


@st.composite
def coxeter_matrices(draw, max_rank=5):
    n = draw(st.integers(1, max_rank))
    labels = []
    for i in range(n):
        for j in range(i + 1, n):
            labels.append((i, j, draw(st.sampled_from([2, 2, 2, 3, 3, 4, 5, 6, INF]))))
    return CoxeterMatrix.from_labels(n, labels)


@given(coxeter_matrices(), st.randoms())
def test_finite_type_permutation_invariant(M, rnd):
    perm = list(range(M.rank))
    rnd.shuffle(perm)
    a, b = finite_type(M), finite_type(M.permute(perm))
    assert (a is None) == (b is None)
    if a is not None:
        assert a.labels == b.labels and a.exponents == b.exponents


@given(coxeter_matrices())
def test_steinberg_constant_term_is_one(M):
    f = steinberg_growth(M)
    assert f(0) == 1


@given(st.integers(2, 7), st.integers(2, 7), st.integers(2, 7))
def test_bfs_matches_taylor_rank3(a, b, c):
    M = CoxeterMatrix.triangle(a, b, c)
    depth = 7
    assert tits_bfs_sphere_sizes(M, depth) == taylor_coeffs(steinberg_growth(M), depth + 1)


def test_bfs_examples():
    assert tits_bfs_sphere_sizes(CoxeterMatrix.from_labels(1), 3) == [1, 1, 0, 0]
    assert tits_bfs_sphere_sizes(CoxeterMatrix.from_labels(3), 4) == [1, 3, 3, 1, 0]
    h3 = tits_bfs_sphere_sizes(chain(5, 3), 15)
    assert sum(h3) == 120 and h3 == list((qint(2) * qint(6) * qint(10)).coeffs)


@pytest.mark.parametrize("M,name,order", [c for c in CATALOGUE if c[2] <= 1152], ids=lambda c: str(c) if isinstance(c, str) else None)
def test_bfs_enumerates_whole_group(M, name, order):
    f = growth_poly_finite(M)
    sizes = tits_bfs_sphere_sizes(M, f.degree + 1)
    assert sizes == list(f.coeffs) + [0]


def test_bfs_size_guard():
    with pytest.raises(OracleTooLarge):
        tits_bfs_sphere_sizes(CoxeterMatrix.triangle(3, 3, 4), 12, max_elements=200)


def test_json_roundtrip():
    M = CoxeterMatrix.from_labels(4, [(0, 1, 3), (1, 2, INF), (2, 3, 5)])
    data = json.loads(json.dumps(M.to_json()))
    assert data["labels"] == [[0, 1, 3], [1, 2, "inf"], [2, 3, 5]]
    assert CoxeterMatrix.from_json(data) == M


def test_invalid_matrices_rejected():
    with pytest.raises(ValueError):
        CoxeterMatrix(((1, 3), (2, 1)))
    with pytest.raises(ValueError):
        CoxeterMatrix.from_labels(2, [(0, 1, 1)])
