import random
from fractions import Fraction

import pytest

from fticalc import _intlinalg as la
from fticalc.links import (
    BlinkPresentation,
    FormalSum,
    FramedLink,
    LaurentPoly,
    SeifertMatrix,
    alexander,
    blink_linking_matrix,
    boundary_to_blink,
    bracket_expand,
    casson,
    fundamental_relation,
    is_unimodular,
    phi,
    seifert_congruent,
    seifert_framing_to_framing,
)

TREFOIL = SeifertMatrix.knot([[-1, 1], [0, -1]])
FIGURE8 = SeifertMatrix.knot([[1, 1], [0, -1]])
UNKNOT = SeifertMatrix.knot([])


def random_blink(rng, r, lo=-10, hi=10):
    internal = [rng.randint(lo, hi) for _ in range(r)]
    eps = [rng.choice((1, -1)) for _ in range(r)]
    cross = [[0] * r for _ in range(r)]
    for p in range(r):
        for q in range(p + 1, r):
            cross[p][q] = cross[q][p] = rng.randint(lo, hi)
    return BlinkPresentation.from_pair_data(internal, eps, cross)


def random_knot_block(rng, genus):
    """Seifert matrix with A - A^T unimodular: symmetric part random,
    skew part a unimodular skew form conjugated by a random unimodular P."""
    n = 2 * genus
    j = [[0] * n for _ in range(n)]
    for h in range(genus):
        j[2 * h][2 * h + 1] = 1
        j[2 * h + 1][2 * h] = -1
    p = [[1 if i == k else 0 for k in range(n)] for i in range(n)]
    for _ in range(2 * n):
        i, k = rng.sample(range(n), 2)
        c = rng.randint(-1, 1)
        for col in range(n):
            p[i][col] += c * p[k][col]
    pj = la.mat_mul(la.mat_mul(la.transpose(tuple(map(tuple, p)))
                               , tuple(map(tuple, j))), tuple(map(tuple, p)))
    a = [[0] * n for _ in range(n)]
    for i in range(n):
        for k in range(i, n):
            s = rng.randint(-2, 2)
            a[i][k] += s
            if k != i:
                a[k][i] += s
    for i in range(n):
        for k in range(i + 1, n):
            a[i][k] += pj[i][k]
    return SeifertMatrix.knot(a)


def test_blink_linking_matrix_block():
    b = BlinkPresentation.from_pair_data([3], [1])
    assert blink_linking_matrix(b) == ((4, 3), (3, 2))
    assert blink_linking_matrix(BlinkPresentation(0, (), ())) == ()


def test_blink_linking_matrix_bordered_display():
    # second pair borders the first with its cross column repeated
    b = BlinkPresentation.from_pair_data([2, -1], [1, -1], {(0, 1): 5})
    m = blink_linking_matrix(b)
    assert m == (
        (3, 2, 5, 5),
        (2, 1, 5, 5),
        (5, 5, -2, -1),
        (5, 5, -1, 0),
    )


def test_blink_inconsistent_pair_data():
    bad = BlinkPresentation(
        2,
        [
            [0, 0, 1, 0],
            [0, 0, 0, 0],
            [1, 0, 0, 0],
            [0, 0, 0, 0],
        ],
        [1, 1],
    )
    with pytest.raises(ValueError):
        blink_linking_matrix(bad)
    missing = BlinkPresentation.from_pair_data([0], [None])
    with pytest.raises(ValueError):
        blink_linking_matrix(missing)


def test_one_pair_determinant_symbolic():
    for l in range(-50, 51):
        for eps in (1, -1):
            m = blink_linking_matrix(BlinkPresentation.from_pair_data([l], [eps]))
            assert la.det(m) == -1


def test_blink_unimodularity_random():
    rng = random.Random(71)
    for _ in range(150):
        b = random_blink(rng, rng.randint(0, 5))
        assert is_unimodular(blink_linking_matrix(b))


def test_is_unimodular_examples():
    assert is_unimodular(((4, 3), (3, 2)))
    assert is_unimodular(((1,),))
    assert not is_unimodular(((2, 0), (0, 1)))
    with pytest.raises(ValueError):
        is_unimodular(((1, 2),))


def test_bracket_expand_examples():
    empty = FramedLink(0, ())
    s = bracket_expand("M", empty)
    assert s.terms == {("M", frozenset()): Fraction(1)}

    l2 = FramedLink(2, [[1, 0], [0, -1]])
    s = bracket_expand("M", l2)
    assert len(s) == 4
    assert s.terms[("M", frozenset())] == 1
    assert s.terms[("M", frozenset([("comp", 0)]))] == -1
    assert s.terms[("M", frozenset([("comp", 1)]))] == -1
    assert s.terms[("M", frozenset([("comp", 0), ("comp", 1)]))] == 1

    b1 = BlinkPresentation.from_pair_data([0], [1])
    s = bracket_expand("M", b1)
    assert s.terms == {
        ("M", frozenset()): Fraction(1),
        ("M", frozenset([("pair", 0)])): Fraction(-1),
    }


def test_bracket_counts_and_zero_sum():
    rng = random.Random(73)
    for n in range(1, 5):
        lk = [[0] * n for _ in range(n)]
        for i in range(n):
            lk[i][i] = rng.choice((1, -1))
        s = bracket_expand("M", FramedLink(n, lk))
        assert len(s) == 2 ** n
        assert s.coefficient_sum() == 0
    for r in range(1, 5):
        s = bracket_expand("M", random_blink(rng, r))
        assert len(s) == 2 ** r
        assert s.coefficient_sum() == 0


def test_bracket_inadmissible():
    with pytest.raises(ValueError):
        bracket_expand("M", FramedLink(2, [[1, 1], [1, -1]]))
    with pytest.raises(ValueError):
        bracket_expand("M", FramedLink(1, [[2]]))
    with pytest.raises(ValueError):
        bracket_expand("M", BlinkPresentation.from_pair_data([0], [None]))


def test_fundamental_relation_simple():
    l1 = FramedLink(1, [[1]])
    none = BlinkPresentation(0, (), ())
    lhs, rhs = fundamental_relation("M", none, l1, ("comp", 0))
    assert lhs == rhs
    assert lhs.terms == {
        ("M", frozenset()): Fraction(1),
        ("M", frozenset([("comp", 0)])): Fraction(-1),
    }


def test_fundamental_relation_exhaustive():
    rng = random.Random(79)
    none = BlinkPresentation(0, (), ())
    for n in range(1, 5):
        lk = [[0] * n for _ in range(n)]
        for i in range(n):
            lk[i][i] = rng.choice((1, -1))
        link = FramedLink(n, lk)
        for i in range(n):
            lhs, rhs = fundamental_relation("M", none, link, ("comp", i))
            assert lhs == rhs
    for r in (1, 2):
        blink = random_blink(rng, r)
        link = FramedLink(2, [[1, 0], [0, -1]])
        for p in range(r):
            lhs, rhs = fundamental_relation("M", blink, link, ("pair", p))
            assert lhs == rhs
        for i in range(2):
            lhs, rhs = fundamental_relation("M", blink, link, ("comp", i))
            assert lhs == rhs


def test_fundamental_relation_absent_piece():
    l1 = FramedLink(1, [[1]])
    none = BlinkPresentation(0, (), ())
    with pytest.raises(ValueError):
        fundamental_relation("M", none, l1, ("comp", 3))
    with pytest.raises(ValueError):
        fundamental_relation("M", none, l1, ("pair", 0))


def test_seifert_framing_conversion():
    assert seifert_framing_to_framing(1, -1, 0) == (1, -1)
    assert seifert_framing_to_framing(1, -1, 3) == (4, 2)
    assert seifert_framing_to_framing(0, 0, 7) == (7, 7)


def test_boundary_to_blink():
    single = FramedLink(1, [[1]], boundary=True)
    b = boundary_to_blink(single)
    m = blink_linking_matrix(b)
    assert m == ((1, 0), (0, -1))
    assert la.det(m) == -1

    empty = FramedLink(0, (), boundary=True)
    assert boundary_to_blink(empty).pairs == 0

    two = FramedLink(2, [[1, 0], [0, -1]], boundary=True)
    b = boundary_to_blink(two)
    assert abs(la.det(blink_linking_matrix(b))) == abs(la.det(two.lk))

    with pytest.raises(ValueError):
        boundary_to_blink(FramedLink(1, [[2]], boundary=True))
    with pytest.raises(ValueError):
        boundary_to_blink(FramedLink(1, [[1]]))


def poly_from_pairs(pairs):
    return LaurentPoly(dict(pairs))


def test_alexander_examples():
    assert alexander(UNKNOT) == poly_from_pairs([(0, 1)])
    # oracle: 2x2 determinant expansion of t^(1/2)A - t^(-1/2)A^T:
    # det = (t a00 - a00)(t a11 - a11) - (t a01 - a10)(t a10 - a01), then / t
    a = TREFOIL.entries
    raw = (
        poly_from_pairs([(1, a[0][0]), (0, -a[0][0])])
        * poly_from_pairs([(1, a[1][1]), (0, -a[1][1])])
        - poly_from_pairs([(1, a[0][1]), (0, -a[1][0])])
        * poly_from_pairs([(1, a[1][0]), (0, -a[0][1])])
    ).shift(-1)
    assert alexander(TREFOIL) == raw
    assert alexander(TREFOIL) == poly_from_pairs([(1, 1), (0, -1), (-1, 1)])
    assert alexander(FIGURE8) == poly_from_pairs([(1, -1), (0, 3), (-1, -1)])


def test_alexander_torus_knot_value():
    # genus-2 band matrix of the (2,5) torus knot; its polynomial is the
    # textbook t^2 - t + 1 - t^-1 + t^-2
    t25 = SeifertMatrix.knot(
        [[-1, 1, 0, 0], [0, -1, 1, 0], [0, 0, -1, 1], [0, 0, 0, -1]]
    )
    assert alexander(t25) == poly_from_pairs(
        [(2, 1), (1, -1), (0, 1), (-1, -1), (-2, 1)]
    )
    assert phi(t25) == 6


def test_alexander_symmetry_and_normalization():
    rng = random.Random(83)
    for _ in range(60):
        block = random_knot_block(rng, rng.randint(1, 3))
        d = alexander(block)
        assert d == d.reciprocal()
        assert d(1) == 1


def test_alexander_degenerate():
    with pytest.raises(ValueError):
        alexander(SeifertMatrix.knot([[1, 0], [0, 1]]))
    with pytest.raises(ValueError):
        alexander(SeifertMatrix((2, 2), [[0] * 4] * 4))


def test_phi_examples():
    assert phi(UNKNOT) == 0
    assert phi(TREFOIL) == 2
    assert phi(FIGURE8) == -2


def test_casson_examples():
    assert casson([], []) == 0
    assert casson([1], [TREFOIL]) == 2
    assert casson([1, 1], [TREFOIL, FIGURE8]) == 0
    with pytest.raises(ValueError):
        casson([1], [])


def test_casson_linear_in_framings():
    rng = random.Random(89)
    blocks = [TREFOIL, FIGURE8, random_knot_block(rng, 1)]
    f1 = [1, -1, 1]
    f2 = [-1, -1, 1]
    fsum = [a + b for a, b in zip(f1, f2)]
    assert casson(fsum, blocks) == casson(f1, blocks) + casson(f2, blocks)
    assert casson([-f for f in f1], blocks) == -casson(f1, blocks)


def test_seifert_congruent_examples():
    assert seifert_congruent(UNKNOT, UNKNOT, 1)
    assert seifert_congruent(TREFOIL, TREFOIL, 1)
    p = ((1, 1), (0, 1))
    b = la.mat_mul(la.mat_mul(la.transpose(p), TREFOIL.entries), p)
    assert seifert_congruent(TREFOIL, SeifertMatrix.knot(b), 2)
    assert not seifert_congruent(TREFOIL, FIGURE8, 2)
    with pytest.raises(ValueError):
        seifert_congruent(TREFOIL, UNKNOT, 1)


def test_congruence_implies_equal_alexander():
    rng = random.Random(97)
    for _ in range(20):
        a = random_knot_block(rng, 1)
        p = random.Random(rng.random()).choice(
            [((1, 1), (0, 1)), ((1, 0), (1, 1)), ((0, 1), (-1, 0)), ((1, -1), (0, 1))]
        )
        b = SeifertMatrix.knot(la.mat_mul(la.mat_mul(la.transpose(p), a.entries), p))
        assert seifert_congruent(a, b, 2)
        assert alexander(a) == alexander(b)


def test_formal_sum_arithmetic():
    s = FormalSum({("M", frozenset()): Fraction(1)})
    t = FormalSum({("M", frozenset()): Fraction(-1)})
    assert len(s + t) == 0
    assert (Fraction(2) * s).terms[("M", frozenset())] == 2


def test_file_round_trips():
    rng = random.Random(101)
    b = random_blink(rng, 3)
    assert BlinkPresentation.from_text(b.to_text()) == b
    # whitespace and order insensitivity
    scrambled = "\n".join(reversed(b.to_text().strip().splitlines()[1:]))
    text = "pairs=3\n  " + scrambled.replace(" ", "   ")
    assert BlinkPresentation.from_text(text) == b

    l = FramedLink(3, [[1, 0, 2], [0, -1, 0], [2, 0, 1]])
    assert FramedLink.from_text(l.to_text()).lk == l.lk

    sm, frames = SeifertMatrix.from_text(TREFOIL.to_text(frames=(1,)))
    assert sm == TREFOIL and frames == (1,)
    sm2, frames2 = SeifertMatrix.from_text(TREFOIL.to_text())
    assert sm2 == TREFOIL and frames2 is None
