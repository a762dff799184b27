import itertools

import pytest

from zcolor import (
    Crossing,
    Diagram,
    PretzelSpec,
    ShapeError,
    TheoremHypothesisError,
    TorusSpec,
    UnsupportedDiagramError,
    ZColoring,
    coloring_matrix,
    coloring_space,
    count_colors,
    fox_colorable,
    gen_pretzel,
    gen_torus,
    is_z_colorable,
    link_determinant,
    min_colors,
    normalize,
    torus_coloring,
    torus_column_states,
    verify_coloring,
)
from zcolor.coloring import _inverse_torus_matrix
from zcolor.generators import build_torus_matrix
from zcolor.intlinalg import IntMatrix, determinant

from conftest import make_trefoil


def fox_count_brute(d, q):
    """Number of colorings mod q, by direct enumeration."""
    total = 0
    for v in itertools.product(range(q), repeat=d.arc_count):
        if all(
            (2 * v[c.over] - v[c.under[0]] - v[c.under[1]]) % q == 0
            for c in d.crossings
        ):
            total += 1
    return total


class TestColoringMatrix:
    def test_kink_row_accumulates(self):
        d = Diagram("kinkish", 2, (Crossing(0, (0, 1)),))
        assert coloring_matrix(d).to_rows() == [[1, -1]]

    def test_trefoil_rows(self, trefoil):
        rows = coloring_matrix(trefoil).to_rows()
        assert all(sorted(r) == [-1, -1, 2] for r in rows)

    def test_row_sums_zero(self):
        d = gen_pretzel(PretzelSpec((2, -2, 2, -2)))
        m = coloring_matrix(d)
        assert m.rows == 8
        assert all(sum(m.row(i)) == 0 for i in range(m.rows))

    def test_no_crossings(self, two_free_circles):
        m = coloring_matrix(two_free_circles)
        assert (m.rows, m.cols) == (0, 2)


class TestColoringSpace:
    def test_trefoil_dimension_one(self, trefoil):
        # Brute force over the box [-3, 3]^3 finds only constant solutions.
        m = coloring_matrix(trefoil)
        points = [
            v
            for v in itertools.product(range(-3, 4), repeat=3)
            if all(sum(m.entry(i, j) * v[j] for j in range(3)) == 0 for i in range(3))
        ]
        assert all(len(set(v)) == 1 for v in points)
        assert coloring_space(trefoil).kernel.dim == 1

    def test_alternating_pretzel_dimension_two(self):
        d = gen_pretzel(PretzelSpec((2, -2, 2, -2)))
        assert coloring_space(d).kernel.dim == 2

    def test_chained_pretzel_dimension_two(self):
        d = gen_pretzel(PretzelSpec((-2, 3, 6)))
        assert coloring_space(d).kernel.dim == 2

    def test_trivial_certificate(self, trefoil, two_free_circles):
        for d in (trefoil, two_free_circles, gen_pretzel(PretzelSpec((3, 5, -2)))):
            space = coloring_space(d)
            rebuilt = [0] * d.arc_count
            for c, v in zip(space.trivial_coefficients, space.kernel.vectors):
                for i in range(d.arc_count):
                    rebuilt[i] += c * v[i]
            assert rebuilt == [1] * d.arc_count


class TestZColorable:
    def test_trefoil_not(self, trefoil):
        assert not is_z_colorable(trefoil)

    def test_alternating_pretzel_is(self):
        assert is_z_colorable(gen_pretzel(PretzelSpec((2, -2, 2, -2))))

    def test_free_circles_are(self, two_free_circles):
        assert is_z_colorable(two_free_circles)
        assert verify_coloring(two_free_circles, ZColoring((0, 1))).ok


class TestVerifyColoring:
    def test_constant_valid(self, trefoil):
        assert verify_coloring(trefoil, ZColoring((5, 5, 5))).ok

    def test_bad_coloring_reports_failing_crossings(self, trefoil):
        # (0, 1, 2) satisfies 2*1 == 0 + 2 at the middle crossing but fails
        # at the other two.
        check = verify_coloring(trefoil, ZColoring((0, 1, 2)))
        assert not check.ok
        assert check.failures == (0, 2)
        assert verify_coloring(trefoil, ZColoring((0, 1, 3))).failures == (0, 1, 2)

    def test_four_color_witness_valid(self):
        d = gen_pretzel(PretzelSpec((2, -2, 2, -2)))
        witness = min_colors(d).witness
        assert set(witness.colors) == {0, 1, 2, 3}
        assert verify_coloring(d, witness).ok

    def test_length_mismatch(self, trefoil):
        with pytest.raises(ShapeError):
            verify_coloring(trefoil, ZColoring((1, 2)))


class TestNormalizeAndCount:
    def test_shift_and_gcd(self):
        assert normalize(ZColoring((3, 5, 7))).colors == (0, 1, 2)

    def test_constant_to_zero(self):
        assert normalize(ZColoring((4, 4, 4, 4))).colors == (0, 0, 0, 0)

    def test_scaled_witness_normalizes_back(self):
        # A coloring scaled by t = 2 has the same color multiset once divided out.
        d = gen_pretzel(PretzelSpec((-2, 3, 6)))
        w = min_colors(d).witness
        doubled = ZColoring(tuple(2 * c + 5 for c in w.colors))
        assert verify_coloring(d, doubled).ok
        assert normalize(doubled) == w

    def test_count_examples(self):
        assert count_colors(ZColoring((0, 1, 2, 1))) == 3
        assert count_colors(ZColoring((7, 7, 7))) == 1

    def test_count_alternating_pretzel_n4(self):
        d = gen_pretzel(PretzelSpec((4, -4, 4, -4)))
        assert count_colors(min_colors(d).witness) == 6

    def test_count_affine_invariance(self):
        w = ZColoring((0, 3, 1, 4, 1, 5))
        for s in (-3, -1, 1, 2, 9):
            for t in (-4, 0, 11):
                image = ZColoring(tuple(s * c + t for c in w.colors))
                assert count_colors(image) == count_colors(w)


class TestLinkDeterminant:
    def test_trefoil_value_and_oracle(self, trefoil):
        assert fox_count_brute(trefoil, 3) == 9
        assert fox_count_brute(trefoil, 5) == 5
        assert link_determinant(trefoil) == 3

    def test_zero_for_colorable_families(self):
        assert link_determinant(gen_pretzel(PretzelSpec((-2, 3, 6)))) == 0
        assert link_determinant(gen_pretzel(PretzelSpec((2, -2, 2, -2)))) == 0

    def test_rejects_free_circles(self, two_free_circles):
        with pytest.raises(UnsupportedDiagramError):
            link_determinant(two_free_circles)

    def test_rejects_disconnected(self, trefoil):
        from zcolor.diagram import offset_union

        with pytest.raises(UnsupportedDiagramError):
            link_determinant(offset_union([trefoil, trefoil], "u"))

    def test_independent_of_deleted_row_col(self, trefoil):
        for d in (trefoil, gen_pretzel(PretzelSpec((2, -2, 2, -2))), gen_torus(TorusSpec(p=1, n=3))):
            m = coloring_matrix(d)
            values = {
                abs(determinant(m.delete_row_col(i, j)))
                for i in range(m.rows)
                for j in range(m.cols)
            }
            assert len(values) == 1
            assert values == {link_determinant(d)}


class TestFoxColorable:
    def test_trefoil(self, trefoil):
        assert fox_colorable(trefoil, 3)
        assert not fox_colorable(trefoil, 5)

    def test_matches_brute_force(self, trefoil, two_free_circles):
        diagrams = [
            trefoil,
            two_free_circles,
            gen_pretzel(PretzelSpec((1, 1, 1, 1, 1))),
            gen_torus(TorusSpec(p=1, n=3)),
            Diagram("kink", 1, (Crossing(0, (0, 0)),)),
        ]
        for d in diagrams:
            for q in (2, 3, 4, 5):
                expected = fox_count_brute(d, q) > q
                assert fox_colorable(d, q) == expected, (d.name, q)

    def test_zero_determinant_always_colorable(self):
        d = gen_pretzel(PretzelSpec((-2, 3, 6)))
        for q in range(2, 8):
            assert fox_colorable(d, q)

    def test_small_modulus_rejected(self, trefoil):
        with pytest.raises(ValueError):
            fox_colorable(trefoil, 1)


class TestTorusColoring:
    def test_column_states_n4(self):
        states = torus_column_states(TorusSpec(p=1, n=4))
        assert states == ((1, 0, 0, 1), (1, 1, 2, 2), (2, 3, 3, 2), (2, 2, 1, 1))

    def test_column_states_n6_second(self):
        states = torus_column_states(TorusSpec(p=1, n=6))
        assert states[1] == (1, 1, 2, 2, 2, 2)

    def test_propagation_closes_even_n(self):
        for n in (4, 6, 8):
            a = build_torus_matrix(n)
            x = (1,) + (0,) * (n - 2) + (1,)
            y = x
            from zcolor import mat_vec

            for _ in range(n):
                y = mat_vec(a, y)
            assert y == x

    def test_coloring_p1_n4(self):
        spec = TorusSpec(p=1, n=4)
        c = torus_coloring(spec)
        assert verify_coloring(gen_torus(spec), c).ok
        assert set(c.colors) == {0, 1, 2, 3}

    def test_coloring_p2_n4(self):
        spec = TorusSpec(p=2, n=4)
        c = torus_coloring(spec)
        assert count_colors(c) == 4
        assert verify_coloring(gen_torus(spec), c).ok

    def test_mirror_coloring(self):
        spec = TorusSpec(p=-1, n=4)
        c = torus_coloring(spec)
        assert verify_coloring(gen_torus(spec), c).ok
        assert set(c.colors) == {0, 1, 2, 3}

    def test_hypothesis_errors(self):
        with pytest.raises(TheoremHypothesisError):
            torus_coloring(TorusSpec(p=1, n=3))
        with pytest.raises(TheoremHypothesisError):
            torus_coloring(TorusSpec(p=1, n=2))

    def test_inverse_matrix(self):
        for n in (2, 4, 6):
            a = build_torus_matrix(n)
            inv = _inverse_torus_matrix(n)
            assert (a @ inv) == IntMatrix.identity(n)
            assert (inv @ a) == IntMatrix.identity(n)

    def test_odd_n_states_still_computable(self):
        # No assertion about color counts for odd n; states just propagate.
        states = torus_column_states(TorusSpec(p=1, n=5))
        assert len(states) == 5
        assert states[0] == (1, 0, 0, 0, 1)
