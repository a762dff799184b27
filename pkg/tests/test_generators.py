import pytest

from zcolor import (
    InvalidSpecError,
    PretzelSpec,
    TorusSpec,
    UnrepresentableDiagramError,
    build_torus_matrix,
    determinant,
    gen_pretzel,
    gen_torus,
    is_connected,
    link_components,
    mat_vec,
    pretzel_twist_chains,
    torus_arc_grid,
    validate,
)


class TestPretzelSpec:
    def test_zero_twist_rejected(self):
        with pytest.raises(InvalidSpecError, match="zero"):
            PretzelSpec((2, 0, 2))

    def test_empty_rejected(self):
        with pytest.raises(InvalidSpecError):
            PretzelSpec(())

    def test_name(self):
        assert PretzelSpec((2, -2, 2, -2)).name == "P(2,-2,2,-2)"


class TestGenPretzel:
    def test_alternating_four_regions(self):
        d = gen_pretzel(PretzelSpec((2, -2, 2, -2)))
        assert len(d.crossings) == 8
        assert d.arc_count == 8
        assert validate(d).ok
        assert d.claimed_minimal

    def test_chained_three_regions(self):
        d = gen_pretzel(PretzelSpec((-2, 3, 6)))
        assert len(d.crossings) == 11
        assert d.arc_count == 11
        assert validate(d).ok

    def test_single_region(self):
        d = gen_pretzel(PretzelSpec((3,)))
        assert len(d.crossings) == 3
        assert d.arc_count == 3
        assert is_connected(d)

    def test_p111_is_the_trefoil(self, trefoil):
        # Strong wiring check: three single twists close into the standard
        # 3-crossing diagram, up to crossing order.
        d = gen_pretzel(PretzelSpec((1, 1, 1)))
        assert d.arc_count == 3
        assert sorted(c.arcs for c in d.crossings) == sorted(
            c.arcs for c in trefoil.crossings
        )

    def test_counts_and_validity_sweep(self):
        specs = [
            (2, -2, 2, -2, 2, -2),
            (4, -4, 4, -4),
            (-3, 4, 12),
            (3, 5, -2),
            (5,),
            (1, 1, 1, 1, 1),
            (-2, -2, -2),
        ]
        for twists in specs:
            d = gen_pretzel(PretzelSpec(twists))
            total = sum(abs(a) for a in twists)
            assert len(d.crossings) == total
            assert d.arc_count == total
            assert validate(d).ok

    def test_chain_wiring(self):
        # Within a region, crossing j passes chain[j] over its neighbors.
        spec = PretzelSpec((3, -4, 2))
        d = gen_pretzel(spec)
        chains = pretzel_twist_chains(spec)
        assert [len(c) for c in chains] == [5, 6, 4]
        idx = 0
        for a, chain in zip(spec.twists, chains):
            for j in range(1, abs(a) + 1):
                crossing = d.crossings[idx]
                assert crossing.over == chain[j]
                assert crossing.under == tuple(sorted((chain[j - 1], chain[j + 1])))
                idx += 1

    def test_first_arc_starts_first_chain(self):
        # Arc 0 is the first slot of region 1; for mixed signs it is shared
        # with the start of the neighboring chain.
        spec = PretzelSpec((-2, 3, 6))
        chains = pretzel_twist_chains(spec)
        assert chains[0][0] == 0
        assert chains[1][0] == 0

    def test_over_only_component_rejected(self):
        with pytest.raises(UnrepresentableDiagramError):
            gen_pretzel(PretzelSpec((1, -1)))


class TestTorusSpec:
    def test_zero_p_rejected(self):
        with pytest.raises(InvalidSpecError):
            TorusSpec(p=0, n=4)

    def test_small_n_rejected(self):
        with pytest.raises(InvalidSpecError):
            TorusSpec(p=1, n=1)

    def test_name(self):
        assert TorusSpec(p=2, n=4).name == "T(8,4)"
        assert TorusSpec(p=-1, n=4).name == "T(-4,4)"


class TestGenTorus:
    def test_counts_p1_n4(self):
        d = gen_torus(TorusSpec(p=1, n=4))
        assert len(d.crossings) == 12
        assert d.arc_count == 12
        assert validate(d).ok

    def test_counts_p2_n4(self):
        d = gen_torus(TorusSpec(p=2, n=4))
        assert len(d.crossings) == 24
        assert d.arc_count == 24

    def test_component_count_by_strand_tracing(self):
        # Each column cycles the strand positions by one, so pn columns give
        # the identity permutation and n closed components.
        for p, n in [(1, 4), (2, 4), (1, 3), (-1, 4)]:
            d = gen_torus(TorusSpec(p=p, n=n))
            assert link_components(d) == n

    def test_validity_sweep(self):
        for p in (1, 2, -1, -2):
            for n in (2, 3, 4, 5, 6):
                d = gen_torus(TorusSpec(p=p, n=n))
                assert validate(d).ok
                assert len(d.crossings) == abs(p) * n * (n - 1)
                assert d.arc_count == len(d.crossings)
                assert is_connected(d)

    def test_seam_arcs_have_lowest_indices(self):
        for p in (1, -1, 2):
            spec = TorusSpec(p=p, n=4)
            grid = torus_arc_grid(spec)
            assert grid[0] == (0, 1, 2, 3)
            assert len(grid) == spec.columns

    def test_over_strand_passes_each_column(self):
        spec = TorusSpec(p=1, n=4)
        d = gen_torus(spec)
        grid = torus_arc_grid(spec)
        for c in range(spec.columns):
            column = d.crossings[c * 3 : (c + 1) * 3]
            over = {x.over for x in column}
            # One uncut over-arc per column, continuing into the next set.
            assert over == {grid[c][3]}
            assert grid[(c + 1) % spec.columns][0] == grid[c][3]

    def test_mirror_column_orientation(self):
        spec = TorusSpec(p=-1, n=4)
        d = gen_torus(spec)
        grid = torus_arc_grid(spec)
        for c in range(spec.columns):
            column = d.crossings[c * 3 : (c + 1) * 3]
            assert {x.over for x in column} == {grid[c][0]}
            assert grid[(c + 1) % spec.columns][3] == grid[c][0]


class TestTorusMatrix:
    def test_n2(self):
        assert build_torus_matrix(2).to_rows() == [[0, 1], [-1, 2]]

    def test_n4(self):
        assert build_torus_matrix(4).to_rows() == [
            [0, 0, 0, 1],
            [-1, 0, 0, 2],
            [0, -1, 0, 2],
            [0, 0, -1, 2],
        ]

    def test_unimodular(self):
        for n in range(2, 9):
            assert abs(determinant(build_torus_matrix(n))) == 1

    def test_matches_column_recoloring(self):
        # The matrix must agree with the literal recoloring rule
        # Y[0] = X[n-1], Y[i] = 2*X[n-1] - X[i-1].
        n = 5
        a = build_torus_matrix(n)
        x = (3, -1, 4, 1, 5)
        y = mat_vec(a, x)
        assert y[0] == x[n - 1]
        for i in range(1, n):
            assert y[i] == 2 * x[n - 1] - x[i - 1]

    def test_small_n_rejected(self):
        with pytest.raises(InvalidSpecError):
            build_torus_matrix(1)
