import json
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ydom.diagram import YoungDiagram, from_heights, rect, triangle
from ydom.dynamics import (
    INF,
    Enhancements,
    Grid,
    evolve,
    is_dominating,
    latency_of,
    realize_enhancements,
    step,
)

from helpers import naive_step, rand_diagram, rand_grid

# a known minimum cover of the 4x5 grid for the staircase rule [3,2,2,1]
KNOWN_4x5_COVER = [(0, 0), (1, 0), (4, 0), (0, 1), (1, 1), (2, 1), (3, 2), (1, 3), (2, 3), (4, 3)]


@st.composite
def instances(draw):
    m = draw(st.integers(1, 5))
    n = draw(st.integers(1, 5))
    w = draw(st.integers(0, n))
    hs = []
    cap = m
    for _ in range(w):
        cap = draw(st.integers(0, cap))
        hs.append(cap)
    cells = draw(st.sets(st.tuples(st.integers(0, n - 1), st.integers(0, m - 1))))
    return m, n, YoungDiagram(hs), Grid.from_cells(m, n, cells)


class TestGridBasics:
    def test_cells_sorted(self):
        g = Grid.from_cells(3, 4, [(2, 1), (0, 0), (2, 0)])
        assert g.cells() == [(0, 0), (2, 0), (2, 1)]

    def test_counts(self):
        g = Grid.from_cells(2, 3, [(0, 0), (1, 0), (1, 1)])
        assert list(g.row_counts) == [2, 1]
        assert list(g.col_counts) == [1, 2, 0]

    def test_json_round_trip(self):
        g = Grid.from_cells(3, 3, [(1, 2), (0, 0)])
        assert Grid.from_json_dict(json.loads(json.dumps(g.to_json_dict()))) == g

    def test_bitmask_round_trip(self):
        rng = random.Random(3)
        for _ in range(30):
            g = rand_grid(rng, rng.randint(1, 4), rng.randint(1, 4))
            assert Grid.from_bitmask(g.m, g.n, g.to_bitmask()) == g

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            Grid.from_cells(2, 2, [(2, 0)])

    def test_transpose(self):
        g = Grid.from_cells(2, 3, [(2, 1), (0, 0)])
        assert g.transpose().cells() == [(0, 0), (1, 2)]

    def test_young_diagram_shape(self):
        assert Grid.from_cells(2, 3, [(0, 0), (1, 0), (0, 1)]).is_young_diagram()
        assert not Grid.from_cells(2, 3, [(1, 0), (0, 1)]).is_young_diagram()


class TestStep:
    def test_empty_zero_set_fills_everything(self):
        g = Grid.empty(3, 4)
        assert step(g, YoungDiagram()).is_full()

    def test_saturated_zero_set_freezes(self):
        z = rect(4, 3)  # contains every reachable count pair on a 3x4 grid
        rng = random.Random(1)
        for _ in range(20):
            g = rand_grid(rng, 3, 4)
            assert step(g, z) == g

    def test_single_seed_example(self):
        g = Grid.from_cells(2, 2, [(0, 0)])
        assert step(g, rect(1, 1)).cells() == [(0, 0), (0, 1), (1, 0)]

    def test_matches_definition(self):
        rng = random.Random(42)
        for _ in range(300):
            m, n = rng.randint(1, 5), rng.randint(1, 5)
            z = rand_diagram(rng, n, m)
            g = rand_grid(rng, m, n)
            assert step(g, z) == naive_step(g, z)

    def test_enhanced_matches_definition(self):
        rng = random.Random(43)
        for _ in range(300):
            m, n = rng.randint(1, 4), rng.randint(1, 4)
            z = rand_diagram(rng, n, m)
            g = rand_grid(rng, m, n)
            e = Enhancements(
                [rng.randint(0, 3) for _ in range(m)], [rng.randint(0, 3) for _ in range(n)]
            )
            assert step(g, z, e) == naive_step(g, z, e)

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            step(Grid.empty(2, 2), rect(1, 1), Enhancements([0], [0, 0]))
        with pytest.raises(ValueError):
            step(Grid.empty(2, 2), rect(3, 3))


class TestEvolve:
    def test_latency_zero(self):
        g = Grid.from_cells(2, 2, [(1, 1)])
        assert evolve(g, rect(1, 1), latency=0) == g

    def test_full_grid_fixpoint(self):
        g = Grid.full(3, 3)
        assert evolve(g, triangle(2), latency=INF) == g

    def test_square_seed_spans(self):
        # a 2x2 block under the 2x2 rectangle rule floods any larger grid
        g = Grid.from_cells(6, 7, [(0, 0), (0, 1), (1, 0), (1, 1)])
        assert evolve(g, rect(2, 2), latency=INF).is_full()
        assert latency_of(g, rect(2, 2)) == 2

    def test_negative_latency(self):
        with pytest.raises(ValueError):
            evolve(Grid.empty(2, 2), rect(1, 1), latency=-1)


class TestDomination:
    def test_known_4x5_cover(self):
        z = from_heights([3, 2, 2, 1])
        g = Grid.from_cells(4, 5, KNOWN_4x5_COVER)
        assert is_dominating(g, z, 1)
        assert latency_of(g, z) == 1

    def test_empty_never_dominates_with_origin_blocked(self):
        z = rect(1, 1)
        for m, n in [(1, 1), (2, 3), (3, 3)]:
            assert not is_dominating(Grid.empty(m, n), z, 10)
            assert latency_of(Grid.empty(m, n), z) is None

    def test_full_latency_zero(self):
        assert latency_of(Grid.full(2, 4), rect(2, 2)) == 0

    def test_block_seed_latency_within_two(self):
        rng = random.Random(9)
        for _ in range(50):
            z = rand_diagram(rng, 3, 3)
            if z.is_empty():
                continue
            a, b = z.width, z.height
            m, n = b + rng.randint(1, 3), a + rng.randint(1, 3)
            seed = Grid.from_cells(m, n, [(j, i) for j in range(a) for i in range(b)])
            lat = latency_of(seed, z)
            assert lat is not None and lat <= 2


class TestTransformationLaws:
    @settings(max_examples=150)
    @given(instances(), st.randoms(use_true_random=False))
    def test_monotone(self, inst, rnd):
        m, n, z, g = inst
        occ = g.occupancy.copy()
        for i in range(m):
            for j in range(n):
                if not occ[i, j] and rnd.random() < 0.3:
                    occ[i, j] = True
        bigger = Grid(m, n, occ)
        assert step(g, z).issubset(step(bigger, z))

    @settings(max_examples=150)
    @given(instances(), st.randoms(use_true_random=False))
    def test_permutation_commutes(self, inst, rnd):
        m, n, z, g = inst
        rows = list(range(m))
        cols = list(range(n))
        rnd.shuffle(rows)
        rnd.shuffle(cols)
        lhs = step(g.permute(rows, cols), z)
        rhs = step(g, z).permute(rows, cols)
        assert lhs == rhs

    def test_young_closure_of_boosted_iterates(self):
        rng = random.Random(11)
        for _ in range(200):
            m, n = rng.randint(1, 5), rng.randint(1, 5)
            z = rand_diagram(rng, n, m)
            r = sorted((rng.randint(0, n) for _ in range(m)), reverse=True)
            c = sorted((rng.randint(0, m) for _ in range(n)), reverse=True)
            e = Enhancements(r, c)
            cur = Grid.empty(m, n)
            for _ in range(m * n + 1):
                assert cur.is_young_diagram()
                nxt = step(cur, z, e)
                if nxt == cur:
                    break
                cur = nxt

    def test_boosted_from_empty_swallows_growth(self):
        # boosts at least the seed's counts: whatever the plain dynamics
        # adds beyond the seed, the boosted-from-empty dynamics also has
        rng = random.Random(12)
        for _ in range(200):
            m, n = rng.randint(1, 4), rng.randint(1, 4)
            z = rand_diagram(rng, n, m)
            g = rand_grid(rng, m, n)
            r = [int(g.row_counts[i]) + rng.randint(0, 1) for i in range(m)]
            c = [int(g.col_counts[j]) + rng.randint(0, 1) for j in range(n)]
            e = Enhancements(r, c)
            plain = g
            boosted = Grid.empty(m, n)
            for _ in range(m * n):
                plain = step(plain, z)
                boosted = step(boosted, z, e)
                diff = plain.occupancy & ~boosted.occupancy
                assert (diff <= g.occupancy).all()

    def test_boosted_step_within_plain_step_of_realization(self):
        rng = random.Random(13)
        for _ in range(200):
            m, n = rng.randint(1, 5), rng.randint(1, 5)
            z = rand_diagram(rng, n, m)
            g = rand_grid(rng, m, n)
            e = Enhancements(
                [rng.randint(0, 2) for _ in range(m)], [rng.randint(0, 2) for _ in range(n)]
            )
            realized = realize_enhancements(g, e)
            assert g.issubset(realized)
            assert step(g, z, e).issubset(step(realized, z))

    def test_transposition_symmetry(self):
        rng = random.Random(14)
        for _ in range(200):
            m, n = rng.randint(1, 4), rng.randint(1, 4)
            z = rand_diagram(rng, n, m)
            g = rand_grid(rng, m, n)
            for lat in (1, 2, INF):
                assert is_dominating(g, z, lat) == is_dominating(
                    g.transpose(), z.conjugate(), lat
                )


class TestRealizeEnhancements:
    def test_counts_reached(self):
        rng = random.Random(15)
        for _ in range(100):
            m, n = rng.randint(1, 5), rng.randint(1, 5)
            g = rand_grid(rng, m, n)
            e = Enhancements(
                [rng.randint(0, n + 1) for _ in range(m)],
                [rng.randint(0, m + 1) for _ in range(n)],
            )
            big = realize_enhancements(g, e)
            for i in range(m):
                assert big.row_counts[i] >= min(g.row_counts[i] + e.r[i], n)
            for j in range(n):
                assert big.col_counts[j] >= min(g.col_counts[j] + e.c[j], m)

    def test_deterministic(self):
        g = Grid.from_cells(3, 3, [(1, 1)])
        e = Enhancements([1, 0, 2], [0, 1, 0])
        assert realize_enhancements(g, e) == realize_enhancements(g, e)


class TestEnhancements:
    def test_validation(self):
        with pytest.raises(ValueError):
            Enhancements([-1], [0])

    def test_norm_and_order(self):
        e = Enhancements([3, 1], [2, 2, 0])
        assert e.norm == 8
        assert e.is_nonincreasing()
        assert not Enhancements([1, 2], []).is_nonincreasing()
