import random

import pytest

from ydom.construct import (
    ab_fill,
    dominating_boot,
    dominating_gamma2,
    dominating_rect,
    dominating_vshape,
)
from ydom.diagram import rect, triangle, vshape
from ydom.dynamics import is_dominating, latency_of
from ydom.exact import boot_case, gamma2_formula, gamma_boot, gamma_rect_fast, gamma_vshape
from ydom.oracle import exact_gammaL_bruteforce

from helpers import rand_diagram


class TestAbFill:
    def test_small_staircase(self):
        g = ab_fill(2, 3, 3)
        rows = [sorted(j for j, i in g.cells() if i == row) for row in range(3)]
        assert rows == [[0, 1], [0, 2], [1, 2]]
        assert all(c == 2 for c in g.col_counts)

    def test_full_row(self):
        assert ab_fill(4, 3, 4).is_full()

    def test_permutation_like(self):
        g = ab_fill(1, 5, 5)
        assert all(c == 1 for c in g.col_counts) and all(r == 1 for r in g.row_counts)

    def test_balance_property(self):
        for a in range(1, 7):
            for n in range(a, 9):
                for m in range(1, 9):
                    g = ab_fill(a, m, n)
                    assert all(r == a for r in g.row_counts)
                    lo, hi = (a * m) // n, -((-a * m) // n)
                    assert all(lo <= c <= hi for c in g.col_counts)

    def test_range(self):
        with pytest.raises(ValueError):
            ab_fill(4, 2, 3)


class TestVshapeConstruction:
    def test_examples(self):
        g = dominating_vshape(2, 1, 3, 5)
        assert g.count == 6 and is_dominating(g, vshape(2, 1, 3, 5), 1)
        assert dominating_vshape(0, 0, 3, 3).count == 0
        assert dominating_vshape(5, 3, 3, 5).is_full()

    def test_sweep(self):
        for m in range(1, 7):
            for n in range(1, 7):
                for a in range(0, n + 1):
                    for b in range(0, m + 1):
                        g = dominating_vshape(a, b, m, n)
                        assert g.count == gamma_vshape(a, b, m, n)
                        assert is_dominating(g, vshape(a, b, m, n), 1)


class TestRectConstruction:
    def test_examples(self):
        g = dominating_rect(2, 2, 4, 4)
        assert g.count == 7 and is_dominating(g, rect(2, 2), 1)
        g = dominating_rect(1, 1, 3, 3)
        assert g.count == 3 and is_dominating(g, rect(1, 1), 1)

    def test_sweep(self):
        for a in range(1, 5):
            for b in range(1, 5):
                for n in range(a, 11):
                    for m in range(b, 11):
                        g = dominating_rect(a, b, m, n)
                        assert g.count == gamma_rect_fast(a, b, m, n)
                        assert is_dominating(g, rect(a, b), 1)


class TestBootConstruction:
    def test_examples(self):
        g = dominating_boot(2, 4)
        assert g.count == 4 and is_dominating(g, triangle(2), 1)
        assert exact_gammaL_bruteforce(triangle(2), 4, 4, 1).value == 4

        g = dominating_boot(5, 4)
        assert boot_case(5, 4).k == 1
        assert g.count == 11 and is_dominating(g, triangle(5).clip(4, 4), 1)
        assert exact_gammaL_bruteforce(triangle(5).clip(4, 4), 4, 4, 1).value == 11

        g = dominating_boot(5, 5)
        assert g.count == 13 and is_dominating(g, triangle(5), 1)

    def test_forced_full_rejected(self):
        with pytest.raises(ValueError):
            dominating_boot(7, 4)

    def test_sweep_medium(self):
        for n in range(2, 41):
            for a in range(1, 2 * n - 1):
                g = dominating_boot(a, n)
                assert g.count == gamma_boot(a, n), (a, n)
                assert is_dominating(g, triangle(a).clip(n, n), 1), (a, n)

    def test_odd_small_profile(self):
        # light rows and columns hold exactly b cells and meet in the block
        for a, n in [(5, 7), (7, 9), (3, 8)]:
            b = (a - 1) // 2
            g = dominating_boot(a, n)
            light_rows = [i for i in range(n) if g.row_counts[i] == b]
            light_cols = [j for j in range(n) if g.col_counts[j] == b]
            for i in light_rows:
                for j in light_cols:
                    assert g.cell(j, i)


class TestGamma2Construction:
    def test_examples(self):
        g = dominating_gamma2(rect(1, 2), 3, 3)
        assert g.count == 2 and latency_of(g, rect(1, 2)) <= 2
        g = dominating_gamma2(rect(1, 1), 2, 2)
        assert g.count == 1 and latency_of(g, rect(1, 1)) <= 2

    def test_random_sweep(self):
        rng = random.Random(8)
        seen = 0
        while seen < 30:
            z = rand_diagram(rng, 3, 3)
            if z.is_empty() or z.width * z.height > 4:
                continue
            ab = z.width * z.height
            m = ab + 1
            n = ab + rng.randint(1, 2)
            g = dominating_gamma2(z, m, n)
            assert g.count == gamma2_formula(z, m, n)
            lat = latency_of(g, z)
            assert lat is not None and lat <= 2
            seen += 1
