"""Hull selection against the brute-force slope-grid oracle, plus the
improvement filter."""

import math

import numpy as np
import pytest

from helpers import brute_force_selection, random_diagram
from sfcopt.diagram import DiagramPoint
from sfcopt.hull import filter_improving, nondominated, selection_rows


def pts(*coords):
    return [DiagramPoint(i, h, F) for i, (h, F) in enumerate(coords)]


class TestNondominated:
    def test_single_point(self):
        sel = nondominated(pts((0.4, 2.0)))
        assert sel.ids == [0]
        assert sel.slopes == ((0.0, math.inf),)

    def test_three_point_example(self):
        # C lies above the chord from B to A and is never a strict winner.
        points = pts((0.4, 2.0), (0.3, 1.0), (0.35, 1.8))  # A, B, C
        sel = nondominated(points)
        assert sel.ids == [1, 0]  # B then A by increasing h
        assert brute_force_selection(points) == {0, 1}

    def test_bottom_of_column_geometry(self):
        # Seven columns whose bottom dots are A..G; the hull keeps A, B, D, E
        # and drops C, F, G, matching the qualitative diagram shape.
        named = {
            "E": (0.1, 0.0),
            "D": (0.2, 0.1),
            "F": (0.3, 0.9),
            "C": (0.4, 1.2),
            "G": (0.5, 1.6),
            "B": (0.6, 1.5),
            "A": (0.7, 3.0),
        }
        points = [DiagramPoint(i, *named[k]) for i, k in enumerate(named)]
        # non-bottom dots in two of the columns
        points.append(DiagramPoint(7, 0.7, 3.4))
        points.append(DiagramPoint(8, 0.2, 0.5))
        sel = nondominated(points)
        names = {0: "E", 1: "D", 2: "F", 3: "C", 4: "G", 5: "B", 6: "A"}
        assert [names[i] for i in sel.ids] == ["E", "D", "B", "A"]
        assert brute_force_selection(points) == set(sel.ids)

    def test_largest_h_always_selected(self):
        points = pts((0.1, -5.0), (0.2, 0.0), (0.9, 100.0))
        assert 2 in nondominated(points).ids

    def test_equal_h_column_keeps_min_f_min_id(self):
        points = [
            DiagramPoint(3, 0.5, 1.0),
            DiagramPoint(1, 0.5, 1.0),
            DiagramPoint(2, 0.5, 2.0),
        ]
        assert nondominated(points).ids == [1]

    def test_collinear_interior_point_dropped(self):
        points = pts((0.1, 0.0), (0.2, 1.0), (0.3, 2.0))
        assert nondominated(points).ids == [0, 2]

    def test_errors(self):
        with pytest.raises(ValueError):
            nondominated([])
        with pytest.raises(ValueError):
            nondominated([DiagramPoint(0, 0.0, 1.0)])

    def test_slope_windows_partition_positive_axis(self):
        points = pts((0.1, 0.0), (0.3, 0.5), (0.9, 4.0))
        sel = nondominated(points)
        lows = [w[0] for w in sel.slopes]
        highs = [w[1] for w in sel.slopes]
        assert lows[0] == 0.0 and math.isinf(highs[-1])
        assert highs[:-1] == lows[1:]
        assert all(lo < hi for lo, hi in sel.slopes)

    def test_selection_f_increases_with_h(self):
        # Along the selected chain the chord slopes are positive, so F rises
        # with h; the min-F dot anchors the small-H end.
        rng = np.random.default_rng(3)
        for _ in range(50):
            sel = nondominated(random_diagram(rng))
            fs = [p.F for p in sel.selected]
            assert fs == sorted(fs)
            assert all(f2 > f1 for f1, f2 in zip(fs, fs[1:]))


class TestOracleEquivalence:
    def test_random_diagrams_match_brute_force(self):
        rng = np.random.default_rng(2024)
        for _ in range(60):
            points = random_diagram(rng)
            assert set(nondominated(points).ids) == brute_force_selection(points)


class TestMonotonicity:
    def test_point_above_hull_changes_nothing(self):
        rng = np.random.default_rng(9)
        for _ in range(25):
            points = random_diagram(rng, max_points=30)
            sel = nondominated(points)
            # lift an existing point well above the cloud
            src = points[int(rng.integers(0, len(points)))]
            above = DiagramPoint(len(points), src.h, src.F + 50.0)
            assert nondominated(points + [above]).ids == sel.ids


class TestScalingInvariance:
    def test_affine_f_rescaling_preserves_selection(self):
        rng = np.random.default_rng(17)
        for _ in range(25):
            points = random_diagram(rng, max_points=30)
            c, d = 3.7, -2.2
            scaled = [DiagramPoint(p.interval_id, p.h, c * p.F + d) for p in points]
            assert nondominated(points).ids == nondominated(scaled).ids


class TestFilterImproving:
    def test_incumbent_and_largest_pass_at_zero_xi(self):
        points = pts((0.1, 0.0), (0.3, 0.5), (0.9, 4.0))
        sel = nondominated(points)
        passed = filter_improving(sel, f_min=0.0, xi=0.0)
        assert 0 in passed.ids and 2 in passed.ids

    def test_largest_h_passes_any_xi(self):
        points = pts((0.1, 0.0), (0.9, 4.0))
        passed = filter_improving(nondominated(points), f_min=0.0, xi=1e9)
        assert passed.ids == [1]

    def test_threshold_example(self):
        points = pts((0.1, 0.0), (0.5, 0.5))
        sel = nondominated(points)
        # slope between the two dots is 1.25; 0.0 - 1.25*0.1 = -0.125 <= -0.01
        passed = filter_improving(sel, f_min=0.0, xi=0.01)
        assert passed.ids == [0, 1]
        blocked = filter_improving(sel, f_min=0.0, xi=0.2)
        assert blocked.ids == [1]

    def test_equality_passes(self):
        points = pts((0.1, 0.0), (0.5, 0.5))
        sel = nondominated(points)
        passed = filter_improving(sel, f_min=0.0, xi=0.125)
        assert passed.ids == [0, 1]

    def test_rejects_negative_xi(self):
        with pytest.raises(ValueError):
            filter_improving(nondominated(pts((0.5, 1.0))), 0.0, -0.1)


def test_equal_h_ordering_reduces_to_f_ordering():
    from sfcopt.diagram import characteristic

    a = DiagramPoint(0, 0.5, 1.0)
    b = DiagramPoint(1, 0.5, 2.0)
    for H in (0.1, 1.0, 50.0):
        assert characteristic(a, H) < characteristic(b, H)


def test_selection_rows_schema():
    points = pts((0.1, 0.0), (0.5, 0.5))
    sel = nondominated(points)
    rows = selection_rows(4, sel, [0])
    assert rows[0].startswith("4,0,")
    assert rows[0].endswith(",1")
    assert rows[1].endswith(",0")
    assert rows[1].split(",")[5] == "inf"
