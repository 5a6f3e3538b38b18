import json

import pytest
from hypothesis import given, strategies as st

from boundtrack.errors import ParseError
from boundtrack.geometry import LineSegment, Point2
from boundtrack.ingest import filter_by_buffer, load_sequence, save_sequence, parse_frame


def _write_lines(path, lines):
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")


def _frame_line(frame_id, segments, w=640, h=480):
    return json.dumps(
        {"frame_id": frame_id, "width": w, "height": h, "segments": segments}
    )


class TestLoadSequence:
    def test_round_trip_counts(self, tmp_path):
        f = tmp_path / "seq.jsonl"
        _write_lines(
            f,
            [
                _frame_line(0, [[0, 0, 10, 0], [0, 5, 10, 5], [3, 3, 9, 9]]),
                _frame_line(1, [[i, 0, i + 5, 5] for i in range(5)]),
            ],
        )
        frames = load_sequence(f)
        assert [len(fr.segments) for fr in frames] == [3, 5]
        assert [fr.frame_id for fr in frames] == [0, 1]

    def test_empty_segment_list_is_valid(self, tmp_path):
        f = tmp_path / "seq.jsonl"
        _write_lines(f, [_frame_line(0, [])])
        frames = load_sequence(f)
        assert frames[0].segments == []

    def test_malformed_coordinate_names_line(self, tmp_path):
        f = tmp_path / "seq.jsonl"
        _write_lines(f, [_frame_line(0, [[0, 0, 10, 0]]), _frame_line(1, [[1, "x", 2, 3]])])
        with pytest.raises(ParseError) as err:
            load_sequence(f)
        assert err.value.line == 2

    def test_duplicate_frame_id(self, tmp_path):
        f = tmp_path / "seq.jsonl"
        _write_lines(f, [_frame_line(3, []), _frame_line(3, [])])
        with pytest.raises(ParseError, match="duplicate frame_id"):
            load_sequence(f)

    def test_frames_sorted_by_id(self, tmp_path):
        f = tmp_path / "seq.jsonl"
        _write_lines(f, [_frame_line(5, []), _frame_line(2, [])])
        assert [fr.frame_id for fr in load_sequence(f)] == [2, 5]

    def test_save_load_round_trip(self, tmp_path):
        f = tmp_path / "seq.jsonl"
        _write_lines(f, [_frame_line(0, [[0.5, 1.25, 10.75, 2.0]])])
        frames = load_sequence(f)
        out = tmp_path / "copy.jsonl"
        save_sequence(frames, out)
        again = load_sequence(out)
        s0, s1 = frames[0].segments[0], again[0].segments[0]
        assert (s0.a, s0.b) == (s1.a, s1.b)

    def test_endpoints_clamped_to_frame(self):
        rec = parse_frame(
            {"frame_id": 0, "width": 100, "height": 100, "segments": [[-5, 10, 120, 10]]}
        )
        s = rec.segments[0]
        assert s.a == Point2(0, 10)
        assert s.b == Point2(100, 10)

    def test_degenerate_segment_dropped(self):
        rec = parse_frame(
            {"frame_id": 0, "width": 100, "height": 100, "segments": [[5, 5, 5, 5]]}
        )
        assert rec.segments == []


class TestFilterByBuffer:
    def test_near_segment_kept(self, square100):
        seg = LineSegment(Point2(10, -5), Point2(90, -5))
        assert filter_by_buffer([seg], square100, 20.0) == [seg]

    def test_far_segment_dropped(self, square100):
        # distances to the square outline: 141.42 (endpoint), 180.28 (mid),
        # 223.61 (endpoint); average ~181.8 > 20
        seg = LineSegment(Point2(200, 200), Point2(300, 200))
        assert filter_by_buffer([seg], square100, 20.0) == []

    def test_strict_inequality_at_threshold(self, square100):
        seg = LineSegment(Point2(10, -20), Point2(90, -20))  # avg distance exactly 20
        assert filter_by_buffer([seg], square100, 20.0) == []
        assert filter_by_buffer([seg], square100, 20.0 + 1e-9) == [seg]

    def test_threshold_must_be_positive(self, square100):
        with pytest.raises(ValueError):
            filter_by_buffer([], square100, 0.0)

    def test_on_boundary_always_kept(self, square100):
        seg = LineSegment(Point2(0, 0), Point2(100, 0))
        assert filter_by_buffer([seg], square100, 1e-9 + 1e-12) == [seg]

    @given(st.integers(0, 5000), st.floats(1.0, 50.0), st.floats(0.0, 100.0))
    def test_subsequence_and_monotonicity(self, seed, threshold, extra):
        import numpy as np

        from boundtrack.geometry import Polygon

        rng = np.random.default_rng(seed)
        square = Polygon(
            (Point2(0, 0), Point2(100, 0), Point2(100, 100), Point2(0, 100))
        )
        segs = [
            LineSegment(Point2(*rng.uniform(-50, 150, 2)), Point2(*rng.uniform(-50, 150, 2)))
            for _ in range(10)
        ]
        kept = filter_by_buffer(segs, square, threshold)
        # subsequence of the input, same order
        it = iter(segs)
        assert all(any(k is s for s in it) for k in kept)
        # raising the threshold never drops a kept segment
        kept_wider = filter_by_buffer(segs, square, threshold + extra + 1e-9)
        assert set(id(s) for s in kept) <= set(id(s) for s in kept_wider)
