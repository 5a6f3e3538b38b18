"""End-to-end checks for the command-line interface."""
import json

import pytest

from boundtrack.cli import main

SPEC = {
    "seed": 7,
    "frames": 20,
    "frame_size": [300, 300],
    "base_polygon": [[80, 80], [220, 80], [220, 220], [80, 220]],
    "motion": {"translation": [1.0, 0.5], "rotation": 0.005, "scale": 1.0},
    "fragmentation": {"segments_per_edge": 2, "gap_fraction": 0.15, "jitter_sigma": 0.3},
    "clutter": {"dropout_prob": 0.05, "count": 5, "length_range": [5, 25]},
}


@pytest.fixture(scope="module")
def pipeline(tmp_path_factory):
    d = tmp_path_factory.mktemp("cli")
    spec = d / "spec.json"
    spec.write_text(json.dumps(SPEC), encoding="utf-8")
    init = d / "init.json"
    init.write_text(json.dumps(SPEC["base_polygon"]), encoding="utf-8")
    seq, gt = d / "seq.jsonl", d / "gt.jsonl"
    assert main(["synth", "--spec", str(spec), "--out-seq", str(seq), "--out-gt", str(gt)]) == 0
    return d, spec, init, seq, gt


def test_track_and_eval(pipeline, capfd):
    d, _, init, seq, gt = pipeline
    reports = d / "reports.jsonl"
    dump = d / "candidates.jsonl"
    rc = main(
        ["track", "--sequence", str(seq), "--init", str(init),
         "--out", str(reports), "--dump-candidates", str(dump)]
    )
    assert rc == 0
    out = capfd.readouterr().out
    assert "frames tracked" in out

    recs = [json.loads(l) for l in reports.read_text().splitlines() if l.strip()]
    assert len(recs) == 20
    assert {r["status"] for r in recs} <= {"tracked", "fallback", "lost"}

    cands = [json.loads(l) for l in dump.read_text().splitlines() if l.strip()]
    assert cands and all(c["cost"] >= 0 for c in cands)

    curve = d / "curve.csv"
    rc = main(["eval", "--reports", str(reports), "--gt", str(gt),
               "--ep-grid", "1:10:1", "--frame-size", "300x300", "--out", str(curve)])
    assert rc == 0
    lines = curve.read_text().splitlines()
    assert lines[0] == "e_p,success_rate"
    assert len(lines) == 11
    rates = [float(l.split(",")[1]) for l in lines[1:]]
    assert all(b >= a for a, b in zip(rates, rates[1:]))


def test_eval_infers_frame_size(pipeline, tmp_path):
    d, _, init, seq, gt = pipeline
    reports = d / "r2.jsonl"
    assert main(["track", "--sequence", str(seq), "--init", str(init), "--out", str(reports)]) == 0
    curve = tmp_path / "curve.csv"
    assert main(["eval", "--reports", str(reports), "--gt", str(gt), "--out", str(curve)]) == 0
    assert curve.exists()


def test_track_strict_exit_code(pipeline, tmp_path):
    d, _, init, seq, _ = pipeline
    # an empty sequence of frames cannot be tracked; REPORT_LOST + --strict -> 1
    empty = tmp_path / "empty_frames.jsonl"
    with open(empty, "w", encoding="utf-8") as fh:
        for i in range(3):
            fh.write(json.dumps({"frame_id": i, "width": 300, "height": 300, "segments": []}) + "\n")
    rc = main(["track", "--sequence", str(empty), "--init", str(init),
               "--fallback", "lost", "--strict", "--out", str(tmp_path / "out.jsonl")])
    assert rc == 1


def test_render_svg(pipeline, tmp_path):
    _, _, init, seq, gt = pipeline
    outdir = tmp_path / "svg"
    rc = main(["render", "--sequence", str(seq), "--init", str(init), "--gt", str(gt),
               "--layers", "segments,graph,candidates,buffer,boundary,ground_truth",
               "--frame-start", "0", "--frame-stop", "3", "--out-dir", str(outdir)])
    assert rc == 0
    files = sorted(outdir.glob("*.svg"))
    assert len(files) == 3
    body = files[0].read_text(encoding="utf-8")
    assert body.startswith("<svg") and "</svg>" in body


def test_bench_table(pipeline, capfd):
    _, _, init, seq, _ = pipeline
    rc = main(["bench", "--sequence", str(seq), "--init", str(init), "--compare-backends"])
    assert rc == 0
    out = capfd.readouterr().out
    assert "edges,nodes,lt_ms,gt_ms,fps" in out
    assert "backend comparison" in out
    assert "python" in out


def test_bad_inputs_exit_2(tmp_path, capfd):
    bad = tmp_path / "bad.jsonl"
    bad.write_text("{not json}\n", encoding="utf-8")
    init = tmp_path / "init.json"
    init.write_text("[[0,0],[10,0],[10,10]]", encoding="utf-8")
    rc = main(["track", "--sequence", str(bad), "--init", str(init),
               "--out", str(tmp_path / "o.jsonl")])
    assert rc == 2
    assert "error:" in capfd.readouterr().err

    rc = main(["track", "--sequence", str(tmp_path / "missing.jsonl"),
               "--init", str(init), "--out", str(tmp_path / "o.jsonl")])
    assert rc == 2
