"""Command-line entry point: synth, track, eval, render, bench."""
from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

import numpy as np

from . import evaluation, synth
from .backend import BACKEND, available_backends
from .errors import BoundtrackError, ParseError
from .geometry import Point2, Polygon
from .graph import build_graph
from .ingest import filter_by_buffer, load_sequence, save_sequence
from .render import RenderSpec, render_frame_svg
from .search import enumerate_candidates
from .tracker import Fallback, Status, Tracker, TrackerConfig, save_reports


def _load_polygon(path) -> Polygon:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            pts = json.load(fh)
            return Polygon(tuple(Point2(float(x), float(y)) for x, y in pts))
        except (json.JSONDecodeError, TypeError, ValueError) as exc:
            raise ParseError(f"bad polygon file: {exc}", path) from exc


def _parse_grid(text: str) -> list[float]:
    """start:stop:step (stop inclusive), e.g. 1:30:1."""
    try:
        start, stop, step = (float(v) for v in text.split(":"))
    except ValueError as exc:
        raise ParseError(f"bad grid {text!r}, expected start:stop:step") from exc
    if step <= 0 or stop < start:
        raise ParseError(f"bad grid {text!r}")
    return list(np.arange(start, stop + step / 2, step))


def _cmd_synth(args) -> int:
    spec = synth.SynthSpec.from_json(args.spec)
    frames, gt = synth.generate(spec)
    save_sequence(frames, args.out_seq)
    evaluation.save_ground_truth(list(enumerate(gt)), args.out_gt)
    print(f"wrote {len(frames)} frames to {args.out_seq} and {args.out_gt}")
    return 0


def _tracker_config(args) -> TrackerConfig:
    return TrackerConfig(
        buffer_threshold=args.threshold,
        s_e=args.se,
        fallback=Fallback.HOLD_PRIOR if args.fallback == "hold" else Fallback.REPORT_LOST,
    )


def _cmd_track(args) -> int:
    frames = load_sequence(args.sequence)
    tracker = Tracker(_load_polygon(args.init), _tracker_config(args))
    dump = open(args.dump_candidates, "w", encoding="utf-8") if args.dump_candidates else None
    try:
        for frame in frames:
            if dump is not None:
                _dump_candidates(dump, frame, tracker)
            tracker.step(frame)
    finally:
        if dump is not None:
            dump.close()
    save_reports(tracker.history, args.out)
    lost = sum(1 for r in tracker.history if r.status is Status.LOST)
    tracked = sum(1 for r in tracker.history if r.status is Status.TRACKED)
    print(f"{tracked}/{len(frames)} frames tracked, {lost} lost; reports in {args.out}")
    if args.strict and lost:
        return 1
    return 0


def _dump_candidates(fh, frame, tracker) -> None:
    try:
        kept = filter_by_buffer(frame.segments, tracker.prior, tracker.config.buffer_threshold)
        g = build_graph(kept, tracker.config.merge_tolerance)
        for c in enumerate_candidates(g):
            fh.write(
                json.dumps(
                    {
                        "frame_id": frame.frame_id,
                        "seed_edge": c.seed_edge,
                        "anchor_vertex": c.anchor_vertex,
                        "gap_length": c.gap_length,
                        "area": c.area,
                        "cost": c.cost,
                        "vertices": [[v.x, v.y] for v in c.polygon.vertices],
                    }
                )
                + "\n"
            )
    except BoundtrackError:
        pass  # frame failures are reported by the tracker itself


def _load_reports(path):
    """Minimal TrackReport view for evaluation: (frame_id, boundary or None)."""
    out = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            raw = raw.strip()
            if not raw:
                continue
            try:
                obj = json.loads(raw)
                boundary = obj.get("boundary")
                poly = (
                    Polygon(tuple(Point2(float(x), float(y)) for x, y in boundary))
                    if boundary
                    else None
                )
                out.append((int(obj["frame_id"]), poly))
            except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
                raise ParseError(f"bad report record: {exc}", path, lineno) from exc
    return out


def _cmd_eval(args) -> int:
    reports = _load_reports(args.reports)
    gt = evaluation.load_ground_truth(args.gt)
    if args.frame_size:
        w, h = (int(v) for v in args.frame_size.split("x"))
    else:
        pts = [v for poly in gt.values() for v in poly.vertices]
        w = int(max(p.x for p in pts)) + 20
        h = int(max(p.y for p in pts)) + 20
    errors = []
    for fid, poly in reports:
        ref = gt.get(fid)
        if ref is None:
            continue
        if poly is None:
            errors.append(float("inf"))
        else:
            errors.append(evaluation.alignment_error(poly, ref, w, h))
    if not errors:
        raise ParseError("no report frames matched the ground truth")
    thresholds, rates = evaluation.success_curve(errors, _parse_grid(args.ep_grid))
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write("e_p,success_rate\n")
        for t, r in zip(thresholds, rates):
            fh.write(f"{t:g},{r:.6f}\n")
    print(f"wrote success curve ({len(thresholds)} thresholds) to {args.out}")
    return 0


def _cmd_render(args) -> int:
    frames = load_sequence(args.sequence)
    spec = RenderSpec(
        layers=tuple(args.layers.split(",")),
        frame_start=args.frame_start,
        frame_stop=args.frame_stop,
    )
    gt = evaluation.load_ground_truth(args.gt) if args.gt else {}
    tracker = Tracker(_load_polygon(args.init), _tracker_config(args))
    outdir = Path(args.out_dir)
    outdir.mkdir(parents=True, exist_ok=True)
    written = 0
    for frame in frames:
        prior = tracker.prior
        graph = None
        candidates = None
        if spec.wants(frame.frame_id) and (
            "graph" in spec.layers or "candidates" in spec.layers
        ):
            try:
                kept = filter_by_buffer(frame.segments, prior, tracker.config.buffer_threshold)
                graph = build_graph(kept, tracker.config.merge_tolerance)
                if "candidates" in spec.layers:
                    candidates = enumerate_candidates(graph)
            except BoundtrackError:
                pass
        report = tracker.step(frame)
        if not spec.wants(frame.frame_id):
            continue
        svg = render_frame_svg(
            frame.width,
            frame.height,
            spec,
            segments=frame.segments,
            prior=prior,
            graph=graph,
            candidates=candidates,
            boundary=report.boundary,
            ground_truth=gt.get(frame.frame_id),
        )
        (outdir / f"frame_{frame.frame_id:06d}.svg").write_text(svg, encoding="utf-8")
        written += 1
    print(f"wrote {written} SVG files to {outdir}")
    return 0


def _cmd_bench(args) -> int:
    frames = load_sequence(args.sequence)
    tracker = Tracker(_load_polygon(args.init), _tracker_config(args))
    reports = tracker.run(frames)
    lt = np.array([r.lt_ms for r in reports])
    gt_ms = np.array([r.gt_ms for r in reports])
    fps = 1000.0 / np.maximum(lt + gt_ms, 1e-9)
    edges = np.array([r.edges for r in reports], dtype=float)
    nodes = np.array([r.vertices for r in reports], dtype=float)
    print(f"backend: {BACKEND}")
    print("edges,nodes,lt_ms,gt_ms,fps")
    print(
        f"{edges.mean():.1f},{nodes.mean():.1f},{lt.mean():.2f},"
        f"{gt_ms.mean():.2f},{fps.mean():.2f}"
    )
    if args.compare_backends:
        _bench_backends(frames, tracker)
    return 0


def _bench_backends(frames, tracker) -> None:
    """Time each dijkstra kernel on the final frame's graph."""
    kept = filter_by_buffer(frames[-1].segments, tracker.prior, tracker.config.buffer_threshold)
    try:
        g = build_graph(kept, tracker.config.merge_tolerance)
    except BoundtrackError:
        print("backend comparison skipped: last frame has no graph")
        return
    indptr, nbr, eid, w = g.csr()
    sources = [e for i in g.detected_index[:8] for e in (g.edges[i].u, g.edges[i].v)]
    print("\nbackend comparison (dijkstra on last frame's graph, "
          f"{len(g.vertices)} nodes / {len(g.edges)} edges):")
    for name, (dij, _) in available_backends().items():
        t0 = time.perf_counter()
        reps = 0
        while time.perf_counter() - t0 < 0.2:
            for s in sources:
                dij(indptr, nbr, eid, w, s, g.detected_index[0])
            reps += len(sources)
        per_call = (time.perf_counter() - t0) / reps * 1e6
        print(f"  {name:7s} {per_call:8.1f} us/call")


def _add_tracking_flags(p):
    p.add_argument("--threshold", type=float, default=20.0, help="buffer distance in px")
    p.add_argument("--se", type=float, default=0.9, help="area-similarity gate")
    p.add_argument("--fallback", choices=("hold", "lost"), default="hold")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="boundtrack")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("synth", help="generate a synthetic sequence")
    p.add_argument("--spec", required=True)
    p.add_argument("--out-seq", required=True)
    p.add_argument("--out-gt", required=True)
    p.set_defaults(func=_cmd_synth)

    p = sub.add_parser("track", help="track a boundary through a sequence")
    p.add_argument("--sequence", required=True)
    p.add_argument("--init", required=True, help="JSON [[x,y],...] initial polygon")
    _add_tracking_flags(p)
    p.add_argument("--out", required=True)
    p.add_argument("--strict", action="store_true", help="exit 1 if any frame is lost")
    p.add_argument("--dump-candidates", default=None)
    p.set_defaults(func=_cmd_track)

    p = sub.add_parser("eval", help="score reports against ground truth")
    p.add_argument("--reports", required=True)
    p.add_argument("--gt", required=True)
    p.add_argument("--ep-grid", default="1:30:1")
    p.add_argument("--frame-size", default=None, help="WxH; inferred from gt if omitted")
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser("render", help="emit per-frame SVG overlays")
    p.add_argument("--sequence", required=True)
    p.add_argument("--init", required=True)
    p.add_argument("--gt", default=None)
    _add_tracking_flags(p)
    p.add_argument("--layers", default="segments,boundary")
    p.add_argument("--frame-start", type=int, default=0)
    p.add_argument("--frame-stop", type=int, default=None)
    p.add_argument("--out-dir", required=True)
    p.set_defaults(func=_cmd_render)

    p = sub.add_parser("bench", help="per-frame timing table")
    p.add_argument("--sequence", required=True)
    p.add_argument("--init", required=True)
    _add_tracking_flags(p)
    p.add_argument("--compare-backends", action="store_true")
    p.set_defaults(func=_cmd_bench)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
