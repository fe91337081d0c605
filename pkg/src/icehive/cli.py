"""Command line and HTTP surface tying the engine together.

Every subcommand reads and writes canonical JSON (sorted keys, two-space
indent) so identical inputs give byte-identical outputs.  The verify
subcommand runs the named acceptance suite and exits nonzero as soon as
any case fails; serve exposes the session API used by the browser
explorer.
"""

import argparse
import json
import logging
import os
import random
import sys
import threading
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer

from . import render
from .errors import IcehiveError
from .hive import (
    build_hive,
    drop_edges,
    strip_quiver,
    strip_verify,
    verify_full_rank,
)
from .laurent import LaurentPoly
from .optimize import disk_pipeline, optimize_vertex
from .quiver import IceQuiver
from .seeds import Seed, g_vector
from .semiinvariants import (
    cardinality_check,
    exchange_identity_check,
    flip_compatibility,
    schofield_config_check,
)
from .surface import (
    DiskTriangulation,
    all_triangulations,
    flip,
    flip_sequence,
    flip_transport,
    flip_verify,
    glue,
    glued_twist_sequence,
    twist,
    twist_layers,
    twist_transport,
    twist_verify,
)
from .weights import (
    balanced_identity,
    solve_balanced_extension,
    verify_extension_commutation,
)

logger = logging.getLogger(__name__)


def canonical_json(obj):
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _emit(text, path=None):
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w") as handle:
            handle.write(text)


def _load_obj(path):
    with open(path) as handle:
        return json.load(handle)


def _load_quiver(path):
    return IceQuiver.from_json_obj(_load_obj(path))


def _load_triangulation(path):
    return DiskTriangulation.from_json_obj(_load_obj(path))


def _parse_ints(text):
    return [int(part) for part in text.split(",") if part.strip() != ""]


def _label_list(label):
    return list(label) if isinstance(label, tuple) else label


def _transport_pairs(transport):
    return sorted(
        [_label_list(old), _label_list(new)] for old, new in transport.items()
    )


# -- plain commands ----------------------------------------------------------


def cmd_hive(args):
    hive = build_hive(args.l)
    if args.drop_edges:
        quiver = drop_edges(hive, _parse_ints(args.drop_edges))
        obj = quiver.to_json_obj()
    else:
        quiver = hive.quiver
        obj = hive.to_json_obj()
    _emit(quiver.to_dot() + "\n" if args.dot else canonical_json(obj),
          args.out)
    return 0


def cmd_glue(args):
    tri = _load_triangulation(args.triangulation)
    glued = glue(tri, args.l)
    text = (glued.quiver.to_dot() + "\n" if args.dot
            else canonical_json(glued.to_json_obj()))
    _emit(text, args.out)
    return 0


def cmd_mutate(args):
    quiver = _load_quiver(args.quiver)
    quiver = quiver.mutate_seq(_parse_ints(args.seq))
    _emit(canonical_json(quiver.to_json_obj()), args.out)
    return 0


def cmd_seed_mutate(args):
    seed = Seed.initial(_load_quiver(args.quiver))
    track = []
    for u in _parse_ints(args.seq):
        seed = seed.mutate(u)
        if args.track_laurent:
            track.append({"vertex": u,
                          "variable": seed.vars[u].to_json_obj()})
    obj = {"seed": seed.to_json_obj()}
    if args.track_laurent:
        obj["track"] = track
    _emit(canonical_json(obj), args.out)
    return 0


def cmd_flip(args):
    tri = _load_triangulation(args.triangulation)
    d = tuple(_parse_ints(args.diagonal))
    obj = {
        "flipped": flip(tri, d).to_json_obj(),
        "sequence": [_label_list(lab) for lab in flip_sequence(tri, d, args.l)],
        "transport": _transport_pairs(flip_transport(tri, d, args.l)),
    }
    code = 0
    if args.verify:
        ok = flip_verify(tri, d, args.l)
        obj["verified"] = ok
        code = 0 if ok else 1
    _emit(canonical_json(obj), args.out)
    return code


def cmd_twist(args):
    tri = _load_triangulation(args.triangulation)
    e = tuple(_parse_ints(args.edge))
    obj = {
        "twisted": twist(tri, args.triangle, e).to_json_obj(),
        "sequence": [
            _label_list(lab)
            for lab in glued_twist_sequence(tri, args.triangle, e, args.l)
        ],
        "transport": _transport_pairs(
            twist_transport(tri, args.triangle, e, args.l)
        ),
    }
    code = 0
    if args.verify:
        ok = twist_verify(tri, args.triangle, e, args.l)
        obj["verified"] = ok
        code = 0 if ok else 1
    _emit(canonical_json(obj), args.out)
    return code


def cmd_optimize(args):
    quiver = _load_quiver(args.quiver)
    quiver.check_vertex(args.vertex)
    label = quiver.labels[args.vertex]
    sequence = optimize_vertex(quiver, label, max_depth=args.max_depth)
    obj = {
        "vertex": args.vertex,
        "label": _label_list(label),
        "max_depth": args.max_depth,
        "sequence": (
            None
            if sequence is None
            else [_label_list(lab) for lab in sequence]
        ),
    }
    _emit(canonical_json(obj), args.out)
    return 0


def cmd_disk_pipeline(args):
    report = disk_pipeline(args.m, args.l, max_depth=args.max_depth)
    _emit(canonical_json(report.to_json_obj()), args.out)
    if args.figures:
        os.makedirs(args.figures, exist_ok=True)
        render.draw_pipeline(
            report, os.path.join(args.figures, "pipeline.png"))
        _emit(render.pipeline_tsv(report),
              os.path.join(args.figures, "pipeline.tsv"))
        positions = render.weight_positions(report.terminal, args.m, args.l)
        render.draw_quiver(
            report.terminal,
            positions,
            os.path.join(args.figures, "terminal.png"),
            title="terminal quiver m=%d l=%d" % (args.m, args.l),
        )
        _emit(render.quiver_tsv(report.terminal),
              os.path.join(args.figures, "terminal.tsv"))
    healthy = (
        report.start_full_rank
        and report.terminal_matches
        and all(step.full_rank for step in report.steps)
    )
    return 0 if healthy else 1


def cmd_gvector(args):
    seed = Seed.from_json_obj(_load_obj(args.seed))
    poly = LaurentPoly.from_json_obj(_load_obj(args.poly), seed.quiver.q)
    _emit(canonical_json({"g": g_vector(poly, seed.quiver)}), args.out)
    return 0


def cmd_render(args):
    obj = _load_obj(args.quiver)
    quiver = IceQuiver.from_json_obj(obj)
    stored = {
        v["id"]: tuple(v["xy"]) for v in obj["vertices"] if "xy" in v
    }
    positions = stored if len(stored) == quiver.q else (
        render.circle_positions(quiver))
    render.draw_quiver(quiver, positions, args.out, title=args.title)
    if args.tsv:
        _emit(render.quiver_tsv(quiver), args.tsv)
    return 0


# -- verification suites -------------------------------------------------------


def _square():
    return all_triangulations(4)[0]


def _suite_strip(rng):
    return [("strip n=%d" % n, strip_verify(n)) for n in range(1, 9)]


def _suite_flip(rng):
    rows = []
    square = _square()
    d = square.diagonals()[0]
    for l in (2, 3, 4):
        rows.append(("square l=%d" % l, flip_verify(square, d, l)))
    pentagon = all_triangulations(5)[0]
    for d5 in pentagon.diagonals():
        rows.append(
            ("pentagon l=3 d=%s" % (d5,), flip_verify(pentagon, d5, 3)))
    return rows


def _suite_twist(rng):
    listing = [
        [(3, 1, 1), (2, 2, 1), (2, 1, 2), (1, 3, 1), (1, 2, 2), (1, 1, 3)],
        [(3, 1, 1), (2, 2, 1), (2, 1, 2)],
        [(3, 1, 1)],
    ]
    rows = [("hive listing l=5", twist_layers(5, edge=1) == listing)]
    square = _square()
    back = twist(twist(square, 0, (2, 4)), 0, (2, 4))
    rows.append(("involution on triangulations", back == square))
    for l in (2, 3, 4):
        rows.append(
            ("glued square l=%d" % l, twist_verify(square, 0, (2, 4), l)))
    return rows


def _suite_exchange(rng, trials=50):
    rows = []
    for l in range(2, 6):
        ok = True
        for j in range(1, l):
            for _ in range(trials):
                u = [rng.randint(-9, 9) for _ in range(l)]
                v = [rng.randint(-9, 9) for _ in range(l)]
                if not exchange_identity_check(j, l - j, u, v):
                    ok = False
        rows.append(("exchange l=%d (%d points/j)" % (l, trials), ok))
    return rows


def _suite_flip_compat(rng, trials=20):
    rows = []
    square = _square()
    d = square.diagonals()[0]
    for l in (2, 3):
        report = flip_compatibility(
            square, d, l, trials=trials, seed=rng.randrange(10**6))
        rows.append(("square l=%d (%d trials)" % (l, trials), report["ok"]))
    return rows


def _suite_weights(rng):
    rows = []
    for m in range(3, 7):
        for l in range(2, 6):
            ok = all(
                schofield_config_check(tri, l)
                for tri in all_triangulations(m)
            )
            rows.append(("weights m=%d l=%d" % (m, l), ok))
    return rows


def _suite_cardinality(rng):
    rows = []
    for m in range(3, 8):
        for l in range(2, 6):
            ok = all(
                cardinality_check(tri, l) for tri in all_triangulations(m)
            )
            rows.append(("count m=%d l=%d" % (m, l), ok))
    return rows


def _random_quiver(rng, max_vertices=8):
    q = rng.randint(2, max_vertices)
    adj = [[0] * q for _ in range(q)]
    for u in range(q):
        for v in range(u + 1, q):
            m = rng.choice((0, 0, 1, 1, 2, -1, -1, -2))
            adj[u][v] = m
            adj[v][u] = -m
    frozen = [rng.random() < 0.3 for _ in range(q)]
    if all(frozen):
        frozen[0] = False
    return IceQuiver(list(range(q)), frozen, adj)


def _suite_rank(rng):
    rows = []
    for l in range(2, 9):
        hive = build_hive(l)
        cert = verify_full_rank(hive)
        full = hive.quiver.b_rank() == len(hive.quiver.mutable_ids())
        rows.append(("hive l=%d certificate" % l, cert and full))
    preserved = True
    for _ in range(20):
        quiver = _random_quiver(rng)
        start = quiver.b_rank()
        mutable = quiver.mutable_ids()
        for _ in range(50):
            quiver = quiver.mutate(rng.choice(mutable))
            if quiver.b_rank() != start:
                preserved = False
    rows.append(("rank invariance 20x50 random walks", preserved))
    return rows


def _suite_balanced(rng):
    rows = []
    hive = build_hive(3)
    ext = hive.quiver
    core = drop_edges(hive, (1,))
    e_ids = [ext.id_of(lab) for lab in hive.edge_vertices(1)]
    theta = solve_balanced_extension(ext, e_ids)
    ok_identity = all(
        balanced_identity(core, ext, theta, u) for u in core.mutable_ids()
    )
    rows.append(("balanced identity l=3", ok_identity))
    mutable = core.mutable_ids()
    ok_commute = True
    for _ in range(5):
        seq = [rng.choice(mutable) for _ in range(rng.randint(1, 3))]
        if not verify_extension_commutation(core, ext, theta, seq):
            ok_commute = False
    rows.append(("extension commutation l=3", ok_commute))
    return rows


SUITES = {
    "strip": _suite_strip,
    "flip": _suite_flip,
    "twist": _suite_twist,
    "exchange": _suite_exchange,
    "flip-compat": _suite_flip_compat,
    "weights": _suite_weights,
    "cardinality": _suite_cardinality,
    "rank": _suite_rank,
    "balanced": _suite_balanced,
}


def _suite_figure(name, figures_dir):
    """A representative drawing per suite, next to the outcome chart."""
    if name == "strip":
        quiver = strip_quiver(6)
        render.draw_quiver(
            quiver,
            render.circle_positions(quiver),
            os.path.join(figures_dir, "strip.png"),
            title="strip n=6",
        )
    elif name in ("flip", "flip-compat", "weights"):
        glued = glue(_square(), 3)
        render.draw_quiver(
            glued.quiver,
            render.weight_positions(glued.quiver, 4, 3),
            os.path.join(figures_dir, "%s-square.png" % name),
            title="glued square l=3",
        )
    elif name in ("twist", "rank"):
        hive = build_hive(5)
        positions = {
            v: hive.xy(hive.quiver.labels[v]) for v in range(hive.quiver.q)
        }
        render.draw_quiver(
            hive.quiver,
            positions,
            os.path.join(figures_dir, "%s-hive.png" % name),
            title="hive l=5",
        )


def cmd_verify(args):
    rng = random.Random(args.seed)
    rows = SUITES[args.suite](rng)
    lines = ["%s\t%s" % (case, "ok" if ok else "FAIL") for case, ok in rows]
    failures = sum(1 for _, ok in rows if not ok)
    lines.append(
        "suite %s: %d cases, %d failures" % (args.suite, len(rows), failures)
    )
    _emit("\n".join(lines) + "\n", args.out)
    if args.figures:
        os.makedirs(args.figures, exist_ok=True)
        _emit(
            render.outcomes_tsv(rows),
            os.path.join(args.figures, "%s.tsv" % args.suite),
        )
        render.draw_outcomes(
            rows,
            os.path.join(args.figures, "%s.png" % args.suite),
            "verify %s" % args.suite,
        )
        _suite_figure(args.suite, args.figures)
    return 0 if failures == 0 else 1


# -- http session ---------------------------------------------------------------


class Session:
    """One in-memory explorer session; every step is exactly undoable."""

    def __init__(self):
        self.lock = threading.Lock()
        self.kind = None
        self.l = None
        self.tri = None
        self.quiver = None
        self.steps = []
        self.undo_stack = []

    # step application; callers hold the lock

    def load(self, body):
        kind = body.get("kind")
        if kind == "hive":
            l = int(body["l"])
            hive = build_hive(l)
            quiver = hive.quiver
            if body.get("drop_edges"):
                quiver = drop_edges(hive, [int(e) for e in body["drop_edges"]])
            self.kind, self.l, self.tri = "hive", l, None
            self.quiver = quiver
        elif kind == "glue":
            l = int(body["l"])
            tri = DiskTriangulation(
                int(body["m"]), [tuple(t) for t in body["triangles"]]
            )
            self.kind, self.l, self.tri = "glued", l, tri
            self.quiver = glue(tri, l).quiver
        elif kind == "quiver":
            self.kind, self.l, self.tri = "quiver", None, None
            self.quiver = IceQuiver.from_json_obj(body["quiver"])
        else:
            raise ValueError("kind must be hive, glue or quiver")
        self.steps = []
        self.undo_stack = []

    def mutate(self, body):
        vertex = int(body["vertex"])
        self.quiver = self.quiver.mutate(vertex)
        self.steps.append({"op": "mutate", "vertex": vertex})
        self.undo_stack.append(("mutate", vertex))

    def flip(self, body):
        if self.tri is None:
            raise ValueError("flips need a glued session")
        d = tuple(int(x) for x in body["diagonal"])
        sequence = flip_sequence(self.tri, d, self.l)
        transport = flip_transport(self.tri, d, self.l)
        quiver = self.quiver.mutate_labels(sequence)
        quiver = quiver.relabeled(lambda lab: transport.get(lab, lab))
        old_tri = self.tri
        self.tri = flip(self.tri, d)
        self.quiver = quiver
        record = {
            "op": "flip",
            "diagonal": sorted(d),
            "sequence": [_label_list(lab) for lab in sequence],
        }
        self.steps.append(record)
        self.undo_stack.append(("replay", old_tri, sequence, transport))
        return record

    def twist(self, body):
        if self.tri is None:
            raise ValueError("twists need a glued session")
        t_index = int(body["triangle"])
        e = tuple(int(x) for x in body["edge"])
        sequence = glued_twist_sequence(self.tri, t_index, e, self.l)
        transport = twist_transport(self.tri, t_index, e, self.l)
        quiver = self.quiver.mutate_labels(sequence)
        quiver = quiver.relabeled(lambda lab: transport.get(lab, lab))
        old_tri = self.tri
        self.tri = twist(self.tri, t_index, e)
        self.quiver = quiver
        record = {
            "op": "twist",
            "triangle": t_index,
            "edge": sorted(e),
            "sequence": [_label_list(lab) for lab in sequence],
        }
        self.steps.append(record)
        self.undo_stack.append(("replay", old_tri, sequence, transport))
        return record

    def undo(self):
        if not self.undo_stack:
            raise ValueError("nothing to undo")
        entry = self.undo_stack.pop()
        self.steps.pop()
        if entry[0] == "mutate":
            self.quiver = self.quiver.mutate(entry[1])
            return
        _, old_tri, sequence, transport = entry
        inverse = {new: old for old, new in transport.items()}
        quiver = self.quiver.relabeled(lambda lab: inverse.get(lab, lab))
        self.quiver = quiver.mutate_labels(list(reversed(sequence)))
        self.tri = old_tri

    def positions(self):
        if self.kind == "glued":
            layout = render.weight_positions(self.quiver, self.tri.m, self.l)
        elif self.kind == "hive":
            hive = build_hive(self.l)
            layout = {
                v: hive.xy(self.quiver.labels[v])
                for v in range(self.quiver.q)
            }
        else:
            return [None] * self.quiver.q
        return [list(layout[v]) for v in range(self.quiver.q)]

    def snapshot(self):
        if self.quiver is None:
            return {"kind": None, "loaded": False}
        quiver = self.quiver
        mutable = quiver.mutable_ids()
        return {
            "kind": self.kind,
            "loaded": True,
            "l": self.l,
            "triangulation": (
                None if self.tri is None else self.tri.to_json_obj()
            ),
            "quiver": quiver.to_json_obj(),
            "positions": self.positions(),
            "b_rank": quiver.b_rank(),
            "full_rank": quiver.b_rank() == len(mutable),
            "sinks": [v for v in range(quiver.q) if quiver.is_sink(v)],
            "sources": [v for v in range(quiver.q) if quiver.is_source(v)],
        }


class SessionHandler(BaseHTTPRequestHandler):
    def log_message(self, fmt, *args):
        logger.debug("http: " + fmt, *args)

    def _reply(self, code, obj):
        body = canonical_json(obj).encode()
        self.send_response(code)
        self.send_header("Content-Type", "application/json")
        self.send_header("Content-Length", str(len(body)))
        self.send_header("Access-Control-Allow-Origin", "*")
        self.end_headers()
        self.wfile.write(body)

    def do_GET(self):
        session = self.server.session
        with session.lock:
            if self.path == "/state":
                self._reply(200, session.snapshot())
            elif self.path == "/history":
                self._reply(200, {"steps": list(session.steps)})
            else:
                self._reply(404, {"error": "unknown path %s" % self.path})

    def do_POST(self):
        session = self.server.session
        length = int(self.headers.get("Content-Length") or 0)
        raw = self.rfile.read(length) if length else b"{}"
        try:
            body = json.loads(raw or b"{}")
        except json.JSONDecodeError as exc:
            self._reply(400, {"error": "bad json: %s" % exc})
            return
        with session.lock:
            try:
                extra = None
                if self.path == "/load":
                    session.load(body)
                elif self.path == "/mutate":
                    if session.quiver is None:
                        raise ValueError("load a quiver first")
                    session.mutate(body)
                elif self.path == "/flip":
                    extra = session.flip(body)
                elif self.path == "/twist":
                    extra = session.twist(body)
                elif self.path == "/undo":
                    session.undo()
                else:
                    self._reply(404, {"error": "unknown path %s" % self.path})
                    return
            except IcehiveError as exc:
                self._reply(
                    400, {"error": "%s: %s" % (type(exc).__name__, exc)})
                return
            except (ValueError, KeyError, TypeError) as exc:
                self._reply(400, {"error": str(exc)})
                return
            out = {"ok": True, "state": session.snapshot()}
            if extra is not None:
                out["applied"] = extra
            self._reply(200, out)


def make_server(host, port):
    server = ThreadingHTTPServer((host, port), SessionHandler)
    server.session = Session()
    return server


def cmd_serve(args):
    server = make_server(args.host, args.port)
    print(
        "serving on http://%s:%d" % server.server_address[:2],
        file=sys.stderr,
    )
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
    return 0


# -- argument wiring --------------------------------------------------------------


def build_parser():
    parser = argparse.ArgumentParser(
        prog="icehive",
        description="exact ice-quiver engine: hives, gluing, mutation, "
        "optimization and verification",
    )
    parser.add_argument("--verbose", action="store_true",
                        help="log search progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hive", help="build the hive quiver of size l")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--drop-edges", default="",
                   help="comma separated boundary edges to forget")
    p.add_argument("--dot", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_hive)

    p = sub.add_parser("glue", help="glue hives along a triangulation")
    p.add_argument("--triangulation", required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--dot", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_glue)

    p = sub.add_parser("mutate", help="mutate a quiver along a sequence")
    p.add_argument("--quiver", required=True)
    p.add_argument("--seq", default="")
    p.add_argument("--out")
    p.set_defaults(func=cmd_mutate)

    p = sub.add_parser("seed-mutate",
                       help="mutate the initial seed, tracking variables")
    p.add_argument("--quiver", required=True)
    p.add_argument("--seq", default="")
    p.add_argument("--track-laurent", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_seed_mutate)

    p = sub.add_parser("flip", help="flip a diagonal of a triangulation")
    p.add_argument("--triangulation", required=True)
    p.add_argument("--diagonal", required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--verify", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_flip)

    p = sub.add_parser("twist", help="twist one triangle of a triangulation")
    p.add_argument("--triangulation", required=True)
    p.add_argument("--triangle", type=int, required=True)
    p.add_argument("--edge", required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--verify", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_twist)

    p = sub.add_parser("optimize",
                       help="search a mutation sequence making a vertex "
                       "a sink or source")
    p.add_argument("--quiver", required=True)
    p.add_argument("--vertex", type=int, required=True)
    p.add_argument("--max-depth", type=int, default=6)
    p.add_argument("--out")
    p.set_defaults(func=cmd_optimize)

    p = sub.add_parser("disk-pipeline",
                       help="run the frozen-vertex deletion pipeline")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--max-depth", type=int, default=6)
    p.add_argument("--figures", help="directory for figures and tsv")
    p.add_argument("--out")
    p.set_defaults(func=cmd_disk_pipeline)

    p = sub.add_parser("verify", help="run one verification suite")
    p.add_argument("--suite", required=True, choices=sorted(SUITES))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--figures", help="directory for figures and tsv")
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gvector",
                       help="extract the g-vector of a Laurent polynomial")
    p.add_argument("--seed", required=True)
    p.add_argument("--poly", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_gvector)

    p = sub.add_parser("render", help="draw a quiver JSON file")
    p.add_argument("--quiver", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--tsv")
    p.add_argument("--title")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("serve", help="serve the session API over http")
    p.add_argument("--port", type=int, default=8642)
    p.add_argument("--host", default="127.0.0.1")
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        return args.func(args)
    except IcehiveError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1
    except FileNotFoundError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
