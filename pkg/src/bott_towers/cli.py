"""Command-line interface.

Exit codes: 0 on success, 1 for a negative decision ("not isomorphic",
"none within bound"), 2 for malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import bundles, classify, serial, vanishing
from .isolift import bounded_ring_iso_search, find_tower_iso
from .ring import NotHomogeneousError, TowerMismatchError, TowerShapeError


def _emit(obj):
    sys.stdout.write(serial.dumps(obj))


def cmd_classify(args):
    family = classify.enumerate_towers(args.n, args.bound)
    if args.cross_validate:
        report = classify.cross_validate(family, args.oracle_bound)
        part = classify.partition_towers(family)
        if not report["agree"]:
            print("partition mismatch between lifting and oracle", file=sys.stderr)
            _emit(report)
            return 2
        print(f"partitions agree: {report['num_classes']} classes")
    else:
        part = classify.partition_towers(family)
        report = classify.make_report(family, part)
    print(classify.report_table(family, part))
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(serial.dumps(report))
    else:
        _emit(report)
    return 0


def cmd_tower_iso(args):
    src = serial.load_tower(args.src)
    dst = serial.load_tower(args.dst)
    w = find_tower_iso(src, dst)
    if w is None:
        print("not isomorphic")
        return 1
    _emit(serial.witness_to_json(w))
    return 0


def cmd_ring_iso(args):
    src = serial.load_tower(args.src)
    dst = serial.load_tower(args.dst)
    m = bounded_ring_iso_search(src, dst, args.bound)
    if m is None:
        print(f"none within bound {args.bound}")
        return 1
    _emit(serial.matrix_to_json(m))
    return 0


def cmd_pairs(args):
    tower = serial.load_tower(args.tower)
    out = []
    for pair in vanishing.enumerate_primitive_vanishing_pairs(tower, args.bound):
        entry = {
            "z": serial.class_to_json(pair.z),
            "zbar": serial.class_to_json(pair.zbar),
        }
        form = vanishing.lemma_form_decompose(tower, pair)
        if form is not None:
            entry["lemma_form"] = {
                "j": form.j,
                "a": form.a,
                "u": serial.class_to_json(form.u),
                "sign": form.sign,
            }
        out.append(entry)
    _emit(out)
    return 0


def cmd_chern(args):
    tower = serial.load_tower(args.tower)
    alpha = serial.parse_class(tower, args.alpha)
    beta = serial.parse_class(tower, args.beta)
    bundle = bundles.DecBundle(alpha, beta)
    tc = bundles.total_chern(bundle)
    _emit(
        {
            "c1": serial.class_to_json(tc.c1),
            "c2": serial.class_to_json(tc.c2),
            "splits_trivially": bundles.splits_trivially(bundle),
        }
    )
    return 0


def cmd_proj_iso(args):
    tower = serial.load_tower(args.tower)
    alpha = serial.parse_class(tower, args.alpha)
    beta = serial.parse_class(tower, args.beta)
    w = bundles.projectivizations_isomorphic(alpha, beta)
    if w is None:
        print("not isomorphic")
        return 1
    _emit(
        {
            "s": w.s,
            "alpha_prime": serial.class_to_json(w.alpha_prime),
            "conjugation": w.s == -1,
        }
    )
    return 0


def cmd_mul(args):
    tower = serial.load_tower(args.tower)
    u = serial.parse_class(tower, args.u)
    v = serial.parse_class(tower, args.v)
    _emit(serial.class_to_json(u * v))
    return 0


def build_parser():
    p = argparse.ArgumentParser(prog="bott")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classify", help="partition a bounded tower family")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--bound", type=int, required=True)
    c.add_argument("--cross-validate", action="store_true")
    c.add_argument("--oracle-bound", type=int, default=4)
    c.add_argument("--out")
    c.set_defaults(func=cmd_classify)

    c = sub.add_parser("tower-iso", help="filtered isomorphism decision")
    c.add_argument("src")
    c.add_argument("dst")
    c.set_defaults(func=cmd_tower_iso)

    c = sub.add_parser("ring-iso", help="bounded unfiltered isomorphism search")
    c.add_argument("src")
    c.add_argument("dst")
    c.add_argument("--bound", type=int, default=3)
    c.set_defaults(func=cmd_ring_iso)

    c = sub.add_parser("pairs", help="primitive vanishing pairs in a box")
    c.add_argument("tower")
    c.add_argument("--bound", type=int, default=4)
    c.set_defaults(func=cmd_pairs)

    c = sub.add_parser("chern", help="total Chern class of a rank-2 sum")
    c.add_argument("tower")
    c.add_argument("--alpha", required=True)
    c.add_argument("--beta", required=True)
    c.set_defaults(func=cmd_chern)

    c = sub.add_parser("proj-iso", help="projectivization isomorphism decision")
    c.add_argument("tower")
    c.add_argument("--alpha", required=True)
    c.add_argument("--beta", required=True)
    c.set_defaults(func=cmd_proj_iso)

    c = sub.add_parser("mul", help="product of two classes")
    c.add_argument("tower")
    c.add_argument("--u", required=True)
    c.add_argument("--v", required=True)
    c.set_defaults(func=cmd_mul)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (
        TowerShapeError,
        TowerMismatchError,
        NotHomogeneousError,
        ValueError,
        KeyError,
        OSError,
        json.JSONDecodeError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
