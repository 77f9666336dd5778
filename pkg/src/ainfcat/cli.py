"""Command-line front end.

Exit codes: 0 = success / checked-true, 1 = checked-false (a verification
or decision that came out negative), 2 = input error.  `--json` switches
every subcommand to a canonical machine-readable report (sorted keys, no
timestamps), byte-identical across runs on identical inputs.
"""

import argparse
import json
import sys

from . import catfile
from .category import HomologyData, verify_relations, verify_units
from .directed import analyze_directed, DirectedStructure
from .errors import AinfError, FileFormatError, PreconditionError
from .field import FieldSpec
from .fixtures import (arrow_fixture, poly_fixture, quiver_massey_fixture,
                       random_minimal_category)
from .massey import massey_ainfty, massey_triangulated
from .twisted import (FreeElement, TwObject, cone, embed_object,
                      materialize_tw, truncation_check)


def _read(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise FileFormatError(str(exc), path)


def _emit(args, doc, human_lines):
    if args.json:
        sys.stdout.write(catfile.canonical_json(doc))
    else:
        for line in human_lines:
            print(line)


def _parse_field(text):
    if text == "Q":
        return FieldSpec("Q")
    if text.startswith("Fp:"):
        try:
            return FieldSpec("Fp", int(text.split(":", 1)[1]))
        except (ValueError, PreconditionError) as exc:
            raise FileFormatError(f"bad field {text!r}: {exc}")
    raise FileFormatError(f"bad field {text!r}; use Q or Fp:<prime>")


def cmd_verify(args):
    cat = catfile.load_category(_read(args.file))
    arity = args.arity if args.arity is not None else min(cat.max_arity, 6)
    if arity > cat.max_arity:
        raise FileFormatError(
            f"requested arity {arity} exceeds declared max_arity {cat.max_arity}; "
            "relations beyond it are unknown")
    rel = verify_relations(cat, arity)
    uni = verify_units(cat)
    ok = rel.passed and uni.passed
    doc = {
        "command": "verify",
        "arity": arity,
        "relations": "pass" if rel.passed else "fail",
        "units": "pass" if uni.passed else "fail",
        "failures": [
            {"arity": i, "chain": list(ch), "inputs": list(lab)}
            for i, ch, lab, _ in rel.failures[:50]],
    }
    lines = []
    if ok:
        lines.append(f"all relations hold up to arity {arity}; units strict")
    else:
        lines.append(f"FAILED: relations {doc['relations']}, units {doc['units']}")
        for f in doc["failures"][:5]:
            lines.append(f"  arity {f['arity']} at chain {f['chain']} "
                         f"inputs {f['inputs']}")
    _emit(args, doc, lines)
    return 0 if ok else 1


def cmd_cohomology(args):
    cat = catfile.load_category(_read(args.file))
    data = HomologyData(cat)
    homs = {}
    for (src, dst) in sorted(cat.homs):
        dims = {str(d): data.h_dim(src, dst, d)
                for d in cat.hom(src, dst).degrees()
                if data.h_dim(src, dst, d)}
        if dims:
            homs[f"{src}->{dst}"] = dims
    doc = {"command": "cohomology", "dims": homs}
    lines = [f"{k}: " + ", ".join(f"deg {d}: {n}" for d, n in v.items())
             for k, v in homs.items()]
    _emit(args, doc, lines or ["all hom spaces are acyclic"])
    return 0


def cmd_cone(args):
    cat = catfile.load_category(_read(args.file))
    try:
        twdoc = json.loads(_read(args.tw))
    except json.JSONDecodeError as exc:
        raise FileFormatError(f"invalid JSON: {exc.msg}", args.tw)
    if not (isinstance(twdoc, dict) and set(twdoc) == {"source", "target"}):
        raise FileFormatError("twisted-complex file must be {source, target}",
                              args.tw)
    src = catfile.tw_from_doc(twdoc["source"], cat, "source")
    dst = catfile.tw_from_doc(twdoc["target"], cat, "target")
    try:
        mapdoc = json.loads(_read(args.map))
    except json.JSONDecodeError as exc:
        raise FileFormatError(f"invalid JSON: {exc.msg}", args.map)
    f = catfile.map_from_doc(mapdoc, cat, src, dst)
    C, i, p = cone(cat, src, dst, f)
    doc = {
        "command": "cone",
        "cone": catfile.tw_to_doc(C),
        "i": catfile.map_to_doc(i),
        "p": catfile.map_to_doc(p),
    }
    lines = [
        "cone summands: " + ", ".join(
            f"S^{a}{o}" for a, o in C.base.summands),
        f"delta entries: {len(C.delta.entries)}",
        "maps i (degree 0) and p (degree 1) attached",
    ]
    _emit(args, doc, lines)
    return 0


def _triple(args, cat):
    fx, fy, f = catfile.element_from_doc(json.loads(args.f), cat, "--f")
    gy, gz, g = catfile.element_from_doc(json.loads(args.g), cat, "--g")
    hz, hu, h = catfile.element_from_doc(json.loads(args.h), cat, "--h")
    if fy != gy or gz != hz:
        raise FileFormatError("triple does not compose: need f: X->Y, "
                              "g: Y->Z, h: Z->U")
    return (fx, fy, gz, hu), f, g, h


def _massey_doc(result):
    X, Y, Z, U = result.objects
    return {
        "objects": {"X": X, "Y": Y, "Z": Z, "U": U},
        "representative": {l: c.to_str()
                           for l, c in sorted(result.representative.coords.items())},
        "representative_class": [c.to_str() for c in result.rep_class],
        "indeterminacy_basis": [[c.to_str() for c in v]
                                for v in result.indeterminacy],
    }


def cmd_massey(args):
    cat = catfile.load_category(_read(args.file))
    objects, f, g, h = _triple(args, cat)
    try:
        if args.triangulated:
            result = massey_triangulated(cat, objects, f, g, h)
        else:
            result = massey_ainfty(cat, objects, f, g, h)
    except PreconditionError as exc:
        raise FileFormatError(str(exc))
    doc = {"command": "massey",
           "mode": "triangulated" if args.triangulated else "ainfty"}
    doc.update(_massey_doc(result))
    lines = [
        f"representative class: [{', '.join(doc['representative_class'])}]",
        f"indeterminacy rank: {len(result.indeterminacy)}",
    ]
    _emit(args, doc, lines)
    return 0


def cmd_triangle_check(args):
    cat = catfile.load_category(_read(args.file))
    objects, f, g, h = _triple(args, cat)
    X, Y, Z, U = objects
    if U != X:
        raise FileFormatError("triangle-check needs h to land back in X")
    try:
        result = massey_ainfty(cat, objects, f, g, h)
    except PreconditionError as exc:
        raise FileFormatError(str(exc))
    ok = result.contains_element(cat.unit_element(X))
    doc = {"command": "triangle-check", "distinguished": ok}
    doc.update(_massey_doc(result))
    verdict = ("distinguished: id_X lies in the Massey coset" if ok
               else "not distinguished: id_X is outside the Massey coset")
    _emit(args, doc, [verdict])
    return 0 if ok else 1


def cmd_directed(args):
    cat = catfile.load_category(_read(args.file))
    try:
        result = analyze_directed(cat)
    except PreconditionError as exc:
        raise FileFormatError(str(exc))
    if isinstance(result, DirectedStructure):
        doc = {"command": "directed", "directed": True,
               "length": result.length,
               "blocks": [list(b) for b in result.blocks]}
        lines = [f"directed of length {result.length}",
                 "blocks: " + " | ".join(",".join(b) for b in result.blocks)]
        _emit(args, doc, lines)
        return 0
    src, dst, deg, elem = result.witness
    doc = {"command": "directed", "directed": False,
           "reason": result.reason,
           "witness": {"src": src, "dst": dst, "degree": deg,
                       "coords": {l: c.to_str()
                                  for l, c in sorted(elem.coords.items())}}}
    lines = [f"not directed: {result.reason}",
             f"witness: {src}->{dst} degree {deg}: {elem}"]
    _emit(args, doc, lines)
    return 1


def cmd_truncate(args):
    try:
        doc_in = json.loads(_read(args.twfile))
    except json.JSONDecodeError as exc:
        raise FileFormatError(f"invalid JSON: {exc.msg}", args.twfile)
    if not (isinstance(doc_in, dict) and {"summands", "delta"} <= set(doc_in)):
        raise FileFormatError("twisted-complex file must have summands and delta",
                              args.twfile)
    n = len(doc_in["summands"])
    positions = set()
    for k, item in enumerate(doc_in["delta"]):
        if not (isinstance(item, dict) and {"row", "col"} <= set(item)):
            raise FileFormatError("delta entry must carry row and col",
                                  f"delta[{k}]")
        row, col = item["row"], item["col"]
        if not (0 <= col < row < n):
            raise FileFormatError(
                f"delta entry ({row},{col}) is not strictly lower triangular",
                f"delta[{k}]")
        if item.get("coords"):
            positions.add((row, col))
    blocks = []
    current = []
    start = 0
    for t in range(n):
        if current and any(col >= start for (row, col) in positions if row == t):
            blocks.append(current)
            current = []
            start = t
        current.append(t)
    if current:
        blocks.append(current)
    accepted = len(blocks) <= args.q + 1
    doc = {"command": "truncate", "q": args.q, "accepted": accepted,
           "blocks": blocks}
    lines = [("accepted" if accepted else "refused")
             + f": {len(blocks)} blocks for q = {args.q}",
             "partition: " + " | ".join(",".join(map(str, b)) for b in blocks)]
    _emit(args, doc, lines)
    return 0 if accepted else 1


def _triangle_demo(field):
    cat = quiver_massey_fixture(field)
    ex, ey = embed_object(cat, "A"), embed_object(cat, "B")
    f = FreeElement(ex.base, ey.base, 0,
                    {(0, 0): cat.basis_element("A", "B", "f0")})
    C, _, _ = cone(cat, ex, ey, f)
    return materialize_tw(cat, [ex, ey, C], 3, names=["X", "Y", "C"]).category


def _quiver_tw(field):
    cat = quiver_massey_fixture(field)
    objs = [embed_object(cat, o) for o in ("A", "B", "C")]
    objs.append(embed_object(cat, "D", -1))
    return materialize_tw(cat, objs, 3, names=["X", "Y", "Z", "U"]).category


def cmd_fixtures(args):
    if args.action != "export":
        raise FileFormatError(f"unknown fixtures action {args.action!r}")
    field = _parse_field(args.field)
    name = args.name
    try:
        if name == "quiver_massey":
            cat = quiver_massey_fixture(field)
        elif name == "poly":
            cat = poly_fixture(args.N or 7, args.d or 3, field)
        elif name == "arrow":
            cat = arrow_fixture(args.N or 4, field)
        elif name == "random":
            cat = random_minimal_category(args.seed, field=field)
        elif name == "quiver_massey_tw":
            cat = _quiver_tw(field)
        elif name == "triangle_demo":
            cat = _triangle_demo(field)
        else:
            raise FileFormatError(f"unknown fixture {name!r}")
    except PreconditionError as exc:
        raise FileFormatError(str(exc))
    text = catfile.dump_category(cat)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
        if not args.json:
            print(f"wrote {args.out}")
    else:
        sys.stdout.write(text)
    return 0


def build_parser():
    ap = argparse.ArgumentParser(
        prog="ainfcat",
        description="Exact computations with finite A-infinity categories: "
                    "verification, cohomology, cones, Massey products, "
                    "triangle detection, directedness, truncation.")
    ap.add_argument("--json", action="store_true",
                    help="machine-readable canonical JSON output")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="check the Stasheff identities and units")
    p.add_argument("file")
    p.add_argument("--arity", type=int, default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("cohomology", help="cohomology dimensions per hom/degree")
    p.add_argument("file")
    p.set_defaults(func=cmd_cohomology)

    p = sub.add_parser("cone", help="mapping cone and its triangle maps")
    p.add_argument("file")
    p.add_argument("--tw", required=True,
                   help="JSON file {source: <tw>, target: <tw>}")
    p.add_argument("--map", required=True, help="JSON morphism file")
    p.set_defaults(func=cmd_cone)

    p = sub.add_parser("massey", help="Massey triple product coset")
    p.add_argument("file")
    p.add_argument("--f", required=True, help="element descriptor JSON")
    p.add_argument("--g", required=True)
    p.add_argument("--h", required=True)
    p.add_argument("--triangulated", action="store_true",
                   help="compute in H^0(Tw) via the cone diagram")
    p.set_defaults(func=cmd_massey)

    p = sub.add_parser("triangle-check",
                       help="is X -> Y -> Z -> (1) X distinguished?")
    p.add_argument("file")
    p.add_argument("--f", required=True)
    p.add_argument("--g", required=True)
    p.add_argument("--h", required=True)
    p.set_defaults(func=cmd_triangle_check)

    p = sub.add_parser("directed", help="directed block decomposition")
    p.add_argument("file")
    p.set_defaults(func=cmd_directed)

    p = sub.add_parser("truncate", help="coarsest block partition of a twist")
    p.add_argument("twfile")
    p.add_argument("--q", type=int, required=True)
    p.set_defaults(func=cmd_truncate)

    p = sub.add_parser("fixtures", help="built-in example categories")
    p.add_argument("action", choices=["export"])
    p.add_argument("name")
    p.add_argument("--field", default="Q", help="Q or Fp:<prime>")
    p.add_argument("--N", type=int, default=None)
    p.add_argument("--d", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_fixtures)
    return ap


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except FileFormatError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except json.JSONDecodeError as exc:
        print(f"input error: invalid JSON ({exc.msg})", file=sys.stderr)
        return 2
    except AinfError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
