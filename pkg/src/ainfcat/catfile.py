"""Canonical JSON file format for categories, twisted complexes, morphisms.

The format stores operations in the m-convention (human-writable degrees,
|m_i| = 2 - i) with unspecified entries defaulting to zero.  Serialization
is canonical: keys sorted, ops sorted by (arity, chain, inputs), basis order
preserved, coefficients in reduced canonical form; dump(load(dump(x))) is
byte-identical to dump(x).
"""

import json

from .category import AInftyCategory, verify_units
from .errors import FileFormatError
from .field import FieldSpec
from .graded import GradedElement, GradedSpace
from .twisted import FreeElement, FreeObject, TwObject


def canonical_json(doc):
    return json.dumps(doc, sort_keys=True, indent=1) + "\n"


def field_to_doc(field):
    return "Q" if field.kind == "Q" else {"Fp": field.p}


def field_from_doc(doc, location="field"):
    if doc == "Q":
        return FieldSpec("Q")
    if isinstance(doc, dict) and set(doc) == {"Fp"} and isinstance(doc["Fp"], int):
        try:
            return FieldSpec("Fp", doc["Fp"])
        except Exception as exc:
            raise FileFormatError(str(exc), location)
    raise FileFormatError(f"bad field spec {doc!r}", location)


def _coords_doc(elem):
    return {l: c.to_str() for l, c in sorted(elem.coords.items())}


def _elem_from_coords(space, degree, coords, field, location):
    out = {}
    for label, lit in coords.items():
        if label not in space.labels(degree):
            raise FileFormatError(
                f"label {label!r} is not a degree-{degree} basis label", location)
        out[label] = field.scalar(lit)
    return GradedElement(space, degree, out)


def category_to_doc(cat):
    homs = {}
    for (src, dst), space in sorted(cat.homs.items()):
        homs[f"{src}->{dst}"] = [
            {"degree": d, "label": l}
            for d in space.degrees() for l in space.labels(d)]
    ops = []
    for i in sorted(cat.ops):
        for (chain, labels), out in sorted(cat.ops[i].items()):
            ops.append({
                "arity": i,
                "chain": list(chain),
                "inputs": list(labels),
                "output": [{"coeff": c.to_str(), "label": l}
                           for l, c in sorted(out.coords.items())],
            })
    return {
        "field": field_to_doc(cat.field),
        "objects": list(cat.objects),
        "homs": homs,
        "units": dict(sorted(cat.units.items())),
        "max_arity": cat.max_arity,
        "ops": ops,
    }


def dump_category(cat):
    return canonical_json(category_to_doc(cat))


_TOP_KEYS = {"field", "objects", "homs", "units", "max_arity", "ops"}


def _expect(cond, message, location):
    if not cond:
        raise FileFormatError(message, location)


def category_from_doc(doc):
    _expect(isinstance(doc, dict), "top level must be an object", "$")
    unknown = set(doc) - _TOP_KEYS
    _expect(not unknown, f"unknown keys {sorted(unknown)}", "$")
    for key in _TOP_KEYS:
        _expect(key in doc, f"missing key {key!r}", "$")
    field = field_from_doc(doc["field"])
    objects = doc["objects"]
    _expect(isinstance(objects, list) and all(isinstance(o, str) for o in objects),
            "objects must be a list of strings", "objects")
    _expect(all("->" not in o for o in objects),
            "object ids must not contain '->'", "objects")
    homs = {}
    _expect(isinstance(doc["homs"], dict), "homs must be an object", "homs")
    for key, basis in doc["homs"].items():
        loc = f"homs[{key!r}]"
        parts = key.split("->")
        _expect(len(parts) == 2, "hom key must be 'src->dst'", loc)
        src, dst = parts
        _expect(src in objects and dst in objects, "unknown hom endpoints", loc)
        _expect(isinstance(basis, list), "hom basis must be a list", loc)
        dims = {}
        seen = set()
        for k, item in enumerate(basis):
            _expect(isinstance(item, dict) and set(item) == {"degree", "label"},
                    "basis item must be {degree, label}", f"{loc}[{k}]")
            _expect(isinstance(item["degree"], int), "degree must be an integer",
                    f"{loc}[{k}]")
            label = item["label"]
            _expect(isinstance(label, str), "label must be a string", f"{loc}[{k}]")
            _expect(label not in seen,
                    f"label {label!r} reused within the hom (labels must be "
                    "unique across degrees so ops can reference them)",
                    f"{loc}[{k}]")
            seen.add(label)
            dims.setdefault(item["degree"], []).append(label)
        homs[(src, dst)] = GradedSpace(field, dims)
    units = doc["units"]
    _expect(isinstance(units, dict), "units must be an object", "units")
    _expect(isinstance(doc["max_arity"], int) and doc["max_arity"] >= 2,
            "max_arity must be an integer >= 2", "max_arity")
    ops = {}
    _expect(isinstance(doc["ops"], list), "ops must be a list", "ops")
    for k, entry in enumerate(doc["ops"]):
        loc = f"ops[{k}]"
        _expect(isinstance(entry, dict)
                and set(entry) == {"arity", "chain", "inputs", "output"},
                "op entry must be {arity, chain, inputs, output}", loc)
        i = entry["arity"]
        chain = entry["chain"]
        labels = entry["inputs"]
        _expect(isinstance(i, int) and i >= 1, "arity must be a positive integer", loc)
        _expect(isinstance(chain, list) and len(chain) == i + 1,
                f"chain must list {i + 1} objects", loc)
        _expect(isinstance(labels, list) and len(labels) == i,
                f"inputs must list {i} labels", loc)
        for r in range(i):
            pair = (chain[r], chain[r + 1])
            _expect(pair in homs, f"no hom {pair[0]}->{pair[1]}", loc)
            space = homs[pair]
            found = any(labels[r] in space.labels(d) for d in space.degrees())
            _expect(found, f"input label {labels[r]!r} not in hom "
                    f"{pair[0]}->{pair[1]}", loc)
        pair = (chain[0], chain[-1])
        _expect(pair in homs, f"no hom {pair[0]}->{pair[1]} for the output", loc)
        space = homs[pair]
        degs = []
        for r in range(i):
            sp = homs[(chain[r], chain[r + 1])]
            degs.append(next(d for d in sp.degrees() if labels[r] in sp.labels(d)))
        out_deg = sum(degs) + 2 - i
        coords = {}
        for j, item in enumerate(entry["output"]):
            _expect(isinstance(item, dict) and set(item) == {"coeff", "label"},
                    "output item must be {coeff, label}", f"{loc}.output[{j}]")
            try:
                coords[item["label"]] = field.scalar(item["coeff"])
            except Exception as exc:
                raise FileFormatError(str(exc), f"{loc}.output[{j}]")
        try:
            out = _elem_from_coords(space, out_deg, {l: c.to_str()
                                                     for l, c in coords.items()},
                                    field, f"{loc}.output")
        except FileFormatError:
            raise
        key = (tuple(chain), tuple(labels))
        table = ops.setdefault(i, {})
        _expect(key not in table, "duplicate op entry", loc)
        table[key] = out
    try:
        cat = AInftyCategory(field, objects, homs, units, doc["max_arity"], ops)
    except Exception as exc:
        raise FileFormatError(str(exc), "$")
    report = verify_units(cat)
    if not report.passed:
        raise FileFormatError(
            f"category is not strictly unital: {report.failures[0]}", "units")
    return cat


def load_category(text):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FileFormatError(f"invalid JSON: {exc.msg}",
                              f"line {exc.lineno}, column {exc.colno}")
    return category_from_doc(doc)


# -- twisted complexes and morphisms ------------------------------------------


def tw_to_doc(X):
    return {
        "summands": [{"object": o, "shift": a} for a, o in X.base.summands],
        "delta": [{"col": c, "coords": _coords_doc(e), "row": r}
                  for (r, c), e in sorted(X.delta.entries.items())],
    }


def dump_tw(X):
    return canonical_json(tw_to_doc(X))


def _free_object_from_doc(doc, cat, location):
    _expect(isinstance(doc, list) and doc, "summands must be a nonempty list",
            location)
    summands = []
    for k, item in enumerate(doc):
        _expect(isinstance(item, dict) and set(item) == {"object", "shift"},
                "summand must be {object, shift}", f"{location}[{k}]")
        _expect(item["object"] in cat.objects,
                f"unknown object {item['object']!r}", f"{location}[{k}]")
        _expect(isinstance(item["shift"], int), "shift must be an integer",
                f"{location}[{k}]")
        summands.append((item["shift"], item["object"]))
    return FreeObject(summands)


def _entries_from_doc(doc, cat, src, dst, degree, location):
    entries = {}
    for k, item in enumerate(doc):
        loc = f"{location}[{k}]"
        _expect(isinstance(item, dict) and set(item) == {"col", "coords", "row"},
                "entry must be {row, col, coords}", loc)
        row, col = item["row"], item["col"]
        _expect(isinstance(row, int) and 0 <= row < len(dst),
                f"row {row} out of range", loc)
        _expect(isinstance(col, int) and 0 <= col < len(src),
                f"col {col} out of range", loc)
        a, src_obj = src.summands[col]
        b, dst_obj = dst.summands[row]
        space = cat.hom(src_obj, dst_obj)
        entry_deg = degree + (b - a)
        try:
            elem = _elem_from_coords(space, entry_deg, item["coords"], cat.field, loc)
        except FileFormatError:
            raise
        if elem:
            entries[(row, col)] = elem
    return entries


def tw_from_doc(doc, cat, location="$"):
    _expect(isinstance(doc, dict) and set(doc) == {"delta", "summands"},
            "twisted complex must be {summands, delta}", location)
    base = _free_object_from_doc(doc["summands"], cat, f"{location}.summands")
    entries = _entries_from_doc(doc["delta"], cat, base, base, 1,
                                f"{location}.delta")
    try:
        return TwObject(base, FreeElement(base, base, 1, entries))
    except Exception as exc:
        raise FileFormatError(str(exc), f"{location}.delta")


def load_tw(text, cat):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FileFormatError(f"invalid JSON: {exc.msg}",
                              f"line {exc.lineno}, column {exc.colno}")
    return tw_from_doc(doc, cat)


def map_to_doc(f):
    return {
        "degree": f.degree,
        "entries": [{"col": c, "coords": _coords_doc(e), "row": r}
                    for (r, c), e in sorted(f.entries.items())],
    }


def dump_map(f):
    return canonical_json(map_to_doc(f))


def map_from_doc(doc, cat, src, dst, location="$"):
    _expect(isinstance(doc, dict) and set(doc) == {"degree", "entries"},
            "morphism must be {degree, entries}", location)
    _expect(isinstance(doc["degree"], int), "degree must be an integer",
            f"{location}.degree")
    entries = _entries_from_doc(doc["entries"], cat, src.base, dst.base,
                                doc["degree"], f"{location}.entries")
    return FreeElement(src.base, dst.base, doc["degree"], entries)


def element_from_doc(doc, cat, location="$"):
    """Descriptor {src, dst, degree, coords} for a hom element of the category."""
    _expect(isinstance(doc, dict) and set(doc) == {"coords", "degree", "dst", "src"},
            "element descriptor must be {src, dst, degree, coords}", location)
    src, dst = doc["src"], doc["dst"]
    _expect(src in cat.objects and dst in cat.objects,
            "unknown src/dst object", location)
    _expect(isinstance(doc["degree"], int), "degree must be an integer", location)
    space = cat.hom(src, dst)
    elem = _elem_from_coords(space, doc["degree"], doc["coords"], cat.field,
                             f"{location}.coords")
    return src, dst, elem
