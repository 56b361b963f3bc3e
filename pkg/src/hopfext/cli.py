"""Command-line surface and the on-disk structure-constant format.

Files are JSON documents with a ``kind`` discriminator:

* structure: field, dim, basis, mul, unit, comul, counit, optional
  antipode_left/antipode_right;
* action: acting, acted (structures) plus the sparse ``act`` matrix;
* extension: x, a, b (structures) plus kappa, alpha, e, lambda.

Sparse structure constants are triples [i, j, k, "coef"]: for ``mul``
the product of e_i and e_j has that coefficient on e_k, for ``comul``
the coproduct of e_i has it on e_j (x) e_k.  Connecting maps are sparse
[row, col, "coef"] triples.  Scalars are decimal-integer text, rationals
"p/q" in lowest terms.  Serialization is canonical (sorted keys, sorted
triples, lowest-terms scalars), so equality of canonical files is
byte-for-byte.

Exit codes: 0 all checks pass, 1 a check failed (witness printed),
2 malformed input or usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .core import CoreError, Field, LinMap, PrimeField, RationalField, Space, base_space, parse_field
from .actions import ActionData, ActionError, verify_action, verify_hopf_action
from .catalog import (
    ACTION_NAMES,
    EXTENSION_NAMES,
    STRUCTURE_NAMES,
    CatalogError,
    build,
    monoid_semidirect_eval,
)
from .extensions import (
    ExtensionError,
    SplitExtensionData,
    induce_action,
    kernel,
    semidirect,
    verify_split_extension,
)
from .structures import (
    BialgebraData,
    HopfData,
    StructureError,
    VerificationReport,
    verify_structure,
)


class FormatError(Exception):
    """Malformed on-disk data; message carries the offending key."""


# ---------------------------------------------------------------------------
# scalars and fields


def field_to_json(field: Field) -> dict:
    if isinstance(field, RationalField):
        return {"kind": "Q"}
    if isinstance(field, PrimeField):
        return {"kind": "Fp", "p": field.p}
    raise FormatError(f"unserializable field {field!r}")


def field_from_json(obj) -> Field:
    if not isinstance(obj, dict) or "kind" not in obj:
        raise FormatError("key 'field': expected {'kind': 'Q'} or {'kind': 'Fp', 'p': <prime>}")
    if obj["kind"] == "Q":
        return RationalField()
    if obj["kind"] == "Fp":
        if "p" not in obj:
            raise FormatError("key 'field': Fp needs 'p'")
        return PrimeField(int(obj["p"]))
    raise FormatError(f"key 'field': unknown kind {obj['kind']!r}")


def _parse_scalar(field: Field, text, where: str):
    try:
        return field.parse(str(text))
    except Exception as err:
        raise FormatError(f"key {where!r}: bad scalar {text!r} ({err})") from None


# ---------------------------------------------------------------------------
# structures <-> json


def structure_to_json(s: BialgebraData) -> dict:
    F = s.field
    n = s.dim
    mul = []
    for (r, c), v in s.m.entries.items():
        i, j = divmod(c, n)
        mul.append([i, j, r, F.fmt(v)])
    comul = []
    for (r, c), v in s.delta.entries.items():
        j, k = divmod(r, n)
        comul.append([c, j, k, F.fmt(v)])
    unit = [F.fmt(s.u.entries.get((i, 0), F.zero)) for i in range(n)]
    counit = [F.fmt(s.eps.entries.get((0, i), F.zero)) for i in range(n)]
    doc = {
        "kind": "structure",
        "field": field_to_json(F),
        "dim": n,
        "name": s.name,
        "basis": list(s.basis_labels),
        "mul": sorted(mul, key=lambda t: t[:3]),
        "unit": unit,
        "comul": sorted(comul, key=lambda t: t[:3]),
        "counit": counit,
    }
    if isinstance(s, HopfData):
        doc["antipode_left"] = [[F.fmt(s.s_left.entries.get((r, c), F.zero)) for c in range(n)] for r in range(n)]
        doc["antipode_right"] = [[F.fmt(s.s_right.entries.get((r, c), F.zero)) for c in range(n)] for r in range(n)]
    return doc


def _require(obj: dict, key: str):
    if key not in obj:
        raise FormatError(f"missing key {key!r}")
    return obj[key]


def structure_from_json(obj: dict) -> BialgebraData:
    if not isinstance(obj, dict):
        raise FormatError("structure: expected a JSON object")
    F = field_from_json(_require(obj, "field"))
    n = int(_require(obj, "dim"))
    if n < 1:
        raise FormatError("key 'dim': must be >= 1")
    labels = _require(obj, "basis")
    if not isinstance(labels, list) or len(labels) != n:
        raise FormatError(f"key 'basis': expected {n} labels")
    name = obj.get("name", "A")
    space = Space((base_space(str(name), tuple(str(l) for l in labels)),))
    sq = space.tensor(space)
    unit_obj = Space(())

    def triple_map(key: str, dom: Space, cod: Space, pos) -> LinMap:
        entries: dict = {}
        for t in _require(obj, key):
            if not isinstance(t, list) or len(t) != 4:
                raise FormatError(f"key {key!r}: expected triples [i, j, k, coef]")
            i, j, k = int(t[0]), int(t[1]), int(t[2])
            v = _parse_scalar(F, t[3], key)
            r, c = pos(i, j, k)
            if not (0 <= r < cod.dim and 0 <= c < dom.dim):
                raise FormatError(f"key {key!r}: indices {t[:3]} out of range")
            if (r, c) in entries:
                raise FormatError(f"key {key!r}: duplicate position {t[:3]}")
            if not F.is_zero(v):
                entries[(r, c)] = v
        return LinMap(dom, cod, F, entries)

    def vector_map(key: str, as_unit: bool) -> LinMap:
        coeffs = _require(obj, key)
        if not isinstance(coeffs, list) or len(coeffs) != n:
            raise FormatError(f"key {key!r}: expected {n} coefficients")
        entries = {}
        for i, t in enumerate(coeffs):
            v = _parse_scalar(F, t, key)
            if not F.is_zero(v):
                entries[(i, 0) if as_unit else (0, i)] = v
        return LinMap(unit_obj if as_unit else space, space if as_unit else unit_obj, F, entries)

    m = triple_map("mul", sq, space, lambda i, j, k: (k, i * n + j))
    delta = triple_map("comul", space, sq, lambda i, j, k: (j * n + k, i))
    u = vector_map("unit", as_unit=True)
    eps = vector_map("counit", as_unit=False)

    def dense_map(key: str) -> LinMap:
        rows = obj[key]
        if not isinstance(rows, list) or len(rows) != n or any(len(r) != n for r in rows):
            raise FormatError(f"key {key!r}: expected an {n}x{n} matrix")
        return LinMap.from_rows(space, space, F, [[_parse_scalar(F, v, key) for v in row] for row in rows])

    has_l = "antipode_left" in obj
    has_r = "antipode_right" in obj
    if has_l or has_r:
        s_l = dense_map("antipode_left") if has_l else None
        s_r = dense_map("antipode_right") if has_r else None
        try:
            return HopfData(space, m, u, delta, eps, s_l, s_r)
        except StructureError as err:
            raise FormatError(str(err)) from None
    try:
        return BialgebraData(space, m, u, delta, eps)
    except StructureError as err:
        raise FormatError(str(err)) from None


# ---------------------------------------------------------------------------
# maps, actions, extensions <-> json


def map_to_json(f: LinMap) -> list:
    F = f.field
    return sorted([[r, c, F.fmt(v)] for (r, c), v in f.entries.items()], key=lambda t: t[:2])


def map_from_json(obj, key: str, dom: Space, cod: Space, field: Field) -> LinMap:
    if not isinstance(obj, list):
        raise FormatError(f"key {key!r}: expected a list of [row, col, coef] triples")
    entries = {}
    for t in obj:
        if not isinstance(t, list) or len(t) != 3:
            raise FormatError(f"key {key!r}: expected triples [row, col, coef]")
        r, c = int(t[0]), int(t[1])
        v = _parse_scalar(field, t[2], key)
        if not (0 <= r < cod.dim and 0 <= c < dom.dim):
            raise FormatError(f"key {key!r}: position ({r},{c}) out of range")
        if (r, c) in entries:
            raise FormatError(f"key {key!r}: duplicate position ({r},{c})")
        if not field.is_zero(v):
            entries[(r, c)] = v
    return LinMap(dom, cod, field, entries)


def action_to_json(a: ActionData) -> dict:
    return {
        "kind": "action",
        "acting": structure_to_json(a.acting),
        "acted": structure_to_json(a.acted),
        "act": map_to_json(a.act),
    }


def action_from_json(obj: dict) -> ActionData:
    acting = structure_from_json(_require(obj, "acting"))
    acted = structure_from_json(_require(obj, "acted"))
    if acting.field != acted.field:
        raise FormatError("acting and acted use different fields")
    act = map_from_json(
        _require(obj, "act"), "act", acting.space.tensor(acted.space), acted.space, acting.field
    )
    return ActionData(acting, acted, act)


def extension_to_json(s: SplitExtensionData) -> dict:
    return {
        "kind": "extension",
        "x": structure_to_json(s.x),
        "a": structure_to_json(s.a),
        "b": structure_to_json(s.b),
        "kappa": map_to_json(s.kappa),
        "alpha": map_to_json(s.alpha),
        "e": map_to_json(s.e),
        "lambda": map_to_json(s.lam),
    }


def extension_from_json(obj: dict) -> SplitExtensionData:
    x = structure_from_json(_require(obj, "x"))
    a = structure_from_json(_require(obj, "a"))
    b = structure_from_json(_require(obj, "b"))
    F = a.field
    if x.field != F or b.field != F:
        raise FormatError("extension components use different fields")
    kappa = map_from_json(_require(obj, "kappa"), "kappa", x.space, a.space, F)
    alpha = map_from_json(_require(obj, "alpha"), "alpha", a.space, b.space, F)
    e = map_from_json(_require(obj, "e"), "e", b.space, a.space, F)
    lam = map_from_json(_require(obj, "lambda"), "lambda", a.space, x.space, F)
    return SplitExtensionData(x, a, b, kappa=kappa, alpha=alpha, e=e, lam=lam)


def document_to_json(value) -> dict:
    if isinstance(value, BialgebraData):
        return structure_to_json(value)
    if isinstance(value, ActionData):
        return action_to_json(value)
    if isinstance(value, SplitExtensionData):
        return extension_to_json(value)
    raise FormatError(f"unserializable value {value!r}")


def document_from_json(obj):
    if not isinstance(obj, dict):
        raise FormatError("top level: expected a JSON object")
    kind = _require(obj, "kind")
    if kind == "structure":
        return structure_from_json(obj)
    if kind == "action":
        return action_from_json(obj)
    if kind == "extension":
        return extension_from_json(obj)
    raise FormatError(f"key 'kind': unknown document kind {kind!r}")


def dumps_canonical(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=1) + "\n"


def loads_document(text: str):
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as err:
        raise FormatError(f"line {err.lineno}, column {err.colno}: {err.msg}") from None
    return document_from_json(obj)


# ---------------------------------------------------------------------------
# commands


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _write_output(path: str | None, text: str):
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _print_report(report: VerificationReport, as_json: bool, heading: str):
    if as_json:
        doc = {
            "subject": heading,
            "passed": report.passed,
            "checks": [
                {
                    "name": c.name,
                    "passed": c.passed,
                    "witness": None
                    if c.witness is None
                    else {
                        "row": c.witness.row,
                        "col": c.witness.col,
                        "row_label": c.witness.row_label,
                        "col_label": c.witness.col_label,
                        "left": c.witness.left,
                        "right": c.witness.right,
                    },
                }
                for c in report.checks
            ],
        }
        print(json.dumps(doc, indent=1, sort_keys=True))
    else:
        print(heading)
        print(report)
        n_ok = sum(1 for c in report.checks if c.passed)
        print(f"{n_ok}/{len(report.checks)} checks pass")


def _default_level(value) -> str:
    if isinstance(value, BialgebraData):
        return "hopf" if isinstance(value, HopfData) else "bialgebra"
    if isinstance(value, ActionData):
        # actions verify at the bialgebra level by default; the Hopf-level
        # conditions are opt-in (--level hopf), since a perfectly valid
        # bialgebra action may fail them
        return "bialgebra"
    if isinstance(value, SplitExtensionData):
        return value.level
    raise FormatError("nothing to verify")


def cmd_verify(args) -> int:
    value = loads_document(_read_input(args.file))
    level = args.level or _default_level(value)
    if isinstance(value, BialgebraData):
        report = verify_structure(value, level)
        heading = f"structure {value.name} (level {level})"
    elif isinstance(value, ActionData):
        if level == "hopf":
            report = verify_hopf_action(value)
        elif level == "bialgebra":
            report = verify_action(value)
        else:
            raise FormatError(f"actions verify at bialgebra or hopf level, not {level!r}")
        heading = f"action of {value.acting.name} on {value.acted.name} (level {level})"
    elif isinstance(value, SplitExtensionData):
        if level not in ("bialgebra", "hopf"):
            raise FormatError(f"extensions verify at bialgebra or hopf level, not {level!r}")
        report = verify_split_extension(value, level)
        heading = f"split extension {value.x.name} -> {value.a.name} <=> {value.b.name} (level {level})"
    else:
        raise FormatError("nothing to verify")
    _print_report(report, args.json, heading)
    return 0 if report.passed else 1


def cmd_semidirect(args) -> int:
    value = loads_document(_read_input(args.file))
    if not isinstance(value, ActionData):
        raise FormatError("semidirect expects an action file")
    _, ext = semidirect(value)
    _write_output(args.output, dumps_canonical(extension_to_json(ext)))
    return 0


def cmd_induce(args) -> int:
    value = loads_document(_read_input(args.file))
    if not isinstance(value, SplitExtensionData):
        raise FormatError("induce expects an extension file")
    action = induce_action(value)
    _write_output(args.output, dumps_canonical(action_to_json(action)))
    return 0


def cmd_roundtrip(args) -> int:
    value = loads_document(_read_input(args.file))
    if not isinstance(value, ActionData):
        raise FormatError("roundtrip expects an action file")
    original = dumps_canonical(action_to_json(value))
    _, ext = semidirect(value)
    back = dumps_canonical(action_to_json(induce_action(ext)))
    if original == back:
        print("roundtrip: induced action reproduces the input byte-for-byte")
        return 0
    print("roundtrip: MISMATCH between input action and induced action")
    return 1


def cmd_kernels(args) -> int:
    value = loads_document(_read_input(args.file))
    if not isinstance(value, SplitExtensionData):
        raise FormatError("kernels expects an extension file")
    subs = {kind: kernel(value.alpha, value.a, value.b, kind) for kind in ("HKer", "LKer", "RKer")}
    if args.json:
        doc = {
            "dims": {k: s.dim for k, s in subs.items()},
            "equal": {
                "HKer=LKer": subs["HKer"] == subs["LKer"],
                "HKer=RKer": subs["HKer"] == subs["RKer"],
                "LKer=RKer": subs["LKer"] == subs["RKer"],
            },
        }
        print(json.dumps(doc, indent=1, sort_keys=True))
    else:
        for k, s in subs.items():
            print(f"{k}: dim {s.dim}")
        for pair in (("HKer", "LKer"), ("HKer", "RKer"), ("LKer", "RKer")):
            verdict = "equal" if subs[pair[0]] == subs[pair[1]] else "different"
            print(f"{pair[0]} vs {pair[1]}: {verdict}")
    return 0


def cmd_catalog(args) -> int:
    field = parse_field(args.field)
    entry = build(args.name, field)
    _write_output(args.output, dumps_canonical(document_to_json(entry.value)))
    return 0


def cmd_eval_monoid(args) -> int:
    result = monoid_semidirect_eval((args.x, args.b), (args.y, args.c))
    if args.json:
        print(json.dumps(list(result)))
    else:
        print(f"({result[0]}, {result[1]})")
    return 0


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hopfext",
        description="verify structure-constant bialgebras/Hopf algebras, actions, and split extensions",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="verify a structure/action/extension file")
    p.add_argument("file", nargs="?", default="-", help="input file (default stdin)")
    p.add_argument("--level", choices=["coalgebra", "algebra", "bialgebra", "hopf"], default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("semidirect", help="build the twisted-product extension of an action file")
    p.add_argument("file", nargs="?", default="-")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_semidirect)

    p = sub.add_parser("induce", help="recover the action of an extension file")
    p.add_argument("file", nargs="?", default="-")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_induce)

    p = sub.add_parser("roundtrip", help="check induce(semidirect(action)) reproduces the action")
    p.add_argument("file", nargs="?", default="-")
    p.set_defaults(func=cmd_roundtrip)

    p = sub.add_parser("kernels", help="Hopf/left/right kernel dimensions of an extension file")
    p.add_argument("file", nargs="?", default="-")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_kernels)

    p = sub.add_parser("catalog", help="emit a named catalog entry as a file")
    p.add_argument(
        "name",
        help=f"one of kC<n>, {', '.join(STRUCTURE_NAMES[2:] + ACTION_NAMES + EXTENSION_NAMES)}",
    )
    p.add_argument("--field", default="Q", help="Q or Fp:<p> (default Q)")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("eval-monoid", help="twisted product on (N,+) x (N>0,*): (x + y**b, b*c)")
    p.add_argument("x", type=int)
    p.add_argument("b", type=int)
    p.add_argument("y", type=int)
    p.add_argument("c", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_eval_monoid)

    return parser


def main(argv=None) -> int:
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        # argparse exits 2 on usage errors, matching the malformed-input code
        return int(err.code or 0)
    try:
        return args.func(args)
    except (FormatError, CatalogError, StructureError, CoreError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except (ActionError, ExtensionError) as err:
        # well-formed input whose verification preconditions fail
        print(f"verification failure: {err}", file=sys.stderr)
        return 1
    except FileNotFoundError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
