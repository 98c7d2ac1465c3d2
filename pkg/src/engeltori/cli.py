"""Command-line interface.

Exit codes: 0 success, 1 validation error (or a failed verification),
2 a lemma invoked outside its hypotheses.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import catalog, formats, verify
from .errors import EngelToriError, HypothesisViolated, ValidationError
from .homology import alexander_duality, homology, kunneth_predict, tensor
from .knots import (BraidWord, legendrian_stabilize, markov_stabilize, orient_front,
                    sl_of_braid, transverse_pushoff, validate_braid, validate_front)
from .render import front_svg
from .tori import (build_dpv_torus, build_legendrian_torus, complement_h2_product,
                   complement_h2_transverse, distinguish, self_linking_class,
                   stabilize_legendrian_torus, stabilize_torus, tb_class)

EXIT_OK, EXIT_INVALID, EXIT_HYPOTHESIS = 0, 1, 2


class CommandFailed(Exception):
    def __init__(self, payload, text):
        self.payload, self.text = payload, text


def format_table(columns, rows) -> str:
    cells = [[str(c) for c in columns]] + [[str(x) for x in r] for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(columns))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)


def _graded_text(G) -> str:
    return "\n".join(f"H_{k} = {g}" for k, g in enumerate(G.groups))


# --------------------------------------------------------------------------
# knot

def _knot_report(k) -> dict:
    if isinstance(k, BraidWord):
        rep = validate_braid(k)
        if not rep.valid:
            raise ValidationError("; ".join(rep.problems))
        out = {"type": "braid", "strands": k.strands, "word": list(k.letters),
               "components": rep.components, "cycles": rep.cycles,
               "exponent_sum": k.exponent_sum}
        if rep.components == 1:
            out["sl"] = sl_of_braid(k)
        return out
    rep = validate_front(k)
    if not rep.valid:
        raise ValidationError("; ".join(rep.problems))
    out = {"type": "front", "events": formats.front_to_json(k)["events"],
           "components": rep.components}
    if rep.components == 1:
        o = orient_front(k)
        tb, rot = o.writhe - k.cusps // 2, (o.down - o.up) // 2
        out.update(tb=tb, rot=rot, writhe=o.writhe, cusps=k.cusps, up=o.up,
                   down=o.down, sl_plus=transverse_pushoff(tb, rot, "+"),
                   sl_minus=transverse_pushoff(tb, rot, "-"))
    return out


def _knot_text(rep: dict) -> str:
    keys = [k for k in ("components", "exponent_sum", "sl", "tb", "rot", "writhe",
                        "cusps", "up", "down", "sl_plus", "sl_minus") if k in rep]
    head = (f"braid on {rep['strands']} strands: {rep['word']}" if rep["type"] == "braid"
            else "front: " + " ".join(f"{e['kind']}{e['pos']}" for e in rep["events"]))
    return head + "\n" + "\n".join(f"  {k}: {rep[k]}" for k in keys)


def cmd_knot_invariants(args):
    k = formats.knot_from_json(formats.load_json(args.file))
    rep = _knot_report(k)
    return rep, _knot_text(rep)


def cmd_knot_stabilize(args):
    k = formats.knot_from_json(formats.load_json(args.file))
    if args.count < 0:
        raise ValidationError("--count must be nonnegative")
    if isinstance(k, BraidWord):
        sign = args.sign or "-"
        for _ in range(args.count):
            k = markov_stabilize(k, sign)
    else:
        sign = args.sign or "+"
        for _ in range(args.count):
            k = legendrian_stabilize(k, sign)
    rep = _knot_report(k)
    obj = formats.knot_to_json(k)
    obj["invariants"] = {x: rep[x] for x in ("components", "sl", "tb", "rot") if x in rep}
    return obj, _knot_text(rep)


# --------------------------------------------------------------------------
# homology

def cmd_homology(args):
    targets = args.targets
    if targets[0] == "kunneth":
        if len(targets) != 3:
            raise ValidationError("usage: homology kunneth <a> <b>")
        a, b = targets[1], targets[2]
        pred = kunneth_predict(formats.graded_from_ref(a), formats.graded_from_ref(b))
        out = pred.to_json()
        text = "Kunneth prediction:\n" + _graded_text(pred)
        try:
            ca, cb = formats.complex_from_ref(a), formats.complex_from_ref(b)
        except ValidationError:
            ca = cb = None
        if ca is not None:
            direct = homology(tensor(ca, cb))
            out["direct"] = direct.to_json()
            out["agree"] = direct == pred
            text += "\ndirect tensor product:\n" + _graded_text(direct)
            text += f"\nagree: {direct == pred}"
        return out, text
    if targets[0] == "alexander":
        if len(targets) != 2 or args.sphere_dim is None:
            raise ValidationError("usage: homology alexander --sphere-dim n <graded.json>")
        G = alexander_duality(args.sphere_dim, formats.graded_from_ref(targets[1]))
        out = G.to_json()
        out["reduced"] = True
        return out, f"reduced homology of S^{args.sphere_dim} minus K:\n" + _graded_text(G)
    if targets[0] == "tensor":
        if len(targets) != 3:
            raise ValidationError("usage: homology tensor <a> <b>")
        C = tensor(formats.complex_from_ref(targets[1]), formats.complex_from_ref(targets[2]))
        return C.to_json(), json.dumps(C.to_json())
    if len(targets) != 1:
        raise ValidationError("usage: homology <complex.json | catalog:id>")
    G = homology(formats.complex_from_ref(targets[0]))
    return G.to_json(), _graded_text(G)


# --------------------------------------------------------------------------
# torus

def _torus_class(m: formats.ScenarioManifest):
    if m.kind == "transverse":
        grp = complement_h2_transverse(m.H3_is_zero, m.torus_nullhomologous)
        T = stabilize_torus(build_dpv_torus(m.core, m.profile), m.stabilizations)
        c = self_linking_class(T)
        return c, grp, formats.knot_to_json(T.profile)
    L = build_legendrian_torus(m.profile, m.N, m.nullhomologous)
    L = stabilize_legendrian_torus(L, m.stabilizations, m.sign)
    c = tb_class(L)
    return c, complement_h2_product(m.N), formats.knot_to_json(L.profile)


def _class_json(c, grp, profile) -> dict:
    return {"basis": list(c.basis), "coords": list(c.coords),
            "divisibility": c.divisibility, "class": str(c),
            "complement_h2": grp.group.to_json(), "profile": profile}


def _write_outputs(m, payload, text):
    for key, content in (("json", formats.dump_json(payload)), ("text", text)):
        if key in m.output:
            Path(m.output[key]).write_text(content + "\n")


def _cmd_class(args, kind):
    m = formats.load_manifest(args.manifest)
    if m.kind != kind:
        raise ValidationError(f"manifest kind is {m.kind!r}, this command needs {kind!r}")
    c, grp, profile = _torus_class(m)
    out = {"kind": m.kind, **_class_json(c, grp, profile)}
    name = "sl(T)" if kind == "transverse" else "tb(L)"
    text = (f"{name} = {c}\n  in H_2 of the complement = {grp.group}\n"
            f"  divisibility: {c.divisibility}")
    _write_outputs(m, out, text)
    return out, text


def cmd_sl_class(args):
    return _cmd_class(args, "transverse")


def cmd_tb_class(args):
    return _cmd_class(args, "legendrian")


def cmd_distinguish(args):
    m1, m2 = formats.load_manifest(args.m1), formats.load_manifest(args.m2)
    if m1.kind != m2.kind:
        raise ValidationError("cannot compare a transverse and a legendrian torus")
    c1, g1, p1 = _torus_class(m1)
    c2, g2, p2 = _torus_class(m2)
    v = distinguish(c1, c2)
    out = {"outcome": v.outcome, "certificate": list(v.certificate),
           "classes": [_class_json(c1, g1, p1), _class_json(c2, g2, p2)]}
    rows = [("1", str(c1), c1.divisibility), ("2", str(c2), c2.divisibility)]
    text = format_table(("torus", "class", "divisibility"), rows) + f"\nverdict: {v.outcome}"
    return out, text


# --------------------------------------------------------------------------
# verify, render

def cmd_verify(args):
    fn = verify.RUNNERS[args.name]
    kwargs = {}
    if args.name in ("thm11", "thm12"):
        kwargs["count"] = 10 if args.count is None else args.count
    if args.name in ("lemma51", "laws"):
        kwargs["seed"] = args.seed
        if args.samples is not None:
            kwargs["samples"] = args.samples
    rep = fn(**kwargs)
    lines = []
    if rep.rows:
        lines.append(format_table(rep.columns, rep.rows))
    for label, ok, detail in rep.checks:
        lines.append(f"[{'PASS' if ok else 'FAIL'}] {label}" + (f"  ({detail})" if detail and not ok else ""))
    text = "\n".join(lines)
    if not rep.passed:
        raise CommandFailed(rep.to_json(), text)
    return rep.to_json(), text


def cmd_render_front(args):
    k = formats.knot_from_json(formats.load_json(args.file))
    if isinstance(k, BraidWord):
        raise ValidationError("render front needs a front file")
    svg = front_svg(k, title=Path(args.file).stem)
    Path(args.svg).write_text(svg)
    return {"svg": args.svg, "events": len(k.events)}, f"wrote {args.svg}"


def cmd_catalog(args):
    rows = [(i, str(catalog.get(i).homology), catalog.get(i).note) for i in catalog.ids()]
    out = {i: {"homology": catalog.get(i).homology.to_json(), "note": n}
           for i, _, n in rows}
    return out, format_table(("id", "homology", "note"), rows)


# --------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="engeltori", description=__doc__.splitlines()[0])
    top.add_argument("--json", action="store_true", help="emit JSON")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="emit JSON")
    sub = top.add_subparsers(dest="command", required=True)

    knot = sub.add_parser("knot", help="braid and front invariants").add_subparsers(
        dest="sub", required=True)
    p = knot.add_parser("invariants", parents=[common])
    p.add_argument("file")
    p.set_defaults(func=cmd_knot_invariants)
    p = knot.add_parser("stabilize", parents=[common])
    p.add_argument("file")
    p.add_argument("--sign", choices=["+", "-"],
                   help="braids: Markov sign (default -); fronts: rot change (default +)")
    p.add_argument("--count", type=int, default=1)
    p.set_defaults(func=cmd_knot_stabilize)

    p = sub.add_parser("homology", parents=[common],
                       help="homology <complex>, kunneth <a> <b>, alexander --sphere-dim n <g>")
    p.add_argument("targets", nargs="+")
    p.add_argument("--sphere-dim", type=int)
    p.set_defaults(func=cmd_homology)

    torus = sub.add_parser("torus", help="torus classes").add_subparsers(
        dest="sub", required=True)
    p = torus.add_parser("sl-class", parents=[common])
    p.add_argument("manifest")
    p.set_defaults(func=cmd_sl_class)
    p = torus.add_parser("tb-class", parents=[common])
    p.add_argument("manifest")
    p.set_defaults(func=cmd_tb_class)
    p = torus.add_parser("distinguish", parents=[common])
    p.add_argument("m1")
    p.add_argument("m2")
    p.set_defaults(func=cmd_distinguish)

    p = sub.add_parser("verify", parents=[common], help="run a verification scenario")
    p.add_argument("name", choices=sorted(verify.RUNNERS))
    p.add_argument("--count", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int)
    p.set_defaults(func=cmd_verify)

    render = sub.add_parser("render", help="SVG output").add_subparsers(
        dest="sub", required=True)
    p = render.add_parser("front", parents=[common])
    p.add_argument("file")
    p.add_argument("--svg", required=True)
    p.set_defaults(func=cmd_render_front)

    p = sub.add_parser("catalog", parents=[common], help="list catalog entries")
    p.set_defaults(func=cmd_catalog)
    return top


def run(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    args, extra = parser.parse_known_args(argv)
    # homology targets may continue after an option: alexander --sphere-dim 4 g.json
    if extra and args.command == "homology" and not any(x.startswith("-") for x in extra):
        args.targets += extra
    elif extra:
        parser.error(f"unrecognized arguments: {' '.join(extra)}")

    def emit(payload, text):
        out.write((formats.dump_json(payload) if args.json else text) + "\n")

    try:
        payload, text = args.func(args)
    except CommandFailed as exc:
        emit(exc.payload, exc.text)
        return EXIT_INVALID
    except HypothesisViolated as exc:
        err.write(f"error: hypothesis violated ({type(exc).__name__}): {exc}\n")
        return EXIT_HYPOTHESIS
    except (EngelToriError, ValueError) as exc:
        err.write(f"error: {type(exc).__name__}: {exc}\n")
        return EXIT_INVALID
    emit(payload, text)
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
