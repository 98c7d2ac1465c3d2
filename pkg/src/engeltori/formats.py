"""JSON file formats.

Braid:    {"strands": n, "word": [i, -i, ...]}
Front:    {"events": [{"kind": "L" | "R" | "X", "pos": p}, ...]}
Complex:  {"dims": [...], "boundaries": [[[...], ...], ...]}
Graded:   {"groups": [{"free_rank": r, "torsion": [d1, ...]}, ...]}
Manifest: {"kind": "transverse" | "legendrian", "profile": <braid or front>,
           "ambient": {"N": <graded or "catalog:<id>">, ...},
           "stabilizations": m}

Anywhere a complex or graded group is expected, the string
``"catalog:<id>"`` names a catalog entry instead.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Union

import jsonschema

from . import catalog
from .errors import ValidationError
from .homology import ChainComplex, GradedGroup, homology
from .knots import BraidWord, Event, FrontWord

CATALOG_PREFIX = "catalog:"


def load_json(path: Union[str, Path]):
    try:
        return json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise ValidationError(f"{path}: not valid JSON ({exc})") from None
    except OSError as exc:
        raise ValidationError(f"cannot read {path}: {exc.strerror}") from None


def dump_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False)


# --------------------------------------------------------------------------
# knots

def braid_to_json(b: BraidWord) -> dict:
    return {"strands": b.strands, "word": list(b.letters)}


def front_to_json(f: FrontWord) -> dict:
    return {"events": [{"kind": e.kind, "pos": e.pos} for e in f.events]}


def knot_to_json(k: Union[BraidWord, FrontWord]) -> dict:
    return braid_to_json(k) if isinstance(k, BraidWord) else front_to_json(k)


def knot_from_json(obj) -> Union[BraidWord, FrontWord]:
    if not isinstance(obj, dict):
        raise ValidationError("expected a braid or front object")
    if "strands" in obj:
        word = obj.get("word", [])
        if not isinstance(obj["strands"], int) or not all(isinstance(x, int) for x in word):
            raise ValidationError("braid needs an integer 'strands' and integer 'word'")
        return BraidWord(obj["strands"], tuple(word))
    if "events" in obj:
        evs = []
        for k, e in enumerate(obj["events"]):
            try:
                evs.append(Event(str(e["kind"]), int(e["pos"])))
            except (KeyError, TypeError, ValueError):
                raise ValidationError(f"event {k} must be {{'kind': ..., 'pos': ...}}") from None
        return FrontWord(tuple(evs))
    raise ValidationError("object is neither a braid ('strands') nor a front ('events')")


# --------------------------------------------------------------------------
# complexes and graded groups

def complex_from_ref(ref) -> ChainComplex:
    if isinstance(ref, str) and ref.startswith(CATALOG_PREFIX):
        cx = catalog.get(ref[len(CATALOG_PREFIX):]).complex
        if not isinstance(cx, ChainComplex):
            raise ValidationError(f"{ref} is not a chain complex")
        return cx
    obj = load_json(ref) if isinstance(ref, (str, Path)) else ref
    if not isinstance(obj, dict) or "dims" not in obj:
        raise ValidationError("chain complex needs a 'dims' list")
    try:
        return ChainComplex.from_json(obj)
    except (TypeError, ValueError) as exc:
        raise ValidationError(f"malformed chain complex: {exc}") from None


def graded_from_ref(ref) -> GradedGroup:
    """A graded group, or the homology of a complex, from a file, object or id."""
    if isinstance(ref, str) and ref.startswith(CATALOG_PREFIX):
        return catalog.get(ref[len(CATALOG_PREFIX):]).homology
    obj = load_json(ref) if isinstance(ref, (str, Path)) else ref
    if isinstance(obj, list) or (isinstance(obj, dict) and "groups" in obj):
        try:
            return GradedGroup.from_json(obj)
        except (TypeError, ValueError, KeyError) as exc:
            raise ValidationError(f"malformed graded group: {exc}") from None
    return homology(complex_from_ref(obj))


# --------------------------------------------------------------------------
# scenario manifests

_BRAID = {
    "type": "object",
    "required": ["strands"],
    "properties": {"strands": {"type": "integer", "minimum": 1},
                   "word": {"type": "array", "items": {"type": "integer"}}},
}
_FRONT = {
    "type": "object",
    "required": ["events"],
    "properties": {"events": {"type": "array", "items": {
        "type": "object", "required": ["kind", "pos"],
        "properties": {"kind": {"enum": ["L", "R", "X"]},
                       "pos": {"type": "integer", "minimum": 0}}}}},
}
MANIFEST_SCHEMA = {
    "type": "object",
    "required": ["kind", "profile"],
    "properties": {
        "kind": {"enum": ["transverse", "legendrian"]},
        "profile": {"oneOf": [_BRAID, _FRONT]},
        "core": {"type": "string"},
        "stabilizations": {"type": "integer", "minimum": 0},
        "sign": {"enum": ["+", "-"]},
        "ambient": {
            "type": "object",
            "properties": {
                "N": {"oneOf": [{"type": "string"}, {"type": "object"}, {"type": "array"}]},
                "nullhomologous": {"type": "boolean"},
                "H3_is_zero": {"type": "boolean"},
                "torus_nullhomologous": {"type": "boolean"},
            },
        },
        "output": {"type": "object", "properties": {
            "json": {"type": "string"}, "text": {"type": "string"}}},
    },
}


@dataclass
class ScenarioManifest:
    kind: str
    profile: Union[BraidWord, FrontWord]
    stabilizations: int = 0
    core: str = "C"
    sign: str = "+"
    N: GradedGroup = field(default_factory=lambda: GradedGroup.of(1, 0, 0, 1))
    nullhomologous: bool = True
    H3_is_zero: bool = True
    torus_nullhomologous: bool = True
    output: dict = field(default_factory=dict)


def manifest_from_json(obj) -> ScenarioManifest:
    try:
        jsonschema.validate(obj, MANIFEST_SCHEMA)
    except jsonschema.ValidationError as exc:
        where = "/".join(str(p) for p in exc.absolute_path) or "<root>"
        raise ValidationError(f"manifest invalid at {where}: {exc.message}") from None
    profile = knot_from_json(obj["profile"])
    kind = obj["kind"]
    if kind == "transverse" and not isinstance(profile, BraidWord):
        raise ValidationError("a transverse manifest needs a braid profile")
    if kind == "legendrian" and not isinstance(profile, FrontWord):
        raise ValidationError("a legendrian manifest needs a front profile")
    amb = obj.get("ambient", {})
    m = ScenarioManifest(
        kind=kind,
        profile=profile,
        stabilizations=obj.get("stabilizations", 0),
        core=obj.get("core", "C"),
        sign=obj.get("sign", "+"),
        nullhomologous=amb.get("nullhomologous", True),
        H3_is_zero=amb.get("H3_is_zero", True),
        torus_nullhomologous=amb.get("torus_nullhomologous", True),
        output=obj.get("output", {}),
    )
    if "N" in amb:
        m.N = graded_from_ref(amb["N"])
    return m


def manifest_to_json(m: ScenarioManifest) -> dict:
    return {
        "kind": m.kind,
        "profile": knot_to_json(m.profile),
        "core": m.core,
        "stabilizations": m.stabilizations,
        "sign": m.sign,
        "ambient": {"N": m.N.to_json(), "nullhomologous": m.nullhomologous,
                    "H3_is_zero": m.H3_is_zero,
                    "torus_nullhomologous": m.torus_nullhomologous},
    }


def load_manifest(path) -> ScenarioManifest:
    return manifest_from_json(load_json(path))
