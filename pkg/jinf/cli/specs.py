"""
JINF Permutation and Automorphism Specs

This module parses the structured (JSON) text format for permutations and
automorphisms and validates it into domain objects.

Permutation spec:

    {"modulus": 2, "threshold": 0,
     "classes": [{"from": 0, "to": 1, "offset": 0}, {"from": 1, "to": 0, "offset": 0}],
     "patch": {"1": 2}}

`classes` defaults to the identity on every residue, `threshold` to the
largest patched argument. Automorphism spec:

    {"kind": "regular", "flip": false, "perm": {...}}
    {"kind": "piecewise", "pieces": [{"rep": "evens", "perm": {...}}]}

JSON syntax errors become ParseError with the JSON line and column; schema
errors become ParseError at 1:1 naming the offending field. Validation
errors of the permutation algebra are raised unchanged.
"""

from __future__ import annotations

import json
from typing import Dict, List, Literal, Optional

from pydantic import BaseModel, Field, ValidationError

from jinf.auto.automorphisms import Automorphism, Piece, PiecewiseAutomorphism, RegularAutomorphism
from jinf.cli.expressions import parse_set
from jinf.core import perm as permutations
from jinf.core.perm import ComputablePermutation, RawPermutation
from jinf.graph.johnson import as_vertex
from jinf.utils.exceptions import MalformedRepresentation, ParseError

PERM_FORMAT = """\
{"modulus": p, "threshold": N,
 "classes": [{"from": r, "to": rho(r), "offset": k_r}, ...],   one entry per residue 0..p-1
 "patch": {"n": image, ...}}                                     arguments n <= N"""

AUTO_FORMAT = """\
{"kind": "regular", "flip": false, "perm": <permutation>}
{"kind": "piecewise", "pieces": [{"rep": <set expression>, "perm": <permutation>}, ...]}"""


class ClassSpec(BaseModel):
    """Action on one residue class."""

    source: int = Field(alias="from", ge=0)
    to: int = Field(ge=0)
    offset: int = 0

    class Config:
        populate_by_name = True


class PermSpec(BaseModel):
    """Structured permutation description."""

    modulus: int = Field(default=1, ge=1)
    threshold: Optional[int] = Field(default=None, ge=0)
    classes: Optional[List[ClassSpec]] = None
    patch: Dict[int, int] = Field(default_factory=dict)

    class Config:
        extra = "forbid"

    def to_raw(self) -> RawPermutation:
        """
        Raw description for perm.validate.

        Raises:
            MalformedRepresentation: If a residue has no class entry or two
        """
        p = self.modulus
        if self.classes is None:
            classes = [(r, 0) for r in range(p)]
        else:
            by_residue = {}
            for entry in self.classes:
                if entry.source >= p or entry.source in by_residue:
                    raise MalformedRepresentation(
                        "class entries must cover each residue once",
                        {"modulus": p, "from": entry.source},
                    )
                by_residue[entry.source] = (entry.to, entry.offset)
            if len(by_residue) != p:
                raise MalformedRepresentation(
                    "one class map per residue is required",
                    {"modulus": p, "classes": len(by_residue)},
                )
            classes = [by_residue[r] for r in range(p)]
        threshold = self.threshold if self.threshold is not None else max(self.patch, default=0)
        return RawPermutation(threshold, p, classes, dict(self.patch))


class PieceSpec(BaseModel):
    rep: str
    perm: PermSpec


class AutoSpec(BaseModel):
    """Structured automorphism description."""

    kind: Literal["regular", "piecewise"] = "regular"
    flip: bool = False
    perm: Optional[PermSpec] = None
    pieces: List[PieceSpec] = Field(default_factory=list)

    class Config:
        extra = "forbid"


def _load(text: str, model, what: str):
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.lineno, exc.colno, f"{what} in JSON ({exc.msg})") from exc
    try:
        return model.model_validate(payload)
    except ValidationError as exc:
        first = exc.errors()[0]
        location = ".".join(str(part) for part in first["loc"]) or "top level"
        raise ParseError(1, 1, f"{what}: {location} {first['msg']}") from exc


def perm_from_spec(spec: PermSpec) -> ComputablePermutation:
    return permutations.validate(spec.to_raw())


def parse_perm_spec(text: str) -> ComputablePermutation:
    """
    Parse and validate a permutation spec.

    Raises:
        ParseError: On malformed JSON or schema
        MalformedRepresentation, ResidueMapNotBijective, NotInjective,
        NotSurjective: From validation, unchanged
    """
    return perm_from_spec(_load(text, PermSpec, "permutation spec"))


def parse_auto_spec(text: str) -> Automorphism:
    """
    Parse and validate an automorphism spec.

    Raises:
        ParseError: On malformed JSON, schema, or a piece representative
            that is not a set expression
        NotBalanced: If a representative is not a vertex
        NotSameComponent, PreconditionViolated: From piecewise validation
    """
    spec = _load(text, AutoSpec, "automorphism spec")
    if spec.kind == "regular":
        if spec.perm is None:
            raise ParseError(1, 1, "automorphism spec: perm is required for kind regular")
        return RegularAutomorphism(perm_from_spec(spec.perm), spec.flip)
    if spec.flip:
        raise ParseError(1, 1, "automorphism spec: flip is only allowed for kind regular")
    pieces = tuple(
        Piece(as_vertex(parse_set(piece.rep)), perm_from_spec(piece.perm))
        for piece in spec.pieces
    )
    return PiecewiseAutomorphism(pieces)


def render_perm_spec(s: ComputablePermutation) -> str:
    return json.dumps(s.to_spec(), sort_keys=True)


def render_auto_spec(f: Automorphism) -> str:
    return json.dumps(f.to_spec(), sort_keys=True)
