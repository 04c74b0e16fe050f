"""Registry of parametric convergent sequences of marked groups.

Each family pairs a finitely presented limit with a member template
parametrised by an index i, plus exact word-problem oracles for both
sides.  Members and limit share the marking, and every member in the
valid range is a quotient of the limit (more relations, same marking).

The built-in families cover three distinct regimes:

* cyclicZ: Z/iZ converging to Z; the limit is free, so the inequality
  harness refuses it (L undefined) and it serves distance and Dehn
  demonstrations only.
* zxz: Z x Z/iZ converging to Z x Z, an abelian limit with nonzero
  Dehn values.
* dihedral: finite dihedral groups converging to the infinite dihedral
  group, non-abelian members with a rewriting-system limit oracle.

User-defined families load from a JSON manifest; see load_manifest.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from string import Template

from .oracles import Oracle, build_oracle
from .presentations import Presentation, parse_presentation

__all__ = ["FamilySpec", "builtin_families", "get_family", "family_member", "load_manifest"]


@dataclass(frozen=True)
class FamilySpec:
    name: str
    valid_i: int
    notes: str
    limit_pres: Presentation
    limit_oracle_spec: str
    member_pres_template: str  # presentation text with $i
    member_oracle_template: str

    def limit(self) -> tuple[Presentation, Oracle]:
        return self.limit_pres, build_oracle(self.limit_oracle_spec, self.limit_pres)

    def member(self, i: int) -> tuple[Presentation, Oracle]:
        if i < self.valid_i:
            raise ValueError(f"family {self.name!r} requires i >= {self.valid_i}, got {i}")
        text = Template(self.member_pres_template).substitute(i=i)
        pres = parse_presentation(text, name=f"{self.name}[{i}]")
        spec = Template(self.member_oracle_template).substitute(i=i)
        return pres, build_oracle(spec, pres)

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "valid_i": self.valid_i,
            "notes": self.notes,
            "limit": {
                "presentation": self.limit_pres.to_text(),
                "oracle": self.limit_oracle_spec,
            },
            "member_template": {
                "presentation": self.member_pres_template,
                "oracle": self.member_oracle_template,
            },
        }


def builtin_families() -> tuple[FamilySpec, ...]:
    cyclic = FamilySpec(
        name="cyclicZ",
        valid_i=2,
        notes=(
            "finite cyclic groups converging to Z; the limit is free, so the "
            "inequality harness refuses it (L undefined)"
        ),
        limit_pres=parse_presentation("gens: x\nrels:", name="cyclicZ[limit]"),
        limit_oracle_spec="abelian:0",
        member_pres_template="gens: x\nrels: x^$i",
        member_oracle_template="abelian:$i",
    )
    zxz = FamilySpec(
        name="zxz",
        valid_i=2,
        notes="Z x Z/iZ converging to Z x Z; exponent-sum oracles on both sides",
        limit_pres=parse_presentation("gens: x y\nrels: [x,y]", name="zxz[limit]"),
        limit_oracle_spec="abelian:0,0",
        member_pres_template="gens: x y\nrels: [x,y]; y^$i",
        member_oracle_template="abelian:0,$i",
    )
    dihedral = FamilySpec(
        name="dihedral",
        valid_i=2,
        notes=(
            "finite dihedral groups of order 2i converging to the infinite "
            "dihedral group; coset tables for members, involution rewriting "
            "for the limit"
        ),
        limit_pres=parse_presentation("gens: a b\nrels: a^2; b^2", name="dihedral[limit]"),
        limit_oracle_spec="rewriting:involutions",
        member_pres_template="gens: a b\nrels: a^2; b^2; (a b)^$i",
        member_oracle_template="coset",
    )
    return (cyclic, zxz, dihedral)


def get_family(name: str) -> FamilySpec:
    """Look up a built-in family, or load a manifest if given a path."""
    for spec in builtin_families():
        if spec.name == name:
            return spec
    path = Path(name)
    if path.suffix == ".json" and path.exists():
        return load_manifest(path)
    known = ", ".join(spec.name for spec in builtin_families())
    raise ValueError(f"unknown family {name!r} (built-ins: {known})")


def family_member(spec: FamilySpec, i: int) -> tuple[Presentation, Oracle]:
    return spec.member(i)


def load_manifest(path: str | Path) -> FamilySpec:
    """Load a user-defined family.

    Manifest shape (JSON):

        {
          "name": "...",
          "valid_i": 2,
          "notes": "optional",
          "limit": {"presentation": "file.pres", "oracle": "abelian:0,0"},
          "member_template": {"presentation": "gens: ...\nrels: ... $i",
                              "oracle": "abelian:0,$i"}
        }

    The limit presentation is a file path relative to the manifest; the
    member presentation is inline text with $i substituted.
    """
    path = Path(path)
    data = json.loads(path.read_text(encoding="utf-8"))
    limit_file = path.parent / data["limit"]["presentation"]
    limit_pres = parse_presentation(
        limit_file.read_text(encoding="utf-8"), name=f"{data['name']}[limit]"
    )
    return FamilySpec(
        name=data["name"],
        valid_i=int(data.get("valid_i", 2)),
        notes=data.get("notes", ""),
        limit_pres=limit_pres,
        limit_oracle_spec=data["limit"]["oracle"],
        member_pres_template=data["member_template"]["presentation"],
        member_oracle_template=data["member_template"]["oracle"],
    )
