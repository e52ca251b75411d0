"""Line-delimited JSON records describing a semigroup and all its invariants.

Schema ``v1``. Keys always appear in the order of ``SemigroupRecord`` fields;
sets are sorted arrays; the Frobenius number of N is written as ``-1``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, fields

from . import classify as cl
from .core import NumericalSemigroup

SCHEMA_VERSION = "v1"
FLAG_KEYS = ("symmetric", "almost_symmetric", "med", "max_reduced_type", "half_line")


@dataclass(frozen=True)
class SemigroupRecord:
    v: str
    gens: tuple[int, ...]
    gaps: tuple[int, ...]
    frobenius: int
    multiplicity: int
    genus: int
    type: int
    reduced_type: int
    embedding_dimension: int
    pf: tuple[int, ...]
    rpf: tuple[int, ...]
    apery_m: tuple[int, ...]
    flags: dict[str, bool]
    classification_as: str
    classification_med: str

    @classmethod
    def from_semigroup(cls, S: NumericalSemigroup) -> "SemigroupRecord":
        return cls(
            v=SCHEMA_VERSION,
            gens=tuple(S.minimal_generators()),
            gaps=tuple(S.gaps()),
            frobenius=S.frobenius,
            multiplicity=S.multiplicity,
            genus=S.genus,
            type=S.type(),
            reduced_type=S.reduced_type(),
            embedding_dimension=S.embedding_dimension(),
            pf=tuple(S.pseudo_frobenius()),
            rpf=tuple(S.reduced_pf()),
            apery_m=tuple(S.apery_set(S.multiplicity).as_intset()),
            flags={
                "symmetric": cl.is_symmetric(S),
                "almost_symmetric": cl.is_almost_symmetric(S),
                "med": cl.is_med(S),
                "max_reduced_type": cl.has_maximal_reduced_type(S),
                "half_line": cl.is_half_line(S),
            },
            classification_as=str(cl.classify_almost_symmetric_max_reduced(S)),
            classification_med=str(cl.classify_med_max_reduced(S)),
        )

    def to_dict(self) -> dict:
        out = {}
        for f in fields(self):
            value = getattr(self, f.name)
            if isinstance(value, tuple):
                value = list(value)
            elif isinstance(value, dict):
                value = {k: value[k] for k in FLAG_KEYS}
            out[f.name] = value
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, data: dict) -> "SemigroupRecord":
        if data.get("v") != SCHEMA_VERSION:
            raise ValueError(f"unsupported record version {data.get('v')!r}")
        names = [f.name for f in fields(cls)]
        if set(data) != set(names):
            raise ValueError(f"record keys {sorted(data)} do not match schema {names}")
        if set(data["flags"]) != set(FLAG_KEYS):
            raise ValueError(f"flag keys {sorted(data['flags'])} do not match {list(FLAG_KEYS)}")
        kwargs = {n: tuple(data[n]) if isinstance(data[n], list) else data[n] for n in names}
        kwargs["flags"] = {k: bool(data["flags"][k]) for k in FLAG_KEYS}
        rec = cls(**kwargs)
        rec.validate()
        return rec

    @classmethod
    def from_json(cls, line: str) -> "SemigroupRecord":
        return cls.from_dict(json.loads(line))

    def validate(self) -> None:
        """Internal consistency of the stored counts and sets."""
        checks = [
            (len(self.pf) == self.type, "|pf| != type"),
            (len(self.rpf) == self.reduced_type, "|rpf| != reduced_type"),
            (len(self.gens) == self.embedding_dimension, "|gens| != embedding_dimension"),
            (len(self.gaps) == self.genus, "|gaps| != genus"),
            (len(self.apery_m) == self.multiplicity, "|apery_m| != multiplicity"),
            ((max(self.gaps) if self.gaps else -1) == self.frobenius, "max gap != frobenius"),
            (min(self.gens) == self.multiplicity, "min gen != multiplicity"),
        ]
        for ok, msg in checks:
            if not ok:
                raise ValueError(f"inconsistent record: {msg}")
        cl.Classification.parse(self.classification_as)
        cl.Classification.parse(self.classification_med)

    def semigroup(self) -> NumericalSemigroup:
        return NumericalSemigroup.from_gaps(self.gaps)
