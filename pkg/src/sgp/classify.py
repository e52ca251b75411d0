"""Predicates, the two construction families and the classifiers for
almost symmetric / MED semigroups with maximal reduced type."""

from __future__ import annotations

import re
from dataclasses import dataclass

from .core import NumericalSemigroup, naturals
from .errors import BadParameters, Divides


@dataclass(frozen=True)
class Classification:
    """Tagged verdict: ``HalfLine``, ``Symmetric``, ``DeltaMinus(m,t)``,
    ``DeltaFm(F,m)`` or ``No``."""

    kind: str
    args: tuple[int, ...] = ()

    KINDS = {"HalfLine": 0, "Symmetric": 0, "DeltaMinus": 2, "DeltaFm": 2, "No": 0}

    def __post_init__(self) -> None:
        if self.kind not in self.KINDS or len(self.args) != self.KINDS[self.kind]:
            raise ValueError(f"malformed classification {self.kind}{self.args}")

    def __bool__(self) -> bool:
        return self.kind != "No"

    def __str__(self) -> str:
        if not self.args:
            return self.kind
        return f"{self.kind}({','.join(map(str, self.args))})"

    @classmethod
    def parse(cls, text: str) -> "Classification":
        match = re.fullmatch(r"(\w+)(?:\((-?\d+),(-?\d+)\))?", text.strip())
        if not match:
            raise ValueError(f"cannot parse classification {text!r}")
        kind, *rest = match.groups()
        return cls(kind, tuple(int(x) for x in rest if x is not None))


HALF_LINE = Classification("HalfLine")
SYMMETRIC = Classification("Symmetric")
NO = Classification("No")


def delta_minus(m: int, t: int) -> Classification:
    return Classification("DeltaMinus", (m, t))


def delta_fm(F: int, m: int) -> Classification:
    return Classification("DeltaFm", (F, m))


# -- predicates ---------------------------------------------------------------

def is_symmetric(S: NumericalSemigroup) -> bool:
    return S.type() == 1


def is_almost_symmetric(S: NumericalSemigroup) -> bool:
    return 2 * S.genus == S.frobenius + S.type()


def is_med(S: NumericalSemigroup) -> bool:
    return S.embedding_dimension() == S.multiplicity


def has_maximal_reduced_type(S: NumericalSemigroup) -> bool:
    return S.reduced_type() == S.type()


def is_half_line(S: NumericalSemigroup) -> bool:
    return S.multiplicity >= S.frobenius


# -- constructions ------------------------------------------------------------

def construct_half_line(m: int) -> NumericalSemigroup:
    """``{0} U {x >= m}``."""
    if m < 1:
        raise BadParameters(f"half-line needs m >= 1, got {m}")
    if m == 1:
        return naturals()
    bits = (1 << (m + 1)) - 1
    bits &= ~((1 << m) - 2)  # clear 1..m-1
    return NumericalSemigroup(bits, m - 1)


def construct_delta_minus(m: int, t: int) -> NumericalSemigroup:
    """The half-line ``Delta(m)`` with ``2m - t`` removed.

    For ``2 <= t < m`` this is almost symmetric of type ``t`` with maximal
    reduced type; ``t = 1`` gives a symmetric semigroup with F = 2m - 1.
    """
    if not 1 <= t < m:
        raise BadParameters(f"delta-minus needs 1 <= t < m, got m={m}, t={t}")
    F = 2 * m - t
    bits = (1 << (F + 2)) - 1
    bits &= ~((1 << m) - 2)
    bits &= ~(1 << F)
    return NumericalSemigroup(bits, F)


def construct_delta_fm(F: int, m: int) -> NumericalSemigroup:
    """``<m> U {x >= F + 1}``, a MED semigroup with Frobenius number F."""
    if m < 2 or m >= F:
        raise BadParameters(f"delta-fm needs 2 <= m < F, got F={F}, m={m}")
    if F % m == 0:
        raise Divides(F, m)
    bits = 1 << (F + 1)
    for x in range(0, F + 1, m):
        bits |= 1 << x
    return NumericalSemigroup(bits, F)


def exists_with_type_and_edim(t: int, e: int) -> NumericalSemigroup:
    """Almost symmetric semigroup with maximal reduced type, type ``t`` and
    embedding dimension ``e``."""
    if not 2 <= t <= e - 1:
        raise BadParameters(f"need 2 <= t <= e - 1, got t={t}, e={e}")
    return construct_delta_minus(e + 1, t)


# -- classifiers --------------------------------------------------------------

def classify_almost_symmetric_max_reduced(S: NumericalSemigroup) -> Classification:
    """Which family (if any) puts ``S`` among the almost symmetric semigroups
    with maximal reduced type. Overlaps resolve as HalfLine > Symmetric >
    DeltaMinus."""
    m, F = S.multiplicity, S.frobenius
    if m >= F:
        return HALF_LINE
    if is_symmetric(S):
        return SYMMETRIC
    t = 2 * m - F
    if 2 <= t < m and S == construct_delta_minus(m, t):
        return delta_minus(m, t)
    return NO


def classify_med_max_reduced(S: NumericalSemigroup) -> Classification:
    m, F = S.multiplicity, S.frobenius
    if m >= F:
        return HALF_LINE
    if F % m and S == construct_delta_fm(F, m):
        return delta_fm(F, m)
    return NO
