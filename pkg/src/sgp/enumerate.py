"""Enumeration of numerical semigroups by genus and exhaustive checking of
the classification results over that universe.

The main enumerator walks the semigroup tree: the root is N and the children
of S are the semigroups S \\ {n} for each minimal generator n > F(S). Every
semigroup of genus g appears exactly once at depth g.
"""

from __future__ import annotations

import itertools
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Optional, Sequence

from . import classify as cl
from .core import IntSet, NumericalSemigroup, naturals
from .errors import CapExceeded, UnknownPredicate, UnknownTheorem

DEFAULT_GENUS_CAP = 30
BRUTEFORCE_CAP = 10


def genus_cap() -> int:
    return int(os.environ.get("SGP_GENUS_CAP", DEFAULT_GENUS_CAP))


# -- predicates ---------------------------------------------------------------

PREDICATES: dict[str, Callable[[NumericalSemigroup], bool]] = {
    "none": lambda S: True,
    "symmetric": cl.is_symmetric,
    "almost_symmetric": cl.is_almost_symmetric,
    "med": cl.is_med,
    "max_reduced_type": cl.has_maximal_reduced_type,
    "half_line": cl.is_half_line,
}


def resolve_predicate(name: Optional[str]) -> Callable[[NumericalSemigroup], bool]:
    """Look up a filter; ``a+b`` means the conjunction of ``a`` and ``b``."""
    if name is None:
        return PREDICATES["none"]
    parts = name.split("+")
    for p in parts:
        if p not in PREDICATES:
            raise UnknownPredicate(f"unknown predicate {p!r}; choose from {sorted(PREDICATES)}")
    if len(parts) == 1:
        return PREDICATES[parts[0]]
    preds = [PREDICATES[p] for p in parts]
    return lambda S: all(p(S) for p in preds)


@dataclass(frozen=True)
class EnumerationQuery:
    max_genus: int
    filter: Optional[str] = None

    def __post_init__(self) -> None:
        if self.max_genus < 0:
            raise CapExceeded(f"max_genus must be >= 0, got {self.max_genus}")
        cap = genus_cap()
        if self.max_genus > cap:
            raise CapExceeded(f"max_genus {self.max_genus} exceeds cap {cap} (set SGP_GENUS_CAP)")
        resolve_predicate(self.filter)


# -- the semigroup tree -------------------------------------------------------

def children(S: NumericalSemigroup) -> list[NumericalSemigroup]:
    """Children of ``S`` in the semigroup tree, sorted by removed generator."""
    F = S.frobenius
    out = []
    for n in S.minimal_generators():
        if n > F:
            bits = S.mask(n + 1) & ~(1 << n)
            out.append(NumericalSemigroup(bits, n))
    return out


def _walk(root: NumericalSemigroup, max_genus: int) -> Iterator[NumericalSemigroup]:
    stack = [root]
    while stack:
        S = stack.pop()
        yield S
        if S.genus < max_genus:
            stack.extend(reversed(children(S)))


def enumerate_by_genus(q: EnumerationQuery) -> Iterator[NumericalSemigroup]:
    """All semigroups of genus <= ``q.max_genus`` (passing ``q.filter``),
    depth-first, each exactly once."""
    keep = resolve_predicate(q.filter)
    for S in _walk(naturals(), q.max_genus):
        if keep(S):
            yield S


def enumerate_gapsets_bruteforce(g: int) -> Iterator[NumericalSemigroup]:
    """All semigroups of genus exactly ``g`` by scanning size-``g`` subsets of
    ``{1, ..., 2g-1}``. Slow; exists to cross-check the tree."""
    if g < 0 or g > BRUTEFORCE_CAP:
        raise CapExceeded(f"brute-force enumeration supports 0 <= g <= {BRUTEFORCE_CAP}")
    if g == 0:
        yield naturals()
        return
    for gaps in itertools.combinations(range(1, 2 * g), g):
        gapset = set(gaps)
        closed = True
        for x in gaps:
            if any(a not in gapset and x - a not in gapset for a in range(1, x // 2 + 1)):
                closed = False
                break
        if closed:
            yield NumericalSemigroup.from_gaps(gaps)


def count_by_predicate(max_genus: int, predicate: str = "none") -> list[tuple[int, int]]:
    q = EnumerationQuery(max_genus, predicate)
    counts = [0] * (max_genus + 1)
    for S in enumerate_by_genus(q):
        counts[S.genus] += 1
    return list(enumerate(counts))


# -- checks -------------------------------------------------------------------

Violation3 = tuple[str, object, object]


def _in_delta_minus_family(S: NumericalSemigroup) -> bool:
    # Delta(k) \ {2k - t} has exactly k gaps, so k is forced to be the genus.
    k = S.genus
    t = 2 * k - S.frobenius
    if not 2 <= t < k:
        return False
    return S.gaps() == IntSet([*range(1, k), 2 * k - t])


def _in_delta_fm_family(S: NumericalSemigroup) -> bool:
    F, m = S.frobenius, S.multiplicity
    if not 2 <= m < F or F % m == 0:
        return False
    return S.elements_up_to(F) == list(range(0, F + 1, m))


def _as_mrt(S: NumericalSemigroup) -> bool:
    return cl.is_almost_symmetric(S) and cl.has_maximal_reduced_type(S)


def _med_mrt(S: NumericalSemigroup) -> bool:
    return cl.is_med(S) and cl.has_maximal_reduced_type(S)


def check_pf_oracle(S):
    pf, bf = S.pseudo_frobenius(), S.pf_bruteforce()
    if pf != bf:
        return [("PF from Apery maximals == PF by definition", list(pf), list(bf))]
    return []


def check_genus_inequality(S):
    if 2 * S.genus < S.frobenius + S.type():
        return [("2g >= F + t", 2 * S.genus, S.frobenius + S.type())]
    return []


def check_chain(S):
    out = []
    s, t, m = S.reduced_type(), S.type(), S.multiplicity
    if not 1 <= s <= t <= m - 1:
        out.append(("1 <= s <= t <= m - 1", [s, t], m - 1))
    rpf, pf = set(S.reduced_pf()), set(S.pseudo_frobenius())
    if S.frobenius not in rpf or not rpf <= pf:
        out.append(("F in rPF and rPF subset of PF", sorted(rpf), sorted(pf)))
    return out


def check_rpf_shift(S):
    m, F = S.multiplicity, S.frobenius
    high = IntSet(w for w in S.apery_set(m) if w >= F + 1)
    shifted = IntSet(h + m for h in S.reduced_pf())
    out = []
    if high != shifted:
        out.append(("{w in Ap(S,m) : w > F} == rPF + m", list(high), list(shifted)))
    maxi = S.apery_maximals(m)
    if not set(high) <= set(maxi):
        out.append(("{w in Ap(S,m) : w > F} subset of maximals", list(high), list(maxi)))
    return out


def check_gap_window(S):
    m, F = S.multiplicity, S.frobenius
    if not m < F < 2 * m:
        return []
    upper = [g for g in S.gaps() if m < g <= F]
    rpf = S.reduced_pf()
    if not set(upper) <= set(rpf):
        return [("gaps in (m, F] subset of rPF", upper, list(rpf))]
    return []


def check_med_type(S):
    lhs, rhs = cl.is_med(S), S.type() == S.multiplicity - 1
    return [] if lhs == rhs else [("MED <=> t = m - 1", lhs, rhs)]


def check_main_theorem(S):
    lhs, rhs = _as_mrt(S), _in_delta_minus_family(S)
    return [] if lhs == rhs else [("AS and max reduced type <=> S = Delta(m) minus {2m-t}", lhs, rhs)]


def check_trichotomy(S):
    out = []
    lhs = _as_mrt(S)
    rhs = cl.is_half_line(S) or cl.is_symmetric(S) or _in_delta_minus_family(S)
    if lhs != rhs:
        out.append(("AS and max reduced type <=> half-line or symmetric or Delta-minus", lhs, rhs))
    verdict = cl.classify_almost_symmetric_max_reduced(S)
    if bool(verdict) != lhs:
        out.append(("classifier verdict matches predicates", str(verdict), lhs))
    elif verdict.kind == "DeltaMinus" and S != cl.construct_delta_minus(*verdict.args):
        out.append(("DeltaMinus verdict reconstructs S", str(verdict), list(S.gaps())))
    return out


def check_type_edim(S):
    if S.type() > S.embedding_dimension() - 1:
        return [("t <= e - 1", S.type(), S.embedding_dimension() - 1)]
    return []


def check_med_equiv(S):
    out = []
    a = _med_mrt(S)
    b = S.reduced_type() == S.multiplicity - 1
    c = S.frobenius + 1 <= S.second_generator()
    if not a == b == c:
        out.append(("MED and max reduced type <=> s = m - 1 <=> F + 1 <= n2", [a, b], c))
    if cl.is_half_line(S) and not a:
        out.append(("half-line => MED with max reduced type", True, a))
    return out


def check_med_theorem(S):
    out = []
    lhs = _med_mrt(S)
    if S.multiplicity < S.frobenius:
        rhs = _in_delta_fm_family(S)
        if lhs != rhs:
            out.append(("MED and max reduced type <=> S = Delta(F,m)", lhs, rhs))
    rhs = cl.is_half_line(S) or _in_delta_fm_family(S)
    if lhs != rhs:
        out.append(("MED and max reduced type <=> half-line or Delta(F,m)", lhs, rhs))
    verdict = cl.classify_med_max_reduced(S)
    if bool(verdict) != lhs:
        out.append(("classifier verdict matches predicates", str(verdict), lhs))
    elif verdict.kind == "DeltaFm" and S != cl.construct_delta_fm(*verdict.args):
        out.append(("DeltaFm verdict reconstructs S", str(verdict), list(S.gaps())))
    return out


def _not_naturals(S):
    return not S.is_naturals


def _everything(S):
    return True


@dataclass(frozen=True)
class Theorem:
    id: str
    statement: str
    applies: Callable[[NumericalSemigroup], bool]
    check: Callable[[NumericalSemigroup], list[Violation3]]


REGISTRY: dict[str, Theorem] = {
    t.id: t
    for t in [
        Theorem("pf-oracle", "PF(S) via maximals of Ap(S,m) equals PF(S) by definition",
                _everything, check_pf_oracle),
        Theorem("genus-inequality", "2g(S) >= F(S) + t(S)", _everything, check_genus_inequality),
        Theorem("chain", "S != N: 1 <= s(S) <= t(S) <= m(S) - 1", _not_naturals, check_chain),
        Theorem("rpf-shift", "{w in Ap(S,m) : w >= F+1} = {h + m : h in rPF(S)}",
                _everything, check_rpf_shift),
        Theorem("gap-window", "m < F < 2m: gaps in (m, F] lie in rPF(S)",
                lambda S: S.multiplicity < S.frobenius < 2 * S.multiplicity, check_gap_window),
        Theorem("med-type", "S != N: MED <=> t(S) = m(S) - 1", _not_naturals, check_med_type),
        Theorem("main-theorem",
                "S non-symmetric, m < F: almost symmetric with max reduced type "
                "<=> S = Delta(m) minus {2m - t}, 2 <= t < m",
                lambda S: S.multiplicity < S.frobenius and not cl.is_symmetric(S),
                check_main_theorem),
        Theorem("trichotomy",
                "almost symmetric with max reduced type <=> half-line, symmetric, or Delta-minus",
                _everything, check_trichotomy),
        Theorem("type-edim", "S != N almost symmetric with max reduced type: t(S) <= e(S) - 1",
                lambda S: not S.is_naturals and _as_mrt(S), check_type_edim),
        Theorem("med-equiv", "S != N: MED with max reduced type <=> s = m - 1 <=> F + 1 <= n2",
                _not_naturals, check_med_equiv),
        Theorem("med-theorem",
                "MED with max reduced type <=> half-line or Delta(F, m) (m < F: Delta(F, m))",
                _everything, check_med_theorem),
    ]
}


# -- reports ------------------------------------------------------------------

@dataclass(frozen=True)
class Violation:
    gaps: tuple[int, ...]
    claim: str
    lhs: object
    rhs: object

    def to_dict(self) -> dict:
        return {"gaps": list(self.gaps), "claim": self.claim, "lhs": self.lhs, "rhs": self.rhs}


@dataclass
class VerificationReport:
    theorem_id: str
    max_genus: int
    universe_size: int = 0
    violations: list[Violation] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_dict(self, timing: bool = False) -> dict:
        out = {
            "theorem_id": self.theorem_id,
            "statement": REGISTRY[self.theorem_id].statement,
            "max_genus": self.max_genus,
            "universe_size": self.universe_size,
            "passed": self.passed,
            "violations": [v.to_dict() for v in self.violations],
        }
        if timing:
            out["elapsed"] = self.elapsed
        return out


def _check_stream(
    stream: Iterable[NumericalSemigroup], ids: Sequence[str]
) -> tuple[list[int], list[list[Violation]]]:
    theorems = [REGISTRY[i] for i in ids]
    sizes = [0] * len(theorems)
    found: list[list[Violation]] = [[] for _ in theorems]
    for S in stream:
        for k, th in enumerate(theorems):
            if not th.applies(S):
                continue
            sizes[k] += 1
            for claim, lhs, rhs in th.check(S):
                found[k].append(Violation(tuple(S.gaps()), claim, lhs, rhs))
    return sizes, found


def _subtree_worker(args):
    gaps, max_genus, ids = args
    root = NumericalSemigroup.from_gaps(gaps)
    return _check_stream(_walk(root, max_genus), ids)


def _split_points(max_genus: int, depth: int):
    """Nodes shallower than ``depth`` plus the roots of independent subtrees
    at exactly ``depth``."""
    shallow, roots = [], []
    stack = [naturals()]
    while stack:
        S = stack.pop()
        if S.genus == depth:
            roots.append(S)
            continue
        shallow.append(S)
        if S.genus < max_genus:
            stack.extend(reversed(children(S)))
    return shallow, roots


def verify_many(
    theorem_ids: Sequence[str], max_genus: int, jobs: int = 1
) -> list[VerificationReport]:
    """Check several registry entries over one shared enumeration.

    Violations are sorted by (genus, gap set, claim), so reports do not
    depend on ``jobs``.
    """
    ids = list(theorem_ids)
    for i in ids:
        if i not in REGISTRY:
            raise UnknownTheorem(f"unknown theorem {i!r}; choose from {sorted(REGISTRY)} or 'all'")
    EnumerationQuery(max_genus)
    start = time.perf_counter()
    if jobs <= 1 or max_genus < 8:
        sizes, found = _check_stream(_walk(naturals(), max_genus), ids)
    else:
        shallow, roots = _split_points(max_genus, depth=6)
        sizes, found = _check_stream(shallow, ids)
        work = [(tuple(R.gaps()), max_genus, ids) for R in roots]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for sub_sizes, sub_found in pool.map(_subtree_worker, work, chunksize=4):
                for k in range(len(ids)):
                    sizes[k] += sub_sizes[k]
                    found[k].extend(sub_found[k])
    elapsed = time.perf_counter() - start
    reports = []
    for k, i in enumerate(ids):
        vs = sorted(found[k], key=lambda v: (len(v.gaps), v.gaps, v.claim))
        reports.append(VerificationReport(i, max_genus, sizes[k], vs, elapsed))
    return reports


def verify(theorem_id: str, max_genus: int, jobs: int = 1) -> VerificationReport:
    return verify_many([theorem_id], max_genus, jobs)[0]
