"""Exact representation of numerical semigroups and their basic invariants.

A numerical semigroup ``S`` is stored as a membership table over the window
``[0, F + 1]`` packed into a Python int (bit ``x`` set iff ``x`` is in ``S``).
Everything above the Frobenius number ``F`` belongs to ``S``, so the window
determines the whole set.

Conventions for the naturals: ``F = -1``, ``m = 1``, ``msg = {1}``,
``PF = rPF = {-1}``, so type and reduced type are both 1.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

from .errors import (
    BadParameters,
    GcdNotOne,
    IntegerOverflow,
    NoSecondGenerator,
    NotClosed,
    NotMember,
)

INT64_MAX = 2**63 - 1


class IntSet(tuple):
    """Sorted, duplicate-free tuple of integers."""

    __slots__ = ()

    def __new__(cls, values: Iterable[int] = ()) -> "IntSet":
        return super().__new__(cls, sorted(set(values)))

    def __repr__(self) -> str:
        return f"IntSet({list(self)})"


@dataclass(frozen=True)
class AperySet:
    """Apery set of ``S`` with respect to ``n``; ``elements[i]`` is the least
    element of ``S`` congruent to ``i`` mod ``n``."""

    n: int
    elements: tuple[int, ...]

    def w(self, i: int) -> int:
        return self.elements[i % self.n]

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def as_intset(self) -> IntSet:
        return IntSet(self.elements)


def _check_int64(values: Iterable[int]) -> None:
    for v in values:
        if 3 * abs(v) > INT64_MAX:
            raise IntegerOverflow(f"{v} exceeds the signed 64-bit contract (3*v must fit)")


def _set_bits(bits: int) -> Iterator[int]:
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


class NumericalSemigroup:
    """Immutable numerical semigroup.

    Build with :meth:`from_generators` or :meth:`from_gaps`; ``frobenius``,
    ``multiplicity`` and ``genus`` are plain attributes, everything else is
    computed on demand and cached.
    """

    def __init__(self, bits: int, frobenius: int) -> None:
        # Trusted constructor: callers guarantee closure and bit F+1 set.
        self._bits = bits
        self.frobenius = frobenius
        if frobenius < 0:
            self.multiplicity = 1
            self.genus = 0
        else:
            rest = bits >> 1
            self.multiplicity = (rest & -rest).bit_length()
            window = bits & ((1 << (frobenius + 1)) - 1)
            self.genus = frobenius + 1 - window.bit_count()

    # -- construction -----------------------------------------------------

    @classmethod
    def from_generators(cls, gens: Iterable[int]) -> "NumericalSemigroup":
        """Semigroup generated by ``gens``.

        The Apery set with respect to the smallest generator is found by a
        shortest-path search over residues; it gives the exact Frobenius
        number, so no a-priori bound is needed.
        """
        gens = sorted(set(int(g) for g in gens))
        if not gens:
            raise BadParameters("at least one generator is required")
        if gens[0] < 1:
            raise BadParameters(f"generators must be positive, got {gens[0]}")
        _check_int64(gens)
        d = math.gcd(*gens)
        if d != 1:
            raise GcdNotOne(gens, d)
        a = gens[0]
        if a == 1:
            return naturals()
        dist = [-1] * a
        heap = [(0, 0)]
        while heap:
            d, r = heapq.heappop(heap)
            if dist[r] >= 0:
                continue
            dist[r] = d
            for g in gens[1:]:
                nr = (r + g) % a
                if dist[nr] < 0:
                    heapq.heappush(heap, (d + g, nr))
        frob = max(dist) - a
        bits = 0
        for x in range(frob + 2):
            if x >= dist[x % a]:
                bits |= 1 << x
        return cls(bits, frob)

    @classmethod
    def from_gaps(cls, gaps: Iterable[int]) -> "NumericalSemigroup":
        """``N`` minus ``gaps``; raises :class:`NotClosed` with a witness pair
        if the complement is not closed under addition."""
        gapset = set(int(g) for g in gaps)
        if any(g < 1 for g in gapset):
            raise BadParameters("gaps must be positive integers")
        if not gapset:
            return naturals()
        _check_int64(gapset)
        for g in sorted(gapset):
            for a in range(1, g // 2 + 1):
                if a not in gapset and g - a not in gapset:
                    raise NotClosed(a, g - a)
        frob = max(gapset)
        bits = (1 << (frob + 2)) - 1
        for g in gapset:
            bits ^= 1 << g
        return cls(bits, frob)

    # -- membership -------------------------------------------------------

    def __contains__(self, x: int) -> bool:
        if x < 0:
            return False
        if x > self.frobenius:
            return True
        return bool((self._bits >> x) & 1)

    contains = __contains__

    @property
    def membership(self) -> tuple[bool, ...]:
        """Boolean table over ``[0, F + 1]``."""
        return tuple(bool((self._bits >> x) & 1) for x in range(self.frobenius + 2))

    def mask(self, limit: int) -> int:
        """Bitmask of ``S`` intersected with ``[0, limit]``."""
        if limit < 0:
            return 0
        full = (1 << (limit + 1)) - 1
        tail = full & ~((1 << (self.frobenius + 1)) - 1)
        return (self._bits & full) | tail

    def elements_up_to(self, limit: int) -> list[int]:
        return list(_set_bits(self.mask(limit)))

    @property
    def is_naturals(self) -> bool:
        return self.frobenius < 0

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NumericalSemigroup):
            return NotImplemented
        return self.frobenius == other.frobenius and self._bits == other._bits

    def __hash__(self) -> int:
        return hash((self.frobenius, self._bits))

    def __repr__(self) -> str:
        gens = ", ".join(map(str, self.minimal_generators()))
        return f"NumericalSemigroup(<{gens}>)"

    # -- Apery sets -------------------------------------------------------

    def apery_set(self, n: int) -> AperySet:
        if n <= 0 or n not in self:
            raise NotMember(n)
        if n == self.multiplicity and "_apery_m" in self.__dict__:
            return self.__dict__["_apery_m"]
        w = [-1] * n
        missing = n
        x = 0
        while missing:
            if x in self and w[x % n] < 0:
                w[x % n] = x
                missing -= 1
            x += 1
        ap = AperySet(n, tuple(w))
        if n == self.multiplicity:
            self.__dict__["_apery_m"] = ap
        return ap

    def apery_maximals(self, n: int) -> IntSet:
        """Maximal elements of ``Ap(S, n)`` under ``x <= y iff y - x in S``."""
        ap = self.apery_set(n).elements
        ap_mask = 0
        for w in ap:
            ap_mask |= 1 << w
        nonzero = self.mask(max(ap)) & ~1
        # w is dominated iff some other w' in Ap has w' - w in S \ {0}
        return IntSet(w for w in ap if not ((ap_mask >> w) & nonzero))

    # -- pseudo-Frobenius numbers -----------------------------------------

    @cached_property
    def _pf(self) -> IntSet:
        m = self.multiplicity
        return IntSet(w - m for w in self.apery_maximals(m))

    def pseudo_frobenius(self) -> IntSet:
        return self._pf

    def pf_bruteforce(self) -> IntSet:
        """Pseudo-Frobenius numbers straight from the definition.

        Only ``x`` in ``[-1, F]`` can qualify, and only ``s <= F - x`` need
        checking since ``x + s > F`` is automatically in ``S``.
        """
        F = self.frobenius
        out = []
        for x in range(-1, F + 1):
            if x in self:
                continue
            if all(x + s in self for s in range(1, F - x + 1) if s in self):
                out.append(x)
        return IntSet(out)

    def type(self) -> int:
        return len(self._pf)

    @cached_property
    def _rpf(self) -> IntSet:
        F = self.frobenius
        return IntSet(x for x in range(F - self.multiplicity + 1, F + 1) if x not in self)

    def reduced_pf(self) -> IntSet:
        return self._rpf

    def reduced_type(self) -> int:
        return len(self._rpf)

    # -- generators -------------------------------------------------------

    @cached_property
    def _msg(self) -> IntSet:
        m = self.multiplicity
        if m == 1:
            return IntSet([1])
        candidates = [w for w in self.apery_set(m).elements if w] + [m]
        top = max(candidates)
        nonzero = self.mask(top) & ~1
        sums = 0
        for a in _set_bits(self.mask(top // 2) & ~1):
            sums |= nonzero << a
        return IntSet(n for n in candidates if not (sums >> n) & 1)

    def minimal_generators(self) -> IntSet:
        return self._msg

    def embedding_dimension(self) -> int:
        return len(self._msg)

    def second_generator(self) -> int:
        if len(self._msg) < 2:
            raise NoSecondGenerator("the naturals have a single minimal generator")
        return self._msg[1]

    # -- gaps -------------------------------------------------------------

    @cached_property
    def _gaps(self) -> IntSet:
        return IntSet(x for x in range(1, self.frobenius + 1) if not (self._bits >> x) & 1)

    def gaps(self) -> IntSet:
        return self._gaps


_NATURALS = NumericalSemigroup(1, -1)


def naturals() -> NumericalSemigroup:
    return _NATURALS


from_generators = NumericalSemigroup.from_generators
from_gaps = NumericalSemigroup.from_gaps
