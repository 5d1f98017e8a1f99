"""Frobenius numbers, representability and the classical bounds.

Three independent exact solvers are provided:

* :func:`frobenius_nijenhuis` -- shortest paths over residues mod ``min A``;
* :func:`frobenius_bruteforce` -- a representability bitset up to ``max(A)**2``;
* :func:`frobenius_binary_search` -- bisection driven by a yes/no oracle for
  ``g(A) >= k``.

They are deliberately kept apart so each can check the others.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from decimal import Decimal, localcontext
from functools import reduce
from typing import Callable, Iterable, Iterator

from .caps import DEFAULT_CAPS, Caps
from .errors import DomainError, ResourceError

INF = math.inf

Decider = Callable[["IntSet", int], bool]


@dataclass(frozen=True)
class IntSet:
    """A finite set of positive integers kept in increasing order."""

    elements: tuple[int, ...]

    def __post_init__(self) -> None:
        els = self.elements
        for x in els:
            if not isinstance(x, int) or isinstance(x, bool):
                raise DomainError(f"element {x!r} is not an integer")
            if x < 1:
                raise DomainError(f"element {x} is not positive")
        if any(a >= b for a, b in zip(els, els[1:])):
            raise DomainError("elements must be strictly increasing")

    @classmethod
    def of(cls, items: Iterable[int]) -> "IntSet":
        """Build from any iterable; duplicates collapse."""
        return cls(tuple(sorted(set(items))))

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, x: object) -> bool:
        return x in self.elements

    @property
    def min(self) -> int:
        if not self.elements:
            raise DomainError("empty set has no minimum")
        return self.elements[0]

    @property
    def max(self) -> int:
        if not self.elements:
            raise DomainError("empty set has no maximum")
        return self.elements[-1]

    @property
    def is_coprime(self) -> bool:
        return bool(self.elements) and gcd_set(self) == 1

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.elements)) + "}"


def as_intset(a: IntSet | Iterable[int]) -> IntSet:
    return a if isinstance(a, IntSet) else IntSet.of(a)


def gcd_set(a: IntSet | Iterable[int]) -> int:
    a = as_intset(a)
    if not a.elements:
        raise DomainError("gcd of the empty set is undefined")
    return reduce(math.gcd, a.elements)


def require_frobenius_input(a: IntSet) -> None:
    """Raise unless ``a`` is coprime, has at least two elements and ``min >= 2``."""
    if len(a) < 2:
        raise DomainError(f"need at least two elements, got {a}")
    if a.min < 2:
        raise DomainError(f"smallest element must be >= 2, got {a}")
    if gcd_set(a) != 1:
        raise DomainError(f"elements of {a} are not coprime")


# --------------------------------------------------------------------------
# residue table (Apery set with respect to min A)


@dataclass(frozen=True)
class ResidueTable:
    modulus: int
    dist: tuple[int | float, ...]  # math.inf marks an unreachable class

    def least(self, residue: int) -> int | float:
        return self.dist[residue % self.modulus]

    def is_representable(self, k: int) -> bool:
        return k >= 0 and self.dist[k % self.modulus] <= k

    @property
    def farthest(self) -> int | float:
        return max(self.dist)


def residue_table(a: IntSet | Iterable[int], caps: Caps = DEFAULT_CAPS) -> ResidueTable:
    """Least representable integer in every residue class modulo ``min A``.

    Dijkstra over vertices ``0..a1-1`` with an edge ``i -> (i + x) mod a1`` of
    weight ``x`` for every generator ``x``.  Of several generators in the same
    class only the smallest can lie on a shortest path, and ``a1`` itself is
    a self-loop, so both are dropped before the search.
    """
    a = as_intset(a)
    if not a.elements:
        raise DomainError("residue table of the empty set")
    a1 = a.min
    if a1 < 2:
        raise DomainError("residue table needs min A >= 2")
    if a1 > caps.residues:
        raise ResourceError(f"modulus {a1} exceeds residue cap {caps.residues}")

    best: dict[int, int] = {}
    for x in a.elements[1:]:
        r = x % a1
        if r and (r not in best or x < best[r]):
            best[r] = x
    steps = sorted((x, r) for r, x in best.items())

    dist: list[int | float] = [INF] * a1
    dist[0] = 0
    done = bytearray(a1)
    heap = [(0, 0)]
    while heap:
        d, v = heapq.heappop(heap)
        if done[v]:
            continue
        done[v] = 1
        for w, r in steps:
            u = v + r
            if u >= a1:
                u -= a1
            nd = d + w
            if nd < dist[u]:
                dist[u] = nd
                heapq.heappush(heap, (nd, u))
    return ResidueTable(a1, tuple(dist))


# --------------------------------------------------------------------------
# representability bitsets


def reachable_bits(a: IntSet | Iterable[int], limit: int, caps: Caps = DEFAULT_CAPS) -> int:
    """Bitset (as an int) whose bit ``m`` is set iff ``m <= limit`` is representable.

    Unbounded-coin DP done with shifts: OR-ing the set with itself shifted by
    ``x, 2x, 4x, ...`` closes it under adding any multiple of ``x`` up to the limit.
    """
    a = as_intset(a)
    if limit < 0:
        return 0
    if limit + 1 > caps.dp_bits:
        raise ResourceError(f"bitset of {limit + 1} bits exceeds cap {caps.dp_bits}")
    mask = (1 << (limit + 1)) - 1
    bits = 1
    for x in a.elements:
        shift = x
        while shift <= limit:
            bits |= (bits << shift) & mask
            shift <<= 1
    return bits


def is_representable(a: IntSet | Iterable[int], k: int, caps: Caps = DEFAULT_CAPS) -> bool:
    """Is ``k`` a nonnegative integer combination of ``a``?"""
    a = as_intset(a)
    if k < 0:
        return False
    if k == 0:
        return True
    if not a.elements:
        return False
    if a.min == 1:
        return True
    return residue_table(a, caps).is_representable(k)


def is_representable_dp(a: IntSet | Iterable[int], k: int, caps: Caps = DEFAULT_CAPS) -> bool:
    """Same question answered by the bitset DP, independent of the residue table."""
    if k < 0:
        return False
    return bool(reachable_bits(a, k, caps) >> k & 1)


# --------------------------------------------------------------------------
# Frobenius solvers


def frobenius_closed_form_2(a1: int, a2: int) -> int:
    if not 2 <= a1 < a2:
        raise DomainError(f"need 2 <= a1 < a2, got ({a1}, {a2})")
    if math.gcd(a1, a2) != 1:
        raise DomainError(f"{a1} and {a2} are not coprime")
    return a1 * a2 - a1 - a2


def frobenius_nijenhuis(a: IntSet | Iterable[int], caps: Caps = DEFAULT_CAPS) -> int:
    a = as_intset(a)
    require_frobenius_input(a)
    table = residue_table(a, caps)
    return int(table.farthest) - a.min


def frobenius_bruteforce(a: IntSet | Iterable[int], caps: Caps = DEFAULT_CAPS) -> int:
    """Greatest gap found by scanning ``[0, max(A)**2]``."""
    a = as_intset(a)
    require_frobenius_input(a)
    limit = a.max ** 2
    bits = reachable_bits(a, limit, caps)
    gaps = ~bits & ((1 << (limit + 1)) - 1)
    return gaps.bit_length() - 1


def representability_decider(a: IntSet | Iterable[int], caps: Caps = DEFAULT_CAPS) -> Decider:
    """An oracle for ``g(A) >= k`` backed by a bitset over ``[0, max^2 + min]``.

    ``g(A) >= k`` fails exactly when the ``min A`` consecutive integers from
    ``k`` on are all representable.
    """
    a = as_intset(a)
    a1 = a.min
    limit = a.max ** 2 + a1
    bits = reachable_bits(a, limit, caps)
    window = (1 << a1) - 1

    def decide(s: IntSet, k: int) -> bool:
        if s != a:
            raise DomainError("decider was built for a different set")
        if k <= 0:
            return True
        if k > limit - a1 + 1:
            return False
        return (bits >> k) & window != window

    return decide


def frobenius_binary_search(
    a: IntSet | Iterable[int],
    decider: Decider | None = None,
    caps: Caps = DEFAULT_CAPS,
) -> int:
    """Recover ``g(A)`` from a yes/no oracle for ``g(A) >= k``.

    Keeps ``lo`` with ``g >= lo`` known true and ``hi`` with ``g >= hi + 1``
    known false.  ``a1 - 1`` is never representable, so ``lo = a1 - 1`` is
    safe; ``hi = max(A)**2`` is Wilf's bound.
    """
    a = as_intset(a)
    require_frobenius_input(a)
    if decider is None:
        decider = representability_decider(a, caps)
    lo, hi = a.min - 1, a.max ** 2
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if decider(a, mid):
            lo = mid
        else:
            hi = mid - 1
    return lo


SOLVERS: dict[str, Callable[..., int]] = {
    "nijenhuis": frobenius_nijenhuis,
    "bruteforce": frobenius_bruteforce,
    "binsearch": frobenius_binary_search,
}


def frobenius(a: IntSet | Iterable[int], algorithm: str = "auto", caps: Caps = DEFAULT_CAPS) -> int:
    """Dispatch by name; ``auto`` prefers the residue solver and falls back to bisection."""
    a = as_intset(a)
    if algorithm == "auto":
        require_frobenius_input(a)
        if a.min <= caps.residues:
            return frobenius_nijenhuis(a, caps)
        return frobenius_binary_search(a, caps=caps)
    try:
        solver = SOLVERS[algorithm]
    except KeyError:
        raise DomainError(f"unknown algorithm {algorithm!r}") from None
    if solver is frobenius_binary_search:
        return solver(a, caps=caps)
    return solver(a, caps)


# --------------------------------------------------------------------------
# bounds


@dataclass(frozen=True)
class BoundsReport:
    wilf_upper: int
    erdos_graham_upper: int
    davison_lower: float | None
    aliev_gruber_lower: float


def _real(expr: Callable[[], Decimal]) -> float:
    with localcontext() as ctx:
        ctx.prec = 80
        return float(expr())


def bounds(a: IntSet | Iterable[int]) -> BoundsReport:
    """Wilf, Erdos-Graham (as ``2 a_n floor(a_1/n) - a_1``), Davison and Aliev-Gruber.

    The Erdos-Graham expression here uses the smallest element inside the floor.
    It agrees with the published examples but is not an upper bound for every
    input; ``erdos_graham_classic`` gives the form that is.
    """
    a = as_intset(a)
    require_frobenius_input(a)
    els = a.elements
    n = len(els)
    total = sum(els)
    eg = 2 * els[-1] * (els[0] // n) - els[0]
    davison = None
    if n == 3:
        davison = _real(lambda: Decimal(3 * els[0] * els[1] * els[2]).sqrt() - total)
    prod = math.factorial(n - 1) * math.prod(els)
    if n == 2:
        ag = float(prod - total)
    else:
        ag = _real(lambda: Decimal(prod) ** (Decimal(1) / Decimal(n - 1)) - total)
    return BoundsReport(els[-1] ** 2, eg, davison, ag)


def erdos_graham_classic(a: IntSet | Iterable[int]) -> int:
    """``2 a_{n-1} floor(a_n / n) - a_n``, the form proved by Erdos and Graham."""
    a = as_intset(a)
    require_frobenius_input(a)
    els = a.elements
    return 2 * els[-2] * (els[-1] // len(els)) - els[-1]
