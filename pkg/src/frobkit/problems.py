"""Instances and deciders for the Frobenius / knapsack / 3DM decision problems."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import chain, combinations
from typing import Iterable, Sequence

from .caps import DEFAULT_CAPS, Caps
from .core import (
    IntSet,
    as_intset,
    frobenius,
    is_representable,
    reachable_bits,
    require_frobenius_input,
    residue_table,
)
from .errors import ContractError, DomainError, ResourceError

Triple = tuple[int, int, int]


def _powerset(items: Sequence[Triple]) -> Iterable[tuple[Triple, ...]]:
    return chain.from_iterable(combinations(items, r) for r in range(len(items) + 1))


# --------------------------------------------------------------------------
# three-dimensional matching


@dataclass(frozen=True)
class ThreeDMInstance:
    """``U1 = U2 = U3 = [1, q]``; ``m1`` and ``m2`` are kept in lexicographic order.

    Lexicographic order on ``(j1, j2, j3)`` is the same as ordering by the
    base-``q+1`` number with digits ``j1 j2 j3``.
    """

    q: int
    m1: tuple[Triple, ...]
    m2: tuple[Triple, ...]

    def __post_init__(self) -> None:
        if self.q < 0:
            raise DomainError("q must be nonnegative")
        for name in ("m1", "m2"):
            ts = tuple(sorted(tuple(int(c) for c in t) for t in getattr(self, name)))
            for t in ts:
                if len(t) != 3 or not all(1 <= c <= self.q for c in t):
                    raise DomainError(f"triple {t} has a component outside [1, {self.q}]")
            if len(set(ts)) != len(ts):
                raise DomainError(f"duplicate triple in {name}")
            object.__setattr__(self, name, ts)

    @classmethod
    def build(cls, q: int, m1: Iterable[Sequence[int]], m2: Iterable[Sequence[int]]) -> "ThreeDMInstance":
        return cls(q, tuple(tuple(t) for t in m1), tuple(tuple(t) for t in m2))

    def rank_in_m1(self, t: Triple) -> int:
        """1-based position of ``t`` in the ordered ``m1``."""
        return self.m1.index(t) + 1


def is_perfect_matching(q: int, triples: Iterable[Sequence[int]]) -> bool:
    ts = {tuple(t) for t in triples}
    for t in ts:
        if len(t) != 3 or not all(1 <= c <= q for c in t):
            raise ContractError(f"triple {t} has a component outside [1, {q}]")
    if len(ts) != q:
        return False
    full = set(range(1, q + 1))
    return all({t[i] for t in ts} == full for i in range(3))


def decide_pi2_3dm_bruteforce(inst: ThreeDMInstance, caps: Caps = DEFAULT_CAPS) -> bool:
    """Literal quantifier enumeration over every pair of subsets."""
    work = 2 ** (len(inst.m1) + len(inst.m2))
    if work > caps.enum:
        raise ResourceError(f"{work} subset pairs exceed enumeration cap {caps.enum}")
    return all(
        any(is_perfect_matching(inst.q, set(mu1) | set(mu2)) for mu2 in _powerset(inst.m2))
        for mu1 in _powerset(inst.m1)
    )


def _completes(q: int, used: tuple[set[int], set[int], set[int]], pool: Sequence[Triple]) -> bool:
    """Is there a subset of ``pool`` covering the unused coordinates exactly?"""
    missing = [c for c in range(1, q + 1) if c not in used[0]]
    if not missing:
        return len(used[1]) == q and len(used[2]) == q
    w = missing[0]
    for t in pool:
        if t[0] == w and t[1] not in used[1] and t[2] not in used[2]:
            for i in range(3):
                used[i].add(t[i])
            ok = _completes(q, used, pool)
            for i in range(3):
                used[i].discard(t[i])
            if ok:
                return True
    return False


def decide_pi2_3dm(inst: ThreeDMInstance, caps: Caps = DEFAULT_CAPS) -> bool:
    """For every subset of ``m1``, can ``m2`` complete it to a perfect matching?

    The outer quantifier is enumerated; the inner existential is an exact-cover
    search instead of a second powerset.
    """
    if 2 ** len(inst.m1) > caps.enum:
        raise ResourceError(f"2^{len(inst.m1)} subsets of m1 exceed enumeration cap {caps.enum}")
    q = inst.q
    for mu1 in _powerset(inst.m1):
        used: tuple[set[int], set[int], set[int]] = (set(), set(), set())
        disjoint = True
        for t in mu1:
            if any(t[i] in used[i] for i in range(3)):
                disjoint = False
                break
            for i in range(3):
                used[i].add(t[i])
        if not disjoint:
            return False
        pool = [t for t in inst.m2 if t not in mu1]
        if not _completes(q, used, pool):
            return False
    return True


# --------------------------------------------------------------------------
# knapsack family


@dataclass(frozen=True)
class KnapsackInstance:
    a: IntSet
    k: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", as_intset(self.a))
        if self.k < 0:
            raise DomainError("knapsack target must be nonnegative")


def decide_integer_knapsack(a: IntSet | Iterable[int], k: int, caps: Caps = DEFAULT_CAPS) -> bool:
    return is_representable(as_intset(a), k, caps)


@dataclass(frozen=True)
class Pi2IKPInstance:
    a: IntSet
    lam: int
    upsilon: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", as_intset(self.a))
        if self.lam < 1 or self.upsilon < 1:
            raise DomainError("interval bounds must be positive")
        if self.lam > self.upsilon:
            raise DomainError(f"empty interval [{self.lam}, {self.upsilon}]")


@dataclass(frozen=True)
class AssocIKPInstance:
    """The interval is ``[lam, lam + min(a) - 1]``."""

    a: IntSet
    lam: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", as_intset(self.a))
        if not self.a.elements:
            raise DomainError("associated knapsack instance needs a nonempty set")
        if self.lam < 1:
            raise DomainError("lambda must be positive")

    @property
    def upsilon(self) -> int:
        return self.lam + self.a.min - 1

    def as_pi2(self) -> Pi2IKPInstance:
        return Pi2IKPInstance(self.a, self.lam, self.upsilon)


def _pi2_residue(inst: Pi2IKPInstance, caps: Caps) -> bool:
    a = inst.a
    if a.min == 1:
        return True
    table = residue_table(a, caps)
    # the first a1 integers of the interval are the binding ones for each class
    stop = min(inst.upsilon, inst.lam + a.min - 1)
    return all(table.dist[k % a.min] <= k for k in range(inst.lam, stop + 1))


def _pi2_dp(inst: Pi2IKPInstance, caps: Caps) -> bool:
    bits = reachable_bits(inst.a, inst.upsilon, caps)
    width = inst.upsilon - inst.lam + 1
    window = (1 << width) - 1
    return (bits >> inst.lam) & window == window


def decide_pi2_ikp(inst: Pi2IKPInstance, method: str = "auto", caps: Caps = DEFAULT_CAPS) -> bool:
    """Is every integer of ``[lam, upsilon]`` representable?

    ``residue`` queries one residue table; ``dp`` builds a bitset up to
    ``upsilon`` and never touches the residue machinery.  ``auto`` takes the
    bitset when it is small relative to the modulus, where it is far cheaper
    than a Python-level shortest-path run.
    """
    if not inst.a.elements:
        return False
    if method == "auto":
        a1 = inst.a.min
        small = inst.upsilon + 1 <= caps.dp_bits and inst.upsilon <= 1000 * a1
        method = "dp" if (a1 == 1 or small) else "residue"
        if method == "residue" and a1 > caps.residues:
            method = "dp"
    if method == "residue":
        return _pi2_residue(inst, caps)
    if method == "dp":
        return _pi2_dp(inst, caps)
    raise DomainError(f"unknown method {method!r}")


def decide_assoc_ikp(inst: AssocIKPInstance, method: str = "auto", caps: Caps = DEFAULT_CAPS) -> bool:
    return decide_pi2_ikp(inst.as_pi2(), method, caps)


# --------------------------------------------------------------------------
# Frobenius family


@dataclass(frozen=True)
class FrobeniusInstance:
    a: IntSet
    k: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", as_intset(self.a))
        require_frobenius_input(self.a)
        if self.k < 1:
            raise DomainError(f"k must be a positive integer, got {self.k}")


def decide_frobenius(inst: FrobeniusInstance, solver: str = "nijenhuis", caps: Caps = DEFAULT_CAPS) -> bool:
    return frobenius(inst.a, solver, caps) >= inst.k


def decide_cofrobenius(inst: FrobeniusInstance, solver: str = "nijenhuis", caps: Caps = DEFAULT_CAPS) -> bool:
    return not decide_frobenius(inst, solver, caps)


def decide_exact_frobenius(inst: FrobeniusInstance, solver: str = "nijenhuis", caps: Caps = DEFAULT_CAPS) -> bool:
    """``g(A) >= k`` and ``g(A) < k + 1``, each asked of its own decider."""
    upper = FrobeniusInstance(inst.a, inst.k + 1)
    return decide_frobenius(inst, solver, caps) and decide_cofrobenius(upper, solver, caps)


def decide_frob_cofrob_pair(
    first: FrobeniusInstance,
    second: FrobeniusInstance,
    solver: str = "nijenhuis",
    caps: Caps = DEFAULT_CAPS,
) -> bool:
    return decide_frobenius(first, solver, caps) and decide_cofrobenius(second, solver, caps)
