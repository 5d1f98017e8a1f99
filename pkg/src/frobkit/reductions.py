"""Karp reductions 3DM -> associated knapsack -> coFrobenius.

Gadget layout for a 3DM instance with ``q`` and ordered ``M1`` (base
``b = q + 1``, length ``3q + |M1| + 1``, digit 1 least significant)::

    position 3q+|M1|+1          addition-limiting digit, always 1
    positions 3q+1 .. 3q+|M1|   universal block: digit d0 in [1,q] at 3q+rank
                                for a triple of M1, all zero for M2
    positions 2q+1 .. 3q        first coordinate j1, digit d1 at 2q+j1
    positions  q+1 .. 2q        second coordinate j2, digit d2 at q+j2
    positions    1 .. q         third coordinate j3, digit d3 at j3

with ``d1, d2, d3`` ranging over ``[0, q]``.  Lambda is ``q * b**(3q+|M1|)``.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from itertools import product
from typing import Any, Iterator

from .core import IntSet, gcd_set
from .errors import DomainError
from .numrep import Radix
from .problems import AssocIKPInstance, FrobeniusInstance, ThreeDMInstance, Triple

FROM_M1 = "from-M1"
FROM_M2 = "from-M2"


@dataclass(frozen=True)
class GadgetRep:
    rep: Radix
    source_triple: Triple
    kind: str

    @property
    def value(self) -> int:
        return self.rep.value


@dataclass(frozen=True)
class ReductionCertificate:
    input_digest: str
    output: AssocIKPInstance | FrobeniusInstance
    stats: dict[str, Any] = field(default_factory=dict)

    def sidecar(self) -> dict[str, Any]:
        keys = ("base", "rep_len", "psi_size", "lambda", "case")
        return {"input_digest": self.input_digest, **{k: self.stats.get(k) for k in keys}}


def digest(payload: Any) -> str:
    blob = json.dumps(payload, sort_keys=True, separators=(",", ":"), default=str)
    return "sha256:" + hashlib.sha256(blob.encode()).hexdigest()


def _3dm_payload(inst: ThreeDMInstance) -> dict[str, Any]:
    return {"q": inst.q, "m1": [list(t) for t in inst.m1], "m2": [list(t) for t in inst.m2]}


def rep_length(inst: ThreeDMInstance) -> int:
    return 3 * inst.q + len(inst.m1) + 1


def _gadgets_for(inst: ThreeDMInstance, t: Triple, kind: str) -> Iterator[GadgetRep]:
    q = inst.q
    b = q + 1
    length = rep_length(inst)
    j1, j2, j3 = t
    universal = [0] if kind == FROM_M2 else list(range(1, q + 1))
    upos = 3 * q + inst.rank_in_m1(t) - 1 if kind == FROM_M1 else None
    for d0 in universal:
        for d1, d2, d3 in product(range(q + 1), repeat=3):
            digits = [0] * length
            digits[length - 1] = 1
            if upos is not None:
                digits[upos] = d0
            digits[2 * q + j1 - 1] = d1
            digits[q + j2 - 1] = d2
            digits[j3 - 1] = d3
            yield GadgetRep(Radix(b, tuple(digits)), t, kind)


def gadget_sets(inst: ThreeDMInstance) -> list[GadgetRep]:
    """Every gadget of every triple, ``M1`` triples first, in generation order.

    A triple in both ``M1`` and ``M2`` contributes both kinds.
    """
    if inst.q == 0:
        raise DomainError("gadgets are undefined for q = 0")
    out: list[GadgetRep] = []
    for t in inst.m1:
        out.extend(_gadgets_for(inst, t, FROM_M1))
    for t in inst.m2:
        out.extend(_gadgets_for(inst, t, FROM_M2))
    return out


def psi_lambda(inst: ThreeDMInstance) -> int:
    q = inst.q
    return q * (q + 1) ** (3 * q + len(inst.m1))


def reduce_3dm_to_assoc_ikp(inst: ThreeDMInstance) -> tuple[AssocIKPInstance, ReductionCertificate]:
    src = digest(_3dm_payload(inst))
    if not inst.m1 and not inst.m2:
        # no gadgets to build; emit a fixed instance with the right answer
        if inst.q == 0:
            out = AssocIKPInstance(IntSet((3, 4)), 6)
        else:
            out = AssocIKPInstance(IntSet((2,)), 3)
        stats = {"base": None, "rep_len": None, "psi_size": len(out.a), "lambda": out.lam,
                 "case": "degenerate-empty"}
        return out, ReductionCertificate(src, out, stats)
    values = sorted({g.value for g in gadget_sets(inst)})
    out = AssocIKPInstance(IntSet(tuple(values)), psi_lambda(inst))
    stats = {
        "base": inst.q + 1,
        "rep_len": rep_length(inst),
        "psi_size": len(values),
        "lambda": out.lam,
        "case": "gadget",
    }
    return out, ReductionCertificate(src, out, stats)


# phi case labels
CASE_VALID = "valid"
CASE_CONTAINS_ONE = "contains-one"
CASE_SINGLETON = "singleton"
CASE_NON_COPRIME = "non-coprime"

YES_INSTANCE = (IntSet((3, 4)), 6)
NO_INSTANCE = (IntSet((3, 4)), 5)


def phi_case(a: IntSet) -> str:
    if not a.elements:
        raise DomainError("empty set has no phi case")
    if a.min == 1:
        return CASE_CONTAINS_ONE
    if len(a) == 1:
        return CASE_SINGLETON
    if gcd_set(a) != 1:
        return CASE_NON_COPRIME
    return CASE_VALID


def reduce_assoc_ikp_to_cofrobenius(inst: AssocIKPInstance) -> tuple[FrobeniusInstance, ReductionCertificate]:
    case = phi_case(inst.a)
    if case == CASE_VALID:
        out = FrobeniusInstance(inst.a, inst.lam)
    elif case == CASE_CONTAINS_ONE:
        out = FrobeniusInstance(*YES_INSTANCE)
    else:
        out = FrobeniusInstance(*NO_INSTANCE)
    src = digest({"a": [str(x) for x in inst.a], "lambda": str(inst.lam)})
    stats = {"base": None, "rep_len": None, "psi_size": None, "lambda": out.k, "case": case}
    return out, ReductionCertificate(src, out, stats)
