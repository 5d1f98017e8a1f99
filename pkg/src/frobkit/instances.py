"""Instance files (JSON, integers as decimal strings) and seeded generators."""

from __future__ import annotations

import json
import math
import random
from pathlib import Path
from typing import Any

from .core import IntSet
from .errors import DomainError
from .problems import (
    AssocIKPInstance,
    FrobeniusInstance,
    KnapsackInstance,
    Pi2IKPInstance,
    ThreeDMInstance,
)

KINDS = ("3dm", "knapsack", "pi2ikp", "assoc-ikp", "frobenius", "exact", "pair")


# --------------------------------------------------------------------------
# JSON


def _int(raw: Any, name: str) -> int:
    if isinstance(raw, bool):
        raise DomainError(f"field {name!r} must be an integer")
    if isinstance(raw, int):
        return raw
    if isinstance(raw, str) and raw.strip().lstrip("-").isdigit():
        return int(raw)
    raise DomainError(f"field {name!r} must be a decimal string, got {raw!r}")


def _field(obj: dict, name: str) -> Any:
    try:
        return obj[name]
    except KeyError:
        raise DomainError(f"missing field {name!r}") from None


def _intset(obj: dict) -> IntSet:
    raw = _field(obj, "a")
    if not isinstance(raw, list):
        raise DomainError("field 'a' must be a list")
    vals = [_int(x, "a") for x in raw]
    if len(set(vals)) != len(vals):
        raise DomainError("field 'a' has repeated elements")
    return IntSet(tuple(sorted(vals)))


def _frob_obj(obj: dict) -> FrobeniusInstance:
    return FrobeniusInstance(_intset(obj), _int(_field(obj, "k"), "k"))


def instance_from_obj(obj: dict, kind: str | None = None) -> tuple[str, Any]:
    if not isinstance(obj, dict):
        raise DomainError("instance must be a JSON object")
    kind = obj.get("kind", kind)
    if kind not in KINDS:
        raise DomainError(f"unknown or missing instance kind {kind!r}")
    if kind == "3dm":
        q = _int(_field(obj, "q"), "q")
        return kind, ThreeDMInstance.build(q, _field(obj, "m1"), _field(obj, "m2"))
    if kind == "knapsack":
        return kind, KnapsackInstance(_intset(obj), _int(_field(obj, "k"), "k"))
    if kind == "pi2ikp":
        return kind, Pi2IKPInstance(
            _intset(obj), _int(_field(obj, "lambda"), "lambda"), _int(_field(obj, "upsilon"), "upsilon")
        )
    if kind == "assoc-ikp":
        return kind, AssocIKPInstance(_intset(obj), _int(_field(obj, "lambda"), "lambda"))
    if kind in ("frobenius", "exact"):
        return kind, _frob_obj(obj)
    first, second = _field(obj, "first"), _field(obj, "second")
    return kind, (_frob_obj(first), _frob_obj(second))


def _a(a: IntSet) -> list[str]:
    return [str(x) for x in a]


def instance_to_obj(kind: str, inst: Any) -> dict[str, Any]:
    if kind == "3dm":
        return {"kind": kind, "q": inst.q, "m1": [list(t) for t in inst.m1], "m2": [list(t) for t in inst.m2]}
    if kind == "knapsack":
        return {"kind": kind, "a": _a(inst.a), "k": str(inst.k)}
    if kind == "pi2ikp":
        return {"kind": kind, "a": _a(inst.a), "lambda": str(inst.lam), "upsilon": str(inst.upsilon)}
    if kind == "assoc-ikp":
        return {"kind": kind, "a": _a(inst.a), "lambda": str(inst.lam)}
    if kind in ("frobenius", "exact"):
        return {"kind": kind, "a": _a(inst.a), "k": str(inst.k)}
    if kind == "pair":
        first, second = inst
        return {
            "kind": kind,
            "first": {"a": _a(first.a), "k": str(first.k)},
            "second": {"a": _a(second.a), "k": str(second.k)},
        }
    raise DomainError(f"unknown instance kind {kind!r}")


def dumps(kind: str, inst: Any) -> str:
    return json.dumps(instance_to_obj(kind, inst), indent=2) + "\n"


def load(path: str | Path) -> tuple[str, Any]:
    try:
        obj = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise DomainError(f"{path}: not valid JSON ({exc})") from exc
    return instance_from_obj(obj)


def save(path: str | Path, kind: str, inst: Any) -> None:
    Path(path).write_text(dumps(kind, inst))


def load_set_only(path: str | Path) -> IntSet:
    """The ``a`` field of any set-based instance file; other fields are ignored."""
    obj = json.loads(Path(path).read_text())
    if not isinstance(obj, dict):
        raise DomainError("instance must be a JSON object")
    if obj.get("kind") == "pair":
        obj = _field(obj, "first")
    return _intset(obj)


# --------------------------------------------------------------------------
# generators

MAX_RETRIES = 1000


def random_3dm(rng: random.Random, q: int, m1: int, m2: int) -> ThreeDMInstance:
    """Triples drawn uniformly without replacement; ``m2`` independent of ``m1``."""
    universe = [(i, j, k) for i in range(1, q + 1) for j in range(1, q + 1) for k in range(1, q + 1)]
    if m1 > len(universe) or m2 > len(universe):
        raise DomainError(f"only {len(universe)} triples exist for q = {q}")
    return ThreeDMInstance.build(q, rng.sample(universe, m1), rng.sample(universe, m2))


def random_set(rng: random.Random, n: int, lo: int, hi: int) -> IntSet:
    if n < 0 or hi - lo + 1 < n:
        raise DomainError(f"cannot draw {n} distinct integers from [{lo}, {hi}]")
    return IntSet(tuple(sorted(rng.sample(range(lo, hi + 1), n))))


def random_coprime_set(rng: random.Random, n: int, a_max: int) -> IntSet:
    """``n >= 2`` distinct coprime integers from ``[2, a_max]``; redraws non-coprime sets."""
    if n < 2:
        raise DomainError("a Frobenius set needs n >= 2")
    for _ in range(MAX_RETRIES):
        a = random_set(rng, n, 2, a_max)
        if math.gcd(*a.elements) == 1:
            return a
    raise DomainError(f"no coprime draw after {MAX_RETRIES} retries (n={n}, a_max={a_max})")


def random_frobenius(rng: random.Random, n: int, a_max: int) -> FrobeniusInstance:
    a = random_coprime_set(rng, n, a_max)
    return FrobeniusInstance(a, rng.randint(1, a.max ** 2))


ASSOC_CASES = ("contains-one", "singleton", "non-coprime", "valid")


def random_assoc_ikp(rng: random.Random, n_max: int, a_max: int, case: str | None = None) -> AssocIKPInstance:
    """Draw from one of the four phi cases, chosen uniformly unless given."""
    if a_max < 4 or n_max < 2:
        raise DomainError("need a_max >= 4 and n_max >= 2")
    case = case or rng.choice(ASSOC_CASES)
    if case == "contains-one":
        rest = random_set(rng, rng.randint(0, n_max - 1), 2, a_max)
        a = IntSet((1,) + rest.elements)
    elif case == "singleton":
        a = IntSet((rng.randint(2, a_max),))
    elif case == "non-coprime":
        d = rng.randint(2, max(2, a_max // 4))
        n = rng.randint(2, min(n_max, a_max // d))
        a = IntSet(tuple(d * x for x in sorted(rng.sample(range(1, a_max // d + 1), n))))
    elif case == "valid":
        a = random_coprime_set(rng, rng.randint(2, n_max), a_max)
    else:
        raise DomainError(f"unknown case {case!r}")
    return AssocIKPInstance(a, rng.randint(1, a.max ** 2 + 2))


def generate(kind: str, seed: int, *, q: int = 2, m1: int = 1, m2: int = 3,
             n: int = 3, a_max: int = 100) -> Any:
    """Deterministic instance of ``kind`` for ``seed``."""
    rng = random.Random(seed)
    if kind == "3dm":
        return random_3dm(rng, q, m1, m2)
    if kind == "knapsack":
        a = random_set(rng, n, 1, a_max)
        return KnapsackInstance(a, rng.randint(0, a_max ** 2))
    if kind == "pi2ikp":
        a = random_set(rng, n, 1, a_max)
        lam = rng.randint(1, a_max ** 2)
        return Pi2IKPInstance(a, lam, lam + rng.randint(0, 2 * a_max))
    if kind == "assoc-ikp":
        return random_assoc_ikp(rng, n, a_max)
    if kind in ("frobenius", "exact"):
        return random_frobenius(rng, n, a_max)
    if kind == "pair":
        return (random_frobenius(rng, n, a_max), random_frobenius(rng, n, a_max))
    raise DomainError(f"unknown instance kind {kind!r}")
