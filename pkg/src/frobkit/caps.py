"""Resource caps for the pseudopolynomial solvers and the enumerators.

Defaults can be overridden with the ``FROBKIT_CAPS`` environment variable,
e.g. ``FROBKIT_CAPS="residues=1000000,dp_bits=50000000,enum=65536"``.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, fields, replace

from .errors import DomainError


@dataclass(frozen=True)
class Caps:
    residues: int = 10**8  # residue-table entries (the modulus min A)
    dp_bits: int = 10**9  # bits in a representability bitset
    enum: int = 2**24  # subset pairs visited by the 3DM quantifier enumeration

    def __post_init__(self) -> None:
        for f in fields(self):
            if getattr(self, f.name) <= 0:
                raise DomainError(f"cap {f.name} must be positive")

    def override(self, **kw: int | None) -> "Caps":
        return replace(self, **{k: v for k, v in kw.items() if v is not None})


def parse_caps(text: str, base: Caps | None = None) -> Caps:
    known = {f.name for f in fields(Caps)}
    vals: dict[str, int] = {}
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        key, _, raw = item.partition("=")
        key = key.strip().replace("-", "_")
        if key not in known:
            raise DomainError(f"unknown cap {key!r}")
        try:
            vals[key] = int(raw)
        except ValueError as exc:
            raise DomainError(f"cap {key} needs an integer, got {raw!r}") from exc
    return replace(base or Caps(), **vals)


def default_caps() -> Caps:
    env = os.environ.get("FROBKIT_CAPS")
    return parse_caps(env) if env else Caps()


DEFAULT_CAPS = Caps()
