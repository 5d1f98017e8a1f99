"""Fixed-length positional representations in an integer base.

Digits are stored least-significant first, so ``rep.digits[0]`` is digit 1
(weight ``base**0``).  Display and parsing use the conventional
most-significant-first order::

    >>> r = from_int(20, base=5, places=2)
    >>> str(r)
    '40 (base 5)'
    >>> r.digit(2), to_int(r)
    (4, 20)
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import ContractError, DomainError, RadixOverflowError

__all__ = [
    "Radix",
    "AdditionResult",
    "from_int",
    "to_int",
    "add",
    "compare",
    "subrep",
    "repeat",
    "concat",
    "parse",
]


@dataclass(frozen=True)
class Radix:
    base: int
    digits: tuple[int, ...]  # least-significant first

    def __post_init__(self) -> None:
        if self.base < 2:
            raise DomainError(f"base must be >= 2, got {self.base}")
        for d in self.digits:
            if not 0 <= d < self.base:
                raise DomainError(f"digit {d} out of range for base {self.base}")

    def __len__(self) -> int:
        return len(self.digits)

    def digit(self, i: int) -> int:
        """Digit ``i`` (1-based, weight ``base**(i-1)``)."""
        if not 1 <= i <= len(self.digits):
            raise ContractError(f"digit index {i} outside [1, {len(self.digits)}]")
        return self.digits[i - 1]

    @property
    def value(self) -> int:
        n = 0
        for d in reversed(self.digits):
            n = n * self.base + d
        return n

    def msf(self) -> tuple[int, ...]:
        """Digits most-significant first."""
        return self.digits[::-1]

    def format(self, groups: Sequence[int] | None = None) -> str:
        """Render most-significant first; ``groups`` gives group widths from the left."""
        sep = "" if self.base <= 10 else ":"
        toks = [str(d) for d in self.msf()]
        if not groups:
            body = sep.join(toks)
        else:
            parts, pos = [], 0
            for w in groups:
                parts.append(sep.join(toks[pos:pos + w]))
                pos += w
            if pos < len(toks):
                parts.append(sep.join(toks[pos:]))
            body = " ".join(p for p in parts if p)
        return f"{body} (base {self.base})"

    def __str__(self) -> str:
        return self.format()


@dataclass(frozen=True)
class AdditionResult:
    sum: Radix
    carries: tuple[int, ...]  # c_0 .. c_k
    overflow: int

    def carry_at(self, i: int) -> bool:
        return self.carries[i] != 0


def from_int(n: int, base: int, places: int) -> Radix:
    if base < 2:
        raise DomainError(f"base must be >= 2, got {base}")
    if places < 1:
        raise DomainError(f"places must be >= 1, got {places}")
    if n < 0:
        raise DomainError("negative integers have no representation")
    if n >= base ** places:
        raise RadixOverflowError(f"{n} needs more than {places} places in base {base}")
    digits = []
    for _ in range(places):
        n, d = divmod(n, base)
        digits.append(d)
    return Radix(base, tuple(digits))


def to_int(r: Radix) -> int:
    return r.value


def repeat(d: int, m: int, base: int) -> Radix:
    """The power notation: digit ``d`` written ``m`` times (empty when ``m == 0``)."""
    if m < 0:
        raise DomainError("repeat count must be nonnegative")
    return Radix(base, (d,) * m)


def concat(*parts: Radix) -> Radix:
    """Juxtapose representations, leftmost argument most significant."""
    if not parts:
        raise ContractError("nothing to concatenate")
    base = parts[0].base
    digits: list[int] = []
    for p in reversed(parts):
        if p.base != base:
            raise ContractError("cannot concatenate representations of different bases")
        digits.extend(p.digits)
    return Radix(base, tuple(digits))


def add(operands: Iterable[Radix]) -> AdditionResult:
    ops = list(operands)
    if not ops:
        raise ContractError("addition needs at least one operand")
    base, k = ops[0].base, len(ops[0])
    for r in ops:
        if r.base != base or len(r) != k:
            raise ContractError("operands must share base and length")
    carries = [0]
    out = []
    for i in range(k):
        total = sum(r.digits[i] for r in ops) + carries[-1]
        carry, digit = divmod(total, base)
        out.append(digit)
        carries.append(carry)
    return AdditionResult(Radix(base, tuple(out)), tuple(carries), carries[-1])


def compare(r1: Radix, r2: Radix) -> int:
    """-1, 0 or 1 as the value of ``r1`` is less than, equal to or greater than ``r2``."""
    if r1.base != r2.base:
        raise ContractError("cannot compare representations of different bases")
    a, b = r1.value, r2.value
    return (a > b) - (a < b)


def subrep(r: Radix, i: int, j: int) -> Radix:
    """Digits ``i..j`` (1-based, inclusive) as a new representation."""
    if not 1 <= i <= j <= len(r):
        raise ContractError(f"subrepresentation [{i},{j}] outside [1,{len(r)}]")
    return Radix(r.base, r.digits[i - 1:j])


_SUFFIX = re.compile(r"\(\s*base\s+(\d+)\s*\)\s*$")


def parse(text: str, base: int | None = None) -> Radix:
    """Inverse of :meth:`Radix.format`; whitespace between groups is ignored."""
    m = _SUFFIX.search(text)
    if m:
        found = int(m.group(1))
        if base is not None and base != found:
            raise ContractError(f"text says base {found}, caller says {base}")
        base = found
        text = text[: m.start()]
    if base is None:
        raise ContractError("base not given and not present in text")
    text = text.strip()
    if ":" in text or base > 10:
        toks = [t for t in re.split(r"[:\s]+", text) if t]
    else:
        toks = [c for c in text if not c.isspace()]
    if not toks:
        raise ContractError("no digits to parse")
    try:
        msf = [int(t) for t in toks]
    except ValueError as exc:
        raise ContractError(f"bad digit in {text!r}") from exc
    return Radix(base, tuple(reversed(msf)))
