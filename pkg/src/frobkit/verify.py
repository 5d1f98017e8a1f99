"""Seeded dual-oracle verification runs for the two reductions and the solvers.

Each trial draws its own 64-bit seed from the master seed, so any single
trial can be replayed without rerunning the whole batch.
"""

from __future__ import annotations

import random
import time
from collections import Counter
from dataclasses import asdict, dataclass, field
from typing import Any, Callable

from . import __version__
from .caps import DEFAULT_CAPS, Caps
from .core import frobenius_binary_search, frobenius_bruteforce, frobenius_nijenhuis
from .instances import instance_to_obj, random_3dm, random_assoc_ikp, random_coprime_set
from .problems import decide_assoc_ikp, decide_cofrobenius, decide_pi2_3dm
from .reductions import phi_case, reduce_3dm_to_assoc_ikp, reduce_assoc_ikp_to_cofrobenius


@dataclass
class Trial:
    index: int
    trial_seed: int
    label: str
    source: Any
    image: Any
    agree: bool
    wall_time_s: float
    instance: dict[str, Any] = field(repr=False, default_factory=dict)


@dataclass
class VerifyReport:
    which: str
    config: dict[str, Any]
    trials: list[Trial]
    version: str = __version__

    @property
    def agreed(self) -> int:
        return sum(t.agree for t in self.trials)

    @property
    def ok(self) -> bool:
        return self.agreed == len(self.trials)

    @property
    def disagreements(self) -> list[Trial]:
        return [t for t in self.trials if not t.agree]

    def answer_counts(self) -> Counter:
        return Counter(str(t.source) for t in self.trials)

    def label_counts(self) -> Counter:
        return Counter(t.label for t in self.trials)

    @property
    def wall_time_s(self) -> float:
        return sum(t.wall_time_s for t in self.trials)

    def to_dict(self) -> dict[str, Any]:
        return {
            "which": self.which,
            "version": self.version,
            "config": self.config,
            "agreed": self.agreed,
            "trials": len(self.trials),
            "answers": dict(sorted(self.answer_counts().items())),
            "labels": dict(sorted(self.label_counts().items())),
            "results": [asdict(t) for t in self.trials],
        }


def _seeds(seed: int, trials: int) -> list[int]:
    master = random.Random(seed)
    return [master.getrandbits(64) for _ in range(trials)]


def _run(which: str, config: dict[str, Any], trials: int, seed: int,
         one: Callable[[random.Random], tuple[str, Any, Any, dict]]) -> VerifyReport:
    out = []
    for i, ts in enumerate(_seeds(seed, trials)):
        t0 = time.perf_counter()
        label, src, img, inst = one(random.Random(ts))
        out.append(Trial(i, ts, label, src, img, src == img, time.perf_counter() - t0, inst))
    return VerifyReport(which, config, out)


def verify_reduction_psi(trials: int, q_max: int, m1_max: int, m2_max: int, seed: int, *,
                         q_min: int = 1, m1_min: int = 0, m2_min: int = 0,
                         caps: Caps = DEFAULT_CAPS) -> VerifyReport:
    """Compare the 3DM quantifier enumeration with the knapsack decider on the image."""
    if not 1 <= q_min <= q_max <= 3:
        raise ValueError("q range must lie within [1, 3]")
    config = dict(trials=trials, q_min=q_min, q_max=q_max, m1_min=m1_min, m1_max=m1_max,
                  m2_min=m2_min, m2_max=m2_max, seed=seed)

    def one(rng: random.Random):
        q = rng.randint(q_min, q_max)
        cube = q ** 3
        m1 = rng.randint(min(m1_min, cube), min(m1_max, cube))
        m2 = rng.randint(min(m2_min, cube), min(m2_max, cube))
        p = random_3dm(rng, q, m1, m2)
        src = decide_pi2_3dm(p, caps)
        img = decide_assoc_ikp(reduce_3dm_to_assoc_ikp(p)[0], caps=caps)
        return f"q={q}", src, img, instance_to_obj("3dm", p)

    return _run("psi", config, trials, seed, one)


def verify_reduction_phi(trials: int, a_max: int, n_max: int, seed: int, *,
                         caps: Caps = DEFAULT_CAPS) -> VerifyReport:
    """Compare the interval decider with coFrobenius on the phi image."""
    config = dict(trials=trials, a_max=a_max, n_max=n_max, seed=seed)

    def one(rng: random.Random):
        inst = random_assoc_ikp(rng, n_max, a_max)
        src = decide_assoc_ikp(inst, caps=caps)
        img = decide_cofrobenius(reduce_assoc_ikp_to_cofrobenius(inst)[0], caps=caps)
        return phi_case(inst.a), src, img, instance_to_obj("assoc-ikp", inst)

    return _run("phi", config, trials, seed, one)


def verify_solvers(trials: int, n_max: int, a_max: int, seed: int, *, n_min: int = 2,
                   caps: Caps = DEFAULT_CAPS) -> VerifyReport:
    """Residue solver against the bitset scan and the bisection; ``source`` is the residue answer."""
    config = dict(trials=trials, n_min=n_min, n_max=n_max, a_max=a_max, seed=seed)

    def one(rng: random.Random):
        a = random_coprime_set(rng, rng.randint(n_min, n_max), a_max)
        g = frobenius_nijenhuis(a, caps)
        others = (frobenius_bruteforce(a, caps), frobenius_binary_search(a, caps=caps))
        img = g if all(o == g for o in others) else list(others)
        return f"n={len(a)}", g, img, {"kind": "frobenius", "a": [str(x) for x in a], "k": "1"}

    return _run("solvers", config, trials, seed, one)
