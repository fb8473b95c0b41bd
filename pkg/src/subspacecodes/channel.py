"""Adversarial subspace channel over n shots and error-control verification.

Errors are injected with an exact per-shot weight by sampling uniformly from
the shell of subspaces at that distance from the transmitted one.  The
verification sweeps enumerate every received tuple within a total-weight
budget of every codeword.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import product
from typing import Iterator

from .multishot import MultishotCode, SubspaceTuple, extended_distance
from .subspace import ProjectiveSpace, Subspace, projective_space


@dataclass(frozen=True)
class ErrorEvent:
    per_shot_weights: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "per_shot_weights", tuple(self.per_shot_weights))
        if any(w < 0 for w in self.per_shot_weights):
            raise ValueError(f"error weights must be non-negative: {self.per_shot_weights}")

    @property
    def total_weight(self) -> int:
        return sum(self.per_shot_weights)


def _rng(seed: int | random.Random | None) -> random.Random:
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def perturb(space: ProjectiveSpace, V: Subspace, w: int, seed: int | random.Random | None = None) -> Subspace:
    """A uniformly random subspace at distance exactly ``w`` from ``V``."""
    if not 0 <= w <= space.m:
        raise ValueError(f"error weight {w} outside 0..{space.m}")
    shell = space.shell(V, w)
    if not shell:
        raise ValueError(f"no subspace lies at distance {w} from {V!r}")
    return _rng(seed).choice(shell)


def transmit(
    code: MultishotCode,
    codeword: SubspaceTuple,
    event: ErrorEvent,
    seed: int | random.Random | None = None,
) -> SubspaceTuple:
    if codeword not in code:
        raise ValueError("transmitted tuple is not a codeword")
    if len(event.per_shot_weights) != code.n:
        raise ValueError(f"error event has {len(event.per_shot_weights)} shots, code has n={code.n}")
    rng = _rng(seed)
    space = projective_space(code.field, code.m)
    return SubspaceTuple(tuple(perturb(space, V, w, rng) for V, w in zip(codeword.shots, event.per_shot_weights)))


def detect(code: MultishotCode, received: SubspaceTuple) -> str:
    if received.n != code.n or received.m != code.m or received.field != code.field:
        raise ValueError("received tuple does not match the code parameters")
    return "clean" if received in code else "detected"


def decode_md(code: MultishotCode, received: SubspaceTuple) -> tuple[SubspaceTuple, bool]:
    """Nearest codeword; the flag is ``True`` when several codewords tie.

    Ties resolve to the first codeword in canonical order.
    """
    best, best_dist, ambiguous = None, None, False
    for word in code.codewords:
        dist = extended_distance(word, received)
        if best_dist is None or dist < best_dist:
            best, best_dist, ambiguous = word, dist, False
        elif dist == best_dist:
            ambiguous = True
    return best, ambiguous


def error_patterns(space: ProjectiveSpace, word: SubspaceTuple, max_weight: int, min_weight: int = 1) -> Iterator[tuple[ErrorEvent, SubspaceTuple]]:
    """Every tuple at total distance ``min_weight..max_weight`` from ``word``."""
    m, n = space.m, word.n
    for weights in product(range(min(m, max_weight) + 1), repeat=n):
        total = sum(weights)
        if not min_weight <= total <= max_weight:
            continue
        shells = [space.shell(V, w) for V, w in zip(word.shots, weights)]
        for choice in product(*shells):
            yield ErrorEvent(weights), SubspaceTuple(choice)


@dataclass
class SimulationReport:
    q: int
    m: int
    n: int
    size: int
    min_distance: int | None
    events_tested: int = 0
    detected: int = 0
    corrected: int = 0
    failures: list[dict] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "code": {"q": self.q, "m": self.m, "n": self.n, "count": self.size, "min_distance": self.min_distance},
            "events_tested": self.events_tested,
            "detected": self.detected,
            "corrected": self.corrected,
            "failures": self.failures,
        }


def _report(code: MultishotCode) -> SimulationReport:
    d = code.minimum_distance if len(code) >= 2 else None
    return SimulationReport(code.q, code.m, code.n, len(code), d)


def verify_detection(code: MultishotCode, max_weight: int, report: SimulationReport | None = None) -> SimulationReport:
    """Check that every error of total weight ``1..max_weight`` is detected."""
    report = report or _report(code)
    space = projective_space(code.field, code.m)
    for word in code.codewords:
        for event, received in error_patterns(space, word, max_weight):
            report.events_tested += 1
            if detect(code, received) == "detected":
                report.detected += 1
            else:
                report.failures.append({
                    "kind": "undetected",
                    "sent": word.to_json(),
                    "received": received.to_json(),
                    "weights": list(event.per_shot_weights),
                })
    return report


def verify_correction(code: MultishotCode, max_weight: int, report: SimulationReport | None = None) -> SimulationReport:
    """Check that every error of total weight ``1..max_weight`` decodes back, unambiguously."""
    report = report or _report(code)
    space = projective_space(code.field, code.m)
    for word in code.codewords:
        for event, received in error_patterns(space, word, max_weight):
            report.events_tested += 1
            decoded, ambiguous = decode_md(code, received)
            if decoded == word and not ambiguous:
                report.corrected += 1
            else:
                report.failures.append({
                    "kind": "ambiguous" if ambiguous else "miscorrected",
                    "sent": word.to_json(),
                    "received": received.to_json(),
                    "weights": list(event.per_shot_weights),
                })
    return report
