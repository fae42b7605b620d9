"""Symbol error channel and end-to-end decode simulation.

Each transmitted symbol is hit independently with probability eps; a
hit symbol is shifted by a uniformly random nonzero field element, so
it always changes and lands uniformly on the other q - 1 values.

Simulations draw one child RNG per trial from a seed tree, so trial i
sees the same randomness regardless of batching or trial count.
"""

from dataclasses import dataclass, field as dataclass_field

import numpy as np

from . import decoder
from .fields import Field
from .schemes import LinearCode


class ChannelError(ValueError):
    pass


def corrupt(field: Field, word, symbol_error_rate: float, rng: np.random.Generator):
    """Return (received, error_vector) for one pass through the channel."""
    if not (0 <= symbol_error_rate <= 1):
        raise ChannelError("symbol error rate must be in [0, 1]")
    word = field.validate(word, "channel input")
    flips = rng.random(word.shape) < symbol_error_rate
    errors = np.zeros(word.shape, dtype=np.int64)
    hit = int(np.count_nonzero(flips))
    if hit:
        errors[flips] = rng.integers(1, field.q, size=hit, dtype=np.int64)
    return field.add(word, errors), errors


def random_message(field: Field, r: int, rng: np.random.Generator) -> np.ndarray:
    return rng.integers(0, field.q, size=r, dtype=np.int64)


@dataclass
class SimulationResult:
    n: int
    r: int
    t: int
    q: int
    symbol_error_rate: float
    trials: int
    seed: int
    successes: int = 0
    flagged_failures: int = 0
    miscorrections: int = 0
    within_capability: int = 0
    beyond_capability: int = 0
    capability_violations: int = 0
    error_weights: list[int] = dataclass_field(default_factory=list)

    @property
    def failures(self) -> int:
        return self.flagged_failures + self.miscorrections

    @property
    def failure_rate(self) -> float:
        return self.failures / self.trials if self.trials else 0.0

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "r": self.r,
            "t": self.t,
            "q": self.q,
            "symbol_error_rate": self.symbol_error_rate,
            "trials": self.trials,
            "seed": self.seed,
            "successes": self.successes,
            "flagged_failures": self.flagged_failures,
            "miscorrections": self.miscorrections,
            "failures": self.failures,
            "failure_rate": self.failure_rate,
            "within_capability": self.within_capability,
            "beyond_capability": self.beyond_capability,
            "capability_violations": self.capability_violations,
            "max_error_weight": max(self.error_weights, default=0),
        }


def simulate(
    code: LinearCode,
    symbol_error_rate: float,
    trials: int,
    seed: int = 0,
    keep_weights: bool = False,
) -> SimulationResult:
    """Monte-Carlo decode failure rate over the symbol error channel.

    A trial counts as a failure when the decoder flags one or when it
    silently returns the wrong message (miscorrection).  Trials whose
    drawn error weight stays within t must always succeed; any that do
    not are counted in capability_violations (expected to be zero).
    """
    if trials < 1:
        raise ChannelError("need at least one trial")
    result = SimulationResult(
        n=code.n,
        r=code.r,
        t=code.t,
        q=code.field.q,
        symbol_error_rate=symbol_error_rate,
        trials=trials,
        seed=seed,
    )
    for child in np.random.SeedSequence(seed).spawn(trials):
        rng = np.random.default_rng(child)
        message = random_message(code.field, code.r, rng)
        sent = code.encode(message)
        received, errors = corrupt(code.field, sent, symbol_error_rate, rng)
        weight = int(np.count_nonzero(errors))
        if keep_weights:
            result.error_weights.append(weight)
        within = weight <= code.t
        if within:
            result.within_capability += 1
        else:
            result.beyond_capability += 1
        outcome = decoder.decode(code, received)
        if outcome.ok and np.array_equal(outcome.message, message):
            result.successes += 1
        elif outcome.status == decoder.STATUS_FAILURE:
            result.flagged_failures += 1
            if within:
                result.capability_violations += 1
        else:
            result.miscorrections += 1
            if within:
                result.capability_violations += 1
    return result
