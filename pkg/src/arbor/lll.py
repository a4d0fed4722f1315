"""Moser-Tardos style resampling for locally checkable bad events.

Each round evaluates the bad events, picks a maximal set of violated events
with pairwise disjoint variable scopes (greedily by event id), and redraws the
variables of the picked events.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Hashable, Mapping, Sequence

from .runtime import RoundLedger, as_stream
from .util import log2n

C_BUDGET = 20


class LLLBudgetExhausted(RuntimeError):
    def __init__(self, surviving: list, rounds: int):
        super().__init__(f"{len(surviving)} bad events still violated after {rounds} resampling rounds")
        self.surviving = surviving
        self.rounds = rounds


@dataclass
class LLLResult:
    assignment: dict
    rounds: int
    resampled: int


def distributed_lll(variables: Sequence[Hashable], sample: Callable, events: Mapping[Hashable, Sequence[Hashable]],
                    violated: Callable[[Hashable, dict], bool], stream=None, ledger: RoundLedger | None = None, *,
                    initial: Mapping | None = None, budget: int | None = None, n: int | None = None,
                    radius: int = 1, c_budget: int = C_BUDGET, label: str = "lll") -> LLLResult:
    """Resample until no event is violated.

    ``sample(var, rng)`` draws a fresh value; ``events`` maps an event id to
    the variables it reads; ``violated(event, assignment)`` evaluates it.
    ``radius`` is the locality of one evaluation, used for round accounting.
    """
    stream = as_stream(stream)
    ledger = ledger if ledger is not None else RoundLedger()
    order = list(variables)
    if budget is None:
        budget = c_budget * log2n(n if n is not None else max(len(events), 2))
    if initial is None:
        rng = stream.derive("init").generator()
        assignment = {var: sample(var, rng) for var in order}
    else:
        assignment = dict(initial)
    touching: dict[Hashable, list] = {}
    event_ids = sorted(events)
    for ev in event_ids:
        for var in events[ev]:
            touching.setdefault(var, []).append(ev)
    bad = {ev for ev in event_ids if violated(ev, assignment)}
    rounds = 0
    resampled = 0
    while bad:
        if rounds >= budget:
            ledger.charge(label, radius, max(rounds, 1))
            raise LLLBudgetExhausted(sorted(bad), rounds)
        used: set = set()
        chosen = []
        for ev in sorted(bad):
            scope = events[ev]
            if used.isdisjoint(scope):
                chosen.append(ev)
                used.update(scope)
        rng = stream.derive("round", rounds).generator()
        fresh = [var for var in order if var in used]
        for var in fresh:
            assignment[var] = sample(var, rng)
        resampled += len(fresh)
        recheck = {ev for var in fresh for ev in touching.get(var, ())}
        for ev in recheck:
            if violated(ev, assignment):
                bad.add(ev)
            else:
                bad.discard(ev)
        rounds += 1
    if rounds:
        ledger.charge(label, radius, rounds)
    return LLLResult(assignment, rounds, resampled)
