"""Cyclic subtractive algorithms on integer triples and their traces.

Each step first rotates the triple so a maximal entry comes first
(recording the rotation count), then replaces (a, b, c) with
(b, c, a - alpha*b - beta*c) for strategy-chosen nonnegative alpha,
beta.  A full run ends at a single nonzero value, the gcd; the trace of
rotations and coefficients reconstructs the start exactly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidTraceError, StuckError
from .exactcore import IntMatrix

STRATEGIES = ("max-b", "max-c", "b-then-c", "min-remainder")

ROTATE = IntMatrix([[0, 1, 0], [0, 0, 1], [1, 0, 0]])  # left cyclic shift
ROTATE_INV = IntMatrix([[0, 0, 1], [1, 0, 0], [0, 1, 0]])


def _normalize(t) -> tuple:
    """Rotations k in {0,1,2} bringing a maximal entry to the front."""
    a, b, c = t
    best = max(t)
    for k, first in enumerate((a, b, c)):
        if first == best:
            rotated = tuple(t[(k + i) % 3] for i in range(3))
            return k, rotated
    raise AssertionError("unreachable")


def _coefficients(a: int, b: int, c: int, strategy: str) -> tuple:
    if b == 0 and c == 0:
        raise StuckError("both subtrahends are zero")
    if strategy == "max-b":
        if b:
            return a // b, 0
        return 0, a // c
    if strategy == "max-c":
        if c:
            return 0, a // c
        return a // b, 0
    if strategy == "b-then-c":
        alpha = a // b if b else 0
        rem = a - alpha * b
        beta = rem // c if c else 0
        return alpha, beta
    if strategy == "min-remainder":
        best = None
        for alpha in range(0, (a // b if b else 0) + 1):
            rem = a - alpha * b
            beta = rem // c if c else 0
            leftover = rem - beta * c
            if (alpha, beta) == (0, 0):
                continue
            if best is None or leftover < best[0]:
                best = (leftover, alpha, beta)
        if best is None:
            raise StuckError("no admissible coefficients")
        return best[1], best[2]
    raise ValueError(f"unknown strategy {strategy!r}")


def subtract_step(t, strategy: str):
    """One normalized step: returns ((b, c, remainder), (alpha, beta), k)."""
    k, (a, b, c) = _normalize(tuple(int(x) for x in t))
    alpha, beta = _coefficients(a, b, c, strategy)
    return (b, c, a - alpha * b - beta * c), (alpha, beta), k


@dataclass(frozen=True)
class MCFTrace:
    """Record of a full run: start, per-step data, and the final triple."""

    start: tuple
    strategy: str
    steps: tuple  # ((alpha, beta), rotations) per step
    final: tuple

    @property
    def terminal(self) -> int:
        return max(self.final)

    def euclid_cf(self) -> list:
        """Quotients of the steps taken with a zero coordinate present.

        When the run degenerates to two nonzero entries these are the
        continued-fraction quotients of their ratio.
        """
        out = []
        zero_phase = False
        state = self.start
        for (alpha, beta), k in self.steps:
            _, (a, b, c) = _normalize(state)
            if 0 in (b, c) or zero_phase:
                zero_phase = True
                out.append(alpha if b else beta)
            state = (b, c, a - alpha * b - beta * c)
        return out


def run_mcf(t, strategy: str) -> MCFTrace:
    """Iterate subtract_step until at most one coordinate is nonzero."""
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}")
    start = tuple(int(x) for x in t)
    if any(x < 0 for x in start) or all(x == 0 for x in start):
        raise ValueError("triple must be nonnegative and nonzero")
    state = start
    steps = []
    while sum(1 for x in state if x) > 1:
        state, (alpha, beta), k = subtract_step(state, strategy)
        steps.append(((alpha, beta), k))
    return MCFTrace(start, strategy, tuple(steps), state)


def _step_matrix(alpha: int, beta: int) -> IntMatrix:
    return IntMatrix([[0, 1, 0], [0, 0, 1], [1, -alpha, -beta]])


def _step_matrix_inv(alpha: int, beta: int) -> IntMatrix:
    return IntMatrix([[alpha, beta, 1], [1, 0, 0], [0, 1, 0]])


def reconstruct(trace: MCFTrace) -> IntMatrix:
    """Matrix carrying the final triple back to the start.

    The forward run computes v_{i+1} = L(alpha_i, beta_i) R^{k_i} v_i,
    so the inverse product (R^{-k_i} L_i^{-1}, composed in step order)
    applied to the final triple reproduces the start.
    """
    out = IntMatrix.identity(3)
    for (alpha, beta), k in trace.steps:
        if alpha < 0 or beta < 0 or k not in (0, 1, 2):
            raise InvalidTraceError("malformed step record")
        out = out * (ROTATE_INV ** k) * _step_matrix_inv(alpha, beta)
    return out
