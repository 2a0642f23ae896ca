"""Wug-snake graphs: weight systems on the super upper triangle,
matching counts by three independent methods, heads and bodies, and the
wug-snake determinant.

A wug-snake of size n carries integer weights w_{i,j} for
1 <= i <= j <= n.  Its continuant matrix replaces the subdiagonal with
-1; its biadjacency matrix puts +1 there instead.  The number of
perfect matchings of the associated bipartite graph (weighted edges
counting as parallel edges) equals both the permanent of the
biadjacency and the determinant of the continuant.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import (
    DecompositionMismatchError,
    IncompatibleArityError,
    TooLargeError,
)
from .exactcore import IntMatrix, det_exact
from .contfrac import CompanionSpec, companion

_BRUTEFORCE_LIMIT = 14


class WugSnake:
    """Immutable weight system; absent entries are zero."""

    __slots__ = ("n", "weights")

    def __init__(self, n: int, weights):
        n = int(n)
        if n < 1:
            raise ValueError("size must be at least 1")
        clean = {}
        for (i, j), w in dict(weights).items():
            if not (1 <= i <= j <= n):
                raise ValueError(f"weight position ({i},{j}) outside the triangle")
            w = int(w)
            if w:
                clean[(i, j)] = w
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "weights", dict(clean))

    def __setattr__(self, *a):
        raise AttributeError("WugSnake is immutable")

    def weight(self, i: int, j: int) -> int:
        return self.weights.get((i, j), 0)

    def __eq__(self, other):
        return (
            isinstance(other, WugSnake)
            and self.n == other.n
            and self.weights == other.weights
        )

    def __repr__(self):
        return f"WugSnake(n={self.n}, weights={sorted(self.weights.items())})"

    def prefix(self, k: int) -> "WugSnake":
        """The filtration cut of the first k columns."""
        if not (1 <= k <= self.n):
            raise ValueError("cut outside the filtration")
        return WugSnake(k, {ij: w for ij, w in self.weights.items() if ij[1] <= k})

    def continuant_matrix(self) -> IntMatrix:
        rows = [[0] * self.n for _ in range(self.n)]
        for (i, j), w in self.weights.items():
            rows[i - 1][j - 1] = w
        for i in range(1, self.n):
            rows[i][i - 1] = -1
        return IntMatrix(rows)

    def biadjacency(self) -> IntMatrix:
        rows = [[0] * self.n for _ in range(self.n)]
        for (i, j), w in self.weights.items():
            rows[i - 1][j - 1] = w
        for i in range(1, self.n):
            rows[i][i - 1] = 1
        return IntMatrix(rows)

    def to_json(self) -> str:
        weights = [[i, j, w] for (i, j), w in sorted(self.weights.items())]
        return json.dumps({"n": self.n, "weights": weights})

    @classmethod
    def from_json(cls, text: str) -> "WugSnake":
        data = json.loads(text)
        return cls(data["n"], {(i, j): w for i, j, w in data["weights"]})


def matching_count_det(w: WugSnake) -> int:
    """Matching count as the determinant of the continuant matrix."""
    return det_exact(w.continuant_matrix())


def matching_sequence(w: WugSnake) -> list:
    """mu(K_1), ..., mu(K_n) via mu_k = sum_i w_{i,k} mu_{i-1}, mu_0 = 1."""
    mu = [1]
    for k in range(1, w.n + 1):
        mu.append(sum(w.weight(i, k) * mu[i - 1] for i in range(1, k + 1)))
    return mu[1:]


def matching_count_bruteforce(w: WugSnake) -> int:
    """Weighted perfect-matching count by direct enumeration.

    Enumerates matchings of the bipartite graph with vertex classes
    (u_i), (v_j), edges u_i - v_j of multiplicity w_{i,j} for i <= j and
    u_{j+1} - v_j of multiplicity 1.  Weights must be nonnegative.
    """
    n = w.n
    if n > _BRUTEFORCE_LIMIT:
        raise TooLargeError(f"enumeration limited to n <= {_BRUTEFORCE_LIMIT}")
    if any(x < 0 for x in w.weights.values()):
        raise ValueError("matching counts require nonnegative weights")
    bi = w.biadjacency().rows
    adjacency = [
        [(j, bi[i][j]) for j in range(n) if bi[i][j]] for i in range(n)
    ]

    def walk(i: int, used: int) -> int:
        if i == n:
            return 1
        total = 0
        for j, mult in adjacency[i]:
            if not used & (1 << j):
                total += mult * walk(i + 1, used | (1 << j))
        return total

    return walk(0, 0)


@dataclass(frozen=True)
class Head:
    """A prescribed tail (the last k matching-sequence values)."""

    target: tuple

    def __post_init__(self):
        target = tuple(int(x) for x in self.target)
        if not target:
            raise ValueError("head needs at least one value")
        object.__setattr__(self, "target", target)

    @property
    def k(self) -> int:
        return len(self.target)


@dataclass(frozen=True)
class Body:
    """Recurrence columns, listed in the order they are attached."""

    columns: tuple

    def __post_init__(self):
        columns = tuple(tuple(int(a) for a in col) for col in self.columns)
        if any(not col for col in columns):
            raise ValueError("columns must be nonempty")
        object.__setattr__(self, "columns", columns)

    def __len__(self):
        return len(self.columns)

    def __add__(self, other: "Body") -> "Body":
        return Body(self.columns + other.columns)


EMPTY_BODY = Body(())


def simple_head(xs) -> WugSnake:
    """Wug-snake of size s+1 whose matching sequence is (1, x_1, ..., x_s)."""
    xs = tuple(int(x) for x in xs)
    weights = {(1, 1): 1}
    for j, x in enumerate(xs, start=2):
        weights[(1, j)] = x
    return WugSnake(len(xs) + 1, weights)


def attach_body(w: WugSnake, body: Body, copies: int = 1) -> WugSnake:
    """Extend a wug-snake by the body's columns, repeated."""
    weights = dict(w.weights)
    n = w.n
    for _ in range(copies):
        for col in body.columns:
            n += 1
            if len(col) > n - 1:
                raise IncompatibleArityError(
                    "column deeper than the graph at attachment time"
                )
            for t, a in enumerate(col, start=1):
                if a:
                    weights[(n - t + 1, n)] = a
    return WugSnake(n, weights)


def snake_for(head: Head, body: Body, copies: int = 1) -> WugSnake:
    """The wug-snake realizing the head and the repeated body."""
    return attach_body(simple_head(head.target), body, copies)


def body_for_matrix(a: IntMatrix, decomposition) -> Body:
    """Body whose columns replay the companion decomposition of a.

    The decomposition lists CompanionSpec values with the rightmost
    applied first; their matrix product must equal a.
    """
    specs = list(decomposition)
    product = IntMatrix.identity(a.n)
    for spec in specs:
        product = product * companion(spec)
    if product != a:
        raise DecompositionMismatchError(
            "companion product does not equal the matrix"
        )
    return Body(tuple(spec.coeffs for spec in reversed(specs)))


def body_for_specs(specs) -> Body:
    """Body from companion specs in application order (first applied first)."""
    return Body(tuple(CompanionSpec(tuple(s.coeffs)).coeffs for s in specs))


def wug_determinant(head: Head, body: Body) -> int:
    """det of the h windows cut from head, head+body, head+body^2, ...

    Window i is the last h matching-sequence values of the head followed
    by i copies of the body; the windows form the columns, in order.
    """
    h = head.k
    cols = []
    for i in range(h):
        seq = matching_sequence(snake_for(head, body, copies=i))
        cols.append(seq[-h:])
    return det_exact(IntMatrix(list(zip(*cols))))
