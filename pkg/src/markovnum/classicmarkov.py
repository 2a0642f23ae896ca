"""Classical pipeline: Markov triples and their tree, the Farey tree of
mediants, Christoffel words, domino snake geometry, shift-operator
matching counts, Cohn matrices, the Fricke trace identity, and the
quadratic form attached to a Markov triple.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import (
    NoResidueError,
    NotCoprimeError,
    NotUnimodularError,
    TooLargeError,
)
from .exactcore import IntMatrix, det_exact

# Root generators of the mediant recursion on words and matrices.
WORD_A = "A"
WORD_B = "B"
LETTER_MATRIX = {
    "A": IntMatrix([[1, 1], [1, 2]]),
    "B": IntMatrix([[3, 2], [4, 3]]),
}


@dataclass(frozen=True)
class TripleNode:
    """A Markov triple (left, middle, right) with lazy children."""

    triple: tuple
    depth: int

    def children(self):
        l, m, r = self.triple
        return (
            TripleNode((l, 3 * l * m - r, m), self.depth + 1),
            TripleNode((m, 3 * m * r - l, r), self.depth + 1),
        )


def markov_tree(depth: int) -> list:
    """All tree nodes to the given depth, breadth first, rooted at (1,5,2)."""
    level = [TripleNode((1, 5, 2), 0)]
    out = list(level)
    for _ in range(depth):
        level = [child for node in level for child in node.children()]
        out.extend(level)
    return out


def markov_numbers(depth: int) -> list:
    """Distinct Markov numbers among all entries to the given depth, sorted."""
    seen = set()
    for node in markov_tree(depth):
        seen.update(node.triple)
    return sorted(seen)


def is_markov_triple(triple) -> bool:
    x, y, z = triple
    return x > 0 and y > 0 and z > 0 and x * x + y * y + z * z == 3 * x * y * z


def mediant(a: Fraction, b: Fraction) -> Fraction:
    return Fraction(a.numerator + b.numerator, a.denominator + b.denominator)


def _check_unit_fraction(p: int, q: int) -> Fraction:
    if q <= 0 or not (0 <= p <= q) or gcd(p, q) != 1:
        raise NotCoprimeError(f"{p}/{q} is not a reduced fraction in [0, 1]")
    return Fraction(p, q)


@dataclass(frozen=True)
class FareyNode:
    """A Farey-tree node: fractions (left, middle, right)."""

    fractions: tuple
    depth: int

    def children(self):
        l, m, r = self.fractions
        return (
            FareyNode((l, mediant(l, m), m), self.depth + 1),
            FareyNode((m, mediant(m, r), r), self.depth + 1),
        )


def farey_tree(depth: int) -> list:
    """Mediant-tree nodes to the given depth, rooted at (0/1, 1/2, 1/1)."""
    level = [FareyNode((Fraction(0, 1), Fraction(1, 2), Fraction(1, 1)), 0)]
    out = list(level)
    for _ in range(depth):
        level = [child for node in level for child in node.children()]
        out.extend(level)
    return out


def frobenius_index(p: int, q: int) -> int:
    """The Markov number sitting at position p/q of the mediant tree."""
    t = _check_unit_fraction(p, q)
    fl, fr = Fraction(0, 1), Fraction(1, 1)
    if t == fl:
        return 1
    if t == fr:
        return 2
    l, m, r = 1, 5, 2
    fm = Fraction(1, 2)
    while t != fm:
        if t < fm:
            fr = fm
            l, m, r = l, 3 * l * m - r, m
        else:
            fl = fm
            l, m, r = m, 3 * m * r - l, r
        fm = mediant(fl, fr)
    return m


def christoffel(p: int, q: int) -> str:
    """Lower Christoffel word of slope p/q over the alphabet {A, B}."""
    _check_unit_fraction(p, q)
    if (p, q) == (0, 1):
        return WORD_A
    return "".join(
        WORD_A if (p * i) // q - (p * (i - 1)) // q == 0 else WORD_B
        for i in range(1, q + 1)
    )


def cohn_word(p: int, q: int) -> str:
    """Word built by the mediant recursion W(r + s) = W(r) W(s)."""
    _check_unit_fraction(p, q)
    t = Fraction(p, q)
    if t == 0:
        return WORD_A
    if t == 1:
        return WORD_B
    fl, fr = Fraction(0, 1), Fraction(1, 1)
    wl, wr = WORD_A, WORD_B
    fm, wm = Fraction(1, 2), WORD_A + WORD_B
    while t != fm:
        if t < fm:
            fr, wr = fm, wm
        else:
            fl, wl = fm, wm
        fm, wm = mediant(fl, fr), wl + wr
    return wm


def mu_domino(p: int, q: int) -> int:
    """Matching count of the domino graph from the word matrix product."""
    word = christoffel(p, q)
    m = IntMatrix.identity(2)
    for letter in word:
        m = m * LETTER_MATRIX[letter]
    return m[0, 1]


# --- Cohn matrices -------------------------------------------------------


def cohn_root_matrices(a: int) -> tuple:
    """The parameterized root matrices (left, middle, right)."""
    left = IntMatrix([[a, 1], [3 * a - a * a - 1, 3 - a]])
    right = IntMatrix(
        [[2 * a + 1, 2], [-2 * a * a + 4 * a + 2, 5 - 2 * a]]
    )
    middle = IntMatrix(
        [[5 * a + 2, 5], [-5 * a * a + 11 * a + 5, 13 - 5 * a]]
    )
    return (left, middle, right)


@dataclass(frozen=True)
class CohnNode:
    """A triple (L, L*R, R) of matrices at a mediant-tree position."""

    matrices: tuple
    depth: int

    def children(self):
        l, m, r = self.matrices
        return (
            CohnNode((l, l * m, m), self.depth + 1),
            CohnNode((m, m * r, r), self.depth + 1),
        )


def cohn_tree(depth: int, a: int = 1) -> list:
    """Matrix-triple nodes to the given depth for the parameter a."""
    level = [CohnNode(cohn_root_matrices(a), 0)]
    out = list(level)
    for _ in range(depth):
        level = [child for node in level for child in node.children()]
        out.extend(level)
    return out


def cohn_matrix(p: int, q: int, a: int = 1) -> IntMatrix:
    """The matrix at position p/q of the matrix mediant tree."""
    t = _check_unit_fraction(p, q)
    left, middle, right = cohn_root_matrices(a)
    if t == 0:
        return left
    if t == 1:
        return right
    fl, fr = Fraction(0, 1), Fraction(1, 1)
    l, m, r = left, middle, right
    fm = Fraction(1, 2)
    while t != fm:
        if t < fm:
            fr = fm
            l, m, r = l, l * m, m
        else:
            fl = fm
            l, m, r = m, m * r, r
        fm = mediant(fl, fr)
    return m


def fricke_check(a: IntMatrix, b: IntMatrix) -> bool:
    """Verify the trace identity for a pair of unimodular 2x2 matrices."""
    if a.n != 2 or b.n != 2:
        raise NotUnimodularError("expected 2x2 matrices")
    if det_exact(a) != 1 or det_exact(b) != 1:
        raise NotUnimodularError("determinants must equal 1")
    ab = a * b
    commutator = ab * a.inverse_unimodular() * b.inverse_unimodular()
    lhs = a.trace() ** 2 + b.trace() ** 2 + ab.trace() ** 2
    rhs = a.trace() * b.trace() * ab.trace() + commutator.trace() + 2
    return lhs == rhs


# --- Domino snake geometry and shift-operator count ----------------------


def snake_geometry(p: int, q: int) -> set:
    """Unit squares whose interiors meet the diagonal from 0 to (q, p)."""
    _check_unit_fraction(p, q)
    if p == 0:
        return set()
    cells = set()
    # crossing parameters of vertical and horizontal grid lines
    cuts = sorted(
        {Fraction(i, q) for i in range(q + 1)}
        | {Fraction(j, p) for j in range(p + 1)}
    )
    for lo, hi in zip(cuts, cuts[1:]):
        mid = (lo + hi) / 2
        x, y = mid * q, mid * p
        cells.add((x.numerator // x.denominator, y.numerator // y.denominator))
    return cells


def _domino_ops(p: int, q: int) -> list:
    """Straight/turn instructions for the snake polyomino of p/q."""
    m = cohn_matrix(p, q, a=1)
    b, d = m[0, 1], m[1, 1]
    num, den = b, d - b
    seq = []
    while den:
        seq.append(num // den)
        num, den = den, num % den
    ops = []
    for a in reversed(seq):
        ops.append("S")
        ops.extend("T" * (a - 1))
    return ops[2:]


def domino_geometry(p: int, q: int) -> list:
    """Square cells of the snake polyomino, in attachment order.

    For p/q = 0/1 the graph degenerates to a single edge; the empty
    list encodes it.
    """
    _check_unit_fraction(p, q)
    if (p, q) == (0, 1):
        return []
    cells = [(0, 0)]
    direction = (1, 0)
    pending_turn = False
    for op in _domino_ops(p, q):
        if pending_turn:
            direction = (direction[1], direction[0])
        x, y = cells[-1]
        cells.append((x + direction[0], y + direction[1]))
        # a turn instruction bends the strip between this tile and the next
        pending_turn = op == "T"
    return cells


def domino_mu_shift(p: int, q: int) -> int:
    """Matching count of the snake polyomino via boundary-state shifts."""
    _check_unit_fraction(p, q)
    if (p, q) == (0, 1):
        return 1
    n, prev = 2, 1
    for op in _domino_ops(p, q):
        if op == "S":
            n, prev = n + prev, n
        else:
            n = n + prev
    return n


def domino_mu_bruteforce(p: int, q: int) -> int:
    """Perfect matchings of the snake polyomino's grid graph, enumerated."""
    cells = domino_geometry(p, q)
    if not cells:
        return 1
    if len(cells) > 16:
        raise TooLargeError("enumeration limited to 16 cells")
    edges = set()
    for x, y in cells:
        corners = [(x, y), (x + 1, y), (x + 1, y + 1), (x, y + 1)]
        for u, v in zip(corners, corners[1:] + corners[:1]):
            edges.add((min(u, v), max(u, v)))
    vertices = sorted({v for e in edges for v in e})
    index = {v: i for i, v in enumerate(vertices)}
    neighbors = [[] for _ in vertices]
    for u, v in edges:
        neighbors[index[u]].append(index[v])
        neighbors[index[v]].append(index[u])

    total = len(vertices)

    def walk(used: int) -> int:
        if used == (1 << total) - 1:
            return 1
        i = next(k for k in range(total) if not used & (1 << k))
        count = 0
        for j in neighbors[i]:
            if not used & (1 << j):
                count += walk(used | (1 << i) | (1 << j))
        return count

    if total % 2:
        return 0
    return walk(0)


# --- Markov's quadratic form ---------------------------------------------


def markov_form(triple) -> tuple:
    """Coefficients (A, B, C) of the form attached to a Markov triple.

    The triple is sorted ascending to (m2, m1, m); u is the least
    positive residue solving m2*u = +-m1 (mod m), v = (u*u + 1)/m, and
    the form is m x^2 + (3m - 2u) xy + (v - 3u) y^2 with discriminant
    9 m^2 - 4.
    """
    m2, m1, m = sorted(int(x) for x in triple)
    if not is_markov_triple((m2, m1, m)):
        raise ValueError("not a Markov triple")
    if m == 1:
        u, v = 1, 2
    else:
        try:
            inv = pow(m2, -1, m)
        except ValueError:
            raise NoResidueError("congruence has no solution") from None
        candidates = [(inv * m1) % m, (-inv * m1) % m]
        u = min(c if c else m for c in candidates)
        if (u * u + 1) % m:
            raise NoResidueError("residue does not satisfy u^2 + 1 = v m")
        v = (u * u + 1) // m
    return (m, 3 * m - 2 * u, v - 3 * u)
