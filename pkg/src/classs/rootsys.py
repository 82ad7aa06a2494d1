"""Exact root-system data for the simple Lie algebras A-G at any rank.

Weights are stored in the fundamental-weight basis and coweights in the
fundamental-coweight basis, both with exact rationals, so the natural
pairing and the normalized invariant form reduce to Cartan-matrix
contractions.  The invariant form is normalized so long roots have
squared length 2.

RootSystem values are immutable after construction and safe to share
between threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

SIMPLY_LACED = {"A", "D", "E"}


class InvalidTypeError(ValueError):
    """Raised for a (type, rank) pair that names no simple Lie algebra."""


@dataclass(frozen=True)
class Weight:
    """Element of the weight space, coords in the fundamental-weight basis."""

    coords: tuple[Fraction, ...]

    @property
    def rank(self) -> int:
        return len(self.coords)

    def __add__(self, other: "Weight") -> "Weight":
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords, strict=True)))

    def __sub__(self, other: "Weight") -> "Weight":
        return Weight(tuple(a - b for a, b in zip(self.coords, other.coords, strict=True)))

    def scale(self, c) -> "Weight":
        c = Fraction(c)
        return Weight(tuple(c * a for a in self.coords))

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coords)

    def is_integral(self) -> bool:
        return all(a.denominator == 1 for a in self.coords)

    def is_dominant_integral(self) -> bool:
        return all(a.denominator == 1 and a >= 0 for a in self.coords)

    def lattice_key(self) -> tuple[int, ...]:
        if not self.is_integral():
            raise ValueError(f"{self} is not a lattice point")
        return tuple(int(a) for a in self.coords)

    def __repr__(self) -> str:
        return "Weight(" + ",".join(str(c) for c in self.coords) + ")"


@dataclass(frozen=True)
class Coweight:
    """Element of the coweight space, coords in the fundamental-coweight basis.

    The pairing of a coweight with the i-th simple root is its i-th
    coordinate.
    """

    coords: tuple[Fraction, ...]

    @property
    def rank(self) -> int:
        return len(self.coords)

    def __add__(self, other: "Coweight") -> "Coweight":
        return Coweight(tuple(a + b for a, b in zip(self.coords, other.coords, strict=True)))

    def scale(self, c) -> "Coweight":
        c = Fraction(c)
        return Coweight(tuple(c * a for a in self.coords))

    def __repr__(self) -> str:
        return "Coweight(" + ",".join(str(c) for c in self.coords) + ")"


@dataclass(frozen=True)
class Root:
    """A root, carried in both simple-root and fundamental-weight coords."""

    simple_coords: tuple[int, ...]
    weight: Weight
    height: int
    # pairing of an omega-basis weight with the coroot: <mu, alpha_check>
    # equals dot(mu.coords, coroot_coeffs)
    coroot_coeffs: tuple[Fraction, ...]
    coroot: Coweight
    length_sq: Fraction

    def coroot_pairing(self, mu: Weight) -> Fraction:
        return sum(a * b for a, b in zip(mu.coords, self.coroot_coeffs, strict=True))


def weight_from_ints(coords) -> Weight:
    return Weight(tuple(Fraction(c) for c in coords))


def _cartan_matrix(letter: str, rank: int) -> list[list[int]]:
    """Cartan matrix A[i][j] = <alpha_j, alpha_i_check> in Bourbaki numbering."""
    a = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]

    def bond(i, j):
        a[i][j] = -1
        a[j][i] = -1

    if letter == "A":
        for i in range(rank - 1):
            bond(i, i + 1)
    elif letter == "B":
        for i in range(rank - 2):
            bond(i, i + 1)
        a[rank - 2][rank - 1] = -1
        a[rank - 1][rank - 2] = -2
    elif letter == "C":
        for i in range(rank - 2):
            bond(i, i + 1)
        a[rank - 2][rank - 1] = -2
        a[rank - 1][rank - 2] = -1
    elif letter == "D":
        for i in range(rank - 3):
            bond(i, i + 1)
        bond(rank - 3, rank - 2)
        bond(rank - 3, rank - 1)
    elif letter == "E":
        chain = [0, 2, 3, 4, 5, 6, 7][: rank - 1]
        for i, j in zip(chain, chain[1:]):
            bond(i, j)
        bond(1, 3)
    elif letter == "F":
        bond(0, 1)
        bond(2, 3)
        a[1][2] = -1
        a[2][1] = -2
    elif letter == "G":
        a[0][1] = -3
        a[1][0] = -1
    return a


def _validate_type(letter: str, rank: int) -> None:
    valid = (
        (letter == "A" and rank >= 1)
        or (letter == "B" and rank >= 2)
        or (letter == "C" and rank >= 2)
        or (letter == "D" and rank >= 3)
        or (letter == "E" and rank in (6, 7, 8))
        or (letter == "F" and rank == 4)
        or (letter == "G" and rank == 2)
    )
    if not valid:
        raise InvalidTypeError(
            f"{letter}{rank} is not a simple type (need A n>=1, B n>=2, "
            f"C n>=2, D n>=3, E6/E7/E8, F4, G2)")


def _invert_matrix(a: list[list[Fraction]]) -> list[list[Fraction]]:
    n = len(a)
    m = [row[:] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(a)]
    for col in range(n):
        piv = next(r for r in range(col, n) if m[r][col] != 0)
        m[col], m[piv] = m[piv], m[col]
        inv = 1 / m[col][col]
        m[col] = [x * inv for x in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return [row[n:] for row in m]


def _root_lengths(cartan: list[list[int]]) -> list[Fraction]:
    """Half squared lengths d_i of the simple roots, normalized to max 1.

    Solves d_i A[i][j] = d_j A[j][i] along the (connected) Dynkin graph.
    """
    n = len(cartan)
    d: list[Fraction | None] = [None] * n
    d[0] = Fraction(1)
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(n):
            if i != j and cartan[i][j] != 0 and d[j] is None:
                d[j] = d[i] * Fraction(cartan[i][j], cartan[j][i])
                stack.append(j)
    if any(x is None for x in d):
        raise InvalidTypeError("Dynkin diagram is not connected")
    top = max(d)
    return [x / top for x in d]


class RootSystem:
    """Complete combinatorial data of a simple Lie algebra.

    Positive roots are generated by closure from the simple roots with
    the root-string rule; exponents come from the dual partition of the
    height distribution.  Do not instantiate directly; use
    build_root_system, which caches per (type, rank).
    """

    def __init__(self, type_letter: str, rank: int):
        _validate_type(type_letter, rank)
        self.type_letter = type_letter
        self.rank = rank
        self.cartan_matrix: tuple[tuple[int, ...], ...] = tuple(
            tuple(row) for row in _cartan_matrix(type_letter, rank))
        a_frac = [[Fraction(x) for x in row] for row in self.cartan_matrix]
        self.cartan_inverse: tuple[tuple[Fraction, ...], ...] = tuple(
            tuple(row) for row in _invert_matrix(a_frac))
        self.simple_lengths: tuple[Fraction, ...] = tuple(
            _root_lengths([list(r) for r in self.cartan_matrix]))

        self._generate_roots()

        self.rho = Weight(tuple(Fraction(1) for _ in range(rank)))
        self.rho_check = Coweight(tuple(Fraction(1) for _ in range(rank)))
        self.dim_g = rank + 2 * len(self.positive_roots)
        self.exponents = self._exponents_from_heights()
        theta = self.positive_roots[-1]
        self.highest_root = theta
        self.dual_coxeter = 1 + sum(
            c * d for c, d in zip(theta.simple_coords, self.simple_lengths))
        if self.dual_coxeter.denominator != 1:
            raise AssertionError("dual Coxeter number must be an integer")
        self.dual_coxeter = int(self.dual_coxeter)
        self.adjoint_weights: tuple[Weight, ...] = tuple(
            [r.weight for r in self.positive_roots]
            + [r.weight.scale(-1) for r in self.positive_roots]
            + [self.zero_weight() for _ in range(rank)])

    # -- construction helpers -------------------------------------------

    def _simple_root_weight(self, i: int) -> Weight:
        return Weight(tuple(Fraction(self.cartan_matrix[j][i])
                            for j in range(self.rank)))

    def _make_root(self, coords: tuple[int, ...]) -> Root:
        n = self.rank
        a = self.cartan_matrix
        d = self.simple_lengths
        length_sq = sum(
            coords[i] * coords[j] * d[i] * a[i][j]
            for i in range(n) for j in range(n) if coords[i] and a[i][j])
        half = length_sq / 2
        coeffs = tuple(coords[j] * d[j] / half for j in range(n))
        cowt = Coweight(tuple(
            d[j] * sum(a[j][i] * coords[i] for i in range(n)) / half
            for j in range(n)))
        omega = Weight(tuple(
            Fraction(sum(a[i][j] * coords[j] for j in range(n)))
            for i in range(n)))
        return Root(coords, omega, sum(coords), coeffs, cowt, length_sq)

    def _generate_roots(self) -> None:
        n = self.rank
        a = self.cartan_matrix
        known: set[tuple[int, ...]] = set()
        by_height: dict[int, list[tuple[int, ...]]] = {1: []}
        for i in range(n):
            c = tuple(int(i == j) for j in range(n))
            known.add(c)
            by_height[1].append(c)
        height = 1
        height_cap = 64 * n * 4
        while by_height.get(height):
            nxt: list[tuple[int, ...]] = []
            for c in by_height[height]:
                for i in range(n):
                    # p = steps down along alpha_i; alpha + alpha_i is a
                    # root iff p - <alpha, alpha_i_check> >= 1
                    p = 0
                    down = list(c)
                    while True:
                        down[i] -= 1
                        if down[i] < 0 or tuple(down) not in known:
                            break
                        p += 1
                    cartan_pair = sum(a[i][j] * c[j] for j in range(n))
                    if p - cartan_pair >= 1:
                        up = list(c)
                        up[i] += 1
                        t = tuple(up)
                        if t not in known:
                            known.add(t)
                            nxt.append(t)
            height += 1
            if height > height_cap:
                raise AssertionError("root closure exceeded the height cap")
            if nxt:
                by_height[height] = sorted(nxt)
        # keep the height-1 layer in simple-root index order so that
        # simple_roots[i] is alpha_i; higher layers sort lexicographically
        by_height[1] = [tuple(int(i == j) for j in range(n)) for i in range(n)]
        ordered = [c for h in sorted(by_height)
                   for c in (by_height[h] if h == 1 else sorted(by_height[h]))]
        self.positive_roots: tuple[Root, ...] = tuple(
            self._make_root(c) for c in ordered)
        self.simple_roots: tuple[Root, ...] = self.positive_roots[:n]

    def _exponents_from_heights(self) -> tuple[int, ...]:
        counts: dict[int, int] = {}
        for r in self.positive_roots:
            counts[r.height] = counts.get(r.height, 0) + 1
        exps = []
        for j in range(1, self.rank + 1):
            exps.append(max(h for h, c in counts.items() if c >= j))
        return tuple(sorted(exps))

    # -- pairings --------------------------------------------------------

    def zero_weight(self) -> Weight:
        return Weight(tuple(Fraction(0) for _ in range(self.rank)))

    def fundamental_weight(self, i: int) -> Weight:
        return Weight(tuple(Fraction(int(i == j)) for j in range(self.rank)))

    def weight(self, coords) -> Weight:
        w = Weight(tuple(Fraction(c) for c in coords))
        if w.rank != self.rank:
            raise ValueError("rank mismatch")
        return w

    def pairing(self, w: Weight, c: Coweight) -> Fraction:
        """Natural pairing <w, c> of a weight with a coweight."""
        if w.rank != self.rank or c.rank != self.rank:
            raise ValueError("rank mismatch")
        inv = self.cartan_inverse
        return sum(w.coords[i] * c.coords[j] * inv[j][i]
                   for i in range(self.rank) for j in range(self.rank))

    def normalized_form(self, w1: Weight, w2: Weight) -> Fraction:
        """Invariant bilinear form on weights with (theta|theta) = 2."""
        if w1.rank != self.rank or w2.rank != self.rank:
            raise ValueError("rank mismatch")
        inv = self.cartan_inverse
        d = self.simple_lengths
        return sum(w1.coords[i] * w2.coords[j] * d[i] * inv[i][j]
                   for i in range(self.rank) for j in range(self.rank))

    def coweight_to_weight(self, c: Coweight) -> Weight:
        """Embed a coweight into the weight space: alpha_check -> 2 alpha/(alpha|alpha)."""
        if c.rank != self.rank:
            raise ValueError("rank mismatch")
        inv = self.cartan_inverse
        a = self.cartan_matrix
        d = self.simple_lengths
        n = self.rank
        coords = []
        for i in range(n):
            acc = Fraction(0)
            for j in range(n):
                cj = c.coords[j]
                if cj:
                    acc += cj * sum(inv[j][k] * a[i][k] / d[k] for k in range(n))
            coords.append(acc)
        return Weight(tuple(coords))

    def simple_reflection(self, i: int, w: Weight) -> Weight:
        """Reflection in the i-th simple root: w - <w, alpha_i_check> alpha_i."""
        ci = w.coords[i]
        if ci == 0:
            return w
        alpha = self._simple_root_weight(i)
        return w - alpha.scale(ci)

    def dominant_representative(self, w: Weight) -> Weight:
        """The unique dominant weight in the Weyl orbit of w."""
        cur = w
        while True:
            for i in range(self.rank):
                if cur.coords[i] < 0:
                    cur = self.simple_reflection(i, cur)
                    break
            else:
                return cur

    def rho_pairing(self, w: Weight) -> Fraction:
        """<w, rho_check>, the conformal grading functional."""
        return self.pairing(w, self.rho_check)

    def label(self) -> str:
        return f"{self.type_letter}{self.rank}"

    def __repr__(self) -> str:
        return (f"RootSystem({self.label()}: dim={self.dim_g}, "
                f"h_check={self.dual_coxeter})")


@lru_cache(maxsize=None)
def build_root_system(type_letter: str, rank: int) -> RootSystem:
    """Construct (and memoize) the root system of the given simple type."""
    return RootSystem(type_letter.upper(), int(rank))


def parse_algebra(label: str) -> RootSystem:
    """Parse a label like 'A1' or 'E6' into a root system."""
    label = label.strip()
    if len(label) < 2 or not label[0].isalpha():
        raise InvalidTypeError(f"cannot parse algebra label {label!r}")
    letter = label[0].upper()
    try:
        rank = int(label[1:])
    except ValueError as exc:
        raise InvalidTypeError(f"cannot parse algebra label {label!r}") from exc
    return build_root_system(letter, rank)


def pairing(rs: RootSystem, w: Weight, c: Coweight) -> Fraction:
    return rs.pairing(w, c)


def normalized_form(rs: RootSystem, w1: Weight, w2: Weight) -> Fraction:
    return rs.normalized_form(w1, w2)
