"""Finite-dimensional irreducible characters, Weyl-group-free.

The production path is the Freudenthal multiplicity recursion on
dominant weights followed by orbit expansion, which works uniformly in
every type without enumerating the Weyl group.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import floor

from .exactalg import LaurentPoly
from .rootsys import RootSystem, Weight


@dataclass(frozen=True)
class DominantCharacter:
    """Weight multiplicities of an irreducible, dominant part only."""

    highest_weight: Weight
    dominant_mults: dict[Weight, int]

    def multiplicity(self, w: Weight) -> int:
        return self.dominant_mults.get(w, 0)


def weyl_dimension(rs: RootSystem, lam: Weight) -> int:
    """Dimension of the irreducible with highest weight lam (product formula)."""
    if not lam.is_dominant_integral():
        raise ValueError(f"{lam} is not dominant integral")
    lam_rho = lam + rs.rho
    dim = Fraction(1)
    for alpha in rs.positive_roots:
        dim *= alpha.coroot_pairing(lam_rho) / alpha.coroot_pairing(rs.rho)
    if dim.denominator != 1:
        raise AssertionError("Weyl dimension came out non-integral")
    return int(dim)


def _dominant_candidates(rs: RootSystem, lam: Weight) -> list[tuple[int, Weight]]:
    """Dominant weights below lam in the root lattice, tagged by depth.

    Depth is the number of simple roots subtracted; all dominant weights
    of the irreducible appear at depth <= <lam, rho_check>.
    """
    max_level = floor(rs.rho_pairing(lam))
    level_set = {lam.lattice_key()}
    out = [(0, lam)]
    alphas = [tuple(int(rs.cartan_matrix[j][i]) for j in range(rs.rank))
              for i in range(rs.rank)]
    for level in range(1, max_level + 1):
        nxt: set[tuple[int, ...]] = set()
        for key in level_set:
            for alpha in alphas:
                nxt.add(tuple(a - b for a, b in zip(key, alpha)))
        level_set = nxt
        for key in sorted(nxt):
            if all(c >= 0 for c in key):
                out.append((level, Weight(tuple(Fraction(c) for c in key))))
    return out


def freudenthal_character(rs: RootSystem, lam: Weight) -> DominantCharacter:
    """Dominant weight multiplicities via the Freudenthal recursion."""
    if not lam.is_dominant_integral():
        raise ValueError(f"{lam} is not dominant integral")
    lam_rho = lam + rs.rho
    lam_norm = rs.normalized_form(lam_rho, lam_rho)
    mults: dict[Weight, int] = {lam: 1}

    def mult_of(w: Weight) -> int:
        return mults.get(rs.dominant_representative(w), 0)

    for level, mu in _dominant_candidates(rs, lam):
        if level == 0:
            continue
        acc = Fraction(0)
        for alpha in rs.positive_roots:
            k = 1
            while k * alpha.height <= level:
                nu = mu + alpha.weight.scale(k)
                m = mult_of(nu)
                if m:
                    acc += m * rs.normalized_form(nu, alpha.weight)
                k += 1
        if acc == 0:
            continue
        mu_rho = mu + rs.rho
        denom = lam_norm - rs.normalized_form(mu_rho, mu_rho)
        val = 2 * acc / denom
        if val.denominator != 1:
            raise AssertionError("Freudenthal multiplicity came out non-integral")
        if val:
            mults[mu] = int(val)
    return DominantCharacter(lam, mults)


_ORBIT_CACHE: dict[tuple[str, tuple[int, ...]], tuple[tuple[int, ...], ...]] = {}


def weyl_orbit(rs: RootSystem, w: Weight) -> tuple[tuple[int, ...], ...]:
    """All lattice points in the Weyl orbit of w, sorted."""
    key = (rs.label(), w.lattice_key())
    cached = _ORBIT_CACHE.get(key)
    if cached is not None:
        return cached
    seen = {w.lattice_key()}
    frontier = [w]
    while frontier:
        nxt = []
        for v in frontier:
            for i in range(rs.rank):
                r = rs.simple_reflection(i, v)
                rk = r.lattice_key()
                if rk not in seen:
                    seen.add(rk)
                    nxt.append(r)
        frontier = nxt
    result = tuple(sorted(seen))
    _ORBIT_CACHE[key] = result
    return result


_CHARACTER_CACHE: dict[tuple[str, tuple[int, ...]], LaurentPoly] = {}


def full_character(rs: RootSystem, lam: Weight) -> LaurentPoly:
    """Full character of the irreducible as a Laurent polynomial."""
    cache_key = (rs.label(), lam.lattice_key())
    cached = _CHARACTER_CACHE.get(cache_key)
    if cached is not None:
        return cached
    dom = freudenthal_character(rs, lam)
    terms: dict[tuple[int, ...], int] = {}
    for mu, m in dom.dominant_mults.items():
        for point in weyl_orbit(rs, mu):
            terms[point] = terms.get(point, 0) + m
    result = LaurentPoly(rs.rank, terms)
    _CHARACTER_CACHE[cache_key] = result
    return result


def enumerate_dominant(rs: RootSystem, cutoff) -> list[Weight]:
    """All dominant integral weights with <lam, rho_check> <= cutoff.

    Sorted by the grading value, then reverse-lexicographically on
    coordinates, so e.g. the first fundamental weight precedes the
    second at equal grading.
    """
    cutoff = Fraction(cutoff)
    if cutoff < 0:
        raise ValueError("cutoff must be non-negative")
    grading = [rs.rho_pairing(rs.fundamental_weight(i)) for i in range(rs.rank)]
    out: list[tuple[Fraction, tuple[int, ...], Weight]] = []

    def rec(i: int, coords: list[int], used: Fraction) -> None:
        if i == rs.rank:
            w = Weight(tuple(Fraction(c) for c in coords))
            out.append((used, tuple(-c for c in coords), w))
            return
        c = 0
        while used + c * grading[i] <= cutoff:
            rec(i + 1, coords + [c], used + c * grading[i])
            c += 1

    rec(0, [], Fraction(0))
    out.sort(key=lambda t: (t[0], t[1]))
    return [w for _, _, w in out]
