"""Brute-force ground truth for everything the algebra computes.

Four independent counting routes live here, none of which touches the
series machinery it is used to check:

* point enumeration in projective space over a prime field, for the
  hyperplane-union counts of the worked example;
* the exponential point-count identity for symmetric powers,
  sum_n |S^n X| t^n = exp(sum_r N_r t^r / r), evaluated with exact
  rational arithmetic from closed-form extension counts N_r;
* exhaustive counting of squarefree monic polynomials, the finite-field
  incarnation of configurations of distinct points on the affine line;
* exhaustive enumeration of weighted labelled configurations (K, phi) on
  a finite scene, the dimension-zero incarnation of the coefficients of
  the series exponential.

Enumeration budgets are explicit and overruns raise; an oracle must
refuse rather than silently sample.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Hashable, Sequence

from .field import PrimeField, is_prime
from .geometry import MarkedP1Scene, ProjectivePoint, point_in_marked_union

DEFAULT_BUDGET = 10**7


class BudgetExceededError(RuntimeError):
    """An enumeration would exceed its step budget; nothing was computed."""

    def __init__(self, needed: int, budget: int, what: str) -> None:
        super().__init__(f"{what} needs ~{needed} steps, budget is {budget}")
        self.needed = needed
        self.budget = budget


def enumerate_projective(n: int, q: int) -> list[ProjectivePoint]:
    """All points of projective n-space over F_q, canonical and duplicate-free.

    Points are grouped by the position of the first nonzero coordinate,
    which is scaled to 1; the total is (q^(n+1) - 1) / (q - 1).
    """
    if n < 0:
        raise ValueError("dimension must be non-negative")
    if not is_prime(q):
        raise ValueError(f"field size must be prime, got {q}")
    points = []
    for lead in range(n + 1):
        for tail in itertools.product(range(q), repeat=n - lead):
            points.append(ProjectivePoint((0,) * lead + (1,) + tail))
    return points


def count_marked_union(n: int, q: int, scene: MarkedP1Scene) -> int:
    """Points of projective n-space lying on at least one mark hyperplane.

    Exhaustive: every point is tested against every mark.  Must agree
    with evaluating the inclusion-exclusion class at q.
    """
    if n < 1:
        raise ValueError("the hyperplane picture needs dimension >= 1")
    if scene.q != q:
        raise ValueError(f"scene is over F_{scene.q}, counting requested over F_{q}")
    return sum(1 for p in enumerate_projective(n, q) if point_in_marked_union(p, scene))


def weil_symmetric_counts(point_count: Callable[[int], int], order: int) -> list[int]:
    """Symmetric-power point counts from extension counts N_r = point_count(r).

    Expands exp(sum_r N_r t^r / r) with exact rationals via the
    log-derivative recurrence n*S_n = sum_{r=1..n} N_r * S_{n-r}.  Every
    coefficient must come out an integer; a non-integer is an arithmetic
    bug somewhere, so it raises instead of rounding.
    """
    if order < 0:
        raise ValueError("order must be non-negative")
    extension_counts = [point_count(r) for r in range(1, order + 1)]
    counts: list[Fraction] = [Fraction(1)]
    for n in range(1, order + 1):
        total = sum(
            Fraction(extension_counts[r - 1]) * counts[n - r] for r in range(1, n + 1)
        )
        counts.append(total / n)
        if counts[n].denominator != 1:
            raise ArithmeticError(
                f"symmetric-power count at degree {n} is not an integer: {counts[n]}"
            )
    return [int(c) for c in counts]


def projective_line_counts(q: int) -> Callable[[int], int]:
    """Extension counts of the projective line: q^r + 1."""
    return lambda r: q**r + 1


def affine_line_counts(q: int) -> Callable[[int], int]:
    """Extension counts of the affine line: q^r."""
    return lambda r: q**r


def finite_set_counts(s: int) -> Callable[[int], int]:
    """Extension counts of s rational points: constantly s."""
    return lambda r: s


def count_squarefree_monic(q: int, n: int, budget: int = DEFAULT_BUDGET) -> int:
    """Monic degree-n polynomials over F_q coprime to their derivative.

    Exhaustive over all q^n monic polynomials; refuses beyond the budget.
    """
    if not is_prime(q):
        raise ValueError(f"field size must be prime, got {q}")
    if n < 1:
        raise ValueError("degree must be at least 1")
    needed = q**n
    if needed > budget:
        raise BudgetExceededError(needed, budget, f"squarefree enumeration at q={q}, n={n}")
    fld = PrimeField(q)
    count = 0
    for low in itertools.product(range(q), repeat=n):
        poly = list(low) + [1]
        derivative = [fld.mul(i, c) for i, c in enumerate(poly)][1:]
        if _poly_gcd_degree(poly, derivative, fld) == 0:
            count += 1
    return count


def _poly_trim(p: list[int]) -> list[int]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_mod(a: list[int], b: list[int], fld: PrimeField) -> list[int]:
    # remainder of a by b, b nonzero, coefficients ascending
    a = _poly_trim(list(a))
    inv_lead = fld.inv(b[-1])
    while len(a) >= len(b):
        factor = fld.mul(a[-1], inv_lead)
        shift = len(a) - len(b)
        for i, c in enumerate(b):
            a[shift + i] = fld.sub(a[shift + i], fld.mul(factor, c))
        a = _poly_trim(a)
    return a


def _poly_gcd_degree(a: list[int], b: list[int], fld: PrimeField) -> int:
    """Degree of gcd(a, b); the zero polynomial reports -1."""
    a = _poly_trim(list(a))
    b = _poly_trim(list(b))
    while b:
        a, b = b, _poly_mod(a, b, fld)
    return len(a) - 1


@dataclass(frozen=True)
class FiniteScene:
    """Finite model for exhaustive validation of series-exponential coefficients.

    `atoms` plays the base space with `marked_atoms` marked inside it;
    `labels[i]` is the pair of label sets of weight i+1, a tuple
    (all labels, marked labels).  Everything must be explicitly listed so
    configurations can be enumerated one by one.
    """

    atoms: tuple[Hashable, ...]
    marked_atoms: tuple[Hashable, ...]
    labels: tuple[tuple[tuple[Hashable, ...], tuple[Hashable, ...]], ...]

    def __post_init__(self) -> None:
        if len(set(self.atoms)) != len(self.atoms):
            raise ValueError("atoms must be distinct")
        if not set(self.marked_atoms) <= set(self.atoms):
            raise ValueError("marked atoms must be a subset of the atoms")
        for full, marked in self.labels:
            if len(set(full)) != len(full):
                raise ValueError("labels of one weight must be distinct")
            if not set(marked) <= set(full):
                raise ValueError("marked labels must be a subset of the labels")

    @classmethod
    def from_sizes(cls, size: int, marked: int, label_sizes: Sequence[tuple[int, int]]) -> "FiniteScene":
        """Canonical scene with integer atoms 0..size-1, first `marked` marked."""
        if not 0 <= marked <= size:
            raise ValueError("marked count must lie between 0 and the atom count")
        labels = []
        for full, flagged in label_sizes:
            if not 0 <= flagged <= full:
                raise ValueError("marked label count must lie between 0 and the label count")
            labels.append((tuple(range(full)), tuple(range(flagged))))
        return cls(tuple(range(size)), tuple(range(marked)), tuple(labels))


def count_power_configs(
    scene: FiniteScene, n: int, budget: int = DEFAULT_BUDGET
) -> tuple[int, int]:
    """Exhaustive (ambient, complement) counts of weight-n labelled configurations.

    A configuration is a subset K of the atoms together with a map phi
    from K into the disjoint union of the label sets, with the weights of
    the chosen labels summing to n.  The ambient count takes all of them;
    the complement count keeps only those where K avoids the marked atoms
    and the image of phi avoids the marked labels.  These are the
    coefficient counts of (1 + sum_i |labels_i| t^i) raised to the power
    of the atom pair, which is what the suites compare against.
    """
    if n < 0:
        raise ValueError("weight must be non-negative")
    universe = [
        (i + 1, label, label in marked)
        for i, (full, marked) in enumerate(scene.labels)
        for label in full
    ]
    needed = (1 + len(universe)) ** len(scene.atoms)
    if needed > budget:
        raise BudgetExceededError(needed, budget, "configuration enumeration")
    marked_atoms = set(scene.marked_atoms)
    ambient = 0
    complement = 0
    for k_size in range(len(scene.atoms) + 1):
        for subset in itertools.combinations(scene.atoms, k_size):
            for assignment in itertools.product(universe, repeat=k_size):
                if sum(weight for weight, _, _ in assignment) != n:
                    continue
                ambient += 1
                if any(atom in marked_atoms for atom in subset):
                    continue
                if any(flagged for _, _, flagged in assignment):
                    continue
                complement += 1
    return (ambient, complement)
