"""Flow-up bases for the module of splines on an edge-labeled cycle.

A flow-up spline with k leading zeros vanishes at the first k vertices and
is nonzero at vertex k + 1; its entry there is called the leading entry.
On a cycle the minimal achievable positive leading entry for k >= 1 is

    m_k = lcm(label(k), gcd(label(k + 1), ..., label(n))),

and a set of n flow-up splines, one for each zero count 0..n - 1, is a
basis exactly when every leading entry is minimal in absolute value and the
element with no zeros is the all-ones spline up to sign.  This module
provides two constructions that hit those minima (triangulation and king),
the checker, and a brute-force smallest element at desk scale.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from . import oracle
from .errors import BasisStructureError, KingPreconditionError
from .numtheory import lcm, mod_inverse, solve_congruence_pair
from .spline_core import (
    EdgeLabeledCycle,
    Spline,
    SplineLike,
    is_spline,
    leading_zeros,
    spline_entries,
    trivial_spline,
)

BASIS_KINDS = ("triangulation", "king", "smallest", "custom")

_SYMBOLS = {"triangulation": "H", "king": "K", "smallest": "G", "custom": "G"}


def smallest_leading_entry(cycle: EdgeLabeledCycle, k: int) -> int:
    """m_k = lcm(label(k), gcd(label(k + 1), ..., label(n))) for k in [1, n - 1].

    Every spline with k leading zeros has a leading entry that is an integer
    multiple of this value, and the value is achieved.
    """
    if not 1 <= k <= cycle.n - 1:
        raise IndexError(f"k must be in [1, {cycle.n - 1}], got {k}")
    return lcm(cycle.label(k), cycle.suffix_gcd(k + 1))


def triangulation_spline(cycle: EdgeLabeledCycle, k: int) -> Spline:
    """Flow-up element with k leading zeros built by chaining paired congruences.

    The leading entry at position k + 1 is m_k; each later entry solves

        h_i = h_{i-1} (mod label(i - 1)),   h_i = 0 (mod gcd(label(i), ..., label(n)))

    via the canonical representative of :func:`solve_congruence_pair`.  The
    second congruence is what keeps the next step solvable, so the chain
    never raises.  k = 0 returns the all-ones spline.
    """
    n = cycle.n
    if not 0 <= k <= n - 1:
        raise IndexError(f"k must be in [0, {n - 1}], got {k}")
    if k == 0:
        return trivial_spline(n)
    h = smallest_leading_entry(cycle, k)
    entries = [0] * k + [h]
    for i in range(k + 2, n + 1):
        h = solve_congruence_pair(h, cycle.label(i - 1), cycle.suffix_gcd(i))
        entries.append(h)
    return Spline(tuple(entries))


@dataclass(frozen=True)
class FlowUpBasis:
    """An indexed family of flow-up splines on a cycle, element k having
    exactly k leading zeros."""

    cycle: EdgeLabeledCycle
    elements: tuple[Spline, ...]
    kind: str = "custom"

    def __post_init__(self) -> None:
        if self.kind not in BASIS_KINDS:
            raise ValueError(f"kind must be one of {BASIS_KINDS}, got {self.kind!r}")
        object.__setattr__(self, "elements", tuple(self.elements))
        n = self.cycle.n
        if len(self.elements) != n:
            raise BasisStructureError(
                f"expected {n} elements, got {len(self.elements)}"
            )
        for k, element in enumerate(self.elements):
            if len(element) != n:
                raise BasisStructureError(
                    f"element {k} has {len(element)} entries, expected {n}"
                )
            if leading_zeros(element) != k:
                raise BasisStructureError(
                    f"element {k} must have exactly {k} leading zeros, "
                    f"found {leading_zeros(element)}"
                )

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[Spline]:
        return iter(self.elements)

    def __getitem__(self, k: int) -> Spline:
        return self.elements[k]

    @property
    def symbol(self) -> str:
        """One-letter name used when printing elements (H, K, or G)."""
        return _SYMBOLS[self.kind]

    def leading_entries(self) -> tuple[int, ...]:
        return tuple(el.entries[k] for k, el in enumerate(self.elements))


def triangulation_basis(cycle: EdgeLabeledCycle) -> FlowUpBasis:
    """The flow-up basis whose elements are :func:`triangulation_spline` for
    k = 0..n - 1."""
    return FlowUpBasis(
        cycle,
        tuple(triangulation_spline(cycle, k) for k in range(cycle.n)),
        "triangulation",
    )


def king_basis(cycle: EdgeLabeledCycle) -> FlowUpBasis:
    """Flow-up basis with constant middle runs; needs the last two labels coprime.

    Writing a = label(n - 1), b = label(n) and inv for the least
    non-negative inverse of b modulo a (0 when a == 1):

    * element 0 is the all-ones spline;
    * element i (1 <= i <= n - 2) is (0 x i, l_i, ..., l_i, l_i * b * inv);
    * element n - 1 is (0, ..., 0, a * b).

    Raises :class:`KingPreconditionError` when gcd(a, b) != 1.
    """
    n = cycle.n
    a, b = cycle.label(n - 1), cycle.label(n)
    g = math.gcd(a, b)
    if g != 1:
        raise KingPreconditionError(
            f"the last two edge labels must be coprime: gcd({a}, {b}) = {g}"
        )
    inv = mod_inverse(b, a)
    elements = [trivial_spline(n)]
    for i in range(1, n - 1):
        li = cycle.label(i)
        elements.append(Spline((0,) * i + (li,) * (n - 1 - i) + (li * b * inv,)))
    elements.append(Spline((0,) * (n - 1) + (a * b,)))
    return FlowUpBasis(cycle, tuple(elements), "king")


@dataclass(frozen=True)
class BasisDefect:
    """One reason a well-formed candidate set fails to be a basis."""

    index: int
    reason: str
    expected: Optional[int] = None
    actual: Optional[int] = None

    def describe(self) -> str:
        text = f"element {self.index}: {self.reason}"
        if self.expected is not None:
            text += f" (expected {self.expected}, got {self.actual})"
        return text


@dataclass(frozen=True)
class BasisCheck:
    """Outcome of :func:`check_flow_up_basis`; truthy exactly when it is a basis."""

    ok: bool
    defects: tuple[BasisDefect, ...]

    def __bool__(self) -> bool:
        return self.ok


def check_flow_up_basis(
    cycle: EdgeLabeledCycle, candidates: Sequence[SplineLike]
) -> BasisCheck:
    """Decide basis-hood of n flow-up candidates from their leading entries.

    A malformed candidate set (wrong count, wrong zero pattern, or an entry
    vector that is not a spline) raises :class:`BasisStructureError` naming
    the offending index.  A well-formed set is a basis iff candidate 0 is
    the all-ones spline up to sign and, for every k >= 1, candidate k's
    leading entry is plus or minus :func:`smallest_leading_entry`.
    """
    n = cycle.n
    cands = [Spline(spline_entries(c)) for c in candidates]
    if len(cands) != n:
        raise BasisStructureError(f"expected {n} candidates, got {len(cands)}")
    for i, cand in enumerate(cands):
        if len(cand) != n:
            raise BasisStructureError(
                f"candidate {i} has {len(cand)} entries, expected {n}"
            )
        if leading_zeros(cand) != i:
            raise BasisStructureError(
                f"candidate {i} must have exactly {i} leading zeros, "
                f"found {leading_zeros(cand)}"
            )
        check = is_spline(cycle, cand)
        if not check:
            raise BasisStructureError(
                f"candidate {i} is not a spline: {check.violations[0].describe()}"
            )
    defects = []
    first = cands[0].entries
    if not (all(e == 1 for e in first) or all(e == -1 for e in first)):
        defects.append(
            BasisDefect(
                0,
                "must be the all-ones spline up to sign",
                expected=1,
                actual=first[0],
            )
        )
    for k in range(1, n):
        want = smallest_leading_entry(cycle, k)
        got = cands[k].entries[k]
        if abs(got) != want:
            defects.append(
                BasisDefect(
                    k,
                    "leading entry is not minimal in absolute value",
                    expected=want,
                    actual=got,
                )
            )
    return BasisCheck(not defects, tuple(defects))


def smallest_flow_up_class(
    cycle: EdgeLabeledCycle,
    k: int,
    search_bound: Optional[int] = None,
    max_states: Optional[int] = None,
) -> Spline:
    """Smallest flow-up spline with k leading zeros and positive remaining
    entries, minimizing entries left to right, found by exhaustive search
    (desk scale only).

    ``search_bound`` caps the searched entries; the default is the provably
    sufficient bound of :func:`oracle.smallest_class_bound`.
    """
    budget = None
    if search_bound is not None or max_states is not None:
        budget = oracle.EnumerationBudget(
            search_bound if search_bound is not None else oracle.smallest_class_bound(cycle),
            max_states if max_states is not None else oracle.DEFAULT_MAX_STATES,
        )
    return oracle.brute_force_smallest(cycle, k, budget)


def smallest_basis(
    cycle: EdgeLabeledCycle,
    search_bound: Optional[int] = None,
    max_states: Optional[int] = None,
) -> FlowUpBasis:
    """Flow-up basis whose element k is the smallest flow-up class, with the
    all-ones spline at index 0 (desk scale only)."""
    elements = [trivial_spline(cycle.n)]
    for k in range(1, cycle.n):
        elements.append(smallest_flow_up_class(cycle, k, search_bound, max_states))
    return FlowUpBasis(cycle, tuple(elements), "smallest")
