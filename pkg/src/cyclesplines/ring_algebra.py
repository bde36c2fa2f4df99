"""Products and decompositions in flow-up bases.

Because element k of a flow-up basis is the only one with a nonzero entry
at position k + 1 among elements k..n - 1, coefficients can be peeled off
front to back by exact division (forward substitution).  On top of that
this module provides the closed-form products of king basis elements, the
closed-form three-cycle table in the triangulation basis, and a generic
product path (componentwise multiply, then decompose) that works in any
flow-up basis on any cycle.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .bases import FlowUpBasis, king_basis, triangulation_basis
from .errors import DimensionError, InvariantViolationError, NotInSpanError
from .spline_core import Spline, SplineLike, spline_entries


def decompose(s: SplineLike, basis: FlowUpBasis) -> tuple[int, ...]:
    """Coefficients c with s equal to the sum of c[k] * basis[k].

    Raises :class:`NotInSpanError` when any peeling step hits a non-integer
    quotient or a nonzero remainder survives the last element; a vector that
    fails the edge congruences always does one or the other, because every
    integer combination of basis elements satisfies them.
    """
    entries = spline_entries(s)
    n = len(basis)
    if len(entries) != n:
        raise DimensionError(f"expected {n} entries, got {len(entries)}")
    work = list(entries)
    coefficients = []
    for k, element in enumerate(basis.elements):
        lead = element.entries[k]
        value = work[k]
        if value % lead != 0:
            raise NotInSpanError(
                f"entry {value} at position {k + 1} is not a multiple of the "
                f"leading entry {lead} of basis element {k}"
            )
        c = value // lead
        coefficients.append(c)
        if c:
            work = [w - c * e for w, e in zip(work, element.entries)]
    if any(work):
        raise NotInSpanError("nonzero remainder after peeling every basis element")
    return tuple(coefficients)


def reconstruct(coefficients: Sequence[int], basis: FlowUpBasis) -> Spline:
    """Inverse of :func:`decompose`: the integer combination of basis elements."""
    n = len(basis)
    if len(coefficients) != n:
        raise DimensionError(f"expected {n} coefficients, got {len(coefficients)}")
    total = [0] * n
    for c, element in zip(coefficients, basis.elements):
        if c:
            total = [t + c * e for t, e in zip(total, element.entries)]
    return Spline(tuple(total))


@dataclass(frozen=True)
class ProductDecomposition:
    """A product of two basis elements written in the basis itself.

    ``terms`` holds (basis index, coefficient) pairs in ascending index
    order with zero coefficients dropped; ``i <= j`` always, products being
    symmetric.
    """

    i: int
    j: int
    terms: tuple[tuple[int, int], ...]

    def coefficients(self, n: int) -> tuple[int, ...]:
        """Dense coefficient vector of length n."""
        dense = [0] * n
        for index, coefficient in self.terms:
            dense[index] = coefficient
        return tuple(dense)

    def reconstruct(self, basis: FlowUpBasis) -> Spline:
        return reconstruct(self.coefficients(len(basis)), basis)

    def render(self, symbol: str = "G") -> str:
        """Human form such as ``3*K3 + 48*K4``; the empty sum renders as 0."""
        if not self.terms:
            return "0"
        parts = []
        for index, coefficient in self.terms:
            body = f"{symbol}{index}" if abs(coefficient) == 1 else f"{abs(coefficient)}*{symbol}{index}"
            if not parts:
                parts.append(body if coefficient > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if coefficient > 0 else f"- {body}")
        return " ".join(parts)


def _terms(pairs: Sequence[tuple[int, int]]) -> tuple[tuple[int, int], ...]:
    return tuple((index, coefficient) for index, coefficient in pairs if coefficient)


def product_in_basis(basis: FlowUpBasis, i: int, j: int) -> ProductDecomposition:
    """Generic product path: componentwise multiply, then decompose.

    Works in any flow-up basis on any cycle; the closed forms below are
    cross-checked against it.
    """
    n = len(basis)
    if not (0 <= i <= n - 1 and 0 <= j <= n - 1):
        raise IndexError(f"indices must be in [0, {n - 1}], got ({i}, {j})")
    if i > j:
        i, j = j, i
    coefficients = decompose(basis[i] * basis[j], basis)
    return ProductDecomposition(i, j, _terms(tuple(enumerate(coefficients))))


def _king_product_in(basis: FlowUpBasis, i: int, j: int) -> ProductDecomposition:
    n = len(basis)
    if not (0 <= i <= n - 1 and 0 <= j <= n - 1):
        raise IndexError(f"indices must be in [0, {n - 1}], got ({i}, {j})")
    if i > j:
        i, j = j, i
    if i == 0:
        return ProductDecomposition(i, j, ((j, 1),))
    tails = [element.entries[-1] for element in basis.elements]
    k_last = tails[n - 1]
    if j == n - 1:
        return ProductDecomposition(i, j, _terms(((n - 1, tails[i]),)))
    l_i = basis.cycle.label(i)
    numerator = tails[j] * (tails[i] - l_i)
    if numerator % k_last != 0:
        raise InvariantViolationError(
            f"king product coefficient {numerator}/{k_last} is not integral"
        )
    return ProductDecomposition(
        i, j, _terms(((j, l_i), (n - 1, numerator // k_last)))
    )


def king_product(cycle, i: int, j: int) -> ProductDecomposition:
    """Closed-form product of king elements i and j.

    For 1 <= i <= j <= n - 2 the product is

        l_i * K_j  +  (k_j * (k_i - l_i) / k_{n-1}) * K_{n-1}

    where k_i is the last entry of element i; the second coefficient is
    always an integer.  Products with element 0 copy the other element, and
    j = n - 1 collapses to k_i * K_{n-1}.  Index order does not matter.
    """
    return _king_product_in(king_basis(cycle), i, j)


def _verify_cell(basis: FlowUpBasis, cell: ProductDecomposition) -> None:
    product = basis[cell.i] * basis[cell.j]
    if cell.reconstruct(basis) != product:
        raise InvariantViolationError(
            f"table cell ({cell.i}, {cell.j}) does not reconstruct the "
            f"componentwise product"
        )
    if decompose(product, basis) != cell.coefficients(len(basis)):
        raise InvariantViolationError(
            f"table cell ({cell.i}, {cell.j}) disagrees with decompose"
        )


def king_multiplication_table(cycle) -> list[list[ProductDecomposition]]:
    """Symmetric n x n table of king products; every cell is double-checked
    against the componentwise product via :func:`decompose` before return."""
    basis = king_basis(cycle)
    n = len(basis)
    table: list[list[ProductDecomposition]] = [[None] * n for _ in range(n)]  # type: ignore[list-item]
    for i in range(n):
        for j in range(i, n):
            cell = _king_product_in(basis, i, j)
            _verify_cell(basis, cell)
            table[i][j] = table[j][i] = cell
    return table


def triangulation_table_3cycle(cycle) -> list[list[ProductDecomposition]]:
    """Closed-form 3 x 3 multiplication table in the triangulation basis.

    Writing (0, h2, h3) for element 1 and (0, 0, t3) for element 2:

        H1*H1 = h2*H1 + phi*H2   with   phi = h3 * (h3 - h2) / t3,
        H1*H2 = h3*H2,           H2*H2 = t3*H2,

    and row 0 is the identity row.  phi is always an integer (it can be
    negative).  Only defined for three-cycles; longer cycles go through
    :func:`product_in_basis`.
    """
    if cycle.n != 3:
        raise DimensionError(
            f"the closed-form table exists only for 3-cycles, got n = {cycle.n}"
        )
    basis = triangulation_basis(cycle)
    h2, h3 = basis[1].entries[1], basis[1].entries[2]
    t3 = basis[2].entries[2]
    numerator = h3 * (h3 - h2)
    if numerator % t3 != 0:
        raise InvariantViolationError(
            f"triangulation product coefficient {numerator}/{t3} is not integral"
        )
    phi = numerator // t3
    cells = {
        (0, 0): ((0, 1),),
        (0, 1): ((1, 1),),
        (0, 2): ((2, 1),),
        (1, 1): ((1, h2), (2, phi)),
        (1, 2): ((2, h3),),
        (2, 2): ((2, t3),),
    }
    table: list[list[ProductDecomposition]] = [[None] * 3 for _ in range(3)]  # type: ignore[list-item]
    for (i, j), pairs in cells.items():
        cell = ProductDecomposition(i, j, _terms(pairs))
        _verify_cell(basis, cell)
        table[i][j] = table[j][i] = cell
    return table
