"""Fox free differential calculus and Alexander polynomials.

The free derivative of a relator word is abelianized on the fly
(every generator maps to t), rows of derivatives form the Alexander
matrix, and the polynomial is the determinant of a square reduction of
that matrix computed by fraction-free elimination over Z[t, t^-1].
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .groups import abelianization
from .knots import KnotExpr, KnotSemanticError
from .laurent import LaurentPoly, laurent_det
from .wirtinger import GroupPresentation, presentation_of_knot
from .words import Word, total_exponent


def fox_derivative(w: Word, gen: int) -> LaurentPoly:
    """Abelianized free derivative d(w)/d(gen) with every generator sent to t.

    Computed by one pass over the word: d(uv) = du + ab(u) dv with
    d(g) = 1 and d(g^-1) = -t^-1.
    """
    if gen <= 0:
        raise ValueError("generator index must be positive")
    acc: dict[int, int] = {}
    exp = 0
    for x in w:
        if x > 0:
            if x == gen:
                acc[exp] = acc.get(exp, 0) + 1
            exp += 1
        else:
            exp -= 1
            if -x == gen:
                acc[exp] = acc.get(exp, 0) - 1
    if not acc:
        return LaurentPoly.zero()
    lo = min(acc)
    hi = max(acc)
    return LaurentPoly(lo, [acc.get(k, 0) for k in range(lo, hi + 1)])


@dataclass(frozen=True)
class AlexMatrix:
    """Matrix of abelianized Fox derivatives: one row per relator, one column per generator."""

    rows: int
    cols: int
    entries: tuple[tuple[LaurentPoly, ...], ...]


def alexander_matrix(p: GroupPresentation) -> AlexMatrix:
    entries = tuple(
        tuple(fox_derivative(r, j) for j in range(1, p.generator_count + 1))
        for r in p.relators
    )
    return AlexMatrix(rows=len(p.relators), cols=p.generator_count, entries=entries)


def _check_knot_presentation(p: GroupPresentation):
    """A knot-group presentation abelianizes to Z with all generators equal.

    Equivalent check: every relator has total exponent sum zero (so
    g_i -> t is a well-defined homomorphism onto Z) and the relator
    exponent matrix has rank n-1 with unit invariant factors.
    """
    for r in p.relators:
        if total_exponent(r) != 0:
            raise ValueError(
                "not a knot-group presentation: relator with nonzero total exponent"
            )
    ab = abelianization(p)
    if ab.free_rank != 1 or ab.torsion:
        raise ValueError(
            f"not a knot-group presentation: abelianization is not Z (got {ab})"
        )


def reduced_alexander_blocks(
    p: GroupPresentation,
    column: int | None = None,
    drop_relator: int | None = None,
) -> tuple[list[list[list[LaurentPoly]]], int]:
    """Square blocks presenting the Alexander module.

    Deletes the chosen generator column (the meridian by default, an
    optional relator row on request), then repeatedly strips rows whose
    single nonzero entry is a unit together with their column (the
    generator they kill), drops freely-trivial rows, and splits what is
    left into column-connected components.  A component with one more
    row than columns sheds its last row: for crossing relators that row
    is the redundant one, so each block is square and presents the
    factor's Alexander module.

    Returns ``(blocks, free_columns)`` where ``free_columns`` counts
    generators no surviving relator touches (nonzero only for
    presentations with free summands, never for knot groups).
    """
    n = p.generator_count
    column = p.meridian if column is None else column
    if n and not (1 <= column <= n):
        raise ValueError("column index out of range")
    if drop_relator is not None and not (0 <= drop_relator < len(p.relators)):
        raise ValueError("relator index out of range")
    kept_cols = [j for j in range(1, n + 1) if j != column]
    col_pos = {j: i for i, j in enumerate(kept_cols)}
    rows: list[list[LaurentPoly]] = []
    for i, r in enumerate(p.relators):
        if drop_relator is not None and i == drop_relator:
            continue
        rows.append([fox_derivative(r, j) for j in kept_cols])

    ncols = len(kept_cols)
    live_cols = list(range(ncols))
    # strip unit-singleton rows (and zero rows) until stable
    changed = True
    while changed:
        changed = False
        next_rows = []
        kill_col: int | None = None
        for row in rows:
            support = [c for c in live_cols if not row[c].is_zero()]
            if not support:
                changed = True
                continue
            if len(support) == 1 and row[support[0]].is_unit() and kill_col is None:
                kill_col = support[0]
                changed = True
                continue
            next_rows.append(row)
        rows = next_rows
        if kill_col is not None:
            live_cols.remove(kill_col)

    # split by column-connected components
    parent = {c: c for c in live_cols}

    def find(c: int) -> int:
        while parent[c] != c:
            parent[c] = parent[parent[c]]
            c = parent[c]
        return c

    row_support = []
    for row in rows:
        support = [c for c in live_cols if not row[c].is_zero()]
        row_support.append(support)
        root = find(support[0])
        for c in support[1:]:
            parent[find(c)] = root

    comp_cols: dict[int, list[int]] = {}
    for c in live_cols:
        comp_cols.setdefault(find(c), []).append(c)
    comp_rows: dict[int, list[int]] = {root: [] for root in comp_cols}
    for i, support in enumerate(row_support):
        comp_rows[find(support[0])].append(i)

    free_columns = sum(1 for root, cols in comp_cols.items() if not comp_rows[root])
    blocks: list[list[list[LaurentPoly]]] = []
    for root in sorted(comp_cols):
        cols = sorted(comp_cols[root])
        ridx = comp_rows[root]
        if not ridx:
            continue
        if len(ridx) == len(cols) + 1:
            ridx = ridx[:-1]
        if len(ridx) != len(cols):
            raise ValueError(
                "presentation does not reduce to square Alexander blocks "
                f"({len(ridx)} relators against {len(cols)} generators)"
            )
        blocks.append([[rows[i][c] for c in cols] for i in ridx])
    return blocks, free_columns


def alexander_polynomial(
    p: GroupPresentation,
    column: int | None = None,
    drop_relator: int | None = None,
) -> LaurentPoly:
    """Alexander polynomial of a knot-group presentation, normalized.

    ``column`` picks the deleted generator column (default: the
    meridian); ``drop_relator`` forces a particular relator row out
    first.  Both choices only move the answer by units.
    """
    _check_knot_presentation(p)
    blocks, free_columns = reduced_alexander_blocks(p, column, drop_relator)
    if free_columns:
        return LaurentPoly.zero()
    det = LaurentPoly.one()
    for block in blocks:
        det = det * laurent_det(block)
        if det.is_zero():
            break
    return det.normalize()


def alexander_of_knot(expr: KnotExpr) -> LaurentPoly:
    """Alexander polynomial of a knot expression via its Wirtinger presentation."""
    return alexander_polynomial(presentation_of_knot(expr))


def torus_alexander(p: int, q: int) -> LaurentPoly:
    """Closed form for torus knots: (1-t)(1-t^pq) / ((1-t^p)(1-t^q)), exactly divided."""
    if p < 2 or q < 2:
        raise KnotSemanticError("torus_alexander requires p, q >= 2")
    if gcd(p, q) != 1:
        raise KnotSemanticError(f"T({p},{q}) is not a knot (gcd={gcd(p, q)})")
    one = LaurentPoly.one()
    num = (one - LaurentPoly.t_power(1)) * (one - LaurentPoly.t_power(p * q))
    den = (one - LaurentPoly.t_power(p)) * (one - LaurentPoly.t_power(q))
    return num.div_exact(den).normalize()
