"""Exact linear-programming feasibility over the rationals.

Feasibility only: a phase-1 simplex over ``Fraction`` with Bland's rule,
so termination is guaranteed and the returned point satisfies every
constraint exactly. There is no objective, no tolerance and no floating
point anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence, Tuple

from .fields import GFElement

Relation = str  # "<=" or "="
Constraint = Tuple[Sequence, Relation, object]


def _to_fraction(x) -> Fraction:
    if isinstance(x, GFElement):
        raise ValueError("lp_feasible is defined over Q only (GF(p) has no order)")
    return Fraction(x)


def lp_feasible(constraints: Sequence[Constraint]) -> Optional[tuple]:
    """Exact feasible point of ``{row . x <= rhs}`` / ``{row . x == rhs}``.

    Returns a tuple of Fractions satisfying every constraint, or None iff
    the system is infeasible. Free variables are split into nonnegative
    pairs and a phase-1 simplex minimizes the artificial variables.
    """
    if not constraints:
        return ()
    parsed = []
    width = None
    for row, rel, rhs in constraints:
        if rel not in ("<=", "="):
            raise ValueError(f"unknown relation {rel!r}")
        frow = [_to_fraction(x) for x in row]
        if width is None:
            width = len(frow)
        elif len(frow) != width:
            raise ValueError("constraint rows differ in width")
        parsed.append((frow, rel, _to_fraction(rhs)))
    n = width or 0

    num_le = sum(1 for _, rel, _ in parsed if rel == "<=")
    zero = Fraction(0)
    one = Fraction(1)

    rows = []
    rhs_col = []
    basis = []
    slack_pos = 0
    for frow, rel, c in parsed:
        line = [frow[j] for j in range(n)]
        line += [-frow[j] for j in range(n)]
        line += [zero] * num_le
        slack_col = None
        if rel == "<=":
            slack_col = 2 * n + slack_pos
            line[slack_col] = one
            slack_pos += 1
        if c < 0:
            line = [-x for x in line]
            c = -c
            slack_col = None  # slack coefficient is now -1, unusable as basic
        rows.append(line)
        rhs_col.append(c)
        basis.append(slack_col)

    art_cols = []
    total = 2 * n + num_le + sum(1 for b in basis if b is None)
    for line in rows:
        line += [zero] * (total - len(line))
    next_art = 2 * n + num_le
    for i, b in enumerate(basis):
        if b is None:
            rows[i][next_art] = one
            basis[i] = next_art
            art_cols.append(next_art)
            next_art += 1

    art_set = set(art_cols)
    # Reduced costs for "minimize sum of artificials" with artificials basic.
    obj = [one if j in art_set else zero for j in range(total)]
    for i, b in enumerate(basis):
        if b in art_set:
            obj = [o - a for o, a in zip(obj, rows[i])]

    while True:
        enter = None
        for j in range(total):
            if obj[j] < 0:
                enter = j  # Bland: smallest improving index
                break
        if enter is None:
            break
        leave = None
        best_ratio = None
        for i in range(len(rows)):
            a = rows[i][enter]
            if a > 0:
                ratio = rhs_col[i] / a
                if (
                    best_ratio is None
                    or ratio < best_ratio
                    or (ratio == best_ratio and basis[i] < basis[leave])
                ):
                    best_ratio = ratio
                    leave = i
        if leave is None:
            raise RuntimeError("phase-1 objective unbounded; should be impossible")
        piv = rows[leave][enter]
        if piv != one:
            rows[leave] = [x / piv for x in rows[leave]]
            rhs_col[leave] = rhs_col[leave] / piv
        for i in range(len(rows)):
            if i != leave and rows[i][enter] != 0:
                f = rows[i][enter]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[leave])]
                rhs_col[i] = rhs_col[i] - f * rhs_col[leave]
        if obj[enter] != 0:
            f = obj[enter]
            obj = [x - f * y for x, y in zip(obj, rows[leave])]
        basis[leave] = enter

    infeasibility = sum(
        (rhs_col[i] for i, b in enumerate(basis) if b in art_set), zero
    )
    if infeasibility != 0:
        return None

    values = {}
    for i, b in enumerate(basis):
        values[b] = rhs_col[i]
    point = tuple(
        values.get(j, zero) - values.get(n + j, zero) for j in range(n)
    )
    return point


def satisfies(point: Sequence, constraints: Sequence[Constraint]) -> bool:
    """Exact check that a point meets every constraint."""
    for row, rel, rhs in constraints:
        lhs = sum((Fraction(a) * Fraction(x) for a, x in zip(row, point)), Fraction(0))
        rhs = Fraction(rhs)
        if rel == "=" and lhs != rhs:
            return False
        if rel == "<=" and lhs > rhs:
            return False
    return True
