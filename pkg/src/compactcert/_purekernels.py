"""Pure Python implementations of the hot verdict kernels.

Same contracts as the compiled ``_kernels`` extension; selected at import
time by :mod:`compactcert.kernels` when the extension is unavailable (or
when ``COMPACTCERT_PURE`` is set). Arbitrary-precision integers mean the
integer verdict never bails out here.
"""

from __future__ import annotations

from itertools import product

BACKEND = "pure"


def gf_solve_verdict(rows: list, p: int) -> bool:
    """Consistency of a homogenized system mod p (last column = constant).

    True iff no row reduces to "0 = nonzero". Plain Gaussian elimination
    over the coefficient columns.
    """
    m = len(rows)
    if m == 0:
        return True
    work = [[x % p for x in row] for row in rows]
    acols = len(work[0]) - 1
    pr = 0
    for pc in range(acols):
        piv = None
        for r in range(pr, m):
            if work[r][pc]:
                piv = r
                break
        if piv is None:
            continue
        if piv != pr:
            work[pr], work[piv] = work[piv], work[pr]
        inv = pow(work[pr][pc], p - 2, p)
        prow = work[pr] = [(x * inv) % p for x in work[pr]]
        for r in range(pr + 1, m):
            f = work[r][pc]
            if f:
                work[r] = [(a - f * b) % p for a, b in zip(work[r], prow)]
        pr += 1
        if pr == m:
            return True
    return all(work[r][acols] == 0 for r in range(pr, m))


def int_solve_verdict(rows: list) -> int:
    """Consistency over Q of integer homogenized rows: 1 yes, 0 no.

    Bareiss fraction-free elimination; entries stay exact minors, so the
    divisions are exact. Never returns the compiled backend's -1 overflow
    sentinel (Python integers do not overflow).
    """
    m = len(rows)
    if m == 0:
        return 1
    work = [list(row) for row in rows]
    ncols = len(work[0])
    acols = ncols - 1
    prev = 1
    pr = 0
    for pc in range(acols):
        piv = None
        for r in range(pr, m):
            if work[r][pc]:
                piv = r
                break
        if piv is None:
            continue
        if piv != pr:
            work[pr], work[piv] = work[piv], work[pr]
        p_ = work[pr][pc]
        prow = work[pr]
        for r in range(pr + 1, m):
            x = work[r][pc]
            wr = work[r]
            work[r] = [(p_ * wr[j] - x * prow[j]) // prev for j in range(ncols)]
        prev = p_
        pr += 1
        if pr == m:
            return 1
    for r in range(pr, m):
        if work[r][acols]:
            return 0
    return 1


def poly_scan(
    modulus: int,
    nvars: int,
    coeffs: list,
    exps_flat: list,
    offsets: list,
    first_lo: int,
    first_hi: int,
):
    """First assignment (lexicographic) killing every polynomial, or None.

    Polynomials arrive flattened: poly i owns terms
    ``offsets[i]..offsets[i+1]``; term t has coefficient ``coeffs[t]`` and
    exponents ``exps_flat[t*nvars + v]``. The first variable is restricted
    to ``[first_lo, first_hi)`` so callers can partition the scan.
    """
    npolys = len(offsets) - 1
    if nvars == 0:
        ok = all(
            sum(coeffs[t] for t in range(offsets[i], offsets[i + 1])) % modulus == 0
            for i in range(npolys)
        )
        return () if ok else None

    max_exp = max(exps_flat, default=0)
    ptab = [[pow(v, e, modulus) for e in range(max_exp + 1)] for v in range(modulus)]

    rest = [range(modulus)] * (nvars - 1)
    for first in range(first_lo, first_hi):
        for tail in product(*rest):
            assignment = (first,) + tail
            for i in range(npolys):
                acc = 0
                for t in range(offsets[i], offsets[i + 1]):
                    term = coeffs[t]
                    base = t * nvars
                    for v in range(nvars):
                        e = exps_flat[base + v]
                        if e:
                            term *= ptab[assignment[v]][e]
                    acc += term
                if acc % modulus:
                    break
            else:
                return assignment
    return None
