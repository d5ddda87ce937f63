# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled exact-arithmetic verdict kernels.

Hot loops only: consistency verdicts for small systems (mod p and over Z)
and the brute-force assignment scan over Z/m. Contracts match
``_purekernels``; anything certificate-shaped stays in pure Python.
"""

from libc.stdlib cimport free, malloc

BACKEND = "compiled"

# Bareiss entries are minors of the input; caps chosen so the cross
# product p*a - x*b of two in-range entries cannot overflow int64.
cdef long long _INT_CAP = 1500000000


cdef long long _modpow(long long base, long long exp, long long m) nogil:
    cdef long long result = 1 % m
    base %= m
    while exp > 0:
        if exp & 1:
            result = (result * base) % m
        base = (base * base) % m
        exp >>= 1
    return result


def gf_solve_verdict(list rows, long long p):
    """Consistency of homogenized rows mod p (last column = constant)."""
    cdef Py_ssize_t m = len(rows)
    if m == 0:
        return True
    cdef Py_ssize_t ncols = len(rows[0])
    cdef Py_ssize_t acols = ncols - 1
    cdef long long *a = <long long *> malloc(m * ncols * sizeof(long long))
    if a == NULL:
        raise MemoryError()
    cdef Py_ssize_t i, j, r, pc, piv, pr
    cdef long long inv, f, v
    try:
        for i in range(m):
            row = rows[i]
            for j in range(ncols):
                a[i * ncols + j] = row[j] % p
        pr = 0
        for pc in range(acols):
            piv = -1
            for r in range(pr, m):
                if a[r * ncols + pc] != 0:
                    piv = r
                    break
            if piv < 0:
                continue
            if piv != pr:
                for j in range(ncols):
                    v = a[pr * ncols + j]
                    a[pr * ncols + j] = a[piv * ncols + j]
                    a[piv * ncols + j] = v
            inv = _modpow(a[pr * ncols + pc], p - 2, p)
            for j in range(ncols):
                a[pr * ncols + j] = (a[pr * ncols + j] * inv) % p
            for r in range(pr + 1, m):
                f = a[r * ncols + pc]
                if f != 0:
                    for j in range(ncols):
                        a[r * ncols + j] = (a[r * ncols + j] - f * a[pr * ncols + j]) % p
                        if a[r * ncols + j] < 0:
                            a[r * ncols + j] += p
            pr += 1
            if pr == m:
                return True
        for r in range(pr, m):
            if a[r * ncols + acols] != 0:
                return False
        return True
    finally:
        free(a)


def int_solve_verdict(list rows):
    """Consistency over Q of integer rows: 1 yes, 0 no, -1 overflow bail.

    Fraction-free Bareiss elimination in int64; the caller falls back to
    exact big-integer arithmetic on -1.
    """
    cdef Py_ssize_t m = len(rows)
    if m == 0:
        return 1
    cdef Py_ssize_t ncols = len(rows[0])
    cdef Py_ssize_t acols = ncols - 1
    cdef long long *a = <long long *> malloc(m * ncols * sizeof(long long))
    if a == NULL:
        raise MemoryError()
    cdef Py_ssize_t i, j, r, pc, piv, pr
    cdef long long prev, pval, x, v
    cdef object entry
    try:
        for i in range(m):
            row = rows[i]
            for j in range(ncols):
                entry = row[j]
                if entry > _INT_CAP or entry < -_INT_CAP:
                    return -1
                a[i * ncols + j] = entry
        prev = 1
        pr = 0
        for pc in range(acols):
            piv = -1
            for r in range(pr, m):
                if a[r * ncols + pc] != 0:
                    piv = r
                    break
            if piv < 0:
                continue
            if piv != pr:
                for j in range(ncols):
                    v = a[pr * ncols + j]
                    a[pr * ncols + j] = a[piv * ncols + j]
                    a[piv * ncols + j] = v
            pval = a[pr * ncols + pc]
            for r in range(pr + 1, m):
                x = a[r * ncols + pc]
                for j in range(ncols):
                    a[r * ncols + j] = (pval * a[r * ncols + j] - x * a[pr * ncols + j]) // prev
                    if a[r * ncols + j] > _INT_CAP or a[r * ncols + j] < -_INT_CAP:
                        return -1
            prev = pval
            pr += 1
            if pr == m:
                return 1
        for r in range(pr, m):
            if a[r * ncols + acols] != 0:
                return 0
        return 1
    finally:
        free(a)


def poly_scan(
    long long modulus,
    Py_ssize_t nvars,
    list coeffs,
    list exps_flat,
    list offsets,
    long long first_lo,
    long long first_hi,
):
    """First assignment (lexicographic) killing every polynomial, or None.

    Flattened polynomial layout as in ``_purekernels.poly_scan``; the first
    variable ranges over [first_lo, first_hi) for scan partitioning.
    """
    cdef Py_ssize_t npolys = len(offsets) - 1
    cdef Py_ssize_t nterms = len(coeffs)
    cdef Py_ssize_t i, t, v2, base
    cdef long long acc, term, e

    if nvars == 0:
        for i in range(npolys):
            acc = 0
            for t in range(<Py_ssize_t> offsets[i], <Py_ssize_t> offsets[i + 1]):
                acc = (acc + <long long> coeffs[t]) % modulus
            if acc != 0:
                return None
        return ()

    cdef long long max_exp = 0
    for t in range(nterms * nvars):
        if <long long> exps_flat[t] > max_exp:
            max_exp = <long long> exps_flat[t]

    cdef long long *ccoef = <long long *> malloc(nterms * sizeof(long long))
    cdef long long *cexp = <long long *> malloc(nterms * nvars * sizeof(long long))
    cdef Py_ssize_t *coff = <Py_ssize_t *> malloc((npolys + 1) * sizeof(Py_ssize_t))
    cdef long long *ptab = <long long *> malloc(modulus * (max_exp + 1) * sizeof(long long))
    cdef long long *assign = <long long *> malloc(nvars * sizeof(long long))
    if ccoef == NULL or cexp == NULL or coff == NULL or ptab == NULL or assign == NULL:
        free(ccoef); free(cexp); free(coff); free(ptab); free(assign)
        raise MemoryError()

    cdef long long val, ee
    cdef Py_ssize_t pos
    cdef bint ok, carried
    try:
        for t in range(nterms):
            ccoef[t] = (<long long> coeffs[t]) % modulus
        for t in range(nterms * nvars):
            cexp[t] = <long long> exps_flat[t]
        for i in range(npolys + 1):
            coff[i] = <Py_ssize_t> offsets[i]
        for val in range(modulus):
            ptab[val * (max_exp + 1)] = 1 % modulus
            for ee in range(1, max_exp + 1):
                ptab[val * (max_exp + 1) + ee] = (ptab[val * (max_exp + 1) + ee - 1] * val) % modulus

        assign[0] = first_lo
        for v2 in range(1, nvars):
            assign[v2] = 0
        if first_lo >= first_hi:
            return None
        found = False
        with nogil:
            while True:
                ok = True
                for i in range(npolys):
                    acc = 0
                    for t in range(coff[i], coff[i + 1]):
                        term = ccoef[t]
                        base = t * nvars
                        for v2 in range(nvars):
                            e = cexp[base + v2]
                            if e != 0:
                                term = (term * ptab[assign[v2] * (max_exp + 1) + e]) % modulus
                        acc = (acc + term) % modulus
                    if acc != 0:
                        ok = False
                        break
                if ok:
                    found = True
                    break
                # odometer increment, last variable fastest
                carried = False
                for pos in range(nvars - 1, 0, -1):
                    assign[pos] += 1
                    if assign[pos] < modulus:
                        carried = True
                        break
                    assign[pos] = 0
                if not carried:
                    assign[0] += 1
                    if assign[0] >= first_hi:
                        break
        if not found:
            return None
        return tuple(assign[v2] for v2 in range(nvars))
    finally:
        free(ccoef); free(cexp); free(coff); free(ptab); free(assign)
