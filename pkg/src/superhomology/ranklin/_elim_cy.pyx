# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled elimination kernel: the pure-Python algorithm with C integers.

Same pivot rule and same gcd-reduced updates as ``_elim_py``, but rows are
kept as sorted C arrays and all arithmetic runs in int64.  Values and
multipliers are capped at 2^30 so every product stays below 2^61; a matrix
that outgrows the cap raises :class:`NeedsBigint` and the caller reruns it
on the arbitrary-precision path.
"""

from libc.stdlib cimport free, malloc

DEF VALUE_CAP = 1073741824  # 2^30


class NeedsBigint(ArithmeticError):
    """Entries outgrew the int64 fast path; rerun with Python integers."""


cdef struct Row:
    int* cols
    long long* vals
    int size
    int cap


cdef inline long long c_gcd(long long a, long long b) noexcept:
    if a < 0:
        a = -a
    if b < 0:
        b = -b
    while b:
        a, b = b, a % b
    return a


cdef inline int row_find(Row* row, int col) noexcept:
    """Binary search; returns position or -1."""
    cdef int lo = 0, hi = row.size, mid
    while lo < hi:
        mid = (lo + hi) >> 1
        if row.cols[mid] < col:
            lo = mid + 1
        else:
            hi = mid
    if lo < row.size and row.cols[lo] == col:
        return lo
    return -1


cdef int row_alloc(Row* row, int cap) except -1:
    row.cols = <int*> malloc(cap * sizeof(int))
    row.vals = <long long*> malloc(cap * sizeof(long long))
    if row.cols == NULL or row.vals == NULL:
        raise MemoryError()
    row.size = 0
    row.cap = cap
    return 0


cdef void row_free(Row* row) noexcept:
    if row.cols != NULL:
        free(row.cols)
        row.cols = NULL
    if row.vals != NULL:
        free(row.vals)
        row.vals = NULL
    row.size = 0
    row.cap = 0


def eliminate(rows):
    """Mirror of ``_elim_py.eliminate`` for rows of int64-sized integers."""
    cdef int nrows = len(rows)
    if nrows == 0:
        return 0, [], 0
    cdef Row* data = <Row*> malloc(nrows * sizeof(Row))
    if data == NULL:
        raise MemoryError()
    cdef int r, i, n
    for r in range(nrows):
        data[r].cols = NULL
        data[r].vals = NULL
        data[r].size = 0
        data[r].cap = 0

    cdef dict col_count = {}
    cdef list pivots = []
    cdef long long fill = 0
    cdef int max_col = -1

    try:
        # load and validate magnitudes
        for r in range(nrows):
            row = rows[r]
            n = len(row)
            if n == 0:
                continue
            row_alloc(&data[r], n)
            items = sorted(row.items())
            for i in range(n):
                c, v = items[i]
                if v > VALUE_CAP or v < -VALUE_CAP:
                    raise NeedsBigint()
                data[r].cols[i] = c
                data[r].vals[i] = v
                if c > max_col:
                    max_col = c
            data[r].size = n

        _run(data, nrows, max_col, pivots, &fill)
        return len(pivots), pivots, fill
    finally:
        for r in range(nrows):
            row_free(&data[r])
        free(data)


cdef int _run(Row* data, int nrows, int max_col, list pivots, long long* fill_out) except -1:
    cdef long long* col_count = NULL
    cdef int ncols = max_col + 1
    cdef int r, i, pr, pc, best_size, pos
    cdef long long p, q, g, mp, mq, v, content, fill = 0
    cdef Row merged
    cdef Row* prow
    cdef Row* rrow

    if ncols <= 0:
        fill_out[0] = 0
        return 0
    col_count = <long long*> malloc(ncols * sizeof(long long))
    if col_count == NULL:
        raise MemoryError()
    for i in range(ncols):
        col_count[i] = 0
    for r in range(nrows):
        for i in range(data[r].size):
            col_count[data[r].cols[i]] += 1

    try:
        while True:
            # --- pivot row: fewest nonzeros, lowest index ---
            pr = -1
            best_size = -1
            for r in range(nrows):
                if data[r].size > 0 and (best_size < 0 or data[r].size < best_size):
                    best_size = data[r].size
                    pr = r
            if pr < 0:
                break
            prow = &data[pr]
            # --- pivot column: fewest holding rows, lowest index ---
            pc = prow.cols[0]
            for i in range(1, prow.size):
                if col_count[prow.cols[i]] < col_count[pc]:
                    pc = prow.cols[i]
            pivots.append((pr, pc))
            pos = row_find(prow, pc)
            p = prow.vals[pos]
            for i in range(prow.size):
                col_count[prow.cols[i]] -= 1

            for r in range(nrows):
                if r == pr or data[r].size == 0:
                    continue
                rrow = &data[r]
                pos = row_find(rrow, pc)
                if pos < 0:
                    continue
                q = rrow.vals[pos]
                g = c_gcd(p, q)
                mp = p // g
                mq = q // g
                # merged <- mp*row - mq*prow  (pivot column cancels)
                row_alloc(&merged, rrow.size + prow.size)
                if _merge(rrow, prow, &merged, mp, mq, pc, col_count, &fill) < 0:
                    row_free(&merged)
                    raise NeedsBigint()
                # content strip + cap check
                content = 0
                for i in range(merged.size):
                    content = c_gcd(content, merged.vals[i])
                    if content == 1:
                        break
                if content > 1:
                    for i in range(merged.size):
                        merged.vals[i] //= content
                for i in range(merged.size):
                    v = merged.vals[i]
                    if v > VALUE_CAP or v < -VALUE_CAP:
                        row_free(&merged)
                        raise NeedsBigint()
                row_free(rrow)
                data[r] = merged
                merged.cols = NULL
                merged.vals = NULL
            # retire the pivot row
            row_free(prow)
        fill_out[0] = fill
        return 0
    finally:
        free(col_count)


cdef int _merge(Row* row, Row* prow, Row* out, long long mp, long long mq,
                int pc, long long* col_count, long long* fill) noexcept:
    """out = mp*row - mq*prow, skipping column pc; returns -1 on overflow risk."""
    cdef int a = 0, b = 0, ca, cb, r_new = 0
    cdef long long v
    if mp > VALUE_CAP or mp < -VALUE_CAP or mq > VALUE_CAP or mq < -VALUE_CAP:
        return -1
    while a < row.size or b < prow.size:
        ca = row.cols[a] if a < row.size else 2147483647
        cb = prow.cols[b] if b < prow.size else 2147483647
        if ca < cb:
            v = mp * row.vals[a]
            out.cols[out.size] = ca
            out.vals[out.size] = v
            out.size += 1
            a += 1
        elif cb < ca:
            if cb == pc:
                b += 1
                continue
            v = -mq * prow.vals[b]
            out.cols[out.size] = cb
            out.vals[out.size] = v
            out.size += 1
            col_count[cb] += 1
            fill[0] += 1
            b += 1
        else:
            if ca == pc:
                col_count[pc] -= 1
                a += 1
                b += 1
                continue
            v = mp * row.vals[a] - mq * prow.vals[b]
            if v != 0:
                out.cols[out.size] = ca
                out.vals[out.size] = v
                out.size += 1
            else:
                col_count[ca] -= 1
            a += 1
            b += 1
    return 0
