"""Pure-Python integer kernels.

Same signatures and outputs as the compiled ``_kernels`` extension; used when
the extension is not built or ``SCULPTGRAPH_PURE_PYTHON`` is set.

``candidates[x]`` lists the column indices ``y`` with a nonzero entry in row
``x``; a directed perfect matching picks one ``y = sigma(x)`` per row with all
``sigma(x)`` distinct.
"""

from __future__ import annotations


def permanent_int(rows):
    """Permanent of a square integer matrix via Ryser's formula in Gray-code order."""
    n = len(rows)
    if n == 0:
        return 1
    for r in rows:
        if len(r) != n:
            raise ValueError("matrix must be square")
    row_sums = [0] * n
    total = 0
    subset = 0
    for k in range(1, 1 << n):
        # column to toggle is the lowest set bit of k
        j = (k & -k).bit_length() - 1
        subset ^= 1 << j
        if subset >> j & 1:
            for i in range(n):
                row_sums[i] += rows[i][j]
        else:
            for i in range(n):
                row_sums[i] -= rows[i][j]
        prod = 1
        for s in row_sums:
            if s == 0:
                prod = 0
                break
            prod *= s
        if prod:
            # sign (-1)^(n - |S|)
            if (n - bin(subset).count("1")) & 1:
                total -= prod
            else:
                total += prod
    return total


def _search(candidates, visit):
    n = len(candidates)
    assigned = [-1] * n
    used = [False] * n

    def rec(depth):
        if depth == n:
            visit(assigned)
            return
        # branch on the unassigned row with the fewest free columns
        best, best_free = -1, None
        for x in range(n):
            if assigned[x] != -1:
                continue
            free = [y for y in candidates[x] if not used[y]]
            if best_free is None or len(free) < len(best_free):
                best, best_free = x, free
                if not free:
                    return
        for y in best_free:
            assigned[best] = y
            used[y] = True
            rec(depth + 1)
            used[y] = False
        assigned[best] = -1

    rec(0)


def directed_pms(candidates):
    """All directed perfect matchings, lexicographically sorted."""
    found = []
    _search(candidates, lambda a: found.append(tuple(a)))
    found.sort()
    return found


def count_directed_pms(candidates):
    count = [0]

    def bump(_):
        count[0] += 1

    _search(candidates, bump)
    return count[0]
