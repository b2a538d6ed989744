"""Pure-Python search kernels.

The kernel speaks plain integers and tuples so the compiled twin in
``_csearch.pyx`` can be swapped in without touching callers.

Records returned by :func:`search_reduced` are tuples
``(kind, b, moves, carries)``:

* ``kind`` 0 (bottom row) or 1 (last row);
* ``b`` the exponent with final carry ``p**alpha * q**b`` for last-row records,
  0 otherwise;
* ``moves`` the pending right-move count for each trail row, top first;
* ``carries`` the ``(s_tilde, s)`` pair pushed out of each non-bottom row.

Bottom-row records have one more entry in ``moves`` than in ``carries``.
"""

from __future__ import annotations


def _digit_sums(p, alpha):
    size = p**alpha
    table = [0] * size
    for m in range(1, size):
        table[m] = table[m // p] + m % p
    return table


def search_reduced(p, q, alpha, n, max_depth):
    """Depth-first search over carries, memoised on the search state.

    A state is (variables left, carry-in, depth). ``max_depth`` is the largest
    step index whose row can still sit at a q-exponent admissible for a
    solution; deeper states are pruned.
    """
    P = p**alpha
    pm1 = p - 1
    dsum = _digit_sums(p, alpha)
    memo = {}

    def is_q_power(m):
        b = 0
        while m % q == 0:
            m //= q
            b += 1
        return b if m == 1 else -1

    def suffixes(m, st_in, s_in, depth):
        key = (m, st_in, s_in, depth)
        hit = memo.get(key)
        if hit is not None:
            return hit
        out = []
        if depth > max_depth:
            memo[key] = out
            return out
        if depth > 1 and st_in == 0:
            # bottom row: completion of s_in plus l right moves uses all m parts
            comp = P - s_in
            cnt0 = dsum[comp]
            extra = m - cnt0
            if extra >= 0 and extra % pm1 == 0:
                l = extra // pm1
                if l * pm1 <= comp - cnt0:
                    out.append((0, 0, (l,), ()))
        side = m + st_in + (1 if s_in else 0)
        for s_out in range(P):
            head, low = divmod(q * s_out - s_in, P)
            N = dsum[low]
            base = head - st_in
            st_out = 0 if base >= 0 else (-base + q - 1) // q
            if st_out == 0 and s_out == 0:
                st_out = 1
            while True:
                first = q * st_out + base
                cnt = first + N
                if cnt > m:
                    break
                lmax = (first * P + low - cnt) // pm1
                l = 0
                rem = m - cnt
                while rem >= 0 and l <= lmax:
                    if rem == 0:
                        if s_out == 0 and (depth > 1 or l > 0) and side >= q:
                            b = is_q_power(st_out)
                            if b >= 0:
                                out.append((1, b, (l,), ((st_out, 0),)))
                    else:
                        for kind, b, ls, cs in suffixes(rem, st_out, s_out, depth + 1):
                            out.append((kind, b, (l,) + ls, ((st_out, s_out),) + cs))
                    l += 1
                    rem -= pm1
                st_out += 1
        memo[key] = out
        return out

    return suffixes(n, 0, 0, 1)


def find_record(p, q, alpha, n, max_depth):
    """First record (in search order) whose solution uses p, or None.

    Dead states are remembered together with whether the prefix already puts
    a unit outside column 1, since that decides if a pure-q ending is usable.
    """
    P = p**alpha
    pm1 = p - 1
    dsum = _digit_sums(p, alpha)
    dead = set()

    def is_q_power(m):
        b = 0
        while m % q == 0:
            m //= q
            b += 1
        return b if m == 1 else -1

    def walk(m, st_in, s_in, depth, used_p):
        key = (m, st_in, s_in, depth, used_p)
        if key in dead or depth > max_depth:
            return None
        if depth > 1 and st_in == 0:
            comp = P - s_in
            cnt0 = dsum[comp]
            extra = m - cnt0
            if extra >= 0 and extra % pm1 == 0:
                l = extra // pm1
                if l * pm1 <= comp - cnt0:
                    return (0, 0, (l,), ())
        side = m + st_in + (1 if s_in else 0)
        for s_out in range(P):
            head, low = divmod(q * s_out - s_in, P)
            N = dsum[low]
            base = head - st_in
            st_out = 0 if base >= 0 else (-base + q - 1) // q
            if st_out == 0 and s_out == 0:
                st_out = 1
            while True:
                first = q * st_out + base
                cnt = first + N
                if cnt > m:
                    break
                lmax = (first * P + low - cnt) // pm1
                l = 0
                rem = m - cnt
                while rem >= 0 and l <= lmax:
                    now_p = used_p or l > 0 or low != 0
                    if rem == 0:
                        if now_p and s_out == 0 and (depth > 1 or l > 0) and side >= q:
                            b = is_q_power(st_out)
                            if b >= 0:
                                return (1, b, (l,), ((st_out, 0),))
                    else:
                        sub = walk(rem, st_out, s_out, depth + 1, now_p)
                        if sub is not None:
                            kind, b, ls, cs = sub
                            return (kind, b, (l,) + ls, ((st_out, s_out),) + cs)
                    l += 1
                    rem -= pm1
                st_out += 1
        dead.add(key)
        return None

    return walk(n, 0, 0, 1, False)
