"""Pure-Python versions of the hot loops.

Polynomials here are plain ``dict`` objects mapping an integer exponent to an
integer coefficient.  The compiled module ``qtail._kernels`` exports ``poly_add``, ``poly_mul``,
``prepare_table`` and ``run_top`` with the same semantics; ``qtail.kernels``
picks one at import.
"""


def poly_add(a, b):
    out = dict(a)
    for e, c in b.items():
        s = out.get(e, 0) + c
        if s:
            out[e] = s
        else:
            out.pop(e, None)
    return out


def poly_mul(a, b):
    if len(a) > len(b):
        a, b = b, a
    out = {}
    get = out.get
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = ea + eb
            out[e] = get(e, 0) + ca * cb
    return {e: c for e, c in out.items() if c}


def mul_add_into(acc, a, b):
    """acc += a*b in place. May leave zero coefficients behind."""
    get = acc.get
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = ea + eb
            acc[e] = get(e, 0) + ca * cb


def propagate(states, pos, table, target_left, target_right):
    """Push every label state through one crossing at (pos, pos+1).

    ``table[i][j]`` lists ``(k, l, weight)`` for the nonzero R-matrix entries
    with top labels ``(i, j)``.  A target of -1 means the position is still
    touched by a later crossing; otherwise the bottom label there must equal
    the target or the state is dropped.
    """
    out = {}
    for labels, w in states.items():
        row = table[labels[pos]][labels[pos + 1]]
        head = labels[:pos]
        tail = labels[pos + 2:]
        for k, l, r in row:
            if target_left >= 0 and k != target_left:
                continue
            if target_right >= 0 and l != target_right:
                continue
            key = head + (k, l) + tail
            acc = out.get(key)
            if acc is None:
                acc = out[key] = {}
            mul_add_into(acc, w, r)
    result = {}
    for key, acc in out.items():
        acc = {e: c for e, c in acc.items() if c}
        if acc:
            result[key] = acc
    return result


def prepare_table(table):
    """Backend form of an R-matrix table; here the table itself."""
    return table


def run_top(top, steps):
    """Weight of the state sum from labelling ``top`` back to ``top``.

    ``steps`` lists ``(pos, table, freeze_left, freeze_right)`` per crossing,
    tables as returned by :func:`prepare_table`.  Returns a dict polynomial
    (empty if no state survives).
    """
    states = {top: {0: 1}}
    for pos, table, fl, fr in steps:
        states = propagate(states, pos, table,
                           top[pos] if fl else -1, top[pos + 1] if fr else -1)
        if not states:
            return {}
    return states.get(top, {})
