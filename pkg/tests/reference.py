"""Independent reference arithmetic used as a test oracle.

Polynomials are sparse {exponent: coefficient} dicts over plain Python
ints and every operation is schoolbook.  Nothing here touches the
package under test; agreement between the two implementations is the
point.
"""
from __future__ import annotations


def rnorm(d: dict, p: int) -> dict:
    return {e: c % p for e, c in d.items() if c % p}


def radd(a: dict, b: dict, p: int) -> dict:
    out = dict(a)
    for e, c in b.items():
        out[e] = out.get(e, 0) + c
    return rnorm(out, p)


def rsub(a: dict, b: dict, p: int) -> dict:
    out = dict(a)
    for e, c in b.items():
        out[e] = out.get(e, 0) - c
    return rnorm(out, p)


def rmul(a: dict, b: dict, p: int) -> dict:
    out: dict = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
    return rnorm(out, p)


def rdeg(d: dict):
    return max(d) if d else None


def rdivmod(a: dict, b: dict, p: int):
    if not b:
        raise ZeroDivisionError
    q: dict = {}
    r = rnorm(dict(a), p)
    db = rdeg(b)
    inv = pow(b[db], p - 2, p)
    while r and rdeg(r) >= db:
        dr = rdeg(r)
        c = r[dr] * inv % p
        q[dr - db] = c
        r = rsub(r, rmul({dr - db: c}, b, p), p)
    return rnorm(q, p), r


def rpow(a: dict, k: int, p: int) -> dict:
    out = {0: 1}
    for _ in range(k):
        out = rmul(out, a, p)
    return out


def rseries(num: dict, den: dict, p: int, order: int) -> dict:
    """Terms of num/den with exponent >= order, by descending long division."""
    out: dict = {}
    r = rnorm(dict(num), p)
    dd = rdeg(den)
    inv = pow(den[dd], p - 2, p)
    while r and rdeg(r) - dd >= order:
        e = rdeg(r) - dd
        c = r[rdeg(r)] * inv % p
        out[e] = c
        r = rsub(r, rmul({e: c}, den, p), p)
    return rnorm(out, p)


def rcf(num: dict, den: dict, p: int) -> list:
    """Euclidean quotient list of num/den."""
    quotients = []
    a, b = rnorm(dict(num), p), rnorm(dict(den), p)
    while b:
        q, r = rdivmod(a, b, p)
        quotients.append(q)
        a, b = b, r
    return quotients


def rcontinuants(quotients: list, p: int) -> list:
    """(x_n, y_n) pairs from K_n = a_n*K_{n-1} + K_{n-2}."""
    x_prev, y_prev = {0: 1}, {}
    x, y = rnorm(dict(quotients[0]), p), {0: 1}
    out = [(x, y)]
    for a in quotients[1:]:
        x, x_prev = radd(rmul(a, x, p), x_prev, p), x
        y, y_prev = radd(rmul(a, y, p), y_prev, p), y
        out.append((x, y))
    return out


def poly_dict(poly) -> dict:
    """Sparse view of a package Poly, for comparisons."""
    return {e: int(c) for e, c in enumerate(poly.coeffs) if c}


def dict_coeffs(d: dict, p: int) -> list:
    """Ascending dense list for feeding dicts back into the package."""
    if not d:
        return []
    out = [0] * (max(d) + 1)
    for e, c in d.items():
        out[e] = c % p
    return out
