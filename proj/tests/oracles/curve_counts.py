#!/usr/bin/env python3
"""Brute-force point counts over F_{p^m} for the curves used in the tests.

Independent of the C++ code: its own field arithmetic (lex-least irreducible
modulus found by exhaustive divisor search) and plain enumeration.
"""
import itertools
import sys


def polymulmod(a, b, mod, p):
    n = len(mod) - 1
    prod = [0] * (2 * n)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            prod[i + j] = (prod[i + j] + x * y) % p
    for k in range(2 * n - 1, n - 1, -1):
        c = prod[k]
        if c:
            for i in range(n + 1):
                prod[k - n + i] = (prod[k - n + i] - c * mod[i]) % p
    return prod[:n]


def has_factor(f, p):
    deg = len(f) - 1
    for d in range(1, deg // 2 + 1):
        for tail in itertools.product(range(p), repeat=d):
            g = list(tail) + [1]
            r = f[:]
            for k in range(deg, d - 1, -1):
                c = r[k]
                if c:
                    for i in range(d + 1):
                        r[k - d + i] = (r[k - d + i] - c * g[i]) % p
            if not any(r[:d]):
                return True
    return False


def least_irreducible(p, n):
    if n == 1:
        return [0, 1]
    for tail in itertools.product(range(p), repeat=n):
        f = list(tail) + [1]
        if not has_factor(f, p):
            return f
    raise ValueError


def elements(p, n):
    for t in itertools.product(range(p), repeat=n):
        yield list(t[::-1])


def count(p, m, f, nvars):
    mod = least_irreducible(p, m)
    elems = [tuple(e) for e in elements(p, m)]
    total = 0
    for pt in itertools.product(elems, repeat=nvars):
        if f(pt, lambda a, b: polymulmod(list(a), list(b), mod, p), p, m):
            total += 1
    return total


def add(a, b, p):
    return tuple((x + y) % p for x, y in zip(a, b))


def curve_e2(pt, mul, p, m):
    # y^2 + y + x^3 over F_2
    x, y = pt
    v = add(add(mul(y, y), y, p), mul(x, mul(x, x)), p)
    return not any(v)


def curve_f3(pt, mul, p, m):
    # y^2 - x^3 - x^2 - 1 over F_3
    x, y = pt
    x2 = mul(x, x)
    one = tuple([1] + [0] * (m - 1))
    rhs = add(add(mul(x2, x), x2, p), one, p)
    v = tuple((a - b) % p for a, b in zip(mul(y, y), rhs))
    return not any(v)


if __name__ == "__main__":
    for name, p, f, upto in (("E2", 2, curve_e2, 6), ("F3", 3, curve_f3, 6)):
        affine = [count(p, m, f, 2) for m in range(1, upto + 1)]
        print(name, "affine", affine, "projective", [a + 1 for a in affine])
    sys.exit(0)
