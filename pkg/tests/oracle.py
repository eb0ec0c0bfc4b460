"""Naive reference computations used to cross-check the package.

Everything here loops over basis indices with Fractions and shares no code
with the package beyond reading tables through ``.tolist()``.
"""

from fractions import Fraction
from itertools import product


def table(t):
    return [[[Fraction(v) for v in row] for row in plane] for plane in t.tolist()]


def matrix(m):
    return [[Fraction(v) for v in row] for row in m.tolist()]


def mul_vec(tab, x, y):
    n = len(tab)
    out = [Fraction(0)] * n
    for i, j, k in product(range(n), repeat=3):
        if x[i] and y[j] and tab[i][j][k]:
            out[k] += x[i] * y[j] * tab[i][j][k]
    return out


def unit(n, i):
    return [Fraction(int(k == i)) for k in range(n)]


def is_associative(tab):
    n = len(tab)
    for i, j, k in product(range(n), repeat=3):
        x, y, z = unit(n, i), unit(n, j), unit(n, k)
        if mul_vec(tab, mul_vec(tab, x, y), z) != mul_vec(tab, x, mul_vec(tab, y, z)):
            return False
    return True


def leg_product(tab, r, first, s, second):
    """``r_{first} ∘ s_{second}`` on three tensor slots, slots numbered 1..3.

    A slot occupied by both factors holds the product (first factor left).
    """
    n = len(tab)
    out = {}
    for p, q, u, v in product(range(n), repeat=4):
        c = r[p][q] * s[u][v]
        if not c:
            continue
        slots = {1: [], 2: [], 3: []}
        slots[first[0]].append(unit(n, p))
        slots[first[1]].append(unit(n, q))
        slots[second[0]].append(unit(n, u))
        slots[second[1]].append(unit(n, v))
        vecs = []
        for k in (1, 2, 3):
            f = slots[k]
            vecs.append(mul_vec(tab, f[0], f[1]) if len(f) == 2 else f[0])
        for a, b, d in product(range(n), repeat=3):
            w = vecs[0][a] * vecs[1][b] * vecs[2][d]
            if w:
                out[(a, b, d)] = out.get((a, b, d), Fraction(0)) + c * w
    return out


def add(*terms):
    out = {}
    for sign, t in terms:
        for k, v in t.items():
            out[k] = out.get(k, Fraction(0)) + sign * v
    return {k: v for k, v in out.items() if v}


def sub_tables(x, y):
    n = len(x)
    return [[[x[i][j][k] - y[i][j][k] for k in range(n)] for j in range(n)] for i in range(n)]


def sum_tables(x, y):
    n = len(x)
    return [[[x[i][j][k] + y[i][j][k] for k in range(n)] for j in range(n)] for i in range(n)]


def bracket_table(m):
    n = len(m)
    return [[[m[i][j][k] - m[j][i][k] for k in range(n)] for j in range(n)] for i in range(n)]


def aybe(mul, r):
    return add((1, leg_product(mul, r, (1, 2), r, (1, 3))),
               (1, leg_product(mul, r, (1, 3), r, (2, 3))),
               (-1, leg_product(mul, r, (2, 3), r, (1, 2))))


def deq(succ, prec, r):
    star = sum_tables(succ, prec)
    return add((1, leg_product(star, r, (1, 2), r, (1, 3))),
               (-1, leg_product(prec, r, (1, 3), r, (2, 3))),
               (-1, leg_product(succ, r, (2, 3), r, (1, 2))))


def cybe(bracket, r):
    return add((1, leg_product(bracket, r, (1, 2), r, (1, 3))),
               (1, leg_product(bracket, r, (1, 2), r, (2, 3))),
               (1, leg_product(bracket, r, (1, 3), r, (2, 3))))


def seq(mul, r):
    return add((-1, leg_product(mul, r, (1, 2), r, (1, 3))),
               (1, leg_product(mul, r, (1, 2), r, (2, 3))),
               (1, leg_product(bracket_table(mul), r, (1, 3), r, (2, 3))))


def sparse(t):
    """Nonzero entries of a package tensor as a dict."""
    return {idx: v for idx, v in t.nonzero()}
