#!/usr/bin/env python3
"""Regenerate data/named_groups.json.

Generator data for the non-parametric catalog entries (PSL2(q) in its
projective and exceptional actions, M11, M12).  Each entry's order is
checked here by brute-force closure and again by the C++ loader.
"""
import itertools
import json
import sys


def compose(p, q):
    # left to right: x -> q[p[x]]
    return tuple(q[x] for x in p)


def closure(gens, n):
    ident = tuple(range(n))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for e in frontier:
            for g in gens:
                h = compose(e, g)
                if h not in seen:
                    seen.add(h)
                    nxt.append(h)
        frontier = nxt
    return seen


def from_cycles(cycles, n, one_based=False):
    img = list(range(n))
    for c in cycles:
        c = [x - 1 for x in c] if one_based else list(c)
        for i, x in enumerate(c):
            img[x] = c[(i + 1) % len(c)]
    return tuple(img)


def cycle_string(p):
    seen = set()
    out = []
    for i in range(len(p)):
        if i in seen or p[i] == i:
            continue
        c = [i]
        seen.add(i)
        j = p[i]
        while j != i:
            c.append(j)
            seen.add(j)
            j = p[j]
        out.append("(" + " ".join(map(str, c)) + ")")
    return "".join(out) if out else "()"


def psl2_prime(q):
    """PSL2(q) on the projective line {0..q-1, inf=q}."""
    inf = q
    n = q + 1

    def mobius(a, b, c, d):
        img = []
        for x in range(n):
            if x == inf:
                img.append(inf if c == 0 else (a * pow(c, -1, q)) % q)
                continue
            den = (c * x + d) % q
            if den == 0:
                img.append(inf)
            else:
                img.append(((a * x + b) * pow(den, -1, q)) % q)
        return tuple(img)

    squares = sorted({(x * x) % q for x in range(1, q)})
    gen_sq = next(s for s in squares
                  if len({pow(s, k, q) for k in range(q)}) == len(squares))
    return [mobius(1, 1, 0, 1), mobius(gen_sq, 0, 0, 1), mobius(0, q - 1, 1, 0)]


def psl2_8():
    """PSL2(8) = PGL2(8) on the 9 points of the projective line over GF(8)."""
    # GF(8) as bit polynomials modulo x^3 + x + 1.
    def mul(a, b):
        r = 0
        for i in range(3):
            if (b >> i) & 1:
                r ^= a << i
        for i in (4, 3):
            if (r >> i) & 1:
                r ^= 0b1011 << (i - 3)
        return r

    def inv(a):
        return next(b for b in range(1, 8) if mul(a, b) == 1)

    inf = 8
    add1 = tuple([x ^ 1 for x in range(8)] + [inf])
    omega = 0b010
    scale = tuple([mul(omega, x) for x in range(8)] + [inf])
    recip = tuple([inf if x == 0 else inv(x) for x in range(8)] + [0])
    return [add1, scale, recip]


def fano_collineations():
    lines = [frozenset(((0 + i) % 7, (1 + i) % 7, (3 + i) % 7)) for i in range(7)]
    lineset = set(lines)
    good = [p for p in itertools.permutations(range(7))
            if all(frozenset(p[x] for x in l) in lineset for l in lines)]
    return good


def order_of(p):
    n = len(p)
    ident = tuple(range(n))
    k, q = 1, p
    while q != ident:
        q = compose(q, p)
        k += 1
    return k


def psl2_7_deg7():
    group = fano_collineations()
    assert len(group) == 168
    seven = from_cycles([(0, 1, 2, 3, 4, 5, 6)], 7)
    for inv in group:
        if order_of(inv) == 2 and len(closure([seven, inv], 7)) == 168:
            return [seven, inv]
    raise RuntimeError("no generating involution found")


def coset_action(group_elems, sub, gens):
    sub = set(sub)
    reps = []
    label = {}
    for g in sorted(group_elems):
        if g in label:
            continue
        idx = len(reps)
        reps.append(g)
        for h in sub:
            label[compose(h, g)] = idx
    out = []
    for g in gens:
        out.append(tuple(label[compose(r, g)] for r in reps))
    return out


def psl2_11_deg11():
    gens12 = psl2_prime(11)
    elems = closure(gens12, 12)
    assert len(elems) == 660
    invol = sorted(e for e in elems if order_of(e) == 2)
    order3 = sorted(e for e in elems if order_of(e) == 3)
    for a in invol:
        for b in order3:
            if order_of(compose(a, b)) != 5:
                continue
            sub = closure([a, b], 12)
            if len(sub) == 60:
                return coset_action(elems, sub, gens12)
    raise RuntimeError("no A5 subgroup found")


def entry(name, q, degree, order, gens):
    got = len(closure(gens, degree))
    if got != order:
        sys.exit(f"{name}@{degree}: closure order {got} != {order}")
    return {
        "id": name if q is None else f"PSL2({q})@{degree}",
        "degree": degree,
        "order": order,
        "generators": [cycle_string(g) for g in gens],
    }


def main():
    m11 = [from_cycles([(1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11)], 11, True),
           from_cycles([(3, 7, 11, 8), (4, 10, 5, 6)], 11, True)]
    m12 = [from_cycles([(1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11)], 12, True),
           from_cycles([(3, 7, 11, 8), (4, 10, 5, 6)], 12, True),
           from_cycles([(1, 12), (2, 11), (3, 6), (4, 8), (5, 9), (7, 10)], 12, True)]
    groups = [
        entry("PSL2", 7, 7, 168, psl2_7_deg7()),
        entry("PSL2", 7, 8, 168, psl2_prime(7)),
        entry("PSL2", 8, 9, 504, psl2_8()),
        entry("PSL2", 11, 11, 660, psl2_11_deg11()),
        entry("PSL2", 11, 12, 660, psl2_prime(11)),
        entry("M11", None, 11, 7920, m11),
        entry("M12", None, 12, 95040, m12),
    ]
    doc = {"format": "hitfin-named-groups", "version": 1, "groups": groups}
    json.dump(doc, sys.stdout, indent=2)
    sys.stdout.write("\n")


if __name__ == "__main__":
    main()
