#!/usr/bin/env python3
"""Generate the fixed reduction-polynomial table for GF(p^k), p^k <= 8192, k >= 2.

For each (p, k) we pick the monic degree-k polynomial over GF(p) with the
smallest coefficient encoding (N = sum c_i * p^i over the k low coefficients)
that is primitive: irreducible (Rabin's test) and with x a generator of the
multiplicative group. Output is a C++ initializer list, one entry per line.
"""

import sys


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def prime_factors(n: int):
    fs = set()
    d = 2
    while d * d <= n:
        while n % d == 0:
            fs.add(d)
            n //= d
        d += 1
    if n > 1:
        fs.add(n)
    return sorted(fs)


# Polynomials are coefficient lists, ascending degree, over GF(p).

def poly_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def poly_mul(a, b, p):
    if not a or not b:
        return []
    r = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                r[i + j] = (r[i + j] + ai * bj) % p
    return poly_trim(r)


def poly_mod(a, f, p):
    a = a[:]
    df = len(f) - 1
    inv_lead = pow(f[-1], p - 2, p)
    while len(a) - 1 >= df and poly_trim(a):
        da = len(a) - 1
        c = (a[-1] * inv_lead) % p
        shift = da - df
        for i, fi in enumerate(f):
            a[i + shift] = (a[i + shift] - c * fi) % p
        poly_trim(a)
    return a


def poly_pow_mod(base, e, f, p):
    r = [1]
    b = poly_mod(base, f, p)
    while e:
        if e & 1:
            r = poly_mod(poly_mul(r, b, p), f, p)
        b = poly_mod(poly_mul(b, b, p), f, p)
        e >>= 1
    return r


def poly_gcd(a, b, p):
    a, b = a[:], b[:]
    while poly_trim(b):
        a = poly_mod(a, b + [0] * 0, p) if len(b) else a
        # ensure b monic-safe mod
        r = poly_mod(a, b, p)
        a, b = b, r
    return a


def x_pow_q_minus_x(k_exp, f, p):
    """x^(p^k_exp) - x mod f"""
    xp = poly_pow_mod([0, 1], p ** k_exp, f, p)
    r = xp[:]
    while len(r) < 2:
        r.append(0)
    r[1] = (r[1] - 1) % p
    return poly_trim(r)


def is_irreducible(f, p):
    """Rabin's irreducibility test for monic f of degree k."""
    k = len(f) - 1
    if k <= 0:
        return False
    if x_pow_q_minus_x(k, f, p):
        return False
    for r in prime_factors(k):
        g = poly_gcd(f, x_pow_q_minus_x(k // r, f, p), p)
        if len(poly_trim(g[:])) - 1 != 0:
            return False
    return True


def is_primitive(f, p, k):
    """f irreducible and ord(x) = p^k - 1 in GF(p)[x]/(f)."""
    if not is_irreducible(f, p):
        return False
    q1 = p ** k - 1
    for r in prime_factors(q1):
        if poly_pow_mod([0, 1], q1 // r, f, p) == [1]:
            return False
    return True


def minimal_primitive(p, k):
    # coefficients c_0..c_{k-1} encoded as N in base p, ascending lexicographic
    for n in range(p ** k):
        coeffs = []
        m = n
        for _ in range(k):
            coeffs.append(m % p)
            m //= p
        f = coeffs + [1]
        if is_primitive(f, p, k):
            return f
    raise RuntimeError(f"no primitive polynomial found for ({p},{k})")


def main():
    limit = 8192
    entries = []
    p = 2
    while p * p <= limit:
        if is_prime(p):
            k = 2
            while p ** k <= limit:
                f = minimal_primitive(p, k)
                entries.append((p, k, f))
                k += 1
        p += 1
    entries.sort(key=lambda e: (e[0] ** e[1], e[0]))
    for p, k, f in entries:
        coeffs = ", ".join(str(c) for c in f)
        print(f"    {{{p}, {k}, {{{coeffs}}}}},   // GF({p**k})")
    print(f"// {len(entries)} entries", file=sys.stderr)


if __name__ == "__main__":
    main()
