"""Independent brute-force oracles for the test suite.

Everything here recomputes expected values by a different route from the
package: integer eta-product expansion instead of Eisenstein monomials,
exhaustive power enumeration instead of factored-order computation, explicit
matrix orbits on the projective line instead of pattern formulas, and root
counting instead of distinct-degree factorization.  Keep these naive.
"""


def sigma(j, n):
    """Sum of d^j over the divisors d of n, as an exact integer."""
    return sum(d ** j for d in range(1, n + 1) if n % d == 0)


def poly_mul_int(a, b, nmax):
    """Truncated product of integer coefficient lists."""
    out = [0] * (nmax + 1)
    for i, ai in enumerate(a[: nmax + 1]):
        if ai:
            for j, bj in enumerate(b[: nmax + 1 - i]):
                out[i + j] += ai * bj
    return out


def eta24_int(nmax):
    """Coefficients of q * prod_{m>=1} (1 - q^m)^24 over Z, indices 0..nmax."""
    f = [0] * (nmax + 1)
    f[0] = 1
    for m in range(1, nmax + 1):
        for i in range(nmax, m - 1, -1):
            f[i] -= f[i - m]
    f3 = poly_mul_int(poly_mul_int(f, f, nmax), f, nmax)
    f6 = poly_mul_int(f3, f3, nmax)
    f12 = poly_mul_int(f6, f6, nmax)
    f24 = poly_mul_int(f12, f12, nmax)
    return [0] + f24[:nmax]


def eisenstein_int(k, nmax):
    """Integer E4 or E6 coefficients, indices 0..nmax."""
    const, j = {4: (240, 3), 6: (-504, 5)}[k]
    return [1] + [const * sigma(j, n) for n in range(1, nmax + 1)]


def brute_order(a, m):
    """Multiplicative order of a mod m by successive powers."""
    assert a % m != 0
    x, n = a % m, 1
    while x != 1:
        x = x * a % m
        n += 1
    return n


def quad_mul(x, y, c, m):
    """(a0 + a1*s)(b0 + b1*s) with s^2 = c, as a coefficient pair mod m."""
    a0, a1 = x
    b0, b1 = y
    return ((a0 * b0 + c * a1 * b1) % m, (a0 * b1 + a1 * b0) % m)


def brute_quad_order(x, c, m):
    """Order of a0 + a1*sqrt(c) in F_{m^2} by successive multiplication."""
    assert x != (0, 0)
    y, n = x, 1
    while y != (1, 0):
        y = quad_mul(y, x, c, m)
        n += 1
    return n


def p1_points(ell):
    """The ell + 1 points of the projective line: infinity plus affine."""
    return [(1, 0)] + [(x, 1) for x in range(ell)]


def p1_normalize(u, v, ell):
    u, v = u % ell, v % ell
    if v:
        return (u * pow(v, -1, ell) % ell, 1)
    return (1, 0)


def companion_orbits(t, d, ell):
    """Orbit-length multiset of [[0, -d], [1, t]] acting on the projective line."""
    seen = set()
    lengths = []
    for start in p1_points(ell):
        if start in seen:
            continue
        n = 0
        pt = start
        while pt not in seen:
            seen.add(pt)
            n += 1
            u, v = pt
            pt = p1_normalize(-d * v, u + t * v, ell)
        lengths.append(n)
    return tuple(sorted(lengths))


def poly_roots(coeffs, p):
    """All roots in F_p of an ascending integer coefficient list."""
    roots = []
    for x in range(p):
        acc = 0
        for c in reversed(coeffs):
            acc = (acc * x + c) % p
        if acc == 0:
            roots.append(x)
    return roots


def naive_is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def sl2_matrix_count(N):
    """|SL_2(Z/N)| by exhaustive enumeration; index oracle for small N."""
    count = 0
    for a in range(N):
        for b in range(N):
            for c in range(N):
                for d in range(N):
                    if (a * d - b * c) % N == 1:
                        count += 1
    return count
