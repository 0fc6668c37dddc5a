"""Sparse vectors and polynomials as plain dicts with Fraction coefficients.

A vector is a ``dict`` mapping basis keys to nonzero ``Fraction`` values.
A polynomial in ``x`` is the same thing with integer exponents as keys, so
elements of the density modules are literally their coefficient dicts.
"""

from fractions import Fraction

Q = Fraction


def clean(v):
    return {k: Q(c) for k, c in v.items() if c}


def axpy(acc, a, v):
    """acc += a * v, in place; drops entries that cancel."""
    if not a:
        return acc
    for k, c in v.items():
        s = acc.get(k, 0) + a * c
        if s:
            acc[k] = s
        else:
            acc.pop(k, None)
    return acc


def add(*vs):
    out = {}
    for v in vs:
        axpy(out, 1, v)
    return out


def sub(u, v):
    return axpy(dict(u), -1, v)


def scale(a, v):
    if not a:
        return {}
    return {k: a * c for k, c in v.items()}


def basis_vec(k, c=1):
    return {k: Q(c)}


def linear_map(f, v):
    """Extend f (basis key -> vector) linearly to the vector v."""
    out = {}
    for k, c in v.items():
        axpy(out, c, f(k))
    return out


def bilinear_map(f, u, v):
    out = {}
    for a, ca in u.items():
        for b, cb in v.items():
            axpy(out, ca * cb, f(a, b))
    return out


def fmt(v, name=str):
    if not v:
        return "0"
    parts = []
    for k in sorted(v, key=repr):
        c = v[k]
        parts.append(f"{c}*{name(k)}" if c != 1 else name(k))
    return " + ".join(parts)


# polynomials in x


def poly_mul(p, r):
    out = {}
    for a, ca in p.items():
        for b, cb in r.items():
            s = out.get(a + b, 0) + ca * cb
            if s:
                out[a + b] = s
            else:
                out.pop(a + b, None)
    return out


def poly_deriv(p, order=1):
    for _ in range(order):
        p = {n - 1: n * c for n, c in p.items() if n != 0}
    return p


def poly_integrate(p):
    """Term-by-term antiderivative with zero constant."""
    return {n + 1: Q(c) / (n + 1) for n, c in p.items()}


def poly_eval(p, x):
    return sum((Q(c) * Q(x) ** n for n, c in p.items()), Q(0))


def poly_det(m):
    """Determinant of a square matrix of polynomials (cofactor expansion)."""
    n = len(m)
    if n == 0:
        return {0: Q(1)}
    if n == 1:
        return dict(m[0][0])
    out = {}
    for j in range(n):
        if not m[0][j]:
            continue
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        axpy(out, (-1) ** j, poly_mul(m[0][j], poly_det(minor)))
    return out
