"""Division-free determinants over arbitrary commutative rings."""

from __future__ import annotations


def charpoly_berkowitz(a: list[list], zero, one) -> list:
    """Coefficients ``[c0, c1, ..., cn]`` of ``det(x I - a) = c0 x^n + ... + cn``.

    Berkowitz's algorithm uses only ring operations, so it works for matrices
    whose entries are polynomials in several indeterminates.
    """
    n = len(a)
    if n == 0:
        return [one]
    vec = [one, zero - a[n - 1][n - 1]]
    for k in range(n - 2, -1, -1):
        m = n - 1 - k
        row = a[k][k + 1:]
        col = [a[i][k] for i in range(k + 1, n)]
        sub = [r[k + 1:] for r in a[k + 1:]]
        toeplitz = [one, zero - a[k][k]]
        v = col
        for t in range(m):
            s = zero
            for x, y in zip(row, v):
                s = s + x * y
            toeplitz.append(zero - s)
            if t < m - 1:
                v = [_dot(r, v, zero) for r in sub]
        new = []
        for i in range(m + 2):
            s = zero
            for j in range(min(i, m) + 1):
                s = s + toeplitz[i - j] * vec[j]
            new.append(s)
        vec = new
    return vec


def _dot(r, v, zero):
    s = zero
    for x, y in zip(r, v):
        s = s + x * y
    return s


def det(a: list[list], zero=0, one=1):
    n = len(a)
    if n == 0:
        return one
    c = charpoly_berkowitz(a, zero, one)[n]
    return c if n % 2 == 0 else zero - c


def det_bareiss(a: list[list], exquo):
    """Fraction-free Gaussian elimination; ``exquo(x, y)`` must divide exactly."""
    m = [list(r) for r in a]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = None
    for k in range(n - 1):
        if not m[k][k]:
            piv = next((i for i in range(k + 1, n) if m[i][k]), None)
            if piv is None:
                return m[k][k] * 0
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                v = m[i][j] * m[k][k] - m[i][k] * m[k][j]
                m[i][j] = v if prev is None else exquo(v, prev)
        prev = m[k][k]
    d = m[n - 1][n - 1]
    return d if sign > 0 else -d
