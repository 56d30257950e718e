"""Independent reference computations used only by the tests.

None of these import the package's arithmetic; they recompute the same
quantities by a different route (recurrences, brute force, direct
coefficient manipulation).
"""
from fractions import Fraction


def pascal_triangle(N):
    rows = [[1]]
    for n in range(1, N + 1):
        prev = rows[-1]
        rows.append([1] + [prev[k - 1] + prev[k] for k in range(1, n)] + [1])
    return rows


def _padd(a, b):
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    return out


def q_pascal_polys(N):
    """Gaussian binomials as integer polynomials in q via
    [n k] = [n-1 k-1] + q^k [n-1 k]."""
    rows = [[[1]]]
    for n in range(1, N + 1):
        prev = rows[-1]
        row = [[1]]
        for k in range(1, n):
            shifted = [0] * k + prev[k]
            row.append(_padd(prev[k - 1], shifted))
        row.append([1])
        rows.append(row)
    return rows


def eval_poly(coeffs, q):
    return sum(c * q**i for i, c in enumerate(coeffs))


def gaussian_binomial_table(N, q):
    return [[eval_poly(p, q) for p in row] for row in q_pascal_polys(N)]


def fib_by_iteration(k):
    seq = [0, 1, 1]
    while len(seq) <= k:
        seq.append(seq[-1] + seq[-2])
    return seq[k]


def count_subspaces(n, k, q=2):
    """Number of k-dim subspaces of GF(q)^n by brute force over reduced
    row-echelon forms; only tiny cases."""
    total = 0
    for pivots in _combos(range(n), k):
        free = 0
        for r, p in enumerate(pivots):
            free += sum(1 for c in range(p + 1, n) if c not in pivots)
        total += q**free
    return total


def _combos(items, k):
    items = list(items)
    if k == 0:
        yield ()
        return
    for i, x in enumerate(items):
        for rest in _combos(items[i + 1 :], k - 1):
            yield (x,) + rest


# -- polynomial-level operator oracle ----------------------------------------


def apply_dF(Fvals, coeffs, N):
    """d_F on a coefficient list of length N+1; Fvals[n] = F_n."""
    out = [Fraction(0)] * (N + 1)
    for n in range(1, N + 1):
        out[n - 1] += Fvals[n] * coeffs[n]
    return out


def apply_xhat(Fvals, coeffs, N):
    out = [Fraction(0)] * (N + 1)
    for n in range(N):
        out[n + 1] += Fraction(n + 1, Fvals[n + 1]) * coeffs[n]
    return out


def apply_poly_of(f, op, coeffs):
    """sum f_i op^i (coeffs), op a function on coefficient lists."""
    out = [Fraction(0)] * len(coeffs)
    power = list(coeffs)
    for c in f:
        out = [a + Fraction(c) * b for a, b in zip(out, power)]
        power = op(power)
    return out


def monomial(j, N):
    return [Fraction(int(i == j)) for i in range(N + 1)]

