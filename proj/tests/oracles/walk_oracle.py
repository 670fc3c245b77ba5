"""Brute-force oracle for frozen test values.

Enumerates admissible walks by plain recursion over step sequences with
Python Fractions and evaluates the closed forms directly. Independent of
the C++ dynamic-programming path; run it to regenerate the constants that
tests/test_beta.cpp and tests/test_walks.cpp freeze.
"""
from fractions import Fraction as F
from math import factorial, comb


def walks(n, start, target, steps, counts):
    """All admissible walks using exactly counts[i] copies of steps[i]."""
    out = []

    def rec(v, seq, left):
        if sum(left) == 0:
            if v == target:
                out.append(tuple(seq))
            return
        if seq and v in (n, -n):
            return
        for i, st in enumerate(steps):
            if left[i]:
                left[i] -= 1
                rec(v + st, seq + [st], left)
                left[i] += 1

    rec(start, [], list(counts))
    return sorted(out)


def h1(n, start, seq, z=F(0)):
    v = start
    w = F(1)
    for st in seq[:-1]:
        v += st
        w /= (n * n - v * v + z)
    return w


def shell(n, kind, R, S, a, b, p_neg, q_pos, z=F(0)):
    start, target = (-n, n) if kind == "X" else (n, -n)
    ws = walks(n, start, target, [-2 * R, 2 * S], [p_neg, q_pos])
    return ws, sum(a ** p_neg * b ** q_pos * h1(n, start, w, z) for w in ws)


def outer(s, m):
    p = 1
    for t in range(1, m):
        p *= s * t - 1
    return F(2, (4 * s) ** m * factorial(m) * p)


def inner(s, m):
    tot = F(0)
    P = 1
    for t in range(1, m):
        P *= s * t - 1
    for tau in range(1, m):
        a = 1
        for t in range(1, tau):
            a *= s * t - 1
        c = 1
        for t in range(1, m - tau):
            c *= s * t - 1
        tot += F(a, factorial(tau)) * F(c, factorial(m - tau))
    return tot / (4 * s) ** m / F(P) ** 2


def A(alpha, k):
    if k == 0:
        return F(0)
    r = alpha
    for t in range(1, k):
        r *= (t - alpha)
    return r / factorial(k)


if __name__ == "__main__":
    print("xi walks n=5:", shell(5, "X", 1, 3, 1, 1, 1, 2))
    print("H+(3,3) =", inner(3, 3), " enum n=8 inner:",
          sum(h1(8, -8, w) for w in walks(8, -8, 8, [-2, 6], [1, 3])[1:-1]))
    print("H-(3,3) =", outer(3, 3))
    print("ratio_H(3,3) =", inner(3, 3) / outer(3, 3),
          1 - A(F(2, 3), 3) / (2 * A(F(1, 3), 3)))
    print("ratio_H(4,2) =", inner(4, 2) / outer(4, 2))
    print("h*-(R1S3,m2) =", F(4) * F(1, 4) ** 6 / factorial(5) ** 2)
    print("beta- n=5 shell0 =", shell(5, "Y", 1, 3, 1, 1, 5, 0)[1])
    for k in range(3):
        ws, val = shell(8, "X", 1, 3, 1, 1, 1 + 3 * k, 3 + k)
        print("n=8 X kappa", k, len(ws), val, float(val))
    ws, val = shell(6, "X", 1, 3, 1, 1, 0, 2)
    print("n=6 x*", ws, val)
    # alpha example: R=S=1, n=4, two-step closed walks
    print("alpha n=4:", sum(h1(4, 4, w) for w in walks(4, 4, 4, [-2, 2], [1, 1])))
    print("C(7,3)", comb(7, 3))
