"""Independent oracle for the genus-average theta series (sympy exact solve)."""
from fractions import Fraction as F
import sympy as sp
from scan_oracle import mul, power, theta3, theta2, theta4


def inv(a, T):
    # constant term 1
    r = {0: F(1)}
    for e in range(1, T):
        s = sum(a.get(k, 0) * r.get(e - k, 0) for k in range(1, e + 1))
        if s:
            r[e] = -s
    return r


def g2h2(T):
    # via Jacobi: g2 = theta2^4/theta3^4, h2 = theta4^4/theta3^4 (independent of the product form)
    i3 = inv(power(theta3(T), 4, T), T)
    return mul(power(theta2(T), 4, T), i3, T), mul(power(theta4(T), 4, T), i3, T)


def avg(n, T):
    g, h = g2h2(T)
    K = n // 4
    t3n = power(theta3(T), n, T)
    A = [mul(t3n, power(g, j, T), T) for j in range(K + 1)]
    B = [mul(t3n, power(h, j, T), T) for j in range(K + 1)]
    c = sp.symbols(f"c0:{K+1}")
    eqs = []
    coeff = lambda S, i: S.get(4 * i, 0)
    alpha = lambda i: sum(c[j] * sp.Rational(coeff(A[j], i).numerator, coeff(A[j], i).denominator) for j in range(K + 1))
    eqs.append(alpha(0))
    for i in range(1, K):
        eqs.append(alpha(4 * i) - 2 ** (n - 2) * alpha(i))
    tot = sum(c[j] * sp.Rational(coeff(A[j], 0) + coeff(B[j], 0)) for j in range(K + 1))
    eqs.append(tot - 1)
    sol = sp.solve(eqs, c)
    out = []
    for i in range(0, 4):
        v = sum(sol[c[j]] * sp.Rational((coeff(A[j], i) + coeff(B[j], i)).numerator, (coeff(A[j], i) + coeff(B[j], i)).denominator) for j in range(K + 1))
        out.append(v)
    return [sol[x] for x in c], out

if __name__ == "__main__":
    cs, out = avg(33, 4 * 40)
    print(cs)
    print(out)
