#!/usr/bin/env python3
"""Independent straight-line oracle for the rate functions.

Evaluates every rate expression directly with mpmath at 200 decimal digits,
round-to-nearest.  No interval arithmetic, no shared code with the C++
library.  Run this before touching the C++ tests: the numbers printed here
are the ones frozen into tests/ and the acceptance suite.
"""

from mpmath import mp, mpf, sqrt, ceil, floor, nstr

mp.dps = 200


def theta(beta, l1, l2, l3):
    disc = l1 ** 2 + l2 ** 2 + 2 * l1 * l2 + 8 * beta * l1 * l3 + 4 * beta * l2 * l3
    rho = (l1 + l2 + 2 * beta * l3 + sqrt(disc)) / (2 * beta)
    return (l1 + l2) * (l3 + rho)


def b_bound(alpha2, K, delta):
    kv = K(delta / 4) + delta / 8
    beta = 1 / alpha2 - 1
    return sqrt(kv ** 2 + 2 * theta(beta, kv, kv, delta / 8))


def phi(alpha1, alpha2, K, delta):
    b = b_bound(alpha2, K, delta)
    kv = K(delta / 4) + delta / 8
    return (
        b * max(sqrt(mpf(2)), 4 * b / delta) / (1 - alpha1)
        + alpha1 / (1 - alpha1) * kv
        + delta / 8
    )


def star(a, b):
    return 1 / (1 + 1 / (a / (1 - a) + b / (1 - b)))


def star_many(alphas):
    s = sum(a / (1 - a) for a in alphas)
    return 1 / (1 + 1 / s)


def psi(m, alphas, K, delta):
    assert m >= 2 and len(alphas) == m
    if m == 2:
        return phi(alphas[0], alphas[1], K, delta)
    inner = lambda rho: max(psi(m - 1, alphas[:-1], K, rho), K(rho))
    return phi(star_many(alphas[:-1]), alphas[-1], inner, delta)


def omega_avg(alpha, b, eps):
    return alpha * (1 - alpha) / (4 * b) * eps ** 2


def safe_ceil(x, what):
    # flag values suspiciously close to an integer boundary
    gap = min(x - floor(x), ceil(x) - x)
    if gap < mpf(10) ** -50 and x != floor(x):
        print(f"  !! {what}: value within 1e-50 of integer boundary")
    return int(ceil(x))


def varphi(eps, b, d, afp, omega):
    a6 = afp(eps / 6)
    f1 = (18 * b + 12 * a6) / eps - 1
    n1 = max(0, safe_ceil(f1, "varphi factor 1")) if f1 > 0 else (0 if f1 <= 0 else 0)
    if f1 <= 0:
        n1 = 0
    if n1 == 0:
        return 0, 0, 0
    w = omega(d, eps ** 2 / (27 * b + 18 * a6))
    n2 = safe_ceil(d / w, "varphi factor 2")
    return n1 * n2, n1, n2


def sigma(m, alphas, K, b, d, eps):
    afp = lambda delta: psi(m, alphas, K, delta)
    astar = star_many(alphas)
    om = lambda bb, ee: omega_avg(astar, bb, ee)
    return varphi(eps, b, d, afp, om)


K1 = lambda e: mpf(1)

print("== theta ==")
print("theta(1,1,1,1)       =", nstr(theta(mpf(1), mpf(1), mpf(1), mpf(1)), 30))
print("theta(1/2,1,1,1)     =", nstr(theta(mpf(1) / 2, mpf(1), mpf(1), mpf(1)), 30))
print("theta(1,1.5,1.5,0.5) =", nstr(theta(mpf(1), mpf("1.5"), mpf("1.5"), mpf("0.5")), 30))

print("== b_bound ==")
print("b_bound(1/2,K=1,4) =", nstr(b_bound(mpf(1) / 2, K1, mpf(4)), 30))
print("b_bound(1/2,K=1,1) =", nstr(b_bound(mpf(1) / 2, K1, mpf(1)), 30))

print("== phi ==")
print("phi(1/2,1/2,K=1,4) =", nstr(phi(mpf(1) / 2, mpf(1) / 2, K1, mpf(4)), 30))
print("phi(1/2,1/2,K=1,1) =", nstr(phi(mpf(1) / 2, mpf(1) / 2, K1, mpf(1)), 30))
for dl in (1, 2, 4, 8):
    print(f"phi(1/2,1/2,K=1,{dl}) =", nstr(phi(mpf(1) / 2, mpf(1) / 2, K1, mpf(dl)), 20))

print("== psi ==")
half = mpf(1) / 2
print("psi(2,[1/2]*2,K=1,4) =", nstr(psi(2, [half] * 2, K1, mpf(4)), 30))
print("psi(3,[1/2]*3,K=1,4) =", nstr(psi(3, [half] * 3, K1, mpf(4)), 30))
print("psi(4,[1/2]*4,K=1,4) =", nstr(psi(4, [half] * 4, K1, mpf(4)), 30))

print("== omega ==")
print("omega(1/2,1,2) =", nstr(omega_avg(half, mpf(1), mpf(2)), 10))
print("omega(1/2,2,2) =", nstr(omega_avg(half, mpf(2), mpf(2)), 10))

print("== varphi ==")
stub = lambda d, e: e
v, f1, f2 = varphi(mpf(6), mpf(1), mpf(1), K1, stub)
print(f"varphi(6,1,1,afp=1,stub)   = {v}  (factors {f1} x {f2})")
om_half = lambda b, e: omega_avg(half, b, e)
v, f1, f2 = varphi(mpf(6), mpf(1), mpf(1), K1, om_half)
print(f"varphi(6,1,1,afp=1,w_1/2)  = {v}  (factors {f1} x {f2})")
v, f1, f2 = varphi(mpf(30), mpf(1), mpf(1), K1, stub)
print(f"varphi(30,1,1,afp=1,stub)  = {v}")

print("== sigma ==")
v, f1, f2 = sigma(2, [half] * 2, K1, mpf(1), mpf(1), mpf(6))
print(f"sigma(2,[1/2]*2,K=1,b=1,d=1,eps=6) = {v}  (factors {f1} x {f2})")
for eps in ("6", "3", "1", "0.5"):
    v, f1, f2 = sigma(2, [half] * 2, K1, mpf(1), mpf(1), mpf(eps))
    print(f"sigma(...,eps={eps}) = {v}")
v, f1, f2 = sigma(3, [half] * 3, K1, mpf(1), mpf(1), mpf(6))
print(f"sigma(3,[1/2]*3,K=1,b=1,d=1,eps=6) = {v}")

print("== closed-form rot2 ==")
# displacement(n) of R = (id + rot(pi/2))/2 from x0=(1,0) is 2^{-(n+1)/2}
for eps in ("1", "0.1", "0.01"):
    e = mpf(eps)
    n = 0
    while mpf(2) ** (-(n + 1) / mpf(2)) > e:
        n += 1
    print(f"rot2 first_hit({eps}) = {n}")

print("== star ==")
print("star(1/2,1/2)  =", star(half, half))
print("star(1/3,1/2)  =", star(mpf(1) / 3, half))
print("star_many([1/2]*3) =", star_many([half] * 3))
