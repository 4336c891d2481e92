"""Span dimensions of minors vs. quadric products, and secant proportionality."""
import itertools
import numpy as np
import sympy as sp

a, b = sp.symbols('a b')
u = sp.symbols('u0:5')

def qform(av, bv, uu):
    M = sp.zeros(5, 5)
    for i in range(5):
        for j in range(5):
            if i == j:
                M[i, j] = 2 * uu[i]
            else:
                d = (j - i) % 5
                k = (3 * (i + j)) % 5
                M[i, j] = (bv if d in (1, 4) else av) * uu[k]
    return M

Qs = qform(a, b, u)
minors3 = [Qs.extract(list(r), list(c)).det() for r in itertools.combinations(range(5), 3) for c in itertools.combinations(range(5), 3)]
minors4 = [Qs.extract(list(r), list(c)).det() for r in itertools.combinations(range(5), 4) for c in itertools.combinations(range(5), 4)]
detQ = sp.expand(Qs.det())

def monos(deg):
    return [m for m in itertools.combinations_with_replacement(range(5), deg)]

def vec(expr, deg, subs):
    P = sp.Poly(sp.expand(expr.subs(subs)), *u)
    out = []
    for m in monos(deg):
        e = [0]*5
        for i in m: e[i] += 1
        out.append(complex(P.coeff_monomial(tuple(e))))
    return np.array(out)

def rank(M, tol=1e-7):
    s = np.linalg.svd(np.array(M), compute_uv=False)
    return int(np.sum(s > tol * s[0])), s

def check(A, B):
    T = (A**3*B - B**3 - 2*A**2) / (A**4 - A*B**2 - 4*B)
    subs = {a: A, b: B}
    q = [T*u[i]**2 + T**2*u[(i+1)%5]*u[(i+4)%5] - u[(i+2)%5]*u[(i+3)%5] for i in range(5)]
    m3 = [vec(m, 3, subs) for m in minors3]
    uq = [vec(u[j]*q[i], 3, {}) for i in range(5) for j in range(5)]
    r_m3, _ = rank(m3); r_uq, _ = rank(uq); r_both, s = rank(m3 + uq)
    m4 = [vec(m, 4, subs) for m in minors4]
    qq = [vec(q[i]*q[j], 4, {}) for i in range(5) for j in range(i, 5)]
    r_m4, _ = rank(m4); r_qq, _ = rank(qq); r_b4, s4 = rank(m4 + qq)
    print(f'A={A} B={B:.6f} T={T:.6f}: deg6 ranks minors={r_m3} uq={r_uq} union={r_both}; deg8 ranks minors={r_m4} qq={r_qq} union={r_b4}')
    # secant
    z = u
    Qi = [z[i]**2 + T*z[(i+1)%5]*z[(i+4)%5] - (1/T)*z[(i+2)%5]*z[(i+3)%5] for i in range(5)]
    J = sp.Matrix(5, 5, lambda i, j: sp.diff(Qi[i], z[j])).det(method='berkowitz')
    Jv = vec(J, 5, {}); Dv = vec(detQ, 5, subs)
    lam = np.vdot(Dv, Jv) / np.vdot(Dv, Dv)
    print('   secant lambda', lam, 'rel residual', np.linalg.norm(Jv - lam*Dv)/np.linalg.norm(Jv))

for B in [0.12888995128730366, 1.6121165599055256, -2.018739572308024]:
    check(1.0, B)
check(1.0, 0.5)
