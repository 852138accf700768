"""Independent symbolic reduction of every catalogue operator to Schroedinger form.

For an operator T = P(x) d^2 + Q(x) d + R(x) and a change of variable x = x(z),
w = -x'^2/P, A' = (w Q + x'')/(2 x'), Vfull = A'^2 - A'' + w R, so that
(-d_z^2 + Vfull) Psi = eps w Psi with Psi = phi(x(z)) exp(-A).
Printed potentials are compared up to an additive constant, which is reported.
"""
import sympy as sp

x, z, r = sp.symbols('x z r', positive=True)
al, a, b, c, n, p, mu, d, l = sp.symbols('alpha a b c n p mu d l')


def reduce(P, Q, R, xz, var=z):
    xp = sp.diff(xz, var)
    xpp = sp.diff(xp, var)
    sub = lambda f: sp.sympify(f).subs(x, xz)
    w = sp.simplify(-xp**2 / sub(P))
    Ap = sp.simplify((w * sub(Q) + xpp) / (2 * xp))
    V = sp.simplify(Ap**2 - sp.diff(Ap, var) + w * sub(R))
    return w, Ap, V


def report(name, P, Q, R, xz, printed=None, var=z):
    w, Ap, V = reduce(P, Q, R, xz, var)
    print(f'== {name}')
    print('  w  =', sp.simplify(w))
    print('  A\' =', sp.simplify(Ap.rewrite(sp.exp)) if name in ('IV', 'V') else sp.expand(Ap))
    if printed is not None:
        K = sp.simplify((V - printed).rewrite(sp.exp))
        print('  Vfull - printed =', sp.factor(K))
    return w, Ap, V


E = sp.exp
report('I', -al * x**2, 2*a*x**2 + (2*b - al)*x - 2*c, -2*a*n*x, E(-al*z),
       a**2*E(-2*al*z) + a*(2*b - al*(2*n + 1))*E(-al*z) - c*(2*b + al)*E(al*z) + c**2*E(2*al*z))
report('II', -al * x, -(2*a*x**2 + 2*c*x - 2*b - al), 2*a*n*x, E(-al*z))
report('III', -al * x**3, (2*b - al)*x**2 - 2*a*x - 2*c, (al*n - 2*b)*n*x, E(-al*z),
       c**2*E(4*al*z) + 2*a*c*E(3*al*z) + (a**2 - 2*c*(b + al))*E(2*al*z) - a*(2*b + al)*E(al*z))
C = sp.cosh(al*z)
report('IV', -4*al*x**2*(x - 1), -2*(((2*p + 3)*al + 2*c)*x**2 - 2*(al - a + c)*x - 2*a),
       2*n*((2*n + 2*p + 1)*al + 2*c)*x, 1/C**2,
       a**2*C**4 - a*(a + 2*al - 2*c)*C**2 - (c*(c + al) + al*(2*n + p)*(al*(2*n + p + 1) + 2*c))/C**2)
report('V', -2*al*x*(x - 1), 2*b*x**2 - (2*a + 4*b + 2*p*al + 3*al)*x + 2*(al + a + b),
       -2*b*n*x + b*(2*n + p), 1/C**2,
       -b**2/C**6 + b*(2*a + 3*b + al*(4*n + 2*p + 3))/C**4
       - ((a + 3*b)*(a + b + al) + 2*(2*n + p)*al*b)/C**2)
report('VI', -4*x, 2*(2*a*x**2 + 2*b*x - 1 - 2*p), -4*a*n*x, z**2,
       a**2*z**6 + 2*a*b*z**4 + (b**2 - (4*n + 3 + 2*p)*a)*z**2 + p*(p - 1)/z**2)
report('X', al**2*(x**2 - 1), al**2*(2*a*x**2 + (1 + 2*mu)*x - 2*a), -2*al**2*a*(n - mu)*x,
       sp.cos(al*z), al**2*(a**2*sp.sin(al*z)**2 - a*(2*n + 1)*sp.cos(al*z)))
nu = sp.symbols('nu')  # nu = nu1 - nu2
for cst in (-2*a*nu, -2*a - nu):
    report(f'X_alt const={cst}', al**2*(x**2 - 1), al**2*(2*a*x**2 + 2*x + cst), -2*al**2*a*(n - 1)*x,
           sp.cos(al*z), al**2*(a**2*sp.sin(al*z)**2 - 2*n*a*sp.cos(al*z) + a*nu))

print('== IV/V by parity')
for p_ in (0, 1):
    for nm, P, Q, R, pr in [
        ('IV', -4*al*x**2*(x - 1), -2*(((2*p + 3)*al + 2*c)*x**2 - 2*(al - a + c)*x - 2*a),
         2*n*((2*n + 2*p + 1)*al + 2*c)*x,
         a**2*C**4 - a*(a + 2*al - 2*c)*C**2 - (c*(c + al) + al*(2*n + p)*(al*(2*n + p + 1) + 2*c))/C**2),
        ('V', -2*al*x*(x - 1), 2*b*x**2 - (2*a + 4*b + 2*p*al + 3*al)*x + 2*(al + a + b),
         -2*b*n*x + b*(2*n + p),
         -b**2/C**6 + b*(2*a + 3*b + al*(4*n + 2*p + 3))/C**4
         - ((a + 3*b)*(a + b + al) + 2*(2*n + p)*al*b)/C**2)]:
        w, Ap, V = reduce(P.subs(p, p_), Q.subs(p, p_), R.subs(p, p_), 1/C**2)
        K = sp.simplify((V - pr.subs(p, p_)).rewrite(sp.exp))
        print(f'  {nm} p={p_}: w={w}  Vfull-printed = {sp.factor(K)}')
        print('     A\' =', sp.simplify(sp.simplify(Ap.rewrite(sp.exp)).rewrite(sp.cosh)))

print('== radial cases (operator -R\'\' - (d-1)/r R\' + l(l+d-2)/r^2 R + V R)')
Dc = d + 2*l - 2*c


def radial(R, V):
    return sp.simplify((-sp.diff(R, r, 2) - (d - 1)/r*sp.diff(R, r) + l*(l + d - 2)/r**2*R + V*R) / R)


# VII, n=0 and n=1 states
g7 = r**(l - c)*sp.exp(-a*r**4/4 - b*r**2/2)
V7 = lambda N: a**2*r**6 + 2*a*b*r**4 + (b**2 - (4*N + Dc + 2)*a)*r**2 - c*(c + Dc - 2)/r**2
print('  VII n=0: H psi/psi =', radial(g7, V7(0)))
s = sp.sqrt(b**2 + 2*a*Dc)
for sg in (1, -1):
    print('  VII n=1:', sp.simplify(radial((2*a*r**2 + b - sg*s)*g7, V7(1))))
# VIII: funnel, n=1 with charges
g8 = r**(l - c)*sp.exp(-a*r**2/2 - b*r)
q = sp.symbols('q')
V8 = a**2*r**2 + 2*a*b*r - (b*(Dc - 1) + q)/r - c*(Dc + c - 2)/r**2
print('  VIII n=0 (q=0):', radial(g8, V8.subs(q, 0)))
# IX
g9 = r**(l - c)*sp.exp(-a*r - b/r)
lam = sp.symbols('lam')
V9 = lambda N: b**2/r**4 + b*(Dc - 3)/r**3 - (c*(Dc + c - 2) + 2*a*b + lam)/r**2 - a*(2*N + Dc - 1)/r
print('  IX n=0 (lam=0):', radial(g9, V9(0).subs(lam, 0)))
