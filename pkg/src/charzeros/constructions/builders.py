"""Permutation constructions of the concrete group families.

Projective-line groups act on q+1 points ordered [infinity, 0, 1, ..., q-1]
with field elements in their canonical integer labels; matrix groups act on
canonically ordered vector or point lists.  Both conventions exist so that
generator permutations, and hence everything downstream, are reproducible.
"""

from __future__ import annotations

from ..fields import FqField, gf
from ..groupcore import Group, Perm
from ..numtheory import NotPrimePower, prime_power


class Unsupported(ValueError):
    pass


MIN_Q, MAX_Q_LINEAR = 4, 32


def _field_of(q: int) -> FqField:
    pf = prime_power(q)
    if pf is None:
        raise NotPrimePower(f"{q} is not a prime power")
    return gf(*pf)


def _check_q(q: int):
    if not MIN_Q <= q <= MAX_Q_LINEAR:
        raise Unsupported(f"q = {q} outside the supported range "
                          f"[{MIN_Q}, {MAX_Q_LINEAR}]")


# -- cyclic and alternating ------------------------------------------------

def cyclic(n: int) -> Group:
    if n < 1:
        raise Unsupported("n must be >= 1")
    gen = tuple((i + 1) % n for i in range(n))
    return Group([gen], degree=n, name=f"C{n}")


def alternating(n: int) -> Group:
    if not 5 <= n <= 9:
        raise Unsupported(f"alternating(n) supports 5 <= n <= 9, got {n}")
    three = (1, 2, 0) + tuple(range(3, n))
    if n % 2:
        big = tuple(range(1, n)) + (0,)
    else:
        big = (0,) + tuple(range(2, n)) + (1,)
    return Group([three, big], degree=n, name=f"A{n}")


# -- projective-line groups --------------------------------------------------

INF = 0


def _mobius_perm(F: FqField, a: int, b: int, c: int, d: int) -> Perm:
    """z -> (az + b)/(cz + d) on [infinity] + field elements."""
    imgs = [0] * (F.q + 1)
    imgs[INF] = INF if c == 0 else 1 + F.div(a, c)
    for z in F.elements():
        den = F.add(F.mul(c, z), d)
        if den == 0:
            imgs[1 + z] = INF
        else:
            imgs[1 + z] = 1 + F.div(F.add(F.mul(a, z), b), den)
    return tuple(imgs)


def _frobenius_perm(F: FqField) -> Perm:
    return (INF,) + tuple(1 + F.frobenius(z) for z in F.elements())


def psl2(q: int) -> Group:
    _check_q(q)
    F = _field_of(q)
    g = F.generator
    scale = g if F.p == 2 else F.mul(g, g)
    gens = [_mobius_perm(F, 1, 1, 0, 1),
            _mobius_perm(F, scale, 0, 0, 1),
            _mobius_perm(F, 0, F.neg(1), 1, 0)]
    return Group(gens, degree=q + 1, name=f"PSL(2,{q})")


def pgl2(q: int) -> Group:
    _check_q(q)
    F = _field_of(q)
    gens = [_mobius_perm(F, 1, 1, 0, 1),
            _mobius_perm(F, F.generator, 0, 0, 1),
            _mobius_perm(F, 0, F.neg(1), 1, 0)]
    return Group(gens, degree=q + 1, name=f"PGL(2,{q})")


def psl2_semilinear(q: int) -> Group:
    """PSL2(q) extended by the Frobenius field automorphism."""
    base = psl2(q)
    F = _field_of(q)
    return Group(base.generators + (_frobenius_perm(F),),
                 degree=q + 1, name=f"PSL(2,{q}):{F.f}")


def twisted_m10() -> Group:
    """The point-stabilizer-free A6 extension inside PGammaL2(9): PSL2(9)
    together with z -> nu * z^3 for a non-square nu.  Distinguished from the
    other two index-2 overgroups by its element orders (no 6, no 10)."""
    F = gf(3, 2)
    base = psl2(9)
    frob = _frobenius_perm(F)
    scale = _mobius_perm(F, F.generator, 0, 0, 1)
    twisted = tuple(scale[i] for i in frob)
    return Group(base.generators + (twisted,), degree=10, name="A6:2_3")


# -- SL2 on nonzero vectors ----------------------------------------------------

def sl2(q: int) -> Group:
    _check_q(q)
    if q % 2 == 0:
        raise Unsupported("sl2 requires odd q (even q gives PSL2 again)")
    F = _field_of(q)
    vecs = [(x, y) for x in F.elements() for y in F.elements() if (x, y) != (0, 0)]
    idx = {v: i for i, v in enumerate(vecs)}

    def perm_of(m):
        (a, b), (c, d) = m
        return tuple(idx[(F.add(F.mul(a, x), F.mul(b, y)),
                          F.add(F.mul(c, x), F.mul(d, y)))] for x, y in vecs)

    g = F.generator
    gens = [perm_of(((1, 1), (0, 1))),
            perm_of(((1, 0), (1, 1))),
            perm_of(((g, 0), (0, F.inv(g))))]
    return Group(gens, degree=q * q - 1, name=f"SL(2,{q})")


# -- Suzuki group on the 65-point ovoid -------------------------------------------

def _suzuki_maps(F: FqField):
    """Sz(q) for q = 2^(2n+1), acting on [infinity] + F_q^2 with the twisting
    endomorphism theta: x -> x^(2^(n+1)), theta^2 = Frobenius."""
    q = F.q
    theta_exp = 1 << ((F.f + 1) // 2)

    def theta(x):
        return F.pow(x, theta_exp)

    def pt(a, b):
        return 1 + q * a + b

    def t_perm(c, d):
        imgs = [INF] * (q * q + 1)
        for a in F.elements():
            act = F.mul(a, theta(c))
            for b in F.elements():
                imgs[pt(a, b)] = pt(F.add(a, c), F.add(F.add(b, d), act))
        return tuple(imgs)

    def m_perm(k):
        kt = F.mul(k, theta(k))
        imgs = [INF] * (q * q + 1)
        for a in F.elements():
            for b in F.elements():
                imgs[pt(a, b)] = pt(F.mul(k, a), F.mul(kt, b))
        return tuple(imgs)

    def w_perm():
        imgs = [pt(0, 0)] * (q * q + 1)
        for a in F.elements():
            for b in F.elements():
                if a == 0 and b == 0:
                    imgs[pt(a, b)] = INF
                    continue
                f = F.add(F.add(F.mul(theta(a), F.mul(a, a)), F.mul(a, b)),
                          theta(b))
                fi = F.inv(f)
                imgs[pt(a, b)] = pt(F.mul(b, fi), F.mul(a, fi))
        return tuple(imgs)

    def frob_perm():
        imgs = [INF] * (q * q + 1)
        for a in F.elements():
            for b in F.elements():
                imgs[pt(a, b)] = pt(F.frobenius(a), F.frobenius(b))
        return tuple(imgs)

    return t_perm, m_perm, w_perm, frob_perm


def suzuki(q: int = 8) -> Group:
    if q != 8:
        raise Unsupported("only Sz(8) is within the order budget")
    F = gf(2, 3)
    t_perm, m_perm, w_perm, _ = _suzuki_maps(F)
    gens = [t_perm(1, 0), t_perm(0, 1), m_perm(F.generator), w_perm()]
    return Group(gens, degree=65, name=f"Sz({q})")


def suzuki_semilinear(q: int = 8) -> Group:
    base = suzuki(q)
    F = gf(2, 3)
    frob = _suzuki_maps(F)[3]
    return Group(base.generators + (frob(),), degree=65, name=f"Sz({q}):{F.f}")


# -- unitary group on isotropic points --------------------------------------------

def unitary3(q: int = 4) -> Group:
    """PSU3(q) (= SU3(q) when gcd(3, q+1) = 1) on the q^3 + 1 isotropic
    points of the Hermitian form x1*conj(y3) + x2*conj(y2) + x3*conj(y1)."""
    if q != 4:
        raise Unsupported("only PSU3(4) is within the order budget")
    F = gf(2, 4)

    def conj(x):
        return F.pow(x, q)

    def herm(x, y):
        s = F.mul(x[0], conj(y[2]))
        s = F.add(s, F.mul(x[1], conj(y[1])))
        return F.add(s, F.mul(x[2], conj(y[0])))

    def normalize(v):
        for c in v:
            if c:
                ci = F.inv(c)
                return tuple(F.mul(ci, x) for x in v)
        raise ValueError("zero vector")

    pts = [(1, x2, x3) for x2 in F.elements() for x3 in F.elements()]
    pts += [(0, 1, x3) for x3 in F.elements()]
    pts.append((0, 0, 1))
    iso = [v for v in pts if herm(v, v) == 0]
    idx = {v: i for i, v in enumerate(iso)}

    def perm_of(m):
        def apply(v):
            return tuple(
                F.add(F.add(F.mul(m[i][0], v[0]), F.mul(m[i][1], v[1])),
                      F.mul(m[i][2], v[2]))
                for i in range(3))
        return tuple(idx[normalize(apply(v))] for v in iso)

    b0 = next(b for b in F.elements() if F.add(b, conj(b)) == 1)
    lam = F.generator
    gens = [perm_of(((1, 0, 0), (1, 1, 0), (b0, 1, 1))),
            perm_of(((lam, 0, 0), (0, F.div(conj(lam), lam), 0),
                     (0, 0, F.inv(conj(lam))))),
            perm_of(((0, 0, 1), (0, 1, 0), (1, 0, 0)))]
    return Group(gens, degree=len(iso), name=f"PSU(3,{q})")
