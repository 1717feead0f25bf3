"""Shared helpers for the test suite.

Everything here is an independent cross-check path: finite-difference
stencils for Wirtinger derivatives, exact-rational regrouping of the
fiber-slice identity polynomials, and a trace-form computation of the base
curvature norm that bypasses the jet engine entirely.
"""

import random
from fractions import Fraction as F

import numpy as np


# -- finite differences -------------------------------------------------------

def fd_mixed_partial(f, z, i, j, h=1e-4):
    """d^2 f / dz_i dzbar_j at z by central differences; f maps a complex
    vector to a real number.

    The diagonal case is the 5-point Laplacian over the i-th coordinate plane
    divided by 4; the off-diagonal case polarizes the four real/imaginary
    cross stencils.
    """
    z = np.asarray(z, dtype=complex)
    m = len(z)

    def at(dz):
        return f(z + dz)

    ei = np.zeros(m, complex)
    ej = np.zeros(m, complex)
    ei[i] = 1.0
    ej[j] = 1.0
    if i == j:
        return (at(h * ei) + at(-h * ei) + at(1j * h * ei) + at(-1j * h * ei)
                - 4.0 * at(0 * ei)) / (4.0 * h * h)

    def cross(da, db):
        return (at(h * da + h * db) - at(h * da - h * db)
                - at(-h * da + h * db) + at(-h * da - h * db)) / (4.0 * h * h)

    re = cross(ei, ej) + cross(1j * ei, 1j * ej)
    im = cross(ei, 1j * ej) - cross(1j * ei, ej)
    return (re + 1j * im) / 4.0


# -- exact regrouping of the fiber-slice identities ---------------------------

def _pmul(a, b):
    out = [F(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _padd(a, b):
    out = [F(0)] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] += x
    for i, y in enumerate(b):
        out[i] += y
    return out


def _pscale(a, s):
    return [x * s for x in a]


ONE_MINUS_T = [F(1), F(-1)]


def regrouped_a2_coeffs(d, genus, mu, base_r2):
    """(c0, c1, c2) of a2(t) = c0 t^2 + c1 t + c2, assembled by brute-force
    expansion of the four fiber-slice identity polynomials in t. Deliberately
    shares no code with the oracle module: the identities are expanded here
    as literal polynomials and summed with weights 1/3, 1/24, -1/6, 1/8."""
    d = F(d)
    mu = F(mu)
    c = (mu * (d + 1) - F(genus)) / mu
    gm = F(genus) / mu
    A = gm * gm * F(base_r2)

    k = _padd(_pscale(ONE_MINUS_T, d * c), [-(d + 1) * (d + 2)])
    lapk = _pscale(_pmul(ONE_MINUS_T, [F(1), d - 1]), -d * c)
    one_minus_t_sq = _pmul(ONE_MINUS_T, ONE_MINUS_T)
    t_one_minus_t = _pmul([F(0), F(1)], ONE_MINUS_T)
    r2 = _padd(_padd(_pscale(one_minus_t_sq, A),
                     _pscale(t_one_minus_t, 4 * d * gm)),
               [4 * (d + 1), F(0), 2 * d * (d + 1)])
    ric2 = _padd(_padd(_pscale(one_minus_t_sq, d * c * c),
                       _pscale(ONE_MINUS_T, -2 * d * (d + 2) * c)),
                 [(d + 1) * (d + 2) ** 2])

    a2 = _padd(_padd(_pscale(lapk, F(1, 3)), _pscale(r2, F(1, 24))),
               _padd(_pscale(ric2, F(-1, 6)), _pscale(_pmul(k, k), F(1, 8))))
    while len(a2) < 3:
        a2.append(F(0))
    assert all(x == 0 for x in a2[3:])
    return a2[2], a2[1], a2[0]


def random_identity_tuples(count, seed=20240817):
    """Random rational (d, genus, mu, base_r2) tuples for regrouping checks."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        d = rng.randint(1, 9)
        genus = rng.randint(2, 12)
        mu = F(rng.randint(1, 9), rng.randint(1, 9))
        base_r2 = F(rng.randint(1, 40), rng.randint(1, 9))
        out.append((d, genus, mu, base_r2))
    return out


# -- trace-form curvature norm (independent of the jet engine) ----------------

def _matrix_units(spec):
    n = spec.n
    if spec.kind == "type1":
        m = spec.m
        units = []
        for i in range(m):
            for j in range(n):
                M = np.zeros((m, n))
                M[i, j] = 1.0
                units.append(M)
        return np.array(units), float(spec.genus)
    if spec.kind == "type2":
        units = []
        for i in range(n):
            for j in range(i + 1, n):
                M = np.zeros((n, n))
                M[i, j] = 1.0
                M[j, i] = -1.0
                units.append(M)
        # potential is -(genus/2) log det because N = det^{1/2}
        return np.array(units), spec.genus / 2.0
    if spec.kind == "type3":
        units = []
        for i in range(n):
            for j in range(i, n):
                M = np.zeros((n, n))
                M[i, j] += 1.0
                if i != j:
                    M[j, i] += 1.0
                units.append(M)
        return np.array(units), float(spec.genus)
    raise ValueError(spec.kind)


def trace_form_r2(spec):
    """|R_gB|^2(0) from the quartic term of the Bergman potential only.

    For the matrix families, P4 = (geff/2) tr((Z Zbar^t)^2) with Z = sum of
    coordinate times matrix unit, which gives
        g_ab(0)      = geff tr(S_a S_b^t),
        R_{a b c d}(0) = -geff [tr(S_a S_b^t S_c S_d^t)
                               + tr(S_a S_d^t S_c S_b^t)].
    The Lie ball has its own closed pattern
        R_{a b c d}(0) = -4 genus (d_ab d_cd + d_ad d_cb - d_ac d_bd).
    Curvature at the origin sees only this quartic term, so the value is a
    jet-free oracle for the engine and the closed forms alike.
    """
    if spec.kind == "type4":
        n = spec.n
        gamma = float(spec.genus)
        delta = np.eye(n)
        D = (np.einsum("ab,cd->abcd", delta, delta)
             + np.einsum("ad,cb->abcd", delta, delta)
             - np.einsum("ac,bd->abcd", delta, delta))
        R = -4.0 * gamma * D
        g = 2.0 * gamma * np.ones(n)
        inv = 1.0 / g
        return float(np.einsum("abcd,abcd,a,b,c,d->", R, R, inv, inv, inv, inv))
    S, geff = _matrix_units(spec)
    g = geff * np.einsum("aij,aij->a", S, S)
    T4 = np.einsum("aij,bkj,ckl,dil->abcd", S, S, S, S)
    R = -geff * (T4 + T4.transpose(0, 3, 2, 1))
    inv = 1.0 / g
    return float(np.einsum("abcd,abcd,a,b,c,d->", R, R, inv, inv, inv, inv))
