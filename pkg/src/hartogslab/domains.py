"""Catalog of irreducible bounded symmetric domains in their matrix models.

Classical families:

  type1(m, n): m x n complex matrices z with I - z zb^t > 0; dimension mn,
               genus m + n. Coordinates are the matrix entries, row-major.
  type2(n):    antisymmetric n x n matrices (n >= 4); dimension n(n-1)/2,
               genus 2(n-1). Coordinates are the strict upper triangle.
  type3(n):    symmetric n x n matrices (n >= 2); dimension n(n+1)/2, genus
               n + 1. Coordinates are the upper triangle including the diagonal.
  type4(n):    the Lie ball in C^n (n >= 5): 1 - 2 z zb^t + |z z^t|^2 > 0 and
               z zb^t < 1; dimension n, genus n.

The two exceptional domains (exc5: d=16, genus=12; exc6: d=27, genus=18) carry
dimension and genus only; every geometric operation on them is a hard error.

The generic norm N(z, zb) is det(I - z zb^t) for types 1 and 3, its square
root for type 2, and 1 - 2 z zb^t + |z z^t|^2 for type 4; N(0, 0) = 1 and
0 < N <= 1 on the domain. The Bergman kernel is proportional to N^(-genus).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .jets import Jet, jet_constant, jet_det, jet_real_power, jet_variable

BasePoint = tuple  # tuple of complex coordinates, length spec.d

_CLASSICAL = ("type1", "type2", "type3", "type4")
_KINDS = _CLASSICAL + ("exc5", "exc6")


class ExceptionalDomainError(ValueError):
    """Raised when geometry is requested on a constants-only exceptional domain."""


@dataclass(frozen=True)
class DomainSpec:
    kind: str
    m: int | None = None
    n: int | None = None

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValueError(f"unknown domain kind {self.kind!r}")
        if self.kind == "type1":
            if self.m is None or self.n is None or self.m < 1 or self.n < 1:
                raise ValueError("type1 requires m >= 1 and n >= 1")
            if self.m > self.n:
                # transpose biholomorphism; canonical form has m <= n
                m, n = self.n, self.m
                object.__setattr__(self, "m", m)
                object.__setattr__(self, "n", n)
        elif self.kind == "type2":
            if self.n is None or self.n < 4 or self.m is not None:
                raise ValueError("type2 requires n >= 4 (and no m)")
        elif self.kind == "type3":
            if self.n is None or self.n < 2 or self.m is not None:
                raise ValueError("type3 requires n >= 2 (and no m)")
        elif self.kind == "type4":
            if self.n is None or self.n < 5 or self.m is not None:
                raise ValueError("type4 requires n >= 5 (and no m)")
        else:
            if self.m is not None or self.n is not None:
                raise ValueError(f"{self.kind} takes no parameters")

    @property
    def d(self) -> int:
        if self.kind == "type1":
            return self.m * self.n
        if self.kind == "type2":
            return self.n * (self.n - 1) // 2
        if self.kind == "type3":
            return self.n * (self.n + 1) // 2
        if self.kind == "type4":
            return self.n
        return 16 if self.kind == "exc5" else 27

    @property
    def genus(self) -> int:
        if self.kind == "type1":
            return self.m + self.n
        if self.kind == "type2":
            return 2 * (self.n - 1)
        if self.kind == "type3":
            return self.n + 1
        if self.kind == "type4":
            return self.n
        return 12 if self.kind == "exc5" else 18

    @property
    def is_classical(self) -> bool:
        return self.kind in _CLASSICAL

    def label(self) -> str:
        if self.kind == "type1":
            return f"type1({self.m},{self.n})"
        if self.kind in ("type2", "type3", "type4"):
            return f"{self.kind}({self.n})"
        return self.kind

    def to_json_dict(self) -> dict:
        out = {"kind": self.kind}
        if self.kind == "type1":
            out["m"] = self.m
        if self.kind in _CLASSICAL:
            out["n"] = self.n
        return out

    @staticmethod
    def from_json_dict(obj: dict) -> "DomainSpec":
        return DomainSpec(obj["kind"], obj.get("m"), obj.get("n"))


def type1(m: int, n: int) -> DomainSpec:
    return DomainSpec("type1", m, n)


def type2(n: int) -> DomainSpec:
    return DomainSpec("type2", n=n)


def type3(n: int) -> DomainSpec:
    return DomainSpec("type3", n=n)


def type4(n: int) -> DomainSpec:
    return DomainSpec("type4", n=n)


def exc5() -> DomainSpec:
    return DomainSpec("exc5")


def exc6() -> DomainSpec:
    return DomainSpec("exc6")


def dimension_genus(spec: DomainSpec) -> tuple:
    return spec.d, spec.genus


def _require_classical(spec: DomainSpec):
    if not spec.is_classical:
        raise ExceptionalDomainError(
            f"{spec.kind} is catalogued with (d, genus) only; "
            "no coordinate geometry is available")


def _coords(spec: DomainSpec, z: Sequence) -> np.ndarray:
    v = np.asarray(z, dtype=np.complex128).reshape(-1)
    if v.size != spec.d:
        raise ValueError(f"{spec.label()} expects {spec.d} coordinates, got {v.size}")
    return v


def matrix_model(spec: DomainSpec, z: Sequence) -> np.ndarray:
    """Assemble the matrix realization from independent coordinates
    (skew-symmetric completion for type2, symmetric for type3)."""
    _require_classical(spec)
    v = _coords(spec, z)
    if spec.kind == "type1":
        return v.reshape(spec.m, spec.n)
    n = spec.n
    M = np.zeros((n, n), dtype=np.complex128)
    k = 0
    if spec.kind == "type2":
        for r in range(n):
            for c in range(r + 1, n):
                M[r, c] = v[k]
                M[c, r] = -v[k]
                k += 1
        return M
    if spec.kind == "type3":
        for r in range(n):
            for c in range(r, n):
                M[r, c] = v[k]
                M[c, r] = v[k]
                k += 1
        return M
    raise ValueError("type4 has no matrix model")


def contains(spec: DomainSpec, z: Sequence) -> bool:
    """Strict interior membership test."""
    _require_classical(spec)
    v = _coords(spec, z)
    if spec.kind == "type4":
        zz = float(np.sum(np.abs(v) ** 2))
        zzt = complex(np.sum(v * v))
        return zz < 1.0 and 1.0 - 2.0 * zz + abs(zzt) ** 2 > 0.0
    Z = matrix_model(spec, v)
    H = np.eye(Z.shape[0]) - Z @ Z.conj().T
    return float(np.linalg.eigvalsh(H).min()) > 0.0


def generic_norm_value(spec: DomainSpec, z: Sequence) -> float:
    """Numeric N(z, zb); positive on the domain, 1 at the origin."""
    _require_classical(spec)
    v = _coords(spec, z)
    if spec.kind == "type4":
        zz = float(np.sum(np.abs(v) ** 2))
        zzt = complex(np.sum(v * v))
        return 1.0 - 2.0 * zz + abs(zzt) ** 2
    Z = matrix_model(spec, v)
    H = np.eye(Z.shape[0]) - Z @ Z.conj().T
    det = np.linalg.det(H)
    val = float(det.real)
    if spec.kind == "type2":
        val = math.sqrt(max(val, 0.0))
    return val


def sample_interior(spec: DomainSpec, seed: int, count: int) -> list:
    """Deterministic interior points: each coordinate uniform in the complex
    square of half-width 1/sqrt(d), rejected until membership holds."""
    _require_classical(spec)
    rng = np.random.default_rng(seed)
    r = 1.0 / math.sqrt(spec.d)
    out = []
    while len(out) < count:
        raw = rng.uniform(-r, r, size=2 * spec.d)
        p = raw[0::2] + 1j * raw[1::2]
        if contains(spec, p):
            out.append(tuple(complex(x) for x in p))
    return out


def generic_norm_jet(spec: DomainSpec, p: Sequence, cap, num_vars: int | None = None) -> Jet:
    """Jet of N(z, zb) centered at the interior point p.

    The jet lives in num_vars holomorphic + antiholomorphic variables (default
    spec.d); extra trailing variables, used when the jet is embedded in a
    larger coordinate system such as a Hartogs fiber, simply never occur.
    """
    _require_classical(spec)
    v = _coords(spec, p)
    if not contains(spec, v):
        raise ValueError(f"base point is not interior to {spec.label()}")
    d = spec.d
    m_total = d if num_vars is None else int(num_vars)
    if m_total < d:
        raise ValueError("num_vars must be at least the domain dimension")
    zs = [jet_variable(i, m_total, cap) + v[i] for i in range(d)]
    zbs = [jet_variable(i, m_total, cap, anti=True) + complex(v[i]).conjugate()
           for i in range(d)]

    if spec.kind == "type4":
        zz = jet_constant(0.0, m_total, cap)
        zzt = jet_constant(0.0, m_total, cap)
        zbzbt = jet_constant(0.0, m_total, cap)
        for i in range(d):
            zz = zz + zs[i] * zbs[i]
            zzt = zzt + zs[i] * zs[i]
            zbzbt = zbzbt + zbs[i] * zbs[i]
        return 1.0 - 2.0 * zz + zzt * zbzbt

    if spec.kind == "type1":
        rows, cols = spec.m, spec.n
        Z = [[zs[r * cols + c] for c in range(cols)] for r in range(rows)]
        Zb = [[zbs[r * cols + c] for c in range(cols)] for r in range(rows)]
        side = rows
    else:
        n = spec.n
        side = n
        Z = [[None] * n for _ in range(n)]
        Zb = [[None] * n for _ in range(n)]
        zero = jet_constant(0.0, m_total, cap)
        k = 0
        if spec.kind == "type2":
            for r in range(n):
                Z[r][r] = zero
                Zb[r][r] = zero
            for r in range(n):
                for c in range(r + 1, n):
                    Z[r][c], Z[c][r] = zs[k], -zs[k]
                    Zb[r][c], Zb[c][r] = zbs[k], -zbs[k]
                    k += 1
        else:
            for r in range(n):
                for c in range(r, n):
                    Z[r][c] = Z[c][r] = zs[k]
                    Zb[r][c] = Zb[c][r] = zbs[k]
                    k += 1
        cols = n

    E = [[None] * side for _ in range(side)]
    for a in range(side):
        for b in range(side):
            acc = jet_constant(1.0 if a == b else 0.0, m_total, cap)
            for c in range(cols):
                acc = acc - Z[a][c] * Zb[b][c]
            E[a][b] = acc
    det = jet_det(E)
    if spec.kind == "type2":
        det = jet_real_power(det, 0.5)
    return det
