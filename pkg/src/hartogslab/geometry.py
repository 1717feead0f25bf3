"""Kahler geometry from potential jets: metric, curvature, Ricci, scalar
curvature, tensor norms, Laplacian of the scalar curvature, and the expansion
coefficients a0, a1, a2.

Conventions (calibrated against closed-form identities on disk and ball based
Hartogs domains; any constant-factor mismatch is a bug, not a tunable):

  g_{i jbar}      = d_i dbar_j Phi
  R_{i jbar k lbar} = -Phi_{ik jbar lbar}
                       + sum_{p,q} g^{p qbar} Phi_{ik qbar} Phi_{p jbar lbar}
  Ric_{i jbar}    = -d_i dbar_j log det g
  k               = g^{i jbar} Ric_{i jbar}
  Delta           = g^{i jbar} d_i dbar_j
  |R|^2           = R_{a bbar h tbar} conj(R_{z nbar x ubar})
                      g^{a zbar} conj(g^{b nbar}) g^{h xbar} conj(g^{t ubar})
  |Ric|^2         = Ric_{a bbar} conj(Ric_{z nbar}) g^{a zbar} conj(g^{b nbar})
  a0 = 1,  a1 = k / 2,  a2 = Delta k / 3 + |R|^2 / 24 - |Ric|^2 / 6 + k^2 / 8

The canonical potential of the Hartogs domain over a base domain with generic
norm N is Phi = -log(N^mu - |w|^2); the Bergman potential of the base alone is
-genus * log N. Delta k is evaluated through jet-valued intermediates (metric
entry jets, a Newton-iterated inverse-metric jet, a Ricci jet) so that no
finite-difference error enters.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from .domains import DomainSpec, contains, generic_norm_jet, generic_norm_value, \
    sample_interior
from .jets import BidegreeCap, Jet, jet_constant, jet_det, jet_log, \
    jet_real_power, jet_variable

FULL_CAP = BidegreeCap(3, 3)  # everything through Delta k lives at (3,3)


class HartogsSpec(NamedTuple):
    base: DomainSpec
    mu: float  # any positive real-like (float or Fraction)


class HartogsPoint(NamedTuple):
    base: tuple
    fiber: complex


@dataclass(frozen=True)
class MetricData:
    dimension: int
    g: np.ndarray
    g_inv: np.ndarray


@dataclass(frozen=True)
class CurvatureReport:
    metric: MetricData
    R: np.ndarray
    Ric: np.ndarray
    k: float
    norm_R_sq: float
    norm_Ric_sq: float
    lap_k: float
    a0: float
    a1: float
    a2: float

    def to_json_dict(self, include_tensors: bool = False) -> dict:
        out = {
            "dimension": self.metric.dimension,
            "k": self.k,
            "norm_R_sq": self.norm_R_sq,
            "norm_Ric_sq": self.norm_Ric_sq,
            "lap_k": self.lap_k,
            "a0": self.a0,
            "a1": self.a1,
            "a2": self.a2,
        }
        if include_tensors:
            out["g"] = _complex_nested(self.metric.g)
            out["g_inv"] = _complex_nested(self.metric.g_inv)
            out["R"] = _complex_nested(self.R)
            out["Ric"] = _complex_nested(self.Ric)
        return out


def _complex_nested(arr: np.ndarray):
    if arr.ndim == 0:
        c = complex(arr)
        return [c.real, c.imag]
    return [_complex_nested(a) for a in arr]


def _real(x: complex, tol: float, what: str) -> float:
    x = complex(x)
    if abs(x.imag) > tol * max(1.0, abs(x.real)):
        raise ValueError(f"{what} has imaginary residue {x.imag:.3e}")
    return x.real


def _unit_tuples(m: int):
    return [tuple(1 if t == i else 0 for t in range(m)) for i in range(m)]


# -- potentials ---------------------------------------------------------------

def bergman_potential_jet(spec: DomainSpec, p: Sequence, cap,
                          num_vars: int | None = None) -> Jet:
    """Jet of -genus * log N at an interior base point; d dbar of it is the
    Bergman metric."""
    return jet_log(generic_norm_jet(spec, p, cap, num_vars=num_vars)) * (-spec.genus)


def hartogs_contains(spec: HartogsSpec, point: HartogsPoint) -> bool:
    z, w = point.base, complex(point.fiber)
    if not contains(spec.base, z):
        return False
    return abs(w) ** 2 < generic_norm_value(spec.base, z) ** float(spec.mu)


def hartogs_potential_jet(spec: HartogsSpec, point: HartogsPoint, cap) -> Jet:
    """Jet of Phi = -log(N^mu - |w|^2) in d+1 holomorphic variables centered
    at (z, w); the fiber w is the last coordinate."""
    d = spec.base.d
    mu = float(spec.mu)
    z, w0 = point.base, complex(point.fiber)
    N = generic_norm_jet(spec.base, z, cap, num_vars=d + 1)
    inner = jet_real_power(N, mu) if mu != 1.0 else N
    wj = jet_variable(d, d + 1, cap) + w0
    wbj = jet_variable(d, d + 1, cap, anti=True) + w0.conjugate()
    inner = inner - wj * wbj
    c0 = inner.constant_term
    if c0.real <= 0.0:
        raise ValueError("point lies outside the Hartogs domain: N^mu - |w|^2 <= 0")
    return -jet_log(inner)


# -- pointwise geometry -------------------------------------------------------

def metric_at(potential: Jet) -> MetricData:
    """Metric g_{i jbar} and its inverse from a potential jet (cap >= (1,1))."""
    m = potential.num_vars
    ey = _unit_tuples(m)
    g = np.array([[potential.partial(ey[i], ey[j]) for j in range(m)]
                  for i in range(m)])
    scale = float(np.abs(g).max()) or 1.0
    if float(np.abs(g - g.conj().T).max()) > 1e-10 * scale:
        raise ValueError("metric matrix is not Hermitian")
    g = 0.5 * (g + g.conj().T)
    try:
        np.linalg.cholesky(g)
    except np.linalg.LinAlgError:
        raise ValueError("metric is not positive definite "
                         "(point outside the domain or bad potential)") from None
    g_inv = np.linalg.inv(g)
    if float(np.abs(g @ g_inv - np.eye(m)).max()) > 1e-10:
        raise ValueError("metric inversion failed the identity check")
    return MetricData(m, g, g_inv)


def curvature_tensor(potential: Jet, metric: MetricData) -> np.ndarray:
    """R_{i jbar k lbar} from the potential jet (cap >= (2,2))."""
    m = metric.dimension
    ey = _unit_tuples(m)

    def two(i, k):
        return tuple(a + b for a, b in zip(ey[i], ey[k]))

    T = np.array([[[potential.partial(two(i, k), ey[q]) for q in range(m)]
                   for k in range(m)] for i in range(m)])
    S = np.array([[[potential.partial(ey[p], two(j, l)) for l in range(m)]
                   for j in range(m)] for p in range(m)])
    # comprehension nesting yields index order [i, j, k, l] directly
    P22 = np.array([[[[potential.partial(two(i, k), two(j, l)) for l in range(m)]
                      for k in range(m)] for j in range(m)] for i in range(m)])
    # g^{p qbar} = g_inv[q, p]
    term2 = np.einsum("qp,ikq,pjl->ijkl", metric.g_inv, T, S)
    return -P22 + term2


def _log_det_jets(potential: Jet):
    """Metric-entry jets (one (1,1) shift down from the potential) and the jet
    of log det g built from them."""
    m = potential.num_vars
    GJ = [[potential.derivative_jet(i, j) for j in range(m)] for i in range(m)]
    LD = jet_log(jet_det(GJ))
    return GJ, LD


def _ricci_from_logdet(LD: Jet, metric: MetricData):
    m = metric.dimension
    ey = _unit_tuples(m)
    ric = np.array([[-LD.partial(ey[i], ey[j]) for j in range(m)]
                    for i in range(m)])
    ric = 0.5 * (ric + ric.conj().T)
    k = _real(np.einsum("ji,ij->", metric.g_inv, ric), 1e-8, "scalar curvature")
    return ric, k


def ricci_and_scalar(potential: Jet, metric: MetricData):
    """Ricci tensor -d dbar log det g and scalar curvature k = g^{i jbar}
    Ric_{i jbar} (cap >= (2,2))."""
    _, LD = _log_det_jets(potential)
    return _ricci_from_logdet(LD, metric)


def tensor_norms(metric: MetricData, R: np.ndarray, Ric: np.ndarray):
    """(|R|^2, |Ric|^2) under the inverse-metric contractions; raises if an
    imaginary residue above 1e-8 remains (a convention bug, not roundoff)."""
    X = metric.g_inv.T  # X[i, j] = g^{i jbar}
    Xc = X.conj()
    r2 = np.einsum("abht,znxu,az,bn,hx,tu->", R, R.conj(), X, Xc, X, Xc)
    ric2 = np.einsum("ab,zn,az,bn->", Ric, Ric.conj(), X, Xc)
    return _real(r2, 1e-8, "|R|^2"), _real(ric2, 1e-8, "|Ric|^2")


def _laplacian_from_parts(GJ, LD: Jet, metric: MetricData, k: float) -> float:
    """Delta k via jet-valued intermediates, exact to truncation order."""
    m = metric.dimension
    cap11 = BidegreeCap(1, 1)
    ricj = [[LD.derivative_jet(i, j).truncate(cap11) * (-1.0) for j in range(m)]
            for i in range(m)]
    gj1 = [[GJ[i][j].truncate(cap11) for j in range(m)] for i in range(m)]
    gi = metric.g_inv
    xj = [[jet_constant(gi[i, j], m, cap11) for j in range(m)] for i in range(m)]
    zero = jet_constant(0.0, m, cap11)
    for _ in range(2):  # two Newton steps saturate cap (1,1)
        gx = [[sum((gj1[i][t] * xj[t][j] for t in range(m)), zero)
               for j in range(m)] for i in range(m)]
        e = [[(2.0 if i == j else 0.0) - gx[i][j] for j in range(m)]
             for i in range(m)]
        xj = [[sum((xj[i][t] * e[t][j] for t in range(m)), zero)
               for j in range(m)] for i in range(m)]
    kj = zero
    for i in range(m):
        for j in range(m):
            kj = kj + xj[j][i] * ricj[i][j]
    k0 = kj.constant_term
    if abs(k0 - k) > 1e-8 * max(1.0, abs(k)):
        raise ValueError("scalar-curvature jet disagrees with the pointwise value")
    ey = _unit_tuples(m)
    lap = sum(gi[j, i] * kj.partial(ey[i], ey[j]) for i in range(m) for j in range(m))
    return _real(lap, 1e-8, "Delta k")


def laplacian_scalar_curvature(spec: HartogsSpec, point: HartogsPoint) -> float:
    """Delta k at a Hartogs point (builds its own cap-(3,3) potential jet)."""
    P = hartogs_potential_jet(spec, point, FULL_CAP)
    metric = metric_at(P)
    GJ, LD = _log_det_jets(P)
    _, k = _ricci_from_logdet(LD, metric)
    return _laplacian_from_parts(GJ, LD, metric, k)


def scalar_curvature_at(spec: HartogsSpec, point: HartogsPoint) -> float:
    """Scalar curvature only, on the cheap cap-(2,2) path."""
    P = hartogs_potential_jet(spec, point, BidegreeCap(2, 2))
    metric = metric_at(P)
    _, k = ricci_and_scalar(P, metric)
    return k


def curvature_report(spec: HartogsSpec, point: HartogsPoint) -> CurvatureReport:
    """Everything at one point: metric, R, Ric, k, norms, Delta k, a0, a1, a2."""
    P = hartogs_potential_jet(spec, point, FULL_CAP)
    return curvature_report_from_potential(P)


def curvature_report_from_potential(potential: Jet) -> CurvatureReport:
    """Build the full report from an arbitrary cap-(3,3) potential jet (used
    directly by the scaling-law checks)."""
    metric = metric_at(potential)
    GJ, LD = _log_det_jets(potential)
    ric, k = _ricci_from_logdet(LD, metric)
    R = curvature_tensor(potential, metric)
    r2, ric2 = tensor_norms(metric, R, ric)
    lap = _laplacian_from_parts(GJ, LD, metric, k)
    a2 = lap / 3.0 + r2 / 24.0 - ric2 / 6.0 + k * k / 8.0
    return CurvatureReport(metric=metric, R=R, Ric=ric, k=k, norm_R_sq=r2,
                           norm_Ric_sq=ric2, lap_k=lap, a0=1.0, a1=k / 2.0, a2=a2)


def a2_at(spec: HartogsSpec, point: HartogsPoint) -> CurvatureReport:
    return curvature_report(spec, point)


def base_curvature_report(spec: DomainSpec, p: Sequence | None = None) -> dict:
    """Metric, curvature and norms of the base Bergman metric at p (default the
    origin), without any Hartogs fiber. Used for the closed-form norm table."""
    if p is None:
        p = (0.0,) * spec.d
    P = bergman_potential_jet(spec, p, BidegreeCap(2, 2))
    metric = metric_at(P)
    R = curvature_tensor(P, metric)
    ric, k = ricci_and_scalar(P, metric)
    r2, ric2 = tensor_norms(metric, R, ric)
    return {"metric": metric, "R": R, "Ric": ric, "k": k,
            "norm_R_sq": r2, "norm_Ric_sq": ric2}


def bergman_r2_at_origin(spec: DomainSpec) -> float:
    return base_curvature_report(spec)["norm_R_sq"]


# -- sampling -----------------------------------------------------------------

def sample_hartogs(spec: HartogsSpec, seed: int, count: int,
                   fiber_fill: float = 0.81) -> list:
    """Deterministic interior Hartogs points; |w|^2 is uniform in
    [0, fiber_fill * N(z)^mu) with uniform phase."""
    zs = sample_interior(spec.base, seed, count)
    rng = np.random.default_rng(seed + 10007)
    mu = float(spec.mu)
    out = []
    for z in zs:
        bound = fiber_fill * generic_norm_value(spec.base, z) ** mu
        t = rng.uniform(0.0, bound)
        theta = rng.uniform(0.0, 2.0 * np.pi)
        out.append(HartogsPoint(z, complex(np.sqrt(t) * np.exp(1j * theta))))
    return out


def origin_fiber_points(spec: HartogsSpec, ts: Sequence[float]) -> list:
    """Points (0, w) with |w|^2 = t for each requested t (t < 1)."""
    z0 = (0.0,) * spec.base.d
    return [HartogsPoint(z0, complex(np.sqrt(t))) for t in ts]
