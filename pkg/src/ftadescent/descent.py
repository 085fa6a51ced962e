"""Root finding by strict descent on |P|^2 along Estermann directions.

At a point z0 with P(z0) != 0 the local form P(z0 + w) = c0 + ck w^k + ...
gives alpha = conj(c0) ck, and some canonical candidate zeta has
Re[alpha zeta^k] < 0.  Moving to z0 + r zeta then lowers |P|^2 for all small
enough r.  Step lengths are dyadic (doubled or halved), so the whole
iteration uses field operations plus comparisons only; no angles, no
derivatives, no k-th roots.
"""

import math
from dataclasses import asdict, dataclass, field, fields, replace

from scipy.stats import qmc

from .estermann import select_direction
from .poly import (
    DegenerateLocalFormError, Polynomial, deflate, evaluate, local_form,
    root_bound, scale, taylor_shift,
)

__all__ = [
    "DescentConfig", "StepRecord", "DescentTrace", "RootResult", "Remark2Report",
    "DescentError", "StepFailure", "DegenerateDirection", "ConvergenceError",
    "descent_step", "find_root", "find_all_roots", "nth_root",
    "estimate_multiplicity", "verify_remark2_bound",
]


@dataclass(frozen=True)
class DescentConfig:
    tol_residual: float = 1e-10
    tau_k_detect: float = 1e-12
    max_iters: int = 10000
    max_backtracks: int = 200
    step_growth: float = 2.0
    step_shrink: float = 0.5
    sufficient_decrease_sigma: float = 0.5
    restart_attempts: int = 8
    initial_step: float = 1.0
    # step budget when polishing a deflated root against the original P
    polish_iters: int = 100
    seed: int = 0

    def __post_init__(self):
        for f in fields(self):
            v = getattr(self, f.name)
            if f.name == "seed":
                continue
            if not v > 0:
                raise ValueError(f"{f.name} must be positive, got {v!r}")
        if self.sufficient_decrease_sigma > 1:
            raise ValueError("sufficient_decrease_sigma must lie in (0, 1]")
        if self.step_growth <= 1 or self.step_shrink >= 1:
            raise ValueError("need step_growth > 1 and step_shrink < 1")

    def to_dict(self):
        return asdict(self)


class DescentError(RuntimeError):
    pass


class StepFailure(DescentError):
    """No trial step within the backtracking budget passed the decrease test."""


class DegenerateDirection(DescentError):
    """No candidate gives a usable descent value (a floating-point artifact)."""


class ConvergenceError(DescentError):
    def __init__(self, message, best_point=None, best_residual=None, stage=None):
        super().__init__(message)
        self.best_point = best_point
        self.best_residual = best_residual
        self.stage = stage


@dataclass(frozen=True)
class StepRecord:
    z: complex
    value: float  # |P(z)|^2 before the step
    zeta: complex
    k: int
    r: float
    backtracks: int
    new_value: float  # |P(z + r zeta)|^2
    phase: str = "search"
    attempt: int = 0

    def to_dict(self):
        return {
            "z": [self.z.real, self.z.imag],
            "value": self.value,
            "zeta": [self.zeta.real, self.zeta.imag],
            "k": self.k,
            "r": self.r,
            "backtracks": self.backtracks,
            "new_value": self.new_value,
            "phase": self.phase,
            "attempt": self.attempt,
        }


@dataclass
class DescentTrace:
    records: list = field(default_factory=list)

    def append(self, rec):
        self.records.append(rec)

    def __len__(self):
        return len(self.records)

    def is_monotone(self):
        """Every step decreases |P|^2 and each run of steps chains correctly."""
        prev = None
        for rec in self.records:
            if not rec.new_value < rec.value:
                return False
            if (prev is not None and (prev.phase, prev.attempt) == (rec.phase, rec.attempt)
                    and rec.value != prev.new_value):
                return False
            prev = rec
        return True


@dataclass(frozen=True)
class RootResult:
    root: complex
    residual: float
    iterations: int
    multiplicity_estimate: int
    trace: DescentTrace = None

    def to_dict(self, with_trace=False):
        d = {
            "re": self.root.real,
            "im": self.root.imag,
            "residual": self.residual,
            "multiplicity": self.multiplicity_estimate,
            "iterations": self.iterations,
        }
        if with_trace and self.trace is not None:
            d["trace"] = [rec.to_dict() for rec in self.trace.records]
        return d


_EPS = 2.0 ** -52


def _abs2(w):
    return w.real * w.real + w.imag * w.imag


def _as_float_poly(p):
    if not isinstance(p, Polynomial):
        p = Polynomial(p)
    p = p.to_complex()
    if p.degree < 1:
        raise ValueError(f"need a polynomial of degree >= 1, got degree {p.degree}")
    return p


def descent_step(p, z0, cfg=None, r_prev=None):
    """One accepted descent step from ``z0``; returns ``(z1, StepRecord)``.

    Trial lengths are ``r_prev * growth`` (or ``cfg.initial_step`` on the
    first step) followed by repeated halving; the first r with
    ``|P(z1)|^2 <= |P(z0)|^2 - sigma r^k |Re[alpha zeta^k]|`` is taken.

    If no length works for the detected order k, the next non-negligible
    orders j > k are tried in turn.  Near a saddle of |P| the linear
    coefficient is tiny but above threshold and its candidates only creep
    towards the saddle; the next order is what actually descends.
    """
    cfg = cfg or DescentConfig()
    p = _as_float_poly(p)
    z0 = complex(z0)
    f0 = _abs2(evaluate(p, z0))
    if f0 == 0:
        raise ValueError(f"{z0!r} is already a root")
    try:
        lf = local_form(p, z0, cfg.tau_k_detect)
    except DegenerateLocalFormError as exc:
        raise DegenerateDirection(str(exc)) from exc
    c = lf.shifted
    cutoff = cfg.tau_k_detect * max(abs(x) for x in c)
    orders = [j for j in range(lf.k, len(c)) if abs(c[j]) > cutoff]
    r0 = cfg.initial_step if r_prev is None else r_prev * cfg.step_growth
    conj_c0 = lf.c0.conjugate()
    any_direction = False
    for k in orders:
        sel = select_direction(conj_c0 * c[k], k)
        if sel is None:
            continue
        any_direction = True
        zeta, dval = sel
        need = cfg.sufficient_decrease_sigma * abs(dval)
        r = r0
        for bt in range(cfg.max_backtracks + 1):
            z1 = z0 + r * zeta
            if z1 == z0:
                break
            f1 = _abs2(evaluate(p, z1))
            if f1 < f0 and f1 <= f0 - need * r ** k:
                return z1, StepRecord(z0, f0, zeta, k, r, bt, f1)
            r *= cfg.step_shrink
    if not any_direction:
        raise DegenerateDirection(f"no descending candidate at {z0!r} (k={lf.k})")
    raise StepFailure(f"no acceptable step from {z0!r} (k={lf.k})")


def _restart_points(radius, seed):
    """Scrambled Halton points, uniform over the disc |z| < radius."""
    sampler = qmc.Halton(d=2, scramble=True, seed=seed)
    while True:
        for u, v in sampler.random(16):
            x, y = 2 * u - 1, 2 * v - 1
            if x * x + y * y < 1:
                yield complex(x * radius, y * radius)


def _descend(p, z, cfg, budget, trace, phase, attempt):
    """Step until no step is accepted, P(z) == 0, or ``budget`` steps.

    Stopping at a stall, not at the residual tolerance, matters: the
    tolerance is relative to a coarse enclosure scale and certifies the
    result afterwards rather than steering the iteration.
    """
    steps = 0
    r = None
    while steps < budget:
        if evaluate(p, z) == 0:
            break
        try:
            z, rec = descent_step(p, z, cfg, r)
        except DescentError:
            break
        steps += 1
        r = rec.r
        if trace is not None:
            trace.append(replace(rec, phase=phase, attempt=attempt))
    return z, steps


def estimate_multiplicity(p, z, tau=None):
    """Number of roots clustered at ``z``, by a dominant-term test on P(z + w).

    For dyadic radii rho growing from 2^-52 to 2^-10 (relative to max(1, |z|))
    the first shifted term |c_j| rho^j, j >= 1, that exceeds the sum of all
    the others counts exactly j roots inside |w| < rho (Rouche).  The
    constant term is floored at the evaluation rounding bound.  Falls back
    to the threshold-detected local order.
    """
    p = _as_float_poly(p)
    z = complex(z)
    mags = [abs(c) for c in taylor_shift(p, z).coeffs]
    base = max(1.0, abs(z))
    # |c0| is only known up to the rounding error of evaluating P at z.
    az = abs(z)
    noise = 2 * p.degree * _EPS * math.fsum(abs(a) * az ** j for j, a in enumerate(p.coeffs))
    mags[0] = max(mags[0], noise)
    for e in range(52, 9, -1):
        rho = math.ldexp(base, -e)
        terms = [m * rho ** j for j, m in enumerate(mags)]
        total = math.fsum(terms)
        j = max(range(len(terms)), key=terms.__getitem__)
        if j >= 1 and terms[j] > total - terms[j]:
            return j
    try:
        return local_form(p, z, tau or DescentConfig.tau_k_detect).k
    except DegenerateLocalFormError:
        return 1


def find_root(p, z_init=0j, cfg=None, trace=False):
    """Descend from ``z_init`` to a zero of ``p``, restarting inside the root disc.

    Raises :class:`ConvergenceError` carrying the best point seen when every
    attempt stalls above ``tol_residual * scale(p)``.
    """
    cfg = cfg or DescentConfig()
    p = _as_float_poly(p)
    tol = cfg.tol_residual * scale(p)
    restarts = _restart_points(root_bound(p), cfg.seed)
    tr = DescentTrace() if trace else None
    best_z, best_res = None, math.inf
    iterations = 0
    z = complex(z_init)
    for attempt in range(cfg.restart_attempts + 1):
        if attempt:
            z = next(restarts)
        z, steps = _descend(p, z, cfg, cfg.max_iters, tr, "search", attempt)
        iterations += steps
        res = abs(evaluate(p, z))
        if res < best_res:
            best_z, best_res = z, res
        if res <= tol:
            return RootResult(z, res, iterations, estimate_multiplicity(p, z, cfg.tau_k_detect), tr)
    raise ConvergenceError(
        f"no root within tolerance {tol:.3g} after {cfg.restart_attempts} restarts",
        best_point=best_z, best_residual=best_res)


def find_all_roots(p, cfg=None, trace=False):
    """All ``degree(p)`` roots by descent, polishing and deflation.

    Each root is found on the current deflated polynomial from 0, polished
    against the original ``p``, then divided out.  A final pass polishes every
    root against ``p`` again.  Results are sorted by (re, im).
    """
    cfg = cfg or DescentConfig()
    p = _as_float_poly(p)
    tol = cfg.tol_residual * scale(p)
    work = p
    staged = []
    for stage in range(p.degree):
        try:
            res = find_root(work, 0j, cfg, trace)
        except ConvergenceError as exc:
            raise ConvergenceError(f"deflation stage {stage}: {exc}", exc.best_point,
                                   exc.best_residual, stage) from exc
        tr = res.trace
        z, steps = _descend(p, res.root, cfg, cfg.polish_iters, tr, "polish", 0)
        staged.append((z, res.iterations + steps, tr))
        if work.degree > 1:
            work, _ = deflate(work, z)

    results = []
    for stage, (z, iters, tr) in enumerate(staged):
        z, steps = _descend(p, z, cfg, cfg.max_iters, tr, "final", 0)
        res = abs(evaluate(p, z))
        if res > tol:
            raise ConvergenceError(
                f"deflation stage {stage}: residual {res:.3g} against the original "
                f"polynomial exceeds {tol:.3g}", z, res, stage)
        results.append(RootResult(z, res, iters + steps,
                                  estimate_multiplicity(p, z, cfg.tau_k_detect), tr))
    results.sort(key=lambda rr: (rr.root.real, rr.root.imag))
    return results


def nth_root(a, n, cfg=None):
    """The non-negative b with b**n == a, via a zero of z**n - a.

    The only radical taken is the modulus sqrt(re^2 + im^2) of that zero.
    """
    if a < 0 or n < 1 or int(n) != n:
        raise ValueError("nth_root needs a >= 0 and an integer n >= 1")
    n = int(n)
    if a == 0:
        return 0.0
    p = Polynomial([-float(a)] + [0.0] * (n - 1) + [1.0])
    z = find_root(p, 0j, cfg).root
    return math.sqrt(z.real * z.real + z.imag * z.imag)


@dataclass(frozen=True)
class Remark2Report:
    k: int
    lhs: object  # -2 Re[conj(c0) zeta^k Q(0)], exact when inputs are exact
    m_bound: float
    samples: tuple  # (r, 3 r M, lhs <= 3 r M)

    @property
    def all_satisfied(self):
        return all(ok for _, _, ok in self.samples)

    def to_dict(self):
        return {
            "k": self.k,
            "lhs": float(self.lhs),
            "M": self.m_bound,
            "samples": [{"r": r, "bound": b, "ok": ok} for r, b, ok in self.samples],
            "all_satisfied": self.all_satisfied,
        }


def verify_remark2_bound(p, z0, zeta, r_samples):
    """Compare -2 Re[conj(P(z0)) zeta^k Q(0)] with 3 r M at r = 2^-1 .. 2^-r_samples.

    With Q(w) = Q(0) + w R(w), M is the coefficient majorant
    max(sum |c0| |zeta|^(k+1+j) |R_j|, (sum |Q_j| |zeta|^(k+j))^2), valid for
    0 < r < 1.  At a true minimiser every comparison holds; a failing r
    certifies that z0 is not a local minimum of |P|.
    """
    if r_samples < 1:
        raise ValueError("r_samples must be >= 1")
    if not isinstance(p, Polynomial):
        p = Polynomial(p)
    lf = local_form(p, z0)
    k = lf.k
    q = lf.q_coeffs
    lhs = -2 * (lf.c0.conjugate() * zeta ** k * q[0]).real
    za = abs(complex(zeta))
    c0 = abs(complex(lf.c0))
    m_r = math.fsum(c0 * za ** (k + 1 + j) * abs(complex(rj)) for j, rj in enumerate(q[1:]))
    m_q = math.fsum(abs(complex(qj)) * za ** (k + j) for j, qj in enumerate(q)) ** 2
    m = max(m_r, m_q)
    samples = []
    for e in range(1, r_samples + 1):
        r = math.ldexp(1.0, -e)
        bound = 3 * r * m
        samples.append((r, bound, lhs <= bound))
    return Remark2Report(k, lhs, m, tuple(samples))
