"""Seeded property suites behind the ``verify`` front end and the test rig.

Every suite regenerates its trial instances from (seed, suite index, trial
index) through :func:`gramdist.rng.derive_seed`, so a failing trial can be
reproduced in isolation and the whole run is byte-for-byte repeatable.
"""

from __future__ import annotations

import math
import sys
from dataclasses import dataclass

import numpy as np

from .distance import augment, distance_det, distance_projection, distance_qr, minor_sum, orthogonal_minor_vector
from .linalg import det_lu, solve_hermitian_psd
from .qr import apply_q, gram_logdet, householder_qr
from .regression import (
    Dataset,
    center,
    design_rank,
    loss_value_det,
    loss_value_residual,
    multiple_correlation_det,
    multiple_correlation_projection,
    normal_solve,
)
from .rng import SplitMix64, derive_seed

TINY = sys.float_info.min


@dataclass(frozen=True)
class SuiteResult:
    name: str
    trials: int
    failures: int
    max_dev: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return self.failures == 0


def _rel(a: float, b: float) -> float:
    if a == b:
        return 0.0
    return abs(a - b) / max(abs(a), abs(b), TINY)


def _full_rank_complex(rng: SplitMix64, m: int, n: int) -> np.ndarray:
    for _ in range(64):
        a = rng.complex_matrix(m, n)
        if householder_qr(a, pivot=True).rank_estimate == n:
            return a
    raise RuntimeError("could not draw a full-rank matrix")


def _degrade_rank(rng: SplitMix64, a: np.ndarray) -> np.ndarray:
    n = a.shape[1]
    if n == 1:
        a[:, 0] = 0.0
    else:
        a[:, n - 1] = a[:, 0] * rng.complex_disc()
    return a


def _unitary(rng: SplitMix64, m: int) -> np.ndarray:
    f = householder_qr(rng.complex_matrix(m, m), pivot=False)
    eye = np.eye(m, dtype=np.complex128)
    return np.column_stack([apply_q(f, eye[:, i]) for i in range(m)])


def _random_dataset(rng: SplitMix64, max_m: int = 40, max_n: int = 8) -> Dataset:
    n = rng.randint(1, max_n)
    m = rng.randint(n + 2, max_m)
    for _ in range(64):
        d = Dataset(rng.real_matrix(m, n), rng.real_vector(m))
        if design_rank(d) == n + 1:
            return d
    raise RuntimeError("could not draw a full-rank dataset")


def _check_distance_product(rng: SplitMix64, t: int, tol: float):
    """dist_qr * sqrt(det(A*A)) == sqrt(det((A|b)*(A|b))), in log domain.

    Every fifth trial degrades A to rank deficiency, where both sides must
    vanish at the Hadamard scale ||A|b||_F^(n+1).
    """
    m = rng.randint(2, 12)
    n = rng.randint(1, m - 1)
    a = rng.complex_matrix(m, n)
    if t % 5 == 4:
        a = _degrade_rank(rng, a)
    b = rng.complex_vector(m)
    res = distance_qr(a, b)
    ld_a, ld_ab = res.gram_logdet_a, res.gram_logdet_ab
    if not ld_a.is_zero and not ld_ab.is_zero and res.value > 0.0:
        dev = abs(math.expm1(math.log(res.value) + ld_a.log_mag / 2.0 - ld_ab.log_mag / 2.0))
    else:
        lhs = 0.0 if ld_a.is_zero else res.value * math.exp(ld_a.log_mag / 2.0)
        rhs = 0.0 if ld_ab.is_zero else math.exp(ld_ab.log_mag / 2.0)
        scale = max(float(np.linalg.norm(augment(a, b))) ** (n + 1), TINY)
        dev = abs(lhs - rhs) / scale
    return dev <= tol, dev


def _check_agreement(rng: SplitMix64, t: int, tol: float):
    """The three distance routes agree pairwise on full-rank instances."""
    m = rng.randint(2, 12)
    n = rng.randint(1, m - 1)
    a = _full_rank_complex(rng, m, n)
    b = rng.complex_vector(m)
    vals = [
        distance_det(a, b).value,
        distance_projection(a, b).value,
        distance_qr(a, b).value,
    ]
    dev = (max(vals) - min(vals)) / max(max(vals), TINY)
    return dev <= tol, dev


def _check_minor_sum(rng: SplitMix64, t: int, tol: float):
    """Sum of squared minors equals the Gram determinant; the minor vector is
    orthogonal to the column space and its squared norm is the same sum."""
    n = rng.randint(1, 6)
    a = rng.complex_matrix(n + 1, n)
    s = minor_sum(a)
    ld = gram_logdet(householder_qr(a, pivot=True))
    g = 0.0 if ld.is_zero else math.exp(ld.log_mag)
    dev_sum = abs(s - g) / max(s, g, TINY)
    bvec = orthogonal_minor_vector(a)
    nb = float(np.linalg.norm(bvec))
    na = float(np.linalg.norm(a))
    if nb == 0.0:
        dev_orth = 0.0
        dev_norm = abs(s) / max(s, TINY) if s else 0.0
    else:
        dev_orth = float(np.linalg.norm(a.conj().T @ bvec)) / max(na * nb, TINY)
        dev_norm = abs(nb * nb - s) / max(s, TINY)
    ok = dev_sum <= tol and dev_orth <= 1e-10 and dev_norm <= 1e-10
    return ok, max(dev_sum, dev_orth, dev_norm)


def _check_loss_equivalence(rng: SplitMix64, t: int, tol: float):
    """Determinant loss equals the residual norm of the normal solution."""
    d = _random_dataset(rng)
    dd = loss_value_det(d)
    dr = loss_value_residual(d, normal_solve(d))
    dev = _rel(dd, dr)
    return dev <= tol, dev


def _check_correlation_equivalence(rng: SplitMix64, t: int, tol: float):
    """Both correlation routes agree, stay in [0, 1], and close Pythagoras."""
    d = _random_dataset(rng)
    rho_d = multiple_correlation_det(d)
    rho_p = multiple_correlation_projection(d)
    dev_rho = abs(rho_d - rho_p)
    cv = center(d)
    ny2 = float(cv.y_hat @ cv.y_hat)
    delta = loss_value_det(d)
    pyth = abs(rho_d * rho_d + delta * delta / ny2 - 1.0)
    in_range = all(-1e-12 <= r <= 1.0 + 1e-12 for r in (rho_d, rho_p))
    ok = dev_rho <= tol and pyth <= tol and in_range
    return ok, max(dev_rho, pyth)


def _check_rank_relation(rng: SplitMix64, t: int, tol: float):
    """rank(1|X) == rank(centered X) + 1, also under injected constant and
    duplicated columns and for the square m = n + 1 shape.

    Injected constants are quantized to 2^-20 so that their column mean is
    exact and centering yields exact zeros; an unrepresentable mean leaves
    eps-size residue that no scale-free rank estimate can classify when the
    constant column is the only one.
    """
    n = rng.randint(1, 8)
    case = t % 4
    m = n + 1 if case == 3 else rng.randint(n + 2, 40)
    x = rng.real_matrix(m, n)
    if case == 1:
        x[:, rng.randint(0, n - 1)] = round(rng.uniform() * 2.0**20) * 2.0**-20
    elif case == 2:
        if n >= 2:
            x[:, rng.randint(1, n - 1)] = x[:, 0]
        else:
            x[:, 0] = round(rng.uniform() * 2.0**20) * 2.0**-20
    design = np.column_stack([np.ones(m), x])
    r_design = householder_qr(design, pivot=True).rank_estimate
    r_centered = householder_qr(x - x.mean(axis=0), pivot=True).rank_estimate
    ok = r_design == r_centered + 1
    return ok, 0.0 if ok else 1.0


def _check_unitary(rng: SplitMix64, t: int, tol: float):
    """All three distances are invariant under a random unitary map."""
    m = rng.randint(2, 10)
    n = rng.randint(1, m - 1)
    a = _full_rank_complex(rng, m, n)
    b = rng.complex_vector(m)
    u = _unitary(rng, m)
    ua = u @ a
    ub = u @ b
    dev = 0.0
    for fn in (distance_det, distance_projection, distance_qr):
        dev = max(dev, _rel(fn(a, b).value, fn(ua, ub).value))
    return dev <= tol, dev


def _logdet_ratio_dev(num, den) -> float:
    """|num/den - 1| for two LogDets expected to be equal."""
    if num.is_zero or den.is_zero:
        return 0.0 if num.is_zero and den.is_zero else 1.0
    ratio = (num.phase * den.phase.conjugate()) * math.exp(num.log_mag - den.log_mag)
    return abs(ratio - 1.0)


def _check_det_identities(rng: SplitMix64, t: int, tol: float):
    """det(MN) = det(M) det(N) and det(M*) = conj(det(M))."""
    k = rng.randint(1, 8)
    mm = rng.complex_matrix(k, k)
    nn = rng.complex_matrix(k, k)
    dev_prod = _logdet_ratio_dev(det_lu(mm) * det_lu(nn), det_lu(mm @ nn))
    dev_conj = _logdet_ratio_dev(det_lu(mm.conj().T), det_lu(mm).conjugate())
    ok = dev_prod <= tol and dev_conj <= 1e-12
    return ok, max(dev_prod, dev_conj)


def _check_psd_solve(rng: SplitMix64, t: int, tol: float):
    """Cholesky solve residual on G*G + I, and Gram matrices are hermitian
    positive semidefinite."""
    k = rng.randint(1, 10)
    g = rng.complex_matrix(k, k)
    gram = g.conj().T @ g
    h = gram + np.eye(k)
    rhs = rng.complex_vector(k)
    x = solve_hermitian_psd(h, rhs)
    dev_solve = float(np.linalg.norm(h @ x - rhs)) / max(float(np.linalg.norm(rhs)), TINY)
    dev_herm = float(np.max(np.abs(gram - gram.conj().T)))
    probe = rng.complex_vector(k)
    quad = float(np.vdot(probe, gram @ probe).real)
    ok = dev_solve <= tol and dev_herm <= 1e-14 and quad >= -1e-12
    return ok, max(dev_solve, dev_herm, max(0.0, -quad))


def _check_qr_gram(rng: SplitMix64, t: int, tol: float):
    """QR Gram log-determinant matches LU on the explicit Gram, is unitarily
    invariant, and the rank estimate survives column permutations."""
    m = rng.randint(1, 10)
    n = rng.randint(1, min(m, 6))
    a = rng.complex_matrix(m, n)
    f = householder_qr(a, pivot=True)
    ld_qr = gram_logdet(f)
    ld_lu = det_lu(a.conj().T @ a)
    if ld_qr.is_zero or ld_lu.is_zero:
        dev_lu = 0.0 if ld_qr.is_zero and abs(ld_lu.magnitude()) <= TINY else 1.0
        dev_uni = 0.0
    else:
        dev_lu = abs(math.expm1(ld_qr.log_mag - ld_lu.log_mag))
        u = _unitary(rng, m)
        ld_u = gram_logdet(householder_qr(u @ a, pivot=True))
        dev_uni = 1.0 if ld_u.is_zero else abs(math.expm1(ld_u.log_mag - ld_qr.log_mag))
    perm_rank = householder_qr(a[:, rng.permutation(n)], pivot=True).rank_estimate
    ok = dev_lu <= tol and dev_uni <= tol and perm_rank == f.rank_estimate
    return ok, max(dev_lu, dev_uni)


SUITES = (
    ("distance_product_identity", _check_distance_product, 1e-9),
    ("distance_agreement", _check_agreement, 1e-8),
    ("minor_sum_identity", _check_minor_sum, 1e-9),
    ("loss_value_equivalence", _check_loss_equivalence, 1e-8),
    ("correlation_equivalence", _check_correlation_equivalence, 1e-8),
    ("rank_relation", _check_rank_relation, 0.0),
    ("unitary_invariance", _check_unitary, 1e-9),
    ("det_identities", _check_det_identities, 1e-10),
    ("psd_solve", _check_psd_solve, 1e-9),
    ("qr_gram", _check_qr_gram, 1e-9),
)

SUITE_NAMES = tuple(name for name, _, _ in SUITES)


def run_suite(name: str, seed: int = 42, trials: int = 500, tolerance: float | None = None) -> SuiteResult:
    """Run one named suite; trial t draws from derive_seed(seed, index, t)."""
    if trials <= 0:
        raise ValueError("trials must be a positive integer")
    for index, (suite_name, fn, default_tol) in enumerate(SUITES):
        if suite_name == name:
            break
    else:
        raise ValueError(f"unknown suite {name!r}; known: {', '.join(SUITE_NAMES)}")
    tol = default_tol if tolerance is None else float(tolerance)
    failures = 0
    max_dev = 0.0
    for t in range(trials):
        rng = SplitMix64(derive_seed(seed, index, t))
        ok, dev = fn(rng, t, tol)
        if not ok:
            failures += 1
        if dev > max_dev:
            max_dev = dev
    return SuiteResult(name, trials, failures, max_dev, tol)


def run_all(seed: int = 42, trials: int = 500, tolerances: dict[str, float] | None = None) -> list[SuiteResult]:
    """Run every suite in registry order with a shared seed and trial count."""
    tolerances = tolerances or {}
    unknown = set(tolerances) - set(SUITE_NAMES)
    if unknown:
        raise ValueError(f"unknown suite names in tolerance overrides: {sorted(unknown)}")
    return [
        run_suite(name, seed=seed, trials=trials, tolerance=tolerances.get(name))
        for name in SUITE_NAMES
    ]
