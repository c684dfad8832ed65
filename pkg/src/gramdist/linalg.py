"""Dense matrix arithmetic: validated immutable arrays, determinants kept in
log form, and hermitian positive-definite solves.

Inputs are validated and copied; outputs come back with the writeable flag
cleared, so every operation behaves as a pure function over values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, NotPositiveDefinite, NotSquare, ShapeError

EPS = float(np.finfo(np.float64).eps)

_PHASE_TOL = 1e-9


def _frozen(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


def as_matrix(a) -> np.ndarray:
    """Validate a 2-d array-like and return a read-only float64/complex128 copy.

    Rejects empty axes and any non-finite entry.
    """
    arr = np.asarray(a)
    if arr.ndim != 2:
        raise ShapeError(f"expected a 2-d array, got ndim={arr.ndim}")
    m, n = arr.shape
    if m < 1 or n < 1:
        raise ShapeError(f"matrix dimensions must be positive, got {arr.shape}")
    dtype = np.complex128 if np.iscomplexobj(arr) else np.float64
    out = arr.astype(dtype, copy=True)
    if not np.isfinite(out).all():
        raise ValueError("matrix entries must be finite")
    return _frozen(out)


def as_vector(a) -> np.ndarray:
    """Validate a 1-d array-like; same rules as :func:`as_matrix`."""
    arr = np.asarray(a)
    if arr.ndim != 1:
        raise ShapeError(f"expected a 1-d array, got ndim={arr.ndim}")
    if arr.shape[0] < 1:
        raise ShapeError("vector length must be positive")
    dtype = np.complex128 if np.iscomplexobj(arr) else np.float64
    out = arr.astype(dtype, copy=True)
    if not np.isfinite(out).all():
        raise ValueError("vector entries must be finite")
    return _frozen(out)


def as_real_matrix(a) -> np.ndarray:
    """Like :func:`as_matrix` but rejects complex input."""
    if np.iscomplexobj(np.asarray(a)):
        raise TypeError("expected real data, got complex")
    return as_matrix(a)


def as_real_vector(a) -> np.ndarray:
    """Like :func:`as_vector` but rejects complex input."""
    if np.iscomplexobj(np.asarray(a)):
        raise TypeError("expected real data, got complex")
    return as_vector(a)


@dataclass(frozen=True)
class LogDet:
    """A determinant stored as a unit phase and the log of its magnitude.

    The zero determinant is the pair (phase 0, log_mag -inf).  Keeping
    determinants in this form makes ratios of badly scaled Gram determinants
    a subtraction in the exponent instead of an overflow.
    """

    phase: complex
    log_mag: float

    def __post_init__(self):
        phase = complex(self.phase)
        log_mag = float(self.log_mag)
        if math.isnan(log_mag) or log_mag == math.inf:
            raise ValueError("log_mag must be finite or -inf")
        if log_mag == -math.inf:
            if phase != 0:
                raise ValueError("the zero determinant must carry phase 0")
        else:
            mag = abs(phase)
            if abs(mag - 1.0) > _PHASE_TOL:
                raise ValueError(f"phase must have unit modulus, got |phase|={mag!r}")
            phase = phase / mag
        object.__setattr__(self, "phase", phase)
        object.__setattr__(self, "log_mag", log_mag)

    @classmethod
    def zero(cls) -> "LogDet":
        return cls(0j, -math.inf)

    @classmethod
    def from_value(cls, value) -> "LogDet":
        z = complex(value)
        if z == 0:
            return cls.zero()
        return cls(z / abs(z), math.log(abs(z)))

    @property
    def is_zero(self) -> bool:
        return self.log_mag == -math.inf

    def magnitude(self) -> float:
        """|det| as a plain double; raises OverflowError when it does not fit."""
        if self.is_zero:
            return 0.0
        return math.exp(self.log_mag)

    def value(self) -> complex:
        """The determinant itself; raises OverflowError when it does not fit."""
        if self.is_zero:
            return 0j
        return self.phase * math.exp(self.log_mag)

    def conjugate(self) -> "LogDet":
        return LogDet(self.phase.conjugate(), self.log_mag)

    def __mul__(self, other: "LogDet") -> "LogDet":
        if self.is_zero or other.is_zero:
            return LogDet.zero()
        return LogDet(self.phase * other.phase, self.log_mag + other.log_mag)


def conj_transpose(m) -> np.ndarray:
    """Conjugate transpose; a plain transpose for real input."""
    a = as_matrix(m)
    return _frozen(a.conj().T.copy())


def matmul(a, b) -> np.ndarray:
    """Matrix product with an explicit inner-dimension check."""
    x = as_matrix(a)
    y = as_matrix(b)
    if x.shape[1] != y.shape[0]:
        raise DimensionMismatch(
            f"inner dimensions differ: {x.shape} times {y.shape}"
        )
    return _frozen(x @ y)


def det_lu(m) -> LogDet:
    """Determinant by LU elimination with partial pivoting, in log form.

    The pivot is the largest remaining magnitude in the current column; each
    row swap flips the phase.  An exactly zero pivot short-circuits to the
    exact zero determinant.
    """
    a0 = as_matrix(m)
    n, ncols = a0.shape
    if n != ncols:
        raise NotSquare(f"determinant needs a square matrix, got {a0.shape}")
    a = a0.astype(np.complex128)
    phase = 1.0 + 0.0j
    log_mag = 0.0
    for k in range(n):
        p = k + int(np.argmax(np.abs(a[k:, k])))
        piv = a[p, k]
        if piv == 0:
            return LogDet.zero()
        if p != k:
            a[[k, p], k:] = a[[p, k], k:]
            phase = -phase
        mag = abs(piv)
        phase *= complex(piv.real / mag, piv.imag / mag)
        log_mag += math.log(mag)
        if k + 1 < n:
            a[k + 1 :, k + 1 :] -= np.outer(a[k + 1 :, k] / piv, a[k, k + 1 :])
    return LogDet(phase, log_mag)


def solve_hermitian_psd(h, rhs) -> np.ndarray:
    """Solve H x = rhs for hermitian positive definite H by Cholesky.

    The pivot tolerance is dim * eps * max(diag(H)); a pivot at or below it
    raises :class:`NotPositiveDefinite`.  Real inputs give a real solution.
    """
    h0 = as_matrix(h)
    b0 = as_vector(rhs)
    n = h0.shape[0]
    if h0.shape[1] != n:
        raise NotSquare(f"expected a square matrix, got {h0.shape}")
    if b0.shape[0] != n:
        raise DimensionMismatch(
            f"matrix is {n}x{n} but right-hand side has length {b0.shape[0]}"
        )
    real_in = not (np.iscomplexobj(h0) or np.iscomplexobj(b0))
    hm = h0.astype(np.complex128)
    b = b0.astype(np.complex128)
    tau = n * EPS * float(np.max(hm.diagonal().real))
    low = np.zeros((n, n), np.complex128)
    for j in range(n):
        d = hm[j, j].real - float(np.real(np.vdot(low[j, :j], low[j, :j])))
        if d <= tau:
            raise NotPositiveDefinite(
                f"pivot {d!r} at column {j} is at or below tolerance {tau!r}"
            )
        ljj = math.sqrt(d)
        low[j, j] = ljj
        if j + 1 < n:
            low[j + 1 :, j] = (hm[j + 1 :, j] - low[j + 1 :, :j] @ low[j, :j].conj()) / ljj
    y = np.zeros(n, np.complex128)
    for i in range(n):
        y[i] = (b[i] - low[i, :i] @ y[:i]) / low[i, i].real
    x = np.zeros(n, np.complex128)
    for i in range(n - 1, -1, -1):
        x[i] = (y[i] - np.vdot(low[i + 1 :, i], x[i + 1 :])) / low[i, i].real
    return _frozen(x.real.copy() if real_in else x)
