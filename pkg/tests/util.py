"""Independent oracles shared across tests.

These deliberately avoid the library's own measure implementations:

* ``bloch_transfer`` reads the affine Bloch action (A, u) of a channel off
  its chi matrix by applying it to basis operators,
* ``exact_ball_max`` maximizes ||B P + d|| over the unit ball exactly via
  the eigenvalue secular equation (the displacement norm of a channel is
  2*||B P + d|| ... with B=(A-I)/2, d=u/2 it IS the decoherence measure),
* ``random_tp_chi`` draws random trace-preserving chi matrices by rejection
  sampling on positive semidefiniteness.
"""
import numpy as np

from decoq.channels import PAULI_BASIS, apply_chi, chi_from_parameters

SIGMA = PAULI_BASIS[1:]


def bloch_transfer(chi):
    """(A, u) with Bloch action P -> A P + u, computed by direct application."""
    a = np.zeros((3, 3))
    u = np.zeros(3)
    for j in range(3):
        out = apply_chi(chi, SIGMA[j] / 2)
        for i in range(3):
            a[i, j] = np.trace(SIGMA[i] @ out).real
    out = apply_chi(chi, np.eye(2, dtype=complex) / 2)
    for i in range(3):
        u[i] = np.trace(SIGMA[i] @ out).real
    return a, u


def exact_ball_max(b, d):
    """max over |P| <= 1 of ||b P + d||, solved exactly (3x3 secular equation)."""
    m = b.T @ b
    g = b.T @ d
    mu, vec = np.linalg.eigh(m)
    gt = vec.T @ g
    mmax = mu[-1]
    if np.linalg.norm(g) < 1e-14:
        return float(np.sqrt(max(mmax + d @ d, 0.0)))

    def nrm2(lam):
        return float(np.sum((gt / (lam - mu)) ** 2))

    if abs(gt[-1]) < 1e-13:
        # hard case: gradient has no component along the top eigenvector
        mask = mu < mmax - 1e-13
        n2 = float(np.sum((gt[mask] / (mmax - mu[mask])) ** 2))
        if n2 < 1.0:
            part = vec[:, mask] @ (gt[mask] / (mmax - mu[mask]))
            p = part + np.sqrt(1.0 - n2) * vec[:, -1]
            return float(np.linalg.norm(b @ p + d))
    lo = mmax + 1e-15
    hi = mmax + np.linalg.norm(g) + 1.0
    while nrm2(hi) > 1.0:
        hi = mmax + 2 * (hi - mmax)
    while nrm2(lo) < 1.0:
        lo = mmax + (lo - mmax) / 2
        if lo - mmax < 1e-300:
            break
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if nrm2(mid) > 1.0:
            lo = mid
        else:
            hi = mid
    p = vec @ (gt / (0.5 * (lo + hi) - mu))
    p /= np.linalg.norm(p)
    return float(np.linalg.norm(b @ p + d))


def measure_oracle(chi):
    """Decoherence measure via the independent transfer-matrix route."""
    a, u = bloch_transfer(chi)
    return exact_ball_max((a - np.eye(3)) / 2, u / 2)


def random_tp_chi(rng, zero_linear=True):
    """A random PSD trace-preserving chi matrix (rejection sampling)."""
    while True:
        c = np.zeros(13)
        c[1:4] = rng.uniform(0.0, 0.25, 3)
        c[5:13:2] = rng.uniform(-0.1, 0.1, 4)
        c[6:13:2] = rng.uniform(-0.1, 0.1, 4)
        if zero_linear:
            c[4] = c[6] = c[8] = 0.0
        else:
            c[4], c[6], c[8] = rng.uniform(-0.08, 0.08, 3)
        c[0] = 1.0 - c[1] - c[2] - c[3]
        chi = chi_from_parameters(c)
        if np.linalg.eigvalsh(chi).min() >= 1e-9:
            return chi
