"""How far a channel moves states: D = sup_rho ||E(rho) - rho||.

The norm is the operator norm (largest eigenvalue magnitude).  Because
E - id is affine in rho and the norm is convex, the supremum is attained on
pure states, i.e. on the Bloch sphere; every routine here therefore works
with Bloch vectors P.

For a trace-preserving qubit channel E(rho) - rho is traceless, and
``||E(rho_P) - rho_P||^2`` is an explicit quadratic Q(P) = P^T M P + b.P + c
in the Bloch vector.  The coefficients below were obtained by expanding
``sum_ab chi_ab E_a rho E_b^dag - rho`` in the 12-parameter form of a
trace-preserving chi matrix (see chi_parameters) and verified against the
Bloch transfer-matrix construction: M = (A - I)^T (A - I)/4 whenever the
linear parameters vanish.

Four routes to D are provided:

* measure_diagonal   -- closed form for diagonal chi (Pauli channels),
* measure_quadratic  -- sqrt of the top eigenvalue of M (needs b = 0),
* measure_general    -- deterministic grid + refinement on sqrt(Q(P)),
* measure_by_definition -- brute-force grid maximum straight from the Kraus
  operators, used as an independent cross-check of the other three.
"""
from __future__ import annotations

import numpy as np

from .channels import KrausChannel, apply_channel, bloch_density, chi_parameters

DIAG_ATOL = 1e-12     # off-diagonal mass allowed by the diagonal shortcut
LINEAR_ATOL = 1e-12   # linear-parameter mass allowed by the quadratic form
AUTO_DIAG_ATOL = 1e-10


def fibonacci_sphere(n: int) -> np.ndarray:
    """n nearly uniform points on the unit sphere (golden-angle lattice)."""
    if n < 1:
        raise ValueError("need at least one point")
    i = np.arange(n) + 0.5
    phi = np.pi * (3.0 - np.sqrt(5.0)) * i
    z = 1.0 - 2.0 * i / n
    r = np.sqrt(np.maximum(0.0, 1.0 - z * z))
    return np.stack([r * np.cos(phi), r * np.sin(phi), z], axis=1)


def measure_diagonal(chi: np.ndarray) -> float:
    """D for a diagonal chi matrix: chi1 + chi2 + chi3 - min(chi1, chi2, chi3).

    Equivalently the largest pairwise sum of the three Pauli weights.
    """
    chi = np.asarray(chi)
    off = chi - np.diag(np.diag(chi))
    if np.abs(off).max() > DIAG_ATOL:
        raise ValueError("chi matrix is not diagonal; use the general measure")
    c1, c2, c3 = chi[1, 1].real, chi[2, 2].real, chi[3, 3].real
    return c1 + c2 + c3 - min(c1, c2, c3)


def _objective_terms(chi: np.ndarray):
    """Coefficients (M, b, const) of ||E(rho_P) - rho_P||^2 = P^T M P + b.P + const."""
    c = chi_parameters(chi)
    m = np.empty((3, 3))
    m[0, 0] = (c[10] ** 2 + 2 * c[10] * c[9] + c[11] ** 2 - 2 * c[11] * c[7]
               + c[2] ** 2 + 2 * c[2] * c[3] + c[3] ** 2 + c[7] ** 2 + c[9] ** 2)
    m[1, 1] = (c[1] ** 2 + 2 * c[1] * c[3] + c[10] ** 2 - 2 * c[10] * c[9]
               + c[12] ** 2 + 2 * c[12] * c[5] + c[3] ** 2 + c[5] ** 2 + c[9] ** 2)
    m[2, 2] = (c[1] ** 2 + 2 * c[1] * c[2] + c[11] ** 2 + 2 * c[11] * c[7]
               + c[12] ** 2 - 2 * c[12] * c[5] + c[2] ** 2 + c[5] ** 2 + c[7] ** 2)
    m[0, 1] = m[1, 0] = -(c[1] * c[10] + c[1] * c[9] + c[10] * c[2]
                          + 2 * c[10] * c[3] - c[11] * c[12] - c[11] * c[5]
                          + c[12] * c[7] - c[2] * c[9] + c[5] * c[7])
    m[0, 2] = m[2, 0] = (-c[1] * c[11] + c[1] * c[7] + c[10] * c[12]
                         - c[10] * c[5] - 2 * c[11] * c[2] - c[11] * c[3]
                         + c[12] * c[9] - c[3] * c[7] - c[5] * c[9])
    m[1, 2] = m[2, 1] = -(2 * c[1] * c[12] - c[10] * c[11] - c[10] * c[7]
                          + c[11] * c[9] + c[12] * c[2] + c[12] * c[3]
                          + c[2] * c[5] - c[3] * c[5] + c[7] * c[9])
    b = np.array([
        -4 * (-c[10] * c[6] - c[11] * c[8] + c[2] * c[4] + c[3] * c[4]
              - c[6] * c[9] + c[7] * c[8]),
        -4 * (c[1] * c[6] - c[10] * c[4] - c[12] * c[8] + c[3] * c[6]
              + c[4] * c[9] - c[5] * c[8]),
        -4 * (c[1] * c[8] - c[11] * c[4] - c[12] * c[6] + c[2] * c[8]
              - c[4] * c[7] + c[5] * c[6]),
    ])
    const = 4 * (c[4] ** 2 + c[6] ** 2 + c[8] ** 2)
    return m, b, const


def build_quadratic_form(chi: np.ndarray) -> np.ndarray:
    """The 3x3 form M with D^2 = max_{|P|=1} P^T M P, valid when b vanishes.

    Requires the three linear parameters (real parts of the first chi row's
    off-diagonal entries) to be zero; such channels are unital and the
    displacement norm is a pure quadratic form in the Bloch vector.
    """
    chi = np.asarray(chi)
    c = chi_parameters(chi)
    if max(abs(c[4]), abs(c[6]), abs(c[8])) > LINEAR_ATOL:
        raise ValueError("chi has linear Bloch terms; the quadratic form "
                         "does not capture them (use measure_general)")
    m, _, _ = _objective_terms(chi)
    return m


def measure_quadratic(chi: np.ndarray) -> float:
    """D as sqrt of the largest eigenvalue of the quadratic form."""
    m = build_quadratic_form(chi)
    return float(np.sqrt(max(np.linalg.eigvalsh(m)[-1], 0.0)))


def _sphere_objective(m, b, const):
    def f(p):
        q = p @ m @ p + b @ p + const
        return np.sqrt(q) if q > 0.0 else 0.0
    return f


def _refine_on_sphere(f, p0, iters: int) -> tuple:
    """Deterministic coordinate ascent on the sphere.

    Golden-section line searches along two orthogonal great circles through
    the current point, with a window that shrinks once a pass stops moving.
    """
    inv_gold = (np.sqrt(5.0) - 1.0) / 2.0
    p = np.array(p0, dtype=float)
    p /= np.linalg.norm(p)
    best = f(p)
    half = np.pi / 2
    for _ in range(iters):
        moved = False
        # orthonormal frame at p
        seed = np.array([1.0, 0.0, 0.0]) if abs(p[0]) < 0.9 else np.array([0.0, 1.0, 0.0])
        t1 = np.cross(p, seed)
        t1 /= np.linalg.norm(t1)
        t2 = np.cross(p, t1)
        for t in (t1, t2):
            def on_circle(theta, p=p, t=t):
                q = np.cos(theta) * p + np.sin(theta) * t
                return q / np.linalg.norm(q)

            a, bnd = -half, half
            x1 = bnd - inv_gold * (bnd - a)
            x2 = a + inv_gold * (bnd - a)
            f1 = f(on_circle(x1))
            f2 = f(on_circle(x2))
            for _ in range(60):
                if f1 < f2:
                    a, x1, f1 = x1, x2, f2
                    x2 = a + inv_gold * (bnd - a)
                    f2 = f(on_circle(x2))
                else:
                    bnd, x2, f2 = x2, x1, f1
                    x1 = bnd - inv_gold * (bnd - a)
                    f1 = f(on_circle(x1))
            # best of: converged interior point, window endpoints
            for theta in ((a + bnd) / 2, -half, half):
                cand = on_circle(theta)
                fc = f(cand)
                if fc > best:
                    best, p = fc, cand
                    moved = True
        if not moved:
            half *= 0.6
        if half < 1e-12:
            break
    return best, p


def measure_general(chi: np.ndarray, grid_density: int = 2048,
                    refine_iters: int = 40) -> float:
    """D by deterministic maximization of sqrt(Q(P)) over the unit sphere.

    Candidates are the six coordinate poles, the eigenvector directions of the
    quadratic part, and a golden-angle lattice of ``grid_density`` points; the
    best candidate is polished by golden-section coordinate ascent.  The two
    eigenvalue branches of E(rho)-rho are +-sqrt(Q), so maximizing |.| over
    both branches is the same as maximizing sqrt(Q).
    """
    if grid_density < 8:
        raise ValueError("grid_density must be at least 8")
    chi = np.asarray(chi)
    m, b, const = _objective_terms(chi)

    pts = [np.eye(3), -np.eye(3)]
    w, v = np.linalg.eigh(m)
    pts += [v.T, -v.T]
    pts.append(fibonacci_sphere(grid_density))
    pts = np.concatenate(pts, axis=0)

    q = np.einsum("ni,ij,nj->n", pts, m, pts) + pts @ b + const
    vals = np.sqrt(np.maximum(q, 0.0))
    k = int(np.argmax(vals))
    best, _ = _refine_on_sphere(_sphere_objective(m, b, const), pts[k], refine_iters)
    return float(max(best, vals[k]))


def measure_by_definition(channel: KrausChannel, grid_density: int = 10_000) -> float:
    """Brute-force D: max over a Bloch-sphere grid of ||E(rho) - rho||.

    Independent of the chi-based formulas: pure states are built from the
    grid, pushed through the Kraus operators, and the displacement's largest
    eigenvalue magnitude is read off directly (for a Hermitian 2x2 with mean
    eigenvalue h and determinant det it is |h| + sqrt(h^2 - det)).  Accurate
    to the grid resolution only.
    """
    if channel.dim != 2:
        raise ValueError("defined for single-qubit channels")
    if grid_density < 8:
        raise ValueError("grid_density must be at least 8")
    pts = fibonacci_sphere(grid_density)
    rho = np.empty((grid_density, 2, 2), dtype=complex)
    rho[:, 0, 0] = (1.0 + pts[:, 2]) / 2.0
    rho[:, 1, 1] = (1.0 - pts[:, 2]) / 2.0
    rho[:, 0, 1] = (pts[:, 0] - 1j * pts[:, 1]) / 2.0
    rho[:, 1, 0] = (pts[:, 0] + 1j * pts[:, 1]) / 2.0
    delta = -rho
    for op in channel.operators:
        delta += np.einsum("ab,nbc,dc->nad", op, rho, op.conj())
    h = (delta[:, 0, 0] + delta[:, 1, 1]).real / 2.0
    det = (delta[:, 0, 0] * delta[:, 1, 1]
           - delta[:, 0, 1] * delta[:, 1, 0]).real
    vals = np.abs(h) + np.sqrt(np.maximum(h * h - det, 0.0))
    return float(vals.max())


def measure_auto(chi: np.ndarray, grid_density: int = 2048,
                 refine_iters: int = 40) -> float:
    """Dispatch: diagonal shortcut, else quadratic form, else general search."""
    chi = np.asarray(chi, dtype=complex)
    tr = np.trace(chi).real
    if abs(tr) > 1e-8 and abs(tr - 1.0) > 1e-14:
        chi = chi / tr
    off = chi - np.diag(np.diag(chi))
    if np.abs(off).max() <= AUTO_DIAG_ATOL:
        return measure_diagonal(np.diag(np.diag(chi)))
    c = chi_parameters(chi)
    if max(abs(c[4]), abs(c[6]), abs(c[8])) <= LINEAR_ATOL:
        return measure_quadratic(chi)
    return measure_general(chi, grid_density=grid_density, refine_iters=refine_iters)
