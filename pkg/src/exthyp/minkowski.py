"""Minkowski linear algebra over R^{n,1} and points of S^n_H.

The bilinear form has signature (n,1):

    <x, y> = -x0*y0 + x1*y1 + ... + xn*yn.

Points of the extended hyperbolic space S^n_H are stored as Euclidean
unit vectors of R^{n+1} together with their classification against the
null cone: hyperbolic (upper/lower disk), Lorentzian (de Sitter belt)
or ideal.  The Klein chart is the affine slice {x0 = 1}; conversion is
an explicit operation so that nothing breaks when x0 = 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from exthyp.config import CLASS_TOL, ORTHOGONALITY_TOL
from exthyp.errors import DimensionMismatch, ExtHypError


def minkowski_matrix(n: int) -> np.ndarray:
    """Gram matrix J = diag(-1, 1, ..., 1) of the form on R^{n,1}."""
    J = np.eye(n + 1)
    J[0, 0] = -1.0
    return J


def inner(u, v) -> float:
    """Minkowski inner product -u0*v0 + sum_{i>=1} ui*vi."""
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    if u.shape != v.shape or u.ndim != 1:
        raise DimensionMismatch(f"shapes {u.shape} and {v.shape} differ")
    return float(u[1:] @ v[1:] - u[0] * v[0])


def norm_origin(v) -> complex:
    """Norm <v,v>^(1/2) of a vector at the origin of R^{n,1}.

    The principal square root makes it positive real for spacelike,
    zero for null, and positive imaginary for timelike vectors.
    """
    q = inner(v, v)
    return complex(np.sqrt(complex(q)))


class PointClass(Enum):
    HYPERBOLIC_UPPER = "hyperbolic_upper"
    HYPERBOLIC_LOWER = "hyperbolic_lower"
    LORENTZIAN = "lorentzian"
    IDEAL = "ideal"

    @property
    def hyperbolic(self) -> bool:
        return self in (PointClass.HYPERBOLIC_UPPER, PointClass.HYPERBOLIC_LOWER)


@dataclass(frozen=True)
class ExtPoint:
    """A point of S^n_H: Euclidean-unit representative plus class."""

    rep: np.ndarray
    cls: PointClass

    @property
    def dim(self) -> int:
        return len(self.rep) - 1

    def chart(self) -> np.ndarray:
        """Klein chart image (x1/x0, ..., xn/x0); requires x0 != 0."""
        if abs(self.rep[0]) < CLASS_TOL:
            raise ExtHypError("chart image undefined on the equator x0 = 0")
        return np.asarray(self.rep[1:] / self.rep[0])

    def __neg__(self) -> "ExtPoint":
        return classify(-self.rep)


def classify(p, class_tol: float = CLASS_TOL) -> ExtPoint:
    """Normalize a nonzero vector to the Euclidean sphere and classify it.

    The ray of ``p`` is preserved.  Classification thresholds are applied
    to <rep,rep> on the unit representative, so they are scale free.
    """
    p = np.asarray(p, dtype=float)
    nrm = float(np.linalg.norm(p))
    if nrm == 0.0 or not np.all(np.isfinite(p)):
        raise ExtHypError("cannot classify the zero (or non-finite) vector")
    rep = p / nrm
    q = inner(rep, rep)
    if abs(q) <= class_tol:
        cls = PointClass.IDEAL
    elif q < 0:
        cls = PointClass.HYPERBOLIC_UPPER if rep[0] > 0 else PointClass.HYPERBOLIC_LOWER
    else:
        cls = PointClass.LORENTZIAN
    rep.setflags(write=False)
    return ExtPoint(rep, cls)


def from_chart(x) -> ExtPoint:
    """Point of S^n_H from Klein chart coordinates (x0 = 1 implied)."""
    x = np.asarray(x, dtype=float)
    return classify(np.concatenate(([1.0], x)))


def ideal_point(direction) -> ExtPoint:
    """Exact ideal point on the ray (1, unit(direction))."""
    d = np.asarray(direction, dtype=float)
    d = d / np.linalg.norm(d)
    p = classify(np.concatenate(([1.0], d)))
    return ExtPoint(p.rep, PointClass.IDEAL)


def dual(p: ExtPoint) -> tuple[np.ndarray, bool]:
    """Conormal c of the dual hyperplane x^perp = {y : <c,y> = 0}.

    Returns ``(c, tangent)`` where ``tangent`` flags an ideal base point,
    whose dual is the hyperplane tangent to the null cone along its ray.
    """
    return np.array(p.rep), p.cls is PointClass.IDEAL


# ---------------------------------------------------------------------------
# Isometries


@dataclass(frozen=True)
class Isometry:
    """An element of O(n,1), acting on column vectors."""

    matrix: np.ndarray

    @property
    def dim(self) -> int:
        return self.matrix.shape[0] - 1

    def __post_init__(self):
        g = np.asarray(self.matrix, dtype=float)
        if g.ndim != 2 or g.shape[0] != g.shape[1]:
            raise ExtHypError("isometry matrix must be square")
        object.__setattr__(self, "matrix", g)
        if self.defect() > 1e-8:
            raise ExtHypError("matrix does not satisfy g^T J g = J")

    def defect(self) -> float:
        """max |g^T J g - J|, the orthogonality residual."""
        J = minkowski_matrix(self.dim)
        return float(np.max(np.abs(self.matrix.T @ J @ self.matrix - J)))

    @property
    def preserves_upper(self) -> bool:
        """True for elements of PO(n,1), i.e. g00 > 0."""
        return self.matrix[0, 0] > 0

    def __matmul__(self, other: "Isometry") -> "Isometry":
        g = self.matrix @ other.matrix
        if _orthogonality_defect(g) > ORTHOGONALITY_TOL:
            g = reorthonormalize(g)
        return Isometry(g)

    def inverse(self) -> "Isometry":
        J = minkowski_matrix(self.dim)
        return Isometry(J @ self.matrix.T @ J)

    def __call__(self, p):
        """Apply to an ExtPoint or raw vector, reclassifying the image."""
        if isinstance(p, ExtPoint):
            return classify(self.matrix @ p.rep)
        return self.matrix @ np.asarray(p, dtype=float)


def _orthogonality_defect(g: np.ndarray) -> float:
    n = g.shape[0] - 1
    J = minkowski_matrix(n)
    return float(np.max(np.abs(g.T @ J @ g - J)))


def reorthonormalize(g: np.ndarray) -> np.ndarray:
    """Project a near-isometry back onto O(n,1).

    Gram-Schmidt in the Minkowski form on the columns, timelike column
    first; adequate for drift of order sqrt(machine eps).
    """
    g = np.array(g, dtype=float)
    n = g.shape[0] - 1
    cols = [g[:, j].copy() for j in range(n + 1)]
    signs = [-1.0] + [1.0] * n
    for j in range(n + 1):
        for k in range(j):
            cols[j] -= signs[k] * inner(cols[k], cols[j]) * cols[k]
        q = inner(cols[j], cols[j])
        if abs(q) < 1e-14:
            raise ExtHypError("reorthonormalization met a null column")
        cols[j] /= np.sqrt(abs(q))
    return np.column_stack(cols)


def identity(n: int) -> Isometry:
    return Isometry(np.eye(n + 1))


def boost(axis: int, t: float, n: int) -> Isometry:
    """Hyperbolic boost in the (x0, x_axis) plane with rapidity t."""
    if not 1 <= axis <= n:
        raise ExtHypError(f"boost axis {axis} out of range 1..{n}")
    g = np.eye(n + 1)
    c, s = np.cosh(t), np.sinh(t)
    g[0, 0] = c
    g[0, axis] = s
    g[axis, 0] = s
    g[axis, axis] = c
    return Isometry(g)


def rotation(i: int, j: int, theta: float, n: int) -> Isometry:
    """Euclidean rotation in the spatial (x_i, x_j) plane."""
    if not (1 <= i <= n and 1 <= j <= n) or i == j:
        raise ExtHypError(f"rotation axes ({i}, {j}) invalid for n={n}")
    g = np.eye(n + 1)
    c, s = np.cos(theta), np.sin(theta)
    g[i, i] = c
    g[j, j] = c
    g[i, j] = -s
    g[j, i] = s
    return Isometry(g)


def random_po(rng: np.random.Generator, n: int, words: int = 4,
              max_rapidity: float = 1.0) -> Isometry:
    """Random element of PO(n,1) as a short word in boosts and rotations."""
    g = identity(n)
    for _ in range(words):
        if n >= 2 and rng.random() < 0.5:
            i, j = rng.choice(np.arange(1, n + 1), size=2, replace=False)
            g = g @ rotation(int(i), int(j), rng.uniform(0, 2 * np.pi), n)
        else:
            axis = int(rng.integers(1, n + 1))
            g = g @ boost(axis, rng.uniform(-max_rapidity, max_rapidity), n)
    return g


# ---------------------------------------------------------------------------
# JSON helpers (vectors as arrays, matrices row-major; n inferred)


def vector_to_json(v) -> list[float]:
    return [float(x) for x in np.asarray(v).ravel()]


def matrix_to_json(m) -> list[float]:
    return [float(x) for x in np.asarray(m).ravel(order="C")]


def matrix_from_json(data: list[float]) -> np.ndarray:
    k = len(data)
    side = int(round(np.sqrt(k)))
    if side * side != k:
        raise ExtHypError("matrix payload is not square")
    return np.asarray(data, dtype=float).reshape(side, side)


def complex_to_json(z: complex) -> dict:
    return {"re": float(np.real(z)), "im": float(np.imag(z))}
