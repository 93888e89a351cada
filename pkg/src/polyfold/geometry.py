"""Halfspace geometry: reflections, H-polytopes, hulls, obtuseness, projection.

Convex bodies are kept in H-representation throughout: a polytope is an
ordered list of halfspaces {x : xi . x <= c} with unit outward normals xi.
Vertex representations appear only transiently (hull construction, vertex
enumeration for adjacency and sampling).  The module provides:

- affine reflections across hyperplanes and single-halfspace folds,
- `HPolytope` with validation (bounded, irredundant, K >= N+1),
- dilation about the origin, membership tests, facet-distance extremes,
- obtuseness certificates for adjacent facet pairs (N <= 3),
- 2D convex hulls (monotone chain) and obtuse offset hulls,
- an exact nearest-point projection for N <= 2 and a Dykstra scheme for N=3,
- a line-oriented polytope file format.

All types are immutable after construction and all operations are pure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np
from scipy.optimize import linprog

UNIT_NORMAL_TOL = 1e-12
# Membership band used by `project` so that projecting a just-computed
# projection returns it bit-identically (idempotence in floating point).
PROJECT_FEASIBILITY_BAND = 1e-12
DYKSTRA_RESIDUAL_TOL = 1e-10
DYKSTRA_MAX_CYCLES = 100_000
CHAMFER_ITERATION_CAP = 64


class GeometryError(ValueError):
    """Base class for geometric construction and validation failures."""


class InvalidInputError(GeometryError):
    pass


class DegenerateHullError(GeometryError):
    pass


class UnsupportedDimensionError(GeometryError):
    pass


class ConstructionFailedError(GeometryError):
    pass


def _as_point(p, dim: int | None = None) -> np.ndarray:
    q = np.asarray(p, dtype=float)
    if q.ndim != 1:
        raise InvalidInputError(f"expected a point (1-d array), got shape {q.shape}")
    if dim is not None and q.shape[0] != dim:
        raise InvalidInputError(f"expected a point in R^{dim}, got R^{q.shape[0]}")
    if not np.all(np.isfinite(q)):
        raise InvalidInputError("point has non-finite entries")
    return q


@dataclass(frozen=True, eq=False)
class Halfspace:
    """Closed halfspace {x : normal . x <= offset} with unit outward normal."""

    normal: np.ndarray
    offset: float

    def __post_init__(self):
        n = np.asarray(self.normal, dtype=float)
        n.setflags(write=False)
        object.__setattr__(self, "normal", n)
        object.__setattr__(self, "offset", float(self.offset))
        if n.ndim != 1 or n.shape[0] < 1:
            raise InvalidInputError("halfspace normal must be a 1-d vector")
        if not np.all(np.isfinite(n)) or not math.isfinite(self.offset):
            raise InvalidInputError("halfspace has non-finite entries")
        if abs(np.linalg.norm(n) - 1.0) > UNIT_NORMAL_TOL:
            raise InvalidInputError(
                f"halfspace normal must be unit length within {UNIT_NORMAL_TOL:g} "
                f"(got |n| = {np.linalg.norm(n)!r})"
            )

    @classmethod
    def from_anchor(cls, normal, anchor) -> "Halfspace":
        """Halfspace through `anchor` with outward `normal`."""
        n = np.asarray(normal, dtype=float)
        return cls(n, float(n @ np.asarray(anchor, dtype=float)))

    @property
    def dim(self) -> int:
        return self.normal.shape[0]

    def signed_distance(self, p) -> float:
        """Positive outside, negative inside, zero on the hyperplane."""
        return float(self.normal @ _as_point(p, self.dim) - self.offset)

    def contains(self, p, tol: float = 0.0) -> bool:
        return self.signed_distance(p) <= tol


def reflect(p, h: Halfspace) -> np.ndarray:
    """Reflect a point across the hyperplane {x : n . x = c} of a halfspace.

    An isometry and an involution; points on the hyperplane are fixed.
    """
    q = _as_point(p, h.dim)
    return q - 2.0 * (h.normal @ q - h.offset) * h.normal


def _vertex_loop_from_sorted(A: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Vertices of an irredundant 2D H-polytope, one per consecutive normal pair."""
    angles = np.arctan2(A[:, 1], A[:, 0])
    order = np.argsort(angles, kind="stable")
    K = len(order)
    verts = np.empty((K, 2))
    for i in range(K):
        j0, j1 = order[i], order[(i + 1) % K]
        M = np.array([A[j0], A[j1]])
        rhs = np.array([b[j0], b[j1]])
        det = M[0, 0] * M[1, 1] - M[0, 1] * M[1, 0]
        if abs(det) < 1e-14:
            raise InvalidInputError("consecutive facet normals are parallel")
        verts[i] = np.linalg.solve(M, rhs)
    return verts


class HPolytope:
    """Bounded convex polytope as an ordered intersection of halfspaces.

    The stored halfspace order is significant (folding maps apply folds in
    this order).  Construction validates K >= N+1, unit normals, boundedness,
    and irredundancy; operations that dilate about the origin additionally
    require the origin strictly inside (all offsets positive).
    """

    def __init__(self, normals, offsets, *, validate: bool = True):
        A = np.asarray(normals, dtype=float)
        b = np.asarray(offsets, dtype=float).reshape(-1)
        if A.ndim != 2 or A.shape[0] != b.shape[0]:
            raise InvalidInputError("normals must be (K, N) with K matching offsets")
        A = A.copy()
        b = b.copy()
        A.setflags(write=False)
        b.setflags(write=False)
        self._A = A
        self._b = b
        if validate:
            self._validate()

    @classmethod
    def from_halfspaces(cls, halfspaces: Iterable[Halfspace], *, validate: bool = True) -> "HPolytope":
        hs = list(halfspaces)
        if not hs:
            raise InvalidInputError("empty halfspace list")
        A = np.array([h.normal for h in hs], dtype=float)
        b = np.array([h.offset for h in hs], dtype=float)
        return cls(A, b, validate=validate)

    @property
    def normals(self) -> np.ndarray:
        return self._A

    @property
    def offsets(self) -> np.ndarray:
        return self._b

    @property
    def dim(self) -> int:
        return self._A.shape[1]

    @property
    def num_facets(self) -> int:
        return self._A.shape[0]

    @cached_property
    def halfspaces(self) -> tuple[Halfspace, ...]:
        return tuple(Halfspace(self._A[j], self._b[j]) for j in range(self.num_facets))

    def __repr__(self) -> str:
        return f"HPolytope(dim={self.dim}, facets={self.num_facets})"

    # -- validation ---------------------------------------------------------

    def _validate(self):
        A, b = self._A, self._b
        K, N = A.shape
        if not (np.all(np.isfinite(A)) and np.all(np.isfinite(b))):
            raise InvalidInputError("polytope data has non-finite entries")
        if K < N + 1:
            raise InvalidInputError(f"need at least N+1 = {N + 1} halfspaces, got {K}")
        norms = np.linalg.norm(A, axis=1)
        if np.any(np.abs(norms - 1.0) > UNIT_NORMAL_TOL):
            raise InvalidInputError("all normals must be unit length within 1e-12")
        if not self._is_bounded():
            raise InvalidInputError("polytope is unbounded (normals do not span positively)")
        redundant = self._redundant_indices()
        if redundant:
            raise InvalidInputError(f"redundant halfspaces at indices {sorted(redundant)}")

    def _is_bounded(self) -> bool:
        # Bounded iff the recession cone {d : A d <= 0} is {0}: no coordinate
        # of a recession direction can be pushed away from zero.
        A = self._A
        N = self.dim
        for i in range(N):
            for sign in (1.0, -1.0):
                c = np.zeros(N)
                c[i] = -sign  # linprog minimizes; maximize sign * d_i
                res = linprog(c, A_ub=A, b_ub=np.zeros(len(A)),
                              bounds=[(-1.0, 1.0)] * N, method="highs")
                if not res.success or -res.fun > 1e-9:
                    return False
        return True

    def _redundant_indices(self) -> list[int]:
        A, b = self._A, self._b
        K, N = A.shape
        box = float(np.max(np.abs(b))) * 10.0 + 10.0
        out = []
        for j in range(K):
            mask = np.arange(K) != j
            res = linprog(-A[j], A_ub=A[mask], b_ub=b[mask],
                          bounds=[(-box, box)] * N, method="highs")
            if res.success and -res.fun <= b[j] + 1e-9:
                out.append(j)
        return out

    # -- basic queries ------------------------------------------------------

    def contains(self, p, tol: float = 0.0) -> bool:
        """True iff every facet constraint holds within `tol`."""
        if tol < 0:
            raise InvalidInputError("tolerance must be nonnegative")
        q = _as_point(p, self.dim)
        return bool(np.max(self._A @ q - self._b) <= tol)

    def contains_many(self, points, tol: float = 0.0) -> np.ndarray:
        P = np.asarray(points, dtype=float)
        return np.max(P @ self._A.T - self._b, axis=-1) <= tol

    def max_violation(self, points) -> float:
        """Largest constraint excess over a batch of points (<= 0 means inside)."""
        P = np.asarray(points, dtype=float)
        return float(np.max(P @ self._A.T - self._b))

    def requires_interior_origin(self):
        if np.min(self._b) <= 0.0:
            raise InvalidInputError(
                "operation requires the origin strictly inside the polytope "
                "(all offsets positive); translate the body first"
            )

    def translated(self, shift) -> "HPolytope":
        """The polytope shifted by `shift` (x in result iff x - shift in self)."""
        z = _as_point(shift, self.dim)
        return HPolytope(self._A, self._b + self._A @ z, validate=False)

    @cached_property
    def vertices(self) -> np.ndarray:
        """Vertex array; rows ordered CCW for N=2, unordered for N=3."""
        N = self.dim
        if N == 1:
            # facets are the points b_j / a_j with a_j = +-1
            neg = self._A[:, 0] < 0
            pos = self._A[:, 0] > 0
            if not (np.any(neg) and np.any(pos)):
                raise InvalidInputError("1D polytope must be bounded on both sides")
            lo = float(np.max(-self._b[neg] / -self._A[neg, 0]))
            hi = float(np.min(self._b[pos] / self._A[pos, 0]))
            return np.array([[lo], [hi]])
        if N == 2:
            return _vertex_loop_from_sorted(self._A, self._b)
        if N == 3:
            from scipy.spatial import HalfspaceIntersection

            interior = self.interior_point()
            hs = np.hstack([self._A, -self._b[:, None]])
            inter = HalfspaceIntersection(hs, interior)
            uniq: list[np.ndarray] = []
            for p in inter.intersections:
                if not any(np.linalg.norm(p - q) < 1e-9 for q in uniq):
                    uniq.append(p)
            return np.array(uniq)
        raise UnsupportedDimensionError(f"vertex enumeration unsupported for N={N}")

    def interior_point(self) -> np.ndarray:
        """A point strictly inside (Chebyshev center via LP)."""
        A, b = self._A, self._b
        N = self.dim
        c = np.zeros(N + 1)
        c[-1] = -1.0
        A_ub = np.hstack([A, np.ones((len(A), 1))])
        res = linprog(c, A_ub=A_ub, b_ub=b, bounds=[(None, None)] * N + [(0, None)],
                      method="highs")
        if not res.success or res.x[-1] <= 0:
            raise InvalidInputError("polytope has empty interior")
        return res.x[:N]

    def diameter(self) -> float:
        V = self.vertices
        d = V[:, None, :] - V[None, :, :]
        return float(np.sqrt(np.max(np.sum(d * d, axis=-1))))

    def bounding_box(self) -> tuple[np.ndarray, np.ndarray]:
        V = self.vertices
        return V.min(axis=0), V.max(axis=0)


def dilate(C: HPolytope, s: float) -> HPolytope:
    """Scale the polytope about the origin: offsets scale, normals unchanged."""
    if not (isinstance(s, (int, float)) and math.isfinite(s)) or s <= 0:
        raise InvalidInputError(f"dilation factor must be positive, got {s!r}")
    C.requires_interior_origin()
    return HPolytope(C.normals, float(s) * C.offsets, validate=False)


def contains(C: HPolytope, p, tol: float = 0.0) -> bool:
    return C.contains(p, tol)


def facet_distance_range(C: HPolytope) -> tuple[float, float]:
    """(min, max) distance from the origin to the facet hyperplanes.

    With unit normals and the origin inside, the distance to hyperplane j is
    its offset, so this is (min_j c_j, max_j c_j).
    """
    C.requires_interior_origin()
    return float(np.min(C.offsets)), float(np.max(C.offsets))


# -- obtuseness --------------------------------------------------------------


@dataclass(frozen=True)
class ObtusenessCertificate:
    """Dot products of adjacent facet normals and the pass verdict per pair.

    A pair passes iff 0 <= dot <= 1.  The upper bound is automatic for unit
    normals; only the lower bound can fail.
    """

    pairs: tuple[tuple[int, int, float, bool], ...]

    @property
    def passed(self) -> bool:
        return all(ok for (_, _, _, ok) in self.pairs)

    @property
    def failing_pairs(self) -> tuple[tuple[int, int, float], ...]:
        return tuple((i, j, d) for (i, j, d, ok) in self.pairs if not ok)


def _adjacent_pairs(C: HPolytope) -> list[tuple[int, int]]:
    N = C.dim
    if N == 1:
        return []
    if N == 2:
        angles = np.arctan2(C.normals[:, 1], C.normals[:, 0])
        order = np.argsort(angles, kind="stable")
        K = len(order)
        return [(int(order[i]), int(order[(i + 1) % K])) for i in range(K)]
    if N == 3:
        V = C.vertices
        A, b = C.normals, C.offsets
        active = [set(np.where(np.abs(A @ v - b) <= 1e-9)[0]) for v in V]
        pairs = set()
        K = C.num_facets
        for i in range(K):
            for j in range(i + 1, K):
                shared = sum(1 for s in active if i in s and j in s)
                if shared >= 2:  # facets meet in a ridge (edge)
                    pairs.add((i, j))
        return sorted(pairs)
    raise UnsupportedDimensionError(f"facet adjacency unsupported for N={N}")


def check_obtuse(C: HPolytope) -> ObtusenessCertificate:
    """Certificate that adjacent facet normals have dot products in [0, 1]."""
    pairs = []
    for (i, j) in _adjacent_pairs(C):
        d = float(C.normals[i] @ C.normals[j])
        pairs.append((i, j, d, bool(0.0 <= d <= 1.0 + UNIT_NORMAL_TOL)))
    return ObtusenessCertificate(tuple(pairs))


# -- 2D hulls ----------------------------------------------------------------


def _monotone_chain(points: np.ndarray) -> np.ndarray:
    """CCW extreme points of a 2D cloud; collinear points are dropped."""
    pts = np.unique(points, axis=0)  # lexicographic sort + dedupe
    if len(pts) < 3:
        raise DegenerateHullError("need at least 3 distinct points")

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower: list[np.ndarray] = []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0.0:
            lower.pop()
        lower.append(p)
    upper: list[np.ndarray] = []
    for p in pts[::-1]:
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0.0:
            upper.pop()
        upper.append(p)
    loop = lower[:-1] + upper[:-1]
    if len(loop) < 3:
        raise DegenerateHullError("points are collinear")
    return np.array(loop)


def _polygon_to_halfspaces(verts: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """H-representation of a CCW vertex loop (outward normals, offsets)."""
    K = len(verts)
    A = np.empty((K, 2))
    b = np.empty(K)
    for i in range(K):
        v0, v1 = verts[i], verts[(i + 1) % K]
        e = v1 - v0
        n = np.array([e[1], -e[0]])
        norm = np.linalg.norm(n)
        if norm < 1e-15:
            raise DegenerateHullError("zero-length hull edge")
        n /= norm
        A[i] = n
        b[i] = n @ v0
    return A, b


def hull2d(points) -> HPolytope:
    """Irredundant H-representation of the convex hull of a planar cloud.

    Output vertices are exactly the extreme points of the input.  The result
    is kept in the input's coordinates, so it contains every input point; the
    origin need not be inside.
    """
    P = np.asarray(points, dtype=float)
    if P.ndim != 2 or P.shape[1] != 2:
        raise InvalidInputError(f"expected an (n, 2) point array, got {P.shape}")
    if len(P) < 3:
        raise DegenerateHullError("need at least 3 points")
    if not np.all(np.isfinite(P)):
        raise InvalidInputError("points have non-finite entries")
    loop = _monotone_chain(P)
    A, b = _polygon_to_halfspaces(loop)
    return HPolytope(A, b, validate=False)


def support(points: np.ndarray, direction: np.ndarray) -> float:
    """Support value max_p d . p of a point cloud."""
    return float(np.max(np.asarray(points, dtype=float) @ np.asarray(direction, dtype=float)))


def _clip_polygon(loop: np.ndarray, normal: np.ndarray, offset: float) -> np.ndarray:
    """Sutherland–Hodgman clip of a CCW polygon by {x : n . x <= c}."""
    out: list[np.ndarray] = []
    K = len(loop)
    d = loop @ normal - offset
    for i in range(K):
        p0, p1 = loop[i], loop[(i + 1) % K]
        d0, d1 = d[i], d[(i + 1) % K]
        if d0 <= 0.0:
            out.append(p0)
        if (d0 < 0.0 < d1) or (d1 < 0.0 < d0):
            t = d0 / (d0 - d1)
            out.append(p0 + t * (p1 - p0))
    if len(out) < 3:
        raise DegenerateHullError("clipping emptied the polygon")
    return np.array(out)


def _octagon_vertices(radius: float) -> np.ndarray:
    """Vertices of the regular 8-gon circumscribing the `radius`-ball."""
    r = radius / math.cos(math.pi / 8.0)
    ang = math.pi / 8.0 + np.arange(8) * (math.pi / 4.0)
    return np.column_stack([r * np.cos(ang), r * np.sin(ang)])


def offset_hull(trace, alpha: float) -> tuple[HPolytope, np.ndarray]:
    """Obtuse polytope sandwiched between co(trace) and its alpha/2-neighborhood.

    The hull of the trace is inflated by a Minkowski sum with the regular
    8-gon circumscribing the (alpha/4)-ball (realized as halfspace offsets on
    the merged normal fan), then chamfered wherever adjacent facet normals
    still have negative dot (bisector cut at depth alpha/8, guarded so the
    inner hull is never cut; cap 64 rounds).  The sum already keeps adjacent
    normal gaps <= pi/4, so the chamfer loop is a safety net.

    The result is translated so the origin is strictly inside; returns
    (polytope, translation) with world point x inside iff x - translation is
    inside the returned polytope.
    """
    if not (isinstance(alpha, (int, float)) and alpha > 0):
        raise InvalidInputError("alpha must be positive")
    T = np.asarray(trace, dtype=float)
    base = hull2d(T)  # raises DegenerateHullError on flat input
    base_verts = base.vertices
    oct_verts = _octagon_vertices(alpha / 4.0)

    # Merged normal fan: base normals plus the 8-gon normals, offsets by the
    # Minkowski support (h_base + h_octagon per direction).
    oct_ang = np.arange(8) * (math.pi / 4.0)
    oct_normals = np.column_stack([np.cos(oct_ang), np.sin(oct_ang)])
    dirs = [base.normals[i] for i in range(base.num_facets)]
    for n in oct_normals:
        if all(np.linalg.norm(n - d) > 1e-12 for d in dirs):
            dirs.append(n)
    A = np.array(dirs)
    b = np.array([support(base_verts, n) + support(oct_verts, n) for n in A])

    # Canonicalize by clipping a generous box, then rebuilding from vertices.
    span = float(np.max(np.abs(base_verts))) + alpha + 1.0
    loop = np.array([[-span, -span], [span, -span], [span, span], [-span, span]])
    for n, c in zip(A, b):
        loop = _clip_polygon(loop, n, c)
    poly = hull2d(loop)

    for _ in range(CHAMFER_ITERATION_CAP):
        cert = check_obtuse(poly)
        if cert.passed:
            break
        verts = poly.vertices
        An, bn = poly.normals, poly.offsets
        angles = np.arctan2(An[:, 1], An[:, 0])
        order = np.argsort(angles, kind="stable")
        K = len(order)
        cuts = []
        for i in range(K):
            j0, j1 = order[i], order[(i + 1) % K]
            if An[j0] @ An[j1] < 0.0:
                v = verts[i]  # vertex shared by the consecutive pair
                n = An[j0] + An[j1]
                n /= np.linalg.norm(n)
                depth_cut = float(n @ v) - alpha / 8.0
                guard = support(T, n)  # never cut into co(trace)
                cuts.append((n, max(depth_cut, guard)))
        if not cuts:
            break
        loop = poly.vertices
        for n, c in cuts:
            loop = _clip_polygon(loop, n, c)
        poly = hull2d(loop)
    else:
        raise ConstructionFailedError(
            f"obtusification did not terminate within {CHAMFER_ITERATION_CAP} chamfer rounds"
        )

    cert = check_obtuse(poly)
    if not cert.passed:
        raise ConstructionFailedError(
            f"obtusification failed; remaining pairs {cert.failing_pairs}"
        )
    for n, c in zip(poly.normals, poly.offsets):
        if support(T, n) > c + 1e-9:
            raise ConstructionFailedError("inflated hull no longer contains the trace")

    shift = poly.vertices.mean(axis=0)
    centered = poly.translated(-shift)
    centered.requires_interior_origin()
    return centered, shift


# -- projection --------------------------------------------------------------


def _project_polygon(C: HPolytope, p: np.ndarray) -> np.ndarray:
    verts = C.vertices
    K = len(verts)
    best = None
    best_d2 = np.inf
    for i in range(K):
        a, v = verts[i], verts[(i + 1) % K] - verts[i]
        t = float(np.clip((p - a) @ v / (v @ v), 0.0, 1.0))
        q = a + t * v
        d2 = float(np.sum((p - q) ** 2))
        if d2 < best_d2:
            best_d2, best = d2, q
    return best


def _project_dykstra(C: HPolytope, p: np.ndarray) -> np.ndarray:
    A, b = C.normals, C.offsets
    K = C.num_facets
    x = p.copy()
    corrections = np.zeros((K, C.dim))
    scale = max(1.0, float(np.linalg.norm(p)))
    for _ in range(DYKSTRA_MAX_CYCLES):
        x_prev = x.copy()
        for j in range(K):
            y = x + corrections[j]
            excess = float(A[j] @ y - b[j])
            if excess > 0.0:
                x = y - excess * A[j]
            else:
                x = y
            corrections[j] = y - x
        if np.linalg.norm(x - x_prev) <= DYKSTRA_RESIDUAL_TOL * scale:
            break
    return x


def project(C: HPolytope, p) -> np.ndarray:
    """Nearest point of the polytope in the Euclidean norm.

    Exact (edge/vertex enumeration) for N <= 2; Dykstra's alternating
    projections with residual tolerance 1e-10 for N = 3.  Points within the
    feasibility band of the boundary are returned unchanged, which makes the
    map bit-stable under repeated application.
    """
    q = _as_point(p, C.dim)
    band = PROJECT_FEASIBILITY_BAND * (1.0 + float(np.linalg.norm(q)))
    if C.dim == 3:
        band = max(band, 2.0 * DYKSTRA_RESIDUAL_TOL * (1.0 + float(np.linalg.norm(q))))
    if C.contains(q, band):
        return q.copy()
    if C.dim == 1:
        lo, hi = C.vertices[:, 0].min(), C.vertices[:, 0].max()
        return np.array([min(max(q[0], lo), hi)])
    if C.dim == 2:
        return _project_polygon(C, q)
    if C.dim == 3:
        return _project_dykstra(C, q)
    raise UnsupportedDimensionError(f"projection unsupported for N={C.dim}")


def distance_to(C: HPolytope, p) -> float:
    """Euclidean distance from a point to the polytope (0 inside)."""
    q = _as_point(p, C.dim)
    if C.contains(q, 0.0):
        return 0.0
    return float(np.linalg.norm(q - project(C, q)))


# -- generators and sampling --------------------------------------------------


def box(half_widths) -> HPolytope:
    """Axis-aligned box prod_i [-w_i, w_i] as an H-polytope."""
    w = np.asarray(half_widths, dtype=float).reshape(-1)
    if np.any(w <= 0):
        raise InvalidInputError("half widths must be positive")
    N = len(w)
    A = np.zeros((2 * N, N))
    b = np.empty(2 * N)
    for i in range(N):
        A[2 * i, i] = 1.0
        b[2 * i] = w[i]
        A[2 * i + 1, i] = -1.0
        b[2 * i + 1] = w[i]
    return HPolytope(A, b, validate=False)


def unit_square() -> HPolytope:
    return box([1.0, 1.0])


def diamond(radius: float = 1.0) -> HPolytope:
    """The l1 ball |x| + |y| <= radius."""
    if radius <= 0:
        raise InvalidInputError("radius must be positive")
    s = 1.0 / math.sqrt(2.0)
    A = np.array([[s, s], [-s, s], [-s, -s], [s, -s]])
    b = np.full(4, radius * s)
    return HPolytope(A, b, validate=False)


def regular_polygon(nsides: int, apothem: float = 1.0, phase: float = 0.0) -> HPolytope:
    """Regular polygon circumscribing the `apothem`-radius disk (tangent sides)."""
    if nsides < 3:
        raise InvalidInputError("need at least 3 sides")
    if apothem <= 0:
        raise InvalidInputError("apothem must be positive")
    ang = phase + 2.0 * math.pi * np.arange(nsides) / nsides
    A = np.column_stack([np.cos(ang), np.sin(ang)])
    b = np.full(nsides, float(apothem))
    return HPolytope(A, b, validate=False)


def sample_points(C: HPolytope, count: int, rng: np.random.Generator) -> np.ndarray:
    """Uniform samples of the polytope by rejection from its bounding box."""
    lo, hi = C.bounding_box()
    out = np.empty((count, C.dim))
    filled = 0
    while filled < count:
        batch = rng.uniform(lo, hi, size=(max(count, 256), C.dim))
        keep = batch[C.contains_many(batch)]
        take = min(count - filled, len(keep))
        out[filled:filled + take] = keep[:take]
        filled += take
    return out


# -- file format ---------------------------------------------------------------


def write_polytope(C: HPolytope, path) -> None:
    """Line-oriented text: "N K" then K lines "xi_1 ... xi_N c"."""
    lines = [f"{C.dim} {C.num_facets}"]
    for j in range(C.num_facets):
        n = C.normals[j] / np.linalg.norm(C.normals[j])
        lines.append(" ".join(repr(float(x)) for x in n) + " " + repr(float(C.offsets[j])))
    Path(path).write_text("\n".join(lines) + "\n")


def read_polytope(path) -> HPolytope:
    """Parse the polytope file format; '#' starts a comment line."""
    rows: list[list[float]] = []
    header: tuple[int, int] | None = None
    for raw in Path(path).read_text().splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if header is None:
            if len(parts) != 2:
                raise InvalidInputError(f"bad header line {raw!r}; expected 'N K'")
            header = (int(parts[0]), int(parts[1]))
            continue
        rows.append([float(x) for x in parts])
    if header is None:
        raise InvalidInputError("empty polytope file")
    N, K = header
    if len(rows) != K or any(len(r) != N + 1 for r in rows):
        raise InvalidInputError(f"expected {K} rows of {N + 1} numbers")
    data = np.array(rows)
    return HPolytope(data[:, :N], data[:, N])
