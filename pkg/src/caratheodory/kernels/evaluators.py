"""Uniform metric evaluation front-end.

Every evaluator exposes value(z) -> float and values(zs) -> array for one
fixed domain, so curvature stencils and harness sweeps don't care which
authority (closed form, Szego solve, LP certificate) produced the number.

Batch calls on the Szego evaluator share a single mesh chosen from the
shallowest point of the batch.  That matters for finite differences: the
solver error is a smooth function of the base point on a FIXED mesh and
cancels in the stencil, while re-picking the mesh per point would inject
O(tol/h^2) noise into curvature estimates.
"""

from __future__ import annotations

import numpy as np

from ..errors import GeometryError, SolveError
from ..extremal.lp import ExtremalProblem, lp_caratheodory_lower
from ..geometry.curves import TrigCurve
from ..geometry.domain import Domain
from ..geometry.mesh import mesh_boundary
from .closed_forms import SectorPullback, annulus_metric, disc_metric
from .szego import SzegoSolver


class _EvaluatorBase:
    kind = None

    def __init__(self, domain):
        self.domain = domain
        self.cache = {}

    def value(self, z):
        return float(self.values(np.array([z], dtype=complex))[0])

    def values(self, zs):
        raise NotImplementedError

    def __repr__(self):
        return "%s(%s)" % (type(self).__name__, self.domain.label)


class ClosedFormDiscEvaluator(_EvaluatorBase):
    kind = "closed_form_disc"

    def __init__(self, domain):
        super().__init__(domain)
        if not domain.primitive or domain.primitive[0] != "disc":
            raise GeometryError("domain is not tagged as a disc")
        self.center, self.radius = domain.primitive[1]

    def values(self, zs):
        return np.atleast_1d(disc_metric(self.center, self.radius, zs))


class AnnulusPoincareEvaluator(_EvaluatorBase):
    kind = "closed_form_annulus_poincare"

    def __init__(self, domain):
        super().__init__(domain)
        if not domain.primitive or domain.primitive[0] != "annulus":
            raise GeometryError("domain is not tagged as an annulus")
        self.center, self.r_inner, self.r_outer = domain.primitive[1]

    def values(self, zs):
        return np.atleast_1d(
            annulus_metric(self.center, self.r_inner, self.r_outer, zs))


class SectorPullbackEvaluator(_EvaluatorBase):
    """Poincare density of a two-disc intersection or union via the
    Mobius map sending the circle crossings to 0 and infinity."""

    kind = "closed_form_sector_pullback"

    def __init__(self, domain):
        super().__init__(domain)
        tag = domain.primitive[0] if domain.primitive else None
        if tag == "lens":
            which = "intersection"
        elif tag == "two_disc_union":
            which = "union"
        else:
            raise GeometryError("domain is not a tagged two-disc region")
        d1, d2 = domain.primitive[1]
        self.pullback = SectorPullback(d1, d2, which)

    def values(self, zs):
        return np.atleast_1d(self.pullback.density(zs))


class SzegoEvaluator(_EvaluatorBase):
    """Caratheodory metric 2*pi*S(a,a) from the Kerzman-Stein solve.

    Meshes and LU factorizations are cached per node count, and each
    value is accepted only after a mesh-doubling agreement check
    (1e-8 relative on smooth boundaries, 1e-5 with corners).
    """

    kind = "szego"
    _LADDER = (256, 512, 1024, 2048)
    _CAP = 4096

    def __init__(self, domain, n=None, grading_exponent=3.0):
        super().__init__(domain)
        self.grading_exponent = float(grading_exponent)
        self.n_override = int(n) if n else None
        # corners, and even mere curvature jumps at C1 joins, cost the
        # Nystrom solve its spectral rate; ask only 1e-5 agreement there
        rough = any(not isinstance(c, TrigCurve) for c in domain.curves)
        self.tol = 1e-5 if rough else 1e-8
        self._meshes = {}
        self._solvers = {}
        self._value_cache = {}

    def _mesh(self, n):
        if n not in self._meshes:
            self._meshes[n] = mesh_boundary(self.domain, n,
                                            self.grading_exponent)
        return self._meshes[n]

    def _solver(self, n):
        if n not in self._solvers:
            self._solvers[n] = SzegoSolver(self._mesh(n))
        return self._solvers[n]

    def _pick_n(self, dist):
        if self.n_override:
            return self.n_override
        for n in self._LADDER:
            if 3.0 * self._mesh(n).h_max < dist:
                return n
        return self._LADDER[-1]

    def values(self, zs):
        zs = np.asarray(zs, dtype=complex).ravel()
        dists = np.array([self.domain.dist_to_boundary(z) for z in zs])
        n1 = self._pick_n(float(np.min(dists)))
        n2 = min(2 * n1, self._CAP)
        guard = 3.0 * self._mesh(n1).h_max
        out = np.empty(zs.size)
        for i, (z, d) in enumerate(zip(zs, dists)):
            if d <= guard:
                raise GeometryError(
                    "point %s is %.3g from the boundary, need > %.3g "
                    "at n=%d" % (z, d, guard, n1))
            key = (complex(z), n1)
            if key in self._value_cache:
                out[i] = self._value_cache[key]
                continue
            v1 = 2.0 * np.pi * self._solver(n1).solve(z).diag_value
            v2 = 2.0 * np.pi * self._solver(n2).solve(z).diag_value
            rel = abs(v2 - v1) / abs(v2)
            if rel > self.tol:
                raise SolveError(
                    "szego value did not settle at %s: n=%d vs %d changed "
                    "by %.3g (tol %.1g)" % (z, n1, n2, rel, self.tol))
            self._value_cache[key] = v2
            out[i] = v2
        return out

    def solution(self, a):
        """Kernel solution at the base point, for Ahlfors map work."""
        a = complex(a)
        if a not in self.cache:
            d = self.domain.dist_to_boundary(a)
            n = min(2 * self._pick_n(d), self._CAP)
            self.cache[a] = self._solver(n).solve(a)
        return self.cache[a]


class LPEvaluator(_EvaluatorBase):
    """Certified LP lower bounds used as metric values.

    Estimates sit ~0.1-0.5% below the truth (polyhedral deflation plus
    the sup rescale), which is why curvature assertions treat this kind
    more loosely than the solver-backed ones.
    """

    kind = "lp"

    def __init__(self, domain, degree=24, samples_per_curve=512,
                 angle_count=64):
        super().__init__(domain)
        self.degree = int(degree)
        self.samples_per_curve = int(samples_per_curve)
        self.angle_count = int(angle_count)

    def certificate(self, z):
        z = complex(z)
        if z not in self.cache:
            problem = ExtremalProblem(
                self.domain, z, self.degree, self.samples_per_curve,
                self.angle_count)
            self.cache[z] = lp_caratheodory_lower(problem)
        return self.cache[z]

    def values(self, zs):
        zs = np.asarray(zs, dtype=complex).ravel()
        return np.array([self.certificate(z).certified_value for z in zs])


def evaluator_for(domain, method="auto", **params):
    """Route a domain to its metric authority.

    auto: tagged discs and two-disc booleans get closed forms; boundaries
    made of pieced-together arcs (boolean results, offsets) get the LP,
    whose certificates don't care about corners or curvature jumps; fully
    smooth interpolated boundaries get the Szego solver.  method="szego"
    or "lp" forces that backend.
    """
    if method == "szego":
        return SzegoEvaluator(domain, n=params.get("n"),
                              grading_exponent=params.get("grading_exponent", 3.0))
    if method == "lp":
        return LPEvaluator(domain,
                           degree=params.get("degree", 24),
                           samples_per_curve=params.get("samples_per_curve", 512),
                           angle_count=params.get("angle_count", 64))
    if method != "auto":
        raise GeometryError("unknown method %r" % (method,))
    tag = domain.primitive[0] if domain.primitive else None
    if tag == "disc":
        return ClosedFormDiscEvaluator(domain)
    if tag in ("lens", "two_disc_union"):
        return SectorPullbackEvaluator(domain)
    if any(not isinstance(c, TrigCurve) for c in domain.curves):
        return LPEvaluator(domain,
                           degree=params.get("degree", 24),
                           samples_per_curve=params.get("samples_per_curve", 512),
                           angle_count=params.get("angle_count", 64))
    return SzegoEvaluator(domain, n=params.get("n"),
                          grading_exponent=params.get("grading_exponent", 3.0))
