"""Verification suites run by ``nctorus verify``.

Each suite evaluates a family of identities on fixed and on seeded random
instances and records one entry per check in ``results["checks"]``, keyed
by a stable identifier. :func:`run_suite` turns the entries into the JSON
report ``{suite, config, checks: [{id, status, residual, bound}], seed}``.

Random instances are drawn from one generator seeded with ``config.seed``.
Draws that fall outside the domain of a check (vanishing ranks, a sum whose
terms overflow double precision) are rejected and redrawn.
"""

import cmath
import logging
import math
from collections.abc import Callable
from typing import Any, TypeVar

import numpy as np

from nctorus.analytic.hermite import kernel_cokernel_dims
from nctorus.analytic.line_bundles import (
    LineBundleSection,
    dolbeault_residual,
    theta_dictionary_residual,
)
from nctorus.analytic.modules import holomorphic_coefficients
from nctorus.analytic.packet import GaussianPacket
from nctorus.category import (
    HolomorphicCategory,
    StdObject,
    basis_vector,
    commutant_dimension,
)
from nctorus.config import RunConfig
from nctorus.equivalence import (
    FunctorContext,
    forbidden_pattern_scan,
    functoriality_residual,
    ktheory_action_check,
    tilt_classify,
)
from nctorus.exceptions import (
    ConfigError,
    ConvergenceError,
    DegenerateDegreeError,
    DomainError,
    IndeterminateRankError,
    ZeroRankError,
)
from nctorus.fourier import (
    automorphy_check,
    extension_nonsplit_check,
    fm_class,
    kernel_residual,
    transform_tensor_check,
)
from nctorus.index_sets import (
    assoc_bijection_check,
    brute_force_index_set,
    enumerate_progression,
    index_set,
)
from nctorus.sl2_arith import (
    SL2Mat,
    TorusParams,
    cocycle_residual,
    degree_identity_residual,
    random_sl2,
)
from nctorus.theta_engine import (
    associativity_residual,
    collapse_residual,
    cyclic_identity_residual,
    pairing_residual,
    structure_constants,
    theta_combination,
)

logger = logging.getLogger(__name__)

__all__ = ["SUITES", "VerificationSuite", "run_suite"]

SUITES = ("identities", "index", "constants", "category", "equivalence", "fourier")

IDENTITY_BOUND = 1e-12
RELATIVE_BOUND = 1e-9
COLLAPSE_BOUND = 1e-10

IDENTITY_SAMPLES = 10_000
IDENTITY_ENTRY_BOUND = 20
INDEX_SAMPLES = 1_000
INDEX_WINDOW = 100
BIJECTION_SAMPLES = 100
PAIRING_SAMPLES = 50
PAIRING_POINTS = 5
COLLAPSE_SAMPLES = 50
ASSOCIATIVITY_SAMPLES = 100
CATEGORY_ASSOCIATIVITY_SAMPLES = 20
HERMITE_SAMPLES = 50
FUNCTORIALITY_SAMPLES = 100
FUNCTORIALITY_COST = 30
FORBIDDEN_SAMPLES = 100_000
KTHEORY_LABELS = 5
KTHEORY_OBJECTS = 20
MAX_DRAWS_PER_SAMPLE = 500

LINE_BUNDLE_POINTS = (0.1 + 0.2j, -0.35 + 0.05j, 0.4 - 0.3j)

G_ONE = SL2Mat(1, 0, 1, 1)
G_TWO = SL2Mat(1, 0, 2, 1)
G_THREE = SL2Mat(1, 0, 3, 1)

Sample = TypeVar("Sample")


def _positive(g: SL2Mat, theta: float) -> SL2Mat:
    """``g`` or ``-g``, whichever has positive rank at ``theta``."""
    return g if g.rank(theta) > 0 else -g


class VerificationSuite:
    """
    Runner for the verification suites.

    Parameters
    ----------
    config : RunConfig
        Validated run parameters; ``config.seed`` drives every random draw.

    Attributes
    ----------
    config : RunConfig
        The run parameters.
    rng : numpy.random.Generator
        Seeded generator shared by the randomized suites.
    results : dict[str, Any]
        ``results["checks"][check_id]`` holds ``passed``, ``residual`` and
        ``bound`` of every executed check.

    Examples
    --------
    >>> suite = VerificationSuite(RunConfig())
    >>> suite.run("identities")["checks"][0]["status"]
    'pass'
    """

    def __init__(self, config: RunConfig):
        self.config = config.validate()
        self.rng = np.random.default_rng(config.seed)
        self.results: dict[str, Any] = {"checks": {}}
        self._runners: dict[str, Callable[[], None]] = {
            "identities": self.identities,
            "index": self.index,
            "constants": self.constants,
            "category": self.category,
            "equivalence": self.equivalence,
            "fourier": self.fourier,
        }

    def record(self, check_id: str, passed: bool, residual: float = 0.0, bound: float = 0.0) -> None:
        self.results["checks"][check_id] = {
            "passed": bool(passed),
            "residual": float(residual),
            "bound": float(bound),
        }
        if not passed:
            logger.warning(f"check {check_id} failed: residual {residual:.3e} > {bound:.3e}")

    def record_samples(self, check_id: str, outcomes: list[tuple[float, float]], required: int) -> None:
        """
        Record ``(residual, bound)`` pairs of a randomized check.

        The check passes when ``required`` samples were drawn and every
        residual is within its bound; the report carries the largest
        residual and the smallest bound.
        """
        if len(outcomes) < required:
            logger.warning(f"{check_id}: only {len(outcomes)} of {required} samples drawn")
        passed = len(outcomes) >= required and all(r <= b for r, b in outcomes)
        worst = max((r for r, _ in outcomes), default=math.inf)
        bound = min((b for _, b in outcomes), default=0.0)
        self.record(check_id, passed, worst, bound)

    def _random_label(self, bound: int = 4) -> SL2Mat:
        g = random_sl2(self.rng, bound)
        logger.debug(f"sampled {g}")
        return g

    def _random_twist(self, radius: float) -> complex:
        return complex(*self.rng.uniform(-radius, radius, size=2))

    def _random_tau(self) -> complex:
        return complex(self.rng.uniform(-0.5, 0.5), -self.rng.uniform(0.5, 1.5))

    def _draw(self, count: int, attempt: Callable[[], Sample | None]) -> list[Sample]:
        """Collect ``count`` non-``None`` results of ``attempt``, with a cap on draws."""
        samples: list[Sample] = []
        for _ in range(count * MAX_DRAWS_PER_SAMPLE):
            if len(samples) == count:
                break
            sample = attempt()
            if sample is not None:
                samples.append(sample)
        return samples

    def identities(self) -> None:
        """Rank cocycle and degree identity on random labels."""
        theta = self.config.theta
        worst_cocycle = worst_degree = 0.0
        for _ in range(IDENTITY_SAMPLES):
            g1, g2, g3 = (random_sl2(self.rng, IDENTITY_ENTRY_BOUND) for _ in range(3))
            try:
                worst_cocycle = max(worst_cocycle, cocycle_residual(g1, g2, theta))
            except ZeroRankError:
                logger.debug(f"skipping {g1}, {g2}: rank vanishes at theta={theta}")
            worst_degree = max(worst_degree, degree_identity_residual(g1, g2, g3, theta))
        self.record("identities.cocycle", worst_cocycle < IDENTITY_BOUND, worst_cocycle, IDENTITY_BOUND)
        self.record("identities.degree", worst_degree < IDENTITY_BOUND, worst_degree, IDENTITY_BOUND)

    def index(self) -> None:
        """Closed-form index sets against brute force, and the associativity bijection."""
        window = max(self.config.window, INDEX_WINDOW)
        mismatches = checked = 0
        while checked < INDEX_SAMPLES:
            g1, g2 = self._random_label(3), self._random_label(3)
            c1, c2, c12 = g1.c, g2.c, (g1 @ g2).c
            if 0 in (c1, c2, c12):
                continue
            checked += 1
            a1, a2, a = (int(self.rng.integers(0, abs(c))) for c in (c1, c2, c12))
            closed = enumerate_progression(index_set(g1, g2, a1, a2, a), window)
            if closed != brute_force_index_set(g1, g2, a1, a2, a, window):
                logger.info(f"index set mismatch for {g1}, {g2} at ({a1}, {a2}, {a})")
                mismatches += 1
        self.record("index.brute_force", mismatches == 0, mismatches, 0)

        failures = triples = 0
        while triples < BIJECTION_SAMPLES:
            g1, g2, g3 = (self._random_label(2) for _ in range(3))
            residues = [int(self.rng.integers(0, 12)) for _ in range(4)]
            try:
                ok = assoc_bijection_check(g1, g2, g3, *residues, window=min(self.config.window, 30))
            except DegenerateDegreeError:
                continue
            triples += 1
            if not ok:
                logger.info(f"bijection fails for {g1}, {g2}, {g3}, residues {residues}")
                failures += 1
        self.record("index.assoc_bijection", failures == 0, failures, 0)

    def _admissible_pair(self, theta: float, bound: int = 4) -> tuple[SL2Mat, SL2Mat] | None:
        """Labels with positive degrees and ranks for ``t_{g1,g2}`` over ``theta``."""
        g1, g2 = self._random_label(bound), self._random_label(bound)
        if g1.c <= 0 or g2.c <= 0 or not 0 < (g1 @ g2).c <= 4 * bound:
            return None
        if g2.rank(theta) < 0.05 or g1.rank(g2.mobius(theta)) < 0.05:
            return None
        return g1, g2

    def constants(self) -> None:
        """Structure constants against direct sums, the pairing, and their identities."""
        tau, tol = self.config.tau, self.config.tol
        params = TorusParams(self.config.theta, tau)
        table = structure_constants(G_ONE, G_ONE, params, 0, 0, tol)
        reference = np.zeros(table.shape, dtype=complex)
        denominator = G_ONE.c * G_ONE.c * (G_ONE @ G_ONE).c
        for a in range(table.shape[2]):
            members = brute_force_index_set(G_ONE, G_ONE, 0, 0, a, self.config.window)
            reference[0, 0, a] = sum(
                cmath.exp(2j * cmath.pi * (-tau * n * n / 2) / denominator) for n in members
            )
        residual = float(np.max(np.abs(table.values - reference)))
        bound = tol + table.tail_bound
        self.record("constants.reference_sums", residual <= bound, residual, bound)

        self.record_samples("constants.pairing_t", self._draw(PAIRING_SAMPLES, self._pairing_sample), PAIRING_SAMPLES)
        self.record_samples("constants.collapse", self._draw(COLLAPSE_SAMPLES, self._collapse_sample), COLLAPSE_SAMPLES)
        self.record_samples(
            "constants.associativity",
            self._draw(ASSOCIATIVITY_SAMPLES, self._associativity_sample),
            ASSOCIATIVITY_SAMPLES,
        )

    def _pairing_sample(self) -> tuple[float, float] | None:
        theta = float(self.rng.uniform(-0.9, 0.9))
        pair = self._admissible_pair(theta)
        if pair is None:
            return None
        params = TorusParams(theta, self._random_tau())
        z1, z2 = self._random_twist(0.5), self._random_twist(0.5)
        xs = self.rng.uniform(-1.5, 1.5, size=PAIRING_POINTS)
        c12 = (pair[0] @ pair[1]).c
        points = [(float(x), int(self.rng.integers(0, c12))) for x in xs]
        try:
            residual = pairing_residual(*pair, params, z1, z2, points)
        except ConvergenceError as exc:
            logger.debug(f"rejecting pairing sample {pair}: {exc}")
            return None
        return residual, RELATIVE_BOUND

    def _collapse_sample(self) -> tuple[float, float] | None:
        theta, theta_prime = (float(t) for t in self.rng.uniform(-0.9, 0.9, size=2))
        pair = self._admissible_pair(theta, bound=3)
        if pair is None:
            return None
        g1, g2 = pair
        rk12 = (g1 @ g2).rank(theta_prime)
        if g2.rank(theta_prime) < 0.05 or g1.rank(g2.mobius(theta_prime)) < 0.05:
            return None
        tau = self._random_tau()
        z1, z2, z1_prime = (self._random_twist(0.3) for _ in range(3))
        L = theta_combination(g1, g2, theta, z1, z2)
        z2_prime = (L + rk12 * g2.c * z1_prime) / g1.c
        try:
            _, residual = collapse_residual(
                g1, g2, TorusParams(theta, tau), z1, z2, TorusParams(theta_prime, tau), z1_prime, z2_prime
            )
        except (ConvergenceError, DomainError) as exc:
            logger.debug(f"rejecting collapse sample {pair}: {exc}")
            return None
        return residual, COLLAPSE_BOUND

    def _associativity_sample(self) -> tuple[float, float] | None:
        theta = float(self.rng.uniform(-0.9, 0.9))
        g1, g2, g3 = (self._random_label(2) for _ in range(3))
        if min(g1.c, g2.c, g3.c, (g1 @ g2).c, (g2 @ g3).c) <= 0:
            return None
        params = TorusParams(theta, self._random_tau())
        w1, w2, w3 = (self._random_twist(0.3) for _ in range(3))
        try:
            return associativity_residual(g1, g2, g3, params, w1, w2, w3)
        except (ConvergenceError, DomainError) as exc:
            logger.debug(f"rejecting associativity sample {g1}, {g2}, {g3}: {exc}")
            return None

    def category(self) -> None:
        """Cohomology, composition, Serre duality and Heisenberg actions."""
        cat = HolomorphicCategory(TorusParams(self.config.theta, self.config.tau))
        theta = cat.theta
        mismatches = 0
        for m in range(-5, 6):
            for n in range(-5, 6):
                if math.gcd(n, m) != 1 or m * theta + n <= 0:
                    continue
                twists = (0j, 0.3 + 0j) if m == 0 else (self._random_twist(0.5),)
                for z in twists:
                    E = StdObject.from_nm(n, m, theta, z)
                    if m > 0:
                        expected = (m, 0)
                    elif m < 0:
                        expected = (0, -m)
                    else:
                        expected = (1, 1) if z == 0 else (0, 0)
                    if cat.cohomology_dims(E) != expected:
                        logger.info(f"cohomology of {E} is {cat.cohomology_dims(E)}, expected {expected}")
                        mismatches += 1
        self.record("category.cohomology", mismatches == 0, mismatches, 0)

        smallest = math.inf
        for m in range(-4, 5):
            for n in range(-6, 7):
                if m == 0 or math.gcd(n, m) != 1 or not 0.2 <= m * theta + n <= 4:
                    continue
                gram = cat.serre_gram(StdObject.from_nm(n, m, theta, self._random_twist(0.3)))
                smallest = min(smallest, abs(np.linalg.det(gram)))
        self.record("category.serre_gram", smallest > 1e-8, smallest, 1e-8)

        reducible = 0
        worst = 0.0
        for c in range(2, 6):
            E = cat.object(SL2Mat.from_bottom_row(c, 1))
            generators = [cat.heisenberg_matrix(E, 1, 0), cat.heisenberg_matrix(E, 0, 1)]
            reducible += commutant_dimension(generators) != 1
            commutator = cat.heisenberg_commutator(E, (1, 0), (0, 1))
            scalar = commutator[0, 0]
            off_scalar = float(np.max(np.abs(commutator - scalar * np.eye(c))))
            worst = max(worst, off_scalar, abs(abs(scalar) - 1.0))
        self.record("category.heisenberg_irreducible", reducible == 0, reducible, 0)
        self.record("category.heisenberg_commutator", worst <= IDENTITY_BOUND, worst, IDENTITY_BOUND)

        labels = (SL2Mat.identity(), G_ONE, G_TWO, G_THREE)
        worst = 0.0
        for _ in range(CATEGORY_ASSOCIATIVITY_SAMPLES):
            twists = self.rng.uniform(-0.5, 0.5, size=4)
            E1, E2, E3, E4 = (cat.object(g, z) for g, z in zip(labels, twists, strict=True))
            worst = max(
                worst,
                cat.associativity_residual(
                    basis_vector(E3, E4, 0), basis_vector(E2, E3, 0), basis_vector(E1, E2, 0)
                ),
            )
        self.record("category.associativity", worst <= RELATIVE_BOUND, worst, RELATIVE_BOUND)

        E1, E2, E3 = (cat.object(g) for g in labels[:3])
        worst = 0.0
        for beta in range(2):
            u = basis_vector(E1, E2, 0)
            v = basis_vector(E2, E3, 0)
            w = basis_vector(E3, E1, beta, degree=1)
            lhs = cat.serre_pairing(cat.compose(v, u), w)
            rhs = cat.serre_pairing(u, cat.compose(w, v))
            worst = max(worst, abs(lhs - rhs))
        self.record("category.serre_functional_equation", worst <= RELATIVE_BOUND, worst, RELATIVE_BOUND)

        label = cat.object(G_TWO).label
        q, _ = holomorphic_coefficients(label, 0, cat.tau)
        wrong = int(kernel_cokernel_dims(q, 0.2, self.config.hermite_dim) != (1, 0))
        wrong += int(kernel_cokernel_dims(-q, 0.2, self.config.hermite_dim) != (0, 1))
        for _ in range(HERMITE_SAMPLES):
            sign = 1.0 if self.rng.random() < 0.5 else -1.0
            a = complex(sign * self.rng.uniform(0.5, 5.0), self.rng.uniform(-50.0, 50.0))
            z = self._random_twist(5.0)
            expected = (1, 0) if sign > 0 else (0, 1)
            try:
                dims = kernel_cokernel_dims(a, z, self.config.hermite_dim)
            except IndeterminateRankError as exc:
                logger.info(f"Hermite dimensions undecided for a={a}, z={z}: {exc}")
                wrong += 1
                continue
            wrong += int(dims != expected)
        self.record("category.hermite_dims", wrong == 0, wrong, 0)

    def _functoriality_sample(self, rotated: bool) -> tuple[float, float] | None:
        theta, theta_prime = sorted(float(t) for t in self.rng.uniform(-0.9, 0.9, size=2))
        if theta_prime - theta < 0.05:
            return None
        g1, g2, g3 = (_positive(self._random_label(3), theta) for _ in range(3))
        if min(abs(g.rank(theta)) for g in (g1, g2, g3)) < 0.05:
            return None
        if (g1.rank(theta_prime) < 0) != rotated:
            return None
        if min(g2.rank(theta_prime), g3.rank(theta_prime), abs(g1.rank(theta_prime))) < 0.05:
            return None
        d21, d32 = (g2 @ g1.inverse()).c, (g3 @ g2.inverse()).c
        if d21 <= 0 or d32 <= 0 or d21 * d32 > FUNCTORIALITY_COST:
            return None
        ctx = FunctorContext(theta, theta_prime, self._random_tau())
        z1, z2, z3 = (self._random_twist(0.3) for _ in range(3))
        try:
            functor = functoriality_residual(g1, g2, g3, z1, z2, z3, ctx)
            _, cyclic = cyclic_identity_residual(g1, g2, g3, z1, z2, z3, theta, theta_prime, ctx.tau)
        except (ConvergenceError, DomainError, ZeroRankError) as exc:
            logger.debug(f"rejecting functoriality sample {g1}, {g2}, {g3}: {exc}")
            return None
        return functor, cyclic

    def equivalence(self) -> None:
        """The cross-theta functor on the two reduced cases and its K-theory action."""
        tau = self.config.tau
        cyclic: list[tuple[float, float]] = []
        for case, rotated in (("i", False), ("ii", True)):
            samples = self._draw(FUNCTORIALITY_SAMPLES, lambda r=rotated: self._functoriality_sample(r))
            self.record_samples(
                f"equivalence.functoriality_{case}",
                [(functor, RELATIVE_BOUND) for functor, _ in samples],
                FUNCTORIALITY_SAMPLES,
            )
            cyclic.extend((residual, RELATIVE_BOUND) for _, residual in samples)
        self.record_samples("equivalence.cyclic_identity", cyclic, 2 * FUNCTORIALITY_SAMPLES)

        theta, theta_prime = sorted((self.config.theta, self.config.theta_prime))
        ctx = FunctorContext(theta, theta_prime, tau)
        checked, forbidden = forbidden_pattern_scan(FORBIDDEN_SAMPLES, self.rng, ctx)
        logger.info(f"classified {checked} random pairs over ({theta}, {theta_prime})")
        self.record("equivalence.forbidden_pattern", forbidden == 0, forbidden, 0)

        failures = 0
        morita_labels = [(G_ONE, -0.4)] + self._draw(KTHEORY_LABELS, self._ktheory_label)
        for g, base in morita_labels:
            morita = FunctorContext(base, g.mobius(base), tau)
            samples = self._ktheory_samples(g, morita, KTHEORY_OBJECTS)
            if not ktheory_action_check(g, samples, morita):
                logger.info(f"K-theory action of {g} over theta={base} is not the transpose")
                failures += 1
        self.record("equivalence.ktheory_transpose", failures == 0, failures, 0)

        tilt = FunctorContext(-0.4, 0.0, tau)
        kinds = [
            tilt_classify(StdObject.from_nm(n, m, -0.4), tilt).kind
            for n, m in ((1, 2), (-1, -3), (1, 0))
        ]
        self.record("equivalence.tilt", kinds == ["below", "above_shifted", "below"])

    def _ktheory_label(self) -> tuple[SL2Mat, float] | None:
        theta = float(self.rng.uniform(-0.9, 0.9))
        g = self._random_label(3)
        if g.rank(theta) < 0.1 or g.c == 0:
            return None
        return g, theta

    def _ktheory_samples(self, g: SL2Mat, ctx: FunctorContext, count: int) -> list[StdObject]:
        samples: list[StdObject] = []
        while len(samples) < count:
            h = self._random_label(5)
            if h.d <= 0:
                continue
            z = complex(*self.rng.uniform(-1, 1, size=2))
            S = StdObject(h, 0.0, z)
            try:
                ktheory_action_check(g, [S], ctx)
            except (ZeroRankError, DomainError):
                continue
            logger.debug(f"K-theory sample {S}")
            samples.append(S)
        return samples

    def fourier(self) -> None:
        """Automorphy factors, kernel basis, the non-split self-extension and line bundles."""
        tau, theta = self.config.tau, self.config.theta
        objects = [
            StdObject.from_nm(n, m, theta, self._random_twist(0.3))
            for m in range(1, 4)
            for n in range(-3, 4)
            if math.gcd(n, m) == 1 and m * theta + n > 0
        ]
        z0 = self._random_twist(0.4)
        broken = sum(not automorphy_check(E, z0, tau=tau) for E in objects)
        self.record("fourier.automorphy", broken == 0, broken, 0)
        residual = sum(kernel_residual(E, z0, tau) for E in objects)
        self.record("fourier.kernel", residual == 0, residual, 0)

        pair = [StdObject.from_nm(1, 1, theta), StdObject.from_nm(1, 2, theta)]
        nonsplit = all(extension_nonsplit_check(E, tau=tau) for E in pair)
        split = not extension_nonsplit_check(pair[0], tau=tau, drop_mixing=True)
        self.record("fourier.extension_nonsplit", nonsplit and split, 0.0, 1e-8)
        images = [fm_class(E, tau).k_class for E in pair]
        self.record("fourier.k_class", images == [(1, -1), (2, -1)])
        tensor_ok = transform_tensor_check(pair[1], 0.25 + 0.1j, 0.5, 0.0, tau)
        self.record("fourier.tensor_translate", tensor_ok)

        worst = max(
            theta_dictionary_residual(c, self._random_twist(0.5), tau, LINE_BUNDLE_POINTS)
            for c in range(1, 4)
        )
        self.record("fourier.line_bundle_theta", worst <= 1e-10, worst, 1e-10)
        packet = GaussianPacket.zero(2)
        for alpha in range(2):
            packet = packet + GaussianPacket.gaussian(2, alpha, -1.2 + 0.3j * alpha, 0.1 - 0.2j, (1.0, 0.4j))
        section = LineBundleSection(2, self._random_twist(0.5), tau, packet)
        worst = max(section.periodicity_residual(LINE_BUNDLE_POINTS), dolbeault_residual(section, LINE_BUNDLE_POINTS))
        self.record("fourier.line_bundle_dolbeault", worst <= 1e-7, worst, 1e-7)

    def run(self, name: str) -> dict[str, Any]:
        """
        Run one suite, or ``"all"``, and return the report.

        Raises
        ------
        ConfigError
            If ``name`` is not a known suite.
        """
        if name != "all" and name not in self._runners:
            raise ConfigError(f"unknown suite {name!r}; expected one of {SUITES} or 'all'")
        logger.info(f"running suite {name} with seed {self.config.seed}")
        for key in SUITES if name == "all" else (name,):
            self._runners[key]()
        checks = [
            {
                "id": check_id,
                "status": "pass" if entry["passed"] else "fail",
                "residual": entry["residual"],
                "bound": entry["bound"],
            }
            for check_id, entry in sorted(self.results["checks"].items())
        ]
        return {
            "suite": name,
            "config": self.config.to_dict(),
            "checks": checks,
            "seed": self.config.seed,
        }


def run_suite(name: str, config: RunConfig) -> dict[str, Any]:
    """
    Run the named suite on a fresh runner.

    Parameters
    ----------
    name : str
        One of ``identities``, ``index``, ``constants``, ``category``,
        ``equivalence``, ``fourier`` or ``all``.
    config : RunConfig
        Run parameters.

    Returns
    -------
    dict[str, Any]
        The report; every check has status ``"pass"`` or ``"fail"``.

    Raises
    ------
    ConfigError
        On an invalid config or an unknown suite name.
    """
    return VerificationSuite(config).run(name)
