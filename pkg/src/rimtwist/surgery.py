"""Classification of twist-surgered surfaces.

Builds the fundamental-group presentation of the surgered-surface
complement (the knot group with the meridian killed to order d and
every generator forced to commute with the m-th meridian power),
decides smooth knotting from the Alexander polynomial under the
Seiberg-Witten hypothesis flag, and decides topological standardness
from the ribbon certificate, the homology-circle test, and the
congruence d = +/-1 mod m.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .alexander import alexander_polynomial
from .covers import INFINITE, Infinite, branched_cover_order
from .groups import (
    DEFAULT_COSET_BUDGET,
    AbelianInvariants,
    abelianization,
    todd_coxeter,
)
from .knots import ConnectedSum, KnotExpr, Mirror, TorusKnot, Unknot, render
from .laurent import LaurentPoly
from .wirtinger import GroupPresentation, presentation_of_knot
from .words import power


@dataclass(frozen=True)
class SurgeryParams:
    """Surgery data: divisibility d of the surface class, twist count m.

    ``sw_nontrivial`` asserts the nontriviality of the relative
    Seiberg-Witten invariant of the ambient pair, which this toolkit
    consumes as a hypothesis and never computes.  ``cp2_degree`` marks
    the surface as a degree-d complex curve, which implies the
    hypothesis; degrees 1 and 2 are open cases and are refused.
    """

    d: int
    m: int
    sw_nontrivial: bool = False
    cp2_degree: int | None = None

    def __post_init__(self):
        if self.d < 1:
            raise ValueError("d must be >= 1")
        if self.cp2_degree is not None:
            if self.cp2_degree < 3:
                raise ValueError(
                    "cp2_degree must be >= 3 (degree 1 and 2 curves are open cases)"
                )
            if self.cp2_degree != self.d:
                raise ValueError("cp2_degree must equal d")
            object.__setattr__(self, "sw_nontrivial", True)


def congruent_pm1(d: int, m: int) -> bool:
    """Whether d = +1 or -1 mod m, with |m| used and m = 0 meaning d = 1."""
    if m == 0:
        return d == 1
    mm = abs(m)
    return d % mm in (1 % mm, (mm - 1) % mm)


def twist_rim_presentation(p: GroupPresentation, d: int, m: int) -> GroupPresentation:
    """Fundamental group of the surgered-surface complement.

    Extends the knot-group presentation by mu^d and, for every
    non-meridian generator g, the twist-invariance relator
    g^-1 mu^-m g mu^m: the twist acts on each Wirtinger generator by
    conjugation with the meridian, so invariance of the generators
    forces invariance of the whole group.
    """
    if d < 1:
        raise ValueError("d must be >= 1")
    n = p.generator_count
    if n == 0 or not (1 <= p.meridian <= n):
        raise ValueError("presentation has no meridian generator")
    mu = p.meridian
    relators = list(p.relators)
    relators.append(power(mu, d))
    for j in range(1, n + 1):
        if j != mu:
            relators.append((-j,) + power(mu, -m) + (j,) + power(mu, m))
    return GroupPresentation(p.generators, tuple(relators), mu)


def ribbon_certificate(k: KnotExpr) -> str:
    """Syntactic ribbon certificate: "certified" or "unknown".

    Certified iff, after reassociating connected sums and pushing
    mirrors through them, the summands pair off as E with mirror(E).
    Ribbonness is never decided, only certified.
    """
    factors: list[tuple[int, KnotExpr]] = []

    def collect(expr: KnotExpr, mirrored: int):
        if isinstance(expr, Unknot):
            return
        if isinstance(expr, ConnectedSum):
            collect(expr.left, mirrored)
            collect(expr.right, mirrored)
            return
        if isinstance(expr, Mirror):
            collect(expr.child, mirrored ^ 1)
            return
        factors.append((mirrored, expr))

    collect(k, 0)
    plain: list[KnotExpr] = [e for s, e in factors if s == 0]
    mirrored: list[KnotExpr] = [e for s, e in factors if s == 1]
    for e in plain:
        try:
            mirrored.remove(e)
        except ValueError:
            return "unknown"
    return "certified" if not mirrored else "unknown"


@dataclass(frozen=True)
class Pi1Verdict:
    """What is known about the surgered complement's fundamental group."""

    kind: str  # "cyclic" | "finite" | "undetermined"
    order: int | None
    certificate: str

    def __str__(self) -> str:
        if self.kind == "cyclic":
            return f"Z/{self.order} (certificate: {self.certificate})"
        if self.kind == "finite":
            return f"finite of order {self.order} (certificate: {self.certificate})"
        return f"undetermined ({self.certificate})"


@dataclass(frozen=True)
class SurgeryReport:
    knot: KnotExpr
    params: SurgeryParams
    alexander: LaurentPoly
    pi1: Pi1Verdict
    pi1_obstruction: bool
    branched_order: int | Infinite
    smoothly_knotted: str  # "yes" | "no-evidence"
    smoothly_knotted_reason: str
    topologically_standard: str  # "yes" | "no" | "unknown"
    topologically_standard_failed: str | None
    cp2_genus: int | None

    def to_json(self) -> dict:
        pi1: dict = {"kind": self.pi1.kind, "certificate": self.pi1.certificate}
        if self.pi1.order is not None:
            pi1["order"] = self.pi1.order
        smooth = {"verdict": self.smoothly_knotted, "reason": self.smoothly_knotted_reason}
        topo: dict = {"verdict": self.topologically_standard}
        if self.topologically_standard_failed is not None:
            topo["failed"] = self.topologically_standard_failed
        order = "infinite" if self.branched_order is INFINITE else self.branched_order
        out = {
            "knot": render(self.knot),
            "d": self.params.d,
            "m": self.params.m,
            "alexander": self.alexander.to_json(),
            "pi1": pi1,
            "smoothly_knotted": smooth,
            "topologically_standard": topo,
            "branched_cover": {"order": order},
        }
        if self.params.cp2_degree is not None:
            out["cp2"] = {"degree": self.params.cp2_degree, "genus": self.cp2_genus}
        return out


def _expected_cyclic(d: int) -> AbelianInvariants:
    return AbelianInvariants(free_rank=0, torsion=(d,) if d > 1 else ())


def determine_pi1(
    p: GroupPresentation, d: int, m: int, budget: int
) -> tuple[Pi1Verdict, bool]:
    """Pi1 verdict plus whether the group is proven different from Z/d."""
    if congruent_pm1(d, m):
        return Pi1Verdict("cyclic", d, "congruence"), False
    twisted = twist_rim_presentation(p, d, m)
    ab_ok = abelianization(twisted) == _expected_cyclic(d)
    table = todd_coxeter(twisted, budget)
    if table.completed:
        if table.order == d and ab_ok:
            return Pi1Verdict("cyclic", d, "coset-enumeration"), False
        return Pi1Verdict("finite", table.order, "coset-enumeration"), True
    if not ab_ok:
        return Pi1Verdict("undetermined", None, "abelianization-mismatch"), True
    return Pi1Verdict("undetermined", None, "budget-exhausted"), False


def classify(
    k: KnotExpr, params: SurgeryParams, budget: int = DEFAULT_COSET_BUDGET
) -> SurgeryReport:
    """Full report for one surgered surface.

    Deterministic in its inputs; a blown coset budget downgrades the
    group verdict to undetermined rather than fabricating one.
    """
    d, m = params.d, params.m
    pres = presentation_of_knot(k)
    delta = alexander_polynomial(pres)
    nontrivial_delta = delta != LaurentPoly.one()

    pi1, proven_not_cyclic = determine_pi1(pres, d, m, budget)
    obstruction = proven_not_cyclic
    if d == 2 and m % 2 == 0 and nontrivial_delta:
        # the double branched cover of a nontrivial knot has nontrivial
        # fundamental group, which embeds with index 2 here
        obstruction = True

    order = branched_cover_order(delta, d)

    if params.sw_nontrivial and nontrivial_delta:
        smooth = "yes"
        smooth_reason = (
            "nontrivial relative Seiberg-Witten invariant times Alexander "
            "polynomial != 1 changes the coefficient multiset"
        )
    elif not params.sw_nontrivial:
        smooth = "no-evidence"
        smooth_reason = "Seiberg-Witten nontriviality hypothesis not asserted"
    else:
        smooth = "no-evidence"
        smooth_reason = "Alexander polynomial is trivial"

    if obstruction:
        topo = "no"
        topo_failed: str | None = "pi1-obstruction"
    else:
        ribbon = ribbon_certificate(k)
        circle = order == 1
        cong = congruent_pm1(d, m)
        if ribbon == "certified" and circle and cong:
            topo = "yes"
            topo_failed = None
        else:
            topo = "unknown"
            if ribbon != "certified":
                topo_failed = "ribbon-certificate"
            elif not circle:
                topo_failed = "homology-circle"
            else:
                topo_failed = "congruence"

    genus = None
    if params.cp2_degree is not None:
        genus = (d - 1) * (d - 2) // 2

    return SurgeryReport(
        knot=k,
        params=params,
        alexander=delta,
        pi1=pi1,
        pi1_obstruction=obstruction,
        branched_order=order,
        smoothly_knotted=smooth,
        smoothly_knotted_reason=smooth_reason,
        topologically_standard=topo,
        topologically_standard_failed=topo_failed,
        cp2_genus=genus,
    )


def enumerate_examples(
    p_max: int,
    q_max: int,
    d_max: int,
    m_max: int,
    budget: int = DEFAULT_COSET_BUDGET,
) -> list[SurgeryReport]:
    """The family of smoothly knotted, topologically standard surfaces.

    Sweeps torus knots J = T(p,q) with p < q, forms the ribbon knot
    J # mirror(J), and keeps (d, m) with d coprime to p and q,
    d = +/-1 mod m, and m >= 2.  Every emitted report is smoothly
    knotted (the Seiberg-Witten flag is asserted for the family) and
    topologically standard.  Rows come out in lexicographic (p,q,d,m)
    order.
    """
    if min(p_max, q_max, d_max, m_max) < 2:
        raise ValueError("all bounds must be >= 2")
    reports: list[SurgeryReport] = []
    for p in range(2, p_max + 1):
        for q in range(p + 1, q_max + 1):
            if gcd(p, q) != 1:
                continue
            knot = ConnectedSum(TorusKnot(p, q), Mirror(TorusKnot(p, q)))
            for d in range(2, d_max + 1):
                if gcd(d, p) != 1 or gcd(d, q) != 1:
                    continue
                for m in range(2, m_max + 1):
                    if not congruent_pm1(d, m):
                        continue
                    params = SurgeryParams(d=d, m=m, sw_nontrivial=True)
                    reports.append(classify(knot, params, budget))
    return reports
