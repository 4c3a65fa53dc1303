"""Complete intersections of hypersurfaces in complex projective space.

``build_ci`` turns a dimension and a degree list into a Chern profile via
the normal-bundle quotient ``c(TX) = (1+h)^{n+r+1} / prod(1 + d_j h)``; on
top of that sit the classical invariants, a Hodge-table solver, a fully
independent signature series for hypersurfaces, and the kernel-dimension
reports for the spin-3/2 operator in the three scalar-curvature regimes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from .charclass import (
    ChernProfile,
    RSIndexReport,
    euler_characteristic,
    evaluate_genus,
    hodge_from_chi_y,
    rs_index,
)
from .errors import ConsistencyError, InputError, NotApplicableError
from .exactpoly import RationalFunctionSeries, TruncatedPoly, series_inverse


@dataclass(frozen=True)
class CISpec:
    """Defining data: complex dimension and hypersurface degrees."""

    n: int
    degrees: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "degrees", tuple(int(d) for d in self.degrees))
        if self.n < 1:
            raise InputError("complex dimension must be at least 1")
        if not self.degrees:
            raise InputError("need at least one degree")
        if any(d < 1 for d in self.degrees):
            raise InputError("degrees must be positive integers")

    @property
    def codimension(self) -> int:
        return len(self.degrees)

    @property
    def total_degree(self) -> int:
        return sum(self.degrees)


C1_POSITIVE = "POSITIVE"
C1_ZERO = "ZERO"
C1_NEGATIVE = "NEGATIVE"


@dataclass(frozen=True)
class CIManifold:
    spec: CISpec
    profile: ChernProfile
    total_degree: int
    spin: bool
    c1_sign: str

    @property
    def name(self) -> str:
        inner = ",".join(str(d) for d in self.spec.degrees)
        return f"X_{self.spec.n}({inner})"


def build_ci(spec: CISpec) -> CIManifold:
    """Construct the tangent Chern profile of X_n(d_1,...,d_r).

    The Euler-sequence quotient gives the total Chern class
    (1+h)^(n+r+1) / prod_j (1 + d_j h) mod h^(n+1), and the fundamental
    class pairs h^n to the product of the degrees.
    """
    n, degrees = spec.n, spec.degrees
    r = len(degrees)
    ambient = TruncatedPoly(
        ("h",), (n,), {(k,): math.comb(n + r + 1, k) for k in range(n + 1)}
    )
    total = ambient
    for d in degrees:
        total = total * series_inverse(TruncatedPoly(("h",), (n,), {(0,): 1, (1,): d}))
    chern = tuple(total.coefficient((k,)) for k in range(1, n + 1))
    pairing = Fraction(math.prod(degrees))

    c1 = n + r + 1 - spec.total_degree
    if chern and chern[0] != c1:
        raise ConsistencyError("first Chern coefficient disagrees with n+r+1-d")
    sign = C1_ZERO if c1 == 0 else (C1_POSITIVE if c1 > 0 else C1_NEGATIVE)
    return CIManifold(
        spec=spec,
        profile=ChernProfile(n, chern, pairing),
        total_degree=spec.total_degree,
        spin=(n + r - spec.total_degree) % 2 == 1,
        c1_sign=sign,
    )


def quadric(m: int) -> CIManifold:
    """The smooth quadric X_m(2), also a symmetric space for even m."""
    return build_ci(CISpec(m, (2,)))


@dataclass(frozen=True)
class CIInvariants:
    euler: Fraction
    signature: Optional[Fraction]
    ahat: Fraction
    dirac_index: Fraction
    dirac_tangent_index: Fraction
    rs_index: Fraction


def ci_invariants(m: CIManifold) -> CIInvariants:
    """Euler number, signature, Ahat and the three Dirac-type indices.

    The signature is reported only when the real dimension is divisible
    by four; the index values are meaningful as operator indices only on
    spin manifolds but are well-defined characteristic numbers always.
    """
    profile = m.profile
    split = rs_index(profile)
    signature = evaluate_genus("L", profile) if profile.dim % 2 == 0 else None
    return CIInvariants(
        euler=euler_characteristic(profile),
        signature=signature,
        ahat=evaluate_genus("AHAT", profile),
        dirac_index=split.dirac,
        dirac_tangent_index=split.dirac_tangent,
        rs_index=split.total,
    )


def fermat_signature(m: int, d: int) -> Fraction:
    """Signature of the degree-d hypersurface X_m(d) by series extraction.

    Independent of the L-genus route: the value is the coefficient of
    z^(m+1) in  ((1+z)^d - (1-z)^d) / ((1-z^2) ((1+z)^d + (1-z)^d)).
    """
    if m < 1 or d < 1:
        raise InputError("need m >= 1 and d >= 1")
    if m % 2:
        raise NotApplicableError("signature needs even complex dimension")
    order = m + 1
    plus = {(k,): Fraction(math.comb(d, k)) for k in range(min(d, order) + 1)}
    minus = {
        (k,): Fraction((-1) ** k * math.comb(d, k)) for k in range(min(d, order) + 1)
    }
    p = TruncatedPoly(("z",), (order,), plus)
    q = TruncatedPoly(("z",), (order,), minus)
    one_minus = TruncatedPoly(("z",), (order,), {(0,): 1, (2,): -1})
    return RationalFunctionSeries(p - q, one_minus * (p + q)).series_coefficient(order)


def hodge_numbers(m: CIManifold) -> Tuple[Tuple[int, ...], ...]:
    """Full Hodge table h^{p,q} as nested tuples, rows indexed by p.

    Complete intersections have hyperplane-section cohomology: the table
    equals the Kronecker pattern away from p+q = n, so the chi_p values
    determine the middle row.  The solve is validated for integrality,
    nonnegativity and both Hodge and Serre symmetry.
    """
    n = m.spec.n
    chi = hodge_from_chi_y(m.profile)
    for p in range(n + 1):
        if chi[p] != (-1) ** n * chi[n - p]:
            raise ConsistencyError("chi_p sequence breaks Serre duality")
    middle: List[Fraction] = []
    for p in range(n + 1):
        if 2 * p == n:
            value = Fraction((-1) ** p) * chi[p]
        else:
            value = Fraction((-1) ** (n - p)) * (chi[p] - (-1) ** p)
        middle.append(value)
    for p, value in enumerate(middle):
        if value.denominator != 1 or value < 0:
            raise ConsistencyError(f"middle Hodge number h^{{{p},{n - p}}} = {value}")
        if value != middle[n - p]:
            raise ConsistencyError("middle Hodge row is not symmetric")
    table = []
    for p in range(n + 1):
        row = []
        for q in range(n + 1):
            if p + q == n:
                row.append(int(middle[p]))
            elif p == q:
                row.append(1)
            else:
                row.append(0)
        table.append(tuple(row))
    return tuple(table)


@dataclass(frozen=True)
class CIKernelReport:
    """What the scalar-curvature trichotomy says about ker Q on a CI."""

    manifold: str
    spin: bool
    c1_sign: str
    index: Fraction
    # Ricci-flat case: exact kernel dimension and the Hodge-sum index
    kernel_dim: Optional[int] = None
    index_from_hodge: Optional[int] = None
    # negative case: harmonic spinors force a kernel on the image of P
    kernel_lower_bound: Optional[int] = None
    nontrivial_on_im_p: bool = False
    index_differs_from_dirac: Optional[bool] = None
    # positive case: Kaehler-Einstein existence window for hypersurfaces
    ke_positive_window: Optional[bool] = None
    note: str = ""


def ci_rs_kernel(m: CIManifold) -> CIKernelReport:
    """Kernel report for the spin-3/2 operator on a spin complete intersection.

    c1 = 0: the manifold is Calabi-Yau and the kernel is the exact Hodge
    sum -2 + 2*sum h^{1,p}; the index recomputed from Hodge numbers must
    agree with the characteristic-number index.  c1 < 0: nonzero Ahat
    forces harmonic spinors and hence a kernel on the image of P of at
    least |Ahat|.  c1 > 0: Ahat vanishes and a nonzero index is the only
    lower bound; for hypersurfaces the report also flags the degree
    window in which a positive Kaehler-Einstein metric is known to exist.
    """
    if not m.spin:
        raise NotApplicableError(f"{m.name} is not spin")
    inv = ci_invariants(m)
    n = m.spec.n

    if m.c1_sign == C1_ZERO:
        if n == 1:
            return CIKernelReport(
                manifold=m.name,
                spin=True,
                c1_sign=m.c1_sign,
                index=inv.rs_index,
                note="flat torus case: the Hodge-sum kernel formula needs n >= 2",
            )
        table = hodge_numbers(m)
        h1 = [table[1][p] for p in range(n + 1)]
        kernel = -2 + 2 * sum(h1[p] for p in range(1, n))
        if n % 2 == 0:
            index_hodge = 2 + 2 * sum((-1) ** p * h1[p] for p in range(1, n))
        else:
            index_hodge = 0
        if index_hodge != inv.rs_index:
            raise ConsistencyError(
                f"{m.name}: Hodge-sum index {index_hodge} != "
                f"characteristic index {inv.rs_index}"
            )
        return CIKernelReport(
            manifold=m.name,
            spin=True,
            c1_sign=m.c1_sign,
            index=inv.rs_index,
            kernel_dim=kernel,
            index_from_hodge=index_hodge,
            note="Ricci-flat Kaehler metric exists; kernel is an exact Hodge sum",
        )

    if m.c1_sign == C1_NEGATIVE:
        ahat = inv.ahat
        bound = abs(int(ahat)) if ahat.denominator == 1 else 0
        return CIKernelReport(
            manifold=m.name,
            spin=True,
            c1_sign=m.c1_sign,
            index=inv.rs_index,
            kernel_lower_bound=bound if bound else None,
            nontrivial_on_im_p=bound > 0,
            index_differs_from_dirac=inv.rs_index != inv.dirac_index,
            note=(
                "negative first Chern class: harmonic spinors inject into ker Q"
                if bound
                else "negative first Chern class, but Ahat vanishes"
            ),
        )

    window = None
    if m.spec.codimension == 1:
        d = m.total_degree
        window = 2 * d >= m.spec.n + 1 and d <= m.spec.n + 1
    if inv.ahat != 0:
        raise ConsistencyError(f"{m.name}: positive c1 but Ahat = {inv.ahat}")
    bound = abs(int(inv.rs_index)) if inv.rs_index.denominator == 1 else 0
    return CIKernelReport(
        manifold=m.name,
        spin=True,
        c1_sign=m.c1_sign,
        index=inv.rs_index,
        kernel_lower_bound=bound if bound else None,
        ke_positive_window=window,
        note="positive first Chern class: |index| bounds the kernel from below",
    )


@dataclass(frozen=True)
class AhatSurveyEntry:
    n: int
    degrees: Tuple[int, ...]
    total_degree: int
    ahat: Fraction
    claim_nonzero: bool

    @property
    def matches_claim(self) -> bool:
        return (self.ahat != 0) == self.claim_nonzero


def ahat_survey(max_half_dim: int, max_degree: int) -> List[AhatSurveyEntry]:
    """Test 'Ahat != 0 iff 2n+r+1 < d' on spin CIs of even complex dimension.

    Scans hypersurfaces and two-fold intersections X_{2n}(degrees) with
    r - d odd up to the given size and returns every entry, so callers
    can inspect where the advertised equivalence fails (it does fail on
    the Ricci-flat boundary d = 2n+r+1, where two parallel spinors give
    Ahat = 2).
    """
    entries: List[AhatSurveyEntry] = []
    degree_lists: List[Tuple[int, ...]] = [
        (d,) for d in range(1, max_degree + 1)
    ] + [
        (d1, d2)
        for d1 in range(1, max_degree + 1)
        for d2 in range(d1, max_degree + 1)
    ]
    for half in range(1, max_half_dim + 1):
        dim = 2 * half
        for degrees in degree_lists:
            r, d = len(degrees), sum(degrees)
            if (r - d) % 2 == 0:
                continue
            ci = build_ci(CISpec(dim, degrees))
            entries.append(
                AhatSurveyEntry(
                    n=dim,
                    degrees=degrees,
                    total_degree=d,
                    ahat=evaluate_genus("AHAT", ci.profile),
                    claim_nonzero=2 * half + r + 1 < d,
                )
            )
    return entries


def rs_index_report(m: CIManifold) -> RSIndexReport:
    """Convenience passthrough exposing the index split for a built CI."""
    return rs_index(m.profile)
