"""Exact weight-lattice representation theory for the classical series and G2.

Root systems live in explicit Euclidean coordinates with the standard
scalar product: type A uses GL-style coordinates (n entries, weights are
weakly decreasing tuples, shifts by a constant tuple are central), B/C/D
use the usual m-coordinate realizations with half-integer spin weights
allowed, and G2 sits in the trace-zero hyperplane of three coordinates.
Products concatenate coordinates componentwise.

On top of the realizations: Weyl's dimension formula, Casimir eigenvalues
``<lambda+2*delta, lambda>``, Freudenthal's multiplicity recursion over a
saturated weight set, the Klimyk tensor-product rule, and a brute-force
character oracle that evaluates moment sums of full weight systems at a
rational point (enough to separate every decomposition handled here).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .errors import ConsistencyError, InputError

Weight = Tuple[Fraction, ...]


def _weight(values: Iterable) -> Weight:
    return tuple(Fraction(v) for v in values)


def _add(u: Weight, v: Weight) -> Weight:
    return tuple(a + b for a, b in zip(u, v))


def _sub(u: Weight, v: Weight) -> Weight:
    return tuple(a - b for a, b in zip(u, v))


def _scale(u: Weight, c: Fraction) -> Weight:
    return tuple(a * c for a in u)


def _dot(u: Weight, v: Weight) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


@dataclass(frozen=True)
class _Component:
    kind: str  # A, B, C, D, G2
    coords: int


class RootSystem:
    """A root system of classical or G2 type, or a product of such.

    Instances are immutable after construction apart from an internal
    weight-system cache, which is only ever appended to.
    """

    def __init__(
        self,
        components: Sequence[_Component],
        simple_roots: Sequence[Weight],
        positive_roots: Sequence[Weight],
        fundamental_weights: Sequence[Weight],
        name: str,
    ) -> None:
        self.components = tuple(components)
        self.coords = sum(c.coords for c in self.components)
        self.simple_roots = tuple(simple_roots)
        self.positive_roots = tuple(positive_roots)
        self.fundamental_weights = tuple(fundamental_weights)
        self.name = name
        self.delta = _scale(
            tuple(sum(r[i] for r in self.positive_roots) for i in range(self.coords)),
            Fraction(1, 2),
        )
        self._weights_cache: Dict[Weight, Dict[Weight, int]] = {}
        self._dominant_cache: Dict[Weight, Dict[Weight, int]] = {}
        self._validate()

    # -- construction checks ------------------------------------------------

    def _validate(self) -> None:
        for i, a in enumerate(self.simple_roots):
            norm = _dot(a, a)
            if norm == 0:
                raise ConsistencyError("degenerate simple root")
            for b in self.simple_roots:
                entry = 2 * _dot(b, a) / norm
                if entry.denominator != 1:
                    raise ConsistencyError("Cartan matrix is not integral")
                if b is not a and entry > 0:
                    raise ConsistencyError("simple roots must meet obtusely")
        # delta equals the sum of fundamental weights, up to the central
        # (constant per A-component) directions that GL coordinates carry
        diff = _sub(self.delta, self._sum_fundamentals())
        for alpha in self.positive_roots:
            if _dot(diff, alpha) != 0:
                raise ConsistencyError("delta does not match fundamental weights")

    def _sum_fundamentals(self) -> Weight:
        total = [Fraction(0)] * self.coords
        for w in self.fundamental_weights:
            for i, x in enumerate(w):
                total[i] += x
        return tuple(total)

    def _blocks(self):
        start = 0
        for comp in self.components:
            yield comp, start, start + comp.coords
            start += comp.coords

    # -- chamber geometry ----------------------------------------------------

    def pairing(self, w: Weight, alpha: Weight) -> Fraction:
        """Evaluation against the coroot of alpha, 2<w,a>/<a,a>."""
        return 2 * _dot(w, alpha) / _dot(alpha, alpha)

    def is_dominant(self, w: Weight) -> bool:
        return all(self.pairing(w, a) >= 0 for a in self.simple_roots)

    def is_integral(self, w: Weight) -> bool:
        return all(self.pairing(w, a).denominator == 1 for a in self.simple_roots)

    def trivial_weight(self) -> Weight:
        return (Fraction(0),) * self.coords

    def is_trivial_weight(self, w: Weight) -> bool:
        """Highest weight of the trivial representation.

        In GL coordinates the center is invisible to the roots, so for an
        A-component any constant tuple is trivial; elsewhere only zero is.
        """
        for comp, lo, hi in self._blocks():
            block = w[lo:hi]
            if comp.kind == "A":
                if any(x != block[0] for x in block):
                    return False
            elif any(x != 0 for x in block):
                return False
        return True

    def to_dominant(self, w: Weight) -> Tuple[Weight, int]:
        """Dominant Weyl-orbit representative and the determinant sign."""
        current = list(w)
        sign = 1
        moved = True
        while moved:
            moved = False
            for alpha in self.simple_roots:
                m = 2 * _dot(tuple(current), alpha) / _dot(alpha, alpha)
                if m < 0:
                    for i, a in enumerate(alpha):
                        current[i] -= m * a
                    sign = -sign
                    moved = True
        return tuple(current), sign

    def to_dominant_strict(self, w: Weight) -> Optional[Tuple[Weight, int]]:
        """As to_dominant, but None when the weight lies on a chamber wall."""
        dom, sign = self.to_dominant(w)
        for alpha in self.simple_roots:
            if _dot(dom, alpha) == 0:
                return None
        return dom, sign

    def _require_dominant(self, w: Weight) -> Weight:
        w = _weight(w)
        if len(w) != self.coords:
            raise InputError(f"{self.name} weights have {self.coords} coordinates")
        if not self.is_dominant(w):
            raise InputError(f"{w} is not dominant for {self.name}")
        if not self.is_integral(w):
            raise InputError(f"{w} is not an integral weight for {self.name}")
        return w

    # -- numeric invariants ---------------------------------------------------

    def weyl_dimension(self, lam: Weight) -> int:
        lam = self._require_dominant(lam)
        shifted = _add(lam, self.delta)
        num = Fraction(1)
        for alpha in self.positive_roots:
            num *= _dot(shifted, alpha) / _dot(self.delta, alpha)
        if num.denominator != 1:
            raise ConsistencyError("Weyl dimension came out non-integral")
        return int(num)

    def casimir(self, lam: Weight) -> Fraction:
        """Eigenvalue <lambda + 2*delta, lambda> of the quadratic Casimir.

        For A-components the central (trace) part of a GL weight does not
        act through the simple Lie algebra and is projected away first.
        """
        lam = self._require_dominant(lam)
        projected: List[Fraction] = []
        for comp, lo, hi in self._blocks():
            block = lam[lo:hi]
            if comp.kind == "A":
                mean = sum(block, Fraction(0)) / comp.coords
                projected.extend(x - mean for x in block)
            else:
                projected.extend(block)
        p = tuple(projected)
        return _dot(_add(p, _scale(self.delta, Fraction(2))), p)

    # -- weight systems ---------------------------------------------------------

    def _saturate(self, lam: Weight) -> List[Weight]:
        """All weights of the irreducible module: the saturated set of lam."""
        seen = {lam}
        work = [lam]
        while work:
            mu = work.pop()
            for alpha in self.positive_roots:
                m = self.pairing(mu, alpha)
                steps = int(m) if m >= 0 else -int(-m)
                if steps == 0:
                    continue
                direction = 1 if steps > 0 else -1
                for k in range(1, abs(steps) + 1):
                    nu = tuple(
                        x - direction * k * a for x, a in zip(mu, alpha)
                    )
                    if nu not in seen:
                        seen.add(nu)
                        work.append(nu)
        return list(seen)

    def dominant_weight_multiplicities(self, lam: Weight) -> Dict[Weight, int]:
        """Freudenthal recursion over the dominant weights of V(lam)."""
        lam = self._require_dominant(lam)
        if lam in self._dominant_cache:
            return dict(self._dominant_cache[lam])
        full = self._saturate(lam)
        full_set = set(full)
        dominant = [w for w in full if self.is_dominant(w)]
        # descending height guarantees every weight above mu is known
        dominant.sort(key=lambda w: _dot(self.delta, w), reverse=True)

        mult: Dict[Weight, int] = {lam: 1}
        c_top = _dot(_add(lam, self.delta), _add(lam, self.delta))
        for mu in dominant:
            if mu == lam:
                continue
            total = Fraction(0)
            for alpha in self.positive_roots:
                k = 1
                while True:
                    nu = tuple(x + k * a for x, a in zip(mu, alpha))
                    if nu not in full_set:
                        break
                    rep, _ = self.to_dominant(nu)
                    total += mult[rep] * _dot(nu, alpha)
                    k += 1
            denom = c_top - _dot(_add(mu, self.delta), _add(mu, self.delta))
            if denom <= 0:
                raise ConsistencyError("Freudenthal denominator must be positive")
            value = 2 * total / denom
            if value.denominator != 1 or value <= 0:
                raise ConsistencyError("non-integral weight multiplicity")
            mult[mu] = int(value)
        self._dominant_cache[lam] = mult
        return dict(mult)

    def weight_multiplicities(self, lam: Weight) -> Dict[Weight, int]:
        """Full weight-to-multiplicity map of V(lam); sums to the dimension."""
        lam = self._require_dominant(lam)
        if lam in self._weights_cache:
            return dict(self._weights_cache[lam])
        dominant = self.dominant_weight_multiplicities(lam)
        full: Dict[Weight, int] = {}
        for w in self._saturate(lam):
            rep, _ = self.to_dominant(w)
            full[w] = dominant[rep]
        if sum(full.values()) != self.weyl_dimension(lam):
            raise ConsistencyError("weight multiplicities do not sum to the dimension")
        self._weights_cache[lam] = full
        return dict(full)


# -- factories -----------------------------------------------------------------


def _unit(n: int, i: int, value=1) -> Weight:
    return tuple(Fraction(value) if j == i else Fraction(0) for j in range(n))


def type_a(n: int) -> RootSystem:
    """sl(n) in GL coordinates: n entries, roots e_i - e_j."""
    if n < 2:
        raise InputError("type A needs at least two coordinates")
    simple = [_sub(_unit(n, i), _unit(n, i + 1)) for i in range(n - 1)]
    positive = [
        _sub(_unit(n, i), _unit(n, j)) for i in range(n) for j in range(i + 1, n)
    ]
    fundamentals = [
        tuple(Fraction(1) if j <= i else Fraction(0) for j in range(n))
        for i in range(n - 1)
    ]
    return RootSystem([_Component("A", n)], simple, positive, fundamentals, f"A{n - 1}")


def type_b(m: int) -> RootSystem:
    """so(2m+1): roots e_i +- e_j and the short e_i."""
    if m < 1:
        raise InputError("type B needs rank at least one")
    simple = [_sub(_unit(m, i), _unit(m, i + 1)) for i in range(m - 1)] + [
        _unit(m, m - 1)
    ]
    positive = [_unit(m, i) for i in range(m)]
    for i in range(m):
        for j in range(i + 1, m):
            positive.append(_sub(_unit(m, i), _unit(m, j)))
            positive.append(_add(_unit(m, i), _unit(m, j)))
    fundamentals = [
        tuple(Fraction(1) if j <= i else Fraction(0) for j in range(m))
        for i in range(m - 1)
    ] + [(Fraction(1, 2),) * m]
    return RootSystem([_Component("B", m)], simple, positive, fundamentals, f"B{m}")


def type_c(m: int) -> RootSystem:
    """sp(m): roots e_i +- e_j and the long 2e_i."""
    if m < 1:
        raise InputError("type C needs rank at least one")
    simple = [_sub(_unit(m, i), _unit(m, i + 1)) for i in range(m - 1)] + [
        _unit(m, m - 1, 2)
    ]
    positive = [_unit(m, i, 2) for i in range(m)]
    for i in range(m):
        for j in range(i + 1, m):
            positive.append(_sub(_unit(m, i), _unit(m, j)))
            positive.append(_add(_unit(m, i), _unit(m, j)))
    fundamentals = [
        tuple(Fraction(1) if j <= i else Fraction(0) for j in range(m))
        for i in range(m)
    ]
    return RootSystem([_Component("C", m)], simple, positive, fundamentals, f"C{m}")


def type_d(m: int) -> RootSystem:
    """so(2m), m >= 2: roots e_i +- e_j."""
    if m < 2:
        raise InputError("type D needs rank at least two")
    simple = [_sub(_unit(m, i), _unit(m, i + 1)) for i in range(m - 1)] + [
        _add(_unit(m, m - 2), _unit(m, m - 1))
    ]
    positive = []
    for i in range(m):
        for j in range(i + 1, m):
            positive.append(_sub(_unit(m, i), _unit(m, j)))
            positive.append(_add(_unit(m, i), _unit(m, j)))
    fundamentals = [
        tuple(Fraction(1) if j <= i else Fraction(0) for j in range(m))
        for i in range(m - 2)
    ]
    half = Fraction(1, 2)
    fundamentals.append(tuple([half] * (m - 1) + [-half]))
    fundamentals.append((half,) * m)
    return RootSystem([_Component("D", m)], simple, positive, fundamentals, f"D{m}")


def g2() -> RootSystem:
    """G2 in the trace-zero hyperplane of three coordinates."""
    a1 = _weight((1, -1, 0))
    a2 = _weight((-2, 1, 1))
    positive = [
        a1,
        a2,
        _add(a1, a2),
        _add(_scale(a1, Fraction(2)), a2),
        _add(_scale(a1, Fraction(3)), a2),
        _add(_scale(a1, Fraction(3)), _scale(a2, Fraction(2))),
    ]
    fundamentals = [_weight((0, -1, 1)), _weight((-1, -1, 2))]
    return RootSystem([_Component("G2", 3)], [a1, a2], positive, fundamentals, "G2")


def product_system(*systems: RootSystem) -> RootSystem:
    """Direct product with concatenated coordinates."""
    if len(systems) < 2:
        raise InputError("a product needs at least two factors")
    components: List[_Component] = []
    simple: List[Weight] = []
    positive: List[Weight] = []
    fundamentals: List[Weight] = []
    total = sum(s.coords for s in systems)
    offset = 0
    zero = (Fraction(0),) * total

    def embed(w: Weight, at: int) -> Weight:
        return zero[:at] + w + zero[at + len(w):]

    for s in systems:
        components.extend(s.components)
        simple.extend(embed(r, offset) for r in s.simple_roots)
        positive.extend(embed(r, offset) for r in s.positive_roots)
        fundamentals.extend(embed(w, offset) for w in s.fundamental_weights)
        offset += s.coords
    name = "x".join(s.name for s in systems)
    return RootSystem(components, simple, positive, fundamentals, name)


# -- representation sums ---------------------------------------------------------


class RepSum:
    """Formal integer combination of irreducibles, keyed by highest weight.

    Multiplicities are positive for honest representations; subtraction
    may leave negative entries only when explicitly requested (virtual
    differences, used transiently while peeling off a known subbundle).
    """

    def __init__(self, system: RootSystem, terms: Dict[Weight, int]) -> None:
        self.system = system
        self.terms = {w: m for w, m in terms.items() if m != 0}

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, RepSum)
            and self.system is other.system
            and self.terms == other.terms
        )

    def __repr__(self) -> str:
        inside = ", ".join(
            f"{tuple(str(x) for x in w)}: {m}" for w, m in self.sorted_terms()
        )
        return f"RepSum({self.system.name}; {inside})"

    def sorted_terms(self) -> List[Tuple[Weight, int]]:
        return sorted(self.terms.items())

    def is_virtual(self) -> bool:
        return any(m < 0 for m in self.terms.values())

    @property
    def dimension(self) -> int:
        return sum(
            m * self.system.weyl_dimension(w) for w, m in self.terms.items()
        )

    def add(self, other: "RepSum") -> "RepSum":
        if other.system is not self.system:
            raise InputError("cannot combine representations of different systems")
        merged = dict(self.terms)
        for w, m in other.terms.items():
            merged[w] = merged.get(w, 0) + m
        return RepSum(self.system, merged)

    def scale(self, c: int) -> "RepSum":
        return RepSum(self.system, {w: c * m for w, m in self.terms.items()})

    def subtract(self, other: "RepSum", virtual: bool = False) -> "RepSum":
        result = self.add(other.scale(-1))
        if not virtual and result.is_virtual():
            bad = {w: m for w, m in result.terms.items() if m < 0}
            raise ConsistencyError(f"subtraction left negative multiplicities: {bad}")
        return result

    def trivial_multiplicity(self) -> int:
        return sum(
            m for w, m in self.terms.items() if self.system.is_trivial_weight(w)
        )


def irreducible(system: RootSystem, lam) -> RepSum:
    return RepSum(system, {system._require_dominant(lam): 1})


# -- public operations --------------------------------------------------------


def weyl_dim(system: RootSystem, lam) -> int:
    return system.weyl_dimension(_weight(lam))


def casimir(system: RootSystem, lam) -> Fraction:
    return system.casimir(_weight(lam))


def weight_multiplicities(system: RootSystem, lam) -> Dict[Weight, int]:
    return system.weight_multiplicities(_weight(lam))


def tensor_decompose(system: RootSystem, lam, mu) -> RepSum:
    """Decompose V(lam) (x) V(mu) by Klimyk's dominant-reflection rule.

    The weight system of the smaller factor is enumerated; each shifted
    weight lam + nu + delta is reflected into the open chamber (walls
    drop out) and contributes its sign.  The result is checked to be an
    honest representation of the right total dimension.
    """
    lam = system._require_dominant(_weight(lam))
    mu = system._require_dominant(_weight(mu))
    if system.weyl_dimension(mu) > system.weyl_dimension(lam):
        lam, mu = mu, lam
    counts: Dict[Weight, int] = {}
    for nu, mult in system.weight_multiplicities(mu).items():
        shifted = _add(_add(lam, nu), system.delta)
        res = system.to_dominant_strict(shifted)
        if res is None:
            continue
        dom, sign = res
        w = _sub(dom, system.delta)
        counts[w] = counts.get(w, 0) + sign * mult
    result = RepSum(system, counts)
    if result.is_virtual():
        raise ConsistencyError("Klimyk produced a negative multiplicity")
    expected = system.weyl_dimension(lam) * system.weyl_dimension(mu)
    if result.dimension != expected:
        raise ConsistencyError(
            f"tensor dimension {result.dimension} != {expected}"
        )
    return result


def tensor_product_sum(system: RootSystem, a: RepSum, b: RepSum) -> RepSum:
    """Tensor product of two (honest) representation sums."""
    if a.is_virtual() or b.is_virtual():
        raise InputError("tensor products need honest representations")
    out = RepSum(system, {})
    for wa, ma in a.terms.items():
        for wb, mb in b.terms.items():
            out = out.add(tensor_decompose(system, wa, wb).scale(ma * mb))
    return out


def character_oracle(
    system: RootSystem, rep: RepSum, point: Sequence, max_order: int = 4
) -> Tuple[Fraction, ...]:
    """Moments sum(mult * <weight, point>^k), k = 0..max_order.

    A cheap stand-in for full character evaluation: order zero is the
    dimension, and at a generic rational point the first few moments
    separate all the representation sums this project compares.  Moments
    of a tensor product are binomial convolutions of factor moments,
    which is what the cross-checks exploit.
    """
    pt = _weight(point)
    if len(pt) != system.coords:
        raise InputError("evaluation point has the wrong number of coordinates")
    moments = [Fraction(0)] * (max_order + 1)
    for w, mult in rep.terms.items():
        for nu, inner_mult in system.weight_multiplicities(w).items():
            value = _dot(nu, pt)
            power = Fraction(1)
            for k in range(max_order + 1):
                moments[k] += mult * inner_mult * power
                power *= value
    return tuple(moments)


def moment_convolution(
    a: Sequence[Fraction], b: Sequence[Fraction]
) -> Tuple[Fraction, ...]:
    """Moments of a tensor product from factor moments (weights add)."""
    if len(a) != len(b):
        raise InputError("moment sequences must have equal length")
    import math

    out = []
    for k in range(len(a)):
        out.append(
            sum(
                (math.comb(k, j) * a[j] * b[k - j] for j in range(k + 1)),
                Fraction(0),
            )
        )
    return tuple(out)
