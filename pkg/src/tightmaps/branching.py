"""Restriction of A2/C2 irreducibles to regular rank-one and rank-two
subalgebras of Hermitian type.

A subalgebra is specified by a subset B of the roots subject to three
conditions: differences of B-elements are not roots, B is linearly
independent, and each Dynkin component of B contains exactly one noncompact
root.  Branching is computed through weight multiplicities: each weight is
evaluated on the chosen coroots and the resulting multiset is peeled into
strings, giving the decomposition into irreducible factors together with
the signatures of the explicit models carrying them.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .rootsys import (
    RootSystemData,
    Vector,
    WeightVector,
    dimension,
    dot,
    eval_on_coroot,
    weight_multiplicities,
)
from .su11 import SignaturePair, sym_power_rep, tensor_signature

SL2 = "sl2"
SL2_X_SL2 = "sl2xsl2"


class SubalgebraError(ValueError):
    """A root subset violating one of the regularity conditions."""


@dataclass(frozen=True)
class SubalgebraSpec:
    system: RootSystemData
    roots_b: tuple[Vector, ...]
    generated_roots_c: tuple[Vector, ...]
    target_kind: str

    @property
    def rank(self) -> int:
        return len(self.roots_b)


def _span_roots(system: RootSystemData, roots: tuple[Vector, ...]) -> tuple[Vector, ...]:
    """ZB intersected with the root set, for |B| <= 2 (coefficients small)."""
    found = []
    bound = 4
    if len(roots) == 1:
        combos = [(c,) for c in range(-bound, bound + 1)]
    else:
        combos = [
            (c1, c2)
            for c1 in range(-bound, bound + 1)
            for c2 in range(-bound, bound + 1)
        ]
    for combo in combos:
        if all(c == 0 for c in combo):
            continue
        vec = tuple(
            sum(c * r[i] for c, r in zip(combo, roots))
            for i in range(len(roots[0]))
        )
        if system.is_root(vec) and vec not in found:
            found.append(vec)
    return tuple(found)


def make_subalgebra(system: RootSystemData, roots) -> SubalgebraSpec:
    """Validate a root subset B and build the regular subalgebra it spans."""
    if system.is_product:
        raise SubalgebraError("regular subalgebras are built inside simple systems")
    b = tuple(tuple(Fraction(x) for x in r) for r in roots)
    if not b:
        raise SubalgebraError("B must be nonempty")
    if len(b) > 2:
        raise SubalgebraError("only rank-one and rank-two subalgebras are supported")
    for r in b:
        if not system.is_root(r):
            raise SubalgebraError(f"{r} is not a root of {system.kind}")
    if len(set(b)) != len(b):
        raise SubalgebraError("B has repeated roots")

    # condition 1: alpha - beta is never a root for alpha, beta in B
    for x in b:
        for y in b:
            if x == y:
                continue
            diff = tuple(a - c for a, c in zip(x, y))
            if system.is_root(diff):
                raise SubalgebraError(
                    f"condition 1 fails: {x} - {y} is a root"
                )

    # condition 2: linear independence
    if len(b) == 2:
        x, y = b
        gram = dot(x, x) * dot(y, y) - dot(x, y) ** 2
        if gram == 0:
            raise SubalgebraError(f"condition 2 fails: {x}, {y} are dependent")

    # condition 3: one noncompact root per Dynkin component of B
    components: list[list[Vector]] = []
    for r in b:
        attached = [c for c in components if any(dot(r, s) != 0 for s in c)]
        merged = [r] + [s for c in attached for s in c]
        components = [c for c in components if c not in attached] + [merged]
    for comp in components:
        noncompact = sum(1 for r in comp if system.is_noncompact_root(r))
        if noncompact != 1:
            raise SubalgebraError(
                f"condition 3 fails: component {comp} has {noncompact} "
                "noncompact roots (expected exactly 1)"
            )

    span = _span_roots(system, b)
    plus_minus = set(b) | {tuple(-x for x in r) for r in b}
    if len(b) == 1:
        kind = SL2
    else:
        x, y = b
        if dot(x, y) != 0 or set(span) != plus_minus:
            raise SubalgebraError(
                "rank-two subalgebra must split as two orthogonal sl2 blocks"
            )
        kind = SL2_X_SL2
    return SubalgebraSpec(
        system=system, roots_b=b, generated_roots_c=span, target_kind=kind
    )


_TERM_RE = re.compile(r"^(\d*)a([12])$")


def parse_subalgebra_selector(system: RootSystemData, text: str) -> tuple[Vector, ...]:
    """Parse selectors like ``a1+a2`` or ``a2,2a1+a2`` into root vectors."""
    roots = []
    for part in text.split(","):
        part = part.strip().lower().replace(" ", "")
        if not part:
            raise SubalgebraError(f"empty component in selector {text!r}")
        vec = None
        for term in part.split("+"):
            m = _TERM_RE.match(term)
            if not m:
                raise SubalgebraError(f"cannot parse selector term {term!r}")
            coeff = int(m.group(1)) if m.group(1) else 1
            idx = int(m.group(2)) - 1
            if idx >= system.rank:
                raise SubalgebraError(
                    f"simple root a{idx + 1} does not exist in {system.kind}"
                )
            simple = system.simple_roots[idx]
            if vec is None:
                vec = tuple(coeff * x for x in simple)
            else:
                vec = tuple(v + coeff * x for v, x in zip(vec, simple))
        roots.append(vec)
    return tuple(roots)


def selector_of(system: RootSystemData, roots: tuple[Vector, ...]) -> str:
    """Inverse of the selector grammar, for reporting."""
    names = []
    for r in roots:
        coeffs = system.root_coefficients(r)
        terms = []
        for i, c in enumerate(coeffs):
            if c == 0:
                continue
            prefix = "" if c == 1 else str(c)
            terms.append(f"{prefix}a{i + 1}")
        names.append("+".join(terms))
    return ",".join(names)


@dataclass(frozen=True)
class BranchingResult:
    target_kind: str
    # descending multiset of sl2 highest weights, or of pairs for sl2xsl2
    factors: tuple
    signatures: tuple[SignaturePair, ...]

    @property
    def factor_dimension(self) -> int:
        if self.target_kind == SL2:
            return sum(m + 1 for m in self.factors)
        return sum((m + 1) * (n + 1) for m, n in self.factors)


def evaluation_multiset(highest: WeightVector, sub: SubalgebraSpec) -> Counter:
    """Coroot evaluations of every weight, with multiplicity."""
    mults = weight_multiplicities(highest)
    out: Counter = Counter()
    for mu, m in mults.items():
        evals = []
        for beta in sub.roots_b:
            v = eval_on_coroot(mu, beta)
            if v.denominator != 1:
                raise ValueError(
                    f"non-integral evaluation {v} of {mu.coords} on {beta}"
                )
            evals.append(int(v))
        out[tuple(evals)] += m
    return out


def _peel_sl2(values: Counter) -> list[int]:
    remaining = Counter(values)
    factors = []
    while remaining:
        top = max(remaining)
        m = top[0]
        if m < 0:
            raise ValueError("evaluation multiset is not symmetric")
        for v in range(m, -m - 1, -2):
            if remaining[(v,)] <= 0:
                raise ValueError(f"string peeling failed at value {v}")
            remaining[(v,)] -= 1
            if remaining[(v,)] == 0:
                del remaining[(v,)]
        factors.append(m)
    return factors


def _peel_sl2xsl2(values: Counter) -> list[tuple[int, int]]:
    remaining = Counter(values)
    factors = []
    while remaining:
        m, n = max(remaining)
        if m < 0 or n < 0:
            raise ValueError("evaluation multiset is not bi-symmetric")
        for v in range(m, -m - 1, -2):
            for w in range(n, -n - 1, -2):
                if remaining[(v, w)] <= 0:
                    raise ValueError(f"string peeling failed at value {(v, w)}")
                remaining[(v, w)] -= 1
                if remaining[(v, w)] == 0:
                    del remaining[(v, w)]
        factors.append((m, n))
    return factors


def restrict_rep(highest: WeightVector, sub: SubalgebraSpec) -> BranchingResult:
    """Decompose the restriction of an irreducible into sl2 strings.

    Peels the evaluation multiset greedily from the top; the result is
    checked for dimension conservation against the ambient irreducible.
    """
    values = evaluation_multiset(highest, sub)
    if sub.target_kind == SL2:
        factors = sorted(_peel_sl2(values), reverse=True)
        signatures = tuple(sym_power_rep(m).signature for m in factors)
    else:
        factors = sorted(_peel_sl2xsl2(values), reverse=True)
        signatures = tuple(tensor_signature(m, n) for m, n in factors)
    result = BranchingResult(
        target_kind=sub.target_kind,
        factors=tuple(factors),
        signatures=signatures,
    )
    if result.factor_dimension != dimension(highest):
        raise AssertionError(
            "branching lost dimensions: "
            f"{result.factor_dimension} != {dimension(highest)}"
        )
    return result


def _witness_chain(highest: WeightVector) -> list[WeightVector]:
    """Candidate witness weights, walked down the proof-preferred strings.

    For A2 the chain steps down the long-root direction and then the second
    simple root; for C2 it steps down the short dominant direction.  The
    highest weight itself is always tried first.
    """
    system = highest.system
    chain = [highest]
    alpha_sum = tuple(
        a + b for a, b in zip(system.simple_roots[0], system.simple_roots[1])
    ) if system.rank == 2 else None
    if system.kind == "A2":
        for n in (1, 2):
            chain.append(_shift(highest, alpha_sum, n))
        chain.append(_shift(highest, system.simple_roots[1], 1))
    elif system.kind == "C2":
        chain.append(_shift(highest, alpha_sum, 1))
    return chain


def _shift(w: WeightVector, root: Vector, n: int) -> WeightVector:
    """w - n*root, expressed back in fundamental coordinates."""
    system = w.system
    cartan = system.cartan_matrix
    coeffs = system.root_coefficients(root)
    delta = tuple(
        sum(coeffs[i] * cartan[j][i] for i in range(system.rank))
        for j in range(system.rank)
    )
    return WeightVector(
        tuple(c - n * d for c, d in zip(w.coords, delta)), system
    )


def even_witness(highest: WeightVector, sub: SubalgebraSpec):
    """A weight with an even nonzero coroot evaluation, or None.

    Such a weight certifies a branching factor of even nonzero highest
    weight in the matching coordinate, hence a nontight factor.  Preference
    goes to the proof-chain candidates; a deterministic scan of the full
    support is the fallback.
    """
    support = set(weight_multiplicities(highest))

    def accepted(w: WeightVector):
        if w not in support:
            return None
        for beta in sub.roots_b:
            v = eval_on_coroot(w, beta)
            if v != 0 and v.denominator == 1 and int(v) % 2 == 0:
                return w
        return None

    for cand in _witness_chain(highest):
        hit = accepted(cand)
        if hit is not None:
            return hit
    for cand in sorted(support, key=lambda w: w.coords, reverse=True):
        hit = accepted(cand)
        if hit is not None:
            return hit
    return None
