"""Explicit symmetric-power models of irreducible su(1,1)-representations.

The degree-k model lives on the symmetric power of the standard
representation, carries an invariant indefinite Hermitian form, and is
stored by its diagonalised central element: every Z-image is ``i*diag(d)``
with ``d`` a trace-zero tuple of rationals, basis ordered positive vectors
first.  The trace pairing of two such diagonals against each other drives
the diagonal-disc tightness criterion; tensor products under both complex
structures cover the two-factor case.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

Diagonal = tuple[Fraction, ...]


@dataclass(frozen=True)
class SignaturePair:
    """Signature (p, q) of an invariant indefinite Hermitian form."""

    p: int
    q: int

    def __post_init__(self):
        if self.p < 0 or self.q < 0:
            raise ValueError("signature entries must be nonnegative")

    @property
    def dim(self) -> int:
        return self.p + self.q

    @property
    def rank(self) -> int:
        return min(self.p, self.q)


@dataclass(frozen=True)
class ExplicitRep:
    """A representation given by its form signature and diagonal Z-image."""

    dim: int
    signature: SignaturePair
    z_diagonal: Diagonal
    basis_labels: tuple[str, ...]
    positive_first: bool = True

    def __post_init__(self):
        if self.signature.dim != self.dim:
            raise ValueError("signature does not sum to the dimension")
        if len(self.z_diagonal) != self.dim or len(self.basis_labels) != self.dim:
            raise ValueError("diagonal/basis length mismatch")
        if sum(self.z_diagonal) != 0:
            raise ValueError("Z-image must be trace free")


@dataclass(frozen=True)
class StructureChoice:
    """Signs of the complex structure on each su(1,1) factor of the domain."""

    signs: tuple[int, ...]

    def __post_init__(self):
        if not self.signs or any(s not in (1, -1) for s in self.signs):
            raise ValueError("signs must be +1 or -1")

    def flipped(self) -> "StructureChoice":
        return StructureChoice(tuple(-s for s in self.signs))


def structure_representatives(n_factors: int = 2) -> tuple[StructureChoice, ...]:
    """One representative per {J, -J} pair: first sign pinned to +1."""
    tails = itertools.product((1, -1), repeat=n_factors - 1)
    return tuple(StructureChoice((1,) + tail) for tail in tails)


def sym_power_rep(k: int) -> ExplicitRep:
    """Degree-k symmetric power of the standard su(1,1)-representation.

    Basis ordered positive vectors first: monomials e1^(k-m) e2^m with m
    even, then m odd; the Z-eigenvalue on e1^(k-m) e2^m is (k-2m)/2.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    even_m = [m for m in range(k + 1) if m % 2 == 0]
    odd_m = [m for m in range(k + 1) if m % 2 == 1]
    diag = tuple(Fraction(k - 2 * m, 2) for m in even_m + odd_m)
    labels = tuple(f"e1^{k - m} e2^{m}" for m in even_m + odd_m)
    return ExplicitRep(
        dim=k + 1,
        signature=SignaturePair(len(even_m), len(odd_m)),
        z_diagonal=diag,
        basis_labels=labels,
    )


def z_element(p: int, q: int) -> Diagonal:
    """Diagonal of the central element of su(p,q), positive block first.

    i*diag(q/(p+q), ..., -p/(p+q), ...); the restriction to any 2x2 block of
    a diagonal disc has eigenvalues +-1/2.
    """
    if p < q or q < 0:
        raise ValueError("expected p >= q >= 0")
    if p + q < 2:
        raise ValueError("su(p,q) needs p+q >= 2")
    n = p + q
    return tuple([Fraction(q, n)] * p + [Fraction(-p, n)] * q)


def diagonal_disc_z(p: int, q: int) -> Diagonal:
    """Z-image of the diagonal disc of su(p,q).

    Explicit block-diagonal embedding: min(p,q) blocks pair one positive
    with one negative basis vector and carry eigenvalues +-1/2; leftover
    positive directions are untouched.
    """
    r = min(p, q)
    return tuple(
        [Fraction(1, 2)] * r + [Fraction(0)] * (p - r) + [Fraction(-1, 2)] * q
    )


def pairing(x: Diagonal, y: Diagonal) -> Fraction:
    """tr(X* Y) for X = i*diag(x), Y = i*diag(y): the sum of x_j * y_j."""
    if len(x) != len(y):
        raise ValueError(f"length mismatch: {len(x)} vs {len(y)}")
    return sum((a * b for a, b in zip(x, y)), Fraction(0))


def disc_pairing_value(p: int, q: int) -> Fraction:
    """Pairing of the diagonal disc of su(p,q) against its central element."""
    return pairing(diagonal_disc_z(p, q), z_element(p, q))


def tight_su11_by_pairing(k: int) -> bool:
    """Diagonal-disc trace-pairing criterion for the degree-k model.

    The map is tight iff |<rho(Z), Z_(p,q)>| equals the diagonal-disc value
    of the carrying su(p,q).  A rank-zero target carries no disc and gets a
    zero pullback class, hence nontight; this covers k = 0.
    """
    rep = sym_power_rep(k)
    p, q = rep.signature.p, rep.signature.q
    if min(p, q) == 0:
        return False
    lhs = pairing(rep.z_diagonal, z_element(p, q))
    return abs(lhs) == abs(disc_pairing_value(p, q))


def clebsch_gordan(k: int, l: int) -> tuple[int, ...]:
    """Highest weights of the factors of the degree-(k,l) tensor product."""
    if k < 0 or l < 0:
        raise ValueError("degrees must be nonnegative")
    return tuple(range(k + l, abs(k - l) - 1, -2))


def _split(rep: ExplicitRep) -> tuple[Diagonal, Diagonal]:
    p = rep.signature.p
    return rep.z_diagonal[:p], rep.z_diagonal[p:]


def tensor_rep(k: int, l: int, structure: StructureChoice) -> ExplicitRep:
    """Tensor product of the degree-k and degree-l models.

    Block order (positive vectors first): pos(x)pos, neg(x)neg, pos(x)neg,
    neg(x)pos, each block first-factor major.  The structure signs flip the
    Z-contribution of the corresponding factor.
    """
    if len(structure.signs) != 2:
        raise ValueError("two-factor structure choice expected")
    s1, s2 = structure.signs
    rep1, rep2 = sym_power_rep(k), sym_power_rep(l)
    pos1, neg1 = _split(rep1)
    pos2, neg2 = _split(rep2)
    lab1 = rep1.basis_labels
    lab2 = rep2.basis_labels
    plab1, nlab1 = lab1[: len(pos1)], lab1[len(pos1):]
    plab2, nlab2 = lab2[: len(pos2)], lab2[len(pos2):]

    def block(xs, ys, xlabs, ylabs):
        vals = [s1 * a + s2 * b for a in xs for b in ys]
        labs = [f"({la}) (x) ({lb})" for la in xlabs for lb in ylabs]
        return vals, labs

    blocks = [
        block(pos1, pos2, plab1, plab2),
        block(neg1, neg2, nlab1, nlab2),
        block(pos1, neg2, plab1, nlab2),
        block(neg1, pos2, nlab1, plab2),
    ]
    diag = tuple(v for vals, _ in blocks for v in vals)
    labels = tuple(s for _, labs in blocks for s in labs)
    a, b = rep1.signature.p, rep1.signature.q
    c, d = rep2.signature.p, rep2.signature.q
    return ExplicitRep(
        dim=(k + 1) * (l + 1),
        signature=SignaturePair(a * c + b * d, a * d + b * c),
        z_diagonal=diag,
        basis_labels=labels,
    )


def tensor_signature(k: int, l: int) -> SignaturePair:
    a, b = sym_power_rep(k).signature.p, sym_power_rep(k).signature.q
    c, d = sym_power_rep(l).signature.p, sym_power_rep(l).signature.q
    return SignaturePair(a * c + b * d, a * d + b * c)


def tensor_factor_pairings(k: int, l: int) -> tuple[Fraction, Fraction]:
    """Per-factor contributions to the diagonal-disc pairing.

    The pairing under structure signs (s1, s2) is s1*P1 + s2*P2, where P_t
    pairs the Z-contribution of factor t alone against the ambient central
    element.
    """
    sig = tensor_signature(k, l)
    ambient = z_element(sig.p, sig.q)
    one = tensor_rep(k, l, StructureChoice((1, 1)))
    mixed = tensor_rep(k, l, StructureChoice((1, -1)))
    p_plus = pairing(one.z_diagonal, ambient)
    p_minus = pairing(mixed.z_diagonal, ambient)
    # half sum and half difference of the two structure pairings
    return (p_plus + p_minus) / 2, (p_plus - p_minus) / 2


def tensor_pairing(k: int, l: int, structure: StructureChoice) -> Fraction:
    sig = tensor_signature(k, l)
    rep = tensor_rep(k, l, structure)
    return pairing(rep.z_diagonal, z_element(sig.p, sig.q))


def tight_tensor_by_pairing(k: int, l: int) -> bool:
    """Structure-sweep diagonal-disc criterion for the two-factor model.

    True iff some structure representative attains the disc value in
    absolute value; the degenerate rank-zero target (k = l = 0) is nontight
    with a zero pullback class.
    """
    sig = tensor_signature(k, l)
    if sig.rank == 0:
        return False
    disc = abs(disc_pairing_value(sig.p, sig.q))
    return any(
        abs(tensor_pairing(k, l, structure)) == disc
        for structure in structure_representatives(2)
    )
