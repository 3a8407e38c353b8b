"""The subgroup mu_{q+1} of F_{q^2}^*, its coset partition by a primitive
d-th root of unity, and the three permutation criteria that act on it.

mu_{q+1} = {x : x^(q+1) = 1} is cyclic of order q+1, generated by
gamma = g^(q-1) for a generator g of the full multiplicative group.  For a
divisor d of q+1, omega = gamma^((q+1)/d) has order exactly d and the cosets
omega^i * mu_{(q+1)/d} tile the subgroup precisely when gcd(d, (q+1)/d) = 1.

All decision procedures here are exact: gcd conditions are checked by integer
arithmetic, image disjointness by enumerating all q+1 images.
"""

from dataclasses import dataclass
from math import gcd
from typing import Optional

from .errors import NotADivisor, NotInMu, PartitionNotDisjoint
from .oracle import evaluate


class MuContext:
    """The (q+1)-th roots of unity: generator gamma and cached element list."""

    __slots__ = ("field", "gamma", "order", "_elements", "_canonicals")

    def __init__(self, field, gamma):
        self.field = field
        self.gamma = gamma
        self.order = field.q + 1
        self._elements = None
        self._canonicals = None

    def elements(self):
        """All q+1 roots, as powers gamma^0, gamma^1, ..., gamma^q."""
        if self._elements is None:
            elems = [self.field.one]
            for _ in range(self.order - 1):
                elems.append(elems[-1] * self.gamma)
            self._elements = elems
            self._canonicals = frozenset(int(x) for x in elems)
        return self._elements

    def canonical_set(self):
        if self._canonicals is None:
            self.elements()
        return self._canonicals

    def __contains__(self, x):
        return int(x) in self.canonical_set()


def make_mu(field):
    """MuContext for the field; gamma = generator^(q-1) has exact order q+1."""
    return MuContext(field, field.generator ** (field.q - 1))


class CosetPartition:
    """The decomposition mu_{q+1} = union of omega^i * mu_{(q+1)/d}.

    omega = gamma^((q+1)/d) is a primitive d-th root of unity; s is the
    residue of (q+1)/d mod d normalized into [1, d].  The cosets are pairwise
    disjoint iff gcd(d, (q+1)/d) = 1 (the `disjoint` flag); coset-indexed
    operations refuse non-disjoint partitions.
    """

    __slots__ = ("mu", "d", "omega", "s", "subgroup_order", "disjoint", "_omega_pows")

    def __init__(self, mu, d):
        order = mu.order
        if d < 1 or order % d != 0:
            raise NotADivisor(d, order)
        self.mu = mu
        self.d = d
        self.subgroup_order = order // d
        self.omega = mu.gamma ** self.subgroup_order
        self.s = self.subgroup_order % d or d
        self.disjoint = gcd(d, self.subgroup_order) == 1
        pows = [mu.field.one]
        for _ in range(d - 1):
            pows.append(pows[-1] * self.omega)
        self._omega_pows = pows

    def omega_pow(self, j):
        return self._omega_pows[j % self.d]


def make_partition(mu, d):
    return CosetPartition(mu, d)


def coset_index(part, x):
    """The i in [0, d) with x in omega^i * mu_{(q+1)/d}.

    Computed from x^((q+1)/d) = omega^(i*s) by a linear-scan discrete log in
    the order-d group generated by omega (at most d trials).
    """
    if x not in part.mu:
        raise NotInMu(f"{x!r} is not a (q+1)-th root of unity")
    if not part.disjoint:
        raise PartitionNotDisjoint(f"d={part.d}, subgroup order {part.subgroup_order}")
    z = x ** part.subgroup_order
    d, s = part.d, part.s
    for i in range(d):
        if part.omega_pow(i * s) == z:
            return i
    raise AssertionError("unreachable: x^((q+1)/d) must land in <omega>")


def coset_decompose(part, x):
    """(i, y) with x = omega^i * y and y in the index-d subgroup."""
    i = coset_index(part, x)
    return i, x * part.omega_pow(-i % part.d)


@dataclass(frozen=True)
class MonomialPiece:
    """One monomial branch A * x^exponent of a piecewise map on mu_{q+1}."""

    A: object
    exponent: int


@dataclass(frozen=True)
class CheckResult:
    """Boolean verdict plus a reason code for the first failed condition."""

    ok: bool
    reason: Optional[str] = None

    def __bool__(self):
        return self.ok


def agw_check(field, r, h):
    """Does f(x) = x^r * h(x^(q-1)) permute F_{q^2}?

    Decided through the subgroup route: gcd(r, q-1) = 1, h nonvanishing on
    mu_{q+1}, and x -> x^r * h(x)^(q-1) a bijection of mu_{q+1} (tested by
    enumerating all q+1 images).  A vanishing h yields a False verdict with
    reason code rather than an error.
    """
    q = field.q
    if gcd(r, q - 1) != 1:
        return CheckResult(False, "gcd(r, q-1) != 1")
    mu = make_mu(field)
    images = set()
    for x in mu.elements():
        hv = evaluate(field, h, x)
        if hv.is_zero():
            return CheckResult(False, "h vanishes on mu_{q+1}")
        images.add(int(x ** r * hv ** (q - 1)))
    if len(images) != mu.order:
        return CheckResult(False, "x^r h(x)^(q-1) is not a bijection of mu_{q+1}")
    return CheckResult(True)


def piecewise_check(part, pieces):
    """Permutation test for g(x) = A_i * x^(r_i) on the i-th coset.

    True iff every gcd(r_i, (q+1)/d) = 1 and the d image sets are pairwise
    disjoint; disjointness is decided by evaluating all q+1 images and
    looking for duplicates.
    """
    if not part.disjoint:
        raise PartitionNotDisjoint(f"d={part.d}, subgroup order {part.subgroup_order}")
    if len(pieces) != part.d:
        raise ValueError(f"expected {part.d} pieces, got {len(pieces)}")
    mu = part.mu
    for piece in pieces:
        if piece.A not in mu:
            raise NotInMu(f"piece constant {piece.A!r}")
    if any(gcd(piece.exponent, part.subgroup_order) != 1 for piece in pieces):
        return False
    images = set()
    for x in mu.elements():
        piece = pieces[coset_index(part, x)]
        images.add(int(piece.A * x ** piece.exponent))
    return len(images) == mu.order


def omega_monomial_check(part, A, k, n):
    """gcd criterion for g(omega^i y) = A * omega^(i k) * y^n permuting mu_{q+1}:
    gcd((q+1)/d, n) = 1 and gcd(k, d) = 1."""
    if A not in part.mu:
        raise NotInMu(f"constant {A!r}")
    if not part.disjoint:
        raise PartitionNotDisjoint(f"d={part.d}, subgroup order {part.subgroup_order}")
    return gcd(part.subgroup_order, n) == 1 and gcd(k, part.d) == 1


def materialize_omega_monomial(part, A, k, n):
    """The actual map g for omega_monomial_check, as an element function,
    so the brute-force oracle can confirm the gcd criterion both ways."""
    if A not in part.mu:
        raise NotInMu(f"constant {A!r}")

    def g(x):
        i, y = coset_decompose(part, x)
        return A * part.omega_pow(i * k) * y ** n

    return g


def induced_pieces(part, A, k, n):
    """The omega-monomial map as coset-wise pieces acting on x itself.

    On the i-th coset, A * omega^(i k) * y^n with y = x * omega^(-i) equals
    A * omega^(i (k - n)) * x^n, so the piece constants carry the twist k - n.
    """
    return [MonomialPiece(A * part.omega_pow(i * (k - n) % part.d), n) for i in range(part.d)]
