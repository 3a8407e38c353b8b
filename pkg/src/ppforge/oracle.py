"""Ground-truth engines: exhaustive permutation testing and pointwise equality.

Everything here decides by enumeration.  For fields small enough to carry
discrete-log tables the evaluation loop runs on canonical integers (log/exp
lookups plus coefficient-vector adds); otherwise it falls back to plain
element arithmetic.  Both paths compute the same exact values.
"""

from dataclasses import dataclass
from typing import Callable, Optional, Tuple


@dataclass(frozen=True)
class PermutationReport:
    """Verdict of an exhaustive bijection test.

    first_collision holds the lexicographically least pair of canonical input
    encodings with equal images, so diagnostics are reproducible run to run.
    outside_mu (subgroup tests only) holds the least canonical input whose
    image left the subgroup; it also counts as a non-bijection.
    """

    is_bijection: bool
    first_collision: Optional[Tuple[int, int]]
    domain_size: int
    outside_mu: Optional[int] = None

    def __bool__(self):
        return self.is_bijection


def evaluate(field, poly, x):
    """Exact value of a sparse polynomial at x: sum of c * x^e term by term.

    Follows the power conventions x^0 == 1 (including x == 0) and 0^e == 0
    for e > 0.
    """
    acc = field.zero
    for e, c in poly.terms:
        acc = acc + c * x ** e
    return acc


def evaluate_on_field(field, poly):
    """Images of all q^2 elements, indexed by canonical input encoding."""
    if field.tables_supported():
        return _evaluate_all_tabled(field, poly)
    return [int(evaluate(field, poly, x)) for x in field.elements()]


def _evaluate_all_tabled(field, poly):
    exp, log, vec = field.tables()
    p = field.p
    q2 = field.q2
    n = q2 - 1
    const = 0
    var_terms = []
    for e, c in poly.canonical_terms():
        if e == 0:
            const = c
        else:
            var_terms.append((e, log[c]))
    out = [0] * q2
    out[0] = const
    if not var_terms:
        for x in range(1, q2):
            out[x] = const
        return out
    if len(var_terms) == 1 and const == 0:
        (e0, lc0), = var_terms
        for x in range(1, q2):
            out[x] = exp[(lc0 + log[x] * e0) % n]
        return out
    cvec = vec[const]
    if len(var_terms) == 2 and field.degree == 2:
        (e0, lc0), (e1, lc1) = var_terms
        c0, c1 = cvec
        for x in range(1, q2):
            t = log[x]
            a0, a1 = vec[exp[(lc0 + t * e0) % n]]
            b0, b1 = vec[exp[(lc1 + t * e1) % n]]
            out[x] = (c0 + a0 + b0) % p + (c1 + a1 + b1) % p * p
        return out
    if len(var_terms) == 3 and field.degree == 2:
        (e0, lc0), (e1, lc1), (e2, lc2) = var_terms
        c0, c1 = cvec
        for x in range(1, q2):
            t = log[x]
            a0, a1 = vec[exp[(lc0 + t * e0) % n]]
            b0, b1 = vec[exp[(lc1 + t * e1) % n]]
            d0, d1 = vec[exp[(lc2 + t * e2) % n]]
            out[x] = (c0 + a0 + b0 + d0) % p + (c1 + a1 + b1 + d1) % p * p
        return out
    deg = field.degree
    for x in range(1, q2):
        t = log[x]
        acc = list(cvec)
        for e, lc in var_terms:
            tv = vec[exp[(lc + t * e) % n]]
            for j in range(deg):
                acc[j] += tv[j]
        canon = 0
        for j in range(deg - 1, -1, -1):
            canon = canon * p + acc[j] % p
        out[x] = canon
    return out


def _least_collision(images):
    """Lexicographically least (x1, x2) with x1 < x2 and images equal, or None."""
    first_preimage = {}
    best = None
    for x, y in enumerate(images):
        if y in first_preimage:
            pair = (first_preimage[y], x)
            if best is None or pair < best:
                best = pair
        else:
            first_preimage[y] = x
    return best


def is_permutation_of_field(field, poly):
    """Evaluate poly at every element of F_{q^2}; bijection iff no image repeats."""
    images = evaluate_on_field(field, poly)
    collision = _least_collision(images)
    return PermutationReport(
        is_bijection=collision is None,
        first_collision=collision,
        domain_size=field.q2,
    )


def is_permutation_of_mu(mu, fn: Callable):
    """Does the element map fn permute the (q+1)-th roots of unity?

    Bijection iff all q+1 images lie in the subgroup and are pairwise
    distinct.  An image outside the subgroup is reported via outside_mu and
    counts as a non-bijection.
    """
    domain = sorted(mu.elements(), key=int)
    member = mu.canonical_set()
    images = []
    outside = None
    for x in domain:
        y = int(fn(x))
        images.append(y)
        if y not in member and outside is None:
            outside = int(x)
    collision = _least_collision(images)
    if collision is not None:
        # translate positions in the sorted domain back to canonical inputs
        collision = (int(domain[collision[0]]), int(domain[collision[1]]))
    return PermutationReport(
        is_bijection=collision is None and outside is None,
        first_collision=collision,
        domain_size=mu.order,
        outside_mu=outside,
    )


def pointwise_equal(field, f1, f2):
    """True iff the two polynomials agree at every element of F_{q^2}.

    Agreement everywhere is exactly congruence mod x^(q^2) - x.
    """
    return evaluate_on_field(field, f1) == evaluate_on_field(field, f2)
