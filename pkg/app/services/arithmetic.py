"""
Frobenius pushforward and pullback numerics on a curve

All arithmetic is on Python ints and Fractions, so nothing overflows or
rounds.
"""

import logging
from collections import Counter
from fractions import Fraction
from typing import Callable, Iterable, List, Mapping, Tuple, Union

from app.core.exceptions import InvalidDivisor, NegativeGenus, NonPrimeCharacteristic
from app.models.curve import CurveContext
from app.models.divisor import FormalDivisorExpr
from app.models.invariants import BundleInvariants
from app.utils.validators import is_prime

logger = logging.getLogger(__name__)

PointMap = Union[Mapping[str, str], Callable[[str], str]]


def make_context(p: int, g: int) -> CurveContext:
    """Validated curve context; p must be prime, g non-negative"""
    if p < 2 or not is_prime(p):
        raise NonPrimeCharacteristic(f"characteristic p={p} is not prime")
    if g < 0:
        raise NegativeGenus(f"genus g={g} is negative")
    return CurveContext(p=p, g=g)


def slope(inv: BundleInvariants) -> Fraction:
    """mu = degree / rank"""
    return Fraction(inv.degree, inv.rank)


def pushforward_invariants(inv: BundleInvariants, ctx: CurveContext) -> BundleInvariants:
    """(r, d) -> (r p, d + r (p - 1)(g - 1))"""
    if ctx.g < 1:
        logger.debug("pushforward at g=%d: semistability statements need g >= 1", ctx.g)
    return BundleInvariants(
        rank=inv.rank * ctx.p,
        degree=inv.degree + inv.rank * (ctx.p - 1) * (ctx.g - 1),
    )


def pullback_invariants(inv: BundleInvariants, ctx: CurveContext) -> BundleInvariants:
    """(r, d) -> (r, p d)"""
    return BundleInvariants(rank=inv.rank, degree=ctx.p * inv.degree)


def pushforward_slope(inv: BundleInvariants, ctx: CurveContext) -> Fraction:
    """Closed form (p - 1)(2g - 2) / (2p) + mu / p"""
    p = ctx.p
    return Fraction((p - 1) * ctx.canonical_degree, 2 * p) + slope(inv) / p


def canonical_filtration_profile(inv: BundleInvariants, ctx: CurveContext) -> List[BundleInvariants]:
    """Gradeds of the canonical filtration of F^* F_* (E).

    On a curve the l-th graded is E (x) (Omega^1)^l, of invariants
    (r, d + l r (2g - 2)). Listed for l = p - 1 down to 0, which is
    descending slope order once g >= 2.
    """
    return [
        BundleInvariants(rank=inv.rank, degree=inv.degree + l * inv.rank * ctx.canonical_degree)
        for l in range(ctx.p - 1, -1, -1)
    ]


def total_invariants(pieces: Iterable[BundleInvariants]) -> BundleInvariants:
    """Componentwise sum of ranks and degrees"""
    pieces = list(pieces)
    if not pieces:
        raise ValueError("cannot total an empty list of invariants")
    total = pieces[0]
    for piece in pieces[1:]:
        total = total + piece
    return total


def frobenius_structure_degree(ctx: CurveContext) -> int:
    """deg det(F_* O_X) = (p - 1)(g - 1)"""
    return (ctx.p - 1) * (ctx.g - 1)


def generator_degree(ctx: CurveContext, d: int) -> int:
    """Degree of line bundles L with F_* L of rank p and degree d"""
    return d - (ctx.p - 1) * (ctx.g - 1)


def _resolve_point(point_map: PointMap, token: str) -> str:
    if callable(point_map):
        image = point_map(token)
    else:
        if token not in point_map:
            raise InvalidDivisor(f"point map is undefined on {token}")
        image = point_map[token]
    if not isinstance(image, str):
        raise InvalidDivisor(f"image of {token} is not a point token")
    return image


def pushforward_determinant(
    rank: int,
    det_divisor: Union[Mapping[str, int], Iterable[Tuple[str, int]]],
    point_map: PointMap,
) -> FormalDivisorExpr:
    """det(f_* E) = det(f_* O_X)^rank (x) O_Y(sum n_i f(P_i)).

    `det_divisor` may be a mapping or a sequence of (point, multiplicity)
    pairs; repeated points are summed, so splitting a multiplicity into
    unit entries gives the same result.
    """
    if rank < 1:
        raise InvalidDivisor(f"rank must be at least 1, got {rank}")

    entries = det_divisor.items() if isinstance(det_divisor, Mapping) else det_divisor
    pushed: Counter = Counter()
    for token, multiplicity in entries:
        pushed[_resolve_point(point_map, token)] += int(multiplicity)

    return FormalDivisorExpr(det_structure_power=rank, pushed_points=dict(pushed))
