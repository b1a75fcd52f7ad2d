"""Seifert fibration calculus over the base sphere.

Seifert data is an ordered tuple of fiber pairs (alpha, beta).  A pair with
alpha >= 2 is an exceptional fiber and must satisfy gcd(alpha, beta) = 1; a
pair (1, b) is an ordinary fiber carrying the integer term b of the
fibration.  All arithmetic is exact: Euler numbers are Fraction values and
everything else is plain int, so results stay reliable at any size.

This module is deliberately free of manifold types; it only manipulates
fiber data.  The bridge to canonical manifold values (seifert_to_lens and
friends) lives in manifolds.py.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

SeifertData = tuple[tuple[int, int], ...]


class InvalidFiber(ValueError):
    """A fiber pair violates alpha >= 1 or gcd(alpha, beta) = 1."""


class NotALens(ValueError):
    """Raised for Seifert data that cannot fiber a lens space."""


def check_fibers(fibers: Iterable[Sequence[int]]) -> SeifertData:
    """Validate fiber data and return it as a tuple of int pairs.

    Rules: every alpha >= 1, and every exceptional fiber (alpha >= 2) has
    gcd(alpha, beta) = 1.  Ordinary fibers (1, b) take any integer b.
    """
    out = []
    for pair in fibers:
        try:
            alpha, beta = pair
        except (TypeError, ValueError):
            raise InvalidFiber(f"fiber {pair!r} is not an (alpha, beta) pair") from None
        if not isinstance(alpha, int) or not isinstance(beta, int):
            raise InvalidFiber(f"fiber {pair!r} must hold plain ints")
        if alpha < 1:
            raise InvalidFiber(f"fiber ({alpha}, {beta}): multiplicity must be >= 1")
        if alpha >= 2 and math.gcd(alpha, beta) != 1:
            raise InvalidFiber(f"fiber ({alpha}, {beta}): gcd(alpha, beta) must be 1")
        out.append((alpha, beta))
    return tuple(out)


def normalize(fibers: Iterable[Sequence[int]]) -> SeifertData:
    """Return the normal form of Seifert data.

    Each exceptional beta is reduced into (0, alpha), the excess and all
    ordinary fibers are merged into a single integer term (1, b) which is
    dropped when b = 0, and the pairs are sorted lexicographically (the
    (1, b) term sorts first).  The Euler number is unchanged.
    """
    b = 0
    reduced = []
    for alpha, beta in check_fibers(fibers):
        if alpha == 1:
            b += beta
        else:
            r = beta % alpha  # in (0, alpha): gcd(alpha, beta) = 1 forbids 0
            b += (beta - r) // alpha
            reduced.append((alpha, r))
    reduced.sort()
    if b != 0:
        reduced.insert(0, (1, b))
    return tuple(reduced)


def euler_number(fibers: Iterable[Sequence[int]]) -> Fraction:
    """Exact Euler number sum(beta_i / alpha_i) of the fibration."""
    return sum((Fraction(beta, alpha) for alpha, beta in check_fibers(fibers)),
               Fraction(0))


def exceptional_fibers(fibers: Iterable[Sequence[int]]) -> SeifertData:
    """The fibers of multiplicity >= 2 in the normal form of the data."""
    return tuple(f for f in normalize(fibers) if f[0] >= 2)


def not_lens_obstruction(fibers: Iterable[Sequence[int]]) -> bool:
    """True when the data has >= 3 exceptional fibers.

    Such a fibration is never a lens space, so this is the obstruction
    consumed by the lens conversion and by primeness reporting.
    """
    return len(exceptional_fibers(fibers)) >= 3


def isomorphic(a: Iterable[Sequence[int]], b: Iterable[Sequence[int]]) -> bool:
    """Fiber-preserving isomorphism over the closed base sphere.

    Holds iff there is a bijection of exceptional fibers matching each
    (alpha, beta) with an (alpha, beta') where beta' = +/-beta (mod alpha),
    the sign chosen per fiber, and the total Euler numbers agree exactly.
    Implemented by search over matchings; fiber counts here are tiny.
    """
    na, nb = normalize(a), normalize(b)
    if euler_number(na) != euler_number(nb):
        return False
    ea = [f for f in na if f[0] >= 2]
    eb = [f for f in nb if f[0] >= 2]
    if len(ea) != len(eb):
        return False
    for perm in itertools.permutations(eb):
        ok = True
        for (alpha, beta), (alpha2, beta2) in zip(ea, perm):
            if alpha != alpha2:
                ok = False
                break
            if (beta - beta2) % alpha != 0 and (beta + beta2) % alpha != 0:
                ok = False
                break
        if ok:
            return True
    return False


def isomorphism_key(fibers: Iterable[Sequence[int]]) -> SeifertData:
    """Canonical representative of the isomorphism class of the data.

    A sign flip beta -> alpha - beta on a subset S of exceptional fibers is
    realizable over the closed base iff sum_{i in S} (alpha_i - 2 beta_i) /
    alpha_i is an integer (the correction lands in the (1, b) term and keeps
    the Euler number fixed).  The key is the lexicographically least normal
    form over all realizable flips, so key equality is exactly isomorphy.
    """
    base = normalize(fibers)
    b = sum(beta for alpha, beta in base if alpha == 1)
    exc = [f for f in base if f[0] >= 2]
    best = base
    for mask in range(1, 1 << len(exc)):
        delta = Fraction(0)
        flipped = []
        for i, (alpha, beta) in enumerate(exc):
            if mask >> i & 1:
                delta += Fraction(alpha - 2 * beta, alpha)
                flipped.append((alpha, alpha - beta))
            else:
                flipped.append((alpha, beta))
        if delta.denominator != 1:
            continue
        nb = b - int(delta)
        flipped.sort()
        if nb != 0:
            flipped.insert(0, (1, nb))
        candidate = tuple(flipped)
        if candidate < best:
            best = candidate
    return best


def nu_of(alpha: int, beta: int) -> int:
    """The representative of beta^-1 (mod alpha) in [0, alpha).

    For alpha >= 2 this lands in (0, alpha); for alpha = 1 it is 0.
    """
    if alpha < 1:
        raise InvalidFiber(f"multiplicity {alpha} must be >= 1")
    if math.gcd(alpha, beta) != 1:
        raise InvalidFiber(f"{beta} is not invertible mod {alpha}")
    return pow(beta, -1, alpha)


def lens_parameters(fibers: Iterable[Sequence[int]]) -> tuple[int, int]:
    """Raw lens parameters (p, q) of data with at most 2 exceptional fibers.

    The integer term (1, b) is first folded into the first exceptional fiber
    as beta1 -> beta1 + b * alpha1; with no exceptional fiber it stands alone
    as (1, b), i.e. the parameters (b, 1) (b = 0 gives (0, 1), the product
    fibration).  With two exceptional fibers the parameters are

        p = beta1 * alpha2 - alpha1 * beta2
        q = beta1 * nu2 + alpha1 * xi2,

    where alpha2 * xi2 + nu2 * beta2 = 1 and nu2 is the (0, alpha2)
    representative of beta2^-1.  Raises NotALens on >= 3 exceptional fibers.
    """
    norm = normalize(fibers)
    b = sum(beta for alpha, beta in norm if alpha == 1)
    exc = [f for f in norm if f[0] >= 2]
    if len(exc) >= 3:
        raise NotALens(
            f"{len(exc)} exceptional fibers: the fibration is not a lens space")
    if not exc:
        return (b, 1)
    (a1, b1), *rest = exc
    b1 += b * a1
    if not rest:
        return (b1, a1)
    a2, b2 = rest[0]
    nu2 = nu_of(a2, b2)
    xi2 = (1 - nu2 * b2) // a2  # exact: alpha2 | 1 - nu2*beta2
    return (b1 * a2 - a1 * b2, b1 * nu2 + a1 * xi2)


@dataclass(frozen=True, slots=True)
class OrbitalInvariants:
    """Orbital invariants (alpha, nu) of a fibered solid torus.

    alpha >= 1, 0 <= nu < alpha, gcd(alpha, nu) = 1.  The tie to the Seifert
    pair (alpha, beta) of the exceptional fiber is nu * beta = 1 (mod alpha).
    """
    alpha: int
    nu: int

    def __post_init__(self) -> None:
        if self.alpha < 1:
            raise InvalidFiber(f"multiplicity {self.alpha} must be >= 1")
        if not 0 <= self.nu < self.alpha:
            raise InvalidFiber(
                f"nu = {self.nu} must lie in [0, {self.alpha})")
        if math.gcd(self.alpha, self.nu) != 1:
            raise InvalidFiber(
                f"orbital invariants ({self.alpha}, {self.nu}) must be coprime")

    @classmethod
    def from_fiber(cls, pair: Sequence[int]) -> "OrbitalInvariants":
        (alpha, beta), = check_fibers([pair])
        return cls(alpha, nu_of(alpha, beta))

    def fiber(self) -> tuple[int, int]:
        """The Seifert pair (alpha, beta) with beta in [0, alpha)."""
        return (self.alpha, nu_of(self.alpha, self.nu))
