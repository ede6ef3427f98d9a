"""Deciding which integers the form a^2 + ab + b^2 attains, and finding witnesses."""

from dataclasses import dataclass
from fractions import Fraction
from itertools import chain, count
from math import isqrt

from .factorize import GeneralForm, factor, general_form, is_prime, _general_form_from
from .forms import Representation, U64_MAX, canonicalize, compose, evaluate, solve_b


class NotRepresentableError(ArithmeticError):
    """Raised when a value provably has no representation."""


_ROOT_CANDIDATES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)

_REP_ONE = Representation(1, 0)
_REP_THREE = Representation(1, 1)


def cube_root_unity(p: int) -> int:
    """The root of z^2 + z + 1 = 0 (mod p) lying in (0, p/2), for prime p = 1 (mod 6).

    Found by powering candidates x = 2, 3, 5, ... to the exponent (p-1)/3;
    the first result w != 1 is a primitive cube root of unity, and of the
    two roots w and p-1-w exactly one lies below p/2.
    """
    if not is_prime(p) or p % 6 != 1:
        raise ValueError(f"p={p} must be a prime congruent to 1 (mod 6)")
    e = (p - 1) // 3
    for x in chain(_ROOT_CANDIDATES, count(_ROOT_CANDIDATES[-1] + 2, 2)):
        if x % p == 0:
            continue
        w = pow(x, e, p)
        if w != 1:
            break
    z = min(w, p - 1 - w)
    if (z * z + z + 1) % p != 0:
        raise RuntimeError(f"cube root search for p={p} produced a non-root {z}")
    return z


def represent_prime(p: int) -> Representation:
    """Constructive canonical representation of a prime.

    Exists exactly for p = 3 and p = 1 (mod 6). For the latter, a square
    root r of -3 (mod p) comes from the cube root of unity, and a Euclidean
    remainder descent on (2p, r) stops at the first remainder u with
    u^2 < 4p, which satisfies u^2 + 3v^2 = 4p; the pair ((u-v)/2, v) then
    carries the value p.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p == 3:
        return _REP_THREE
    if p % 6 != 1:
        raise NotRepresentableError(f"prime {p} is {p % 6} (mod 6) and has no representation")
    z = cube_root_unity(p)
    r = 2 * z + 1  # r^2 = -3 (mod p)
    target = 4 * p
    a, b = 2 * p, r
    while b * b > target:
        a, b = b, a % b
    u = b
    v2, residue = divmod(target - u * u, 3)
    if residue:
        raise RuntimeError(f"descent for p={p} left 4p - u^2 not divisible by 3")
    v = isqrt(v2)
    if v * v != v2:
        raise RuntimeError(f"descent for p={p} left (4p - u^2)/3 a non-square")
    rep = canonicalize((u - v) >> 1, v)
    if evaluate(rep.a, rep.b) != p:
        raise RuntimeError(f"construction for p={p} failed verification")
    return rep


def enumerate_reps(n: int) -> list[Representation]:
    """Every canonical representation of n, ordered by ascending second entry.

    Scans the window sqrt(n/3) <= a <= sqrt(n); each a admits at most one b.
    """
    if not 0 <= n <= U64_MAX:
        raise ValueError(f"n={n} is outside the supported unsigned 64-bit range")
    if n == 0:
        return [Representation(0, 0)]
    reps = []
    n4 = 4 * n
    lo = isqrt(n // 3)
    while 3 * lo * lo < n:
        lo += 1
    for a in range(isqrt(n), lo - 1, -1):
        disc = n4 - 3 * a * a
        s = isqrt(disc)
        if s * s == disc:
            t = s - a
            if t >= 0 and not t & 1 and t >> 1 <= a:
                reps.append(Representation(a, t >> 1))
    return reps


@dataclass(frozen=True)
class Verdict:
    """Outcome of the representability test, with evidence either way.

    Exactly one of witness (a representation) and obstruction (a residual
    prime with its odd exponent) is set.
    """

    representable: bool
    witness: Representation | None = None
    obstruction: tuple[int, int] | None = None


def is_loeschian(n: int) -> Verdict:
    """Decide from the factorization whether n is a value of the form.

    n is representable exactly when every prime factor that is 2 or
    5 (mod 6) occurs to an even power.
    """
    if not 0 <= n <= U64_MAX:
        raise ValueError(f"n={n} is outside the supported unsigned 64-bit range")
    if n == 0:
        return Verdict(True, witness=Representation(0, 0))
    factors = factor(n)
    for p, e in factors:
        if p != 3 and p % 6 != 1 and e & 1:
            return Verdict(False, obstruction=(p, e))
    shape = _general_form_from(factors)
    assert shape is not None
    return Verdict(True, witness=_construct(shape, n))


def _construct(shape: GeneralForm, n: int) -> Representation:
    rep = _REP_ONE
    for p, e in shape.primes:
        prime_rep = represent_prime(p)
        for _ in range(e):
            rep = compose(rep, prime_rep, 2)
    for _ in range(shape.power_of_three):
        rep = compose(rep, _REP_THREE, 2)
    if shape.scale != 1:
        rep = Representation(rep.a * shape.scale, rep.b * shape.scale)
    if evaluate(rep.a, rep.b) != n:
        raise RuntimeError(f"constructed representation for {n} failed verification")
    return rep


def represent_fast(n: int) -> Representation | None:
    """One canonical representation of n without exhaustive search, or None.

    Builds up from prime representations by composition, folds in the
    power of three, and scales by the square part. Deterministic, and
    verified by evaluate before returning.
    """
    if not 1 <= n <= U64_MAX:
        raise ValueError(f"n={n} must be a positive 64-bit integer")
    shape = general_form(n)
    if shape is None:
        return None
    return _construct(shape, n)


def count_formula(n: int) -> int:
    """Number of canonical representations of n, straight from the factorization.

    With the (1 mod 6) exponents e_i: half of (1 + prod(e_i + 1)) when all
    e_i are even, half of prod(e_i + 1) otherwise; 0 when n is not
    representable at all.
    """
    if not 1 <= n <= U64_MAX:
        raise ValueError(f"n={n} must be a positive 64-bit integer")
    shape = general_form(n)
    if shape is None:
        return 0
    product = 1
    all_even = True
    for _, e in shape.primes:
        product *= e + 1
        if e & 1:
            all_even = False
    return (1 + product) >> 1 if all_even else product >> 1


def divide_by_square(n: int, k: int) -> Representation:
    """Representation of n / k^2, given representable n with k^2 dividing n."""
    if not 0 <= n <= U64_MAX:
        raise ValueError(f"n={n} is outside the supported unsigned 64-bit range")
    if not 1 <= k <= U64_MAX:
        raise ValueError(f"k={k} must be a positive 64-bit integer")
    quotient, rest = divmod(n, k * k)
    if rest:
        raise ValueError(f"{k}^2 does not divide {n}")
    if quotient == 0:
        return Representation(0, 0)
    rep = represent_fast(quotient)
    if rep is None:
        raise RuntimeError(
            f"quotient {quotient} = {n}/{k}^2 is not representable; {n} cannot have been"
        )
    return rep


def rational_lift(alpha: Fraction, beta: Fraction) -> tuple[int, Representation]:
    """Integer value and witness for a rational point of the form.

    For nonnegative rationals with a^2 + ab + b^2 an integer n, clearing
    denominators gives n * (bd)^2 as a value of the form at the integer
    cross products, and dividing the square back out yields a witness.
    """
    if alpha < 0 or beta < 0:
        raise ValueError(f"rational pair ({alpha}, {beta}) must be nonnegative")
    for name, part in (("alpha", alpha), ("beta", beta)):
        if part.numerator > U64_MAX or part.denominator > U64_MAX:
            raise ValueError(f"{name}={part} is outside the supported range")
    value = alpha * alpha + alpha * beta + beta * beta
    if value.denominator != 1:
        raise ValueError(f"form value {value} is not an integer")
    n = value.numerator
    if n > U64_MAX:
        raise OverflowError(f"form value {n} exceeds the 64-bit range")
    k = alpha.denominator * beta.denominator
    scaled = evaluate(alpha.numerator * beta.denominator, alpha.denominator * beta.numerator)
    return n, divide_by_square(scaled, k)
