"""Deterministic primality, factorization, and prime classification for 64-bit inputs."""

from dataclasses import dataclass
from enum import Enum
from math import gcd
from random import Random

from .forms import U64_MAX

# Witness set proven complete for every n below 2^64.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

# Default seed for the rho stage; factor() accepts an override.
RHO_SEED = 0x10E5C41A


def _sieve(limit: int) -> tuple[int, ...]:
    flags = bytearray([1]) * (limit + 1)
    flags[0:2] = b"\x00\x00"
    for p in range(2, int(limit**0.5) + 1):
        if flags[p]:
            flags[p * p :: p] = b"\x00" * len(flags[p * p :: p])
    return tuple(i for i in range(limit + 1) if flags[i])


_TRIAL_PRIMES = _sieve(1000)
_TRIAL_COVERED = 1009 * 1009  # anything below this is fully split by trial division


def is_prime(n: int) -> bool:
    """Deterministic primality test, exact over the whole 64-bit range."""
    if not 0 <= n <= U64_MAX:
        raise ValueError(f"n={n} is outside the supported unsigned 64-bit range")
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    if n < 41 * 41:
        return True
    d = n - 1
    r = (d & -d).bit_length() - 1
    d >>= r
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _rho_split(n: int, rng: Random) -> int:
    """One nontrivial factor of a composite n with no small prime factor.

    Brent's cycle-finding variant of the rho method; parameters are drawn
    from rng, so a fixed seed makes the whole factorization reproducible.
    """
    while True:
        y = rng.randrange(1, n)
        c = rng.randrange(1, n)
        g = q = r = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(128, r - k)):
                    y = (y * y + c) % n
                    q = q * (x - y) % n
                g = gcd(q, n)
                k += 128
            r <<= 1
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(x - ys, n)
        if g != n:
            return g


def _factor_hard(n: int, counts: dict[int, int], rng: Random) -> None:
    if n < _TRIAL_COVERED or is_prime(n):
        counts[n] = counts.get(n, 0) + 1
        return
    d = _rho_split(n, rng)
    _factor_hard(d, counts, rng)
    _factor_hard(n // d, counts, rng)


def factor(n: int, seed: int = RHO_SEED) -> list[tuple[int, int]]:
    """Prime factorization as an ascending list of (prime, exponent) pairs.

    factor(1) is the empty list. Output is deterministic for a fixed seed.
    """
    if not 1 <= n <= U64_MAX:
        raise ValueError(f"n={n} must be a positive 64-bit integer")
    counts: dict[int, int] = {}
    for p in _TRIAL_PRIMES:
        if p * p > n:
            break
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            counts[p] = e
    if n > 1:
        _factor_hard(n, counts, Random(seed))
    return sorted(counts.items())


class PrimeClass(Enum):
    """The three residue classes that govern representability of a prime."""

    THREE = "three"
    ONE_MOD_6 = "one_mod_6"
    RESIDUAL = "residual"


def classify_prime(p: int) -> PrimeClass:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p == 3:
        return PrimeClass.THREE
    if p % 6 == 1:
        return PrimeClass.ONE_MOD_6
    return PrimeClass.RESIDUAL


@dataclass(frozen=True)
class GeneralForm:
    """Shape n = scale^2 * 3^power_of_three * product of (1 mod 6) prime powers.

    Every representable n splits this way; primes contains the (1 mod 6)
    part in ascending order, and scale collects half of each even residual
    exponent together with nothing else.
    """

    scale: int
    power_of_three: int
    primes: list[tuple[int, int]]


def general_form(n: int, seed: int = RHO_SEED) -> GeneralForm | None:
    """Split n into the representable shape, or None when a residual prime has odd exponent."""
    if not 1 <= n <= U64_MAX:
        raise ValueError(f"n={n} must be a positive 64-bit integer")
    return _general_form_from(factor(n, seed))


def _general_form_from(factors: list[tuple[int, int]]) -> GeneralForm | None:
    scale = 1
    power_of_three = 0
    primes: list[tuple[int, int]] = []
    for p, e in factors:
        if p == 3:
            power_of_three = e
        elif p % 6 == 1:
            primes.append((p, e))
        elif e & 1:
            return None
        else:
            scale *= p ** (e >> 1)
    return GeneralForm(scale, power_of_three, primes)
