"""Fixed invertible pairings ℤ → ℕ, ℕ×ℕ → ℕ and ``μ: ℕ×ℤ → ℕ``."""

from functools import lru_cache
from math import isqrt


def zigzag(n: int) -> int:
    """ℤ → ℕ: ``n ≥ 0 ↦ 2n``, ``n < 0 ↦ -2n-1``."""
    return 2 * n if n >= 0 else -2 * n - 1


def unzigzag(m: int) -> int:
    if m < 0:
        raise ValueError(f"{m} is not a natural number")
    return m // 2 if m % 2 == 0 else -(m + 1) // 2


def cantor_pair(a: int, b: int) -> int:
    if a < 0 or b < 0:
        raise ValueError("cantor_pair takes natural numbers")
    s = a + b
    return s * (s + 1) // 2 + b


def cantor_unpair(z: int) -> tuple:
    if z < 0:
        raise ValueError(f"{z} is not a natural number")
    w = (isqrt(8 * z + 1) - 1) // 2
    b = z - w * (w + 1) // 2
    return w - b, b


def mu(alpha: int, n: int) -> int:
    """The bijection ℕ×ℤ → ℕ; each fibre ``μ({α}×ℤ)`` is one orbit of the pairing shift."""
    return cantor_pair(alpha, zigzag(n))


@lru_cache(maxsize=1 << 16)
def mu_inverse(gamma: int) -> tuple:
    a, b = cantor_unpair(gamma)
    return a, unzigzag(b)
