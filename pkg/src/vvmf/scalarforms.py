"""Classical scalar modular forms as exact q-expansions.

Constructors return series trusted for all exponents strictly below the
requested ``order``.  The discriminant form is built through two independent
pipelines and cross-checked at construction, since every later identity in
the package leans on it.

Caching is keyed by order and returns immutable series, so it is observably
stateless.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import ConsistencyError
from .qseries import QSeries


@dataclass(frozen=True)
class RemainderTriple:
    """Non-negative remainders of -n modulo 2 and 3, plus the balancing
    power of the discriminant; 4*r3 + 6*r2 + 12*r_inf = 2n always."""

    r2: int
    r3: int
    r_inf: int


def remainders(n: int) -> RemainderTriple:
    """Exponent triple (r2, r3, r_inf) attached to the weight-2n generator.

    >>> remainders(1)
    RemainderTriple(r2=1, r3=2, r_inf=-1)
    """
    r2 = (-n) % 2
    r3 = (-n) % 3
    r_inf = (n - 3 * r2 - 2 * r3) // 6
    return RemainderTriple(r2, r3, r_inf)


def remainder_carry(n: int, m: int, k: int) -> int:
    """1 when the mod-k remainders of -n and -m overflow past k, else 0."""
    if k < 1:
        raise ValueError("modulus must be positive")
    return 1 if ((-n) % k) + ((-m) % k) >= k else 0


def divisor_power_sum(n: int, k: int) -> int:
    """sigma_k(n), the sum of the k-th powers of the divisors of n."""
    if n < 1:
        raise ValueError(f"divisor sums need n >= 1, got {n}")
    total = 0
    d = 1
    while d * d <= n:
        if n % d == 0:
            total += d ** k
            e = n // d
            if e != d:
                total += e ** k
        d += 1
    return total


@lru_cache(maxsize=None)
def _euler_product(order: int) -> QSeries:
    """prod_{n>=1} (1 - q^n) via the pentagonal-number expansion."""
    coeffs = [0] * order
    k = 0
    while True:
        hit = False
        for e in (k * (3 * k - 1) // 2, k * (3 * k + 1) // 2):
            if e < order:
                coeffs[e] = 1 if k % 2 == 0 else -1
                hit = True
        if not hit and k > 0:
            break
        k += 1
    return QSeries.from_coeffs(coeffs, valid_to=order)


@lru_cache(maxsize=None)
def eisenstein(k: int, order: int) -> QSeries:
    """The normalized Eisenstein series of weight 4 or 6.

    E4 = 1 + 240*sum sigma_3(n) q^n,  E6 = 1 - 504*sum sigma_5(n) q^n.
    """
    if k not in (4, 6):
        raise ValueError(f"only weights 4 and 6 are provided, got {k}")
    if order < 1:
        raise ValueError("order must be at least 1")
    scale, power = (240, 3) if k == 4 else (-504, 5)
    coeffs = [1] + [scale * divisor_power_sum(n, power) for n in range(1, order)]
    return QSeries.from_coeffs(coeffs, valid_to=order)


@lru_cache(maxsize=None)
def discriminant(order: int) -> QSeries:
    """The discriminant cusp form, built and cross-checked two ways.

    Returns q * prod (1-q^n)^24 and verifies it against
    (E4^3 - E6^2)/1728 coefficient by coefficient.
    """
    if order < 1:
        raise ValueError("order must be at least 1")
    product = (_euler_product(order) ** 24).shift(1)
    e4 = eisenstein(4, order)
    e6 = eisenstein(6, order)
    via_eisenstein = (e4 ** 3 - e6 ** 2) / 1728
    if not product.agrees_with(via_eisenstein):
        raise ConsistencyError(
            "discriminant pipelines disagree: product expansion vs "
            "(E4^3 - E6^2)/1728"
        )
    return product


@lru_cache(maxsize=None)
def eta_squared(order: int) -> QSeries:
    """q^(1/12) * prod (1-q^n)^2, the canonical 12th root of the discriminant."""
    if order < 1:
        raise ValueError("order must be at least 1")
    sq = _euler_product(order) ** 2
    return sq.regrid(12).shift(1, 12)


@lru_cache(maxsize=None)
def hauptmodul(order: int) -> QSeries:
    """J = E4^3/Delta - 744, the weight-0 generator with lead q^-1."""
    if order < 1:
        raise ValueError("order must be at least 1")
    pad = order + 2
    j = eisenstein(4, pad) ** 3 / discriminant(pad) - 744
    assert j.valid_exponent() >= order
    return j


@lru_cache(maxsize=None)
def gen_form(n: int, order: int) -> QSeries:
    """The weight-2n form E4^r3 * E6^r2 * Delta^r_inf generating the
    weakly holomorphic forms of weight 2n over the weight-0 ring.

    Holomorphic for n > 1; for n <= 1 the lead exponent is r_inf < 0 and the
    caller is responsible for requesting enough order for its comparison.
    """
    r = remainders(n)
    pad = order + 2 + 2 * max(0, -r.r_inf)
    out = eisenstein(4, pad) ** r.r3 * eisenstein(6, pad) ** r.r2
    if r.r_inf:
        out = out * discriminant(pad) ** r.r_inf
    assert out.valid_exponent() >= order
    return out


def verify_gen_product(n: int, m: int, order: int) -> bool:
    """Check f_n * f_m / f_(n+m) = (J+744)^s3 * (J-984)^s2 exactly.

    s3 and s2 are the remainder carries of (n, m) mod 3 and mod 2.  Raises
    PrecisionError when the order leaves no comparison window.
    """
    lhs = gen_form(n, order) * gen_form(m, order) / gen_form(n + m, order)
    s3 = remainder_carry(n, m, 3)
    s2 = remainder_carry(n, m, 2)
    rhs = QSeries.constant(1, order)
    j = hauptmodul(order)
    if s3:
        rhs = rhs * (j + 744)
    if s2:
        rhs = rhs * (j - 984)
    return lhs.agrees_with(rhs)


def count_congruent(xs, k: int, p: int) -> int:
    """Number of x in xs with x = p (mod k), via the carry-indicator sums.

    Cross-checked against the direct count; a mismatch is an engine bug.
    """
    if k < 2:
        raise ValueError("modulus must be at least 2")
    if not 0 < p < k:
        raise ValueError("need 0 < p < k")
    xs = list(xs)
    formula = sum(remainder_carry(p, -x, k) for x in xs) \
        - sum(remainder_carry(p + 1, -x, k) for x in xs)
    direct = sum(1 for x in xs if x % k == p % k)
    if formula != direct:
        raise ConsistencyError(
            f"congruence count mismatch for k={k}, p={p}: "
            f"indicator sum {formula} vs direct count {direct}"
        )
    return formula


FORM_NAMES = ("E4", "E6", "Delta", "J", "delta")


def named_form(name: str, order: int) -> QSeries:
    """CLI registry: E4, E6, Delta, J, delta, and f:<n>."""
    if name == "E4":
        return eisenstein(4, order)
    if name == "E6":
        return eisenstein(6, order)
    if name == "Delta":
        return discriminant(order)
    if name == "J":
        return hauptmodul(order)
    if name == "delta":
        return eta_squared(order)
    if name.startswith("f:"):
        try:
            n = int(name[2:])
        except ValueError:
            raise KeyError(name) from None
        return gen_form(n, order)
    raise KeyError(name)
