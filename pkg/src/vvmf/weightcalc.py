"""Weight distribution of free generating sets, as executable constraints.

For a pure-parity representation the generating-weight polynomial
P(z) = sum_i z^(w_i) is pinned down at z = -i and at the primitive cube
roots of unity by traces of representation matrices, and the congruence
classes of the normalized weights k_i = (w_i - epsilon)/2 are counted by the
eigenvalue multiplicities.  This module evaluates those constraints exactly
in Q(zeta_12), enumerates the candidate weight multisets they allow, and
expands the graded dimension series a candidate implies.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement

from .exactfield import CycNumber, root_of_unity
from .replib import Multiplicities, RepSpec, multiplicities, traces

# Evaluation points, all inside Q(zeta_12).
MINUS_I = root_of_unity(12, 9)
ZETA3 = root_of_unity(12, 4)
ZETA3_INV = root_of_unity(12, 8)


@dataclass(frozen=True)
class WeightMultiset:
    """Candidate fundamental weights, stored as normalized k_i with
    w_i = 2*k_i + epsilon."""

    epsilon: int
    ks: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "ks", tuple(sorted(self.ks)))

    @property
    def size(self) -> int:
        return len(self.ks)

    @property
    def weights(self) -> tuple[int, ...]:
        return tuple(2 * k + self.epsilon for k in self.ks)

    def weight_sum(self) -> int:
        return sum(self.weights)

    def hilbert_value(self, z: CycNumber) -> CycNumber:
        """P(z) = sum_i z^(w_i), evaluated exactly."""
        acc = CycNumber.zero()
        for w in self.weights:
            acc = acc + z ** w
        return acc


@dataclass(frozen=True)
class WeightProfile:
    """Everything the traces say about the fundamental weights."""

    count_k_odd: int
    count_k_mod3_1: int
    count_k_mod3_2: int
    at_minus_i: CycNumber
    at_zeta: CycNumber
    at_zeta_inv: CycNumber


def weight_profile(rep: RepSpec) -> WeightProfile:
    """Trace-side values of the weight constraints.

    The congruence counts come from the evenized representation's eigenvalue
    multiplicities; the Hilbert values are direct traces: P(-i) = Tr rho(S)
    and P at a primitive cube root equals the trace of the inverse power of
    rho(U).
    """
    mult = multiplicities(rep)
    data = traces(rep)
    return WeightProfile(
        count_k_odd=mult.alpha,
        count_k_mod3_1=mult.beta1,
        count_k_mod3_2=mult.beta2,
        at_minus_i=data.s,
        at_zeta=data.u_inv,
        at_zeta_inv=data.u,
    )


@dataclass(frozen=True)
class HilbertCheck:
    """Per-constraint report for a candidate weight multiset."""

    value_at_minus_i: bool
    value_at_zeta: bool
    value_at_zeta_inv: bool
    count_odd: bool
    count_mod3_1: bool
    count_mod3_2: bool
    weight_sum: int
    weight_sum_nonneg: bool

    @property
    def passed(self) -> bool:
        return (self.value_at_minus_i and self.value_at_zeta
                and self.value_at_zeta_inv and self.count_odd
                and self.count_mod3_1 and self.count_mod3_2
                and self.weight_sum_nonneg)

    def __bool__(self) -> bool:
        return self.passed


def check_hilbert_poly(ws: WeightMultiset, rep: RepSpec) -> HilbertCheck:
    """Test a candidate multiset against every trace constraint, exactly."""
    if ws.size != rep.dimension:
        raise ValueError(
            f"multiset size {ws.size} does not match dimension {rep.dimension}"
        )
    if ws.epsilon != rep.epsilon:
        raise ValueError("parity of the multiset does not match the representation")
    profile = weight_profile(rep)
    ks = ws.ks
    return HilbertCheck(
        value_at_minus_i=ws.hilbert_value(MINUS_I) == profile.at_minus_i,
        value_at_zeta=ws.hilbert_value(ZETA3) == profile.at_zeta,
        value_at_zeta_inv=ws.hilbert_value(ZETA3_INV) == profile.at_zeta_inv,
        count_odd=sum(1 for k in ks if k % 2 == 1) == profile.count_k_odd,
        count_mod3_1=sum(1 for k in ks if k % 3 == 1) == profile.count_k_mod3_1,
        count_mod3_2=sum(1 for k in ks if k % 3 == 2) == profile.count_k_mod3_2,
        weight_sum=ws.weight_sum(),
        weight_sum_nonneg=ws.weight_sum() >= 0,
    )


def enumerate_weight_multisets(d: int, epsilon: int, mult: Multiplicities,
                               k_min: int = 0, k_max: int = 11,
                               sum_w: int | None = None) -> list[WeightMultiset]:
    """All size-d multisets over [k_min, k_max] matching the congruence
    counts, with non-negative total weight (and the exact total when given).

    The total weight is not determined by trace data, so it is an optional
    input rather than something pretended to be derived.  Infeasible
    constraints yield an empty list.
    """
    if k_min > k_max:
        raise ValueError("k_min must not exceed k_max")
    if epsilon not in (0, 1):
        raise ValueError("epsilon must be 0 or 1")
    out = []
    for ks in combinations_with_replacement(range(k_min, k_max + 1), d):
        if sum(1 for k in ks if k % 2 == 1) != mult.alpha:
            continue
        if sum(1 for k in ks if k % 3 == 1) != mult.beta1:
            continue
        if sum(1 for k in ks if k % 3 == 2) != mult.beta2:
            continue
        total = sum(2 * k + epsilon for k in ks)
        if total < 0:
            continue
        if sum_w is not None and total != sum_w:
            continue
        out.append(WeightMultiset(epsilon, ks))
    out.sort(key=lambda w: w.ks)
    return out


def dimension_series(ws: WeightMultiset, n_max: int) -> list[int]:
    """Graded dimensions implied by a weight multiset, for weights 0..n_max.

    Expands P(z)/((1-z^4)(1-z^6)), i.e. counts representations
    n = w_i + 4a + 6b with a, b >= 0.
    """
    if n_max < 0:
        raise ValueError("n_max must be non-negative")
    dims = [0] * (n_max + 1)
    base = [0] * (n_max + 1)
    for a in range(0, n_max + 1, 4):
        for b in range(a, n_max + 1, 6):
            base[b] += 1
    for w in ws.weights:
        for n in range(max(w, 0), n_max + 1):
            dims[n] += base[n - w]
    if any(v < 0 for v in dims):
        raise ValueError("weights inconsistent with a free module")
    return dims
