"""Finite-dimensional representations of the modular group, given by exact
matrices for the generators S = [[0,-1],[1,0]] and T = [[1,1],[0,1]].

Validation checks the defining relations with exact matrix arithmetic.  The
second distinguished element is U = S*T^(-1) = [[0,-1],[1,-1]], which has
order 3; its eigenvalue multiplicities (together with those of S) are
recovered from traces alone, with no eigendecomposition.

Only pure-parity representations are accepted: rho(S)^2 must be plus or
minus the identity.  Mixed inputs must be split into parity blocks first
(see split_by_parity).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import RepValidationError
from .exactfield import CycNumber, _check_order, _coerce, root_of_unity

Matrix = tuple[tuple[CycNumber, ...], ...]

# The order-12 generating linear character: values on S and U.
_CHAR_S = 9   # zeta_12^9 = -i
_CHAR_U = 8   # zeta_12^8 = exp(4*pi*i/3)
_CHAR_T = 1   # zeta_12   (= value(U)^-1 * value(S))


# -- small exact matrix helpers ---------------------------------------------

def _mat(rows) -> Matrix:
    out = []
    for row in rows:
        cells = []
        for v in row:
            c = _coerce(v)
            if c is None:
                raise TypeError(f"matrix entries must be exact numbers, got {v!r}")
            cells.append(c)
        out.append(tuple(cells))
    return tuple(out)


def _identity(d: int) -> Matrix:
    return tuple(tuple(CycNumber.one() if i == j else CycNumber.zero()
                       for j in range(d)) for i in range(d))


def _mat_mul(a: Matrix, b: Matrix) -> Matrix:
    d = len(a)
    out = []
    for i in range(d):
        row = []
        for j in range(d):
            acc = CycNumber.zero()
            for k in range(d):
                if not a[i][k].is_zero() and not b[k][j].is_zero():
                    acc = acc + a[i][k] * b[k][j]
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def _mat_eq(a: Matrix, b: Matrix) -> bool:
    return all(x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb))


def _mat_scale(a: Matrix, c: CycNumber) -> Matrix:
    return tuple(tuple(v * c for v in row) for row in a)


def _mat_trace(a: Matrix) -> CycNumber:
    acc = CycNumber.zero()
    for i in range(len(a)):
        acc = acc + a[i][i]
    return acc


def _mat_inv(a: Matrix) -> Matrix:
    """Gauss-Jordan inverse over the cyclotomic field."""
    d = len(a)
    work = [list(row) + list(idr) for row, idr in zip(a, _identity(d))]
    for col in range(d):
        pivot = next((r for r in range(col, d) if not work[r][col].is_zero()), None)
        if pivot is None:
            raise RepValidationError("matrix is singular; generator images must be invertible")
        work[col], work[pivot] = work[pivot], work[col]
        inv = work[col][col].inverse()
        work[col] = [v * inv for v in work[col]]
        for r in range(d):
            if r != col and not work[r][col].is_zero():
                f = work[r][col]
                work[r] = [v - f * w for v, w in zip(work[r], work[col])]
    return tuple(tuple(row[d:]) for row in work)


def _block_diag(a: Matrix, b: Matrix) -> Matrix:
    da, db = len(a), len(b)
    zero = CycNumber.zero()
    out = []
    for i in range(da):
        out.append(tuple(a[i]) + tuple(zero for _ in range(db)))
    for i in range(db):
        out.append(tuple(zero for _ in range(da)) + tuple(b[i]))
    return tuple(out)


# -- representation spec -----------------------------------------------------

@dataclass(frozen=True, eq=False)
class RepSpec:
    name: str
    dimension: int
    order: int
    s: Matrix
    t: Matrix
    epsilon: int

    def u(self) -> Matrix:
        """The image of [[0,-1],[1,-1]] = S*T^(-1)."""
        return _mat_mul(self.s, _mat_inv(self.t))

    def to_record(self) -> dict:
        return {
            "name": self.name,
            "dimension": self.dimension,
            "cyclotomic_order": self.order,
            "S": [[c.to_record() for c in row] for row in self.s],
            "T": [[c.to_record() for c in row] for row in self.t],
        }


def matrices_equal(a: RepSpec, b: RepSpec) -> bool:
    return a.dimension == b.dimension and _mat_eq(a.s, b.s) and _mat_eq(a.t, b.t)


def make_rep(name: str, s_rows, t_rows) -> RepSpec:
    """Validate generator matrices and determine the parity.

    Checks, in order: squareness, rho(S)^4 = 1, invertibility of rho(T),
    (rho(S) rho(T)^-1)^3 = 1, rho(S)^2 central, and rho(S)^2 = +-1.
    Each failure is reported by name.
    """
    s = _mat(s_rows)
    t = _mat(t_rows)
    d = len(s)
    if d == 0 or any(len(r) != d for r in s) or len(t) != d or any(len(r) != d for r in t):
        raise RepValidationError("generator matrices must be square and of equal size")
    order = 1
    for m in (s, t):
        for row in m:
            for c in row:
                order = math.lcm(order, c.order)
    _check_order(order)
    ident = _identity(d)
    s2 = _mat_mul(s, s)
    if not _mat_eq(_mat_mul(s2, s2), ident):
        raise RepValidationError("relation rho(S)^4 = 1 fails")
    u = _mat_mul(s, _mat_inv(t))
    if not _mat_eq(_mat_mul(_mat_mul(u, u), u), ident):
        raise RepValidationError("relation (rho(S) rho(T)^-1)^3 = 1 fails")
    if not _mat_eq(_mat_mul(s2, t), _mat_mul(t, s2)):
        raise RepValidationError("rho(S)^2 does not commute with rho(T)")
    if _mat_eq(s2, ident):
        epsilon = 0
    elif _mat_eq(s2, _mat_scale(ident, CycNumber.from_rational(-1))):
        epsilon = 1
    else:
        raise RepValidationError(
            "rho(S)^2 is not plus or minus the identity: "
            "decompose into even/odd parts first"
        )
    return RepSpec(name, d, order, s, t, epsilon)


def load_rep(record: dict) -> RepSpec:
    """Parse and validate the wire form of a representation."""
    s = [[CycNumber.from_record(c) for c in row] for row in record["S"]]
    t = [[CycNumber.from_record(c) for c in row] for row in record["T"]]
    rep = make_rep(str(record.get("name", "rep")), s, t)
    declared = record.get("dimension")
    if declared is not None and int(declared) != rep.dimension:
        raise RepValidationError(
            f"declared dimension {declared} does not match matrices ({rep.dimension})"
        )
    declared_order = record.get("cyclotomic_order")
    if declared_order is not None and int(declared_order) % rep.order != 0:
        raise RepValidationError(
            f"declared cyclotomic order {declared_order} cannot hold entries "
            f"of order {rep.order}"
        )
    return rep


def character_value(element: str, j: int) -> CycNumber:
    """Value of the j-th power of the order-12 character on S, T or U."""
    base = {"S": _CHAR_S, "T": _CHAR_T, "U": _CHAR_U}[element]
    return root_of_unity(12, base * j).demoted()


def linear_character(j: int) -> RepSpec:
    """The j-th power of the generating linear character (period 12).

    j = 0 gives the trivial representation; odd j are odd representations.
    """
    j %= 12
    name = "trivial" if j == 0 else f"kappa^{j}"
    return make_rep(name, [[character_value("S", j)]], [[character_value("T", j)]])


def twist(rep: RepSpec, j: int) -> RepSpec:
    """Tensor with the j-th character power; parity flips with odd j."""
    s = _mat_scale(rep.s, character_value("S", j))
    t = _mat_scale(rep.t, character_value("T", j))
    name = rep.name if j % 12 == 0 else f"{rep.name}*kappa^{j % 12}"
    return RepSpec(name, rep.dimension, math.lcm(rep.order, 12 if j % 12 else 1),
                   s, t, (rep.epsilon + j) % 2)


def direct_sum(a: RepSpec, b: RepSpec) -> RepSpec:
    if a.epsilon != b.epsilon:
        raise RepValidationError(
            "parity mismatch: direct summands must both be even or both odd"
        )
    return RepSpec(f"{a.name}(+){b.name}", a.dimension + b.dimension,
                   math.lcm(a.order, b.order),
                   _block_diag(a.s, b.s), _block_diag(a.t, b.t), a.epsilon)


def split_by_parity(blocks) -> tuple[RepSpec | None, RepSpec | None]:
    """Direct-sum explicitly given pure-parity blocks into (even, odd) parts.

    This is the supported route for mixed inputs; block structure is not
    detected automatically.
    """
    even = odd = None
    for block in blocks:
        if block.epsilon == 0:
            even = block if even is None else direct_sum(even, block)
        else:
            odd = block if odd is None else direct_sum(odd, block)
    return even, odd


# -- traces and multiplicities ------------------------------------------------

@dataclass(frozen=True)
class TraceData:
    s: CycNumber
    u: CycNumber
    u_inv: CycNumber


def traces(rep: RepSpec) -> TraceData:
    """Exact traces of rho(S), rho(U) and rho(U)^-1 with U = S*T^(-1)."""
    u = rep.u()
    return TraceData(_mat_trace(rep.s), _mat_trace(u),
                     _mat_trace(_mat_mul(u, u)))


@dataclass(frozen=True)
class Multiplicities:
    """Eigenvalue multiplicities of the evenized representation:
    alpha for -1 under S, beta1/beta2 for the primitive cube roots under U."""

    alpha: int
    beta1: int
    beta2: int

    def __add__(self, other: Multiplicities) -> Multiplicities:
        return Multiplicities(self.alpha + other.alpha,
                              self.beta1 + other.beta1,
                              self.beta2 + other.beta2)


def _eisenstein_coords(value: CycNumber) -> tuple[Fraction, Fraction]:
    """Write a cyclotomic number as u + v*zeta_3; ValueError if impossible."""
    lifted = value.lift(math.lcm(value.order, 3))
    reduced = lifted.reduce_order_to(3)
    return reduced.coeffs[0], reduced.coeffs[1]


def multiplicities(rep: RepSpec) -> Multiplicities:
    """Recover (alpha, beta1, beta2) of the evenized representation from
    traces: Tr S = d - 2*alpha and Tr U = (d - beta1 - 2*beta2) + (beta1 -
    beta2)*zeta_3.  Non-integral or out-of-range solutions mean the input
    cannot be a pure-parity representation.
    """
    rdot = rep if rep.epsilon == 0 else twist(rep, -1)
    d = rep.dimension
    data = traces(rdot)
    bad = RepValidationError(
        "trace data inconsistent with the eigenvalue relations "
        "(is this really a pure-parity representation?)"
    )
    try:
        ts = data.s.as_rational()
        u, v = _eisenstein_coords(data.u)
    except ValueError:
        raise bad from None
    if ts.denominator != 1 or u.denominator != 1 or v.denominator != 1:
        raise bad
    if (d - ts) % 2 != 0 or (d - u - v) % 3 != 0:
        raise bad
    alpha = (d - int(ts)) // 2
    beta2 = (d - int(u) - int(v)) // 3
    beta1 = int(v) + beta2
    if not (0 <= alpha <= d and beta1 >= 0 and beta2 >= 0 and beta1 + beta2 <= d):
        raise bad
    return Multiplicities(alpha, beta1, beta2)


# -- diagnostic: semisimplicity of rho(T) --------------------------------------

def t_is_semisimple(rep: RepSpec) -> bool:
    """Whether rho(T) is diagonalizable (minimal polynomial squarefree).

    Representations with a non-semisimple T image pass the relation checks
    but belong to the logarithmic setting, where the weight machinery here
    does not apply; reports flag them instead of rejecting.
    """
    minpoly = _min_poly(rep.t)
    deriv = [c * i for i, c in enumerate(minpoly)][1:]
    return len(_poly_gcd(minpoly, deriv)) == 1


def _min_poly(m: Matrix) -> list[CycNumber]:
    """Minimal polynomial via the first linear dependence among powers of m."""
    d = len(m)
    powers = [_identity(d)]
    for _ in range(d):
        powers.append(_mat_mul(powers[-1], m))
    vecs = [[p[i][j] for i in range(d) for j in range(d)] for p in powers]
    for deg in range(1, d + 1):
        sol = _solve_dependence(vecs[:deg], vecs[deg])
        if sol is not None:
            return [-c for c in sol] + [CycNumber.one()]
    raise AssertionError("Cayley-Hamilton guarantees a dependence by degree d")


def _solve_dependence(columns, target) -> list[CycNumber] | None:
    """Solve sum_j x_j columns[j] = target over the field; None if impossible."""
    rows = len(target)
    ncols = len(columns)
    aug = [[columns[j][i] for j in range(ncols)] + [target[i]] for i in range(rows)]
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, rows) if not aug[i][c].is_zero()), None)
        if pivot is None:
            continue
        aug[r], aug[pivot] = aug[pivot], aug[r]
        inv = aug[r][c].inverse()
        aug[r] = [v * inv for v in aug[r]]
        for i in range(rows):
            if i != r and not aug[i][c].is_zero():
                f = aug[i][c]
                aug[i] = [v - f * w for v, w in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
    for i in range(r, rows):
        if not aug[i][ncols].is_zero():
            return None
    sol = [CycNumber.zero()] * ncols
    for row, c in enumerate(pivots):
        sol[c] = aug[row][ncols]
    return sol


def _poly_gcd(a: list[CycNumber], b: list[CycNumber]) -> list[CycNumber]:
    """Monic gcd over the cyclotomic field (coefficients constant-first)."""

    def trim(p):
        while p and p[-1].is_zero():
            p.pop()
        return p

    a, b = trim(list(a)), trim(list(b))
    while b:
        inv = b[-1].inverse()
        r = list(a)
        for i in range(len(r) - len(b), -1, -1):
            c = r[i + len(b) - 1] * inv
            if not c.is_zero():
                for j, bj in enumerate(b):
                    r[i + j] = r[i + j] - c * bj
        a, b = b, trim(r[:len(b) - 1])
    if a:
        inv = a[-1].inverse()
        a = [c * inv for c in a]
    return a
