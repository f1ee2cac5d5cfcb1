"""h-polynomials, flagged Schur polynomials, the flagged Jacobi-Trudi
identity with its twisted arrays and flip involution, and the Konvalinka
recursion.

The three routes to the flagged factorial Schur polynomial (excitation sum,
flagged-tableau sum, determinant of h-polynomials) are implemented
independently so their agreement is a genuine cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement, permutations, product

from .algebra import MPoly, det, x, xy_binomial, y
from .errors import CutoffTooSmall, UnfailingArray
from .excitations import enumerate_excitations, excitation_weight
from .partitions import (
    Partition,
    conjugate,
    contains,
    cover_extensions,
    delta_contains,
    flagging_prefix,
    part,
    skew_context,
)
from .report import FAIL, PASS, Report
from .tableaux import Flagging, Tableau, enumerate_fssyt, induced_flagging, is_semistandard

# ---------------------------------------------------------------------------
# h-polynomials


@lru_cache(maxsize=None)
def h_poly(a: int, b: int, c: int) -> MPoly:
    """Sum over weakly increasing tuples (i_1..i_a) in [b]^a of
    prod_j (x_{i_j} + y_{i_j + (j-1) + c}); zero for a < 0, one for a = 0."""
    if a < 0:
        return MPoly.zero()
    if a == 0:
        return MPoly.const(1)
    if b <= 0:
        return MPoly.zero()
    total = MPoly.zero()
    for tup in combinations_with_replacement(range(1, b + 1), a):
        term = MPoly.const(1)
        for j, i in enumerate(tup, start=1):
            term = term * xy_binomial(i, i + (j - 1) + c)
        total = total + term
    return total


def check_h_recursions(a_max: int, b_max: int, c_range: tuple[int, int]) -> list[Report]:
    """Exact verification of the h-polynomial closed form and recursions
    over the grid a in [-1, a_max], b in [0, b_max], c in c_range."""
    c_lo, c_hi = c_range
    failures: dict[str, dict] = {}

    def record(name, a, b, c, lhs, rhs):
        if name not in failures and lhs != rhs:
            failures[name] = {"a": a, "b": b, "c": c,
                              "lhs": lhs.to_text(), "rhs": rhs.to_text()}

    for b in range(0, b_max + 1):
        for c in range(c_lo, c_hi + 1):
            closed = sum((x(i) for i in range(1, b + 1)), MPoly.zero()) + sum(
                (y(j) for j in range(c + 1, c + b + 1)), MPoly.zero()
            )
            record("h1-closed-form", 1, b, c, h_poly(1, b, c), closed)
            for a in range(-1, a_max + 1):
                if b >= 1:
                    rhs = (x(b) + y(a + b + c - 1)) * h_poly(a - 1, b, c) + h_poly(a, b - 1, c)
                    record("h-rec-split-top", a, b, c, h_poly(a, b, c), rhs)
                    rhs = h_poly(a, b, c - 1) - (x(b) + y(c)) * h_poly(a - 1, b, c)
                    record("h-rec-cap-drop", a, b, c, h_poly(a, b - 1, c), rhs)
                rhs = (y(a + b + c - 1) - y(c)) * h_poly(a - 1, b, c)
                record("h-rec-shift-c", a, b, c, h_poly(a, b, c) - h_poly(a, b, c - 1), rhs)
                rhs = h_poly(a + 1, b, c) + (y(a + b + c + 1) - y(c + 1)) * h_poly(a, b, c + 1)
                record("h-rec-shift-c-up", a, b, c, h_poly(a + 1, b, c + 1), rhs)

    names = ["h1-closed-form", "h-rec-split-top", "h-rec-cap-drop",
             "h-rec-shift-c", "h-rec-shift-c-up"]
    instance = {"a_max": a_max, "b_max": b_max, "c_range": list(c_range)}
    return [
        Report(identity=name, instance=instance,
               status=FAIL if name in failures else PASS,
               witness=failures.get(name))
        for name in names
    ]


# ---------------------------------------------------------------------------
# three routes to the flagged factorial Schur polynomial


def fssyt_weight(t: Tableau) -> MPoly:
    """prod over boxes (i,j) of (x_{T(i,j)} + y_{T(i,j)+j-i})."""
    out = MPoly.const(1)
    for (i, j), v in t.items():
        out = out * xy_binomial(v, v + j - i)
    return out


@lru_cache(maxsize=None)
def s_poly_via_excitations(lam: Partition, mu: Partition) -> MPoly:
    """Sum of excitation weights over E(lam/mu); zero when mu is not
    contained in lam."""
    total = MPoly.zero()
    for e in enumerate_excitations(lam, mu):
        total = total + excitation_weight(e)
    return total


def s_poly_via_fssyt(lam: Partition, mu: Partition) -> MPoly:
    """Sum of tableau weights over the flagged tableaux induced by lam/mu."""
    total = MPoly.zero()
    for t in enumerate_fssyt(mu, induced_flagging(lam, mu)):
        total = total + fssyt_weight(t)
    return total


def s_poly_via_det(lam: Partition, mu: Partition, n: int | None = None) -> MPoly:
    """The n x n determinant of h(mu_i - i + j, b_i, 1 - j)."""
    if n is None:
        n = len(mu)
    if n < len(mu):
        raise CutoffTooSmall(f"need n >= {len(mu)} for {mu}")
    b = flagging_prefix(lam, mu, n)
    m = [
        [h_poly(part(mu, i) - i + j, b[i - 1], 1 - j) for j in range(1, n + 1)]
        for i in range(1, n + 1)
    ]
    result = det(m)
    return result if isinstance(result, MPoly) else MPoly.const(result)


# ---------------------------------------------------------------------------
# the generalized flagged Jacobi-Trudi identity


def _u_call(u):
    return u if callable(u) else (lambda i, d: u[(i, d)])


def u_from_xy(i: int, d: int) -> MPoly:
    """The substitution u_{i,d} = x_i + y_{i+d} recovering the flagged
    Jacobi-Trudi identity for tableau weights."""
    return xy_binomial(i, i + d)


def h_window(u, b: int, q: int, d: int):
    """Sum over weakly increasing (i_1..i_q) in [b]^q of prod_j u(i_j, j - d);
    zero for q < 0 and one for q = 0."""
    if q < 0:
        return MPoly.zero()
    if q == 0:
        return MPoly.const(1)
    uf = _u_call(u)
    total = MPoly.zero()
    for tup in combinations_with_replacement(range(1, b + 1), q):
        term = MPoly.const(1)
        for j, i in enumerate(tup, start=1):
            term = term * uf(i, j - d)
        total = total + term
    return total


def jt_general_sum(mu: Partition, b: Flagging, u, n: int):
    """Left side of the general identity: the weighted sum over FSSYT(mu, b)."""
    if n < len(mu):
        raise CutoffTooSmall(f"need n >= {len(mu)} for {mu}")
    uf = _u_call(u)
    total = MPoly.zero()
    for t in enumerate_fssyt(mu, b):
        term = MPoly.const(1)
        for (i, j), v in t.items():
            term = term * uf(v, j - i)
        total = total + term
    return total


def jt_general_det(mu: Partition, b: Flagging, u, n: int):
    """Right side: the n x n determinant of windowed sums built from u."""
    if n < len(mu):
        raise CutoffTooSmall(f"need n >= {len(mu)} for {mu}")
    m = [
        [h_window(u, b.bound(i), part(mu, i) - i + j, j) for j in range(1, n + 1)]
        for i in range(1, n + 1)
    ]
    result = det(m)
    return result if isinstance(result, MPoly) else MPoly.const(result)


# ---------------------------------------------------------------------------
# twisted arrays and the flip involution


@dataclass(frozen=True)
class TwistedArray:
    """A permutation sigma together with a row-weakly-increasing filling of
    the deformed diagram P(sigma) (row i has mu_{sigma(i)} - sigma(i) + i
    boxes, left-aligned)."""

    sigma: tuple  # images (sigma(1), ..., sigma(n)), 1-indexed
    rows: tuple  # tuple of row tuples; empty rows allowed

    @property
    def n(self) -> int:
        return len(self.sigma)

    def sign(self) -> int:
        inv = 0
        s = self.sigma
        for a in range(len(s)):
            for bb in range(a + 1, len(s)):
                if s[a] > s[bb]:
                    inv += 1
        return -1 if inv % 2 else 1

    def entry(self, i: int, j: int) -> int:
        return self.rows[i - 1][j - 1]

    def weight_monomial(self) -> tuple:
        """The formal weight as a sorted multiset of (entry, diagonal) pairs;
        comparing these checks weight identities for fully generic u."""
        pairs = []
        for i, row in enumerate(self.rows, start=1):
            for j, v in enumerate(row, start=1):
                pairs.append((v, j - i))
        return tuple(sorted(pairs))

    def weight_value(self, u):
        uf = _u_call(u)
        out = MPoly.const(1)
        for i, row in enumerate(self.rows, start=1):
            for j, v in enumerate(row, start=1):
                out = out * uf(v, j - i)
        return out

    def failures(self) -> list:
        """All failures: boxes whose northern neighbour is missing from the
        diagram (outer) or carries a >= entry (inner)."""
        out = []
        for i in range(2, self.n + 1):
            cur = self.rows[i - 1]
            prev = self.rows[i - 2]
            for j in range(1, len(cur) + 1):
                if j > len(prev):
                    out.append((i, j))
                elif prev[j - 1] >= cur[j - 1]:
                    out.append((i, j))
        return out

    def bottommost_leftmost_failure(self):
        """The failure with minimal column, then maximal row, or None.

        Column first, then row: the bottommost leftmost failure is not the
        leftmost bottommost one.
        """
        fs = self.failures()
        if not fs:
            return None
        jmin = min(j for _, j in fs)
        return max((i, j) for i, j in fs if j == jmin)

    def is_failing(self) -> bool:
        return self.bottommost_leftmost_failure() is not None

    def validate(self, mu: Partition, b: Flagging) -> bool:
        """Full structural check: legitimacy, row lengths, weak increase, flags."""
        s = self.sigma
        if sorted(s) != list(range(1, self.n + 1)):
            return False
        if not is_legitimate(s, mu):
            return False
        for i in range(1, self.n + 1):
            row = self.rows[i - 1]
            if len(row) != part(mu, s[i - 1]) - s[i - 1] + i:
                return False
            if any(v < 1 for v in row):
                return False
            if any(a > bb for a, bb in zip(row, row[1:])):
                return False
            if row and row[-1] > b.bound(s[i - 1]):
                return False
        return True


def is_legitimate(sigma: tuple, mu: Partition) -> bool:
    return all(part(mu, s) - s + i >= 0 for i, s in enumerate(sigma, start=1))


def sigma_row_lengths(sigma: tuple, mu: Partition) -> tuple:
    return tuple(part(mu, s) - s + i for i, s in enumerate(sigma, start=1))


def iter_twisted_arrays(mu: Partition, b: Flagging, n: int):
    """All b-flagged twisted arrays for mu on n rows, one permutation at a time."""
    for sigma in permutations(range(1, n + 1)):
        if not is_legitimate(sigma, mu):
            continue
        lengths = sigma_row_lengths(sigma, mu)
        row_choices = []
        for i, length in enumerate(lengths, start=1):
            cap = b.bound(sigma[i - 1])
            row_choices.append(
                list(combinations_with_replacement(range(1, cap + 1), length))
            )
        for rows in product(*row_choices):
            yield TwistedArray(sigma=sigma, rows=rows)


def enumerate_twisted_arrays(mu: Partition, b: Flagging, n: int) -> list[TwistedArray]:
    return list(iter_twisted_arrays(mu, b, n))


def flip(arr: TwistedArray) -> TwistedArray:
    """Swap the floors at the bottommost leftmost failure.

    The permutation trades its values at positions i-1 and i; the entries of
    row i-1 from column j on move to row i starting at column j+1, and vice
    versa.  Sign reverses, the weight multiset and the failure box persist.
    """
    c = arr.bottommost_leftmost_failure()
    if c is None:
        raise UnfailingArray("flip needs a failing twisted array")
    i, j = c
    sigma = list(arr.sigma)
    sigma[i - 2], sigma[i - 1] = sigma[i - 1], sigma[i - 2]
    rows = list(arr.rows)
    top = rows[i - 2][j - 1:]  # entries (i-1, j), (i-1, j+1), ...
    bottom = rows[i - 1][j:]  # entries (i, j+1), (i, j+2), ...
    rows[i - 2] = rows[i - 2][: j - 1] + bottom
    rows[i - 1] = rows[i - 1][:j] + top
    return TwistedArray(sigma=tuple(sigma), rows=tuple(rows))


def check_twisted_cancellation(mu: Partition, b: Flagging, n: int) -> Report:
    """Signed sums over all b-flagged twisted arrays collapse to the
    unfailing ones, which are exactly the flagged semistandard tableaux.

    Weights are compared as formal multisets of (entry, diagonal) pairs, so
    the check covers fully generic u.  Along the way every failing array is
    flipped and the involution properties are verified on it.
    """
    instance = {"mu": list(mu), "b": [b.bound(i) for i in range(1, n + 1)], "n": n}
    signed_all: dict = {}
    signed_unfailing: dict = {}
    flip_issue = None
    classification_issue = None

    for arr in iter_twisted_arrays(mu, b, n):
        mono = arr.weight_monomial()
        sign = arr.sign()
        signed_all[mono] = signed_all.get(mono, 0) + sign
        c = arr.bottommost_leftmost_failure()
        if c is None:
            signed_unfailing[mono] = signed_unfailing.get(mono, 0) + sign
            if arr.sigma != tuple(range(1, n + 1)) or not _rows_column_strict(arr.rows):
                classification_issue = classification_issue or {
                    "array": _render_array(arr), "problem": "unfailing but not a tableau"}
        else:
            if arr.sigma == tuple(range(1, n + 1)) and _rows_column_strict(arr.rows):
                classification_issue = classification_issue or {
                    "array": _render_array(arr), "problem": "tableau reported failing"}
            other = flip(arr)
            if flip_issue is None:
                flip_issue = _flip_defect(arr, other, c, mu, b)

    signed_all = {m: c for m, c in signed_all.items() if c}
    signed_unfailing = {m: c for m, c in signed_unfailing.items() if c}

    fssyt_monos: dict = {}
    for t in enumerate_fssyt(mu, b):
        mono = tuple(sorted((v, j - i) for (i, j), v in t.items()))
        fssyt_monos[mono] = fssyt_monos.get(mono, 0) + 1

    witness = None
    if signed_all != signed_unfailing:
        witness = {"problem": "cancellation failed"}
    elif signed_unfailing != fssyt_monos:
        witness = {"problem": "unfailing arrays do not match flagged tableaux"}
    elif classification_issue:
        witness = classification_issue
    elif flip_issue:
        witness = flip_issue
    return Report(identity="jt-cancellation", instance=instance,
                  status=FAIL if witness else PASS, witness=witness)


def _rows_column_strict(rows) -> bool:
    for upper, lower in zip(rows, rows[1:]):
        for j in range(min(len(upper), len(lower))):
            if upper[j] >= lower[j]:
                return False
    return True


def _flip_defect(arr, other, c, mu, b):
    if not other.validate(mu, b):
        return {"array": _render_array(arr), "problem": "flip left the array family"}
    if other.bottommost_leftmost_failure() != c:
        return {"array": _render_array(arr), "problem": "failure moved"}
    if other.sign() != -arr.sign():
        return {"array": _render_array(arr), "problem": "sign not reversed"}
    if other.weight_monomial() != arr.weight_monomial():
        return {"array": _render_array(arr), "problem": "weight changed"}
    if flip(other) != arr:
        return {"array": _render_array(arr), "problem": "flip is not an involution"}
    return None


def _render_array(arr: TwistedArray) -> dict:
    return {"sigma": list(arr.sigma), "rows": [list(r) for r in arr.rows]}


# ---------------------------------------------------------------------------
# the Jacobi-Trudi matrix attached to lam/mu and the Konvalinka recursion


@dataclass(frozen=True)
class JTMatrixSpec:
    """The window u_{i,j} = h(mu_i - i + j, b_i, 1 - j) for j up to n+1,
    together with the column-shift multipliers p_i."""

    n: int
    u: dict
    p: tuple


def jt_matrix_spec(lam: Partition, mu: Partition, n: int) -> JTMatrixSpec:
    ctx = skew_context(lam, mu, n)
    u = {
        (i, j): h_poly(part(mu, i) - i + j, ctx.b[i - 1], 1 - j)
        for i in range(1, n + 1)
        for j in range(1, n + 2)
    }
    p = tuple(
        x(ctx.b[i - 1])
        if delta_contains(lam, ctx.m[i - 1])
        else -y(ctx.m[i - 1] + 1 + ctx.b[i - 1])
        for i in range(1, n + 1)
    )
    return JTMatrixSpec(n=n, u=u, p=p)


def _konvalinka_sides(lam: Partition, mu: Partition, x_sum: MPoly, y_sum: MPoly):
    lhs = (x_sum + y_sum) * s_poly_via_excitations(lam, mu)
    rhs = MPoly.zero()
    if contains(lam, mu):
        for nu in cover_extensions(mu, lam):
            rhs = rhs + s_poly_via_excitations(lam, nu)
    return lhs, rhs


def konvalinka_check(lam: Partition, mu: Partition) -> Report:
    """The recursion with coefficient sum_{l_k not in Delta(mu)} x_k +
    sum_{l^t_k not in Delta(mu^t)} y_k; both sums have finite support below
    an automatically chosen cutoff."""
    n = max(len(lam), len(mu), part(lam, 1), part(mu, 1)) + 1
    lam_t = conjugate(lam)
    mu_t = conjugate(mu)
    x_sum = sum(
        (x(k) for k in range(1, n + 1) if not delta_contains(mu, part(lam, k) - k)),
        MPoly.zero(),
    )
    y_sum = sum(
        (y(k) for k in range(1, n + 1) if not delta_contains(mu_t, part(lam_t, k) - k)),
        MPoly.zero(),
    )
    lhs, rhs = _konvalinka_sides(lam, mu, x_sum, y_sum)
    witness = None
    if lhs != rhs:
        witness = {"lhs": lhs.to_text(), "rhs": rhs.to_text()}
    return Report(identity="konvalinka", instance={"lambda": list(lam), "mu": list(mu)},
                  status=FAIL if witness else PASS, witness=witness)


def konvalinka_variant_check(lam: Partition, mu: Partition, n: int | None = None) -> Report:
    """The variant whose y-part runs over rows i with m_i outside Delta(lam),
    weighted y_{m_i + 1 + b_i}; also asserts that this y-sum agrees with the
    conjugate-side y-sum of the plain recursion."""
    if n is None:
        n = max(len(lam), len(mu)) + 1
    ctx = skew_context(lam, mu, n)
    x_sum = sum(
        (x(k) for k in range(1, n + 1) if not delta_contains(mu, ctx.ell[k - 1])),
        MPoly.zero(),
    )
    y_sum = sum(
        (
            y(ctx.m[i - 1] + 1 + ctx.b[i - 1])
            for i in range(1, n + 1)
            if not delta_contains(lam, ctx.m[i - 1])
        ),
        MPoly.zero(),
    )
    lhs, rhs = _konvalinka_sides(lam, mu, x_sum, y_sum)

    nt = max(part(lam, 1), part(mu, 1)) + 1
    lam_t = conjugate(lam)
    mu_t = conjugate(mu)
    y_sum_conjugate = sum(
        (y(k) for k in range(1, nt + 1) if not delta_contains(mu_t, part(lam_t, k) - k)),
        MPoly.zero(),
    )

    witness = None
    if lhs != rhs:
        witness = {"lhs": lhs.to_text(), "rhs": rhs.to_text()}
    elif y_sum != y_sum_conjugate:
        witness = {
            "problem": "y-sums disagree",
            "variant": y_sum.to_text(),
            "conjugate": y_sum_conjugate.to_text(),
        }
    return Report(
        identity="konvalinka-variant",
        instance={"lambda": list(lam), "mu": list(mu), "n": n},
        status=FAIL if witness else PASS,
        witness=witness,
    )
