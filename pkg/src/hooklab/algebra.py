"""Exact sparse multivariate polynomial arithmetic and determinants.

Polynomials live in three indexed families of commuting indeterminates:
x_1, x_2, ... and y_1, y_2, ... (index <= 0 is identically zero) and z_k
for arbitrary integer k.  A polynomial is a dict mapping monomials to
exact coefficients (int or Fraction); zero coefficients are never stored,
so dict equality is polynomial equality.

  monomial = tuple of ((family, index), exponent), sorted by variable

Determinants of rational matrices use fraction-free Bareiss elimination;
determinants of polynomial matrices use expansion by minors memoized over
column subsets.  A Leibniz-sum evaluator is kept as an independent oracle.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import permutations
from typing import Callable, Iterable, Mapping

from .errors import DimensionMismatch, IdentityViolated, UnassignedVariable
from .report import Report

VarKey = tuple[str, int]
Mono = tuple[tuple[VarKey, int], ...]

_FAMILIES = ("x", "y", "z")


def _mono_mul(m1: Mono, m2: Mono) -> Mono:
    if not m1:
        return m2
    if not m2:
        return m1
    d = dict(m1)
    for v, e in m2:
        d[v] = d.get(v, 0) + e
    return tuple(sorted(d.items()))


def _mono_key(m: Mono):
    # graded order first, then lexicographic by (family, index, exponent)
    return (sum(e for _, e in m), tuple((v[0], v[1], e) for v, e in m))


class MPoly:
    """A sparse exact polynomial; immutable after construction."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Mono, int | Fraction] | None = None):
        self._terms = {m: c for m, c in (terms or {}).items() if c != 0}

    @classmethod
    def _raw(cls, terms: dict) -> "MPoly":
        obj = object.__new__(cls)
        obj._terms = terms
        return obj

    @classmethod
    def zero(cls) -> "MPoly":
        return cls._raw({})

    @classmethod
    def const(cls, c) -> "MPoly":
        return cls._raw({(): c} if c != 0 else {})

    @classmethod
    def variable(cls, family: str, index: int) -> "MPoly":
        if family not in _FAMILIES:
            raise ValueError(f"unknown variable family {family!r}")
        return cls._raw({(((family, index), 1),): 1})

    # -- ring structure ---------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return MPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return MPoly._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return _coerce(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return MPoly.zero()
            return MPoly._raw({m: c * other for m, c in self._terms.items()})
        if not isinstance(other, MPoly):
            return NotImplemented
        a, b = self._terms, other._terms
        if not a or not b:
            return MPoly.zero()
        out: dict = {}
        for m1, c1 in a.items():
            for m2, c2 in b.items():
                m = _mono_mul(m1, m2)
                s = out.get(m, 0) + c1 * c2
                if s:
                    out[m] = s
                else:
                    del out[m]
        return MPoly._raw(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out = MPoly.const(1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __bool__(self):
        return bool(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self._terms:
            return -1
        return max(sum(e for _, e in m) for m in self._terms)

    def terms(self) -> dict:
        return dict(self._terms)

    def variables(self) -> set[VarKey]:
        return {v for m in self._terms for v, _ in m}

    def coefficient(self, mono: Mono):
        return self._terms.get(tuple(sorted(mono)), 0)

    # -- evaluation and rendering -----------------------------------------

    def eval(self, point: "EvalPoint") -> Fraction:
        total = Fraction(0)
        for m, c in self._terms.items():
            v = Fraction(c)
            for var, e in m:
                v *= point.value(var) ** e
            total += v
        return total

    def sorted_terms(self) -> list[tuple[Mono, int | Fraction]]:
        return sorted(self._terms.items(), key=lambda t: _mono_key(t[0]))

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            factors = []
            for (fam, idx), e in m:
                factors.append(f"{fam}_{idx}" + (f"^{e}" if e > 1 else ""))
            body = "*".join(factors)
            coeff = Fraction(c)
            if not body:
                parts.append(str(coeff))
            elif coeff == 1:
                parts.append(body)
            elif coeff == -1:
                parts.append("-" + body)
            else:
                parts.append(f"{coeff}*{body}")
        text = " + ".join(parts)
        return text.replace("+ -", "- ")

    def to_json_obj(self) -> list:
        return [
            {"monomial": [[fam, idx, e] for (fam, idx), e in m], "coeff": str(Fraction(c))}
            for m, c in self.sorted_terms()
        ]

    def __repr__(self):
        return f"MPoly({self.to_text()})"


def _coerce(v) -> MPoly:
    if isinstance(v, MPoly):
        return v
    if isinstance(v, (int, Fraction)):
        return MPoly.const(v)
    return NotImplemented


def x(i: int) -> MPoly:
    """The variable x_i; the zero polynomial when i <= 0."""
    return MPoly.zero() if i <= 0 else MPoly.variable("x", i)


def y(i: int) -> MPoly:
    """The variable y_i; the zero polynomial when i <= 0."""
    return MPoly.zero() if i <= 0 else MPoly.variable("y", i)


def z(k: int) -> MPoly:
    """The variable z_k; any integer index is allowed."""
    return MPoly.variable("z", k)


def xy_binomial(i: int, j: int) -> MPoly:
    """x_i + y_j with the zero convention applied to both indices."""
    return x(i) + y(j)


class EvalPoint:
    """A total assignment of exact rationals to a window of variables."""

    __slots__ = ("assignment",)

    def __init__(self, assignment: Mapping[VarKey, int | Fraction]):
        self.assignment = {k: Fraction(v) for k, v in assignment.items()}

    def value(self, var: VarKey) -> Fraction:
        fam, idx = var
        if fam in ("x", "y") and idx <= 0:
            return Fraction(0)
        try:
            return self.assignment[var]
        except KeyError:
            raise UnassignedVariable(f"no value assigned to {fam}_{idx}") from None


def random_fraction(rng: random.Random, num_range: int = 20, den_range: int = 20) -> Fraction:
    """A nonzero fraction with numerator in [-num_range, num_range] and denominator in [1, den_range]."""
    num = rng.choice([k for k in range(-num_range, num_range + 1) if k != 0])
    den = rng.randint(1, den_range)
    return Fraction(num, den)


# ---------------------------------------------------------------------------
# matrices


Matrix = list  # list of equal-length rows


def _dim(m: Matrix) -> int:
    n = len(m)
    for row in m:
        if len(row) != n:
            raise DimensionMismatch(f"expected a {n}x{n} matrix")
    return n


def leibniz_det(m: Matrix):
    """Determinant as the signed sum over all permutations (oracle; O(n!))."""
    n = _dim(m)
    total = 0
    for perm in permutations(range(n)):
        sign = _perm_sign(perm)
        prod = 1
        for i in range(n):
            prod = prod * m[i][perm[i]]
        total = total + (prod if sign > 0 else -prod)
    return total


def _perm_sign(perm) -> int:
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def bareiss_det(m: Matrix) -> Fraction:
    """Fraction-free determinant of a rational matrix.

    Rows are scaled to integers first; the Bareiss recurrence then stays in
    exact integer arithmetic (every division shown below is exact).
    """
    n = _dim(m)
    if n == 0:
        return Fraction(1)
    rows = []
    scale = Fraction(1)
    for row in m:
        fr = [Fraction(v) for v in row]
        den = 1
        for v in fr:
            den = den * v.denominator // _gcd(den, v.denominator)
        scale *= den
        rows.append([int(v * den) for v in fr])
    sign = 1
    prev = 1
    for k in range(n - 1):
        if rows[k][k] == 0:
            for r in range(k + 1, n):
                if rows[r][k] != 0:
                    rows[k], rows[r] = rows[r], rows[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                rows[i][j] = (rows[i][j] * rows[k][k] - rows[i][k] * rows[k][j]) // prev
            rows[i][k] = 0
        prev = rows[k][k]
    return sign * Fraction(rows[n - 1][n - 1]) / scale


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def minor_det(m: Matrix):
    """Determinant by expansion along rows, memoized over column subsets.

    Suited to matrices with polynomial entries: each (trailing-rows, column
    subset) minor is computed once.
    """
    n = _dim(m)
    if n == 0:
        return MPoly.const(1)
    memo: dict[int, object] = {}

    def rec(colmask: int):
        if colmask in memo:
            return memo[colmask]
        cols = [j for j in range(n) if colmask >> j & 1]
        row = n - len(cols)
        if not cols:
            result = 1
        else:
            result = 0
            sign = 1
            for pos, j in enumerate(cols):
                entry = m[row][j]
                sub = rec(colmask & ~(1 << j))
                term = entry * sub
                result = result + term if sign > 0 else result - term
                sign = -sign
        memo[colmask] = result
        return result

    return rec((1 << n) - 1)


def det(m: Matrix):
    """Exact determinant; dispatches on the entry type."""
    n = _dim(m)
    if n == 0:
        return Fraction(1)
    if any(isinstance(v, MPoly) for row in m for v in row):
        lifted = [[_coerce(v) for v in row] for row in m]
        return minor_det(lifted)
    return bareiss_det(m)


def transpose(m: Matrix) -> Matrix:
    n = _dim(m)
    return [[m[i][j] for i in range(n)] for j in range(n)]


def laplace_det(m: Matrix, row: int | None = None, col: int | None = None):
    """Determinant via Laplace expansion along one row or column (1-indexed)."""
    n = _dim(m)
    if n == 0:
        return Fraction(1)
    if (row is None) == (col is None):
        raise ValueError("specify exactly one of row, col")

    def strike(k, l):
        return [[m[i][j] for j in range(n) if j != l] for i in range(n) if i != k]

    total = 0
    if row is not None:
        k = row - 1
        for l in range(n):
            cof = det(strike(k, l))
            term = m[k][l] * cof
            total = total + term if (k + l) % 2 == 0 else total - term
    else:
        l = col - 1
        for k in range(n):
            cof = det(strike(k, l))
            term = m[k][l] * cof
            total = total + term if (k + l) % 2 == 0 else total - term
    return total


def replace_row(p: Matrix, q: Matrix, ks: Iterable[int]) -> Matrix:
    """Copy of P with row k replaced by row k of Q for every k in ks (1-indexed)."""
    n = _dim(p)
    if _dim(q) != n:
        raise DimensionMismatch("P and Q must have equal dimensions")
    kset = set(ks)
    if any(k < 1 or k > n for k in kset):
        raise DimensionMismatch(f"row indices {sorted(kset)} outside [1, {n}]")
    return [list(q[i]) if i + 1 in kset else list(p[i]) for i in range(n)]


def replace_col(p: Matrix, q: Matrix, ks: Iterable[int]) -> Matrix:
    """Copy of P with column k replaced by column k of Q for every k in ks (1-indexed)."""
    n = _dim(p)
    if _dim(q) != n:
        raise DimensionMismatch("P and Q must have equal dimensions")
    kset = set(ks)
    if any(k < 1 or k > n for k in kset):
        raise DimensionMismatch(f"column indices {sorted(kset)} outside [1, {n}]")
    return [[q[i][j] if j + 1 in kset else p[i][j] for j in range(n)] for i in range(n)]


# ---------------------------------------------------------------------------
# the generic determinant identity battery


def _subsets(n: int, r: int):
    def rec(start, chosen):
        if len(chosen) == r:
            yield tuple(chosen)
            return
        for k in range(start, n + 1):
            yield from rec(k + 1, chosen + [k])

    yield from rec(1, [])


def check_det_identities(n: int, trials: int = 100, seed: int = 0) -> list[Report]:
    """Check the six generic determinant identities on random exact instances.

    Every identity is tested `trials` times at dimension n with fresh random
    rational matrices; any counterexample is reported verbatim.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    rng = random.Random(f"det-identities:{seed}:{n}")
    failures: dict[str, dict] = {}

    def rand_matrix(rows, cols):
        return [[random_fraction(rng) for _ in range(cols)] for _ in range(rows)]

    for trial in range(trials):
        p = rand_matrix(n, n)
        q = rand_matrix(n, n)
        u = rand_matrix(n, n + 1)
        ps = [random_fraction(rng) for _ in range(n)]

        def witness(name, lhs, rhs):
            if name not in failures:
                failures[name] = {
                    "trial": trial,
                    "P": _render(p), "Q": _render(q), "u": _render(u),
                    "p": [str(v) for v in ps],
                    "lhs": str(lhs), "rhs": str(rhs),
                }

        # sum of single-row replacements equals sum of single-column ones
        lhs = sum(det(replace_row(p, q, [k])) for k in range(1, n + 1))
        rhs = sum(det(replace_col(p, q, [k])) for k in range(1, n + 1))
        if lhs != rhs:
            witness("det-row-vs-col", lhs, rhs)

        # the r-row generalization, for every r
        for r in range(n + 1):
            lhs = sum(det(replace_row(p, q, ks)) for ks in _subsets(n, r))
            rhs = sum(det(replace_col(p, q, ks)) for ks in _subsets(n, r))
            if lhs != rhs:
                witness(f"det-row-vs-col-r{r}", lhs, rhs)

        # sum of one-step column shifts collapses to a single last-column shift
        lhs = sum(
            det([[u[i][j + (1 if k == i else 0)] for j in range(n)] for i in range(n)])
            for k in range(n)
        )
        rhs = det([[u[i][j + (1 if j == n - 1 else 0)] for j in range(n)] for i in range(n)])
        if lhs != rhs:
            witness("det-col-shift", lhs, rhs)

        # same with the shifted row also dampened by p_i (and the p_j variant)
        base = det([[u[i][j] for j in range(n)] for i in range(n)])
        rhs_damped = rhs - sum(ps) * base
        for tag, coef in (("pi", lambda i, j: ps[i]), ("pj", lambda i, j: ps[j])):
            lhs = sum(
                det(
                    [
                        [
                            u[i][j + (1 if k == i else 0)]
                            - (coef(i, j) * u[i][j] if k == i else 0)
                            for j in range(n)
                        ]
                        for i in range(n)
                    ]
                )
                for k in range(n)
            )
            if lhs != rhs_damped:
                witness(f"det-col-shift-{tag}", lhs, rhs_damped)

        # a last row supported on its final entry factors out of the determinant
        a = rand_matrix(n, n)
        for l in range(n - 1):
            a[n - 1][l] = Fraction(0)
        lhs = det(a)
        rhs = a[n - 1][n - 1] * det([row[: n - 1] for row in a[: n - 1]])
        if lhs != rhs:
            witness("det-last-row", lhs, rhs)

    names = (
        ["det-row-vs-col"]
        + [f"det-row-vs-col-r{r}" for r in range(n + 1)]
        + ["det-col-shift", "det-col-shift-pi", "det-col-shift-pj", "det-last-row"]
    )
    return [
        Report(
            identity=name,
            instance={"n": n, "trials": trials, "seed": seed},
            status="fail" if name in failures else "pass",
            witness=failures.get(name),
        )
        for name in names
    ]


def _render(m):
    return [[str(v) for v in row] for row in m]
