"""Algebraic hook lengths, tableau fractions, both sides of the refined
skew hook length identity, the counting specializations, and the w-weight
machinery.

All identity checks here are rational-function identities, decided by exact
evaluation at seeded random rational points; a vanishing denominator
triggers bounded resampling and is never reported as a violation.
"""

from __future__ import annotations

import random
import time
from fractions import Fraction
from math import factorial

from .algebra import MPoly, random_fraction, z
from .errors import NotContained, ZeroDenominator
from .excitations import enumerate_excitations
from .partitions import (
    Box,
    Partition,
    conjugate,
    contains,
    cover_extensions,
    default_cutoff,
    delta_contains,
    hook_cells,
    hook_length,
    part,
    skew_cells,
    skew_context,
    skew_size,
    young_diagram,
)
from .report import EXHAUSTED, FAIL, PASS, Report
from .tableaux import Tableau, content_word, delete_min_entry, enumerate_syt

DEFAULT_TRIALS = 3
MAX_RESAMPLES = 100


class ZPoint:
    """Exact rational values for the z-variables on an integer window."""

    __slots__ = ("lo", "hi", "values")

    def __init__(self, values: dict[int, Fraction]):
        self.values = {k: Fraction(v) for k, v in values.items()}
        self.lo = min(self.values) if self.values else 0
        self.hi = max(self.values) if self.values else -1

    def z(self, k: int) -> Fraction:
        try:
            return self.values[k]
        except KeyError:
            raise ZeroDenominator(f"z_{k} outside the sampled window") from None

    @classmethod
    def ones(cls, lo: int, hi: int) -> "ZPoint":
        return cls({k: Fraction(1) for k in range(lo, hi + 1)})

    @classmethod
    def random(cls, lo: int, hi: int, rng: random.Random) -> "ZPoint":
        return cls({k: random_fraction(rng) for k in range(lo, hi + 1)})

    def to_json_obj(self) -> dict:
        return {str(k): str(v) for k, v in sorted(self.values.items())}


def z_window(lam: Partition, mu: Partition) -> tuple[int, int]:
    """[-n, lam_1] with n the profile cutoff: covers every content in Y(lam)."""
    return (-default_cutoff(lam, mu), part(lam, 1))


def sample_zpoint(lam: Partition, mu: Partition, rng: random.Random) -> ZPoint:
    lo, hi = z_window(lam, mu)
    return ZPoint.random(lo, hi, rng)


def algebraic_hook(lam: Partition, c: Box) -> MPoly:
    """The linear form sum of z_{j-i} over the hook of c in Y(lam)."""
    total = MPoly.zero()
    for (i, j) in hook_cells(lam, c):
        total = total + z(j - i)
    return total


def _hook_contents(lam: Partition, c: Box) -> list[int]:
    return [j - i for (i, j) in hook_cells(lam, c)]


def _hook_value(contents: list[int], pt: ZPoint) -> Fraction:
    return sum((pt.z(d) for d in contents), Fraction(0))


def z_T_value(t: Tableau, pt: ZPoint) -> Fraction:
    """1 / prod_k (z_{c_T(k)} + ... + z_{c_T(n)}); raises ZeroDenominator
    when any suffix sum vanishes at the point."""
    word = content_word(t)
    return _z_value_of_word(word, pt)


def _z_value_of_word(word: tuple, pt: ZPoint) -> Fraction:
    denom = Fraction(1)
    suffix = Fraction(0)
    for d in reversed(word):
        suffix += pt.z(d)
        if suffix == 0:
            raise ZeroDenominator(f"suffix sum vanished in content word {word}")
        denom *= suffix
    return 1 / denom


def lhs_main(lam: Partition, mu: Partition, pt: ZPoint) -> Fraction:
    """Sum of the tableau fractions over all standard tableaux of lam/mu."""
    total = Fraction(0)
    for t in enumerate_syt(lam, mu):
        total += z_T_value(t, pt)
    return total


def rhs_main(lam: Partition, mu: Partition, pt: ZPoint) -> Fraction:
    """Sum over excitations of the product of reciprocal algebraic hooks
    over the boxes of Y(lam) outside the excitation."""
    hooks = {c: _hook_contents(lam, c) for c in young_diagram(lam)}
    values = {c: _hook_value(d, pt) for c, d in hooks.items()}
    if any(v == 0 for v in values.values()):
        raise ZeroDenominator("an algebraic hook vanished at the point")
    total = Fraction(0)
    for e in enumerate_excitations(lam, mu):
        prod = Fraction(1)
        for c, v in values.items():
            if c not in e:
                prod /= v
        total += prod
    return total


def _run_point_checks(lam, mu, n_points, seed, tag, check_fn,
                      window: tuple[int, int] | None = None) -> Report:
    """Evaluate a per-point identity check at `n_points` sampled points with
    bounded resampling; check_fn returns a witness dict or None."""
    t0 = time.perf_counter()
    rng = random.Random(f"{tag}:{seed}:{lam}/{mu}")
    lo, hi = window if window is not None else z_window(lam, mu)
    points = []
    resamples = 0
    witness = None
    status = PASS
    for _ in range(n_points):
        for _attempt in range(MAX_RESAMPLES):
            pt = ZPoint.random(lo, hi, rng)
            try:
                witness = check_fn(pt)
            except ZeroDenominator:
                resamples += 1
                continue
            points.append(pt.to_json_obj())
            break
        else:
            status = EXHAUSTED
            break
        if witness is not None:
            status = FAIL
            break
    return Report(
        identity=tag,
        instance={"lambda": list(lam), "mu": list(mu)},
        status=status,
        witness=witness,
        points=points,
        resamples=resamples,
        elapsed_ms=(time.perf_counter() - t0) * 1000.0,
    )


def verify_main(lam: Partition, mu: Partition, trials: int = DEFAULT_TRIALS,
                seed: int = 0) -> Report:
    """Both sides of the refined skew identity agree at `trials` points."""
    syt_words = [content_word(t) for t in enumerate_syt(lam, mu)]
    hooks = {c: _hook_contents(lam, c) for c in young_diagram(lam)}
    excitations = enumerate_excitations(lam, mu)

    def check(pt: ZPoint):
        values = {c: _hook_value(d, pt) for c, d in hooks.items()}
        if any(v == 0 for v in values.values()):
            raise ZeroDenominator("hook vanished")
        lhs = sum((_z_value_of_word(w, pt) for w in syt_words), Fraction(0))
        rhs = Fraction(0)
        for e in excitations:
            prod = Fraction(1)
            for c, v in values.items():
                if c not in e:
                    prod /= v
            rhs += prod
        if lhs != rhs:
            return {"lhs": str(lhs), "rhs": str(rhs), "point": pt.to_json_obj()}
        return None

    return _run_point_checks(lam, mu, trials, seed, "main", check)


def naruse_count(lam: Partition, mu: Partition) -> Fraction:
    """n! times the all-ones specialization of the excitation sum; equals
    the number of standard tableaux of lam/mu."""
    if not contains(lam, mu):
        raise NotContained(f"{mu} is not contained in {lam}")
    n = skew_size(lam, mu)
    hooks = {c: hook_length(lam, c) for c in young_diagram(lam)}
    total = Fraction(0)
    for e in enumerate_excitations(lam, mu):
        prod = Fraction(1)
        for c, h in hooks.items():
            if c not in e:
                prod /= h
        total += prod
    return factorial(n) * total


def hlf_count(lam: Partition) -> Fraction:
    """n! over the product of all hook lengths."""
    n = sum(lam)
    denom = 1
    for c in young_diagram(lam):
        denom *= hook_length(lam, c)
    return Fraction(factorial(n), denom)


def verify_z_recursion(lam: Partition, mu: Partition, trials: int = 2,
                       seed: int = 0) -> Report:
    """Deleting the entry 1 relates each tableau fraction to one of a cover
    shape; summed over all tableaux this is the left-side recursion."""
    if lam == mu:
        raise ValueError("the recursion needs at least one box")
    syt = enumerate_syt(lam, mu)
    contents = sorted(j - i for (i, j) in skew_cells(lam, mu))
    covers = cover_extensions(mu, lam)
    cover_words = {nu: [content_word(t) for t in enumerate_syt(lam, nu)] for nu in covers}
    deletions = []
    for t in syt:
        t2, box = delete_min_entry(t)
        deletions.append((content_word(t), content_word(t2)))

    def check(pt: ZPoint):
        factor = sum((pt.z(d) for d in contents), Fraction(0))
        if factor == 0:
            raise ZeroDenominator("content sum vanished")
        for word, word2 in deletions:
            if _z_value_of_word(word, pt) != _z_value_of_word(word2, pt) / factor:
                return {"tableau_word": list(word), "point": pt.to_json_obj()}
        lhs = sum((_z_value_of_word(w, pt) for w, _ in deletions), Fraction(0))
        rhs = sum(
            (_z_value_of_word(w, pt) for nu in covers for w in cover_words[nu]),
            Fraction(0),
        ) / factor
        if lhs != rhs:
            return {"lhs": str(lhs), "rhs": str(rhs), "point": pt.to_json_obj()}
        return None

    return _run_point_checks(lam, mu, trials, seed, "z-recursion", check)


def verify_rhs_recursion(lam: Partition, mu: Partition, trials: int = 2,
                         seed: int = 0) -> Report:
    """The excitation-side sum satisfies the same one-box recursion."""
    if lam == mu:
        raise ValueError("the recursion needs at least one box")
    hooks = {c: _hook_contents(lam, c) for c in young_diagram(lam)}
    contents = sorted(j - i for (i, j) in skew_cells(lam, mu))
    covers = cover_extensions(mu, lam)
    exc_here = enumerate_excitations(lam, mu)
    exc_covers = {nu: enumerate_excitations(lam, nu) for nu in covers}

    def hook_product_sum(excitations, values):
        total = Fraction(0)
        for e in excitations:
            prod = Fraction(1)
            for c, v in values.items():
                if c not in e:
                    prod /= v
            total += prod
        return total

    def check(pt: ZPoint):
        values = {c: _hook_value(d, pt) for c, d in hooks.items()}
        if any(v == 0 for v in values.values()):
            raise ZeroDenominator("hook vanished")
        factor = sum((pt.z(d) for d in contents), Fraction(0))
        if factor == 0:
            raise ZeroDenominator("content sum vanished")
        lhs = hook_product_sum(exc_here, values)
        rhs = sum(
            (hook_product_sum(exc_covers[nu], values) for nu in covers), Fraction(0)
        ) / factor
        if lhs != rhs:
            return {"lhs": str(lhs), "rhs": str(rhs), "point": pt.to_json_obj()}
        return None

    return _run_point_checks(lam, mu, trials, seed, "rhs-recursion", check)


class WWeights:
    """Prefix sums w_i = z_{-n} + ... + z_i; zero below the window floor."""

    __slots__ = ("n", "w")

    def __init__(self, n: int, pt: ZPoint, hi: int):
        self.n = n
        acc = Fraction(0)
        w = {-n - 1: Fraction(0)}
        for k in range(-n, hi + 1):
            acc += pt.z(k)
            w[k] = acc
        self.w = w

    def __getitem__(self, i: int) -> Fraction:
        return self.w[i]


def check_w_identities(lam: Partition, mu: Partition, n: int | None = None,
                       trials: int = 2, seed: int = 0,
                       point: ZPoint | None = None) -> Report:
    """The three prefix-sum identities: hooks as differences w_{l_i} -
    w_{-l^t_j - 1}, row sums of skew contents, and the full skew content sum."""
    if n is None:
        n = default_cutoff(lam, mu)
    ctx = skew_context(lam, mu, n)
    hi = part(lam, 1)
    lam_t = conjugate(lam)
    ell_t = [part(lam_t, j) - j for j in range(1, hi + 1)]  # columns go past n
    lam_boxes = sorted(young_diagram(lam))
    skew = skew_cells(lam, mu)
    hooks = {c: _hook_contents(lam, c) for c in lam_boxes}

    def check(pt: ZPoint):
        w = WWeights(n, pt, hi)
        for (i, j) in lam_boxes:
            lhs = w[ctx.ell[i - 1]] - w[-ell_t[j - 1] - 1]
            if lhs != _hook_value(hooks[(i, j)], pt):
                return {"identity": "w-hook", "box": [i, j], "point": pt.to_json_obj()}
        for i in range(1, n + 1):
            row_sum = sum((pt.z(j - i) for (r, j) in skew if r == i), Fraction(0))
            if w[ctx.ell[i - 1]] - w[ctx.m[i - 1]] != row_sum:
                return {"identity": "w-row", "row": i, "point": pt.to_json_obj()}
        lhs = sum(
            (w[ctx.ell[k - 1]] for k in range(1, n + 1)
             if not delta_contains(mu, ctx.ell[k - 1])),
            Fraction(0),
        ) - sum(
            (w[ctx.m[i - 1]] for i in range(1, n + 1)
             if not delta_contains(lam, ctx.m[i - 1])),
            Fraction(0),
        )
        if lhs != sum((pt.z(j - i) for (i, j) in skew), Fraction(0)):
            return {"identity": "w-skew-sum", "point": pt.to_json_obj()}
        return None

    if point is not None:
        witness = check(point)
        return Report(
            identity="w-identities",
            instance={"lambda": list(lam), "mu": list(mu), "n": n},
            status=FAIL if witness else PASS,
            witness=witness,
            points=[point.to_json_obj()],
        )
    report = _run_point_checks(lam, mu, trials, seed, "w-identities", check,
                               window=(-n, hi))
    report.instance["n"] = n
    return report
