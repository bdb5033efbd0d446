"""Dehn function statistics: maxima and means of filling areas, exact and sampled.

Exact values come from pruned enumeration of closed (or all) words of a given
length; sampled values from seeded Monte Carlo with normal-approximation
confidence intervals. All report values are exact rationals or float
estimates, normalized by n (ln n)^2 from n = 2 on.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .area import AreaResult, _area_z2_codes, area_oracle
from .combing import GeodesicCombing, close_path
from .counting import make_rng
from .errors import BudgetError
from .presentation import AbelianPresentation
from .words import Word, enumerate_code_tuples, sphere_size

KIND_D = "D"
KIND_MEAN = "mean"
KIND_SMEAN = "smean"
KIND_OSMEAN = "osmean"
KIND_LAZY_MEAN = "lazy-mean"

DEFAULT_ENUM_BUDGET = 2**26
Z_95 = 1.96


@dataclass(frozen=True)
class DehnReport:
    """One statistic at one length: exact rational value or seeded estimate."""

    n: int
    kind: str
    value: Fraction | None = None
    estimate: float | None = None
    ci_low: float | None = None
    ci_high: float | None = None
    samples: int | None = None
    seed: int | None = None
    combing: str | None = None

    @property
    def point(self) -> float:
        return float(self.value) if self.value is not None else float(self.estimate)

    @property
    def normalized(self) -> float | None:
        """value / (n (ln n)^2); omitted below n = 2 where ln degenerates."""
        if self.n < 2:
            return None
        return self.point / (self.n * math.log(self.n) ** 2)

    def as_dict(self) -> dict:
        d: dict = {"n": self.n, "kind": self.kind}
        if self.value is not None:
            d["value"] = str(self.value)
        else:
            d["value"] = {
                "estimate": self.estimate,
                "ci_low": self.ci_low,
                "ci_high": self.ci_high,
                "samples": self.samples,
                "seed": self.seed,
            }
        d["normalized"] = self.normalized
        if self.combing is not None:
            d["combing"] = self.combing
        return d


# -- exact enumeration ------------------------------------------------------------


def _iter_closed_codes_free(r: int, n: int):
    """Closed length-n words on standard Z^r, by DFS pruned with the L1 metric."""
    if n == 0:
        yield ()
        return
    if n % 2:
        return
    k = 2 * r
    codes = [0] * n
    choice = [0] * n
    applied: list = [None] * n
    pos = [0] * r
    l1 = 0
    depth = 0
    while depth >= 0:
        i = choice[depth]
        if i >= k:
            choice[depth] = 0
            depth -= 1
            if depth >= 0:
                ax, d = applied[depth]
                pos[ax] -= d
                l1 += abs(pos[ax]) - abs(pos[ax] + d)
            continue
        choice[depth] = i + 1
        ax = i >> 1
        d = 1 - ((i & 1) << 1)
        rem = n - depth - 1
        old = pos[ax]
        nl1 = l1 - abs(old) + abs(old + d)
        if nl1 > rem:
            continue
        codes[depth] = (ax + 1) if d > 0 else -(ax + 1)
        if rem == 0:
            yield tuple(codes)
            continue
        pos[ax] = old + d
        l1 = nl1
        applied[depth] = (ax, d)
        depth += 1


def _iter_closed_codes_general(p: AbelianPresentation, n: int):
    """Closed length-n words for any presentation, pruned by group length."""
    if n == 0:
        yield ()
        return
    lengths = p.length_table(n)
    moves = [(c, p.generator_image(c)) for c in p.generator_codes]
    k = len(moves)
    codes = [0] * n
    cfs = [p.identity()] * (n + 1)
    choice = [0] * n
    depth = 0
    compose = p.compose
    get_len = lengths.get
    while depth >= 0:
        i = choice[depth]
        if i >= k:
            choice[depth] = 0
            depth -= 1
            continue
        choice[depth] = i + 1
        c, img = moves[i]
        cf2 = compose(cfs[depth], img)
        rem = n - depth - 1
        ell = get_len(cf2)
        if ell is None or ell > rem:
            continue
        codes[depth] = c
        if rem == 0:
            yield tuple(codes)
            continue
        depth += 1
        cfs[depth] = cf2


def iter_closed_codes(p: AbelianPresentation, n: int):
    if p.is_standard_free:
        return _iter_closed_codes_free(p.r, n)
    return _iter_closed_codes_general(p, n)


def _area_engine(p: AbelianPresentation, engine: str = "auto", **oracle_kw):
    """codes -> exact area, either by winding (standard Z^2) or by the oracle."""
    z2 = p.is_standard_free and p.r == 2
    if engine == "auto":
        engine = "winding" if z2 else "oracle"
    if engine == "winding":
        if not z2:
            raise ValueError("winding engine needs the standard Z^2 presentation")
        return _area_z2_codes

    def oracle_area(codes):
        got = area_oracle(p, Word(codes), **oracle_kw)
        if isinstance(got, AreaResult):
            raise BudgetError(f"oracle could not certify an exact area for {codes}")
        return got

    return oracle_area


def _check_enum_budget(p: AbelianPresentation, n: int, budget: int) -> None:
    if sphere_size(p.r, n) > budget:
        raise BudgetError(
            f"enumeration of ({2 * p.r})^{n} words exceeds budget {budget}"
        )


def closed_level_stats(
    p: AbelianPresentation,
    n: int,
    *,
    engine: str = "auto",
    budget: int = DEFAULT_ENUM_BUDGET,
    **oracle_kw,
) -> tuple[int, int, int]:
    """(count, area sum, area max) over the closed words of length exactly n."""
    cache = getattr(p, "_level_stats_cache", None)
    if cache is None:
        cache = {}
        setattr(p, "_level_stats_cache", cache)
    key = (n, engine)
    if key in cache:
        return cache[key]
    _check_enum_budget(p, n, budget)
    area = _area_engine(p, engine, **oracle_kw)
    count = 0
    asum = 0
    amax = 0
    for codes in iter_closed_codes(p, n):
        a = area(codes)
        count += 1
        asum += a
        if a > amax:
            amax = a
    result = (count, asum, amax)
    cache[key] = result
    return result


def dehn_exact(
    p: AbelianPresentation, n_max: int, *, engine: str = "auto", **kw
) -> list[DehnReport]:
    """Exact classical D(n) for n <= n_max, as the running max over levels."""
    reports = []
    running = 0
    for n in range(n_max + 1):
        _, _, amax = closed_level_stats(p, n, engine=engine, **kw)
        running = max(running, amax)
        reports.append(DehnReport(n=n, kind=KIND_D, value=Fraction(running)))
    return reports


def smean_exact(p: AbelianPresentation, n: int, **kw) -> DehnReport:
    """Exact spherical mean; zero by convention when the sphere is empty."""
    count, asum, _ = closed_level_stats(p, n, **kw)
    value = Fraction(0) if count == 0 else Fraction(asum, count)
    return DehnReport(n=n, kind=KIND_SMEAN, value=value)


def mean_exact(p: AbelianPresentation, n: int, **kw) -> DehnReport:
    """Exact mean over the ball of closed words of length <= n."""
    total = 0
    asum = 0
    for m in range(n + 1):
        c, s, _ = closed_level_stats(p, m, **kw)
        total += c
        asum += s
    return DehnReport(n=n, kind=KIND_MEAN, value=Fraction(asum, total))


def lazy_mean(p: AbelianPresentation, n: int, **kw) -> DehnReport:
    """Mean area over closed lazy words of length n.

    A closed word of length m expands to a length-n lazy word in C(n, n-m)
    ways, all with the same area, so the average is a binomially weighted
    combination of the per-length sums.
    """
    num = 0
    den = 0
    for m in range(n + 1):
        c, s, _ = closed_level_stats(p, m, **kw)
        if c == 0:
            continue
        mult = math.comb(n, n - m)
        num += mult * s
        den += mult * c
    value = Fraction(0) if den == 0 else Fraction(num, den)
    return DehnReport(n=n, kind=KIND_LAZY_MEAN, value=value)


# -- open means -------------------------------------------------------------------


def _staircase_close_codes(x: int, y: int) -> tuple[int, ...]:
    """Inverse staircase word returning (x, y) to the origin: undo b's, then a's."""
    codes: list[int] = []
    codes += [-2 if y > 0 else 2] * abs(y)
    codes += [-1 if x > 0 else 1] * abs(x)
    return tuple(codes)


def _osmean_sum_z2_staircase(n: int) -> int:
    """Sum of open areas over all 4^n words, staircase combing.

    Flipping one axis is an area-preserving bijection, so words starting
    with an inverse letter mirror those starting with the plain one: only
    half the words are enumerated.
    """
    if n == 0:
        return 0
    total = 0
    for first in (1, 2):
        for rest in enumerate_code_tuples(2, n - 1, budget=2**62):
            codes = (first,) + rest
            x = y = 0
            for c in codes:
                if c == 1:
                    x += 1
                elif c == -1:
                    x -= 1
                elif c == 2:
                    y += 1
                else:
                    y -= 1
            total += _area_z2_codes(codes + _staircase_close_codes(x, y))
    return 2 * total


def osmean_exact(
    p: AbelianPresentation,
    c: GeodesicCombing,
    n: int,
    *,
    budget: int = DEFAULT_ENUM_BUDGET,
    **kw,
) -> DehnReport:
    """Exact mean open area over all (2r)^n words of length n."""
    _check_enum_budget(p, n, budget)
    denom = sphere_size(p.r, n)
    if p.is_standard_free and p.r == 2 and c.kind == "staircase":
        total = _osmean_sum_z2_staircase(n)
    else:
        area = _area_engine(p, "auto", **kw)
        total = 0
        for codes in enumerate_code_tuples(p.r, n, budget=budget):
            closed = close_path(c, Word(codes))
            total += area(closed.codes)
    return DehnReport(
        n=n, kind=KIND_OSMEAN, value=Fraction(total, denom), combing=c.kind
    )


def osmean_by_endpoint(
    p: AbelianPresentation,
    c: GeodesicCombing,
    n: int,
    *,
    budget: int = DEFAULT_ENUM_BUDGET,
    **kw,
) -> dict:
    """Per-endpoint (walk count, open-area sum) over all length-n words."""
    _check_enum_budget(p, n, budget)
    if p.is_standard_free and p.r == 2 and c.kind == "staircase":
        return {
            p.canonical_form(xy): entry
            for xy, entry in _osmean_table_z2_staircase(n).items()
        }
    area = _area_engine(p, "auto", **kw)
    out: dict = {}
    for codes in enumerate_code_tuples(p.r, n, budget=budget):
        w = Word(codes)
        v = p.canonical_of_word(w)
        closed = close_path(c, w)
        a = area(closed.codes)
        if v in out:
            entry = out[v]
            entry[0] += 1
            entry[1] += a
        else:
            out[v] = [1, a]
    return out


def _osmean_table_z2_staircase(n: int) -> dict:
    """(count, open-area sum) per lattice endpoint, staircase combing."""
    out: dict = {}
    for codes in enumerate_code_tuples(2, n, budget=2**62):
        x = y = 0
        for cd in codes:
            if cd == 1:
                x += 1
            elif cd == -1:
                x -= 1
            elif cd == 2:
                y += 1
            else:
                y -= 1
        a = _area_z2_codes(codes + _staircase_close_codes(x, y))
        key = (x, y)
        if key in out:
            entry = out[key]
            entry[0] += 1
            entry[1] += a
        else:
            out[key] = [1, a]
    return out


# -- sampling ---------------------------------------------------------------------


def _require_sampling_support(p: AbelianPresentation) -> None:
    if not (p.is_standard_free and p.r == 2):
        raise ValueError("samplers are implemented for the standard Z^2 presentation")


def _open_area_z2_slots(slots, close_codes) -> int:
    """Winding area of a slot row (0:a 1:a^-1 2:b 3:b^-1) plus a closing word."""
    x = y = 0
    ev: dict[tuple[int, int], int] = {}
    get = ev.get
    for s in slots:
        if s == 0:
            key = (x, y)
            ev[key] = get(key, 0) + 1
            x += 1
        elif s == 1:
            x -= 1
            key = (x, y)
            ev[key] = get(key, 0) - 1
        elif s == 2:
            y += 1
        else:
            y -= 1
    for c in close_codes:
        if c == 1:
            key = (x, y)
            ev[key] = get(key, 0) + 1
            x += 1
        elif c == -1:
            x -= 1
            key = (x, y)
            ev[key] = get(key, 0) - 1
        elif c == 2:
            y += 1
        else:
            y -= 1
    if x or y:
        raise ValueError("closing word does not close the path")
    if not ev:
        return 0
    total = 0
    cur_col = None
    running = 0
    prev_v = 0
    for (u, v), d in sorted(ev.items()):
        if u != cur_col:
            cur_col = u
            running = 0
        elif running:
            total += abs(running) * (v - prev_v)
        running += d
        prev_v = v
    return total


def _mean_report(kind, n, areas, seed, combing) -> DehnReport:
    est = float(np.mean(areas))
    if len(areas) > 1:
        stderr = float(np.std(areas, ddof=1)) / math.sqrt(len(areas))
    else:
        stderr = float("nan")
    return DehnReport(
        n=n,
        kind=kind,
        estimate=est,
        ci_low=est - Z_95 * stderr,
        ci_high=est + Z_95 * stderr,
        samples=len(areas),
        seed=seed,
        combing=combing,
    )


def osmean_sampled(
    p: AbelianPresentation,
    c: GeodesicCombing,
    n: int,
    samples: int,
    seed: int,
) -> DehnReport:
    """Unbiased Monte Carlo estimate of the open spherical mean."""
    _require_sampling_support(p)
    rng = make_rng(seed)
    mat = rng.integers(0, 4, size=(samples, n), dtype=np.int16)
    dx = ((mat == 0).sum(axis=1) - (mat == 1).sum(axis=1)).tolist()
    dy = ((mat == 2).sum(axis=1) - (mat == 3).sum(axis=1)).tolist()
    close_cache: dict[tuple[int, int], tuple[int, ...]] = {}
    areas = np.empty(samples, dtype=np.float64)
    for i in range(samples):
        key = (dx[i], dy[i])
        close = close_cache.get(key)
        if close is None:
            cf = p.canonical_form(key)
            close = c.comb_to(cf).inverse().codes
            close_cache[key] = close
        areas[i] = _open_area_z2_slots(mat[i].tolist(), close)
    return _mean_report(KIND_OSMEAN, n, areas, seed, c.kind)


def smean_sampled(
    p: AbelianPresentation,
    c: GeodesicCombing,
    n: int,
    samples: int,
    seed: int,
    *,
    max_proposals: int = 200_000_000,
) -> DehnReport:
    """Monte Carlo spherical mean: uniform closed words by rejection on endpoints.

    Letter multiplicities are proposed multinomially and accepted when the
    exponent sums vanish; accepted multisets are then shuffled uniformly.
    The closure probability decays only polynomially, so rejection stays
    practical far beyond enumerable lengths.
    """
    _require_sampling_support(p)
    if n % 2:
        return DehnReport(n=n, kind=KIND_SMEAN, value=Fraction(0), combing=c.kind)
    rng = make_rng(seed)
    areas = np.empty(samples, dtype=np.float64)
    got = 0
    proposed = 0
    chunk = max(4096, min(1 << 20, samples * 8))
    while got < samples:
        if proposed > max_proposals:
            raise BudgetError(
                f"closed-word rejection sampling exhausted {max_proposals} proposals"
            )
        counts = rng.multinomial(n, [0.25, 0.25, 0.25, 0.25], size=chunk)
        proposed += chunk
        accepted = counts[(counts[:, 0] == counts[:, 1]) & (counts[:, 2] == counts[:, 3])]
        for row in accepted:
            if got >= samples:
                break
            k, m = int(row[0]), int(row[2])
            slots = np.repeat(np.arange(4, dtype=np.int16), [k, k, m, m])
            rng.shuffle(slots)
            areas[got] = _open_area_z2_slots(slots.tolist(), ())
            got += 1
    return _mean_report(KIND_SMEAN, n, areas, seed, c.kind)


# -- structural relations and asymptotic reports ------------------------------------


@dataclass(frozen=True)
class RelationRow:
    n: int
    mean_value: Fraction
    max_smean: Fraction
    ok: bool


def relation_check(p: AbelianPresentation, n_max: int, **kw) -> list[RelationRow]:
    """Exact check of mean(n) <= max over m <= n of smean(m), per length."""
    rows = []
    running_max = Fraction(0)
    for n in range(n_max + 1):
        running_max = max(running_max, smean_exact(p, n, **kw).value)
        mv = mean_exact(p, n, **kw).value
        rows.append(RelationRow(n, mv, running_max, mv <= running_max))
    return rows


def h_nlog2(n: float) -> float:
    return n * math.log(n) ** 2


def h_split_holds(n: int) -> bool:
    """The binding splitting inequality 2 h((n+1)/2) + n ln n <= h(n).

    (n+1)/2 majorizes ceil(n/2), so this implies the ceiling variant; its
    onset is exactly n = 15.
    """
    m = (n + 1) / 2.0
    return 2.0 * m * math.log(m) ** 2 + n * math.log(n) <= h_nlog2(n)


def h_split_holds_ceil(n: int) -> bool:
    """The ceiling variant 2 h(ceil(n/2)) + n ln n <= h(n)."""
    m = (n + 1) // 2
    return 2.0 * h_nlog2(m) + n * math.log(n) <= h_nlog2(n)


def h_split_range(n_lo: int, n_hi: int, *, ceil_variant: bool = False) -> np.ndarray:
    """Vectorized truth values of the splitting inequality on [n_lo, n_hi]."""
    n = np.arange(n_lo, n_hi + 1, dtype=np.float64)
    if ceil_variant:
        m = np.ceil(n / 2.0)
    else:
        m = (n + 1) / 2.0
    lhs = 2.0 * m * np.log(m) ** 2 + n * np.log(n)
    return lhs <= n * np.log(n) ** 2


@dataclass(frozen=True)
class BoundFit:
    """Normalized values v(n)/(n (ln n)^2) with a least-squares trend over ln n."""

    ns: tuple
    normalized: tuple
    running_max: tuple
    slope: float
    slope_stderr: float

    @property
    def slope_ci95(self) -> tuple[float, float]:
        return (self.slope - Z_95 * self.slope_stderr, self.slope + Z_95 * self.slope_stderr)

    @property
    def no_growth(self) -> bool:
        """Slope not significantly positive at the 95% level."""
        return self.slope <= Z_95 * self.slope_stderr


def bound_fit(reports: list[DehnReport]) -> BoundFit:
    pts = [(r.n, r.normalized) for r in reports if r.n >= 2]
    if len(pts) < 2:
        raise ValueError("need at least two reports at n >= 2")
    ns = np.array([p[0] for p in pts], dtype=np.float64)
    ys = np.array([p[1] for p in pts], dtype=np.float64)
    xs = np.log(ns)
    xbar = xs.mean()
    ybar = ys.mean()
    sxx = float(((xs - xbar) ** 2).sum())
    slope = float(((xs - xbar) * (ys - ybar)).sum() / sxx)
    intercept = ybar - slope * xbar
    resid = ys - (intercept + slope * xs)
    dof = len(pts) - 2
    if dof > 0:
        stderr = math.sqrt(float((resid**2).sum()) / dof / sxx)
    else:
        stderr = float("nan")
    running = np.maximum.accumulate(ys)
    return BoundFit(
        ns=tuple(int(v) for v in ns),
        normalized=tuple(float(v) for v in ys),
        running_max=tuple(float(v) for v in running),
        slope=slope,
        slope_stderr=stderr,
    )


def nv_asymptotics_report(n_max: int) -> list[tuple[int, float]]:
    """Rows (2n, g_{2n} * 2n * pi / (2 * 16^n)); the ratio tends to one."""
    rows = []
    for k in range(1, n_max + 1):
        g = math.comb(2 * k, k) ** 2
        ratio = float(Fraction(g * 2 * k, 2 * 16**k)) * math.pi
        rows.append((2 * k, ratio))
    return rows
