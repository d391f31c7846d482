"""Large-scale-geometry comparisons and the aggregated verification suite.

Bi-Lipschitz constants and quasi-isometry scans use exact rational
arithmetic, so every inequality is decided without tolerances.  Claims about
infinite groups are operationalized as constant-divergence scans over growing
balls and labeled as evidence, never as proof.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import inf
from typing import Iterable, Sequence

from .cayley import build_color_digraph, min_color_connectivity
from .errors import BoundExceededError
from .fixtures import complete_graph_variant
from .groups import FREE_ABELIAN, Element, GeneratedGroup
from .isometry import (
    DEFAULT_BRUTE_FORCE_BOUND,
    check_color_permuting,
    color_permuting_auts,
    color_preserving_auts_bruteforce,
    decompose_isometry,
    is_isometry,
    isometry_group_bruteforce,
    left_translation,
)
from .maps import GroupMap
from .metrics import (
    CARDINAL,
    WORD,
    BallSpec,
    MetricTable,
    ball,
    cardinal_norm,
    diameter,
    metric_table,
)
from .notation import format_element


# -- bi-Lipschitz and quasi-isometry ------------------------------------------


def _image_indices(f: GroupMap, from_table: MetricTable, to_table: MetricTable) -> list[int]:
    if f.vertices != from_table.vertices:
        raise ValueError("map domain does not match the from-table vertices")
    return [to_table.index_of(f.vertices[f.apply_index(i)]) for i in range(len(f.vertices))]


def bilipschitz_best_constant(
    f: GroupMap, from_table: MetricTable, to_table: MetricTable
) -> Fraction | float:
    """Smallest K >= 1 with from/K <= to(f., f.) <= K*from on all pairs.

    Returns infinity when no finite K works (a zero distance paired with a
    positive one); that cannot happen for an injective map between genuine
    metric tables.
    """
    if not f.is_bijective:
        raise ValueError("bilipschitz_best_constant requires an injective map")
    idx = _image_indices(f, from_table, to_table)
    n = len(f.vertices)
    best = Fraction(1)
    for i in range(n):
        for j in range(i + 1, n):
            a = from_table.entry(i, j)
            b = to_table.entry(idx[i], idx[j])
            if a == 0 and b == 0:
                continue
            if a == 0 or b == 0:
                return inf
            ratio = Fraction(a, b)
            if ratio < 1:
                ratio = 1 / ratio
            if ratio > best:
                best = ratio
    return best


@dataclass(frozen=True)
class Violation:
    """One failed inequality lhs <= rhs at a vertex pair."""

    pair: tuple[int, int]
    lhs: Fraction
    rhs: Fraction
    side: str  # "lower" | "upper"


@dataclass(frozen=True)
class ComparisonReport:
    qi_K: Fraction
    qi_c: Fraction
    violations: tuple[Violation, ...]
    from_diameter: int
    to_diameter: int
    best_bilipschitz: Fraction | float | None

    @property
    def holds(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "K": str(self.qi_K),
            "c": str(self.qi_c),
            "holds": self.holds,
            "violation_count": len(self.violations),
            "violations": [
                {
                    "pair": list(v.pair),
                    "lhs": str(v.lhs),
                    "rhs": str(v.rhs),
                    "side": v.side,
                }
                for v in self.violations
            ],
            "from_diameter": self.from_diameter,
            "to_diameter": self.to_diameter,
            "best_bilipschitz": None if self.best_bilipschitz is None else str(self.best_bilipschitz),
        }


def qi_violation_scan(
    f: GroupMap,
    K: Fraction,
    c: Fraction,
    from_table: MetricTable,
    to_table: MetricTable,
) -> ComparisonReport:
    """All pairs violating from/K - c <= to(f., f.) <= K*from + c."""
    K = Fraction(K)
    c = Fraction(c)
    if K <= 0:
        raise ValueError("K must be positive")
    if c < 0:
        raise ValueError("c must be nonnegative")
    idx = _image_indices(f, from_table, to_table)
    n = len(f.vertices)
    violations = []
    for i in range(n):
        for j in range(i + 1, n):
            a = from_table.entry(i, j)
            b = to_table.entry(idx[i], idx[j])
            lower = Fraction(a) / K - c
            upper = K * a + c
            if lower > b:
                violations.append(Violation((i, j), lower, Fraction(b), "lower"))
            if b > upper:
                violations.append(Violation((i, j), Fraction(b), upper, "upper"))
    best = bilipschitz_best_constant(f, from_table, to_table) if f.is_bijective else None
    return ComparisonReport(
        qi_K=K,
        qi_c=c,
        violations=tuple(violations),
        from_diameter=diameter(from_table),
        to_diameter=diameter(to_table),
        best_bilipschitz=best,
    )


def diameter_growth(
    group: GeneratedGroup,
    kind: str,
    radii: Sequence[int],
    radius_cap: int | None = None,
) -> list[tuple[int, int]]:
    """Diameter of the chosen metric on the word ball of each radius."""
    if group.kind != FREE_ABELIAN:
        raise ValueError("diameter growth is defined for free abelian backends")
    radii = list(radii)
    if any(r <= 0 for r in radii) or any(b <= a for a, b in zip(radii, radii[1:])):
        raise ValueError("radii must be positive and strictly increasing")
    cap = radius_cap if radius_cap is not None else 2 * max(radii)
    out = []
    for r in radii:
        vertices = group.word_ball(group.identity(), r)
        table = metric_table(group, vertices, kind, radius_cap=cap)
        out.append((r, diameter(table)))
    return out


def seeded_bijections(vertices: Sequence[Element], count: int, seed: int) -> list[GroupMap]:
    """Deterministic pseudo-random vertex bijections (injective self-maps)."""
    rng = random.Random(seed)
    n = len(vertices)
    maps = []
    for _ in range(count):
        image = list(range(n))
        rng.shuffle(image)
        maps.append(GroupMap(vertices, image))
    return maps


# -- reusable inequality checks (fault-injection friendly) ---------------------


def cardinal_entry_bound_violations(table: MetricTable) -> list[dict]:
    """Pairs where a cardinal-table entry exceeds |S|."""
    cap = len(table.generators)
    out = []
    for i in range(len(table.vertices)):
        for j in range(i + 1, len(table.vertices)):
            if table.entry(i, j) > cap:
                out.append({"pair": [i, j], "d_C": table.entry(i, j), "|S|": cap})
    return out


def cardinal_le_word_violations(cardinal: MetricTable, word: MetricTable) -> list[dict]:
    """Pairs where d_C > d_W (the comparison inequality fails)."""
    if cardinal.vertices != word.vertices:
        raise ValueError("tables must share the same vertex list")
    out = []
    for i in range(len(cardinal.vertices)):
        for j in range(i + 1, len(cardinal.vertices)):
            if cardinal.entry(i, j) > word.entry(i, j):
                out.append(
                    {"pair": [i, j], "d_C": cardinal.entry(i, j), "d_W": word.entry(i, j)}
                )
    return out


def norm_axiom_violations(group: GeneratedGroup, universe: Sequence[Element]) -> list[dict]:
    """Failures of the group-norm axioms for the cardinal norm on the universe."""
    e = group.identity()
    out = []
    for g in universe:
        n = cardinal_norm(group, g)
        if n < 0:
            out.append({"axiom": "nonnegative", "g": format_element(g), "norm": n})
        if (n == 0) != (g == e):
            out.append({"axiom": "zero-iff-identity", "g": format_element(g), "norm": n})
        if cardinal_norm(group, group.inverse(g)) != n:
            out.append({"axiom": "inverse-invariance", "g": format_element(g)})
    for g in universe:
        ng = cardinal_norm(group, g)
        for h in universe:
            if cardinal_norm(group, group.compose(g, h)) > ng + cardinal_norm(group, h):
                out.append(
                    {
                        "axiom": "subadditivity",
                        "g": format_element(g),
                        "h": format_element(h),
                    }
                )
    return out


# -- verification suite ---------------------------------------------------------


CHECK_IDS = (
    "NORM-AXIOMS",
    "DC-LE-CARD-S",
    "DC-LE-DW",
    "THM31-ORACLE",
    "CAUT-EQ-LA",
    "PAUT-EQ-LATAU",
    "PAUT-ISOMETRY",
    "BILIP-BOUND",
    "CYCLIC-NO-ISOMETRY",
    "DISCRETE-BALL",
    "DECOMPOSE-ISOMETRY",
    "QI-DIVERGENCE",
)


@dataclass(frozen=True)
class SuiteConfig:
    brute_force_bound: int = DEFAULT_BRUTE_FORCE_BOUND
    automorphism_bound: int = 24
    rank1_ball_radius: int = 50
    high_rank_ball_radius: int = 2
    qi_radii: tuple[int, ...] = (4, 10, 50, 100)
    qi_K: Fraction = Fraction(2)
    qi_c: Fraction = Fraction(3)
    seed: int = 1729
    bilip_map_count: int = 25
    cyclic_scan_max_order: int = 6

    def to_dict(self) -> dict:
        return {
            "brute_force_bound": self.brute_force_bound,
            "automorphism_bound": self.automorphism_bound,
            "rank1_ball_radius": self.rank1_ball_radius,
            "high_rank_ball_radius": self.high_rank_ball_radius,
            "qi_radii": list(self.qi_radii),
            "qi_K": str(self.qi_K),
            "qi_c": str(self.qi_c),
            "seed": self.seed,
            "bilip_map_count": self.bilip_map_count,
            "cyclic_scan_max_order": self.cyclic_scan_max_order,
        }


@dataclass(frozen=True)
class CheckResult:
    check_id: str
    fixture: str
    status: str  # "pass" | "fail" | "skip"
    detail: str = ""
    counterexample: dict | None = None

    def to_dict(self) -> dict:
        return {
            "check": self.check_id,
            "fixture": self.fixture,
            "status": self.status,
            "detail": self.detail,
            "counterexample": self.counterexample,
        }


@dataclass(frozen=True)
class VerificationReport:
    results: tuple[CheckResult, ...]
    config: SuiteConfig

    @property
    def passed(self) -> bool:
        return all(r.status != "fail" for r in self.results)

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "config": self.config.to_dict(),
            "results": [r.to_dict() for r in self.results],
        }


def format_report_lines(report: VerificationReport) -> list[str]:
    lines = []
    for r in report.results:
        lines.append(f"{r.status.upper():<4} {r.check_id:<19} {r.fixture}: {r.detail}")
    return lines


class _FixtureData:
    """Lazily built per-fixture universe and tables."""

    def __init__(self, group: GeneratedGroup, config: SuiteConfig):
        self.group = group
        self.config = config
        self.name = group.name or repr(group)
        if group.is_finite:
            self.universe = group.elements()
            self.radius_cap = max(len(self.universe), 2)
        else:
            radius = (
                config.rank1_ball_radius if group.size == 1 else config.high_rank_ball_radius
            )
            self.universe = tuple(group.word_ball(group.identity(), radius))
            self.radius_cap = 2 * radius
        self._cardinal: MetricTable | None = None
        self._word: MetricTable | None = None

    @property
    def cardinal(self) -> MetricTable:
        if self._cardinal is None:
            self._cardinal = metric_table(self.group, self.universe, CARDINAL)
        return self._cardinal

    @property
    def word(self) -> MetricTable:
        if self._word is None:
            self._word = metric_table(self.group, self.universe, WORD, radius_cap=self.radius_cap)
        return self._word


def _result(check, data, ok, detail, counterexample=None):
    return CheckResult(
        check_id=check,
        fixture=data.name,
        status="pass" if ok else "fail",
        detail=detail,
        counterexample=None if ok else counterexample,
    )


def _skip(check, data, why):
    return CheckResult(check_id=check, fixture=data.name, status="skip", detail=why)


def _check_norm_axioms(data: _FixtureData, config: SuiteConfig) -> CheckResult:
    bad = norm_axiom_violations(data.group, data.universe)
    return _result(
        "NORM-AXIOMS",
        data,
        not bad,
        f"group-norm axioms on {len(data.universe)} elements",
        {"violations": bad[:3]},
    )


def _check_dc_le_card_s(data: _FixtureData, config: SuiteConfig) -> CheckResult:
    bad = cardinal_entry_bound_violations(data.cardinal)
    return _result(
        "DC-LE-CARD-S",
        data,
        not bad,
        f"d_C <= |S| = {len(data.group.generators)} on all pairs",
        {"violations": bad[:3]},
    )


def _check_dc_le_dw(data: _FixtureData, config: SuiteConfig) -> CheckResult:
    bad = cardinal_le_word_violations(data.cardinal, data.word)
    return _result(
        "DC-LE-DW",
        data,
        not bad,
        "d_C <= d_W on all pairs",
        {"violations": bad[:3]},
    )


def _check_thm31(data: _FixtureData, config: SuiteConfig) -> CheckResult:
    if not data.group.is_finite:
        return _skip("THM31-ORACLE", data, "needs an untruncated finite digraph")
    d = build_color_digraph(data.group)
    table = data.cardinal
    for i, g in enumerate(d.vertices):
        for j in range(i + 1, len(d.vertices)):
            h = d.vertices[j]
            graph_side = min_color_connectivity(d, g, h)
            metric_side = table.distance(g, h)
            if graph_side != metric_side:
                return _result(
                    "THM31-ORACLE",
                    data,
                    False,
                    "path-color count vs cardinal distance",
                    {
                        "pair": [format_element(g), format_element(h)],
                        "colors": graph_side,
                        "d_C": metric_side,
                    },
                )
    return _result(
        "THM31-ORACLE", data, True, f"color-count oracle agrees on all {len(d.vertices)}^2 pairs"
    )


def _check_caut(data: _FixtureData, config: SuiteConfig) -> CheckResult:
    if not data.group.is_finite:
        return _skip("CAUT-EQ-LA", data, "finite backend only")
    n = len(data.group.elements())
    if n > config.brute_force_bound:
        return _skip("CAUT-EQ-LA", data, f"|G| = {n} exceeds brute-force bound {config.brute_force_bound}")
    d = build_color_digraph(data.group)
    brute = set(color_preserving_auts_bruteforce(d, bound=config.brute_force_bound))
    translations = {left_translation(data.group, a) for a in data.group.elements()}
    ok = brute == translations
    return _result(
        "CAUT-EQ-LA",
        data,
        ok,
        f"{len(brute)} color-preserving automorphisms = left translations",
        {"brute": len(brute), "translations": len(translations)},
    )


def _check_paut(data: _FixtureData, config: SuiteConfig) -> CheckResult:
    if not data.group.is_finite:
        return _skip("PAUT-EQ-LATAU", data, "finite backend only")
    elems = data.group.elements()
    n = len(elems)
    if n > config.brute_force_bound:
        return _skip(
            "PAUT-EQ-LATAU", data, f"|G| = {n} exceeds brute-force bound {config.brute_force_bound}"
        )
    d = build_color_digraph(data.group)
    brute = {}
    for perm in itertools.permutations(range(n)):
        alpha = GroupMap(elems, perm)
        sigma = check_color_permuting(d, alpha)
        if sigma is not None:
            brute[perm] = sigma.image
    constructive = {
        alpha.image: sigma.image
        for alpha, sigma in color_permuting_auts(data.group, d, bound=config.automorphism_bound)
    }
    ok = brute == constructive
    return _result(
        "PAUT-EQ-LATAU",
        data,
        ok,
        f"{len(constructive)} color-permuting automorphisms, brute force agrees",
        {"brute": len(brute), "constructive": len(constructive)},
    )


def _check_paut_isometry(data: _FixtureData, config: SuiteConfig) -> CheckResult:
    if not data.group.is_finite:
        return _skip("PAUT-ISOMETRY", data, "finite backend only")
    if len(data.group.elements()) > config.automorphism_bound:
        return _skip("PAUT-ISOMETRY", data, f"|G| exceeds automorphism bound {config.automorphism_bound}")
    d = build_color_digraph(data.group)
    table = data.cardinal
    for alpha, sigma in color_permuting_auts(data.group, d, bound=config.automorphism_bound):
        if not is_isometry(alpha, table, table):
            return _result(
                "PAUT-ISOMETRY",
                data,
                False,
                "a color-permuting automorphism is not a d_C isometry",
                {"image": list(alpha.image), "sigma": list(sigma.image)},
            )
    return _result("PAUT-ISOMETRY", data, True, "every color-permuting automorphism preserves d_C")


def _check_bilip(data: _FixtureData, config: SuiteConfig) -> CheckResult:
    if not data.group.is_finite:
        return _skip("BILIP-BOUND", data, "finite-diameter word fixtures only")
    word = data.word
    cardinal = data.cardinal
    K = diameter(word)
    if K == 0:
        return _skip("BILIP-BOUND", data, "single-point fixture")
    n = len(word.vertices)
    for m, f in enumerate(seeded_bijections(word.vertices, config.bilip_map_count, config.seed)):
        for i in range(n):
            for j in range(i + 1, n):
                dw = word.entry(i, j)
                dc = cardinal.entry(f.apply_index(i), f.apply_index(j))
                if not (dw <= K * dc and dc <= K * dw):
                    return _result(
                        "BILIP-BOUND",
                        data,
                        False,
                        f"K = diam = {K} sandwich failed",
                        {"map": m, "pair": [i, j], "d_W": dw, "d_C": dc, "K": K},
                    )
    return _result(
        "BILIP-BOUND",
        data,
        True,
        f"{config.bilip_map_count} seeded bijections satisfy the K = diam(G, d_W) = {K} sandwich (seed {config.seed})",
    )


def _check_bilip_pair(a: _FixtureData, b: _FixtureData, config: SuiteConfig) -> CheckResult:
    """Two generating sets on the same elements: the (|T|+1) cardinal-metric bound."""
    small, big = (a, b) if len(a.group.generators) <= len(b.group.generators) else (b, a)
    d_s = small.cardinal
    d_t = big.cardinal
    bound = len(big.group.generators) + 1
    vertices = d_t.vertices
    n = len(vertices)
    name = f"{small.name}~{big.name}"
    for m, f in enumerate(seeded_bijections(vertices, config.bilip_map_count, config.seed)):
        for i in range(n):
            for j in range(i + 1, n):
                dt = d_t.entry(i, j)
                ds = d_s.distance(vertices[f.apply_index(i)], vertices[f.apply_index(j)])
                if not (dt <= bound * ds and ds <= bound * dt):
                    return CheckResult(
                        "BILIP-BOUND",
                        name,
                        "fail",
                        f"(|T|+1) = {bound} cross-set bound failed",
                        {"map": m, "pair": [i, j], "d_T": dt, "d_S": ds},
                    )
    return CheckResult(
        "BILIP-BOUND",
        name,
        "pass",
        f"{config.bilip_map_count} seeded injective maps satisfy the 1/{bound} <= d_S/d_T <= {bound} bound",
    )


def _check_cyclic_no_isometry(data: _FixtureData, config: SuiteConfig) -> CheckResult:
    if not data.group.is_finite or len(data.group.generators) != 1:
        return _skip("CYCLIC-NO-ISOMETRY", data, "applies to single-generator finite fixtures")
    n = len(data.group.elements())
    if n < 4:
        return _skip("CYCLIC-NO-ISOMETRY", data, "needs order >= 4")
    if n > config.cyclic_scan_max_order:
        return _skip(
            "CYCLIC-NO-ISOMETRY", data, f"order {n} exceeds the n! scan limit {config.cyclic_scan_max_order}"
        )
    word = data.word
    cardinal = data.cardinal
    elems = data.group.elements()
    hits = []
    for perm in itertools.permutations(range(n)):
        if is_isometry(GroupMap(elems, perm), word, cardinal):
            hits.append(perm)
    return _result(
        "CYCLIC-NO-ISOMETRY",
        data,
        not hits,
        f"0 of {n}! bijections map (G, d_W) isometrically onto (G, d_C)",
        {"isometries_found": [list(p) for p in hits[:3]]},
    )


def _check_discrete_ball(data: _FixtureData, config: SuiteConfig) -> CheckResult:
    half = Fraction(1, 2)
    for v in data.universe:
        got = ball(
            data.group,
            BallSpec(center=v, radius=half, kind=CARDINAL),
            data.universe,
        )
        if got != {v}:
            return _result(
                "DISCRETE-BALL",
                data,
                False,
                "open 1/2-ball is not a singleton",
                {"center": format_element(v), "ball_size": len(got)},
            )
    return _result(
        "DISCRETE-BALL", data, True, f"open 1/2-balls are singletons at all {len(data.universe)} vertices"
    )


def _check_decompose(data: _FixtureData, config: SuiteConfig) -> CheckResult:
    if not data.group.is_finite:
        return _skip("DECOMPOSE-ISOMETRY", data, "finite backend only")
    n = len(data.group.elements())
    if n > config.brute_force_bound:
        return _skip(
            "DECOMPOSE-ISOMETRY", data, f"|G| = {n} exceeds brute-force bound {config.brute_force_bound}"
        )
    if n < 2:
        return _skip("DECOMPOSE-ISOMETRY", data, "needs a nontrivial group")
    complete = complete_graph_variant(data.group)
    elems = complete.elements()
    cap = len(elems)
    candidates = [GroupMap.identity(elems)]
    first = next(g for g in elems if g != complete.identity())
    candidates.append(left_translation(complete, first))
    for T in candidates:
        a, t_tilde, report = decompose_isometry(T, complete, radius_cap=cap)
        if not report.all_pass:
            return _result(
                "DECOMPOSE-ISOMETRY",
                data,
                False,
                "decomposition report failed on the complete-graph fixture",
                {
                    "a": format_element(a),
                    "fixes_identity": report.fixes_identity,
                    "generators_ok": report.generators_into_s_or_inverses,
                    "nonexpansive": report.nonexpansive,
                },
            )
    return _result(
        "DECOMPOSE-ISOMETRY",
        data,
        True,
        "L_a . T-tilde decomposition passes on the S = G \\ {e} fixture",
    )


def _check_qi_divergence(data: _FixtureData, config: SuiteConfig) -> CheckResult:
    if data.group.kind != FREE_ABELIAN or data.group.size != 1:
        return _skip("QI-DIVERGENCE", data, "rank-1 free abelian fixtures only")
    K, c = config.qi_K, config.qi_c
    threshold = K * (len(data.group.generators) + c)
    for r in config.qi_radii:
        vertices = data.group.word_ball(data.group.identity(), r)
        cap = 2 * r
        word = metric_table(data.group, vertices, WORD, radius_cap=cap)
        cardinal = metric_table(data.group, vertices, CARDINAL)
        report = qi_violation_scan(GroupMap.identity(word.vertices), K, c, word, cardinal)
        expect_violation = diameter(word) > threshold
        if bool(report.violations) != expect_violation:
            return _result(
                "QI-DIVERGENCE",
                data,
                False,
                f"scan at radius {r} disagrees with the d_W > K(|S|+c) threshold",
                {
                    "radius": r,
                    "violations": len(report.violations),
                    "threshold": str(threshold),
                    "word_diameter": diameter(word),
                },
            )
    return _result(
        "QI-DIVERGENCE",
        data,
        True,
        f"violations appear exactly when d_W exceeds K(|S|+c) = {threshold} (radii {list(config.qi_radii)}); "
        "evidence at desk scale, not a proof for the infinite group",
    )


_CHECK_FUNCTIONS = {
    "NORM-AXIOMS": _check_norm_axioms,
    "DC-LE-CARD-S": _check_dc_le_card_s,
    "DC-LE-DW": _check_dc_le_dw,
    "THM31-ORACLE": _check_thm31,
    "CAUT-EQ-LA": _check_caut,
    "PAUT-EQ-LATAU": _check_paut,
    "PAUT-ISOMETRY": _check_paut_isometry,
    "BILIP-BOUND": _check_bilip,
    "CYCLIC-NO-ISOMETRY": _check_cyclic_no_isometry,
    "DISCRETE-BALL": _check_discrete_ball,
    "DECOMPOSE-ISOMETRY": _check_decompose,
    "QI-DIVERGENCE": _check_qi_divergence,
}


def run_verification_suite(
    fixtures: Iterable[GeneratedGroup], config: SuiteConfig | None = None
) -> VerificationReport:
    """Run every theorem check against every fixture it applies to.

    Failures are report entries, never exceptions; fixtures outside a
    brute-force bound yield explicit skip entries.
    """
    config = config or SuiteConfig()
    datas = [_FixtureData(g, config) for g in fixtures]
    results: list[CheckResult] = []
    for check_id in CHECK_IDS:
        fn = _CHECK_FUNCTIONS[check_id]
        for data in datas:
            results.append(fn(data, config))
        if check_id == "BILIP-BOUND":
            for a, b in itertools.combinations(datas, 2):
                if (
                    a.group.is_finite
                    and b.group.is_finite
                    and set(a.universe) == set(b.universe)
                ):
                    results.append(_check_bilip_pair(a, b, config))
    return VerificationReport(results=tuple(results), config=config)
