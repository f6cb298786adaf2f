import math
from fractions import Fraction

import pytest

from wproj.arith import s_part
from wproj.errors import DegenerateGenerators, EmptyDomain, IllFormedWeights
from wproj.gcdops import Subscheme, wgcd
from wproj.scan import (
    BoxDomain,
    ScanConfig,
    SUnitGrid,
    s_units,
    sing1_audit,
    vojta_scan,
)
from wproj.weights import Weights
from wproj.wpoly import parse_polynomial

W111 = Weights.of(1, 1, 1)


def make_config(**overrides):
    defaults = dict(
        weights=W111,
        subscheme=Subscheme(
            (
                parse_polynomial("x1-x0", W111),
                parse_polynomial("x2-x0", W111),
            ),
            Weights.of(1, 1),
        ),
        epsilon=Fraction(1),
        delta=Fraction(0),
        s_primes=frozenset(),
        domain=BoxDomain.symmetric(4, 3),
    )
    defaults.update(overrides)
    return ScanConfig(**defaults)


def test_s_units():
    assert s_units((2, 3), 20) == [1, 2, 3, 4, 6, 8, 9, 12, 16, 18]
    assert s_units((2,), 10) == [1, 2, 4, 8]
    assert s_units((5,), 1) == [1]


def test_box_scan_hand_computed_rows():
    report = vojta_scan(make_config(domain=BoxDomain(((1, 8), (1, 8), (1, 8)))))
    rows = {row.point: row for row in report.rows}
    # hand-checked rows for generators (x1-x0, x2-x0), eps=1, delta=0, S={}
    row = rows[(1, 4, 7)]
    assert row.lhs == math.gcd(3, 6) == 3
    assert row.rhs == pytest.approx(7 * 28)
    assert not row.exceptional
    row = rows[(1, 2, 3)]
    assert row.lhs == math.gcd(1, 2) == 1
    assert row.rhs == pytest.approx(3 * 6)
    row = rows[(2, 3, 5)]
    assert row.lhs == math.gcd(1, 3) == 1
    assert row.rhs == pytest.approx(5 * 30)
    row = rows[(3, 5, 7)]
    assert row.lhs == math.gcd(2, 4) == 2
    assert row.rhs == pytest.approx(7 * 105)
    row = rows[(1, 7, 7)]
    assert row.lhs == math.gcd(6, 6) == 6
    assert row.rhs == pytest.approx(7 * 49)


def test_box_scan_row_values():
    report = vojta_scan(make_config(domain=BoxDomain(((1, 8), (1, 8), (1, 8)))))
    rows = {row.point: row for row in report.rows}
    assert (2, 4, 8) not in rows
    for point, row in rows.items():
        values = (point[1] - point[0], point[2] - point[0])
        if all(v == 0 for v in values):
            continue
        assert row.lhs == wgcd(values, Weights.of(1, 1))
        product = point[0] * point[1] * point[2]
        expected_rhs = max(abs(v) for v in point) * s_part(product, set())
        assert row.rhs == pytest.approx(expected_rhs)
        assert row.exceptional == (row.lhs > row.rhs)


def test_scan_skips_points_on_subscheme():
    report = vojta_scan(make_config(domain=BoxDomain(((1, 3), (1, 3), (1, 3)))))
    assert all(row.point[1:] != (row.point[0], row.point[0]) for row in report.rows)
    assert report.skipped_on_subscheme >= 1  # (1,1,1) at least
    assert report.total_candidates == len(report.rows) + report.skipped_on_subscheme


def test_all_unit_values_never_exceptional():
    # generators evaluate to +/-1 on this domain: lhs is always 1
    w = Weights.of(1, 1)
    config = ScanConfig(
        weights=w,
        subscheme=Subscheme((parse_polynomial("x1-x0", w),), Weights.of(1)),
        epsilon=Fraction(1),
        delta=Fraction(1),
        s_primes=frozenset(),
        domain=BoxDomain(((1, 9), (2, 10))),
    )
    report = vojta_scan(config)
    unit_rows = [row for row in report.rows if abs(row.point[1] - row.point[0]) == 1]
    assert unit_rows
    for row in unit_rows:
        assert row.lhs == 1
        assert not row.exceptional


def test_scan_determinism():
    config = make_config()
    first = vojta_scan(config)
    second = vojta_scan(config)
    assert first.rows == second.rows
    assert first.total_candidates == second.total_candidates


def test_scan_serializations_are_byte_identical():
    from wproj.cli import format_scan_csv, format_scan_json

    config = make_config()
    first = vojta_scan(config)
    second = vojta_scan(config)
    assert format_scan_csv(first) == format_scan_csv(second)
    assert format_scan_json(first) == format_scan_json(second)
    assert "runtime" not in format_scan_json(first)


def test_scan_workers_match_sequential():
    config = make_config(domain=BoxDomain.symmetric(3, 3))
    assert vojta_scan(config, workers=2).rows == vojta_scan(config).rows


def test_sunit_grid_scan():
    w = Weights.of(1, 2, 3)
    config = ScanConfig(
        weights=w,
        subscheme=Subscheme(
            (parse_polynomial("x1-x0", w), parse_polynomial("x2-x0", w)),
            Weights.of(2, 3),
        ),
        epsilon=Fraction(1),
        delta=Fraction(0),
        s_primes=frozenset({2, 3}),
        domain=SUnitGrid((2, 3), 100),
    )
    report = vojta_scan(config)
    units = s_units((2, 3), 100)
    assert report.total_candidates == len(units) ** 2
    assert report.skipped_on_subscheme == 1  # only (1,1,1)
    rows = {row.point: row for row in report.rows}
    row = rows[(1, 16, 27)]
    assert row.lhs == wgcd((15, 26), Weights.of(2, 3))
    # S-unit coordinates: the prime-to-S part is 1, rhs is the max-power term
    assert row.rhs == pytest.approx(max(16 ** 0.5, 27 ** (1 / 3)))
    # points are lexicographically ordered
    points = [row.point for row in report.rows]
    assert points == sorted(points)


def test_sunit_row_exceptional_flag_matches_inequality():
    w = Weights.of(1, 2, 3)
    config = ScanConfig(
        weights=w,
        subscheme=Subscheme(
            (parse_polynomial("x1-x0", w), parse_polynomial("x2-x0", w)),
            Weights.of(2, 3),
        ),
        epsilon=Fraction(1, 2),
        delta=Fraction(0),
        s_primes=frozenset({2, 3}),
        domain=SUnitGrid((2, 3), 200),
    )
    for row in vojta_scan(config).rows:
        assert row.exceptional == (row.lhs > row.rhs)
        assert row.ratio == pytest.approx(row.lhs / row.rhs)


def test_empty_domain():
    with pytest.raises(EmptyDomain):
        vojta_scan(make_config(domain=BoxDomain(((0, 0), (0, 0), (0, 0)))))


def test_degenerate_generators():
    w = Weights.of(1, 1)
    config = ScanConfig(
        weights=w,
        subscheme=Subscheme((parse_polynomial("x1-x0", w),), Weights.of(1)),
        epsilon=Fraction(1),
        delta=Fraction(1),
        s_primes=frozenset(),
        domain=BoxDomain(((1, 1), (1, 1))),
    )
    with pytest.raises(DegenerateGenerators):
        vojta_scan(config)


def test_single_generator_needs_positive_delta():
    w = Weights.of(1, 1)
    with pytest.raises(ValueError):
        ScanConfig(
            weights=w,
            subscheme=Subscheme((parse_polynomial("x1-x0", w),), Weights.of(1)),
            epsilon=Fraction(1),
            delta=Fraction(0),
            s_primes=frozenset(),
            domain=BoxDomain(((1, 2), (1, 2))),
        )


def test_config_validation():
    with pytest.raises(ValueError):
        make_config(epsilon=Fraction(0))
    with pytest.raises(ValueError):
        make_config(delta=Fraction(-1))
    with pytest.raises(ValueError):
        make_config(metric_mode="other")
    with pytest.raises(ValueError):
        BoxDomain(((3, 1),))
    with pytest.raises(ValueError):
        SUnitGrid((), 10)


def test_codim_override_changes_rhs():
    base = vojta_scan(make_config(domain=BoxDomain(((1, 4), (1, 4), (1, 4)))))
    overridden = vojta_scan(
        make_config(domain=BoxDomain(((1, 4), (1, 4), (1, 4))), codim=3)
    )
    assert base.config.r == 2 and overridden.config.r == 3
    point = (1, 2, 3)
    r1 = next(row for row in base.rows if row.point == point)
    r2 = next(row for row in overridden.rows if row.point == point)
    assert r1.rhs > r2.rhs  # larger r shrinks the S-part exponent


def test_sing1_audit_examples():
    report = sing1_audit(Weights.of(2, 3, 5), 3)
    points = {row.point for row in report.counterexamples}
    assert (1, 1, 1) in points
    assert report.total_points == report.zero_loghwgcd
    # every counterexample is zero-log-hwgcd and nonsingular
    for row in report.counterexamples:
        assert row.log_hwgcd_zero and not row.singular and row.counterexample

    flat = sing1_audit(Weights.of(1, 1), 5)
    # all points nonsingular, all have log hwgcd 0: everything is reported
    assert flat.singular_points == 0
    assert len(flat.counterexamples) == flat.total_points

    empty = sing1_audit(Weights.of(1, 1), 0)
    assert empty.total_points == 0
    assert empty.counterexamples == []


def test_sing1_audit_requires_well_formed():
    with pytest.raises(IllFormedWeights):
        sing1_audit(Weights.of(2, 4), 2)


def test_sing1_audit_determinism():
    first = sing1_audit(Weights.of(2, 3, 5), 3)
    second = sing1_audit(Weights.of(2, 3, 5), 3)
    assert [r.point for r in first.counterexamples] == [
        r.point for r in second.counterexamples
    ]
    assert first.counterexamples == second.counterexamples
