"""I(delta), dual distance bounds, prior bounds, and the dually-BCH criterion."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dualbch.bch import (
    DefiningSet,
    bch_spec,
    defining_set,
    dual_defining_set,
)
from dualbch.cyclotomic import coset_leader, coset_table, largest_leaders
from dualbch.dualtools import (
    BoundReport,
    PriorBound,
    bound_report,
    dual_lower_bound,
    dually_bch_closed,
    dually_bch_direct,
    i_delta_closed_divisor_form,
    i_delta_closed_power_form,
    i_delta_direct,
    prior_bounds,
)


def t_perp_of(spec, table=None):
    table = table or coset_table(spec.n, spec.q)
    return dual_defining_set(defining_set(spec, table))


class TestIDeltaDirect:
    def test_singleton(self):
        assert i_delta_direct(DefiningSet.from_members(5, 2, [0])) == 1

    def test_binary_delta3(self):
        spec = bch_spec(2, 6, 3, lam=1)
        assert i_delta_direct(t_perp_of(spec)) == 31

    def test_ternary_delta5(self):
        spec = bch_spec(3, 3, 5, lam=1)
        assert i_delta_direct(t_perp_of(spec)) == 8

    def test_missing_zero_rejected(self):
        with pytest.raises(ValueError):
            i_delta_direct(DefiningSet.from_members(5, 2, [1, 2, 4, 3]))

    def test_full_set_rejected(self):
        with pytest.raises(ValueError):
            i_delta_direct(DefiningSet.from_members(5, 2, range(5)))


class TestIDeltaClosedPowerForm:
    def test_binary_delta3(self):
        assert i_delta_closed_power_form(2, 1, 6, 3) == 31

    def test_ternary_s2_delta10(self):
        # interval (1, 10] at t=1: (3^4 - 1)/8 = 10
        assert i_delta_closed_power_form(3, 2, 6, 10) == 10

    def test_tail_case(self):
        assert i_delta_closed_power_form(2, 1, 6, 32) == 1
        assert i_delta_closed_power_form(2, 1, 6, 63) == 1

    def test_hypotheses(self):
        with pytest.raises(ValueError):
            i_delta_closed_power_form(2, 2, 4, 3)  # m/s = 2
        with pytest.raises(ValueError):
            i_delta_closed_power_form(2, 2, 5, 3)  # s does not divide m
        with pytest.raises(ValueError):
            i_delta_closed_power_form(2, 1, 6, 64)  # delta > n


class TestIDeltaClosedDivisorForm:
    def test_case1_exact_point(self):
        # q=5, lambda=1, m=2, delta=3 is the isolated point t=0, s=2:
        # I = (25-1)/1 - 2*5 = 14; the direct scan gives 14 as well, and
        # the associated distance bound is I + 1 = 15
        assert i_delta_closed_divisor_form(5, 1, 2, 3) == 14
        spec = bch_spec(5, 2, 3, lam=1)
        assert i_delta_direct(t_perp_of(spec)) == 14

    def test_case2(self):
        assert i_delta_closed_divisor_form(3, 1, 3, 5) == 8

    def test_case4_tail(self):
        assert i_delta_closed_divisor_form(3, 1, 3, 18) == 1
        assert i_delta_closed_divisor_form(3, 1, 3, 26) == 1

    def test_hypotheses(self):
        with pytest.raises(ValueError):
            i_delta_closed_divisor_form(5, 4, 2, 3)  # lambda = q-1
        with pytest.raises(ValueError):
            i_delta_closed_divisor_form(5, 3, 2, 3)  # lambda does not divide q-1
        with pytest.raises(ValueError):
            i_delta_closed_divisor_form(3, 1, 1, 2)  # m < 2
        with pytest.raises(ValueError):
            i_delta_closed_divisor_form(2, 1, 6, 3)  # q = 2 belongs to power form


class TestDualLowerBound:
    def test_examples(self):
        assert dual_lower_bound(bch_spec(2, 6, 3, lam=1)) == 32
        assert dual_lower_bound(bch_spec(2, 6, 15, lam=1)) == 8
        assert dual_lower_bound(bch_spec(3, 3, 5, lam=1)) == 9
        assert dual_lower_bound(bch_spec(5, 2, 3, lam=1)) == 15

    def test_tail_gives_2(self):
        assert dual_lower_bound(bch_spec(3, 3, 26, lam=1)) == 2
        assert dual_lower_bound(bch_spec(2, 6, 60, lam=1)) == 2

    def test_equals_i_delta_plus_1(self):
        for q, m, kw in [(2, 6, dict(lam=1)), (3, 6, dict(s=2)), (3, 9, dict(s=3)),
                         (5, 2, dict(lam=1)), (5, 4, dict(lam=2)), (7, 3, dict(lam=3)),
                         (7, 2, dict(lam=2)), (3, 4, dict(lam=1))]:
            n = None
            for delta in range(2, bch_spec(q, m, 2, **kw).n + 1):
                spec = bch_spec(q, m, delta, **kw)
                from dualbch.bch import PowerForm

                if isinstance(spec.lambda_kind, PowerForm):
                    i = i_delta_closed_power_form(q, spec.lambda_kind.s, m, delta)
                else:
                    i = i_delta_closed_divisor_form(q, spec.lam, m, delta)
                assert dual_lower_bound(spec) == i + 1


SWEEP_SPECS = [
    (2, 6, dict(lam=1)),    # n=63, power s=1
    (2, 6, dict(s=2)),      # n=21
    (2, 9, dict(lam=1)),    # n=511
    (3, 6, dict(s=2)),      # n=91
    (3, 3, dict(lam=1)),    # n=26
    (3, 4, dict(lam=1)),    # n=80
    (4, 3, dict(s=1)),      # n=21
    (5, 2, dict(lam=1)),    # n=24
    (5, 3, dict(lam=2)),    # n=62
    (5, 4, dict(lam=2)),    # n=312
    (7, 2, dict(lam=2)),    # n=24
    (7, 3, dict(lam=3)),    # n=114
    (9, 2, dict(lam=4)),    # n=20
    (13, 2, dict(lam=4)),   # n=42
]


class TestClosedMatchesDirect:
    @pytest.mark.parametrize("q,m,kw", SWEEP_SPECS)
    def test_i_delta_full_sweep(self, q, m, kw):
        from dualbch.bch import PowerForm

        n = bch_spec(q, m, 2, **kw).n
        table = coset_table(n, q)
        for delta in range(2, n + 1):
            spec = bch_spec(q, m, delta, **kw)
            direct = i_delta_direct(t_perp_of(spec, table))
            if isinstance(spec.lambda_kind, PowerForm):
                closed = i_delta_closed_power_form(q, spec.lambda_kind.s, m, delta)
            else:
                closed = i_delta_closed_divisor_form(q, spec.lam, m, delta)
            assert closed == direct, f"delta={delta}"

    @pytest.mark.parametrize("q,m,kw", SWEEP_SPECS)
    def test_dually_bch_full_sweep(self, q, m, kw):
        n = bch_spec(q, m, 2, **kw).n
        table = coset_table(n, q)
        for delta in range(2, n + 1):
            spec = bch_spec(q, m, delta, **kw)
            direct, _ = dually_bch_direct(t_perp_of(spec, table), table)
            try:
                closed = dually_bch_closed(spec, table)
            except ValueError:
                continue  # theorem hypotheses not met (e.g. m too small)
            assert closed == direct, f"delta={delta}"

    @pytest.mark.parametrize("q,m,kw", SWEEP_SPECS)
    def test_direct_run_bound_at_least_closed(self, q, m, kw):
        from dualbch.bch import bch_bound_from_set

        n = bch_spec(q, m, 2, **kw).n
        table = coset_table(n, q)
        for delta in range(2, n + 1, 7):
            spec = bch_spec(q, m, delta, **kw)
            tp = t_perp_of(spec, table)
            try:
                closed = dual_lower_bound(spec)
            except ValueError:
                continue
            assert bch_bound_from_set(tp) >= closed


class TestPriorBounds:
    def test_binary_delta15(self):
        spec = bch_spec(2, 6, 15, lam=1)
        bounds = {b.name: b for b in prior_bounds(spec)}
        cu = bounds["carlitz_uchiyama"]
        assert cu.value == 32 - 6 * 8 == -16
        assert cu.vacuous
        sid = bounds["sidelnikov"]
        assert sid.value == 4
        assert not sid.vacuous
        assert bounds["primitive_length"].value == 8
        assert bounds["projective_length"].value == 8

    def test_binary_delta3(self):
        spec = bch_spec(2, 6, 3, lam=1)
        bounds = {b.name: b for b in prior_bounds(spec)}
        assert bounds["carlitz_uchiyama"].value == 32
        assert bounds["sidelnikov"].value == 32
        assert bounds["projective_length"].value == 32

    def test_ternary_primitive(self):
        spec = bch_spec(3, 3, 5, lam=1)
        bounds = {b.name: b for b in prior_bounds(spec)}
        assert bounds["primitive_length"].value == 9
        assert "carlitz_uchiyama" not in bounds
        assert "projective_length" not in bounds

    def test_odd_m_carlitz_uchiyama_is_float(self):
        spec = bch_spec(2, 5, 5, lam=1)
        cu = {b.name: b for b in prior_bounds(spec)}["carlitz_uchiyama"]
        assert cu.value == 16 - 1 * math.sqrt(32)
        assert isinstance(cu.value, float)

    def test_even_delta_no_binary_bounds(self):
        spec = bch_spec(2, 6, 4, lam=1)
        names = {b.name for b in prior_bounds(spec)}
        assert "carlitz_uchiyama" not in names
        assert "sidelnikov" not in names

    def test_divisor_family_has_no_prior(self):
        assert prior_bounds(bch_spec(5, 4, 10, lam=2)) == ()

    def test_boundary_interval_case_q3(self):
        # q=3, m=4, delta=7: b = 9-7 = 2 exceeds q-2, so the exact-point case
        # is out; the matching case is (q-1)q^t <= 7 <= q^2-q+1 at t=1 -> 26
        spec = bch_spec(3, 4, 7, lam=1)
        bounds = {b.name: b for b in prior_bounds(spec)}
        assert bounds["primitive_length"].value == 26

    def test_exact_point_case_q_ge_3(self):
        # q=5, m=3, delta=23 = 25-2: only the exact-point case fires,
        # value (b+1)q^{m-t} = 3*5 = 15
        spec = bch_spec(5, 3, 23, lam=1)
        bounds = {b.name: b for b in prior_bounds(spec)}
        assert bounds["primitive_length"].value == 15


class TestDuallyBchDirect:
    def test_singleton_true(self):
        t = coset_table(63, 2)
        spec = bch_spec(2, 6, 32, lam=1)
        tp = t_perp_of(spec, t)
        assert tp.members == (0,)
        assert dually_bch_direct(tp, t) == (True, 1)

    def test_power_examples(self):
        t = coset_table(91, 3)
        spec = bch_spec(3, 6, 50, s=2)
        assert dually_bch_direct(t_perp_of(spec, t), t)[0] is True
        spec = bch_spec(3, 6, 49, s=2)
        assert dually_bch_direct(t_perp_of(spec, t), t)[0] is False

    def test_divisor_example(self):
        t = coset_table(312, 5)
        spec = bch_spec(5, 4, 247, lam=2)
        verdict, witness = dually_bch_direct(t_perp_of(spec, t), t)
        assert verdict is False
        assert coset_leader(t, witness) == witness  # witness is a leader in T_perp
        spec = bch_spec(5, 4, 248, lam=2)
        assert dually_bch_direct(t_perp_of(spec, t), t) == (True, 1)

    def test_witness_value_binary_delta15(self):
        # J = 7; leaders 7, 8 are unavailable (7 maps into T^{-1}); 9 is the
        # least coset leader >= 7 inside T_perp
        t = coset_table(63, 2)
        spec = bch_spec(2, 6, 15, lam=1)
        assert dually_bch_direct(t_perp_of(spec, t), t) == (False, 9)


class TestDuallyBchClosed:
    def test_binary_exception_case(self):
        assert dually_bch_closed(bch_spec(2, 6, 2, lam=1)) is True
        assert dually_bch_closed(bch_spec(2, 6, 3, lam=1)) is True
        assert dually_bch_closed(bch_spec(2, 6, 4, lam=1)) is False
        # delta2 = 27 mod 63: true again from 28 on
        assert dually_bch_closed(bch_spec(2, 6, 27, lam=1)) is False
        assert dually_bch_closed(bch_spec(2, 6, 28, lam=1)) is True

    def test_power_s3_threshold(self):
        table = coset_table(757, 3)
        assert dually_bch_closed(bch_spec(3, 9, 388, s=3), table) is False
        assert dually_bch_closed(bch_spec(3, 9, 389, s=3), table) is True

    def test_divisor_examples(self):
        assert dually_bch_closed(bch_spec(7, 3, 96, lam=3)) is True
        assert dually_bch_closed(bch_spec(7, 3, 95, lam=3)) is False
        table = coset_table(312, 5)
        assert dually_bch_closed(bch_spec(5, 4, 247, lam=2), table) is False
        assert dually_bch_closed(bch_spec(5, 4, 248, lam=2), table) is True

    def test_divisor_lambda1_exception(self):
        # lambda = 1: dually-BCH iff delta = 2 or delta > delta2
        table = coset_table(26, 3)
        assert dually_bch_closed(bch_spec(3, 3, 2, lam=1), table) is True
        assert dually_bch_closed(bch_spec(3, 3, 3, lam=1), table) is False

    def test_hypothesis_violations(self):
        with pytest.raises(ValueError):
            dually_bch_closed(bch_spec(2, 4, 3, lam=1))  # q=2 needs m >= 6
        with pytest.raises(ValueError):
            dually_bch_closed(bch_spec(3, 3, 3, s=1))  # q>=3 needs m >= 4
        with pytest.raises(ValueError):
            dually_bch_closed(bch_spec(2, 4, 3, s=2))  # m/s < 3


class TestDeltaPrimeLemma:
    # delta' = CL(n - delta1): delta1 stays in T_perp while delta <= delta',
    # then delta' takes over until delta reaches delta1
    @pytest.mark.parametrize("q,m,kw", [
        (3, 3, dict(lam=1)), (5, 2, dict(lam=1)), (5, 3, dict(lam=2)),
        (7, 2, dict(lam=2)), (7, 3, dict(lam=3)), (9, 2, dict(lam=2)),
        (5, 4, dict(lam=2)), (13, 2, dict(lam=6)),
    ])
    def test_exhaustive(self, q, m, kw):
        n = bch_spec(q, m, 2, **kw).n
        table = coset_table(n, q)
        d1 = largest_leaders(table, 1)[0]
        dprime = coset_leader(table, n - d1)
        for delta in range(2, d1 + 1):
            spec = bch_spec(q, m, delta, **kw)
            tp = t_perp_of(spec, table)
            if delta <= dprime:
                assert d1 in tp
                assert coset_leader(table, d1) == d1
            else:
                assert dprime in tp
                assert coset_leader(table, dprime) == dprime


class TestBoundReport:
    def test_binary_delta15(self):
        spec = bch_spec(2, 6, 15, lam=1)
        r = bound_report(spec)
        assert r.i_delta_direct == 7
        assert r.i_delta_closed == 7
        assert r.lower_bound_closed == 8
        assert r.lower_bound_direct >= 8
        assert r.dually_bch_direct is False
        assert r.dually_bch_witness == 9
        assert r.dually_bch_closed is False
        assert (r.delta1, r.delta2) == (31, 27)
        names = [b.name for b in r.prior_bounds]
        assert names == ["carlitz_uchiyama", "sidelnikov",
                         "primitive_length", "projective_length"]

    def test_closdes_none_outside_hypotheses(self):
        # m/s = 2: no closed forms apply, direct values still present
        spec = bch_spec(2, 4, 3, s=2)
        r = bound_report(spec)
        assert r.i_delta_closed is None
        assert r.lower_bound_closed is None
        assert r.dually_bch_closed is None
        assert r.i_delta_direct >= 1

    def test_invariants_on_sample(self):
        for q, m, kw, delta in [(3, 6, dict(s=2), 10), (5, 4, dict(lam=2), 100),
                                (7, 3, dict(lam=3), 96), (3, 4, dict(lam=1), 25)]:
            r = bound_report(bch_spec(q, m, delta, **kw))
            if r.i_delta_closed is not None:
                assert r.i_delta_closed == r.i_delta_direct
                assert r.lower_bound_closed == r.i_delta_closed + 1
            if r.dually_bch_closed is not None:
                assert r.dually_bch_closed == r.dually_bch_direct


@st.composite
def valid_specs(draw):
    q = draw(st.sampled_from([2, 3, 4, 5, 7, 8, 9, 11, 13]))
    m = draw(st.integers(2, 9))
    if q**m - 1 > 2000:
        m = 2 if q > 11 else m % 3 + 2
    if q**m - 1 > 5000:
        q, m = 3, 4
    use_power = draw(st.booleans())
    if use_power:
        s = draw(st.sampled_from([d for d in range(1, m) if m % d == 0]))
        kw = dict(s=s)
    else:
        divs = [d for d in range(1, q) if (q - 1) % d == 0]
        kw = dict(lam=draw(st.sampled_from(divs)))
    probe = bch_spec(q, m, 2, **kw)
    delta = draw(st.integers(2, probe.n))
    return bch_spec(q, m, delta, **kw)


class TestHypothesisSweep:
    @given(valid_specs())
    @settings(max_examples=120, deadline=None)
    def test_closed_forms_agree_with_direct(self, spec):
        from dualbch.bch import PowerForm

        table = coset_table(spec.n, spec.q)
        tp = t_perp_of(spec, table)
        direct = i_delta_direct(tp)
        try:
            if isinstance(spec.lambda_kind, PowerForm):
                closed = i_delta_closed_power_form(
                    spec.q, spec.lambda_kind.s, spec.m, spec.delta)
            else:
                closed = i_delta_closed_divisor_form(
                    spec.q, spec.lam, spec.m, spec.delta)
        except ValueError:
            closed = None
        if closed is not None:
            assert closed == direct
        verdict, _ = dually_bch_direct(tp, table)
        try:
            assert dually_bch_closed(spec, table) == verdict
        except ValueError:
            pass
