import pytest
from hypothesis import given, settings, strategies as st

from conftest import braid_words
from qtail import kernels, _kernels_py
from qtail.bracket import jones_bracket
from qtail.braid import (BraidWord, components, connected_sum, load_named_braids,
                         mirror_braid, parse_braid, torus_braid)
from qtail.errors import OutOfRange
from qtail.qlaurent import Q, QPoly, canonical
from qtail.statesum import (StateSumConfig, _table, jones_statesum, link24_formula,
                            mu_factor, r_entry)

q = QPoly.q
TREFOIL = parse_braid("2: 1 1 1")
FIG8 = parse_braid("3: 1 -2 1 -2")


def canon(p):
    return canonical(p).normalized


def oracle(b):
    """Bracket-oracle Jones polynomial, with the state sum's sign for links."""
    return jones_bracket(b) * (-1) ** (components(b) - 1)


# the oracle on its own

def test_oracle_known_values():
    assert jones_bracket(TREFOIL) == q(1) + q(3) - q(4)
    assert jones_bracket(FIG8) == q(-2) - q(-1) + 1 - q(1) + q(2)
    assert jones_bracket(BraidWord(2, ())) == -q("1/2") - q("-1/2")
    assert jones_bracket(parse_braid("2: 1")) == QPoly.one()


# calibration against the oracle

@pytest.mark.parametrize("text", ["2: 1 1 1", "2: -1 -1 -1", "3: 1 -2 1 -2", "2: 1 1 1 1 1",
                                  "2: -1 -1 -1 -1", "3: 1 2 1 2 1 2 1 2", "3:", "2: 1 -1"])
def test_calibration_n2(text):
    b = parse_braid(text)
    assert jones_statesum(b, 2) == oracle(b)


@settings(max_examples=40)
@given(braid_words(max_len=7))
def test_calibration_random_braids(sw):
    b = BraidWord(*sw)
    assert jones_statesum(b, 2) == oracle(b)


def test_named_braids_pass_oracle_gate():
    for name, b in load_named_braids().items():
        assert jones_statesum(b, 2) == oracle(b), name


def test_trefoil_chirality():
    # positive letters are positive crossings; 1 - q - q^3 belongs to sigma_1^-3
    assert canon(jones_statesum(TREFOIL, 2)) == 1 + q(2) - q(3)
    assert canon(jones_statesum(mirror_braid(TREFOIL), 2)) == 1 - q(1) - q(3)


def test_figure_eight_value():
    assert canon(jones_statesum(FIG8, 2)) == 1 - q(1) + q(2) - q(3) + q(4)


@given(braid_words(max_len=5))
def test_color_one_is_trivial(sw):
    assert jones_statesum(BraidWord(*sw), 1) == QPoly.one()


# R-matrix entries and mu

def test_r_entry_examples():
    assert r_entry(1, 1, 0, 0, 0, 0) == QPoly.one()
    assert r_entry(2, 1, 0, 1, 0, 1) == q("-1/4") - q("3/4")
    assert r_entry(2, 1, 1, 0, 0, 1) == q("1/4")


def test_r_entry_support():
    with pytest.raises(OutOfRange):
        r_entry(2, 1, 0, 2, 0, 0)
    for N in range(1, 5):
        for sign in (1, -1):
            for i in range(N):
                for j in range(N):
                    for k in range(N):
                        for l in range(N):
                            if r_entry(N, sign, i, j, k, l):
                                assert i + j == k + l


@pytest.mark.parametrize("N", [2, 3, 4])
def test_r_matrices_are_inverse(N):
    # sum_{k,l} R[i,j -> k,l] Rinv[k,l -> a,b] = delta
    for i in range(N):
        for j in range(N):
            for a in range(N):
                for b in range(N):
                    s = QPoly.zero()
                    for k in range(N):
                        for l in range(N):
                            s = s + r_entry(N, 1, i, j, k, l) * r_entry(N, -1, k, l, a, b)
                    assert s == (QPoly.one() if (i, j) == (a, b) else QPoly.zero())


def test_mu_examples():
    assert mu_factor(2, 0) == q("1/2")
    assert mu_factor(2, 1) == q("-1/2")
    for N in (1, 3, 5, 7):
        assert mu_factor(N, (N - 1) // 2) == QPoly.one()
    with pytest.raises(OutOfRange):
        mu_factor(2, 2)


def test_config_validation():
    with pytest.raises(OutOfRange):
        StateSumConfig(0)
    with pytest.raises(OutOfRange):
        StateSumConfig(3, fixed_label=3)


# the (2,-4) link formula

def test_link24_small():
    assert link24_formula(1) == QPoly.one()


@pytest.mark.parametrize("N", range(1, 6))
def test_link24_equals_statesum(N):
    assert link24_formula(N) == jones_statesum(torus_braid(2, -4), N)


def test_link24_prefix():
    assert canon(link24_formula(6)).truncate(Q * 6) == 1 - q(1) + q(3)


# invariants

@pytest.mark.parametrize("b", [TREFOIL, FIG8, mirror_braid(TREFOIL)])
@pytest.mark.parametrize("N", [2, 3])
def test_fixed_label_independence(b, N):
    ref = jones_statesum(b, StateSumConfig(N, 0))
    for lab in range(1, N):
        assert jones_statesum(b, StateSumConfig(N, lab)) == ref


@settings(max_examples=15)
@given(braid_words(strands=st.integers(2, 3), max_len=5), st.integers(2, 3))
def test_fixed_label_independence_random_knots(sw, N):
    b = BraidWord(*sw)
    if components(b) != 1:
        return
    ref = jones_statesum(b, StateSumConfig(N, 0))
    assert all(jones_statesum(b, StateSumConfig(N, lab)) == ref for lab in range(1, N))


@pytest.mark.parametrize("b", [TREFOIL, FIG8])
@pytest.mark.parametrize("N", [2, 3])
def test_mirror_symmetry(b, N):
    assert canon(jones_statesum(mirror_braid(b), N)) == canon(jones_statesum(b, N).invert())


@pytest.mark.parametrize("N", [2, 3])
def test_connected_sum_multiplicative(N):
    t = jones_statesum(TREFOIL, N)
    assert canon(jones_statesum(connected_sum(TREFOIL, TREFOIL), N)) == canon(t * t)
    f = jones_statesum(FIG8, N)
    assert canon(jones_statesum(connected_sum(FIG8, TREFOIL), N)) == canon(f * t)


@settings(max_examples=20)
@given(braid_words(max_len=5), st.integers(2, 3))
def test_pruning_is_lossless(sw, N):
    b = BraidWord(*sw)
    assert jones_statesum(b, StateSumConfig(N, prune=True)) == \
        jones_statesum(b, StateSumConfig(N, prune=False))


def test_pruned_and_full_tables_agree():
    full = _table(3, 1, False)
    pruned = _table(3, 1, True)
    assert full == pruned  # every nonzero entry conserves labels


@pytest.mark.parametrize("workers", [1, 2, 3])
def test_thread_count_determinism(workers):
    b = parse_braid("3: 1 -2 1 -2 1")
    assert jones_statesum(b, 3, workers=workers) == jones_statesum(b, 3, workers=1)


def test_threads_env(monkeypatch):
    b = parse_braid("3: 1 2 1 2 1 2 1 2")
    ref = jones_statesum(b, 3)
    monkeypatch.setenv("QTAIL_THREADS", "2")
    assert jones_statesum(b, 3) == ref
    monkeypatch.setenv("QTAIL_THREADS", "0")
    with pytest.raises(ValueError):
        jones_statesum(b, 3)


@pytest.mark.parametrize("N", [1, 2, 3])
def test_alternative_torus_presentation(N):
    # (s4 s3 s2 s1)^2 on five strands also closes to T(2,5)
    alt = BraidWord(5, (4, 3, 2, 1, 4, 3, 2, 1))
    assert canon(jones_statesum(alt, N)) == canon(jones_statesum(torus_braid(2, 5), N))


# backends

def _steps(b, N, prepare):
    from qtail.statesum import _plan
    return [(a, prepare(_table(N, p, True)), fl, fr) for a, p, fl, fr in _plan(b, True)]


@pytest.mark.skipif(not kernels.compiled_available(), reason="compiled kernels not built")
@settings(max_examples=30)
@given(braid_words(max_len=6), st.integers(2, 4), st.data())
def test_backends_agree(sw, N, data):
    from qtail import _kernels
    b = BraidWord(*sw)
    top = (0,) + tuple(data.draw(st.integers(0, N - 1)) for _ in range(b.strands - 1))
    fast = _kernels.run_top(top, _steps(b, N, _kernels.prepare_table))
    slow = _kernels_py.run_top(top, _steps(b, N, _kernels_py.prepare_table))
    assert fast == slow


def test_overflow_falls_back_to_exact(monkeypatch):
    b = parse_braid("3: 1 -2 1 -2")
    ref = jones_statesum(b, 3)

    def boom(top, steps):
        raise OverflowError

    monkeypatch.setattr(kernels, "run_top", boom)
    assert jones_statesum(b, 3) == ref
