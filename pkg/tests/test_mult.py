import json
import threading
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from hypkac.errors import InconsistencyError
from hypkac.mult import BilinearForm, MultTable, denominator_mults, root_mult, weyl_side
from hypkac.rootlat import RootKind, RootVec, qform, reflect, root_kind

# values for a = 3 on the diagonal band, checked against the denominator identity
KNOWN_A3 = {(1, 1): 1, (1, 2): 1, (2, 2): 1, (2, 3): 2, (3, 3): 3, (3, 4): 4, (4, 4): 6, (4, 5): 9, (5, 5): 16}


def test_bilinear_form():
    for a in (3, 4, 7):
        form = BilinearForm(a)
        assert form.matrix == ((2, -a), (-a, 2))
        assert form(RootVec(1, 0), RootVec(1, 0)) == 2
        assert form.with_rho(RootVec(1, 0)) == 1 and form.with_rho(RootVec(0, 1)) == 1


@given(st.integers(3, 9), st.integers(-30, 30), st.integers(-30, 30))
def test_form_is_twice_qform(a, s, t):
    v = RootVec(s, t)
    assert BilinearForm(a)(v, v) == 2 * qform(a, v)


def test_examples():
    assert root_mult(3, RootVec(1, 1)) == 1
    assert root_mult(3, RootVec(1, 2)) == 1
    assert root_mult(3, RootVec(2, 2)) == 1
    for (s, t), m in KNOWN_A3.items():
        assert root_mult(3, RootVec(s, t)) == m == root_mult(3, RootVec(t, s))


def test_large_value_is_exact():
    assert root_mult(3, RootVec(40, 40)) == 1052863394720006652


def test_real_and_non_roots():
    assert root_mult(4, RootVec(4, 1)) == 1
    assert root_mult(4, RootVec(5, 1)) == 0
    assert root_mult(4, RootVec(0, 0)) == 0
    assert root_mult(4, RootVec(2, -1)) == 0
    assert root_mult(4, RootVec(-3, -3)) == root_mult(4, RootVec(3, 3))


def test_weyl_side_head():
    # rho - r0 rho = alpha0; rho - r1 r0 rho = alpha0 + (1 + a) alpha1
    w = weyl_side(3, 5)
    assert w[(0, 0)] == 1 and w[(1, 0)] == -1 and w[(0, 1)] == -1
    assert w[(1, 4)] == 1 and w[(4, 1)] == 1
    assert all(s + t <= 5 for s, t in w)


@pytest.mark.parametrize("a", [3, 4, 5])
def test_oracle_agreement(a):
    oracle = denominator_mults(a, 12)
    for (s, t), m in oracle.items():
        assert root_mult(a, RootVec(s, t)) == m, (s, t)


@pytest.mark.parametrize("a", [3, 4, 5])
def test_weyl_invariance_small(a):
    for s in range(-15, 16):
        for t in range(-15, 16):
            v = RootVec(s, t)
            if root_kind(a, v) is RootKind.NOT_ROOT:
                continue
            for g in ("r0", "r1"):
                assert root_mult(a, reflect(a, g, v)) == root_mult(a, v)


@settings(max_examples=40, deadline=None)
@given(st.integers(3, 6), st.integers(1, 25), st.integers(1, 25))
def test_positive_integral_on_roots(a, s, t):
    v = RootVec(s, t)
    m = root_mult(a, v)
    if root_kind(a, v) is RootKind.IMAGINARY:
        assert m >= 1
    else:
        assert m == (1 if root_kind(a, v) is RootKind.REAL else 0)


def test_integrality_failure_is_reported(monkeypatch):
    table = MultTable(3)
    monkeypatch.setattr(table, "c_value", lambda s, t: Fraction(1, 3))
    with pytest.raises(InconsistencyError):
        table.mult(RootVec(2, 2))


def test_disk_cache(tmp_path):
    t1 = MultTable(3, cache_dir=tmp_path)
    m = t1.mult(RootVec(6, 6))
    path = tmp_path / "a=3" / "s=6,t=6.json"
    rec = json.loads(path.read_text())
    assert rec == {"a": 3, "s": 6, "t": 6, "mult": str(m)}
    t2 = MultTable(3, cache_dir=tmp_path)
    assert t2._mult[(6, 6)] == m
    assert t2.mult(RootVec(6, 6)) == m


def test_concurrent_queries_agree():
    table = MultTable(4)
    targets = [RootVec(s, t) for s in range(8, 14) for t in range(8, 14)]
    results: dict[int, list[int]] = {}

    def work(k):
        results[k] = [table.mult(v) for v in (targets if k % 2 else targets[::-1])]

    threads = [threading.Thread(target=work, args=(k,)) for k in range(4)]
    for th in threads:
        th.start()
    for th in threads:
        th.join()
    ref = [MultTable(4).mult(v) for v in targets]
    assert results[1] == results[3] == ref
    assert results[0] == results[2] == ref[::-1]
