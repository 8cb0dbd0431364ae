import math
from collections import Counter

import numpy as np
import pytest
from hypothesis import given, strategies as st

from zetaexplicit.arith import prime_count, prime_count_in_ap
from zetaexplicit.dirichlet import (
    APApproxParams,
    approximate_pi_ap,
    c_bias,
    characters_mod,
    default_catalogs,
    e_term,
)
from zetaexplicit.errors import CapacityError, DomainError
from zetaexplicit.zeros import default_l_catalog


def _phi(q):
    return sum(1 for a in range(1, q + 1) if math.gcd(a, q) == 1)


def test_small_tables():
    assert np.array_equal(characters_mod(3).values(1), [0, 1, -1])
    assert np.array_equal(characters_mod(4).values(1), [0, 1, 0, -1])
    t = characters_mod(10)
    assert t.generators == (7,)
    assert [t.values(1)[a] for a in (1, 7, 9, 3)] == [1, 1j, -1, -1j]
    assert t.is_real(2) and not t.is_real(1) and t.conjugate_index(1) == 3
    assert t.conductor(2) == 5 and t.conductor(0) == 1


@pytest.mark.parametrize("q", range(1, 25))
def test_orthogonality_exact(q):
    t = characters_mod(q)
    phi = _phi(q)
    assert len(t) == t.phi == phi
    units = [a for a in range(q) if math.gcd(a, q) == 1]
    E = t.exponents
    for i in range(len(t)):
        for j in range(len(t)):
            # chi_i conj(chi_j) has exponent table e_i - e_j; the sum over units vanishes
            # exactly when that table takes each value of a nontrivial subgroup equally often
            diff = Counter(int((E[i, a] - E[j, a]) % t.L) for a in units)
            if i == j:
                assert diff == Counter({0: phi})
            else:
                assert len(diff) > 1 and len(set(diff.values())) == 1
    V = np.array(t.characters)
    assert np.allclose(V @ V.conj().T, phi * np.eye(len(t)), atol=1e-12)
    # second orthogonality: sum over characters of chi(a) conj chi(b)
    G = V.T.conj() @ V
    for a in units:
        assert np.allclose(G[a, units], [phi if b == a else 0 for b in units], atol=1e-12)


def test_c_bias_table():
    assert (c_bias(3, 1), c_bias(3, 2)) == (1, -1)
    assert (c_bias(4, 1), c_bias(4, 3)) == (1, -1)
    assert [c_bias(10, a) for a in (1, 3, 7, 9)] == [1, -1, -1, 1]
    assert c_bias(8, 1) == 3 and c_bias(8, 3) == -1
    with pytest.raises(DomainError):
        c_bias(10, 5)


@given(st.integers(2, 200))
def test_bias_sums_to_phi(q):
    units = [a for a in range(1, q) if math.gcd(a, q) == 1] or [1]
    assert sum(1 + c_bias(q, a) for a in units) == _phi(q)


def test_e_term_basics():
    cat = default_l_catalog(3, 1)
    assert e_term(50.0, cat, 0) == 0
    assert np.array_equal(e_term(np.array([5.0, 6.0]), cat, 0), [0, 0])
    # real character: zeros symmetric about the real axis, so E is real
    v = e_term(np.linspace(3, 200, 40), cat, 100)
    assert np.max(np.abs(v.imag)) < 1e-12
    # at x = 1 every term is 1 / rho
    t = cat.signed_ordinates(20)
    assert abs(e_term(1.0, cat, 20) - np.sum(1 / (0.5 + 1j * t))) < 1e-13
    with pytest.raises(CapacityError):
        e_term(10.0, cat, 101)


def test_n_zero_path_formula():
    x = np.array([10.0, 50.0, 150.5])
    for q, a in ((3, 1), (3, 2), (10, 7)):
        p = APApproxParams(q, a)
        phi = _phi(q)
        pi = np.array([prime_count(v) for v in x])
        expected = pi / phi - c_bias(q, a) * np.sqrt(x) / (phi * np.log(x)) + p.resolved_offset
        assert np.allclose(approximate_pi_ap(p, x), expected, rtol=1e-14, atol=1e-14)
    assert APApproxParams(3, 2, offset=0.25).resolved_offset == 0.25
    with pytest.raises(DomainError):
        APApproxParams(10, 4)
    with pytest.raises(DomainError):
        approximate_pi_ap(APApproxParams(3, 1), 2.0)


def test_bias_at_100():
    # the non-residue class leads the race
    assert prime_count_in_ap(100, 3, 2) > prime_count_in_ap(100, 3, 1)
    assert prime_count_in_ap(100, 4, 3) > prime_count_in_ap(100, 4, 1)
    lead = approximate_pi_ap(APApproxParams(3, 2), 100.0)
    lag = approximate_pi_ap(APApproxParams(3, 1), 100.0)
    assert lead > lag
    assert abs(lead - 13) < 0.5 and abs(lag - 11) < 0.5


def test_missing_catalog():
    with pytest.raises(CapacityError):
        approximate_pi_ap(APApproxParams(3, 1, 10), 50.0, catalogs={})


@pytest.mark.parametrize("q,a", [(3, 1), (3, 2), (4, 1), (4, 3)])
def test_zeros_improve_the_fit(q, a):
    xs = np.arange(10.0, 200.01, 0.5)
    exact = np.array([prime_count_in_ap(x, q, a) for x in xs])
    cats = default_catalogs(q)
    e0 = np.mean(np.abs(approximate_pi_ap(APApproxParams(q, a, 0), xs) - exact))
    e50 = np.mean(np.abs(approximate_pi_ap(APApproxParams(q, a, 50), xs, cats) - exact))
    assert e50 < e0
