import json
from fractions import Fraction
from importlib import resources

import numpy as np
import pytest

from _util import fm, one, s, scalar
from recip.network import (
    NetworkData, NetworkError, element_bounds, network_realization, network_tilde, omega,
    validate_network,
)
from recip.polymat import PolyMatrix
from recip.realization import eliminate_state, transfer_function
from recip.serialize import load_network


def shipped(name):
    text = resources.files("recip").joinpath("data", name).read_text()
    return load_network(json.loads(text), name)


def cap(**kw):
    base = dict(M11=[[0]], M12=[[1]], M21=[[-1]], M22=[[0]], M23=[[]], sigmaE=[1], sigma1=[1],
                sigma2=[], lambda1=[1], lambda2=[])
    base.update(kw)
    return NetworkData(**base)


def test_capacitor_realization():
    sr = network_realization(shipped("capacitor_network.json"))
    ss = sr.ss
    assert (ss.A, ss.B, ss.C, ss.D, sr.sigma) == ([[0.0]], [[1.0]], [[1.0]], [[0.0]], (1,))
    h = transfer_function(network_tilde(shipped("capacitor_network.json")))
    assert h.P[0, 0] * s == h.Q[0, 0]


def test_inductor_realization():
    data = shipped("inductor_network.json")
    sr = network_realization(data)
    assert sr.sigma == (-1,) and sr.ss.A == [[0.0]]
    assert sr.ss.B[0][0] == -sr.ss.C[0][0]
    h = transfer_function(network_tilde(data))
    assert h.P[0, 0] * s == -h.Q[0, 0]


def test_resistor_network():
    data = shipped("resistor_network.json")
    sr = network_realization(data)
    assert sr.ss.d == 0 and sr.ss.D == [[5.0]]


def test_validation_errors():
    with pytest.raises(NetworkError) as exc:
        validate_network(NetworkData(
            M11=[[0]], M12=[[1, 0]], M21=[[-1], [0]], M22=[[0, 1], [0, 0]], M23=[[], []],
            sigmaE=[1], sigma1=[1, 1], sigma2=[], lambda1=[1, 1], lambda2=[]))
    assert exc.value.relation == "M22*sigma1 symmetric"
    with pytest.raises(NetworkError):
        validate_network(cap(M21=[[1]]))
    with pytest.raises(NetworkError):
        validate_network(cap(lambda1=[0]))
    with pytest.raises(NetworkError):
        validate_network(cap(M11=[[0, 1], [2, 0]], M12=[[1], [0]], M21=[[-1, 0]], sigmaE=[1, 1]))


def test_omega_examples():
    Om, half = omega(cap())
    assert Om == fm([[1]]) and np.allclose(half, [[1]])
    data = cap(M23=[[1]], sigma2=[1], lambda1=[4], lambda2=[5])
    Om, half = omega(data)
    assert Om == fm([[9]]) and abs(half[0, 0] - 3) < 1e-12


def test_omega_commutes_with_sigma():
    data = shipped("mixed_network.json")
    Om, half = omega(data)
    S = np.diag(data.sigma1).astype(float)
    assert np.abs(half @ S - S @ half).max() < 1e-10
    assert np.allclose(half @ half, np.array(Om, dtype=float))


def test_bounds_examples():
    r = element_bounds(scalar(one), scalar(s))
    assert (r.min_capacitors, r.min_inductors) == (1, 0)
    r = element_bounds(scalar(s), scalar(one))
    assert (r.min_capacitors, r.min_inductors) == (0, 1)
    r = element_bounds(scalar(s + 1), scalar(s * s + s))
    assert (r.min_capacitors, r.min_inductors, r.rlctg_storage_count) == (2, 1, 2)
    assert r.to_json()["minCapacitors"] == 2


def test_bounds_errors():
    with pytest.raises(ValueError):
        element_bounds(PolyMatrix([[1, 0]]), PolyMatrix([[1, 0]]))
    with pytest.raises(ValueError):
        element_bounds(PolyMatrix([[s, 0], [0, 0]]), PolyMatrix([[1, 0], [0, 0]]))
    with pytest.raises(ValueError):
        element_bounds(PolyMatrix([[0, 1], [0, 0]]), PolyMatrix.identity(2))


@pytest.mark.parametrize("name", ["capacitor_network.json", "inductor_network.json",
                                  "resistor_network.json", "mixed_network.json"])
def test_shipped_networks_respect_bounds(name):
    data = shipped(name)
    sr = network_realization(data)
    assert sr.even == sum(1 for x in data.sigma1 if x == 1)
    assert sr.odd == sum(1 for x in data.sigma1 if x == -1)
    h = eliminate_state(network_tilde(data))
    b = element_bounds(h.P, h.Q)
    assert sr.even >= b.min_capacitors and sr.odd >= b.min_inductors
    caps, inds = data.element_counts()
    assert caps >= b.min_capacitors and inds >= b.min_inductors


@pytest.mark.parametrize("c", [Fraction(1, 3), 2, 7])
def test_scaling_invariance(c):
    data = shipped("mixed_network.json")
    scaled = data.scaled(c)
    assert network_realization(scaled).sigma == network_realization(data).sigma
    h0 = eliminate_state(network_tilde(data))
    h1 = eliminate_state(network_tilde(scaled))
    b0, b1 = element_bounds(h0.P, h0.Q), element_bounds(h1.P, h1.Q)
    assert (b0.min_capacitors, b0.min_inductors) == (b1.min_capacitors, b1.min_inductors)
