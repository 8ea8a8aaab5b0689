import importlib.util
import os
import subprocess
import sys
from fractions import Fraction
from math import gcd

import pytest

from heckeperiod import _backend, _pykernels


def brute_farey(n):
    vals = set()
    for v in range(n + 1):
        for u in range(-n, n + 1):
            if (u, v) != (0, 0):
                g = gcd(u, v)
                vals.add((u // g, v // g))

    def key(t):
        if t[1] == 0:
            return (1 if t[0] > 0 else -1, 0)
        return (0, Fraction(*t))

    return sorted(vals, key=key)


@pytest.mark.parametrize("n", range(1, 16))
def test_farey_pairs_match_enumeration(kernels, n):
    assert kernels.farey_pairs(n) == brute_farey(n)


def test_farey_pairs_rejects_level_zero(kernels):
    with pytest.raises(ValueError):
        kernels.farey_pairs(0)


def test_left_neighbor_paths_agree(kernels):
    for n in range(1, 30):
        seq = brute_farey(n)
        for i, (p, r) in enumerate(seq):
            if (p, r) == (-1, 0) or kernels.level_of(p, r) != n:
                continue
            assert kernels.left_neighbor_fast(p, r, n) == seq[i - 1]
            assert kernels.left_neighbor_scan(p, r, n) == seq[i - 1]


def test_plus_infinity_neighbour_at_positive_level(kernels):
    assert kernels.left_neighbor_fast(1, 0, 5) == (5, 1)
    assert kernels.left_neighbor_scan(1, 0, 5) == (5, 1)


def test_lns_pairs(kernels):
    assert kernels.lns_pairs(0, 1) == [(-1, 0), (0, 1)]
    assert kernels.lns_pairs(1, 2) == [(-1, 0), (0, 1), (1, 2)]
    assert kernels.lns_pairs(2, 3) == [(-1, 0), (0, 1), (1, 2), (2, 3)]
    assert kernels.lns_pairs(1, 0) == [(-1, 0), (0, 1), (1, 0)]
    with pytest.raises(ValueError):
        kernels.left_neighbor_pair(-1, 0)


@pytest.mark.parametrize("m", [1, 2, 3, 6, 12, 25])
def test_s_m_quads_against_box_search(kernels, m):
    box = sorted(
        (a, b, c, d)
        for a in range(1, m + 1)
        for c in range(a)
        for d in range(1, m + 2)
        for b in range(d)
        if a * d - b * c == m
    )
    assert kernels.s_m_quads(m) == box


def test_backends_agree_on_larger_inputs():
    mods = _backend.available_backends()
    if len(mods) < 2:
        pytest.skip("compiled kernels not built")
    fast, slow = mods
    assert fast.farey_pairs(300) == slow.farey_pairs(300)
    assert fast.s_m_quads(120) == slow.s_m_quads(120)
    for p, r in slow.farey_pairs(80):
        if r and 0 <= p < r:
            assert fast.lns_pairs(p, r) == slow.lns_pairs(p, r)


def test_compiled_overflow_promotes_to_python():
    mods = _backend.available_backends()
    if len(mods) < 2:
        pytest.skip("compiled kernels not built")
    fast = mods[0]
    big = (1 << 61) + 2  # coprime to 5; level * 5 leaves int64
    with pytest.raises(OverflowError):
        fast.left_neighbor_fast(big, 5, big)
    assert _backend.left_neighbor_fast(big, 5, big) == _pykernels.left_neighbor_fast(big, 5, big)
    huge = 1 << 70
    assert _backend.lns_pairs(1, huge) == [(-1, 0), (0, 1), (1, huge)]


def test_backend_name():
    assert _backend.BACKEND in ("compiled", "python")


def _backend_in_subprocess(env_value):
    env = dict(os.environ)
    env.pop("HECKEPERIOD_PURE_PYTHON", None)
    if env_value is not None:
        env["HECKEPERIOD_PURE_PYTHON"] = env_value
    out = subprocess.run(
        [sys.executable, "-c", "import heckeperiod; print(heckeperiod.BACKEND)"],
        capture_output=True, text=True, env=env, check=True,
    )
    return out.stdout.strip()


def test_pure_python_env_forces_fallback():
    assert _backend_in_subprocess("1") == "python"


def test_default_prefers_compiled():
    built = importlib.util.find_spec("heckeperiod._ckernels") is not None
    expected = "compiled" if built else "python"
    assert _backend_in_subprocess(None) == expected


def test_cli_output_identical_across_backends():
    cmd = [sys.executable, "-m", "heckeperiod", "hecke", "6", "5"]
    env = dict(os.environ, HECKEPERIOD_PURE_PYTHON="1")
    slow = subprocess.run(cmd, capture_output=True, env=env, check=True).stdout
    env.pop("HECKEPERIOD_PURE_PYTHON")
    fast = subprocess.run(cmd, capture_output=True, env=env, check=True).stdout
    assert slow == fast
