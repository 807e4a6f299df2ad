import os
import random
import subprocess
import sys
from fractions import Fraction

import pytest

from flagcsm import _kernels_py, kernels

try:
    from flagcsm import _kernels as _compiled
except ImportError:
    _compiled = None


def _rand(rng, n, big=False, frac=False):
    out = {}
    for _ in range(n):
        key = sum(rng.randint(0, 5) << (8 * i) for i in range(4))
        c = rng.randint(-9, 9) or 1
        if big:
            c *= 10**25
        if frac:
            c = Fraction(c, rng.randint(1, 4))
        out[key] = c
    return out


@pytest.mark.skipif(_compiled is None, reason="compiled extension not built")
@pytest.mark.parametrize("mode", ["small", "big", "frac"])
def test_compiled_matches_python(mode):
    rng = random.Random(7)
    for _ in range(30):
        a = _rand(rng, rng.randint(0, 12), mode == "big", mode == "frac")
        b = _rand(rng, rng.randint(0, 12))
        acc = _rand(rng, 5)
        assert _compiled.mul(a, b) == _kernels_py.mul(a, b)
        x, y = dict(acc), dict(acc)
        _compiled.addmul(x, a, b)
        _kernels_py.addmul(y, a, b)
        assert x == y
        pairs = [(_rand(rng, 4, mode == "big"), _rand(rng, 4)) for _ in range(5)]
        assert _compiled.dot(pairs) == _kernels_py.dot(pairs)


@pytest.mark.skipif(_compiled is None, reason="compiled extension not built")
def test_compiled_overflow_guard():
    big = 2**40
    a = {0: big, 1: -big}
    b = {0: big, 1: big}
    assert _compiled.mul(a, b) == _kernels_py.mul(a, b) == {0: big * big, 2: -big * big}
    assert _compiled.dot([(a, b)] * 4) == _kernels_py.dot([(a, b)] * 4)


def test_backend_selection_env():
    env = dict(os.environ, FLAGCSM_PURE_PYTHON="1")
    out = subprocess.run(
        [sys.executable, "-c", "from flagcsm import kernels; print(kernels.BACKEND)"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "python"
    assert kernels.BACKEND in ("python", "cython")
