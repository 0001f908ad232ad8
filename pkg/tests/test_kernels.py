import os
import subprocess
import sys

import pytest

from rectcum import kernels
from rectcum.kernels import backends

MODS = backends()
BACKENDS = sorted(MODS)


def test_python_backend_always_available():
    assert "python" in MODS


@pytest.mark.parametrize("name", BACKENDS)
@pytest.mark.parametrize("n", range(1, 9))
def test_set_partitions_are_bell(name, n):
    bell = [1, 1, 2, 5, 15, 52, 203, 877, 4140]
    assert len(MODS[name].set_partition_rgs(n)) == bell[n]


@pytest.mark.skipif(len(MODS) < 2, reason="compiled extension not built")
@pytest.mark.parametrize("n", range(1, 11))
def test_backend_parity(n):
    py, cy = MODS["python"], MODS["cython"]
    assert [tuple(x) for x in py.set_partition_rgs(n)] == [tuple(x) for x in cy.set_partition_rgs(n)]
    if n % 2 == 0:
        ev = [tuple(x) for x in py.even_partition_rgs(n)]
        assert ev == [tuple(x) for x in cy.even_partition_rgs(n)]
        assert [py.rgs_is_noncrossing(x) for x in ev] == [cy.rgs_is_noncrossing(x) for x in ev]
        paths = [tuple(x) for x in py.odd_luk_rises(n)]
        assert paths == [tuple(x) for x in cy.odd_luk_rises(n)]
        assert [tuple(py.luk_to_rgs(p)) for p in paths] == [tuple(cy.luk_to_rgs(p)) for p in paths]


@pytest.mark.parametrize("name", BACKENDS)
def test_invalid_path_rejected(name):
    with pytest.raises(ValueError):
        MODS[name].luk_to_rgs((-1, 1))


def test_env_var_forces_fallback():
    env = dict(os.environ, RECTCUM_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", "import rectcum.kernels as k; print(k.BACKEND)"],
                         capture_output=True, text=True, env=env, check=True)
    assert out.stdout.strip() == "python"


def test_backend_name():
    assert kernels.BACKEND in ("python", "cython")


def test_verify_passes_on_python_fallback():
    env = dict(os.environ, RECTCUM_PURE_PYTHON="1")
    res = subprocess.run([sys.executable, "-m", "rectcum.cli", "verify"], capture_output=True, text=True, env=env)
    assert res.returncode == 0, res.stdout + res.stderr
