"""Run every ``$ `` command listed in the README's command-line section."""
import os
import pathlib
import shutil
import subprocess
import sys

import pytest

README = pathlib.Path(__file__).resolve().parents[1] / "README.md"


def readme_commands():
    return [line[2:] for line in README.read_text().splitlines() if line.startswith("$ ")]


def test_readme_has_examples():
    assert len(readme_commands()) >= 10


@pytest.mark.skipif(shutil.which("bash") is None, reason="needs bash")
def test_readme_examples_run(tmp_path):
    bindir = pathlib.Path(sys.executable).parent
    env = dict(os.environ, PATH=f"{bindir}{os.pathsep}{os.environ.get('PATH', '')}")
    for cmd in readme_commands():
        cmd = cmd.replace("rectcum ", f"{sys.executable} -m rectcum.cli ", 1) if cmd.startswith("rectcum") else cmd
        res = subprocess.run(["bash", "-c", cmd], cwd=tmp_path, capture_output=True, text=True, env=env)
        assert res.returncode == 0, (cmd, res.stderr)
    assert (tmp_path / "heat.csv").read_text().startswith("d,n,q,index,value,limit,abs_err\n")
