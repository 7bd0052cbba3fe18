import os
import pathlib
import subprocess
import sys

import pytest

BUILD_DIR = pathlib.Path(os.environ.get("CTXLAB_BUILD_DIR", "build")).resolve()
SOURCE_DIR = pathlib.Path(
    os.environ.get("CTXLAB_SOURCE_DIR", pathlib.Path(__file__).parents[2])
).resolve()

sys.path.insert(0, str(BUILD_DIR))


@pytest.fixture(scope="session")
def ctx():
    return pytest.importorskip("_ctxlab")


@pytest.fixture(scope="session")
def cli():
    exe = BUILD_DIR / "ctxlab"
    if not exe.exists():
        pytest.skip("ctxlab binary not built")
    return exe


@pytest.fixture(scope="session")
def configs_dir():
    return SOURCE_DIR / "configs"


def run_cli(exe, *args, **kwargs):
    return subprocess.run(
        [str(exe), *map(str, args)], capture_output=True, text=True, **kwargs
    )
