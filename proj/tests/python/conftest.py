import os
import shutil
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parents[2]


@pytest.fixture(scope="session")
def cli():
    exe = os.environ.get("HEPS_CLI") or shutil.which("heps")
    if not exe:
        for cand in (ROOT / "build" / "tools" / "heps",):
            if cand.exists():
                exe = str(cand)
    if not exe:
        pytest.skip("heps executable not found (set HEPS_CLI)")
    return exe


@pytest.fixture(scope="session")
def schema_dir():
    return Path(os.environ.get("HEPS_SCHEMA_DIR", ROOT / "docs" / "schemas"))
