from pathlib import Path

import pytest

from triplesym import cubic

FIXTURES = Path(__file__).parent / "fixtures"
THETA_FILE = FIXTURES / "cubic_theta.json"


@pytest.fixture(autouse=True)
def _private_cache(tmp_path, monkeypatch):
    # never touch the user's real beta cache
    monkeypatch.setenv("TRIPLESYM_BETA_CACHE", str(tmp_path / "beta_cache.json"))


@pytest.fixture(scope="session")
def thetas():
    """{(pi1, pi2): ThetaElement} from the stored search results."""
    return {(p1, p2): th for p1, p2, th in cubic.load_theta_file(THETA_FILE)}
