from __future__ import annotations

import pytest

from euler_forge import build_euler_cache


@pytest.fixture(scope="session")
def cache600():
    """One shared exact table; every consumer treats it as read-only."""
    return build_euler_cache(600)


@pytest.fixture(scope="session")
def cache80():
    return build_euler_cache(80)
