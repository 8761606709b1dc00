"""
config 测试: δ 网格与线程数解析
"""

import pytest

from harmoniq.config import THREADS_ENV_VAR, delta_grid, resolve_threads
from harmoniq.exceptions import ValidationError


class TestDeltaGrid:
    """δ 网格"""

    def test_bounds_and_density(self):
        grid = delta_grid()
        assert grid[0] == pytest.approx(1e-1)
        assert grid[-1] == pytest.approx(1e-16)
        assert len(grid) == 15 * 60 + 1
        assert all(grid[:-1] > grid[1:])


class TestThreads:
    """线程数优先级"""

    def test_flag(self, monkeypatch):
        monkeypatch.delenv(THREADS_ENV_VAR, raising=False)
        assert resolve_threads(3) == 3

    def test_env_overrides_flag(self, monkeypatch):
        monkeypatch.setenv(THREADS_ENV_VAR, "2")
        assert resolve_threads(8) == 2

    def test_default_positive(self, monkeypatch):
        monkeypatch.delenv(THREADS_ENV_VAR, raising=False)
        assert resolve_threads() >= 1

    def test_invalid(self, monkeypatch):
        monkeypatch.setenv(THREADS_ENV_VAR, "x")
        with pytest.raises(ValidationError):
            resolve_threads()
        monkeypatch.delenv(THREADS_ENV_VAR)
        with pytest.raises(ValidationError):
            resolve_threads(0)
