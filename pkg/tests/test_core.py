"""Tests for cilab._core: configuration, enable/disable, levels, caps."""

from cilab import _core


def test_enable_disable():
    _core.disable()
    assert not _core.is_enabled()
    _core.enable()
    assert _core.is_enabled()


def test_configure_level():
    _core.configure(level="error")
    assert _core._level == _core.LEVEL_ERROR
    _core.configure(level="debug")
    assert _core._level == _core.LEVEL_DEBUG


def test_configure_tag_prefix():
    _core.configure(tag_prefix="ALG")
    assert _core.get_tag_prefix() == "ALG"


def test_should_emit_respects_level():
    _core.enable()
    _core.configure(level="warn")
    assert not _core.should_emit("search")
    assert not _core.should_emit("span")
    assert _core.should_emit("check")
    assert _core.should_emit("error")
    _core.configure(level="debug")
    assert _core.should_emit("node")


def test_should_emit_when_disabled():
    _core.disable()
    assert not _core.should_emit("info")
    assert not _core.should_emit("error")


def test_tag_levels_mapping():
    assert _core.TAG_LEVELS["search"] == _core.LEVEL_DEBUG
    assert _core.TAG_LEVELS["enumerate"] == _core.LEVEL_INFO
    assert _core.TAG_LEVELS["check"] == _core.LEVEL_WARN
    assert _core.TAG_LEVELS["error"] == _core.LEVEL_ERROR


def test_env_detection(monkeypatch):
    monkeypatch.setenv("CILAB", "true")
    assert _core._detect_enabled() is True

    monkeypatch.setenv("CILAB", "off")
    assert _core._detect_enabled() is False

    monkeypatch.delenv("CILAB")
    assert _core._detect_enabled() is False


def test_level_detection(monkeypatch):
    monkeypatch.setenv("CILAB_LEVEL", "warn")
    assert _core._detect_level() == _core.LEVEL_WARN

    monkeypatch.setenv("CILAB_LEVEL", "invalid")
    assert _core._detect_level() == _core.LEVEL_DEBUG


class TestCaps:
    def test_defaults(self):
        assert _core.max_order() == 16
        assert _core.propagate_max() == 6
        assert _core.canonical_max() == 7
        assert _core.random_max() == 9
        assert _core.ORACLE_MAX_ORDER == 3

    def test_env_overrides(self, monkeypatch):
        monkeypatch.setenv("CILAB_PROPAGATE_MAX", "4")
        monkeypatch.setenv("CILAB_RANDOM_MAX", "12")
        assert _core.propagate_max() == 4
        assert _core.random_max() == 12

    def test_bad_env_falls_back(self, monkeypatch):
        monkeypatch.setenv("CILAB_MAX_ORDER", "lots")
        assert _core.max_order() == 16
        monkeypatch.setenv("CILAB_MAX_ORDER", "-3")
        assert _core.max_order() == 16

    def test_configure_beats_env(self, monkeypatch):
        monkeypatch.setenv("CILAB_CANONICAL_MAX", "5")
        _core.configure(canonical_max=3)
        assert _core.canonical_max() == 3

    def test_reset_forgets_overrides(self):
        _core.configure(max_order=4, debug_checks=True)
        _core.reset()
        assert _core.max_order() == 16
        assert _core.debug_checks() is False


def test_debug_checks_from_env(monkeypatch):
    monkeypatch.setenv("CILAB_DEBUG", "1")
    assert _core.debug_checks() is True


def test_default_workers(monkeypatch):
    assert _core.default_workers() == 1
    monkeypatch.setenv("WORKERS", "3")
    assert _core.default_workers() == 3
