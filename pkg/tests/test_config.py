import logging
import os

import pytest

from core.config import DEFAULT_MAX_N, REPO_ROOT, load_environment
from core.errors import ConfigError


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    for name in ("BCHLAB_MAX_N", "BCHLAB_LOG_LEVEL", "BCHLAB_GOLDEN_DIR"):
        monkeypatch.delenv(name, raising=False)


def test_defaults():
    settings = load_environment()
    assert settings.max_n == DEFAULT_MAX_N == 6
    assert settings.log_level == "WARNING"
    assert settings.golden_dir == REPO_ROOT / "golden"


def test_overrides(monkeypatch, tmp_path):
    monkeypatch.setenv("BCHLAB_MAX_N", "3")
    monkeypatch.setenv("BCHLAB_LOG_LEVEL", "debug")
    monkeypatch.setenv("BCHLAB_GOLDEN_DIR", str(tmp_path))
    settings = load_environment()
    assert settings.max_n == 3
    assert settings.log_level == "DEBUG"
    assert settings.golden_dir == tmp_path


@pytest.mark.parametrize("name, value", [
    ("BCHLAB_MAX_N", "six"),
    ("BCHLAB_MAX_N", "0"),
    ("BCHLAB_LOG_LEVEL", "LOUD"),
])
def test_invalid_values_raise_config_error(monkeypatch, name, value):
    monkeypatch.setenv(name, value)
    with pytest.raises(ConfigError):
        load_environment()


def test_missing_golden_dir_is_logged(monkeypatch, tmp_path, caplog):
    monkeypatch.setenv("BCHLAB_GOLDEN_DIR", str(tmp_path / "absent"))
    with caplog.at_level(logging.WARNING):
        load_environment()
    assert "does not exist" in caplog.text


def test_dotenv_file_is_read(tmp_path):
    env_file = tmp_path / ".env"
    env_file.write_text("BCHLAB_MAX_N=4\n")
    try:
        settings = load_environment(str(env_file))
    finally:
        os.environ.pop("BCHLAB_MAX_N", None)
    assert settings.max_n == 4
