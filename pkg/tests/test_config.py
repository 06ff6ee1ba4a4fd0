import pytest

from hallforge.config import THREADS_ENV, load_config
from hallforge.errors import OutOfRange


def test_repository_defaults(monkeypatch):
    monkeypatch.delenv(THREADS_ENV, raising=False)
    settings = load_config()
    assert settings.threads == 1
    assert settings.default_n_max("rlhp") == 7
    assert settings.default_n_max("errata") == 20
    assert settings.default_qmax("lhp") == 60
    assert settings.default_qmax("rlhp") is None
    assert settings.sample_count == 10_000


def test_partial_file_falls_back(tmp_path, monkeypatch):
    monkeypatch.delenv(THREADS_ENV, raising=False)
    path = tmp_path / "config.yaml"
    path.write_text("threads: 3\nsampling:\n  seed: 11\n", encoding="utf-8")
    settings = load_config(path)
    assert settings.threads == 3
    assert settings.seed == 11
    assert settings.default_n_max("rlhp") == settings.n_max == 5


def test_environment_overrides_threads(tmp_path, monkeypatch):
    path = tmp_path / "config.yaml"
    path.write_text("threads: 3\n", encoding="utf-8")
    monkeypatch.setenv(THREADS_ENV, "8")
    assert load_config(path).threads == 8


@pytest.mark.parametrize("text", ["threads: 0\n", "verify:\n  n_max: -1\n"])
def test_rejects_non_positive(tmp_path, monkeypatch, text):
    monkeypatch.delenv(THREADS_ENV, raising=False)
    path = tmp_path / "config.yaml"
    path.write_text(text, encoding="utf-8")
    with pytest.raises(OutOfRange):
        load_config(path)


def test_missing_explicit_file(tmp_path):
    with pytest.raises(FileNotFoundError):
        load_config(tmp_path / "absent.yaml")
