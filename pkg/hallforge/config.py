"""
Defaults from config.yaml, with HALLFORGE_THREADS on top.
"""

import logging
import os
from dataclasses import dataclass, field
from pathlib import Path

import yaml

from .errors import OutOfRange


logger = logging.getLogger(__name__)

DEFAULT_CONFIG_PATH = Path(__file__).resolve().parent.parent / "config.yaml"
THREADS_ENV = "HALLFORGE_THREADS"


@dataclass(frozen=True)
class Settings:
    threads: int = 1
    n_max: int = 5
    # identity name -> default qmax / n_max
    qmax: dict = field(default_factory=dict)
    grid: dict = field(default_factory=dict)
    sample_count: int = 10_000
    seed: int = 0

    def default_qmax(self, identity: str) -> int | None:
        return self.qmax.get(identity)

    def default_n_max(self, identity: str) -> int:
        return self.grid.get(identity, self.n_max)


def _positive_int(name: str, value) -> int:
    try:
        number = int(value)
    except (TypeError, ValueError):
        raise OutOfRange(name, value, "a positive integer") from None
    if number < 1:
        raise OutOfRange(name, value, "a positive integer")
    return number


def load_config(path: str | Path | None = None) -> Settings:
    """
    Read config.yaml (or the given file) over the built-in defaults.

    A missing default file is not an error; a missing explicit file is.
    """
    config_path = Path(path) if path is not None else DEFAULT_CONFIG_PATH
    data = {}
    if config_path.exists():
        with open(config_path, encoding="utf-8") as f:
            data = yaml.safe_load(f) or {}
        logger.debug("config loaded from %s", config_path)
    elif path is not None:
        raise FileNotFoundError(f"config file not found: {config_path}")

    verify = data.get("verify", {}) or {}
    sampling = data.get("sampling", {}) or {}
    threads = _positive_int("threads", data.get("threads", 1))

    env_threads = os.environ.get(THREADS_ENV)
    if env_threads is not None:
        threads = _positive_int(THREADS_ENV, env_threads)

    return Settings(
        threads=threads,
        n_max=_positive_int("n_max", verify.get("n_max", 5)),
        qmax={name: int(v) for name, v in (verify.get("qmax", {}) or {}).items()},
        grid={name: int(v) for name, v in (verify.get("grid", {}) or {}).items()},
        sample_count=int(sampling.get("samples", 10_000)),
        seed=int(sampling.get("seed", 0)),
    )
