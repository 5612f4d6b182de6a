"""
Runtime settings: budgets, sampling and logging defaults, optionally overlaid from YAML
"""
import logging
import os
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, Optional, Union

import yaml

logger = logging.getLogger(__name__)

CONFIG_ENV_VAR = "ULTRATREE_CONFIG"
DEFAULT_CONFIG_FILE = "ultratree.yaml"


@dataclass
class Settings:
    """Settings shared by the CLI and budgeted library calls"""
    budget_vertices: int = 10_000
    budget_depth: int = 1_000
    uncountable_sample: int = 8
    log_level: str = "WARNING"

    def __post_init__(self):
        if self.budget_vertices < 1 or self.budget_depth < 1:
            raise ValueError("budget bounds must be >= 1")
        if self.uncountable_sample < 1:
            raise ValueError("uncountable_sample must be >= 1")
        if logging.getLevelName(self.log_level.upper()) == f"Level {self.log_level.upper()}":
            raise ValueError(f"unknown logging level: {self.log_level}")
        self.log_level = self.log_level.upper()

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "Settings":
        """Overlay the known sections of a parsed YAML document on the defaults"""
        known = {"budget", "materialize", "logging"}
        for key in data:
            if key not in known:
                logger.warning(f"Ignoring unknown configuration section: {key}")

        budget = data.get("budget") or {}
        materialize = data.get("materialize") or {}
        log_section = data.get("logging") or {}
        defaults = cls()
        return cls(
            budget_vertices=int(budget.get("vertices", defaults.budget_vertices)),
            budget_depth=int(budget.get("depth", defaults.budget_depth)),
            uncountable_sample=int(materialize.get("uncountable_sample",
                                                   defaults.uncountable_sample)),
            log_level=str(log_section.get("level", defaults.log_level)),
        )

    @classmethod
    def from_yaml(cls, path: Union[str, Path]) -> "Settings":
        """Load settings from a YAML file"""
        path = Path(path)
        if not path.exists():
            raise FileNotFoundError(f"Configuration file not found: {path}")

        with open(path, "r", encoding="utf-8") as f:
            data = yaml.safe_load(f) or {}
        if not isinstance(data, dict):
            raise ValueError(f"Configuration root must be a mapping: {path}")

        logger.debug(f"Loaded settings from {path}")
        return cls.from_dict(data)


def load_settings(path: Optional[Union[str, Path]] = None) -> Settings:
    """Resolve settings from an explicit path, the environment, or the working directory"""
    if path is not None:
        return Settings.from_yaml(path)

    env_path = os.environ.get(CONFIG_ENV_VAR)
    if env_path:
        return Settings.from_yaml(env_path)

    local = Path(DEFAULT_CONFIG_FILE)
    if local.exists():
        return Settings.from_yaml(local)

    return Settings()
