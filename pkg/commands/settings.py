"""Defaults for command-line runs, read from NETLAB_* variables and .env."""

from typing import Any, Dict, Optional

from pydantic import BaseModel, Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Every field can be overridden by the matching command-line flag."""

    model_config = SettingsConfigDict(env_prefix="NETLAB_", env_file=".env", extra="ignore")

    max_field_order: int = 2 ** 20
    budget: int = 200000
    jobs: int = 1
    seed: int = 0
    log_level: str = "WARNING"
    progress: bool = False
    waterhouse_exhaustive_limit: int = 20000
    waterhouse_samples: int = 20000


class RunConfig(BaseModel):
    """Resolved inputs of one command; the machine output depends on nothing else."""

    command: str
    field: Optional[Dict[str, int]] = None
    params: Dict[str, Any] = Field(default_factory=dict)
    input: Optional[str] = None
    output: Optional[str] = None
    json_output: bool = False
    seed: int = 0
    budget: int = 200000
    jobs: int = Field(default=1, ge=1)
    progress: bool = False
    log_level: str = "WARNING"
