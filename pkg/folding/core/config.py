# folding/core/config.py

from typing import Optional

from pydantic import ConfigDict
from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    APP_NAME: Optional[str] = "folding"
    APP_VERSION: Optional[str] = "0.1.0"
    APP_ENV: Optional[str] = "production"
    LOG_LEVEL: str = "INFO"
    # GUARDS
    MAX_FIELD_ORDER: int = 2**20
    MAX_BIVARIATE_Q: int = 256
    MAX_UNIVARIATE_Q: int = 65536
    MAX_ORACLE_Q: int = 101
    # NUMERICS
    NUMERIC_DPS: int = 30
    NUMERIC_SEED: int = 20240101
    NUMERIC_TOLERANCE: float = 1e-8
    # SWEEP
    SWEEP_WORKERS: int = 1
    AUDIT_IMPLICATIONS: bool = False

    model_config = ConfigDict(env_file=".env", extra="ignore")


settings = Settings()
