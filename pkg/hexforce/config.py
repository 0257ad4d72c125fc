"""Runtime configuration loaded from the environment and an optional .env file"""
from functools import lru_cache

from pydantic import PositiveInt
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Caps and defaults for brute-force and oracle runs.

    Every field can be overridden with a ``HEXFORCE_`` prefixed environment
    variable, e.g. ``HEXFORCE_ORACLE_MAX_N=5``.
    """

    model_config = SettingsConfigDict(
        env_prefix="HEXFORCE_",
        env_file=".env",
        extra="ignore",
    )

    # Largest chain length for each route in `validate`
    brute_forcing_max_n: PositiveInt = 3
    brute_antiforcing_max_n: PositiveInt = 2
    oracle_max_n: PositiveInt = 6
    spectrum_oracle_max_n: PositiveInt = 4
    identity_max_n: PositiveInt = 20
    arithmetic_max_n: PositiveInt = 40

    # Refuse definition-level polynomials beyond these sizes
    brute_forcing_max_matchings: PositiveInt = 250
    brute_antiforcing_max_matchings: PositiveInt = 40
    brute_antiforcing_max_width: PositiveInt = 25

    witness_sample_size: PositiveInt = 100
    random_seed: int = 2024
    log_level: str = "WARNING"


@lru_cache
def get_settings() -> Settings:
    """Process-wide settings instance"""
    return Settings()
