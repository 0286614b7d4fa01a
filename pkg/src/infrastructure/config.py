"""Application configuration management."""

from typing import Optional

from pydantic_settings import BaseSettings, SettingsConfigDict


class Config(BaseSettings):
    """Toolkit configuration with environment variable support.

    All values can be overridden via ``STEINBERG_``-prefixed environment
    variables (for example ``STEINBERG_MAX_CARRIER=65536`` makes M_4(B)
    reachable) or a local ``.env`` file.
    """

    # Exhaustive-search guards
    MAX_CARRIER: int = 4096
    MAX_MATRIX_N: int = 3
    MAX_VERTICES: int = 16
    MAX_GROUPOID_MORPHISMS: int = 64
    MAX_STEINBERG_MORPHISMS: int = 12
    MAX_SEMILATTICE: int = 3
    MAX_CONGRUENCE_LATTICE_CARRIER: int = 64

    # Randomized property runs
    SEED: int = 0
    PROPERTY_TRIALS: int = 200
    LAW_TRIALS: int = 1000
    PI_TRIALS: int = 500

    # Logging
    LOG_LEVEL: str = "WARNING"

    model_config = SettingsConfigDict(
        env_prefix="STEINBERG_",
        env_file=".env",
        case_sensitive=True,
        extra="ignore",
    )

    def carrier_bound(self, override: Optional[int] = None) -> int:
        """Get the carrier-size bound for exhaustive searches.

        Args:
            override: Explicit bound passed by a caller, if any.

        Returns:
            int: The bound to enforce.
        """
        return override if override is not None else self.MAX_CARRIER


_config_instance: Optional[Config] = None


def get_config() -> Config:
    """Get toolkit configuration singleton.

    Returns:
        Config: Configuration instance.
    """
    global _config_instance
    if _config_instance is None:
        _config_instance = Config()
    return _config_instance


def set_config(config: Optional[Config]) -> None:
    """Replace the configuration singleton (CLI flag overrides and tests).

    Args:
        config: New configuration, or None to reload from the environment.
    """
    global _config_instance
    _config_instance = config
