"""Runtime configuration from ``CONTACT_*`` environment variables or ``.env``."""

from functools import lru_cache

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Numerical defaults shared by all modules.

    Every value can be overridden through an environment variable, e.g.
    ``CONTACT_ATOL=1e-12`` or ``CONTACT_FIXED_POINT_GRID=61``.
    """

    model_config = SettingsConfigDict(
        env_prefix="CONTACT_", env_file=".env", extra="ignore"
    )

    # Integrator
    atol: float = Field(default=1e-10, gt=0)
    rtol: float = Field(default=1e-9, gt=0)
    batch_size: int = Field(default=2048, ge=1)

    # Differentials
    pullback_step: float = Field(default=1e-5, gt=0)
    newton_step: float = Field(default=1e-6, gt=0)
    newton_max_iter: int = Field(default=30, ge=1)

    # Root finding and spectra
    fixed_point_tol: float = Field(default=1e-8, gt=0)
    translated_point_tol: float = Field(default=1e-7, gt=0)
    cluster_tol: float = Field(default=1e-3, gt=0)
    fixed_point_grid: int = Field(default=41, ge=3)
    translated_point_grid: int = Field(default=31, ge=3)
    circle_grid: int = Field(default=16, ge=2)
    search_inflation: float = Field(default=0.2, ge=0)
    max_grid_points: int = Field(default=200_000, ge=1)

    # Sup-norm estimation
    mesh: float = Field(default=0.02, gt=0)
    min_points_per_axis: int = Field(default=5, ge=2)
    lipschitz_safety: float = Field(default=1.5, ge=1)
    leakage_tol: float = Field(default=1e-9, gt=0)

    # Experiments
    seed: int = Field(default=0, ge=0)
    n: int = Field(default=1, ge=1)
    max_concurrent_experiments: int = Field(default=4, ge=1)
    retry_count: int = Field(default=2, ge=1)
    log_level: str = "INFO"


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    """Return the process-wide settings instance."""
    return Settings()
