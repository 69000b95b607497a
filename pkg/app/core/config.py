"""
Application configuration settings
"""

from typing import List

from pydantic import model_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Application settings"""

    # Application
    PROJECT_NAME: str = "Frobenius Stratification Toolkit"
    VERSION: str = "1.0.0"
    LOG_LEVEL: str = "WARNING"

    # Enumeration budget (lattice extensions per search)
    NODE_CAP: int = 10_000_000
    ENUMERATION_WORKERS: int = 1

    # Default batch verification grid
    GRID_P: List[int] = [2, 3, 5]
    GRID_G: List[int] = [2, 3]
    GRID_D_MIN: int = -3
    GRID_D_MAX: int = 3
    GRID_R_MAX: int = 4

    model_config = SettingsConfigDict(
        env_prefix="FROBSTRAT_",
        env_file=".env",
        case_sensitive=True,
        extra="ignore",
    )

    @model_validator(mode="after")
    def check_limits(self) -> "Settings":
        if self.NODE_CAP <= 0:
            raise ValueError("NODE_CAP must be positive")
        if self.ENUMERATION_WORKERS <= 0:
            raise ValueError("ENUMERATION_WORKERS must be positive")
        if not self.GRID_P or not self.GRID_G:
            raise ValueError("Batch grid needs at least one p and one g")
        if self.GRID_D_MIN > self.GRID_D_MAX:
            raise ValueError("GRID_D_MIN must not exceed GRID_D_MAX")
        if self.GRID_R_MAX < 1:
            raise ValueError("GRID_R_MAX must be at least 1")
        return self


def get_settings() -> Settings:
    """Build settings from the current environment"""
    return Settings()


# Global settings instance
settings = Settings()
