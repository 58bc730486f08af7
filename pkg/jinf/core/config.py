"""
JINF Configuration Management

This module handles all toolkit configuration using environment variables
and pydantic-settings for validation. Every setting has a default; library
calls take explicit overrides, so the settings only supply fallbacks.
"""

from pydantic_settings import BaseSettings
from pydantic import Field
from typing import Optional
from pathlib import Path


class Settings(BaseSettings):
    """Toolkit settings loaded from environment variables (prefix JINF_)."""

    # Application
    app_name: str = "JINF"
    app_version: str = "1.0.0"
    debug: bool = Field(default=False, description="Debug mode")
    log_level: str = Field(
        default="WARNING",
        description="Console log level (DEBUG when debug is set)"
    )
    log_file: Optional[Path] = Field(
        default=None,
        description="Optional rotating JSON log file"
    )

    # Algebra
    period_limit: int = Field(
        default=2 ** 16,
        description="Largest period produced by aligning two periods"
    )

    # Windows
    membership_window: int = Field(
        default=512,
        description="Membership window for pointwise set checks"
    )
    verify_window: int = Field(
        default=64,
        description="Minimum membership window used by restriction checks"
    )
    permutation_window: int = Field(
        default=1024,
        description="Pointwise window for permutation consistency checks"
    )

    # Random permutation generation
    random_max_modulus: int = Field(default=6, description="Largest modulus")
    random_max_offset: int = Field(default=3, description="Largest |offset|")
    random_max_patch: int = Field(default=8, description="Largest random patch support")
    generation_retries: int = Field(
        default=1000,
        description="Attempts before random generation gives up"
    )

    # Exactification search
    exactify_max_modulus: int = Field(default=8, description="Largest modulus tried")
    exactify_max_threshold: int = Field(default=32, description="Largest threshold tried")

    # Finite oracle
    aut_max_vertices: int = Field(
        default=40,
        description="Largest graph accepted by the automorphism search"
    )
    aut_max_nodes: int = Field(
        default=2_000_000,
        description="Search-node budget of the automorphism search"
    )

    # Verification suite
    suite_seed: int = Field(default=0, description="Default suite seed")
    suite_workers: int = Field(default=1, description="Concurrent suite checks")
    suite_regular_trials: int = Field(default=100, description="Regular round trips")
    suite_sigma_range: int = Field(default=128, description="Probed points per round trip")
    suite_base_trials: int = Field(default=20, description="Base independence trials")
    suite_base_range: int = Field(default=64, description="Probed points per base pair")
    suite_order_trials: int = Field(default=50, description="Order-preserving round trips")
    suite_preservation_trials: int = Field(
        default=200,
        description="Intersection/covering preservation inputs"
    )
    suite_kneser_pairs: int = Field(default=1000, description="Random Kneser pairs")
    suite_algebra_trials: int = Field(default=10_000, description="Random algebra checks")
    suite_permutation_trials: int = Field(default=100, description="Random permutations")
    suite_pushforward_trials: int = Field(
        default=10_000,
        description="Random push-forward exactness checks"
    )

    class Config:
        env_prefix = "JINF_"
        env_file = ".env"
        env_file_encoding = "utf-8"
        case_sensitive = False


# Create settings instance
settings = Settings()
