# acx/acx/config.py

from __future__ import annotations

from dataclasses import dataclass, fields
from typing import Literal, TypedDict

from .logger_utils import logger

__all__ = [
    "DEFAULT_PROVER_CONFIG",
    "ProverConfig",
    "_ProverConfigInternal",
    "ProverConfigManager",
    "THEORY_NAMES",
    "validate_typeddict_completeness",
]

THEORY_NAMES = ("empty", "lia")


# Public TypedDict for user type hints
class ProverConfig(TypedDict, total=False):
    """Typed configuration for a prover run."""
    # Theory Parameters
    theory: Literal["empty", "lia"]
    name_constants: bool

    # Engine Budgets
    inference_budget: int
    normal_form_budget: int

    # Diagnostics
    record_trace: bool
    debug_checks: bool

    # Oracle
    oracle_bound: int
    oracle_max_terms: int

    # Benchmarks
    bench_workers: int


@dataclass
class _ProverConfigInternal:
    """Complete configuration for one prover.

    The theory and the constant-naming policy shape the ordering of every
    K constant, so both are locked as soon as a completion run starts.
    """

    # ========================================
    # THEORY - Parameters
    # ========================================
    theory: str = "empty"
    name_constants: bool = True  # declared constants become K constants in declaration order

    # ========================================
    # ENGINE - Budgets
    # ========================================
    inference_budget: int = 1_000_000
    normal_form_budget: int = 100_000

    # ========================================
    # DIAGNOSTICS
    # ========================================
    record_trace: bool = True
    debug_checks: bool = False  # asserts the ordering contracts on every solve and rewrite

    # ========================================
    # ORACLE - Bounded saturation
    # ========================================
    oracle_bound: int = 10
    oracle_max_terms: int = 4000

    # ========================================
    # BENCHMARKS
    # ========================================
    bench_workers: int = 1

    @classmethod
    def get_critical_params(cls) -> set[str]:
        """Return set of parameters that become immutable once completion starts."""
        return {"theory", "name_constants"}

    _is_locked: bool = False

    def __setattr__(self, name, value):
        critical_params = self.get_critical_params()
        if (name in critical_params and
                hasattr(self, "_is_locked") and
                self._is_locked and
                hasattr(self, name) and
                getattr(self, name) != value):
            logger.warning(
                f"Cannot change {name} after completion has started. "
                "Theory parameters must remain consistent throughout a run."
            )
            return

        value = _validated(name, value)
        super().__setattr__(name, value)

    def __post_init__(self):
        """Validate and auto-correct values with warnings."""
        validate_typeddict_completeness()
        for f in fields(self):
            if f.name.startswith("_"):
                continue
            current = getattr(self, f.name)
            corrected = _validated(f.name, current)
            if corrected is not current:
                object.__setattr__(self, f.name, corrected)

    def lock(self) -> None:
        object.__setattr__(self, "_is_locked", True)

    def copy(self) -> "_ProverConfigInternal":
        values = {f.name: getattr(self, f.name) for f in fields(self) if not f.name.startswith("_")}
        return _ProverConfigInternal(**values)


def _validated(name: str, value):
    if name == "theory" and value not in THEORY_NAMES:
        logger.warning(f"theory must be one of {THEORY_NAMES}, auto-correcting to 'empty'")
        return "empty"
    if name in ("inference_budget", "normal_form_budget", "oracle_max_terms") and value < 1:
        logger.warning(f"{name} must be >= 1, auto-correcting to 1")
        return 1
    if name == "oracle_bound" and value < 1:
        logger.warning("oracle_bound must be >= 1, auto-correcting to 1")
        return 1
    if name == "bench_workers" and value < 1:
        logger.warning("bench_workers must be >= 1, auto-correcting to 1")
        return 1
    return value


def _get_dataclass_fields(cls) -> set[str]:
    """Extract all field names from a dataclass."""
    return {field.name for field in fields(cls)}


def _get_typeddict_fields(cls) -> set[str]:
    """Extract all field names from a TypedDict."""
    return set(cls.__annotations__.keys())


def validate_typeddict_completeness() -> None:
    """Validate that ProverConfig TypedDict includes all _ProverConfigInternal fields."""
    dataclass_fields = _get_dataclass_fields(_ProverConfigInternal)
    typeddict_fields = _get_typeddict_fields(ProverConfig)

    public_dataclass_fields = {f for f in dataclass_fields if not f.startswith("_")}

    missing_fields = public_dataclass_fields - typeddict_fields
    if missing_fields:
        raise AttributeError(
            f"ProverConfig TypedDict missing {len(missing_fields)} fields from _ProverConfigInternal: "
            f"{sorted(missing_fields)}. Add these fields to ensure users can modify all parameters."
        )


class ProverConfigManager:
    """Manages configuration for one prover instance."""

    def __init__(self, config: _ProverConfigInternal | None = None):
        self.config = config if config is not None else DEFAULT_PROVER_CONFIG.copy()

    def apply_config(self, user_config: ProverConfig, is_locked: bool = False) -> None:
        """Apply typed config with run-lock protection."""
        critical_params = self.config.get_critical_params()

        for key, value in user_config.items():
            if key in critical_params and is_locked:
                logger.warning(
                    f"Cannot change {key} after completion has started. "
                    "Theory parameters must remain consistent throughout a run."
                )
                continue

            if hasattr(self.config, key) and not key.startswith("_"):
                setattr(self.config, key, value)
            else:
                logger.warning(f"Unknown config key {key!r} ignored")

    def lock(self) -> None:
        self.config.lock()


# Default configuration instance
DEFAULT_PROVER_CONFIG = _ProverConfigInternal()
