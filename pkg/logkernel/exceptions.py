"""
Custom Exception Hierarchy for logkernel

Every error raised on purpose by the toolkit derives from LogKernelError, so
callers (and the CLI) can catch the whole family in one place.

Non-convergence is NOT an exception: quadrature and summation report it via
``converged=False`` and their error estimates.

Exception Hierarchy:
    LogKernelError (base)
    ├── SpecialFunctionError
    │   ├── DomainError
    │   ├── PoleError
    │   ├── UnsupportedOrderError
    │   └── BernoulliOverflowError
    ├── QuadratureError
    │   └── IntegrandSpecError
    ├── SeriesError
    │   ├── ModeMismatchError
    │   └── UnknownSeriesError
    ├── CatalogError
    │   ├── IdentityNotFoundError
    │   ├── ParameterDomainError
    │   └── VariantIndexError
    ├── UsageError
    └── ConfigurationError

Usage:
    from logkernel.exceptions import DomainError, LogKernelError

    if x <= 0:
        raise DomainError("ci", x, "x > 0")

    try:
        result = verify_identity("main-13", {})
    except LogKernelError as e:
        logger.error(f"Verification failed: {e}")
"""

from typing import Any, Optional, Sequence


# ===========================================
# Base Exception
# ===========================================


class LogKernelError(Exception):
    """
    Base exception for all logkernel errors.

    Carries a human-readable message plus a details dict that ends up in
    structured log records.
    """

    def __init__(self, message: str, details: Optional[dict] = None):
        """
        Initialize the exception.

        Args:
            message: Human-readable error message
            details: Optional dictionary of additional error details
        """
        super().__init__(message)
        self.message = message
        self.details = details or {}


# ===========================================
# Special Function Errors
# ===========================================


class SpecialFunctionError(LogKernelError):
    """Base exception for special-function evaluation errors."""

    def __init__(self, function: str, message: str, details: Optional[dict] = None):
        super().__init__(f"{function}: {message}", details)
        self.function = function


class DomainError(SpecialFunctionError):
    """Raised when an argument lies outside a function's domain."""

    def __init__(self, function: str, value: Any, requirement: str):
        """
        Initialize domain error.

        Args:
            function: Name of the special function
            value: Offending argument
            requirement: Human-readable domain condition, e.g. "x > 0"
        """
        super().__init__(
            function,
            f"argument {value!r} outside domain ({requirement})",
            {"value": value, "requirement": requirement},
        )
        self.value = value
        self.requirement = requirement


class PoleError(SpecialFunctionError):
    """Raised when a function is evaluated exactly at a pole."""

    def __init__(self, function: str, value: Any):
        super().__init__(function, f"pole at {value!r}", {"value": value})
        self.value = value


class UnsupportedOrderError(SpecialFunctionError):
    """Raised when a polygamma order is not implemented."""

    def __init__(self, order: int, supported: Sequence[int]):
        super().__init__(
            "polygamma",
            f"order {order} not supported (supported: {list(supported)})",
            {"order": order},
        )
        self.order = order


class BernoulliOverflowError(SpecialFunctionError):
    """Raised when a Bernoulli index exceeds the table size."""

    def __init__(self, k: int, k_max: int):
        super().__init__(
            "bernoulli_even",
            f"k={k} exceeds K_max={k_max}",
            {"k": k, "k_max": k_max},
        )
        self.k = k
        self.k_max = k_max


# ===========================================
# Quadrature Errors
# ===========================================


class QuadratureError(LogKernelError):
    """Base exception for quadrature errors."""

    pass


class IntegrandSpecError(QuadratureError):
    """Raised when an integrand description cannot be integrated as requested."""

    def __init__(self, message: str, spec: Optional[dict] = None):
        super().__init__(message, {"spec": spec} if spec else None)


# ===========================================
# Series Errors
# ===========================================


class SeriesError(LogKernelError):
    """Base exception for summation errors."""

    pass


class ModeMismatchError(SeriesError):
    """Raised when a summation mode is not admissible for a term generator."""

    def __init__(self, term_id: str, mode: str, allowed: Sequence[str]):
        super().__init__(
            f"Series '{term_id}' cannot be summed in mode '{mode}' "
            f"(allowed: {', '.join(allowed)})",
            {"term_id": term_id, "mode": mode, "allowed": list(allowed)},
        )
        self.term_id = term_id
        self.mode = mode


class UnknownSeriesError(SeriesError):
    """Raised when a term generator id is not registered."""

    def __init__(self, term_id: str, available: Sequence[str]):
        super().__init__(
            f"Unknown series '{term_id}'. Valid names: {', '.join(available)}",
            {"term_id": term_id},
        )
        self.term_id = term_id
        self.available = list(available)


# ===========================================
# Catalog Errors
# ===========================================


class CatalogError(LogKernelError):
    """Base exception for identity registry errors."""

    pass


class IdentityNotFoundError(CatalogError):
    """Raised when an identity id is not in the registry."""

    def __init__(self, identity_id: str, available: Optional[Sequence[str]] = None):
        message = f"Unknown identity '{identity_id}'"
        if available:
            message += f". Valid ids: {', '.join(available)}"
        super().__init__(message, {"identity_id": identity_id})
        self.identity_id = identity_id


class ParameterDomainError(CatalogError):
    """Raised when identity parameters fall outside the declared domain."""

    def __init__(self, identity_id: str, params: dict, reason: str):
        super().__init__(
            f"{identity_id}: parameters {params} outside domain ({reason})",
            {"identity_id": identity_id, "params": params},
        )
        self.identity_id = identity_id
        self.params = params
        self.reason = reason


class VariantIndexError(CatalogError):
    """Raised when an RHS variant index does not exist."""

    def __init__(self, identity_id: str, variant: int, count: int):
        super().__init__(
            f"{identity_id}: variant {variant} out of range (0..{count - 1})",
            {"identity_id": identity_id, "variant": variant},
        )


# ===========================================
# Usage / Configuration Errors
# ===========================================


class UsageError(LogKernelError):
    """Raised for invalid command-line usage."""

    pass


class ConfigurationError(LogKernelError):
    """Raised when configuration is invalid."""

    def __init__(self, setting: str, message: str):
        super().__init__(f"Configuration error for '{setting}': {message}")
        self.setting = setting
