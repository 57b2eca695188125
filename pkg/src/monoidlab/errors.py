class InputError(ValueError):
    """Malformed or out-of-contract input (CLI exit code 2)."""


class ContractViolation(RuntimeError):
    """An internal consistency check failed (CLI exit code 1)."""


class TheoremViolation(ContractViolation):
    """Certified inputs produced a structure the characterization rules out."""
