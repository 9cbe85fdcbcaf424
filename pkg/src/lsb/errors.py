"""Exception types shared across the package."""


class CapacityError(RuntimeError):
    """A requested computation exceeds a configured enumeration or size guard."""


class GenerationError(RuntimeError):
    """Random pair generation exhausted its rejection-sampling retry budget."""


class ContractError(ValueError):
    """A caller-supplied value contradicts a checked precondition."""
