"""Exception types shared across the package."""


class InputError(ValueError):
    """Malformed input data (bad table, bad file, out-of-range index)."""


class ContractError(RuntimeError):
    """An operation was called outside its stated precondition."""
