"""Exception types shared across the package."""


class InputError(ValueError):
    """Invalid argument or violated operation precondition."""


class ResourceLimitError(RuntimeError):
    """An exhaustive scan would exceed the configured bound."""


class FamilyExhaustedError(InputError):
    """Every covering-pair site of the family already appears in the queries."""
