"""Exception types shared across the package."""


class InputError(ValueError):
    """Caller handed us data outside an operation's domain."""


class NotApplicableError(InputError):
    """The requested quantity is undefined for these inputs (not a bug)."""


class ConsistencyError(RuntimeError):
    """Two routes that must agree exactly did not; indicates a defect."""
