"""Exception hierarchy shared by all modules."""


class SchubertTraceError(Exception):
    pass


class InputError(SchubertTraceError, ValueError):
    """Caller supplied an invalid index, ambient or flag combination."""


class DefectError(SchubertTraceError, RuntimeError):
    """An internal invariant failed. Always a bug, never a user error."""


class ResourceError(SchubertTraceError):
    """An enumeration would exceed the configured element cap."""
