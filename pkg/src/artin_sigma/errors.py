"""Exception types shared across the package.

The CLI maps these onto exit codes: ``InputError`` -> 2 (malformed input),
``MathError`` -> 1 (a mathematically invalid request, e.g. an unmet
precondition of a certificate construction).
"""


class InputError(ValueError):
    """Malformed user input: parse failures, bad graph or character data."""


class MathError(ValueError):
    """A request that is well-formed but mathematically inadmissible."""
