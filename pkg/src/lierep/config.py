"""Resource caps threaded through the expensive entry points."""

from dataclasses import dataclass


@dataclass(frozen=True)
class Caps:
    """Limits for enumeration- and dimension-bounded computations.

    max_weyl: largest Weyl group order that full enumeration will attempt
        (default covers every rank <= 4 type; the E series is refused).
    max_dim: largest module dimension `realize` and tensor constructions accept.
    max_char: largest dim V(lambda) for which a full formal character is built.
    """

    max_weyl: int = 1152
    max_dim: int = 400
    max_char: int = 20000


DEFAULT_CAPS = Caps()
