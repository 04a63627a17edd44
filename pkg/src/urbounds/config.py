"""Physical constants entering the canonical commutation relations."""

from dataclasses import dataclass


@dataclass(frozen=True)
class PhysConfig:
    """Unit configuration shared by every constructor and evaluator.

    Both constants default to 1 so that results come out in canonical
    units; passing e.g. ``hbar=2`` rescales every formula consistently,
    which the test suite uses to check dimensional behaviour.

    Attributes:
        hbar: action quantum entering ``[x, p] = i*hbar``; must be > 0.
        kB: Boltzmann constant converting temperature to energy; > 0.
    """

    hbar: float = 1.0
    kB: float = 1.0

    def __post_init__(self):
        if not self.hbar > 0:
            raise ValueError(f"hbar must be positive, got {self.hbar}")
        if not self.kB > 0:
            raise ValueError(f"kB must be positive, got {self.kB}")


DEFAULT_CONFIG = PhysConfig()
