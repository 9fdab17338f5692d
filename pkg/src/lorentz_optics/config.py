from dataclasses import dataclass, asdict


@dataclass(frozen=True)
class Tolerances:
    det: float = 1e-9
    cls: float = 1e-9
    focus: float = 1e-9
    mix: float = 1e-9
    metric: float = 1e-9

    def as_dict(self):
        return asdict(self)


DEFAULT_TOL = Tolerances()
