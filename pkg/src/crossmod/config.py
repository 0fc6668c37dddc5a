from dataclasses import asdict, dataclass, field


@dataclass
class RunConfig:
    command: str = "verify"
    target: str = "all"
    algebra: str = "sl2"
    module: str = "trivial"
    ses: str = "verma"
    cochain: str = ""
    w1_window: tuple = (-1, 8)
    gv_window: int = 6  # W1 triples with indices in [-1, gv_window]
    density_window: tuple = (0, 12)
    verma_window: tuple = (0, 12)
    pbw_length: int = 2
    weight_bound: int = 8
    q_max: int = -1  # -1 means dim of the algebra
    fmt: str = "markdown"
    out: str = ""
    extra: dict = field(default_factory=dict)

    def __post_init__(self):
        for name in ("w1_window", "density_window", "verma_window"):
            lo, hi = getattr(self, name)
            if hi < lo:
                raise ValueError(f"{name} is empty: {lo}..{hi}")
            setattr(self, name, (int(lo), int(hi)))
        if self.pbw_length < 1:
            raise ValueError("pbw_length must be positive")
        if self.weight_bound < 0:
            raise ValueError("weight_bound must be nonnegative")

    def as_dict(self):
        d = asdict(self)
        d.pop("out")
        return d
