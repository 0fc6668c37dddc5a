from dataclasses import dataclass, field
from fractions import Fraction


class WindowOverflow(ValueError):
    """An index left the declared finite window; enlarge the window."""

    def __init__(self, what, index, window):
        super().__init__(f"{what}: index {index!r} outside window {window}")
        self.what = what
        self.index = index
        self.window = window


@dataclass
class Verdict:
    name: str
    status: str  # "pass" | "fail" | "discrepancy"
    witness: object = None
    details: dict = field(default_factory=dict)

    @property
    def ok(self):
        return self.status != "fail"

    def __bool__(self):
        return self.ok


def verdict(name, ok, witness=None, **details):
    return Verdict(name, "pass" if ok else "fail", witness, details)


def all_ok(verdicts):
    return all(v.ok for v in verdicts)


def jsonable(obj):
    """Convert Fractions, tuples and dict keys into plain JSON values."""
    if isinstance(obj, Fraction):
        return str(obj) if obj.denominator != 1 else obj.numerator
    if isinstance(obj, Verdict):
        return {"name": obj.name, "status": obj.status, "witness": jsonable(obj.witness),
                **({"details": jsonable(obj.details)} if obj.details else {})}
    if isinstance(obj, dict):
        return {_key(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    if isinstance(obj, (set, frozenset)):
        return [jsonable(v) for v in sorted(obj, key=repr)]
    return obj


def _key(k):
    if isinstance(k, str):
        return k
    if isinstance(k, tuple):
        return ",".join(str(x) for x in k)
    return str(k)
