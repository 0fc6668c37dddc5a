"""Lie algebras given by bracket data.

Elements are sparse dicts ``basis index -> Fraction``.  Finite algebras
store structure constants; ``W1`` (formal vector fields, basis
``e_i = x^(i+1) d/dx``) is a bracket rule on an integer window, and any
bracket leaving the window raises :class:`WindowOverflow`.
"""

import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction

from . import vec
from .linalg import SparseMatrix, in_image
from .report import Verdict, WindowOverflow, verdict

Q = Fraction


class NonDiagonalGrading(ValueError):
    pass


class LieAlgebra:
    """Shared helpers; subclasses provide basis(), bracket_basis() and label()."""

    grading = None  # element acting diagonally (ad) on the basis

    def bracket(self, a, b):
        return vec.bilinear_map(self.bracket_basis, a, b)

    def index(self, key):
        if isinstance(key, str):
            return self.labels.index(key)
        return key

    def elem(self, key, c=1):
        return {self.index(key): Q(c)}

    def weight(self, i):
        """Eigenvalue of ad(grading) on basis element i."""
        if self.grading is None:
            raise NonDiagonalGrading(f"{self.name} has no grading element")
        v = self.bracket(self.grading, {i: Q(1)})
        if set(v) - {i}:
            raise NonDiagonalGrading(f"ad(grading) not diagonal on {self.label(i)}")
        return v.get(i, Q(0))

    def eigenvalue(self, x, i):
        """Eigenvalue of ad(x) on basis element i; x must act diagonally."""
        v = self.bracket(x, {i: Q(1)})
        if set(v) - {i}:
            raise NonDiagonalGrading(f"ad({x}) not diagonal on {self.label(i)}")
        return v.get(i, Q(0))

    def fmt(self, v):
        return vec.fmt(v, self.label)


@dataclass
class FiniteLieAlgebra(LieAlgebra):
    name: str
    labels: tuple
    table: dict  # (i, j) with i < j -> vector
    grading: dict = None
    vector_fields: dict = None  # optional realization i -> polynomial coefficient of d/dx

    def __post_init__(self):
        self.labels = tuple(self.labels)
        self.table = {k: vec.clean(v) for k, v in self.table.items() if vec.clean(v)}

    @property
    def dim(self):
        return len(self.labels)

    def basis(self):
        return range(self.dim)

    def label(self, i):
        return self.labels[i]

    def bracket_basis(self, i, j):
        if i == j:
            return {}
        if i < j:
            return self.table.get((i, j), {})
        return vec.scale(-1, self.table.get((j, i), {}))

    def ad_matrix(self, x):
        x = self._as_elem(x)
        cols = [self.bracket(x, {j: Q(1)}) for j in self.basis()]
        return SparseMatrix.from_columns(self.dim, cols)

    def _as_elem(self, x):
        if isinstance(x, dict):
            return x
        return self.elem(x)

    def killing_form(self, a, b):
        a, b = self._as_elem(a), self._as_elem(b)
        m = self.ad_matrix(a) @ self.ad_matrix(b)
        return sum((v for (r, c), v in m.entries.items() if r == c), Q(0))

    def coordinates(self, labels_or_elems):
        return [self._as_elem(x) for x in labels_or_elems]


@dataclass
class GradedLieAlgebra(LieAlgebra):
    """W1-style algebra: [e_i, e_j] = (j - i) e_{i+j} on the window lo..hi."""

    name: str = "W1"
    window: tuple = (-1, 8)

    def __post_init__(self):
        lo, hi = self.window
        if lo < -1 or hi < lo:
            raise ValueError(f"bad W1 window {self.window}")
        self.grading = {0: Q(1)} if lo <= 0 <= hi else None

    def basis(self):
        lo, hi = self.window
        return range(lo, hi + 1)

    def label(self, i):
        return f"e{i}"

    @property
    def labels(self):
        return [self.label(i) for i in self.basis()]

    def index(self, key):
        if isinstance(key, str):
            return int(key.lstrip("e"))
        return key

    def contains(self, i):
        lo, hi = self.window
        return lo <= i <= hi

    def bracket_basis(self, i, j):
        for k in (i, j):
            if not self.contains(k):
                raise WindowOverflow(self.name, k, self.window)
        c = j - i
        if c == 0:
            return {}
        if not self.contains(i + j):
            raise WindowOverflow(self.name, i + j, self.window)
        return {i + j: Q(c)}

    def weight(self, i):
        return Q(i)

    def vector_field(self, i):
        return {i + 1: Q(1)}

    @property
    def vector_fields(self):
        return {i: self.vector_field(i) for i in self.basis()}


def w1(window=(-1, 8)):
    return GradedLieAlgebra("W1", tuple(window))


def _table_from_matrices(mats):
    """Structure constants of a matrix Lie algebra spanned by mats."""
    n = len(mats)
    size = len(mats[0])
    flat = lambda a: [a[r][c] for r in range(size) for c in range(size)]
    basis_m = SparseMatrix.from_columns(size * size, [{k: v for k, v in enumerate(flat(a)) if v} for a in mats])

    def mul(a, b):
        return [[sum(a[r][k] * b[k][c] for k in range(size)) for c in range(size)] for r in range(size)]

    table = {}
    for i, j in itertools.combinations(range(n), 2):
        ab, ba = mul(mats[i], mats[j]), mul(mats[j], mats[i])
        comm = [[ab[r][c] - ba[r][c] for c in range(size)] for r in range(size)]
        x = in_image(basis_m, flat(comm))
        if x is None:
            raise ValueError("matrices do not span a Lie algebra")
        table[(i, j)] = {k: v for k, v in enumerate(x) if v}
    return table


def matrix_lie_algebra(name, labels, mats, grading=None):
    mats = [[[Q(v) for v in row] for row in a] for a in mats]
    return FiniteLieAlgebra(name, tuple(labels), _table_from_matrices(mats), grading)


def sl(n):
    """sl_n in the basis: E_ij (i<j), H_k = E_kk - E_{k+1,k+1}, E_ij (i>j).

    For n = 2 this is (e, h, f).  The grading element is the sum of the H_k
    (diag(n-1, n-3, ...) up to shift), which is regular.
    """
    def unit(i, j):
        a = [[0] * n for _ in range(n)]
        a[i][j] = 1
        return a

    labels, mats = [], []
    uppers = [(i, j) for i in range(n) for j in range(i + 1, n)]
    lowers = [(j, i) for i, j in uppers]
    for i, j in uppers:
        labels.append(f"E{i+1}{j+1}")
        mats.append(unit(i, j))
    for k in range(n - 1):
        a = [[0] * n for _ in range(n)]
        a[k][k], a[k + 1][k + 1] = 1, -1
        labels.append(f"H{k+1}")
        mats.append(a)
    for i, j in lowers:
        labels.append(f"E{i+1}{j+1}")
        mats.append(unit(i, j))
    if n == 2:
        labels = ["e", "h", "f"]
    nu = len(uppers)
    grading = {nu + k: Q((k + 1) * (n - k - 1)) for k in range(n - 1)}
    name = f"sl{n}"
    return matrix_lie_algebra(name, labels, mats, grading)


def sl2():
    """sl2 in basis (e, h, f), realized inside W1 as e = x^2, h = 2x, f = -1 (times d/dx)."""
    alg = sl(2)
    alg.grading = {1: Q(1)}
    alg.vector_fields = {0: {2: Q(1)}, 1: {1: Q(2)}, 2: {0: Q(-1)}}
    return alg


def sl3():
    return sl(3)


@dataclass
class SubalgebraInclusion:
    source: FiniteLieAlgebra
    target: LieAlgebra
    images: dict  # source basis index -> target element

    def apply(self, x):
        return vec.linear_map(lambda i: self.images[i], x)

    def check(self):
        """Bracket preservation on all source basis pairs."""
        for i, j in itertools.product(self.source.basis(), repeat=2):
            lhs = self.apply(self.source.bracket_basis(i, j))
            rhs = self.target.bracket(self.images[i], self.images[j])
            if lhs != rhs:
                return verdict("inclusion brackets", False,
                               {"pair": (self.source.label(i), self.source.label(j)),
                                "image of bracket": lhs, "bracket of images": rhs})
        return verdict("inclusion brackets", True)


def sl2_into_w1(window=(-1, 8), source=None):
    """e -> e_1, h -> 2 e_0, f -> -e_{-1}."""
    source = source or sl2()
    return SubalgebraInclusion(source, w1(window), {0: {1: Q(1)}, 1: {0: Q(2)}, 2: {-1: Q(-1)}})


def jacobiator(alg, i, j, k):
    x, y, z = ({t: Q(1)} for t in (i, j, k))
    return vec.add(alg.bracket(x, alg.bracket(y, z)),
                   alg.bracket(y, alg.bracket(z, x)),
                   alg.bracket(z, alg.bracket(x, y)))


def verify_jacobi(alg, basis=None):
    """Antisymmetry on pairs and Jacobi on triples of the given basis window.

    For windowed algebras, triples whose intermediate brackets leave the
    window are skipped (and counted).
    """
    basis = list(alg.basis() if basis is None else basis)
    skipped = 0
    for i, j in itertools.combinations_with_replacement(basis, 2):
        try:
            if vec.add(alg.bracket_basis(i, j), alg.bracket_basis(j, i)):
                return verdict("jacobi", False, {"antisymmetry": (alg.label(i), alg.label(j))})
        except WindowOverflow:
            skipped += 1
    for i, j, k in itertools.combinations(basis, 3):
        try:
            jac = jacobiator(alg, i, j, k)
        except WindowOverflow:
            skipped += 1
            continue
        if jac:
            return verdict("jacobi", False,
                           {"triple": (alg.label(i), alg.label(j), alg.label(k)), "jacobiator": jac})
    return verdict("jacobi", True, None, skipped=skipped)


def load_structure_constants(path_or_dict):
    """Read a user-defined algebra.

    Schema (JSON)::

        {"name": "...", "dim": 3, "labels": ["e", "h", "f"],
         "brackets": [[i, j, k, "value"], ...],
         "grading": {"1": "1"}}          # optional

    Each quadruple sets the e_k coefficient of [e_i, e_j]; the (j, i) entry
    is filled by antisymmetry.  Invalid input raises ValueError.
    """
    if isinstance(path_or_dict, dict):
        data = path_or_dict
    else:
        with open(path_or_dict) as fh:
            data = json.load(fh)
    dim = int(data["dim"])
    labels = data.get("labels") or [f"x{i}" for i in range(dim)]
    if len(labels) != dim:
        raise ValueError(f"{len(labels)} labels for dimension {dim}")
    table = {}
    seen = {}
    for quad in data.get("brackets", []):
        i, j, k, val = int(quad[0]), int(quad[1]), int(quad[2]), Q(str(quad[3]))
        for t in (i, j, k):
            if not 0 <= t < dim:
                raise ValueError(f"index {t} out of range in {quad}")
        if i == j:
            if val:
                raise ValueError(f"[x{i}, x{i}] must vanish")
            continue
        a, b, s = (i, j, 1) if i < j else (j, i, -1)
        key = (a, b, k)
        if key in seen and seen[key] != s * val:
            raise ValueError(f"inconsistent antisymmetric entries for ({i}, {j}, {k})")
        seen[key] = s * val
        table.setdefault((a, b), {})[k] = s * val
    grading = data.get("grading")
    if grading is not None:
        grading = {int(k): Q(str(v)) for k, v in grading.items()}
    alg = FiniteLieAlgebra(data.get("name", "custom"), tuple(labels), table, grading)
    rep = verify_jacobi(alg)
    if not rep.ok:
        raise ValueError(f"structure constants violate Jacobi: {rep.witness}")
    return alg


BUILTIN = {"sl2": sl2, "sl3": sl3}


def get_algebra(name, window=None):
    if name in BUILTIN:
        return BUILTIN[name]()
    if name.lower() == "w1":
        return w1(window or (-1, 8))
    return load_structure_constants(name)
