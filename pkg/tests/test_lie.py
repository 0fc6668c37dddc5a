import json
from fractions import Fraction as Q

import pytest

from crossmod.linalg import SparseMatrix, rank
from crossmod.lie import get_algebra, load_structure_constants, sl2, sl2_into_w1, sl3, verify_jacobi, w1


def test_sl2_brackets_and_killing_form():
    g = sl2()
    e, h, f = (g.index(s) for s in "ehf")
    assert g.bracket_basis(e, f) == {h: 1}
    assert g.bracket_basis(h, e) == {e: 2}
    assert g.bracket_basis(h, f) == {f: -2}
    assert g.killing_form(h, h) == 8
    assert g.killing_form(e, f) == 4
    assert g.killing_form(e, e) == 0


def test_gradings():
    g = sl2()
    assert [g.weight(i) for i in g.basis()] == [2, 0, -2]
    W = w1((-1, 5))
    assert W.weight(3) == 3


@pytest.mark.parametrize("alg", [sl2(), sl3(), w1((-1, 6))], ids=lambda a: a.name)
def test_jacobi(alg):
    assert verify_jacobi(alg).ok


def test_killing_form_invariant_and_nondegenerate_on_sl3():
    g = sl3()
    B = list(g.basis())
    for x in B:
        for y in B:
            for z in B:
                assert g.killing_form(g.bracket_basis(x, y), g.elem(z)) == g.killing_form(g.elem(x), g.bracket_basis(y, z))
    gram = SparseMatrix.from_dense([[g.killing_form(x, y) for y in B] for x in B])
    assert rank(gram) == 8


def test_w1_bracket_and_window():
    W = w1((-1, 4))
    # [e_i, e_j] = (j - i) e_{i+j} for e_n = x^{n+1} d/dx
    assert W.bracket_basis(1, 2) == {3: 1}
    assert W.bracket_basis(-1, 2) == {1: 3}
    assert W.bracket_basis(2, 1) == {3: -1}


def test_sl2_embeds_in_w1():
    inc = sl2_into_w1((-1, 4))
    assert inc.check().ok


def test_structure_constant_loader_round_trip(tmp_path):
    data = {"name": "heis", "dim": 3, "labels": ["p", "q", "z"], "brackets": [[0, 1, 2, "1"]]}
    path = tmp_path / "heis.json"
    path.write_text(json.dumps(data))
    g = get_algebra(str(path))
    assert g.bracket_basis(1, 0) == {2: Q(-1)}


def test_loader_rejects_jacobi_violation():
    bad = {"dim": 3, "brackets": [[0, 1, 2, "1"], [1, 2, 0, "1"], [0, 2, 0, "1"]]}
    with pytest.raises(ValueError):
        load_structure_constants(bad)


def test_loader_rejects_inconsistent_antisymmetry():
    bad = {"dim": 2, "brackets": [[0, 1, 1, "1"], [1, 0, 1, "1"]]}
    with pytest.raises(ValueError):
        load_structure_constants(bad)
