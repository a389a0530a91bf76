import json

import pytest

from subreg.coxeter import (
    INF,
    dihedral_segments,
    diagram_from_json,
    glued_product,
    is_subregular,
    load_diagram,
    reverse,
    validate_diagram,
)
from subreg.errors import (
    AsymmetricWeights,
    BoundaryMismatch,
    ConsecutiveLetter,
    DiagonalNotOne,
    DiagramParseError,
    DuplicateLabel,
    WeightBelowTwo,
)
from subreg.systems import builtin_diagrams, bundled_names, dihedral, load_bundled, thmE, triangle_456


def test_unlisted_pairs_default_to_two():
    d = validate_diagram(["a", "b", "c"], [["a", "b", 3]])
    assert d.m(0, 1) == 3
    assert d.m(0, 2) == 2 and d.m(1, 2) == 2
    assert d.m(2, 2) == 1


def test_inf_weight_from_string():
    d = validate_diagram(["1", "2"], [["1", "2", "inf"]])
    assert d.m(0, 1) == INF


@pytest.mark.parametrize("entries, exc", [
    ([["a", "b", 1]], WeightBelowTwo),
    ([["a", "b", 3], ["b", "a", 4]], AsymmetricWeights),
    ([["a", "a", 2]], DiagonalNotOne),
    ([["a", "z", 3]], DiagramParseError),
])
def test_bad_entries(entries, exc):
    with pytest.raises(exc):
        validate_diagram(["a", "b"], entries)


def test_duplicate_label():
    with pytest.raises(DuplicateLabel):
        validate_diagram(["a", "a"])


def test_matrix_form_is_checked():
    with pytest.raises(AsymmetricWeights):
        validate_diagram(["a", "b"], matrix=[[1, 3], [4, 1]])
    d = validate_diagram(["a", "b"], matrix=[[1, 5], [5, 1]])
    assert d.m(1, 0) == 5


def test_json_round_trip(tmp_path):
    d = triangle_456()
    path = tmp_path / "t.json"
    path.write_text(json.dumps(d.to_json()), encoding="utf-8")
    again = load_diagram(path)
    assert again == d
    assert again.name == "t"


def test_load_rejects_garbage(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{not json", encoding="utf-8")
    with pytest.raises(DiagramParseError):
        load_diagram(path)
    with pytest.raises(DiagramParseError):
        diagram_from_json({"m": []})


def test_bundled_files_match_builders():
    built = builtin_diagrams()
    assert set(bundled_names()) == set(built)
    for name in bundled_names():
        assert load_bundled(name) == built[name], name


def test_parse_and_format():
    d = triangle_456()
    assert d.parse_word("1213") == (0, 1, 0, 2)
    assert d.format_word((0, 1, 0, 2)) == "1213"
    assert d.parse_word("") == () and d.format_word(()) == "e"
    assert d.parse_word("1.2.1") == (0, 1, 0)


def test_multichar_labels_use_dots():
    d = validate_diagram(["0", "10", "2"], [["0", "10", 3], ["10", "2", 3]])
    w = d.parse_word("0.10.2")
    assert w == (0, 1, 2)
    assert d.format_word(w) == "0.10.2"


def test_segments():
    assert dihedral_segments((0, 1, 2, 1, 0, 2)) == [(0, 1), (1, 2, 1), (1, 0), (0, 2)]
    assert dihedral_segments((0,)) == [(0,)]
    assert dihedral_segments(()) == []
    with pytest.raises(ConsecutiveLetter):
        dihedral_segments((0, 0))


def test_glued_product():
    assert glued_product((0, 1), (1, 2, 1), (1, 0)) == (0, 1, 2, 1, 0)
    assert glued_product((), (0, 1)) == (0, 1)
    with pytest.raises(BoundaryMismatch):
        glued_product((0, 1), (0, 1))


def test_segments_glue_back():
    w = (0, 1, 0, 2, 0, 2, 1, 2)
    assert glued_product(*dihedral_segments(w)) == w


def test_subregular_membership():
    d = dihedral(4)
    assert is_subregular((0, 1, 0), d)
    assert not is_subregular((0, 1, 0, 1), d)
    assert not is_subregular((), d)
    assert not is_subregular((0, 0), d)
    e = thmE(3)
    # m(0,i) = inf allows arbitrarily long 0-i segments
    assert is_subregular((0, 1) * 6, e)
    assert not is_subregular((1, 2, 1), e)


def test_reverse():
    assert reverse((0, 1, 2)) == (2, 1, 0)
