import pytest

from logjets.errors import ParseError
from logjets.presentation import load_presentation, parse_presentation, shipped_presentations

SHIPPED = sorted(shipped_presentations())


def test_shipped_set():
    assert {"cusp", "cusp_strict", "plane", "plane_log", "line", "point", "gf2_line",
            "line_over_point", "plane_over_line"} <= set(SHIPPED)


@pytest.mark.parametrize("stem", SHIPPED)
def test_shipped_files_round_trip(stem):
    path = shipped_presentations()[stem]
    text = path.read_text()
    pf = load_presentation(path)
    assert pf.format() == text
    again = parse_presentation(pf.format(), path=str(path))
    assert again.format() == text
    pf.build()


def test_cusp_contents():
    L = load_presentation(shipped_presentations()["cusp"]).build()
    assert L.structure == "submonoid"
    assert L.log_generators == ("x", "y")
    # the relation 2x = 3y is implied by the ring, not listed
    assert not L.log.monoid.relations
    assert L.ring.equal(L.log.alpha_of((2, 0)), L.log.alpha_of((0, 3)))


def test_ideal_list_and_comments():
    pf = parse_presentation("# comment\n[ring]\nvariables = a, b\nideal = a^2, b^3\nideal = a*b\n")
    assert [str(g) for g in pf.ideal] == ["a^2", "b^3", "a*b"]
    assert pf.characteristic == 0 and pf.order == "grevlex"


@pytest.mark.parametrize("text,line,col", [
    ("[ring]\nvariables = x\nfoo = 1\n", 3, 1),
    ("[ring]\nvariables = x\n  colour = red\n", 3, 3),
    ("[rings]\n", 1, 1),
    ("variables = x\n", 1, 1),
    ("[ring]\nvariables = x, 2y\n", 2, 16),
    ("[ring]\nvariables = x\nideal = x + q\n", 3, 13),
    ("[ring]\nvariables = x\ncharacteristic = 4\n", 3, 18),
    ("[ring]\nvariables = x\n[log]\nbeta m = x\n", 4, 1),
])
def test_errors_carry_positions(text, line, col):
    with pytest.raises(ParseError) as err:
        parse_presentation(text)
    assert (err.value.line, err.value.column) == (line, col)


def test_base_cycle_detected(tmp_path):
    a = tmp_path / "a.pres"
    b = tmp_path / "b.pres"
    a.write_text("[ring]\nvariables = x\n\n[base]\nfile = b.pres\n")
    b.write_text("[ring]\nvariables = x\n\n[base]\nfile = a.pres\n")
    with pytest.raises(ParseError, match="cycle"):
        load_presentation(a)


def test_missing_base_file(tmp_path):
    a = tmp_path / "a.pres"
    a.write_text("[ring]\nvariables = x\n\n[base]\nfile = nowhere.pres\n")
    with pytest.raises(ParseError) as err:
        load_presentation(a)
    assert err.value.line == 5


def test_base_map_must_name_base_variables(tmp_path):
    (tmp_path / "line.pres").write_text("[ring]\nvariables = s\n")
    top = tmp_path / "top.pres"
    top.write_text("[ring]\nvariables = x\n\n[base]\nfile = line.pres\nmap q = x\n")
    with pytest.raises(ParseError, match="not a base variable"):
        load_presentation(top)
