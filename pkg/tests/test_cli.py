import pytest

from brauerd.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out.rstrip("\n"), err


def test_eval(capsys):
    assert run(capsys, "eval", "-n", "2", "e1 e2") == (0, "theta*(1d^-1) ; n:2 {1 2} {-1 -2}", "")


def test_count(capsys):
    code, out, _ = run(capsys, "count", "-n", "3")
    assert code == 0 and out == "T=60 T0=15 Teq=36 T0eq=9 d=105 ext=135"
    code, out, _ = run(capsys, "count", "-n", "2", "--format", "csv")
    assert out.splitlines() == ["T,T0,Teq,T0eq,d,ext", "6,3,2,1,9,15"]


def test_check(capsys):
    code, out, _ = run(capsys, "check", "relations", "-n", "4")
    assert code == 0 and out.startswith("OK relations n=4 cases=")
    code, out, _ = run(capsys, "check", "counts", "-n", "3", "--format", "csv")
    assert code == 0 and out.splitlines()[0] == "counts 3 T ok"


def test_product(capsys):
    code, out, _ = run(capsys, "product", "-n", "2", "1*(1) ; n:2 {1 2} {-1 -2}", "n:2 {1 2} {-1 -2}")
    assert code == 0 and out == "1*(1d^1) ; n:2 {1 2} {-1 -2}"


def test_nf(capsys):
    code, out, _ = run(capsys, "nf", "-n", "3", "n:3 {1 2} {3 -1} {-2 -3}")
    assert code == 0 and "X=Y(1)" in out
    word = out.splitlines()[1].removeprefix("word: ")
    code, back, _ = run(capsys, "eval", "-n", "3", word)
    assert back == "1*(1) ; n:3 {1 2} {3 -1} {-2 -3}"


@pytest.mark.parametrize(
    "cmd,elem,expected",
    [
        ("op", "n:3 {1 2} {3 -1} {-2 -3}", "1*(1) ; n:3 {1 -3} {2 3} {-1 -2}"),
        ("pi", "n:2 {1 2}* {-1 -2}*", "1*(1) ; n:2 {1 2} {-1 -2}"),
        ("flip", "n:2 {1 -2} {2 -1}", "1*(1) ; n:2 {1 -2}* {2 -1}*"),
    ],
)
def test_unary(capsys, cmd, elem, expected):
    assert run(capsys, cmd, "-n", str(int(elem[2])), elem)[:2] == (0, expected)


def test_enum(capsys):
    code, out, _ = run(capsys, "enum", "-n", "3", "--filter", "horizontal-undecorated")
    assert code == 0 and len(out.splitlines()) == 9


def test_dump_sc(tmp_path, capsys):
    path = tmp_path / "sc.csv"
    assert run(capsys, "dump-sc", "-n", "2", "--out", str(path))[0] == 0
    lines = path.read_text().splitlines()
    assert lines[0] == "i,j,k,delta_exp,class" and len(lines) == 82


@pytest.mark.parametrize(
    "argv,name",
    [
        (["product", "-n", "3", "n:2 {1 2} {-1 -2}", "n:2 {1 2} {-1 -2}"], "SizeMismatch"),
        (["pi", "-n", "2", "n:2 {1 2}* {-1 -2}"], "OddDecoration"),
        (["eval", "-n", "2", "r5"], "IndexOutOfRange"),
        (["eval", "-n", "2", "xi"], "ModeViolation"),
        (["eval", "-n", "2", "e1 zz"], "Malformed"),
        (["nf", "-n", "2", "xi*(1) ; n:2 {1 -1} {2 -2}"], "BasisViolation"),
        (["nf", "-n", "2", "1*(2) ; n:2 {1 -1} {2 -2}"], "NotBasis"),
    ],
)
def test_domain_errors(capsys, argv, name):
    code, _, err = run(capsys, *argv)
    assert code == 1 and name in err


@pytest.mark.parametrize("argv", [[], ["count"], ["count", "-n", "x"], ["frobnicate", "-n", "2"], ["check", "bogus", "-n", "2"]])
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_eval_extended(capsys):
    code, out, _ = run(capsys, "eval", "-n", "2", "--mode", "extended", "xi e1")
    assert code == 0 and out.startswith("xi*(1)")
