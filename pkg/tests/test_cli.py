import subprocess
import sys

import pytest

from tropical_iip import MpMatrix
from tropical_iip import cli
from tropical_iip.textio import read_matrix, write_matrix


@pytest.fixture
def files(tmp_path):
    def make(name, text):
        p = tmp_path / name
        p.write_text(text)
        return str(p)

    return make


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr().out
    return code, out


def records(out):
    return dict(line.split("=", 1) for line in out.splitlines())


def test_iip_two_row_example(files, capsys):
    A = files("a.txt", "2 2\n1/2 1/5\n3/10 9/10\n")
    code, out = run(capsys, "iip", A, "--format", "structured")
    assert code == cli.EXIT_OK
    assert out == "status=witness\nalgorithm=two-row\ny=(0,0)\nx=(-1/2,-9/10)\n"


def test_mcm_example(files, capsys):
    A = files("m.txt", "2 2\n0 2\n-1 0\n")
    code, out = run(capsys, "mcm", A, "--format", "structured")
    assert code == 0
    assert records(out) == {"lambda": "1/2", "cycle": "1→2→1"}


def test_solve_unsolvable(files, capsys):
    A = files("m.txt", "2 2\n0 2\n-1 0\n")
    code, out = run(capsys, "solve", A, "1,5", "--format", "structured")
    r = records(out)
    assert code == 0
    assert r["status"] == "unsolvable"
    assert r["principal"] == "(1,-1)"
    assert r["uncovered"] == "{2}"


def test_empty_is_an_answer(files, capsys):
    A = files("e.txt", "2 1\n3/10\n3/5\n")
    code, out = run(capsys, "iip", A, "--format", "structured")
    assert code == 0
    assert records(out)["status"] == "empty"


def test_byte_identical(files, capsys):
    A = files("a.txt", "3 3\n1/2 1/5 7/3\n3/10 9/10 -1\n2/7 1/9 0\n")
    outs = {run(capsys, "iip", A, "--format", "structured") for _ in range(3)}
    assert len(outs) == 1


def test_star_round_trip(files, tmp_path, capsys):
    A = MpMatrix([[0, "-1/3", "*"], ["-7/2", 0, "-1/9"], ["*", "-5", 0]])
    src = str(tmp_path / "a.txt")
    write_matrix(A, src)
    out_path = str(tmp_path / "s.txt")
    code, _ = run(capsys, "star", src, "-o", out_path)
    assert code == 0
    S = read_matrix(out_path)
    code, printed = run(capsys, "star", src)
    assert (tmp_path / "s.txt").read_text() == printed
    from tropical_iip.spectral import kleene_star

    assert S == kleene_star(A)


def test_decimal_is_marked(files, capsys):
    A = files("m.txt", "2 2\n-1 1/3\n-1/2 -1\n")
    _, out = run(capsys, "mcm", A, "--format", "structured", "--decimal")
    assert records(out)["lambda"] == "-0.083333333333~"
    _, out = run(capsys, "perm", A, "--format", "structured", "--decimal")
    assert records(out)["per"] == "-0.166666666667~"
    _, out = run(capsys, "solve", A, "1,-1/4", "--format", "structured", "--decimal")
    assert records(out)["principal"] == "(0.25,0.666666666667~)"


def test_schedule(files, capsys):
    A = files("a.txt", "2 2\n1/2 1/5\n3/10 9/10\n")
    _, out = run(capsys, "schedule", A, "--integer", "--format", "structured")
    r = records(out)
    assert r["status"] == "witness" and r["completion"] == "(0,0)"
    B = files("b.txt", "2 2\n1 3\n2 1\n")
    _, out = run(capsys, "schedule", B, "4,3", "--format", "structured")
    assert records(out) == {"status": "on-time", "start": "(1,1)", "completion": "(4,3)"}


@pytest.mark.parametrize(
    "text, argv, code",
    [
        ("2 2\n1 x\n0 0\n", ["iip"], cli.EXIT_PARSE),
        ("2 3\n0 0 0\n0 0 0\n", ["mcm"], cli.EXIT_SHAPE),
        ("2 2\n0 1\n1 0\n", ["int-eigen"], cli.EXIT_PRECONDITION),
        ("2 2\n0 1\n2 0\n", ["star"], cli.EXIT_DIVERGENCE),
        ("2 2\n0 *\n1 0\n", ["iip"], cli.EXIT_UNSUPPORTED_ENTRY),
        ("3 3\n0 0 0\n-90 90 1/2\n-90 91/3 90\n", ["oracle", "iip", "--budget", "10"], cli.EXIT_BUDGET),
    ],
)
def test_exit_codes(files, capsys, text, argv, code):
    A = files("a.txt", text)
    args = argv[:1] + argv[1:2] if argv[0] == "oracle" else argv[:1]
    rest = argv[len(args):]
    got, out = run(capsys, *args, A, *rest, "--format", "structured")
    assert got == code
    assert out.startswith("status=error\n")


def test_unsupported_instance(files, capsys):
    rows = ["0 0 0 0", "1/2 1/3 1/3 -40", "1/5 1/5 40 1/7", "1/7 40 -40 1/2", "40 1/3 1/7 1/11"]
    A = files("u.txt", "5 4\n" + "\n".join(rows) + "\n")
    code, out = run(capsys, "iip", A, "--budget", "1000", "--format", "structured")
    assert code == cli.EXIT_UNSUPPORTED_INSTANCE
    assert records(out)["error"] == "unsupported-instance"


def test_distinct_codes():
    codes = [c for _, c, _ in cli._EXIT_CODES] + [cli.EXIT_USAGE, cli.EXIT_IO]
    assert len(set(codes)) == len(codes)


def test_usage_and_missing_file(capsys):
    with pytest.raises(SystemExit) as err:
        cli.main(["frobnicate"])
    assert err.value.code == cli.EXIT_USAGE
    assert cli.main(["mcm", "/nonexistent/matrix.txt"]) == cli.EXIT_IO


def test_console_script(files):
    A = files("a.txt", "2 2\n1/2 1/5\n3/10 9/10\n")
    proc = subprocess.run(
        [sys.executable, "-m", "tropical_iip.cli", "iip", A, "--format", "structured"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert "algorithm=two-row" in proc.stdout


def test_details_are_one_based(files, capsys):
    A = files("u.txt", "2 3\n1/2 1/4 1/3\n3/2 3/5 1/5\n")
    _, out = run(capsys, "iip", A, "--format", "structured")
    r = records(out)
    assert r["algorithm"] == "uniform-column" and r["column"] == "1"
    P = files("p.txt", "3 2\n1/2 6/5\n3/2 11/5\n0 0\n")
    _, out = run(capsys, "iip", P, "--exceptional-row", "3", "--format", "structured")
    r = records(out)
    assert r["algorithm"] == "almost-column-uniform"
    assert r["exceptional_row"] == "3" and r["k"] == "1"
    assert r["x"] == "(0,-1/5)" and r["y"] == "(1,2,0)"
