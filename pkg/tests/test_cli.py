from virtbraid.cli import main


def run(capsys, *argv):
    try:
        code = main(list(argv))
    except SystemExit as e:
        code = e.code
    out = capsys.readouterr()
    return code, out.out, out.err


def test_check(capsys):
    assert run(capsys, "check", "-n", "2", "t1 t1")[:2] == (0, "trivial\n")
    assert run(capsys, "check", "-n", "3", "s1")[:2] == (1, "nontrivial\n")
    assert run(capsys, "check", "-n", "3", "t9")[0] == 2


def test_check_certificate(capsys):
    code, out, _ = run(capsys, "check", "-n", "2", "s1", "--certificate")
    assert code == 1
    assert "canonical: cvcd n=2 | runs: [1 O1.L/B1] [1 -/B2 T2] [1 O1.R/- T1]" in out
    assert "exponent_sum: 1" in out


def test_equal(capsys):
    assert run(capsys, "equal", "-n", "3", "s1 s2 s1", "s2 s1 s2")[:2] == (0, "equal\n")
    assert run(capsys, "equal", "-n", "3", "s1", "t1")[:2] == (1, "distinct\n")
    assert run(capsys, "equal", "-n", "3", "x")[0] == 2
    assert run(capsys, "equal", "-n", "3", "s1", "q1")[0] == 2


def test_diagram(capsys):
    code, out, _ = run(capsys, "diagram", "-n", "2", "s1")
    assert code == 0
    assert out.strip() == "cvcd n=2 | runs: [1 O1.L/B1] [1 -/B2 T2] [1 O1.R/- T1] | O: O1=1 | U:"
    code, out, _ = run(capsys, "diagram", "-n", "2", "", "--uncondensed")
    assert (code, out.strip()) == (0, "vcd n=2 u=2 / c1: 1 / c2: 2")


def test_diagram_cap(capsys):
    pump = " ".join(["t1 s1 s1"] * 14)
    code, _, err = run(capsys, "diagram", "-n", "2", pump, "--uncondensed")
    assert code == 3
    assert "digits" in err
    code, _, _ = run(capsys, "diagram", "-n", "2", "t1 s1 s1", "--uncondensed", "--cap", "100")
    assert code == 0


def test_bench(capsys):
    code, out, err = run(capsys, "bench", "-n", "3", "--lengths", "10,20,40",
                         "--samples", "2", "--seed", "42")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "length\tmean_ms\tmax_arcs\tmax_weight_digits"
    assert len(lines) == 5 and lines[-1].startswith("# slope")
    assert "seed 42" in err


def test_bench_bad_lengths(capsys):
    assert run(capsys, "bench", "--lengths", "")[0] == 2
    assert run(capsys, "bench", "--lengths", "20,10")[0] == 2
    assert run(capsys, "bench", "--lengths", "a,b")[0] == 2


def test_bench_deterministic_columns(capsys):
    args = ("bench", "-n", "3", "--lengths", "8,16", "--samples", "2", "--seed", "9")
    cols = []
    for _ in range(2):
        _, out, _ = run(capsys, *args)
        cols.append([line.split("\t")[2:] for line in out.splitlines()[1:3]])
    assert cols[0] == cols[1]


def test_relcheck(capsys):
    code, out, _ = run(capsys, "relcheck", "--n", "4", "--samples", "10",
                       "--maxlen", "12", "--seed", "7")
    assert code == 0
    assert out.count("PASS") == 7


def test_relcheck_jobs_matches_serial(capsys):
    base = ("relcheck", "--n", "3", "--samples", "6", "--maxlen", "10", "--seed", "3")
    serial = run(capsys, *base)
    parallel = run(capsys, *base, "--jobs", "2")
    assert serial[:2] == parallel[:2]


def test_usage_errors(capsys):
    assert run(capsys)[0] == 2
    assert run(capsys, "check", "s1")[0] == 2
    assert run(capsys, "check", "-n", "1", "s1")[0] == 2
