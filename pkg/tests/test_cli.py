import json
import random
import subprocess
import sys
import time

import pytest

from torusham.cli import SCHEMA_VERSION, main, scan_rows


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_test_three_five(capsys):
    code, out, _ = run(capsys, "test", "3", "5")
    assert code == 0
    assert out.splitlines()[0] == "hamiltonian: true"
    assert "<0|-2> = 3" in out


def test_test_four_six(capsys):
    code, out, _ = run(capsys, "test", "4", "6")
    assert code == 1
    assert out.splitlines()[0] == "hamiltonian: false (coprimality)"


@pytest.mark.parametrize("argv", [("test", "-3", "5"), ("test", "1", "5"), ("test", "0x10", "5"), ("test", "3"),
                                  ("test-deleted", "3", "5", "x", "2"), ("test-deleted", "3", "5", "3", "2"),
                                  ("scan", "5..3", "4"), ("scan", "3", "a..b"), ("build", "2", "5"), ("nope",)])
def test_usage_errors(capsys, argv):
    try:
        code = main(list(argv))
    except SystemExit as exc:  # argparse's own usage errors
        code = exc.code
    assert code == 2
    out, err = capsys.readouterr()
    assert out == "" and err


@pytest.mark.parametrize("a, b, code, orientation", [("2", "2", 0, "swapped"), ("1", "1", 0, "original")])
def test_test_deleted(capsys, a, b, code, orientation):
    got, out, _ = run(capsys, "test-deleted", "3", "5", a, b)
    assert got == code
    assert f"orientation: {orientation}" in out
    assert out.count("orientation:") == 1


def test_test_deleted_false(capsys):
    code, out, _ = run(capsys, "test-deleted", "4", "6", "2", "2", "--json")
    assert code == 1
    assert json.loads(out)["result"]["hamiltonian"] is False


def test_json_round_trip(capsys):
    code, out, _ = run(capsys, "test", "3", "5", "--json")
    assert code == 0
    record = json.loads(out)
    assert record["schemaVersion"] == SCHEMA_VERSION
    assert record["command"] == "test"
    assert record["input"] == {"m": 3, "n": 5}
    assert record["result"]["witnesses"]["<-1|0>"] == 5
    assert json.dumps(record, sort_keys=True, ensure_ascii=False) == out.strip()


def test_build_deleted_edgelist(capsys):
    code, out, _ = run(capsys, "build", "3", "5", "--target", "deleted")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 12 and lines[0] == lines[-1]


def test_build_pushed_machine(capsys):
    code, out, _ = run(capsys, "build", "3", "5", "--format", "machine")
    assert code == 0
    result = json.loads(out)["result"]
    assert result["lengths"] == [15, 15]
    assert result["cycles"][0] != result["cycles"][1]


def test_build_not_hamiltonian(capsys):
    code, out, err = run(capsys, "build", "3", "4", "--target", "pushed")
    assert code == 1 and out == "" and "not hamiltonian" in err


def test_build_limit(capsys):
    code, _, err = run(capsys, "build", "3", "5", "--limit", "10")
    assert code == 3 and err


def test_verify_ok(capsys):
    code, out, _ = run(capsys, "verify", "--limit", "30", "--json")
    assert code == 0
    assert json.loads(out)["result"]["ok"] is True


def test_verify_limit(capsys):
    code, _, err = run(capsys, "verify", "--limit", "100")
    assert code == 3 and "limit" in err


@pytest.mark.parametrize("fault", ["skip-min", "negate"])
def test_verify_detects_fault(capsys, fault):
    code, out, _ = run(capsys, "verify", "--limit", "30", "--inject-fault", fault)
    assert code != 0
    assert "pushed verdict" in out


def test_scan_three_column(capsys):
    code, out, _ = run(capsys, "scan", "3", "3..20")
    assert code == 0
    trues = [int(line.split()[1]) for line in out.splitlines() if line.split()[2] == "true"]
    assert trues == [5, 8, 11, 14, 17, 20]


def test_scan_diagonal_false():
    assert not any(ham for m, n, ham, _ in scan_rows(range(2, 40), range(2, 40)) if m == n and m > 2)


def test_scan_jobs_deterministic(capsys):
    _, sequential, _ = run(capsys, "scan", "3..12", "3..12", "--json")
    _, parallel, _ = run(capsys, "scan", "3..12", "3..12", "--json", "--jobs", "3")
    strip = lambda text: [{k: v for k, v in json.loads(l).items() if k != "elapsedMs"} for l in text.splitlines()]
    assert strip(sequential) == strip(parallel)
    rows = strip(sequential)
    assert len(rows) == 100 and all(r["schemaVersion"] == SCHEMA_VERSION for r in rows)
    assert [(r["input"]["m"], r["input"]["n"]) for r in rows] == sorted((m, n) for m in range(3, 13) for n in range(3, 13))


def test_thousand_digit_verdict_is_fast(capsys):
    rng = random.Random(7)
    m = rng.randrange(10**999, 10**1000)
    n = m + 1
    start = time.perf_counter()
    code, out, _ = run(capsys, "test", str(m), str(n), "--json")
    assert time.perf_counter() - start < 1.0
    assert code in (0, 1)
    assert json.loads(out)["input"]["m"] == m


def test_console_script():
    done = subprocess.run([sys.executable, "-m", "torusham.cli", "test", "2", "3"], capture_output=True, text=True)
    assert done.returncode == 0 and done.stdout.startswith("hamiltonian: true")
