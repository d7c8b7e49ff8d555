"""Tests for the cilab command line."""

import json
import os
import tempfile
import pytest
from cilab import parse_documents, random_quasigroup, read_documents_file
from cilab._cli import main


@pytest.fixture
def table(data_dir):
    def path(name):
        return os.path.join(data_dir, "tables", name)
    return path


class TestCheck:
    @pytest.mark.parametrize("name,code", [
        ("z3.txt", 0),
        ("z2.txt", 0),
        ("steiner3.txt", 0),
        ("trivial.txt", 0),
        ("z2_wrong_j.txt", 0),
        ("y_minus_x.txt", 1),
        ("constant2.txt", 1),
        ("out_of_range.txt", 2),
        ("short_row.txt", 2),
        ("bad_header.txt", 2),
        ("missing.txt", 2),
    ])
    def test_exit_codes(self, table, name, code):
        assert main(["check", table(name)]) == code

    @pytest.mark.parametrize("name,classification", [
        ("z3.txt", "CI_LOOP"),
        ("steiner3.txt", "CI_QUASIGROUP"),
        ("y_minus_x.txt", "NOT_LEFT_CI"),
    ])
    def test_exit_code_matches_report(self, table, capsys, name, classification):
        code = main(["check", table(name), "--format", "json"])
        data = json.loads(capsys.readouterr().out)
        assert data["classification"] == classification
        assert code == (1 if classification == "NOT_LEFT_CI" else 0)

    def test_supplied_j_is_compared(self, table, capsys):
        main(["check", table("z3.txt"), "--format", "json"])
        supplied = json.loads(capsys.readouterr().out)["supplied_j"]
        assert supplied == {"j": [0, 2, 1], "left_ci": True, "right_ci": True,
                            "equals_derived": True}

    def test_wrong_supplied_j(self, table, capsys):
        main(["check", table("z2_wrong_j.txt"), "--format", "json"])
        supplied = json.loads(capsys.readouterr().out)["supplied_j"]
        assert supplied["left_ci"] is False
        assert supplied["equals_derived"] is False

    def test_parse_error_message_has_line(self, table, capsys):
        main(["check", table("out_of_range.txt")])
        err = capsys.readouterr().err
        assert "error: line 3:" in err

    def test_text_output(self, table, capsys):
        main(["check", table("constant2.txt")])
        assert "NOT_LEFT_CI" in capsys.readouterr().out


class TestDeriveAndSolve:
    def test_derive_j(self, table, capsys):
        assert main(["derive-j", table("z3.txt"), "--format", "json"]) == 0
        assert json.loads(capsys.readouterr().out) == {"jr": [0, 2, 1], "jl": [0, 2, 1]}

    def test_derive_j_absent(self, table, capsys):
        assert main(["derive-j", table("y_minus_x.txt")]) == 1
        assert "J_r: none" in capsys.readouterr().out

    def test_solve(self, table, capsys):
        assert main(["solve", table("z3.txt"), "--a", "1", "--b", "0", "--format", "json"]) == 0
        assert json.loads(capsys.readouterr().out)["x"] == 2

    def test_solve_without_j(self, table):
        assert main(["solve", table("constant2.txt"), "--a", "0", "--b", "0"]) == 1

    def test_solve_element_out_of_range(self, table):
        assert main(["solve", table("z2.txt"), "--a", "5", "--b", "0"]) == 2


class TestEnumerate:
    def test_counts(self, capsys):
        assert main(["enumerate", "--order", "3", "--mode", "oracle", "--format", "json"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["pair_count"] == 6
        assert data["class_count"] is None
        assert len(data["structures"]) == 6

    def test_classes(self, capsys):
        main(["enumerate", "--order", "3", "--classes", "--format", "json"])
        data = json.loads(capsys.readouterr().out)
        assert data["class_count"] == 3
        assert sorted(c["size"] for c in data["classes"]) == [1, 2, 3]

    def test_out_file_is_reconsumable(self, capsys):
        with tempfile.TemporaryDirectory() as tmpdir:
            path = os.path.join(tmpdir, "order3.txt")
            assert main(["enumerate", "--order", "3", "--out", path]) == 0
            docs = read_documents_file(path)
            assert len(docs) == 6
            assert all(doc.j is not None for doc in docs)

            single = os.path.join(tmpdir, "single.txt")
            with open(path) as f:
                first_block = f.read().split("\n\n")[0]
            with open(single, "w") as f:
                f.write(first_block + "\n")
            capsys.readouterr()
            assert main(["check", single, "--format", "json"]) == 0
            assert json.loads(capsys.readouterr().out)["supplied_j"]["equals_derived"]

    def test_oracle_cap_is_an_input_error(self, capsys):
        assert main(["enumerate", "--order", "4", "--mode", "oracle"]) == 2
        assert "exceeds the cap" in capsys.readouterr().err

    def test_node_limit(self):
        assert main(["enumerate", "--order", "4", "--node-limit", "3"]) == 2

    @pytest.mark.parametrize("argv", [
        ["enumerate", "--order", "2", "--workers", "0"],
        ["verify-theorem", "--max-order", "1", "--workers", "-1"],
    ])
    def test_bad_worker_count_is_an_input_error(self, capsys, argv):
        assert main(argv) == 2
        assert "worker count must be at least 1" in capsys.readouterr().err

    def test_no_row_pruning(self, capsys):
        main(["enumerate", "--order", "3", "--no-row-pruning", "--format", "json"])
        assert json.loads(capsys.readouterr().out)["pair_count"] == 6


class TestVerifyTheorem:
    def test_json_reports(self, capsys):
        assert main(["verify-theorem", "--max-order", "3", "--format", "json"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert [r["pair_count"] for r in data] == [1, 2, 6]
        assert all(r["failures"] == [] for r in data)

    def test_byte_identical_without_timing(self, capsys):
        argv = ["verify-theorem", "--max-order", "3", "--format", "json", "--no-timing"]
        main(argv)
        first = capsys.readouterr().out
        main(argv + ["--workers", "2"])
        assert capsys.readouterr().out == first

    def test_expectations_match(self, data_dir):
        expect = os.path.join(data_dir, "expectations.txt")
        assert main(["verify-theorem", "--max-order", "3", "--mode", "oracle",
                     "--expect", expect]) == 0

    def test_expectation_mismatch(self, capsys):
        with tempfile.TemporaryDirectory() as tmpdir:
            path = os.path.join(tmpdir, "exp.txt")
            with open(path, "w") as f:
                f.write("order 2 mode propagate pairs 5 classes 1\n")
            assert main(["verify-theorem", "--max-order", "2", "--expect", path]) == 1
            assert "expectation mismatch" in capsys.readouterr().err

    def test_record(self):
        with tempfile.TemporaryDirectory() as tmpdir:
            path = os.path.join(tmpdir, "exp.txt")
            main(["verify-theorem", "--max-order", "2", "--record", path])
            with open(path) as f:
                assert f.read().splitlines() == [
                    "order 1 mode propagate pairs 1 classes 1",
                    "order 2 mode propagate pairs 2 classes 1",
                ]


class TestRandom:
    def test_seeds_are_consecutive(self, capsys):
        assert main(["random", "--order", "4", "--seed", "5", "--count", "3"]) == 0
        docs = parse_documents(capsys.readouterr().out)
        assert [d.table for d in docs] == [random_quasigroup(4, s) for s in (5, 6, 7)]

    def test_cap(self):
        assert main(["random", "--order", "12", "--seed", "0"]) == 2


def test_usage_error_exits_two():
    with pytest.raises(SystemExit) as info:
        main(["enumerate"])
    assert info.value.code == 2


def test_verbose_logs_to_stderr(capsys):
    from cilab import _core
    _core.disable()
    main(["-v", "enumerate", "--order", "2"])
    captured = capsys.readouterr()
    assert "[CILAB:span]" in captured.err
    assert "[CILAB:" not in captured.out
