from __future__ import annotations

import json

import pytest

import ucf.verifier as verifier
from ucf.cli import main

F1_TEXT = "n=6\n{}\n1,2,3\n1,2,3,4,5,6\n"


def write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


class TestCheck:
    def test_passing_family(self, tmp_path, capsys):
        status = main(["check", write(tmp_path, "f.family", F1_TEXT)])
        out = capsys.readouterr().out
        assert status == 0
        assert "verdict: pass" in out
        assert "witness: 1:2/3 2:2/3 3:2/3" in out
        assert "T(F): 3" in out

    def test_json_output(self, tmp_path, capsys):
        status = main(["check", "--json", write(tmp_path, "f.family", F1_TEXT)])
        assert status == 0
        record = json.loads(capsys.readouterr().out)
        assert record["verdict"] == "pass"
        assert record["witness"]["elements"] == [1, 2, 3]
        assert record["shape"] == "G3"

    def test_empty_file_is_a_parse_error(self, tmp_path, capsys):
        status = main(["check", write(tmp_path, "f.family", "")])
        assert status == 2
        assert "parse error" in capsys.readouterr().err

    def test_duplicate_member_reports_line(self, tmp_path, capsys):
        status = main(["check", write(tmp_path, "f.family", "n=3\n1\n1\n")])
        assert status == 2
        err = capsys.readouterr().err
        assert "line 3" in err and "line 2" in err

    def test_missing_file(self, tmp_path, capsys):
        status = main(["check", str(tmp_path / "absent.family")])
        assert status == 2
        assert "io error" in capsys.readouterr().err

    def test_failing_family_exits_one(self, tmp_path, capsys, monkeypatch):
        monkeypatch.setattr(verifier, "frankl_holds", lambda family: False)
        status = main(["check", write(tmp_path, "f.family", "n=3\n{}\n1\n1,2\n")])
        assert status == 1
        assert "verdict: fail" in capsys.readouterr().out


class TestClosure:
    def test_prints_closure(self, tmp_path, capsys):
        path = write(tmp_path, "open.family", "n=4\n1,2\n3,4\n")
        assert main(["closure", path]) == 0
        assert capsys.readouterr().out == "n=4\n1,2\n3,4\n1,2,3,4\n"

    def test_out_file_round_trips(self, tmp_path, capsys):
        path = write(tmp_path, "open.family", "n=4\n1,2\n3,4\n")
        out = str(tmp_path / "closed.family")
        assert main(["closure", path, "--out", out]) == 0
        assert main(["check", out]) == 0
        assert "union-closed: yes" in capsys.readouterr().out


class TestEnumerate:
    def test_count_and_listing(self, tmp_path, capsys):
        out = str(tmp_path / "fams.txt")
        assert main(["enumerate", "--n", "3", "--t", "1", "--out", out]) == 0
        assert capsys.readouterr().out == "count=45\n"
        lines = open(out).read().splitlines()
        assert len(lines) == 45
        assert lines == sorted(lines, key=lambda ln: [int(x) for x in ln.split(",")])

    def test_matches_oracle_listing(self, tmp_path, capsys):
        e_out = str(tmp_path / "e.txt")
        o_out = str(tmp_path / "o.txt")
        assert main(["enumerate", "--n", "3", "--t", "1", "--out", e_out]) == 0
        assert main(["oracle", "--n", "3", "--t", "1", "--out", o_out]) == 0
        capsys.readouterr()
        assert open(e_out).read() == open(o_out).read()

    def test_iso_count(self, capsys):
        assert main(["enumerate", "--n", "4", "--t", "2", "--up-to-iso"]) == 0
        out = capsys.readouterr().out
        assert out.startswith("count=40\n")

    def test_census_scale_needs_unbounded(self, capsys):
        assert main(["enumerate", "--n", "6", "--t", "2"]) == 2
        assert "unbounded" in capsys.readouterr().err

    def test_out_of_envelope(self, capsys):
        assert main(["enumerate", "--n", "7", "--t", "3"]) == 2
        capsys.readouterr()

    def test_bad_ground_size(self, capsys):
        assert main(["enumerate", "--n", "13", "--t", "1"]) == 2
        capsys.readouterr()


class TestOracle:
    def test_n2_count(self, capsys):
        assert main(["oracle", "--n", "2", "--t", "1"]) == 0
        assert capsys.readouterr().out.startswith("count=4\n")

    def test_singleton(self, capsys):
        assert main(["oracle", "--n", "3", "--t", "3"]) == 0
        assert capsys.readouterr().out == "count=1\n0,7\n"

    def test_pool_cap(self, capsys):
        assert main(["oracle", "--n", "5", "--t", "1"]) == 2
        assert "caps at 22" in capsys.readouterr().err


class TestVerify:
    def test_n4_t1_matches_oracle_total(self, tmp_path, capsys):
        report_path = str(tmp_path / "report.json")
        status = main(
            ["verify", "--n", "4", "--t", "1", "--workers", "1", "--report", report_path]
        )
        out = capsys.readouterr().out
        assert status == 0
        assert "families_total: 2271" in out
        assert "counterexamples: 0" in out
        report = json.loads(open(report_path).read())
        assert report["families_total"] == 2271
        assert report["counterexamples"] == []

    def test_lemma_spot_check_flag(self, capsys):
        status = main(
            [
                "verify", "--n", "3", "--t", "1", "--workers", "1",
                "--checks", "frankl,s_frankl,lemma_1_2_spot", "--lemma-every", "5",
            ]
        )
        assert status == 0
        capsys.readouterr()

    def test_bad_check_name(self, capsys):
        assert main(["verify", "--n", "3", "--t", "1", "--checks", "bogus"]) == 2
        assert "unknown check" in capsys.readouterr().err

    def test_out_of_envelope(self, capsys):
        assert main(["verify", "--n", "7", "--t", "3"]) == 2
        capsys.readouterr()

    def test_workers_env_fallback(self, tmp_path, capsys, monkeypatch):
        monkeypatch.setenv("UCF_WORKERS", "2")
        report_path = str(tmp_path / "report.json")
        status = main(["verify", "--n", "3", "--t", "2", "--report", report_path])
        assert status == 0
        capsys.readouterr()
        assert json.loads(open(report_path).read())["workers"] == 2

    def test_workers_flag_beats_env(self, tmp_path, capsys, monkeypatch):
        monkeypatch.setenv("UCF_WORKERS", "4")
        report_path = str(tmp_path / "report.json")
        status = main(
            ["verify", "--n", "3", "--t", "2", "--workers", "1", "--report", report_path]
        )
        assert status == 0
        capsys.readouterr()
        assert json.loads(open(report_path).read())["workers"] == 1

    def test_counterexamples_exit_one_and_dump(self, tmp_path, capsys, monkeypatch):
        def always_fail(family):
            return verifier._failure_record("frankl", family)

        monkeypatch.setitem(verifier.CHECK_FNS, "frankl", always_fail)
        monkeypatch.chdir(tmp_path)
        report_path = str(tmp_path / "report.json")
        status = main(
            [
                "verify", "--n", "3", "--t", "1", "--workers", "1",
                "--checks", "frankl", "--report", report_path,
            ]
        )
        out = capsys.readouterr().out
        assert status == 1
        assert "counterexamples: 45" in out
        dumps = list((tmp_path / "report.json.counterexamples").iterdir())
        assert len(dumps) == 45

    def test_checkpoint_resume(self, tmp_path, capsys):
        ck = str(tmp_path / "run.ck")
        args = ["verify", "--n", "4", "--t", "1", "--workers", "1", "--checkpoint", ck]
        assert main(args) == 0
        first = capsys.readouterr().out
        assert main(args) == 0
        second = capsys.readouterr().out
        assert "families_total: 2271" in first and "families_total: 2271" in second


class TestParserPlumbing:
    def test_requires_subcommand(self, capsys):
        with pytest.raises(SystemExit):
            main([])
        capsys.readouterr()

    def test_order_choices(self, capsys):
        with pytest.raises(SystemExit):
            main(["enumerate", "--n", "3", "--t", "1", "--order", "shuffled"])
        capsys.readouterr()
