"""Command-line front end: verbs, output forms, exit codes."""

import json
import subprocess
import sys

import pytest

import flagpipes.serialize as ser
from flagpipes.cli import main
from flagpipes.decperm import decperm_of, parse_decperm
from flagpipes.flagbuild import quotient_covers
from flagpipes.pathgraph import bases_of
from flagpipes.pipedream import PipeDream, construct_fpp, restrict
from flagpipes.render import ascii_grid, svg_grid

RUNNING = "5o1u3u9o2u7o6u4u8u"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestFpp:
    def test_json_default(self, capsys):
        code, out, err = run(capsys, "fpp", "123", "312")
        assert code == 0 and err == ""
        assert json.loads(out) == ser.dream_to_json(
            construct_fpp((1, 2, 3), (3, 1, 2)))

    def test_ascii_golden(self, capsys):
        code, out, _ = run(capsys, "fpp", "5316274", "6735142", "--ascii")
        D = construct_fpp((5, 3, 1, 6, 2, 7, 4), (6, 7, 3, 5, 1, 4, 2))
        assert code == 0
        assert out == ascii_grid(D) + "\n"
        assert out.count("E") == 7

    def test_svg(self, capsys):
        code, out, _ = run(capsys, "fpp", "12", "21", "--svg")
        assert code == 0
        assert out.strip() == svg_grid(construct_fpp((1, 2), (2, 1)))

    def test_comma_notation(self, capsys):
        code, out, _ = run(capsys, "fpp", "1,2,3,4,5,6,7,8,9,10",
                           "2,1,3,4,5,6,7,8,9,10")
        assert code == 0
        assert json.loads(out)["cols"] == 10

    def test_not_comparable_is_domain_error(self, capsys):
        code, out, err = run(capsys, "fpp", "21", "12")
        assert code == 1 and out == ""
        assert err.startswith("error:")

    def test_bad_permutation_text(self, capsys):
        code, _, err = run(capsys, "fpp", "11", "12")
        assert code == 1 and err.startswith("error:")

    def test_missing_argument_is_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["fpp", "123"])
        assert exc.value.code == 2


class TestGridSources:
    def test_render_default_ascii(self, capsys):
        code, out, _ = run(capsys, "render", "123", "321")
        assert code == 0
        assert out == ascii_grid(construct_fpp((1, 2, 3), (3, 2, 1))) + "\n"

    def test_render_from_dream_file(self, capsys, tmp_path):
        D = construct_fpp((2, 1, 3), (3, 1, 2))
        path = tmp_path / "dream.json"
        path.write_text(json.dumps(ser.dream_to_json(D)))
        code, out, _ = run(capsys, "render", "--dream", str(path))
        assert code == 0 and out == ascii_grid(D) + "\n"

    def test_render_from_positroid_file(self, capsys, tmp_path, running_example):
        path = tmp_path / "pos.json"
        path.write_text(json.dumps(ser.positroid_to_json(running_example)))
        code, out, _ = run(capsys, "render", "--dream", str(path), "--svg")
        assert code == 0
        assert out.strip() == svg_grid(running_example.dream)

    def test_render_rejects_other_kinds(self, capsys, tmp_path):
        path = tmp_path / "bases.json"
        path.write_text(json.dumps(
            {"n": 2, "k": 1, "offsetZero": False, "bases": [[1], [2]]}))
        code, _, err = run(capsys, "render", "--dream", str(path))
        assert code == 1
        assert "basis-set" in err

    def test_render_needs_a_source(self, capsys):
        code, _, err = run(capsys, "render")
        assert code == 1 and "no grid given" in err

    def test_dream_from_stdin(self, capsys, monkeypatch):
        import io
        D = construct_fpp((1, 2), (2, 1))
        monkeypatch.setattr(
            "sys.stdin", io.StringIO(json.dumps(ser.dream_to_json(D))))
        code, out, _ = run(capsys, "render", "--dream", "-")
        assert code == 0 and out == ascii_grid(D) + "\n"


class TestBasesAndDecperm:
    def test_bases_of_decperm(self, capsys, running_example):
        code, out, _ = run(capsys, "bases", "--decperm", RUNNING)
        assert code == 0
        assert json.loads(out) == ser.basis_set_to_json(running_example.bases)

    def test_bases_restricted(self, capsys):
        code, out, _ = run(capsys, "bases", "123", "321", "--k", "2")
        D = restrict(construct_fpp((1, 2, 3), (3, 2, 1)), 2)
        assert code == 0
        assert json.loads(out) == ser.basis_set_to_json(bases_of(D))

    def test_decperm_roundtrip(self, capsys):
        code, out, _ = run(capsys, "decperm", "--decperm", RUNNING)
        assert code == 0
        w = ser.decperm_from_json(json.loads(out))
        assert w.to_string() == RUNNING

    def test_decperm_of_interval(self, capsys):
        code, out, _ = run(capsys, "decperm", "123", "312")
        assert code == 0
        want = decperm_of(construct_fpp((1, 2, 3), (3, 1, 2)))
        assert json.loads(out) == ser.decperm_to_json(want)


class TestCoversAndShift:
    def test_covers_count(self, capsys, running_example):
        code, out, _ = run(capsys, "covers", "--decperm", RUNNING)
        assert code == 0
        docs = json.loads(out)
        assert len(docs) == 15
        want = [decperm_of(Q.dream) for Q in quotient_covers(running_example)]
        assert docs == [ser.decperm_to_json(w) for w in want]

    def test_covers_of_full_rank_fails(self, capsys):
        code, _, err = run(capsys, "covers", "--decperm", "1o2o3o")
        assert code == 1 and "no covers" in err

    def test_covered_by(self, capsys):
        code, out, _ = run(capsys, "covered-by", "--decperm", "1o2o3o")
        assert code == 0
        docs = json.loads(out)
        assert docs and all(set(d) == {"perm", "color"} for d in docs)

    def test_shift_right(self, capsys):
        code, out, _ = run(capsys, "shift", "--decperm", "1u2u", "--set", "2")
        assert code == 0
        assert ser.decperm_from_json(json.loads(out)).to_string() == "1u2o"

    def test_shift_left_golden(self, capsys):
        code, out, _ = run(capsys, "shift", "--decperm", "2o5o3o8o1u7o6u9o4u",
                           "--set", "2,8", "--left")
        assert code == 0
        got = ser.decperm_from_json(json.loads(out))
        assert got.to_string() == "2o9o3o8o1u7o6u4u5u"


class TestPoset:
    def test_stats_golden(self, capsys):
        code, out, _ = run(capsys, "poset", "3", "--flavor", "representable",
                           "--stats")
        assert code == 0
        assert json.loads(out) == {"elements": 16, "maxChains": 19}

    def test_default_json(self, capsys):
        code, out, _ = run(capsys, "poset", "2")
        assert code == 0
        doc = json.loads(out)
        assert len(doc["nodes"]) == 5
        assert doc["flavor"] == "representable"

    def test_dot_output(self, capsys):
        code, out, _ = run(capsys, "poset", "3", "--flavor", "matroidal",
                           "--dot")
        assert code == 0
        assert out.splitlines()[0] == "digraph quotient_poset {"
        assert out.count("style=dashed") == 3
        code, out, _ = run(capsys, "poset", "3", "--dot")
        assert code == 0
        assert out.count("style=dashed") == 0

    def test_guard(self, capsys):
        code, _, err = run(capsys, "poset", "5", "--flavor", "matroidal")
        assert code == 1 and err.startswith("error:")

    def test_bad_flavor_is_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["poset", "3", "--flavor", "fancy"])
        assert exc.value.code == 2


class TestVerify:
    def test_single_check(self, capsys):
        code, out, err = run(capsys, "verify", "golden-grids")
        assert code == 0
        report = json.loads(out)
        assert [r["name"] for r in report] == ["golden-grids"]
        assert report[0]["ok"] is True
        assert err.startswith("PASS golden-grids:")

    def test_report_is_sniffable(self, capsys):
        code, out, _ = run(capsys, "verify", "decperm-table")
        assert code == 0
        kind, rep = ser.parse_any(json.loads(out))
        assert kind == "report" and rep[0]["ok"]


class TestConvert:
    def test_roundtrips_every_kind(self, capsys, tmp_path, running_example):
        docs = [
            ser.dream_to_json(construct_fpp((1, 2, 3), (3, 1, 2))),
            ser.positroid_to_json(running_example),
            ser.basis_set_to_json(running_example.bases),
            ser.decperm_to_json(parse_decperm(RUNNING)),
        ]
        for i, doc in enumerate(docs):
            path = tmp_path / f"doc{i}.json"
            path.write_text(json.dumps(doc))
            code, out, _ = run(capsys, "convert", str(path))
            assert code == 0
            assert json.loads(out) == doc

    def test_decperm_string_document(self, capsys, tmp_path):
        path = tmp_path / "w.json"
        path.write_text(json.dumps(RUNNING))
        code, out, _ = run(capsys, "convert", str(path))
        assert code == 0
        assert ser.decperm_from_json(json.loads(out)).to_string() == RUNNING

    def test_unknown_shape(self, capsys, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text(json.dumps({"what": "ever"}))
        code, _, err = run(capsys, "convert", str(path))
        assert code == 1 and err.startswith("error:")


class TestGuardsAndEnv:
    def test_wide_grid_guard(self, capsys, tmp_path):
        wide = PipeDream(cols=13, pivots=(1,), grid=("P" + "E" * 12,))
        path = tmp_path / "wide.json"
        path.write_text(json.dumps(ser.dream_to_json(wide)))
        code, _, err = run(capsys, "bases", "--dream", str(path))
        assert code == 1 and "guarded" in err

    def test_env_raises_guard(self, capsys, tmp_path, monkeypatch):
        wide = PipeDream(cols=13, pivots=(1,), grid=("P" + "E" * 12,))
        path = tmp_path / "wide.json"
        path.write_text(json.dumps(ser.dream_to_json(wide)))
        monkeypatch.setenv("POSITROID_MAX_N", "13")
        code, out, _ = run(capsys, "bases", "--dream", str(path))
        assert code == 0
        assert json.loads(out)["bases"] == [[c] for c in range(1, 14)]


class TestInstalledEntryPoint:
    def test_console_script(self):
        proc = subprocess.run(
            [sys.executable, "-m", "flagpipes.cli", "poset", "2", "--stats"],
            capture_output=True, text=True)
        assert proc.returncode == 0
        assert json.loads(proc.stdout) == {"elements": 5, "maxChains": 3}

    def test_usage_error_exit_code(self):
        proc = subprocess.run(
            [sys.executable, "-m", "flagpipes.cli", "no-such-verb"],
            capture_output=True, text=True)
        assert proc.returncode == 2
