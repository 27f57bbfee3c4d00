"""Spec parsing, CLI subcommands, artifact files and exit codes."""

from __future__ import annotations

import json
import re
from pathlib import Path

import jsonschema
import pytest

from knitchambers import SpecError, parse_spec, run_report
from knitchambers.cli import describe, main

SCHEMA = json.loads(
    (Path(__file__).resolve().parent.parent / "docs" / "report_schema.json").read_text()
)

E7_SPEC = '{"diagram": "E7", "retained": ["B2", "D"]}'


def write_spec(tmp_path: Path, text: str) -> str:
    p = tmp_path / "spec.json"
    p.write_text(text)
    return str(p)


class TestParseSpec:
    def test_e7_aliases_resolve(self):
        spec = parse_spec(E7_SPEC)
        assert str(spec.dtype) == "E7"
        assert spec.retained == ("5", "3")
        assert spec.retained_input == ("B2", "D")

    def test_minimal_a1(self):
        spec = parse_spec('{"diagram": "A1", "retained": [1]}')
        assert spec.retained == ("1",)

    def test_options_parsed(self):
        spec = parse_spec('{"diagram": "A1", "retained": [1], '
                          '"options": {"oracle": false, "seed": 7}}')
        assert spec.options.oracle is False
        assert spec.options.seed == 7
        assert spec.options.svg is True

    @pytest.mark.parametrize("text,code", [
        ("not json", "malformed-json"),
        ('{"diagram": "Q3", "retained": [1]}', "unknown-diagram"),
        ('{"diagram": "D4", "retained": [1, 1]}', "duplicate-vertex"),
        ('{"diagram": "D4", "retained": [1]}', "unknown-vertex"),
        ('{"diagram": "D4", "retained": ["f1", "f1"]}', "duplicate-vertex"),
        ('{"diagram": "D4", "retained": ["f1"], "bogus": 1}', "unknown-field"),
        ('{"diagram": "D4", "retained": ["R"]}', "extended-vertex"),
        ('{"diagram": "D4", "retained": ["f1", 0]}', "extended-vertex"),
        ('{"diagram": "D4"}', "missing-field"),
        ('{"diagram": "D4", "retained": []}', "bad-type"),
        ('{"diagram": "D4", "retained": ["f1"], "options": {"zap": 1}}',
         "unknown-field"),
    ])
    def test_error_codes(self, text, code):
        with pytest.raises(SpecError) as err:
            parse_spec(text)
        assert err.value.code == code

    def test_duplicate_after_alias_resolution(self):
        with pytest.raises(SpecError) as err:
            parse_spec('{"diagram": "E7", "retained": ["B2", "5"]}')
        assert err.value.code == "duplicate-vertex"


class TestDescribe:
    def test_d5(self):
        text = describe("D5")
        assert "6 vertices" in text
        for token in ("h2", "h3", "f1", "B2 = h3"):
            assert token in text

    def test_a1_notes_double_edge(self):
        assert "double edge" in describe("A1")

    def test_e8(self):
        text = describe("E8")
        assert "9 vertices" in text
        assert " 6 " in text  # highest multiplicity


class TestRunReport:
    def test_e7_report_schema_valid(self, tmp_path):
        spec = parse_spec(E7_SPEC)
        report = run_report(spec, str(tmp_path))
        jsonschema.validate(report, SCHEMA)
        on_disk = json.loads((tmp_path / "report.json").read_text())
        jsonschema.validate(on_disk, SCHEMA)
        assert on_disk == json.loads(json.dumps(report))

    def test_e7_report_contents(self, tmp_path):
        report = run_report(parse_spec(E7_SPEC), str(tmp_path))
        assert report["counts"]["chambers"] == 12
        assert report["counts"]["walls"] == 6
        assert report["bounds"] == {"lower": 1, "upper": 12}
        assert report["oracle"]["region_count"] == 12
        assert report["oracle"]["sign_vector_count"] == 12
        assert report["oracle"]["count_match"] is True
        assert report["oracle"]["walls_match"] is True
        assert report["input"]["retained_input"] == ["B2", "D"]

    def test_e7_dot_is_12_cycle(self, tmp_path):
        run_report(parse_spec(E7_SPEC), str(tmp_path))
        dot = (tmp_path / "skeleton.dot").read_text()
        nodes = re.findall(r"^\s*c(\d+) \[", dot, re.M)
        edges = re.findall(r"^\s*c(\d+) -- c(\d+)", dot, re.M)
        assert len(nodes) == 12
        assert len(edges) == 12
        degree = {v: 0 for v in nodes}
        for a, b in edges:
            degree[a] += 1
            degree[b] += 1
        assert all(d == 2 for d in degree.values())

    def test_e7_svg_has_six_lines(self, tmp_path):
        run_report(parse_spec(E7_SPEC), str(tmp_path))
        svg = (tmp_path / "chambers.svg").read_text()
        assert svg.count("<line") == 6

    def test_reruns_byte_identical(self, tmp_path):
        a = tmp_path / "a"
        b = tmp_path / "b"
        run_report(parse_spec(E7_SPEC), str(a))
        run_report(parse_spec(E7_SPEC), str(b))
        for name in ("report.json", "skeleton.dot", "chambers.svg"):
            assert (a / name).read_bytes() == (b / name).read_bytes()

    def test_rank3_svg_skipped_with_notice(self, tmp_path):
        spec = parse_spec('{"diagram": "D4", "retained": ["A1", "A2", "A3"]}')
        report = run_report(spec, str(tmp_path))
        assert report["files"]["svg"] is None
        assert any("skipped" in n for n in report["notices"])
        assert not (tmp_path / "chambers.svg").exists()
        jsonschema.validate(report, SCHEMA)

    def test_no_oracle_spec_option(self, tmp_path):
        spec = parse_spec('{"diagram": "E7", "retained": ["B2", "D"], '
                          '"options": {"oracle": false}}')
        report = run_report(spec, str(tmp_path))
        assert report["oracle"] == {"enabled": False}
        assert report["counts"]["chambers"] == 12
        jsonschema.validate(report, SCHEMA)


class TestMainExitCodes:
    def test_describe_ok(self, capsys):
        assert main(["describe", "D4"]) == 0
        assert "h2" in capsys.readouterr().out

    def test_describe_unknown_diagram(self, capsys):
        assert main(["describe", "Z9"]) == 2

    def test_report_ok(self, tmp_path, capsys):
        spec_file = write_spec(tmp_path, E7_SPEC)
        assert main(["report", "--spec", spec_file, "--out", str(tmp_path / "out")]) == 0
        out = capsys.readouterr().out
        assert "12 chambers" in out

    def test_input_error_is_2(self, tmp_path, capsys):
        spec_file = write_spec(tmp_path, '{"diagram": "D4", "retained": [1, 1]}')
        assert main(["report", "--spec", spec_file, "--out", str(tmp_path)]) == 2
        assert "input error" in capsys.readouterr().err

    def test_missing_spec_file_is_2(self, tmp_path):
        assert main(["knit", "--spec", str(tmp_path / "nope.json")]) == 2

    def test_resource_cap_is_4(self, tmp_path, capsys):
        spec_file = write_spec(
            tmp_path, '{"diagram": "E8", "retained": ["3", "5", "7", "8"]}')
        assert main(["oracle", "--spec", spec_file]) == 4
        assert "resource cap" in capsys.readouterr().err

    def test_knit_output(self, tmp_path, capsys):
        spec_file = write_spec(tmp_path, E7_SPEC)
        assert main(["knit", "--spec", spec_file]) == 0
        out = capsys.readouterr().out
        assert "0 -> 3 -> 0^2 + 5^3 -> 3 -> 0" in out

    def test_chambers_output(self, tmp_path, capsys):
        spec_file = write_spec(tmp_path, E7_SPEC)
        assert main(["chambers", "--spec", spec_file]) == 0
        out = capsys.readouterr().out
        assert "12 chambers, 6 walls" in out
        assert "at least 1, at most 12" in out

    def test_seed_flag_changes_generic_points_only(self, tmp_path):
        spec_file = write_spec(tmp_path, E7_SPEC)
        out1 = tmp_path / "s1"
        out2 = tmp_path / "s2"
        assert main(["report", "--spec", spec_file, "--out", str(out1),
                     "--seed", "5"]) == 0
        assert main(["report", "--spec", spec_file, "--out", str(out2),
                     "--seed", "5"]) == 0
        assert (out1 / "report.json").read_bytes() == (out2 / "report.json").read_bytes()
        r = json.loads((out1 / "report.json").read_text())
        assert r["generic_points"]["seed"] == 5
