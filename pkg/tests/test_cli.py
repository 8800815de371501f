import json

import pytest

from portraits.cli import main

DEGREE5 = "degree 5\nset 0 3/4\nset 1/8 5/8\nset 1/4\nset 1/2\n"
BAD_P4 = "degree 3\nset 0\nset 1/2\nset 1/8 3/8\nset 5/8 7/8\n"
BAD_P3 = "degree 5\nset 1/8 5/8\n"
BAD_P2 = "degree 5\nset 0 1/2\nset 1/4 3/4\n"
BAD_P1 = "degree 5\nset 1/8 1/4\n"


@pytest.fixture
def d5_file(tmp_path):
    path = tmp_path / "d5.txt"
    path.write_text(DEGREE5)
    return str(path)


def write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


class TestValidate:
    def test_ok(self, d5_file, capsys):
        assert main(["validate", d5_file]) == 0
        assert capsys.readouterr().out.strip() == "ok"

    def test_p4_code(self, tmp_path, capsys):
        assert main(["validate", write(tmp_path, "p4.txt", BAD_P4)]) == 1
        assert capsys.readouterr().out.startswith("P4")

    def test_p3_code(self, tmp_path, capsys):
        assert main(["validate", write(tmp_path, "p3.txt", BAD_P3)]) == 1
        assert capsys.readouterr().out.startswith("P3-missing")

    def test_p2_code(self, tmp_path, capsys):
        assert main(["validate", write(tmp_path, "p2.txt", BAD_P2)]) == 1
        assert capsys.readouterr().out.startswith("P2-linked")

    def test_p1_code(self, tmp_path, capsys):
        assert main(["validate", write(tmp_path, "p1.txt", BAD_P1)]) == 1
        assert capsys.readouterr().out.startswith("P1")

    def test_parse_error_exits_2(self, tmp_path, capsys):
        path = write(tmp_path, "bad.txt", "set 1/8\n")
        with pytest.raises(SystemExit) as exc:
            main(["validate", path])
        assert exc.value.code == 2
        assert "line 1" in capsys.readouterr().err

    def test_missing_file_exits_2(self):
        with pytest.raises(SystemExit) as exc:
            main(["validate", "/nonexistent/portrait.txt"])
        assert exc.value.code == 2


class TestBuild:
    def test_report_shows_fixed_points(self, d5_file, capsys):
        assert main(["build", d5_file]) == 0
        out = capsys.readouterr().out
        assert "fixed points: 5" in out
        assert "round trip: ok" in out

    def test_invalid_portrait_fails(self, tmp_path, capsys):
        assert main(["build", write(tmp_path, "p4.txt", BAD_P4)]) == 1
        assert "P4" in capsys.readouterr().out

    def test_artifacts_written(self, d5_file, tmp_path, capsys):
        svg = tmp_path / "out.svg"
        report = tmp_path / "report.txt"
        data = tmp_path / "report.json"
        assert main(["build", d5_file, "--svg", str(svg),
                     "--report", str(report), "--json", str(data)]) == 0
        assert svg.read_text().startswith("<?xml")
        assert "fixed points: 5" in report.read_text()
        payload = json.loads(data.read_text())
        assert payload["fixed_points"] == 5
        assert payload["round_trip_ok"] is True
        assert payload["total_degree"] == 5


class TestRoundtrip:
    def test_output_is_normalized_input(self, d5_file, capsys):
        assert main(["roundtrip", d5_file]) == 0
        out = capsys.readouterr().out
        assert out == "degree 5\nset 0/1 3/4\nset 1/8 5/8\nset 1/4\nset 1/2\n"

    def test_unnormalized_input(self, tmp_path, capsys):
        path = write(tmp_path, "u.txt", "degree 5\nset 6/8 0\nset 5/8 1/8\nset 2/8\nset 1/2\n")
        assert main(["roundtrip", path]) == 0
        out = capsys.readouterr().out
        assert out == "degree 5\nset 0/1 3/4\nset 1/8 5/8\nset 1/4\nset 1/2\n"


class TestEnumerate:
    def test_rotation_sets(self, capsys):
        assert main(["enumerate", "--degree", "2", "--max-period", "2"]) == 0
        out = capsys.readouterr().out
        assert "n=2 m=1 deployment=2 angles 1/3 2/3" in out

    def test_portraits_reparse(self, capsys):
        assert main(["enumerate", "--degree", "2", "--max-period", "3",
                     "--portraits"]) == 0
        out = capsys.readouterr().out
        assert "# total: 4 portraits" in out
        # the listing itself is valid portrait syntax
        from portraits import parse_portrait, validate_portrait
        blocks = [b for b in out.split("# portrait")[1:]]
        for block in blocks:
            body = "\n".join(line for line in block.splitlines()[1:]
                             if line and not line.startswith("#"))
            assert validate_portrait(parse_portrait(body)).ok
