"""End-to-end tests of the involute-tower command line."""

from __future__ import annotations

import csv
import io
import json
import math
import xml.etree.ElementTree as ET
from pathlib import Path

import pytest

from involute_tower import __version__
from involute_tower.cli import EXIT_FAILURE, EXIT_OK, EXIT_USAGE, main
from involute_tower.render.svg import SVG_NS
from involute_tower.series.analytic import remainder_bound

pytestmark = pytest.mark.integration

NS = {"svg": SVG_NS}


@pytest.fixture(autouse=True)
def isolated_home(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> None:
    """Keep user themes in ~/.involute-tower out of the tests."""
    monkeypatch.setenv("HOME", str(tmp_path))


def run_cli(capsys: pytest.CaptureFixture[str], *argv: str) -> tuple[int, str, str]:
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def parse_svg(text: str) -> ET.Element:
    return ET.fromstring(text.encode("utf-8"))


class TestGlobalOptions:
    """Test options shared by every subcommand."""

    def test_version(self, capsys: pytest.CaptureFixture[str]) -> None:
        code, out, _ = run_cli(capsys, "--version")
        assert code == EXIT_OK
        assert __version__ in out

    def test_command_is_required(self, capsys: pytest.CaptureFixture[str]) -> None:
        code, _, err = run_cli(capsys)
        assert code == EXIT_USAGE
        assert "usage" in err

    def test_unknown_theme(self, capsys: pytest.CaptureFixture[str]) -> None:
        code, _, err = run_cli(capsys, "--theme", "sepia", "polygon")
        assert code == EXIT_FAILURE
        assert "THEME" in err

    def test_theme_applies_to_figures(self, capsys: pytest.CaptureFixture[str]) -> None:
        code, out, _ = run_cli(
            capsys, "--theme", "dark", "render", "--kind", "polygon", "--samples", "8"
        )
        assert code == EXIT_OK
        assert parse_svg(out).find("svg:rect", NS).get("fill") == "#212121"


class TestTowerCommand:
    """Test ``involute-tower tower``."""

    def test_json_segments(self, capsys: pytest.CaptureFixture[str]) -> None:
        """
        GIVEN: theta = 1 and depth 4
        WHEN: Writing the tower as JSON
        THEN: The segment lengths are 1, 1/2, 1/6, 1/24 to 15 digits
        """
        code, out, _ = run_cli(
            capsys, "tower", "--theta", "1.0", "--depth", "4", "--format", "json"
        )
        assert code == EXIT_OK
        data = json.loads(out)
        expected = [1.0, 0.5, 1 / 6, 1 / 24]
        assert [f"{v:.15g}" for v in data["segment_lengths"]] == [
            f"{v:.15g}" for v in expected
        ]
        assert list(data) == [
            "theta",
            "depth",
            "endpoints",
            "segment_lengths",
            "remainder_bounds",
            "checks",
        ]
        assert all(check["passed"] for check in data["checks"])

    def test_json_is_deterministic(self, capsys: pytest.CaptureFixture[str]) -> None:
        _, first, _ = run_cli(capsys, "tower", "--theta", "pi/4", "--depth", "3")
        _, second, _ = run_cli(capsys, "tower", "--theta", "pi/4", "--depth", "3")
        assert first == second

    def test_csv_last_endpoint_converges(
        self, capsys: pytest.CaptureFixture[str]
    ) -> None:
        theta = math.pi / 3
        code, out, _ = run_cli(
            capsys,
            "tower",
            "--theta",
            "pi/3",
            "--depth",
            "6",
            "--samples",
            "50",
            "--format",
            "csv",
        )
        assert code == EXIT_OK
        assert out.startswith("level,t,x,y\r\n")
        rows = list(csv.DictReader(io.StringIO(out, newline="")))
        assert len(rows) == 7 * 50
        last = rows[-1]
        assert last["level"] == "6"
        distance = math.hypot(
            float(last["x"]) - 0.5, float(last["y"]) - math.sqrt(3) / 2
        )
        assert distance <= remainder_bound(6, theta)

    def test_svg(self, capsys: pytest.CaptureFixture[str]) -> None:
        code, out, _ = run_cli(
            capsys, "tower", "--depth", "3", "--samples", "20", "--format", "svg"
        )
        assert code == EXIT_OK
        assert len(parse_svg(out).findall(".//svg:path", NS)) == 4

    @pytest.mark.parametrize("theta", ["0", "-1", "2", "pi"])
    def test_degenerate_theta_is_a_usage_error(
        self, capsys: pytest.CaptureFixture[str], theta: str
    ) -> None:
        code, out, err = run_cli(capsys, "tower", "--theta", theta)
        assert code == EXIT_USAGE
        assert out == ""
        assert "VALIDATION" in err

    def test_unparseable_theta(self, capsys: pytest.CaptureFixture[str]) -> None:
        code, _, err = run_cli(capsys, "tower", "--theta", "one")
        assert code == EXIT_USAGE
        assert "--theta" in err

    def test_depth_beyond_limit(self, capsys: pytest.CaptureFixture[str]) -> None:
        code, _, _ = run_cli(capsys, "tower", "--depth", "20")
        assert code == EXIT_USAGE

    def test_unwritable_output(
        self, capsys: pytest.CaptureFixture[str], tmp_path: Path
    ) -> None:
        target = tmp_path / "missing" / "tower.json"
        code, _, err = run_cli(capsys, "tower", "--out", str(target))
        assert code == EXIT_FAILURE
        assert "cannot write output" in err

    def test_out_file(self, capsys: pytest.CaptureFixture[str], tmp_path: Path) -> None:
        target = tmp_path / "tower.json"
        code, out, _ = run_cli(capsys, "tower", "--depth", "2", "--out", str(target))
        assert code == EXIT_OK
        assert out == ""
        assert json.loads(target.read_text(encoding="utf-8"))["depth"] == 2


class TestInvoluteCommand:
    """Test ``involute-tower involute``."""

    def test_circle_csv(self, capsys: pytest.CaptureFixture[str]) -> None:
        code, out, _ = run_cli(capsys, "involute", "--samples", "101")
        assert code == EXIT_OK
        rows = list(csv.DictReader(io.StringIO(out, newline="")))
        spiral = [row for row in rows if row["level"] == "1"]
        assert len(spiral) == 101
        for row in spiral:
            t = float(row["t"])
            assert float(row["x"]) == pytest.approx(
                math.cos(t) + t * math.sin(t), abs=1e-8
            )
            assert float(row["y"]) == pytest.approx(
                math.sin(t) - t * math.cos(t), abs=1e-8
            )

    def test_parabola_json(self, capsys: pytest.CaptureFixture[str]) -> None:
        code, out, _ = run_cli(
            capsys, "involute", "--curve", "parabola", "--format", "json", "--samples", "5"
        )
        assert code == EXIT_OK
        data = json.loads(out)
        assert data["curve"] == "parabola"
        assert data["domain"] == [0.0, 1.0]
        assert len(data["involute"]) == 5

    def test_restricted_interval(self, capsys: pytest.CaptureFixture[str]) -> None:
        code, out, _ = run_cli(
            capsys,
            "involute",
            "--start",
            "pi/2",
            "--end",
            "pi",
            "--format",
            "json",
            "--samples",
            "3",
        )
        assert code == EXIT_OK
        data = json.loads(out)
        assert data["domain"] == pytest.approx([math.pi / 2, math.pi])
        # The string starts at the new lower bound
        first = data["involute"][0]
        assert first["x"] == pytest.approx(0.0, abs=1e-15)
        assert first["y"] == pytest.approx(1.0)

    def test_empty_interval(self, capsys: pytest.CaptureFixture[str]) -> None:
        code, _, err = run_cli(capsys, "involute", "--start", "2", "--end", "1")
        assert code == EXIT_USAGE
        assert "--start must be less than --end" in err

    def test_arc_svg(self, capsys: pytest.CaptureFixture[str]) -> None:
        code, out, _ = run_cli(
            capsys, "involute", "--curve", "arc", "--format", "svg", "--samples", "20"
        )
        assert code == EXIT_OK
        root = parse_svg(out)
        assert len(root.findall(".//svg:path", NS)) == 2
        assert len(root.findall(".//svg:line", NS)) == 1

    def test_line_unwinds_onto_a_point(self, capsys: pytest.CaptureFixture[str]) -> None:
        code, out, _ = run_cli(capsys, "involute", "--curve", "line", "--samples", "5")
        assert code == EXIT_OK
        rows = list(csv.DictReader(io.StringIO(out, newline="")))
        for row in rows:
            if row["level"] == "1":
                assert float(row["x"]) == pytest.approx(0.0, abs=1e-12)


class TestPolygonCommand:
    """Test ``involute-tower polygon``."""

    def test_json(self, capsys: pytest.CaptureFixture[str]) -> None:
        code, out, _ = run_cli(capsys, "polygon", "--n", "5", "--side", "2")
        assert code == EXIT_OK
        data = json.loads(out)
        assert [arc["radius"] for arc in data["arcs"]] == [2.0, 4.0, 6.0, 8.0, 10.0]
        assert data["chain_length"] == pytest.approx(12 * math.pi)

    def test_svg_has_one_path_per_arc(self, capsys: pytest.CaptureFixture[str]) -> None:
        code, out, _ = run_cli(capsys, "polygon", "--turns", "2", "--format", "svg")
        assert code == EXIT_OK
        assert len(parse_svg(out).findall(".//svg:path", NS)) == 10

    def test_csv(self, capsys: pytest.CaptureFixture[str]) -> None:
        code, out, _ = run_cli(
            capsys, "polygon", "--n", "3", "--samples", "4", "--format", "csv"
        )
        assert code == EXIT_OK
        rows = list(csv.DictReader(io.StringIO(out, newline="")))
        assert len(rows) == 12
        assert {row["level"] for row in rows} == {"1", "2", "3"}

    @pytest.mark.parametrize(
        "flags", [["--n", "2"], ["--side", "0"], ["--turns", "0"], ["--samples", "1"]]
    )
    def test_invalid(self, capsys: pytest.CaptureFixture[str], flags: list[str]) -> None:
        code, _, _ = run_cli(capsys, "polygon", *flags)
        assert code == EXIT_USAGE


class TestRenderCommand:
    """Test ``involute-tower render``."""

    def test_pentagon(self, capsys: pytest.CaptureFixture[str]) -> None:
        """Five arcs, five dashed strings and the outline."""
        code, out, _ = run_cli(capsys, "render", "--kind", "polygon", "--n", "5", "--side", "1")
        assert code == EXIT_OK
        root = parse_svg(out)
        assert root.get("version") == "1.1"
        assert len(root.findall(".//svg:path", NS)) == 5
        assert len(root.findall(".//svg:polygon", NS)) == 1
        dashed = [
            line
            for line in root.findall(".//svg:line", NS)
            if line.get("stroke-dasharray")
        ]
        assert len(dashed) == 5

    def test_circle_involute_to_file(
        self, capsys: pytest.CaptureFixture[str], tmp_path: Path
    ) -> None:
        target = tmp_path / "circle.svg"
        code, out, _ = run_cli(
            capsys, "render", "--kind", "circle-involute", "--out", str(target)
        )
        assert code == EXIT_OK
        assert out == ""
        root = parse_svg(target.read_text(encoding="utf-8"))
        assert len(root.findall(".//svg:path", NS)) == 2

    def test_zoomed_tower(self, capsys: pytest.CaptureFixture[str]) -> None:
        code, out, _ = run_cli(
            capsys,
            "render",
            "--kind",
            "tower",
            "--theta",
            "1.2",
            "--depth",
            "5",
            "--samples",
            "40",
            "--zoom",
            "0.2,0.4,1.0,1.2",
        )
        assert code == EXIT_OK
        root = parse_svg(out)
        assert root.get("viewBox") == "0.2 -1.2 0.8 0.8"
        assert len(root.findall(".//svg:path", NS)) == 6

    def test_size(self, capsys: pytest.CaptureFixture[str]) -> None:
        code, out, _ = run_cli(
            capsys, "render", "--kind", "arc-string", "--width", "300", "--height", "200"
        )
        assert code == EXIT_OK
        root = parse_svg(out)
        assert (root.get("width"), root.get("height")) == ("300", "200")

    @pytest.mark.parametrize(
        "flags",
        [
            ["--kind", "spiral"],
            ["--kind", "tower", "--zoom", "1,1,0,0"],
            ["--kind", "tower", "--zoom", "1,2,3"],
            ["--kind", "arc-string", "--at", "2"],
            ["--kind", "tower", "--theta", "0"],
            ["--kind", "polygon", "--n", "2"],
            ["--kind", "tower", "--depth", "30"],
        ],
    )
    def test_invalid(self, capsys: pytest.CaptureFixture[str], flags: list[str]) -> None:
        code, out, _ = run_cli(capsys, "render", *flags)
        assert code == EXIT_USAGE
        assert out == ""


class TestVerifyCommand:
    """Test ``involute-tower verify``."""

    @pytest.mark.slow
    def test_defaults_pass(self, capsys: pytest.CaptureFixture[str]) -> None:
        code, out, err = run_cli(capsys, "verify")
        assert code == EXIT_OK
        report = json.loads(out)
        assert report["passed"] is True
        assert "checks passed" in err

    def test_depth_one(self, capsys: pytest.CaptureFixture[str]) -> None:
        code, out, _ = run_cli(capsys, "verify", "--max-depth", "1", "--thetas", "1.0")
        assert code == EXIT_OK
        names = [check["name"] for check in json.loads(out)["checks"]]
        assert "induction AA0 -> AA1" in names
        assert not any(name.startswith("induction AA1") for name in names)

    def test_impossible_tolerance_fails_numeric_checks_only(
        self, capsys: pytest.CaptureFixture[str]
    ) -> None:
        code, out, err = run_cli(
            capsys, "verify", "--max-depth", "3", "--thetas", "0.3,1.0", "--tol", "1e-30"
        )
        assert code == EXIT_FAILURE
        report = json.loads(out)
        assert report["passed"] is False
        exact = [
            check
            for check in report["checks"]
            if check["name"].startswith("induction") or "' = " in check["name"]
        ]
        assert exact
        assert all(check["passed"] for check in exact)
        assert "checks failed" in err

    def test_transcript(self, capsys: pytest.CaptureFixture[str]) -> None:
        code, _, err = run_cli(
            capsys, "verify", "--max-depth", "2", "--thetas", "1.0", "--transcript"
        )
        assert code == EXIT_OK
        assert "AA1 -> AA2" in err
        assert "s(t) = 1/2*t^2" in err

    @pytest.mark.parametrize("depth", ["0", "13"])
    def test_depth_out_of_range_is_a_usage_error(
        self, capsys: pytest.CaptureFixture[str], depth: str
    ) -> None:
        code, out, err = run_cli(capsys, "verify", "--max-depth", depth)
        assert code == EXIT_USAGE
        assert out == ""
        assert "VALIDATION" in err

    @pytest.mark.parametrize("text", [",", "", " , "])
    def test_empty_theta_list_is_rejected(
        self, capsys: pytest.CaptureFixture[str], text: str
    ) -> None:
        """
        GIVEN: A theta list without any angle
        WHEN: Running verify
        THEN: It is a usage error and no report is written
        """
        code, out, err = run_cli(capsys, "verify", "--thetas", text)
        assert code == EXIT_USAGE
        assert out == ""
        assert "at least one angle" in err

    def test_invalid_theta_list(self, capsys: pytest.CaptureFixture[str]) -> None:
        code, _, _ = run_cli(capsys, "verify", "--thetas", "0.3,2.0")
        assert code == EXIT_USAGE
