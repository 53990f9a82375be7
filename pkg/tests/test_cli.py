import json
import subprocess
import sys

import pytest

from sylgal.cli import main
from sylgal.configs import gen_hesse, gen_random_grid, gen_random_points, gen_simplex4
from sylgal.dataset import (
    DatasetError,
    dumps_grid,
    dumps_points,
    dumps_scalars,
    loads_grid,
    loads_points,
)
from sylgal.errors import DegenerateError
from sylgal.scalars import ScalarField

CF = ScalarField("C", "float")
HF = ScalarField("H", "float")
H = ScalarField("H", "exact")


def run(argv, capsys):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def hesse_file(tmp_path):
    p = tmp_path / "hesse.json"
    p.write_text(dumps_points(gen_hesse()))
    return p


class TestDataset:
    def test_exact_round_trip_is_byte_stable(self):
        for ps in (gen_hesse(), gen_random_points(6, H, 1)):
            text = dumps_points(ps)
            back = loads_points(text)
            assert back.points == ps.points
            assert dumps_points(back) == text

    def test_float_round_trip(self):
        ps = gen_random_points(8, HF, 2)
        assert loads_points(dumps_points(ps)).points == ps.points

    def test_grid_round_trip(self):
        G = gen_random_grid(3, 4, CF, 5)
        back = loads_grid(dumps_grid(G))
        assert back.A == G.A and back.B == G.B

    def test_hesse_file_content(self):
        text = dumps_points(gen_hesse())
        assert '[["0", "0"], ["1/2", "0-1/2r"]]' in text
        assert '"sqrt_m": 3' in text

    def test_scalars_file(self):
        text = dumps_scalars(gen_simplex4("exact"), ScalarField("H", "exact", 5))
        assert json.loads(text)["scalars"][4] == ["1/4-1/4r"] * 4

    @pytest.mark.parametrize(
        "text, where",
        [
            ('{"field": "C",\n "backend": "exact" "points": []}', "line 2"),
            ('{"field": "C", "backend": "exact", "sqrt_m": 3, "points": [], "x": 1}', "unknown keys"),
            ('{"field": "C", "backend": "float", "sqrt_m": 3, "points": []}', "sqrt_m"),
            ('{"field": "C", "backend": "exact", "points": []}', "sqrt_m"),
            ('{"field": "R", "backend": "float", "points": []}', "field"),
            ('{"field": "C", "backend": "exact", "sqrt_m": 3, "points": [[["1", "0"], ["1/0", "0"]]]}', "points[0][1][0]"),
            ('{"field": "C", "backend": "float", "points": [[[1, 0, 0], [0, 0]]]}', "points[0][0]"),
            ('{"field": "C", "backend": "float", "points": [[["1", 0], [0, 0]]]}', "points[0][0][0]"),
        ],
    )
    def test_errors_name_location(self, text, where):
        with pytest.raises(DatasetError, match=None) as exc:
            loads_points(text)
        assert where in str(exc.value)

    def test_duplicates(self):
        text = '{"field": "C", "backend": "float", "points": [[[1, 0], [0, 0]], [[1, 0], [0, 0]]]}'
        with pytest.raises(DegenerateError):
            loads_points(text)


class TestCheckSG:
    def test_hesse(self, hesse_file, capsys):
        code, out, _ = run(["check-sg", hesse_file], capsys)
        rep = json.loads(out)
        assert code == 0 and rep["verdict"] == "pass"
        assert rep["witness"]["count"] == 3 and rep["min_line"]["count"] == 3
        assert rep["histogram"] == {"3": 12}
        assert rep["schema_version"] == 1 and rep["input_digest"].startswith("sha256:")
        assert rep["timing"] is None

    def test_collinear(self, tmp_path, capsys):
        p = tmp_path / "collinear.json"
        p.write_text('{"field": "C", "backend": "float", "points": [[[0, 0], [0, 0]], [[1, 0], [1, 0]], [[2, 0], [2, 0]]]}')
        code, out, _ = run(["check-sg", p], capsys)
        assert code == 2 and json.loads(out)["verdict"] == "hypothesis-violation"

    def test_malformed(self, tmp_path, capsys):
        p = tmp_path / "bad.json"
        p.write_text("{\n  oops")
        code, _, err = run(["check-sg", p], capsys)
        assert code == 3 and "line 2" in err

    def test_missing_file(self, tmp_path, capsys):
        assert run(["check-sg", tmp_path / "nope.json"], capsys)[0] == 3

    def test_text_format_and_timing(self, hesse_file, capsys):
        code, out, _ = run(["check-sg", hesse_file, "--format", "text", "--timing"], capsys)
        assert code == 0 and "verdict: \"pass\"" in out and "timing: null" not in out


class TestGrid:
    def test_generated(self, capsys):
        code, out, _ = run(["grid", "--gen", "random_grid", "--field", "C", "--a", 10, "--b", 10, "--seed", 7], capsys)
        rep = json.loads(out)
        assert code == 0 and rep["witness_count"] == 2 and rep["seed"] == 7

    def test_two_by_two_file(self, tmp_path, capsys):
        p = tmp_path / "g.json"
        p.write_text('{"field": "C", "backend": "exact", "sqrt_m": 3, "A": [["0", "0"], ["1", "0"]], "B": [["0", "0"], ["1", "0"]]}')
        code, out, _ = run(["grid", p], capsys)
        assert code == 0 and json.loads(out)["witness_count"] == 2

    def test_singleton_a(self, capsys):
        assert run(["grid", "--gen", "random_grid", "--a", 1], capsys)[0] == 2

    def test_quaternion(self, capsys):
        code, out, _ = run(["grid", "--gen", "random_grid", "--field", "H", "--a", 4, "--b", 5, "--seed", 1], capsys)
        rep = json.loads(out)
        assert code == 0 and 2 <= rep["witness_count"] <= 5


class TestEnumerate:
    def test_hesse(self, hesse_file, capsys):
        code, out, _ = run(["enumerate", hesse_file], capsys)
        rep = json.loads(out)
        assert code == 0 and rep["histogram"] == {"3": 12} and len(rep["lines"]) == 12

    def test_four_points(self, tmp_path, capsys):
        p = tmp_path / "four.json"
        p.write_text(
            '{"field": "H", "backend": "exact", "sqrt_m": 3, "points": ['
            '[["0","0","0","0"],["0","0","0","0"]], [["1","0","0","0"],["0","1","0","0"]],'
            '[["0","0","1","0"],["0","0","0","-1"]], [["0","0","1","0"],["0","0","0","1"]]]}'
        )
        code, out, _ = run(["enumerate", p], capsys)
        assert code == 0 and json.loads(out)["histogram"] == {"2": 3, "3": 1}

    def test_single_point(self, tmp_path, capsys):
        p = tmp_path / "one.json"
        p.write_text('{"field": "C", "backend": "float", "points": [[[0, 0], [0, 0]]]}')
        assert run(["enumerate", p], capsys)[0] == 2


class TestGen:
    def test_hesse_is_pinned(self, capsys):
        code, out, _ = run(["gen", "hesse", "--backend", "exact"], capsys)
        assert code == 0 and out == dumps_points(gen_hesse())

    def test_hesse_float_rejected(self, capsys):
        assert run(["gen", "hesse", "--backend", "float"], capsys)[0] == 2

    def test_simplex(self, capsys):
        code, out, _ = run(["gen", "simplex4", "--field", "H"], capsys)
        assert code == 0 and len(json.loads(out)["scalars"]) == 5
        assert run(["gen", "simplex4", "--field", "H", "--backend", "exact"], capsys)[0] == 2
        assert run(["gen", "simplex4", "--field", "H", "--backend", "exact", "--sqrt-m", 5], capsys)[0] == 0

    def test_n_too_small(self, capsys):
        assert run(["gen", "random_points", "--n", 2], capsys)[0] == 2

    def test_output_file(self, tmp_path, capsys):
        p = tmp_path / "pts.json"
        code, out, _ = run(["gen", "random_points", "--n", 5, "--seed", 3, "-o", p], capsys)
        assert code == 0 and out == "" and loads_points(p.read_text()).points


def test_module_entry_point(hesse_file):
    proc = subprocess.run([sys.executable, "-m", "sylgal", "check-sg", str(hesse_file)], capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout)["verdict"] == "pass"
