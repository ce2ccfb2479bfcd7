import json
import logging

import pytest

from kpuzzle.__main__ import cli_dispatch, loglevel_from_str
from kpuzzle.cmds import EXIT_OK, EXIT_USAGE, parse_alphabet
from kpuzzle.grothendieck import grothendieck
from tests.utils import diagram, rf

T2_SINGLE = ["--rule", "T2", "--k", "2", "--n", "5", "--lambda", "2", "--mu", "1"]


class TestLogLevel:
    def test_known(self):
        assert loglevel_from_str("info") == logging.INFO
        assert loglevel_from_str("WARNING") == logging.WARNING

    def test_unknown(self):
        assert loglevel_from_str("chatty") == logging.DEBUG


class TestAlphabet:
    def test_keywords(self):
        assert parse_alphabet("sym", 3) == ()
        assert parse_alphabet("ones", 2) == (rf("1"), rf("1"))
        assert parse_alphabet("rev", 2) == (rf("y2"), rf("y1"))

    def test_values(self):
        assert parse_alphabet("2, y1, 1/3", 3) == (rf("2"), rf("y1"), rf("1/3"))

    def test_length(self):
        with pytest.raises(ValueError) as excinfo:
            parse_alphabet("1,2", 3)
        assert "expected 3 values" in str(excinfo.value)


class TestCommands:
    def test_groth(self, capsys):
        code = cli_dispatch(
            ["groth", "--k", "2", "--n", "4", "--shape", "1", "--y", "ones"]
        )
        assert code == EXIT_OK
        assert rf(capsys.readouterr().out.strip()) == rf("1 - x1*x2")

    @pytest.mark.parametrize("method", ["det", "inductive", "lattice"])
    def test_groth_methods(self, capsys, method):
        lam = diagram("2,1", 2, 4)
        args = ["groth", "--k", "2", "--n", "4", "--shape", "2,1", "--method", method]
        assert cli_dispatch(args) == EXIT_OK
        assert rf(capsys.readouterr().out.strip()) == grothendieck(lam)
        assert cli_dispatch(args + ["--dual"]) == EXIT_OK
        expected = grothendieck(lam, dual_basis=True)
        assert rf(capsys.readouterr().out.strip()) == expected

    def test_coeff(self, capsys):
        assert cli_dispatch(["coeff"] + T2_SINGLE + ["--nu", "3,1"]) == EXIT_OK
        assert capsys.readouterr().out.strip() == "-y4/y2"

    def test_expand_text(self, capsys):
        args = ["expand", "--rule", "T1'", "--k", "2", "--n", "4"]
        assert cli_dispatch(args + ["--lambda", "2,2", "--mu", "2,1"]) == EXIT_OK
        lines = capsys.readouterr().out.strip().splitlines()
        assert lines == ["1: 1", "2: -1", "1,1: -1", "2,1: 1"]

    def test_expand_json(self, capsys):
        args = ["expand", "--rule", "T1", "--k", "2", "--n", "4", "--json"]
        assert cli_dispatch(args + ["--lambda", "1", "--mu", "1"]) == EXIT_OK
        document = json.loads(capsys.readouterr().out)
        assert document["coefficients"] == {"2": "1", "1,1": "1", "2,1": "-1"}

    def test_puzzles(self, capsys):
        assert cli_dispatch(["puzzles"] + T2_SINGLE + ["--nu", "3,1"]) == EXIT_OK
        out = capsys.readouterr().out
        assert out.startswith("# puzzle 1,")
        assert "weight -y4/y2" in out

    def test_render(self, capsys, tmp_path):
        args = ["coeff"] + T2_SINGLE + ["--nu", "3,1", "--render-svg", str(tmp_path)]
        assert cli_dispatch(args) == EXIT_OK
        assert [p.name for p in tmp_path.iterdir()] == ["T2_2_1_3-1_1.svg"]

    def test_expand_render(self, capsys, tmp_path):
        args = ["expand", "--rule", "T1", "--k", "2", "--n", "4"]
        args += ["--lambda", "1", "--mu", "1", "--render-svg", str(tmp_path)]
        assert cli_dispatch(args) == EXIT_OK
        lines = capsys.readouterr().out.strip().splitlines()
        assert lines == ["2: 1", "1,1: 1", "2,1: -1"]
        stems = {p.name.rsplit("_", 1)[0] for p in tmp_path.iterdir()}
        assert stems >= {"T1_1_1_2", "T1_1_1_1-1", "T1_1_1_2-1"}

    def test_coeff_json(self, capsys):
        args = ["coeff"] + T2_SINGLE + ["--nu", "3,1", "--json"]
        assert cli_dispatch(args) == EXIT_OK
        document = json.loads(capsys.readouterr().out)
        assert document["nu"] == "3,1"
        assert document["coefficient"] == "-y4/y2"

    def test_groth_json(self, capsys):
        args = ["groth", "--k", "2", "--n", "4", "--shape", "1", "--y", "ones"]
        assert cli_dispatch(args + ["--dual", "--json"]) == EXIT_OK
        document = json.loads(capsys.readouterr().out)
        assert (document["shape"], document["dual"]) == ("1", True)
        expected = grothendieck(diagram("1", 2, 4), (1, 1, 1, 1), dual_basis=True)
        assert rf(document["polynomial"]) == expected

    def test_verify_ybe(self, capsys):
        assert cli_dispatch(["verify", "ybe"]) == EXIT_OK
        out = capsys.readouterr().out
        assert "rank 1: 64/64 components agree" in out
        assert "rank 2: 729/729 components agree" in out

    def test_verify_cross(self, capsys):
        args = ["verify", "cross", "--rule", "T2", "--k", "1", "--maxbox", "1x2"]
        assert cli_dispatch(args) == EXIT_OK
        out = capsys.readouterr().out
        assert out.startswith("T2 in Gr(1,3)")
        assert "FAIL" not in out
        assert out.count("PASS") == 9


class TestErrors:
    def test_bad_partition(self, capsys):
        args = ["coeff"] + T2_SINGLE + ["--nu", "4,4"]
        assert cli_dispatch(args) == EXIT_USAGE
        assert "kpuzzle: error: Invalid partition" in capsys.readouterr().err

    def test_bad_rule(self, capsys):
        args = ["expand", "--rule", "T9", "--k", "1", "--n", "2"]
        assert cli_dispatch(args + ["--lambda", "", "--mu", ""]) == EXIT_USAGE
        assert "Invalid rule" in capsys.readouterr().err

    def test_bad_box(self, capsys):
        args = ["verify", "cross", "--rule", "T1", "--k", "1", "--maxbox", "two"]
        assert cli_dispatch(args) == EXIT_USAGE

    def test_bad_config(self, capsys, tmp_path):
        path = tmp_path / "settings.yaml"
        path.write_text("oracle:\n  colour: red\n", encoding="utf-8")
        args = ["--config", str(path), "verify", "ybe"]
        assert cli_dispatch(args) == EXIT_USAGE
        assert "Invalid key oracle.colour" in capsys.readouterr().err

    def test_missing_argument(self):
        with pytest.raises(SystemExit) as excinfo:
            cli_dispatch(["coeff", "--rule", "T2"])
        assert excinfo.value.code == 2
