import io
import json

from braidulam.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestClassify:
    def test_ma_even(self, capsys):
        code, out, _ = run_cli(
            capsys, "classify", "--bundle", "ma", "--class", "r=2,s=0,u=0,v=0",
            "--samples", "3",
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["verdict"] == "BUP"
        assert doc["evidence"]["type"] == "parity-obstruction"

    def test_ma_odd(self, capsys):
        code, out, _ = run_cli(capsys, "classify", "--class", "r=1,s=3,u=-1,v=2")
        assert code == 0
        doc = json.loads(out)
        assert doc["verdict"] == "not-BUP"
        assert all(eq["holds"] for eq in doc["evidence"]["equations"])

    def test_t3_tau1(self, capsys):
        code, out, _ = run_cli(
            capsys, "classify", "--bundle", "t3", "--involution", "tau1",
            "--matrix", "1,0,0;0,1,0",
        )
        assert code == 0
        assert json.loads(out)["verdict"] == "not-BUP"

    def test_t3_tau2(self, capsys):
        code, out, _ = run_cli(
            capsys, "classify", "--involution", "tau2", "--matrix", "1,2,5;0,2,1"
        )
        assert code == 0
        assert json.loads(out)["verdict"] == "BUP"

    def test_descriptor_file(self, capsys, tmp_path):
        path = tmp_path / "class.json"
        path.write_text(json.dumps({"bundle": "MA", "class": {"r": 0, "s": 1, "u": 0, "v": 0}}))
        code, out, _ = run_cli(capsys, "classify", "--descriptor", str(path), "--samples", "2")
        assert code == 0
        assert json.loads(out)["verdict"] == "BUP"

    def test_descriptor_stdin(self, capsys, monkeypatch):
        monkeypatch.setattr(
            "sys.stdin", io.StringIO('{"bundle":"T3","matrix":[[0,0,0],[0,0,0]]}')
        )
        code, out, _ = run_cli(
            capsys, "classify", "--descriptor", "-", "--involution", "tau2"
        )
        assert code == 0
        assert json.loads(out)["verdict"] == "not-BUP"

    def test_text_format(self, capsys):
        code, out, _ = run_cli(
            capsys, "classify", "--class", "r=1,s=0,u=0,v=0", "--format", "text"
        )
        assert code == 0
        assert "verdict:    not-BUP" in out

    def test_byte_stable(self, capsys):
        args = ("classify", "--class", "r=2,s=1,u=0,v=-1", "--seed", "9", "--samples", "5")
        _, first, _ = run_cli(capsys, *args)
        _, second, _ = run_cli(capsys, *args)
        assert first == second

    def test_seed_env_override(self, capsys, monkeypatch):
        monkeypatch.setenv("BRAIDULAM_SEED", "123")
        code, out, _ = run_cli(
            capsys, "classify", "--class", "r=0,s=0,u=0,v=0", "--seed", "7", "--samples", "2"
        )
        assert code == 0
        assert json.loads(out)["evidence"]["seed"] == 123

    def test_usage_errors(self, capsys):
        code, _, err = run_cli(capsys, "classify", "--class", "r=1")
        assert code == 2 and err
        code, _, err = run_cli(capsys, "classify", "--matrix", "1,0,0;0,1,0")
        assert code == 2  # missing involution
        code, _, err = run_cli(
            capsys, "classify", "--class", "r=1,s=0,u=0,v=0", "--involution", "tau2"
        )
        assert code == 2
        code, _, err = run_cli(capsys, "classify")
        assert code == 2
        code, _, err = run_cli(
            capsys, "classify", "--bundle", "t3", "--class", "r=1,s=0,u=0,v=0"
        )
        assert code == 2

    def test_malformed_descriptor_json(self, capsys, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{not json")
        code, _, err = run_cli(capsys, "classify", "--descriptor", str(path))
        assert code == 2 and "JSON" in err


class TestWitnessAndVerify:
    def test_witness_output(self, capsys):
        code, out, _ = run_cli(capsys, "witness", "--class", "r=1,s=0,u=0,v=0")
        assert code == 0
        doc = json.loads(out)
        assert doc["witness"]["P1"] == "(x y^-1 x y x^-1 ; 0, 0)"

    def test_witness_even_degree(self, capsys):
        code, _, err = run_cli(capsys, "witness", "--class", "r=2,s=0,u=0,v=0")
        assert code == 2 and err

    def test_verify_round_trip(self, capsys, tmp_path):
        corpus = [
            ("classify", "--class", "r=1,s=1,u=1,v=1"),
            ("classify", "--class", "r=-2,s=0,u=1,v=0", "--samples", "3"),
            ("classify", "--involution", "tau2", "--matrix", "1,0,2;0,2,0"),
            ("classify", "--involution", "tau1", "--matrix", "0,0,0;0,0,0"),
        ]
        for i, args in enumerate(corpus):
            _, out, _ = run_cli(capsys, *args)
            path = tmp_path / f"cert{i}.json"
            path.write_text(out)
            code, verdict_out, _ = run_cli(capsys, "verify", str(path))
            assert code == 0, verdict_out
            assert json.loads(verdict_out)["verified"] is True

    def test_verify_tampered(self, capsys, tmp_path):
        _, out, _ = run_cli(capsys, "classify", "--class", "r=1,s=0,u=0,v=0")
        doc = json.loads(out)
        doc["verdict"] = "BUP"
        path = tmp_path / "bad.json"
        path.write_text(json.dumps(doc))
        code, out, _ = run_cli(capsys, "verify", str(path))
        assert code == 1
        assert json.loads(out)["verified"] is False

    def test_verify_malformed_certificate(self, capsys, tmp_path):
        path = tmp_path / "junk.json"
        path.write_text('{"schema": "braidulam.certificate/1", "verdict": "BUP"}')
        code, _, err = run_cli(capsys, "verify", str(path))
        assert code == 1 and err

    def test_verify_unparseable_json(self, capsys, tmp_path):
        path = tmp_path / "garbage.txt"
        path.write_text("not json at all")
        code, _, err = run_cli(capsys, "verify", str(path))
        assert code == 2 and err


class TestOtherCommands:
    def test_relations(self, capsys):
        code, out, _ = run_cli(capsys, "relations")
        assert code == 0
        doc = json.loads(out)
        assert doc["all_hold"] is True
        assert len(doc["groups"]) == 3

    def test_relations_text(self, capsys):
        code, out, _ = run_cli(capsys, "relations", "--format", "text")
        assert code == 0
        assert "all relations hold" in out

    def test_search(self, capsys):
        code, out, _ = run_cli(
            capsys, "search", "--class", "r=1,s=0,u=0,v=0",
            "--max-factors", "1", "--max-exp", "1",
        )
        assert code == 0
        doc = json.loads(out)
        assert len(doc["hits"]) == 5
        assert doc["bounds"] == {"max_factors": 1, "max_exp": 1}

    def test_search_limit(self, capsys):
        code, _, err = run_cli(
            capsys, "search", "--class", "r=1,s=0,u=0,v=0",
            "--max-factors", "4", "--max-exp", "3",
        )
        assert code == 2 and err

    def test_epsilon(self, capsys):
        code, out, _ = run_cli(capsys, "epsilon", "B")
        assert code == 0
        assert out.strip() == "1"
        code, out, _ = run_cli(capsys, "epsilon", "x^2 y^3 x^-2 y^-3")
        assert out.strip() == "-6"

    def test_epsilon_bad_word(self, capsys):
        code, _, err = run_cli(capsys, "epsilon", "x q")
        assert code == 2 and err
        code, _, err = run_cli(capsys, "epsilon", "x y")
        assert code == 2 and err

    def test_unknown_command(self, capsys):
        assert run_cli(capsys, "frobnicate")[0] == 2
