import json

import pytest

from nsq.cli import main
from nsq.rgf import from_json_dict, rgf_rational
from nsq.semigroup import GeneratorList


def run(capsys, *argv):
    code = main(list(argv))
    cap = capsys.readouterr()
    return code, cap.out, cap.err


class TestBasicCommands:
    def test_quotient_minimal_text(self, capsys):
        code, out, _ = run(capsys, "quotient", "minimal", "--gens", "5,6", "--p", "3")
        assert code == 0
        assert out.strip() == "2 5"

    def test_frobenius(self, capsys):
        code, out, _ = run(capsys, "frobenius", "--gens", "3,5")
        assert code == 0 and out.strip() == "7"

    def test_frobenius_none_json(self, capsys):
        code, out, _ = run(capsys, "frobenius", "--gens", "1", "--format", "json")
        assert code == 0
        assert json.loads(out) == {"frobenius": None}

    def test_membership(self, capsys):
        code, out, _ = run(capsys, "membership", "--gens", "3,5", "--bound", "10")
        assert code == 0 and out.strip() == "0 3 5 6 8 9 10"

    def test_apery_and_gaps(self, capsys):
        code, out, _ = run(capsys, "apery", "--gens", "3,5", "--m", "3")
        assert code == 0 and out.strip() == "0 10 5"
        code, out, _ = run(capsys, "gaps", "--gens", "3,5")
        assert code == 0 and out.strip() == "1 2 4 7"

    def test_denumerant(self, capsys):
        code, out, _ = run(capsys, "denumerant", "--gens", "3,5", "--n", "15")
        assert code == 0 and out.strip() == "2"

    def test_tp_rows(self, capsys):
        code, out, _ = run(capsys, "tp", "--gens", "4,11", "--p", "3")
        assert code == 0
        assert out.splitlines() == ["(1,1) -> 5", "(2,2) -> 10"]


class TestRgfCommands:
    def test_rational_json_round_trip(self, capsys):
        code, out, _ = run(capsys, "rgf", "rational", "--gens", "3,5",
                           "--p", "2", "--format", "json")
        assert code == 0
        d = json.loads(out)
        assert d["num"] == {"0": 1, "4": 1}
        assert d["den"] == [3, 5]
        assert from_json_dict(d) == rgf_rational(GeneratorList.of(3, 5), 2)

    def test_rational_text(self, capsys):
        code, out, _ = run(capsys, "rgf", "rational", "--gens", "3,5", "--p", "2")
        assert code == 0
        assert out.strip() == "(1 + x^4)/((1-x^3)*(1-x^5))"

    def test_verify_passes(self, capsys):
        code, _, err = run(capsys, "rgf", "rational", "--gens", "4,11,14",
                           "--p", "3", "--verify")
        assert code == 0 and err == ""


class TestCtCommand:
    def test_expr(self, capsys):
        code, out, _ = run(capsys, "ct", "--expr",
                           "1/((1 - x*L^-2)*(1 - L^3))")
        assert code == 0
        assert "CT = (1)/(1 - x^3)" in out

    def test_gens_path_matches_series(self, capsys):
        code, out, _ = run(capsys, "ct", "--gens", "3,5", "--p", "2", "--verify")
        assert code == 0
        assert "(1 + x^4)" in out

    def test_non_coprime_fallback(self, capsys):
        code, out, err = run(capsys, "ct", "--gens", "4,8,11", "--p", "3")
        assert code == 0
        assert "CT path unavailable; series path used" in err
        assert out.strip()


class TestVerifyCommand:
    def test_pass(self, capsys):
        code, out, _ = run(capsys, "verify", "--gens", "5,6", "--p", "3")
        assert code == 0
        assert "result: pass" in out


class TestExitCodes:
    def test_usage(self, capsys):
        assert run(capsys, "denumerant", "--gens", "3,5")[0] == 1
        assert run(capsys, "frobenius", "--gens", "3,a")[0] == 1

    def test_domain(self, capsys):
        code, _, err = run(capsys, "frobenius", "--gens", "4,6")
        assert code == 2 and err

    def test_cap(self, capsys):
        code, _, err = run(capsys, "frobenius", "--gens", "101,103",
                           "--sieve-cap", "100")
        assert code == 3 and "cap" in err

    def test_env_cap(self, capsys, monkeypatch):
        monkeypatch.setenv("NSQ_SIEVE_CAP", "100")
        assert run(capsys, "frobenius", "--gens", "101,103")[0] == 3
