import json

import pytest

from fgz.algset import AlgebraicSet, CyclicCoset, from_json_dict, to_json_dict
from fgz.cli import main
from fgz.words import parse_word

from helpers import AB


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    assert code == 0, err
    return json.loads(out)


SET_A = json.dumps({"points": [], "cosets": [{"rep": "1", "root": "a"}], "whole_group": False})
SET_B = json.dumps({"points": [], "cosets": [{"rep": "1", "root": "b"}], "whole_group": False})
POINTS = json.dumps({"points": ["a^3", "b"], "cosets": [], "whole_group": False})


class TestWordCommands:
    def test_reduce(self, capsys):
        code, out, _ = run(capsys, "--alphabet", "a,b", "reduce", "a a^-1 b")
        assert (code, out) == (0, "b\n")

    def test_mul_inv(self, capsys):
        assert run(capsys, "--alphabet", "a,b", "mul", "a b", "b^-1 a")[1] == "a^2\n"
        assert run(capsys, "--alphabet", "a,b", "inv", "a b^-1")[1] == "b a^-1\n"

    def test_root(self, capsys):
        payload = run_json(capsys, "--alphabet", "a,b", "--json", "root", "a b a b")
        assert payload == {"root": "a b", "exponent": 2}

    def test_centralizer(self, capsys):
        code, out, _ = run(capsys, "--alphabet", "a,b", "centralizer", "a^2")
        assert (code, out) == (0, "<a>\n")

    def test_centralizer_of_identity_fails(self, capsys):
        code, _, err = run(capsys, "--alphabet", "a,b", "centralizer", "1")
        assert code == 1
        assert "whole group" in err

    def test_support(self, capsys):
        payload = run_json(capsys, "--alphabet", "a,b", "--json", "support", "b a b^-1")
        assert payload == {"letters": ["a", "b"]}

    def test_parse_error_exit_code(self, capsys):
        code, _, err = run(capsys, "--alphabet", "a,b", "reduce", "a q")
        assert code == 1 and "unknown identifier" in err


class TestEquationCommands:
    def test_eval(self, capsys):
        code, out, _ = run(capsys, "--alphabet", "a,b", "eval", "x a x^-1", "b")
        assert (code, out) == (0, "b a b^-1\n")

    def test_oracle(self, capsys):
        payload = run_json(
            capsys, "--alphabet", "a,b", "--radius", "2", "--json", "oracle", "x a x^-1 a^-1"
        )
        assert payload == {"radius": 2, "solutions": ["1", "a", "a^-1", "a^2", "a^-2"]}

    def test_solve_emits_expected_coset(self, capsys):
        payload = run_json(capsys, "--alphabet", "a,b", "solve", "x a x^-1 a^-1")
        assert payload["cosets"] == [{"rep": "1", "root": "a"}]
        assert payload["points"] == [] and payload["sound"] is True
        assert payload["whole_group"] is False

    def test_solve_round_trips_through_schema(self, capsys):
        payload = run_json(capsys, "--alphabet", "a,b", "solve", "x b a b^-1 x^-1 a^-1")
        restored = from_json_dict(payload, AB)
        expected = AlgebraicSet.of(
            AB, cosets=[CyclicCoset.make(parse_word("b^-1", AB), parse_word("b a b^-1", AB))]
        )
        assert restored == expected

    def test_variable_override(self, capsys):
        payload = run_json(capsys, "--alphabet", "a,b", "--var", "t", "solve", "t a^-1")
        assert payload["points"] == ["a"]

    def test_whole_group_result(self, capsys):
        payload = run_json(capsys, "--alphabet", "a,b", "solve", "a a^-1")
        assert payload["whole_group"] is True


class TestSetCommands:
    def test_member(self, capsys):
        code, out, _ = run(capsys, "--alphabet", "a,b", "member", SET_A, "a^5")
        assert (code, out) == (0, "true\n")
        code, out, _ = run(capsys, "--alphabet", "a,b", "member", SET_A, "b")
        assert (code, out) == (0, "false\n")

    def test_intersect(self, capsys):
        payload = run_json(capsys, "--alphabet", "a,b", "--json", "intersect", SET_A, SET_B)
        assert payload == {"points": ["1"], "cosets": [], "whole_group": False}

    def test_union_absorbs(self, capsys):
        payload = run_json(capsys, "--alphabet", "a,b", "--json", "union", SET_A, POINTS)
        assert payload["cosets"] == [{"rep": "1", "root": "a"}]
        assert payload["points"] == ["b"]

    def test_subset(self, capsys):
        code, out, _ = run(capsys, "--alphabet", "a,b", "subset", SET_A, SET_A)
        assert (code, out) == (0, "true\n")

    def test_chain(self, capsys):
        both = json.dumps(to_json_dict(from_json_dict(json.loads(SET_A), AB)))
        payload = run_json(
            capsys, "--alphabet", "a,b", "--json", "chain",
            json.dumps({"points": [], "cosets": [{"rep": "1", "root": "a"}, {"rep": "1", "root": "b"}], "whole_group": False}),
            both,
            json.dumps({"points": ["1"], "cosets": [], "whole_group": False}),
        )
        assert payload == {
            "descending": True,
            "strict_prefix_length": 3,
            "stabilization_index": 2,
            "measure_ok": True,
        }

    def test_whole_group_operand_rejected(self, capsys):
        whole = json.dumps({"points": [], "cosets": [], "whole_group": True})
        code, _, err = run(capsys, "--alphabet", "a,b", "intersect", whole, SET_A)
        assert code == 1 and "whole-group" in err

    def test_member_of_whole_group(self, capsys):
        whole = json.dumps({"points": [], "cosets": [], "whole_group": True})
        code, out, _ = run(capsys, "--alphabet", "a,b", "member", whole, "b a")
        assert (code, out) == (0, "true\n")


class TestOtherCommands:
    def test_embed_check(self, capsys):
        payload = run_json(
            capsys, "--alphabet", "a,b", "--radius", "2", "--json",
            "embed-check", "--target", "c,d",
        )
        assert payload["failures"] == [] and payload["injective"] is True
        assert payload["indices"] == 16

    def test_separate(self, capsys):
        payload = run_json(capsys, "--alphabet", "a,b", "separate", "a b^-1 a")
        assert payload["degree"] == 4
        assert payload["image_of_g"] == "(0 3)"
        assert payload["separated"] is True

    def test_separate_identity_fails(self, capsys):
        code, _, err = run(capsys, "--alphabet", "a,b", "separate", "1")
        assert code == 1 and "separate" in err


class TestInvocation:
    def test_alphabet_from_env(self, capsys, monkeypatch):
        monkeypatch.setenv("FGZ_ALPHABET", "a,b")
        code, out, _ = run(capsys, "reduce", "b b^-1 a")
        assert (code, out) == (0, "a\n")

    def test_missing_alphabet(self, capsys, monkeypatch):
        monkeypatch.delenv("FGZ_ALPHABET", raising=False)
        code, _, err = run(capsys, "reduce", "a")
        assert code == 1 and "no alphabet" in err

    def test_usage_error_exits_2(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["--alphabet", "a,b", "frobnicate"])
        assert exc.value.code == 2

    def test_deterministic_output(self, capsys):
        first = run(capsys, "--alphabet", "a,b", "solve", "x b a b^-1 x^-1 a^-1")
        second = run(capsys, "--alphabet", "a,b", "solve", "x b a b^-1 x^-1 a^-1")
        assert first == second
