import json

import pytest

from fmzv.cli import EXIT_INPUT, EXIT_OK, EXIT_VERIFY, main
from fmzv.errors import FMZVError, InvalidIndex, ReservedId
from fmzv.families import chain, mt_star
from fmzv.serialize import dumps, load_pair, pair_from_json, pair_to_json
from fmzv.trees import BULLET, TwoColoredRootedTree


def write(tmp_path, obj, name="tree.json"):
    path = tmp_path / name
    path.write_text(obj if isinstance(obj, str) else json.dumps(obj))
    return str(path)


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out.strip(), err.strip()


class TestSerialize:
    def test_round_trip(self):
        for tree, k in (chain([2, 1]), mt_star([1, 2, 1], 0)):
            data = pair_to_json(tree, k)
            assert pair_from_json(json.loads(dumps(data))) == (tree, k)

    def test_sign_field(self):
        tree, k = chain([1])
        assert pair_to_json(tree, k, sign=-1)["sign"] == -1

    def test_reserved_id(self):
        data = pair_to_json(*chain([1]))
        data["vertices"][0]["id"] = "v1#c"
        data["edges"][0]["a"] = "v1#c"
        with pytest.raises(ReservedId):
            pair_from_json(data)
        pair_from_json(data, allow_reserved=True)

    def test_malformed(self):
        with pytest.raises(FMZVError):
            pair_from_json({"vertices": []})
        data = pair_to_json(*chain([1]))
        data["edges"].append(dict(data["edges"][0]))
        with pytest.raises(FMZVError):
            pair_from_json(data)

    def test_duplicate_edge_with_reversed_endpoints(self):
        data = pair_to_json(*chain([1, 1]))
        e = data["edges"][0]
        data["edges"][1] = {"a": e["b"], "b": e["a"], "k": 2}
        with pytest.raises(FMZVError):
            pair_from_json(data)

    def test_negative_index(self):
        data = pair_to_json(*chain([1]))
        data["edges"][0]["k"] = -1
        with pytest.raises(InvalidIndex):
            pair_from_json(data)

    def test_invalid_json_file(self, tmp_path):
        with pytest.raises(FMZVError):
            load_pair(write(tmp_path, "{not json"))


class TestReduce:
    def test_mt_star(self, tmp_path, capsys):
        path = write(tmp_path, pair_to_json(*mt_star([1, 1], 1)))
        assert run(["reduce", path], capsys) == (EXIT_OK, '{"sign":1,"terms":[{"index":[1,2],"coeff":"2"}]}', "")

    def test_chain(self, tmp_path, capsys):
        path = write(tmp_path, pair_to_json(*chain([2, 1])))
        assert run(["reduce", path], capsys)[1] == '{"sign":1,"terms":[{"index":[2,1],"coeff":"1"}]}'

    def test_middle_chain(self, tmp_path, capsys, middle_chain):
        path = write(tmp_path, pair_to_json(*middle_chain))
        assert run(["reduce", path], capsys)[1] == '{"sign":-1,"terms":[{"index":[2,1],"coeff":"1"}]}'

    def test_pretty(self, tmp_path, capsys):
        path = write(tmp_path, pair_to_json(*mt_star([1, 1], 1)))
        code, out, _ = run(["reduce", "--pretty", path], capsys)
        assert code == EXIT_OK and out == "sign +1\n2·z1z2"

    def test_not_essentially_positive(self, tmp_path, capsys):
        path = write(tmp_path, pair_to_json(*chain([1, 0])))
        code, out, err = run(["reduce", path], capsys)
        assert code == EXIT_INPUT and out == ""
        assert err.startswith("NotEssentiallyPositive")

    def test_circle_terminal(self, tmp_path, capsys):
        data = {
            "vertices": [{"id": "v", "color": "bullet"}, {"id": "c", "color": "circle"},
                         {"id": "w", "color": "bullet"}, {"id": "u", "color": "circle"}],
            "edges": [{"a": "v", "b": "c", "k": 1}, {"a": "c", "b": "w", "k": 1}, {"a": "c", "b": "u", "k": 1}],
            "root": "v",
        }
        code, _, err = run(["reduce", write(tmp_path, data)], capsys)
        assert code == EXIT_INPUT and "CircleTerminal: vertex u" in err

    def test_missing_file(self, tmp_path, capsys):
        code, _, err = run(["reduce", str(tmp_path / "absent.json")], capsys)
        assert code == EXIT_INPUT and "FileNotFoundError" in err


class TestEval:
    def test_chain(self, tmp_path, capsys):
        path = write(tmp_path, pair_to_json(*chain([2, 1])))
        assert run(["eval", path, "--primes", "7"], capsys) == (EXIT_OK, '{"7":4}', "")

    def test_star(self, tmp_path, capsys):
        path = write(tmp_path, pair_to_json(*mt_star([1, 1], 1)))
        assert run(["eval", path, "--primes", "7"], capsys)[1] == '{"7":6}'

    def test_single_vertex(self, tmp_path, capsys):
        tree = TwoColoredRootedTree.build({"v": BULLET}, [], "v")
        path = write(tmp_path, pair_to_json(tree, {}))
        assert run(["eval", path], capsys)[1] == '{"5":1,"7":1,"11":1,"13":1}'

    def test_bad_prime(self, tmp_path, capsys):
        path = write(tmp_path, pair_to_json(*chain([1])))
        code, _, err = run(["eval", path, "--primes", "9"], capsys)
        assert code == EXIT_INPUT and err.startswith("NotPrime")
        code, _, err = run(["eval", path, "--primes", "2"], capsys)
        assert code == EXIT_INPUT and err.startswith("EvenPrime")

    def test_mt_eval(self, capsys):
        assert run(["mt-eval", "1,1", "1", "--primes", "7"], capsys)[1] == '{"7":6}'
        assert run(["mt-eval", "1,1", "1", "--primes", "7", "--pretty"], capsys)[1] == "p=7: 6"


class TestVerify:
    @pytest.mark.parametrize("pair,primes", [
        (mt_star([1, 1], 1), "5,7,11,13"),
        (chain([1]), "7"),
    ])
    def test_pass(self, tmp_path, capsys, pair, primes):
        path = write(tmp_path, pair_to_json(*pair))
        code, out, _ = run(["verify", path, "--primes", primes], capsys)
        assert code == EXIT_OK and json.loads(out)["pass"] is True

    def test_middle_chain(self, tmp_path, capsys, middle_chain):
        path = write(tmp_path, pair_to_json(*middle_chain))
        code, out, _ = run(["verify", path, "--primes", "7,11"], capsys)
        assert code == EXIT_OK
        report = json.loads(out)
        assert report["pass"] is True
        assert report["primes"][0] == {"p": 7, "lhs": 3, "rhs": 3, "pass": True}
        assert [c["p"] for c in report["primes"]] == [7, 11]

    def test_failure_exit_code(self, tmp_path, capsys, monkeypatch):
        from fmzv import oracle

        def broken(tree, k, primes):
            return oracle.VerificationReport((oracle.PrimeCheck(7, 1, 2),))

        monkeypatch.setattr(oracle, "verify_reduction", broken)
        path = write(tmp_path, pair_to_json(*chain([1])))
        code, out, _ = run(["verify", path], capsys)
        assert code == EXIT_VERIFY and json.loads(out)["pass"] is False


class TestShuffle:
    def test_two_by_two(self, capsys):
        code, out, _ = run(["shuffle", "2", "2", "--pretty"], capsys)
        assert code == EXIT_OK and out == "2·z2z2 + 4·z1z3\n2·yxyx + 4·yyxx"

    def test_json(self, capsys):
        out = json.loads(run(["shuffle", "2", "2"], capsys)[1])
        assert out["words"] == [{"word": "yxyx", "coeff": "2"}, {"word": "yyxx", "coeff": "4"}]
        assert out["terms"] == [{"index": [2, 2], "coeff": "2"}, {"index": [1, 3], "coeff": "4"}]

    def test_identity(self, capsys):
        out = json.loads(run(["shuffle", "1", ""], capsys)[1])
        assert out["terms"] == [{"index": [1], "coeff": "1"}]

    def test_rejects_zero_index(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["shuffle", "0", "1"])
        assert exc.value.code == 2

    def test_relation(self, capsys):
        code, out, _ = run(["shuffle-relation", "1", "2", "--primes", "7,11"], capsys)
        assert code == EXIT_OK and json.loads(out)["pass"] is True

    def test_relation_needs_nonempty(self, capsys):
        code, _, err = run(["shuffle-relation", "1", ""], capsys)
        assert code == EXIT_INPUT and err


class TestCorpus:
    def test_trivial(self, capsys):
        code, out, _ = run(["corpus", "--max-edges", "1", "--max-weight", "1"], capsys)
        assert code == EXIT_OK
        assert json.loads(out) == {"pass": True, "pairs": 1, "checks": 4, "failures": []}

    def test_small_sweep(self, capsys):
        code, out, _ = run(["corpus", "--max-edges", "3", "--max-weight", "4", "--primes", "5,7", "--pretty"], capsys)
        assert code == EXIT_OK and out.endswith("failures 0")

    def test_guard(self, capsys):
        code, _, err = run(["corpus", "--max-edges", "9"], capsys)
        assert code == EXIT_INPUT and "max_edges" in err


def test_output_is_deterministic(tmp_path, capsys):
    path = write(tmp_path, pair_to_json(*mt_star([2, 1, 1], 1)))
    outputs = {run(["reduce", path], capsys)[1] for _ in range(3)}
    assert len(outputs) == 1
