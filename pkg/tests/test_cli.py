"""Command-line interface: payloads, exit codes, deterministic output."""

import json

import pytest

from markovnum.cli import main


@pytest.fixture
def run(capsys):
    def invoke(*argv):
        try:
            code = main(list(argv))
        except SystemExit as exc:
            code = exc.code
        captured = capsys.readouterr()
        return code, captured.out, captured.err

    return invoke


def lines(out):
    return [json.loads(line) for line in out.strip().splitlines()]


EIGHT_SNAKE = {
    "n": 8,
    "weights": [
        [1, 1, 1], [1, 2, 1], [2, 2, 1], [2, 3, 1], [3, 3, 1], [3, 4, 1],
        [3, 5, 1], [4, 4, 1], [5, 5, 1], [5, 6, 1], [5, 7, 1], [6, 6, 1],
        [7, 7, 1], [7, 8, 1], [8, 8, 1],
    ],
}


class TestCommands:
    def test_markov_numbers(self, run):
        code, out, _ = run("markov", "numbers", "--depth", "6")
        assert code == 0
        numbers = [int(x) for x in lines(out)[0]["numbers"]]
        assert numbers[:5] == [1, 2, 5, 13, 29]

    def test_farey_index(self, run):
        code, out, _ = run("farey", "index", "--t", "2/3")
        assert code == 0
        assert lines(out)[0] == {"farey": "2/3", "markov": "29"}

    def test_cohn_word(self, run):
        code, out, _ = run("cohn", "word", "--t", "1/2")
        assert code == 0
        payload = lines(out)[0]
        assert payload["christoffel"] == payload["word"] == "AB"
        assert payload["mu"] == "5"

    def test_cf_eval(self, run):
        code, out, _ = run("cf", "eval", "--cf", "[3; 2 : 1 : 3 : 2 : 1]")
        assert code == 0
        payload = lines(out)[0]
        assert (payload["p"], payload["q"]) == ("121", "36")

    def test_cf_plls(self, run):
        code, out, _ = run("cf", "plls", "--matrix", "25,36,84,121")
        assert code == 0
        payload = lines(out)[0]
        assert payload["plls"] == ["1", "2", "3", "1", "2", "3"]
        assert payload["markov"] == "36"

    def test_wug_count(self, run, tmp_path):
        path = tmp_path / "snake.json"
        path.write_text(json.dumps(EIGHT_SNAKE))
        code, out, _ = run("wug", "count", "--file", str(path))
        assert code == 0
        payload = lines(out)[0]
        assert payload == {"bruteforce": "29", "permanent": "29", "det": "29"}

    def test_wug_fuzz_deterministic(self, run):
        code1, out1, _ = run("--seed", "7", "wug", "fuzz", "--count", "10")
        code2, out2, _ = run("--seed", "7", "wug", "fuzz", "--count", "10")
        assert code1 == code2 == 0
        assert out1 == out2
        assert all(payload["agree"] for payload in lines(out1))

    def test_semigroup_collide(self, run):
        code, out, _ = run("semigroup", "collide", "--family", "4,11")
        assert code == 0
        payloads = lines(out)
        assert {"farey": ["4/5", "1/7"], "value": "355318099"} in payloads

    def test_semigroup_family(self, run):
        code, out, _ = run("semigroup", "family", "--a", "2", "--b", "3", "--depth", "2")
        assert code == 0
        values = sorted({int(p["markov"]) for p in lines(out)})
        assert values[:4] == [2, 3, 17, 99]

    def test_semigroup_enum(self, run, tmp_path):
        gens = tmp_path / "gens.json"
        gens.write_text(json.dumps([[[1, 2], [1, 3]], [[2, 3], [3, 5]]]))
        code, out, _ = run(
            "semigroup", "enum", "--gens", str(gens), "--depth", "1"
        )
        assert code == 0
        by_coord = {p["farey"]: p for p in lines(out)}
        # the element at the mediant is the second generator times the first
        assert by_coord["1/2"]["element"] == [["5", "13"], ["8", "21"]]

    def test_perron(self, run):
        code, out, _ = run("perron", "--plls", "1,1")
        assert code == 0
        payload = lines(out)[0]
        assert payload["radicand"] == "5"
        assert payload["rational"] == "0"
        assert payload["coefficient"] == "1"

    def test_subtract(self, run):
        code, out, _ = run(
            "subtract", "--triple", "7,5,3", "--strategy", "min-remainder",
            "--trace",
        )
        assert code == 0
        payload = lines(out)[0]
        assert payload["gcd"] == "1"
        first = payload["steps"][0]
        assert (first["alpha"], first["beta"]) == ("0", "2")

    def test_tetris(self, run):
        code, out, _ = run("tetris", "--vector", "7,5,3")
        assert code == 0
        payload = lines(out)[0]
        assert payload["cells"] == 13
        assert payload["word"] == "A2^5 A1 A3^4 A2 A1"
        assert payload["count"] == "36313494507"

    def test_render_deterministic(self, run, tmp_path):
        spec = tmp_path / "word.json"
        spec.write_text(json.dumps({"word": [0, 1, 1]}))
        out1 = tmp_path / "a.svg"
        out2 = tmp_path / "b.svg"
        for out in (out1, out2):
            code, _, _ = run(
                "render", "--kind", "embedding2",
                "--in", str(spec), "--out", str(out),
            )
            assert code == 0
        body = out1.read_text()
        assert body == out2.read_text()
        assert body.startswith("<svg") and body.rstrip().endswith("</svg>")


class TestExitCodes:
    def test_usage_error(self, run):
        code, _, err = run("markov", "sideways")
        assert code == 1
        assert "error" in err

    def test_unknown_command(self, run):
        code, _, _ = run("frobnicate")
        assert code == 1

    def test_validation_error_bad_fraction(self, run):
        code, _, err = run("farey", "index", "--t", "1/0")
        assert code == 2
        assert "error" in err

    def test_validation_error_missing_file(self, run):
        code, _, _ = run("wug", "count", "--file", "/nonexistent/snake.json")
        assert code == 2

    def test_validation_error_requires_file(self, run):
        code, _, _ = run("wug", "count")
        assert code == 2

    def test_validation_error_not_reduced(self, run):
        code, _, _ = run("cf", "plls", "--matrix", "1,0,0,1")
        assert code == 2
