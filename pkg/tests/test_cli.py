import io
import json

import pytest

from inhnet import corpus
from inhnet.cli import EXIT_FINDINGS, EXIT_INPUT, EXIT_OK, EXIT_USAGE, run


@pytest.fixture(scope="module")
def files(tmp_path_factory):
    root = tmp_path_factory.mktemp("nets")
    out = {}
    for name in corpus.NAMES:
        path = root / f"{name}.inh"
        path.write_text(corpus.source(name))
        out[name] = str(path)
    bad = {
        "cycle": "a -> b\nb -> c\nc -> a\n",
        "syntax": "a -> b\na => c\n",
        "contradiction": "a -> b\na !> b\n",
    }
    for name, text in bad.items():
        path = root / f"{name}.inh"
        path.write_text(text)
        out[name] = str(path)
    return out


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run([str(a) for a in argv], out, err)
    return code, out.getvalue(), err.getvalue()


def test_query_tweety(files):
    code, out, err = call("query", files["tweety"], "--from", "a", "--to", "d")
    assert code == EXIT_OK and err == ""
    assert out == "negative\n  a -> c !> d\n"


def test_query_unicode(files):
    _, out, _ = call("query", files["tweety"], "--from", "a", "--to", "d", "--unicode")
    assert out == "negative\n  a → c ↛ d\n"


def test_query_nixon(files):
    assert call("query", files["nixon"], "--from", "a", "--to", "d")[1] == "undecided\n"
    assert call("query", files["nixon"], "--from", "b", "--to", "c")[1] == "no-path\n"


def test_query_strategies(files):
    path = files["split_total"]
    assert call("query", path, "--from", "u", "--to", "y", "--strategy", "total")[1] == "undecided\n"
    assert call("query", path, "--from", "u", "--to", "y", "--strategy", "split")[1].startswith("negative\n")


def test_query_extensions_mode(files):
    code, out, _ = call("query", files["nixon"], "--from", "a", "--to", "d", "--scepticism", "extensions")
    assert code == EXIT_OK and out == "undecided\n"


def test_extensions_listing(files):
    code, out, _ = call("extensions", files["nixon"])
    assert code == EXIT_OK
    assert out.count("extension ") == 2
    first, second = out.split("extension 2:")
    assert "a -> b -> d" in first and "a -> c !> d" not in first
    assert "a -> c !> d" in second
    _, out, _ = call("extensions", files["nixon"], "--intersect", "paths")
    assert "a -> b -> d" not in out and "a -> c !> d" not in out
    _, out, _ = call("extensions", files["nixon"], "--intersect", "conclusions")
    assert "a d undecided" in out


def test_paths(files):
    code, out, _ = call("paths", files["tweety"])
    assert code == EXIT_OK
    assert out.splitlines() == ["a -> b", "a -> c", "a -> c -> b", "a -> c !> d", "b -> d", "c -> b", "c !> d"]


def test_check(files):
    assert call("check", files["tweety"]) == (EXIT_OK, "ok: 4 nodes, 5 arrows\n", "")


def test_crosscheck(files):
    for name in corpus.NAMES:
        code, out, _ = call("crosscheck", files[name])
        assert code == EXIT_OK, out
        assert "truth values: 0 discrepancies" in out


def test_dot_and_report(files):
    code, out, _ = call("dot", files["tweety"], "--with-paths")
    assert code == EXIT_OK and "color=blue" in out
    code, out, _ = call("report", files["tweety"])
    assert code == EXIT_OK
    assert json.loads(out)["equivalence"] == {"def41_vs_paths": [], "fact52": []}


def test_input_errors(files):
    code, out, err = call("check", files["cycle"])
    assert code == EXIT_INPUT and out == ""
    assert err.startswith(f"error: {files['cycle']}:3:")
    code, _, err = call("check", files["syntax"])
    assert code == EXIT_INPUT and f"{files['syntax']}:2:3:" in err
    code, _, err = call("check", files["contradiction"])
    assert code == EXIT_INPUT and ":2:" in err
    code, _, err = call("query", files["tweety"], "--from", "a", "--to", "zz")
    assert code == EXIT_INPUT and "zz" in err


def test_usage_errors(files):
    assert call()[0] == EXIT_USAGE
    assert call("frobnicate")[0] == EXIT_USAGE
    assert call("query", files["tweety"], "--from", "a")[0] == EXIT_USAGE
    assert call("check", "/nonexistent/net.inh")[0] == EXIT_USAGE
    code, _, err = call("query", files["tweety"], "--from", "a", "--to", "d",
                        "--strategy", "total", "--scepticism", "extensions")
    assert code == EXIT_USAGE and err


def test_path_cap_is_input_error(files):
    code, _, err = call("--path-cap", "2", "paths", files["tweety"])
    assert code == EXIT_INPUT and "error:" in err


def test_randcheck(files):
    code, out, _ = call("randcheck", "--n", "50", "--seed", "4")
    assert code == EXIT_OK
    assert "seed 4: 50 nets, 0 with findings" in out
    assert call("randcheck", "--n", "50", "--seed", "4")[1] == out
    assert call("randcheck", "--n", "-1")[0] == EXIT_USAGE


def test_randcheck_workers():
    serial = call("randcheck", "--n", "40", "--seed", "2")
    parallel = call("randcheck", "--n", "40", "--seed", "2", "--workers", "2")
    assert serial == parallel


def test_findings_exit_code(files, monkeypatch):
    from inhnet import truthvalue
    from inhnet.truthvalue import Discrepancy

    monkeypatch.setattr(truthvalue, "equivalence_report", lambda d, policy: [Discrepancy("a", "d", "negative", "none")])
    code, out, _ = call("crosscheck", files["tweety"])
    assert code == EXIT_FINDINGS
    assert "a d: paths say negative, truth values say none" in out
    code, out, _ = call("randcheck", "--n", "3")
    assert code == EXIT_FINDINGS and "truth_values: 3" in out
