import pytest

from cocount import Poset
from cocount.cli import main
from cocount.formats import dump_poset, parse_perm, parse_poset


@pytest.fixture
def files(tmp_path):
    paths = {
        "chain": tmp_path / "chain.poset",
        "path": tmp_path / "path.poset",
        "perm": tmp_path / "p.perm",
        "graph": tmp_path / "g.graph",
    }
    paths["chain"].write_text(dump_poset(Poset.chain(3)))
    paths["path"].write_text(dump_poset(Poset.path(4)))
    paths["perm"].write_text("perm 4\n2 1 4 3\n")
    paths["graph"].write_text("graph 4 3\ne 1 2\ne 2 3\ne 3 4\n")
    return {k: str(v) for k, v in paths.items()}


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out.splitlines(), err


def test_count_perm_both(files, capsys):
    code, out, _ = run(capsys, "count", files["perm"], "--format", "perm", "--target", "both", "--variant", "all")
    assert code == 0
    assert out == ["independent_sets 9", "cliques 7"]


def test_count_maximal_chain(files, capsys):
    assert run(capsys, "count", files["chain"], "--format", "poset", "--variant", "maximal")[1] == ["1"]


def test_count_profile_path(files, capsys):
    out = run(capsys, "count", files["path"], "--format", "poset", "--variant", "profile")[1]
    assert out == ["0 1", "1 4", "2 3", "3 0", "4 0"]
    assert run(capsys, "profile", files["path"])[1] == out
    assert run(capsys, "profile", files["path"], "--variant", "maximal")[1] == ["0 0", "1 0", "2 3", "3 0", "4 0"]


def test_count_other_variants(files, capsys):
    assert run(capsys, "count", files["path"], "--variant", "by-size", "--k", "2")[1] == ["3"]
    assert run(capsys, "count", files["path"], "--variant", "maximal-by-size", "--k", "2")[1] == ["3"]
    assert run(capsys, "count", files["path"], "--variant", "polynomial", "--x", "2")[1] == ["21"]
    assert run(capsys, "count", files["path"], "--variant", "polynomial", "--x", "1/2")[1] == ["15/4"]
    assert run(capsys, "count", files["path"], "--variant", "alpha")[1] == ["2 3"]
    assert run(capsys, "count", files["chain"], "--mod", "5")[1] == ["3"]
    assert run(capsys, "count", files["chain"], "--validate")[1] == ["8"]


def test_exclude_empty(files, capsys):
    assert run(capsys, "count", files["path"], "--exclude-empty")[1] == ["7"]
    assert run(capsys, "count", files["path"], "--exclude-empty", "--variant", "maximal")[1] == ["3"]


def test_errors_exit_nonzero(files, capsys):
    code, _, err = run(capsys, "count", files["graph"], "--format", "graph")
    assert code == 2 and "bare graphs" in err
    assert run(capsys, "count", files["path"], "--variant", "by-size")[0] == 2
    assert run(capsys, "count", files["path"], "--variant", "by-size", "--k", "9")[0] == 2
    assert run(capsys, "count", files["path"], "--variant", "alpha", "--mod", "7")[0] == 2
    assert run(capsys, "count", files["perm"], "--format", "poset")[0] == 2
    with pytest.raises(SystemExit):
        main(["count", files["path"], "--mod", "8"])


def test_verify(files, capsys):
    code, out, _ = run(capsys, "verify", files["path"])
    assert code == 0 and out and all(line.startswith("PASS") for line in out)
    code, out, _ = run(capsys, "verify", files["perm"], "--format", "perm")
    assert code == 0 and all(line.startswith("PASS") for line in out)
    code, out, _ = run(capsys, "verify", "--n", "7", "--density", "0.4", "--seed", "3")
    assert code == 0 and all(line.startswith("PASS") for line in out)


def test_verify_graph_is_oracle_only(files, capsys):
    code, out, _ = run(capsys, "verify", files["graph"], "--format", "graph")
    assert code == 0
    assert out[:2] == ["oracle independent_sets 8", "oracle maximal_independent_sets 3"]


def test_verify_reports_failure(files, capsys, monkeypatch):
    import cocount.counting as cnt

    monkeypatch.setattr(cnt, "count_is", lambda p, le, mod=None: -1)
    code, out, _ = run(capsys, "verify", files["path"])
    assert code == 1
    assert any(line.startswith("FAIL independent_sets:") for line in out)


def test_generate_round_trips(capsys):
    code, out, _ = run(capsys, "generate", "--format", "poset", "--n", "7", "--density", "0.3", "--seed", "4")
    text = "\n".join(out) + "\n"
    from cocount.oracle import GeneratorSpec, random_permutation, random_poset

    assert code == 0 and parse_poset(text) == random_poset(GeneratorSpec(7, 0.3, 4))
    _, out, _ = run(capsys, "generate", "--format", "perm", "--n", "6", "--seed", "4")
    assert parse_perm("\n".join(out)) == random_permutation(GeneratorSpec(6, seed=4))


def test_bench_small(capsys):
    code, out, err = run(capsys, "bench", "--n", "200", "--mod", "1000000007")
    assert code == 0
    assert len(out) == 12
    family, n, m_star, seconds = out[0].split()
    assert (family, n, m_star) == ("chain", "200", "0")
    assert float(seconds) >= 0
    assert "time growth" in err
