import io
import json
import subprocess
import sys

import pytest

from oddcover import named
from oddcover.cli import main, run
from oddcover.graphio import write_graph6, write_json
from oddcover.kneser import canonical_coloring, odd_graph
from oddcover.voltage import Perm, VoltageAssignment


@pytest.fixture
def files(tmp_path):
    def put(name, text):
        p = tmp_path / name
        p.write_text(text if isinstance(text, str) else json.dumps(text))
        return str(p)
    return put


def test_odd_then_chi_strong(files, monkeypatch, capsys):
    res = run(["odd", "--k", "3"])
    assert res.status == "ok" and len(res.payload["vertices"]) == 10
    monkeypatch.setattr(sys, "stdin", io.StringIO(json.dumps(res.payload)))
    assert main(["chi-strong", "-"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["chi_strong"] == 5 and out["proof_state"] == "optimal"


def test_kneser():
    res = run(["kneser", "--m", "7", "--n", "2"])
    assert res.status == "ok" and len(res.payload["vertices"]) == 21
    assert run(["kneser", "--m", "4", "--n", "2"]).exit_code == 2


def test_has_strong_tutte(files):
    path = files("tc.g6", write_graph6(named.tutte_coxeter()))
    res = run(["has-strong", path, "--t", "6"])
    assert res.exit_code == 1 and res.payload["exists"] is False
    res = run(["has-strong", path, "--t", "7"])
    assert res.exit_code == 0 and res.payload["exists"] is True


def test_enumerate_and_verify(files):
    g = files("c5.json", write_json(named.cycle(5)))
    res = run(["enumerate-strong", g, "--t", "5", "--cap", "1000"])
    assert res.payload["count"] == 120
    c = files("c.json", res.payload["colorings"][0])
    assert run(["verify-strong", g, c]).exit_code == 0
    assert run(["enumerate-strong", g, "--t", "5", "--cap", "10"]).exit_code == 3
    bad = files("bad.json", {"palette": 5, "colors": {e: 1 for e in named.cycle(5).edges}})
    res = run(["verify-strong", g, bad])
    assert res.exit_code == 1 and res.payload["strong"] is False


def test_cover_pipeline(files):
    P = odd_graph(3)
    g = files("p.json", write_json(P))
    c = files("s.json", canonical_coloring(3).to_obj())
    res = run(["cover-from-coloring", g, c, "--k", "3"])
    assert res.status == "ok" and res.payload["fold"] == 1
    cov = files("cov.json", res.payload)
    assert run(["verify-cover", cov]).payload["cover"] is True
    lifted = run(["lift-coloring", cov, c])
    assert lifted.payload["coloring"]["colors"] == canonical_coloring(3).colors
    assert run(["verify-normal", g, c]).payload["normal"] is True


def test_voltage_commands(files):
    D = named.dumbbell()
    g = files("d.json", write_json(D))
    k = VoltageAssignment.from_partial(D, 5, {"loop_u+": Perm.from_cycles(5, [[1, 2, 3, 4, 5]]),
                                              "loop_v+": Perm.from_cycles(5, [[1, 3, 5, 2, 4]])})
    v = files("k.json", k.to_obj())
    res = run(["lift-voltage", g, v])
    assert res.payload["fold"] == 5 and len(res.payload["graph"]["vertices"]) == 10
    assert res.payload["connected_by_transitivity"] is True
    red = run(["reduce-voltage", g, v, "--root", "u"])
    assert red.status == "ok"
    assert red.payload["voltage"]["voltages"]["bridge+"] == [1, 2, 3, 4, 5]
    conj = files("kc.json", k.conjugated(Perm.from_cycles(5, [[1, 2]])).to_obj())
    res = run(["cover-equiv", g, v, conj, "--root", "u"])
    assert res.exit_code == 0 and res.payload["conjugator"] is not None
    other = files("ko.json", VoltageAssignment.trivial(D, 5).to_obj())
    assert run(["cover-equiv", g, v, other, "--root", "u"]).exit_code == 1


def test_coloring_equiv(files):
    P = odd_graph(3)
    g = files("p.json", write_json(P))
    s = canonical_coloring(3)
    a = files("a.json", s.to_obj())
    b = files("b.json", s.permuted({1: 2, 2: 1, 3: 3, 4: 4, 5: 5}).to_obj())
    assert run(["coloring-equiv", g, a, b]).payload["equivalent"] is True


def test_girth_double_and_counterexample(files):
    g = files("t.json", write_json(named.theta()))
    res = run(["girth-double", g])
    assert res.payload["girth_base"] == 2 and res.payload["girth"] == 4
    res = run(["counterexample", "--n", "2"])
    assert res.payload["certificate"]["chi_strong"] == 6
    assert run(["counterexample", "--n", "9"]).exit_code == 2


def test_petersen_report_and_dot(files, capsys):
    g = files("q.json", write_json(named.cube()))
    res = run(["petersen-report", g])
    assert res.status == "ok" and res.payload["i_chi_strong_is_5"] is False
    assert main(["export-dot", g]) == 0
    assert capsys.readouterr().out.startswith("graph")


def test_find_nonequiv_pair():
    res = run(["find-nonequiv-pair", "--budget-s", "120"])
    assert res.status == "ok"
    assert res.payload["evidence"]["colorings_equivalent"] is False


def test_input_errors(files):
    assert run(["chi-strong", "/nonexistent/file"]).exit_code == 2
    assert run(["chi-strong", files("x.txt", "{broken")]).exit_code == 2
    assert run(["verify-strong", files("g.json", write_json(named.cycle(3))),
                files("c.json", "[]")]).exit_code == 2
    assert run(["no-such-command"]).exit_code == 2


def test_budget_timeout(files):
    g = files("h.json", write_json(named.heawood()))
    res = run(["chi-strong", g, "--node-limit", "5"])
    assert res.exit_code == 3 and res.payload["proof_state"] == "upper-bound-only"


def test_deterministic_output(files, monkeypatch):
    g = files("h.json", write_json(named.heawood()))
    outs = []
    for threads in ("1", "4"):
        monkeypatch.setenv("ODDCOVER_THREADS", threads)
        outs.append(json.dumps(run(["chi-strong", g, "--deterministic"]).payload))
    assert outs[0] == outs[1]


def test_console_script(files):
    g = files("p.g6", write_graph6(named.petersen()))
    proc = subprocess.run([sys.executable, "-m", "oddcover.cli", "chi-strong", g],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["chi_strong"] == 5


def test_corpus_chi(files):
    lines = "\n".join(write_graph6(named.NAMED[g]()) for g in ["petersen", "cube", "heawood", "k33"])
    path = files("corpus.g6", lines + "\n")
    res = run(["corpus-chi", path, "--min-girth", "5", "--at-least", "7"])
    assert res.status == "ok"
    assert [r["chi_strong"] for r in res.payload["graphs"]] == [5, 7]
    assert res.payload["hits"] == 1
