import json

from kjuggle.cli import dispatch


def run(capsys, *argv):
    code = dispatch(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def canonical(obj):
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def test_kostant_count(capsys):
    code, out, _ = run(capsys, "kostant", "--type", "A", "--rank", "3",
                       "--weight-alpha", "1,2,1")
    assert code == 0 and out.strip() == "5"


def test_kostant_unreachable_weight_prints_zero(capsys):
    code, out, _ = run(capsys, "kostant", "--type", "A", "--rank", "1",
                       "--weight-alpha", "-1")
    assert code == 0 and out.strip() == "0"


def test_kostant_json_roundtrips_byte_identical(capsys):
    code, out, _ = run(capsys, "kostant", "--type", "A", "--rank", "3",
                       "--weight-alpha", "1,2,1", "--enumerate", "--json")
    assert code == 0
    line = out.strip()
    payload = json.loads(line)
    assert canonical(payload) == line
    assert payload["count"] == "5"
    assert len(payload["partitions"]) == 5
    assert payload["partitions"][0] == [["1-2", 1], ["2-3", 1], ["2-4", 1]]


def test_js_count_and_enum(capsys):
    code, out, _ = run(capsys, "js", "count", "--initial", "1", "--terminal", "1",
                       "--length", "3")
    assert code == 0 and out.strip() == "4"
    code, out, _ = run(capsys, "js", "enum", "--initial", "1,1,0,-1", "--terminal", "1",
                       "--length", "4", "--throws", "heights=1,3", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["count"] == "4"
    assert [[1, 1, 0, -1], [1], [1], [1], [1]] in [s["states"] for s in payload["sequences"]]


def test_js_capacity_flag(capsys):
    code, out, _ = run(capsys, "js", "count", "--initial", "1,1", "--terminal", "1,1",
                       "--length", "3", "--capacity", "2")
    assert code == 0 and out.strip() == "11"


def test_js_throws_file(tmp_path, capsys):
    path = tmp_path / "throws.txt"
    path.write_text("1:1\n1:2\n2:1\n2:2\n3:1\n3:2\n# comment\n")
    code, out, _ = run(capsys, "js", "count", "--initial", "1", "--terminal", "1",
                       "--length", "3", "--throws-file", str(path))
    assert code == 0 and out.strip() == "3"


def test_roots_listing_and_file_use(tmp_path, capsys):
    code, out, _ = run(capsys, "roots", "--type", "B", "--rank", "2", "--quiet")
    assert code == 0
    assert out.split() == ["1-2", "1+2", "1", "2"]
    path = tmp_path / "lam.txt"
    path.write_text("1-2\n1-3\n2-3\n2-4\n3-4\n")
    code, out, _ = run(capsys, "kostant", "--type", "A", "--rank", "3",
                       "--weight-alpha", "1,1,1", "--roots", str(path))
    assert code == 0 and out.strip() == "3"


def test_permdet_with_roots_file(tmp_path, capsys):
    path = tmp_path / "lam.txt"
    path.write_text("1-2\n1-3\n2-3\n2-4\n3-4\n3-5\n4-5\n")
    code, out, _ = run(capsys, "permdet", "--rank", "4", "--roots", str(path), "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["permanent"] == payload["determinant"] == payload["kostant"] == "5"


def test_bijection_roundtrip(capsys):
    code, out, _ = run(capsys, "bijection", "roundtrip", "--weight-eps", "1,1,-1,-1")
    assert code == 0 and "ok" in out


def test_bijection_to_juggling(tmp_path, capsys):
    path = tmp_path / "part.txt"
    path.write_text("1-2\n2-3 2\n3-4\n")
    code, out, _ = run(capsys, "bijection", "to-juggling", "--partition", str(path),
                       "--initial", "1,1,-1", "--length", "3")
    assert code == 0
    assert out.strip() == "1,1,-1 -> 2,-1 -> 1 -> 1"


def test_bcd_count_all_methods(capsys):
    code, out, _ = run(capsys, "bcd", "count", "--type", "D", "--rank", "4",
                       "--highest-root", "--method", "all", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["methods"]["oracle"] == "15"
    assert payload["methods"]["juggling"] == "15"
    assert payload["methods"]["schmidt_bincer"] == "15"
    assert payload["methods"]["literal_schmidt_bincer"] == "0"
    assert payload["agree"] is True


def test_bcd_count_accepts_simple_root_weights(capsys):
    code, out, _ = run(capsys, "bcd", "count", "--type", "B", "--rank", "2",
                       "--weight-alpha", "1,2", "--method", "oracle")
    assert code == 0 and out.strip() == "oracle: 3"


def test_bcd_juggling_method_needs_highest_root(capsys):
    code, _, err = run(capsys, "bcd", "count", "--type", "B", "--rank", "2",
                       "--weight-eps", "0,1", "--method", "juggling")
    assert code == 1 and "highest" in err


def test_bcd_map(tmp_path, capsys):
    path = tmp_path / "part.txt"
    path.write_text("1+2\n")
    code, out, _ = run(capsys, "bcd", "map", "--which", "b2a", "--rank", "2",
                       "--partition", str(path), "--quiet")
    assert code == 0 and out.strip() == "1-4 2-3"


def test_poset_charpoly_and_dot(capsys):
    code, out, _ = run(capsys, "poset", "charpoly", "--initial", "1,1,1",
                       "--terminal", "3", "--length", "3", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["coefficients"] == ["-1", "3", "-3", "1"]
    assert payload["factored"] == "(q - 1)^3"
    code, out, _ = run(capsys, "poset", "charpoly", "--initial", "1", "--terminal", "1",
                       "--length", "3", "--dot")
    assert code == 0 and out.startswith("digraph")


def test_poset_two_minima_reported_but_dot_still_works(capsys):
    code, _, err = run(capsys, "poset", "charpoly", "--initial", "1,1",
                       "--terminal", "1,1", "--length", "2")
    assert code == 1 and "minimal elements" in err
    code, out, _ = run(capsys, "poset", "charpoly", "--initial", "1,1",
                       "--terminal", "1,1", "--length", "2", "--dot")
    assert code == 0 and out.startswith("digraph")


def test_lidskii_cli(capsys):
    code, out, _ = run(capsys, "lidskii", "--weight-eps", "1,1,1,-3", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["values"] == {"binomial": "7", "multiset": "7"}
    assert payload["oracle"] == "7" and payload["agree"] is True


def test_gf_cli(capsys):
    code, out, _ = run(capsys, "gf", "--row", "2|2", "--upto", "4", "--quiet")
    assert code == 0 and out.split() == ["1", "3", "10", "35"]


def test_closedform_cli(capsys):
    code, out, _ = run(capsys, "closedform", "--which", "c45", "--r", "6", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["value"] == payload["oracle"] == "450"
    assert payload["surd_matches"] is True


def test_catalan_cli(capsys):
    code, out, _ = run(capsys, "catalan", "--r", "7")
    assert code == 0 and out.strip() == "5880"


def test_ehrhart_cli(capsys):
    code, out, _ = run(capsys, "ehrhart", "--weight-eps", "1,0,-1", "--extra", "2", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["coefficients"] == ["1", "1"]


def test_usage_errors_exit_two(capsys):
    assert dispatch(["not-a-command"]) == 2
    capsys.readouterr()
    assert dispatch(["js", "count", "--initial", "1"]) == 2
    capsys.readouterr()


def test_domain_errors_exit_one(capsys):
    code, _, err = run(capsys, "kostant", "--type", "D", "--rank", "3",
                       "--weight-eps", "1,1,0")
    assert code == 1 and "rank" in err
    code, _, err = run(capsys, "js", "count", "--initial", "1,x", "--terminal", "1",
                       "--length", "2")
    assert code == 1 and "1,x" in err
    code, _, err = run(capsys, "kostant", "--type", "A", "--rank", "2",
                       "--weight-eps", "1,0,-1", "--roots", "/nonexistent/file")
    assert code == 1 and "roots file" in err


def test_threads_env_is_validated(capsys, monkeypatch):
    monkeypatch.setenv("KJ_THREADS", "2")
    code, out, _ = run(capsys, "catalan", "--r", "3")
    assert code == 0 and out.strip() == "1"
    monkeypatch.setenv("KJ_THREADS", "zero")
    code, _, err = run(capsys, "catalan", "--r", "3")
    assert code == 1 and "KJ_THREADS" in err


def test_selftest_json(capsys):
    code, out, _ = run(capsys, "selftest", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["failed"] == "0"
    assert len(payload["criteria"]) == 15
