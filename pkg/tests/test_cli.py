"""Command-line behavior: output, exit codes, config batches, determinism."""

import io
import json
from pathlib import Path

import pytest

from icodes.cli import main, parse_m_range, parse_subset, parse_variants, UsageError
from icodes.ring import ELEMENTS


def run(argv):
    out = io.StringIO()
    code = main(argv, out=out)
    return code, out.getvalue()


# --- flag parsing -------------------------------------------------------------


def test_parse_subset():
    assert parse_subset("2,3") == frozenset({2, 3})
    assert parse_subset("") == frozenset()
    assert parse_subset(None) == frozenset()
    with pytest.raises(UsageError):
        parse_subset("1,x")


def test_parse_m_range():
    assert parse_m_range("3") == [3]
    assert parse_m_range("1..4") == [1, 2, 3, 4]
    with pytest.raises(UsageError):
        parse_m_range("zero")
    with pytest.raises(UsageError):
        parse_m_range("0")


def test_parse_variants():
    assert [v.value for v in parse_variants("T1,T3")] == ["T1", "T3"]
    with pytest.raises(UsageError):
        parse_variants("")
    with pytest.raises(UsageError):
        parse_variants("T9")
    with pytest.raises(UsageError):
        parse_variants("GENERIC")


# --- construct -----------------------------------------------------------------


def test_construct_reference_t1():
    code, text = run(["construct", "--variant", "T1", "--m", "6", "--M", "2,3", "--N", "4,5"])
    assert code == 0
    assert "X^32 + 3X^16Y^16" in text
    assert "[32, 2, 16]" in text


def test_construct_reference_t2_large():
    code, text = run(
        ["construct", "--variant", "T2", "--m", "9", "--M", "1,2,3,4,7,8,9", "--N", "5,6"]
    )
    assert code == 0
    assert "X^3072 + 508X^1536Y^1536 + 3X^1024Y^2048" in text
    assert "[3072, 9, 1536]" in text


def test_construct_degenerate_zero_code_still_succeeds():
    code, text = run(["construct", "--variant", "T1", "--m", "3", "--M", "", "--N", ""])
    assert code == 0
    assert "defining set length: 1" in text
    assert "degenerate" in text


def test_construct_empty_defining_set_is_a_parameter_error():
    code, _ = run(["construct", "--variant", "T5", "--m", "2", "--M", "1,2", "--N", "1,2"])
    assert code == 2


def test_construct_invalid_subset_is_usage_error():
    code, _ = run(["construct", "--variant", "T1", "--m", "3", "--M", "7", "--N", ""])
    assert code == 2


def test_construct_budget_exceeded():
    code, _ = run(
        ["construct", "--variant", "T1", "--m", "4", "--M", "1,2", "--N", "3,4", "--budget", "8"]
    )
    assert code == 3


def test_construct_json_and_dumps():
    code, text = run(
        [
            "construct", "--variant", "T1", "--m", "2", "--M", "1", "--N", "2",
            "--format", "json", "--dump-ring-codewords", "--dump-gray-codewords",
        ]
    )
    assert code == 0
    doc = json.loads(text)
    assert doc["schema_version"] == 1
    assert doc["length"] == 4
    assert doc["lee_enumerator"] == "X^8 + X^4Y^4"
    assert set(doc["ring_codewords"]) == {"0000", "00bb"}
    assert len(doc["gray_codewords"]) == 2
    assert all(set(w) <= {"0", "1"} for w in doc["gray_codewords"])


def test_env_budget_override(monkeypatch):
    monkeypatch.setenv("ICODES_WORK_BUDGET", "8")
    code, _ = run(["construct", "--variant", "T1", "--m", "4", "--M", "1,2", "--N", "3,4"])
    assert code == 3
    monkeypatch.setenv("ICODES_WORK_BUDGET", "notanint")
    code, _ = run(["construct", "--variant", "T1", "--m", "4", "--M", "1,2", "--N", "3,4"])
    assert code == 2


# --- analyze ---------------------------------------------------------------------


def test_analyze_reference_t2():
    code, text = run(["analyze", "--variant", "T2", "--m", "5", "--M", "1,2,3", "--N", "4"])
    assert code == 0
    assert "minimal: yes-exhaustive" in text
    assert "self-orthogonal: yes-direct" in text
    assert "certified-optimal" in text
    assert "all expected properties hold" in text


def test_analyze_json_schema_and_determinism():
    argv = ["analyze", "--variant", "T5", "--m", "4", "--M", "2,3,4", "--N", "1,2,4", "--format", "json"]
    code1, text1 = run(argv)
    code2, text2 = run(argv)
    assert code1 == code2 == 0
    assert text1 == text2
    doc = json.loads(text1)
    assert doc["schema_version"] == 1
    report = doc["reports"][0]
    assert report["params"] == [384, 4, 192]
    assert report["minimal"] == "yes-exhaustive"
    assert doc["all_expected"] is True


def test_analyze_subset_of_analyses():
    code, text = run(
        ["analyze", "--variant", "T2", "--m", "4", "--M", "1", "--N", "2", "--analyses", "weights,griesmer"]
    )
    assert code == 0
    assert "griesmer" in text
    assert "minimal" not in text


def test_analyze_requires_parameters():
    code, _ = run(["analyze"])
    assert code == 2


def test_analyze_config_batch(tmp_path: Path):
    config = {
        "format": "structured",
        "jobs": [
            {"variant": "T1", "m": 6, "M": [2, 3], "N": [4, 5]},
            {"variant": "T3", "m": 3, "M": "1,2,3", "N": "1,2", "analyses": ["weights", "gray", "simplex"]},
        ],
    }
    path = tmp_path / "jobs.json"
    path.write_text(json.dumps(config), encoding="utf-8")
    code, text = run(["analyze", "--config", str(path)])
    assert code == 0
    doc = json.loads(text)
    assert len(doc["reports"]) == 2
    assert doc["reports"][0]["lee_enumerator"] == "X^32 + 3X^16Y^16"
    assert doc["reports"][1]["params"] == [64, 3, 32]
    assert doc["reports"][1]["simplex"]["kind"] == "replicated-simplex"
    assert doc["reports"][1]["minimal"] is None


def test_analyze_config_validation(tmp_path: Path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"jobs": [{"variant": "T7", "m": 2}]}), encoding="utf-8")
    code, _ = run(["analyze", "--config", str(path)])
    assert code == 2
    path.write_text("not json", encoding="utf-8")
    code, _ = run(["analyze", "--config", str(path)])
    assert code == 2


# --- verify -----------------------------------------------------------------------


def test_verify_small_sweep_all_match():
    code, text = run(["verify", "--m", "1..2", "--variants", "T1,T2,T3,T4,T5"])
    assert code == 0
    assert "mismatch" in text
    assert "0 mismatch" in text


def test_verify_sampled_sweep():
    code, text = run(["verify", "--m", "4", "--variants", "T2", "--sample", "10"])
    assert code == 0
    assert "10/10 match" in text


def test_verify_json_document():
    code, text = run(["verify", "--m", "2", "--variants", "T1", "--format", "json"])
    assert code == 0
    doc = json.loads(text)
    assert doc["summary"]["pairs"] == 16
    assert doc["summary"]["mismatched"] == 0
    assert doc["mismatches"] == []


def test_verify_empty_variants_usage_error():
    code, _ = run(["verify", "--m", "2", "--variants", ""])
    assert code == 2


def test_verify_budget_exceeded_flushes_partial_results():
    code, text = run(["verify", "--m", "12", "--variants", "T4", "--budget", "1000"])
    assert code == 3
    assert "stopped early" in text


# --- tables -----------------------------------------------------------------------


def test_tables_exact_rows():
    code, text = run(["tables"])
    assert code == 0
    assert "a | a 0 c b" in text
    assert "b | 0 0 0 0" in text
    assert "+ | 0 a b c" in text


def test_every_readme_command_exits_zero():
    readme = Path(__file__).resolve().parent.parent / "README.md"
    commands = [
        line.strip()
        for line in readme.read_text(encoding="utf-8").splitlines()
        if line.strip().startswith("icodes ")
    ]
    assert len(commands) >= 10  # six reference constructions plus the rest
    for command in commands:
        argv = command.split()[1:]
        if "--config" in argv:
            continue  # documented with an inline JSON example, not a real file
        code, _ = run(argv)
        assert code == 0, command


def test_tables_round_trip():
    _, text = run(["tables"])
    blocks = text.strip().split("\n\n")
    assert len(blocks) == 2
    from icodes import RingElement

    for block, op in zip(blocks, (lambda x, y: x + y, lambda x, y: x * y)):
        lines = block.splitlines()
        header = lines[0].split("|")[1].split()
        assert header == ["0", "a", "b", "c"]
        for line in lines[2:]:
            row_symbol, rest = line.split("|")
            x = RingElement.from_symbol(row_symbol.strip())
            entries = rest.split()
            for y, entry in zip(ELEMENTS, entries):
                assert op(x, y) == RingElement.from_symbol(entry)
