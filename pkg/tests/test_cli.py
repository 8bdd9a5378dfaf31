import json

import pytest
from click.testing import CliRunner

from saphir.cli import main


@pytest.fixture
def runner():
    return CliRunner()


def _run(runner, data_dir, *args, fmt=None, **kw):
    base = ["--data-dir", data_dir]
    if fmt:
        base += ["--format", fmt]
    return runner.invoke(main, base + list(args), **kw)


class TestLifecycle:
    def test_init_then_stats(self, runner, tmp_path):
        d = str(tmp_path / "repo")
        result = _run(runner, d, "init")
        assert result.exit_code == 0
        result = _run(runner, d, "stats", fmt="json")
        assert result.exit_code == 0
        assert json.loads(result.output)["module_count"] == 0

    def test_missing_repository_exits_2(self, runner, tmp_path):
        result = _run(runner, str(tmp_path / "missing"), "stats")
        assert result.exit_code == 2

    def test_seed_sample_counts(self, runner, tmp_path):
        d = str(tmp_path / "repo")
        result = _run(runner, d, "seed-sample", fmt="json")
        assert result.exit_code == 0
        data = json.loads(result.output)
        assert data["module_count"] == 6
        assert data["resource_count"] >= 43
        assert data["language_count"] == 5


class TestValidate:
    def test_seeded_repo_valid(self, runner, tmp_path):
        d = str(tmp_path / "repo")
        _run(runner, d, "seed-sample")
        result = _run(runner, d, "validate")
        assert result.exit_code == 0
        assert "valid" in result.output

    def test_single_module(self, runner, tmp_path):
        d = str(tmp_path / "repo")
        _run(runner, d, "seed-sample")
        result = _run(runner, d, "validate", "--module", "biodiversity", fmt="json")
        assert result.exit_code == 0
        assert json.loads(result.output)[0]["violations"] == []

    def test_corrupted_document_exits_1(self, runner, tmp_path):
        d = str(tmp_path / "repo")
        _run(runner, d, "seed-sample")
        # hand-edit a stored quiz so a proposition list shrinks below two
        path = f"{d}/modules/biodiversity/resources/quiz.json"
        with open(path) as fh:
            stored = json.load(fh)
        stored["document"]["questions"][0]["propositions"] = stored["document"]["questions"][0][
            "propositions"
        ][:1]
        with open(path, "w") as fh:
            json.dump(stored, fh)
        result = _run(runner, d, "validate")
        assert result.exit_code == 1
        assert "PROPOSITION_COUNT" in result.output


class TestPackRoundTrip:
    def test_export_import_identical(self, runner, tmp_path):
        src = str(tmp_path / "src")
        dst = str(tmp_path / "dst")
        pack1 = str(tmp_path / "a.zip")
        pack2 = str(tmp_path / "b.zip")
        _run(runner, src, "seed-sample")
        assert _run(runner, src, "export", "--out", pack1).exit_code == 0
        _run(runner, dst, "init")
        result = _run(runner, dst, "import", pack1, fmt="json")
        assert result.exit_code == 0
        assert json.loads(result.output)["created"] > 0
        assert _run(runner, dst, "export", "--out", pack2).exit_code == 0
        with open(pack1, "rb") as a, open(pack2, "rb") as b:
            assert a.read() == b.read()

    def test_reimport_skips(self, runner, tmp_path):
        d = str(tmp_path / "repo")
        pack = str(tmp_path / "p.zip")
        _run(runner, d, "seed-sample")
        _run(runner, d, "export", "--out", pack)
        result = _run(runner, d, "import", pack, fmt="json")
        data = json.loads(result.output)
        assert data["created"] == 0 and data["updated"] == 0 and data["skipped"] > 0

    def test_locale_filtered_export(self, runner, tmp_path):
        d = str(tmp_path / "repo")
        full = str(tmp_path / "full.zip")
        fr = str(tmp_path / "fr.zip")
        _run(runner, d, "seed-sample")
        _run(runner, d, "export", "--out", full)
        _run(runner, d, "export", "--out", fr, "--langs", "fr")
        import os

        assert os.path.getsize(fr) < os.path.getsize(full)


class TestReports:
    def test_translations_text(self, runner, tmp_path):
        d = str(tmp_path / "repo")
        _run(runner, d, "seed-sample")
        result = _run(runner, d, "report", "translations")
        assert result.exit_code == 0
        assert "fr:" in result.output

    def test_translations_json(self, runner, tmp_path):
        d = str(tmp_path / "repo")
        _run(runner, d, "seed-sample")
        result = _run(runner, d, "report", "translations", fmt="json")
        data = json.loads(result.output)
        assert set(data) >= {"coverage", "matrix", "counts"}


class TestUserAdd:
    def test_add_with_prompt(self, runner, tmp_path):
        d = str(tmp_path / "repo")
        _run(runner, d, "init")
        result = _run(
            runner, d, "user", "add", "alice", "--role", "admin",
            input="longenough1\n",
        )
        assert result.exit_code == 0
        assert "created admin alice" in result.output

    def test_weak_password_exits_2(self, runner, tmp_path):
        d = str(tmp_path / "repo")
        _run(runner, d, "init")
        result = _run(
            runner, d, "user", "add", "bob", "--role", "admin", input="short\n"
        )
        assert result.exit_code == 2

    def test_translator_grants(self, runner, tmp_path):
        d = str(tmp_path / "repo")
        _run(runner, d, "seed-sample")
        result = _run(
            runner, d, "user", "add", "tina", "--role", "translator",
            "--locales", "fr,es", input="longenough1\n",
        )
        assert result.exit_code == 0
