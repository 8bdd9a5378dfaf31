"""End-to-end acceptance checks.

Each test covers one release criterion and prints a single PASS/FAIL line
on the real stdout (bypassing capture) so the run reads as a checklist.
"""

import functools
import itertools
import os
import random
import subprocess
import sys
import zipfile
import io

import pytest
from click.testing import CliRunner
from fastapi.testclient import TestClient

from helpers import MUTATIONS, gen_valid_module
from saphir import codec, play
from saphir.cli import main as cli_main
from saphir.localization import upsert_variant
from saphir.model import MemoMode, Proposition, Question, Quiz, ResourceKind
from saphir.records import Role, VariantStatus
from saphir.rng import SeededRng
from saphir.sample import seed_sample
from saphir.service import create_app
from saphir.store import import_pack, open_repository
from saphir.validation import validate_module, validate_pack


def criterion(name):
    def wrap(fn):
        @functools.wraps(fn)
        def run(*args, **kwargs):
            try:
                fn(*args, **kwargs)
            except BaseException:
                print(f"[FAIL] {name}", file=sys.__stdout__)
                raise
            print(f"[PASS] {name}", file=sys.__stdout__)

        return run

    return wrap


@criterion("model-constraint suite: 1000 valid accepted, 5x10 mutations rejected with paths")
def test_model_constraints():
    rnd = random.Random(20240901)
    for _ in range(1000):
        module = gen_valid_module(rnd)
        report = validate_module(module)
        assert report.is_valid, report.violations
    for name, mutate in sorted(MUTATIONS.items()):
        for _ in range(10):
            module = gen_valid_module(rnd)
            mutated, code, fragment = mutate(rnd, module)
            report = validate_module(mutated)
            assert not report.is_valid, name
            assert any(
                v.code.value == code and fragment in v.path for v in report.violations
            ), (name, report.violations)


def _quiz(n):
    return Quiz(
        questions=tuple(
            Question(
                question_id=f"q{i}",
                title=f"t{i}",
                propositions=(Proposition("a", "yes", True), Proposition("b", "no", False)),
            )
            for i in range(1, n + 1)
        )
    )


@criterion("quiz-generator oracle: 500 instances x 20 seeds, zero violations")
def test_quiz_generator_oracle():
    rnd = random.Random(7_000_000)
    for _ in range(500):
        n = rnd.randint(1, 12)
        ids = [f"q{i}" for i in range(1, n + 1)]
        order = list(ids)
        rnd.shuffle(order)
        pages = rnd.randint(0, min(6, n))
        links, rest = [], list(order)
        for p in range(pages):
            take = rnd.randint(0, max(0, len(rest) // (pages - p)))
            links.append((f"page{p + 1}", tuple(rest[:take])))
            rest = rest[take:]
        links = tuple(links)
        answered = frozenset(q for q in ids if rnd.random() < 0.4)
        quiz = _quiz(n)
        k = min(5, n)
        unanswered = [q for q in ids if q not in answered]
        avoid = len(unanswered) >= k
        pool = unanswered if avoid else ids
        linked_pages = {p for p, qs in links if qs}
        idx = {q: 1 << i for i, q in enumerate(ids)}
        page_masks = [sum(idx[q] for q in qs) for p, qs in links if qs]
        for seed in range(20):
            session = play.generate_quiz_session(
                play.SessionRequest(
                    quiz=quiz, page_links=links, answered_ids=answered, seed=seed
                )
            )
            chosen = set(session.question_ids)
            # (a) size and distinctness
            assert len(session.question_ids) == k
            assert len(chosen) == k and chosen <= set(ids)
            # (c) avoidance of answered questions while enough remain
            if avoid:
                assert not (chosen & answered)
            # (b) full page coverage; brute force only needed on a miss,
            # to confirm no avoidance-respecting k-subset covers either
            if not (session.covered_page_ids >= linked_pages):
                achievable = any(
                    all(sum(idx[q] for q in combo) & pm for pm in page_masks)
                    for combo in itertools.combinations(pool, min(k, len(pool)))
                )
                assert not achievable, (ids, links, sorted(answered), seed, session)


def _determinism_digest():
    import hashlib

    h = hashlib.sha256()
    rnd = random.Random(99)
    for case in range(40):
        n = rnd.randint(1, 12)
        quiz = _quiz(n)
        links = tuple(
            (f"p{i}", tuple(f"q{j}" for j in range(i, n + 1, 3))) for i in range(1, min(4, n + 1))
        )
        answered = frozenset(f"q{i}" for i in range(1, n + 1) if rnd.random() < 0.3)
        for seed in range(5):
            session = play.generate_quiz_session(
                play.SessionRequest(quiz=quiz, page_links=links, answered_ids=answered, seed=seed)
            )
            h.update(",".join(session.question_ids).encode())
            h.update(",".join(sorted(session.covered_page_ids)).encode())
            picked = play.pick_page_question(list(quiz.questions), answered, seed)
            h.update(picked.question_id.encode())
    from helpers import gen_memo

    memo = gen_memo(random.Random(4))
    memo = type(memo)(memo.triplets, frozenset(MemoMode))
    for mode in sorted(MemoMode, key=lambda m: m.value):
        for seed in range(10):
            deck = play.derive_memo_deck(memo, mode, seed)
            h.update("|".join(f"{c.face.value}:{c.pair_key}" for c in deck.cards).encode())
    rng = SeededRng(123456789)
    h.update(",".join(str(rng.next_u64()) for _ in range(64)).encode())
    return h.hexdigest()


@criterion("determinism: seeded operations identical across runs and hash seeds")
def test_determinism():
    digests = {_determinism_digest() for _ in range(3)}
    assert len(digests) == 1
    expected = digests.pop()
    # different hash seeds stand in for different platforms: any dependence
    # on set/dict iteration order would change the digest
    script = (
        "import sys; sys.path.insert(0, %r); "
        "import test_acceptance; print(test_acceptance._determinism_digest())"
        % os.path.dirname(__file__)
    )
    for hashseed in ("0", "4242"):
        env = dict(os.environ, PYTHONHASHSEED=hashseed)
        out = subprocess.run(
            [sys.executable, "-c", script], env=env, capture_output=True, text=True, check=True
        )
        assert out.stdout.strip() == expected, hashseed


def _random_repo(path, rnd):
    repo = open_repository(path)
    locales = ["en", "fr", "es", "zh", "pt-BR"]
    for code in locales[: rnd.randint(1, 5)]:
        repo.add_language(code, code.upper())
    known = {l.code for l in repo.list_languages()}
    for i in range(rnd.randint(1, 3)):
        module = gen_valid_module(rnd, f"m{i}")
        repo.put_module(module.module_id, module.category, module.source_locale, module.title)
        repo.put_resource(module.module_id, ResourceKind.QUIZ, module.resources[ResourceKind.QUIZ])
        for kind, doc in module.resources.items():
            if kind is not ResourceKind.QUIZ:
                repo.put_resource(module.module_id, kind, doc)
        for locale in known - {"en"}:
            if rnd.random() < 0.5:
                status = VariantStatus.COMPLETE if rnd.random() < 0.7 else VariantStatus.DRAFT
                upsert_variant(
                    repo, module.module_id, ResourceKind.QUIZ, locale,
                    module.resources[ResourceKind.QUIZ], status,
                )
    return repo


@criterion("round-trip fixpoints: 1000 canonical documents, 50 export/import/export packs")
def test_round_trip_fixpoints(tmp_path):
    rnd = random.Random(314159)
    count = 0
    while count < 1000:
        module = gen_valid_module(rnd)
        for kind, doc in module.resources.items():
            data = codec.canonical_bytes(codec.resource_to_dict(kind, doc))
            reparsed = codec.resource_from_dict(kind, codec.parse_canonical(data))
            assert codec.canonical_bytes(codec.resource_to_dict(kind, reparsed)) == data
            count += 1
    for i in range(50):
        repo = _random_repo(str(tmp_path / f"src{i}"), rnd)
        pack = repo.export_pack()
        target = open_repository(str(tmp_path / f"dst{i}"))
        import_pack(target, pack)
        assert target.export_pack() == pack, f"repository {i} not byte-identical"


@criterion("sample fixture: 6 modules / 4 categories / 5 languages / >=43 resources, valid")
def test_sample_fixture(tmp_path):
    data_dir = str(tmp_path / "repo")
    runner = CliRunner()
    result = runner.invoke(cli_main, ["--data-dir", data_dir, "seed-sample"])
    assert result.exit_code == 0, result.output
    repo = open_repository(data_dir)
    stats = repo.pack_stats()
    assert stats.module_count == 6
    assert set(stats.per_category) == {"water", "air", "earth", "energy"}
    assert stats.resource_count >= 43
    assert stats.language_count == 5
    assert validate_pack(repo.build_pack()).is_valid
    result = runner.invoke(cli_main, ["--data-dir", data_dir, "validate"])
    assert result.exit_code == 0, result.output


@pytest.fixture(scope="module")
def matrix_client(tmp_path_factory):
    repo = open_repository(str(tmp_path_factory.mktemp("accept") / "repo"))
    seed_sample(repo)
    repo.create_user("admin", "password-a1", Role.ADMIN)
    repo.create_user("designer", "password-d1", Role.DESIGNER)
    repo.create_user("translator", "password-t1", Role.TRANSLATOR, {"fr"})
    client = TestClient(create_app(repo, token_secret="acceptance"))
    headers = {"anonymous": {}}
    for login in ("admin", "designer", "translator"):
        resp = client.post(
            "/api/v1/auth/login", json={"login": login, "password": f"password-{login[0]}1"}
        )
        headers[login] = {"Authorization": f"Bearer {resp.json()['token']}"}
    return client, headers, repo


@criterion("role matrix: exhaustive role x action grid matches the permission table")
def test_role_matrix(matrix_client):
    client, headers, repo = matrix_client
    quiz, _ = repo.get_resource("urban-water-cycle", ResourceKind.QUIZ)
    quiz_doc = codec.resource_to_dict(ResourceKind.QUIZ, quiz)

    def attempt(action, hdr):
        if action == "write-source":
            return client.put(
                "/api/v1/authoring/modules/urban-water-cycle/resources/quiz",
                json=quiz_doc, headers=hdr,
            )
        if action == "write-variant-granted":
            return client.put(
                "/api/v1/authoring/modules/urban-water-cycle/resources/quiz/variants/fr",
                json={"document": quiz_doc, "status": "complete"}, headers=hdr,
            )
        if action == "write-variant-ungranted":
            return client.put(
                "/api/v1/authoring/modules/urban-water-cycle/resources/quiz/variants/es",
                json={"document": quiz_doc, "status": "complete"}, headers=hdr,
            )
        if action == "add-language":
            return client.post(
                "/api/v1/authoring/languages",
                json={"code": "de", "display_name": "Deutsch"}, headers=hdr,
            )
        if action == "manage-users":
            return client.post(
                "/api/v1/authoring/users",
                json={"login": "probe", "password": "password-x1", "role": "designer"},
                headers=hdr,
            )
        if action == "export-pack":
            return client.get("/api/v1/export/pack", headers=hdr)
        if action == "read-reports":
            return client.get("/api/v1/reports/translations", headers=hdr)
        if action == "read-support":
            return client.get(
                "/api/v1/modules/urban-water-cycle/resources/pedagogical_support", headers=hdr
            )
        raise AssertionError(action)

    # expected outcome per (action, caller): True allowed, False forbidden
    expected = {
        "write-source": {"admin": True, "designer": True, "translator": False},
        "write-variant-granted": {"admin": True, "designer": True, "translator": True},
        "write-variant-ungranted": {"admin": True, "designer": True, "translator": False},
        "add-language": {"admin": True, "designer": False, "translator": False},
        "manage-users": {"admin": True, "designer": False, "translator": False},
        "export-pack": {"admin": True, "designer": True, "translator": True},
        "read-reports": {"admin": True, "designer": True, "translator": True},
        "read-support": {"admin": True, "designer": True, "translator": True},
    }
    for action, per_role in expected.items():
        # unauthenticated writes and reads of the authoring surface: 401
        resp = attempt(action, {})
        if action == "read-support":
            assert resp.status_code == 403, ("anonymous", action, resp.status_code)
        else:
            assert resp.status_code == 401, ("anonymous", action, resp.status_code)
        for caller, allowed in per_role.items():
            resp = attempt(action, headers[caller])
            if allowed:
                assert resp.status_code == 200, (caller, action, resp.text)
            else:
                assert resp.status_code == 403, (caller, action, resp.status_code)
    # teacher mode opens pedagogical support without any token
    resp = client.get(
        "/api/v1/modules/urban-water-cycle/resources/pedagogical_support",
        headers={"X-Teacher-Mode": "true"},
    )
    assert resp.status_code == 200


def _scan(payload, banned):
    found = set()
    if isinstance(payload, dict):
        found |= set(payload) & banned
        for v in payload.values():
            found |= _scan(v, banned)
    elif isinstance(payload, list):
        for v in payload:
            found |= _scan(v, banned)
    return found


@criterion("scrub property: zero answer-revealing fields on any open endpoint")
def test_scrub_property(matrix_client):
    client, _headers, repo = matrix_client
    banned = {"validity", "personalized_explanation"}
    checked = 0
    catalog = client.get("/api/v1/modules").json()
    assert _scan(catalog, banned) == set()
    checked += 1
    for entry in catalog["modules"]:
        mid = entry["module_id"]
        for kind in entry["resource_kinds"]:
            for lang in (None, "fr", "zh"):
                params = {"lang": lang} if lang else {}
                resp = client.get(f"/api/v1/modules/{mid}/resources/{kind}", params=params)
                assert resp.status_code == 200
                body = resp.json()
                assert _scan(body, banned) == set(), (mid, kind, lang)
                if kind == "quiz":
                    assert _scan(body, {"explanation"}) == set(), (mid, lang)
                checked += 1
        if "quiz" in entry["resource_kinds"]:
            for seed in range(3):
                body = client.post(
                    f"/api/v1/modules/{mid}/quiz-session", json={"seed": seed}
                ).json()
                assert _scan(body, banned | {"explanation"}) == set(), (mid, seed)
                checked += 1
    assert checked > 30
