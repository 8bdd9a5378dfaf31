"""Regenerate the cross-language golden vectors consumed by the web client.

Usage: python3 tools/export_golden.py [OUT]

The web client re-implements the seeded RNG, quiz-session generation and
memo-deck shuffling for offline play; these vectors pin both sides to the
same outputs bit-exactly. tests/test_golden.py fails if the committed file
drifts from the current implementation.
"""

from __future__ import annotations

import json
import random
import sys
from pathlib import Path

from saphir.model import MemoMode, MemoSet, MemoTriplet, PictureRef, Proposition, Question, Quiz
from saphir.play import SessionRequest, derive_memo_deck, generate_quiz_session
from saphir.rng import SeededRng

DEFAULT_OUT = Path(__file__).resolve().parent.parent / "frontend" / "tests" / "golden" / "vectors.json"


def _quiz(n: int) -> Quiz:
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


def rng_vectors():
    out = []
    for seed in (0, 1, 2, 42, 2**31, 2**63 - 1, 0x9E3779B97F4A7C15):
        rng = SeededRng(seed)
        fresh = SeededRng(seed)
        out.append(
            {
                "seed": str(seed),
                "u64": [str(rng.next_u64()) for _ in range(8)],
                "below_10": [fresh.below(10) for _ in range(8)],
            }
        )
    return out


def session_vectors(count: int = 100):
    rnd = random.Random(1_618_033)
    vectors = []
    for i in range(count):
        n = rnd.randint(1, 12)
        ids = [f"q{j}" for j in range(1, n + 1)]
        order = list(ids)
        rnd.shuffle(order)
        pages = rnd.randint(0, min(6, n))
        links, rest = [], list(order)
        for p in range(pages):
            take = rnd.randint(0, max(0, len(rest) // (pages - p)))
            links.append([f"page{p + 1}", rest[:take]])
            rest = rest[take:]
        answered = sorted(q for q in ids if rnd.random() < 0.4)
        seed = rnd.getrandbits(63)
        target = 5 if rnd.random() < 0.8 else rnd.randint(1, 8)
        session = generate_quiz_session(
            SessionRequest(
                quiz=_quiz(n),
                page_links=tuple((p, tuple(qs)) for p, qs in links),
                answered_ids=frozenset(answered),
                seed=seed,
                target_count=target,
            )
        )
        vectors.append(
            {
                "name": f"session-{i:03d}",
                "question_count": n,
                "page_links": links,
                "answered_ids": answered,
                "seed": str(seed),
                "target_count": target,
                "expected_question_ids": list(session.question_ids),
                "expected_covered_page_ids": sorted(session.covered_page_ids),
            }
        )
    return vectors


def memo_vectors():
    triplets = tuple(
        MemoTriplet(PictureRef(f"sha256-pic{i}", f"alt {i}"), f"title {i}", f"definition {i}")
        for i in range(6)
    )
    memo = MemoSet(triplets, frozenset(MemoMode))
    vectors = []
    for mode in sorted(MemoMode, key=lambda m: m.value):
        for seed in (0, 7, 123456789, 2**62):
            deck = derive_memo_deck(memo, mode, seed)
            vectors.append(
                {
                    "mode": mode.value,
                    "seed": str(seed),
                    "triplets": [
                        {"picture": t.picture.asset_id, "title": t.title, "definition": t.definition}
                        for t in triplets
                    ],
                    "expected_cards": [
                        {"card_id": c.card_id, "face": c.face.value,
                         "content": c.content, "pair_key": c.pair_key}
                        for c in deck.cards
                    ],
                }
            )
    return vectors


def build() -> dict:
    return {
        "format_version": 1,
        "rng": rng_vectors(),
        "sessions": session_vectors(),
        "memo_decks": memo_vectors(),
    }


def main() -> None:
    out = Path(sys.argv[1]) if len(sys.argv) > 1 else DEFAULT_OUT
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(json.dumps(build(), indent=2, sort_keys=True) + "\n", encoding="utf-8")
    print(f"wrote {out}")


if __name__ == "__main__":
    main()
