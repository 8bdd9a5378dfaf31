"""Learner-facing mechanics: quiz sessions, answer feedback, memo decks, association checks.

Everything here is a pure function over immutable inputs; all randomness
comes from a caller-provided 64-bit seed, so identical inputs always
reproduce identical outputs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .model import AssociationGame, MemoMode, MemoSet, Question, Quiz
from .rng import SeededRng

DEFAULT_SESSION_SIZE = 5


class PlayError(Exception):
    pass


class EmptyQuizError(PlayError):
    pass


class EmptyPoolError(PlayError):
    pass


class UnknownPropositionError(PlayError):
    pass


class UnknownCategoryError(PlayError):
    pass


class UnknownCardError(PlayError):
    pass


class SameCardError(PlayError):
    pass


class ModeNotEnabledError(PlayError):
    pass


@dataclass(frozen=True)
class SessionRequest:
    quiz: Quiz
    page_links: tuple[tuple[str, tuple[str, ...]], ...] = ()
    answered_ids: frozenset[str] = field(default_factory=frozenset)
    seed: int = 0
    target_count: int = DEFAULT_SESSION_SIZE


@dataclass(frozen=True)
class QuizSession:
    question_ids: tuple[str, ...]
    covered_page_ids: frozenset[str]


def generate_quiz_session(req: SessionRequest) -> QuizSession:
    """Pick min(target_count, n) distinct questions, spreading picks across
    lesson pages and deprioritizing already-answered questions.

    Strategy: stratify question ids by page (lesson order; questions linked
    to no page form a final stratum) and round-robin one pick per stratum
    per pass. While enough unanswered questions remain to fill the session,
    only unanswered candidates are eligible, so a fully-unanswered session
    is guaranteed whenever one exists; otherwise answered questions are
    allowed as within-stratum fallback so page coverage still progresses.
    """
    n = len(req.quiz.questions)
    if n == 0:
        raise EmptyQuizError("cannot generate a session from an empty quiz")
    k = min(req.target_count, n)
    all_ids = [q.question_id for q in req.quiz.questions]
    linked: set[str] = set()
    strata: list[tuple[str | None, list[str]]] = []
    for page_id, qids in req.page_links:
        strata.append((page_id, list(qids)))
        linked.update(qids)
    unlinked = [qid for qid in all_ids if qid not in linked]
    if unlinked:
        strata.append((None, unlinked))

    rng = SeededRng(req.seed)
    answered = req.answered_ids
    unanswered_total = sum(1 for qid in all_ids if qid not in answered)
    avoid_answered = unanswered_total >= k

    selected: list[str] = []
    selected_set: set[str] = set()
    progressed = True
    while len(selected) < k and progressed:
        progressed = False
        for _page_id, pool in strata:
            if len(selected) >= k:
                break
            candidates = [qid for qid in pool if qid not in selected_set]
            if avoid_answered:
                candidates = [qid for qid in candidates if qid not in answered]
            else:
                fresh = [qid for qid in candidates if qid not in answered]
                if fresh:
                    candidates = fresh
            if candidates:
                pick = rng.choice(candidates)
                selected.append(pick)
                selected_set.add(pick)
                progressed = True
    # Safeguard fill; unreachable on well-formed input since every question
    # belongs to some stratum.
    if len(selected) < k:
        rest = [qid for qid in all_ids if qid not in selected_set]
        while len(selected) < k and rest:
            pick = rng.choice(rest)
            rest.remove(pick)
            selected.append(pick)
            selected_set.add(pick)

    covered = frozenset(
        page_id for page_id, qids in req.page_links if any(q in selected_set for q in qids)
    )
    return QuizSession(question_ids=tuple(selected), covered_page_ids=covered)


def pick_page_question(
    page_pool: list[Question], answered_ids: frozenset[str] | set[str], seed: int
) -> Question:
    """Pick the page's self-test question, preferring unanswered ones."""
    if not page_pool:
        raise EmptyPoolError("page has no linked questions")
    rng = SeededRng(seed)
    fresh = [q for q in page_pool if q.question_id not in answered_ids]
    return rng.choice(fresh if fresh else page_pool)


@dataclass(frozen=True)
class AnswerFeedback:
    correct: bool
    per_proposition_feedback: tuple[tuple[str, str], ...] = ()
    general_explanation: str | None = None


def evaluate_answer(question: Question, selected_ids: set[str] | frozenset[str]) -> AnswerFeedback:
    """Multi-select semantics: correct iff the selected set equals the valid set.

    On error, feedback lists the personalized explanation of every
    wrongly-selected or wrongly-omitted proposition that carries one, plus
    the question's general explanation.
    """
    known = {p.proposition_id for p in question.propositions}
    unknown = set(selected_ids) - known
    if unknown:
        raise UnknownPropositionError(f"unknown proposition ids: {sorted(unknown)}")
    valid = {p.proposition_id for p in question.propositions if p.validity}
    if set(selected_ids) == valid:
        return AnswerFeedback(correct=True)
    feedback = []
    for p in question.propositions:
        wrongly_selected = p.proposition_id in selected_ids and not p.validity
        wrongly_omitted = p.proposition_id not in selected_ids and p.validity
        if (wrongly_selected or wrongly_omitted) and p.personalized_explanation:
            feedback.append((p.proposition_id, p.personalized_explanation))
    return AnswerFeedback(
        correct=False,
        per_proposition_feedback=tuple(feedback),
        general_explanation=question.explanation or None,
    )


class CardFace(str, Enum):
    PICTURE = "picture"
    TITLE = "title"
    DEFINITION = "definition"


@dataclass(frozen=True)
class MemoCard:
    card_id: str
    face: CardFace
    content: str
    pair_key: int


@dataclass(frozen=True)
class MemoDeck:
    mode: MemoMode
    cards: tuple[MemoCard, ...]


_MODE_FACES = {
    MemoMode.CLASSICAL: (CardFace.PICTURE, CardFace.PICTURE),
    MemoMode.EASY: (CardFace.PICTURE, CardFace.TITLE),
    MemoMode.DIFFICULT: (CardFace.TITLE, CardFace.DEFINITION),
}


def _face_content(triplet, face: CardFace) -> str:
    if face is CardFace.PICTURE:
        return triplet.picture.asset_id
    if face is CardFace.TITLE:
        return triplet.title
    return triplet.definition


def derive_memo_deck(memo: MemoSet, mode: MemoMode, seed: int) -> MemoDeck:
    """Build the 12-card deck for one mode and shuffle it with the seed."""
    if mode not in memo.enabled_modes:
        raise ModeNotEnabledError(f"mode {mode.value!r} is not enabled for this memo set")
    faces = _MODE_FACES[mode]
    cards = []
    for pair_key, triplet in enumerate(memo.triplets):
        for side, face in enumerate(faces):
            cards.append((face, _face_content(triplet, face), pair_key))
    rng = SeededRng(seed)
    rng.shuffle(cards)
    return MemoDeck(
        mode=mode,
        cards=tuple(
            MemoCard(card_id=f"card-{i}", face=face, content=content, pair_key=pair_key)
            for i, (face, content, pair_key) in enumerate(cards)
        ),
    )


def check_memo_match(deck: MemoDeck, a: str, b: str) -> bool:
    if a == b:
        raise SameCardError("cannot match a card with itself")
    by_id = {c.card_id: c for c in deck.cards}
    if a not in by_id or b not in by_id:
        raise UnknownCardError(f"unknown card id: {a if a not in by_id else b}")
    return by_id[a].pair_key == by_id[b].pair_key


@dataclass(frozen=True)
class AssociationFeedback:
    correct: bool
    explanation: str | None = None


def check_association(
    game: AssociationGame, proposition_id: str, chosen_category_id: str
) -> AssociationFeedback:
    if chosen_category_id not in {c.category_id for c in game.categories}:
        raise UnknownCategoryError(f"unknown category {chosen_category_id!r}")
    proposition = next(
        (p for p in game.propositions if p.proposition_id == proposition_id), None
    )
    if proposition is None:
        raise UnknownPropositionError(f"unknown proposition {proposition_id!r}")
    if proposition.category_id == chosen_category_id:
        return AssociationFeedback(correct=True)
    return AssociationFeedback(correct=False, explanation=proposition.personalized_explanation)
