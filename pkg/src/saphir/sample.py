"""Deterministic sample catalog used by tests and demos.

Mirrors the published catalog shape (six modules over the four element
categories, 45 playable resources, five languages) with placeholder text;
it is synthetic content, not real course material.
"""

from __future__ import annotations

from . import localization
from .model import (
    AssociationCategory,
    AssociationGame,
    AssociationProposition,
    CycleGameRef,
    ElementCategory,
    ExperimentRef,
    Lesson,
    LessonPage,
    MemoMode,
    MemoSet,
    MemoTriplet,
    ModuleDescriptor,
    PedagogicalSupport,
    PictureRef,
    Proposition,
    Question,
    Quiz,
    ResourceKind,
    Tag,
    VideoLink,
)
from .records import VariantStatus
from .store import Repository

SAMPLE_LANGUAGES = [
    ("en", "English"),
    ("fr", "Français"),
    ("zh", "中文"),
    ("es", "Español"),
    ("pt-BR", "Português (Brasil)"),
]


def _picture(repo: Repository, name: str) -> PictureRef:
    asset_id = repo.put_asset(f"PNG-PLACEHOLDER:{name}".encode("utf-8"), "image/png")
    return PictureRef(asset_id=asset_id, alt_text=f"Illustration: {name}")


def _quiz(topic: str, count: int = 5) -> Quiz:
    questions = []
    for i in range(1, count + 1):
        props = [
            Proposition(
                proposition_id=f"p{i}a",
                title=f"Correct statement {i} about {topic}",
                validity=True,
            ),
            Proposition(
                proposition_id=f"p{i}b",
                title=f"Common misconception {i} about {topic}",
                validity=False,
                personalized_explanation=f"This mixes up two steps of {topic}.",
            ),
            Proposition(
                proposition_id=f"p{i}c",
                title=f"Unrelated statement {i}",
                validity=False,
            ),
        ]
        questions.append(
            Question(
                question_id=f"q{i}",
                title=f"Question {i} on {topic}?",
                propositions=tuple(props),
                explanation=f"Remember the key idea {i} of {topic}.",
            )
        )
    return Quiz(questions=tuple(questions))


def _lesson(repo: Repository, topic: str, links: list[list[str]]) -> Lesson:
    pages = []
    for i, page_links in enumerate(links, start=1):
        picture = None
        caption = None
        tags = ()
        if i == 1:
            picture = _picture(repo, f"{topic} overview")
            caption = f"Overview of {topic}"
            tags = (
                Tag(number=1, text=f"First step of {topic}", coord_h=0.25, coord_v=0.4),
                Tag(number=2, text=f"Second step of {topic}", coord_h=0.7, coord_v=0.6),
            )
        pages.append(
            LessonPage(
                page_id=f"page{i}",
                title=f"{topic.capitalize()}, part {i}",
                text=f"Page {i} explains {topic} in simple words.\nIt has two short paragraphs.",
                picture=picture,
                caption=caption,
                tags=tags,
                linked_question_ids=tuple(page_links),
            )
        )
    return Lesson(pages=tuple(pages))


def _memo(repo: Repository, topic: str, modes: set[MemoMode]) -> MemoSet:
    triplets = tuple(
        MemoTriplet(
            picture=_picture(repo, f"{topic} concept {i}"),
            title=f"{topic} word {i}",
            definition=f"Definition of {topic} word {i}.",
        )
        for i in range(1, 7)
    )
    return MemoSet(triplets=triplets, enabled_modes=frozenset(modes))


def _association(repo: Repository, topic: str, left: str, right: str) -> AssociationGame:
    categories = (
        AssociationCategory(category_id="cat-a", title=left, picture=_picture(repo, left)),
        AssociationCategory(category_id="cat-b", title=right, picture=_picture(repo, right)),
    )
    propositions = tuple(
        AssociationProposition(
            proposition_id=f"ap{i}",
            title=f"{topic} example {i}",
            category_id="cat-a" if i % 2 else "cat-b",
            personalized_explanation=f"Example {i} belongs to {left if i % 2 else right}.",
        )
        for i in range(1, 7)
    )
    return AssociationGame(categories=categories, propositions=propositions)


_ALL_MODES = {MemoMode.CLASSICAL, MemoMode.EASY, MemoMode.DIFFICULT}

_MODULES = [
    ("water-filtration", ElementCategory.WATER, "Water filtration", "full"),
    ("urban-water-cycle", ElementCategory.WATER, "The urban water cycle", "full"),
    ("natural-water-cycle", ElementCategory.WATER, "The natural water cycle", "full"),
    ("greenhouse-effect", ElementCategory.AIR, "The greenhouse effect", "full"),
    ("natural-greenhouse-effect", ElementCategory.ENERGY, "The natural greenhouse effect", "small"),
    ("biodiversity", ElementCategory.EARTH, "Biodiversity", "small2"),
]


def seed_sample(repo: Repository) -> None:
    """Populate an (ideally fresh) repository with the sample catalog."""
    known = {l.code for l in repo.list_languages()}
    for code, display in SAMPLE_LANGUAGES:
        if code not in known:
            repo.add_language(code, display)

    for module_id, category, title, size in _MODULES:
        topic = title.lower()
        if topic.startswith("the "):
            topic = topic[4:]
        repo.put_module(
            module_id, category, "en", title,
            title_i18n={loc: f"[{loc}] {title}" for loc in ("fr", "zh", "es", "pt-BR")},
        )
        repo.put_resource(module_id, ResourceKind.QUIZ, _quiz(topic))
        repo.put_resource(
            module_id,
            ResourceKind.LESSON,
            _lesson(repo, topic, [["q1", "q2"], ["q3"], ["q4", "q5"]]),
        )
        if size == "full":
            repo.put_resource(module_id, ResourceKind.MEMO_SET, _memo(repo, topic, _ALL_MODES))
            repo.put_resource(
                module_id, ResourceKind.ASSOCIATION_GAME,
                _association(repo, topic, "Helps", "Harms"),
            )
            repo.put_resource(
                module_id, ResourceKind.CYCLE_GAME_REF,
                CycleGameRef(ref_id=f"cycle-{module_id}", title=f"{title} cycle game"),
            )
            repo.put_resource(
                module_id, ResourceKind.EXPERIMENT_REF,
                ExperimentRef(ref_id=f"experiment-{module_id}", title=f"{title} experiment"),
            )
            repo.put_resource(
                module_id, ResourceKind.VIDEO_LINK,
                VideoLink(url=f"https://videos.example.org/{module_id}", title=f"{title} video"),
            )
        elif size == "small":
            repo.put_resource(
                module_id, ResourceKind.MEMO_SET,
                _memo(repo, topic, {MemoMode.CLASSICAL, MemoMode.EASY}),
            )
            repo.put_resource(
                module_id, ResourceKind.VIDEO_LINK,
                VideoLink(url=f"https://videos.example.org/{module_id}", title=f"{title} video"),
            )
        else:
            repo.put_resource(
                module_id, ResourceKind.MEMO_SET, _memo(repo, topic, {MemoMode.CLASSICAL})
            )
            repo.put_resource(
                module_id, ResourceKind.ASSOCIATION_GAME,
                _association(repo, topic, "Living", "Non-living"),
            )
        repo.put_resource(
            module_id, ResourceKind.PEDAGOGICAL_SUPPORT,
            PedagogicalSupport(
                body=f"Classroom guidance for the {title} module: start with the lesson, "
                "then let pupils try the games in pairs."
            ),
        )

    _seed_variants(repo)


def _translated_quiz(quiz: Quiz, locale: str) -> Quiz:
    return Quiz(
        questions=tuple(
            Question(
                question_id=q.question_id,
                title=f"[{locale}] {q.title}",
                explanation=f"[{locale}] {q.explanation}",
                propositions=tuple(
                    Proposition(
                        proposition_id=p.proposition_id,
                        title=f"[{locale}] {p.title}",
                        validity=p.validity,
                        personalized_explanation=(
                            f"[{locale}] {p.personalized_explanation}"
                            if p.personalized_explanation
                            else None
                        ),
                    )
                    for p in q.propositions
                ),
            )
            for q in quiz.questions
        )
    )


def _translated_lesson(lesson: Lesson, locale: str) -> Lesson:
    return Lesson(
        pages=tuple(
            LessonPage(
                page_id=pg.page_id,
                title=f"[{locale}] {pg.title}",
                text=f"[{locale}] {pg.text}",
                picture=pg.picture,
                caption=f"[{locale}] {pg.caption}" if pg.caption else None,
                tags=tuple(
                    Tag(number=t.number, text=f"[{locale}] {t.text}",
                        coord_h=t.coord_h, coord_v=t.coord_v)
                    for t in pg.tags
                ),
                linked_question_ids=pg.linked_question_ids,
            )
            for pg in lesson.pages
        )
    )


def _seed_variants(repo: Repository) -> None:
    for module_id in ("water-filtration", "greenhouse-effect"):
        lesson, _ = repo.get_resource(module_id, ResourceKind.LESSON)
        quiz, _ = repo.get_resource(module_id, ResourceKind.QUIZ)
        for locale in ("fr", "es", "zh"):
            localization.upsert_variant(
                repo, module_id, ResourceKind.LESSON, locale,
                _translated_lesson(lesson, locale), VariantStatus.COMPLETE,
            )
            localization.upsert_variant(
                repo, module_id, ResourceKind.QUIZ, locale,
                _translated_quiz(quiz, locale), VariantStatus.COMPLETE,
            )
    lesson, _ = repo.get_resource("biodiversity", ResourceKind.LESSON)
    localization.upsert_variant(
        repo, "biodiversity", ResourceKind.LESSON, "fr",
        _translated_lesson(lesson, "fr"), VariantStatus.DRAFT,
    )
