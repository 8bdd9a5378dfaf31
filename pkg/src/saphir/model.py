"""Domain model for modules and their resources.

Types here are plain immutable containers; they accept structurally broken
values on purpose so that the validation layer can report every problem at
once instead of failing at construction time.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum

LANGUAGE_CODE_RE = re.compile(r"^[a-z]{2,3}(-[A-Za-z0-9]{2,8})*$")


class ElementCategory(str, Enum):
    WATER = "water"
    AIR = "air"
    EARTH = "earth"
    ENERGY = "energy"


class ResourceKind(str, Enum):
    LESSON = "lesson"
    QUIZ = "quiz"
    MEMO_SET = "memo_set"
    ASSOCIATION_GAME = "association_game"
    CYCLE_GAME_REF = "cycle_game_ref"
    EXPERIMENT_REF = "experiment_ref"
    VIDEO_LINK = "video_link"
    PEDAGOGICAL_SUPPORT = "pedagogical_support"


class MemoMode(str, Enum):
    CLASSICAL = "classical"
    EASY = "easy"
    DIFFICULT = "difficult"


@dataclass(frozen=True)
class LanguageCode:
    code: str
    display_name: str

    def is_well_formed(self) -> bool:
        return bool(LANGUAGE_CODE_RE.match(self.code))


@dataclass(frozen=True)
class PictureRef:
    asset_id: str
    alt_text: str


@dataclass(frozen=True)
class Proposition:
    proposition_id: str
    title: str
    validity: bool
    personalized_explanation: str | None = None


@dataclass(frozen=True)
class Question:
    question_id: str
    title: str
    propositions: tuple[Proposition, ...]
    explanation: str = ""


@dataclass(frozen=True)
class Quiz:
    questions: tuple[Question, ...]


@dataclass(frozen=True)
class Tag:
    number: int
    text: str
    coord_h: float
    coord_v: float


@dataclass(frozen=True)
class LessonPage:
    page_id: str
    title: str
    text: str
    picture: PictureRef | None = None
    caption: str | None = None
    tags: tuple[Tag, ...] = ()
    linked_question_ids: tuple[str, ...] = ()


@dataclass(frozen=True)
class Lesson:
    pages: tuple[LessonPage, ...]


@dataclass(frozen=True)
class MemoTriplet:
    picture: PictureRef
    title: str
    definition: str


@dataclass(frozen=True)
class MemoSet:
    triplets: tuple[MemoTriplet, ...]
    enabled_modes: frozenset[MemoMode]


@dataclass(frozen=True)
class AssociationCategory:
    category_id: str
    title: str
    picture: PictureRef


@dataclass(frozen=True)
class AssociationProposition:
    proposition_id: str
    title: str
    category_id: str
    personalized_explanation: str | None = None


@dataclass(frozen=True)
class AssociationGame:
    categories: tuple[AssociationCategory, ...]
    propositions: tuple[AssociationProposition, ...]


@dataclass(frozen=True)
class VideoLink:
    url: str
    title: str


@dataclass(frozen=True)
class ExperimentRef:
    ref_id: str
    title: str


@dataclass(frozen=True)
class CycleGameRef:
    ref_id: str
    title: str


@dataclass(frozen=True)
class PedagogicalSupport:
    body: str


Resource = (
    Lesson
    | Quiz
    | MemoSet
    | AssociationGame
    | CycleGameRef
    | ExperimentRef
    | VideoLink
    | PedagogicalSupport
)

RESOURCE_TYPES: dict[ResourceKind, type] = {
    ResourceKind.LESSON: Lesson,
    ResourceKind.QUIZ: Quiz,
    ResourceKind.MEMO_SET: MemoSet,
    ResourceKind.ASSOCIATION_GAME: AssociationGame,
    ResourceKind.CYCLE_GAME_REF: CycleGameRef,
    ResourceKind.EXPERIMENT_REF: ExperimentRef,
    ResourceKind.VIDEO_LINK: VideoLink,
    ResourceKind.PEDAGOGICAL_SUPPORT: PedagogicalSupport,
}


@dataclass(frozen=True)
class ModuleDescriptor:
    module_id: str
    category: ElementCategory
    source_locale: str
    title: str
    resources: dict[ResourceKind, Resource] = field(default_factory=dict)
    # catalog-tile title per locale; resources carry their own translations
    title_i18n: dict[str, str] = field(default_factory=dict)


class UnresolvedLinkError(KeyError):
    """A page references a question id absent from the module quiz."""


def count_playable_resources(module: ModuleDescriptor) -> int:
    """Count learner-playable resources in a module.

    Each present kind counts one, except the memo set which counts one per
    enabled mode (1..3). Pedagogical support is teacher metadata and does
    not count: lesson + quiz + 3 memo games + association + cycle +
    experiment + video caps the total at nine.
    """
    total = 0
    for kind, resource in module.resources.items():
        if kind is ResourceKind.PEDAGOGICAL_SUPPORT:
            continue
        if kind is ResourceKind.MEMO_SET:
            total += len(resource.enabled_modes)
        else:
            total += 1
    return total


def page_question_pool(page: LessonPage, quiz: Quiz) -> list[Question]:
    """Resolve a page's linked question ids against the module quiz, in link order."""
    by_id = {q.question_id: q for q in quiz.questions}
    pool = []
    for qid in page.linked_question_ids:
        if qid not in by_id:
            raise UnresolvedLinkError(
                f"page {page.page_id!r} links unknown question {qid!r}"
            )
        pool.append(by_id[qid])
    return pool
