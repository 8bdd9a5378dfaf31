"""Structural validation of resources, modules, and packs.

Every checker returns a report listing all violations instead of raising,
so authoring tools can surface every problem in one pass. A whitespace-only
string counts as empty.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from urllib.parse import urlparse

from .model import (
    LANGUAGE_CODE_RE,
    AssociationGame,
    Lesson,
    MemoSet,
    ModuleDescriptor,
    PedagogicalSupport,
    Question,
    Quiz,
    Resource,
    ResourceKind,
    count_playable_resources,
)
from .records import ContentPack, VariantStatus

MIN_PROPOSITIONS = 2
MAX_PROPOSITIONS = 10
MEMO_TRIPLET_COUNT = 6
ASSOCIATION_CATEGORY_COUNT = 2
MAX_PLAYABLE_RESOURCES = 9


class ViolationCode(str, Enum):
    PROPOSITION_COUNT = "PROPOSITION_COUNT"
    NO_VALID_PROPOSITION = "NO_VALID_PROPOSITION"
    QUESTION_COUNT = "QUESTION_COUNT"
    PAGE_COUNT = "PAGE_COUNT"
    PAGE_LINK_UNRESOLVED = "PAGE_LINK_UNRESOLVED"
    PAGE_LINK_EXCEEDS_N = "PAGE_LINK_EXCEEDS_N"
    TAG_COORD_RANGE = "TAG_COORD_RANGE"
    TAG_NUMBERING = "TAG_NUMBERING"
    CAPTION_WITHOUT_PICTURE = "CAPTION_WITHOUT_PICTURE"
    MEMO_TRIPLET_COUNT = "MEMO_TRIPLET_COUNT"
    MEMO_MODE_SET_EMPTY = "MEMO_MODE_SET_EMPTY"
    CATEGORY_COUNT = "CATEGORY_COUNT"
    CATEGORY_UNRESOLVED = "CATEGORY_UNRESOLVED"
    CATEGORY_UNUSED = "CATEGORY_UNUSED"
    ASSOCIATION_PROPOSITION_COUNT = "ASSOCIATION_PROPOSITION_COUNT"
    INVALID_URL = "INVALID_URL"
    EMPTY_FIELD = "EMPTY_FIELD"
    DUPLICATE_ID = "DUPLICATE_ID"
    RESOURCE_COUNT_EXCEEDED = "RESOURCE_COUNT_EXCEEDED"
    MODULE_EMPTY = "MODULE_EMPTY"
    MALFORMED_LANGUAGE_CODE = "MALFORMED_LANGUAGE_CODE"
    UNDECLARED_LANGUAGE = "UNDECLARED_LANGUAGE"
    UNKNOWN_SOURCE_RESOURCE = "UNKNOWN_SOURCE_RESOURCE"
    ASSET_UNRESOLVED = "ASSET_UNRESOLVED"


@dataclass(frozen=True)
class Violation:
    code: ViolationCode
    path: str
    message: str


@dataclass(frozen=True)
class ValidationReport:
    subject: str
    violations: tuple[Violation, ...]

    @property
    def is_valid(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "subject": self.subject,
            "is_valid": self.is_valid,
            "violations": [
                {"code": v.code.value, "path": v.path, "message": v.message}
                for v in self.violations
            ],
        }


def _blank(s: str | None) -> bool:
    return s is None or not s.strip()


class _Collector:
    def __init__(self, subject: str):
        self.subject = subject
        self.violations: list[Violation] = []

    def add(self, code: ViolationCode, path: str, message: str) -> None:
        self.violations.append(Violation(code, path, message))

    def extend(self, report: ValidationReport) -> None:
        self.violations.extend(report.violations)

    def report(self) -> ValidationReport:
        return ValidationReport(self.subject, tuple(self.violations))


def validate_question(question: Question, path: str = "") -> ValidationReport:
    path = path or f"question/{question.question_id}"
    c = _Collector(path)
    m = len(question.propositions)
    if not MIN_PROPOSITIONS <= m <= MAX_PROPOSITIONS:
        c.add(
            ViolationCode.PROPOSITION_COUNT,
            path,
            f"question has {m} propositions, expected between "
            f"{MIN_PROPOSITIONS} and {MAX_PROPOSITIONS}",
        )
    if not any(p.validity for p in question.propositions):
        c.add(ViolationCode.NO_VALID_PROPOSITION, path, "no proposition is marked valid")
    if _blank(question.title):
        c.add(ViolationCode.EMPTY_FIELD, f"{path}/title", "question title is empty")
    seen: set[str] = set()
    for p in question.propositions:
        ppath = f"{path}/proposition/{p.proposition_id}"
        if p.proposition_id in seen:
            c.add(ViolationCode.DUPLICATE_ID, ppath, "duplicate proposition id")
        seen.add(p.proposition_id)
        if _blank(p.title):
            c.add(ViolationCode.EMPTY_FIELD, f"{ppath}/title", "proposition title is empty")
    return c.report()


def validate_quiz(quiz: Quiz, path: str = "quiz") -> ValidationReport:
    c = _Collector(path)
    if len(quiz.questions) < 1:
        c.add(ViolationCode.QUESTION_COUNT, path, "quiz must contain at least one question")
    seen: set[str] = set()
    for q in quiz.questions:
        if q.question_id in seen:
            c.add(ViolationCode.DUPLICATE_ID, f"{path}/{q.question_id}", "duplicate question id")
        seen.add(q.question_id)
        c.extend(validate_question(q, f"{path}/{q.question_id}"))
    return c.report()


def validate_lesson(lesson: Lesson, quiz: Quiz | None = None, path: str = "lesson") -> ValidationReport:
    c = _Collector(path)
    if len(lesson.pages) < 1:
        c.add(ViolationCode.PAGE_COUNT, path, "lesson must contain at least one page")
    quiz_ids = {q.question_id for q in quiz.questions} if quiz is not None else None
    n = len(quiz.questions) if quiz is not None else 0
    seen_pages: set[str] = set()
    for page in lesson.pages:
        ppath = f"{path}/page/{page.page_id}"
        if page.page_id in seen_pages:
            c.add(ViolationCode.DUPLICATE_ID, ppath, "duplicate page id")
        seen_pages.add(page.page_id)
        if _blank(page.title):
            c.add(ViolationCode.EMPTY_FIELD, f"{ppath}/title", "page title is empty")
        if page.picture is None:
            if page.caption is not None:
                c.add(
                    ViolationCode.CAPTION_WITHOUT_PICTURE,
                    f"{ppath}/caption",
                    "caption present without a picture",
                )
            if page.tags:
                c.add(
                    ViolationCode.CAPTION_WITHOUT_PICTURE,
                    f"{ppath}/tags",
                    "tags present without a picture",
                )
        else:
            if _blank(page.picture.alt_text):
                c.add(
                    ViolationCode.EMPTY_FIELD,
                    f"{ppath}/picture/alt_text",
                    "picture alt text is empty",
                )
        for i, tag in enumerate(page.tags):
            tpath = f"{ppath}/tag/{tag.number}"
            if not (0.0 <= tag.coord_h <= 1.0 and 0.0 <= tag.coord_v <= 1.0):
                c.add(
                    ViolationCode.TAG_COORD_RANGE,
                    tpath,
                    f"tag coordinates ({tag.coord_h}, {tag.coord_v}) outside [0,1]",
                )
            if _blank(tag.text):
                c.add(ViolationCode.EMPTY_FIELD, f"{tpath}/text", "tag text is empty")
        if page.tags and [t.number for t in page.tags] != list(range(1, len(page.tags) + 1)):
            c.add(
                ViolationCode.TAG_NUMBERING,
                f"{ppath}/tags",
                "tag numbers must be 1..r consecutive",
            )
        seen_links: set[str] = set()
        for qid in page.linked_question_ids:
            lpath = f"{ppath}/link/{qid}"
            if qid in seen_links:
                c.add(ViolationCode.DUPLICATE_ID, lpath, "duplicate linked question id")
            seen_links.add(qid)
            if quiz_ids is None or qid not in quiz_ids:
                c.add(
                    ViolationCode.PAGE_LINK_UNRESOLVED,
                    lpath,
                    "linked question does not exist in the module quiz",
                )
        if quiz is not None and len(page.linked_question_ids) > n:
            c.add(
                ViolationCode.PAGE_LINK_EXCEEDS_N,
                f"{ppath}/links",
                f"page links {len(page.linked_question_ids)} questions, quiz has {n}",
            )
    return c.report()


def validate_memo_set(memo: MemoSet, path: str = "memo_set") -> ValidationReport:
    c = _Collector(path)
    if len(memo.triplets) != MEMO_TRIPLET_COUNT:
        c.add(
            ViolationCode.MEMO_TRIPLET_COUNT,
            path,
            f"memo set has {len(memo.triplets)} triplets, expected exactly {MEMO_TRIPLET_COUNT}",
        )
    if not memo.enabled_modes:
        c.add(ViolationCode.MEMO_MODE_SET_EMPTY, f"{path}/modes", "no memo mode enabled")
    seen_titles: set[str] = set()
    for i, t in enumerate(memo.triplets):
        tpath = f"{path}/triplet/{i}"
        if _blank(t.title):
            c.add(ViolationCode.EMPTY_FIELD, f"{tpath}/title", "triplet title is empty")
        elif t.title in seen_titles:
            c.add(ViolationCode.DUPLICATE_ID, f"{tpath}/title", "duplicate triplet title")
        else:
            seen_titles.add(t.title)
        if _blank(t.definition):
            c.add(ViolationCode.EMPTY_FIELD, f"{tpath}/definition", "triplet definition is empty")
        if _blank(t.picture.asset_id):
            c.add(ViolationCode.EMPTY_FIELD, f"{tpath}/picture", "triplet picture is empty")
        if _blank(t.picture.alt_text):
            c.add(ViolationCode.EMPTY_FIELD, f"{tpath}/picture/alt_text", "picture alt text is empty")
    return c.report()


def validate_association(game: AssociationGame, path: str = "association_game") -> ValidationReport:
    c = _Collector(path)
    if len(game.categories) != ASSOCIATION_CATEGORY_COUNT:
        c.add(
            ViolationCode.CATEGORY_COUNT,
            f"{path}/categories",
            f"association game has {len(game.categories)} categories, expected exactly 2",
        )
    cat_ids = [cat.category_id for cat in game.categories]
    if len(set(cat_ids)) != len(cat_ids):
        c.add(ViolationCode.DUPLICATE_ID, f"{path}/categories", "category ids must differ")
    for cat in game.categories:
        cpath = f"{path}/category/{cat.category_id}"
        if _blank(cat.title):
            c.add(ViolationCode.EMPTY_FIELD, f"{cpath}/title", "category title is empty")
        if _blank(cat.picture.alt_text):
            c.add(ViolationCode.EMPTY_FIELD, f"{cpath}/picture/alt_text", "picture alt text is empty")
    if len(game.propositions) < 2:
        c.add(
            ViolationCode.ASSOCIATION_PROPOSITION_COUNT,
            f"{path}/propositions",
            f"association game has {len(game.propositions)} propositions, expected at least 2",
        )
    known = set(cat_ids)
    used: set[str] = set()
    seen_props: set[str] = set()
    for p in game.propositions:
        ppath = f"{path}/proposition/{p.proposition_id}"
        if p.proposition_id in seen_props:
            c.add(ViolationCode.DUPLICATE_ID, ppath, "duplicate proposition id")
        seen_props.add(p.proposition_id)
        if _blank(p.title):
            c.add(ViolationCode.EMPTY_FIELD, f"{ppath}/title", "proposition title is empty")
        if p.category_id not in known:
            c.add(
                ViolationCode.CATEGORY_UNRESOLVED,
                ppath,
                f"proposition references unknown category {p.category_id!r}",
            )
        else:
            used.add(p.category_id)
    for cid in cat_ids:
        if cid not in used:
            c.add(
                ViolationCode.CATEGORY_UNUSED,
                f"{path}/category/{cid}",
                "category has no proposition",
            )
    return c.report()


def validate_resource(
    kind: ResourceKind,
    resource: Resource,
    quiz: Quiz | None = None,
    path: str = "",
) -> ValidationReport:
    """Validate one resource document; the lesson needs the module quiz for link checks."""
    path = path or kind.value
    if kind is ResourceKind.LESSON:
        return validate_lesson(resource, quiz, path)
    if kind is ResourceKind.QUIZ:
        return validate_quiz(resource, path)
    if kind is ResourceKind.MEMO_SET:
        return validate_memo_set(resource, path)
    if kind is ResourceKind.ASSOCIATION_GAME:
        return validate_association(resource, path)
    c = _Collector(path)
    if kind is ResourceKind.VIDEO_LINK:
        parsed = urlparse(resource.url)
        if not (parsed.scheme and parsed.netloc):
            c.add(ViolationCode.INVALID_URL, f"{path}/url", f"not an absolute URL: {resource.url!r}")
    elif kind in (ResourceKind.CYCLE_GAME_REF, ResourceKind.EXPERIMENT_REF):
        if _blank(resource.ref_id):
            c.add(ViolationCode.EMPTY_FIELD, f"{path}/ref_id", "interactive reference id is empty")
    elif kind is ResourceKind.PEDAGOGICAL_SUPPORT:
        if _blank(resource.body):
            c.add(ViolationCode.EMPTY_FIELD, f"{path}/body", "pedagogical support body is empty")
    return c.report()


def validate_module(module: ModuleDescriptor) -> ValidationReport:
    path = f"module/{module.module_id}"
    c = _Collector(path)
    if _blank(module.title):
        c.add(ViolationCode.EMPTY_FIELD, f"{path}/title", "module title is empty")
    if not LANGUAGE_CODE_RE.match(module.source_locale):
        c.add(
            ViolationCode.MALFORMED_LANGUAGE_CODE,
            f"{path}/source_locale",
            f"malformed language code {module.source_locale!r}",
        )
    for locale, title in module.title_i18n.items():
        if not LANGUAGE_CODE_RE.match(locale):
            c.add(
                ViolationCode.MALFORMED_LANGUAGE_CODE,
                f"{path}/title_i18n/{locale}",
                f"malformed language code {locale!r}",
            )
        if _blank(title):
            c.add(ViolationCode.EMPTY_FIELD, f"{path}/title_i18n/{locale}", "localized title is empty")
    if not module.resources:
        c.add(ViolationCode.MODULE_EMPTY, path, "module holds no resource")
    quiz = module.resources.get(ResourceKind.QUIZ)
    for kind, resource in module.resources.items():
        c.extend(validate_resource(kind, resource, quiz, f"{path}/{kind.value}"))
    count = count_playable_resources(module)
    if count > MAX_PLAYABLE_RESOURCES:
        c.add(
            ViolationCode.RESOURCE_COUNT_EXCEEDED,
            path,
            f"module counts {count} playable resources, maximum is {MAX_PLAYABLE_RESOURCES}",
        )
    return c.report()


def validate_pack(pack: ContentPack) -> ValidationReport:
    c = _Collector("pack")
    declared: set[str] = set()
    for lang in pack.languages:
        lpath = f"pack/language/{lang.code}"
        if not lang.is_well_formed():
            c.add(ViolationCode.MALFORMED_LANGUAGE_CODE, lpath, f"malformed code {lang.code!r}")
        if lang.code in declared:
            c.add(ViolationCode.DUPLICATE_ID, lpath, "duplicate language code")
        declared.add(lang.code)
    asset_ids = {a.asset_id for a in pack.assets}
    module_ids: set[str] = set()
    modules_by_id: dict[str, ModuleDescriptor] = {}
    for module in pack.modules:
        mpath = f"pack/module/{module.module_id}"
        if module.module_id in module_ids:
            c.add(ViolationCode.DUPLICATE_ID, mpath, "duplicate module id")
        module_ids.add(module.module_id)
        modules_by_id[module.module_id] = module
        c.extend(validate_module(module))
        for asset_id in _picture_asset_ids(module.resources.values()):
            if asset_ids and asset_id not in asset_ids:
                c.add(
                    ViolationCode.ASSET_UNRESOLVED,
                    f"{mpath}",
                    f"picture references missing asset {asset_id!r}",
                )
    for variant in pack.variants:
        vpath = f"pack/variant/{variant.module_id}/{variant.kind.value}/{variant.locale}"
        module = modules_by_id.get(variant.module_id)
        if module is None or variant.kind not in module.resources:
            c.add(
                ViolationCode.UNKNOWN_SOURCE_RESOURCE,
                vpath,
                "variant references a missing source resource",
            )
            continue
        if variant.locale not in declared:
            c.add(
                ViolationCode.UNDECLARED_LANGUAGE,
                vpath,
                f"variant language {variant.locale!r} is not declared in the pack",
            )
        if variant.status is VariantStatus.COMPLETE:
            quiz = module.resources.get(ResourceKind.QUIZ)
            c.extend(validate_resource(variant.kind, variant.document, quiz, vpath))
    return c.report()


def _picture_asset_ids(resources) -> list[str]:
    ids: list[str] = []
    for resource in resources:
        if isinstance(resource, Lesson):
            ids.extend(p.picture.asset_id for p in resource.pages if p.picture)
        elif isinstance(resource, MemoSet):
            ids.extend(t.picture.asset_id for t in resource.triplets)
        elif isinstance(resource, AssociationGame):
            ids.extend(cat.picture.asset_id for cat in resource.categories)
    return ids
