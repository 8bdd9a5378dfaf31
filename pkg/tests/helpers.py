"""Shared test data builders: constructive random valid modules and
single-constraint mutations of them."""

from __future__ import annotations

import random
import string

from saphir.model import (
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


def _word(rnd: random.Random, length: int = 8) -> str:
    return "".join(rnd.choice(string.ascii_lowercase) for _ in range(length))


def _picture(rnd: random.Random) -> PictureRef:
    return PictureRef(asset_id=f"sha256-{_word(rnd, 16)}", alt_text=f"alt {_word(rnd)}")


def gen_question(rnd: random.Random, qid: str) -> Question:
    m = rnd.randint(2, 10)
    valid_idx = rnd.randrange(m)
    props = tuple(
        Proposition(
            proposition_id=f"{qid}-p{i}",
            title=f"prop {_word(rnd)}",
            validity=(i == valid_idx) or rnd.random() < 0.15,
            personalized_explanation=f"why {_word(rnd)}" if rnd.random() < 0.5 else None,
        )
        for i in range(m)
    )
    return Question(
        question_id=qid,
        title=f"question {_word(rnd)}?",
        propositions=props,
        explanation=f"general {_word(rnd)}",
    )


def gen_quiz(rnd: random.Random, n: int | None = None) -> Quiz:
    n = n if n is not None else rnd.randint(1, 10)
    return Quiz(questions=tuple(gen_question(rnd, f"q{i}") for i in range(1, n + 1)))


def gen_lesson(rnd: random.Random, quiz: Quiz | None, pages: int | None = None) -> Lesson:
    pages = pages if pages is not None else rnd.randint(1, 4)
    quiz_ids = [q.question_id for q in quiz.questions] if quiz else []
    out = []
    for i in range(1, pages + 1):
        picture = None
        caption = None
        tags: tuple[Tag, ...] = ()
        if rnd.random() < 0.7:
            picture = _picture(rnd)
            if rnd.random() < 0.7:
                caption = f"caption {_word(rnd)}"
            r = rnd.randint(0, 3)
            tags = tuple(
                Tag(
                    number=j,
                    text=f"tag {_word(rnd)}",
                    coord_h=round(rnd.random(), 6),
                    coord_v=round(rnd.random(), 6),
                )
                for j in range(1, r + 1)
            )
        links = ()
        if quiz_ids and rnd.random() < 0.8:
            links = tuple(rnd.sample(quiz_ids, rnd.randint(0, len(quiz_ids))))
        out.append(
            LessonPage(
                page_id=f"page{i}",
                title=f"page title {_word(rnd)}",
                text=f"body {_word(rnd, 30)}",
                picture=picture,
                caption=caption,
                tags=tags,
                linked_question_ids=links,
            )
        )
    return Lesson(pages=tuple(out))


def gen_memo(rnd: random.Random) -> MemoSet:
    modes = rnd.sample(list(MemoMode), rnd.randint(1, 3))
    return MemoSet(
        triplets=tuple(
            MemoTriplet(
                picture=_picture(rnd),
                title=f"term-{i}-{_word(rnd)}",
                definition=f"definition {_word(rnd)}",
            )
            for i in range(6)
        ),
        enabled_modes=frozenset(modes),
    )


def gen_association(rnd: random.Random) -> AssociationGame:
    categories = (
        AssociationCategory(category_id="cat-a", title=f"cat {_word(rnd)}", picture=_picture(rnd)),
        AssociationCategory(category_id="cat-b", title=f"cat {_word(rnd)}", picture=_picture(rnd)),
    )
    t = rnd.randint(2, 8)
    props = []
    for i in range(t):
        cid = "cat-a" if i == 0 else ("cat-b" if i == 1 else rnd.choice(["cat-a", "cat-b"]))
        props.append(
            AssociationProposition(
                proposition_id=f"ap{i}",
                title=f"item {_word(rnd)}",
                category_id=cid,
                personalized_explanation=f"because {_word(rnd)}" if rnd.random() < 0.5 else None,
            )
        )
    return AssociationGame(categories=categories, propositions=tuple(props))


def gen_valid_module(rnd: random.Random, module_id: str | None = None) -> ModuleDescriptor:
    module_id = module_id or f"mod-{_word(rnd)}"
    quiz = gen_quiz(rnd)
    resources = {
        ResourceKind.QUIZ: quiz,
        ResourceKind.LESSON: gen_lesson(rnd, quiz),
    }
    if rnd.random() < 0.8:
        resources[ResourceKind.MEMO_SET] = gen_memo(rnd)
    if rnd.random() < 0.8:
        resources[ResourceKind.ASSOCIATION_GAME] = gen_association(rnd)
    if rnd.random() < 0.5:
        resources[ResourceKind.VIDEO_LINK] = VideoLink(
            url=f"https://example.org/{_word(rnd)}", title=f"video {_word(rnd)}"
        )
    if rnd.random() < 0.5:
        resources[ResourceKind.CYCLE_GAME_REF] = CycleGameRef(
            ref_id=f"cycle-{_word(rnd)}", title=f"cycle {_word(rnd)}"
        )
    if rnd.random() < 0.5:
        resources[ResourceKind.EXPERIMENT_REF] = ExperimentRef(
            ref_id=f"exp-{_word(rnd)}", title=f"experiment {_word(rnd)}"
        )
    if rnd.random() < 0.7:
        resources[ResourceKind.PEDAGOGICAL_SUPPORT] = PedagogicalSupport(
            body=f"teacher notes {_word(rnd, 20)}"
        )
    return ModuleDescriptor(
        module_id=module_id,
        category=rnd.choice(list(ElementCategory)),
        source_locale="en",
        title=f"Module {_word(rnd)}",
        resources=resources,
    )


def _replace_resources(module: ModuleDescriptor, **changes) -> ModuleDescriptor:
    resources = dict(module.resources)
    for key, value in changes.items():
        resources[ResourceKind(key)] = value
    return ModuleDescriptor(
        module_id=module.module_id,
        category=module.category,
        source_locale=module.source_locale,
        title=module.title,
        resources=resources,
        title_i18n=module.title_i18n,
    )


# -- single-constraint mutations ------------------------------------------
# each returns (mutated module, expected violation code name, path fragment)


def mutate_proposition_count(rnd: random.Random, module: ModuleDescriptor):
    quiz = module.resources[ResourceKind.QUIZ]
    qi = rnd.randrange(len(quiz.questions))
    q = quiz.questions[qi]
    if rnd.random() < 0.5:
        props = q.propositions[:1]  # too few
    else:
        filler = tuple(
            Proposition(f"{q.question_id}-extra{i}", f"extra {i}", validity=False)
            for i in range(11 - len(q.propositions))
        )
        props = q.propositions + filler  # too many
    bad_q = Question(q.question_id, q.title, props, q.explanation)
    questions = list(quiz.questions)
    questions[qi] = bad_q
    return (
        _replace_resources(module, quiz=Quiz(tuple(questions))),
        "PROPOSITION_COUNT",
        f"quiz/{q.question_id}",
    )


def mutate_memo_count(rnd: random.Random, module: ModuleDescriptor):
    memo = module.resources.get(ResourceKind.MEMO_SET)
    if memo is None:
        memo = gen_memo(rnd)
    if rnd.random() < 0.5:
        triplets = memo.triplets[: rnd.randint(1, 5)]
    else:
        triplets = memo.triplets + (
            MemoTriplet(_picture(rnd), f"extra-{_word(rnd)}", "extra definition"),
        )
    return (
        _replace_resources(module, memo_set=MemoSet(triplets, memo.enabled_modes)),
        "MEMO_TRIPLET_COUNT",
        "memo_set",
    )


def mutate_category_count(rnd: random.Random, module: ModuleDescriptor):
    game = module.resources.get(ResourceKind.ASSOCIATION_GAME)
    if game is None:
        game = gen_association(rnd)
    if rnd.random() < 0.5:
        categories = game.categories[:1]
        props = tuple(
            AssociationProposition(p.proposition_id, p.title, "cat-a", p.personalized_explanation)
            for p in game.propositions
        )
    else:
        categories = game.categories + (
            AssociationCategory("cat-c", f"third {_word(rnd)}", _picture(rnd)),
        )
        props = game.propositions + (
            AssociationProposition(f"ap-extra-{_word(rnd)}", "extra", "cat-c"),
        )
    return (
        _replace_resources(module, association_game=AssociationGame(categories, props)),
        "CATEGORY_COUNT",
        "association_game",
    )


def mutate_ghost_link(rnd: random.Random, module: ModuleDescriptor):
    lesson = module.resources[ResourceKind.LESSON]
    pi = rnd.randrange(len(lesson.pages))
    page = lesson.pages[pi]
    ghost = f"ghost-{_word(rnd)}"
    bad_page = LessonPage(
        page_id=page.page_id,
        title=page.title,
        text=page.text,
        picture=page.picture,
        caption=page.caption,
        tags=page.tags,
        linked_question_ids=page.linked_question_ids + (ghost,),
    )
    pages = list(lesson.pages)
    pages[pi] = bad_page
    return (
        _replace_resources(module, lesson=Lesson(tuple(pages))),
        "PAGE_LINK_UNRESOLVED",
        f"lesson/page/{page.page_id}/link/{ghost}",
    )


def mutate_tag_range(rnd: random.Random, module: ModuleDescriptor):
    lesson = module.resources[ResourceKind.LESSON]
    pi = rnd.randrange(len(lesson.pages))
    page = lesson.pages[pi]
    bad_coord = rnd.choice([1.5, -0.2, 2.0, -1.0, 1.0001])
    bad_tag = Tag(number=len(page.tags) + 1, text="out of range", coord_h=bad_coord, coord_v=0.5)
    picture = page.picture or _picture(rnd)
    bad_page = LessonPage(
        page_id=page.page_id,
        title=page.title,
        text=page.text,
        picture=picture,
        caption=page.caption,
        tags=page.tags + (bad_tag,),
        linked_question_ids=page.linked_question_ids,
    )
    pages = list(lesson.pages)
    pages[pi] = bad_page
    return (
        _replace_resources(module, lesson=Lesson(tuple(pages))),
        "TAG_COORD_RANGE",
        f"lesson/page/{page.page_id}/tag/{bad_tag.number}",
    )


MUTATIONS = {
    "proposition_count": mutate_proposition_count,
    "memo_triplet_count": mutate_memo_count,
    "category_count": mutate_category_count,
    "page_link_unresolved": mutate_ghost_link,
    "tag_coord_range": mutate_tag_range,
}
