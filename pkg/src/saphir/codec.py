"""Canonical serialization: model documents <-> plain dicts <-> deterministic bytes.

Canonical bytes are compact JSON with lexicographically sorted keys, UTF-8,
a single trailing LF, and shortest round-trip float formatting. Array order
preserves author order; memo modes are the one set-valued field and are
serialized sorted.
"""

from __future__ import annotations

import json
from typing import Any

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
    Resource,
    ResourceKind,
    Tag,
    VideoLink,
)
from .records import LocaleVariant, VariantStatus


class DocumentDecodeError(ValueError):
    """Raised when a serialized document does not match its kind's shape."""


def canonical_bytes(data: Any) -> bytes:
    return (
        json.dumps(data, sort_keys=True, ensure_ascii=False, separators=(",", ":")) + "\n"
    ).encode("utf-8")


def parse_canonical(data: bytes) -> Any:
    return json.loads(data.decode("utf-8"))


def _picture_to_dict(p: PictureRef | None) -> dict | None:
    if p is None:
        return None
    return {"asset_id": p.asset_id, "alt_text": p.alt_text}


def _picture_from_dict(d: dict | None) -> PictureRef | None:
    if d is None:
        return None
    return PictureRef(asset_id=d["asset_id"], alt_text=d["alt_text"])


def resource_to_dict(kind: ResourceKind, resource: Resource) -> dict:
    if kind is ResourceKind.QUIZ:
        return {
            "questions": [
                {
                    "question_id": q.question_id,
                    "title": q.title,
                    "explanation": q.explanation,
                    "propositions": [
                        {
                            "proposition_id": p.proposition_id,
                            "title": p.title,
                            "validity": p.validity,
                            "personalized_explanation": p.personalized_explanation,
                        }
                        for p in q.propositions
                    ],
                }
                for q in resource.questions
            ]
        }
    if kind is ResourceKind.LESSON:
        return {
            "pages": [
                {
                    "page_id": pg.page_id,
                    "title": pg.title,
                    "text": pg.text,
                    "picture": _picture_to_dict(pg.picture),
                    "caption": pg.caption,
                    "tags": [
                        {
                            "number": t.number,
                            "text": t.text,
                            "coord_h": t.coord_h,
                            "coord_v": t.coord_v,
                        }
                        for t in pg.tags
                    ],
                    "linked_question_ids": list(pg.linked_question_ids),
                }
                for pg in resource.pages
            ]
        }
    if kind is ResourceKind.MEMO_SET:
        return {
            "triplets": [
                {
                    "picture": _picture_to_dict(t.picture),
                    "title": t.title,
                    "definition": t.definition,
                }
                for t in resource.triplets
            ],
            "enabled_modes": sorted(m.value for m in resource.enabled_modes),
        }
    if kind is ResourceKind.ASSOCIATION_GAME:
        return {
            "categories": [
                {
                    "category_id": c.category_id,
                    "title": c.title,
                    "picture": _picture_to_dict(c.picture),
                }
                for c in resource.categories
            ],
            "propositions": [
                {
                    "proposition_id": p.proposition_id,
                    "title": p.title,
                    "category_id": p.category_id,
                    "personalized_explanation": p.personalized_explanation,
                }
                for p in resource.propositions
            ],
        }
    if kind is ResourceKind.VIDEO_LINK:
        return {"url": resource.url, "title": resource.title}
    if kind in (ResourceKind.CYCLE_GAME_REF, ResourceKind.EXPERIMENT_REF):
        return {"ref_id": resource.ref_id, "title": resource.title}
    if kind is ResourceKind.PEDAGOGICAL_SUPPORT:
        return {"body": resource.body}
    raise DocumentDecodeError(f"unknown resource kind {kind!r}")


def resource_from_dict(kind: ResourceKind, data: dict) -> Resource:
    try:
        if kind is ResourceKind.QUIZ:
            return Quiz(
                questions=tuple(
                    Question(
                        question_id=q["question_id"],
                        title=q["title"],
                        explanation=q.get("explanation", ""),
                        propositions=tuple(
                            Proposition(
                                proposition_id=p["proposition_id"],
                                title=p["title"],
                                validity=bool(p["validity"]),
                                personalized_explanation=p.get("personalized_explanation"),
                            )
                            for p in q["propositions"]
                        ),
                    )
                    for q in data["questions"]
                )
            )
        if kind is ResourceKind.LESSON:
            return Lesson(
                pages=tuple(
                    LessonPage(
                        page_id=pg["page_id"],
                        title=pg["title"],
                        text=pg["text"],
                        picture=_picture_from_dict(pg.get("picture")),
                        caption=pg.get("caption"),
                        tags=tuple(
                            Tag(
                                number=t["number"],
                                text=t["text"],
                                coord_h=t["coord_h"],
                                coord_v=t["coord_v"],
                            )
                            for t in pg.get("tags", [])
                        ),
                        linked_question_ids=tuple(pg.get("linked_question_ids", [])),
                    )
                    for pg in data["pages"]
                )
            )
        if kind is ResourceKind.MEMO_SET:
            return MemoSet(
                triplets=tuple(
                    MemoTriplet(
                        picture=_picture_from_dict(t["picture"]),
                        title=t["title"],
                        definition=t["definition"],
                    )
                    for t in data["triplets"]
                ),
                enabled_modes=frozenset(MemoMode(m) for m in data["enabled_modes"]),
            )
        if kind is ResourceKind.ASSOCIATION_GAME:
            return AssociationGame(
                categories=tuple(
                    AssociationCategory(
                        category_id=c["category_id"],
                        title=c["title"],
                        picture=_picture_from_dict(c["picture"]),
                    )
                    for c in data["categories"]
                ),
                propositions=tuple(
                    AssociationProposition(
                        proposition_id=p["proposition_id"],
                        title=p["title"],
                        category_id=p["category_id"],
                        personalized_explanation=p.get("personalized_explanation"),
                    )
                    for p in data["propositions"]
                ),
            )
        if kind is ResourceKind.VIDEO_LINK:
            return VideoLink(url=data["url"], title=data["title"])
        if kind is ResourceKind.CYCLE_GAME_REF:
            return CycleGameRef(ref_id=data["ref_id"], title=data["title"])
        if kind is ResourceKind.EXPERIMENT_REF:
            return ExperimentRef(ref_id=data["ref_id"], title=data["title"])
        if kind is ResourceKind.PEDAGOGICAL_SUPPORT:
            return PedagogicalSupport(body=data["body"])
    except (KeyError, TypeError, ValueError) as exc:
        raise DocumentDecodeError(f"malformed {kind.value} document: {exc}") from exc
    raise DocumentDecodeError(f"unknown resource kind {kind!r}")


def module_meta_to_dict(module: ModuleDescriptor) -> dict:
    return {
        "module_id": module.module_id,
        "category": module.category.value,
        "source_locale": module.source_locale,
        "title": module.title,
        "title_i18n": dict(sorted(module.title_i18n.items())),
    }


def module_to_dict(module: ModuleDescriptor) -> dict:
    d = module_meta_to_dict(module)
    d["resources"] = {
        kind.value: resource_to_dict(kind, res) for kind, res in sorted(module.resources.items())
    }
    return d


def module_from_dict(data: dict) -> ModuleDescriptor:
    try:
        resources = {
            ResourceKind(kind): resource_from_dict(ResourceKind(kind), doc)
            for kind, doc in data.get("resources", {}).items()
        }
        return ModuleDescriptor(
            module_id=data["module_id"],
            category=ElementCategory(data["category"]),
            source_locale=data["source_locale"],
            title=data["title"],
            resources=resources,
            title_i18n=dict(data.get("title_i18n", {})),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise DocumentDecodeError(f"malformed module document: {exc}") from exc


def variant_to_dict(variant: LocaleVariant) -> dict:
    return {
        "module_id": variant.module_id,
        "kind": variant.kind.value,
        "locale": variant.locale,
        "status": variant.status.value,
        "source_revision": variant.source_revision,
        "document": resource_to_dict(variant.kind, variant.document),
    }


def variant_from_dict(data: dict) -> LocaleVariant:
    try:
        kind = ResourceKind(data["kind"])
        return LocaleVariant(
            module_id=data["module_id"],
            kind=kind,
            locale=data["locale"],
            status=VariantStatus(data["status"]),
            source_revision=int(data["source_revision"]),
            document=resource_from_dict(kind, data["document"]),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise DocumentDecodeError(f"malformed variant document: {exc}") from exc
