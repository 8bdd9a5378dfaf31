"""Per-language variant workflow: upsert, staleness, fallback resolution, coverage.

A variant is a full document in its own right, not a string table, so a
translated resource can restructure content for its culture. Learners only
ever see Complete variants; anything else falls back to the source document
in a single step (requested locale -> source locale, no intermediate chain).
"""

from __future__ import annotations

from dataclasses import dataclass

from .model import ResourceKind
from .records import LocaleVariant, VariantStatus
from .store import Repository, StoreError, UnknownLanguageError, ValidationFailure
from .validation import validate_resource


class LocaleIsSourceError(StoreError):
    """A variant may not shadow the module's own source locale."""


@dataclass(frozen=True)
class ResolvedDocument:
    document: object
    resolved_locale: str
    fallback_used: bool


@dataclass(frozen=True)
class CompletenessReport:
    # locale -> module_id -> kind value -> status ("complete"/"draft"/"stale"/"missing")
    matrix: dict[str, dict[str, dict[str, str]]]
    coverage: dict[str, float]

    def to_dict(self) -> dict:
        counts: dict[str, dict[str, dict[str, int]]] = {}
        for locale, modules in self.matrix.items():
            counts[locale] = {}
            for module_id, kinds in modules.items():
                c = {"complete": 0, "draft": 0, "stale": 0, "missing": 0}
                for status in kinds.values():
                    c[status] += 1
                counts[locale][module_id] = c
        return {"matrix": self.matrix, "counts": counts, "coverage": self.coverage}


def add_language(repo: Repository, code: str, display_name: str):
    return repo.add_language(code, display_name)


def upsert_variant(
    repo: Repository,
    module_id: str,
    kind: ResourceKind,
    locale: str,
    document,
    status: VariantStatus,
) -> LocaleVariant:
    module = repo.get_module(module_id)
    if not any(l.code == locale for l in repo.list_languages()):
        raise UnknownLanguageError(f"locale {locale!r} is not registered")
    if locale == module.source_locale:
        raise LocaleIsSourceError(
            f"{locale!r} is the source locale of module {module_id!r}; edit the source instead"
        )
    _, source_revision = repo.get_resource(module_id, kind)  # raises on unknown source
    if status is VariantStatus.COMPLETE:
        quiz = module.resources.get(ResourceKind.QUIZ)
        report = validate_resource(kind, document, quiz)
        if not report.is_valid:
            raise ValidationFailure(report)
    variant = LocaleVariant(
        module_id=module_id,
        kind=kind,
        locale=locale,
        document=document,
        status=status,
        source_revision=source_revision,
    )
    repo.put_variant(variant)
    return variant


def resolve(repo: Repository, module_id: str, kind: ResourceKind, requested: str) -> ResolvedDocument:
    """Serve the Complete variant for the requested locale, else the source.

    Draft and Stale variants are never served.
    """
    module = repo.get_module(module_id)
    source_document, _ = repo.get_resource(module_id, kind)
    if requested != module.source_locale:
        variant = repo.get_variant(module_id, kind, requested)
        if variant is not None and variant.status is VariantStatus.COMPLETE:
            return ResolvedDocument(variant.document, requested, False)
        return ResolvedDocument(source_document, module.source_locale, True)
    return ResolvedDocument(source_document, module.source_locale, False)


def touch_source(repo: Repository, module_id: str, kind: ResourceKind) -> list[LocaleVariant]:
    return repo.touch_source(module_id, kind)


def completeness_report(repo: Repository) -> CompletenessReport:
    matrix: dict[str, dict[str, dict[str, str]]] = {}
    coverage: dict[str, float] = {}
    locales = [l.code for l in repo.list_languages()]
    modules = [repo.get_module(mid) for mid in repo.list_module_ids()]
    variants = {
        (v.module_id, v.kind, v.locale): v.status for v in repo.list_variants()
    }
    for locale in locales:
        per_module: dict[str, dict[str, str]] = {}
        total = 0
        complete = 0
        for module in modules:
            if module.source_locale == locale:
                continue
            kinds: dict[str, str] = {}
            for kind in module.resources:
                total += 1
                status = variants.get((module.module_id, kind, locale))
                if status is None:
                    kinds[kind.value] = "missing"
                else:
                    kinds[kind.value] = status.value
                    if status is VariantStatus.COMPLETE:
                        complete += 1
            per_module[module.module_id] = kinds
        if total:
            matrix[locale] = per_module
            coverage[locale] = complete / total
    return CompletenessReport(matrix=matrix, coverage=coverage)
