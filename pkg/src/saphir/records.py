"""Cross-layer data records: locale variants, content packs, users, revisions."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .model import LanguageCode, ModuleDescriptor, Resource, ResourceKind


class VariantStatus(str, Enum):
    DRAFT = "draft"
    COMPLETE = "complete"
    STALE = "stale"


@dataclass(frozen=True)
class LocaleVariant:
    module_id: str
    kind: ResourceKind
    locale: str
    document: Resource
    status: VariantStatus
    source_revision: int


@dataclass(frozen=True)
class PackAsset:
    asset_id: str
    media_type: str
    data: bytes


@dataclass(frozen=True)
class PackStats:
    module_count: int
    resource_count: int
    language_count: int
    per_category: dict[str, int]


@dataclass(frozen=True)
class ContentPack:
    format_version: int
    languages: tuple[LanguageCode, ...]
    modules: tuple[ModuleDescriptor, ...]
    variants: tuple[LocaleVariant, ...] = ()
    assets: tuple[PackAsset, ...] = ()


class Role(str, Enum):
    ADMIN = "admin"
    DESIGNER = "designer"
    TRANSLATOR = "translator"


@dataclass(frozen=True)
class UserRecord:
    login: str
    password_hash: str
    role: Role
    locale_grants: frozenset[str] = field(default_factory=frozenset)
