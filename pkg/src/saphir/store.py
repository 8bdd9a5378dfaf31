"""File-backed content repository.

Layout under the repository root:

    languages.json                       registered languages
    users.json                           logins with salted hashes
    modules/<id>/module.json             module metadata
    modules/<id>/resources/<kind>.json   {"revision": N, "document": {...}}
    modules/<id>/variants/<kind>.<locale>.json
    assets/<asset_id>                    raw bytes, content-addressed
    assets.json                          asset_id -> media type

Every document is written in canonical form, so close/reopen and pack
round-trips are bit-exact. Writes are validated (the store never holds a
structurally invalid document) and serialized through a per-repository lock.
"""

from __future__ import annotations

import hashlib
import hmac
import io
import json
import os
import threading
import zipfile
from dataclasses import dataclass

from . import codec
from .model import (
    LANGUAGE_CODE_RE,
    ElementCategory,
    LanguageCode,
    ModuleDescriptor,
    Resource,
    ResourceKind,
    count_playable_resources,
)
from .records import ContentPack, LocaleVariant, PackAsset, PackStats, Role, UserRecord, VariantStatus
from .validation import ValidationReport, validate_module, validate_pack

PACK_FORMAT_VERSION = 1
MIN_PASSWORD_LENGTH = 8

_SCRYPT_N = 2**14
_SCRYPT_R = 8
_SCRYPT_P = 1


class StoreError(Exception):
    pass


class CorruptRepositoryError(StoreError):
    pass


class UnknownResourceError(StoreError):
    pass


class UnknownModuleError(StoreError):
    pass


class DuplicateLanguageError(StoreError):
    pass


class MalformedLanguageCodeError(StoreError):
    pass


class UnknownLanguageError(StoreError):
    pass


class DuplicateLoginError(StoreError):
    pass


class WeakPasswordError(StoreError):
    pass


class PackParseError(StoreError):
    pass


class PackVersionError(StoreError):
    pass


class ValidationFailure(StoreError):
    def __init__(self, report: ValidationReport):
        super().__init__(
            "; ".join(f"{v.code.value} at {v.path}" for v in report.violations) or "invalid"
        )
        self.report = report


@dataclass(frozen=True)
class ImportReport:
    created: int
    updated: int
    skipped: int


def hash_password(password: str) -> str:
    salt = os.urandom(16)
    digest = hashlib.scrypt(
        password.encode("utf-8"), salt=salt, n=_SCRYPT_N, r=_SCRYPT_R, p=_SCRYPT_P
    )
    return f"scrypt${_SCRYPT_N}${_SCRYPT_R}${_SCRYPT_P}${salt.hex()}${digest.hex()}"


def verify_password(password: str, stored: str) -> bool:
    try:
        scheme, n, r, p, salt_hex, digest_hex = stored.split("$")
        if scheme != "scrypt":
            return False
        digest = hashlib.scrypt(
            password.encode("utf-8"),
            salt=bytes.fromhex(salt_hex),
            n=int(n),
            r=int(r),
            p=int(p),
        )
        return hmac.compare_digest(digest, bytes.fromhex(digest_hex))
    except (ValueError, TypeError):
        return False


class Repository:
    """Durable store for one content repository directory."""

    def __init__(self, root: str):
        self.root = root
        self._lock = threading.RLock()
        self._init_layout()

    # -- layout / io -------------------------------------------------

    def _init_layout(self) -> None:
        os.makedirs(self.root, exist_ok=True)
        os.makedirs(os.path.join(self.root, "modules"), exist_ok=True)
        os.makedirs(os.path.join(self.root, "assets"), exist_ok=True)
        for name, default in (("languages.json", {"languages": []}),
                              ("users.json", {"users": []}),
                              ("assets.json", {"assets": {}})):
            path = os.path.join(self.root, name)
            if not os.path.exists(path):
                self._write_json(path, default)
            else:
                self._read_json(path)  # fail fast on corruption

    def _write_json(self, path: str, data) -> None:
        tmp = path + ".tmp"
        with open(tmp, "wb") as fh:
            fh.write(codec.canonical_bytes(data))
        os.replace(tmp, path)

    def _read_json(self, path: str):
        try:
            with open(path, "rb") as fh:
                return codec.parse_canonical(fh.read())
        except (json.JSONDecodeError, UnicodeDecodeError) as exc:
            raise CorruptRepositoryError(f"corrupt repository file {path}: {exc}") from exc

    def _module_dir(self, module_id: str) -> str:
        if not module_id or "/" in module_id or module_id.startswith("."):
            raise UnknownModuleError(f"invalid module id {module_id!r}")
        return os.path.join(self.root, "modules", module_id)

    def _resource_path(self, module_id: str, kind: ResourceKind) -> str:
        return os.path.join(self._module_dir(module_id), "resources", f"{kind.value}.json")

    def _variant_path(self, module_id: str, kind: ResourceKind, locale: str) -> str:
        return os.path.join(
            self._module_dir(module_id), "variants", f"{kind.value}.{locale}.json"
        )

    # -- languages ---------------------------------------------------

    def list_languages(self) -> list[LanguageCode]:
        data = self._read_json(os.path.join(self.root, "languages.json"))
        return [LanguageCode(d["code"], d["display_name"]) for d in data["languages"]]

    def add_language(self, code: str, display_name: str) -> list[LanguageCode]:
        with self._lock:
            if not LANGUAGE_CODE_RE.match(code):
                raise MalformedLanguageCodeError(f"malformed language code {code!r}")
            langs = self.list_languages()
            if any(l.code == code for l in langs):
                raise DuplicateLanguageError(f"language {code!r} already registered")
            langs.append(LanguageCode(code, display_name))
            self._write_json(
                os.path.join(self.root, "languages.json"),
                {"languages": [{"code": l.code, "display_name": l.display_name} for l in langs]},
            )
            return langs

    # -- modules and resources ----------------------------------------

    def put_module(
        self,
        module_id: str,
        category: ElementCategory,
        source_locale: str,
        title: str,
        title_i18n: dict[str, str] | None = None,
    ) -> None:
        with self._lock:
            if not any(l.code == source_locale for l in self.list_languages()):
                raise UnknownLanguageError(f"source locale {source_locale!r} not registered")
            mdir = self._module_dir(module_id)
            os.makedirs(os.path.join(mdir, "resources"), exist_ok=True)
            os.makedirs(os.path.join(mdir, "variants"), exist_ok=True)
            self._write_json(
                os.path.join(mdir, "module.json"),
                {
                    "module_id": module_id,
                    "category": category.value,
                    "source_locale": source_locale,
                    "title": title,
                    "title_i18n": dict(sorted((title_i18n or {}).items())),
                },
            )

    def list_module_ids(self) -> list[str]:
        mdir = os.path.join(self.root, "modules")
        return sorted(
            d for d in os.listdir(mdir)
            if os.path.exists(os.path.join(mdir, d, "module.json"))
        )

    def get_module(self, module_id: str) -> ModuleDescriptor:
        mpath = os.path.join(self._module_dir(module_id), "module.json")
        if not os.path.exists(mpath):
            raise UnknownModuleError(f"unknown module {module_id!r}")
        meta = self._read_json(mpath)
        resources: dict[ResourceKind, Resource] = {}
        for kind in ResourceKind:
            rpath = self._resource_path(module_id, kind)
            if os.path.exists(rpath):
                entry = self._read_json(rpath)
                resources[kind] = codec.resource_from_dict(kind, entry["document"])
        return ModuleDescriptor(
            module_id=meta["module_id"],
            category=ElementCategory(meta["category"]),
            source_locale=meta["source_locale"],
            title=meta["title"],
            resources=resources,
            title_i18n=dict(meta.get("title_i18n", {})),
        )

    def get_resource(self, module_id: str, kind: ResourceKind) -> tuple[Resource, int]:
        rpath = self._resource_path(module_id, kind)
        if not os.path.exists(rpath):
            raise UnknownResourceError(f"module {module_id!r} has no {kind.value}")
        entry = self._read_json(rpath)
        return codec.resource_from_dict(kind, entry["document"]), entry["revision"]

    def get_revision(self, module_id: str, kind: ResourceKind) -> int:
        return self.get_resource(module_id, kind)[1]

    def put_resource(self, module_id: str, kind: ResourceKind, document: Resource) -> int:
        """Store a resource; rejects writes that would leave the module invalid.

        Bumping the revision marks every existing variant of the resource
        stale (the source changed under them).
        """
        with self._lock:
            module = self.get_module(module_id)
            candidate = ModuleDescriptor(
                module_id=module.module_id,
                category=module.category,
                source_locale=module.source_locale,
                title=module.title,
                resources={**module.resources, kind: document},
                title_i18n=module.title_i18n,
            )
            report = validate_module(candidate)
            if not report.is_valid:
                raise ValidationFailure(report)
            rpath = self._resource_path(module_id, kind)
            revision = 1
            if os.path.exists(rpath):
                revision = self._read_json(rpath)["revision"] + 1
            self._write_json(
                rpath,
                {"revision": revision, "document": codec.resource_to_dict(kind, document)},
            )
            self._mark_variants_stale(module_id, kind, revision)
            return revision

    def delete_resource(self, module_id: str, kind: ResourceKind) -> None:
        """Remove a resource and all its locale variants."""
        with self._lock:
            module = self.get_module(module_id)
            if kind not in module.resources:
                raise UnknownResourceError(f"module {module_id!r} has no {kind.value}")
            remaining = {k: v for k, v in module.resources.items() if k != kind}
            if remaining:
                candidate = ModuleDescriptor(
                    module_id=module.module_id,
                    category=module.category,
                    source_locale=module.source_locale,
                    title=module.title,
                    resources=remaining,
                    title_i18n=module.title_i18n,
                )
                report = validate_module(candidate)
                if not report.is_valid:
                    raise ValidationFailure(report)
            os.remove(self._resource_path(module_id, kind))
            vdir = os.path.join(self._module_dir(module_id), "variants")
            for name in os.listdir(vdir):
                if name.startswith(f"{kind.value}."):
                    os.remove(os.path.join(vdir, name))

    def touch_source(self, module_id: str, kind: ResourceKind) -> list[LocaleVariant]:
        """Bump a source resource's revision without changing its document,
        marking every up-to-date variant stale. Returns the transitioned set."""
        with self._lock:
            rpath = self._resource_path(module_id, kind)
            if not os.path.exists(rpath):
                raise UnknownResourceError(f"module {module_id!r} has no {kind.value}")
            entry = self._read_json(rpath)
            entry["revision"] += 1
            self._write_json(rpath, entry)
            return self._mark_variants_stale(module_id, kind, entry["revision"])

    # -- variants ------------------------------------------------------

    def _mark_variants_stale(self, module_id: str, kind: ResourceKind, new_revision: int) -> list[LocaleVariant]:
        transitioned = []
        for variant in self.list_variants(module_id):
            if variant.kind is kind and variant.source_revision < new_revision:
                if variant.status is not VariantStatus.STALE:
                    stale = LocaleVariant(
                        module_id=variant.module_id,
                        kind=variant.kind,
                        locale=variant.locale,
                        document=variant.document,
                        status=VariantStatus.STALE,
                        source_revision=variant.source_revision,
                    )
                    self._write_variant(stale)
                    transitioned.append(stale)
        return transitioned

    def _write_variant(self, variant: LocaleVariant) -> None:
        self._write_json(
            self._variant_path(variant.module_id, variant.kind, variant.locale),
            codec.variant_to_dict(variant),
        )

    def put_variant(self, variant: LocaleVariant) -> None:
        with self._lock:
            self._write_variant(variant)

    def get_variant(self, module_id: str, kind: ResourceKind, locale: str) -> LocaleVariant | None:
        vpath = self._variant_path(module_id, kind, locale)
        if not os.path.exists(vpath):
            return None
        return codec.variant_from_dict(self._read_json(vpath))

    def list_variants(self, module_id: str | None = None) -> list[LocaleVariant]:
        ids = [module_id] if module_id else self.list_module_ids()
        variants = []
        for mid in ids:
            vdir = os.path.join(self._module_dir(mid), "variants")
            if not os.path.isdir(vdir):
                continue
            for name in sorted(os.listdir(vdir)):
                variants.append(codec.variant_from_dict(self._read_json(os.path.join(vdir, name))))
        return variants

    # -- assets ---------------------------------------------------------

    def put_asset(self, data: bytes, media_type: str) -> str:
        with self._lock:
            asset_id = "sha256-" + hashlib.sha256(data).hexdigest()
            path = os.path.join(self.root, "assets", asset_id)
            if not os.path.exists(path):
                with open(path, "wb") as fh:
                    fh.write(data)
            index = self._read_json(os.path.join(self.root, "assets.json"))
            index["assets"][asset_id] = media_type
            self._write_json(os.path.join(self.root, "assets.json"), index)
            return asset_id

    def get_asset(self, asset_id: str) -> tuple[bytes, str]:
        index = self._read_json(os.path.join(self.root, "assets.json"))
        if asset_id not in index["assets"]:
            raise UnknownResourceError(f"unknown asset {asset_id!r}")
        with open(os.path.join(self.root, "assets", asset_id), "rb") as fh:
            return fh.read(), index["assets"][asset_id]

    def list_assets(self) -> dict[str, str]:
        return dict(self._read_json(os.path.join(self.root, "assets.json"))["assets"])

    # -- users -----------------------------------------------------------

    def _load_users(self) -> list[dict]:
        return self._read_json(os.path.join(self.root, "users.json"))["users"]

    def create_user(
        self, login: str, password: str, role: Role, locale_grants: set[str] | None = None
    ) -> UserRecord:
        with self._lock:
            grants = frozenset(locale_grants or ())
            if len(password) < MIN_PASSWORD_LENGTH:
                raise WeakPasswordError(f"password must be at least {MIN_PASSWORD_LENGTH} characters")
            if role is Role.TRANSLATOR and not grants:
                raise StoreError("translator accounts need at least one locale grant")
            users = self._load_users()
            if any(u["login"] == login for u in users):
                raise DuplicateLoginError(f"login {login!r} already exists")
            record = UserRecord(
                login=login,
                password_hash=hash_password(password),
                role=role,
                locale_grants=grants,
            )
            users.append(
                {
                    "login": record.login,
                    "password_hash": record.password_hash,
                    "role": record.role.value,
                    "locale_grants": sorted(record.locale_grants),
                }
            )
            self._write_json(os.path.join(self.root, "users.json"), {"users": users})
            return record

    def verify_credentials(self, login: str, password: str) -> tuple[Role, frozenset[str]] | None:
        for u in self._load_users():
            if u["login"] == login:
                if verify_password(password, u["password_hash"]):
                    return Role(u["role"]), frozenset(u["locale_grants"])
                return None
        return None

    # -- packs -------------------------------------------------------------

    def build_pack(self, locales: set[str] | None = None) -> ContentPack:
        """Assemble the in-memory pack: all modules plus Complete variants
        for the requested locales (all registered locales when unspecified)."""
        languages = sorted(self.list_languages(), key=lambda l: l.code)
        if locales is not None:
            languages = [l for l in languages if l.code in locales]
        wanted = {l.code for l in languages}
        modules = tuple(self.get_module(mid) for mid in self.list_module_ids())
        variants = tuple(
            v
            for v in self.list_variants()
            if v.status is VariantStatus.COMPLETE and (locales is None or v.locale in wanted)
        )
        asset_index = self.list_assets()
        assets = tuple(
            PackAsset(asset_id, asset_index[asset_id], self.get_asset(asset_id)[0])
            for asset_id in sorted(asset_index)
        )
        # keep source locales declared even when filtering
        declared = {l.code for l in languages}
        extra = []
        for m in modules:
            if m.source_locale not in declared:
                for l in sorted(self.list_languages(), key=lambda x: x.code):
                    if l.code == m.source_locale:
                        extra.append(l)
                        declared.add(l.code)
        languages = sorted(languages + extra, key=lambda l: l.code)
        return ContentPack(
            format_version=PACK_FORMAT_VERSION,
            languages=tuple(languages),
            modules=modules,
            variants=variants,
            assets=assets,
        )

    def pack_stats(self) -> PackStats:
        modules = [self.get_module(mid) for mid in self.list_module_ids()]
        per_category = {c.value: 0 for c in ElementCategory}
        for m in modules:
            per_category[m.category.value] += 1
        return PackStats(
            module_count=len(modules),
            resource_count=sum(count_playable_resources(m) for m in modules),
            language_count=len(self.list_languages()),
            per_category=per_category,
        )

    def export_pack(self, locales: set[str] | None = None) -> bytes:
        pack = self.build_pack(locales)
        stats = self.pack_stats()
        manifest = {
            "format_version": pack.format_version,
            "languages": [
                {"code": l.code, "display_name": l.display_name} for l in pack.languages
            ],
            "assets": {a.asset_id: a.media_type for a in pack.assets},
            "stats": {
                "module_count": stats.module_count,
                "resource_count": stats.resource_count,
                "language_count": stats.language_count,
                "per_category": stats.per_category,
            },
        }
        entries: list[tuple[str, bytes]] = [("manifest.json", codec.canonical_bytes(manifest))]
        for module in pack.modules:
            entries.append(
                (f"modules/{module.module_id}.json", codec.canonical_bytes(codec.module_to_dict(module)))
            )
        for v in pack.variants:
            entries.append(
                (
                    f"variants/{v.module_id}/{v.kind.value}.{v.locale}.json",
                    codec.canonical_bytes(codec.variant_to_dict(v)),
                )
            )
        for a in pack.assets:
            entries.append((f"assets/{a.asset_id}", a.data))
        buf = io.BytesIO()
        # fixed timestamps + sorted names + stored entries keep the archive
        # byte-deterministic for identical repository state
        with zipfile.ZipFile(buf, "w", compression=zipfile.ZIP_STORED) as zf:
            for name, data in sorted(entries):
                info = zipfile.ZipInfo(name, date_time=(1980, 1, 1, 0, 0, 0))
                info.external_attr = 0o644 << 16
                zf.writestr(info, data)
        return buf.getvalue()


def parse_pack(data: bytes) -> ContentPack:
    try:
        zf = zipfile.ZipFile(io.BytesIO(data))
    except zipfile.BadZipFile as exc:
        raise PackParseError(f"not a pack archive: {exc}") from exc
    try:
        with zf:
            names = set(zf.namelist())
            if "manifest.json" not in names:
                raise PackParseError("pack has no manifest")
            manifest = json.loads(zf.read("manifest.json"))
            version = manifest.get("format_version")
            if version != PACK_FORMAT_VERSION:
                raise PackVersionError(f"unsupported pack format_version {version!r}")
            languages = tuple(
                LanguageCode(l["code"], l["display_name"]) for l in manifest["languages"]
            )
            modules = []
            variants = []
            assets = []
            for name in sorted(names):
                if name.startswith("modules/") and name.endswith(".json"):
                    modules.append(codec.module_from_dict(json.loads(zf.read(name))))
                elif name.startswith("variants/") and name.endswith(".json"):
                    variants.append(codec.variant_from_dict(json.loads(zf.read(name))))
                elif name.startswith("assets/"):
                    asset_id = name[len("assets/"):]
                    media_type = manifest.get("assets", {}).get(asset_id, "application/octet-stream")
                    assets.append(PackAsset(asset_id, media_type, zf.read(name)))
            return ContentPack(
                format_version=version,
                languages=languages,
                modules=tuple(modules),
                variants=tuple(variants),
                assets=tuple(assets),
            )
    except (KeyError, TypeError, ValueError, codec.DocumentDecodeError) as exc:
        if isinstance(exc, (PackParseError, PackVersionError)):
            raise
        raise PackParseError(f"malformed pack: {exc}") from exc


def import_pack(repo: Repository, data: bytes) -> ImportReport:
    pack = parse_pack(data)
    report = validate_pack(pack)
    if not report.is_valid:
        raise ValidationFailure(report)
    created = updated = skipped = 0
    with repo._lock:
        known = {l.code for l in repo.list_languages()}
        for lang in pack.languages:
            if lang.code not in known:
                repo.add_language(lang.code, lang.display_name)
                created += 1
            else:
                skipped += 1
        for asset in pack.assets:
            if asset.asset_id in repo.list_assets():
                skipped += 1
            else:
                repo.put_asset(asset.data, asset.media_type)
                created += 1
        for module in pack.modules:
            existing = None
            try:
                existing = repo.get_module(module.module_id)
            except UnknownModuleError:
                pass
            repo.put_module(
                module.module_id, module.category, module.source_locale,
                module.title, module.title_i18n,
            )
            # quiz first so lesson link validation can resolve against it
            ordered = sorted(
                module.resources.items(),
                key=lambda kv: (kv[0] is not ResourceKind.QUIZ, kv[0].value),
            )
            for kind, document in ordered:
                new_bytes = codec.canonical_bytes(codec.resource_to_dict(kind, document))
                if existing is not None and kind in existing.resources:
                    old_bytes = codec.canonical_bytes(
                        codec.resource_to_dict(kind, existing.resources[kind])
                    )
                    if old_bytes == new_bytes:
                        skipped += 1
                        continue
                    repo.put_resource(module.module_id, kind, document)
                    updated += 1
                else:
                    repo.put_resource(module.module_id, kind, document)
                    created += 1
        for variant in pack.variants:
            current = repo.get_variant(variant.module_id, variant.kind, variant.locale)
            if current is not None and codec.variant_to_dict(current) == codec.variant_to_dict(variant):
                skipped += 1
                continue
            repo.put_variant(variant)
            if current is None:
                created += 1
            else:
                updated += 1
    return ImportReport(created=created, updated=updated, skipped=skipped)


def open_repository(path: str) -> Repository:
    return Repository(path)
