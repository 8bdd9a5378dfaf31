"""HTTP facade: open learner surface, teacher-mode gated support, authenticated authoring.

Environment:
    SAPHIR_DATA_DIR         repository path (default ./saphir-data)
    SAPHIR_BIND             host:port for `saphir serve`
    SAPHIR_TOKEN_SECRET     token signing key
    SAPHIR_TOKEN_TTL_SECS   token lifetime (default 86400)
"""

from __future__ import annotations

import os
import secrets
from typing import Any

from fastapi import Depends, FastAPI, Header, Query, Request, Response
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field
from starlette.exceptions import HTTPException as StarletteHTTPException

from . import localization, play
from .auth import TokenClaims, issue_token, role_allows, variant_write_allowed, verify_token
from .codec import DocumentDecodeError, resource_from_dict, resource_to_dict
from .model import ElementCategory, ResourceKind
from .records import Role, VariantStatus
from .store import (
    DuplicateLanguageError,
    DuplicateLoginError,
    MalformedLanguageCodeError,
    Repository,
    StoreError,
    UnknownLanguageError,
    UnknownModuleError,
    UnknownResourceError,
    ValidationFailure,
    WeakPasswordError,
)

# closed enumeration of machine-readable 4xx error codes
ERROR_CODES = {
    "UNAUTHENTICATED",
    "FORBIDDEN",
    "NOT_FOUND",
    "VALIDATION_FAILED",
    "NO_QUIZ",
    "BAD_REQUEST",
    "DUPLICATE",
    "UNKNOWN_LANGUAGE",
    "WEAK_PASSWORD",
    "UNKNOWN_PROPOSITION",
}


class ApiError(Exception):
    def __init__(self, status: int, code: str, message: str, details: Any = None):
        assert code in ERROR_CODES
        self.status = status
        self.code = code
        self.message = message
        self.details = details


class LoginRequest(BaseModel):
    login: str
    password: str


class LoginResponse(BaseModel):
    token: str
    role: str


class SessionRequestBody(BaseModel):
    answered_ids: list[str] = Field(default_factory=list)
    seed: int | None = None
    target_count: int = Field(default=play.DEFAULT_SESSION_SIZE, ge=1)


class AnswerRequestBody(BaseModel):
    question_id: str
    selected_ids: list[str]


class ModuleMetaBody(BaseModel):
    category: ElementCategory
    source_locale: str
    title: str
    title_i18n: dict[str, str] = Field(default_factory=dict)


class VariantBody(BaseModel):
    document: dict
    status: VariantStatus


class LanguageBody(BaseModel):
    code: str
    display_name: str


class UserBody(BaseModel):
    login: str
    password: str
    role: Role
    locale_grants: list[str] = Field(default_factory=list)


def _scrub(kind: ResourceKind, doc: dict) -> dict:
    """Strip answer-revealing fields from learner-facing payloads."""
    if kind is ResourceKind.QUIZ:
        return {
            "questions": [
                {
                    "question_id": q["question_id"],
                    "title": q["title"],
                    "propositions": [
                        {"proposition_id": p["proposition_id"], "title": p["title"]}
                        for p in q["propositions"]
                    ],
                }
                for q in doc["questions"]
            ]
        }
    if kind is ResourceKind.ASSOCIATION_GAME:
        return {
            "categories": doc["categories"],
            "propositions": [
                {
                    "proposition_id": p["proposition_id"],
                    "title": p["title"],
                    "category_id": p["category_id"],
                }
                for p in doc["propositions"]
            ],
        }
    return doc


def create_app(
    repo: Repository | None = None,
    token_secret: str | None = None,
    token_ttl: int | None = None,
) -> FastAPI:
    if repo is None:
        repo = Repository(os.environ.get("SAPHIR_DATA_DIR", "./saphir-data"))
    secret = token_secret or os.environ.get("SAPHIR_TOKEN_SECRET") or secrets.token_hex(32)
    ttl = token_ttl or int(os.environ.get("SAPHIR_TOKEN_TTL_SECS", "86400"))

    app = FastAPI(title="saphir", version="0.1.0")
    app.state.repo = repo

    @app.exception_handler(ApiError)
    async def api_error_handler(_req: Request, exc: ApiError):
        body = {"error": {"code": exc.code, "message": exc.message}}
        if exc.details is not None:
            body["error"]["details"] = exc.details
        return JSONResponse(status_code=exc.status, content=body)

    @app.exception_handler(RequestValidationError)
    async def body_error_handler(_req: Request, exc: RequestValidationError):
        return JSONResponse(
            status_code=422,
            content={"error": {"code": "BAD_REQUEST", "message": str(exc.errors()[:3])}},
        )

    @app.exception_handler(StarletteHTTPException)
    async def http_error_handler(_req: Request, exc: StarletteHTTPException):
        code = {401: "UNAUTHENTICATED", 403: "FORBIDDEN", 404: "NOT_FOUND"}.get(
            exc.status_code, "BAD_REQUEST"
        )
        return JSONResponse(
            status_code=exc.status_code,
            content={"error": {"code": code, "message": str(exc.detail)}},
        )

    def optional_claims(authorization: str | None = Header(default=None)) -> TokenClaims | None:
        if not authorization or not authorization.lower().startswith("bearer "):
            return None
        return verify_token(secret, authorization[7:])

    def required_claims(authorization: str | None = Header(default=None)) -> TokenClaims:
        claims = optional_claims(authorization)
        if claims is None:
            raise ApiError(401, "UNAUTHENTICATED", "a valid bearer token is required")
        return claims

    def require(action: str, claims: TokenClaims) -> None:
        if not role_allows(action, claims.role):
            raise ApiError(403, "FORBIDDEN", f"role {claims.role.value!r} may not {action}")

    def get_module_or_404(module_id: str):
        try:
            return repo.get_module(module_id)
        except UnknownModuleError:
            raise ApiError(404, "NOT_FOUND", f"unknown module {module_id!r}")

    # -- auth ---------------------------------------------------------

    @app.post("/api/v1/auth/login", response_model=LoginResponse)
    def login(body: LoginRequest):
        result = repo.verify_credentials(body.login, body.password)
        if result is None:
            raise ApiError(401, "UNAUTHENTICATED", "unknown login or wrong password")
        role, grants = result
        return LoginResponse(
            token=issue_token(secret, body.login, role, grants, ttl_secs=ttl),
            role=role.value,
        )

    # -- learner surface (open) -----------------------------------------

    @app.get("/api/v1/modules")
    def catalog(lang: str | None = Query(default=None)):
        entries = []
        for module_id in repo.list_module_ids():
            module = repo.get_module(module_id)
            requested = lang or module.source_locale
            if requested == module.source_locale:
                title, fallback = module.title, False
            elif requested in module.title_i18n:
                title, fallback = module.title_i18n[requested], False
            else:
                title, fallback = module.title, True
            kinds = sorted(
                k.value for k in module.resources if k is not ResourceKind.PEDAGOGICAL_SUPPORT
            )
            entries.append(
                {
                    "module_id": module.module_id,
                    "category": module.category.value,
                    "title": title,
                    "resolved_locale": module.source_locale if fallback else requested,
                    "fallback_used": fallback,
                    "resource_kinds": kinds,
                }
            )
        return {"modules": entries}

    @app.get("/api/v1/modules/{module_id}/resources/{kind}")
    def get_resource(
        module_id: str,
        kind: ResourceKind,
        lang: str | None = Query(default=None),
        claims: TokenClaims | None = Depends(optional_claims),
        x_teacher_mode: str | None = Header(default=None),
    ):
        module = get_module_or_404(module_id)
        if kind not in module.resources:
            raise ApiError(404, "NOT_FOUND", f"module has no {kind.value}")
        if kind is ResourceKind.PEDAGOGICAL_SUPPORT:
            teacher_mode = (x_teacher_mode or "").lower() == "true"
            if not teacher_mode and claims is None:
                raise ApiError(
                    403, "FORBIDDEN",
                    "pedagogical support requires teacher mode (X-Teacher-Mode: true) or a login",
                )
        resolved = localization.resolve(repo, module_id, kind, lang or module.source_locale)
        doc = resource_to_dict(kind, resolved.document)
        if kind is not ResourceKind.PEDAGOGICAL_SUPPORT:
            doc = _scrub(kind, doc)
        return {
            "module_id": module_id,
            "kind": kind.value,
            "resolved_locale": resolved.resolved_locale,
            "fallback_used": resolved.fallback_used,
            "document": doc,
        }

    @app.post("/api/v1/modules/{module_id}/quiz-session")
    def quiz_session(
        module_id: str,
        body: SessionRequestBody,
        lang: str | None = Query(default=None),
    ):
        module = get_module_or_404(module_id)
        quiz = module.resources.get(ResourceKind.QUIZ)
        if quiz is None:
            raise ApiError(422, "NO_QUIZ", f"module {module_id!r} has no quiz")
        page_links: tuple = ()
        lesson = module.resources.get(ResourceKind.LESSON)
        if lesson is not None:
            page_links = tuple(
                (pg.page_id, tuple(pg.linked_question_ids)) for pg in lesson.pages
            )
        seed = body.seed if body.seed is not None else secrets.randbits(63)
        known = {q.question_id for q in quiz.questions}
        answered = frozenset(a for a in body.answered_ids if a in known)
        session = play.generate_quiz_session(
            play.SessionRequest(
                quiz=quiz,
                page_links=page_links,
                answered_ids=answered,
                seed=seed,
                target_count=body.target_count,
            )
        )
        resolved = localization.resolve(
            repo, module_id, ResourceKind.QUIZ, lang or module.source_locale
        )
        shown = _scrub(ResourceKind.QUIZ, resource_to_dict(ResourceKind.QUIZ, resolved.document))
        by_id = {q["question_id"]: q for q in shown["questions"]}
        return {
            "seed": seed,
            "question_ids": list(session.question_ids),
            "covered_page_ids": sorted(session.covered_page_ids),
            "questions": [by_id[qid] for qid in session.question_ids],
            "resolved_locale": resolved.resolved_locale,
            "fallback_used": resolved.fallback_used,
        }

    @app.post("/api/v1/modules/{module_id}/answers")
    def submit_answer(
        module_id: str,
        body: AnswerRequestBody,
        lang: str | None = Query(default=None),
    ):
        module = get_module_or_404(module_id)
        if ResourceKind.QUIZ not in module.resources:
            raise ApiError(422, "NO_QUIZ", f"module {module_id!r} has no quiz")
        resolved = localization.resolve(
            repo, module_id, ResourceKind.QUIZ, lang or module.source_locale
        )
        question = next(
            (q for q in resolved.document.questions if q.question_id == body.question_id), None
        )
        if question is None:
            raise ApiError(404, "NOT_FOUND", f"unknown question {body.question_id!r}")
        try:
            feedback = play.evaluate_answer(question, set(body.selected_ids))
        except play.UnknownPropositionError as exc:
            raise ApiError(422, "UNKNOWN_PROPOSITION", str(exc))
        return {
            "correct": feedback.correct,
            "per_proposition_feedback": [
                {"proposition_id": pid, "personalized_explanation": text}
                for pid, text in feedback.per_proposition_feedback
            ],
            "general_explanation": feedback.general_explanation,
        }

    @app.get("/api/v1/assets/{asset_id}")
    def get_asset(asset_id: str):
        try:
            data, media_type = repo.get_asset(asset_id)
        except UnknownResourceError:
            raise ApiError(404, "NOT_FOUND", f"unknown asset {asset_id!r}")
        return Response(content=data, media_type=media_type)

    # -- authoring surface (authenticated) ---------------------------------

    @app.put("/api/v1/authoring/modules/{module_id}")
    def put_module(
        module_id: str, body: ModuleMetaBody, claims: TokenClaims = Depends(required_claims)
    ):
        require("write-source", claims)
        try:
            repo.put_module(
                module_id, body.category, body.source_locale, body.title, body.title_i18n
            )
        except UnknownLanguageError as exc:
            raise ApiError(422, "UNKNOWN_LANGUAGE", str(exc))
        except StoreError as exc:
            raise ApiError(422, "BAD_REQUEST", str(exc))
        return {"module_id": module_id}

    @app.put("/api/v1/authoring/modules/{module_id}/resources/{kind}")
    def put_resource(
        module_id: str, kind: ResourceKind, body: dict,
        claims: TokenClaims = Depends(required_claims),
    ):
        require("write-source", claims)
        get_module_or_404(module_id)
        try:
            document = resource_from_dict(kind, body)
        except DocumentDecodeError as exc:
            raise ApiError(422, "BAD_REQUEST", str(exc))
        try:
            revision = repo.put_resource(module_id, kind, document)
        except ValidationFailure as exc:
            raise ApiError(
                422, "VALIDATION_FAILED", "resource failed validation",
                details=exc.report.to_dict(),
            )
        return {"module_id": module_id, "kind": kind.value, "revision": revision}

    @app.delete("/api/v1/authoring/modules/{module_id}/resources/{kind}")
    def delete_resource(
        module_id: str, kind: ResourceKind, claims: TokenClaims = Depends(required_claims)
    ):
        require("write-source", claims)
        get_module_or_404(module_id)
        try:
            repo.delete_resource(module_id, kind)
        except UnknownResourceError as exc:
            raise ApiError(404, "NOT_FOUND", str(exc))
        except ValidationFailure as exc:
            raise ApiError(
                422, "VALIDATION_FAILED", "deletion would leave the module invalid",
                details=exc.report.to_dict(),
            )
        return {"deleted": kind.value}

    @app.put("/api/v1/authoring/modules/{module_id}/resources/{kind}/variants/{locale}")
    def put_variant(
        module_id: str, kind: ResourceKind, locale: str, body: VariantBody,
        claims: TokenClaims = Depends(required_claims),
    ):
        require("write-variant", claims)
        if not variant_write_allowed(claims, locale):
            raise ApiError(
                403, "FORBIDDEN", f"no locale grant for {locale!r}",
            )
        get_module_or_404(module_id)
        try:
            document = resource_from_dict(kind, body.document)
        except DocumentDecodeError as exc:
            raise ApiError(422, "BAD_REQUEST", str(exc))
        try:
            variant = localization.upsert_variant(
                repo, module_id, kind, locale, document, body.status
            )
        except ValidationFailure as exc:
            raise ApiError(
                422, "VALIDATION_FAILED", "variant failed validation",
                details=exc.report.to_dict(),
            )
        except UnknownResourceError as exc:
            raise ApiError(404, "NOT_FOUND", str(exc))
        except (UnknownLanguageError, localization.LocaleIsSourceError) as exc:
            raise ApiError(422, "UNKNOWN_LANGUAGE", str(exc))
        return {
            "module_id": module_id,
            "kind": kind.value,
            "locale": locale,
            "status": variant.status.value,
            "source_revision": variant.source_revision,
        }

    @app.post("/api/v1/authoring/languages")
    def add_language(body: LanguageBody, claims: TokenClaims = Depends(required_claims)):
        require("add-language", claims)
        try:
            langs = repo.add_language(body.code, body.display_name)
        except DuplicateLanguageError as exc:
            raise ApiError(422, "DUPLICATE", str(exc))
        except MalformedLanguageCodeError as exc:
            raise ApiError(422, "BAD_REQUEST", str(exc))
        return {"languages": [{"code": l.code, "display_name": l.display_name} for l in langs]}

    @app.post("/api/v1/authoring/users")
    def create_user(body: UserBody, claims: TokenClaims = Depends(required_claims)):
        require("manage-users", claims)
        try:
            record = repo.create_user(body.login, body.password, body.role, set(body.locale_grants))
        except DuplicateLoginError as exc:
            raise ApiError(422, "DUPLICATE", str(exc))
        except WeakPasswordError as exc:
            raise ApiError(422, "WEAK_PASSWORD", str(exc))
        except StoreError as exc:
            raise ApiError(422, "BAD_REQUEST", str(exc))
        return {"login": record.login, "role": record.role.value}

    # -- export / reports (authenticated, any role) -------------------------

    @app.get("/api/v1/export/pack")
    def export_pack(
        langs: str | None = Query(default=None),
        claims: TokenClaims = Depends(required_claims),
    ):
        require("export-pack", claims)
        locales = set(langs.split(",")) if langs else None
        data = repo.export_pack(locales)
        return Response(
            content=data,
            media_type="application/zip",
            headers={"Content-Disposition": "attachment; filename=saphir-pack.zip"},
        )

    @app.get("/api/v1/reports/translations")
    def translations_report(claims: TokenClaims = Depends(required_claims)):
        require("read-reports", claims)
        return localization.completeness_report(repo).to_dict()

    return app
