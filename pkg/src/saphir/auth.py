"""Signed stateless auth tokens and the role/action permission matrix."""

from __future__ import annotations

import base64
import hashlib
import hmac
import json
import time
from dataclasses import dataclass

from .records import Role

DEFAULT_TOKEN_TTL_SECS = 86400


@dataclass(frozen=True)
class TokenClaims:
    login: str
    role: Role
    locale_grants: frozenset[str]
    expires_at: int


def _b64(data: bytes) -> str:
    return base64.urlsafe_b64encode(data).decode("ascii").rstrip("=")


def _unb64(s: str) -> bytes:
    return base64.urlsafe_b64decode(s + "=" * (-len(s) % 4))


def _sign(secret: str, payload: bytes) -> bytes:
    return hmac.new(secret.encode("utf-8"), payload, hashlib.sha256).digest()


def issue_token(
    secret: str,
    login: str,
    role: Role,
    locale_grants: frozenset[str] = frozenset(),
    ttl_secs: int = DEFAULT_TOKEN_TTL_SECS,
    now: float | None = None,
) -> str:
    now = time.time() if now is None else now
    payload = json.dumps(
        {
            "login": login,
            "role": role.value,
            "locale_grants": sorted(locale_grants),
            "exp": int(now) + ttl_secs,
        },
        sort_keys=True,
        separators=(",", ":"),
    ).encode("utf-8")
    return f"{_b64(payload)}.{_b64(_sign(secret, payload))}"


def verify_token(secret: str, token: str, now: float | None = None) -> TokenClaims | None:
    """Returns the claims for a well-signed, unexpired token, else None."""
    now = time.time() if now is None else now
    try:
        payload_b64, sig_b64 = token.split(".")
        payload = _unb64(payload_b64)
        if not hmac.compare_digest(_sign(secret, payload), _unb64(sig_b64)):
            return None
        data = json.loads(payload)
        if data["exp"] < now:
            return None
        return TokenClaims(
            login=data["login"],
            role=Role(data["role"]),
            locale_grants=frozenset(data["locale_grants"]),
            expires_at=data["exp"],
        )
    except (ValueError, KeyError, TypeError):
        return None


# action name -> roles allowed to perform it (authenticated surface only;
# learner content and teacher mode are open by design)
ROLE_MATRIX: dict[str, frozenset[Role]] = {
    "write-source": frozenset({Role.DESIGNER, Role.ADMIN}),
    "write-variant": frozenset({Role.TRANSLATOR, Role.DESIGNER, Role.ADMIN}),
    "add-language": frozenset({Role.ADMIN}),
    "manage-users": frozenset({Role.ADMIN}),
    "export-pack": frozenset({Role.TRANSLATOR, Role.DESIGNER, Role.ADMIN}),
    "read-reports": frozenset({Role.TRANSLATOR, Role.DESIGNER, Role.ADMIN}),
    "read-pedagogical-support": frozenset({Role.TRANSLATOR, Role.DESIGNER, Role.ADMIN}),
}


def role_allows(action: str, role: Role) -> bool:
    return role in ROLE_MATRIX[action]


def variant_write_allowed(claims: TokenClaims, locale: str) -> bool:
    """Translators are scoped to their granted locales; designers and admins
    may write any variant."""
    if claims.role in (Role.DESIGNER, Role.ADMIN):
        return True
    return claims.role is Role.TRANSLATOR and locale in claims.locale_grants
