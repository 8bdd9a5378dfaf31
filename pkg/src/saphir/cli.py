"""Operator command line: repository lifecycle, validation, packs, reports, serving.

Exit codes: 0 success, 1 validation failure, 2 usage or IO error.
Data goes to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import json
import os
import sys

import click

from . import localization, sample
from .records import Role
from .store import (
    CorruptRepositoryError,
    Repository,
    StoreError,
    ValidationFailure,
    import_pack,
    open_repository,
)
from .validation import validate_module, validate_pack


class CliError(click.ClickException):
    # usage and IO problems exit 2; exit 1 is reserved for validation failures
    exit_code = 2


def _repo(ctx: click.Context) -> Repository:
    path = ctx.obj["data_dir"]
    if not os.path.isdir(path):
        raise CliError(f"no repository at {path}; run `saphir init {path}` first")
    try:
        return open_repository(path)
    except CorruptRepositoryError as exc:
        raise CliError(str(exc))


def _emit(ctx: click.Context, data, text: str) -> None:
    if ctx.obj["format"] == "json":
        click.echo(json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False))
    else:
        click.echo(text)


@click.group()
@click.option(
    "--data-dir",
    envvar="SAPHIR_DATA_DIR",
    default="./saphir-data",
    show_default=True,
    help="Repository directory.",
)
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text")
@click.pass_context
def main(ctx: click.Context, data_dir: str, fmt: str) -> None:
    ctx.ensure_object(dict)
    ctx.obj["data_dir"] = data_dir
    ctx.obj["format"] = fmt


@main.command()
@click.argument("directory", required=False)
@click.pass_context
def init(ctx: click.Context, directory: str | None) -> None:
    """Create (or idempotently reopen) a repository."""
    path = directory or ctx.obj["data_dir"]
    try:
        repo = open_repository(path)
    except (OSError, CorruptRepositoryError) as exc:
        raise CliError(str(exc))
    stats = repo.pack_stats()
    _emit(ctx, {"path": path, "modules": stats.module_count},
          f"repository ready at {path} ({stats.module_count} modules)")


@main.command()
@click.option("--module", "module_id", default=None, help="Validate a single module.")
@click.pass_context
def validate(ctx: click.Context, module_id: str | None) -> None:
    """Validate stored content; exit 1 when violations are found."""
    repo = _repo(ctx)
    if module_id is not None:
        reports = [validate_module(repo.get_module(module_id))]
    else:
        reports = [validate_pack(repo.build_pack())]
    violations = [v for r in reports for v in r.violations]
    payload = [r.to_dict() for r in reports]
    if violations:
        lines = "\n".join(f"{v.code.value}  {v.path}  {v.message}" for v in violations)
        _emit(ctx, payload, lines)
        sys.exit(1)
    _emit(ctx, payload, "valid: no violations")


@main.command()
@click.option("--out", "out_path", required=True, type=click.Path(dir_okay=False))
@click.option("--langs", default=None, help="Comma-separated locale filter.")
@click.pass_context
def export(ctx: click.Context, out_path: str, langs: str | None) -> None:
    """Export a content pack archive."""
    repo = _repo(ctx)
    locales = set(langs.split(",")) if langs else None
    data = repo.export_pack(locales)
    try:
        with open(out_path, "wb") as fh:
            fh.write(data)
    except OSError as exc:
        raise CliError(str(exc))
    _emit(ctx, {"path": out_path, "bytes": len(data)}, f"wrote {len(data)} bytes to {out_path}")


@main.command("import")
@click.argument("pack", type=click.Path(exists=True, dir_okay=False))
@click.pass_context
def import_(ctx: click.Context, pack: str) -> None:
    """Import a content pack archive into the repository."""
    repo = _repo(ctx)
    with open(pack, "rb") as fh:
        data = fh.read()
    try:
        report = import_pack(repo, data)
    except ValidationFailure as exc:
        click.echo(f"pack failed validation: {exc}", err=True)
        sys.exit(1)
    except StoreError as exc:
        raise CliError(str(exc))
    _emit(
        ctx,
        {"created": report.created, "updated": report.updated, "skipped": report.skipped},
        f"created {report.created}, updated {report.updated}, skipped {report.skipped}",
    )


@main.group()
def report() -> None:
    """Reporting commands."""


@report.command("translations")
@click.pass_context
def report_translations(ctx: click.Context) -> None:
    repo = _repo(ctx)
    rep = localization.completeness_report(repo)
    lines = [
        f"{locale}: {rep.coverage[locale]:.0%} complete" for locale in sorted(rep.coverage)
    ] or ["no translatable content"]
    _emit(ctx, rep.to_dict(), "\n".join(lines))


@main.command()
@click.pass_context
def stats(ctx: click.Context) -> None:
    """Repository statistics: modules, playable resources, languages."""
    repo = _repo(ctx)
    s = repo.pack_stats()
    data = {
        "module_count": s.module_count,
        "resource_count": s.resource_count,
        "language_count": s.language_count,
        "per_category": s.per_category,
    }
    text = (
        f"modules: {s.module_count}\nresources: {s.resource_count}\n"
        f"languages: {s.language_count}\n"
        + "\n".join(f"  {cat}: {count}" for cat, count in sorted(s.per_category.items()))
    )
    _emit(ctx, data, text)


@main.group()
def user() -> None:
    """User management."""


@user.command("add")
@click.argument("login")
@click.option("--role", "role", type=click.Choice([r.value for r in Role]), required=True)
@click.option("--locales", default=None, help="Comma-separated grants (translators).")
@click.option("--password", prompt=True, hide_input=True)
@click.pass_context
def user_add(ctx: click.Context, login: str, role: str, locales: str | None, password: str) -> None:
    repo = _repo(ctx)
    grants = set(locales.split(",")) if locales else set()
    try:
        record = repo.create_user(login, password, Role(role), grants)
    except StoreError as exc:
        raise CliError(str(exc))
    _emit(ctx, {"login": record.login, "role": record.role.value},
          f"created {record.role.value} {record.login}")


@main.command("seed-sample")
@click.pass_context
def seed_sample(ctx: click.Context) -> None:
    """Populate the repository with the deterministic sample catalog."""
    path = ctx.obj["data_dir"]
    repo = open_repository(path)
    sample.seed_sample(repo)
    s = repo.pack_stats()
    _emit(
        ctx,
        {"module_count": s.module_count, "resource_count": s.resource_count,
         "language_count": s.language_count},
        f"seeded {s.module_count} modules, {s.resource_count} resources, "
        f"{s.language_count} languages",
    )


@main.command()
@click.option("--bind", envvar="SAPHIR_BIND", default="127.0.0.1:8000", show_default=True)
@click.pass_context
def serve(ctx: click.Context, bind: str) -> None:
    """Run the HTTP service."""
    import uvicorn

    from .service import create_app

    repo = _repo(ctx)
    host, _, port = bind.partition(":")
    uvicorn.run(create_app(repo), host=host or "127.0.0.1", port=int(port or 8000))


if __name__ == "__main__":
    main()
