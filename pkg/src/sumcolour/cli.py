"""Command line front end: evaluate, search, construct, verify, report.

Exit codes: 0 on success or a verified certificate, 1 when nothing was
found, a construction is impossible, or verification fails, 2 for usage
errors.  All rational I/O uses the reduced "a/b" string form.
"""
from __future__ import annotations

import json
from fractions import Fraction

import click

from .certificates import MalformedCert, seal, verify_cert
from .digits import (EmptyB, NoCylinder, SumEscapedZ, build_H,
                     find_cylinder_in, greedy_baire)
from .exact import parse_rational
from .intervals import IntervalSet
from .registry import ColouringRef, UnknownColouring, resolve
from .search import (MODES, BudgetExceeded, Exhausted, enumerate_ground,
                     search_mono)


@click.group()
@click.option("--seed", type=int, default=None,
              help="Seed for randomized pieces; psiW ids without an "
                   "explicit seed fall back to it.")
@click.pass_context
def main(ctx: click.Context, seed: int | None):
    """Exact colourings, sumset searches, constructions, certificates."""
    ctx.ensure_object(dict)
    ctx.obj["seed"] = seed


def _resolve_id(spec_id: str, seed: int | None) -> ColouringRef:
    try:
        return resolve(spec_id, seed=seed)
    except UnknownColouring as exc:
        raise click.UsageError(str(exc)) from exc


def _parse_intervals(text: str) -> IntervalSet:
    try:
        return IntervalSet.from_json(json.loads(text))
    except (ValueError, TypeError) as exc:
        raise click.UsageError(f"bad interval data {text!r}: {exc}") from exc


def _emit_cert(cert: dict, out: str | None, summary: str):
    sealed = seal(cert)
    if out:
        with open(out, "w") as fh:
            json.dump(sealed, fh, indent=2)
            fh.write("\n")
        click.echo(f"{summary}; certificate written to {out}")
    else:
        click.echo(json.dumps(sealed, indent=2))


def _parse_value(text: str, ref: ColouringRef) -> tuple[Fraction, ...]:
    """Parse 'a/b', a JSON array, or an index:value JSON object.

    Inputs shorter than the colouring's dimension are zero-padded.
    """
    text = text.strip()
    try:
        if text.startswith("["):
            items = json.loads(text)
            if not isinstance(items, list) or not items:
                raise ValueError("expected a non-empty JSON array")
            vec = tuple(parse_rational(str(item)) for item in items)
        elif text.startswith("{"):
            obj = json.loads(text)
            if not isinstance(obj, dict):
                raise ValueError("expected a JSON object")
            entries: dict[int, Fraction] = {}
            for key, item in obj.items():
                idx = int(key)
                if idx < 0:
                    raise ValueError(f"negative index {idx}")
                entries[idx] = parse_rational(str(item))
            coords = [Fraction(0)] * (max(entries, default=0) + 1)
            for idx, q in entries.items():
                coords[idx] = q
            vec = tuple(coords)
        else:
            vec = (parse_rational(text),)
    except ValueError as exc:
        raise click.UsageError(f"bad value {text!r}: {exc}") from exc
    if ref.dim is not None:
        if len(vec) > ref.dim:
            raise click.UsageError(
                f"{ref.spec} takes {ref.dim} coordinate(s), got {len(vec)}")
        vec = vec + (Fraction(0),) * (ref.dim - len(vec))
    return vec


@main.group()
def colour():
    """Work with registered colourings."""


@colour.command(name="eval")
@click.option("--id", "spec_id", required=True,
              help="Colouring id, e.g. band:k=2,m=3 or gamma72:k=2,m=1.")
@click.argument("value")
@click.pass_context
def colour_eval(ctx: click.Context, spec_id: str, value: str):
    """Print the colour of VALUE under the chosen colouring."""
    ref = _resolve_id(spec_id, ctx.obj["seed"])
    vec = _parse_value(value, ref)
    try:
        click.echo(str(ref.fn(vec)))
    except ValueError as exc:
        raise click.UsageError(str(exc)) from exc


@main.command()
@click.option("--id", "spec_id", required=True, help="Colouring id.")
@click.option("--mode", type=click.Choice(MODES), required=True)
@click.option("--k", type=click.IntRange(1), required=True)
@click.option("--height", type=click.IntRange(1), required=True)
@click.option("--dim", type=click.IntRange(1), default=1, show_default=True)
@click.option("--max-size", type=click.IntRange(1), required=True)
@click.option("--budget", type=click.IntRange(1), default=1_000_000,
              show_default=True, help="Node expansions per subtree.")
@click.option("--workers", type=click.IntRange(1), default=1, show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None)
@click.pass_context
def search(ctx: click.Context, spec_id: str, mode: str, k: int, height: int,
           dim: int, max_size: int, budget: int, workers: int, out: str | None):
    """Hunt for a set of the given size with monochromatic k-fold sums."""
    ref = _resolve_id(spec_id, ctx.obj["seed"])
    if ref.dim is not None and ref.dim != dim:
        raise click.UsageError(
            f"{ref.spec} colours dimension {ref.dim}, but --dim is {dim}")
    ground = enumerate_ground(height, dim)
    try:
        result = search_mono(ref, mode, k, ground, max_size, budget,
                             workers=workers)
    except BudgetExceeded as exc:
        click.echo(str(exc))
        raise SystemExit(1)
    if isinstance(result, Exhausted):
        click.echo(f"no witness of size {max_size} exists at this height; "
                   f"best monochromatic size: {result.best_size}")
        raise SystemExit(1)
    _emit_cert(result, out,
               f"witness of size {max_size} with colour {result['colour']}")


@main.group()
def construct():
    """Build verified sets whose k-fold sums stay inside a target."""


@construct.command()
@click.option("--Z", "z_text", required=True,
              help='Open intervals as JSON, e.g. [["1/4","1/2"]].')
@click.option("--k", type=click.IntRange(1), required=True)
@click.option("--T", "T", type=click.IntRange(0), required=True,
              help="Number of tail positions; H gets 2**T elements.")
@click.option("--max-depth", type=click.IntRange(1), default=12,
              show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None)
def cylinder(z_text: str, k: int, T: int, max_depth: int, out: str | None):
    """Fit a base-(k+2) cylinder inside Z and build H with kH inside Z."""
    Z = _parse_intervals(z_text)
    try:
        word, n = find_cylinder_in(Z, k + 2, max_depth)
        cert = build_H(word, n, range(n + 1, n + 1 + T), k, Z)
    except (NoCylinder, SumEscapedZ, ValueError) as exc:
        click.echo(f"construction failed: {exc}")
        raise SystemExit(1)
    _emit_cert(cert, out, f"built {len(cert['H'])} elements, verified "
                          f"{cert['checked_sums']} sums")


@construct.command()
@click.option("--Z", "z_text", required=True,
              help='Open intervals as JSON, e.g. [["0/1","1/2"]].')
@click.option("--k", type=click.IntRange(1), required=True)
@click.option("--T", "T", type=click.IntRange(0), required=True,
              help="How many elements to pick.")
@click.option("--forbidden", "forbidden_text", default=None,
              help='JSON list of rationals the sums must avoid, '
                   'e.g. ["1/5"].')
@click.option("--out", type=click.Path(dir_okay=False), default=None)
def greedy(z_text: str, k: int, T: int, forbidden_text: str | None,
           out: str | None):
    """Greedily pick T rationals whose k-fold sums all stay inside Z."""
    Z = _parse_intervals(z_text)
    forbidden: list[Fraction] = []
    if forbidden_text:
        try:
            items = json.loads(forbidden_text)
            if not isinstance(items, list):
                raise ValueError("expected a JSON array")
            forbidden = [parse_rational(str(item)) for item in items]
        except ValueError as exc:
            raise click.UsageError(f"bad forbidden list: {exc}") from exc
    try:
        cert = greedy_baire(Z, k, T, forbidden)
    except (EmptyB, SumEscapedZ, ValueError) as exc:
        click.echo(f"construction failed: {exc}")
        raise SystemExit(1)
    _emit_cert(cert, out, f"picked {len(cert['Y'])} elements, verified "
                          f"{cert['checked_sums']} sums")


@main.command()
@click.argument("cert_path", type=click.Path(exists=True, dir_okay=False))
def verify(cert_path: str):
    """Re-verify a certificate file from scratch."""
    try:
        with open(cert_path) as fh:
            cert = json.load(fh)
    except json.JSONDecodeError as exc:
        raise click.UsageError(f"{cert_path} is not valid JSON: {exc}")
    try:
        ok = verify_cert(cert)
    except MalformedCert as exc:
        raise click.UsageError(f"malformed certificate: {exc}")
    if not ok:
        click.echo("verification failed")
        raise SystemExit(1)
    click.echo("verified")


@main.command()
@click.option("--id", "spec_id", required=True, help="Colouring id.")
@click.option("--height", type=click.IntRange(1), required=True)
@click.option("--dim", type=click.IntRange(1), default=1, show_default=True)
@click.option("--out-dir", type=click.Path(file_okay=False), required=True)
@click.option("--fmt", type=click.Choice(["csv", "tsv"]), default="csv",
              show_default=True)
@click.pass_context
def report(ctx: click.Context, spec_id: str, height: int, dim: int,
           out_dir: str, fmt: str):
    """Colour a whole ground set; write a table and rendered figures."""
    # matplotlib import is slow; only the report path needs it
    from .report import write_report

    ref = _resolve_id(spec_id, ctx.obj["seed"])
    if ref.dim is not None and ref.dim != dim:
        raise click.UsageError(
            f"{ref.spec} colours dimension {ref.dim}, but --dim is {dim}")
    ground = enumerate_ground(height, dim)
    for path in write_report(ref, ground, out_dir, fmt):
        click.echo(str(path))


if __name__ == "__main__":
    main()
