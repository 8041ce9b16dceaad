"""Command-line surface.

Exit codes: 0 success, 2 bad input, 3 window/limit exceeded, 4 internal
consistency failure.  All payloads are JSON with exact fraction strings;
`betti` can also render the conventional text table.
"""

from __future__ import annotations

import os
import sys
from pathlib import Path
from typing import Optional

import click

from . import ENGINE_VERSION
from .cohomology import (
    ample_power_profile,
    is_regular_product,
    is_regular_single,
    predict_np_main,
    product_profile,
    single_plan,
)
from .corpus import generate_corpus
from .criteria import cor1, cor_canonical_product, cor_hilbert, cor_polytope, cor_prodproj
from .ehrhart import ehrhart_polynomial, integer_root_count
from .errors import ConsistencyError, DegenerateInput, DimensionMismatch, WindowExceeded
from .koszul import betti_table, build_ring, k_polynomial_checksum, np_level
from .lattice import lattice_points
from .normality import is_normal
from .ranks import RankPolicy
from .serialize import (
    betti_text_table,
    betti_to_json,
    canonical_key,
    content_hash,
    criterion_to_json,
    dumps,
    ehrhart_to_json,
    load_polytope,
    normality_to_json,
    polytope_to_json,
    verdicts_to_json,
)

CACHE_ENV = "POLYSYZ_CACHE_DIR"

# hard ceiling on Koszul windows reachable from the CLI; beyond this the
# strand sizes are out of desk scale and the request is refused (exit 3)
WINDOW_LIMIT = 8


def _check_limits(**window: int) -> None:
    for name, value in window.items():
        if value > WINDOW_LIMIT:
            raise WindowExceeded(
                f"{name}={value} exceeds the CLI window limit {WINDOW_LIMIT}"
            )


def _fail(code: int, message: str):
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


def _guard(fn):
    """Map package exceptions onto the documented exit codes."""
    import functools

    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except WindowExceeded as exc:
            _fail(3, str(exc))
        except (DegenerateInput, DimensionMismatch, FileNotFoundError, ValueError) as exc:
            _fail(2, str(exc))
        except ConsistencyError as exc:
            _fail(4, str(exc))

    return wrapper


def _cache_lookup(cache_dir: Optional[str], key: dict) -> tuple[Optional[str], Optional[Path]]:
    cache_dir = cache_dir or os.environ.get(CACHE_ENV)
    if not cache_dir:
        return None, None
    path = Path(cache_dir) / f"{content_hash(key)}.json"
    if path.exists():
        return path.read_text(), path
    return None, path


def _cache_store(path: Optional[Path], payload: str) -> None:
    if path is None:
        return
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(payload)


def _vec(s: str) -> tuple:
    try:
        return tuple(int(t) for t in s.split(","))
    except ValueError:
        raise DegenerateInput(f"expected a comma-separated integer vector, got {s!r}")


@click.group()
def cli():
    """Exact syzygy toolkit for lattice polytopes."""


@cli.command()
@click.argument("polytope", type=click.Path(exists=True))
@click.option("--d", "dilation", type=int, default=1, show_default=True)
@_guard
def count(polytope, dilation):
    """Number of lattice points of the dilation dP."""
    P = load_polytope(polytope)
    click.echo(dumps({"d": dilation, "count": len(lattice_points(P, dilation))}), nl=False)


@cli.command()
@click.argument("polytope", type=click.Path(exists=True))
@_guard
def ehrhart(polytope):
    """Ehrhart polynomial of the (normalized) polytope."""
    P = load_polytope(polytope)
    click.echo(dumps(ehrhart_to_json(ehrhart_polynomial(P))), nl=False)


@cli.command()
@click.argument("polytope", type=click.Path(exists=True))
@_guard
def roots(polytope):
    """Integer roots of the Ehrhart polynomial and the invariant r."""
    P = load_polytope(polytope)
    data = integer_root_count(ehrhart_polynomial(P))
    click.echo(dumps({"r": data.r, "integer_roots": list(data.integer_roots)}), nl=False)


@cli.command()
@click.argument("polytope", type=click.Path(exists=True))
@click.option("--mmax", type=int, default=None, help="Decomposition bound override.")
@_guard
def normality(polytope, mmax):
    """Normality report with a witness on failure."""
    P = load_polytope(polytope)
    click.echo(dumps(normality_to_json(is_normal(P, mmax))), nl=False)


def _np_payload(P, c, max_i, max_slope, certify, threads, pmax=None):
    key = {
        "engine": ENGINE_VERSION,
        "vertices": [list(v) for v in P.vertices],
        "c": c,
        "max_i": max_i,
        "max_slope": max_slope,
        "certify": certify,
        "pmax": pmax,
    }
    policy = RankPolicy(certify=certify).with_key(canonical_key(key))
    ring = build_ring(P, c, max_slope + 1)
    table = betti_table(ring, max_i, max_slope, policy=policy, threads=threads)
    if not k_polynomial_checksum(table):
        raise ConsistencyError("K-polynomial checksum mismatch")
    return key, ring, table


@cli.command()
@click.argument("polytope", type=click.Path(exists=True))
@click.option("--c", type=int, default=1, show_default=True, help="Dilation of the bundle.")
@click.option("--max-i", type=int, default=4, show_default=True)
@click.option("--max-slope", type=int, default=None, help="Defaults to dim P + 2.")
@click.option("--certify", is_flag=True, help="Exact arithmetic in every rank.")
@click.option("--threads", type=int, default=1, show_default=True)
@click.option("--cache-dir", type=click.Path(), default=None)
@click.option("--format", "fmt", type=click.Choice(["json", "text"]), default="json")
@_guard
def betti(polytope, c, max_i, max_slope, certify, threads, cache_dir, fmt):
    """Graded Betti numbers of the section ring over the window."""
    P = load_polytope(polytope)
    if max_slope is None:
        max_slope = P.dim + 2
    _check_limits(max_i=max_i, max_slope=max_slope)
    key = {
        "cmd": "betti",
        "engine": ENGINE_VERSION,
        "vertices": [list(v) for v in P.vertices],
        "c": c,
        "max_i": max_i,
        "max_slope": max_slope,
        "certify": certify,
        "fmt": fmt,
    }
    cached, path = _cache_lookup(cache_dir, key)
    if cached is not None:
        click.echo(cached, nl=False)
        return
    _, _, table = _np_payload(P, c, max_i, max_slope, certify, threads)
    if fmt == "text":
        payload = betti_text_table(table) + "\n"
    else:
        payload = dumps(betti_to_json(table))
    _cache_store(path, payload)
    click.echo(payload, nl=False)


@cli.command(name="np")
@click.argument("polytope", type=click.Path(exists=True))
@click.option("--c", type=int, default=1, show_default=True)
@click.option("--pmax", type=int, default=2, show_default=True)
@click.option("--max-slope", type=int, default=None, help="Defaults to dim P + 2.")
@click.option("--certify", is_flag=True)
@click.option("--threads", type=int, default=1, show_default=True)
@click.option("--cache-dir", type=click.Path(), default=None)
@_guard
def np_cmd(polytope, c, pmax, max_slope, certify, threads, cache_dir):
    """(N_p) verdicts for p = 0..pmax."""
    P = load_polytope(polytope)
    if max_slope is None:
        max_slope = P.dim + 2
    _check_limits(pmax=pmax, max_slope=max_slope)
    key = {
        "cmd": "np",
        "engine": ENGINE_VERSION,
        "vertices": [list(v) for v in P.vertices],
        "c": c,
        "pmax": pmax,
        "max_slope": max_slope,
        "certify": certify,
    }
    cached, path = _cache_lookup(cache_dir, key)
    if cached is not None:
        click.echo(cached, nl=False)
        return
    _, ring, table = _np_payload(P, c, pmax, max_slope, certify, threads, pmax=pmax)
    verdicts = np_level(ring, pmax, max_slope, table=table)
    payload = dumps(
        {
            "c": c,
            "window": {"max_i": pmax, "max_slope": max_slope},
            "verdicts": verdicts_to_json(verdicts),
            "betti": betti_to_json(table)["entries"],
        }
    )
    _cache_store(path, payload)
    click.echo(payload, nl=False)


@cli.command()
@click.argument("polytope", type=click.Path(exists=True), required=False)
@click.option("--d", "twist", type=str, required=True, help="Integer twist (or vector for --product).")
@click.option("--product", "product_dims", type=str, default=None, help="Factor dimensions, e.g. 1,2.")
@_guard
def cohomology(polytope, twist, product_dims):
    """Cohomology dimensions H^i of a twist."""
    if product_dims:
        n = _vec(product_dims)
        a = _vec(twist)
        prof = product_profile(n, a)
    else:
        if polytope is None:
            raise DegenerateInput("need a polytope path or --product")
        P = load_polytope(polytope)
        prof = ample_power_profile(P, int(twist))
    click.echo(
        dumps(
            {
                "context": prof.context,
                "twist": list(prof.query),
                "dims": {str(i): d for i, d in prof.dims.items()},
                "euler": prof.euler(),
            }
        ),
        nl=False,
    )


@cli.command()
@click.argument("polytope", type=click.Path(exists=True), required=False)
@click.option("--m", "twist", type=str, required=True)
@click.option("--product", "product_dims", type=str, default=None)
@_guard
def regularity(polytope, twist, product_dims):
    """O_X-regularity of a twist with respect to the ambient bundle(s)."""
    if product_dims:
        n = _vec(product_dims)
        a = _vec(twist)
        ok = is_regular_product(n, a)
        click.echo(dumps({"context": "product", "twist": list(a), "regular": ok}), nl=False)
    else:
        if polytope is None:
            raise DegenerateInput("need a polytope path or --product")
        P = load_polytope(polytope)
        m = int(twist)
        ok = is_regular_single(P, m)
        click.echo(dumps({"context": "ample_power", "twist": [m], "regular": ok}), nl=False)


@cli.command()
@click.argument("polytope", type=click.Path(exists=True))
@click.option("--w1", type=int, required=True, help="First weight of the plan.")
@click.option("--p", "p", type=int, required=True)
@_guard
def predict(polytope, w1, p):
    """Predict (N_p) for the p-th partial-sum twist (one-directional)."""
    P = load_polytope(polytope)
    plan = single_plan(w1, p)
    regular_m1 = is_regular_single(P, w1)
    membership = plan.membership_ok()
    result = predict_np_main(plan, regular_m1, membership)
    payload = {
        "w1": w1,
        "p": p,
        "regular_m1": regular_m1,
        "membership_ok": membership,
        "prediction": None
        if result is None
        else {"p": result[0], "twist": result[1][0]},
    }
    click.echo(dumps(payload), nl=False)


@cli.command(name="criteria")
@click.argument("polytope", type=click.Path(exists=True), required=False)
@click.option("--d", "d_opt", type=str, default=None)
@click.option("--p", "p", type=int, default=1, show_default=True)
@click.option("--product", "product_dims", type=str, default=None)
@_guard
def criteria_cmd(polytope, d_opt, p, product_dims):
    """All applicable sufficiency criteria for the given instance."""
    results = []
    if product_dims:
        n = _vec(product_dims)
        if d_opt is None:
            raise DegenerateInput("--product needs --d with a twist vector")
        d = _vec(d_opt)
        results.append(cor_prodproj(n, d, p))
        if p >= 1:
            results.append(cor_canonical_product(n, d, p))
    else:
        if polytope is None:
            raise DegenerateInput("need a polytope path or --product")
        P = load_polytope(polytope)
        d = int(d_opt) if d_opt is not None else 1
        results.append(cor1(P.dim, d, p))
        if p >= 1:
            results.append(cor_hilbert(P, d, p))
        results.append(cor_polytope(P))
    payload = [criterion_to_json(r) for r in results]
    click.echo(dumps(payload), nl=False)
    lines = []
    for r in results:
        verdict = f"guarantees (N_{r.guaranteed_p})" if r.guaranteed else "no guarantee"
        lines.append(f"{r.criterion:20s} threshold={r.threshold!r:12} {verdict}")
    click.echo("\n".join(lines), err=True)


@cli.command()
@click.option("--seed", type=int, default=1, show_default=True)
@click.option("--count", "count_", type=int, default=10, show_default=True)
@click.option("--dim", type=int, default=2, show_default=True)
@click.option("--coord-bound", type=int, default=4, show_default=True)
@click.option("--out-dir", type=click.Path(), default="corpus", show_default=True)
@_guard
def corpus(seed, count_, dim, coord_bound, out_dir):
    """Write a reproducible corpus of polytope JSON files."""
    polys = generate_corpus(seed, count_, dim, coord_bound)
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    names = []
    for k, P in enumerate(polys):
        name = f"corpus_{dim}d_s{seed}_{k:03d}.json"
        (out / name).write_text(dumps(polytope_to_json(P)))
        names.append(name)
    click.echo(dumps({"written": names}), nl=False)


def _report_rows(certify: bool, threads: int):
    from .lattice import LatticePolytope
    from .normality import is_normal as _is_normal

    cubic = LatticePolytope.from_points([(1, 0), (0, 1), (1, 1), (2, 2)])
    unit_tri = LatticePolytope.from_points([(0, 0), (1, 0), (0, 1)])
    simplex112 = LatticePolytope.from_points(
        [(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 2)]
    )
    rows = []

    def np_status(P, c, pmax, slope):
        policy = RankPolicy(certify=certify).with_key(
            canonical_key([[list(v) for v in P.vertices], c, pmax, slope])
        )
        ring = build_ring(P, c, slope + 1)
        verdicts = np_level(ring, pmax, slope, policy=policy, threads=threads)
        return {v.p: v for v in verdicts}

    v = np_status(cubic, 1, 1, 3)
    rows.append(
        (
            "cubic surface, c=1",
            "N_0 holds, N_1 fails",
            f"N_0 {v[0].status}, N_1 {v[1].status}",
            v[0].status != "FAILS" and v[1].status == "FAILS",
        )
    )
    v = np_status(cubic, 2, 4, 4)
    rows.append(
        (
            "cubic surface, c=2",
            "N_3 holds, N_4 fails",
            f"N_3 {v[3].status}, N_4 {v[4].status}",
            v[3].status != "FAILS" and v[4].status == "FAILS",
        )
    )
    rep = _is_normal(simplex112)
    rows.append(
        (
            "(1,1,2)-simplex",
            "not normal, witness ((1,1,1), m=2)",
            f"normal={rep.normal}, witness={rep.witness}",
            (not rep.normal) and rep.witness == ((1, 1, 1), 2),
        )
    )
    v = np_status(simplex112, 2, 2, 5)
    rows.append(
        (
            "(1,1,2)-simplex, c=2",
            "N_1 holds, N_2 fails",
            f"N_1 {v[1].status}, N_2 {v[2].status}",
            v[1].status != "FAILS" and v[2].status == "FAILS",
        )
    )
    v = np_status(unit_tri, 2, 2, 4)
    rows.append(
        (
            "Veronese conic net, c=2",
            "no failure through N_2",
            f"N_2 {v[2].status}",
            all(v[p].status != "FAILS" for p in range(3)),
        )
    )
    return rows


@cli.command()
@click.option("--examples", type=click.Choice(["paper"]), default="paper", show_default=True)
@click.option("--certify", is_flag=True)
@click.option("--threads", type=int, default=1, show_default=True)
@_guard
def report(examples, certify, threads):
    """Markdown regression report for the worked example claims."""
    rows = _report_rows(certify, threads)
    lines = [
        "| example | expected | computed | match |",
        "|---|---|---|---|",
    ]
    ok = True
    for name, expected, computed, match in rows:
        ok = ok and match
        lines.append(f"| {name} | {expected} | {computed} | {'yes' if match else 'NO'} |")
    click.echo("\n".join(lines))
    if not ok:
        raise ConsistencyError("report mismatch against recorded expectations")


def main():
    cli(standalone_mode=True)


if __name__ == "__main__":
    main()
