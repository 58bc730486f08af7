"""
JINF Command Line

This module defines the `jinf` click command group. Sets are given in the
set expression language, permutations and automorphisms in the JSON spec
format (inline, or `@path` to read a file).

Exit codes: 0 on success, 1 when a check fails or an operation raises a
JINFException, 2 on usage and parse errors (the grammar is printed).
With the global --json flag every result is printed as a CommandResponse.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from pathlib import Path
from typing import Any, List, Optional, Sequence, Tuple

import click

from jinf.auto.automorphisms import (
    Automorphism,
    NonRegularityCertificate,
    apply_auto,
    build_example_one,
    verify_certificate,
)
from jinf.auto.order import (
    check_order_preserving_on_samples,
    order_sigma,
    reconstruct_order_automorphism,
)
from jinf.auto.reconstruction import (
    ExactifySearch,
    Inconclusive,
    classify_case,
    exactify_permutation,
    reconstruct_component_map,
    verify_restriction,
)
from jinf.cli.expressions import GRAMMAR, parse_set
from jinf.cli.specs import AUTO_FORMAT, PERM_FORMAT, parse_auto_spec, render_auto_spec
from jinf.cli.suite import MUTANTS, SuiteConfig, run_suite, selected_checks
from jinf.core.config import settings
from jinf.core.setalg import classify_orbit, member
from jinf.graph.johnson import (
    NotClique,
    PairAmbiguous,
    Star,
    Top,
    Vertex,
    adjacent_johnson,
    as_vertex,
    classify_clique,
    distance_johnson,
    geodesic,
    random_vertex,
    same_component,
)
from jinf.graph.kneser import adjacent_kneser, kneser_distance, kneser_separation_witness
from jinf.oracle.automorphism import (
    aut_group_order,
    complement_map,
    induced_automorphism,
    induced_permutation_finite,
)
from jinf.oracle.finite import (
    FiniteGraph,
    bfs_distance,
    build_johnson_finite,
    build_kneser_finite,
    build_truncated_component,
    export_adjacency,
    maximal_cliques,
)
from jinf.utils.exceptions import JINFException, NoChecksSelected, ParseError
from jinf.utils.logger import StructuredLogger, setup_logging
from jinf.utils.responses import CommandResponse

EXIT_FAILURE = 1
EXIT_USAGE = 2


@dataclass
class CliState:
    as_json: bool = False


def _state() -> CliState:
    ctx = click.get_current_context()
    return ctx.find_object(CliState) or CliState()


def emit(command: str, message: str, data: Any = None) -> None:
    """Print a result as text, or as a CommandResponse with --json."""
    if _state().as_json:
        click.echo(CommandResponse.success_response(command, message, data).model_dump_json())
    else:
        click.echo(message)


def fail(command: str, message: str, data: Any = None) -> None:
    """Print a failed check and exit 1."""
    if _state().as_json:
        response = CommandResponse.error_response(command, message, "CHECK_FAILED", data)
        click.echo(response.model_dump_json())
    else:
        click.echo(message)
    click.get_current_context().exit(EXIT_FAILURE)


class JinfGroup(click.Group):
    """Top-level group that turns JINFException into exit codes."""

    def invoke(self, ctx: click.Context) -> Any:
        try:
            return super().invoke(ctx)
        except click.UsageError:
            click.echo(GRAMMAR, err=True)
            raise
        except JINFException as exc:
            state = ctx.find_object(CliState) or CliState()
            command = ctx.invoked_subcommand or ""
            if state.as_json:
                response = CommandResponse.error_response(command, exc.message, exc.error_code, exc.details)
                click.echo(response.model_dump_json())
            else:
                click.echo(f"error: {exc.error_code}: {exc.message}", err=True)
                if exc.details:
                    click.echo(json.dumps(exc.details, default=str), err=True)
            StructuredLogger.info("Command failed", command=command, error_code=exc.error_code)
            if isinstance(exc, ParseError):
                click.echo(GRAMMAR, err=True)
                ctx.exit(EXIT_USAGE)
            if isinstance(exc, NoChecksSelected):
                ctx.exit(EXIT_USAGE)
            ctx.exit(EXIT_FAILURE)


def _read(text: str) -> str:
    if text.startswith("@"):
        return Path(text[1:]).read_text(encoding="utf-8")
    return text


def _vertex(text: str) -> Vertex:
    return as_vertex(parse_set(text))


def _auto(text: str) -> Automorphism:
    return parse_auto_spec(_read(text))


def _render_vertices(vertices: Sequence[Vertex]) -> List[str]:
    return [v.render() for v in vertices]


@click.group(cls=JinfGroup)
@click.option("--json", "as_json", is_flag=True, help="Print results as JSON responses.")
@click.option("--log-file", type=click.Path(path_type=Path), default=None, help="Also log to this file.")
@click.version_option(settings.app_version, prog_name=settings.app_name)
@click.pass_context
def cli(ctx: click.Context, as_json: bool, log_file: Optional[Path]) -> None:
    """Exact toolkit for the infinite Johnson and Kneser graphs."""
    if log_file is not None:
        setup_logging(log_file)
    ctx.obj = CliState(as_json=as_json)


# ---------------------------------------------------------------------------
# Sets
# ---------------------------------------------------------------------------

@cli.group("set")
def set_group() -> None:
    """Evaluate and classify set expressions."""


@set_group.command("eval")
@click.argument("expr")
def set_eval(expr: str) -> None:
    """Canonical rendering of EXPR."""
    s = parse_set(expr)
    emit("set eval", s.render(), {"set": s.render()})


@set_group.command("canon")
@click.argument("expr")
def set_canon(expr: str) -> None:
    """Canonical prefix and period bits of EXPR."""
    s = parse_set(expr)
    prefix = "".join("1" if b else "0" for b in s.prefix)
    period = "".join("1" if b else "0" for b in s.period)
    data = {"prefix_len": s.prefix_len, "prefix": prefix, "period_len": s.period_len, "period": period}
    emit("set canon", f"L={s.prefix_len} prefix={prefix} p={s.period_len} period={period}", data)


@set_group.command("classify")
@click.argument("expr")
def set_classify(expr: str) -> None:
    """Orbit type of EXPR (FiniteOfSize, CofiniteOfCodim or Balanced)."""
    orbit = classify_orbit(parse_set(expr))
    emit("set classify", str(orbit), {"orbit": str(orbit)})


@set_group.command("member")
@click.argument("expr")
@click.argument("n", type=int)
def set_member(expr: str, n: int) -> None:
    """Whether N belongs to EXPR."""
    result = member(parse_set(expr), n)
    emit("set member", f"member: {str(result).lower()}", {"member": result})


# ---------------------------------------------------------------------------
# J∞
# ---------------------------------------------------------------------------

@cli.command("adj")
@click.option("--x", "x_text", required=True, help="Vertex X.")
@click.option("--y", "y_text", required=True, help="Vertex Y.")
def adj(x_text: str, y_text: str) -> None:
    """Johnson adjacency of X and Y."""
    result = adjacent_johnson(_vertex(x_text), _vertex(y_text))
    emit("adj", f"adjacent: {str(result).lower()}", {"adjacent": result})


@cli.command("dist")
@click.option("--x", "x_text", required=True)
@click.option("--y", "y_text", required=True)
@click.option("--path", "show_path", is_flag=True, help="Also print a geodesic.")
def dist(x_text: str, y_text: str, show_path: bool) -> None:
    """Distance of X and Y inside their component."""
    x, y = _vertex(x_text), _vertex(y_text)
    d = distance_johnson(x, y)
    data = {"distance": d}
    lines = [str(d)]
    if show_path:
        path = _render_vertices(geodesic(x, y))
        data["path"] = path
        lines.extend(path)
    emit("dist", "\n".join(lines), data)


@cli.command("component")
@click.option("--x", "x_text", required=True)
@click.option("--y", "y_text", required=True)
def component(x_text: str, y_text: str) -> None:
    """Whether X and Y lie in the same component."""
    result = same_component(_vertex(x_text), _vertex(y_text))
    emit("component", f"same component: {str(result).lower()}", {"same_component": result})


@cli.command("clique")
@click.option("--v", "vertices", multiple=True, required=True, help="A member vertex (repeatable).")
def clique(vertices: Tuple[str, ...]) -> None:
    """Classify the given vertices as part of a star or a top."""
    kind = classify_clique([_vertex(v) for v in vertices])
    if isinstance(kind, Star):
        emit("clique", f"star {kind.center.render()}", {"kind": "star", "center": kind.center.render()})
    elif isinstance(kind, Top):
        emit("clique", f"top {kind.carrier.render()}", {"kind": "top", "carrier": kind.carrier.render()})
    elif isinstance(kind, PairAmbiguous):
        data = {"kind": "pair", "star": kind.star_center.render(), "top": kind.top_carrier.render()}
        emit("clique", f"pair star {data['star']} top {data['top']}", data)
    else:
        assert isinstance(kind, NotClique)
        data = {"kind": "not_clique", "first": kind.first.render(), "second": kind.second.render()}
        fail("clique", f"not a clique: {data['first']} {data['second']}", data)


# ---------------------------------------------------------------------------
# K∞
# ---------------------------------------------------------------------------

@cli.group("kneser")
def kneser_group() -> None:
    """Kneser adjacency, distance and separation witnesses."""


@kneser_group.command("adj")
@click.option("--x", "x_text", required=True)
@click.option("--y", "y_text", required=True)
def kneser_adj(x_text: str, y_text: str) -> None:
    result = adjacent_kneser(_vertex(x_text), _vertex(y_text))
    emit("kneser adj", f"adjacent: {str(result).lower()}", {"adjacent": result})


@kneser_group.command("dist")
@click.option("--x", "x_text", required=True)
@click.option("--y", "y_text", required=True)
def kneser_dist(x_text: str, y_text: str) -> None:
    """Distance (0..3) with a shortest path."""
    path = kneser_distance(_vertex(x_text), _vertex(y_text))
    vertices = _render_vertices(path.vertices)
    emit("kneser dist", "\n".join([str(path.distance), *vertices]),
         {"distance": path.distance, "path": vertices})


@kneser_group.command("witness")
@click.option("--x", "x_text", required=True)
@click.option("--y", "y_text", required=True)
def kneser_witness(x_text: str, y_text: str) -> None:
    """A neighbour of Y that is not a neighbour of X (needs X ⊄ Y)."""
    z = kneser_separation_witness(_vertex(x_text), _vertex(y_text))
    emit("kneser witness", z.render(), {"witness": z.render()})


# ---------------------------------------------------------------------------
# Automorphisms
# ---------------------------------------------------------------------------

@cli.group("auto")
def auto_group() -> None:
    """Apply, classify and reconstruct automorphisms."""


auto_group.help = f"Apply, classify and reconstruct automorphisms.\n\nSpec format:\n\n{AUTO_FORMAT}\n\n{PERM_FORMAT}"


@auto_group.command("apply")
@click.option("--spec", required=True, help="Automorphism spec (JSON or @file).")
@click.option("--x", "x_text", required=True)
def auto_apply(spec: str, x_text: str) -> None:
    image = apply_auto(_auto(spec), _vertex(x_text))
    emit("auto apply", image.render(), {"image": image.render()})


@auto_group.command("classify")
@click.option("--spec", required=True)
@click.option("--a", "a_text", required=True, help="Base vertex.")
def auto_classify(spec: str, a_text: str) -> None:
    """CaseA (stars to stars) or CaseB (stars to tops) at A."""
    case = classify_case(_auto(spec), _vertex(a_text))
    emit("auto classify", case.value, {"case": case.value})


@auto_group.command("reconstruct")
@click.option("--spec", required=True)
@click.option("--a", "a_text", required=True)
@click.option("--range", "upto", type=int, default=16, show_default=True, help="Print sigma on 1..RANGE.")
@click.option("--exact", is_flag=True, help="Also search for a finite description.")
@click.option("--verify", is_flag=True, help="Check the restriction on A.")
def auto_reconstruct(spec: str, a_text: str, upto: int, exact: bool, verify: bool) -> None:
    """Permutation induced on the component of A."""
    f, a = _auto(spec), _vertex(a_text)
    sigma, flip = reconstruct_component_map(f, a)
    values = sigma.probe(range(1, upto + 1))
    data = {"flip": flip, "sigma": values}
    lines = [f"flip: {str(flip).lower()}", "sigma: " + " ".join(str(v) for v in values)]
    if exact:
        result = exactify_permutation(sigma, ExactifySearch())
        if isinstance(result, Inconclusive):
            data["exact"] = None
            lines.append(f"exact: inconclusive ({result.reason})")
        else:
            data["exact"] = result.to_spec()
            lines.append("exact: " + json.dumps(result.to_spec(), sort_keys=True))
    if verify:
        report = verify_restriction(f, sigma, flip, [a])
        data["restriction"] = report.model_dump()
        if not report.passed:
            fail("auto reconstruct", "\n".join(lines + ["restriction: failed"]), data)
        lines.append("restriction: ok")
    emit("auto reconstruct", "\n".join(lines), data)


@auto_group.command("example1")
@click.option("--a", "a_text", required=True)
@click.option("--b", "b_text", required=True, help="Another vertex of J(A).")
def auto_example1(a_text: str, b_text: str) -> None:
    """Non-regular automorphism moving A to B, with its certificate."""
    f, certificate = build_example_one(_vertex(a_text), _vertex(b_text))
    data = {"spec": f.to_spec(), "certificate": certificate.to_dict()}
    lines = [f"spec: {render_auto_spec(f)}", "certificate: " + json.dumps(certificate.to_dict(), sort_keys=True)]
    emit("auto example1", "\n".join(lines), data)


@auto_group.command("verify-cert")
@click.option("--spec", required=True)
@click.option("--cert", "cert_text", required=True, help="Certificate JSON (a, y, f_a, f_y) or @file.")
def auto_verify_cert(spec: str, cert_text: str) -> None:
    """Recheck a non-regularity certificate; exit 1 when it fails."""
    try:
        raw = json.loads(_read(cert_text))
    except json.JSONDecodeError as exc:
        raise ParseError(exc.lineno, exc.colno, f"certificate JSON ({exc.msg})") from exc
    try:
        certificate = NonRegularityCertificate(**{key: _vertex(raw[key]) for key in ("a", "y", "f_a", "f_y")})
    except (KeyError, TypeError) as exc:
        raise ParseError(1, 1, "certificate with fields a, y, f_a, f_y") from exc
    result = verify_certificate(_auto(spec), certificate)
    if not result:
        fail("auto verify-cert", "false", {"valid": False})
    emit("auto verify-cert", "true", {"valid": True})


# ---------------------------------------------------------------------------
# Order automorphisms
# ---------------------------------------------------------------------------

@cli.group("order")
def order_group() -> None:
    """Order automorphisms of the balanced sets under inclusion."""


@order_group.command("sigma")
@click.option("--spec", required=True)
@click.option("--n", "n", type=int, required=True)
def order_sigma_command(spec: str, n: int) -> None:
    value = order_sigma(_auto(spec), n)
    emit("order sigma", str(value), {"n": n, "sigma": value})


@order_group.command("reconstruct")
@click.option("--spec", required=True)
@click.option("--window", type=int, default=32, show_default=True)
def order_reconstruct(spec: str, window: int) -> None:
    """Permutation of an order automorphism on 1..WINDOW (either kind)."""
    sigma, reversing = reconstruct_order_automorphism(_auto(spec), window)
    values = sigma.probe(range(1, window + 1))
    emit("order reconstruct",
         f"reversing: {str(reversing).lower()}\nsigma: " + " ".join(str(v) for v in values),
         {"reversing": reversing, "sigma": values})


def sample_inclusion_pairs(rng: random.Random, count: int) -> List[Tuple[Vertex, Vertex]]:
    """Random pairs, half of them nested (Y = X minus a small element)."""
    pairs = []
    for i in range(count):
        x = random_vertex(rng)
        if i % 2 == 0:
            pairs.append((x.remove(rng.choice(x.set.first(6))), x))
        else:
            pairs.append((x, random_vertex(rng)))
    return pairs


@order_group.command("check")
@click.option("--spec", required=True)
@click.option("--samples", type=int, default=50, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--x", "x_text", default=None, help="Also check this pair (with --y).")
@click.option("--y", "y_text", default=None)
def order_check(spec: str, samples: int, seed: int, x_text: Optional[str], y_text: Optional[str]) -> None:
    """Look for an inclusion violation on sampled pairs."""
    pairs = sample_inclusion_pairs(random.Random(seed), samples)
    if x_text and y_text:
        pairs.insert(0, (_vertex(x_text), _vertex(y_text)))
    verdict = check_order_preserving_on_samples(_auto(spec), pairs)
    if not verdict.passed:
        fail("order check", f"violation: {verdict.first.render()} {verdict.second.render()}", verdict.to_dict())
    emit("order check", "no violation", verdict.to_dict())


# ---------------------------------------------------------------------------
# Finite oracle
# ---------------------------------------------------------------------------

@cli.group("oracle")
def oracle_group() -> None:
    """Finite ground-truth graphs."""


def _family_graph(family: str, n: int, k: int) -> FiniteGraph:
    return build_johnson_finite(n, k) if family == "johnson" else build_kneser_finite(n, k)


def _summary(command: str, graph: FiniteGraph, export: bool) -> None:
    data = {"family": str(graph.family), "vertices": graph.order, "edges": graph.edge_count,
            "degenerate": graph.degenerate}
    lines = [f"{graph.family}: {graph.order} vertices, {graph.edge_count} edges"]
    if export:
        data["adjacency"] = export_adjacency(graph)
        lines.append(data["adjacency"])
    emit(command, "\n".join(lines), data)


def _integers(text: str) -> List[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError as exc:
        raise click.BadParameter(f"expected comma separated integers, got {text!r}") from exc


def _label(text: str) -> Tuple[int, ...]:
    return tuple(sorted(_integers(text)))


family_option = click.option("--family", type=click.Choice(["johnson", "kneser"]), default="johnson", show_default=True)


@oracle_group.command("johnson")
@click.option("--n", type=int, required=True)
@click.option("--k", type=int, required=True)
@click.option("--export", is_flag=True, help="Print the adjacency list.")
def oracle_johnson(n: int, k: int, export: bool) -> None:
    _summary("oracle johnson", build_johnson_finite(n, k), export)


@oracle_group.command("kneser")
@click.option("--n", type=int, required=True)
@click.option("--k", type=int, required=True)
@click.option("--export", is_flag=True)
def oracle_kneser(n: int, k: int, export: bool) -> None:
    _summary("oracle kneser", build_kneser_finite(n, k), export)


@oracle_group.command("truncate")
@click.option("--a", "a_text", required=True)
@click.option("--window", type=int, required=True)
@click.option("--radius", type=int, required=True)
@click.option("--export", is_flag=True)
def oracle_truncate(a_text: str, window: int, radius: int, export: bool) -> None:
    """Ball of RADIUS around A with changes inside [1, WINDOW]."""
    _summary("oracle truncate", build_truncated_component(_vertex(a_text), window, radius), export)


@oracle_group.command("bfs")
@family_option
@click.option("--n", type=int, required=True)
@click.option("--k", type=int, required=True)
@click.option("--u", "u_text", required=True, help="Vertex label, e.g. 1,2")
@click.option("--v", "v_text", required=True)
def oracle_bfs(family: str, n: int, k: int, u_text: str, v_text: str) -> None:
    d = bfs_distance(_family_graph(family, n, k), _label(u_text), _label(v_text))
    emit("oracle bfs", "unreachable" if d is None else str(d), {"distance": d})


@oracle_group.command("aut-order")
@family_option
@click.option("--n", type=int, required=True)
@click.option("--k", type=int, required=True)
def oracle_aut_order(family: str, n: int, k: int) -> None:
    """Number of automorphisms, by backtracking."""
    count = aut_group_order(_family_graph(family, n, k))
    emit("oracle aut-order", str(count), {"order": count})


@oracle_group.command("cliques")
@click.option("--n", type=int, required=True)
@click.option("--k", type=int, required=True)
def oracle_cliques(n: int, k: int) -> None:
    """Maximal cliques of J(n, k), labelled star or top."""
    cliques = maximal_cliques(build_johnson_finite(n, k))
    lines = [
        f"{c.kind.value} {list(c.anchor)}: " + " ".join(str(list(m)) for m in c.members)
        for c in cliques
    ]
    data = [{"kind": c.kind.value, "anchor": list(c.anchor), "members": [list(m) for m in c.members]}
            for c in cliques]
    emit("oracle cliques", "\n".join(lines), data)


@oracle_group.command("induced-perm")
@click.option("--n", type=int, required=True)
@click.option("--k", type=int, required=True)
@click.option("--perm", "perm_text", default=None, help="Images of 1..n, e.g. 2,3,4,5,1 (default identity).")
@click.option("--complement", is_flag=True, help="Compose with the complement map (n = 2k).")
def oracle_induced_perm(n: int, k: int, perm_text: Optional[str], complement: bool) -> None:
    """Recover the ground permutation behind an automorphism of J(n, k)."""
    graph = build_johnson_finite(n, k)
    images = _integers(perm_text) if perm_text else list(range(1, n + 1))
    phi = induced_automorphism(graph, images)
    if complement:
        star = complement_map(graph)
        phi = {x: phi[star[x]] for x in graph.labels}
    result = induced_permutation_finite(graph, phi)
    data = {"permutation": list(result.permutation), "via_complement": result.via_complement}
    text = ",".join(str(p) for p in result.permutation)
    if result.via_complement:
        text += "\nnot induced by a permutation; permutation shown induces phi composed with the complement"
    emit("oracle induced-perm", text, data)


# ---------------------------------------------------------------------------
# Suite
# ---------------------------------------------------------------------------

@cli.group("suite")
def suite_group() -> None:
    """Verification suite."""


@suite_group.command("run")
@click.option("--filter", "name_filter", default=None, help="Only checks whose name contains this text or that carry it as a tag.")
@click.option("--seed", type=int, default=settings.suite_seed, show_default=True)
@click.option("--workers", type=int, default=settings.suite_workers, show_default=True)
@click.option("--json", "as_json", is_flag=True, help="Print the report as JSON.")
@click.option("--output", type=click.Path(path_type=Path), default=None, help="Write the JSON report here.")
@click.option("--mutant", type=click.Choice(MUTANTS), default=None, help="Inject a deliberate defect.")
def suite_run(
    name_filter: Optional[str],
    seed: int,
    workers: int,
    as_json: bool,
    output: Optional[Path],
    mutant: Optional[str],
) -> None:
    """Run the registered checks; exit 1 if any check does not pass."""
    report = run_suite(SuiteConfig(seed=seed, filter=name_filter, workers=workers, mutant=mutant))
    if output is not None:
        output.parent.mkdir(parents=True, exist_ok=True)
        output.write_text(report.model_dump_json(indent=2), encoding="utf-8")
    if as_json or _state().as_json:
        click.echo(report.model_dump_json(indent=2))
    else:
        click.echo(report.to_text())
    if not report.ok:
        click.get_current_context().exit(EXIT_FAILURE)


@suite_group.command("list")
@click.option("--filter", "name_filter", default=None)
def suite_list(name_filter: Optional[str]) -> None:
    """Names of the registered checks."""
    names = selected_checks(name_filter)
    emit("suite list", "\n".join(names), names)
