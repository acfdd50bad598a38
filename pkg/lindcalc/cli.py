"""Command-line interface.

Every subcommand accepts the shared flags ``--family``, ``--json``,
``--window``, ``--stable-margin``, ``--bound``, ``--lang`` and ``--verbose``,
either before the subcommand name or after it. Labels may start with a dash
(``-|1``); they are never read as options.
Results go to stdout and diagnostics to stderr. Exit codes: 0 success,
1 domain error (bad weight, inadmissible rank, ...), 2 usage error.
"""

from __future__ import annotations

import functools
import logging
import sys
from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass
from typing import IO, Any

import click
from dotenv import load_dotenv

from lindcalc.config import SUPPORTED_LANGUAGES, Settings
from lindcalc.models.cardinal import Cardinality
from lindcalc.models.descriptor import DescriptorKind, DirectSystemDescriptor, SpinorSequence
from lindcalc.models.profile import LoewyProfile
from lindcalc.models.weights import Family, ThetaWeight
from lindcalc.services import (
    branching,
    char_oracle,
    dlim_desc,
    duals_inj,
    report,
    tensor_calc,
    theta_order,
    weights,
)
from lindcalc.services.errors import LindCalcError
from lindcalc.translations.loader import TranslationLoader

logger = logging.getLogger(__name__)

FAMILY_CHOICES = [f.value for f in Family]


class DomainError(click.ClickException):
    """A domain failure reported with a localized title, exit code 1."""

    exit_code = 1

    def __init__(self, message: str, title: str) -> None:
        super().__init__(message)
        self.title = title

    def show(self, file: IO[Any] | None = None) -> None:
        click.echo(f"{self.title}: {self.format_message()}", file=file or sys.stderr)


@dataclass(frozen=True)
class Session:
    """Per-invocation state built from the shared flags."""

    settings: Settings
    family: Family
    as_json: bool

    @property
    def language(self) -> str:
        return self.settings.language

    @property
    def margin(self) -> int:
        return self.settings.stable_margin

    def t(self, key: str, fallback: str = "") -> str:
        return TranslationLoader.get(self.language, f"cli.{key}", fallback or key)

    def weight(self, text: str) -> ThetaWeight:
        return ThetaWeight.parse(self.family, text)

    def emit(self, payload: Any, lines: Iterable[str] | str) -> None:
        if self.as_json:
            click.echo(report.dumps(payload))
        elif isinstance(lines, str):
            click.echo(lines)
        else:
            for line in lines:
                click.echo(line)


def _configure_logging(verbose: bool) -> None:
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
        force=True,
    )


Command = Callable[..., None]
Decorator = Callable[[Command], Command]


def _flag_options(*, with_window: bool = True) -> list[Decorator]:
    options = [
        click.option(
            "--family",
            "-f",
            type=click.Choice(FAMILY_CHOICES, case_sensitive=False),
            default=None,
            help="Algebra family (default: sl).",
        ),
        click.option("--json", "as_json", is_flag=True, help="Emit canonical JSON."),
        click.option(
            "--stable-margin",
            type=click.IntRange(min=0),
            default=None,
            help="Additive constant of the stable rank.",
        ),
        click.option(
            "--bound", type=click.IntRange(min=0), default=None, help="Largest admissible p+q."
        ),
        click.option(
            "--lang",
            type=click.Choice(list(SUPPORTED_LANGUAGES)),
            default=None,
            help="Diagnostics language.",
        ),
        click.option("--verbose", "-v", is_flag=True, help="Debug logging on stderr."),
    ]
    if with_window:
        options.append(
            click.option(
                "--window",
                type=click.IntRange(min=0),
                default=None,
                help="Extra ranks checked by the order test.",
            )
        )
    return options


def _apply(func: Command, options: list[Decorator]) -> Command:
    for option in reversed(options):
        func = option(func)
    return func


def shared_options(*, with_window: bool = True) -> Decorator:
    """Attach the shared flags and turn domain failures into exit code 1.

    A flag given on the subcommand wins over the same flag given before it.
    """

    def decorate(func: Command) -> Command:
        @functools.wraps(func)
        def wrapper(
            family: str | None,
            as_json: bool,
            stable_margin: int | None,
            bound: int | None,
            lang: str | None,
            verbose: bool,
            window: int | None = None,
            **kwargs: Any,
        ) -> None:
            outer: dict[str, Any] = click.get_current_context().find_root().obj or {}

            def pick(name: str, value: Any) -> Any:
                return value if value is not None else outer.get(name)

            _configure_logging(verbose or outer.get("verbose", False))
            try:
                settings = Settings.from_env().override(
                    stable_margin=pick("stable_margin", stable_margin),
                    tpq_bound=pick("bound", bound),
                    window=pick("window", window),
                    language=pick("lang", lang),
                )
            except ValueError as e:
                raise DomainError(str(e), "Error") from None
            chosen = Family.parse(pick("family", family) or Family.SL.value)
            session = Session(settings, chosen, as_json or outer.get("as_json", False))
            try:
                func(session, **kwargs)
            except LindCalcError as e:
                logger.debug("domain error %s", e.code)
                title = TranslationLoader.error_title(settings.language, e.code)
                raise DomainError(str(e), title) from None
            except ValueError as e:
                title = TranslationLoader.error_title(settings.language, "INVALID_WEIGHT")
                raise DomainError(str(e), title) from None

        return _apply(wrapper, _flag_options(with_window=with_window))

    return decorate


class LabelCommand(click.Command):
    """Subcommand whose arguments may start with a dash, as ``-|1`` and ``-|-`` do."""

    ignore_unknown_options = True


class LindCalcGroup(click.Group):
    command_class = LabelCommand


def _store_flags(func: Command) -> Command:
    @functools.wraps(func)
    def wrapper(**flags: Any) -> None:
        click.get_current_context().obj = flags
        func()

    return _apply(wrapper, _flag_options())


@click.group(cls=LindCalcGroup, context_settings={"help_option_names": ["-h", "--help"]})
@click.version_option(package_name="lindcalc")
@_store_flags
def main() -> None:
    """Exact label calculus for tensor modules of sl(∞), o(∞) and sp(∞).

    The shared flags may be given before the subcommand or after it.
    """
    load_dotenv()


def _layer_lines(session: Session, profile: LoewyProfile) -> list[str]:
    lines = [f"{session.t('loewy_length')}: {len(profile)}"]
    for index, layer in enumerate(profile.layers):
        body = ", ".join(f"{w.to_text()} x {m.to_text()}" for w, m in layer.items())
        lines.append(f"{session.t('layer')} {index}: {body}")
    return lines


def _rank_or_stable(session: Session, weight: ThetaWeight, rank: int | None) -> int:
    if rank is not None:
        return rank
    return max(
        char_oracle.stable_rank_for(weight, margin=session.margin),
        char_oracle.minimal_rank(weight),
    )


@main.command()
@click.argument("k", type=click.IntRange(min=0))
@shared_options()
def theta(session: Session, k: int) -> None:
    """List Θ labels of norm at most K."""
    labels = weights.enumerate_theta(session.family, k)
    session.emit(
        report.labels_payload(session.family, labels),
        [f"{w.to_text()}\t{weights.norm(w)}" for w in labels],
    )


@main.command()
@click.argument("weight")
@shared_options()
def norm(session: Session, weight: str) -> None:
    """Number of boxes of WEIGHT."""
    lam = session.weight(weight)
    session.emit(report.label_entry(lam), str(weights.norm(lam)))


@main.command()
@click.argument("weight")
@shared_options()
def star(session: Session, weight: str) -> None:
    """Label of the restricted dual of V_WEIGHT."""
    lam = weights.star(session.weight(weight))
    session.emit(report.label_entry(lam), lam.to_text())


@main.command()
@click.argument("weight")
@click.option(
    "--rank", "-n", type=click.IntRange(min=1), default=None, help="Finite rank (default: stable)."
)
@shared_options()
def dim(session: Session, weight: str, rank: int | None) -> None:
    """Dimension of the truncation of WEIGHT at a finite rank."""
    lam = session.weight(weight)
    w = char_oracle.truncate(lam, _rank_or_stable(session, lam, rank))
    value = char_oracle.dim(w)
    session.emit({**report.ranked_entry(w), "dim": str(value)}, str(value))


@main.command("char")
@click.argument("weight")
@click.option(
    "--rank", "-n", type=click.IntRange(min=1), default=None, help="Finite rank (default: minimal)."
)
@shared_options()
def char_command(session: Session, weight: str, rank: int | None) -> None:
    """Formal character of the truncation of WEIGHT."""
    lam = session.weight(weight)
    w = char_oracle.truncate(lam, rank or char_oracle.minimal_rank(lam))
    character = char_oracle.char(w)
    lines = [
        f"{','.join(str(e) for e in exponent)}\t{mult}"
        for exponent, mult in sorted(character.terms.items(), reverse=True)
    ]
    session.emit(report.character_payload(character), lines)


@main.command()
@click.argument("weight")
@click.option(
    "--rank", "-n", type=click.IntRange(min=2), required=True, help="Rank of the truncation."
)
@shared_options()
def branch(session: Session, weight: str, rank: int) -> None:
    """Restrict the truncation of WEIGHT one rank down."""
    w = char_oracle.truncate(session.weight(weight), rank)
    pieces = branching.branch(w)
    session.emit(
        report.ranked_multiset_payload(session.family, rank - 1, pieces),
        [f"{c.to_text()}\t{m}" for c, m in sorted(pieces.items(), reverse=True)],
    )


@main.command("restrict-mult")
@click.argument("mu")
@click.argument("i", type=click.IntRange(min=1))
@click.argument("lam")
@click.argument("j", type=click.IntRange(min=1))
@shared_options()
def restrict_mult(session: Session, mu: str, i: int, lam: str, j: int) -> None:
    """dim Hom(V_MU at rank I, V_LAM at rank J)."""
    value = branching.restrict_mult(session.weight(mu), i, session.weight(lam), j)
    session.emit({"mult": str(value)}, str(value))


@main.command()
@click.argument("mu")
@click.argument("lam")
@click.option(
    "--dot",
    is_flag=True,
    help="Emit the Hasse diagram below LAM in DOT format; MU is only validated.",
)
@shared_options()
def order(session: Session, mu: str, lam: str, dot: bool) -> None:
    """Whether MU <= LAM.

    With --dot the output is a DOT graph of every label below LAM, so --json is rejected.
    """
    if dot and session.as_json:
        raise click.UsageError("--dot cannot be combined with --json")
    low, high = session.weight(mu), session.weight(lam)
    if dot:
        click.echo(theta_order.hasse_dot(high, session.margin), nl=False)
        return
    verdict = theta_order.leq(low, high, session.margin, session.settings.window)
    text = "true" if verdict else "false"
    session.emit({"mu": low.to_text(), "lambda": high.to_text(), "leq": verdict}, text)


@main.command()
@click.argument("lam")
@click.argument("mu")
@shared_options()
def chain(session: Session, lam: str, mu: str) -> None:
    """Longest chain length from MU up to LAM."""
    high, low = session.weight(lam), session.weight(mu)
    length = theta_order.chain_length(high, low, session.margin)
    session.emit(report.chain_payload(high, low, length), str(length))


@main.command("theta-k")
@click.argument("lam")
@click.argument("k", type=click.IntRange(min=1))
@shared_options()
def theta_k(session: Session, lam: str, k: int) -> None:
    """Labels of the K-th socle layer of the injective hull of LAM."""
    labels = theta_order.theta_k(session.weight(lam), k, session.margin)
    session.emit(report.labels_payload(session.family, labels), [w.to_text() for w in labels])


@main.command()
@click.argument("mu")
@click.argument("lam")
@shared_options()
def ext1(session: Session, mu: str, lam: str) -> None:
    """Ext¹(V_MU, V_LAM) as a cardinal."""
    value = theta_order.ext1_dim(session.weight(mu), session.weight(lam), session.margin)
    session.emit(report.cardinal_payload(value), value.to_text())


@main.command()
@click.argument("p", type=click.IntRange(min=0))
@click.argument("q", type=click.IntRange(min=0))
@shared_options()
def tpq(session: Session, p: int, q: int) -> None:
    """Composition factors and socle layers of T^{P,Q}."""
    bound = session.settings.tpq_bound
    factors = tensor_calc.tpq_factors(session.family, p, q, bound, session.margin)
    layers = {w: (p + q - weights.norm(w)) // 2 for w, _ in factors}
    lines = [f"{session.t('weight')}\t{session.t('mult')}\t{session.t('layer')}"]
    lines += [f"{w.to_text()}\t{m}\t{layers[w]}" for w, m in factors]
    session.emit(report.factors_payload(session.family, factors, layers), lines)


@main.command()
@click.argument("lam")
@click.argument("mu")
@shared_options()
def tensor(session: Session, lam: str, mu: str) -> None:
    """Stable composition factors of V_LAM ⊗ V_MU."""
    factors = tensor_calc.tensor_factors(
        session.weight(lam), session.weight(mu), session.settings.tpq_bound, session.margin
    )
    session.emit(
        report.factors_payload(session.family, factors),
        [f"{w.to_text()}\t{m}" for w, m in factors],
    )


@main.command("inj-profile")
@click.argument("lam")
@shared_options()
def inj_profile(session: Session, lam: str) -> None:
    """Socle layers of the injective hull of V_LAM."""
    profile = duals_inj.inj_profile(session.weight(lam), session.margin)
    session.emit(report.profile_payload(profile), _layer_lines(session, profile))


@main.command()
@click.argument("lam", required=False)
@click.option(
    "--tpq",
    "tpq_degrees",
    type=(click.IntRange(min=0), click.IntRange(min=0)),
    default=None,
    help="Use T^{P,Q} instead of an injective hull.",
)
@shared_options()
def loewy(session: Session, lam: str | None, tpq_degrees: tuple[int, int] | None) -> None:
    """Loewy length of I_LAM, or of T^{P,Q} with --tpq."""
    if tpq_degrees is not None:
        p, q = tpq_degrees
        value = tensor_calc.tpq_loewy(
            session.family, p, q, session.settings.tpq_bound, session.margin
        )
    elif lam is not None:
        value = duals_inj.loewy_length(duals_inj.inj_profile(session.weight(lam), session.margin))
    else:
        raise click.UsageError("give a label or --tpq P Q")
    session.emit({"loewy_length": str(value)}, str(value))


def _parse_degrees(text: str) -> tuple[int, int]:
    p_text, sep, q_text = text.partition(",")
    if not sep:
        raise ValueError(f"tensor degrees are written 'p,q', got '{text}'")
    return int(p_text), int(q_text)


@main.command("closure-check")
@click.option("--simple", "simples", multiple=True, help="A simple module V_λ (repeatable).")
@click.option("--inj", "hulls", multiple=True, help="An injective hull I_λ (repeatable).")
@click.option("--tpq", "tensors", multiple=True, help="T^{p,q} given as p,q (repeatable).")
@click.option("--infinite", is_flag=True, help="Check an infinite family instead.")
@click.option(
    "--level-bound",
    type=click.IntRange(min=0),
    default=None,
    help="Uniform lind level of the infinite family.",
)
@shared_options()
def closure_check(
    session: Session,
    simples: Sequence[str],
    hulls: Sequence[str],
    tensors: Sequence[str],
    infinite: bool,
    level_bound: int | None,
) -> None:
    """Whether a family of modules stays inside one lind level."""
    if infinite:
        verdict = duals_inj.family_closure_check(
            duals_inj.InfiniteFamily(session.family, level_bound)
        )
    else:
        profiles = [
            LoewyProfile(session.family, ({session.weight(s): Cardinality.finite(1)},))
            for s in simples
        ]
        profiles += [duals_inj.inj_profile(session.weight(h), session.margin) for h in hulls]
        for text in tensors:
            p, q = _parse_degrees(text)
            profiles.append(
                tensor_calc.tpq_profile(
                    session.family, p, q, session.settings.tpq_bound, session.margin
                )
            )
        verdict = duals_inj.family_closure_check(profiles)
    text = (
        f"{session.t('closed')} ({session.t('level')} {verdict.level})"
        if verdict.closed
        else session.t("not_closed")
    )
    session.emit(verdict.to_dict(), text)


def _descriptor(
    session: Session, kind: DescriptorKind, label: str | None, t: str | None
) -> DirectSystemDescriptor:
    if kind is DescriptorKind.SYMPOWER:
        return DirectSystemDescriptor.sympower()
    if kind is DescriptorKind.SPINOR:
        return DirectSystemDescriptor.spinors(SpinorSequence.parse(t or "-:1"))
    if kind is DescriptorKind.STABLE:
        if label is None:
            raise click.UsageError("--kind stable needs --label")
        return DirectSystemDescriptor.stable(session.weight(label))
    raise click.UsageError("explicit descriptors are available from the Python API only")


KIND_CHOICES = [k.value for k in DescriptorKind if k is not DescriptorKind.EXPLICIT]


@main.command("dlim-verdict")
@click.option("--kind", type=click.Choice(KIND_CHOICES), required=True, help="Descriptor kind.")
@click.option(
    "--window", "window_text", default="3..8", show_default=True, help="Ranks a..b to judge."
)
@click.option("--label", default=None, help="Stable label (for --kind stable).")
@click.option("--t", "t", default=None, help="Spinor choices prefix:tail (for --kind spinor).")
@shared_options(with_window=False)
def dlim_verdict(
    session: Session, kind: str, window_text: str, label: str | None, t: str | None
) -> None:
    """Semi-decide whether the dual of a direct limit is integrable."""
    desc = _descriptor(session, DescriptorKind.parse(kind), label, t)
    window = dlim_desc.parse_window(window_text)
    verdict = dlim_desc.dual_integrable_verdict(desc, window)
    session.emit(report.verdict_payload(desc, window, verdict), verdict.value)


@main.command("types")
@click.option("--kind", type=click.Choice(KIND_CHOICES), required=True, help="Descriptor kind.")
@click.option("--label", default=None, help="Stable label (for --kind stable).")
@click.option("--t", "t", default=None, help="Spinor choices prefix:tail (for --kind spinor).")
@click.argument("i", type=click.IntRange(min=1))
@click.argument("j", type=click.IntRange(min=2))
@shared_options(with_window=False)
def types_command(
    session: Session, kind: str, label: str | None, t: str | None, i: int, j: int
) -> None:
    """Distinct rank-I types inside the stage at rank J."""
    desc = _descriptor(session, DescriptorKind.parse(kind), label, t)
    found = dlim_desc.types_at(desc, i, j)
    session.emit(report.types_payload(desc, i, j, found), sorted(str(x) for x in found))


@main.command("spinor-equiv")
@click.option("--t", "t", required=True, help="Choices prefix:tail.")
@click.option("--tprime", required=True, help="Choices prefix:tail.")
@shared_options(with_window=False)
def spinor_equiv(session: Session, t: str, tprime: str) -> None:
    """Whether two spinor limits are isomorphic."""
    verdict = dlim_desc.spinor_equiv(SpinorSequence.parse(t), SpinorSequence.parse(tprime))
    session.emit({"equivalent": verdict}, "true" if verdict else "false")


@main.command("mult-one")
@click.argument("lam")
@click.option("--ranks", default=None, help="Ranks a..b to check (default: lowest admissible..7).")
@shared_options(with_window=False)
def mult_one(session: Session, lam: str, ranks: str | None) -> None:
    """Whether V_LAM occurs once in each larger truncation."""
    label = session.weight(lam)
    if ranks is None:
        floor = char_oracle.minimal_rank(label)
        ranks = f"{floor}..{max(floor + 1, 7)}"
    pairs = dlim_desc.parse_window(ranks)
    checked = sorted({r for pair in pairs for r in pair})
    verdict = dlim_desc.mult_one_check(label, checked)
    session.emit({"mult_one": verdict}, "true" if verdict else "false")


CARD_OPERATIONS = {
    "add": duals_inj.card_add,
    "mul": duals_inj.card_mul,
}


@main.command()
@click.argument("operation", type=click.Choice(["add", "mul", "power"]))
@click.argument("a")
@click.argument("b", required=False)
@shared_options(with_window=False)
def card(session: Session, operation: str, a: str, b: str | None) -> None:
    """Cardinal arithmetic: add A B, mul A B, power A."""
    left = Cardinality.parse(a)
    if operation == "power":
        value = duals_inj.card_power(left)
    elif b is None:
        raise click.UsageError(f"'{operation}' needs two operands")
    else:
        value = CARD_OPERATIONS[operation](left, Cardinality.parse(b))
    session.emit(report.cardinal_payload(value), value.to_text())


NATURAL_KINDS = ["dual", "conatural-dual", "double-dual", "product", "sum-hull"]


@main.command("natural-profile")
@click.option("--kind", type=click.Choice(NATURAL_KINDS), required=True, help="Which module.")
@click.option(
    "--card", "card_text", default="beth:0", show_default=True, help="Index set cardinality."
)
@shared_options(with_window=False)
def natural_profile(session: Session, kind: str, card_text: str) -> None:
    """Loewy profiles of duals, products and hulls built from the natural module."""
    if kind == "dual":
        profile = duals_inj.natural_dual_profile(session.family)
    elif kind == "conatural-dual":
        profile = duals_inj.natural_dual_profile(session.family, conatural=True)
    elif kind == "double-dual":
        profile = duals_inj.natural_double_dual_profile(session.family)
    elif kind == "product":
        profile = duals_inj.natural_product_profile(session.family, Cardinality.parse(card_text))
    else:
        profile = duals_inj.natural_sum_hull_profile(session.family, Cardinality.parse(card_text))
    session.emit(report.profile_payload(profile), _layer_lines(session, profile))


@main.command("single-block")
@click.argument("k", type=click.IntRange(min=0))
@shared_options()
def single_block(session: Session, k: int) -> None:
    """Whether every nontrivial label of norm <= K extends the trivial module."""
    verdict = theta_order.is_single_block(session.family, k, session.margin)
    session.emit({"single_block": verdict}, "true" if verdict else "false")


def run(argv: Sequence[str] | None = None) -> int:
    """Run the CLI and return its exit code instead of exiting."""
    try:
        args = list(argv) if argv is not None else None
        result = main.main(args=args, prog_name="lindcalc", standalone_mode=False)
    except click.ClickException as e:
        e.show()
        return e.exit_code
    except click.exceptions.Abort:
        click.echo("Aborted!", err=True)
        return 1
    return result if isinstance(result, int) else 0