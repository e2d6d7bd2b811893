"""Command-line entry point: ``gjlogic <command> [options]``.

Exit status: 0 success or accept, 1 reject or counterexample, 2 usage, parse
or format errors, 3 undecided evidence.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import logging
import sys
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence

from gjlogic.algebra import parse_truth_value
from gjlogic.calculus.checker import check_proof
from gjlogic.calculus.constant_spec import ConstantSpec
from gjlogic.calculus.lifting import internalize, lift
from gjlogic.calculus.projection import project_proof
from gjlogic.calculus.proof import CalculusId, Proof
from gjlogic.calculus.proof_file import cs_reference_of, load_cs, load_proof, write_proof
from gjlogic.calculus.schemes import MODAL_COUNTERPART
from gjlogic.config import GJLogicSettings, load_settings
from gjlogic.errors import (
    DemonstrationError,
    GJLogicError,
    UndecidedEvidenceError,
)
from gjlogic.models.classes import check_cs_respect, check_model_class
from gjlogic.models.evaluation import evaluate, evaluate_star
from gjlogic.models.evidence import Model, ModelClass, XRooted
from gjlogic.models.model_file import load_model, load_oracle
from gjlogic.models.oracle import TheoremhoodOracle, default_oracle
from gjlogic.models.sampling import sample_universe
from gjlogic.models.transform import ShiftDirection
from gjlogic.realization.demonstrations import (
    Demonstration,
    demo_crisp_recovery,
    demo_z_failure_no_factivity,
    demo_z_failure_with_factivity,
)
from gjlogic.realization.enumeration import enumerate_realizations
from gjlogic.realization.report import (
    demo_theorem_gap,
    recheck_report,
    render_demonstration,
    render_report,
)
from gjlogic.syntax.ast import Formula, JustTerm
from gjlogic.syntax.parser import parse_formula, parse_jformula, parse_mformula, parse_term
from gjlogic.syntax.printer import format_formula, format_term
from gjlogic.syntax.projection import check_realization, forgetful_projection

logger = logging.getLogger(__name__)

PREFIX = "[gjlogic]"

DEMOS = ("z-no-factivity", "z-with-factivity", "crisp-to-one", "crisp-to-zero", "gap", "recheck")


class _Usage(Exception):
    """Bad flag combination detected after argparse has accepted the command line."""


def _error(message: str) -> None:
    print(f"{PREFIX} {message}", file=sys.stderr)


def _emit(args: argparse.Namespace, text: str, data: dict) -> None:
    if args.format == "structured":
        print(json.dumps(data, indent=2, sort_keys=True))
    else:
        print(text)


def _formula(args: argparse.Namespace, parser: Callable[[str], Formula] = parse_formula) -> Formula:
    if args.formula is not None:
        return parser(args.formula)
    if getattr(args, "formula_file", None) is not None:
        return parser(Path(args.formula_file).read_text(encoding="utf-8").strip())
    raise _Usage("--formula or --formula-file is required")


def _require(args: argparse.Namespace, name: str) -> str:
    value = getattr(args, name, None)
    if value is None:
        raise _Usage(f"--{name.replace('_', '-')} is required")
    return value


def _settings(args: argparse.Namespace) -> GJLogicSettings:
    settings = load_settings()
    overrides: Dict[str, int] = {}
    if getattr(args, "seed", None) is not None:
        overrides["seed"] = args.seed
    if getattr(args, "universe_size", None) is not None:
        overrides["universe_size"] = args.universe_size
    if getattr(args, "depth", None) is not None:
        overrides["prover_depth"] = args.depth
    return dataclasses.replace(settings, **overrides)


def _oracle_factory(args: argparse.Namespace) -> Callable[[str], TheoremhoodOracle]:
    settings = _settings(args)

    def factory(logic: str) -> TheoremhoodOracle:
        if getattr(args, "oracle", None) is not None:
            oracle = load_oracle(Path(args.oracle))
            if oracle.label != logic:
                raise _Usage(f"oracle file decides {oracle.label}, model needs {logic}")
            return oracle
        return default_oracle(logic, settings.prover_depth)

    return factory


def _model(args: argparse.Namespace) -> Model:
    return load_model(Path(_require(args, "model")), oracle_factory=_oracle_factory(args))


def _proof(args: argparse.Namespace) -> Path:
    path = getattr(args, "proof", None) or getattr(args, "proof_path", None)
    if path is None:
        raise _Usage("a proof file is required")
    return Path(path)


def _write_like(proof: Proof, source: Path) -> str:
    return write_proof(proof, cs_reference=cs_reference_of(source.read_text(encoding="utf-8")))


# commands


def cmd_parse(args: argparse.Namespace) -> int:
    parsers = {"justification": parse_jformula, "modal": parse_mformula}
    parser = parsers.get(args.language, parse_formula)
    phi = _formula(args, parser)
    _emit(args, format_formula(phi), {"formula": format_formula(phi)})
    return 0


def _cmd_eval(args: argparse.Namespace, star: bool) -> int:
    model = _model(args)
    phi = _formula(args)
    value = evaluate_star(model, phi) if star else evaluate(model, phi)
    _emit(
        args,
        str(value),
        {
            "formula": format_formula(phi),
            "value": str(value),
            "semantics": "star" if star else "standard",
        },
    )
    return 0


def cmd_eval(args: argparse.Namespace) -> int:
    return _cmd_eval(args, star=False)


def cmd_eval_star(args: argparse.Namespace) -> int:
    return _cmd_eval(args, star=True)


def _constant_spec(args: argparse.Namespace) -> Optional[ConstantSpec]:
    if args.cs is not None:
        return load_cs(Path(args.cs))
    if args.logic is not None:
        return CalculusId.from_label(args.logic).cs
    return None


def cmd_check_model(args: argparse.Namespace) -> int:
    model = _model(args)
    model_class = ModelClass(_require(args, "model_class"))
    settings = _settings(args)
    universe = None
    if isinstance(model.evidence, XRooted):
        universe = sample_universe(
            model.evidence.oracle, size=settings.universe_size, seed=settings.seed
        )
    verdict = check_model_class(model, model_class, universe)
    data: dict = {"class": verdict.to_dict()}
    lines = [f"class {model_class.value}: {'accept' if verdict.accepted else 'reject'}"]
    if verdict.violation is not None:
        lines.append(f"  violation: {json.dumps(verdict.violation.to_dict(), sort_keys=True)}")
    accepted = verdict.accepted
    cs = _constant_spec(args)
    if cs is not None:
        cs_verdict = check_cs_respect(model, cs, sample_size=settings.cs_sample_size)
        data["cs"] = cs_verdict.to_dict()
        lines.append(f"constant specification: {'accept' if cs_verdict.accepted else 'reject'}")
        if cs_verdict.member is not None:
            member = format_formula(cs_verdict.member)
            lines.append(f"  member {member} has evidence {cs_verdict.value}")
        accepted = accepted and cs_verdict.accepted
    _emit(args, "\n".join(lines), data)
    return 0 if accepted else 1


def cmd_check_proof(args: argparse.Namespace) -> int:
    proof = load_proof(_proof(args))
    verdict = check_proof(proof)
    if verdict.accepted:
        text = f"accept: {format_formula(proof.conclusion)} in {proof.calculus.label}"
    else:
        text = f"reject at line {verdict.line}: {verdict.message}"
        _error(text)
    _emit(args, text, verdict.to_dict())
    return 0 if verdict.accepted else 1


def _emit_lifted(args: argparse.Namespace, term: JustTerm, proof: Proof, source: Path) -> None:
    rendered = _write_like(proof, source)
    if args.output is not None:
        Path(args.output).write_text(rendered, encoding="utf-8")
    _emit(
        args,
        f"term {format_term(term)}\n{rendered.rstrip()}",
        {"term": format_term(term), "proof": rendered},
    )


def cmd_lift(args: argparse.Namespace) -> int:
    source = _proof(args)
    terms = [parse_term(text) for text in args.terms or []]
    term, lifted = lift(load_proof(source), terms)
    _emit_lifted(args, term, lifted, source)
    return 0


def cmd_internalize(args: argparse.Namespace) -> int:
    source = _proof(args)
    term, lifted = internalize(load_proof(source))
    _emit_lifted(args, term, lifted, source)
    return 0


def cmd_project(args: argparse.Namespace) -> int:
    projected = forgetful_projection(_formula(args))
    _emit(args, format_formula(projected), {"projection": format_formula(projected)})
    return 0


def cmd_project_proof(args: argparse.Namespace) -> int:
    projected = project_proof(load_proof(_proof(args)))
    rendered = write_proof(projected)
    if args.output is not None:
        Path(args.output).write_text(rendered, encoding="utf-8")
    _emit(args, rendered.rstrip(), {"proof": rendered})
    return 0


def cmd_check_realization(args: argparse.Namespace) -> int:
    phi = _formula(args, parse_jformula)
    psi = parse_mformula(_require(args, "modal"))
    verdict = check_realization(phi, psi, args.normal)
    text = "accept"
    if not verdict.accepted:
        text = f"reject at {list(verdict.path or ())}: {verdict.reason}"
    _emit(args, text, verdict.to_dict())
    return 0 if verdict.accepted else 1


def _demonstration_terms(args: argparse.Namespace) -> Sequence[JustTerm]:
    texts = args.terms or ["x1", "x2"]
    if len(texts) != 2:
        raise _Usage("--terms takes exactly two terms t s")
    return [parse_term(text) for text in texts]


def _write_structured(args: argparse.Namespace, data: dict) -> None:
    if args.output is not None:
        rendered = json.dumps(data, indent=2, sort_keys=True) + "\n"
        Path(args.output).write_text(rendered, encoding="utf-8")


def cmd_demo(args: argparse.Namespace) -> int:
    settings = _settings(args)
    if args.name == "recheck":
        data = json.loads(Path(_require(args, "report")).read_text(encoding="utf-8"))
        verdict = recheck_report(data)
        text = "\n".join(
            ["recheck: accept" if verdict.accepted else "recheck: reject", *verdict.problems]
        )
        _emit(args, text, verdict.to_dict())
        return 0 if verdict.accepted else 1
    if args.name == "gap":
        justification = (args.logic or "GJ").partition("_")[0]
        if justification not in MODAL_COUNTERPART:
            raise _Usage(f"--logic must be one of {', '.join(MODAL_COUNTERPART)}")
        x = parse_truth_value(args.x) if args.x is not None else None
        report = demo_theorem_gap(
            (justification, MODAL_COUNTERPART[justification]), x=x, settings=settings
        )
        data = report.to_dict()
        _write_structured(args, data)
        _emit(args, render_report(report), data)
        return 0 if report.accepted else 1

    demonstration: Demonstration
    if args.name in ("crisp-to-one", "crisp-to-zero"):
        direction = ShiftDirection.TO_ONE if args.name == "crisp-to-one" else ShiftDirection.TO_ZERO
        demonstration = demo_crisp_recovery(direction)
    else:
        t, s = _demonstration_terms(args)
        x = parse_truth_value(_require(args, "x"))
        demo = (
            demo_z_failure_no_factivity
            if args.name == "z-no-factivity"
            else demo_z_failure_with_factivity
        )
        demonstration = demo(x, t, s, settings=settings)
    data = demonstration.to_dict()
    _write_structured(args, data)
    _emit(args, render_demonstration(demonstration), data)
    return 0


def cmd_enumerate(args: argparse.Namespace) -> int:
    psi = parse_mformula(_require(args, "modal"))
    found: List[Formula] = list(
        enumerate_realizations(
            psi,
            args.depth if args.depth is not None else 0,
            args.normal,
            limit=args.limit,
        )
    )
    rendered = [format_formula(phi) for phi in found]
    _emit(args, "\n".join(rendered), {"modal": format_formula(psi), "realizations": rendered})
    return 0


# parser


def _add_common(parser: argparse.ArgumentParser, *flags: str) -> None:
    parser.add_argument("--format", choices=("text", "structured"), default="text")
    parser.add_argument("--verbose", action="store_true", help="log debug traces to stderr")
    if "formula" in flags:
        parser.add_argument("--formula", help="formula text")
        parser.add_argument("--formula-file", help="file holding the formula text")
    if "model" in flags:
        parser.add_argument("--model", help=".gm model file")
        parser.add_argument("--oracle", help=".orc oracle file for x-rooted evidence")
    if "proof" in flags:
        parser.add_argument("proof_path", nargs="?", help="proof file (.gjp or .gmp)")
        parser.add_argument("--proof", help="proof file (.gjp or .gmp)")
        parser.add_argument("--output", help="write the resulting proof here")
    if "sampling" in flags:
        parser.add_argument("--seed", type=int)
        parser.add_argument("--universe-size", type=int)
        parser.add_argument("--depth", type=int, help="oracle proof search depth")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gjlogic", description="Gödel justification and modal logic toolkit"
    )
    commands = parser.add_subparsers(dest="command", required=True)

    parse = commands.add_parser("parse", help="parse and print a formula")
    _add_common(parse, "formula")
    parse.add_argument("--language", choices=("any", "justification", "modal"), default="any")
    parse.set_defaults(handler=cmd_parse)

    for name, handler in (("eval", cmd_eval), ("eval-star", cmd_eval_star)):
        command = commands.add_parser(name, help="evaluate a formula in a model")
        _add_common(command, "formula", "model", "sampling")
        command.set_defaults(handler=handler)

    check_model = commands.add_parser(
        "check-model", help="check a model's class and constant specification"
    )
    _add_common(check_model, "model", "sampling")
    check_model.add_argument("--class", dest="model_class", choices=[c.value for c in ModelClass])
    check_model.add_argument("--cs", help=".cs finite constant specification file")
    check_model.add_argument("--logic", help="calculus label whose total specification is checked")
    check_model.set_defaults(handler=cmd_check_model)

    check = commands.add_parser("check-proof", help="check a Hilbert proof file")
    _add_common(check, "proof")
    check.set_defaults(handler=cmd_check_proof)

    lift_parser = commands.add_parser("lift", help="lift a proof from assumptions t_i:A_i")
    _add_common(lift_parser, "proof")
    lift_parser.add_argument("--terms", nargs="*", help="one term per assumption")
    lift_parser.set_defaults(handler=cmd_lift)

    internalize_parser = commands.add_parser(
        "internalize", help="internalize an assumption-free proof"
    )
    _add_common(internalize_parser, "proof")
    internalize_parser.set_defaults(handler=cmd_internalize)

    project = commands.add_parser("project", help="forgetful projection of a formula")
    _add_common(project, "formula")
    project.set_defaults(handler=cmd_project)

    project_parser = commands.add_parser("project-proof", help="project a justification proof")
    _add_common(project_parser, "proof")
    project_parser.set_defaults(handler=cmd_project_proof)

    realization = commands.add_parser(
        "check-realization", help="check that --formula realizes --modal"
    )
    _add_common(realization, "formula")
    realization.add_argument("--modal", help="modal formula")
    realization.add_argument("--normal", action="store_true")
    realization.set_defaults(handler=cmd_check_realization)

    demo = commands.add_parser("demo", help="run a countermodel demonstration or gap report")
    _add_common(demo, "sampling")
    demo.add_argument("name", choices=DEMOS)
    demo.add_argument("--x", help="interior truth value, e.g. 1/2")
    demo.add_argument("--terms", nargs="*", help="the terms t s")
    demo.add_argument("--logic", help="justification calculus of the gap report")
    demo.add_argument("--output", help="write the structured result here")
    demo.add_argument("--report", help="structured report to re-check")
    demo.set_defaults(handler=cmd_demo)

    enumerate_parser = commands.add_parser("enumerate", help="enumerate realizations of --modal")
    _add_common(enumerate_parser)
    enumerate_parser.add_argument("--modal", help="modal formula")
    enumerate_parser.add_argument("--depth", type=int, help="term operator depth")
    enumerate_parser.add_argument("--normal", action="store_true")
    enumerate_parser.add_argument("--limit", type=int)
    enumerate_parser.set_defaults(handler=cmd_enumerate)
    return parser


def _configure_logging(verbose: bool) -> None:
    level = logging.DEBUG
    if not verbose:
        level = getattr(logging, load_settings().log_level, logging.WARNING)
    logging.basicConfig(
        level=level, format=f"{PREFIX} %(levelname)s %(name)s: %(message)s", force=True
    )


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    _configure_logging(args.verbose)
    try:
        return int(args.handler(args))
    except UndecidedEvidenceError as exc:
        _error(str(exc))
        return 3
    except DemonstrationError as exc:
        _error(str(exc))
        return 1
    except _Usage as exc:
        _error(str(exc))
        return 2
    except (GJLogicError, OSError, ValueError) as exc:
        _error(str(exc))
        return 2


def main() -> int:
    return run(sys.argv[1:])


if __name__ == "__main__":
    sys.exit(main())
