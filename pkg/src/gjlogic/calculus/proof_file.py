"""Readers and writers for proof files and constant specification files.

Proof files::

    calculus GJ45 cs total
    1. x1:p1 ; assume 1
    2. bot -> p1 ; axiom A7 {phi := p1}
    3. c1:(bot -> p1) ; cs
    4. ... ; mp 3 2

Constant specification files start with ``base <calculus>`` followed by one
member per line. ``#`` starts a comment in both formats.
"""

from __future__ import annotations

import re
from pathlib import Path
from typing import Callable, Dict, List, Optional, Tuple

from gjlogic.calculus.constant_spec import ConstantSpec, FiniteCS, TotalCS
from gjlogic.calculus.proof import (
    Assumption,
    AxiomRule,
    CalculusId,
    ConstantRule,
    Justification,
    ModusPonens,
    Necessitation,
    Proof,
    ProofLine,
)
from gjlogic.calculus.schemes import SCHEMES, match_scheme
from gjlogic.errors import ConstantSpecError, FormulaSyntaxError, ProofFormatError
from gjlogic.syntax.ast import Formula
from gjlogic.syntax.parser import parse_formula, parse_term
from gjlogic.syntax.printer import format_formula, format_term

_HEADER = re.compile(r"^calculus\s+(\w+)(?:\s+cs\s+(\S+))?$")
_LINE = re.compile(r"^(\d+)\.\s*(.+?)\s*;\s*(.+)$")
_AXIOM = re.compile(r"^axiom\s+(\w+)\s*(?:\{(.*)\})?$")

CsLoader = Callable[[str], ConstantSpec]


def _content_lines(text: str) -> List[Tuple[int, str]]:
    lines = []
    for number, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.split("#", 1)[0].strip()
        if stripped:
            lines.append((number, stripped))
    return lines


def read_cs(text: str) -> FiniteCS:
    lines = _content_lines(text)
    if not lines or not lines[0][1].startswith("base "):
        raise ProofFormatError("constant specification must start with 'base <calculus>'", line=1)
    base = lines[0][1].split(None, 1)[1].strip()
    members = []
    for number, raw in lines[1:]:
        try:
            members.append(parse_formula(raw))
        except FormulaSyntaxError as exc:
            raise ProofFormatError(str(exc), line=number) from exc
    try:
        cs = FiniteCS(base, frozenset(members))
    except ConstantSpecError as exc:
        raise ProofFormatError(str(exc), line=lines[0][0]) from exc
    problem = cs.validate()
    if problem is not None:
        raise ProofFormatError(f"invalid constant specification: {problem}")
    return cs


def write_cs(cs: FiniteCS) -> str:
    members = sorted(format_formula(member) for member in cs.members)
    return "\n".join([f"base {cs.base}", *members]) + "\n"


def load_cs(path: Path) -> FiniteCS:
    return read_cs(Path(path).read_text(encoding="utf-8"))


def _default_loader(base_dir: Optional[Path]) -> CsLoader:
    def load(reference: str) -> ConstantSpec:
        path = Path(reference)
        if base_dir is not None and not path.is_absolute():
            path = base_dir / path
        return load_cs(path)

    return load


def read_proof(
    text: str, *, base_dir: Optional[Path] = None, cs_loader: Optional[CsLoader] = None
) -> Proof:
    """Parse a proof file; the assumption list is collected from its ``assume`` lines."""
    lines = _content_lines(text)
    if not lines:
        raise ProofFormatError("empty proof file")
    calculus = _read_header(lines[0], cs_loader or _default_loader(base_dir))

    proof_lines: List[ProofLine] = []
    assumptions: Dict[int, Formula] = {}
    for number, raw in lines[1:]:
        match = _LINE.match(raw)
        if match is None:
            raise ProofFormatError(f"expected 'n. <formula> ; <rule>', got {raw!r}", line=number)
        if int(match.group(1)) != len(proof_lines) + 1:
            raise ProofFormatError(
                f"expected line number {len(proof_lines) + 1}, got {match.group(1)}", line=number
            )
        try:
            formula = parse_formula(match.group(2))
            rule = _read_rule(match.group(3), formula)
        except (FormulaSyntaxError, ProofFormatError) as exc:
            raise ProofFormatError(str(exc), line=number) from exc
        if isinstance(rule, Assumption):
            known = assumptions.setdefault(rule.index, formula)
            if known != formula:
                raise ProofFormatError(
                    f"assumption {rule.index} stated as two different formulas", line=number
                )
        proof_lines.append(ProofLine(formula, rule))

    if not proof_lines:
        raise ProofFormatError("proof has no lines")
    if sorted(assumptions) != list(range(1, len(assumptions) + 1)):
        raise ProofFormatError("assumptions must be numbered 1..n without gaps")
    return Proof(
        calculus,
        _with_dependencies(proof_lines),
        tuple(assumptions[index] for index in sorted(assumptions)),
    )


def _read_header(header: Tuple[int, str], cs_loader: CsLoader) -> CalculusId:
    number, raw = header
    match = _HEADER.match(raw)
    if match is None:
        raise ProofFormatError("proof must start with 'calculus <id> [cs <path|total>]'", line=number)
    name, reference = match.groups()
    try:
        if reference is None:
            return CalculusId(name)
        if reference == "total":
            return CalculusId.total(name)
        return CalculusId(name, cs_loader(reference))
    except (ConstantSpecError, OSError) as exc:
        raise ProofFormatError(str(exc), line=number) from exc


def _read_rule(text: str, formula: Formula) -> Justification:
    words = text.split()
    keyword = words[0]
    try:
        if keyword == "assume" and len(words) == 2:
            return Assumption(int(words[1]))
        if keyword == "mp" and len(words) == 3:
            return ModusPonens(int(words[1]), int(words[2]))
        if keyword == "nbox" and len(words) == 2:
            return Necessitation(int(words[1]))
    except ValueError as exc:
        raise ProofFormatError(f"line references must be integers in {text!r}") from exc
    if keyword == "cs" and len(words) == 1:
        return ConstantRule()
    axiom = _AXIOM.match(text)
    if axiom is not None:
        return _read_axiom(axiom.group(1), axiom.group(2), formula)
    raise ProofFormatError(f"unknown rule {text!r}")


def _read_axiom(scheme: str, bindings_text: Optional[str], formula: Formula) -> AxiomRule:
    if scheme not in SCHEMES:
        raise ProofFormatError(f"unknown axiom scheme {scheme}")
    if not bindings_text:
        return AxiomRule(scheme)
    matched = match_scheme(SCHEMES[scheme], formula) or {}
    for item in bindings_text.split(","):
        name, separator, value = item.partition(":=")
        name = name.strip()
        if not separator:
            raise ProofFormatError(f"binding {item.strip()!r} must read 'name := value'")
        supplied = parse_term(value.strip()) if name in ("t", "s") else parse_formula(value.strip())
        if matched.get(name) != supplied:
            raise ProofFormatError(f"binding {name} := {value.strip()} does not match the formula")
    return AxiomRule(scheme)


def _with_dependencies(lines: List[ProofLine]) -> Tuple[ProofLine, ...]:
    """Fill in assumption sets; references outside the proof are left for the checker."""
    completed: List[ProofLine] = []
    for line in lines:
        rule = line.justification
        dependencies: frozenset = frozenset()
        if isinstance(rule, Assumption):
            dependencies = frozenset({rule.index})
        elif isinstance(rule, ModusPonens):
            for reference in (rule.major, rule.minor):
                if 1 <= reference <= len(completed):
                    dependencies |= completed[reference - 1].assumptions
        completed.append(ProofLine(line.formula, rule, dependencies))
    return tuple(completed)


def write_proof(proof: Proof, *, cs_reference: Optional[str] = None) -> str:
    """Render a proof; finite constant specifications need the path they are stored at."""
    header = f"calculus {proof.calculus.name}"
    if isinstance(proof.calculus.cs, TotalCS):
        header += " cs total"
    elif proof.calculus.cs is not None:
        if cs_reference is None:
            raise ProofFormatError("a finite constant specification needs a file reference")
        header += f" cs {cs_reference}"
    rendered = [header]
    for number, line in enumerate(proof.lines, start=1):
        rendered.append(f"{number}. {format_formula(line.formula)} ; {_format_rule(line)}")
    return "\n".join(rendered) + "\n"


def _format_rule(line: ProofLine) -> str:
    rule = line.justification
    if isinstance(rule, Assumption):
        return f"assume {rule.index}"
    if isinstance(rule, ModusPonens):
        return f"mp {rule.major} {rule.minor}"
    if isinstance(rule, Necessitation):
        return f"nbox {rule.premise}"
    if isinstance(rule, ConstantRule):
        return "cs"
    bindings = match_scheme(SCHEMES[rule.scheme], line.formula) or {}
    listing = ", ".join(
        f"{name} := {format_term(value) if name in ('t', 's') else format_formula(value)}"  # type: ignore[arg-type]
        for name, value in sorted(bindings.items())
    )
    return f"axiom {rule.scheme} {{{listing}}}" if listing else f"axiom {rule.scheme}"


def cs_reference_of(text: str) -> Optional[str]:
    """The ``cs`` reference named in a proof file header, if any."""
    lines = _content_lines(text)
    if not lines:
        return None
    match = _HEADER.match(lines[0][1])
    return match.group(2) if match is not None else None


def load_proof(path: Path, *, cs_loader: Optional[CsLoader] = None) -> Proof:
    path = Path(path)
    return read_proof(path.read_text(encoding="utf-8"), base_dir=path.parent, cs_loader=cs_loader)


__all__ = [
    "cs_reference_of",
    "load_cs",
    "load_proof",
    "read_cs",
    "read_proof",
    "write_cs",
    "write_proof",
]
