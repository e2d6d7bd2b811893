"""Line-oriented model files (``.gm``) and oracle certificate files (``.orc``).

Model files::

    default_e = 1/2
    e(p1) = 1/3
    default_E = 0
    E(x1*x2, "p1 -> p2") = 1/4
    # or: evidence = all_ones / evidence = x_rooted 1/2 GJ45_TCS

Oracle files::

    calculus GJ45_TCS
    depth 3
    theorem proofs/double_negation.gjp
    refuter models/zero.gm GM45 [standard|star]
    nontheorem models/half.gm "x1:p1" GM45
    hint "p1 -> p1"
"""

from __future__ import annotations

import re
import shlex
from pathlib import Path
from typing import Callable, Dict, List, Optional, Tuple

from gjlogic.algebra import TruthValue, parse_truth_value
from gjlogic.calculus.proof import CalculusId
from gjlogic.calculus.proof_file import load_proof, write_proof
from gjlogic.config import load_settings
from gjlogic.errors import FormulaSyntaxError, ModelFormatError, TruthValueError
from gjlogic.models.evidence import (
    AllOnes,
    Capped,
    EvidenceKey,
    EvidenceSpec,
    FiniteSpec,
    Model,
    ModelClass,
    Valuation,
    XRooted,
)
from gjlogic.models.oracle import RefutationWitness, Semantics, TheoremhoodOracle, default_oracle
from gjlogic.syntax.ast import Formula
from gjlogic.syntax.parser import parse_formula, parse_term
from gjlogic.syntax.printer import format_formula

_ATOM_VALUE = re.compile(r"^e\(p([1-9][0-9]*)\)\s*=\s*(\S+)$")
_EVIDENCE_VALUE = re.compile(r'^E\((.+?),\s*"(.*)"\)\s*=\s*(\S+)$')
_SETTING = re.compile(r"^(default_e|default_E|evidence)\s*=\s*(.+)$")

OracleFactory = Callable[[str], TheoremhoodOracle]


def _content_lines(text: str) -> List[Tuple[int, str]]:
    lines = []
    for number, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if stripped and not stripped.startswith("#"):
            lines.append((number, stripped))
    return lines


def read_model(text: str, *, oracle_factory: Optional[OracleFactory] = None) -> Model:
    default_e = None
    default_evidence = None
    atoms: Dict[int, TruthValue] = {}
    overrides: Dict[EvidenceKey, TruthValue] = {}
    evidence_kind: Optional[str] = None
    x_rooted: Optional[Tuple[TruthValue, str]] = None

    for number, line in _content_lines(text):
        try:
            atom = _ATOM_VALUE.match(line)
            pair = _EVIDENCE_VALUE.match(line)
            setting = _SETTING.match(line)
            if atom is not None:
                atoms[int(atom.group(1))] = parse_truth_value(atom.group(2))
            elif pair is not None:
                key = (parse_term(pair.group(1)), parse_formula(pair.group(2)))
                if key in overrides:
                    raise ModelFormatError("evidence pair given twice", line=number)
                overrides[key] = parse_truth_value(pair.group(3))
            elif setting is not None and setting.group(1) == "default_e":
                default_e = parse_truth_value(setting.group(2))
            elif setting is not None and setting.group(1) == "default_E":
                default_evidence = parse_truth_value(setting.group(2))
            elif setting is not None:
                evidence_kind, x_rooted = _read_evidence_kind(setting.group(2), number)
            else:
                raise ModelFormatError(f"unrecognised line {line!r}", line=number)
        except (FormulaSyntaxError, TruthValueError) as exc:
            raise ModelFormatError(str(exc), line=number) from exc

    valuation = Valuation(default_e if default_e is not None else TruthValue.of(0), atoms)
    evidence: EvidenceSpec
    if evidence_kind is None:
        evidence = FiniteSpec(
            default_evidence if default_evidence is not None else TruthValue.of(0), overrides
        )
    elif overrides or default_evidence is not None:
        raise ModelFormatError(f"evidence = {evidence_kind} cannot be combined with E lines")
    elif evidence_kind == "all_ones":
        evidence = AllOnes()
    else:
        assert x_rooted is not None
        x, logic = x_rooted
        factory = oracle_factory or default_oracle
        evidence = XRooted(x, logic, factory(logic))
        if default_e is None:
            valuation = Valuation(x, atoms)
    crisp = isinstance(evidence, XRooted) and evidence.x.is_crisp
    return Model(evidence, valuation, crisp)


def _read_evidence_kind(value: str, number: int) -> Tuple[str, Optional[Tuple[TruthValue, str]]]:
    words = value.split()
    if words == ["all_ones"]:
        return "all_ones", None
    if len(words) == 3 and words[0] == "x_rooted":
        return "x_rooted", (parse_truth_value(words[1]), words[2])
    raise ModelFormatError(f"unknown evidence {value!r}", line=number)


def write_model(model: Model) -> str:
    valuation = model.valuation
    lines = [f"default_e = {valuation.default}"]
    lines.extend(f"e(p{index}) = {value}" for index, value in sorted(valuation.overrides.items()))
    evidence = model.evidence
    if isinstance(evidence, AllOnes):
        lines.append("evidence = all_ones")
    elif isinstance(evidence, XRooted):
        lines.append(f"evidence = x_rooted {evidence.x} {evidence.logic}")
    elif isinstance(evidence, Capped):
        raise ModelFormatError("capped evidence has no .gm form; write its source model instead")
    else:
        lines.append(f"default_E = {evidence.default}")
        for item in evidence.to_dict()["overrides"]:
            lines.append(f'E({item["term"]}, "{item["formula"]}") = {item["value"]}')
    return "\n".join(lines) + "\n"


def load_model(path: Path, *, oracle_factory: Optional[OracleFactory] = None) -> Model:
    return read_model(Path(path).read_text(encoding="utf-8"), oracle_factory=oracle_factory)


def read_oracle(text: str, *, base_dir: Optional[Path] = None) -> TheoremhoodOracle:
    """Build an oracle from certificate references; paths are relative to ``base_dir``."""
    root = base_dir or Path(".")
    calculus: Optional[CalculusId] = None
    depth: Optional[int] = None
    proofs = []
    refuters = []
    nontheorems: Dict[Formula, RefutationWitness] = {}
    hints = []
    for number, line in _content_lines(text):
        try:
            words = shlex.split(line)
        except ValueError as exc:
            raise ModelFormatError(str(exc), line=number) from exc
        keyword, arguments = words[0], words[1:]
        try:
            if keyword == "calculus" and len(arguments) == 1:
                calculus = CalculusId.from_label(arguments[0])
            elif keyword == "depth" and len(arguments) == 1:
                depth = int(arguments[0])
            elif keyword == "theorem" and len(arguments) == 1:
                proofs.append(load_proof(root / arguments[0]))
            elif keyword == "refuter" and len(arguments) in (2, 3):
                refuters.append(_read_witness(root, arguments[0], arguments[1:], number))
            elif keyword == "nontheorem" and len(arguments) in (3, 4):
                phi = parse_formula(arguments[1])
                if phi in nontheorems:
                    raise ModelFormatError(
                        f"second witness for {format_formula(phi)}", line=number
                    )
                nontheorems[phi] = _read_witness(root, arguments[0], arguments[2:], number)
            elif keyword == "hint" and len(arguments) == 1:
                hints.append(parse_formula(arguments[0]))
            else:
                raise ModelFormatError(f"unrecognised line {line!r}", line=number)
        except (ValueError, OSError) as exc:
            if isinstance(exc, ModelFormatError) and exc.line is not None:
                raise
            raise ModelFormatError(str(exc), line=number) from exc
    if calculus is None:
        raise ModelFormatError("oracle file needs a 'calculus <label>' line")
    return TheoremhoodOracle(
        calculus,
        proofs=proofs,
        refuters=refuters,
        nontheorems=nontheorems,
        hints=hints,
        depth=depth if depth is not None else load_settings().prover_depth,
    )


def _read_witness(
    root: Path, name: str, arguments: List[str], number: int
) -> RefutationWitness:
    """``<file> <class> [standard|star]`` with the file relative to ``root``."""
    semantics = Semantics.STANDARD
    if len(arguments) == 2:
        if arguments[1] not in ("standard", "star"):
            raise ModelFormatError(f"expected 'standard' or 'star', got {arguments[1]!r}", line=number)
        semantics = Semantics(arguments[1])
    return RefutationWitness(load_model(root / name), ModelClass(arguments[0]), semantics)


def _write_witness(witness: RefutationWitness, path: Path) -> str:
    """Write the witness model to ``path``; return its ``<class> [star]`` suffix."""
    path.write_text(write_model(witness.model), encoding="utf-8")
    star = " star" if witness.semantics is Semantics.STAR else ""
    return f"{witness.model_class.value}{star}"


def load_oracle(path: Path) -> TheoremhoodOracle:
    path = Path(path)
    return read_oracle(path.read_text(encoding="utf-8"), base_dir=path.parent)


def write_oracle(oracle: TheoremhoodOracle, directory: Path) -> Path:
    """Store the oracle's certificates next to an ``oracle.orc`` index in ``directory``."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    lines = [f"calculus {oracle.label}", f"depth {oracle.depth}"]
    for index, proof in enumerate(oracle.certified, start=1):
        name = f"theorem_{index}.gjp"
        (directory / name).write_text(write_proof(proof), encoding="utf-8")
        lines.append(f"theorem {name}")
    for index, witness in enumerate(oracle.refuters, start=1):
        name = f"refuter_{index}.gm"
        lines.append(f"refuter {name} {_write_witness(witness, directory / name)}")
    for index, (phi, witness) in enumerate(oracle.nontheorems.items(), start=1):
        name = f"nontheorem_{index}.gm"
        described = _write_witness(witness, directory / name)
        lines.append(f'nontheorem {name} "{format_formula(phi)}" {described}')
    lines.extend(f'hint "{format_formula(phi)}"' for phi in oracle.hints)
    index_path = directory / "oracle.orc"
    index_path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return index_path


__all__ = [
    "load_model",
    "load_oracle",
    "read_model",
    "read_oracle",
    "write_model",
    "write_oracle",
]
