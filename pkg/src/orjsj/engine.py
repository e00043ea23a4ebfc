"""Decision procedures for Z_max-JSJ decompositions of <a, b | R>.

``triage`` sorts a relator into the case the recognition theorems cover.
``detect`` answers yes/no (linearly, from the polytope, in the torsion-free
case), ``compute`` builds the decomposition from the shortest Aut-orbit
elements, and ``out_class`` reads off the outer automorphism group.

Hyperbolicity and the RG property are never checked; the caller asserts
them through :class:`Assumptions`.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

from .errors import (
    EmptyWordError,
    JsjUndefinedError,
    NotASummandError,
    OrjsjError,
    OutUndefinedError,
)
from .polytope import PolytopeClass, classify, ft_polytope
from .subgroup import Representative, XYWord, expand_xy, find_representative
from .whitehead import commutator_power, is_primitive, minimize, shortest_orbit_set
from .words import CyclicWord, ExponentSums, Word, exponent_sums, max_root


@dataclass(frozen=True)
class Assumptions:
    assume_hyperbolic: bool = False
    assume_rg: bool = False

    def __bool__(self):
        return self.assume_hyperbolic or self.assume_rg


NO_ASSUMPTIONS = Assumptions()


class Case(Enum):
    NotOneEnded = "not-one-ended"
    FuchsianCase = "fuchsian"
    TheoremA = "torsion-free"
    TheoremB = "torsion"
    Unsupported = "unsupported"


@dataclass(frozen=True)
class Applicability:
    case: Case
    root: Word
    exponent: int
    exponent_sums: ExponentSums
    root_primitive: bool
    root_commutator_power: Optional[int]
    reason: str = ""


class Verdict(Enum):
    Trivial = "trivial"
    NonTrivial = "non-trivial"
    Unknown = "unknown"


class OutClass(Enum):
    Finite = "finite"
    VirtuallyZ = "virtually-Z"
    GL2Z = "GL2(Z)"


STABLE_LETTER = "b"
ATTACHING = "y = b^-1 a b"


@dataclass(frozen=True)
class JsjDecomposition:
    """Either the trivial decomposition or one rigid vertex with a loop edge.

    For the HNN form the vertex group is ``<a, y | T0(a, y)^exponent>`` and
    the stable letter ``b`` conjugates ``a`` to ``y``.
    """

    base_relator_xy: Optional[XYWord] = None
    exponent: Optional[int] = None
    representative: Optional[Word] = None

    @property
    def is_trivial(self) -> bool:
        return self.base_relator_xy is None

    @classmethod
    def trivial(cls) -> "JsjDecomposition":
        return cls()

    @classmethod
    def hnn(cls, rep: Representative, exponent: int) -> "JsjDecomposition":
        return cls(rep.T0, exponent, rep.T)

    def to_json(self) -> dict:
        if self.is_trivial:
            return {
                "type": "trivial",
                "vertex_group": "G",
                "edges": 0,
                "base_relator_xy": None,
                "exponent": None,
                "stable_letter": None,
                "attaching": None,
                "representative": None,
            }
        return {
            "type": "hnn",
            "vertex_group": f"<x, y | ({self.base_relator_xy.power_form()})^{self.exponent}>",
            "edges": 1,
            "base_relator_xy": self.base_relator_xy.power_form(),
            "exponent": self.exponent,
            "stable_letter": STABLE_LETTER,
            "attaching": ATTACHING,
            "representative": self.representative.letters,
        }

    def describe(self) -> str:
        if self.is_trivial:
            return "trivial: single vertex with vertex group G, no edges"
        t0 = self.base_relator_xy.power_form().replace("x", "a")
        return (
            "HNN extension with stable letter b\n"
            f"  vertex group: <a, y | ({t0})^{self.exponent}>\n"
            f"  attaching map: {ATTACHING}\n"
            f"  representative: {self.representative}"
        )


def triage(R: Word, assumptions: Assumptions = NO_ASSUMPTIONS) -> Applicability:
    if not R:
        raise EmptyWordError("the trivial relator defines a free group")
    S, n = max_root(R)
    sums = exponent_sums(R)
    primitive = is_primitive(S)
    k = commutator_power(S)

    def result(case, reason=""):
        return Applicability(case, S, n, sums, primitive, k, reason)

    not_one_ended = (
        "the root is primitive, so the group is a free product of cyclic "
        "groups and is not one-ended"
    )
    # A root conjugate to a single letter is settled before the
    # unsupported torsion-free case; other primitive roots after it.
    if len(CyclicWord.of(S)) == 1:
        return result(Case.NotOneEnded, not_one_ended)
    if n == 1 and not sums.is_zero:
        reason = (
            "R is not a proper power and not in the derived subgroup; "
            "no recognition theorem covers this case"
        )
        if primitive:
            reason += "; note " + not_one_ended
        return result(Case.Unsupported, reason)
    if primitive:
        return result(Case.NotOneEnded, not_one_ended)
    if n > 1:
        if k in (1, -1):
            return result(Case.FuchsianCase, "the root is conjugate to [a,b]^±1")
        return result(Case.TheoremB)
    if not assumptions:
        return result(Case.Unsupported, "hyperbolicity/RG not asserted")
    return result(Case.TheoremA)


def _whitehead_representative(S: Word, case: Case) -> Optional[Representative]:
    core = CyclicWord.of(S)
    orbit = shortest_orbit_set(core)
    rep = find_representative(orbit, prefer=minimize(core).min)
    if rep is None:
        return None
    k = commutator_power(rep.T)
    if case is Case.TheoremA and k is not None:
        return None
    if case is Case.TheoremB:
        # Fuchsian roots were split off in triage.
        assert k not in (1, -1), "Fuchsian root reached the torsion path"
    return rep


def _detect(R: Word, t: Applicability) -> tuple[Verdict, list[str]]:
    if t.case is Case.FuchsianCase:
        return Verdict.Trivial, []
    if t.case is Case.NotOneEnded:
        return Verdict.Unknown, [
            "Z_max-JSJ decompositions are only meaningful for one-ended groups: " + t.reason
        ]
    if t.case is Case.Unsupported:
        return Verdict.Unknown, [t.reason]
    if t.case is Case.TheoremA:
        shape = classify(ft_polytope(R))
        return (Verdict.NonTrivial if shape is PolytopeClass.Segment else Verdict.Trivial), []
    rep = _whitehead_representative(t.root, t.case)
    return (Verdict.Trivial if rep is None else Verdict.NonTrivial), []


def detect(R: Word, assumptions: Assumptions = NO_ASSUMPTIONS) -> Verdict:
    return _detect(R, triage(R, assumptions))[0]


def _compute(t: Applicability) -> JsjDecomposition:
    if t.case in (Case.NotOneEnded, Case.Unsupported):
        raise JsjUndefinedError(t.reason)
    if t.case is Case.FuchsianCase:
        return JsjDecomposition.trivial()
    rep = _whitehead_representative(t.root, t.case)
    if rep is None:
        return JsjDecomposition.trivial()
    return JsjDecomposition.hnn(rep, t.exponent)


def compute(R: Word, assumptions: Assumptions = NO_ASSUMPTIONS) -> JsjDecomposition:
    return _compute(triage(R, assumptions))


def _out_class(R: Word, t: Applicability, verdict: Verdict) -> OutClass:
    if t.case in (Case.NotOneEnded, Case.Unsupported):
        raise OutUndefinedError(t.reason)
    if commutator_power(R) is not None:
        return OutClass.GL2Z
    return OutClass.VirtuallyZ if verdict is Verdict.NonTrivial else OutClass.Finite


def out_class(R: Word, assumptions: Assumptions = NO_ASSUMPTIONS) -> OutClass:
    t = triage(R, assumptions)
    return _out_class(R, t, _detect(R, t)[0])


@dataclass
class JsjReport:
    input: str
    relator: Word
    applicability: Optional[Applicability]
    polytope: Optional[dict] = None
    detection: Verdict = Verdict.Unknown
    decomposition: Optional[JsjDecomposition] = None
    out_class: Optional[OutClass] = None
    warnings: list = field(default_factory=list)
    timing_ms: dict = field(default_factory=dict)

    def to_json(self, timing: bool = True) -> dict:
        t = self.applicability
        sums = exponent_sums(self.relator)
        out = {
            "input": self.input,
            "relator": self.relator.letters,
            "root": t.root.letters if t else "",
            "exponent": t.exponent if t else None,
            "exponent_sums": [sums.e_a, sums.e_b],
            "applicability": t.case.value if t else Case.NotOneEnded.value,
            "polytope": self.polytope,
            "detection": self.detection.value,
            "decomposition": self.decomposition.to_json() if self.decomposition else None,
            "out_class": self.out_class.value if self.out_class else None,
            "warnings": list(self.warnings),
        }
        if timing:
            out["timing_ms"] = dict(self.timing_ms)
        return out


def analyze(
    R: Word, assumptions: Assumptions = NO_ASSUMPTIONS, text: Optional[str] = None
) -> JsjReport:
    """Run every applicable procedure; never raises on inapplicable input."""
    report = JsjReport(text if text is not None else R.letters, R, None)
    if not R:
        report.warnings.append(
            "trivial relator: the group is free of rank 2 and not one-ended"
        )
        return report
    t = triage(R, assumptions)
    report.applicability = t
    if exponent_sums(R).is_zero:
        try:
            report.polytope = ft_polytope(R).to_json()
        except NotASummandError as e:
            report.warnings.append(f"polytope construction failed: {e}")

    start = time.perf_counter()
    report.detection, warnings = _detect(R, t)
    report.timing_ms["detect"] = (time.perf_counter() - start) * 1e3
    report.warnings.extend(warnings)
    if t.case in (Case.NotOneEnded, Case.Unsupported):
        return report

    start = time.perf_counter()
    try:
        report.decomposition = _compute(t)
    except OrjsjError as e:
        report.warnings.append(f"computation failed: {e}")
    report.timing_ms["compute"] = (time.perf_counter() - start) * 1e3
    report.out_class = _out_class(R, t, report.detection)

    if report.decomposition is not None:
        hnn = not report.decomposition.is_trivial
        if hnn != (report.detection is Verdict.NonTrivial):
            report.warnings.append("polytope and Whitehead verdicts disagree")
    return report


def reconstruct(d: JsjDecomposition) -> Word:
    """``T0(a, b^-1 a b)^n`` for an HNN result."""
    if d.is_trivial:
        raise ValueError("trivial decomposition has no base relator")
    return expand_xy(d.base_relator_xy) ** d.exponent
