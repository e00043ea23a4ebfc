import json
import random
from pathlib import Path

import jsonschema
import pytest

from orjsj import oracle
from orjsj.engine import (
    NO_ASSUMPTIONS,
    Assumptions,
    Case,
    JsjDecomposition,
    OutClass,
    Verdict,
    analyze,
    compute,
    detect,
    out_class,
    reconstruct,
    triage,
)
from orjsj.errors import EmptyWordError, JsjUndefinedError, OutUndefinedError
from orjsj.parsing import parse_relator
from orjsj.subgroup import XYWord
from orjsj.whitehead import minimize, shortest_orbit_set
from orjsj.words import CyclicWord, Word, free_reduce, max_root

SCHEMA = json.loads((Path(__file__).parent / "report_schema.json").read_text())
HYP = Assumptions(assume_hyperbolic=True)
RG = Assumptions(assume_rg=True)


def test_assumptions_truthiness():
    assert not NO_ASSUMPTIONS
    assert HYP and RG and Assumptions(True, True)


@pytest.mark.parametrize(
    "text, case",
    [
        ("a^3", Case.NotOneEnded),
        ("a", Case.NotOneEnded),
        ("(abAB)^2", Case.FuchsianCase),
        ("(baBA)^3", Case.FuchsianCase),
        ("(AABaab)^2", Case.TheoremB),
        ("(aabbABAB)^2", Case.TheoremB),
        ("ab", Case.Unsupported),
        ("aab", Case.Unsupported),
        ("AABaab", Case.Unsupported),
        ("(ab)^3", Case.NotOneEnded),
    ],
)
def test_triage_table(text, case):
    assert triage(parse_relator(text)).case is case


def test_triage_with_flags():
    R = parse_relator("AABaab")
    assert triage(R, HYP).case is Case.TheoremA
    assert triage(R, RG).case is Case.TheoremA
    assert triage(parse_relator("aab"), HYP).case is Case.Unsupported
    assert triage(parse_relator("(AABaab)^2"), HYP).case is Case.TheoremB
    assert triage(R).reason == "hyperbolicity/RG not asserted"


def test_triage_diagnostics():
    t = triage(parse_relator("(AABaab)^3"))
    assert t.root == Word("AABaab") and t.exponent == 3
    assert t.exponent_sums.is_zero
    assert not t.root_primitive and t.root_commutator_power is None
    assert triage(parse_relator("(abAB)^2")).root_commutator_power == 1


def test_triage_empty():
    with pytest.raises(EmptyWordError):
        triage(Word())


def test_detect_examples():
    assert detect(parse_relator("(aabbABAB)^2"), HYP) is Verdict.Trivial
    assert detect(parse_relator("AABaab"), RG) is Verdict.NonTrivial
    assert detect(parse_relator("abAB"), RG) is Verdict.Trivial
    assert detect(parse_relator("(AABaab)^2")) is Verdict.NonTrivial
    assert detect(parse_relator("(abAB)^2")) is Verdict.Trivial
    assert detect(parse_relator("a^3")) is Verdict.Unknown
    assert detect(parse_relator("ab"), HYP) is Verdict.Unknown
    assert detect(parse_relator("AABaab")) is Verdict.Unknown


def test_compute_examples():
    d = compute(parse_relator("(AABaab)^2"))
    assert d.base_relator_xy == XYWord("XXyy") and d.exponent == 2
    assert d.base_relator_xy.power_form() == "x^-2 y^2"
    assert d.to_json()["stable_letter"] == "b"
    assert d.to_json()["attaching"] == "y = b^-1 a b"
    assert compute(parse_relator("(aabbABAB)^3")).is_trivial
    d1 = compute(parse_relator("AABaab"), RG)
    assert d1.base_relator_xy == XYWord("XXyy") and d1.exponent == 1


def test_compute_inapplicable():
    for text in ("a", "ab", "AABaab"):
        with pytest.raises(JsjUndefinedError):
            compute(parse_relator(text))


def test_trivial_decomposition_form():
    j = JsjDecomposition.trivial().to_json()
    assert j["type"] == "trivial" and j["vertex_group"] == "G" and j["edges"] == 0
    assert "single vertex" in JsjDecomposition.trivial().describe()


def test_hnn_describe():
    text = compute(parse_relator("(AABaab)^2")).describe()
    assert "stable letter b" in text and "(a^-2 y^2)^2" in text


def test_out_class_examples():
    assert out_class(parse_relator("(abAB)^3")) is OutClass.GL2Z
    assert out_class(parse_relator("(AABaab)^2")) is OutClass.VirtuallyZ
    assert out_class(parse_relator("(aabbABAB)^2")) is OutClass.Finite
    assert out_class(parse_relator("abAB"), HYP) is OutClass.GL2Z
    assert out_class(parse_relator("BAba"), HYP) is OutClass.GL2Z
    for text in ("a^2", "ab"):
        with pytest.raises(OutUndefinedError):
            out_class(parse_relator(text))


def test_analyze_examples():
    r = analyze(parse_relator("(AABaab)^2"), text="(AABaab)^2")
    assert r.applicability.case is Case.TheoremB
    assert r.decomposition.base_relator_xy.power_form() == "x^-2 y^2"
    assert r.decomposition.exponent == 2
    assert r.out_class is OutClass.VirtuallyZ
    assert r.polytope == {"class": "segment", "vertices": [[0, 0], [2, 0]]}
    assert not r.warnings

    r = analyze(parse_relator("a"))
    assert r.applicability.case is Case.NotOneEnded
    assert r.detection is Verdict.Unknown
    assert any("free product of cyclic groups" in w for w in r.warnings)
    assert r.decomposition is None and r.out_class is None

    r = analyze(parse_relator("ab"))
    assert r.applicability.case is Case.Unsupported
    assert r.detection is Verdict.Unknown and r.polytope is None
    assert r.warnings

    r = analyze(Word())
    assert r.applicability is None and r.warnings


@pytest.mark.parametrize(
    "text, flags",
    [
        ("(AABaab)^2", NO_ASSUMPTIONS),
        ("(aabbABAB)^2", HYP),
        ("(abAB)^3", NO_ASSUMPTIONS),
        ("AABaab", RG),
        ("a", NO_ASSUMPTIONS),
        ("ab", NO_ASSUMPTIONS),
        ("1", NO_ASSUMPTIONS),
        ("aab", HYP),
    ],
)
def test_report_json_validates(text, flags):
    rec = analyze(parse_relator(text), flags, text=text).to_json()
    jsonschema.validate(rec, SCHEMA)
    json.dumps(rec)
    assert "timing_ms" not in analyze(parse_relator(text), flags).to_json(timing=False)


def test_analyze_timings_present_when_applicable():
    r = analyze(parse_relator("(AABaab)^2"))
    assert set(r.timing_ms) == {"detect", "compute"}
    assert set(analyze(parse_relator("a")).timing_ms) == {"detect"}


def _corpus():
    return oracle.theorem_a_corpus(21, 150, max_len=30)


def test_detect_compute_agreement():
    seen = 0
    for R in _corpus():
        r = analyze(R, HYP)
        if r.applicability.case is not Case.TheoremA:
            assert max_root(R)[1] > 1
            continue
        seen += 1
        hnn = not r.decomposition.is_trivial
        assert (r.detection is Verdict.NonTrivial) == hnn, R
        assert not any("disagree" in w for w in r.warnings)
    assert seen > 100


def test_length_bound_and_reconstruction():
    inputs = [R for R in _corpus()]
    rng = random.Random(3)
    inputs += [free_reduce(oracle.derived_subgroup_word(rng, rng.randint(2, 5)).letters * n)
               for n in (2, 3) for _ in range(15)]
    hnn_seen = 0
    for R in inputs:
        t = triage(R, HYP)
        if t.case not in (Case.TheoremA, Case.TheoremB):
            continue
        d = compute(R, HYP)
        if d.is_trivial:
            continue
        hnn_seen += 1
        S, n = max_root(R)
        assert len(d.base_relator_xy) < len(CyclicWord.of(S))
        assert d.exponent == n
        rebuilt = reconstruct(d)
        assert shortest_orbit_set(CyclicWord.of(rebuilt)) == shortest_orbit_set(CyclicWord.of(R))
    assert hnn_seen > 20


def test_reconstruct_rejects_trivial():
    with pytest.raises(ValueError):
        reconstruct(JsjDecomposition.trivial())


def test_exponent_invariance():
    for S in _corpus()[:60]:
        if max_root(S)[1] != 1:
            continue
        verdicts = {detect(free_reduce(S.letters * n), HYP) for n in (1, 2, 3)}
        if triage(free_reduce(S.letters * 2)).case is Case.FuchsianCase:
            continue
        assert len(verdicts) == 1, S


def test_fuchsian_always_trivial():
    for k in (1, -1):
        base = "abAB" if k == 1 else "baBA"
        for n in (2, 3, 4):
            for u in ("", "a", "bA", "BBa"):
                R = free_reduce(u + base * n + Word(u).inverse().letters)
                assert triage(R).case is Case.FuchsianCase
                assert compute(R).is_trivial
                assert detect(R) is Verdict.Trivial
