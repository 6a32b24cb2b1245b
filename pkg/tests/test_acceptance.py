"""Acceptance suite: one pass/fail line per criterion.

Criterion 7 includes the non-invalid-cycle-vertex equivalence exactly as
stated; it is refuted by explicit small bound quivers (see the pendant-cycle
regression in test_homdim.py) and fails on the seeded corpus whenever such a
configuration is drawn.  The failure is expected and documented; the other
two legs of the criterion hold with zero disagreements.
"""

import json
import subprocess
import sys
import time

import pytest

from conftest import FIXTURES
from agq.forbidden import INF, LengthOrInf
from agq.generator import GeneratorParams, random_ag_pair
from agq.homdim import (
    global_dimension,
    gorenstein_report,
    noninvalid_cycle_vertex,
    pdim_injective,
    pdim_injective_envelope,
    pdim_simple,
    self_injective_dimension,
    self_injective_infinite_by_cycle,
)
from agq.oracle import PdimResult, check_against_formulas, oracle_pdim, projective_cover_kernel, rep_of
from agq.quiver import opposite
from agq.strings import DirectedString
from agq.syzygy import is_invalid_vertex, omega1_injective, psi0_decompose, psi0_is_projective, resolve_symbolic

AGQ = [sys.executable, "-m", "agq.cli"]
FIG1 = str(FIXTURES / "fig1.agq")


def run_cli(*args):
    return subprocess.run(AGQ + [str(a) for a in args], capture_output=True, text=True)


def crit(number: int, description: str, passed: bool, detail: str = ""):
    tag = "PASS" if passed else "FAIL"
    print(f"[{tag}] criterion {number}: {description}" + (f" ({detail})" if detail else ""))
    assert passed, f"criterion {number}: {description} {detail}"


@pytest.fixture(scope="module")
def corpus():
    return [random_ag_pair(GeneratorParams(seed=seed))[0] for seed in range(1, 201)]


def test_criterion_1_fig1_gldim_cli():
    t0 = time.time()
    out = run_cli("gldim", FIG1, "--witness")
    elapsed = time.time() - t0
    lines = out.stdout.splitlines()
    witness_ok = lines[1] in ("witness: a_1_2 a_2_3 a_3_4 a_4_5",
                              "witness: a_1_2 a_2_3' a_3'_4 a_4_5")
    crit(1, "fig1 global dimension 4 with a maximal forbidden-path witness",
         out.returncode == 0 and lines[0] == "4" and witness_ok and elapsed < 1.0,
         f"{elapsed:.2f}s")


def test_criterion_2_fig1_simple_pdims(fig1):
    crit(2, "fig1 pdim S(1) = 4 and pdim S(5) = 0",
         pdim_simple(fig1, "1").value == LengthOrInf.finite(4)
         and pdim_simple(fig1, "5").value == LengthOrInf.finite(0))


def test_criterion_3_fig1_socle_block_classification(fig1):
    ok = (psi0_is_projective(fig1, "2R") and not psi0_is_projective(fig1, "4")
          and is_invalid_vertex(fig1, "2") == (True, 5)
          and is_invalid_vertex(fig1, "2R") == (True, 1)
          and is_invalid_vertex(fig1, "5") == (True, 2)
          and is_invalid_vertex(fig1, "4") == (False, None))
    crit(3, "fig1 socle-block projectivity and invalid-vertex conditions", ok)


def test_criterion_4_fig1_omega1_injective_4(fig1):
    desc, mlist = omega1_injective(fig1, "4")
    symbolic = {(s.kind, s.vertex, s.arrows) for s in mlist}
    block = {(s.kind, s.vertex, s.arrows) for s, _n in psi0_decompose(fig1, "4").items}
    expected = {("simple", "3", ()), ("simple", "3'", ()),
                ("simple", "4", ()), ("string", None, ("a_4_5",))}
    kernel = projective_cover_kernel(fig1, rep_of(fig1, "injective", "4")).kernel
    crit(4, "fig1 Omega1(E(4)) decomposition and kernel dims",
         symbolic | block == expected
         and kernel.dim_vector() == {"3": 1, "3'": 1, "4": 2, "5": 1})


def test_criterion_5_fig1_resolution_of_string(fig1):
    res = resolve_symbolic(fig1, "string", DirectedString.of(("a_1_2",)))
    crit(5, "fig1 resolution of M(a_1_2): length 2 with P2 = P(3L) + P(3R)",
         res.terminated == "projective" and res.length == 2
         and dict(res.levels[2].cover) == {"3L": 1, "3R": 1}
         and not res.levels[2].syzygy)


def test_criterion_6_oracle_equivalence(corpus):
    t0 = time.time()
    mismatches = []
    for seed, pair in enumerate(corpus, start=1):
        report = check_against_formulas(pair, cutoff=40)
        if not report.ok:
            mismatches.append((seed, report.mismatches[:2]))
    elapsed = time.time() - t0
    crit(6, "200-seed corpus: formulas agree with the oracle at cutoff 40",
         not mismatches and elapsed < 60.0,
         f"{elapsed:.1f}s, {len(mismatches)} mismatching seeds")


def test_criterion_7_cycle_criterion_equivalence(corpus):
    disagreements = []
    for seed, pair in enumerate(corpus, start=1):
        infinite = not self_injective_dimension(pair).value.is_finite
        if self_injective_infinite_by_cycle(pair)[0] != infinite:
            disagreements.append(seed)
    crit(7, "criterion equivalence: forbidden-cycle (A)/(B) test iff infinite "
            "self-injective dimension", not disagreements, f"{len(disagreements)} seeds")


def test_criterion_7_noninvalid_cycle_vertex_equivalence(corpus):
    disagreements = []
    for seed, pair in enumerate(corpus, start=1):
        infinite = not self_injective_dimension(pair).value.is_finite
        if noninvalid_cycle_vertex(pair)[0] != infinite:
            disagreements.append(seed)
    crit(7, "criterion equivalence: non-invalid vertex on a forbidden cycle iff "
            "infinite self-injective dimension (expected failure: the criterion is "
            "refuted by small instances; see decisions ledger)",
         not disagreements, f"disagreeing seeds {disagreements}")


def test_criterion_8_left_right_symmetry(corpus):
    bad = []
    for seed, pair in enumerate(corpus, start=1):
        op = opposite(pair)
        if self_injective_dimension(op).value != self_injective_dimension(pair).value:
            bad.append(("injdim", seed))
        if global_dimension(op).value != global_dimension(pair).value:
            bad.append(("gldim", seed))
    crit(8, "left-right symmetry of gldim and injdim on the corpus",
         not bad, f"{len(bad)} disagreements")


def test_criterion_9_gorenstein_fixtures(cyc2, cyc2e):
    g2 = gorenstein_report(cyc2)
    g2e = gorenstein_report(cyc2e)
    oracle_injdims = [oracle_pdim(cyc2, rep_of(cyc2, "injective", v), 20)
                      for v in cyc2.quiver.vertices]
    ok = (g2.gldim.value == INF and g2.injdim.value == LengthOrInf.finite(0)
          and g2.gorenstein
          and all(r == PdimResult(True, 0) for r in oracle_injdims)
          and not g2e.gorenstein and g2e.injdim.value == INF
          and g2e.envelope_pdim == INF and g2e.cycle_criterion
          and "Auslander condition fails" in g2e.auslander_note
          and oracle_pdim(cyc2e, rep_of(cyc2e, "injective", "3"), 20) == PdimResult(False, 20))
    crit(9, "cyc2 (gldim infinite, injdim 0, Gorenstein) and cyc2e "
            "(injdim and envelope infinite, Auslander note)", ok)


def test_criterion_10_gate_regression(gate):
    rep = pdim_injective(gate, "3")
    e3 = rep_of(gate, "injective", "3")
    p1 = rep_of(gate, "projective", "1")
    crit(10, "gate: pdim E(3) = 0 with E(3) isomorphic to P(1)",
         rep.value == LengthOrInf.finite(0)
         and oracle_pdim(gate, e3, 10) == PdimResult(True, 0)
         and e3.dim_vector() == p1.dim_vector()
         and pdim_injective_envelope(gate).is_finite)


def test_criterion_11_determinism():
    commands = [("gldim", FIG1), ("injdim", FIG1), ("gorenstein", FIG1, "--json"),
                ("forbidden", FIG1), ("resolve", FIG1, "--string", "a_1_2"),
                ("dot", FIG1), ("random", "--seed", "1")]
    stable = all(run_cli(*args).stdout == run_cli(*args).stdout for args in commands)
    crit(11, "byte-identical stdout across repeated runs", stable)


def test_observation_gldim_vs_injdim(corpus):
    # tracked as a statistic only: finite global dimension bounds the
    # self-injective dimension but need not equal it
    equal = strict = 0
    for pair in corpus:
        gl = global_dimension(pair).value
        if not gl.is_finite:
            continue
        inj = self_injective_dimension(pair).value
        if inj == gl:
            equal += 1
        else:
            strict += 1
    print(f"[OBSERVATION] finite gldim instances: injdim == gldim in {equal}, "
          f"injdim < gldim in {strict}")
