"""Instance checks for the majorization relations between face-to-flag degree
sequences.

Each checker first tests the structural hypotheses its relation needs. When
they fail it reports ``hypothesis="not met"`` with verdict ``"vacuous"`` and
asserts nothing. Otherwise it walks every composition ``sigma`` of the rank
(or a caller-supplied subset) and every rearrangement ``pi`` allowed by the
relation, recording one row per instance.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable

from .flagdeg import degree_sequence, f_vector, face_degrees
from .poset import (
    BOTTOM,
    RankedPoset,
    element_token,
    facets_isomorphic_as_lattices,
    is_boolean_interval,
    is_pure,
    is_simple_facet,
    is_simplicial_complex,
    is_simplicial_poset,
)
from .seqcore import (
    Composition,
    DegreeSequence,
    Verdict,
    compare,
    compositions_of,
    conjugate,
    multinomial,
    permutations_of,
)

__all__ = [
    "MET",
    "NOT_MET",
    "PASS",
    "FAIL",
    "VACUOUS",
    "VerificationReport",
    "check_majorization_theorem",
    "check_lemma_face_below",
    "check_stanley",
    "check_conjugate_relation",
    "check_weak_majorization_simple",
    "check_sum_identity",
    "scan_counterexample",
    "CHECKS",
    "run_check",
    "verify_all",
]

MET, NOT_MET = "met", "not met"
PASS, FAIL, VACUOUS = "pass", "fail", "vacuous"


@dataclass
class VerificationReport:
    check: str
    hypothesis: str
    verdict: str
    witness: dict | None = None
    notes: list[str] = field(default_factory=list)
    records: list[dict] = field(default_factory=list)
    # False for exploratory scans whose findings are not theorem failures
    asserts_theorem: bool = True

    def __post_init__(self):
        if self.verdict == FAIL and not self.witness:
            raise ValueError("a failing report needs a witness")

    @property
    def failed(self) -> bool:
        return self.asserts_theorem and self.verdict == FAIL

    def summary(self) -> dict:
        return {
            "check": self.check,
            "hypothesis": self.hypothesis,
            "verdict": self.verdict,
            "asserts_theorem": self.asserts_theorem,
            "instances": len(self.records),
            "notes": list(self.notes),
            "witness": self.witness,
        }

    def json_lines(self) -> list[str]:
        lines = [json.dumps({"check": self.check, **rec}, sort_keys=True) for rec in self.records]
        lines.append(json.dumps({"summary": True, **self.summary()}, sort_keys=True))
        return lines

    def __str__(self):
        text = f"{self.check}: hypothesis {self.hypothesis}, {self.verdict} ({len(self.records)} instances)"
        for note in self.notes:
            text += f"\n  note: {note}"
        if self.witness:
            text += f"\n  witness: {json.dumps(self.witness, sort_keys=True)}"
        return text


class _Degrees:
    """Per-poset memo of degree sequences and per-face degrees."""

    def __init__(self, p: RankedPoset):
        self.p = p
        self._seq: dict[Composition, DegreeSequence] = {}
        self._faces: dict[Composition, dict] = {}

    def faces(self, c: Composition) -> dict:
        if c not in self._faces:
            self._faces[c] = face_degrees(self.p, c)
        return self._faces[c]

    def seq(self, c: Composition) -> DegreeSequence:
        if c not in self._seq:
            self._seq[c] = degree_sequence(self.p, c)
        return self._seq[c]


def _sigmas(p: RankedPoset, sigmas: Iterable | None) -> list[Composition]:
    if sigmas is None:
        return compositions_of(p.max_rank)
    out = []
    for s in sigmas:
        c = s if isinstance(s, Composition) else Composition(tuple(s))
        if c.total != p.max_rank:
            raise ValueError(f"composition {c} does not sum to the rank {p.max_rank}")
        out.append(c)
    return out


def _pairs(p: RankedPoset, sigmas, strict: bool):
    for sigma in _sigmas(p, sigmas):
        for pi in permutations_of(sigma):
            if pi.first > sigma.first or (not strict and pi.first == sigma.first):
                yield sigma, pi


def _non_boolean_ideal(p: RankedPoset):
    for x in p:
        if not is_boolean_interval(p, BOTTOM, x):
            return x
    return None


def _pure_rank_notes(p: RankedPoset) -> list[str]:
    notes = []
    if p.max_rank < 1:
        notes.append("empty poset")
    elif not is_pure(p):
        bad = next(x for x in p.maximal_elements() if p.rank(x) != p.max_rank)
        notes.append(f"not pure: maximal element {element_token(bad)} has rank {p.rank(bad)} < {p.max_rank}")
    return notes


def _simplicial_notes(p: RankedPoset) -> list[str]:
    notes = _pure_rank_notes(p)
    if notes:
        return notes
    if not is_simplicial_poset(p):
        x = _non_boolean_ideal(p)
        notes.append(f"not a simplicial poset: the interval below {element_token(x)} is not boolean")
    return notes


def _not_met(name: str, notes: list[str], asserts: bool = True) -> VerificationReport:
    return VerificationReport(name, NOT_MET, VACUOUS, notes=notes, asserts_theorem=asserts)


def _finish(name: str, records: list[dict], witness: dict | None, asserts: bool = True) -> VerificationReport:
    if witness is not None:
        verdict = FAIL
    elif records:
        verdict = PASS
    else:
        verdict = VACUOUS
    return VerificationReport(name, MET, verdict, witness=witness, records=records, asserts_theorem=asserts)


def _pair_witness(sigma, pi, rel, ds, dp) -> dict:
    return {
        "sigma": list(sigma.parts),
        "pi": list(pi.parts),
        "relation": rel.verdict.value,
        "first_violation": rel.first_violation,
        "d_sigma": list(ds),
        "d_pi": list(dp),
    }


def check_majorization_theorem(p: RankedPoset, sigmas=None) -> VerificationReport:
    """``d^sigma`` majorizes ``d^pi`` when ``pi`` rearranges ``sigma`` and ``pi[0] >= sigma[0]``."""
    name = "majorization"
    notes = _simplicial_notes(p)
    if notes:
        return _not_met(name, notes)
    deg = _Degrees(p)
    records, witness = [], None
    for sigma, pi in _pairs(p, sigmas, strict=False):
        ds, dp = deg.seq(sigma), deg.seq(pi)
        rel = compare(ds, dp)
        ok = rel.verdict in (Verdict.MAJORIZES, Verdict.EQUAL)
        records.append({"sigma": list(sigma.parts), "pi": list(pi.parts), "relation": rel.verdict.value, "ok": ok})
        if not ok and witness is None:
            witness = _pair_witness(sigma, pi, rel, ds, dp)
    return _finish(name, records, witness)


def check_lemma_face_below(p: RankedPoset, sigmas=None) -> VerificationReport:
    """``d^sigma(F) >= d^pi(G)`` for every ``F < G`` of ranks ``sigma[0] < pi[0]``."""
    name = "lemma_face_below"
    notes = _simplicial_notes(p)
    if notes:
        return _not_met(name, notes)
    deg = _Degrees(p)
    records, witness = [], None
    for sigma, pi in _pairs(p, sigmas, strict=True):
        dF, dG = deg.faces(sigma), deg.faces(pi)
        pairs = 0
        ok = True
        for g in sorted(dG, key=element_token):
            below = [f for f in p.down_set(g) if p.rank(f) == sigma.first]
            for f in sorted(below, key=element_token):
                pairs += 1
                if dF[f] < dG[g]:
                    ok = False
                    if witness is None:
                        witness = {
                            "sigma": list(sigma.parts),
                            "pi": list(pi.parts),
                            "F": element_token(f),
                            "G": element_token(g),
                            "d_sigma_F": dF[f],
                            "d_pi_G": dG[g],
                        }
        records.append({"sigma": list(sigma.parts), "pi": list(pi.parts), "pairs": pairs, "ok": ok})
    return _finish(name, records, witness)


def check_stanley(p: RankedPoset) -> VerificationReport:
    """``f_i <= f_{k-i}`` whenever ``1 <= i <= k - i``."""
    name = "stanley"
    notes = _simplicial_notes(p)
    if notes:
        return _not_met(name, notes)
    k = p.max_rank
    f = f_vector(p)
    records, witness = [], None
    for i in range(1, k // 2 + 1):
        ok = f[i] <= f[k - i]
        records.append({"i": i, "f_i": f[i], "f_k_minus_i": f[k - i], "ok": ok})
        if not ok and witness is None:
            witness = {"i": i, "f_i": f[i], "f_k_minus_i": f[k - i]}
    return _finish(name, records, witness)


def check_conjugate_relation(p: RankedPoset) -> VerificationReport:
    """The conjugate of ``d^(i,k-i)`` majorizes ``d^(k-i,i)`` on simplicial complexes."""
    name = "conjugate"
    notes = _simplicial_notes(p)
    if not notes and not is_simplicial_complex(p):
        notes.append("simplicial poset but not a simplicial complex: two faces share a vertex set")
    if notes:
        return _not_met(name, notes)
    k = p.max_rank
    deg = _Degrees(p)
    records, witness = [], None
    for i in range(1, k):
        a = conjugate(deg.seq(Composition((i, k - i))))
        b = deg.seq(Composition((k - i, i)))
        rel = compare(a, b)
        ok = rel.verdict in (Verdict.MAJORIZES, Verdict.EQUAL)
        records.append({"i": i, "relation": rel.verdict.value, "ok": ok})
        if not ok and witness is None:
            witness = {
                "i": i,
                "relation": rel.verdict.value,
                "first_violation": rel.first_violation,
                "conjugate": list(a),
                "d_k_minus_i": list(b),
            }
    return _finish(name, records, witness)


def _face_counts_below(p: RankedPoset, top) -> dict[int, int]:
    counts = {p.rank(top): 1}
    for x in p.down_set(top):
        counts[p.rank(x)] = counts.get(p.rank(x), 0) + 1
    return counts


def check_weak_majorization_simple(p: RankedPoset, sigmas=None) -> VerificationReport:
    """``d^sigma`` weakly majorizes ``d^pi`` when every facet is the same simple polytope.

    For ``pi[0] > sigma[0]`` the ratio of totals is also computed from face
    counts of a single facet and checked to be at least one and to match the
    actual totals exactly.
    """
    name = "weak_majorization_simple"
    notes = _pure_rank_notes(p)
    if not notes:
        bad = [x for x in p.maximal_elements() if not is_simple_facet(p, x)]
        if bad:
            notes.append(f"maximal element {element_token(bad[0])} is not simple")
        if not facets_isomorphic_as_lattices(p):
            notes.append("maximal faces are not all isomorphic")
    if notes:
        return _not_met(name, notes)
    k = p.max_rank
    N = _face_counts_below(p, p.maximal_elements()[0])
    deg = _Degrees(p)
    records, witness = [], None
    for sigma, pi in _pairs(p, sigmas, strict=False):
        ds, dp = deg.seq(sigma), deg.seq(pi)
        rel = compare(ds, dp)
        ok = rel.dominates
        rec = {"sigma": list(sigma.parts), "pi": list(pi.parts), "relation": rel.verdict.value}
        if pi.first > sigma.first:
            s, t = sigma.first, pi.first
            ratio = Fraction(N[s], N[t]) * Fraction(math.comb(k - s, t), math.comb(k - t, s))
            actual = Fraction(ds.sum, dp.sum)
            rec["ratio"] = str(ratio)
            ok = ok and ratio >= 1 and ratio == actual
            if ratio != actual and witness is None:
                witness = {"sigma": list(sigma.parts), "pi": list(pi.parts), "ratio": str(ratio), "actual": str(actual)}
        rec["ok"] = ok
        records.append(rec)
        if not ok and witness is None:
            witness = _pair_witness(sigma, pi, rel, ds, dp)
    return _finish(name, records, witness)


def check_sum_identity(p: RankedPoset, sigmas=None) -> VerificationReport:
    """``sum(d^sigma) = f_k * multinomial(k, sigma)``, hence equal over rearrangements."""
    name = "sum_identity"
    notes = _simplicial_notes(p)
    if notes:
        return _not_met(name, notes)
    k = p.max_rank
    fk = f_vector(p)[k]
    deg = _Degrees(p)
    records, witness = [], None
    for sigma in _sigmas(p, sigmas):
        expected = fk * multinomial(k, sigma.parts)
        sums = {str(pi): deg.seq(pi).sum for pi in permutations_of(sigma)}
        actual = deg.seq(sigma).sum
        ok = actual == expected and all(v == expected for v in sums.values())
        records.append({"sigma": list(sigma.parts), "sum": actual, "expected": expected, "ok": ok})
        if not ok and witness is None:
            witness = {"sigma": list(sigma.parts), "expected": expected, "sums": sums}
    return _finish(name, records, witness)


def scan_counterexample(p: RankedPoset, sigmas=None) -> VerificationReport:
    """List every ``(sigma, pi)`` with ``pi[0] >= sigma[0]`` where ``d^sigma`` fails to dominate ``d^pi``.

    No hypotheses beyond purity; findings are informational and never count
    as a theorem failure.
    """
    name = "counterexample_scan"
    notes = _pure_rank_notes(p)
    if notes:
        return _not_met(name, notes, asserts=False)
    deg = _Degrees(p)
    records, witness = [], None
    for sigma, pi in _pairs(p, sigmas, strict=False):
        ds, dp = deg.seq(sigma), deg.seq(pi)
        rel = compare(ds, dp)
        if rel.verdict in (Verdict.MAJORIZED_BY, Verdict.WEAKLY_MAJORIZED_BY, Verdict.INCOMPARABLE):
            records.append({"sigma": list(sigma.parts), "pi": list(pi.parts), "relation": rel.verdict.value})
            if witness is None:
                witness = _pair_witness(sigma, pi, rel, ds, dp)
    report = VerificationReport(
        name, MET, FAIL if witness else PASS, witness=witness, records=records, asserts_theorem=False
    )
    if witness:
        report.notes.append(f"{len(records)} pair(s) where the majorization conclusion fails")
    return report


CHECKS: dict[str, Callable[..., VerificationReport]] = {
    "majorization": check_majorization_theorem,
    "lemma": check_lemma_face_below,
    "stanley": check_stanley,
    "conjugate": check_conjugate_relation,
    "simple": check_weak_majorization_simple,
    "sum": check_sum_identity,
    "scan": scan_counterexample,
}

_TAKES_SIGMAS = {"majorization", "lemma", "simple", "sum", "scan"}


def run_check(name: str, p: RankedPoset, sigmas=None) -> VerificationReport:
    fn = CHECKS[name]
    if name in _TAKES_SIGMAS:
        return fn(p, sigmas)
    return fn(p)


def verify_all(p: RankedPoset, sigmas=None) -> list[VerificationReport]:
    return [run_check(name, p, sigmas) for name in CHECKS]
