"""Audit of the literal clause tables against exact computation.

The report collects: clause counts, overlapping clauses, coherence between the
merged theorem lists and the lemmas, clauses whose literal verdict a scan
contradicts (with witnesses), and disagreements between the two global
root-number modes.
"""

from __future__ import annotations

import math
import random
from dataclasses import asdict
from typing import Iterable

from . import clauses as cl
from .arith import factorize
from .classify import SurfaceJ0, SurfaceJ1728, classify
from .local_root import Mode, global_root_j0, global_root_j1728
from .scanner import family_id, find_both_signs, scan

# Worked examples with the sign claimed for every fiber.
CLAIMED_CONSTANT = (
    (SurfaceJ0(1053, 39), 1),
    (SurfaceJ0(405, 15), -1),
    (SurfaceJ0(27, 16), 1),
    (SurfaceJ1728(3, 5, 7), -1),
    (SurfaceJ1728(3, 5, 11), 1),
)


def clause_counts() -> dict[str, dict[str, int]]:
    return {k: {"encoded": len(t), "expected": cl.EXPECTED_COUNTS[k]} for k, t in cl.LEMMA_TABLES.items()}


def clause_overlaps() -> dict[str, list[dict]]:
    out = {}
    for lemma in cl.LEMMA_TABLES:
        out[lemma] = [
            {"first": o.first, "second": o.second, "same_value": o.same_value, "example": dict(o.example)}
            for o in cl.overlaps(lemma)
        ]
    return out


def _outcome(table, feats) -> int:
    """0 when no clause fires, else the value of the first firing clause."""
    hit = cl.lookup(table, feats)
    return hit.value if hit.constant else 0


def theorem_coherence() -> dict[str, list[dict]]:
    """Residue classes where the merged theorem lists and the lemmas disagree.

    First list: option A/B must fire exactly when the w2 lemma is constant,
    with A for C2 = 3 and B for C2 = 1 mod 4.  Second list: list 1/2 must fire
    exactly when the w3 lemma is constant with value +1/-1.
    """
    first, second = [], []
    for f in cl.feature_domain("j0_w2"):
        lemma = cl.lookup(cl.J0_W2, f).constant
        thm = any(c.fires(f) for c in cl.THEOREM_J0_FIRST)
        if lemma != thm:
            first.append(dict(f, lemma=lemma, theorem=thm))
    for f in cl.feature_domain("j0_w3"):
        lemma = _outcome(cl.J0_W3, f)
        hits = {c.value for c in cl.THEOREM_J0_SECOND if c.fires(f)}
        thm = 1 if hits == {"+1"} else -1 if hits == {"-1"} else (0 if not hits else 2)
        if lemma != thm:
            second.append(dict(f, lemma=lemma, theorem=thm))
    return {"first_list": first, "second_list": second}


def mode_disagreements(bound: int) -> dict[str, dict]:
    """Compare PerPrime and PaperClosedForm for 0 < |delta| <= bound.

    The j = 0 closed form is only claimed when v_p(delta) <= 3 for p >= 5.
    """
    j0_in = j0_out = j1728 = 0
    j0_examples: list[int] = []
    j1728_examples: list[int] = []
    for d in range(-bound, bound + 1):
        if d == 0:
            continue
        if global_root_j1728(d).sign != global_root_j1728(d, Mode.PAPER_CLOSED_FORM).sign:
            j1728 += 1
            if len(j1728_examples) < 10:
                j1728_examples.append(d)
        if global_root_j0(d).sign != global_root_j0(d, Mode.PAPER_CLOSED_FORM).sign:
            in_domain = all(e <= 3 for p, e in factorize(d) if p >= 5)
            if in_domain:
                j0_in += 1
            else:
                j0_out += 1
                if len(j0_examples) < 10:
                    j0_examples.append(d)
    return {
        "bound": {"abs_delta_max": bound},
        "j0": {"in_domain": j0_in, "outside_domain": j0_out, "examples": j0_examples},
        "j1728": {"disagreements": j1728, "examples": j1728_examples},
    }


def audit_family(surface, H: int, claimed: int | None = None, **kw) -> dict:
    """Literal-table and exact verdicts for one surface, checked by a scan."""
    literal = classify(surface, "literal", **kw)
    local = classify(surface, "local")
    rep = scan(surface, H, workers=1)
    signs = sorted({w.sign for w in rep.witnesses})
    entry = {
        "family": family_id(surface),
        "claimed": claimed,
        "literal": literal.to_dict(),
        "local": local.to_dict(),
        "scan": rep.to_dict(),
        "flagged_clauses": [],
    }
    if literal.constant:
        contra = [asdict(w) for w in rep.witnesses if w.sign != literal.sign]
        if contra:
            entry["flagged_clauses"] = [{"clause": c, "witnesses": contra} for c in literal.trail]
    if claimed is not None and any(s != claimed for s in signs):
        entry["claim_contradicted"] = [asdict(w) for w in rep.witnesses if w.sign != claimed]
    return entry


def _random_surfaces(rng: random.Random, count: int, bound: int) -> Iterable:
    made = 0
    while made < count:
        if made % 2 == 0:
            A, B, C = (rng.randint(1, bound) for _ in range(3))
            if math.gcd(A, B) != 1:
                continue
            yield SurfaceJ0(3 * A * A * C, B * B * C)
        else:
            A, B = rng.randint(1, bound), rng.randint(1, bound)
            if math.gcd(A, B) != 1:
                continue
            yield SurfaceJ1728(A, B, rng.choice((-1, 1)) * rng.randint(1, bound))
        made += 1


def literal_sweep(count: int, bound: int, H: int, seed: int = 0) -> dict:
    """How often the literal tables disagree with the exact classifier on
    representable families, and scan witnesses for each disagreement."""
    rng = random.Random(seed)
    stats = {"families": 0, "agree": 0, "literal_constant_wrong": 0, "literal_misses_constant": 0, "literal_wrong_sign": 0}
    flagged: dict[str, list] = {}
    for s in _random_surfaces(rng, count, bound):
        stats["families"] += 1
        literal, local = classify(s, "literal"), classify(s, "local")
        if literal.constant == local.constant and literal.sign == local.sign:
            stats["agree"] += 1
            continue
        if literal.constant and not local.constant:
            stats["literal_constant_wrong"] += 1
            found = find_both_signs(s, H)
            wit = [asdict(w) for sg, w in found.items() if sg != literal.sign]
            for c in literal.trail:
                if c.startswith("sigma"):
                    continue
                flagged.setdefault(c, []).append({"family": family_id(s), "witnesses": wit})
        elif local.constant and not literal.constant:
            stats["literal_misses_constant"] += 1
        else:
            stats["literal_wrong_sign"] += 1
            for c in literal.trail:
                if not c.startswith("sigma"):
                    flagged.setdefault(c, []).append({"family": family_id(s), "witnesses": []})
    return {"stats": stats, "flagged_clauses": {k: v[:3] for k, v in sorted(flagged.items())}, "seed": seed}


def build_report(H: int = 50, sweep: int = 200, sweep_bound: int = 30, mode_bound: int = 10_000, seed: int = 0) -> dict:
    return {
        "clause_counts": clause_counts(),
        "clause_overlaps": clause_overlaps(),
        "theorem_coherence": theorem_coherence(),
        "worked_examples": [audit_family(s, H, claimed) for s, claimed in CLAIMED_CONSTANT],
        "literal_sweep": literal_sweep(sweep, sweep_bound, H, seed),
        "mode_disagreements": mode_disagreements(mode_bound),
    }


def summarize(report: dict) -> str:
    lines = []
    for k, v in report["clause_counts"].items():
        lines.append(f"{k}: {v['encoded']} clauses (expected {v['expected']}), {len(report['clause_overlaps'][k])} overlapping pairs")
    coh = report["theorem_coherence"]
    lines.append(f"theorem/lemma coherence: {len(coh['first_list'])} + {len(coh['second_list'])} residue classes differ")
    for e in report["worked_examples"]:
        sc = e["scan"]
        lines.append(
            f"{e['family']}: claimed {e['claimed']:+d}, literal {e['literal']['verdict']}, "
            f"local {e['local']['verdict']}, scan H={sc['H']} +{sc['wplus']}/-{sc['wminus']}"
        )
    st = report["literal_sweep"]["stats"]
    lines.append("literal sweep: " + ", ".join(f"{k}={v}" for k, v in st.items()))
    md = report["mode_disagreements"]
    lines.append(
        f"mode disagreements up to {md['bound']['abs_delta_max']}: j0 in-domain {md['j0']['in_domain']}, "
        f"outside {md['j0']['outside_domain']}; j1728 {md['j1728']['disagreements']}"
    )
    return "\n".join(lines)
