"""Clause tables for the constancy lemmas, stored as data.

Each clause is a conjunction of guards on small integer features extracted
from (A, B, C).  A guard holds when ``feature % modulus`` lies in its residue
set.  The tables are transcribed option by option, typos included, so that
they can be audited mechanically; the exact local analysis in
``local_image`` is what the default classifier trusts.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Mapping

from .arith import padic_split, valuation


@dataclass(frozen=True)
class Guard:
    feature: str
    modulus: int
    residues: frozenset[int]

    def holds(self, feats: Mapping[str, int]) -> bool:
        return feats[self.feature] % self.modulus in self.residues

    def __str__(self) -> str:
        rs = ",".join(str(r) for r in sorted(self.residues))
        return f"{self.feature}≡{rs} mod {self.modulus}"


@dataclass(frozen=True)
class Clause:
    lemma: str
    label: str
    guards: tuple[Guard, ...]
    value: str  # name of the value rule, see VALUE_RULES

    def fires(self, feats: Mapping[str, int]) -> bool:
        return all(g.holds(feats) for g in self.guards)

    def __str__(self) -> str:
        return f"{self.lemma}[{self.label}]: " + " ∧ ".join(str(g) for g in self.guards) + f" ⇒ {self.value}"


def G(feature: str, modulus: int, *residues: int) -> Guard:
    return Guard(feature, modulus, frozenset(r % modulus for r in residues))


# value rules -----------------------------------------------------------------

def _chi4(u: int) -> int:
    return 1 if u % 4 == 1 else -1


def _chi8(u: int) -> int:
    # (-2/u) on odd residues: +1 for u = 1, 3 mod 8
    return 1 if u % 8 in (1, 3) else -1


VALUE_RULES: dict[str, Callable[[Mapping[str, int]], int]] = {
    "(-1/C2)": lambda f: _chi4(f["C2"]),
    "(-1)^(v3C+1)": lambda f: (-1) ** (f["v3C"] + 1),
    "(-1)^v3C": lambda f: (-1) ** f["v3C"],
    "+(-2/C2)": lambda f: _chi8(f["C2"]),
    "-(-2/C2)": lambda f: -_chi8(f["C2"]),
    "-1": lambda f: -1,
    "+1": lambda f: 1,
}


# lemma for w2 at j = 0 -------------------------------------------------------

def _j0_w2() -> tuple[Clause, ...]:
    L, V = "j0_w2", "(-1/C2)"
    out = [Clause(L, "1", (G("v2A", 3, 0), G("v2B", 3, 0), G("v2C", 6, 0)), V)]
    # (option, variable, residue mod 3, [(label, v2C mod 6, C2 mod 4 or None)])
    spec = [
        ("2", "v2A", 1, [("a", 0, None), ("b", 2, 1), ("c", 4, 3)]),
        ("3", "v2B", 1, [("a", 0, None), ("b", 2, 3), ("c", 4, 1)]),
        ("4", "v2A", 2, [("a", 0, 1), ("b", 2, None), ("c", 4, 3)]),
        ("5", "v2B", 2, [("a", 0, 3), ("b", 2, None), ("c", 4, 1)]),
    ]
    for opt, var, r, subs in spec:
        for lab, vc, c2 in subs:
            guards = [G(var, 3, r), G("v2C", 6, vc)]
            if c2 is not None:
                guards.append(G("C2", 4, c2))
            out.append(Clause(L, f"{opt}.{lab}", tuple(guards), V))
    return tuple(out)


# lemma for w3 at j = 0 -------------------------------------------------------
#
# Sub-clause shorthand:
#   ("B", s, cs)         B'^2 = s mod 9 and C3 in cs mod 9
#   ("A", s, cs)         A'^2 = s mod 9 and C3 in cs mod 9
#   ("CBA", c, bs, a)    C3 = c mod 9, B'^2 in bs, A'^2 = a
#   ("CAB", c, as_, b)   C3 = c mod 9, A'^2 in as_, B'^2 = b
#   ("C3", r)            C3 = r mod 3 (no further condition)

_J0W3_FIRST = {
    0: [
        ("a", (0,), [("B", 1, (5,)), ("B", 4, (8,)), ("B", 7, (2,))]),
        ("b", (2,), [("A", 1, (1, 7)), ("A", 4, (4, 7)), ("A", 7, (1, 4))]),
        ("c", (3,), [("B", 1, (4,)), ("B", 4, (1,)), ("B", 7, (7,))]),
        ("d", (5,), [("A", 1, (2, 8)), ("A", 4, (2, 5)), ("A", 7, (5, 8))]),
    ],
    1: [
        ("a", (0,), [("CBA", 1, (1, 4), 7), ("CBA", 2, (1, 4), 7), ("CBA", 4, (1, 7), 4),
                     ("CBA", 5, (4, 7), 1), ("CBA", 7, (4, 7), 1), ("CBA", 8, (1, 7), 4)]),
        ("b", (1, 2), [("C3", 1)]),
        ("c", (3,), [("CBA", 1, (1, 4), 4), ("CBA", 2, (1, 4), 1), ("CBA", 4, (1, 7), 1),
                     ("CBA", 5, (4, 7), 4), ("CBA", 7, (4, 7), 7), ("CBA", 8, (1, 7), 7)]),
        ("d", (4, 5), [("C3", 2)]),
    ],
    2: [
        ("a", (0,), [("B", 1, (5,)), ("B", 4, (8,)), ("B", 7, (2,))]),
        ("b", (1,), [("A", 1, (1, 4)), ("A", 4, (1, 7)), ("A", 7, (4, 7))]),
        ("c", (3,), [("B", 1, (2,)), ("B", 4, (5,)), ("B", 7, (8,))]),
        ("d", (4,), [("A", 1, (5, 8)), ("A", 4, (2, 8)), ("A", 7, (2, 5))]),
    ],
}

_J0W3_SECOND = {
    0: [
        ("a", (0,), [("B", 1, (1, 4)), ("B", 4, (1, 7)), ("B", 7, (4, 7))]),
        ("b", (2,), [("A", 1, (2,)), ("A", 4, (5,)), ("A", 7, (8,))]),
        ("c", (3,), [("B", 1, (5, 8)), ("B", 4, (2, 8)), ("B", 7, (2, 5))]),
        ("d", (5,), [("A", 1, (7,)), ("A", 4, (4,)), ("A", 7, (1,))]),
    ],
    1: [
        ("a", (0,), [("CAB", 1, (1, 4), 7), ("CAB", 2, (1, 4), 7), ("CAB", 4, (1, 7), 4),
                     ("CAB", 5, (4, 7), 1), ("CAB", 7, (4, 7), 1), ("CAB", 8, (1, 7), 4)]),
        ("b", (1, 2), [("C3", 2)]),
        ("c", (3,), [("CBA", 1, (1, 4), 4), ("CBA", 2, (1, 4), 1), ("CBA", 4, (1, 7), 1),
                     ("CBA", 5, (4, 7), 4), ("CBA", 7, (4, 7), 7), ("CBA", 8, (1, 7), 7)]),
        ("d", (4, 5), [("C3", 2)]),
    ],
    2: [
        ("a", (0,), [("B", 1, (2, 8)), ("B", 4, (2, 5)), ("B", 7, (5, 8))]),
        ("b", (1,), [("A", 1, (5,)), ("A", 4, (8,)), ("A", 7, (2,))]),
        ("c", (3,), [("B", 1, (1, 7)), ("B", 4, (4, 7)), ("B", 7, (1, 4))]),
        ("d", (4,), [("A", 1, (4,)), ("A", 4, (1,)), ("A", 7, (7,))]),
    ],
}

_ROMAN = ("i", "ii", "iii", "iv", "v", "vi")


def _w3_sub_guards(sub: tuple) -> list[Guard]:
    kind = sub[0]
    if kind == "B":
        return [G("Bp2", 9, sub[1]), G("C3", 9, *sub[2])]
    if kind == "A":
        return [G("Ap2", 9, sub[1]), G("C3", 9, *sub[2])]
    if kind == "CBA":
        return [G("C3", 9, sub[1]), G("Bp2", 9, *sub[2]), G("Ap2", 9, sub[3])]
    if kind == "CAB":
        return [G("C3", 9, sub[1]), G("Ap2", 9, *sub[2]), G("Bp2", 9, sub[3])]
    if kind == "C3":
        return [G("C3", 3, sub[1])]
    raise ValueError(kind)


def _build_w3(lemma: str, blocks: Iterable[tuple[str, dict, str]]) -> tuple[Clause, ...]:
    out: list[Clause] = []
    for bname, table, value in blocks:
        for k, items in table.items():
            for lab, vcs, subs in items:
                head = [G("k", 3, k), G("v3C", 6, *vcs)]
                for i, sub in enumerate(subs):
                    suffix = f".{_ROMAN[i]}" if len(subs) > 1 else ""
                    out.append(Clause(lemma, f"{bname}.{k + 1}.{lab}{suffix}", tuple(head + _w3_sub_guards(sub)), value))
    return tuple(out)


def _j0_w3() -> tuple[Clause, ...]:
    return _build_w3(
        "j0_w3",
        [("first", _J0W3_FIRST, "(-1)^(v3C+1)"), ("second", _J0W3_SECOND, "(-1)^v3C")],
    )


# lemma for w2 at j = 1728 ----------------------------------------------------

def _j1728_w2() -> tuple[Clause, ...]:
    L = "j1728_w2"
    odd, even = G("k", 2, 1), G("k", 2, 0)
    a1, a9, b1, b9 = G("a2", 16, 1), G("a2", 16, 9), G("b2", 16, 1), G("b2", 16, 9)
    same, plus8 = G("a2_minus_b2", 16, 0), G("a2_minus_b2", 16, 8)

    def c(*rs: int, mod: int = 16) -> Guard:
        return G("C2", mod, *rs)

    def vc(*rs: int) -> Guard:
        return G("v2C", 4, *rs)

    first = [
        ("1.a.i", (odd, vc(0), c(3, 7), a1, b1)),
        ("1.a.ii", (odd, vc(0), c(11, 15), a9, b9)),
        ("1.b.i", (odd, vc(1, 3), c(3, 7))),
        ("1.c.i", (odd, vc(2), c(5, 7), a1, b1)),
        ("1.c.ii", (odd, vc(2), c(9, 13), a9, b9)),
        ("2.a.i", (even, vc(0, 2), c(7, mod=8), a9, b9)),
        ("2.b.i", (even, vc(1), c(7, 15), plus8)),
        ("2.c.i", (even, vc(3), c(5, mod=8), plus8)),
    ]
    second = [
        ("1.a.i", (odd, vc(0), c(1, 5, 9, 13))),
        ("1.a.ii", (odd, vc(0), c(3, 7), b9, a9)),
        ("1.a.iii", (odd, vc(0), c(11, 15), a1, b1)),
        ("1.b.i", (odd, vc(1, 3), c(1, 3, mod=8))),
        ("1.c.i", (odd, vc(2), c(3, 7, 11, 15))),
        ("1.c.ii", (odd, vc(2), c(1, 5), a1, b1)),
        ("1.c.iii", (odd, vc(2), c(9, 13), a9, b9)),
        ("2.a.i", (even, vc(0), c(1), b1)),
        ("2.a.ii", (even, vc(0), c(3), a9)),
        ("2.a.iii", (even, vc(0), c(9), b9)),
        ("2.a.iv", (even, vc(0), c(11), a1)),
        ("2.b.i", (even, vc(1), c(3, 11), same)),
        ("2.c.i", (even, vc(2), c(1), a1)),
        ("2.c.ii", (even, vc(2), c(3), b9)),
        ("2.c.iii", (even, vc(2), c(9), a9)),
        ("2.c.iv", (even, vc(2), c(11), b1)),
        ("2.d.i", (even, vc(3), c(1, mod=8), same)),
    ]
    out = [Clause(L, f"first.{lab}", g, "+(-2/C2)") for lab, g in first]
    out += [Clause(L, f"second.{lab}", g, "-(-2/C2)") for lab, g in second]
    return tuple(out)


def _j1728_w3() -> tuple[Clause, ...]:
    L = "j1728_w3"
    return (
        Clause(L, "even.v3C≡2", (G("v3AB", 2, 0), G("v3C", 4, 2)), "-1"),
        Clause(L, "even.otherwise", (G("v3AB", 2, 0), G("v3C", 4, 0, 1, 3)), "+1"),
    )


# merged theorem lists for j = 0, kept only to check coherence with the lemmas

def _theorem_j0_first() -> tuple[Clause, ...]:
    out: list[Clause] = []
    lists = {
        "A": (3, {"b": ("v2A", 1, (0, 4)), "c": ("v2B", 1, (0, 2)), "d": ("v2A", 2, (2, 4)), "e": ("v2B", 2, (0, 2))}),
        "B": (1, {"b": ("v2A", 1, (0, 2)), "c": ("v2B", 1, (0, 4)), "d": ("v2A", 2, (0, 2)), "e": ("v2B", 2, (2, 4))}),
    }
    for name, (c2, opts) in lists.items():
        out.append(Clause("thm_j0_first", f"{name}.a", (G("C2", 4, c2), G("v2A", 3, 0), G("v2B", 3, 0), G("v2C", 6, 0)), name))
        for lab, (var, r, vcs) in opts.items():
            for i, v in enumerate(vcs):
                out.append(Clause("thm_j0_first", f"{name}.{lab}.{_ROMAN[i]}", (G("C2", 4, c2), G(var, 3, r), G("v2C", 6, v)), name))
    return tuple(out)


_THM_J0_LIST1 = {
    0: [
        ("a", (3,), [("B", 1, (4,)), ("B", 4, (1,)), ("B", 7, (7,))]),
        ("b", (5,), [("A", 1, (2, 8)), ("A", 4, (2, 5)), ("A", 7, (5, 8))]),
        ("c", (0,), [("B", 1, (1, 4)), ("B", 4, (1, 7)), ("B", 7, (4, 7))]),
        ("d", (2,), [("A", 1, (2,)), ("A", 4, (5,)), ("A", 7, (8,))]),
    ],
    1: [
        ("a", (0,), [("CAB", 1, (1, 4), 7), ("CAB", 2, (1, 4), 7), ("CAB", 4, (1, 7), 4),
                     ("CAB", 5, (4, 7), 1), ("CAB", 7, (4, 7), 1), ("CAB", 8, (1, 7), 4)]),
        ("b", (1, 4), [("C3", 1)]),
        ("c", (2, 5), [("C3", 2)]),
        ("d", (3,), [("CBA", 1, (1, 4), 4), ("CBA", 2, (1, 4), 1), ("CBA", 4, (1, 7), 1),
                     ("CBA", 5, (4, 7), 4), ("CBA", 7, (4, 7), 7), ("CBA", 8, (1, 7), 7)]),
    ],
    2: [
        ("a", (1,), [("A", 1, (1, 4)), ("A", 4, (1, 7)), ("A", 7, (4, 7))]),
        ("b", (3,), [("B", 1, (2,)), ("B", 4, (5,)), ("B", 7, (8,))]),
        ("c", (0,), [("B", 1, (2, 8)), ("B", 4, (2, 5)), ("B", 7, (5, 8))]),
        ("d", (4,), [("A", 1, (4,)), ("A", 4, (1,)), ("A", 7, (7,))]),
    ],
}

_THM_J0_LIST2 = {
    0: [
        ("a", (0,), [("B", 1, (5,)), ("B", 4, (8,)), ("B", 7, (2,))]),
        ("b", (2,), [("A", 1, (1, 7)), ("A", 4, (4, 7)), ("A", 7, (1, 4))]),
        ("c", (3,), [("B", 1, (5, 8)), ("B", 4, (2, 8)), ("B", 7, (2, 5))]),
        ("d", (5,), [("A", 1, (7,)), ("A", 4, (4,)), ("A", 7, (1,))]),
    ],
    1: [
        ("a", (0,), [("CBA", 1, (1, 4), 7), ("CBA", 2, (1, 4), 7), ("CBA", 4, (1, 7), 4),
                     ("CBA", 5, (4, 7), 1), ("CBA", 7, (4, 7), 1), ("CBA", 8, (1, 7), 4)]),
        ("b", (1, 4), [("C3", 2)]),
        ("c", (2, 5), [("C3", 1)]),
        ("d", (3,), [("CBA", 1, (1, 4), 4), ("CBA", 2, (1, 4), 1), ("CBA", 4, (1, 7), 1),
                     ("CBA", 5, (4, 7), 4), ("CBA", 7, (4, 7), 7), ("CBA", 8, (1, 7), 7)]),
    ],
    2: [
        ("a", (0,), [("B", 1, (5,)), ("B", 4, (8,)), ("B", 7, (2,))]),
        ("b", (1,), [("A", 1, (5,)), ("A", 4, (8,)), ("A", 7, (2,))]),
        ("c", (3,), [("B", 1, (1, 7)), ("B", 4, (4, 7)), ("B", 7, (1, 4))]),
        ("d", (4,), [("A", 1, (5, 8)), ("A", 4, (2, 8)), ("A", 7, (2, 5))]),
    ],
}


def _theorem_j0_second() -> tuple[Clause, ...]:
    return _build_w3("thm_j0_second", [("1", _THM_J0_LIST1, "+1"), ("2", _THM_J0_LIST2, "-1")])


J0_W2: tuple[Clause, ...] = _j0_w2()
J0_W3: tuple[Clause, ...] = _j0_w3()
J1728_W2: tuple[Clause, ...] = _j1728_w2()
J1728_W3: tuple[Clause, ...] = _j1728_w3()
THEOREM_J0_FIRST: tuple[Clause, ...] = _theorem_j0_first()
THEOREM_J0_SECOND: tuple[Clause, ...] = _theorem_j0_second()

LEMMA_TABLES: dict[str, tuple[Clause, ...]] = {
    "j0_w2": J0_W2,
    "j0_w3": J0_W3,
    "j1728_w2": J1728_W2,
    "j1728_w3": J1728_W3,
}

# Number of options enumerated in each lemma, counted by hand from the text.
EXPECTED_COUNTS = {"j0_w2": 13, "j0_w3": 76, "j1728_w2": 25, "j1728_w3": 2}


# feature extraction -----------------------------------------------------------

def features_j0_w2(A: int, B: int, C: int) -> dict[str, int]:
    v, u = padic_split(C, 2)
    return {"v2A": valuation(A, 2), "v2B": valuation(B, 2), "v2C": v, "C2": u % 4}


def features_j0_w3(A: int, B: int, C: int, reading: str = "v3") -> dict[str, int]:
    """k, A', B' as in the lemma.  ``reading="v2"`` takes the printed
    valuations at 2 literally instead of the valuations at 3."""
    p = 3 if reading == "v3" else 2
    vA, vB = valuation(A, p), valuation(B, p)
    A3, B3 = padic_split(A, 3).unit, padic_split(B, 3).unit
    if vB == 0:
        k, Ap, Bp = vA, A3, B3
    else:
        k, Ap, Bp = vB - 1, B3, A3
    v3C, C3 = padic_split(C, 3)
    return {"k": k, "v3C": v3C, "C3": C3 % 9, "Ap2": Ap * Ap % 9, "Bp2": Bp * Bp % 9}


def normalize_j1728(A: int, B: int) -> tuple[int, int, bool]:
    """Swap so that B is odd (t -> 1/t exchanges the roles of A and B)."""
    if B % 2 == 0:
        return B, A, True
    return A, B, False


def features_j1728_w2(A: int, B: int, C: int) -> dict[str, int]:
    A, B, _ = normalize_j1728(A, B)
    k, Au = padic_split(A, 2)
    v2C, C2 = padic_split(C, 2)
    a2, b2 = Au * Au % 16, B * B % 16
    return {"k": k, "v2C": v2C, "C2": C2 % 16, "a2": a2, "b2": b2, "a2_minus_b2": (a2 - b2) % 16}


def features_j1728_w3(A: int, B: int, C: int) -> dict[str, int]:
    return {"v3AB": valuation(A * B, 3), "v3C": valuation(C, 3)}


# evaluation -------------------------------------------------------------------

@dataclass(frozen=True)
class ClauseHit:
    constant: bool
    value: int | None
    clauses: tuple[Clause, ...]

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(c.label for c in self.clauses)


def lookup(table: Iterable[Clause], feats: Mapping[str, int]) -> ClauseHit:
    """All clauses that fire.  When several fire the first one determines the
    value; overlaps are reported by the audit, not resolved here."""
    hits = tuple(c for c in table if c.fires(feats))
    if not hits:
        return ClauseHit(False, None, ())
    return ClauseHit(True, VALUE_RULES[hits[0].value](feats), hits)


# exhaustive audit --------------------------------------------------------------

def feature_domain(lemma: str) -> Iterator[dict[str, int]]:
    """Every residue configuration the lemma can see (valuations taken one
    full period beyond the guard moduli)."""
    odd16 = range(1, 16, 2)
    if lemma == "j0_w2":
        for va, vb in itertools.product(range(6), repeat=2):
            if va and vb:
                continue
            for vc, c2 in itertools.product(range(12), (1, 3)):
                yield {"v2A": va, "v2B": vb, "v2C": vc, "C2": c2}
    elif lemma in ("j0_w3", "thm_j0_second"):
        units9 = (1, 2, 4, 5, 7, 8)
        for k, vc, c3, ap, bp in itertools.product(range(6), range(12), units9, (1, 4, 7), (1, 4, 7)):
            yield {"k": k, "v3C": vc, "C3": c3, "Ap2": ap, "Bp2": bp}
    elif lemma == "j1728_w2":
        for k, vc, c2, a2, b2 in itertools.product(range(6), range(12), odd16, (1, 9), (1, 9)):
            yield {"k": k, "v2C": vc, "C2": c2, "a2": a2, "b2": b2, "a2_minus_b2": (a2 - b2) % 16}
    elif lemma == "j1728_w3":
        for v3ab, vc in itertools.product(range(6), range(12)):
            yield {"v3AB": v3ab, "v3C": vc}
    else:
        raise KeyError(lemma)


@dataclass(frozen=True)
class Overlap:
    first: str
    second: str
    example: tuple[tuple[str, int], ...]
    same_value: bool


def overlaps(lemma: str, table: Iterable[Clause] | None = None) -> list[Overlap]:
    """Pairs of clauses that fire together on some residue configuration."""
    table = tuple(table if table is not None else LEMMA_TABLES[lemma])
    seen: dict[tuple[str, str], Overlap] = {}
    for feats in feature_domain(lemma):
        hits = [c for c in table if c.fires(feats)]
        for a, b in itertools.combinations(hits, 2):
            key = (a.label, b.label)
            if key not in seen:
                same = VALUE_RULES[a.value](feats) == VALUE_RULES[b.value](feats)
                seen[key] = Overlap(a.label, b.label, tuple(sorted(feats.items())), same)
    return list(seen.values())


# serialization (lets a replacement table be loaded from JSON) -------------------

def table_to_json(table: Iterable[Clause]) -> list[dict]:
    return [
        {
            "lemma": c.lemma,
            "label": c.label,
            "guards": [[g.feature, g.modulus, sorted(g.residues)] for g in c.guards],
            "value": c.value,
        }
        for c in table
    ]


def table_from_json(data: Iterable[Mapping]) -> tuple[Clause, ...]:
    out = []
    for d in data:
        if d["value"] not in VALUE_RULES:
            raise ValueError(f"unknown value rule {d['value']!r}")
        guards = tuple(G(f, m, *rs) for f, m, rs in d["guards"])
        out.append(Clause(d["lemma"], d["label"], guards, d["value"]))
    return tuple(out)
