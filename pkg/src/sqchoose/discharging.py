"""Charges, rules R1-R4 and the local face-case replay.

Charges are exact Fractions. In the local model a center face of length d sees
neighbor faces g_0..g_{d-1} in cyclic order; in a cubic plane graph the flanks
of g_i (the third faces at the ends of the shared edge) are g_{i-1} and g_{i+1}.
Neighbor classes are 3, 4, 6 and 7 (standing for 7+).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil

import numpy as np

from .catalog import DETECTION_FAMILIES, detect_family
from .errors import Disconnected, HypothesisViolation, NotCubic
from .graph import PlaneGraph, has_five_cycle, is_cubic

RULE_AMOUNTS = {"R1": Fraction(1), "R2": Fraction(3, 4), "R3": Fraction(1, 2), "R4": Fraction(1)}
HYPOTHESIS_ORDER = ("F1", "F2", "F3", "F4", "H1", "H2", "H3", "H4", "H5", "H6")


@dataclass(frozen=True)
class Transfer:
    source: int
    target: int
    amount: Fraction
    rule: str


@dataclass(frozen=True)
class ChargeLedger:
    vertex_charges: tuple[Fraction, ...]
    face_charges: tuple[Fraction, ...]
    transfers: tuple[Transfer, ...] = ()

    def final_face_charges(self) -> tuple[Fraction, ...]:
        out = list(self.face_charges)
        for t in self.transfers:
            out[t.source] -= t.amount
            out[t.target] += t.amount
        return tuple(out)

    def total(self) -> Fraction:
        return sum(self.vertex_charges, Fraction(0)) + sum(self.face_charges, Fraction(0))

    def final_total(self) -> Fraction:
        return sum(self.vertex_charges, Fraction(0)) + sum(self.final_face_charges(), Fraction(0))


def initial_charges(pg: PlaneGraph) -> ChargeLedger:
    """2d(v)-6 on vertices and d(f)-6 on faces."""
    g = pg.graph
    if not g.is_connected():
        raise Disconnected("charges need a connected embedding")
    return ChargeLedger(
        tuple(Fraction(2 * g.degree(v) - 6) for v in range(g.n)),
        tuple(Fraction(len(f) - 6) for f in pg.faces),
    )


def flank_rule(c1: int, c2: int) -> str | None:
    """Rule for a 4-face whose flanks have lengths c1, c2 (7 stands for 7+); None when no rule applies."""
    a, b = sorted((min(c1, 7), min(c2, 7)))
    if a == 6 and b == 6:
        return "R1"
    if a == 6 and b == 7:
        return "R2"
    if a == 7:
        return "R3"
    return None


def apply_rules(pg: PlaneGraph, ledger: ChargeLedger) -> ChargeLedger:
    """Add R1-R4 transfers. A 4-face flank shorter than 6 matches no rule and moves nothing."""
    g = pg.graph
    if not is_cubic(g):
        raise NotCubic("flanking faces are defined for cubic graphs only")
    lengths = [len(f) for f in pg.faces]
    dart_face = pg.dart_face
    transfers = list(ledger.transfers)
    r4_pairs = set()

    def third_face(x: int, f: int, f2: int) -> int | None:
        rest = {dart_face[(x, y)] for y in pg.rotation[x]} - {f, f2}
        return rest.pop() if len(rest) == 1 else None

    for u, v in g.edges():
        for a, b in ((u, v), (v, u)):
            f, f2 = dart_face[(a, b)], dart_face[(b, a)]
            if f == f2 or lengths[f] < 7:
                continue
            if lengths[f2] == 3 and (f, f2) not in r4_pairs:
                r4_pairs.add((f, f2))
                transfers.append(Transfer(f, f2, RULE_AMOUNTS["R4"], "R4"))
            elif lengths[f2] == 4:
                h1, h2 = third_face(a, f, f2), third_face(b, f, f2)
                if h1 is None or h2 is None:
                    continue
                rule = flank_rule(lengths[h1], lengths[h2])
                if rule is not None:
                    transfers.append(Transfer(f, f2, RULE_AMOUNTS[rule], rule))
    return ChargeLedger(ledger.vertex_charges, ledger.face_charges, tuple(transfers))


# local case replay

_CLASSES = np.array([3, 4, 6, 7], dtype=np.int8)
_C3, _C4, _C6, _C7 = 0, 1, 2, 3
_LABEL = {3: "3", 4: "4", 6: "6", 7: "7+"}


@dataclass(frozen=True)
class LocalFaceCase:
    d: int
    neighbors: tuple[int, ...]
    flanks: tuple[tuple[int, int, int], ...]
    transfers: tuple[tuple[int, str, Fraction], ...]
    final: Fraction

    def as_dict(self) -> dict:
        return {
            "kind": "local-case",
            "d": self.d,
            "neighbors": [_LABEL[c] for c in self.neighbors],
            "flanks": [[i, _LABEL[a], _LABEL[b]] for i, a, b in self.flanks],
            "transfers": [[i, rule, str(amt)] for i, rule, amt in self.transfers],
            "final": str(self.final),
        }


def _window(seqs: np.ndarray, i: int, k: int, d: int) -> np.ndarray:
    return seqs[:, [(i + j) % d for j in range(k)]]


def _valid_mask(seqs: np.ndarray, d: int) -> np.ndarray:
    """Exclusions on full cyclic sequences (codes 0..3 for classes 3,4,6,7)."""
    ok = np.ones(len(seqs), dtype=bool)
    small = seqs <= _C4
    is3 = seqs == _C3
    is4 = seqs == _C4
    for i in range(d):
        w2 = _window(seqs, i, 2, d)
        # no two consecutive 4- neighbors
        ok &= ~((w2[:, 0] <= _C4) & (w2[:, 1] <= _C4))
        # a 3-face sees only 7+ faces besides the center
        ok &= ~((w2[:, 0] == _C3) & (w2[:, 1] != _C7))
        ok &= ~((w2[:, 1] == _C3) & (w2[:, 0] != _C7))
        w3 = _window(seqs, i, 3, d)
        ok &= ~((w3[:, 0] == _C4) & (w3[:, 1] == _C6) & (w3[:, 2] == _C4))
        if d == 8:
            w4 = _window(seqs, i, 4, d)
            ok &= ~((w4[:, 0] == _C4) & (w4[:, 1] == _C6) & (w4[:, 2] == _C6) & (w4[:, 3] == _C4))
        # gaps between a 3 and another 4-
        min_gap_33 = 4
        min_gap_34 = 4 if d <= 8 else 3
        for gap in range(1, d):
            j = (i + gap) % d
            back = d - gap
            if min(gap, back) < min_gap_33:
                ok &= ~(is3[:, i] & is3[:, j])
            if min(gap, back) < min_gap_34:
                ok &= ~(is3[:, i] & is4[:, j])
    n3 = is3.sum(axis=1)
    n4 = is4.sum(axis=1)
    nsmall = small.sum(axis=1)
    has3 = n3 > 0
    if d == 7:
        ok &= n4 <= 1
        ok &= ~has3 | ((n4 == 0) & (n3 == 1))
    if d in (8, 9, 10):
        ok &= ~has3 | (nsmall <= d - 6)
    ok &= nsmall <= d // 2
    return ok


def _sent_quarters(seqs: np.ndarray, d: int) -> np.ndarray:
    """Charge the center sends, in quarters, per sequence."""
    out = np.zeros(len(seqs), dtype=np.int64)
    for i in range(d):
        prev, cur, nxt = seqs[:, (i - 1) % d], seqs[:, i], seqs[:, (i + 1) % d]
        n6 = (prev == _C6).astype(np.int64) + (nxt == _C6)
        n7 = (prev == _C7).astype(np.int64) + (nxt == _C7)
        four = (cur == _C4) & (n6 + n7 == 2)
        out += np.where(four, 2 + n6, 0)
        out += np.where(cur == _C3, 4, 0)
    return out


def _enumerate_sequences(d: int) -> np.ndarray:
    """All cyclic class sequences passing the exclusions, grown column by column."""
    seqs = np.arange(4, dtype=np.int8)[:, None]
    for k in range(1, d):
        rows = len(seqs)
        seqs = np.concatenate([np.repeat(seqs, 4, axis=0), np.tile(np.arange(4, dtype=np.int8), rows)[:, None]], axis=1)
        a, b = seqs[:, k - 1], seqs[:, k]
        keep = ~((a <= _C4) & (b <= _C4))
        keep &= ~((a == _C3) & (b != _C7)) & ~((b == _C3) & (a != _C7))
        if k >= 2:
            keep &= ~((seqs[:, k - 2] == _C4) & (a == _C6) & (b == _C4))
        seqs = seqs[keep]
    return seqs[_valid_mask(seqs, d)]


def _dihedral_min(seqs: np.ndarray, d: int) -> np.ndarray:
    weights = (4 ** np.arange(d - 1, -1, -1)).astype(np.int64)
    best = None
    for flip in (False, True):
        base = seqs[:, ::-1] if flip else seqs
        for r in range(d):
            code = np.roll(base, -r, axis=1).astype(np.int64) @ weights
            best = code if best is None else np.minimum(best, code)
    return best


def _decode(code: int, d: int) -> tuple[int, ...]:
    digits = []
    for _ in range(d):
        digits.append(int(code % 4))
        code //= 4
    return tuple(int(_CLASSES[c]) for c in reversed(digits))


def _case(d: int, classes: tuple[int, ...]) -> LocalFaceCase:
    flanks, transfers = [], []
    sent = Fraction(0)
    received = Fraction(0)
    if d >= 7:
        for i, c in enumerate(classes):
            if c == 3:
                transfers.append((i, "R4", RULE_AMOUNTS["R4"]))
            elif c == 4:
                a, b = classes[(i - 1) % d], classes[(i + 1) % d]
                flanks.append((i, a, b))
                rule = flank_rule(a, b)
                if rule:
                    transfers.append((i, rule, RULE_AMOUNTS[rule]))
        sent = sum((t[2] for t in transfers), Fraction(0))
    elif d == 4:
        # each 7+ neighbor g_i sends by the classes of g_{i-1}, g_{i+1}
        for i, c in enumerate(classes):
            if c == 7:
                a, b = classes[(i - 1) % d], classes[(i + 1) % d]
                flanks.append((i, a, b))
                rule = flank_rule(a, b)
                if rule:
                    transfers.append((i, rule, RULE_AMOUNTS[rule]))
        received = sum((t[2] for t in transfers), Fraction(0))
    elif d == 3:
        transfers = [(i, "R4", RULE_AMOUNTS["R4"]) for i, c in enumerate(classes) if c >= 7]
        received = sum((t[2] for t in transfers), Fraction(0))
    return LocalFaceCase(d, classes, tuple(flanks), tuple(transfers), Fraction(d - 6) - sent + received)


def _small_center_cases(d: int) -> list[tuple[int, ...]]:
    if d == 3:
        return [(7, 7, 7)]
    if d == 4:
        out = set()
        for bits in range(16):
            seq = tuple(6 if bits >> i & 1 else 7 for i in range(4))
            if any(seq[i] == 6 and seq[(i + 1) % 4] == 6 for i in range(4)):
                continue
            rots = [seq[r:] + seq[:r] for r in range(4)]
            rots += [tuple(reversed(x)) for x in rots]
            out.add(min(rots))
        return sorted(out)
    return []


def enumerate_local_cases(d: int) -> list[LocalFaceCase]:
    """Every neighbor-class pattern around a d-face allowed by the local exclusions, one per dihedral class.

    Sorted by final charge, so the first case attains the minimum.
    A 5-face cannot occur and a 6-face neither sends nor receives.
    """
    if d < 3:
        raise ValueError("faces have length at least 3")
    if d == 5:
        return []
    if d == 6:
        return [LocalFaceCase(6, (), (), (), Fraction(0))]
    if d <= 4:
        cases = [_case(d, s) for s in _small_center_cases(d)]
    else:
        seqs = _enumerate_sequences(d)
        codes = np.unique(_dihedral_min(seqs, d))
        cases = [_case(d, _decode(int(c), d)) for c in codes]
    return sorted(cases, key=lambda c: (c.final, c.neighbors))


def closed_form_bound(d: int) -> Fraction:
    """(d-6) minus one unit per allowed 4- neighbor, at most floor(d/2) of them."""
    return Fraction(ceil(d / 2) - 6)


@dataclass(frozen=True)
class LocalMinimum:
    d: int
    minimum: Fraction | None
    argmin: LocalFaceCase | None
    cases: int
    closed_form: Fraction | None

    def as_dict(self) -> dict:
        return {
            "kind": "local-minimum",
            "d": self.d,
            "cases": self.cases,
            "minimum": None if self.minimum is None else str(self.minimum),
            "closed_form": None if self.closed_form is None else str(self.closed_form),
            "argmin": None if self.argmin is None else [_LABEL[c] for c in self.argmin.neighbors],
        }


def local_minimum(d: int) -> LocalMinimum:
    """Enumerated minimum for d <= 12; the closed-form bound alone beyond that."""
    cf = closed_form_bound(d) if d >= 11 else None
    if d >= 13:
        return LocalMinimum(d, cf, None, 0, cf)
    cases = enumerate_local_cases(d)
    if not cases:
        return LocalMinimum(d, None, None, 0, cf)
    return LocalMinimum(d, cases[0].final, cases[0], len(cases), cf)


def sent_quarters(seqs: np.ndarray, d: int) -> np.ndarray:
    """Vectorised charge sent by a 7+ center, in quarters (for cross-checks)."""
    return _sent_quarters(seqs, d)


# whole-graph check

@dataclass(frozen=True)
class DischargeReport:
    ledger: ChargeLedger
    final_faces: tuple[Fraction, ...]
    negative: tuple[int, ...]
    total: Fraction
    message: str = field(default="")


def check_hypotheses(pg: PlaneGraph) -> None:
    """Raise HypothesisViolation naming the first failed hypothesis."""
    g = pg.graph
    if not g.is_connected():
        raise Disconnected("discharging needs a connected embedding")
    for v in range(g.n):
        if g.degree(v) != 3:
            raise HypothesisViolation("not-cubic", v)
    if pg.euler_characteristic() != 2:
        raise HypothesisViolation("not-planar")
    if has_five_cycle(g):
        raise HypothesisViolation("has-5-cycle")
    for family in HYPOTHESIS_ORDER:
        occ = detect_family(pg, family)
        if occ is not None:
            raise HypothesisViolation(family, occ.as_dict())


def verify_graph_discharge(pg: PlaneGraph) -> DischargeReport:
    """Check the hypotheses, then discharge and confirm every final charge is nonnegative."""
    check_hypotheses(pg)
    ledger = apply_rules(pg, initial_charges(pg))
    final = ledger.final_face_charges()
    negative = tuple(i for i, c in enumerate(final) if c < 0)
    total = ledger.final_total()
    if negative:
        msg = f"faces {list(negative)} end negative"
    else:
        msg = f"all final charges nonnegative but total is {total}: inconsistent, so no such graph exists"
    return DischargeReport(ledger, final, negative, total, msg)


# random embeddings

def random_cubic_embedding(steps: int, rng: random.Random) -> PlaneGraph:
    """Grow a cubic plane graph from K4 by joining midpoints of two edges of one face."""
    rot = [[1, 3, 2], [0, 2, 3], [0, 3, 1], [0, 1, 2]]
    for _ in range(steps):
        pg = PlaneGraph.from_rotation(rot)
        face = rng.choice(pg.faces)
        k = len(face)
        i = rng.randrange(k)
        j = (i + rng.randrange(1, k)) % k if k > 1 else i
        u, v = face[i], face[(i + 1) % k]
        p, q = face[j], face[(j + 1) % k]
        x, y = len(rot), len(rot) + 1
        rot.extend([[], []])
        # replace v in u's rotation by x, etc.; the face lies to the left of each dart
        for a, b, m in ((u, v, x), (v, u, x), (p, q, y), (q, p, y)):
            rot[a][rot[a].index(b)] = m
        if (u, v) == (p, q):
            raise AssertionError("distinct darts expected")
        rot[x] = [u, v, y][::-1]
        rot[y] = [p, q, x][::-1]
        if PlaneGraph.from_rotation(rot).euler_characteristic() != 2:
            rot[x] = [u, y, v][::-1]
            rot[y] = [p, x, q][::-1]
    return PlaneGraph.from_rotation(rot)


__all__ = [
    "ChargeLedger", "Transfer", "LocalFaceCase", "LocalMinimum", "DischargeReport",
    "initial_charges", "apply_rules", "flank_rule", "enumerate_local_cases", "local_minimum",
    "closed_form_bound", "check_hypotheses", "verify_graph_discharge", "random_cubic_embedding",
    "RULE_AMOUNTS", "HYPOTHESIS_ORDER", "DETECTION_FAMILIES",
]
