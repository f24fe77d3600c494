"""Rank-and-multiplicity shadow of a module table.

Forgetting everything except the generic rank function and the torsion
cardinality m(A) of each entry leaves a quasi-arithmetic matroid.  The
axioms checked here:

  (A1)  adding b to A divides m one way or the other, depending on
        whether b is dependent on A;
  (A2a) modular pairs satisfy m(A) m(B) | m(A u B) m(A n B);
  (A2b) if B = A + F + T and the rank grows by exactly |C n F| on every
        intermediate C, then m(A) m(B) = m(A u F) m(A u T).

The stronger positivity property of arithmetic matroids is intentionally
out of scope.
"""

from __future__ import annotations

from dataclasses import dataclass

from .matroids import ZMatroid, generic_rank, popcount, subset_key, subsets, verify


@dataclass(frozen=True)
class QamData:
    labels: tuple[str, ...]
    rk: tuple[int, ...]  # indexed by subset bitmask
    mult: tuple[int, ...]

    def __post_init__(self):
        if len(self.rk) != 1 << len(self.labels) or len(self.rk) != len(self.mult):
            raise ValueError("tables must cover every subset")
        if any(v < 1 for v in self.mult):
            raise ValueError("multiplicities must be positive")


@dataclass(frozen=True)
class QamViolation:
    axiom: str
    detail: str


@dataclass(frozen=True)
class QamVerdict:
    ok: bool
    violation: QamViolation | None = None


def to_qam(m: ZMatroid) -> QamData:
    m = verify(m)
    rk = generic_rank(m)
    e = len(m.labels)
    return QamData(
        m.labels,
        tuple(rk[s] for s in subsets(e)),
        tuple(m.table[s].torsion_order for s in subsets(e)),
    )


def check_axioms(q: QamData) -> QamVerdict:
    """First violation in a deterministic scan, or OK."""
    e = len(q.labels)
    rk, mu = q.rk, q.mult
    key = lambda s: "{" + subset_key(q.labels, s) + "}"

    for a in subsets(e):
        for i in range(e):
            if a >> i & 1:
                continue
            ab = a | 1 << i
            if rk[ab] == rk[a]:
                if mu[a] % mu[ab]:
                    return QamVerdict(False, QamViolation(
                        "A1",
                        f"A={key(a)} b={q.labels[i]}: {mu[ab]} does not divide {mu[a]}",
                    ))
            elif mu[ab] % mu[a]:
                return QamVerdict(False, QamViolation(
                    "A1",
                    f"A={key(a)} b={q.labels[i]}: {mu[a]} does not divide {mu[ab]}",
                ))

    for a in subsets(e):
        rest = [i for i in range(e) if not a >> i & 1]
        for dbits in subsets(len(rest)):
            d = 0
            for pos, i in enumerate(rest):
                if dbits >> pos & 1:
                    d |= 1 << i
            b = a | d
            # enumerate F inside D; T is the complement in D
            f = d
            while True:
                t = d & ~f
                if _is_molecule(rk, a, d, f):
                    if mu[a] * mu[b] != mu[a | f] * mu[a | t]:
                        return QamVerdict(False, QamViolation(
                            "A2b",
                            f"A={key(a)} B={key(b)} F={key(f)} T={key(t)}: "
                            f"{mu[a]}*{mu[b]} != {mu[a | f]}*{mu[a | t]}",
                        ))
                if f == 0:
                    break
                f = (f - 1) & d

    for a in subsets(e):
        for b in subsets(e):
            if rk[a | b] + rk[a & b] == rk[a] + rk[b]:
                if (mu[a | b] * mu[a & b]) % (mu[a] * mu[b]):
                    return QamVerdict(False, QamViolation(
                        "A2a",
                        f"A={key(a)} B={key(b)}: {mu[a]}*{mu[b]} does not divide "
                        f"{mu[a | b]}*{mu[a & b]}",
                    ))
    return QamVerdict(True)


def _is_molecule(rk, a: int, d: int, f: int) -> bool:
    """Does the rank grow by exactly |C n F| on every A <= C <= A u D?"""
    c = d
    while True:
        if rk[a | c] != rk[a] + popcount(c & f):
            return False
        if c == 0:
            return True
        c = (c - 1) & d
