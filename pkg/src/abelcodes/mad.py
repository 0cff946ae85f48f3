"""Minimum apparent distance of an orbit hypermatrix.

mad(M) = min{d*(P) : 0 != P <= M}.  Vectors are immediate, matrices use the
linear sequence M_0 > M_1 > ... obtained by repeatedly zeroing the involved
rows/columns, and s >= 3 runs the recursive construction driven by the mad
traces of the involved hypercolumns.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from .errors import ValidationError, ZeroCodeError
from .hypermatrix import OrbitHypermatrix, apparent_distance


def _flat_positions(m: OrbitHypermatrix, k: int, b: int, sub_support: np.ndarray) -> np.ndarray:
    """Flat indices of M at which H_M(k, b) holds the entries flagged in ``sub_support``."""
    sel = np.zeros(m.shape.r, dtype=bool)
    idx = [slice(None)] * m.shape.s
    idx[k - 1] = b
    sel[tuple(idx)] = sub_support
    return np.flatnonzero(sel)


def max_support_submatrix(m: OrbitHypermatrix, a, k: int, b: int) -> OrbitHypermatrix:
    """Largest N <= M with supp(H_N(k, b)) contained in supp(A).

    ``a`` is an (s-1)-dimensional 0/1 array (or hypermatrix) indexed like the
    hypercolumn.  N is afforded by D(M) together with the q^t-orbits of the
    entries of H_M(k, b) that A drops.
    """
    m._check_kb(k, b)
    a_sup = a.support if isinstance(a, OrbitHypermatrix) else np.asarray(a, dtype=bool)
    h = np.take(m.support, b, axis=k - 1)
    if a_sup.shape != h.shape:
        raise ValidationError(f"target shape {a_sup.shape} does not match hypercolumn shape {h.shape}")
    if np.any(a_sup & ~h):
        raise ValidationError("supp(A) must be contained in supp(H_M(k, b))")
    return m.with_zeroed_orbits(_flat_positions(m, k, b, h & ~a_sup))


def max_support_zeroing(m: OrbitHypermatrix, pairs: Iterable[tuple[int, int]]) -> OrbitHypermatrix:
    """Largest N <= M whose hypercolumns H_N(k, b) vanish for every listed pair."""
    sel = np.zeros(m.shape.r, dtype=bool)
    for k, b in pairs:
        m._check_kb(k, b)
        idx = [slice(None)] * m.shape.s
        idx[k - 1] = b
        sel[tuple(idx)] = True
    return m.with_zeroed_orbits(np.flatnonzero(sel & m.support))


# -- traces ------------------------------------------------------------------


@dataclass
class MadStage:
    """One stage i of the construction.

    members   -- the set M_i
    levels    -- T_0, T_1, ... accumulated over all members (deduplicated)
    explored  -- T(M_i), every hypermatrix whose d* was taken at this stage
    eta       -- members N of T(M_i) with S(N) empty
    m         -- m_i
    expansions -- S(P) for every explored P
    stop      -- why the 2-d sequence stopped here, if it did
    """

    members: list[OrbitHypermatrix]
    levels: list[list[OrbitHypermatrix]] = field(default_factory=list)
    explored: list[OrbitHypermatrix] = field(default_factory=list)
    eta: list[OrbitHypermatrix] = field(default_factory=list)
    m: int = 0
    expansions: dict[OrbitHypermatrix, list[OrbitHypermatrix]] = field(default_factory=dict, repr=False)
    stop: str | None = None


@dataclass
class MadTrace:
    stages: list[MadStage]
    value: int
    eval_count: int
    dstar: dict[OrbitHypermatrix, int] = field(default_factory=dict, repr=False)
    involved: dict[OrbitHypermatrix, frozenset] = field(default_factory=dict, repr=False)

    @property
    def l(self) -> int:  # noqa: E743
        return len(self.stages) - 1

    @property
    def l_prime(self) -> int:
        ms = self.m_values
        return next(i for i, v in enumerate(ms) if v == ms[-1])

    @property
    def m_values(self) -> list[int]:
        return [st.m for st in self.stages]

    def elements(self) -> list[OrbitHypermatrix]:
        """Every member of every M_i and T(M_i), in construction order."""
        out: dict[OrbitHypermatrix, None] = {}
        for st in self.stages:
            for n in st.members:
                out.setdefault(n)
            for n in st.explored:
                out.setdefault(n)
        return list(out)

    def to_json(self) -> dict:
        def reps(n: OrbitHypermatrix) -> list:
            return [list(a) for a in n.defining_reps()]

        stages = []
        for i, st in enumerate(self.stages):
            stages.append({
                "eta": [reps(n) for n in st.eta],
                "explored": [
                    {
                        "d_star": self.dstar[n],
                        "defining_set_orbit_reps": reps(n),
                        "involved_pairs": sorted([list(kb) for kb in self.involved.get(n, ())]),
                        "successors": [reps(x) for x in st.expansions.get(n, [])],
                    }
                    for n in st.explored
                ],
                "index": i,
                "m": st.m,
                "members": [reps(n) for n in st.members],
                "stop": st.stop,
            })
        return {
            "eval_count": self.eval_count,
            "l": self.l,
            "l_prime": self.l_prime,
            "mad": self.value,
            "stages": stages,
        }


def eval_count(trace: MadTrace) -> int:
    """Number of top-level apparent-distance evaluations performed."""
    return trace.eval_count


def _require_nonzero(m: OrbitHypermatrix) -> None:
    if m.is_zero:
        raise ZeroCodeError("mad is undefined for the zero hypermatrix")


def _mad_vector(m: OrbitHypermatrix) -> MadTrace:
    res = apparent_distance(m)
    st = MadStage(members=[m], levels=[[m]], explored=[m], eta=[m], m=res.value, expansions={m: []})
    return MadTrace([st], res.value, 1, {m: res.value}, {m: res.involved_pairs})


def mad_2d(m: OrbitHypermatrix) -> tuple[int, MadTrace]:
    """mad of a matrix through the sequence M_0 > M_1 > ... > M_l."""
    _require_nonzero(m)
    if m.shape.s != 2:
        raise ValidationError(f"mad_2d needs a matrix, got s={m.shape.s}")
    stages: list[MadStage] = []
    dvals: dict[OrbitHypermatrix, int] = {}
    ips: dict[OrbitHypermatrix, frozenset] = {}
    cur = m
    prev_m = None
    while True:
        res = apparent_distance(cur)
        dvals[cur] = res.value
        ips[cur] = res.involved_pairs
        m_i = res.value if prev_m is None else min(prev_m, res.value)
        st = MadStage(members=[cur], levels=[[cur]], explored=[cur], eta=[cur], m=m_i, expansions={cur: []})
        stages.append(st)
        prev_m = m_i
        if any(res.table[kb][1] == 1 for kb in res.involved_pairs):
            st.stop = "involved hypercolumn with d* = 1"
            break
        nxt = max_support_zeroing(cur, res.involved_pairs)
        if nxt.is_zero:
            st.stop = "next matrix is zero"
            break
        if len(stages) > len(m.orbit_members):
            raise RuntimeError("stage budget exceeded; sequence failed to descend")
        cur = nxt
    return prev_m, MadTrace(stages, prev_m, len(stages), dvals, ips)


class _Engine:
    """State for one s >= 3 computation: memoized hypercolumn traces and S(P) sets."""

    def __init__(self) -> None:
        self.traces: dict[OrbitHypermatrix, MadTrace] = {}
        self.successors: dict[OrbitHypermatrix, list[OrbitHypermatrix]] = {}
        self.dvals: dict[OrbitHypermatrix, int] = {}
        self.ips: dict[OrbitHypermatrix, frozenset] = {}

    def trace(self, m: OrbitHypermatrix) -> MadTrace:
        tr = self.traces.get(m)
        if tr is None:
            if m.shape.s <= 1:
                tr = _mad_vector(m)
            elif m.shape.s == 2:
                tr = mad_2d(m)[1]
            else:
                tr = self.run(m)
            self.traces[m] = tr
        return tr

    def evaluate(self, p: OrbitHypermatrix):
        res = apparent_distance(p)
        self.dvals[p] = res.value
        self.ips[p] = res.involved_pairs
        return res

    def successors_of(self, p: OrbitHypermatrix) -> list[OrbitHypermatrix]:
        """S(P): for each involved pair, the max-support hypermatrices realizing
        every element of the hypercolumn's trace, minus P itself."""
        got = self.successors.get(p)
        if got is not None:
            return got
        res = self.evaluate(p)
        out: dict[OrbitHypermatrix, None] = {}
        for k, b in sorted(res.involved_pairs):
            h = p.hypercolumn(k, b)
            realized = []
            for e in self.trace(h).elements():
                n = max_support_submatrix(p, e, k, b)
                if n != p:
                    realized.append(n)
            for n in sorted(realized, key=OrbitHypermatrix.sort_key):
                out.setdefault(n)
        self.successors[p] = list(out)
        return self.successors[p]

    def run(self, m: OrbitHypermatrix) -> MadTrace:
        stages: list[MadStage] = []
        members = [m]
        prev_m = None
        seen: set[OrbitHypermatrix] = set()
        evaluated: set[OrbitHypermatrix] = set()
        while members:
            st = MadStage(members=members)
            level = [p for p in members if p not in seen]
            seen.update(level)
            while level:
                st.levels.append(level)
                nxt: dict[OrbitHypermatrix, None] = {}
                for p in level:
                    st.explored.append(p)
                    evaluated.add(p)
                    succ = self.successors_of(p)
                    st.expansions[p] = succ
                    if not succ:
                        st.eta.append(p)
                    for n in succ:
                        if n not in seen:
                            seen.add(n)
                            nxt.setdefault(n)
                level = list(nxt)
            vals = [self.dvals[p] for p in st.explored]
            if prev_m is not None:
                vals.append(prev_m)
            st.m = min(vals)
            prev_m = st.m
            stages.append(st)
            if len(stages) > len(m.orbit_members) + 1:
                raise RuntimeError("stage budget exceeded; construction failed to descend")
            new_members: dict[OrbitHypermatrix, None] = {}
            for n in st.eta:
                ln = max_support_zeroing(n, self.ips[n])
                if not ln.is_zero and ln not in seen:
                    new_members.setdefault(ln)
            members = list(new_members)
        return MadTrace(stages, prev_m, len(evaluated), {p: self.dvals[p] for p in evaluated},
                        {p: self.ips[p] for p in evaluated})


def mad(m: OrbitHypermatrix) -> tuple[int, MadTrace]:
    """mad(M) together with the audit trace of its computation."""
    _require_nonzero(m)
    if m.shape.s <= 1:
        tr = _mad_vector(m)
        return tr.value, tr
    if m.shape.s == 2:
        return mad_2d(m)
    tr = _Engine().run(m)
    return tr.value, tr
