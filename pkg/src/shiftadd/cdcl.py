"""Embedded conflict-driven clause-learning SAT solver.

Self-contained CDCL with two-watched-literal propagation, VSIDS-style
activities, phase saving, first-UIP clause learning with recursive
minimization, Luby restarts and LBD-based learned-clause reduction.
Deterministic for a fixed input formula.

Literals use the packed encoding 2*v for the positive and 2*v + 1 for the
negative literal of variable v, so negation is `lit ^ 1`.
"""

from __future__ import annotations

import time
from heapq import heappush, heappop

UNASSIGNED = -1


def _luby(i: int) -> int:
    # Luby sequence, 1-indexed: 1 1 2 1 1 2 4 ...
    k = 1
    while (1 << (k + 1)) <= i + 1:
        k += 1
    while (1 << k) - 1 != i + 1:
        i = i - (1 << k) + 1
        k = 1
        while (1 << (k + 1)) <= i + 1:
            k += 1
    return 1 << k


class Solver:
    """One-shot solver: construct with the clause list, call solve()."""

    def __init__(self, nvars: int, clauses: list[list[int]]):
        self.nvars = nvars
        self.assigns = [UNASSIGNED] * (nvars + 1)
        self.level = [0] * (nvars + 1)
        self.reason: list[list[int] | None] = [None] * (nvars + 1)
        self.polarity = [0] * (nvars + 1)
        self.activity = [0.0] * (nvars + 1)
        self.var_inc = 1.0
        self.order: list[tuple[float, int]] = []
        self.watches: list[list[list[int]]] = [[] for _ in range(2 * nvars + 2)]
        self.trail: list[int] = []
        self.trail_lim: list[int] = []
        self.qhead = 0
        self.clauses: list[list[int]] = []
        self.learned: list[list[int]] = []
        self.lbd: dict[int, int] = {}
        self.ok = True
        self.props = 0
        self.conflicts = 0

        for lits in clauses:
            if not self._add_clause(lits):
                self.ok = False
                break
        for v in range(1, nvars + 1):
            heappush(self.order, (0.0, v))

    # ---- construction ----

    def _add_clause(self, lits: list[int]) -> bool:
        # Dedup, drop tautologies; lits are packed codes.
        seen = set()
        out = []
        for lit in lits:
            if lit ^ 1 in seen:
                return True
            if lit not in seen:
                seen.add(lit)
                out.append(lit)
        if not out:
            return False
        if len(out) == 1:
            return self._enqueue(out[0], None)
        self.clauses.append(out)
        self.watches[out[0]].append(out)
        self.watches[out[1]].append(out)
        return True

    # ---- assignment primitives ----

    def _enqueue(self, lit: int, reason: list[int] | None) -> bool:
        v = lit >> 1
        val = self.assigns[v]
        want = 1 - (lit & 1)
        if val != UNASSIGNED:
            return val == want
        self.assigns[v] = want
        self.level[v] = len(self.trail_lim)
        self.reason[v] = reason
        self.trail.append(lit)
        return True

    def _propagate(self) -> list[int] | None:
        trail = self.trail
        assigns = self.assigns
        watches = self.watches
        while self.qhead < len(trail):
            p = trail[self.qhead]
            self.qhead += 1
            self.props += 1
            false_lit = p ^ 1
            wl = watches[false_lit]
            i = 0
            j = 0
            n = len(wl)
            while i < n:
                c = wl[i]
                i += 1
                if c[0] == false_lit:
                    c[0], c[1] = c[1], c[0]
                first = c[0]
                fv = assigns[first >> 1]
                if fv != UNASSIGNED and fv == 1 - (first & 1):
                    wl[j] = c
                    j += 1
                    continue
                found = False
                for k in range(2, len(c)):
                    lk = c[k]
                    lv = assigns[lk >> 1]
                    if lv == UNASSIGNED or lv == 1 - (lk & 1):
                        c[1], c[k] = c[k], c[1]
                        watches[c[1]].append(c)
                        found = True
                        break
                if found:
                    continue
                wl[j] = c
                j += 1
                if fv != UNASSIGNED:
                    # conflict: keep the rest of the watch list intact
                    while i < n:
                        wl[j] = wl[i]
                        i += 1
                        j += 1
                    del wl[j:]
                    return c
                v = first >> 1
                self.assigns[v] = 1 - (first & 1)
                self.level[v] = len(self.trail_lim)
                self.reason[v] = c
                trail.append(first)
            del wl[j:]
        return None

    # ---- activity ----

    def _bump(self, v: int) -> None:
        self.activity[v] += self.var_inc
        if self.activity[v] > 1e100:
            for u in range(1, self.nvars + 1):
                self.activity[u] *= 1e-100
            self.var_inc *= 1e-100
        heappush(self.order, (-self.activity[v], v))

    # ---- conflict analysis ----

    def _analyze(self, confl: list[int]) -> tuple[list[int], int, int]:
        learnt = [0]
        seen = bytearray(self.nvars + 1)
        cur_level = len(self.trail_lim)
        counter = 0
        p = -1
        idx = len(self.trail) - 1
        c = confl
        while True:
            for q in c:
                if q == p:
                    continue
                v = q >> 1
                if not seen[v] and self.level[v] > 0:
                    seen[v] = 1
                    self._bump(v)
                    if self.level[v] >= cur_level:
                        counter += 1
                    else:
                        learnt.append(q)
            while not seen[self.trail[idx] >> 1]:
                idx -= 1
            p = self.trail[idx]
            idx -= 1
            v = p >> 1
            seen[v] = 0
            counter -= 1
            if counter == 0:
                learnt[0] = p ^ 1
                break
            c = self.reason[v]
        # recursive minimization against reason clauses
        for q in learnt[1:]:
            seen[q >> 1] = 1
        kept = [learnt[0]]
        for q in learnt[1:]:
            if not self._redundant(q, seen):
                kept.append(q)
        learnt = kept
        if len(learnt) == 1:
            bt = 0
        else:
            max_i = 1
            for i in range(2, len(learnt)):
                if self.level[learnt[i] >> 1] > self.level[learnt[max_i] >> 1]:
                    max_i = i
            learnt[1], learnt[max_i] = learnt[max_i], learnt[1]
            bt = self.level[learnt[1] >> 1]
        lbd = len({self.level[q >> 1] for q in learnt})
        return learnt, bt, lbd

    def _redundant(self, lit: int, seen: bytearray) -> bool:
        r = self.reason[lit >> 1]
        if r is None:
            return False
        stack = [lit]
        visited = set()
        while stack:
            q = stack.pop()
            c = self.reason[q >> 1]
            if c is None:
                return False
            for x in c:
                v = x >> 1
                if x == (q ^ 1) or seen[v] or self.level[v] == 0 or v in visited:
                    continue
                if self.reason[v] is None:
                    return False
                visited.add(v)
                stack.append(x)
        return True

    def _backtrack(self, lvl: int) -> None:
        if len(self.trail_lim) <= lvl:
            return
        limit = self.trail_lim[lvl]
        for i in range(len(self.trail) - 1, limit - 1, -1):
            lit = self.trail[i]
            v = lit >> 1
            self.polarity[v] = self.assigns[v]
            self.assigns[v] = UNASSIGNED
            self.reason[v] = None
            heappush(self.order, (-self.activity[v], v))
        del self.trail[limit:]
        del self.trail_lim[lvl:]
        self.qhead = limit

    # ---- learned clause DB ----

    def _reduce_db(self) -> None:
        locked = {id(self.reason[lit >> 1]) for lit in self.trail if self.reason[lit >> 1] is not None}
        ranked = sorted(
            range(len(self.learned)),
            key=lambda i: (self.lbd.get(id(self.learned[i]), 9), i),
        )
        keep_n = len(self.learned) // 2
        kept = []
        for rank, i in enumerate(ranked):
            c = self.learned[i]
            if rank < keep_n or self.lbd.get(id(c), 9) <= 3 or id(c) in locked:
                kept.append(c)
        new_lbd = {id(c): self.lbd[id(c)] for c in kept if id(c) in self.lbd}
        self.learned = kept
        self.lbd = new_lbd
        self.watches = [[] for _ in range(2 * self.nvars + 2)]
        for c in self.clauses:
            self.watches[c[0]].append(c)
            self.watches[c[1]].append(c)
        for c in self.learned:
            self.watches[c[0]].append(c)
            self.watches[c[1]].append(c)

    # ---- main search ----

    def solve(self, deadline: float | None = None) -> tuple[str, list[int] | None]:
        """Returns ("sat", assigns) / ("unsat", None) / ("timeout", None)."""
        if not self.ok:
            return "unsat", None
        if self._propagate() is not None:
            return "unsat", None
        max_learnts = 2000 + len(self.clauses) // 3
        restart_idx = 0
        conflicts_left = 100 * _luby(0)
        while True:
            confl = self._propagate()
            if confl is not None:
                self.conflicts += 1
                conflicts_left -= 1
                if not self.trail_lim:
                    return "unsat", None
                learnt, bt, lbd = self._analyze(confl)
                self._backtrack(bt)
                if len(learnt) == 1:
                    self._enqueue(learnt[0], None)
                else:
                    self.learned.append(learnt)
                    self.lbd[id(learnt)] = lbd
                    self.watches[learnt[0]].append(learnt)
                    self.watches[learnt[1]].append(learnt)
                    self._enqueue(learnt[0], learnt)
                self.var_inc /= 0.95
                if self.conflicts % 128 == 0 and deadline is not None and time.monotonic() > deadline:
                    return "timeout", None
                if len(self.learned) > max_learnts:
                    self._reduce_db()
                    max_learnts = int(max_learnts * 1.3)
                continue
            if conflicts_left <= 0:
                restart_idx += 1
                conflicts_left = 100 * _luby(restart_idx)
                self._backtrack(0)
                if deadline is not None and time.monotonic() > deadline:
                    return "timeout", None
                continue
            # decide
            v = 0
            while self.order:
                _, cand = heappop(self.order)
                if self.assigns[cand] == UNASSIGNED:
                    v = cand
                    break
            if v == 0:
                return "sat", list(self.assigns)
            self.trail_lim.append(len(self.trail))
            lit = 2 * v + (1 - self.polarity[v])
            self._enqueue(lit, None)
