"""Exact feasibility of the guessing game at a given color count, and the
threshold search that turns feasibility probes into the game value.

The model has one 0/1 variable per (vertex, attainable pattern, allowed
guess); each (vertex, pattern) picks exactly one guess, and every proper
coloring needs at least one correct guess.  The built-in solver is a complete
conflict-driven clause-learning search over exactly this model (watched
literals, first-UIP learning, deterministic activity ordering and restarts),
strengthened by a sound counting prune: a partial strategy whose best possible
remaining coverage cannot reach every uncovered coloring is abandoned early.
Infeasible answers therefore come from exhausting the space, never from
heuristics.
"""

from __future__ import annotations

import os
import time
from dataclasses import dataclass, field
from heapq import heappop, heappush

from .graphs import (
    Graph,
    attainable_patterns,
    chromatic_number,
    connected_components,
    enumerate_proper_colorings,
    induced_subgraph,
)
from .matching import hopcroft_karp
from .strategies import Strategy

FEASIBLE = "feasible"
INFEASIBLE = "infeasible"
UNKNOWN = "unknown"

BUDGET_ENV_VAR = "PROPERHAT_BUDGET"
DEFAULT_MAX_DECISIONS = 10**8
DEFAULT_TIME_LIMIT = 600.0


class QBelowChromaticError(ValueError):
    """q below the chromatic number: no proper colorings, nothing to play."""


class DecodeError(ValueError):
    """An assignment that does not pick exactly one guess per group."""


@dataclass(frozen=True)
class SolveBudget:
    max_decisions: int = DEFAULT_MAX_DECISIONS
    time_limit: float = DEFAULT_TIME_LIMIT

    @classmethod
    def default(cls) -> "SolveBudget":
        raw = os.environ.get(BUDGET_ENV_VAR)
        if raw:
            return cls(max_decisions=int(float(raw)))
        return cls()


@dataclass
class FeasibilityProblem:
    graph: Graph
    q: int
    colorings: list[tuple[int, ...]]
    # variables[k] = (vertex, pattern, guess); groups[j] = (vertex, pattern)
    variables: list[tuple[int, tuple[int, ...], int]]
    groups: list[tuple[int, tuple[int, ...]]]
    group_vars: list[list[int]]
    var_group: list[int]
    clauses: list[list[int]]
    var_cover: list[int] = field(repr=False)


@dataclass
class FeasibilityResult:
    status: str
    strategy: Strategy | None
    decisions: int
    propagations: int
    conflicts: int
    elapsed: float


def build_problem(g: Graph, q: int) -> FeasibilityProblem:
    """Construct the feasibility model for (g, q) with deterministic variable
    numbering: by vertex, then pattern (lexicographic), then guess."""
    if q < chromatic_number(g):
        raise QBelowChromaticError(
            f"q={q} is below the chromatic number; no proper colorings exist"
        )
    variables: list[tuple[int, tuple[int, ...], int]] = []
    groups: list[tuple[int, tuple[int, ...]]] = []
    group_vars: list[list[int]] = []
    var_group: list[int] = []
    var_index: dict[tuple[int, tuple[int, ...], int], int] = {}
    for v in g.vertices():
        for pattern in sorted(attainable_patterns(g, v, q)):
            gid = len(groups)
            groups.append((v, pattern))
            members: list[int] = []
            taken = set(pattern)
            for guess in range(1, q + 1):
                if guess in taken:
                    continue
                k = len(variables)
                variables.append((v, pattern, guess))
                var_index[(v, pattern, guess)] = k
                var_group.append(gid)
                members.append(k)
            group_vars.append(members)

    colorings = list(enumerate_proper_colorings(g, q))
    neighbor_idx = [tuple(u - 1 for u in g.neighbors(v)) for v in g.vertices()]
    clauses: list[list[int]] = []
    var_cover = [0] * len(variables)
    seen_clauses: set[tuple[int, ...]] = set()
    for c in colorings:
        literals = []
        for v in range(g.n):
            pattern = tuple(c[j] for j in neighbor_idx[v])
            literals.append(var_index[(v + 1, pattern, c[v])])
        key = tuple(literals)
        # distinct colorings always induce distinct clauses (the own-color
        # literals pin the coloring down); this guard documents the invariant
        if key in seen_clauses:
            continue
        seen_clauses.add(key)
        ci = len(clauses)
        clauses.append(literals)
        for k in literals:
            var_cover[k] |= 1 << ci
    return FeasibilityProblem(
        graph=g,
        q=q,
        colorings=colorings,
        variables=variables,
        groups=groups,
        group_vars=group_vars,
        var_group=var_group,
        clauses=clauses,
        var_cover=var_cover,
    )


def _luby(i: int) -> int:
    """The restart-interval sequence 1,1,2,1,1,2,4,1,1,2,1,1,2,4,8,..."""
    size, seq = 1, 0
    while size < i + 1:
        seq += 1
        size = 2 * size + 1
    while size - 1 != i:
        size = (size - 1) >> 1
        seq -= 1
        i %= size
    return 1 << seq


class _Cdcl:
    """Conflict-driven clause-learning search over the feasibility model.

    The CNF view: one boolean per (vertex, pattern, guess); per group one
    at-least-one clause and pairwise at-most-one clauses; one at-least-one
    coverage clause per proper coloring.  Literal 2*v is "var v true",
    2*v + 1 is "var v false"; a literal L is true when val[L >> 1] == (L & 1) ^ 1.

    Binary clauses live in direct implication lists; longer clauses use two
    watched literals with cached blockers.  First-UIP learning with clause
    minimization, phase saving, deterministic activity ordering, restarts on
    the Luby schedule, and activity-based forgetting of long learned clauses.

    Two model-level shortcuts exploit coverage structure: if the best possible
    coverage already falls short of the uncovered colorings before any
    decision, the model is infeasible outright; and once every coloring is
    covered, the exactly-one groups are freely satisfiable, so the model is
    completed without deciding the remaining variables.
    """

    def __init__(self, p: FeasibilityProblem, budget: SolveBudget):
        self.p = p
        self.budget = budget
        nvars = len(p.variables)
        self.nvars = nvars
        self.clauses: list[list[int]] = []
        self.learned_start = 0
        self.deleted: set[int] = set()
        self.bin_watch: list[list[tuple[int, int]]] = [[] for _ in range(2 * nvars)]
        self.watches: list[list[tuple[int, int]]] = [[] for _ in range(2 * nvars)]
        self.val: list[int] = [-1] * nvars
        self.level: list[int] = [0] * nvars
        self.reason: list[int] = [-1] * nvars
        self.trail: list[int] = []
        self.trail_lim: list[int] = []
        self.qhead = 0
        self.activity = [0.0] * nvars
        self.var_inc = 1.0
        self.cla_activity: dict[int, float] = {}
        self.cla_inc = 1.0
        self.phase = [0] * nvars
        self.order: list[tuple[float, int]] = []  # lazy max-activity heap
        self.seen = bytearray(nvars)
        self.decisions = 0
        self.propagations = 0
        self.conflicts = 0
        self.ok = True
        self.complete: list[int] | None = None

        # covered-coloring bookkeeping, snapshotted per decision level
        self.uncovered = (1 << len(p.clauses)) - 1
        self.needed = len(p.clauses)
        self.cover_stack: list[tuple[int, int]] = []

        for members in p.group_vars:
            self._add_clause([2 * k for k in members])
            for i in range(len(members)):
                for j in range(i + 1, len(members)):
                    self._add_clause([2 * members[i] + 1, 2 * members[j] + 1])
        for cl in p.clauses:
            self._add_clause([2 * k for k in cl])
        self.learned_start = len(self.clauses)
        self.max_learned = 6000

    # -- clause plumbing ---------------------------------------------------
    def _add_clause(self, lits: list[int]) -> None:
        if not self.ok:
            return
        if not lits:
            self.ok = False
            return
        if len(lits) == 1:
            if not self._enqueue(lits[0], -1):
                self.ok = False
            return
        ci = len(self.clauses)
        self.clauses.append(lits)
        if len(lits) == 2:
            self.bin_watch[lits[0] ^ 1].append((lits[1], ci))
            self.bin_watch[lits[1] ^ 1].append((lits[0], ci))
        else:
            self.watches[lits[0] ^ 1].append((ci, lits[1]))
            self.watches[lits[1] ^ 1].append((ci, lits[0]))

    def _enqueue(self, lit: int, reason: int) -> bool:
        v = lit >> 1
        value = self.val[v]
        if value != -1:
            return value == (lit & 1) ^ 1
        self.val[v] = (lit & 1) ^ 1
        self.level[v] = len(self.trail_lim)
        self.reason[v] = reason
        self.trail.append(lit)
        if lit & 1 == 0:
            newly = self.p.var_cover[v] & self.uncovered
            if newly:
                self.uncovered &= ~newly
                self.needed -= newly.bit_count()
        return True

    # -- propagation ---------------------------------------------------------
    def _propagate(self) -> int:
        """Returns the index of a conflicting clause, or -1."""
        val = self.val
        trail = self.trail
        clauses = self.clauses
        while self.qhead < len(trail):
            lit = trail[self.qhead]
            self.qhead += 1
            for other, ci in self.bin_watch[lit]:
                value = val[other >> 1]
                if value == -1:
                    self.propagations += 1
                    self._enqueue(other, ci)
                elif value == (other & 1):
                    self.qhead = len(trail)
                    return ci
            false_lit = lit ^ 1
            watchers = self.watches[lit]
            i = 0
            j = 0
            end = len(watchers)
            while i < end:
                ci, blocker = watchers[i]
                value = val[blocker >> 1]
                if value >= 0 and value != (blocker & 1):
                    watchers[j] = watchers[i]
                    i += 1
                    j += 1
                    continue
                i += 1
                cl = clauses[ci]
                if cl[0] == false_lit:
                    cl[0] = cl[1]
                    cl[1] = false_lit
                first = cl[0]
                fv = val[first >> 1]
                if fv >= 0 and fv != (first & 1):
                    watchers[j] = (ci, first)
                    j += 1
                    continue
                moved = False
                for k in range(2, len(cl)):
                    lk = cl[k]
                    kv = val[lk >> 1]
                    if kv < 0 or kv != (lk & 1):
                        cl[1] = lk
                        cl[k] = false_lit
                        self.watches[lk ^ 1].append((ci, first))
                        moved = True
                        break
                if moved:
                    continue
                watchers[j] = (ci, first)
                j += 1
                if fv >= 0:
                    while i < end:
                        watchers[j] = watchers[i]
                        i += 1
                        j += 1
                    del watchers[j:]
                    self.qhead = len(trail)
                    return ci
                self.propagations += 1
                self._enqueue(first, ci)
            del watchers[j:]
        return -1

    # -- activity ----------------------------------------------------------
    def _bump_var(self, v: int) -> None:
        self.activity[v] += self.var_inc
        if self.activity[v] > 1e100:
            for u in range(self.nvars):
                self.activity[u] *= 1e-100
            self.var_inc *= 1e-100
        if self.val[v] == -1:
            heappush(self.order, (-self.activity[v], v))

    def _bump_clause(self, ci: int) -> None:
        if ci >= self.learned_start:
            self.cla_activity[ci] = self.cla_activity.get(ci, 0.0) + self.cla_inc
            if self.cla_activity[ci] > 1e100:
                for key in self.cla_activity:
                    self.cla_activity[key] *= 1e-100
                self.cla_inc *= 1e-100

    # -- conflict analysis ---------------------------------------------------
    def _analyze(self, confl: int) -> tuple[list[int], int]:
        """First-UIP learned clause (minimized) and the backjump level."""
        learned = [0]
        seen = self.seen
        touched = []
        counter = 0
        lit = -1
        index = len(self.trail) - 1
        cur_level = len(self.trail_lim)
        level = self.level
        while True:
            self._bump_clause(confl)
            for other in self.clauses[confl]:
                if other == lit:
                    continue  # the literal this reason clause implied
                v = other >> 1
                if not seen[v] and level[v] > 0:
                    seen[v] = 1
                    touched.append(v)
                    self._bump_var(v)
                    if level[v] == cur_level:
                        counter += 1
                    else:
                        learned.append(other)
            while True:
                lit = self.trail[index]
                index -= 1
                if seen[lit >> 1]:
                    break
            counter -= 1
            seen[lit >> 1] = 0
            if counter == 0:
                break
            confl = self.reason[lit >> 1]
        learned[0] = lit ^ 1

        # drop literals implied by the rest of the clause (self-subsumption)
        kept = [learned[0]]
        for other in learned[1:]:
            r = self.reason[other >> 1]
            if r == -1:
                kept.append(other)
                continue
            for cl_lit in self.clauses[r]:
                if cl_lit != (other ^ 1) and not seen[cl_lit >> 1] and level[cl_lit >> 1] > 0:
                    kept.append(other)
                    break
        learned = kept
        for v in touched:
            seen[v] = 0

        if len(learned) == 1:
            return learned, 0
        max_i = 1
        max_level = level[learned[1] >> 1]
        for k in range(2, len(learned)):
            l = level[learned[k] >> 1]
            if l > max_level:
                max_level, max_i = l, k
        learned[1], learned[max_i] = learned[max_i], learned[1]
        return learned, max_level

    def _record(self, learned: list[int]) -> None:
        if len(learned) == 1:
            self._enqueue(learned[0], -1)
            return
        ci = len(self.clauses)
        self.clauses.append(learned)
        if len(learned) == 2:
            self.bin_watch[learned[0] ^ 1].append((learned[1], ci))
            self.bin_watch[learned[1] ^ 1].append((learned[0], ci))
        else:
            self.watches[learned[0] ^ 1].append((ci, learned[1]))
            self.watches[learned[1] ^ 1].append((ci, learned[0]))
            self.cla_activity[ci] = self.cla_inc
        self._enqueue(learned[0], ci)

    def _backjump(self, target_level: int) -> None:
        val = self.val
        reason = self.reason
        phase = self.phase
        activity = self.activity
        order = self.order
        while len(self.trail_lim) > target_level:
            mark = self.trail_lim.pop()
            self.uncovered, self.needed = self.cover_stack.pop()
            for idx in range(len(self.trail) - 1, mark - 1, -1):
                lit = self.trail[idx]
                v = lit >> 1
                val[v] = -1
                reason[v] = -1
                phase[v] = (lit & 1) ^ 1
                heappush(order, (-activity[v], v))
            del self.trail[mark:]
        self.qhead = len(self.trail)

    # -- clause database reduction --------------------------------------------
    def _reduce_learned(self) -> None:
        locked = {self.reason[lit >> 1] for lit in self.trail}
        candidates = [
            ci
            for ci in range(self.learned_start, len(self.clauses))
            if ci not in locked and ci not in self.deleted and len(self.clauses[ci]) > 2
        ]
        if len(candidates) <= self.max_learned:
            return
        candidates.sort(key=lambda ci: (-self.cla_activity.get(ci, 0.0), ci))
        for ci in candidates[self.max_learned // 2 :]:
            self.deleted.add(ci)
            self.cla_activity.pop(ci, None)
        deleted = self.deleted
        for lit in range(2 * self.nvars):
            self.watches[lit] = [w for w in self.watches[lit] if w[0] not in deleted]
        self.max_learned += 1500

    # -- root infeasibility by counting ------------------------------------------
    def _root_coverage_bound_ok(self) -> bool:
        """Before any decision: can the groups possibly cover every uncovered
        coloring?  Sums each group's best-case contribution; if even that sum
        falls short, no strategy wins."""
        uncovered = self.uncovered
        needed = self.needed
        if needed == 0:
            return True
        total = 0
        val = self.val
        var_cover = self.p.var_cover
        for vs in self.p.group_vars:
            best = 0
            for k in vs:
                if val[k] == -1:
                    size = (var_cover[k] & uncovered).bit_count()
                    if size > best:
                        best = size
            total += best
            if total >= needed:
                return True
        return False

    # -- main search -----------------------------------------------------------
    def _pick_branch_var(self) -> int:
        # lazy heap: stale entries (assigned or outdated priority) are skipped
        order = self.order
        while order:
            _, v = heappop(order)
            if self.val[v] == -1:
                return v
        return -1

    def run(self) -> str:
        if not self.ok:
            return INFEASIBLE
        if self._propagate() != -1:
            return INFEASIBLE
        if not self._root_coverage_bound_ok():
            return INFEASIBLE
        start = time.perf_counter()
        self.order = [(-self.activity[v], v) for v in range(self.nvars) if self.val[v] == -1]
        self.order.sort()
        restart_index = 0
        conflicts_left = 128 * _luby(0)
        while True:
            confl = self._propagate()
            if confl != -1:
                self.conflicts += 1
                if len(self.trail_lim) == 0:
                    return INFEASIBLE
                learned, back_level = self._analyze(confl)
                self._backjump(back_level)
                self._record(learned)
                self.var_inc *= 1.0 / 0.95
                self.cla_inc *= 1.0 / 0.999
                conflicts_left -= 1
                if self.conflicts % 512 == 0:
                    if time.perf_counter() - start > self.budget.time_limit:
                        return UNKNOWN
                if len(self.clauses) - self.learned_start - len(self.deleted) > 2 * self.max_learned:
                    self._reduce_learned()
                continue
            if self.needed == 0:
                # every coloring is covered; the exactly-one groups are now
                # freely satisfiable, so complete the model directly
                self.complete = self._complete_model()
                return FEASIBLE
            if conflicts_left <= 0 and len(self.trail_lim) > 0:
                restart_index += 1
                conflicts_left = 128 * _luby(restart_index)
                self._backjump(0)
                continue
            v = self._pick_branch_var()
            if v == -1:
                return FEASIBLE
            self.decisions += 1
            if self.decisions > self.budget.max_decisions:
                return UNKNOWN
            if self.decisions % 4096 == 0:
                if time.perf_counter() - start > self.budget.time_limit:
                    return UNKNOWN
            self.trail_lim.append(len(self.trail))
            self.cover_stack.append((self.uncovered, self.needed))
            self._enqueue(2 * v + (self.phase[v] ^ 1), -1)

    def _complete_model(self) -> list[int]:
        """One true variable per group: the already-true one where present,
        otherwise the first guess not yet ruled out (one exists, or the group's
        at-least-one clause would have conflicted)."""
        true_vars = []
        for vs in self.p.group_vars:
            chosen = -1
            for k in vs:
                if self.val[k] == 1:
                    chosen = k
                    break
            if chosen == -1:
                for k in vs:
                    if self.val[k] != 0:
                        chosen = k
                        break
            true_vars.append(chosen)
        return true_vars

    def model_true_vars(self) -> list[int]:
        if self.complete is not None:
            return self.complete
        return [v for v in range(self.nvars) if self.val[v] == 1]


def decode_assignment(p: FeasibilityProblem, true_vars) -> Strategy:
    """Turn a satisfying variable assignment (iterable of true variable
    indices) into the strategy it encodes; every group must have exactly one
    true variable."""
    chosen: dict[int, int] = {}
    for k in true_vars:
        gid = p.var_group[k]
        if gid in chosen:
            raise DecodeError(f"group {p.groups[gid]} has two chosen guesses")
        chosen[gid] = k
    tables: dict[int, dict[tuple[int, ...], int]] = {v: {} for v in p.graph.vertices()}
    for gid, (v, pattern) in enumerate(p.groups):
        if gid not in chosen:
            raise DecodeError(f"group {(v, pattern)} has no chosen guess")
        tables[v][pattern] = p.variables[chosen[gid]][2]
    return Strategy(p.graph, p.q, tables=tables, label="solver")


def _solve_by_matching(p: FeasibilityProblem) -> FeasibilityResult | None:
    """Complete fast path for models where every (pattern, guess) variable
    covers at most one coloring (always the case on complete graphs: the
    pattern plus the guess pin the coloring down).

    A group then covers at most one coloring no matter what it picks, so full
    coverage is possible exactly when the groups-to-colorings bipartite graph
    has a matching saturating the colorings; maximum matching decides both
    directions.  Returns None when the precondition fails.
    """
    if any(cov.bit_count() > 1 for cov in p.var_cover):
        return None
    start = time.perf_counter()
    lefts = list(range(len(p.clauses)))
    adjacency = {ci: sorted({p.var_group[k] for k in cl}) for ci, cl in enumerate(p.clauses)}
    matching = hopcroft_karp(lefts, adjacency)
    if len(matching) < len(p.clauses):
        return FeasibilityResult(INFEASIBLE, None, 0, 0, 0, time.perf_counter() - start)
    chosen: dict[int, int] = {}
    for ci, gid in matching.items():
        for k in p.clauses[ci]:
            if p.var_group[k] == gid:
                chosen[gid] = k
                break
    true_vars = []
    for gid, vs in enumerate(p.group_vars):
        true_vars.append(chosen.get(gid, vs[0]))
    strategy = decode_assignment(p, true_vars)
    return FeasibilityResult(FEASIBLE, strategy, 0, 0, 0, time.perf_counter() - start)


def solve(p: FeasibilityProblem, budget: SolveBudget | None = None) -> FeasibilityResult:
    """Decide the model exactly (within budget).  Feasible results carry the
    decoded strategy; infeasible results mean the search space is exhausted."""
    budget = budget or SolveBudget.default()
    fast = _solve_by_matching(p)
    if fast is not None:
        return fast
    start = time.perf_counter()
    search = _Cdcl(p, budget)
    status = search.run()
    elapsed = time.perf_counter() - start
    strategy = None
    if status == FEASIBLE:
        strategy = decode_assignment(p, search.model_true_vars())
    return FeasibilityResult(
        status=status,
        strategy=strategy,
        decisions=search.decisions,
        propagations=search.propagations,
        conflicts=search.conflicts,
        elapsed=elapsed,
    )


# -- exports ---------------------------------------------------------------


def _pattern_text(pattern: tuple[int, ...]) -> str:
    return "(" + ",".join(str(c) for c in pattern) + ")"


def export_dimacs(p: FeasibilityProblem) -> str:
    """DIMACS CNF: each exactly-one group becomes an at-least-one clause plus
    pairwise at-most-one clauses; coverage clauses go in verbatim.  Output is
    byte-deterministic."""
    lines = []
    for k, (v, pattern, guess) in enumerate(p.variables):
        lines.append(f"c var {k + 1} = f({v},{_pattern_text(pattern)},{guess})")
    clause_lines = []
    for members in p.group_vars:
        clause_lines.append(" ".join(str(k + 1) for k in members) + " 0")
        for i in range(len(members)):
            for j in range(i + 1, len(members)):
                clause_lines.append(f"-{members[i] + 1} -{members[j] + 1} 0")
    for cl in p.clauses:
        clause_lines.append(" ".join(str(k + 1) for k in cl) + " 0")
    lines.append(f"p cnf {len(p.variables)} {len(clause_lines)}")
    lines.extend(clause_lines)
    return "\n".join(lines) + "\n"


def _var_name(v: int, pattern: tuple[int, ...], guess: int) -> str:
    body = "x".join(str(c) for c in pattern)
    return f"f_v{v}_p{body}_g{guess}"


def export_lp(p: FeasibilityProblem) -> str:
    """LP-format rendering of the model: zero objective, one equality row per
    group, one >=1 row per coloring, all variables binary."""
    lines = ["\\ guessing-game feasibility model", f"\\ n={p.graph.n} q={p.q}"]
    lines.append("Minimize")
    lines.append(" obj: 0")
    lines.append("Subject To")
    for gid, (v, pattern) in enumerate(p.groups):
        terms = " + ".join(_var_name(*p.variables[k]) for k in p.group_vars[gid])
        lines.append(
            f" assign_v{v}_p{'x'.join(str(c) for c in pattern)}: {terms} = 1"
        )
    for ci, cl in enumerate(p.clauses):
        terms = " + ".join(_var_name(*p.variables[k]) for k in cl)
        lines.append(f" cover_c{ci + 1}: {terms} >= 1")
    lines.append("Binary")
    for v, pattern, guess in p.variables:
        lines.append(f" {_var_name(v, pattern, guess)}")
    lines.append("End")
    return "\n".join(lines) + "\n"


# -- threshold search --------------------------------------------------------


@dataclass
class ProbeRecord:
    q: int
    status: str
    decisions: int
    conflicts: int
    elapsed: float


@dataclass
class HgpAnswer:
    graph: Graph
    lo: int
    hi: int
    lo_provenance: str
    hi_provenance: str
    probes: list[ProbeRecord]
    strategy: Strategy | None = None

    @property
    def exact(self) -> bool:
        return self.lo == self.hi

    @property
    def value(self) -> int | None:
        return self.lo if self.exact else None


def compute_hgp(
    g: Graph,
    budget: SolveBudget | None = None,
    min_q: int | None = None,
    max_q: int | None = None,
) -> HgpAnswer:
    """The game value of g: seed a constructive lower bound and a closed-form
    upper bound, then probe feasibility upward until the first infeasible q.
    Winning is monotone downward in q, so the first crossing is the value.
    Disconnected graphs reduce to the best component."""
    if g.n == 0:
        raise ValueError("cannot compute the game value of an empty graph")
    budget = budget or SolveBudget.default()
    components = connected_components(g)
    if len(components) > 1:
        best: HgpAnswer | None = None
        all_probes: list[ProbeRecord] = []
        for comp in components:
            sub, _ = induced_subgraph(g, comp)
            answer = compute_hgp(sub, budget, min_q, max_q)
            all_probes.extend(answer.probes)
            if best is None or answer.lo > best.lo:
                best = answer
        assert best is not None
        return HgpAnswer(
            graph=g,
            lo=best.lo,
            hi=best.hi,
            lo_provenance=f"component: {best.lo_provenance}",
            hi_provenance=f"component: {best.hi_provenance}",
            probes=all_probes,
        )

    from .bounds import best_upper_bound, lower_bound

    lo, lo_provenance = lower_bound(g)
    hi, hi_provenance = best_upper_bound(g)
    probes: list[ProbeRecord] = []
    strategy = None
    start = lo + 1 if min_q is None else max(lo + 1, min_q)
    stop = hi if max_q is None else min(hi, max_q)
    q = start
    while q <= stop:
        result = solve(build_problem(g, q), budget)
        probes.append(
            ProbeRecord(q, result.status, result.decisions, result.conflicts, result.elapsed)
        )
        if result.status == FEASIBLE:
            lo, lo_provenance = q, "solver-feasible"
            strategy = result.strategy
            q += 1
        elif result.status == INFEASIBLE:
            hi, hi_provenance = q - 1, "solver-infeasible"
            break
        else:
            hi_provenance = f"{hi_provenance} (budget exhausted at q={q})"
            break
    if max_q is not None and max_q < hi and q > stop:
        hi_provenance = f"{hi_provenance} (search capped at q={max_q})"
    return HgpAnswer(
        graph=g,
        lo=lo,
        hi=hi,
        lo_provenance=lo_provenance,
        hi_provenance=hi_provenance,
        probes=probes,
        strategy=strategy,
    )
