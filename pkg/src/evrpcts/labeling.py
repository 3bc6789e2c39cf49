"""Mono-directional labeling for the pricing problem.

A label carries seven resources of a partial path from the start depot:
reduced cost, load, recharge count, earliest service start under minimum
recharging (battery-safe), earliest service start under maximum recharging
(window-safe), remaining maximum recharge time, and a forbidden-visit set.
The forbidden set holds visited nodes (plus provably unreachable ones) in
elementary mode, or the ng neighborhood memory in ng mode, as a bitmask.

Slots make the time resources interact: leaving a charger, both the
maximum-recharge start time and the usable slack are capped by the hard
slot deadline; waiting slack downstream converts into recharge time at the
last visited charger.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass, field, replace

from .clock import WorkClock
from .graph import RoutingGraph

FEAS_EPS = 1e-9
ACCEPT_DEFAULT = -1e-6

NG_ESCALATION_STEP = 5
NG_ESCALATION_RANGE = 15


class Label:
    __slots__ = ("node", "cost", "load", "rch", "tmin", "tmax", "rtmax",
                 "mask", "parent", "alive", "lb")

    def __init__(self, node, cost, load, rch, tmin, tmax, rtmax, mask, parent=None):
        self.node = node
        self.cost = cost
        self.load = load
        self.rch = rch
        self.tmin = tmin
        self.tmax = tmax
        self.rtmax = rtmax
        self.mask = mask
        self.parent = parent
        self.alive = True
        self.lb = 0.0

    def route(self) -> tuple[int, ...]:
        nodes = []
        lab = self
        while lab is not None:
            nodes.append(lab.node)
            lab = lab.parent
        return tuple(reversed(nodes))

    def __repr__(self):
        return (f"Label(node={self.node}, cost={self.cost:.4f}, load={self.load}, "
                f"rch={self.rch}, tmin={self.tmin:.2f}, tmax={self.tmax:.2f}, "
                f"rtmax={self.rtmax:.2f})")


def dominates(a: Label, b: Label) -> bool:
    """True when label ``a`` dominates ``b`` at the same node.

    Requires every resource of ``a`` to be at least as good, the forbidden
    set of ``a`` to be contained in ``b``'s, and the two coupled conditions
    linking remaining recharge time with the schedule slack (tmax - tmin).
    """
    if a.cost > b.cost or a.load > b.load or a.rch > b.rch or a.tmin > b.tmin:
        return False
    if a.mask & ~b.mask:
        return False
    if a.rtmax - (a.tmax - a.tmin) > b.rtmax - (b.tmax - b.tmin):
        return False
    if a.rtmax - (b.tmin - a.tmin) > b.rtmax:
        return False
    return True


@dataclass
class PricingRequest:
    graph: RoutingGraph
    reduced_costs: dict[tuple[int, int], float]
    mode: str = "exact"  # "exact" | "heuristic" (reduced-graph view)
    ng_size: int | None = None  # None = fully elementary
    max_columns: int = 10
    completion_bounds: bool = True
    cost_threshold: float | None = None  # prime the bound with a known route cost
    accept_below: float = ACCEPT_DEFAULT
    clock: WorkClock | None = None


@dataclass
class PricedRoute:
    nodes: tuple[int, ...]
    reduced_cost: float
    elementary: bool


@dataclass
class PricingResult:
    routes: list[PricedRoute]
    min_cost: float  # smallest reduced cost over all completed paths
    complete: bool  # False when the work limit interrupted the search
    labels: int = 0
    extensions: int = 0


@dataclass
class EscalationOutcome:
    columns: list[PricedRoute]  # elementary, negative, deduplicated
    min_cost: float
    complete: bool
    escalations: int
    ng_sizes: list[int] = field(default_factory=list)


class _Ctx:
    """Per-call flattened view of the graph for the inner loops."""

    __slots__ = ("inst", "view", "ng_on", "start", "end", "Q", "H", "dist",
                 "e", "l", "s", "q", "is_slot", "adj", "fold_rows", "margin",
                 "to_end_time", "ng_masks")

    def __init__(self, req: PricingRequest):
        view = req.graph
        inst = view.inst
        self.inst = inst
        self.view = view
        self.ng_on = req.ng_size is not None
        self.start, self.end = inst.depot_start, inst.depot_end
        self.Q = inst.capacity
        self.H = inst.full_recharge_time
        self.dist = inst.distances()
        nodes = inst.nodes
        self.e = [n.tw_open for n in nodes]
        self.l = [n.tw_close for n in nodes]
        self.s = [n.service_time for n in nodes]
        self.q = [n.demand for n in nodes]
        self.is_slot = [n.is_slot for n in nodes]
        self.margin = view.triangle_slack
        g = inst.recharge_rate
        h = inst.consumption_rate
        rc = req.reduced_costs
        ng_masks = None
        if self.ng_on:
            ng_masks = [view.ng_mask(n.id, req.ng_size) for n in nodes]
        self.ng_masks = ng_masks
        self.adj = {}
        for i, arcs in view.out.items():
            rows = []
            for a in arcs:
                j = a.to
                rows.append((
                    j,
                    rc.get((i, j), a.dist),
                    a.time,
                    a.dist * h * g,  # recharge time of the energy spent
                    1 << j,
                ))
            self.adj[i] = rows
        # direct-reachability data for folding unvisitable nodes: the fold
        # must only ever mark nodes that are unreachable on ANY extension
        self.fold_rows = [
            (n.id, 1 << n.id, n.demand, n.tw_close)
            for n in nodes
            if n.is_customer or n.is_slot
        ]
        self.to_end_time = [
            self.dist[n.id, self.end] + n.service_time for n in nodes
        ]


def _fold_unreachable(ctx: _Ctx, node: int, load: float, tmin: float, mask: int) -> int:
    drow = ctx.dist[node]
    base = tmin + ctx.s[node]
    slack = ctx.margin
    Q = ctx.Q
    for nid, bit, qn, ln in ctx.fold_rows:
        if mask & bit:
            continue
        if load + qn > Q + FEAS_EPS or base + drow[nid] > ln + slack:
            mask |= bit
    return mask


def extend(ctx: _Ctx, label: Label, row) -> Label | None:
    """Apply the resource extension along one arc; None when infeasible."""
    j, rc_ij, t_ij, h_ij, bit_j = row
    mask = label.mask
    if mask & bit_j:
        return None
    load = label.load + ctx.q[j]
    if load > ctx.Q + FEAS_EPS:
        return None
    slot_j = ctx.is_slot[j]
    rch = label.rch + 1 if slot_j else label.rch
    if rch > 2:
        return None

    i = label.node
    tmin_i, tmax_i, rtmax_i = label.tmin, label.tmax, label.rtmax
    e_j, l_j = ctx.e[j], ctx.l[j]
    H = ctx.H
    slot_i = ctx.is_slot[i]

    if slot_i:
        slack = min(e_j - tmin_i - t_ij, min(rtmax_i, ctx.l[i] - tmin_i))
    else:
        slack = min(e_j - tmin_i - t_ij, tmax_i - tmin_i)
    if slack < 0.0:
        slack = 0.0

    arrive = tmin_i + t_ij
    base_start = arrive if arrive > e_j else e_j
    if label.rch == 0:
        tmin_j = base_start
        rtmax_j = rtmax_i + h_ij
    else:
        overflow = rtmax_i - slack + h_ij - H
        tmin_j = base_start + (overflow if overflow > 0.0 else 0.0)
        headroom = rtmax_i - slack
        if headroom < 0.0:
            headroom = 0.0
        rtmax_j = min(H, headroom + h_ij)
    if tmin_j > l_j + FEAS_EPS:
        return None
    if rtmax_j > H + FEAS_EPS:
        return None

    if slot_i:
        reach = min(tmin_i + rtmax_i + t_ij, ctx.l[i] + t_ij)
        tmax_j = min(l_j, max(e_j, reach))
    else:
        tmax_j = min(l_j, max(e_j, tmax_i + t_ij))
    if tmin_j > tmax_j + FEAS_EPS:
        return None

    if ctx.ng_on:
        new_mask = (mask & ctx.ng_masks[j]) | bit_j
    else:
        new_mask = mask | bit_j
    child = Label(j, label.cost + rc_ij, load, rch, tmin_j, tmax_j, rtmax_j,
                  new_mask, parent=label)
    return child


class _CompletionBound:
    """Valid lower bound on the reduced cost of completing a label.

    Every completion enters the end depot once, enters at most ``2 - rch``
    more slots, and enters a set of customers limited by the remaining load
    capacity and by the remaining time before the depot closes.  Per-node
    profits use the cheapest incoming arc; the knapsack relaxations are the
    0/1 LP bound in elementary mode and the unbounded LP bound in ng mode
    (repeat visits are possible there).
    """

    def __init__(self, ctx: _Ctx):
        inst = ctx.inst
        w_in = {n.id: math.inf for n in inst.nodes}
        t_in = {n.id: math.inf for n in inst.nodes}
        for i, rows in ctx.adj.items():
            for (j, rc_ij, t_ij, _h, _b) in rows:
                if rc_ij < w_in[j]:
                    w_in[j] = rc_ij
                if t_ij < t_in[j]:
                    t_in[j] = t_ij
        self.usable = not math.isinf(w_in[ctx.end])
        self.w_end = w_in[ctx.end]
        self.t_end = t_in[ctx.end]
        self.slot_best = 0.0
        for f in inst.slots:
            w = w_in[f]
            if not math.isinf(w) and w < self.slot_best:
                self.slot_best = w
        items = []
        for c in inst.customers:
            w = w_in[c]
            if math.isinf(w) or w >= 0.0:
                continue
            items.append((1 << c, ctx.q[c], t_in[c], -w))
        self.by_load = sorted(
            items, key=lambda it: -(it[3] / it[1]) if it[1] > 0 else -math.inf
        )
        self.by_time = sorted(
            items, key=lambda it: -(it[3] / it[2]) if it[2] > 0 else -math.inf
        )
        self.ng = ctx.ng_on
        self.horizon = ctx.l[ctx.end]

    def value(self, ctx: _Ctx, label: Label) -> float:
        cap_q = ctx.Q - label.load
        cap_t = self.horizon - label.tmin - self.t_end
        if cap_t < 0.0:
            cap_t = 0.0
        if self.ng:
            profit_q = self._unbounded(self.by_load, 1, cap_q)
            profit_t = self._unbounded(self.by_time, 2, cap_t)
        else:
            profit_q = self._fractional(self.by_load, 1, cap_q, label.mask)
            profit_t = self._fractional(self.by_time, 2, cap_t, label.mask)
        profit = profit_q if profit_q < profit_t else profit_t
        return self.w_end + (2 - label.rch) * self.slot_best - profit

    @staticmethod
    def _fractional(items, widx, cap, mask) -> float:
        profit = 0.0
        for it in items:
            if mask & it[0]:
                continue
            w = it[widx]
            if w <= 1e-12:
                profit += it[3]
                continue
            if cap <= 0.0:
                break
            take = w if w <= cap else cap
            profit += it[3] * (take / w)
            cap -= take
        return profit

    @staticmethod
    def _unbounded(items, widx, cap) -> float:
        best = 0.0
        for it in items:
            w = it[widx]
            if w <= 1e-12:
                return math.inf
            dens = it[3] / w
            if dens > best:
                best = dens
        return best * cap


def solve_pricing(req: PricingRequest) -> PricingResult:
    """Best-first labeling over the request's graph view.

    Returns up to ``max_columns`` distinct routes with reduced cost below
    ``accept_below``, ordered by reduced cost.  With mode "exact" and ng
    off, ``min_cost`` is the global minimum reduced cost.
    """
    ctx = _Ctx(req)
    clock = req.clock or WorkClock()
    bound = _CompletionBound(ctx) if req.completion_bounds else None
    if bound is not None and not bound.usable:
        return PricingResult([], math.inf, True)

    start = ctx.start
    end = ctx.end
    root = Label(start, 0.0, 0.0, 0, ctx.e[start], ctx.e[start], 0.0, 0)
    root.mask = _fold_unreachable(ctx, start, 0.0, root.tmin, 0)

    best_complete = math.inf if req.cost_threshold is None else req.cost_threshold
    completed: dict[tuple[int, ...], float] = {}
    min_cost = math.inf

    buckets: dict[int, list[Label]] = {}
    heap: list = []
    seq = 0
    heapq.heappush(heap, (root.tmin, root.cost, seq, root))
    labels = 1
    extensions = 0
    complete = True

    while heap:
        _, _, _, lab = heapq.heappop(heap)
        if not lab.alive:
            continue
        if bound is not None and lab.lb >= best_complete - 1e-12:
            continue
        adj = ctx.adj.get(lab.node)
        if not adj:
            continue
        for row in adj:
            extensions += 1
            if extensions & 0x3FF == 0:
                clock.tick(1024)
                if clock.exceeded():
                    complete = False
                    heap.clear()
                    break
            child = extend(ctx, lab, row)
            if child is None:
                continue
            j = child.node
            if j == end:
                c = child.cost
                if c < best_complete:
                    best_complete = c
                if c < min_cost:
                    min_cost = c
                if c < req.accept_below:
                    r = child.route()
                    prev = completed.get(r)
                    if prev is None or c < prev:
                        completed[r] = c
                continue
            # reachability to the end depot in time (distance-based, sound)
            if child.tmin + ctx.to_end_time[j] > ctx.horizon_end + ctx.margin:
                continue
            child.mask = _fold_unreachable(ctx, j, child.load, child.tmin, child.mask)
            if bound is not None:
                child.lb = child.cost + bound.value(ctx, child)
                if child.lb >= best_complete - 1e-12:
                    continue
            bucket = buckets.get(j)
            if bucket is None:
                bucket = []
                buckets[j] = bucket
            dominated = False
            removed = False
            for ex in bucket:
                if ex.alive and dominates(ex, child):
                    dominated = True
                    break
            if dominated:
                continue
            for ex in bucket:
                if ex.alive and dominates(child, ex):
                    ex.alive = False
                    removed = True
            if removed:
                bucket[:] = [ex for ex in bucket if ex.alive]
            bucket.append(child)
            labels += 1
            seq += 1
            heapq.heappush(heap, (child.tmin, child.cost, seq, child))

    routes = [
        PricedRoute(r, c, len(set(r)) == len(r))
        for r, c in completed.items()
    ]
    routes.sort(key=lambda pr: (pr.reduced_cost, pr.nodes))
    return PricingResult(routes[: req.max_columns], min_cost, complete,
                         labels=labels, extensions=extensions)


def ng_escalation_loop(req: PricingRequest, start_size: int) -> EscalationOutcome:
    """Exact pricing with ng relaxation, escalating the ng size on cycles.

    Solves with ng sizes ``start_size, +5, +10, +15``; whenever the best
    route is non-elementary with negative reduced cost, the size grows.  If
    the largest size still cycles, one fully elementary solve finishes the
    job.  Only elementary negative columns are reported.
    """
    collected: dict[tuple[int, ...], PricedRoute] = {}
    sizes = [start_size + k * NG_ESCALATION_STEP
             for k in range(NG_ESCALATION_RANGE // NG_ESCALATION_STEP + 1)]
    escalations = 0
    used_sizes: list[int] = []
    for size in sizes:
        res = solve_pricing(replace(req, ng_size=size, mode="exact"))
        used_sizes.append(size)
        for pr in res.routes:
            if pr.elementary:
                collected.setdefault(pr.nodes, pr)
        if not res.complete:
            return EscalationOutcome(_top(collected, req.max_columns), math.inf,
                                     False, escalations, used_sizes)
        if not res.routes or res.routes[0].elementary:
            return EscalationOutcome(_top(collected, req.max_columns),
                                     res.min_cost, True, escalations, used_sizes)
        escalations += 1
    res = solve_pricing(replace(req, ng_size=None, mode="exact"))
    used_sizes.append(-1)
    for pr in res.routes:
        collected.setdefault(pr.nodes, pr)
    return EscalationOutcome(_top(collected, req.max_columns), res.min_cost,
                             res.complete, escalations, used_sizes)


def _top(collected: dict, k: int) -> list[PricedRoute]:
    routes = sorted(collected.values(), key=lambda pr: (pr.reduced_cost, pr.nodes))
    return routes[:k]
