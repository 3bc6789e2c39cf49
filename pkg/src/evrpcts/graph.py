"""Routing digraph: preprocessing reductions, ng-sets, and graph views.

Arcs carry distance, travel time (which includes the service time of the
tail node) and energy.  Preprocessing removes arcs whose energy exceeds the
battery and arcs whose earliest possible arrival (leaving the tail as early
as possible, with zero recharge at slots) misses the head's time window.
Views share node data with the base graph and only restrict the arc set.
"""

from __future__ import annotations

from dataclasses import dataclass

from .instance import Instance, NodeKind

EPS = 1e-9


@dataclass(frozen=True)
class Arc:
    frm: int
    to: int
    dist: float
    time: float  # includes service time at `frm`
    energy: float


@dataclass(frozen=True)
class BranchDecision:
    kind: str  # "force" | "forbid" | "fleet_floor" | "fleet_ceil"
    arc: tuple[int, int] | None = None
    value: int | None = None

    @staticmethod
    def force(i: int, j: int) -> "BranchDecision":
        return BranchDecision("force", arc=(i, j))

    @staticmethod
    def forbid(i: int, j: int) -> "BranchDecision":
        return BranchDecision("forbid", arc=(i, j))

    @staticmethod
    def fleet_floor(v: int) -> "BranchDecision":
        return BranchDecision("fleet_floor", value=v)

    @staticmethod
    def fleet_ceil(v: int) -> "BranchDecision":
        return BranchDecision("fleet_ceil", value=v)


class RoutingGraph:
    """Preprocessed digraph plus ng neighborhoods; immutable after build."""

    def __init__(self, inst: Instance, out_arcs: dict[int, list[Arc]], ng_size: int,
                 base: "RoutingGraph | None" = None):
        self.inst = inst
        self.out = out_arcs
        self.ng_size = ng_size
        if base is None:
            self._neighbor_order = self._neighbor_orders()
            self._ng_cache: dict[tuple[int, int], int] = {}
            n_arcs = sum(len(v) for v in out_arcs.values())
            total = sum(a.dist for v in out_arcs.values() for a in v)
            self.avg_arc_cost = total / n_arcs if n_arcs else 0.0
            # slack absorbing two-decimal rounding in triangle-inequality
            # arguments (reachability tests must stay conservative)
            self.triangle_slack = 0.005 * (len(inst.nodes) + 2)
            self.base = self
        else:
            self._neighbor_order = base._neighbor_order
            self._ng_cache = base._ng_cache
            self.avg_arc_cost = base.avg_arc_cost
            self.triangle_slack = base.triangle_slack
            self.base = base

    # -- ng neighborhoods ---------------------------------------------------

    def _neighbor_orders(self) -> dict[int, list[int]]:
        inst = self.inst
        interior = [n.id for n in inst.nodes if n.is_customer or n.is_slot]
        d = inst.distances()
        order = {}
        for i in interior:
            others = [j for j in interior if j != i]
            others.sort(key=lambda j: (d[i, j], j))
            order[i] = others
        return order

    def ng_mask(self, node: int, size: int | None = None) -> int:
        """Bitmask of the node itself plus its closest interior neighbors."""
        size = self.ng_size if size is None else size
        key = (node, size)
        cached = self._ng_cache.get(key)
        if cached is not None:
            return cached
        mask = 1 << node
        for j in self._neighbor_order.get(node, [])[:size]:
            mask |= 1 << j
        self._ng_cache[key] = mask
        return mask

    def arcs(self):
        for lst in self.out.values():
            yield from lst

    def arc_count(self) -> int:
        return sum(len(v) for v in self.out.values())

    def has_arc(self, i: int, j: int) -> bool:
        return any(a.to == j for a in self.out.get(i, ()))

    def in_arcs(self) -> dict[int, list[Arc]]:
        incoming: dict[int, list[Arc]] = {n.id: [] for n in self.inst.nodes}
        for a in self.arcs():
            incoming[a.to].append(a)
        return incoming

    def dump_edges_csv(self) -> str:
        lines = ["from,to,dist,time,energy"]
        for a in self.arcs():
            lines.append(f"{a.frm},{a.to},{a.dist:.2f},{a.time:.2f},{a.energy:.4f}")
        return "\n".join(lines) + "\n"


def build_graph(inst: Instance, ng_size: int) -> RoutingGraph:
    d = inst.distances()
    h = inst.consumption_rate
    B = inst.battery
    start, end = inst.depot_start, inst.depot_end
    out: dict[int, list[Arc]] = {n.id: [] for n in inst.nodes}
    for i_node in inst.nodes:
        i = i_node.id
        if i == end:
            continue
        for j_node in inst.nodes:
            j = j_node.id
            if j == i or j == start:
                continue
            if i == start and j == end:
                continue  # the empty route is never useful
            dist = d[i, j]
            energy = h * dist
            if energy > B + EPS:
                continue
            earliest = i_node.tw_open + i_node.service_time + dist
            if earliest > j_node.tw_close + EPS:
                continue
            out[i].append(Arc(i, j, dist, dist + i_node.service_time, energy))
    for lst in out.values():
        lst.sort(key=lambda a: a.to)
    return RoutingGraph(inst, out, ng_size)


def reduce_graph(g: RoutingGraph, reduced_costs: dict[tuple[int, int], float],
                 keep_customers: int = 5, keep_slots: int = 2) -> RoutingGraph:
    """View keeping only the cheapest outgoing arcs per interior node.

    Per non-depot node: the ``keep_customers`` cheapest arcs to customers
    and the ``keep_slots`` cheapest arcs to charger slots under the current
    reduced costs (ties broken by head id); arcs to the end depot and all
    depot-outgoing arcs are always kept.
    """
    inst = g.inst
    end = inst.depot_end
    out: dict[int, list[Arc]] = {}
    for i, arcs in g.out.items():
        if i == inst.depot_start:
            out[i] = list(arcs)
            continue
        to_cust, to_slot, to_end = [], [], []
        for a in arcs:
            node = inst.nodes[a.to]
            if a.to == end:
                to_end.append(a)
            elif node.is_slot:
                to_slot.append(a)
            else:
                to_cust.append(a)
        to_cust.sort(key=lambda a: (reduced_costs.get((a.frm, a.to), a.dist), a.to))
        to_slot.sort(key=lambda a: (reduced_costs.get((a.frm, a.to), a.dist), a.to))
        kept = to_cust[:keep_customers] + to_slot[:keep_slots] + to_end
        kept.sort(key=lambda a: a.to)
        out[i] = kept
    return RoutingGraph(inst, out, g.ng_size, base=g.base)


class InconsistentBranching(ValueError):
    pass


def apply_branching(g: RoutingGraph, decisions: list[BranchDecision]) -> RoutingGraph:
    """View with forbidden arcs removed and forced arcs made mandatory.

    Forcing (i, j) removes the other outgoing arcs of i and the other
    incoming arcs of j; depot fan-out/fan-in is never restricted (forcing a
    depot-leaving arc must not pin every vehicle to one first stop).
    """
    forced: dict[tuple[int, int], bool] = {}
    forbidden: set[tuple[int, int]] = set()
    for dec in decisions:
        if dec.kind == "forbid":
            forbidden.add(dec.arc)
        elif dec.kind == "force":
            forced[dec.arc] = True
    for arc in forced:
        if arc in forbidden:
            raise InconsistentBranching(f"arc {arc} both forced and forbidden")
    forced_out: dict[int, int] = {}
    forced_in: dict[int, int] = {}
    start, end = g.inst.depot_start, g.inst.depot_end
    for (i, j) in forced:
        if i != start:
            if forced_out.get(i, j) != j:
                raise InconsistentBranching(f"node {i} has two forced outgoing arcs")
            forced_out[i] = j
        if j != end:
            if forced_in.get(j, i) != i:
                raise InconsistentBranching(f"node {j} has two forced incoming arcs")
            forced_in[j] = i

    out: dict[int, list[Arc]] = {}
    for i, arcs in g.out.items():
        kept = []
        for a in arcs:
            if (a.frm, a.to) in forbidden:
                continue
            if a.frm in forced_out and a.to != forced_out[a.frm]:
                continue
            if a.to in forced_in and a.frm != forced_in[a.to]:
                continue
            kept.append(a)
        out[i] = kept
    return RoutingGraph(g.inst, out, g.ng_size, base=g.base)


def route_uses_only(view: RoutingGraph, route: list[int]) -> bool:
    """True when every consecutive arc of the route exists in the view."""
    return all(view.has_arc(i, j) for i, j in zip(route, route[1:]))
