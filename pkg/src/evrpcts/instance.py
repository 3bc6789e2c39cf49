"""Problem data model: instances, the text file format, slot generation,
and route/solution validation.

An instance holds a depot (duplicated as start node 0 and end node len-1),
customers with demands and time windows, and charging time slots.  A slot is
a bookable interval at a physical charger: a vehicle may arrive early and
wait, charging may start no earlier than the slot opens, and must *finish*
no later than the slot closes.  All numeric input data is rounded to two
decimals on load, and pairwise Euclidean distances are rounded to two
decimals once and reused everywhere (travel time equals distance, energy
equals ``consumption_rate * distance``).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np
from numpy.random import PCG64, Generator, SeedSequence

RNG_ID = "pcg64"

# Feasibility slack for schedule arithmetic on two-decimal data.
EPS = 1e-6

MAX_RECHARGES = 2


class InstanceError(ValueError):
    """Malformed instance file or violated instance invariant."""


class NodeKind(enum.Enum):
    DEPOT = "d"
    CUSTOMER = "c"
    SLOT = "f"


@dataclass(frozen=True)
class Node:
    id: int
    kind: NodeKind
    x: float
    y: float
    demand: float = 0.0
    tw_open: float = 0.0
    tw_close: float = 0.0
    service_time: float = 0.0
    charger_loc: int | None = None  # groups slots of one physical charger
    capacity: int | None = None  # chargers available during the slot

    @property
    def is_customer(self) -> bool:
        return self.kind is NodeKind.CUSTOMER

    @property
    def is_slot(self) -> bool:
        return self.kind is NodeKind.SLOT


@dataclass
class Instance:
    nodes: list[Node]
    num_vehicles: int
    capacity: float
    battery: float
    recharge_rate: float  # time units per energy unit
    consumption_rate: float  # energy units per distance unit
    name: str = "unnamed"
    seed: int | None = None
    rng_id: str = RNG_ID
    _dist: np.ndarray | None = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        self.check()

    # -- structure ---------------------------------------------------------

    @property
    def depot_start(self) -> int:
        return 0

    @property
    def depot_end(self) -> int:
        return len(self.nodes) - 1

    @property
    def customers(self) -> list[int]:
        return [n.id for n in self.nodes if n.is_customer]

    @property
    def slots(self) -> list[int]:
        return [n.id for n in self.nodes if n.is_slot]

    @property
    def horizon(self) -> float:
        """Latest time a vehicle may return to the depot."""
        return self.nodes[0].tw_close

    @property
    def full_recharge_time(self) -> float:
        return self.battery * self.recharge_rate

    def distances(self) -> np.ndarray:
        if self._dist is None:
            xs = np.array([n.x for n in self.nodes])
            ys = np.array([n.y for n in self.nodes])
            d = np.hypot(xs[:, None] - xs[None, :], ys[:, None] - ys[None, :])
            self._dist = np.round(d, 2)
        return self._dist

    def dist(self, i: int, j: int) -> float:
        return float(self.distances()[i, j])

    def check(self) -> None:
        """Raise InstanceError on any violated structural invariant."""
        nodes = self.nodes
        if len(nodes) < 2:
            raise InstanceError("instance needs at least the two depot copies")
        for pos, n in enumerate(nodes):
            if n.id != pos:
                raise InstanceError(f"node ids must be consecutive, got {n.id} at {pos}")
        first, last = nodes[0], nodes[-1]
        if first.kind is not NodeKind.DEPOT or last.kind is not NodeKind.DEPOT:
            raise InstanceError("node 0 and the last node must be the depot copies")
        if (first.x, first.y) != (last.x, last.y):
            raise InstanceError("depot copies must share coordinates")
        if sum(1 for n in nodes if n.kind is NodeKind.DEPOT) != 2:
            raise InstanceError("exactly one depot location (two copies) expected")
        for n in nodes:
            if not (0 <= n.tw_open <= n.tw_close + EPS):
                raise InstanceError(f"node {n.id}: bad time window [{n.tw_open}, {n.tw_close}]")
            if n.tw_close > self.horizon + EPS:
                raise InstanceError(f"node {n.id}: window closes after the horizon")
            if n.demand < 0 or (not n.is_customer and n.demand != 0):
                raise InstanceError(f"node {n.id}: bad demand {n.demand}")
            if n.is_slot:
                if n.capacity is None or n.capacity < 1:
                    raise InstanceError(f"slot {n.id}: capacity must be >= 1")
                if n.charger_loc is None:
                    raise InstanceError(f"slot {n.id}: missing charger location id")
                if n.service_time != 0:
                    raise InstanceError(f"slot {n.id}: service time must be 0")
        self._check_slot_overlap()
        if self.num_vehicles < 1 or self.capacity < 0 or self.battery <= 0:
            raise InstanceError("bad vehicle parameters")
        if self.recharge_rate <= 0 or self.consumption_rate <= 0:
            raise InstanceError("rates must be positive")

    def _check_slot_overlap(self) -> None:
        by_charger: dict[int, list[Node]] = {}
        for n in self.nodes:
            if n.is_slot:
                by_charger.setdefault(n.charger_loc, []).append(n)
        for loc, slots in by_charger.items():
            slots.sort(key=lambda n: (n.tw_open, n.id))
            for a, b in zip(slots, slots[1:]):
                if b.tw_open < a.tw_close - EPS:
                    raise InstanceError(
                        f"overlapping slots {a.id} and {b.id} at charger {loc}"
                    )

    def unreachable_customers(self) -> list[int]:
        """Customers that no vehicle can serve, with or without one recharge.

        Flags infeasibility early; a customer is reachable if the depot
        round trip fits the battery directly or via some single charger.
        """
        d = self.distances()
        h = self.consumption_rate
        out = []
        for c in self.customers:
            if h * (d[0, c] + d[c, self.depot_end]) <= self.battery + EPS:
                continue
            via = any(
                h * d[0, f] <= self.battery + EPS
                and h * (d[f, c] + d[c, self.depot_end]) <= self.battery + EPS
                for f in self.slots
            ) or any(
                h * (d[0, c] + d[c, f]) <= self.battery + EPS
                and h * d[f, self.depot_end] <= self.battery + EPS
                for f in self.slots
            )
            if not via:
                out.append(c)
        return out


# -- file format -----------------------------------------------------------

_HEADER_KEYS = ("NAME", "VEHICLES", "CAPACITY", "BATTERY", "RATE_G", "RATE_H", "SEED", "RNG")


def _fmt(x: float) -> str:
    return f"{x:.2f}"


def write_instance(inst: Instance) -> str:
    lines = [
        f"NAME {inst.name}",
        f"VEHICLES {inst.num_vehicles}",
        f"CAPACITY {_fmt(inst.capacity)}",
        f"BATTERY {_fmt(inst.battery)}",
        f"RATE_G {_fmt(inst.recharge_rate)}",
        f"RATE_H {_fmt(inst.consumption_rate)}",
        f"SEED {'-' if inst.seed is None else inst.seed}",
        f"RNG {inst.rng_id}",
        f"NODES {len(inst.nodes)}",
    ]
    for n in inst.nodes:
        loc = "-" if n.charger_loc is None else str(n.charger_loc)
        cap = "-" if n.capacity is None else str(n.capacity)
        lines.append(
            f"{n.id} {n.kind.value} {_fmt(n.x)} {_fmt(n.y)} {_fmt(n.demand)} "
            f"{_fmt(n.tw_open)} {_fmt(n.tw_close)} {_fmt(n.service_time)} {loc} {cap}"
        )
    return "\n".join(lines) + "\n"


def parse_instance(text: str) -> Instance:
    header: dict[str, str] = {}
    nodes: list[Node] = []
    expected_nodes = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        key = parts[0].upper()
        if key in _HEADER_KEYS:
            if len(parts) < 2:
                raise InstanceError(f"line {lineno}: missing value for {key}")
            header[key] = " ".join(parts[1:])
            continue
        if key == "NODES":
            expected_nodes = int(parts[1])
            continue
        if len(parts) != 10:
            raise InstanceError(f"line {lineno}: expected 10 node fields, got {len(parts)}")
        try:
            nid = int(parts[0])
            kind = NodeKind(parts[1])
            x, y, q, e, l, s = (round(float(v), 2) for v in parts[2:8])
            loc = None if parts[8] == "-" else int(parts[8])
            cap = None if parts[9] == "-" else int(parts[9])
        except (ValueError, KeyError) as exc:
            raise InstanceError(f"line {lineno}: {exc}") from exc
        nodes.append(Node(nid, kind, x, y, q, e, l, s, loc, cap))
    for req in ("VEHICLES", "CAPACITY", "BATTERY", "RATE_G", "RATE_H"):
        if req not in header:
            raise InstanceError(f"missing header line {req}")
    if expected_nodes is not None and expected_nodes != len(nodes):
        raise InstanceError(f"NODES says {expected_nodes}, found {len(nodes)} records")
    seed_raw = header.get("SEED", "-")
    return Instance(
        nodes=nodes,
        num_vehicles=int(header["VEHICLES"]),
        capacity=round(float(header["CAPACITY"]), 2),
        battery=round(float(header["BATTERY"]), 2),
        recharge_rate=round(float(header["RATE_G"]), 2),
        consumption_rate=round(float(header["RATE_H"]), 2),
        name=header.get("NAME", "unnamed"),
        seed=None if seed_raw == "-" else int(seed_raw),
        rng_id=header.get("RNG", RNG_ID),
    )


def load_instance(path) -> Instance:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_instance(fh.read())


def save_instance(inst: Instance, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(write_instance(inst))


# -- slot generation -------------------------------------------------------

OPEN_FRACTIONS = (0.33, 0.50)


def slot_length(inst: Instance) -> float:
    """Length of one charging slot: time to charge 80% of the battery."""
    return round(0.8 * inst.battery * inst.recharge_rate, 2)


def generate_instance(base: Instance, open_fraction: float, rng_seed: int) -> Instance:
    """Turn charger locations of ``base`` into bookable charging time slots.

    Every slot record of the base instance is treated as a physical charger
    location with all-day availability.  For each charger, back-to-back
    candidate slots of length ``slot_length`` are laid out inside the window
    a vehicle can actually use (horizon minus the depot round trip), with
    the leftover slack placed uniformly at random before the first slot.
    ``ceil(open_fraction * count)`` of the candidates are opened; for a given
    seed the 0.50 selection extends the 0.33 selection, so the 0.50 instance
    is a strict relaxation of the 0.33 one.
    """
    if base.nodes[0].tw_open != 0:
        raise InstanceError("base instance must start at time zero")
    rng = Generator(PCG64(SeedSequence(rng_seed)))
    horizon = base.horizon
    t_slot = slot_length(base)
    if t_slot <= 0:
        raise InstanceError("slot length must be positive")

    new_nodes: list[Node] = [base.nodes[0]]
    for n in base.nodes:
        if n.is_customer:
            new_nodes.append(n)
    slot_specs: list[tuple[float, float, float, int]] = []  # x, y, start, charger
    for n in base.nodes:
        if not n.is_slot:
            continue
        t0 = base.dist(0, n.id)
        t_avail = horizon - 2.0 * t0
        count = int(math.floor(t_avail / t_slot + 1e-9))
        # rng draws are made for every charger regardless of the open
        # fraction so both variants of one seed see identical slots
        if count <= 0:
            continue
        slack = t_avail - count * t_slot
        offset = int(rng.integers(0, int(math.floor(slack + 1e-9)), endpoint=True))
        first = round(t0 + offset, 2)
        order = [int(v) for v in rng.permutation(count)]
        n_open = int(math.ceil(open_fraction * count - 1e-9))
        opened = sorted(order[:n_open])
        for k in opened:
            slot_specs.append((n.x, n.y, round(first + k * t_slot, 2), n.id))

    next_id = len(new_nodes)
    renumbered = [
        Node(i, n.kind, n.x, n.y, n.demand, n.tw_open, n.tw_close, n.service_time)
        for i, n in enumerate(new_nodes)
    ]
    for x, y, start, charger in slot_specs:
        renumbered.append(
            Node(
                next_id,
                NodeKind.SLOT,
                x,
                y,
                tw_open=start,
                tw_close=round(start + t_slot, 2),
                charger_loc=charger,
                capacity=1,
            )
        )
        next_id += 1
    end = base.nodes[0]
    renumbered.append(Node(next_id, NodeKind.DEPOT, end.x, end.y, 0.0, end.tw_open, end.tw_close, 0.0))

    return Instance(
        nodes=renumbered,
        num_vehicles=base.num_vehicles,
        capacity=base.capacity,
        battery=base.battery,
        recharge_rate=base.recharge_rate,
        consumption_rate=base.consumption_rate,
        name=f"{base.name}-{int(round(open_fraction * 100))}-s{rng_seed}",
        seed=rng_seed,
    )


def random_base_instance(
    n_customers: int,
    n_chargers: int,
    seed: int,
    *,
    layout: str = "random",
    horizon: float = 230.0,
    capacity: float = 200.0,
    battery: float = 60.0,
    recharge_rate: float = 1.0,
    consumption_rate: float = 1.0,
    num_vehicles: int = 6,
    window_width: float = 40.0,
    service_time: float = 10.0,
    name: str | None = None,
) -> Instance:
    """Synthesize a Solomon-style base instance (no time slots yet).

    ``layout`` is "random" (uniform customer coordinates) or "clustered"
    (customers grouped around a few cluster centers).  Charger locations are
    spread over the area and carry all-day windows; feed the result to
    :func:`generate_instance` to obtain charging time slots.
    """
    rng = Generator(PCG64(SeedSequence([seed, 0xBA5E])))
    depot_xy = (50.0, 50.0)
    coords: list[tuple[float, float]] = []
    if layout == "clustered":
        n_clusters = max(2, n_customers // 6)
        centers = rng.uniform(15, 85, size=(n_clusters, 2))
        for k in range(n_customers):
            cx, cy = centers[k % n_clusters]
            coords.append(
                (
                    float(np.clip(cx + rng.normal(0, 4), 0, 100)),
                    float(np.clip(cy + rng.normal(0, 4), 0, 100)),
                )
            )
    else:
        for _ in range(n_customers):
            coords.append((float(rng.uniform(10, 90)), float(rng.uniform(10, 90))))

    nodes = [Node(0, NodeKind.DEPOT, depot_xy[0], depot_xy[1], 0.0, 0.0, round(horizon, 2), 0.0)]
    for i, (x, y) in enumerate(coords, start=1):
        demand = float(rng.integers(5, 26))
        travel = round(math.hypot(x - depot_xy[0], y - depot_xy[1]), 2)
        latest_center = horizon - travel - service_time
        center = float(rng.uniform(travel, max(travel + 1.0, latest_center)))
        half = window_width / 2.0
        e = max(0.0, center - half)
        l = min(horizon - travel - service_time, center + half)
        if l < e:
            e = max(0.0, l - 1.0)
        nodes.append(
            Node(i, NodeKind.CUSTOMER, round(x, 2), round(y, 2), demand,
                 round(e, 2), round(l, 2), service_time)
        )
    nid = n_customers + 1
    for k in range(n_chargers):
        angle = 2 * math.pi * (k + 0.5) / max(1, n_chargers)
        radius = float(rng.uniform(10, 30))
        x = float(np.clip(depot_xy[0] + radius * math.cos(angle), 0, 100))
        y = float(np.clip(depot_xy[1] + radius * math.sin(angle), 0, 100))
        nodes.append(
            Node(nid, NodeKind.SLOT, round(x, 2), round(y, 2),
                 tw_open=0.0, tw_close=round(horizon, 2), charger_loc=nid, capacity=1)
        )
        nid += 1
    nodes.append(Node(nid, NodeKind.DEPOT, depot_xy[0], depot_xy[1], 0.0, 0.0, round(horizon, 2), 0.0))
    return Instance(
        nodes=nodes,
        num_vehicles=num_vehicles,
        capacity=capacity,
        battery=battery,
        recharge_rate=recharge_rate,
        consumption_rate=consumption_rate,
        name=name or f"synth-{layout[0]}{n_customers}-{seed}",
        seed=seed,
    )


# -- schedules and validation ----------------------------------------------


@dataclass
class RouteSchedule:
    """Feasible timing/battery certificate for one route."""

    nodes: list[int]
    arrival: list[float]  # service / charging start time p_i
    battery_arrival: list[float]  # y_i
    battery_departure: list[float]  # Y_i (differs from y_i only at slots/depot)

    def recharge_windows(self, inst: Instance) -> list[tuple[int, float, float]]:
        out = []
        for k, nid in enumerate(self.nodes):
            if inst.nodes[nid].is_slot:
                dur = (self.battery_departure[k] - self.battery_arrival[k]) * inst.recharge_rate
                out.append((nid, self.arrival[k], self.arrival[k] + dur))
        return out


def route_schedule(inst: Instance, route: list[int]) -> RouteSchedule | None:
    """Earliest feasible schedule for a route, or None if infeasible.

    Solves the small linear program over arrival times and battery levels
    (linear partial recharging, slot charging must end inside the slot) and
    re-checks the returned point arithmetically.  Structural violations
    (bad endpoints, duplicates, capacity, recharge count) return None as
    well; use :func:`route_violation` for a diagnostic label.
    """
    if route_structural_violation(inst, route):
        return None
    from scipy.optimize import linprog

    m = len(route)
    d = inst.distances()
    g = inst.recharge_rate
    h = inst.consumption_rate
    B = inst.battery
    # variables: p_0..p_{m-1}, y_0.., Y_0..
    np_, ny, nY = 0, m, 2 * m
    nv = 3 * m

    A_ub, b_ub, A_eq, b_eq = [], [], [], []
    lb = np.zeros(nv)
    ub = np.full(nv, np.inf)

    def row():
        return np.zeros(nv)

    for k, nid in enumerate(route):
        node = inst.nodes[nid]
        lb[np_ + k], ub[np_ + k] = node.tw_open, node.tw_close
        ub[ny + k] = B
        ub[nY + k] = B
        if k == 0:
            lb[ny], ub[ny] = B, B  # leave the depot fully charged
            lb[nY], ub[nY] = B, B
        elif node.is_slot:
            r = row()  # y <= Y
            r[ny + k], r[nY + k] = 1, -1
            A_ub.append(r)
            b_ub.append(0.0)
            r = row()  # charging ends inside the slot: p + g(Y - y) <= close
            r[np_ + k], r[nY + k], r[ny + k] = 1, g, -g
            A_ub.append(r)
            b_ub.append(node.tw_close)
        else:
            r = row()  # no recharging at customers / end depot
            r[ny + k], r[nY + k] = 1, -1
            A_eq.append(r)
            b_eq.append(0.0)

    for k in range(m - 1):
        i, j = route[k], route[k + 1]
        node = inst.nodes[i]
        travel = d[i, j]
        r = row()  # battery drops by the arc energy
        r[ny + k + 1], r[nY + k] = 1, -1
        A_eq.append(r)
        b_eq.append(-h * travel)
        r = row()  # departure (after service or charging) plus travel
        r[np_ + k], r[np_ + k + 1] = 1, -1
        extra = node.service_time
        if node.is_slot:
            r[nY + k], r[ny + k] = g, -g
        A_ub.append(r)
        b_ub.append(-travel - extra)

    res = linprog(
        c=np.ones(nv),  # earliest/lowest canonical schedule
        A_ub=np.array(A_ub) if A_ub else None,
        b_ub=np.array(b_ub) if b_ub else None,
        A_eq=np.array(A_eq) if A_eq else None,
        b_eq=np.array(b_eq) if b_eq else None,
        bounds=list(zip(lb, ub)),
        method="highs",
    )
    if not res.success:
        return None
    x = res.x
    sched = RouteSchedule(
        nodes=list(route),
        arrival=[float(x[np_ + k]) for k in range(m)],
        battery_arrival=[float(x[ny + k]) for k in range(m)],
        battery_departure=[float(x[nY + k]) for k in range(m)],
    )
    if schedule_violation(inst, sched) is not None:
        return None
    return sched


def schedule_violation(inst: Instance, sched: RouteSchedule, tol: float = 1e-5) -> str | None:
    """Arithmetic re-check of an explicit schedule; None when it is valid."""
    d = inst.distances()
    g, h, B = inst.recharge_rate, inst.consumption_rate, inst.battery
    r, p, y, Y = sched.nodes, sched.arrival, sched.battery_arrival, sched.battery_departure
    for k, nid in enumerate(r):
        node = inst.nodes[nid]
        if not (node.tw_open - tol <= p[k] <= node.tw_close + tol):
            return f"time_window:{nid}"
        if y[k] < -tol or Y[k] > B + tol or y[k] > Y[k] + tol:
            return f"battery:{nid}"
        if node.is_slot:
            if p[k] + g * (Y[k] - y[k]) > node.tw_close + tol:
                return f"slot_deadline:{nid}"
        elif k > 0 and abs(Y[k] - y[k]) > tol:
            return f"battery:{nid}"
    for k in range(len(r) - 1):
        i, j = r[k], r[k + 1]
        node = inst.nodes[i]
        dwell = g * (Y[k] - y[k]) if node.is_slot else node.service_time
        if p[k] + dwell + d[i, j] > p[k + 1] + tol:
            return f"time_window:{j}"
        if abs((Y[k] - h * d[i, j]) - y[k + 1]) > tol:
            return f"battery:{j}"
    return None


def route_structural_violation(inst: Instance, route: list[int]) -> str | None:
    if len(route) < 2 or route[0] != inst.depot_start or route[-1] != inst.depot_end:
        return "bad_endpoints"
    seen = set()
    load = 0.0
    recharges = 0
    for nid in route[1:-1]:
        if nid <= 0 or nid >= inst.depot_end:
            return "bad_endpoints"
        if nid in seen:
            return f"duplicate_visit:{nid}"
        seen.add(nid)
        node = inst.nodes[nid]
        load += node.demand
        if node.is_slot:
            recharges += 1
    if load > inst.capacity + EPS:
        return "capacity"
    if recharges > MAX_RECHARGES:
        return "max_recharges"
    return None


def route_violation(inst: Instance, route: list[int]) -> str | None:
    """First violated constraint id of a route, or None when feasible."""
    structural = route_structural_violation(inst, route)
    if structural:
        return structural
    if route_schedule(inst, route) is not None:
        return None
    return _greedy_violation(inst, route)


def _greedy_violation(inst: Instance, route: list[int]) -> str:
    """Diagnose an infeasible route with a greedy max-recharge forward pass."""
    d = inst.distances()
    g, h, B = inst.recharge_rate, inst.consumption_rate, inst.battery
    t = 0.0
    battery = B
    for k in range(1, len(route)):
        i, j = route[k - 1], route[k]
        prev = inst.nodes[i]
        t += prev.service_time + d[i, j]
        battery -= h * d[i, j]
        node = inst.nodes[j]
        if battery < -EPS:
            return f"battery:{j}"
        t = max(t, node.tw_open)
        if t > node.tw_close + EPS:
            return f"time_window:{j}"
        if node.is_slot:
            gain = min(B - battery, max(0.0, (node.tw_close - t) / g))
            if gain <= EPS and battery < B - EPS:
                return f"slot_deadline:{j}"
            battery += gain
            t += g * gain
    return "infeasible"


@dataclass
class RouteResult:
    index: int
    ok: bool
    violation: str | None


@dataclass
class ValidationReport:
    ok: bool
    route_results: list[RouteResult]
    solution_violations: list[str]

    def first_violation(self) -> str | None:
        for r in self.route_results:
            if not r.ok:
                return r.violation
        return self.solution_violations[0] if self.solution_violations else None


def validate_solution(inst: Instance, routes: list[list[int]]) -> ValidationReport:
    """Check per-route feasibility and the solution-level constraints.

    Over-covered customers count as visited (cover rows are >=); slot usage
    is capped by the slot capacity and the route count by the fleet size.
    """
    results = []
    for idx, route in enumerate(routes):
        v = route_violation(inst, route)
        results.append(RouteResult(idx, v is None, v))

    sol: list[str] = []
    visits: dict[int, int] = {}
    for route in routes:
        for nid in route[1:-1]:
            if 0 < nid < len(inst.nodes) - 1:
                visits[nid] = visits.get(nid, 0) + 1
    for c in inst.customers:
        if visits.get(c, 0) < 1:
            sol.append(f"customer_uncovered:{c}")
    for f in inst.slots:
        if visits.get(f, 0) > inst.nodes[f].capacity:
            sol.append(f"slot_overused:{f}")
    if len(routes) > inst.num_vehicles:
        sol.append("fleet_exceeded")

    ok = all(r.ok for r in results) and not sol
    return ValidationReport(ok, results, sol)


def route_cost(inst: Instance, route: list[int]) -> float:
    d = inst.distances()
    return float(sum(d[i, j] for i, j in zip(route, route[1:])))
