"""Brute-force breadth-first oracle over the two twist Cayley graphs.

Vertices of the disk-side graph are Dynnikov pairs of essential curves with
edges given by the four twist generators; vertices of the torus-side graph
are primitive integer vectors with edges given by the squared transvections
``U^{±2}``, ``L^{±2}``.  Two distinct vertices are adjacent when some
generator maps one to the other; fixed points contribute no edge, and since
the generator sets are closed under inverse the graphs are undirected.  The
sign collapse ``v -> {v, -v}`` is a double covering of the disk graph by the
torus graph that matches the two coordinate charts, which is what lets the
torus-side search serve as an independent ground truth for disk-side
distances.

The search always runs outward from the seed set, never from a query vertex:
twist images escape any bounding box, but a depth-``D`` sweep enumerates the
full distance-``<=D`` ball exactly, whatever the coordinate growth.  All
coordinates are exact (unbounded) Python integers; purely as dictionary
keys, vertices are packed into single integers using a shift derived from a
proven per-step growth bound.  Expansion is level-synchronous with a fixed
generator order, so distances, discovery components, and reports are
deterministic.

Components are tracked by seeding each wave with its seed's label and
unioning labels whenever two waves touch along an edge.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Iterator

from . import actions
from .coords import is_essential, torus_to_dynnikov
from .ecf import Mat2, L, U
from .untwist import REFERENCE_CURVES, classify

Vertex = tuple[int, int]


class Plane(Enum):
    DYNNIKOV = "dynnikov"
    TORUS = "torus"


#: Default disk-side seed set: the three reference curves.
DYNNIKOV_SEEDS: tuple[Vertex, ...] = ((0, 1), (0, -1), (-1, 0))

#: Default torus-side seed set: both signed lifts of each reference curve.
TORUS_SEEDS: tuple[Vertex, ...] = ((1, 0), (-1, 0), (0, 1), (0, -1), (1, 1), (-1, -1))

#: The transvection-square loop that fixes (1, 1): the unique-cycle certificate.
CYCLE_CERTIFICATE: Mat2 = U**2 * L**-2 * U**2 * L**-2


def _u2(p: int, q: int) -> tuple[int, int]:
    return p + 2 * q, q


def _u2_inv(p: int, q: int) -> tuple[int, int]:
    return p - 2 * q, q


def _l2(p: int, q: int) -> tuple[int, int]:
    return p, q + 2 * p


def _l2_inv(p: int, q: int) -> tuple[int, int]:
    return p, q - 2 * p


# (generator-class id, map) pairs; class ids pair each generator with its
# inverse so that parallel edges are distinguished per class, not direction.
_DYNNIKOV_GENS = ((0, actions._tc), (0, actions._tc_inv), (1, actions._td), (1, actions._td_inv))
_TORUS_GENS = ((0, _u2), (0, _u2_inv), (1, _l2), (1, _l2_inv))

#: Generator-class display labels per plane (for DOT output and reports).
GEN_CLASS_LABELS = {Plane.DYNNIKOV: ("tc", "td"), Plane.TORUS: ("U2", "L2")}


def _gens_for(plane: Plane):
    # Looked up lazily so the disk maps stay patchable in fault-injection tests.
    if plane is Plane.DYNNIKOV:
        return ((0, actions._tc), (0, actions._tc_inv), (1, actions._td), (1, actions._td_inv))
    return _TORUS_GENS


def _valid_vertex(plane: Plane, v: Vertex) -> bool:
    x, y = v
    if x == 0 and y == 0:
        return False
    if plane is Plane.TORUS:
        return math.gcd(x, y) == 1
    return is_essential(v)


@dataclass(frozen=True)
class CayleySpec:
    """A bounded Cayley-ball exploration request."""

    plane: Plane
    depth_limit: int
    seeds: tuple[Vertex, ...]

    def __post_init__(self):
        if self.depth_limit < 0:
            raise ValueError("depth limit must be nonnegative")
        if not self.seeds:
            raise ValueError("seed set must be nonempty")
        for s in self.seeds:
            if not _valid_vertex(self.plane, s):
                raise ValueError(f"invalid {self.plane.value} seed {s!r}")


class DistanceMap:
    """Exact distances (and discovery components) of a depth-limited ball.

    ``distance(v)`` is the graph distance from ``v`` to the seed set, or
    ``None`` when ``v`` was not reached within the depth limit.  Seeds map to
    0 and adjacent vertices differ by at most 1.  ``component(v)`` is a small
    integer identifying the connected component (seeds whose waves touched
    share an id).
    """

    def __init__(self, spec: CayleySpec, packed: dict[int, int], bound: int,
                 shift: int, roots: list[int]):
        self.spec = spec
        self._packed = packed
        self._bound = bound
        self._shift = shift
        self._mask = (1 << shift) - 1
        self._roots = roots  # seed index -> merged component id

    def _encode(self, x: int, y: int) -> int:
        return ((x + self._bound) << self._shift) | (y + self._bound)

    def __len__(self) -> int:
        return len(self._packed)

    def __contains__(self, v) -> bool:
        return self.distance(v) is not None

    def distance(self, v) -> int | None:
        x, y = v
        if abs(x) >= self._bound or abs(y) >= self._bound:
            return None
        packed = self._packed.get(self._encode(x, y))
        return None if packed is None else packed >> 3

    def component(self, v) -> int | None:
        x, y = v
        if abs(x) >= self._bound or abs(y) >= self._bound:
            return None
        packed = self._packed.get(self._encode(x, y))
        return None if packed is None else self._roots[packed & 7]

    def seed_component(self, seed: Vertex) -> int:
        c = self.component(seed)
        if c is None:
            raise ValueError(f"{seed!r} is not a seed of this map")
        return c

    def items(self) -> Iterator[tuple[Vertex, int]]:
        """Iterate ``((x, y), distance)`` over every reached vertex."""
        bound, shift, mask = self._bound, self._shift, self._mask
        for key, packed in self._packed.items():
            yield ((key >> shift) - bound, (key & mask) - bound), packed >> 3

    def component_count(self) -> int:
        return len(set(self._roots))


def bfs_distances(spec: CayleySpec) -> DistanceMap:
    """Level-synchronous BFS ball around the seed set, exact and deterministic."""
    depth = spec.depth_limit
    seeds = spec.seeds
    # Every generator branch is an integer matrix of operator norm below 3,
    # so coordinates through depth D stay strictly below (max seed + 2)*3^D.
    seed_mag = max(max(abs(x), abs(y)) for x, y in seeds)
    bound = (seed_mag + 2) * 3**depth
    shift = (2 * bound).bit_length()
    gens = _gens_for(spec.plane)

    parents = list(range(len(seeds)))  # union-find over seed labels

    def find(i: int) -> int:
        while parents[i] != i:
            parents[i] = parents[parents[i]]
            i = parents[i]
        return i

    packed: dict[int, int] = {}
    frontier: list[int] = []
    for label, (x, y) in enumerate(seeds):
        key = ((x + bound) << shift) | (y + bound)
        if key in packed:
            raise ValueError(f"duplicate seed {(x, y)!r}")
        packed[key] = label  # distance 0
        frontier.append(key)

    mask = (1 << shift) - 1
    get = packed.get
    for level in range(1, depth + 1):
        dist_bits = level << 3
        nxt: list[int] = []
        append = nxt.append
        for key in frontier:
            label = packed[key] & 7
            x = (key >> shift) - bound
            y = (key & mask) - bound
            for gen_class, fn in gens:
                nx, ny = fn(x, y)
                if nx == x and ny == y:
                    continue  # fixed point: no loop edge
                nkey = ((nx + bound) << shift) | (ny + bound)
                seen = get(nkey)
                if seen is None:
                    packed[nkey] = dist_bits | label
                    append(nkey)
                else:
                    other = seen & 7
                    if other != label:
                        ra, rb = find(label), find(other)
                        if ra != rb:
                            parents[rb] = ra
        frontier = nxt
    roots = [find(i) for i in range(len(seeds))]
    return DistanceMap(spec, packed, bound, shift, roots)


# ---------------------------------------------------------------------------
# Orbit censuses

TORUS_ORBIT_LABELS = (
    "even-p, q%4=1",
    "even-p, q%4=3",
    "even-q, p%4=1",
    "even-q, p%4=3",
    "odd-odd",
)


def torus_orbit_label(v) -> str:
    """Parity/mod-4 orbit label of a primitive torus vector."""
    p, q = v
    if math.gcd(p, q) != 1:
        raise ValueError(f"{tuple(v)!r} is not primitive")
    if p % 2 == 0:
        return TORUS_ORBIT_LABELS[0] if q % 4 == 1 else TORUS_ORBIT_LABELS[1]
    if q % 2 == 0:
        return TORUS_ORBIT_LABELS[2] if p % 4 == 1 else TORUS_ORBIT_LABELS[3]
    return TORUS_ORBIT_LABELS[4]


def _class_label(plane: Plane, v: Vertex) -> str:
    if plane is Plane.TORUS:
        return torus_orbit_label(v)
    return classify(v).value


@dataclass
class OrbitCensus:
    """Partition of the box vertices into orbits, cross-checked against BFS."""

    plane: Plane
    box: int
    class_counts: dict[str, int]
    total: int
    reached: int
    mismatches: list[tuple[Vertex, str, str]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.mismatches


def orbit_census(plane: Plane, box: int, depth_limit: int | None = None, *,
                 distances: DistanceMap | None = None) -> OrbitCensus:
    """Count box vertices per orbit and check labels against BFS components.

    Every valid vertex with ``|x|, |y| <= box`` is classified by its parity
    label; vertices the BFS reached must carry the same label as the seed of
    their component.  Vertices beyond the explored depth only contribute to
    the counts.
    """
    if box < 1:
        raise ValueError("box must be at least 1")
    if distances is None:
        if depth_limit is None:
            raise ValueError("need a depth limit or a precomputed distance map")
        seeds = TORUS_SEEDS if plane is Plane.TORUS else DYNNIKOV_SEEDS
        distances = bfs_distances(CayleySpec(plane, depth_limit, seeds))
    seed_class = {}
    for seed in distances.spec.seeds:
        comp = distances.seed_component(seed)
        label = _class_label(plane, seed)
        if seed_class.setdefault(comp, label) != label:
            raise ValueError("seed set mixes orbit labels within one component")
    counts: dict[str, int] = {}
    total = reached = 0
    mismatches: list[tuple[Vertex, str, str]] = []
    for x in range(-box, box + 1):
        for y in range(-box, box + 1):
            v = (x, y)
            if not _valid_vertex(plane, v):
                continue
            label = _class_label(plane, v)
            counts[label] = counts.get(label, 0) + 1
            total += 1
            comp = distances.component(v)
            if comp is None:
                continue
            reached += 1
            expected = seed_class.get(comp)
            if expected != label:
                mismatches.append((v, label, str(expected)))
    return OrbitCensus(plane, box, counts, total, reached, mismatches)


# ---------------------------------------------------------------------------
# Simple cycles

def find_simple_cycles(plane: Plane, seed: Vertex, depth_limit: int) -> list[list[Vertex]]:
    """Simple cycles (no repeated edge) in the explored ball around ``seed``.

    Edges are counted per generator class, so two generators joining the same
    two vertices form a genuine 2-cycle.  Cycles are returned as vertex lists
    in cyclic order.  Within the explored radius the tree components report
    nothing and the one exceptional component reports its single short cycle.
    """
    spec = CayleySpec(plane, depth_limit, (seed,))
    gens = _gens_for(plane)
    seed_mag = max(abs(seed[0]), abs(seed[1]))
    bound = (seed_mag + 2) * 3**depth_limit
    shift = (2 * bound).bit_length()
    mask = (1 << shift) - 1

    def enc(x: int, y: int) -> int:
        return ((x + bound) << shift) | (y + bound)

    def dec(key: int) -> Vertex:
        return (key >> shift) - bound, (key & mask) - bound

    root = enc(*seed)
    tree: dict[int, tuple[int, int] | None] = {root: None}  # key -> (parent, gen class)
    frontier = [root]
    extra_edges: dict[tuple[int, int, int], tuple[int, int]] = {}
    for _ in range(depth_limit):
        nxt = []
        for key in frontier:
            x, y = dec(key)
            for gen_class, fn in gens:
                nx, ny = fn(x, y)
                if nx == x and ny == y:
                    continue
                nkey = enc(nx, ny)
                if nkey not in tree:
                    tree[nkey] = (key, gen_class)
                    nxt.append(nkey)
                    continue
                eid = (min(key, nkey), max(key, nkey), gen_class)
                via = tree[key]
                if via is not None and via == (nkey, gen_class):
                    continue  # the tree edge to our own parent
                back = tree[nkey]
                if back is not None and back == (key, gen_class):
                    continue  # the tree edge down to a child
                extra_edges.setdefault(eid, (key, nkey))
        frontier = nxt

    def path_to_root(key: int) -> list[int]:
        path = [key]
        while True:
            up = tree[path[-1]]
            if up is None:
                return path
            path.append(up[0])

    cycles: list[list[Vertex]] = []
    for ka, kb in extra_edges.values():
        pa, pb = path_to_root(ka), path_to_root(kb)
        on_pa = {k: i for i, k in enumerate(pa)}
        meet = next(i for i, k in enumerate(pb) if k in on_pa)
        cycle_keys = pa[: on_pa[pb[meet]] + 1] + pb[:meet][::-1]
        cycles.append([dec(k) for k in cycle_keys])
    return cycles


# ---------------------------------------------------------------------------
# Covering correspondence

#: Disk class letter covered by each torus orbit (computed correspondence).
ORBIT_TO_CLASS = {
    TORUS_ORBIT_LABELS[0]: "d",
    TORUS_ORBIT_LABELS[1]: "d",
    TORUS_ORBIT_LABELS[2]: "c",
    TORUS_ORBIT_LABELS[3]: "c",
    TORUS_ORBIT_LABELS[4]: "e",
}


@dataclass
class CoveringReport:
    """Vertex-by-vertex comparison of the two searches through the covering."""

    box: int
    depth_limit: int
    primitive_count: int
    compared: int
    distance_mismatches: list[tuple[Vertex, int, int]] = field(default_factory=list)
    definedness_mismatches: list[tuple[Vertex, object, object]] = field(default_factory=list)
    sign_collapse_violations: list[Vertex] = field(default_factory=list)
    component_conflicts: list[tuple[Vertex, str, str]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not (self.distance_mismatches or self.definedness_mismatches
                    or self.sign_collapse_violations or self.component_conflicts)


def check_covering(box: int, depth_limit: int, *,
                   torus_distances: DistanceMap | None = None,
                   dynnikov_distances: DistanceMap | None = None) -> CoveringReport:
    """Check that the sign collapse is a distance-preserving double covering.

    For every primitive torus vertex in the box: its distance to the lifted
    reference set must equal the disk-side distance of its image whenever
    either search reached it (and the two searches must agree on reaching
    it); ``v`` and ``-v`` must collapse to the same image at the same
    distance; and the orbit of ``v`` must cover the disk class its image
    classifies to.
    """
    if box < 1:
        raise ValueError("box must be at least 1")
    if torus_distances is None:
        torus_distances = bfs_distances(CayleySpec(Plane.TORUS, depth_limit, TORUS_SEEDS))
    if dynnikov_distances is None:
        dynnikov_distances = bfs_distances(CayleySpec(Plane.DYNNIKOV, depth_limit, DYNNIKOV_SEEDS))
    report = CoveringReport(box, depth_limit, 0, 0)
    for p in range(-box, box + 1):
        for q in range(-box, box + 1):
            if (p == 0 and q == 0) or math.gcd(p, q) != 1:
                continue
            report.primitive_count += 1
            v = (p, q)
            image = torus_to_dynnikov(v)
            t_dist = torus_distances.distance(v)
            d_dist = dynnikov_distances.distance(image)
            if (t_dist is None) != (d_dist is None):
                report.definedness_mismatches.append((v, t_dist, d_dist))
                continue
            if t_dist is None:
                continue
            report.compared += 1
            if t_dist != d_dist:
                report.distance_mismatches.append((v, t_dist, d_dist))
            if torus_to_dynnikov((-p, -q)) != image or torus_distances.distance((-p, -q)) != t_dist:
                report.sign_collapse_violations.append(v)
            expected = ORBIT_TO_CLASS[torus_orbit_label(v)]
            actual = classify(image).value
            if expected != actual:
                report.component_conflicts.append((v, expected, actual))
    return report


# ---------------------------------------------------------------------------
# Batch verification (the engine behind the CLI's verify command)

@dataclass
class CheckResult:
    name: str
    checked: int
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "ok" if self.passed else "FAIL"
        tail = f" — {self.detail}" if self.detail else ""
        return f"{status:4s} {self.name}: {self.checked} checked{tail}"


@dataclass
class VerificationReport:
    bound: int
    depth_limit: int
    checks: list[CheckResult]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


def _check_braid_squares(bound: int) -> CheckResult:
    from .actions import _s1, _s1_inv, _s2, _s2_inv
    pairs = (
        (_s1, actions._tc), (_s1_inv, actions._tc_inv),
        (_s2, actions._td), (_s2_inv, actions._td_inv),
    )
    checked = 0
    for a in range(-bound, bound + 1):
        for b in range(-bound, bound + 1):
            if a == 0 and b == 0:
                continue
            for letter, twist in pairs:
                checked += 1
                if letter(*letter(a, b)) != twist(a, b):
                    return CheckResult("braid-squares-match-twists", checked, False,
                                       f"counterexample ({a}, {b})")
    return CheckResult("braid-squares-match-twists", checked, True)


def _check_round_trips(bound: int) -> CheckResult:
    from .coords import dynnikov_to_torus
    checked = 0
    for x in range(-bound, bound + 1):
        for y in range(-bound, bound + 1):
            if x == 0 and y == 0:
                continue
            checked += 1
            d = torus_to_dynnikov((x, y))
            if torus_to_dynnikov((-x, -y)) != d:
                return CheckResult("coordinate-round-trips", checked, False,
                                   f"sign collapse fails at ({x}, {y})")
            lift = dynnikov_to_torus(d)
            if lift != (x, y) and lift != (-x, -y):
                return CheckResult("coordinate-round-trips", checked, False,
                                   f"lift of image of ({x}, {y}) is {tuple(lift)}")
            if torus_to_dynnikov(dynnikov_to_torus((x, y))) != (x, y):
                return CheckResult("coordinate-round-trips", checked, False,
                                   f"round trip fails at Dynnikov ({x}, {y})")
    return CheckResult("coordinate-round-trips", checked, True)


def _check_minimality(dyn_map: DistanceMap) -> CheckResult:
    from .untwist import conjugation_length, untwist
    checked = 0
    for vertex, dist in dyn_map.items():
        checked += 1
        steps = len(untwist(vertex).word)
        formula = conjugation_length(vertex)
        if not dist == steps == formula:
            return CheckResult("bfs-vs-walk-vs-expansion", checked, False,
                               f"{vertex}: bfs {dist}, walk {steps}, expansion {formula}")
    return CheckResult("bfs-vs-walk-vs-expansion", checked, True)


def _check_census(plane: Plane, bound: int, distances: DistanceMap,
                  expected_classes: int) -> CheckResult:
    name = f"orbit-census-{'torus' if plane is Plane.TORUS else 'disk'}"
    census = orbit_census(plane, bound, distances=distances)
    if len(census.class_counts) != expected_classes:
        return CheckResult(name, census.total, False,
                           f"{len(census.class_counts)} classes, expected {expected_classes}")
    if census.mismatches:
        v, got, want = census.mismatches[0]
        return CheckResult(name, census.total, False,
                           f"{v} labelled {got!r} but sits in a {want!r} component")
    return CheckResult(name, census.total, True,
                       f"{census.reached} of {census.total} matched to components")


def _check_covering(bound: int, depth_limit: int, torus_map: DistanceMap,
                    dyn_map: DistanceMap) -> CheckResult:
    report = check_covering(bound, depth_limit, torus_distances=torus_map,
                            dynnikov_distances=dyn_map)
    if not report.passed:
        for group in (report.distance_mismatches, report.definedness_mismatches,
                      report.sign_collapse_violations, report.component_conflicts):
            if group:
                return CheckResult("covering-double-cover", report.primitive_count,
                                   False, f"first failure: {group[0]!r}")
    return CheckResult("covering-double-cover", report.primitive_count, True,
                       f"{report.compared} distances compared")


def _check_cycles() -> CheckResult:
    checked = 0
    for seed in ((1, 0), (-1, 0), (0, 1), (0, -1)):
        checked += 1
        cycles = find_simple_cycles(Plane.TORUS, seed, 6)
        if cycles:
            return CheckResult("cycle-uniqueness", checked, False,
                               f"unexpected cycle in the tree component of {seed}")
    checked += 1
    cycles = find_simple_cycles(Plane.TORUS, (1, 1), 6)
    if len(cycles) != 1 or len(cycles[0]) != 4 or \
            set(cycles[0]) != {(1, 1), (1, -1), (-1, -1), (-1, 1)}:
        return CheckResult("cycle-uniqueness", checked, False,
                           f"odd-odd component cycles: {cycles!r}")
    if CYCLE_CERTIFICATE.apply((1, 1)) != (1, 1):
        return CheckResult("cycle-uniqueness", checked, False,
                           "certificate matrix does not fix (1, 1)")
    return CheckResult("cycle-uniqueness", checked, True, "4 trees and one 4-cycle")


def run_verification(bound: int, depth_limit: int) -> VerificationReport:
    """Run the whole cross-validation gauntlet at the given box and depth."""
    if bound < 1 or depth_limit < 1:
        raise ValueError("bound and depth must be at least 1")
    checks = [_check_braid_squares(bound), _check_round_trips(bound)]
    dyn_map = bfs_distances(CayleySpec(Plane.DYNNIKOV, depth_limit, DYNNIKOV_SEEDS))
    torus_map = bfs_distances(CayleySpec(Plane.TORUS, depth_limit, TORUS_SEEDS))
    checks.append(_check_minimality(dyn_map))
    checks.append(_check_census(Plane.DYNNIKOV, bound, dyn_map, 3))
    checks.append(_check_census(Plane.TORUS, bound, torus_map, 5))
    checks.append(_check_covering(bound, depth_limit, torus_map, dyn_map))
    checks.append(_check_cycles())
    return VerificationReport(bound, depth_limit, checks)
