"""
Face Orbits - Signed union-find over 4-faces, group closure and the face orbit table
"""
import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

from ..cochain_algebra import permutation_sign
from ..exceptions import GeometryError, ModelMismatchError
from ..hermitian_space import BoundaryPoint, HermitianModel, Isometry, apply, check_same_model, compose, identity

logger = logging.getLogger(__name__)

Face = Tuple[int, int, int, int]


@dataclass
class SearchOptions:
    """Caps and switches for the certificate search"""

    max_tuples: int = 10000
    word_length: int = 4
    include_antiholomorphic: bool = False
    threads: int = 1

    def __post_init__(self):
        for name in ('max_tuples', 'word_length', 'threads'):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be positive, got {getattr(self, name)}")


class SignedUnionFind:
    """
    Union-find where each element carries a sign relative to its parent

    An element x with parent y and parity s encodes b(x) = s * b(y). A class
    is forced to zero when two paths give opposite signs for one element.
    """

    def __init__(self, size: int):
        self.parent = list(range(size))
        self.parity = [1] * size
        self.rank = [0] * size
        self.zero = [False] * size

    def find(self, x: int) -> Tuple[int, int]:
        """Root of x and the sign s with b(x) = s * b(root)"""
        parent = self.parent[x]
        if parent == x:
            return x, 1
        root, sign = self.find(parent)
        self.parent[x] = root
        self.parity[x] *= sign
        return root, self.parity[x]

    def union(self, x: int, y: int, sign: int) -> bool:
        """Record b(x) = sign * b(y); True when the structure changed"""
        rx, sx = self.find(x)
        ry, sy = self.find(y)
        if rx == ry:
            if sx != sign * sy and not self.zero[rx]:
                self.zero[rx] = True
                return True
            return False
        if self.rank[rx] > self.rank[ry]:
            rx, ry = ry, rx
        elif self.rank[rx] == self.rank[ry]:
            self.rank[ry] += 1
        self.parent[rx] = ry
        self.parity[rx] = sx * sign * sy
        self.zero[ry] = self.zero[ry] or self.zero[rx]
        return True

    def mark_zero(self, x: int) -> bool:
        root, _ = self.find(x)
        if self.zero[root]:
            return False
        self.zero[root] = True
        return True

    def is_zero(self, x: int) -> bool:
        return self.zero[self.find(x)[0]]


def close_group(
    generators: Sequence[Isometry],
    model: HermitianModel,
    word_length: int = 4,
    include_antiholomorphic: bool = False,
) -> List[Isometry]:
    """
    Elements given by words of length at most word_length in the generators

    The identity comes first; elements are deduplicated projectively and kept
    in breadth-first discovery order.
    """
    gens = []
    for g in generators:
        if g.model is not model:
            raise ModelMismatchError(model.value, g.model.value)
        if g.antiholomorphic and not include_antiholomorphic:
            logger.info(f"Skipping antiholomorphic generator {g.name or '?'}")
            continue
        gens.append(g)
    start = identity(model)
    elements = [start]
    seen = {start.projective_key()}
    frontier = [start]
    for _ in range(word_length):
        next_frontier = []
        for word in frontier:
            for g in gens:
                product = g if word is start else compose(word, g)
                key = product.projective_key()
                if key in seen:
                    continue
                seen.add(key)
                elements.append(product)
                next_frontier.append(product)
        if not next_frontier:
            break
        frontier = next_frontier
    logger.info(f"Closed {len(gens)} generators to {len(elements)} elements (word length <= {word_length})")
    return elements


class PointIndex:
    """Lookup of point indices; exact points by canonical key, inexact ones by projective scan"""

    def __init__(self, points: Sequence[BoundaryPoint]):
        self.points = list(points)
        self._by_key = {p.key: i for i, p in enumerate(self.points) if p.is_exact}

    def lookup(self, point: BoundaryPoint) -> Optional[int]:
        if point.is_exact:
            return self._by_key.get(point.key)
        for i, candidate in enumerate(self.points):
            if candidate == point:
                return i
        return None


@dataclass(frozen=True)
class Merge:
    """g maps the ordered face to an ordered image; b(face) = sign * b(sorted image)"""

    face: Face
    image: Face
    element: int
    sign: int


@dataclass
class Orbit:
    representative: Face
    members: List[Face] = field(default_factory=list)
    forced_zero: bool = False

    @property
    def status(self) -> str:
        return 'forced-zero' if self.forced_zero else 'free'


@dataclass
class FaceOrbitTable:
    """
    Classes of sorted 4-faces of the point set under the group and alternation

    face_orbit maps each sorted face to (orbit id, sign) with
    b(face) = sign * b(orbit representative).
    """

    points: List[BoundaryPoint]
    elements: List[Isometry]
    orbits: List[Orbit]
    face_orbit: Dict[Face, Tuple[int, int]]
    merges: List[Merge]

    @property
    def model(self) -> HermitianModel:
        return self.points[0].model

    @property
    def free_orbits(self) -> List[int]:
        return [i for i, orbit in enumerate(self.orbits) if not orbit.forced_zero]

    def index_of(self, point: BoundaryPoint) -> int:
        index = PointIndex(self.points).lookup(point)
        if index is None:
            raise GeometryError(f"{point!r} is not in the face orbit table")
        return index

    def indices_of(self, points: Sequence[BoundaryPoint]) -> Tuple[int, ...]:
        index = PointIndex(self.points)
        result = []
        for point in points:
            found = index.lookup(point)
            if found is None:
                raise GeometryError(f"{point!r} is not in the face orbit table")
            result.append(found)
        return tuple(result)

    def incidence(self, face: Sequence[int]) -> Tuple[Optional[int], int]:
        """
        Orbit and sign of an ordered face of point indices

        Returns (None, 0) when the face has a repeated point or lies in a
        forced-zero orbit.
        """
        sign = permutation_sign(face)
        if sign == 0:
            return None, 0
        orbit, orbit_sign = self.face_orbit[tuple(sorted(face))]
        if self.orbits[orbit].forced_zero:
            return None, 0
        return orbit, sign * orbit_sign

    def same_orbit(self, first: Sequence[int], second: Sequence[int]) -> Optional[int]:
        """Relative sign s with b(first) = s * b(second), None when unrelated, 0 when both vanish"""
        a, sa = self.face_orbit[tuple(sorted(first))]
        b, sb = self.face_orbit[tuple(sorted(second))]
        if a != b:
            return None
        if self.orbits[a].forced_zero:
            return 0
        return sa * sb * permutation_sign(first) * permutation_sign(second)


def sort_points(points: Sequence[BoundaryPoint]) -> List[BoundaryPoint]:
    """Canonical order on points; raises on duplicates"""
    check_same_model(points)
    ordered = sorted(points, key=lambda p: p.key)
    for a, b in zip(ordered, ordered[1:]):
        if a == b:
            raise GeometryError(f"duplicate point {a!r}")
    if any(not p.is_exact for p in ordered):
        for i, j in combinations(range(len(ordered)), 2):
            if ordered[i] == ordered[j]:
                raise GeometryError(f"duplicate point {ordered[i]!r}")
    return ordered


def point_permutation(g: Isometry, index: PointIndex) -> Tuple[Optional[int], ...]:
    """Where g sends each indexed point; None for images outside the set"""
    return tuple(index.lookup(apply(g, p)) for p in index.points)


def build_table(
    points: Sequence[BoundaryPoint],
    elements: Sequence[Isometry],
    merges: Sequence[Merge],
) -> FaceOrbitTable:
    """Rebuild orbits from a merge list; used by both the search and the certificate checker"""
    faces = list(combinations(range(len(points)), 4))
    position = {face: i for i, face in enumerate(faces)}
    uf = SignedUnionFind(len(faces))
    for merge in merges:
        uf.union(position[merge.face], position[tuple(sorted(merge.image))], merge.sign)
    return _collect(list(points), list(elements), faces, uf, list(merges))


def _collect(points, elements, faces, uf: SignedUnionFind, merges) -> FaceOrbitTable:
    orbits: List[Orbit] = []
    face_orbit: Dict[Face, Tuple[int, int]] = {}
    by_root: Dict[int, Tuple[int, int]] = {}
    for i, face in enumerate(faces):
        root, sign = uf.find(i)
        if root not in by_root:
            by_root[root] = (len(orbits), sign)
            orbits.append(Orbit(face, forced_zero=uf.zero[root]))
        orbit, rep_sign = by_root[root]
        orbits[orbit].members.append(face)
        face_orbit[face] = (orbit, sign * rep_sign)
    return FaceOrbitTable(points, elements, orbits, face_orbit, merges)


def face_orbits(
    points: Sequence[BoundaryPoint],
    group: Sequence[Isometry],
    opts: Optional[SearchOptions] = None,
) -> FaceOrbitTable:
    """
    Quotient the sorted 4-faces of the points by the closed group with signs

    Args:
        points: Pairwise distinct boundary points of one model
        group: Generators; they are closed under composition up to the word length cap
        opts: Search options

    Returns:
        FaceOrbitTable over the points in canonical order
    """
    opts = opts or SearchOptions()
    ordered = sort_points(points)
    model = ordered[0].model
    elements = close_group(group, model, opts.word_length, opts.include_antiholomorphic)
    index = PointIndex(ordered)
    faces = list(combinations(range(len(ordered)), 4))
    position = {face: i for i, face in enumerate(faces)}
    uf = SignedUnionFind(len(faces))
    merges: List[Merge] = []
    for element_number, g in enumerate(elements):
        if element_number == 0:
            continue
        image_of = point_permutation(g, index)
        for face in faces:
            image = tuple(image_of[i] for i in face)
            if None in image:
                continue
            sign = permutation_sign(image)
            if uf.union(position[face], position[tuple(sorted(image))], sign):
                merges.append(Merge(face, image, element_number, sign))
    table = _collect(ordered, elements, faces, uf, merges)
    logger.info(
        f"Face orbits: {len(faces)} faces, {len(table.orbits)} orbits, "
        f"{len(table.orbits) - len(table.free_orbits)} forced to zero, {len(merges)} merges"
    )
    return table
