"""
Engine - The certificate search pipeline from points and group generators to a certificate
"""
import logging
from concurrent.futures import ThreadPoolExecutor
from itertools import combinations, islice
from typing import List, Optional, Sequence, Tuple

from ..certificate import Certificate
from ..cochain_algebra import cup_sq_reduced
from ..exact_arith import PiValue
from ..exceptions import GeometryError
from ..hermitian_space import BoundaryPoint, Isometry
from .face_orbits import FaceOrbitTable, SearchOptions, face_orbits
from .optimizer import optimize_certificate
from .relations import relation_kernel

logger = logging.getLogger(__name__)


def candidate_tuples(table: FaceOrbitTable, max_tuples: int) -> List[Tuple[int, ...]]:
    """Sorted 5-subsets of the point indices in lexicographic order, capped"""
    tuples = list(islice(combinations(range(len(table.points)), 5), max_tuples))
    return tuples


def evaluate_tuples(table: FaceOrbitTable, tuples: Sequence[Tuple[int, ...]], threads: int = 1) -> List[PiValue]:
    """Cup-square value of every tuple; results keep the input order"""

    def evaluate(t):
        return cup_sq_reduced(*(table.points[i] for i in t))

    if threads > 1 and len(tuples) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(evaluate, tuples))
    return [evaluate(t) for t in tuples]


def search(
    points: Sequence[BoundaryPoint],
    group: Sequence[Isometry],
    opts: Optional[SearchOptions] = None,
) -> Certificate:
    """
    Search for the best lower-bound certificate on a finite configuration

    Args:
        points: Pairwise distinct boundary points of one model
        group: Group generators (closed up to opts.word_length)
        opts: Search options

    Returns:
        Certificate that passes Certificate.validate

    Raises:
        GeometryError: if the optimized certificate fails Certificate.validate
    """
    opts = opts or SearchOptions()
    table = face_orbits(points, group, opts)
    tuples = candidate_tuples(table, opts.max_tuples)
    values = evaluate_tuples(table, tuples, opts.threads)

    kept_tuples = []
    kept_values = []
    for t, value in zip(tuples, values):
        if value.is_exact:
            kept_tuples.append(t)
            kept_values.append(value)
        else:
            logger.warning(f"Dropping tuple {t}: cup square {value} is not an exact multiple of pi^2")
    logger.info(f"Search: {len(tuples)} candidate tuples, {len(kept_tuples)} with exact values")

    system = relation_kernel(kept_tuples, table)
    certificate = optimize_certificate(system, kept_values)
    problems = certificate.validate()
    if problems:
        logger.error(f"Search produced an inconsistent certificate: {problems}")
        raise GeometryError(f"search produced an inconsistent certificate: {'; '.join(problems)}")
    return certificate
