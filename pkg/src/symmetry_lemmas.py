"""
Symmetry Lemmas - Point mappings of the lattice symmetries and the two coboundary identities
"""
from typing import Tuple

from .basic_checker import BasicChecker
from .hermitian_space import apply
from .paper import P1_NAMES, P2_NAMES, TETRAHEDRON_NAMES, lemma_table
from .report import Report
from .search.relations import incidence_row

# (symmetry, source, target)
POINT_MAPPINGS: Tuple[Tuple[str, str, str], ...] = (
    ('reflect_y', 'yi', 'y-i'),
    ('reflect_y', 'y-i', 'yi'),
    ('reflect_y', 'x+', 'x+'),
    ('reflect_y', 'xi', 'xi'),
    ('rotate_x', 'xi', 'x+'),
    ('rotate_x', 'y+', 'y+'),
    ('rotate_x', 'yi', 'yi'),
    ('rotate_x', 'y-i', 'y-i'),
    ('rotate_y', 'y+', 'yi'),
    ('rotate_y', 'y-i', 'y+'),
    ('rotate_y', 'x+', 'x+'),
    ('rotate_y', 'xi', 'xi'),
    ('swap', 'x+', 'y+'),
    ('swap', 'y+', 'x+'),
    ('swap', 'xi', 'yi'),
    ('swap', 'yi', 'xi'),
    ('swap', 'v', 'v'),
    ('cube', 'x+', 'xi'),
    ('cube', 'xi', 'x+'),
    ('cube', 'yi', 'v'),
    ('cube', 'v', 'y+'),
)

# (face, face, sign) with b(first) = sign * b(second); sign 0 means both vanish
FACE_RELATIONS = (
    (('x+', 'xi', 'yi', 'y-i'), ('x+', 'xi', 'yi', 'y-i'), 0),
    (('xi', 'y+', 'yi', 'y-i'), ('x+', 'y+', 'yi', 'y-i'), 1),
    (('x+', 'xi', 'y+', 'y-i'), ('x+', 'xi', 'y+', 'yi'), -1),
    (('xi', 'y+', 'yi', 'v'), ('x+', 'xi', 'yi', 'v'), 1),
    (('x+', 'y+', 'yi', 'v'), ('x+', 'xi', 'y+', 'v'), 1),
    (('x+', 'xi', 'yi', 'v'), ('x+', 'xi', 'y+', 'v'), 1),
)


class SymmetryLemmaChecks(BasicChecker):
    """Check the symmetry lemmas behind the certified lower bound"""

    def check_point_mappings(self, report: Report) -> bool:
        ok = True
        for name, source, target in POINT_MAPPINGS:
            g = self.config.symmetry(name)
            image = apply(g, self.config.point(source))
            ok &= report.add_check(f"{name} . {source} = {target}", image == self.config.point(target), f"image {self.name_of(image)}")
        return ok

    def verify_symmetry_lemmas(self) -> Report:
        """
        Verify the point mappings and replay the two coboundary identities

        The identities are derived formally: delta b is expanded over the
        five faces of each tuple and mapped through the face orbits that the
        five symmetries generate, which must give
        delta b(p1) = 2 b(x+,xi,y+,yi) and delta b(p2) = b(x+,xi,y+,yi).

        Returns:
            Report naming each mapping, face relation and identity
        """
        self.log_check_request("SYMMETRY_LEMMAS", mappings=len(POINT_MAPPINGS))
        report = Report("Symmetry lemmas")
        try:
            self.check_point_mappings(report)
            table = lemma_table(self.config)
            for first, second, sign in FACE_RELATIONS:
                relation = table.same_orbit(table.indices_of(self.config.named(*first)), table.indices_of(self.config.named(*second)))
                label = (
                    f"b({','.join(first)}) = 0" if sign == 0
                    else f"b({','.join(first)}) = {'+' if sign > 0 else '-'}b({','.join(second)})"
                )
                report.add_check(label, relation == sign, f"relative sign {relation}")

            orbit, sign = table.incidence(table.indices_of(self.config.named(*TETRAHEDRON_NAMES)))
            report.add_check("b(x+,xi,y+,yi) lies in a free orbit", orbit is not None)
            if orbit is not None:
                for names, multiple in ((P1_NAMES, 2), (P2_NAMES, 1)):
                    row = incidence_row(table.indices_of(self.config.named(*names)), table)
                    expected = {orbit: multiple * sign}
                    report.add_check(
                        f"delta b({','.join(names)}) = {multiple} b(x+,xi,y+,yi)",
                        row == expected,
                        f"expanded to {row}",
                    )
        except Exception as e:
            self.log_error(e, "verifying the symmetry lemmas")
            report.add_check("symmetry lemma replay", False, str(e))
        self.log_check_result(report)
        return report
