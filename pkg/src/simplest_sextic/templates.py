"""The 19 integral basis templates, indexed by m mod 36.

The table below is the authoritative copy; ``data/templates.txt`` is an
independent transcription of the same data and the two are compared by the
test suite.
"""

from dataclasses import dataclass
from importlib import resources

# (residues, ell, numerators, denominators); numerators are ascending
# coefficient lists in x.
_TABLE = [
    ((1,), 0, ([1], [0, 1], [0, 0, 1], [1, 1, 0, 1], [4, 1, 3, 0, 1], [11, 3, 13, 6, 2, 1]), (1, 1, 1, 2, 6, 18)),
    ((2,), 3, ([1], [0, 1], [0, 0, 1], [0, 0, 0, 1], [1, 0, 0, 1, 1], [2, 7, 6, 2, 0, 1]), (1, 1, 1, 1, 3, 9)),
    ((4,), 0, ([1], [0, 1], [0, 0, 1], [1, 0, 1, 1], [1, 1, 3, 0, 1], [8, 3, 1, 3, 2, 1]), (1, 1, 1, 2, 6, 18)),
    ((5,), 0, ([1], [0, 1], [0, 0, 1], [1, 1, 0, 1], [1, 0, 3, 1, 1], [8, 10, 3, 5, 0, 1]), (1, 1, 1, 2, 6, 18)),
    ((7, 34), 3, ([1], [0, 1], [0, 0, 1], [0, 0, 0, 1], [1, 1, 0, 0, 1], [5, 3, 7, 0, 2, 1]), (1, 1, 1, 1, 3, 9)),
    ((8,), 0, ([1], [0, 1], [0, 0, 1], [1, 0, 1, 1], [4, 3, 0, 1, 1], [5, 13, 0, 8, 0, 1]), (1, 1, 1, 2, 6, 18)),
    ((10, 19), 3, ([1], [0, 1], [0, 0, 1], [0, 0, 0, 1], [1, 1, 0, 0, 1], [2, 3, 4, 6, 2, 1]), (1, 1, 1, 1, 3, 9)),
    ((11,), 3, ([1], [0, 1], [0, 0, 1], [0, 0, 0, 1], [1, 0, 0, 1, 1], [2, 7, 6, 2, 0, 1]), (1, 1, 1, 1, 3, 9)),
    ((13,), 0, ([1], [0, 1], [0, 0, 1], [1, 1, 0, 1], [4, 1, 3, 0, 1], [8, 12, 1, 3, 2, 1]), (1, 1, 1, 2, 6, 18)),
    ((14, 23), 3, ([1], [0, 1], [0, 0, 1], [0, 0, 0, 1], [1, 0, 0, 1, 1], [8, 1, 3, 5, 0, 1]), (1, 1, 1, 1, 3, 9)),
    ((16,), 0, ([1], [0, 1], [0, 0, 1], [1, 0, 1, 1], [1, 1, 3, 0, 1], [5, 3, 16, 0, 2, 1]), (1, 1, 1, 2, 6, 18)),
    ((17,), 0, ([1], [0, 1], [0, 0, 1], [1, 1, 0, 1], [1, 0, 3, 1, 1], [5, 13, 9, 8, 0, 1]), (1, 1, 1, 2, 6, 18)),
    ((20,), 0, ([1], [0, 1], [0, 0, 1], [1, 0, 1, 1], [4, 3, 0, 1, 1], [11, 7, 6, 2, 0, 1]), (1, 1, 1, 2, 6, 18)),
    ((22, 31), 3, ([1], [0, 1], [0, 0, 1], [0, 0, 0, 1], [1, 1, 0, 0, 1], [8, 3, 1, 3, 2, 1]), (1, 1, 1, 1, 3, 9)),
    ((25,), 0, ([1], [0, 1], [0, 0, 1], [1, 1, 0, 1], [4, 1, 3, 0, 1], [5, 3, 7, 0, 2, 1]), (1, 1, 1, 2, 6, 18)),
    ((26, 35), 3, ([1], [0, 1], [0, 0, 1], [0, 0, 0, 1], [1, 0, 0, 1, 1], [5, 4, 0, 8, 0, 1]), (1, 1, 1, 1, 3, 9)),
    ((28,), 0, ([1], [0, 1], [0, 0, 1], [1, 0, 1, 1], [1, 1, 3, 0, 1], [11, 3, 4, 6, 2, 1]), (1, 1, 1, 2, 6, 18)),
    ((29,), 0, ([1], [0, 1], [0, 0, 1], [1, 1, 0, 1], [1, 0, 3, 1, 1], [11, 7, 15, 2, 0, 1]), (1, 1, 1, 2, 6, 18)),
    ((32,), 0, ([1], [0, 1], [0, 0, 1], [1, 0, 1, 1], [4, 3, 0, 1, 1], [8, 1, 3, 5, 0, 1]), (1, 1, 1, 2, 6, 18)),
]


@dataclass(frozen=True)
class BasisTemplate:
    residues: tuple
    ell: int
    numerators: tuple
    denominators: tuple

    @property
    def label(self):
        return ",".join(str(r) for r in self.residues)

    @property
    def index(self):
        """Index of Z[alpha] in the order spanned by the template."""
        out = 1
        for d in self.denominators:
            out *= d
        return out

    def format_element(self, i):
        num = self.numerators[i]
        terms = []
        for k, c in enumerate(num):
            if not c:
                continue
            mono = "1" if k == 0 else ("x" if k == 1 else f"x^{k}")
            if k == 0:
                terms.append(str(c))
            else:
                terms.append(mono if c == 1 else f"{c}{mono}")
        s = "+".join(terms)
        d = self.denominators[i]
        return s if d == 1 else f"({s})/{d}"


def _freeze(rows):
    return tuple(
        BasisTemplate(tuple(res), ell, tuple(tuple(n) for n in nums), tuple(dens))
        for res, ell, nums, dens in rows
    )


TEMPLATES = _freeze(_TABLE)

_BY_RESIDUE = {r: t for t in TEMPLATES for r in t.residues}


def template_for_residue(r):
    return _BY_RESIDUE[r]


def parse_template_file(text):
    """Parse the line-oriented template format used by ``data/templates.txt``."""
    rows = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        fields = [s.strip() for s in line.split("|")]
        if len(fields) != 4:
            raise ValueError(f"malformed template line: {line!r}")
        residues = [int(x) for x in fields[0].split()]
        ell = int(fields[1])
        nums = [[int(x) for x in part.split()] for part in fields[2].split(";")]
        dens = [int(x) for x in fields[3].split()]
        if len(nums) != 6 or len(dens) != 6:
            raise ValueError(f"template needs six elements: {line!r}")
        rows.append((residues, ell, nums, dens))
    return _freeze(rows)


def load_template_file():
    text = resources.files("simplest_sextic").joinpath("data/templates.txt").read_text()
    return parse_template_file(text)
