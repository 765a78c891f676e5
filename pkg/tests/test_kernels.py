"""Compiled and pure kernels must be indistinguishable."""
import random

import pytest

from fdalg import _kernels
from fdalg._kernels import pure

compiled = pytest.importorskip("fdalg._kernels._fast", reason="compiled kernels not built")


@pytest.mark.parametrize("p", [2, 3, 5, 101, 65537])
def test_echelon_backends_agree(p):
    rng = random.Random(p)
    for _ in range(40):
        width = rng.randint(1, 10)
        a = pure.FpEchelon(width, p)
        b = compiled.FpEchelon(width, p)
        for _ in range(rng.randint(0, 14)):
            row = [rng.randrange(-30, 30) for _ in range(width)]
            assert a.insert(list(row)) == b.insert(list(row))
        assert a.rows() == b.rows()
        assert a.pivots() == b.pivots()
        assert a.rank == b.rank
        probe = [rng.randrange(-30, 30) for _ in range(width)]
        assert a.reduce(list(probe)) == b.reduce(list(probe))


@pytest.mark.parametrize("p", [2, 3, 7])
def test_charpoly_backends_agree(p):
    rng = random.Random(100 + p)
    for _ in range(60):
        n = rng.randint(1, 9)
        m = [[rng.randrange(p) for _ in range(n)] for _ in range(n)]
        assert pure.fp_charpoly([r[:] for r in m], p) == compiled.fp_charpoly(m, p)


def test_charpoly_known_values():
    # det(tI - diag(1,2,3)) = t^3 - 6t^2 + 11t - 6
    m = [[1, 0, 0], [0, 2, 0], [0, 0, 3]]
    assert _kernels.fp_charpoly(m, 101) == [95, 11, 95, 1]
    # nilpotent Jordan block: t^n
    n = [[0, 1], [0, 0]]
    assert _kernels.fp_charpoly(n, 5) == [0, 0, 1]


def test_backend_reports_name():
    assert _kernels.BACKEND in ("compiled", "pure")
