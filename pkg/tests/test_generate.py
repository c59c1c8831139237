import pytest

from polyham.generate import equivelar_tori, generate_equivelar_torus
from polyham.surface import MapError, check_polyhedral, equivelar_type, euler_characteristic, validate_surface


@pytest.mark.parametrize("pq, rows, cols, f", [((3, 6), 3, 4, (12, 36, 24)), ((4, 4), 3, 3, (9, 18, 9)),
                                               ((6, 3), 3, 3, (18, 27, 9))])
def test_counts(pq, rows, cols, f):
    m = generate_equivelar_torus(pq, rows, cols)
    assert tuple(m.f_vector) == f
    assert equivelar_type(m) == pq
    assert euler_characteristic(m) == 0


@pytest.mark.parametrize("args", [((3, 6), 1, 5), ((3, 6), 2, 2), ((4, 4), 2, 3)])
def test_degenerate_quotients(args):
    with pytest.raises(MapError):
        generate_equivelar_torus(*args)


def test_unsupported_type():
    with pytest.raises(ValueError):
        generate_equivelar_torus((5, 4), 3, 3)


def test_family_is_valid():
    seen = list(equivelar_tori((3, 6), 7, 16))
    assert seen
    for rows, cols, shift, m in seen:
        assert 7 <= len(m.vertices) <= 16
        assert validate_surface(m).ok and check_polyhedral(m).is_polyhedral
