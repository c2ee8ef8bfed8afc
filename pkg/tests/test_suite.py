from math import factorial

from hgcolor import validate
from hgcolor.suite import fixed_suite


def test_suite_shape():
    entries = fixed_suite()
    assert len(entries) == 40
    names = [name for name, _, _ in entries]
    assert len(set(names)) == 40
    for name, h, r in entries:
        assert h.vertex_count <= 8
        assert factorial(h.vertex_count) <= 40320
        assert r in (2, 3)
        assert validate(h) == []


def test_suite_deterministic():
    a = fixed_suite()
    b = fixed_suite()
    assert [(n, h, r) for n, h, r in a] == [(n, h, r) for n, h, r in b]
