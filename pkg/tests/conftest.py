from pathlib import Path

import pytest

FIXTURES = Path(__file__).parent / "fixtures"


def read_rows(name: str) -> list[list[int]]:
    text = (FIXTURES / name).read_text()
    return [[int(v) for v in line.split()] for line in text.splitlines() if line.strip()]


def read_bfile(name: str) -> list[int]:
    rows = read_rows(name)
    assert [r[0] for r in rows] == list(range(len(rows)))
    return [r[1] for r in rows]


@pytest.fixture
def triangle_alpha2():
    return read_rows("fnomial_triangle_alpha2.txt")


@pytest.fixture
def inverse_alpha2():
    return read_rows("inverse_triangle_alpha2.txt")


@pytest.fixture
def listings():
    out = {}
    for line in (FIXTURES / "n_alpha_listings.txt").read_text().splitlines():
        a, terms = line.split(":")
        out[int(a)] = [int(t) for t in terms.split()]
    return out
