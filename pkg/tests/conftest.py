import json
import random

import pytest

from modules.polytope import hull
from modules.session import session_from_dict

D1_VERTICES = [[0, 0], [1, 0], [0, 1], [1, 1]]
D2_VERTICES = [[0, 0], [2, 0], [1, 2], [0, 1]]
SEGMENT_VERTICES = [[0, 0], [1, 0]]
SIMPLEX3_VERTICES = [[0, 0, 0], [1, 0, 0], [0, 1, 0], [0, 0, 1]]


def random_polytopes(seed, count, rank_n=2, box=2, full=True):
    """Hulls of a few random points of [0, box]^rank_n, reproducible from ``seed``."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        pts = [
            tuple(rng.randint(0, box) for _ in range(rank_n))
            for _ in range(rng.randint(rank_n + 1, rank_n + 3))
        ]
        p = hull(pts, rank_n)
        if full and p.dim < rank_n:
            continue
        out.append(p)
    return out


@pytest.fixture
def d1():
    return hull(D1_VERTICES, 2)


@pytest.fixture
def d2():
    return hull(D2_VERTICES, 2)


@pytest.fixture
def segment():
    return hull(SEGMENT_VERTICES, 2)


@pytest.fixture
def simplex3():
    return hull(SIMPLEX3_VERTICES, 3)


@pytest.fixture
def polygon_pool():
    return random_polytopes(2024, 8)


@pytest.fixture
def session_data():
    return {
        "lattice_rank": 2,
        "polytopes": [
            {"name": "D1", "vertices": D1_VERTICES},
            {"name": "D2", "vertices": D2_VERTICES},
            {"name": "S", "vertices": SEGMENT_VERTICES},
        ],
    }


@pytest.fixture
def session(session_data):
    return session_from_dict(session_data)


@pytest.fixture
def session_file(tmp_path, session_data):
    path = tmp_path / "session.json"
    path.write_text(json.dumps(session_data))
    return str(path)


@pytest.fixture
def rank3_session_file(tmp_path):
    path = tmp_path / "rank3.json"
    path.write_text(json.dumps({"lattice_rank": 3, "polytopes": [{"name": "T", "vertices": SIMPLEX3_VERTICES}]}))
    return str(path)
