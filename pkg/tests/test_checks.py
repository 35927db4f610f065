import pytest

from modules.checks import ConsistencyChecker
from modules.errors import InputValidationError, RankMismatch, UnknownPolytopeName
from modules.session import load_session, session_from_dict


def test_checker_passes_on_worked_examples(session):
    checker = ConsistencyChecker(config={"displacement_seed": 3})
    section = checker.analyze(session, ["D1"])["ConsistencyChecker"]
    assert section["passed"]
    assert section["issues"] == []
    assert section["hypersurface_series"]["passed"]
    assert section["specialization"] == {"support_equal": True, "top_matches": True}
    assert "product_rule" not in section

    pair = checker.analyze(session, ["D1", "D2"])["ConsistencyChecker"]
    assert pair["product_rule"]["passed"]
    assert pair["balanced_unrefined"]["passed"]


def test_checker_notes_empty_intersections(session):
    section = ConsistencyChecker().analyze(session, ["D1", "D2", "S"])["ConsistencyChecker"]
    assert section["passed"]
    assert [i["code"] for i in section["issues"]] == ["EMPTY_INTERSECTION"]
    assert "balanced_refined" not in section


def test_session_loading(session_file):
    s = load_session(session_file)
    assert s.lattice_rank == 2
    assert s.names() == ("D1", "D2", "S")
    assert len(s.resolve(["D2"])[0].vertices) == 4
    with pytest.raises(UnknownPolytopeName):
        s.resolve(["nope"])


def test_session_validation(tmp_path):
    with pytest.raises(InputValidationError):
        session_from_dict({"polytopes": []})
    with pytest.raises(InputValidationError):
        session_from_dict({"lattice_rank": 0})
    with pytest.raises(RankMismatch):
        session_from_dict({"lattice_rank": 2, "polytopes": [{"name": "A", "vertices": [[0, 0, 0]]}]})
    with pytest.raises(InputValidationError):
        session_from_dict(
            {"lattice_rank": 2, "polytopes": [{"name": "A", "vertices": [[0, 0]]}, {"name": "A", "vertices": [[1, 0]]}]}
        )
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(InputValidationError):
        load_session(str(bad))


def test_session_hull_verification(session_data):
    s = session_from_dict(session_data, verify_hulls=True)
    assert s.polytopes["D1"].dim == 2


def test_session_hull_verification_in_rank_three():
    points = [[2, -1, 2], [1, 1, 0], [1, 0, 0], [1, 1, -1], [-2, 1, 2], [-1, 1, 0], [-1, -2, 1], [0, 2, 2]]
    data = {"lattice_rank": 3, "polytopes": [{"name": "Q", "vertices": points + [[0, 1, 1]]}]}
    s = session_from_dict(data, verify_hulls=True)
    assert s.polytopes["Q"].dim == 3
    assert all(s.polytopes["Q"].contains(v) for v in points)
