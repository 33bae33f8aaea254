import _tadic as t


def test_verify_known_minimal():
    rep = t.verify("T*x^3 + x^2 + (T+1)*x + T", 2)
    assert rep["certified_minimal"]
    assert rep["height"] == "1/3"
    assert rep["profile"] == {"r": 1, "ell": 1, "s": 1, "total_found": 3, "splits": True}
    assert rep["gonality"] == 1


def test_verify_rejects():
    rep = t.verify("x^2 + x + 1", 2)
    assert not rep["certified_minimal"]
    assert not rep["profile"]["splits"]


def test_construct_phi_tower():
    res = t.construct("phi-tower", 2, 2)
    assert res["poly"] == "x^4 + (T+1)*x^2 + T*x + T^3"
    assert res["height"] == "3/4"
    assert res["all_verified"]


def test_exhaustive_gonality_one():
    rep = t.search_exhaustive(2, 1)
    assert rep["tested"] == 2
    assert rep["hits"] == [
        "T*x^3 + (T+1)*x^2 + x + T",
        "T*x^3 + x^2 + (T+1)*x + T",
    ]


def test_space_dimensions():
    assert t.space_dimension(2, 2) == (14, 3, True)
    assert t.space_dimension(2, 3)[1] == 12


def test_genus_bounds():
    assert t.genus_bounds(3, 3) == (3, 10)


def test_canonical_round_trip():
    s = "T^2*x^6 + T^2*x^5 + (T^2+T+1)*x^4 + T^2*x^3 + (T^2+T+1)*x^2 + T^2*x + T^2"
    assert t.canonical(s, 2) == s


def test_errors_are_python_exceptions():
    import pytest

    with pytest.raises(t.TadicError):
        t.construct("char2", 2, 0)
