"""JSON schemas, 17-digit emission, digests, and literals."""

import numpy as np
import pytest

from hyplab import BCMatrix, Bicomplex, DPlus, InvalidInput
from hyplab.jsonio import (
    digest,
    dumps,
    format_float,
    load_json,
    matrix_to_json,
    parse_hyp_literal,
    parse_matrix,
    parse_scalar,
    parse_series,
    parse_vector,
    scalar_to_json,
    vector_to_json,
)
from support import random_mat, random_vec


# ------------------------------------------------------------------ scalars


def test_scalar_three_forms_agree():
    # k in all three encodings
    idem = parse_scalar({"e1": [1, 0], "e2": [-1, 0]})
    cart = parse_scalar({"w": [0, 0, 0, 1]})
    hyp = parse_scalar({"h": [0, 1]})
    for z in (cart, hyp):
        assert z.z1 == idem.z1 and z.z2 == idem.z2


def test_scalar_cartesian_general():
    z = parse_scalar({"w": [1.0, 2.0, 3.0, 4.0]})
    w1, w2 = z.to_cartesian()
    assert w1 == complex(1, 2) and w2 == complex(3, 4)


def test_scalar_emission_idempotent_default():
    z = Bicomplex(complex(1, 2), complex(3, -4))
    d = scalar_to_json(z)
    assert d == {"e1": [1.0, 2.0], "e2": [3.0, -4.0]}
    back = parse_scalar(d)
    assert back.z1 == z.z1 and back.z2 == z.z2


def test_scalar_emission_cartesian():
    z = Bicomplex(2.0, 3.0)
    d = scalar_to_json(z, "cartesian")
    assert d["w"][0] == 2.5  # b1 = (a1+a2)/2
    back = parse_scalar(d)
    assert abs(back.z1 - 2.0) < 1e-15 and abs(back.z2 - 3.0) < 1e-15


def test_scalar_hyperbolic_value_emitted_as_scalar():
    d = scalar_to_json(DPlus(2.0, 3.0))
    assert d == {"e1": [2.0, 0.0], "e2": [3.0, 0.0]}


def test_scalar_bad_forms():
    with pytest.raises(InvalidInput):
        parse_scalar({"e1": [1, 0]})
    with pytest.raises(InvalidInput):
        parse_scalar({"w": [1, 2, 3]})
    with pytest.raises(InvalidInput):
        parse_scalar([1, 2])
    with pytest.raises(InvalidInput):
        parse_scalar({"h": [1, True]})


# ---------------------------------------------------------- vectors/matrices


def test_vector_round_trip():
    rng = np.random.default_rng(1)
    v = random_vec(rng, 5)
    d = vector_to_json(v)
    assert d["dim"] == 5
    back = parse_vector(d)
    assert np.array_equal(back.v1, v.v1) and np.array_equal(back.v2, v.v2)


def test_vector_dim_declared_mismatch():
    with pytest.raises(InvalidInput):
        parse_vector({"dim": 3, "e1": [[1, 0]], "e2": [[1, 0]]})


def test_matrix_round_trip():
    rng = np.random.default_rng(2)
    T = random_mat(rng, 3, 4)
    back = parse_matrix(matrix_to_json(T))
    assert np.array_equal(back.m1, T.m1) and np.array_equal(back.m2, T.m2)


def test_matrix_cartesian_form():
    # single entry k: w = [0,0,0,1] -> components (1, -1)
    T = parse_matrix({"w": [[[0, 0, 0, 1]]]})
    assert T.m1[0, 0] == 1.0 and T.m2[0, 0] == -1.0
    # identity in cartesian form
    T2 = parse_matrix({"w": [[[1, 0, 0, 0], [0, 0, 0, 0]], [[0, 0, 0, 0], [1, 0, 0, 0]]]})
    assert np.array_equal(T2.m1, np.eye(2)) and np.array_equal(T2.m2, np.eye(2))


def test_matrix_shape_declared_mismatch():
    good = matrix_to_json(BCMatrix.identity(2))
    bad = dict(good)
    bad["rows"] = 3
    with pytest.raises(InvalidInput):
        parse_matrix(bad)


# ------------------------------------------------------------------- series


def test_series_array():
    rng = np.random.default_rng(3)
    terms = [vector_to_json(random_vec(rng, 2)) for _ in range(4)]
    parsed = parse_series(terms)
    assert isinstance(parsed, list) and len(parsed) == 4


def test_series_geometric_spec():
    spec = {
        "kind": "geometric",
        "ratio": {"e1": [0.5, 0], "e2": [0.25, 0]},
        "seed_vector": {"dim": 1, "e1": [[1, 0]], "e2": [[1, 0]]},
    }
    gen = parse_series(spec)
    t0 = next(gen)
    t1 = next(gen)
    assert t0.v1[0] == 1.0 and t1.v1[0] == 0.5 and t1.v2[0] == 0.25


def test_series_bad_spec():
    with pytest.raises(InvalidInput):
        parse_series({"kind": "geometric"})
    with pytest.raises(InvalidInput):
        parse_series([])
    with pytest.raises(InvalidInput):
        parse_series("nope")


# ------------------------------------------------------- emission and digest


def test_format_float_17_digits():
    assert format_float(0.1) == "0.10000000000000001"
    assert format_float(2.0) == "2"
    assert format_float(1e-300) == "1e-300"
    assert format_float(1 / 3) == "0.33333333333333331"


def test_dumps_shapes():
    doc = {"a": 1, "b": [0.5, True, None, "s"], "c": {"k": 2.0}}
    assert dumps(doc) == '{"a":1,"b":[0.5,true,null,"s"],"c":{"k":2}}'


def test_dumps_preserves_insertion_order():
    assert dumps({"b": 1, "a": 2}) == '{"b":1,"a":2}'


def test_float_round_trip_through_dumps():
    import json

    rng = np.random.default_rng(4)
    vals = list(rng.standard_normal(200)) + [1e-308, 1e300, -0.0]
    text = dumps(vals)
    back = json.loads(text)
    for x, y in zip(vals, back):
        assert float(x) == float(y)


def test_digest_stability_and_sensitivity():
    a = {"x": [1.0, 2.0], "y": "s"}
    assert digest(a) == digest({"x": [1.0, 2.0], "y": "s"})
    assert digest(a) != digest({"x": [1.0, 2.000001], "y": "s"})


# ----------------------------------------------------------------- literals


def test_hyp_literal_pair():
    assert parse_hyp_literal("2,3") == DPlus(2.0, 3.0)
    assert parse_hyp_literal("1e-9, 2e-9") == DPlus(1e-9, 2e-9)


def test_hyp_literal_single():
    assert parse_hyp_literal("0.5") == DPlus(0.5, 0.5)


def test_hyp_literal_bad():
    with pytest.raises(InvalidInput):
        parse_hyp_literal("a,b")
    with pytest.raises(InvalidInput):
        parse_hyp_literal("1,2,3")
    with pytest.raises(InvalidInput):
        parse_hyp_literal("-1,2")  # cone violation


def test_load_json_missing_file(tmp_path):
    with pytest.raises(InvalidInput):
        load_json(str(tmp_path / "nope.json"))


def test_load_json_bad_content(tmp_path):
    f = tmp_path / "bad.json"
    f.write_text("{not json")
    with pytest.raises(InvalidInput):
        load_json(str(f))
