import json

import pytest

from aytwist.checks import DEFAULT_CHECKS, REGISTRY, companion_matrix, run_check
from aytwist.exactnum import IntPolynomial, char_poly


@pytest.mark.parametrize("name", list(REGISTRY))
def test_check_passes_g3(name):
    res = run_check(name, 3)
    assert res.passed, res.data
    doc = res.to_json()
    json.dumps(doc)  # payloads are plain JSON
    for key in res.decimals:
        assert key.split(".")[0] in res.data  # decimals come with their exact datum


def test_default_set_skips_slow_induction():
    assert "induction" not in DEFAULT_CHECKS
    assert set(DEFAULT_CHECKS) | {"induction"} == set(REGISTRY)


@pytest.mark.parametrize("g", [3, 6, 9])
def test_companion_matrix_char_poly(g):
    p = IntPolynomial.ay_polynomial(g)
    assert char_poly(companion_matrix(p)) == p
