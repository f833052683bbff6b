import os

import pytest
from hypothesis import HealthCheck, settings

from multirees.network import parse_network
from multirees.poly_core import VariableContext, parse_polynomial

settings.register_profile("default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("ci", max_examples=200, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

EDELSTEIN = "A <-> 2A\nA + B <-> C\nC <-> B\n"
TRIANGLE = "2A <-> A+B\nA+B <-> 2B\n2B <-> 2A\n"


@pytest.fixture
def edelstein():
    return parse_network(EDELSTEIN)


@pytest.fixture
def triangle():
    return parse_network(TRIANGLE)


def polys(ctx: VariableContext, *texts):
    return [parse_polynomial(t, ctx) for t in texts]
