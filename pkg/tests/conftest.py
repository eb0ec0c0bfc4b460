import os
import sys

from hypothesis import HealthCheck, settings, strategies as st

from bidouble import corpus
from bidouble.exactlin import Tensor

sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


def corpus_algebras(kind, max_dim=3):
    items = sorted((n, a) for n, a in corpus.algebras(kind).items() if a.dim <= max_dim)
    return st.sampled_from(items)


@st.composite
def square(draw, n, symmetry="any", lo=-2, hi=2):
    rows = [[draw(st.integers(lo, hi)) for _ in range(n)] for _ in range(n)]
    t = Tensor.of(rows)
    if symmetry == "symmetric":
        return t + t.T
    if symmetry == "antisymmetric":
        return t - t.T
    return t
