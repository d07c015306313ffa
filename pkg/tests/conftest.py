import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from hypothesis import strategies as st

from qsym import LaurentPoly


def poly_strategy(n: int, max_terms: int = 4):
    exps = st.tuples(*([st.integers(-3, 3)] * n))
    term = st.tuples(exps, st.integers(-9, 9))
    return st.lists(term, max_size=max_terms).map(
        lambda items: LaurentPoly(n, {e: c for e, c in items})
    )
