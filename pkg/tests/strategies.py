"""Hypothesis strategies shared across the suite."""

from fractions import Fraction

from hypothesis import strategies as st

from freecoherent.coherent import GammaParams, IndexSequence
from freecoherent.fock import FockVector

words = st.text(alphabet="01", max_size=10)
rationals = st.fractions(min_value=-100, max_value=100, max_denominator=50)
fock_vectors = st.dictionaries(words, rationals, max_size=16).map(FockVector)
letters = st.sampled_from([0, 1])
gammas = st.fractions(min_value=Fraction(1, 100), max_value=Fraction(99, 100), max_denominator=100)
gamma_params = st.builds(GammaParams, gammas, gammas)
sequences = st.builds(
    IndexSequence,
    st.text(alphabet="01", max_size=6),
    st.text(alphabet="01", min_size=1, max_size=4),
)

