from hypothesis import settings, strategies as st

from qtail.qlaurent import QPoly

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def qpolys(min_exp=-40, max_exp=40, max_terms=8, coeff=10 ** 6):
    """QPoly with quarter-unit exponents in [min_exp, max_exp]."""
    return st.dictionaries(st.integers(min_exp, max_exp), st.integers(-coeff, coeff),
                           max_size=max_terms).map(QPoly)


def nonzero_qpolys(**kw):
    return qpolys(**kw).filter(bool)


def braid_words(strands=st.integers(2, 4), max_len=6):
    """(strands, word) pairs with every letter in range."""
    def words(n):
        letters = st.integers(1, n - 1).flatmap(lambda g: st.sampled_from((g, -g)))
        return st.tuples(st.just(n), st.lists(letters, max_size=max_len).map(tuple))
    return strands.flatmap(words)
