"""Regular subalgebras, restriction, string peeling, even witnesses."""

from collections import Counter

import pytest

from tightmaps.branching import (
    SL2,
    SL2_X_SL2,
    SubalgebraError,
    evaluation_multiset,
    even_witness,
    make_subalgebra,
    parse_subalgebra_selector,
    restrict_rep,
    selector_of,
)
from tightmaps.rootsys import (
    build_root_system,
    dimension,
    eval_on_coroot,
    weight,
)

A2 = build_root_system("A2")
C2 = build_root_system("C2")


def vsum(*vecs):
    return tuple(sum(parts) for parts in zip(*vecs))


def sub_c2_short():
    a1, a2 = C2.simple_roots
    return make_subalgebra(C2, [vsum(a1, a2)])


def sub_c2_pair():
    a1, a2 = C2.simple_roots
    return make_subalgebra(C2, [a2, vsum(a1, a1, a2)])


def sub_a2():
    return make_subalgebra(A2, [A2.simple_roots[0]])


def test_make_subalgebra_examples():
    assert sub_c2_short().target_kind == SL2
    pair = sub_c2_pair()
    assert pair.target_kind == SL2_X_SL2
    assert len(pair.generated_roots_c) == 4
    assert sub_a2().target_kind == SL2


def test_condition_one_rejected():
    a1, a2 = A2.simple_roots
    with pytest.raises(SubalgebraError, match="condition 1"):
        make_subalgebra(A2, [a1, vsum(a1, a2)])


def test_condition_two_rejected():
    a1, a2 = C2.simple_roots
    # a root and its negative are dependent; condition 1 happens to pass
    # for the pair {a1+a2, -(a1+a2)} only after condition 2 fires
    v = vsum(a1, a2)
    with pytest.raises(SubalgebraError):
        make_subalgebra(C2, [v, tuple(-x for x in v)])


def test_condition_three_rejected():
    with pytest.raises(SubalgebraError, match="condition 3"):
        make_subalgebra(C2, [C2.simple_roots[0]])  # compact short root
    with pytest.raises(SubalgebraError, match="condition 3"):
        make_subalgebra(A2, [A2.simple_roots[1]])  # compact root of A2


def test_non_roots_and_products_rejected():
    with pytest.raises(SubalgebraError):
        make_subalgebra(C2, [(3, 0)])
    prod = build_root_system("C2+A1")
    with pytest.raises(SubalgebraError):
        make_subalgebra(prod, [prod.positive_roots[0]])


def test_rank_two_needs_orthogonal_split():
    a1, a2 = C2.simple_roots
    # a2 and a1+a2 are non-orthogonal long/short roots
    with pytest.raises(SubalgebraError):
        make_subalgebra(C2, [a2, vsum(a1, a2)])


def test_selector_grammar():
    sel = parse_subalgebra_selector(C2, "a2,2a1+a2")
    a1, a2 = C2.simple_roots
    assert sel == (a2, vsum(a1, a1, a2))
    assert selector_of(C2, sel) == "a2,2a1+a2"
    assert parse_subalgebra_selector(A2, "a1") == (A2.simple_roots[0],)
    with pytest.raises(SubalgebraError):
        parse_subalgebra_selector(C2, "a3")
    with pytest.raises(SubalgebraError):
        parse_subalgebra_selector(C2, "b1+a2")


def test_restrict_examples():
    assert restrict_rep(weight(C2, (0, 1)), sub_c2_short()).factors == (2, 0, 0)
    assert restrict_rep(weight(C2, (1, 0)), sub_c2_pair()).factors == ((1, 0), (0, 1))
    assert restrict_rep(weight(A2, (1, 0)), sub_a2()).factors == (1, 0)


def test_restrict_signatures():
    result = restrict_rep(weight(C2, (0, 1)), sub_c2_short())
    assert [(s.p, s.q) for s in result.signatures] == [(2, 1), (1, 0), (1, 0)]
    result = restrict_rep(weight(C2, (1, 0)), sub_c2_pair())
    assert [(s.p, s.q) for s in result.signatures] == [(1, 1), (1, 1)]


def test_dimension_conservation_sweep():
    for k in range(11):
        for l in range(11 - k):
            w = weight(C2, (k, l))
            for sub in (sub_c2_short(), sub_c2_pair()):
                result = restrict_rep(w, sub)
                assert result.factor_dimension == dimension(w)
            w = weight(A2, (k, l))
            result = restrict_rep(w, sub_a2())
            assert result.factor_dimension == dimension(w)


def test_peeling_is_involution_consistent():
    for coords in ((2, 1), (0, 3), (3, 2)):
        w = weight(C2, coords)
        for sub in (sub_c2_short(), sub_c2_pair()):
            original = evaluation_multiset(w, sub)
            rebuilt = Counter()
            result = restrict_rep(w, sub)
            for factor in result.factors:
                if sub.target_kind == SL2:
                    for v in range(factor, -factor - 1, -2):
                        rebuilt[(v,)] += 1
                else:
                    m, n = factor
                    for v in range(m, -m - 1, -2):
                        for u in range(n, -n - 1, -2):
                            rebuilt[(v, u)] += 1
            assert rebuilt == original


def test_even_witness_examples():
    w = even_witness(weight(A2, (0, 2)), sub_a2())
    assert tuple(int(c) for c in w.coords) == (-2, 0)
    assert eval_on_coroot(w, A2.simple_roots[0]) == -2

    for l in (1, 2, 3):
        w = even_witness(weight(C2, (0, l)), sub_c2_short())
        assert tuple(int(c) for c in w.coords) == (0, l)

    assert even_witness(weight(A2, (1, 0)), sub_a2()) is None
    assert even_witness(weight(A2, (0, 1)), sub_a2()) is None
    assert even_witness(weight(C2, (1, 0)), sub_c2_pair()) is None


def test_even_witness_exists_for_all_nontight_c2_weights():
    # outside (0,0) and (1,0) one of the two tight subalgebras always
    # produces an even nonzero evaluation
    for k in range(11):
        for l in range(11 - k):
            if (k, l) in ((0, 0), (1, 0)):
                continue
            found = any(
                even_witness(weight(C2, (k, l)), sub) is not None
                for sub in (sub_c2_short(), sub_c2_pair())
            )
            assert found, (k, l)


def test_even_witness_exists_for_all_large_a2_weights():
    for k in range(11):
        for l in range(11 - k):
            if k + l < 2:
                continue
            assert even_witness(weight(A2, (k, l)), sub_a2()) is not None, (k, l)
