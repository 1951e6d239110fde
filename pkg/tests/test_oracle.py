import pytest

from coverkit import (
    CffSpec,
    SearchBudget,
    UniversalSpec,
    construct_cff_derandomized,
    construct_universal_greedy,
    derandomized_size_bound,
    minimal_cff_size,
    minimal_universal_size,
    sperner_row_count,
    universal_greedy_size_bound,
    verify_cff,
    verify_universal,
)


class TestMinimalUniversal:
    @pytest.mark.parametrize("n,d,q,expected", [(2, 2, 2, 4), (3, 2, 2, 4), (4, 2, 2, 5)])
    def test_ground_truth(self, n, d, q, expected):
        outcome = minimal_universal_size(UniversalSpec(n, d, q))
        assert outcome.found
        assert outcome.size == expected
        assert outcome.certificate.num_rows == expected
        assert verify_universal(outcome.certificate, d).valid

    def test_kleitman_direction(self):
        for n, d in ((2, 2), (3, 2), (4, 2), (3, 3)):
            outcome = minimal_universal_size(UniversalSpec(n, d, 2))
            assert outcome.found and outcome.size >= 2**d

    def test_ternary_instance(self):
        outcome = minimal_universal_size(UniversalSpec(2, 1, 3))
        assert outcome.found and outcome.size == 3

    def test_infeasible_below_minimum(self):
        outcome = minimal_universal_size(UniversalSpec(4, 2, 2), SearchBudget(max_rows=4))
        assert outcome.status == "infeasible"
        assert outcome.size is None and outcome.certificate is None

    def test_node_budget_aborts_cleanly(self):
        outcome = minimal_universal_size(
            UniversalSpec(4, 2, 2), SearchBudget(max_rows=8, node_limit=3)
        )
        assert outcome.status == "budget_exceeded"

    def test_row_space_cap(self):
        outcome = minimal_universal_size(UniversalSpec(21, 2, 2))
        assert outcome.status == "budget_exceeded"


class TestMinimalCff:
    @pytest.mark.parametrize("n,r,s,expected", [(2, 1, 1, 2), (4, 1, 1, 4), (6, 1, 1, 4), (7, 1, 1, 5)])
    def test_ground_truth(self, n, r, s, expected):
        outcome = minimal_cff_size(CffSpec(n, r, s))
        assert outcome.found
        assert outcome.size == expected
        assert verify_cff(outcome.certificate, r, s).valid

    def test_matches_sperner_rule(self):
        for n in (2, 3, 4, 5, 6):
            outcome = minimal_cff_size(CffSpec(n, 1, 1))
            assert outcome.found and outcome.size == sperner_row_count(n)

    def test_asymmetric_instance(self):
        # (3, (1, 2)): only the three unit rows work, so the minimum is 3
        outcome = minimal_cff_size(CffSpec(3, 1, 2))
        assert outcome.found and outcome.size == 3

    def test_degenerate_edges_need_one_row(self):
        assert minimal_cff_size(CffSpec(4, 0, 2)).size == 1
        assert minimal_cff_size(CffSpec(4, 2, 0)).size == 1

    def test_infeasible_below_minimum(self):
        outcome = minimal_cff_size(CffSpec(7, 1, 1), SearchBudget(max_rows=4))
        assert outcome.status == "infeasible"

    def test_row_space_cap(self):
        outcome = minimal_cff_size(CffSpec(21, 1, 1))
        assert outcome.status == "budget_exceeded"


class TestSandwich:
    """Oracle minimum <= constructor output <= constructor bound."""

    @pytest.mark.parametrize("n,r,s", [(4, 1, 1), (5, 1, 2), (6, 2, 1), (4, 2, 2)])
    def test_cff(self, n, r, s):
        spec = CffSpec(n, r, s)
        outcome = minimal_cff_size(spec)
        assert outcome.found
        built, trace = construct_cff_derandomized(spec)
        assert outcome.size <= built.num_rows <= derandomized_size_bound(spec)

    @pytest.mark.parametrize("n,d,q", [(3, 2, 2), (4, 2, 2), (2, 2, 2), (3, 1, 3)])
    def test_universal(self, n, d, q):
        spec = UniversalSpec(n, d, q)
        outcome = minimal_universal_size(spec)
        assert outcome.found
        built, _ = construct_universal_greedy(spec)
        assert outcome.size <= built.num_rows <= universal_greedy_size_bound(spec)
