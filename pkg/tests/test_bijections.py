import pytest

from lehmerbeck.bijections import (
    MAP_IDS,
    DomainError,
    map_L_ex1,
    map_L_lr,
    map_L_sec2,
    map_L_thm62,
    map_L_thm63,
    map_T_ex1,
    map_T_lr,
    map_T_sec2,
    map_T_thm62,
    map_T_thm63,
    thm62_domain,
    thm63_domain,
    verify_map,
)
from lehmerbeck.partitions import ResidueSpec, enumerate_pairs, make_pair

P = make_pair


class TestSec2:
    @pytest.mark.parametrize(
        "src,dst",
        [
            (P([5], 2, 2), P([5, 3], 1, 1)),
            (P([5, 3], 2, 2), P([11], 1, 1)),
            (P([3], 2, 2), P([3, 1], 3, 1)),
        ],
    )
    def test_examples(self, src, dst):
        assert map_T_sec2(src) == dst
        assert map_L_sec2(dst) == src

    def test_domain_is_checked(self):
        with pytest.raises(DomainError):
            map_T_sec2(P([5], 3, 1))
        with pytest.raises(DomainError):
            map_L_sec2(P([5], 2, 1))

    @pytest.mark.parametrize("n", range(0, 31))
    def test_verify(self, n):
        rep = verify_map("sec2", n)
        assert rep.ok, rep.problems
        assert len(rep.complement) == rep.excess
        # the relaxed gap condition describes the complement exactly
        assert verify_map("sec2", n, amended=True).complement_char_ok

    def test_literal_gap_condition_misses_a_complement_element(self):
        rep = verify_map("sec2", 10)
        assert rep.complement_char_ok is False
        assert any("[9] x (1^1)" in msg for msg in rep.problems)


class TestResidueMap:
    def test_odd_residue_example(self):
        assert map_T_lr(P([3], 1, 2), 1, 1) == P([3, 1], 1, 1)
        assert map_L_lr(P([3, 1], 1, 1), 1, 1) == P([3], 1, 2)

    def test_even_residue_example(self):
        assert map_T_lr(P([5, 3], 2, 2), 1, 2) == P([7, 3], 2, 1)
        assert map_L_lr(P([7, 3], 2, 1), 1, 2) == P([5, 3], 2, 2)

    def test_all_twos_rectangle(self):
        assert map_T_lr(P([], 2, 12), 1, 2, 24) == P([9, 7, 5, 1], 2, 1)
        assert map_T_lr(P([], 2, 2), 3, 2, 4) is None
        assert map_T_lr(P([], 2, 14), 1, 2, 28) == P([9, 7, 5, 1], 2, 3)

    def test_small_exception_report(self):
        rep = verify_map("lr", 4, ResidueSpec(3), ell=2)
        assert rep.unmapped == [P([], 2, 2)]
        assert len(rep.complement) - len(rep.unmapped) == -1
        assert rep.ok and rep.complement_char_ok

    def test_ex1_variant(self):
        assert map_T_ex1(P([], 2, 4)) == P([], 8, 1)
        assert map_L_ex1(P([], 8, 1)) == P([], 2, 4)

    @pytest.mark.parametrize("r", [1, 2, 3, 4])
    def test_verify_all_residues(self, r):
        for ell in range(1, 2 * r + 1):
            for n in range(0, 37):
                rep = verify_map("lr", n, ResidueSpec(r), ell=ell)
                assert rep.ok and rep.complement_char_ok, (ell, n, rep.problems)
        for n in range(0, 37):
            rep = verify_map("lr_ex1", n, ResidueSpec(r))
            assert rep.ok and rep.complement_char_ok and not rep.unmapped, (n, rep.problems)

    def test_bad_residue(self):
        with pytest.raises(ValueError):
            map_T_lr(P([1], 2, 2), 1, 3)


class TestThm62Map:
    def test_examples(self):
        assert map_T_thm62(P([5], 4, 3), 2) == P([15], 1, 2)
        assert map_L_thm62(P([15], 1, 2), 2) == P([5], 4, 3)
        assert map_T_thm62(P([], 4, 1), 2) == P([], 1, 4)

    @pytest.mark.parametrize("n", range(1, 25))
    def test_r1_is_conjugation(self, n):
        for p in enumerate_pairs(n, thm62_domain(1)):
            assert map_T_thm62(p, 1) == P(p.lam, p.b, p.a)

    @pytest.mark.parametrize("r", [1, 2, 3, 4])
    def test_verify(self, r):
        for n in range(0, 37):
            rep = verify_map("thm62", n, ResidueSpec(r))
            assert rep.ok, (n, rep.problems)
            assert len(rep.complement) == rep.excess >= 0

    def test_spec_point(self):
        assert verify_map("thm62", 17, ResidueSpec(2)).image_char_ok


class TestThm63Map:
    def test_examples(self):
        assert map_T_thm63(P([], 4, 2), 2) == P([7], 1, 1)
        assert map_L_thm63(P([7], 1, 1), 2) == P([], 4, 2)
        # the third case as stated repeats a part, leaving the codomain
        assert map_T_thm63(P([7], 4, 2), 2) == P([5, 5], 5, 1)

    @pytest.mark.parametrize("n", range(1, 25))
    def test_r1_agrees_with_sec2(self, n):
        for p in enumerate_pairs(n, thm63_domain(1)):
            assert map_T_thm63(p, 1) == map_T_sec2(p)

    @pytest.mark.parametrize("r", [1, 3, 4])
    def test_verify_with_corrected_image_sets(self, r):
        for n in range(0, 37):
            rep = verify_map("thm63", n, ResidueSpec(r), amended=True)
            assert rep.ok, (n, rep.problems)

    def test_known_defects(self):
        # stated image sets miss boundary elements
        assert not verify_map("thm63", 10, ResidueSpec(1)).image_char_ok
        assert not verify_map("thm63", 5, ResidueSpec(3)).image_char_ok
        # stated third case leaves the codomain for r = 2
        rep = verify_map("thm63", 15, ResidueSpec(2), amended=True)
        assert not rep.codomain_ok


def test_unknown_map():
    with pytest.raises(ValueError):
        verify_map("nope", 3)
    assert set(MAP_IDS) == {"sec2", "lr", "lr_ex1", "thm62", "thm63"}
