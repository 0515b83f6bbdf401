import pytest

from lehmerbeck.kernel import naive_profile, part_profile
from lehmerbeck.partitions import ConstraintSpec

FAMILIES = [
    ConstraintSpec.all(),
    ConstraintSpec.odd_parts(),
    ConstraintSpec.distinct_parts(),
    ConstraintSpec.distinct_odd(),
    ConstraintSpec.distinct_odd_multiples_of_r(2),
    ConstraintSpec.distinct_odd_multiples_of_r(3),
    ConstraintSpec.q_L(2, {2}),
    ConstraintSpec.q_L(3, {4, 6}),
    ConstraintSpec.p_L(2, {4}),
    ConstraintSpec.even_count_parity(1),
    ConstraintSpec.div2r_count_parity(2, 0),
    ConstraintSpec.even_count_parity_L(3, {2}, 1),
]


@pytest.mark.parametrize("family", FAMILIES, ids=lambda f: f"{f.tag}-r{f.r}")
@pytest.mark.parametrize("mark", [None, 1, 2, 4])
def test_compiled_matches_generator(family, mark):
    for n in range(0, 23):
        if family.mark_modulus is not None and mark is not None:
            continue
        assert part_profile(n, family, mark) == naive_profile(n, family, mark)


def test_profile_statistics():
    prof = part_profile(4, ConstraintSpec.all(), 2)
    # partitions of 4: (4),(3,1),(2,2),(2,1,1),(1,1,1,1); even-part counts 1,0,2,1,0
    assert prof.counts == (3, 2)
    assert prof.count() == 5
    assert prof.parts(0) == 2 + 2 + 4
    assert prof.parts(1, where=lambda p: p % 2 == 0) == 2


def test_distinct_odd_profile():
    prof = part_profile(4, ConstraintSpec.distinct_odd())
    assert prof.count() == 1 and prof.parts() == 2


def test_parity_marking_by_one_counts_parts():
    prof = part_profile(5, ConstraintSpec.all(), 1)
    # parity of the number of parts
    assert prof.counts == (3, 4)


def test_rejects_negative_and_hooks():
    with pytest.raises(ValueError):
        part_profile(-1, ConstraintSpec.all())
    with pytest.raises(ValueError):
        part_profile(3, ConstraintSpec.all().with_extra(lambda lam: True))
