import random
from fractions import Fraction as F

import pytest

from hedgehog.errors import (
    EmptyA,
    LengthMismatch,
    NotDisjoint,
    PremiseViolated,
    SpineOutOfUniverse,
)
from hedgehog.extension import (
    combine_pairwise,
    hedgehog_extend,
    is_discrete_family,
    metric_separate,
    separation_gap,
    verify_extension,
)
from hedgehog.metricspace import FiniteMetricSpace
from hedgehog.points import APEX, Point, SpineUniverse
from hedgehog.sampling import random_metric_space

UNIFORM3 = FiniteMetricSpace.from_table(
    ["a", "b", "c"], [[0, 1, 1], [1, 0, 1], [1, 1, 0]]
)
PATH3 = FiniteMetricSpace.from_table(
    ["a", "b", "c"], [[0, 1, 2], [1, 0, 1], [2, 1, 0]]
)


# -- combine_pairwise --------------------------------------------------------


def test_combine_single():
    assert combine_pairwise([{"a", "b"}], [{"c"}]) == [frozenset({"a", "b"})]


def test_combine_worked_example():
    got = combine_pairwise(
        [{"a", "b"}, {"b", "c"}],
        [{"c", "d"}, {"a", "d"}],
    )
    assert got == [frozenset({"a", "b"}), frozenset({"c"})]


def test_combine_errors():
    with pytest.raises(LengthMismatch):
        combine_pairwise([{"a"}], [])
    with pytest.raises(PremiseViolated):
        combine_pairwise([{"a"}], [{"a"}])


@pytest.mark.parametrize("seed", range(10))
def test_combine_outputs_disjoint_and_preserving(seed):
    rng = random.Random(seed)
    labels = [f"x{i}" for i in range(10)]
    k = rng.randint(1, 5)
    # build F_n disjoint, then U_n >= F_n and V_n >= everything else, disjoint from U_n
    pool = labels[:]
    rng.shuffle(pool)
    fibers = [set() for _ in range(k)]
    for i, label in enumerate(pool[: rng.randint(k, 10)]):
        fibers[i % k].add(label)
    us, vs = [], []
    for n in range(k):
        rest = set().union(*(fibers[m] for m in range(k) if m != n))
        spare = [l for l in labels if l not in rest and l not in fibers[n]]
        u = fibers[n] | set(rng.sample(spare, rng.randint(0, len(spare))))
        v = rest | {l for l in labels if l not in u and rng.random() < 0.3}
        v -= u
        us.append(u)
        vs.append(v)
    ws = combine_pairwise(us, vs)
    for i in range(k):
        for j in range(i + 1, k):
            assert not ws[i] & ws[j]
        assert fibers[i] <= ws[i]


# -- metric_separate ----------------------------------------------------------


def test_separate_path_example():
    got = metric_separate(PATH3, [{"a"}, {"c"}])
    assert got == [frozenset({"a"}), frozenset({"c"})]


def test_separate_single_member():
    got = metric_separate(UNIFORM3, [{"a"}])
    assert frozenset({"a"}) <= got[0]


def test_separate_rejects_overlap():
    with pytest.raises(NotDisjoint):
        metric_separate(UNIFORM3, [{"a", "b"}, {"b"}])


@pytest.mark.parametrize("seed", range(10))
def test_separate_disjoint_and_containing(seed):
    rng = random.Random(seed)
    space = random_metric_space(rng, max_size=9)
    labels = list(space.labels)
    rng.shuffle(labels)
    k = rng.randint(1, min(4, len(labels)))
    family = [set() for _ in range(k)]
    for i, label in enumerate(labels[: rng.randint(k, len(labels))]):
        family[i % k].add(label)
    got = metric_separate(space, family)
    for i in range(k):
        assert family[i] <= got[i]
        for j in range(i + 1, k):
            assert not got[i] & got[j]
    # positive cross separation between the shrunk separators
    for i in range(k):
        for j in range(i + 1, k):
            if got[i] and got[j]:
                assert min(space.d(x, y) for x in got[i] for y in got[j]) > 0


def test_discreteness_predicate():
    assert is_discrete_family(PATH3, [{"a"}, {"c"}])
    assert not is_discrete_family(PATH3, [{"a", "b"}, {"b"}])
    assert is_discrete_family(PATH3, [{"a", "b", "c"}])  # a single member
    assert separation_gap(PATH3, [{"a"}, {"c"}]) == 2
    assert separation_gap(PATH3, [{"a"}, {"b"}, {"c"}]) == 1
    assert separation_gap(PATH3, [{"a"}]) is None


def test_metric_separate_outputs_stay_discrete():
    rng = random.Random(11)
    for _ in range(15):
        space = random_metric_space(rng, max_size=8)
        labels = list(space.labels)
        rng.shuffle(labels)
        k = rng.randint(1, min(3, len(labels)))
        family = [set() for _ in range(k)]
        for i, label in enumerate(labels[: rng.randint(k, len(labels))]):
            family[i % k].add(label)
        separated = metric_separate(space, family)
        assert is_discrete_family(space, separated)


# -- hedgehog_extend -----------------------------------------------------------


def test_extend_worked_example():
    f = {"a": Point(F(1), 1), "b": Point(F(1), 2)}
    result = hedgehog_extend(UNIFORM3, ["a", "b"], f, SpineUniverse.finite(2))
    assert result.F.as_dict() == {
        "a": Point(F(1), 1),
        "b": Point(F(1), 2),
        "c": APEX,
    }
    assert result.separator(1) == frozenset({"a"})
    assert result.separator(2) == frozenset({"b"})
    assert result.G.as_dict() == {k: F(1) for k in "abc"}
    assert result.H.get("c") == 0


def test_extend_constant_apex():
    f = {"a": APEX, "b": APEX}
    result = hedgehog_extend(UNIFORM3, ["a", "b"], f, SpineUniverse.finite(2))
    assert all(p == APEX for p in result.F.as_dict().values())
    assert result.U == ()


def test_extend_total_domain_is_identity():
    f = {"a": Point(F(1, 2), 1), "b": Point(F(3, 4), 2), "c": APEX}
    result = hedgehog_extend(UNIFORM3, ["a", "b", "c"], f, SpineUniverse.finite(3))
    assert result.F.as_dict() == f


def test_extend_errors():
    with pytest.raises(EmptyA):
        hedgehog_extend(UNIFORM3, [], {}, SpineUniverse.finite(2))
    f = {"a": Point(F(1), 5)}
    with pytest.raises(SpineOutOfUniverse):
        hedgehog_extend(UNIFORM3, ["a"], f, SpineUniverse.finite(2))


def test_verify_detects_tampering():
    f = {"a": Point(F(1), 1), "b": Point(F(1), 2)}
    result = hedgehog_extend(UNIFORM3, ["a", "b"], f, SpineUniverse.finite(2))
    verification = verify_extension(UNIFORM3, result, ["a", "b"], f)
    assert verification.all_passed

    from dataclasses import replace

    tampered_map = dict(result.F.as_dict())
    tampered_map["c"] = Point(F(1, 2), 1)
    tampered = replace(
        result, F=type(result.F).of(UNIFORM3, tampered_map)
    )
    broken = verify_extension(UNIFORM3, tampered, ["a", "b"], f)
    assert not broken.all_passed
    names = {c.name for c in broken.checks if not c.passed}
    assert "spine projection equals chi_U wedge H" in names


def random_instance(rng, max_size=9, max_kappa=6):
    space = random_metric_space(rng, max_size=max_size)
    labels = list(space.labels)
    kappa = rng.randint(1, max_kappa)
    domain = rng.sample(labels, rng.randint(1, len(labels)))
    f = {}
    for x in domain:
        if rng.random() < 0.25:
            f[x] = APEX
        else:
            f[x] = Point(F(rng.randint(1, 8), 8), rng.randint(1, kappa))
    return space, domain, f, SpineUniverse.finite(kappa)


@pytest.mark.parametrize("seed", range(12))
def test_extend_identities_on_random_instances(seed):
    rng = random.Random(seed)
    space, domain, f, universe = random_instance(rng)
    result = hedgehog_extend(space, domain, f, universe)
    verification = verify_extension(space, result, domain, f)
    assert verification.all_passed, [c for c in verification.checks if not c.passed]

    # the two projection identities, re-stated directly
    for x in space.labels:
        image = result.F.get(x)
        spine = next((s for s in result.spines() if x in result.separator(s)), None)
        if spine is None:
            assert image == APEX
        else:
            assert image == Point(result.H.get(x), spine)


@pytest.mark.parametrize("seed", range(10))
def test_reverse_direction_witness(seed):
    """Extending the canonical fiber map separates any disjoint family."""
    rng = random.Random(seed)
    space = random_metric_space(rng, max_size=9)
    labels = list(space.labels)
    rng.shuffle(labels)
    k = rng.randint(1, min(4, len(labels)))
    family = [set() for _ in range(k)]
    for i, label in enumerate(labels[: rng.randint(k, len(labels))]):
        family[i % k].add(label)
    family = [f for f in family if f]
    domain = sorted(set().union(*family))
    f = {}
    for i, fiber in enumerate(family, start=1):
        for x in fiber:
            f[x] = Point(F(1), i)
    result = hedgehog_extend(space, domain, f, SpineUniverse.finite(len(family)))

    preimages = {}
    for x in space.labels:
        p = result.F.get(x)
        if not p.is_apex:
            preimages.setdefault(p.spine, set()).add(x)
    for i, fiber in enumerate(family, start=1):
        assert fiber <= preimages.get(i, set())
    spines = sorted(preimages)
    for i in range(len(spines)):
        for j in range(i + 1, len(spines)):
            assert not preimages[spines[i]] & preimages[spines[j]]


def test_shrunk_separators_keep_positive_gap():
    rng = random.Random(4)
    for _ in range(10):
        space, domain, f, universe = random_instance(rng)
        result = hedgehog_extend(space, domain, f, universe)
        seps = [result.separator(s) for s in result.spines()]
        for i in range(len(seps)):
            for j in range(i + 1, len(seps)):
                if seps[i] and seps[j]:
                    assert min(space.d(x, y) for x in seps[i] for y in seps[j]) > 0
