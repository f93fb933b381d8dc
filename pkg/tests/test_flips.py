import random

import pytest
from hypothesis import given

from conftest import all_balanced, dyck_paths_st, ref_dyck, ref_flaws
from flawshift.bijections import apply_f
from flawshift.errors import DomainError
from flawshift.flips import (
    PiStats,
    dyck_subpaths,
    hill_matching,
    is_alternating,
    pi_direct,
    pi_recursive,
    recover_origin,
)
from flawshift.oracle import random_dyck_path
from flawshift.paths import LatticePath, mirror, parse_path, rev_complement

# flip orders printed under the five columns of the k=3 grid
K3_PERMS = {
    "UUUDDD": (6, 2, 4, 3, 5, 1),
    "UUDUDD": (6, 4, 5, 2, 3, 1),
    "UUDDUD": (4, 2, 3, 1, 6, 5),
    "UDUDUD": (2, 1, 4, 3, 6, 5),
    "UDUUDD": (2, 1, 6, 4, 5, 3),
}


@pytest.mark.parametrize("text", sorted(K3_PERMS))
def test_pi_matches_k3_table(text):
    x = parse_path(text)
    assert pi_direct(x).entries == K3_PERMS[text]
    assert pi_recursive(x).entries == K3_PERMS[text]


def test_pi_base_case_and_format():
    assert pi_recursive(parse_path("UD")).entries == (2, 1)
    assert str(pi_recursive(parse_path("UUUDDD"))) == "(6,2,4,3,5,1)"
    assert pi_recursive(parse_path("")).entries == ()


def test_pi_rejects_flawed_paths():
    with pytest.raises(DomainError):
        pi_direct(parse_path("DU"))
    with pytest.raises(DomainError):
        pi_recursive(parse_path("UDDU"))


def test_is_alternating():
    assert is_alternating((6, 2, 4, 3, 5, 1))
    assert is_alternating((2, 1))
    assert not is_alternating((1, 2))
    assert not is_alternating((2, 1, 0, 3))


@pytest.mark.parametrize(
    "text, ups, downs, origin",
    [
        ("UDUDDU", {6}, {2}, "UUUDDD"),
        ("UUUDDD", set(), set(), "UUUDDD"),
        ("DDDUUU", {4, 5, 6}, {1, 2, 3}, "UUUDDD"),
    ],
)
def test_recover_origin_examples(text, ups, downs, origin):
    w = recover_origin(parse_path(text))
    assert (set(w.up_set), set(w.down_set), w.origin.text) == (ups, downs, origin)


def test_hill_matching_is_involution():
    x = parse_path("UUDUDDUD")
    m = hill_matching(x)
    assert [m[i] for i in range(1, 9)] == [6, 3, 2, 5, 4, 1, 8, 7]
    assert all(m[m[i]] == i for i in range(1, 9))


def test_dyck_subpaths_examples():
    assert set(dyck_subpaths(parse_path("UUDD"))) >= {(2, 3, 1), (1, 4, 0)}
    assert set(dyck_subpaths(parse_path("UDUD"))) >= {(1, 2, 0), (3, 4, 0), (1, 4, 0)}
    assert dyck_subpaths(parse_path("")) == []


def _brute_subpaths(t):
    """Intervals starting and ending on a common line and never dipping below it."""
    h = [0]
    for ch in t:
        h.append(h[-1] + (1 if ch == "U" else -1))
    out = set()
    for s in range(len(t)):
        for e in range(s + 2, len(t) + 1, 2):
            if h[s] == h[e] and min(h[s : e + 1]) >= h[s]:
                out.add((s + 1, e, h[s]))
    return out


@pytest.mark.parametrize("k", range(1, 7))
def test_dyck_subpaths_against_brute_force(k):
    for t in ref_dyck(k):
        assert set(dyck_subpaths(LatticePath(t))) == _brute_subpaths(t)


@pytest.mark.parametrize("k", range(1, 9))
def test_pi_recursive_equals_direct_exhaustive(k):
    for t in ref_dyck(k):
        x = LatticePath(t)
        p = pi_direct(x)
        assert pi_recursive(x) == p
        assert sorted(p) == list(range(1, 2 * k + 1))
        assert is_alternating(p)


@pytest.mark.parametrize("k", [50, 200])
def test_pi_recursive_equals_direct_random(k):
    rng = random.Random(k)
    for _ in range(100):
        x = random_dyck_path(k, rng)
        assert pi_recursive(x) == pi_direct(x)


@given(dyck_paths_st(max_k=30))
def test_pi_recursive_property(x):
    assert pi_recursive(x) == pi_direct(x)


@pytest.mark.parametrize("k", range(1, 9))
def test_f_power_k_is_mirror(k):
    for t in ref_dyck(k):
        x = LatticePath(t)
        cur = x
        for _ in range(k):
            cur = apply_f(cur).path
        assert cur == mirror(x)


@pytest.mark.parametrize("k", range(1, 9))
def test_recover_origin_exhaustive(k):
    for t in all_balanced(k):
        x = LatticePath(t)
        e = ref_flaws(t)
        w = recover_origin(x)
        assert len(w.up_set) == len(w.down_set) == e
        assert ref_flaws(w.origin.text) == 0
        diff = {i + 1 for i, (a, b) in enumerate(zip(t, w.origin.text)) if a != b}
        assert diff == w.up_set | w.down_set
        cur = w.origin
        for _ in range(e):
            cur = apply_f(cur).path
        assert cur == x


@pytest.mark.parametrize("k", range(1, 7))
def test_subpath_restriction(k):
    for t in ref_dyck(k):
        x = LatticePath(t)
        p = pi_direct(x).entries
        for start, end, level in dyck_subpaths(x):
            idx = [i for i, v in enumerate(p) if start <= v <= end]
            assert idx == list(range(idx[0], idx[-1] + 1))
            restricted = tuple(p[i] - start + 1 for i in idx)
            s = LatticePath(t[start - 1 : end])
            if level % 2 == 0:
                assert restricted == pi_direct(s).entries
            else:
                assert restricted == tuple(len(s) + 1 - v for v in pi_direct(rev_complement(s)).entries)


@pytest.mark.parametrize("k", [10, 100, 1000, 10000])
def test_pi_recursive_work_is_linear(k):
    rng = random.Random(7)
    stats = PiStats()
    pi_recursive(random_dyck_path(k, rng), stats)
    # one frame per hill, one emit per step
    assert stats.frames <= 2 * k
    assert stats.emits == 2 * k


def test_pi_recursive_deep_nesting():
    x = LatticePath("U" * 300 + "D" * 300)
    assert pi_recursive(x) == pi_direct(x)
    k = 200_000
    p = pi_recursive(LatticePath("U" * k + "D" * k)).entries
    assert sorted(p) == list(range(1, 2 * k + 1))
    assert is_alternating(p)
