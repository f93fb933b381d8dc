from itertools import combinations

from hypothesis import strategies as st

from flawshift.paths import LatticePath


def all_balanced(k):
    """Every string with k U's and k D's, built without the library."""
    n = 2 * k
    for ups in combinations(range(n), k):
        yield "".join("U" if i in ups else "D" for i in range(n))


def all_raised(k):
    n = 2 * k
    for ups in combinations(range(n), k + 1):
        yield "".join("U" if i in ups else "D" for i in range(n))


def ref_heights(text):
    h = [0]
    for ch in text:
        h.append(h[-1] + (1 if ch == "U" else -1))
    return h


def ref_flaws(text):
    h = ref_heights(text)
    return sum(1 for i, ch in enumerate(text) if ch == "D" and h[i] <= 0)


def ref_dyck(k):
    return [t for t in all_balanced(k) if ref_flaws(t) == 0]


@st.composite
def balanced_paths(draw, min_k=0, max_k=12):
    k = draw(st.integers(min_k, max_k))
    steps = draw(st.permutations("U" * k + "D" * k))
    return LatticePath("".join(steps))


@st.composite
def dyck_paths_st(draw, min_k=1, max_k=12):
    x = draw(balanced_paths(min_k, max_k))
    # rotate after the first global minimum
    h = ref_heights(x.text)
    cut = h.index(min(h))
    return LatticePath(x.text[cut:] + x.text[:cut])


# criterion number -> (title, [(label, ok, detail)]), filled by test_acceptance
ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        title, parts = ACCEPTANCE[n]
        ok = all(p[1] for p in parts)
        failed = [f"{label}: {detail}" for label, good, detail in parts if not good]
        detail = "; ".join(failed) if failed else "; ".join(f"{label}: {d}" for label, _, d in parts if d)
        terminalreporter.write_line(f"criterion {n} {'PASS' if ok else 'FAIL'}  {title}  [{detail}]")
