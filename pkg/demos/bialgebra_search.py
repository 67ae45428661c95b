"""Search small averaging Lie bialgebras and watch them become SDPL bialgebras and Manin triples.

    python demos/bialgebra_search.py
"""

from collections import Counter

from opsplit import linalg as la
from opsplit.bialgebra import (
    avg_lie_bialgebra_via_double,
    avg_manin_to_leibniz_manin,
    build_sdpl_double,
    induce_sdpl_bialgebra,
    manin_chain,
)
from opsplit.catalog import affine_bracket
from opsplit.core import format_element
from opsplit.search import avg_lie_bialgebras_2d

LABELS = ("e1", "e2")


def show(name, t):
    for k in range(t.shape[0]):
        terms = [f"({t[k, i, j]}){LABELS[i]}⊗{LABELS[j]}" for i in range(2) for j in range(2) if t[k, i, j] != 0]
        print(f"  {name}({LABELS[k]}) = {' + '.join(terms) or '0'}")


def main():
    c = affine_bracket()
    print("Lie algebra [e1, e2] = e2; searching P, Q, δ with small integer entries ...")
    found = avg_lie_bialgebras_2d(c)
    nontrivial = [b for b in found if not la.is_zero(b.delta) and not la.is_zero(b.P)]
    print(f"{len(found)} averaging Lie bialgebras, {len(nontrivial)} with δ ≠ 0 and P ≠ 0")
    print("double route agrees on all:", all(avg_lie_bialgebra_via_double(b) for b in found))

    b = next(x for x in nontrivial if not la.is_zero(induce_sdpl_bialgebra(x).theta))
    print("\nfirst instance with θ = δP ≠ 0")
    print("  P:", [format_element(b.P[:, j], LABELS) for j in range(2)], " Q:", [format_element(b.Q[:, j], LABELS) for j in range(2)])
    show("δ", b.delta)
    bi = induce_sdpl_bialgebra(b)
    print("induced SDPL coalgebra")
    show("ϑ", bi.vartheta)
    show("θ", bi.theta)
    chain = manin_chain(bi.sdpl, bi.dual_split())
    print("five equivalent conditions:", chain)
    circ, split = avg_manin_to_leibniz_manin(b)
    print("averaging double restricts to the SDPL double:", split == build_sdpl_double(bi.sdpl, bi.dual_split()))

    tally = Counter(tuple(sorted(manin_chain(x.sdpl, x.dual_split()).items())) for x in map(induce_sdpl_bialgebra, nontrivial))
    print("\nchain verdicts over all nontrivial instances:", dict(tally))


if __name__ == "__main__":
    main()
