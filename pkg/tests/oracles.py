"""Brute-force reference computations, written against plain Python sets.

Nothing here imports the package's algorithms; only the value types are
shared so that results can be compared.
"""

from __future__ import annotations

from itertools import chain, combinations, product


def powerset(items):
    items = list(items)
    return [frozenset(c) for c in chain.from_iterable(combinations(items, k) for k in range(len(items) + 1))]


def order_pairs(universe, nest_sets):
    return {(x, y) for x in universe for y in universe if any(x in s and y not in s for s in nest_sets)}


def is_transitive_pairs(universe, pairs):
    return all((x, z) in pairs for x, y, z in product(universe, repeat=3) if (x, y) in pairs and (y, z) in pairs)


def all_relations(universe):
    cells = list(product(universe, universe))
    for k in range(len(cells) + 1):
        for combo in combinations(cells, k):
            yield set(combo)


def all_topologies(universe):
    """Every family containing the empty and full set that is closed under pairwise meet and join."""
    full = frozenset(universe)
    inner = [s for s in powerset(universe) if s and s != full]
    found = []
    for fam in powerset(range(len(inner))):
        opens = {frozenset(), full} | {inner[i] for i in fam}
        if all(a & b in opens and a | b in opens for a in opens for b in opens):
            found.append(frozenset(opens))
    return found


def generated_topology(universe, subbase):
    """Close under finite intersections, then arbitrary unions."""
    full = frozenset(universe)
    base = {full} | {frozenset(s) for s in subbase}
    changed = True
    while changed:
        new = {a & b for a in base for b in base} - base
        changed = bool(new)
        base |= new
    opens = {frozenset()}
    for fam in powerset(range(len(base))):
        members = list(base)
        opens.add(frozenset().union(*(members[i] for i in fam)))
    return frozenset(opens)


def condition_holds_brute(universe, lt, k):
    """Decide condition ``k`` by trying every witness set Z, including the empty one."""
    le = set(lt) | {(x, x) for x in universe}

    def guard(x, y):
        return {1: (x, y) not in le, 2: (y, x) not in le, 3: (y, x) in lt, 4: (x, y) in lt}[k]

    def clause_one(x, y, z):
        return {1: (y, z) in lt, 2: (z, y) in lt, 3: (z, y) not in le, 4: (y, z) not in le}[k]

    def hyp(w, z):
        return {1: (w, z) in lt, 2: (z, w) in lt, 3: (z, w) not in le, 4: (w, z) not in le}[k]

    def concl(x, y, w):
        return {1: (x, w) not in le, 2: (w, x) not in le, 3: (w, x) in lt, 4: (x, w) in lt}[k]

    for x, y in product(universe, repeat=2):
        if not guard(x, y):
            continue
        ok = False
        for zs in powerset(universe):
            if all(clause_one(x, y, z) for z in zs) and all(
                concl(x, y, w) for w in universe if all(hyp(w, z) for z in zs)
            ):
                ok = True
                break
        if not ok:
            return False
    return True


def chains(universe):
    """All families of subsets that are totally ordered by inclusion, by filtering the full power set of families."""
    subsets = powerset(universe)
    out = []
    for fam in powerset(range(len(subsets))):
        members = [subsets[i] for i in fam]
        if all(a <= b or b <= a for a in members for b in members):
            out.append(frozenset(members))
    return out
