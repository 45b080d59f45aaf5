'''
Copyright 2024 the pynetmod authors
This file is part of pynetmod.

pynetmod is free software: you can redistribute it 
and/or modify it under the terms of the GNU General Public License as 
published by the Free Software Foundation, either version 3 of the 
License, or (at your option) any later version.

pynetmod is distributed in the hope that it will 
be useful, but WITHOUT ANY WARRANTY; without even the implied warranty 
of MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
GNU General Public License for more details.

You should have received a copy of the GNU General Public License
along with pynetmod.  
If not, see <http://www.gnu.org/licenses/>.
'''

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import permutations, product
from math import comb
from typing import Callable, Iterator, Optional, Sequence

import networkx as nx

from pynetmod.algebra import (Monoid, MonoidHom, boolean_monoid, nat_monoid, free_monoid, path_band_monoid,
                              direct_product, find_pointed_violation, collapse_hom, check_hom)
from pynetmod.auxiliary import make_rng
from pynetmod.config import Settings, DEFAULT_SETTINGS
from pynetmod.enums import EVarieties
from pynetmod.green import GreenContext, SimpleGraph, congruence_closure_oracle
from pynetmod.kneser import Injection, k_subsets, kneser_graph, kneser_embedding, kneser_laxator
from pynetmod.network_model import (Permutation, all_permutations, network_model, unit_hom, induced_hom,
                                    counit_eval, transposition_counit_permutation, simple_graph_model,
                                    multigraph_model, ordinary_model, cmon_iso, cmon_iso_inverse)
from pynetmod.notation import parse_network, format_network
from pynetmod.operad import (OperadOperation, identity_operation, operad_compose, EuclideanSpace,
                             RangeLimitedState, BoundedDegreeNetwork, act_range_limited, act_bounded_degree,
                             admit_edges, is_k_bounded)

logger = logging.getLogger(__name__)

Check = tuple[bool, str]

@dataclass(frozen=True, slots=True)
class CheckResult():
    """Result of an invariant suite"""
    suite:str
    """Name of the suite"""
    passed:bool
    """True if every check passed"""
    checked:int
    """Number of checks run until the first failure"""
    counterexample:Optional[str] = None
    """Description of the first failing check"""

def _collect(suite:str, checks:Iterator[Check]) -> CheckResult:
    count = 0
    for ok, description in checks:
        count += 1
        if not ok:
            logger.info('suite %s failed after %d checks: %s', suite, count, description)
            return CheckResult(suite, False, count, description)
    logger.info('suite %s passed %d checks', suite, count)
    return CheckResult(suite, True, count)

def _algebra(settings:Settings) -> Iterator[Check]:
    b, p = boolean_monoid(), path_band_monoid()
    for m in (b, nat_monoid(), p, free_monoid('ab'), direct_product(b, b), direct_product(p, b)):
        violation = m.find_law_violation(settings)
        yield violation is None, violation or ''
    yield p.is_graphic(settings), 'path band is not graphic'
    yield p.op('a', 'c') != p.op('c', 'a'), 'path band is commutative'
    for prod in (direct_product(b, b), direct_product(p, b)):
        violation = find_pointed_violation(prod, settings)
        yield violation is None, violation or ''
    yield check_hom(collapse_hom(), settings), 'collapse N -> B is not a homomorphism'
    swap = MonoidHom(b, b, lambda a: not a, 'swap')
    yield not check_hom(swap, settings), 'swapping T and F passes as homomorphism'

def _kneser(settings:Settings) -> Iterator[Check]:
    for n in range(9):
        for k in range(4):
            g = kneser_graph(n, k)
            n_vertices, n_edges = comb(n, k), comb(n, k) * comb(max(n - k, 0), k) // 2
            yield (g.n_vertices == n_vertices and len(g.edges) == n_edges,
                   f'KG_{n},{k} has {g.n_vertices} vertices and {len(g.edges)} edges')
    petersen = kneser_graph(5, 2).to_networkx()
    yield nx.is_isomorphic(petersen, nx.petersen_graph()), 'KG_5,2 is not the Petersen graph'
    yield nx.girth(petersen) == 5, 'KG_5,2 does not have girth 5'
    yield not kneser_graph(3, 2).edges, 'KG_3,2 has edges'
    for m, n in product(range(4), repeat=2):
        lax = kneser_laxator(m, n, 2)
        yield lax.preserves_edges() and lax.is_injective(), f'laxator ({m},{n}) is no injective graph map'
        left, right = comb(m, 2), comb(n, 2)
        for i, j in product(range(left), range(left, left + right)):
            yield lax.target.adjacent(lax(i), lax(j)), f'laxator ({m},{n}) images of {i} and {j} are not adjacent'
    rng = make_rng(settings, 'kneser')
    for _ in range(50):
        a, b, c = sorted(rng.randint(0, 5) for _ in range(3))
        f = Injection(a, b, tuple(rng.sample(range(b), a)))
        g = Injection(b, c, tuple(rng.sample(range(c), b)))
        e = kneser_embedding(g.compose(f), 2)
        yield e == kneser_embedding(g, 2).compose(kneser_embedding(f, 2)), f'embedding of {g} * {f} is not functorial'
        yield e.is_embedding(), f'embedding of {g.compose(f)} is no graph embedding'

def _green(settings:Settings) -> Iterator[Check]:
    b = boolean_monoid()
    for n, expected in ((2, 4), (3, 8)):
        ctx = GreenContext(SimpleGraph.complete(n), (b,) * n, settings=settings)
        count = len(ctx.enumerate(n))
        yield count == expected, f'Green product over K_{n} has {count} elements, expected {expected}'
    ctx = GreenContext(SimpleGraph.edgeless(2), (b, b), settings=settings)
    for length in range(5):
        count = len(ctx.enumerate(length))
        yield count == 2 * length + 1, f'B + B has {count} elements up to length {length}'
    abab = ctx.normalize([(0, True), (1, True), (0, True), (1, True)])
    yield abab != ctx.normalize([(0, True), (1, True)]), 'abab = ab in B + B'
    ctx = network_model(b, EVarieties.MON, settings).green_context(4)
    elems = ctx.enumerate(2)
    for x, y, z in product(elems[:12], repeat=3):
        yield (x * y) * z == x * (y * z), f'multiply is not associative on {x}, {y}, {z}'
    gm = network_model(b, EVarieties.GMON, settings)
    for n in range(2, 5):
        elems = gm.enumerate(n, 2)
        for x, y in product(elems, repeat=2):
            yield x * y * x == x * y, f'graphic law fails for {x}, {y}'
    x, y = gm.edge(3, 0, 1, True), gm.edge(3, 1, 2, True)
    c = gm.edge(3, 0, 2, True)
    yield (x * y) * (y * c) == x * y * c, 'commitment (xy)(yc) != xyc'

def _words(ctx:GreenContext, max_length:int) -> Iterator[tuple]:
    letters = ctx.generators()
    for length in range(max_length + 1):
        yield from product(letters, repeat=length)

def _shuffle_agreement(ctx:GreenContext, max_length:int, settings:Settings) -> Iterator[Check]:
    for word in _words(ctx, max_length):
        normal = ctx.normalize(word)
        closure = congruence_closure_oracle(word, ctx, settings=settings)
        ok = normal.word in closure
        yield ok, '' if ok else f'mon: canonical form of {word} is not reachable'
        ok = all(ctx.normalize(w) == normal for w in closure)
        yield ok, '' if ok else f'mon: closure of {word} leaves its class'

def _class_agreement(ctx:GreenContext, max_length:int, settings:Settings) -> Iterator[Check]:
    # letters are never identities and every move is undone by another within max_len,
    # so the closure of the canonical word is the oracle class of every word in it
    classes:dict[tuple, list[tuple]] = {}
    for word in _words(ctx, max_length):
        classes.setdefault(ctx.normalize(word).word, []).append(word)
    variety = ctx.variety.value
    for normal, words in classes.items():
        closure = congruence_closure_oracle(normal, ctx, max_len=max_length + 1, settings=settings)
        missing = next((w for w in words if tuple(w) not in closure), None)
        yield missing is None, '' if missing is None else f'{variety}: {missing} does not reach {normal}'
        split = next((w for w in closure if ctx.normalize(w).word != normal), None)
        yield split is None, '' if split is None else f'{variety}: {split} is reachable from {normal}'

ORACLE_SCALES:tuple[tuple[EVarieties, str, int, int], ...] = (
    (EVarieties.MON, 'bool', 4, 5),
    (EVarieties.MON, 'band', 4, 4),
    (EVarieties.CMON, 'bool', 4, 5),
    (EVarieties.GMON, 'bool', 4, 5),
    (EVarieties.GMON, 'band', 2, 4),
    (EVarieties.GMON, 'band', 3, 3),
    (EVarieties.GMON, 'band', 4, 2),
)
"""(variety, edge monoid, largest n, word length) of the oracle suite. n runs from 2"""

def _oracle(settings:Settings) -> Iterator[Check]:
    monoids = {'bool': boolean_monoid(), 'band': path_band_monoid()}
    for variety, name, max_n, length in ORACLE_SCALES:
        for n in range(2, max_n + 1):
            ctx = network_model(monoids[name], variety, settings).green_context(n)
            logger.info('oracle agreement: %s %s n=%d words up to length %d', variety.value, name, n, length)
            if variety == EVarieties.MON: yield from _shuffle_agreement(ctx, length, settings)
            else: yield from _class_agreement(ctx, length, settings)

def _network(settings:Settings) -> Iterator[Check]:
    rng = make_rng(settings, 'network')
    for m, variety in product((boolean_monoid(), path_band_monoid()), (EVarieties.MON, EVarieties.GMON)):
        ctx = network_model(m, variety, settings)
        two = ctx.constituent(2).elements
        for a, bb, c, d in product(two, repeat=4):
            lhs = ctx.overlay(ctx.disjoint_union(a, bb), ctx.disjoint_union(c, d))
            rhs = ctx.disjoint_union(ctx.overlay(a, c), ctx.overlay(bb, d))
            yield lhs == rhs, f'interchange fails for {a}, {bb}, {c}, {d} in {ctx}'
        for s, t, g, h in product(all_permutations(2), all_permutations(2), two, two):
            lhs = ctx.permute(s.block_sum(t), ctx.disjoint_union(g, h))
            yield lhs == ctx.disjoint_union(ctx.permute(s, g), ctx.permute(t, h)), f'equivariance fails for {g}, {h}'
        for _ in range(30):
            g, h, k = (ctx.random_element(n, rng) for n in (2, 3, 1))
            yield ctx.disjoint_union(g, ctx.identity(0)) == g, f'unit law fails for {g}'
            yield (ctx.disjoint_union(ctx.disjoint_union(g, h), k) == ctx.disjoint_union(g, ctx.disjoint_union(h, k)),
                   f'associativity of disjoint union fails for {g}, {h}, {k}')
            swapped = ctx.permute(Permutation.block_swap(2, 3), ctx.disjoint_union(g, h))
            yield swapped == ctx.disjoint_union(h, g), f'symmetry fails for {g}, {h}'

def _cmon(settings:Settings) -> Iterator[Check]:
    ctx = network_model(boolean_monoid(), EVarieties.CMON, settings)
    sg = ordinary_model(boolean_monoid(), settings)
    elems = ctx.constituent(4).elements
    yield len(elems) == 64, f'Gamma_B,cmon(4) has {len(elems)} elements'
    images = {cmon_iso(g) for g in elems}
    yield len(images) == 64, 'cmon_iso is not injective'
    for g in elems:
        yield cmon_iso_inverse(cmon_iso(g), ctx) == g, f'cmon_iso does not round trip at {g}'
    rng = make_rng(settings, 'cmon')
    perms = all_permutations(4)
    for _ in range(200):
        g, h = rng.choice(elems), rng.choice(elems)
        yield cmon_iso(g * h) == cmon_iso(g) * cmon_iso(h), f'cmon_iso does not preserve {g} u {h}'
        s = rng.choice(perms)
        yield cmon_iso(ctx.permute(s, g)) == sg.permute(s, cmon_iso(g)), f'cmon_iso is not equivariant at {g}'
        yield (cmon_iso(ctx.disjoint_union(g, h)) == sg.disjoint_union(cmon_iso(g), cmon_iso(h)),
               f'cmon_iso does not preserve {g} + {h}')

def _adjunction(settings:Settings) -> Iterator[Check]:
    for m, variety in product((boolean_monoid(), path_band_monoid()), EVarieties):
        if variety == EVarieties.CMON and m is path_band_monoid(): continue
        ctx = network_model(m, variety, settings)
        lifted_ctx = network_model(ctx.constituent(2), variety, settings)
        eta = unit_hom(ctx)
        for n in range(4):
            for g in ctx.enumerate(n, 2):
                back = counit_eval(ctx, induced_hom(eta, g, lifted_ctx, check=False))
                yield back == g, f'triangle identity fails at {g} in {ctx}({n})'
    for f in (simple_graph_model(), multigraph_model()):
        f2 = f.constituent(2)
        lifted = network_model(f2, EVarieties.MON, settings)
        values = f2.elements if f2.is_finite() else [a for a, _ in f2.pairs(settings)][:50]
        for x in values:
            yield counit_eval(f, lifted.edge(2, 0, 1, x)) == x, f'E(counit) is not the identity at {x}'
            g = lifted.element(3, [(0, 2, x), (1, 2, x)])
            yield (counit_eval(f, g) == counit_eval(f, g, transposition_counit_permutation),
                   f'counit depends on the placing permutation at {g}')

def _operad(settings:Settings) -> Iterator[Check]:
    ctx = network_model(boolean_monoid(), EVarieties.CMON, settings)
    rng = make_rng(settings, 'operad')
    def random_op(profile):
        n = sum(profile)
        perm = Permutation(tuple(rng.sample(range(n), n)))
        return OperadOperation(ctx, profile, perm, ctx.random_element(n, rng))
    def random_profile(total):
        cuts = sorted(rng.sample(range(1, total), rng.randint(0, min(2, total - 1)))) if total > 1 else []
        bounds = [0] + cuts + [total]
        return tuple(b - a for a, b in zip(bounds, bounds[1:]))
    for _ in range(40):
        outer = random_op(random_profile(rng.randint(1, 4)))
        yield operad_compose(outer, [identity_operation(ctx, ni) for ni in outer.profile]) == outer, f'right unit law fails'
        yield operad_compose(identity_operation(ctx, outer.n), [outer]) == outer, f'left unit law fails'
        inners = [random_op(random_profile(ni)) if ni else identity_operation(ctx, 0) for ni in outer.profile]
        inner_inners = [[random_op(random_profile(nj)) if nj else identity_operation(ctx, 0) for nj in op.profile]
                        for op in inners]
        lhs = operad_compose(operad_compose(outer, inners), [x for xs in inner_inners for x in xs])
        rhs = operad_compose(outer, [operad_compose(op, xs) for op, xs in zip(inners, inner_inners)])
        yield lhs == rhs, 'operad composition is not associative'

def _degree(settings:Settings) -> Iterator[Check]:
    ctx = network_model(boolean_monoid(), EVarieties.GMON, settings)
    n, k, max_length = 4, 2, 4
    states = [BoundedDegreeNetwork(h, k) for h in _all_graphs(n) if is_k_bounded(h, k)]
    orders = [list(permutations(h.graph.sorted_edges())) for h in states]
    edges = k_subsets(n, 2)
    for length in range(max_length + 1):
        for word in product(edges, repeat=length):
            g = ctx.element(n, [(u, v, True) for u, v in word])
            for h, h_orders in zip(states, orders):
                out = act_bounded_degree(g, h)
                ok = is_k_bounded(out.graph, k)
                yield ok, '' if ok else f'{g} pushes {h} above the bound'
                ok = admit_edges(word, h) == out
                yield ok, '' if ok else f'raw word {word} and canonical word of {g} act differently'
                for order in h_orders:
                    ok = admit_edges(word, h, list(order)) == out
                    yield ok, '' if ok else f'action of {g} depends on the order {order} of {h}'
    elems = ctx.enumerate(n, max_length)
    for g, g2 in product(elems, repeat=2):
        if len(g) + len(g2) > max_length: continue
        both = g * g2
        for h in states:
            ok = act_bounded_degree(both, h) == act_bounded_degree(g2, act_bounded_degree(g, h))
            yield ok, '' if ok else f'acting by {g} u {g2} on {h} differs from acting in turn'

def _all_graphs(n:int) -> Iterator[SimpleGraph]:
    edges = k_subsets(n, 2)
    for mask in range(1 << len(edges)):
        yield SimpleGraph(n, frozenset(e for i, e in enumerate(edges) if mask >> i & 1))

def _range(settings:Settings) -> Iterator[Check]:
    sg = simple_graph_model()
    line = EuclideanSpace(1)
    states = [RangeLimitedState(SimpleGraph(1), ((float(i),),), line, 1.0) for i in range(4)]
    op = OperadOperation(sg, (1, 1, 1, 1), Permutation.identity(4), sg.element(4, [(0, 1, True), (0, 2, True)]))
    out = act_range_limited(op, states)
    yield out.graph.edges == frozenset({(0, 1)}), f'expected only the edge (0, 1), got {out.graph.sorted_edges()}'
    rng = make_rng(settings, 'range')
    plane = EuclideanSpace(2)
    for _ in range(200):
        sizes = [rng.randint(1, 3) for _ in range(rng.randint(1, 3))]
        states = [RangeLimitedState(SimpleGraph(s), tuple((rng.random(), rng.random()) for _ in range(s)), plane, 0.5)
                  for s in sizes]
        n = sum(sizes)
        op = OperadOperation(sg, tuple(sizes), Permutation(tuple(rng.sample(range(n), n))), sg.random_element(n, rng))
        out = act_range_limited(op, states)
        yield all(out.in_range(u, v) for u, v in out.graph.edges), 'range limited output has a long edge'

def _roundtrip(settings:Settings) -> Iterator[Check]:
    for m, variety in ((boolean_monoid(), EVarieties.MON), (path_band_monoid(), EVarieties.GMON),
                       (free_monoid('ab'), EVarieties.MON)):
        ctx = network_model(m, variety, settings)
        rng = make_rng(settings, f'roundtrip:{m.name}')
        for _ in range(100):
            g = ctx.random_element(4, rng)
            yield parse_network(format_network(g), ctx, 4) == g, f'literal {format_network(g)} does not round trip'

SUITES:dict[str, Callable[[Settings], Iterator[Check]]] = {
    'algebra': _algebra,
    'kneser': _kneser,
    'green': _green,
    'oracle': _oracle,
    'network': _network,
    'cmon': _cmon,
    'adjunction': _adjunction,
    'operad': _operad,
    'degree': _degree,
    'range': _range,
    'roundtrip': _roundtrip,
}
"""Invariant suites by name"""

def run_suite(name:str, settings:Settings=DEFAULT_SETTINGS) -> CheckResult:
    """
    Runs the invariant suite name and stops at the first failing check.

    Raises:
        ValueError: Raised if there is no suite name
    """
    if name not in SUITES:
        raise ValueError(f'unknown suite {name!r}, expected one of {", ".join(SUITES)} or all')
    return _collect(name, SUITES[name](settings))

def run_suites(names:Sequence[str], settings:Settings=DEFAULT_SETTINGS, workers:int=1) -> list[CheckResult]:
    """
    Runs the given suites, 'all' expands to every suite. Suites run concurrently
    if workers > 1. Results are in the order of names.
    """
    expanded = []
    for name in names:
        expanded.extend(SUITES if name == 'all' else [name])
    for name in expanded:
        if name not in SUITES:
            raise ValueError(f'unknown suite {name!r}, expected one of {", ".join(SUITES)} or all')
    if workers <= 1:
        return [run_suite(name, settings) for name in expanded]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda name: run_suite(name, settings), expanded))
