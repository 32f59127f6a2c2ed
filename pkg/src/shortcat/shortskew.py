"""Short skew multicategories: tight/loose tables, the comparison j, typed
substitution, and the validator.

Tight multimaps exist for arities 1 to 4 (arity 1 = base homs), loose ones
for arities 0 to 2. A substitution output is tight exactly when the outer
map is tight and either the position is not 1 or the inner map is tight.
The stored substitution cases are:

    tight binary  into tight binary   (outer t2, inner t2)
    tight binary  into tight ternary  (outer t3, inner t2)
    tight ternary into tight binary   (outer t2, inner t3)
    nullary       into tight binary   (outer t2, inner l0)
    nullary       into tight ternary  (outer t3, inner l0)
    nullary       into loose unary    (outer l1, inner l0)
    loose unary   into tight binary   (outer t2, inner l1)
    tight binary  into loose unary    (outer l1, inner t2)

Tight unary maps are base morphisms: substituting them routes through the
pre-action tables, substituting into them routes through post-action.
Loose unary maps are not base morphisms and have their own tables.

A plain short multicategory embeds as the case where the loose tables are
the tight ones and j is the identity; identifiers may then belong to both
flavours, and the dispatcher prefers the tight route (which agrees with
the loose one by j-naturality).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterator, Optional

from .errors import DanglingId, MalformedTable, TypingViolation, UnsupportedSubstitution
from .fincat import FinCategory, FinFunctor, validate_functor
from .report import Check, ValidationReport, run_checks
from .shortmulti import Key, MultiMorphism, ShortMulticategory

TIGHT = "t"
LOOSE = "l"

# (outer arity, outer flavour, inner arity, inner flavour) with stored tables
STORED_SKEW_CASES = frozenset({
    (2, TIGHT, 2, TIGHT), (3, TIGHT, 2, TIGHT), (2, TIGHT, 3, TIGHT),
    (2, TIGHT, 0, LOOSE), (3, TIGHT, 0, LOOSE),
    (1, LOOSE, 0, LOOSE), (2, TIGHT, 1, LOOSE), (1, LOOSE, 2, TIGHT),
})


def sub_flavour(x: str, i: int, y: str) -> str:
    """Tight exactly when the outer map is tight and (i != 1 or the inner is tight)."""
    if x == TIGHT and y == TIGHT and i == 1:
        return TIGHT
    if x == TIGHT and i != 1:
        return TIGHT
    return LOOSE


@dataclass(frozen=True)
class ShortSkewMulticategory:
    name: str
    base: FinCategory
    tight: dict[int, dict[Key, tuple[str, ...]]]   # arities 2,3,4 (1 = base homs)
    loose: dict[int, dict[Key, tuple[str, ...]]]   # arities 0,1,2
    j: dict[str, str]                              # tight unary/binary id -> loose id
    pre: dict[tuple[str, int, str], str]           # (f, i, p), p a base morphism
    post: dict[tuple[str, str], str]               # (q, f), q a base morphism
    sub: dict[tuple[str, int, str], str]           # typed stored cases
    _index: dict[str, tuple[int, tuple[str, ...], str, frozenset]] = field(
        default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        index: dict[str, tuple[int, tuple[str, ...], str, set]] = {}
        for f in self.base.morphisms():
            a, b = self.base.span(f)
            index[f] = (1, (a,), b, {TIGHT})

        def load(tables, flavour, arities):
            out = {}
            for n in arities:
                out[n] = {}
                for (dom, cod), fs in tables.get(n, {}).items():
                    out[n][(tuple(dom), cod)] = tuple(sorted(fs))
                    for f in fs:
                        if f in index:
                            k, d, c, fl = index[f]
                            if (k, d, c) != (n, tuple(dom), cod):
                                raise MalformedTable(
                                    f"{self.name}: id {f} declared with two different types")
                            fl.add(flavour)
                        else:
                            index[f] = (n, tuple(dom), cod, {flavour})
            return out

        tight = load(self.tight, TIGHT, (2, 3, 4))
        if 1 in self.tight:
            for (dom, cod), fs in self.tight[1].items():
                if tuple(sorted(fs)) != self.base.hom(dom[0], cod):
                    raise MalformedTable(f"{self.name}: tight arity-1 table disagrees with base homs")
        loose = load(self.loose, LOOSE, (0, 1, 2))
        object.__setattr__(self, "tight", tight)
        object.__setattr__(self, "loose", loose)
        object.__setattr__(self, "_index",
                           {f: (n, d, c, frozenset(fl)) for f, (n, d, c, fl) in index.items()})

    # -- typed lookups ------------------------------------------------------
    def info(self, f: str) -> tuple[int, tuple[str, ...], str, frozenset]:
        try:
            return self._index[f]
        except KeyError:
            raise DanglingId(f"{self.name}: unknown multimap {f}")

    def arity(self, f: str) -> int:
        return self.info(f)[0]

    def dom(self, f: str) -> tuple[str, ...]:
        return self.info(f)[1]

    def cod(self, f: str) -> str:
        return self.info(f)[2]

    def is_tight(self, f: str) -> bool:
        return TIGHT in self.info(f)[3]

    def is_loose(self, f: str) -> bool:
        return LOOSE in self.info(f)[3]

    def mapset(self, flavour: str, n: int, dom: tuple[str, ...], cod: str) -> tuple[str, ...]:
        if flavour == TIGHT:
            if n == 1:
                return self.base.hom(dom[0], cod)
            return self.tight.get(n, {}).get((tuple(dom), cod), ())
        return self.loose.get(n, {}).get((tuple(dom), cod), ())

    def multimaps(self, flavour: str, n: int) -> list[str]:
        if flavour == TIGHT and n == 1:
            return self.base.morphisms()
        tables = self.tight if flavour == TIGHT else self.loose
        return sorted(f for fs in tables.get(n, {}).values() for f in fs)

    def mapset_keys(self, flavour: str, n: int) -> list[Key]:
        if flavour == TIGHT and n == 1:
            return sorted(((a,), b) for (a, b) in self.base.homs)
        tables = self.tight if flavour == TIGHT else self.loose
        return sorted(tables.get(n, {}))

    def j_of(self, f: str) -> str:
        try:
            return self.j[f]
        except KeyError:
            raise MalformedTable(f"{self.name}: j undefined at {f}")

    # -- actions ------------------------------------------------------------
    def act_post(self, q: str, f: str) -> str:
        if self.arity(f) == 1 and self.is_tight(f):
            return self.base.compose(q, f)
        try:
            return self.post[(q, f)]
        except KeyError:
            raise MalformedTable(f"{self.name}: missing post entry ({q}, {f})")

    def act_pre(self, f: str, i: int, p: str) -> str:
        if self.arity(f) == 1 and self.is_tight(f):
            if i != 1:
                raise UnsupportedSubstitution(f"{self.name}: unary map has one input")
            return self.base.compose(f, p)
        try:
            return self.pre[(f, i, p)]
        except KeyError:
            raise MalformedTable(f"{self.name}: missing pre entry ({f}, {i}, {p})")

    def subst(self, g: str, i: int, f: str) -> str:
        if self.arity(f) == 1 and self.is_tight(f):
            return self.act_pre(g, i, f)
        if self.arity(g) == 1 and self.is_tight(g):
            if i != 1:
                raise UnsupportedSubstitution(f"{self.name}: unary map has one input")
            return self.act_post(g, f)
        if self.sub_case(g, i, f) is None:
            raise UnsupportedSubstitution(
                f"{self.name}: substitution ({g}, {i}, {f}) outside stored cases")
        try:
            return self.sub[(g, i, f)]
        except KeyError:
            raise MalformedTable(f"{self.name}: missing sub entry ({g}, {i}, {f})")

    def sub_case(self, g: str, i: int, f: str) -> Optional[tuple[int, str, int, str]]:
        """The stored-case descriptor for (g, i, f), or None."""
        ng, _, _, flg = self.info(g)
        nf, _, _, flf = self.info(f)
        for x in sorted(flg):
            for y in sorted(flf):
                case = (ng, x, nf, y)
                if case in STORED_SKEW_CASES:
                    return case
        return None

    # -- safe variants -------------------------------------------------------
    def safe_post(self, q: Optional[str], f: Optional[str]) -> Optional[str]:
        if q is None or f is None or f not in self._index or q not in self._index:
            return None
        if self.arity(f) == 1 and self.is_tight(f):
            return self.base.compose_opt(q, f)
        return self.post.get((q, f))

    def safe_pre(self, f: Optional[str], i: int, p: Optional[str]) -> Optional[str]:
        if f is None or p is None or f not in self._index:
            return None
        if self.arity(f) == 1 and self.is_tight(f):
            return self.base.compose_opt(f, p) if i == 1 else None
        return self.pre.get((f, i, p))

    def safe_subst(self, g: Optional[str], i: int, f: Optional[str]) -> Optional[str]:
        if g is None or f is None or g not in self._index or f not in self._index:
            return None
        if self.arity(f) == 1 and self.is_tight(f):
            return self.safe_pre(g, i, f)
        if self.arity(g) == 1 and self.is_tight(g):
            return self.safe_post(g, f) if i == 1 else None
        return self.sub.get((g, i, f))

    def safe_j(self, f: Optional[str]) -> Optional[str]:
        if f is None:
            return None
        return self.j.get(f)

    # -- structural totality ---------------------------------------------------
    def all_tables(self) -> Iterator[tuple[str, int, str]]:
        """(flavour, arity, multimap) over every non-base table entry."""
        for n in (2, 3, 4):
            for f in self.multimaps(TIGHT, n):
                yield (TIGHT, n, f)
        for n in (0, 1, 2):
            for f in self.multimaps(LOOSE, n):
                if not (self.arity(f) == 1 and self.is_tight(f)):
                    yield (LOOSE, n, f)

    def required_pre_keys(self) -> Iterator[tuple[str, int, str]]:
        seen = set()
        for _, n, f in self.all_tables():
            if n == 0 or f in seen:
                continue
            seen.add(f)
            dom = self.dom(f)
            for i in range(1, n + 1):
                for p in self.base.mors_into(dom[i - 1]):
                    yield (f, i, p)

    def required_post_keys(self) -> Iterator[tuple[str, str]]:
        seen = set()
        for _, _, f in self.all_tables():
            if f in seen:
                continue
            seen.add(f)
            for q in self.base.mors_out_of(self.cod(f)):
                yield (q, f)

    def sub_pairs(self, case: tuple[int, str, int, str]) -> Iterator[tuple[str, int, str]]:
        n, x, k, y = case
        for g in self.multimaps(x, n):
            if n == 1 and self.is_tight(g):
                continue  # shared id: substitution into it routes through post-action
            dom = self.dom(g)
            for i in range(1, n + 1):
                for key in self.mapset_keys(y, k):
                    if key[1] != dom[i - 1]:
                        continue
                    for f in self.mapset(y, k, *key):
                        if k == 1 and y == LOOSE and self.is_tight(f):
                            continue  # shared id: routed through pre-action
                        yield g, i, f

    def required_sub_keys(self) -> Iterator[tuple[str, int, str]]:
        for case in sorted(STORED_SKEW_CASES):
            for g, i, f in self.sub_pairs(case):
                yield (g, i, f)

    def check_structure(self) -> None:
        self.base.check_structure()
        idx = self._index
        for n, table in itertools.chain(self.tight.items(), self.loose.items()):
            for (dom, cod), _ in table.items():
                if len(dom) != n:
                    raise MalformedTable(f"{self.name}: arity-{n} key with {len(dom)} inputs")
                for a in dom + (cod,):
                    if a not in self.base.objects:
                        raise MalformedTable(f"{self.name}: unknown object {a} in key")
        for f, q in self.j.items():
            if f not in idx or q not in idx:
                raise DanglingId(f"{self.name}: j entry {f} -> {q} dangles")
            n, dom, cod, _ = self.info(f)
            if not self.is_tight(f) or n not in (1, 2):
                raise MalformedTable(f"{self.name}: j keyed by non-tight or bad-arity id {f}")
            if not self.is_loose(q):
                raise TypingViolation(f"{self.name}: j({f}) = {q} is not loose")
        for n in (1, 2):
            for f in self.multimaps(TIGHT, n):
                if f not in self.j:
                    raise MalformedTable(f"{self.name}: j not total at {f}")
        for (f, i, p), g in self.pre.items():
            if f not in idx or g not in idx:
                raise DanglingId(f"{self.name}: pre entry ({f},{i},{p}) dangles")
            if p not in self.base._span or self.base.cod(p) != self.dom(f)[i - 1]:
                raise MalformedTable(f"{self.name}: pre key ({f},{i},{p}) not composable")
        for (q, f), g in self.post.items():
            if f not in idx or g not in idx:
                raise DanglingId(f"{self.name}: post entry ({q},{f}) dangles")
            if q not in self.base._span or self.base.dom(q) != self.cod(f):
                raise MalformedTable(f"{self.name}: post key ({q},{f}) not composable")
        for (g, i, f), h in self.sub.items():
            if g not in idx or f not in idx or h not in idx:
                raise DanglingId(f"{self.name}: sub entry ({g},{i},{f}) dangles")
            case = self.sub_case(g, i, f)
            if case is None:
                raise MalformedTable(f"{self.name}: sub key ({g},{i},{f}) outside stored cases")
            if self.cod(f) != self.dom(g)[i - 1]:
                raise MalformedTable(f"{self.name}: sub key ({g},{i},{f}) not composable")
            want = sub_flavour(case[1], i, case[3])
            have = self.info(h)[3]
            if want not in have:
                raise TypingViolation(
                    f"{self.name}: sub ({g},{i},{f}) lands in the wrong tight/loose table")
        for key in self.required_pre_keys():
            if key not in self.pre:
                raise MalformedTable(f"{self.name}: pre table not total at {key}")
        for key in self.required_post_keys():
            if key not in self.post:
                raise MalformedTable(f"{self.name}: post table not total at {key}")
        for key in self.required_sub_keys():
            if key not in self.sub:
                raise MalformedTable(f"{self.name}: sub table not total at {key}")


def expected_skew_sub_type(m: ShortSkewMulticategory, g: str, i: int, f: str,
                           case: tuple[int, str, int, str]) -> tuple[int, tuple[str, ...], str, str]:
    n, x, k, y = case
    gdom, gcod = m.dom(g), m.cod(g)
    dom = gdom[:i - 1] + m.dom(f) + gdom[i:]
    return (n + k - 1, dom, gcod, sub_flavour(x, i, y))


# --------------------------------------------------------------------------
# validator
# --------------------------------------------------------------------------

def _typing_checks(m: ShortSkewMulticategory) -> Iterator[Check]:
    def pre_t(f, i, p):
        def thunk():
            g = m.pre[(f, i, p)]
            n, dom, cod, fl = m.info(f)
            want = (n, dom[:i - 1] + (m.base.dom(p),) + dom[i:], cod)
            have = m.info(g)
            return (str((have[0], have[1], have[2], fl <= have[3])), str(want + (True,)))
        return thunk

    def post_t(q, f):
        def thunk():
            g = m.post[(q, f)]
            n, dom, _, fl = m.info(f)
            have = m.info(g)
            return (str((have[0], have[1], have[2], fl <= have[3])),
                    str((n, dom, m.base.cod(q), True)))
        return thunk

    def sub_t(g, i, f):
        def thunk():
            h = m.sub[(g, i, f)]
            case = m.sub_case(g, i, f)
            n, dom, cod, flavour = expected_skew_sub_type(m, g, i, f, case)
            have = m.info(h)
            return (str((have[0], have[1], have[2], flavour in have[3])),
                    str((n, dom, cod, True)))
        return thunk

    for (f, i, p) in sorted(m.pre):
        yield ("typing", ("pre", f, str(i), p), pre_t(f, i, p))
    for (q, f) in sorted(m.post):
        yield ("typing", ("post", q, f), post_t(q, f))
    for (g, i, f) in sorted(m.sub):
        yield ("typing", ("sub", g, str(i), f), sub_t(g, i, f))


def _identity_checks(m: ShortSkewMulticategory) -> Iterator[Check]:
    seen = set()
    for _, n, f in m.all_tables():
        if f in seen:
            continue
        seen.add(f)
        _, dom, cod, _ = m.info(f)
        yield ("identity", ("post", cod, f),
               lambda f=f, cod=cod: (m.safe_post(m.base.identity(cod), f), f))
        for i in range(1, n + 1):
            yield ("identity", ("pre", f, str(i)),
                   lambda f=f, i=i, dom=dom: (m.safe_pre(f, i, m.base.identity(dom[i - 1])), f))


def _profunctor_checks(m: ShortSkewMulticategory) -> Iterator[Check]:
    base = m.base
    seen = set()
    for _, n, f in m.all_tables():
        if f in seen:
            continue
        seen.add(f)
        _, dom, cod, _ = m.info(f)
        for q in base.mors_out_of(cod):
            for q2 in base.mors_out_of(base.cod(q)):
                yield ("profunctor", ("post-post", q2, q, f),
                       lambda q2=q2, q=q, f=f: (m.safe_post(q2, m.safe_post(q, f)),
                                                m.safe_post(base.compose(q2, q), f)))
        for i in range(1, n + 1):
            for p in base.mors_into(dom[i - 1]):
                for p2 in base.mors_into(base.dom(p)):
                    yield ("profunctor", ("pre-pre", f, str(i), p, p2),
                           lambda f=f, i=i, p=p, p2=p2: (
                               m.safe_pre(m.safe_pre(f, i, p), i, p2),
                               m.safe_pre(f, i, base.compose(p, p2))))
            for q in base.mors_out_of(cod):
                yield ("profunctor", ("pre-post", q, f, str(i), p),
                       lambda q=q, f=f, i=i, p=p: (
                           m.safe_post(q, m.safe_pre(f, i, p)),
                           m.safe_pre(m.safe_post(q, f), i, p)))
        for i, jx in itertools.combinations(range(1, n + 1), 2):
            for p in base.mors_into(dom[i - 1]):
                for p2 in base.mors_into(dom[jx - 1]):
                    yield ("profunctor", ("pre-commute", f, str(i), p, str(jx), p2),
                           lambda f=f, i=i, p=p, jx=jx, p2=p2: (
                               m.safe_pre(m.safe_pre(f, i, p), jx, p2),
                               m.safe_pre(m.safe_pre(f, jx, p2), i, p)))


def _j_nat_checks(m: ShortSkewMulticategory) -> Iterator[Check]:
    """The five unary-level naturality conditions for j, plus the derived
    descriptions of j on binary maps and on unary maps via j(1)."""
    base = m.base
    for p in base.morphisms():
        a, b = base.span(p)
        for g in m.multimaps(TIGHT, 2):
            if m.dom(g)[1] == b:
                yield ("j-nat", ("g-pos2", g, p),
                       lambda g=g, p=p: (m.safe_subst(g, 2, m.safe_j(p)), m.safe_pre(g, 2, p)))
            if m.dom(g)[0] == b:
                yield ("j-nat", ("g-pos1", g, p),
                       lambda g=g, p=p: (m.safe_subst(g, 1, m.safe_j(p)),
                                         m.safe_j(m.safe_pre(g, 1, p))))
        for q in base.mors_out_of(b):
            yield ("j-nat", ("post", q, p),
                   lambda q=q, p=p: (m.safe_post(q, m.safe_j(p)),
                                     m.safe_j(base.compose_opt(q, p))))
        for g in m.multimaps(TIGHT, 2):
            if m.cod(g) == a:
                yield ("j-nat", ("into-binary", p, g),
                       lambda p=p, g=g: (m.safe_subst(m.safe_j(p), 1, g),
                                         m.safe_j(m.safe_post(p, g))))
        for key in m.mapset_keys(LOOSE, 0):
            if key[1] != a:
                continue
            for v in m.mapset(LOOSE, 0, *key):
                yield ("j-nat", ("into-nullary", p, v),
                       lambda p=p, v=v: (m.safe_subst(m.safe_j(p), 1, v),
                                         m.safe_post(p, v)))
    for g in m.multimaps(TIGHT, 2):
        a = m.dom(g)[0]
        yield ("j-derived", ("binary", g),
               lambda g=g, a=a: (m.safe_j(g), m.safe_subst(g, 1, m.safe_j(base.identity(a)))))
    for q in base.morphisms():
        a = base.dom(q)
        yield ("j-derived", ("unary", q),
               lambda q=q, a=a: (m.safe_j(q), m.safe_post(q, m.safe_j(base.identity(a)))))


def _naturality_checks(m: ShortSkewMulticategory) -> Iterator[Check]:
    base = m.base
    for case in sorted(STORED_SKEW_CASES):
        n, x, k, y = case
        tag = f"{x}{n}-{y}{k}"
        for g, i, f in m.sub_pairs(case):
            fdom, gdom, gcod = m.dom(f), m.dom(g), m.cod(g)
            for t in range(1, k + 1):
                for p in base.mors_into(fdom[t - 1]):
                    yield ("nat-in-a", (tag, g, str(i), f, str(t), p),
                           lambda g=g, i=i, f=f, t=t, p=p: (
                               m.safe_subst(g, i, m.safe_pre(f, t, p)),
                               m.safe_pre(m.safe_subst(g, i, f), i - 1 + t, p)))
            for jx in range(1, n + 1):
                if jx == i:
                    continue
                pos = jx if jx < i else jx + k - 1
                for p in base.mors_into(gdom[jx - 1]):
                    yield ("nat-in-b", (tag, g, str(i), f, str(jx), p),
                           lambda g=g, i=i, f=f, jx=jx, p=p, pos=pos: (
                               m.safe_subst(m.safe_pre(g, jx, p), i, f),
                               m.safe_pre(m.safe_subst(g, i, f), pos, p)))
            for q in base.mors_out_of(gcod):
                yield ("nat-in-c", (tag, q, g, str(i), f),
                       lambda q=q, g=g, i=i, f=f: (
                           m.safe_post(q, m.safe_subst(g, i, f)),
                           m.safe_subst(m.safe_post(q, g), i, f)))
        for gp in m.multimaps(x, n):
            gpdom = m.dom(gp)
            for i in range(1, n + 1):
                e = gpdom[i - 1]
                for w in base.mors_into(e):
                    xobj = base.dom(w)
                    for key in m.mapset_keys(y, k):
                        if key[1] != xobj:
                            continue
                        for f in m.mapset(y, k, *key):
                            if k == 1 and y == LOOSE and m.is_tight(f) and m.arity(f) == 1:
                                continue
                            yield ("dinat-in-b", (tag, gp, str(i), w, f),
                                   lambda gp=gp, i=i, w=w, f=f: (
                                       m.safe_subst(m.safe_pre(gp, i, w), i, f),
                                       m.safe_subst(gp, i, m.safe_post(w, f))))


def _assoc_checks(m: ShortSkewMulticategory) -> Iterator[Check]:
    """Associativity/interchange cases (a)-(d) with all participants tight
    except the nullary ones."""
    def pool(arity: int) -> list[str]:
        return m.multimaps(LOOSE, 0) if arity == 0 else m.multimaps(TIGHT, arity)

    def line(case: str, gn: int, hn: int) -> Iterator[Check]:
        for f in m.multimaps(TIGHT, 2):
            fdom = m.dom(f)
            for i in (1, 2):
                for g in pool(gn):
                    if m.cod(g) != fdom[i - 1]:
                        continue
                    gdom = m.dom(g)
                    for jx in range(1, gn + 1):
                        for h in pool(hn):
                            if m.cod(h) != gdom[jx - 1]:
                                continue
                            yield (f"assoc-line-{case}", (f, str(i), g, str(jx), h),
                                   lambda f=f, i=i, g=g, jx=jx, h=h: (
                                       m.safe_subst(f, i, m.safe_subst(g, jx, h)),
                                       m.safe_subst(m.safe_subst(f, i, g), jx + i - 1, h)))

    def notline(case: str, gn: int, hn: int) -> Iterator[Check]:
        for f in m.multimaps(TIGHT, 2):
            fdom = m.dom(f)
            for g in pool(gn):
                if m.cod(g) != fdom[0]:
                    continue
                for h in pool(hn):
                    if m.cod(h) != fdom[1]:
                        continue
                    yield (f"assoc-notline-{case}", (f, g, h),
                           lambda f=f, g=g, h=h, gn=gn: (
                               m.safe_subst(m.safe_subst(f, 1, g), gn + 1, h),
                               m.safe_subst(m.safe_subst(f, 2, h), 1, g)))

    yield from line("a", 2, 2)
    yield from line("b", 2, 0)
    yield from notline("a", 2, 2)
    yield from notline("b", 2, 0)
    yield from notline("c", 0, 2)
    yield from notline("d", 0, 0)


def validate_short_skew(m: ShortSkewMulticategory, jobs: int = 1) -> ValidationReport:
    m.check_structure()
    checks = itertools.chain(
        _typing_checks(m), _identity_checks(m), _profunctor_checks(m),
        _j_nat_checks(m), _naturality_checks(m), _assoc_checks(m))
    report = run_checks(m.name, checks, jobs=jobs)
    from .fincat import validate_category
    report.merge_prefixed(validate_category(m.base, jobs=jobs), "base-")
    return report.finish()


# --------------------------------------------------------------------------
# embedding of plain structures
# --------------------------------------------------------------------------

def embed_plain(m: ShortMulticategory) -> ShortSkewMulticategory:
    """View a short multicategory as a short skew multicategory where every
    multimap is both tight and loose and j is the identity."""
    tight = {n: dict(m.maps.get(n, {})) for n in (2, 3, 4)}
    loose = {
        0: dict(m.maps.get(0, {})),
        1: {((a,), b): fs for (a, b), fs in m.base.homs.items()},
        2: dict(m.maps.get(2, {})),
    }
    j = {f: f for f in m.base.morphisms()}
    j.update({f: f for f in m.multimaps(2)})
    return ShortSkewMulticategory(
        name=f"{m.name}.skew", base=m.base, tight=tight, loose=loose, j=j,
        pre=dict(m.pre), post=dict(m.post), sub=dict(m.sub))


# --------------------------------------------------------------------------
# morphisms of short skew multicategories
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class SkewMultiMorphism:
    """A morphism of short skew multicategories: a functor plus tight
    families (arities 2-4) and loose families (arities 0-2), commuting with
    substitution and j."""
    name: str
    source: ShortSkewMulticategory
    target: ShortSkewMulticategory
    functor: FinFunctor
    tight_maps: dict[int, dict[str, str]]   # arities 2, 3, 4
    loose_maps: dict[int, dict[str, str]]   # arities 0, 1, 2

    def apply(self, f: str, flavour: Optional[str] = None) -> str:
        src = self.source
        n = src.arity(f)
        if n == 1 and src.is_tight(f) and flavour != LOOSE:
            return self.functor.on_mor(f)
        table = self.tight_maps if (flavour == TIGHT or
                                    (flavour is None and src.is_tight(f) and n >= 2)) else self.loose_maps
        try:
            return table[n][f]
        except KeyError:
            raise MalformedTable(f"{self.name}: no image for {f}")

    def safe_apply(self, f: Optional[str], flavour: Optional[str] = None) -> Optional[str]:
        if f is None or f not in self.source._index:
            return None
        src = self.source
        n = src.arity(f)
        if n == 1 and src.is_tight(f) and flavour != LOOSE:
            return self.functor.mor_map.get(f)
        if flavour == TIGHT or (flavour is None and src.is_tight(f) and n >= 2):
            return self.tight_maps.get(n, {}).get(f)
        return self.loose_maps.get(n, {}).get(f)


def validate_skew_multi_morphism(F: SkewMultiMorphism, jobs: int = 1) -> ValidationReport:
    src, tgt, fun = F.source, F.target, F.functor
    base_report = validate_functor(fun, jobs=jobs)
    checks: list[Check] = []

    table_of = [(TIGHT, n) for n in (2, 3, 4)] + [(LOOSE, n) for n in (0, 1, 2)]
    for flavour, n in table_of:
        for f in src.multimaps(flavour, n):
            if n == 1 and flavour == LOOSE and src.is_tight(f):
                img = F.safe_apply(f)  # shared id under j = identity
            else:
                img = F.safe_apply(f, flavour)
            if img is None:
                raise MalformedTable(f"{F.name}: no image for {flavour}{n} multimap {f}")
            _, dom, cod, _ = src.info(f)
            want = (n, tuple(fun.on_obj(a) for a in dom), fun.on_obj(cod))
            checks.append(("morphism-typing", (flavour + str(n), f),
                           lambda img=img, want=want, flavour=flavour: (
                               str((tgt.info(img)[0], tgt.info(img)[1], tgt.info(img)[2],
                                    flavour in tgt.info(img)[3] or tgt.is_tight(img))),
                               str(want + (True,)))))

    seen = set()
    for flavour, n, f in src.all_tables():
        if f in seen:
            continue
        seen.add(f)
        _, dom, cod, _ = src.info(f)
        for q in src.base.mors_out_of(cod):
            checks.append(("morphism-nat", ("post", q, f),
                           lambda q=q, f=f: (F.safe_apply(src.safe_post(q, f)),
                                             tgt.safe_post(fun.mor_map.get(q), F.safe_apply(f)))))
        for i in range(1, n + 1):
            for p in src.base.mors_into(dom[i - 1]):
                checks.append(("morphism-nat", ("pre", f, str(i), p),
                               lambda f=f, i=i, p=p: (F.safe_apply(src.safe_pre(f, i, p)),
                                                      tgt.safe_pre(F.safe_apply(f), i, fun.mor_map.get(p)))))

    for case in sorted(STORED_SKEW_CASES):
        for g, i, f in src.sub_pairs(case):
            checks.append(("morphism-sub", (g, str(i), f),
                           lambda g=g, i=i, f=f: (F.safe_apply(src.safe_subst(g, i, f)),
                                                  tgt.safe_subst(F.safe_apply(g), i, F.safe_apply(f)))))

    for f in sorted(src.j):
        checks.append(("morphism-j", (f,),
                       lambda f=f: (F.safe_apply(src.safe_j(f), LOOSE),
                                    tgt.safe_j(F.safe_apply(f)))))

    report = run_checks(F.name, checks, jobs=jobs)
    report.merge(base_report)
    return report.finish()


def embed_multi_morphism(F: MultiMorphism,
                         src: ShortSkewMulticategory,
                         tgt: ShortSkewMulticategory) -> SkewMultiMorphism:
    """View a plain morphism as a skew one between embedded structures."""
    loose1 = {f: F.functor.mor_map[f] for f in F.source.base.morphisms()}
    return SkewMultiMorphism(
        f"{F.name}.skew", src, tgt, F.functor,
        tight_maps={n: dict(F.maps.get(n, {})) for n in (2, 3, 4)},
        loose_maps={0: dict(F.maps.get(0, {})), 1: loose1, 2: dict(F.maps.get(2, {}))})


def identity_skew_morphism(m: ShortSkewMulticategory) -> SkewMultiMorphism:
    from .fincat import identity_functor
    return SkewMultiMorphism(
        f"id[{m.name}]", m, m, identity_functor(m.base),
        tight_maps={n: {f: f for f in m.multimaps(TIGHT, n)} for n in (2, 3, 4)},
        loose_maps={n: {f: f for f in m.multimaps(LOOSE, n)} for n in (0, 1, 2)})
