"""Short multicategories as explicit tables, with the full axiom validator.

A structure stores multimap sets for arities 0 to 4 (the arity-1 table is
the base category's hom-sets), unary pre/post action tables, and the
substitution tables for exactly these cases:

    binary into binary      (outer 2, inner 2, positions 1-2)
    binary into ternary     (outer 3, inner 2, positions 1-3)
    ternary into binary     (outer 2, inner 3, positions 1-2)
    nullary into binary     (outer 2, inner 0, positions 1-2)
    nullary into ternary    (outer 3, inner 0, positions 1-3)

Substituting a unary map routes through the pre-action tables, and
substituting into a unary map routes through the post-action tables, so
`subst` is total on everything a short multicategory provides.

Law checks compare identifiers and never raise on a mutated (wrongly
typed) table value; a lookup that becomes impossible counts as a failed
instance.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterator, Optional

from .errors import DanglingId, MalformedTable, UnsupportedSubstitution
from .fincat import FinCategory, FinFunctor, validate_functor
from .report import Check, ValidationReport, run_checks

Key = tuple[tuple[str, ...], str]  # (domain tuple, codomain)

# (outer arity, inner arity) cases with stored tables.
STORED_CASES = frozenset({(2, 2), (3, 2), (2, 3), (2, 0), (3, 0)})


@dataclass(frozen=True)
class ShortMulticategory:
    name: str
    base: FinCategory
    maps: dict[int, dict[Key, tuple[str, ...]]]   # arities 0,2,3,4; arity 1 mirrors base.homs
    pre: dict[tuple[str, int, str], str]          # (f, i, p) -> f o_i p, arity(f) >= 2
    post: dict[tuple[str, str], str]              # (q, f) -> q o f, arity(f) != 1
    sub: dict[tuple[str, int, str], str]          # (g, i, f) -> g o_i f, stored cases
    _index: dict[str, tuple[int, tuple[str, ...], str]] = field(
        default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        index: dict[str, tuple[int, tuple[str, ...], str]] = {}
        for f in self.base.morphisms():
            a, b = self.base.span(f)
            index[f] = (1, (a,), b)
        maps = {}
        for n, table in self.maps.items():
            if n == 1:
                # the arity-1 table is the base hom-sets; a stored copy must agree
                for (dom, cod), fs in table.items():
                    if tuple(sorted(fs)) != self.base.hom(dom[0], cod):
                        raise MalformedTable(
                            f"{self.name}: arity-1 table disagrees with base homs at {dom[0]},{cod}")
                continue
            maps[n] = {}
            for (dom, cod), fs in table.items():
                maps[n][(tuple(dom), cod)] = tuple(sorted(fs))
                for f in fs:
                    if f in index:
                        raise MalformedTable(f"{self.name}: multimap id {f} declared twice")
                    index[f] = (n, tuple(dom), cod)
        object.__setattr__(self, "maps", maps)
        object.__setattr__(self, "_index", index)

    # -- typed lookups ------------------------------------------------------
    def info(self, f: str) -> tuple[int, tuple[str, ...], str]:
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

    def mapset(self, n: int, dom: tuple[str, ...], cod: str) -> tuple[str, ...]:
        if n == 1:
            return self.base.hom(dom[0], cod)
        return self.maps.get(n, {}).get((tuple(dom), cod), ())

    def multimaps(self, n: int) -> list[str]:
        if n == 1:
            return self.base.morphisms()
        return sorted(f for f, (k, _, _) in self._index.items() if k == n)

    def mapset_keys(self, n: int) -> list[Key]:
        if n == 1:
            return sorted(((a,), b) for (a, b) in self.base.homs)
        return sorted(self.maps.get(n, {}))

    # -- actions and substitution (strict: raise on missing) ----------------
    def act_post(self, q: str, f: str) -> str:
        if self.arity(f) == 1:
            return self.base.compose(q, f)
        try:
            return self.post[(q, f)]
        except KeyError:
            raise MalformedTable(f"{self.name}: missing post entry ({q}, {f})")

    def act_pre(self, f: str, i: int, p: str) -> str:
        if self.arity(f) == 1:
            if i != 1:
                raise UnsupportedSubstitution(f"{self.name}: unary map has one input")
            return self.base.compose(f, p)
        try:
            return self.pre[(f, i, p)]
        except KeyError:
            raise MalformedTable(f"{self.name}: missing pre entry ({f}, {i}, {p})")

    def subst(self, g: str, i: int, f: str) -> str:
        n, m = self.arity(g), self.arity(f)
        if m == 1:
            return self.act_pre(g, i, f)
        if n == 1:
            if i != 1:
                raise UnsupportedSubstitution(f"{self.name}: unary map has one input")
            return self.act_post(g, f)
        if (n, m) not in STORED_CASES:
            raise UnsupportedSubstitution(
                f"{self.name}: substitution case outer={n} inner={m} is not stored")
        try:
            return self.sub[(g, i, f)]
        except KeyError:
            raise MalformedTable(f"{self.name}: missing sub entry ({g}, {i}, {f})")

    # -- safe variants for law checking --------------------------------------
    def safe_post(self, q: Optional[str], f: Optional[str]) -> Optional[str]:
        if q is None or f is None:
            return None
        if f not in self._index or q not in self._index:
            return None
        if self.arity(f) == 1:
            return self.base.compose_opt(q, f)
        return self.post.get((q, f))

    def safe_pre(self, f: Optional[str], i: int, p: Optional[str]) -> Optional[str]:
        if f is None or p is None or f not in self._index:
            return None
        if self.arity(f) == 1:
            return self.base.compose_opt(f, p) if i == 1 else None
        return self.pre.get((f, i, p))

    def safe_subst(self, g: Optional[str], i: int, f: Optional[str]) -> Optional[str]:
        if g is None or f is None or g not in self._index or f not in self._index:
            return None
        n, m = self.arity(g), self.arity(f)
        if m == 1:
            return self.safe_pre(g, i, f)
        if n == 1:
            return self.safe_post(g, f) if i == 1 else None
        return self.sub.get((g, i, f))

    # -- structural totality --------------------------------------------------
    def required_pre_keys(self) -> Iterator[tuple[str, int, str]]:
        for n in (2, 3, 4):
            for f in self.multimaps(n):
                dom = self.dom(f)
                for i in range(1, n + 1):
                    for p in self.base.mors_into(dom[i - 1]):
                        yield (f, i, p)

    def required_post_keys(self) -> Iterator[tuple[str, str]]:
        for n in (0, 2, 3, 4):
            for f in self.multimaps(n):
                for q in self.base.mors_out_of(self.cod(f)):
                    yield (q, f)

    def required_sub_keys(self) -> Iterator[tuple[str, int, str]]:
        for (n, m) in sorted(STORED_CASES):
            for g in self.multimaps(n):
                dom = self.dom(g)
                for i in range(1, n + 1):
                    for key in self.mapset_keys(m):
                        if key[1] != dom[i - 1]:
                            continue
                        for f in self.mapset(m, *key):
                            yield (g, i, f)

    def check_structure(self) -> None:
        self.base.check_structure()
        idx = self._index
        for n, table in self.maps.items():
            for (dom, cod), _ in table.items():
                if len(dom) != n:
                    raise MalformedTable(f"{self.name}: arity-{n} key with {len(dom)} inputs")
                for a in dom + (cod,):
                    if a not in self.base.objects:
                        raise MalformedTable(f"{self.name}: unknown object {a} in multimap key")
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
            if (self.arity(g), self.arity(f)) not in STORED_CASES:
                raise MalformedTable(f"{self.name}: sub key ({g},{i},{f}) outside stored cases")
            if self.cod(f) != self.dom(g)[i - 1]:
                raise MalformedTable(f"{self.name}: sub key ({g},{i},{f}) not composable")
        for key in self.required_pre_keys():
            if key not in self.pre:
                raise MalformedTable(f"{self.name}: pre table not total at {key}")
        for key in self.required_post_keys():
            if key not in self.post:
                raise MalformedTable(f"{self.name}: post table not total at {key}")
        for key in self.required_sub_keys():
            if key not in self.sub:
                raise MalformedTable(f"{self.name}: sub table not total at {key}")


def expected_sub_type(m: ShortMulticategory, g: str, i: int, f: str) -> tuple[int, tuple[str, ...], str]:
    n, gdom, gcod = m.info(g)
    k, fdom, _ = m.info(f)
    dom = gdom[:i - 1] + fdom + gdom[i:]
    return (n + k - 1, dom, gcod)


# --------------------------------------------------------------------------
# validator
# --------------------------------------------------------------------------

def _typing_checks(m: ShortMulticategory) -> Iterator[Check]:
    def pre_t(f, i, p):
        def thunk():
            g = m.pre[(f, i, p)]
            n, dom, cod = m.info(f)
            want = (n, dom[:i - 1] + (m.base.dom(p),) + dom[i:], cod)
            return (str(m.info(g)), str(want))
        return thunk

    def post_t(q, f):
        def thunk():
            g = m.post[(q, f)]
            n, dom, _ = m.info(f)
            return (str(m.info(g)), str((n, dom, m.base.cod(q))))
        return thunk

    def sub_t(g, i, f):
        def thunk():
            h = m.sub[(g, i, f)]
            return (str(m.info(h)), str(expected_sub_type(m, g, i, f)))
        return thunk

    for (f, i, p) in sorted(m.pre):
        yield ("typing", ("pre", f, str(i), p), pre_t(f, i, p))
    for (q, f) in sorted(m.post):
        yield ("typing", ("post", q, f), post_t(q, f))
    for (g, i, f) in sorted(m.sub):
        yield ("typing", ("sub", g, str(i), f), sub_t(g, i, f))


def _identity_checks(m: ShortMulticategory) -> Iterator[Check]:
    for n in (0, 2, 3, 4):
        for f in m.multimaps(n):
            _, dom, cod = m.info(f)
            yield ("identity", ("post", cod, f),
                   lambda f=f, cod=cod: (m.safe_post(m.base.identity(cod), f), f))
            for i in range(1, n + 1):
                yield ("identity", ("pre", f, str(i)),
                       lambda f=f, i=i, dom=dom: (m.safe_pre(f, i, m.base.identity(dom[i - 1])), f))


def _profunctor_checks(m: ShortMulticategory) -> Iterator[Check]:
    base = m.base
    for n in (0, 2, 3, 4):
        for f in m.multimaps(n):
            _, dom, cod = m.info(f)
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
            for i, j in itertools.combinations(range(1, n + 1), 2):
                for p in base.mors_into(dom[i - 1]):
                    for p2 in base.mors_into(dom[j - 1]):
                        yield ("profunctor", ("pre-commute", f, str(i), p, str(j), p2),
                               lambda f=f, i=i, p=p, j=j, p2=p2: (
                                   m.safe_pre(m.safe_pre(f, i, p), j, p2),
                                   m.safe_pre(m.safe_pre(f, j, p2), i, p)))


def _sub_pairs(m: ShortMulticategory, n: int, k: int) -> Iterator[tuple[str, int, str]]:
    """All composable (g, i, f) with arity(g)=n, arity(f)=k."""
    for g in m.multimaps(n):
        dom = m.dom(g)
        for i in range(1, n + 1):
            for key in m.mapset_keys(k):
                if key[1] != dom[i - 1]:
                    continue
                for f in m.mapset(k, *key):
                    yield g, i, f


def _naturality_checks(m: ShortMulticategory) -> Iterator[Check]:
    base = m.base
    for (n, k) in sorted(STORED_CASES):
        for g, i, f in _sub_pairs(m, n, k):
            fdom = m.dom(f)
            gdom = m.dom(g)
            gcod = m.cod(g)
            # naturality in the inner domain objects
            for t in range(1, k + 1):
                for p in base.mors_into(fdom[t - 1]):
                    yield ("nat-in-a", (g, str(i), f, str(t), p),
                           lambda g=g, i=i, f=f, t=t, p=p: (
                               m.safe_subst(g, i, m.safe_pre(f, t, p)),
                               m.safe_pre(m.safe_subst(g, i, f), i - 1 + t, p)))
            # naturality in the outer, non-substituted domain objects
            for j in range(1, n + 1):
                if j == i:
                    continue
                pos = j if j < i else j + k - 1
                for p in base.mors_into(gdom[j - 1]):
                    yield ("nat-in-b", (g, str(i), f, str(j), p),
                           lambda g=g, i=i, f=f, j=j, p=p, pos=pos: (
                               m.safe_subst(m.safe_pre(g, j, p), i, f),
                               m.safe_pre(m.safe_subst(g, i, f), pos, p)))
            # naturality in the codomain
            for q in base.mors_out_of(gcod):
                yield ("nat-in-c", (q, g, str(i), f),
                       lambda q=q, g=g, i=i, f=f: (
                           m.safe_post(q, m.safe_subst(g, i, f)),
                           m.safe_subst(m.safe_post(q, g), i, f)))
        # dinaturality in the substituted variable: for w : x -> e,
        # (g' o_i w) o_i f  =  g' o_i (w o f)  with g' having e at slot i.
        for gp in m.multimaps(n):
            gpdom = m.dom(gp)
            for i in range(1, n + 1):
                e = gpdom[i - 1]
                for w in base.mors_into(e):
                    x = base.dom(w)
                    for key in m.mapset_keys(k):
                        if key[1] != x:
                            continue
                        for f in m.mapset(k, *key):
                            yield ("dinat-in-b", (gp, str(i), w, f),
                                   lambda gp=gp, i=i, w=w, f=f: (
                                       m.safe_subst(m.safe_pre(gp, i, w), i, f),
                                       m.safe_subst(gp, i, m.safe_post(w, f))))


def _assoc_checks(m: ShortMulticategory) -> Iterator[Check]:
    """Associativity family: f o_i (g o_j h) = (f o_i g) o_{j+i-1} h, and the
    interchange family: (f o_1 g) o_{n+1} h = (f o_2 h) o_1 g, in the cases
    (a) through (d); f is always binary."""
    def line(case: str, gn: int, hn: int) -> Iterator[Check]:
        for f in m.multimaps(2):
            fdom = m.dom(f)
            for i in (1, 2):
                for gkey in m.mapset_keys(gn):
                    if gkey[1] != fdom[i - 1]:
                        continue
                    for g in m.mapset(gn, *gkey):
                        gdom = m.dom(g)
                        for j in range(1, gn + 1):
                            for hkey in m.mapset_keys(hn):
                                if hkey[1] != gdom[j - 1]:
                                    continue
                                for h in m.mapset(hn, *hkey):
                                    yield (f"assoc-line-{case}", (f, str(i), g, str(j), h),
                                           lambda f=f, i=i, g=g, j=j, h=h: (
                                               m.safe_subst(f, i, m.safe_subst(g, j, h)),
                                               m.safe_subst(m.safe_subst(f, i, g), j + i - 1, h)))

    def notline(case: str, gn: int, hn: int) -> Iterator[Check]:
        for f in m.multimaps(2):
            fdom = m.dom(f)
            for gkey in m.mapset_keys(gn):
                if gkey[1] != fdom[0]:
                    continue
                for g in m.mapset(gn, *gkey):
                    for hkey in m.mapset_keys(hn):
                        if hkey[1] != fdom[1]:
                            continue
                        for h in m.mapset(hn, *hkey):
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


def validate_short_multicategory(m: ShortMulticategory, jobs: int = 1) -> ValidationReport:
    m.check_structure()
    checks = itertools.chain(
        _typing_checks(m), _identity_checks(m), _profunctor_checks(m),
        _naturality_checks(m), _assoc_checks(m))
    report = run_checks(m.name, checks, jobs=jobs)
    from .fincat import validate_category
    report.merge_prefixed(validate_category(m.base, jobs=jobs), "base-")
    return report.finish()


# --------------------------------------------------------------------------
# morphisms of short multicategories
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class MultiMorphism:
    """A morphism of short multicategories: a functor on bases plus natural
    families for arities 0, 2, 3, 4 (arity 1 is the functor action)."""
    name: str
    source: ShortMulticategory
    target: ShortMulticategory
    functor: FinFunctor
    maps: dict[int, dict[str, str]]   # arities 0, 2, 3, 4

    def apply(self, f: str) -> str:
        n = self.source.arity(f)
        if n == 1:
            return self.functor.on_mor(f)
        try:
            return self.maps[n][f]
        except KeyError:
            raise MalformedTable(f"{self.name}: no image for multimap {f}")

    def safe_apply(self, f: Optional[str]) -> Optional[str]:
        if f is None or f not in self.source._index:
            return None
        n = self.source.arity(f)
        if n == 1:
            return self.functor.mor_map.get(f)
        return self.maps.get(n, {}).get(f)


def validate_multi_morphism(F: MultiMorphism, jobs: int = 1) -> ValidationReport:
    """Check table totality, typing, naturality in every variable, and
    commutation with every stored substitution."""
    src, tgt, fun = F.source, F.target, F.functor
    base_report = validate_functor(fun, jobs=jobs)
    checks: list[Check] = []

    for n in (0, 2, 3, 4):
        for f in src.multimaps(n):
            if F.maps.get(n, {}).get(f) is None:
                raise MalformedTable(f"{F.name}: no image for arity-{n} multimap {f}")
            _, dom, cod = src.info(f)
            want = (n, tuple(fun.on_obj(a) for a in dom), fun.on_obj(cod))
            checks.append(("morphism-typing", (f,),
                           lambda f=f, want=want: (str(tgt.info(F.apply(f))), str(want))))

    # naturality: F(q o f) = F(q) o F(f) and F(f o_i p) = F(f) o_i F(p)
    for n in (0, 2, 3, 4):
        for f in src.multimaps(n):
            _, dom, cod = src.info(f)
            for q in src.base.mors_out_of(cod):
                checks.append(("morphism-nat", ("post", q, f),
                               lambda q=q, f=f: (F.safe_apply(src.safe_post(q, f)),
                                                 tgt.safe_post(fun.mor_map.get(q), F.safe_apply(f)))))
            for i in range(1, n + 1):
                for p in src.base.mors_into(dom[i - 1]):
                    checks.append(("morphism-nat", ("pre", f, str(i), p),
                                   lambda f=f, i=i, p=p: (F.safe_apply(src.safe_pre(f, i, p)),
                                                          tgt.safe_pre(F.safe_apply(f), i, fun.mor_map.get(p)))))

    for (n, k) in sorted(STORED_CASES):
        for g, i, f in _sub_pairs(src, n, k):
            checks.append(("morphism-sub", (g, str(i), f),
                           lambda g=g, i=i, f=f: (F.safe_apply(src.safe_subst(g, i, f)),
                                                  tgt.safe_subst(F.safe_apply(g), i, F.safe_apply(f)))))

    report = run_checks(F.name, checks, jobs=jobs)
    report.merge(base_report)
    return report.finish()


def identity_multi_morphism(m: ShortMulticategory) -> MultiMorphism:
    from .fincat import identity_functor
    return MultiMorphism(
        f"id[{m.name}]", m, m, identity_functor(m.base),
        {n: {f: f for f in m.multimaps(n)} for n in (0, 2, 3, 4)})
