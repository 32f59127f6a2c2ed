"""Induced multimap tables: from a skew monoidal category, the short (skew)
multicategory whose n-ary maps out of (a1,...,an) are morphisms out of the
left-bracketed product (...(a1 a2)...)an, with loose maps carrying a leading
unit factor; and from a skew closed category, the closed short skew
multicategory whose maps are morphisms into iterated homs.

Substitutions are computed from the tensor (or hom) structure morphisms and
then tabulated, so the derived structures run through the ordinary table
validators.
"""
from __future__ import annotations

import itertools
from functools import reduce
from typing import Optional

from .errors import MalformedTable
from .shortmulti import ShortMulticategory
from .shortskew import LOOSE, TIGHT, ShortSkewMulticategory, sub_flavour
from .skewmon import SkewClosedCategory, SkewMonCategory


def _wrap(flavour: str, n: int, dom: tuple[str, ...], cod: str, f: str) -> str:
    return f"{flavour}{n}({','.join(dom)};{cod})#{f}"


class _Bracketer:
    """Left-bracketed tensor calculus over a skew monoidal category."""

    def __init__(self, c: SkewMonCategory):
        self.c = c
        self.base = c.base

    def lbr(self, objs: tuple[str, ...]) -> str:
        if not objs:
            raise MalformedTable("empty left-bracketed product")
        return reduce(self.c.t, objs)

    def lbr_mor(self, mors: list[str]) -> str:
        def pair(f, g):
            h = self.c.tm(f, g)
            if h is None:
                raise MalformedTable("tensor of morphisms undefined")
            return h
        return reduce(pair, mors)

    def slot_mor(self, objs: tuple[str, ...], k: int, p: str) -> str:
        """Identity on the left-bracketed product with p in slot k (1-based)."""
        mors = [self.base.identity(o) for o in objs]
        mors[k - 1] = p
        return self.lbr_mor(mors)

    def kappa(self, x: str, objs: tuple[str, ...]) -> str:
        """The canonical ((x a1)...am) -> x ((a1 a2)...am) built from alpha."""
        if len(objs) == 1:
            return self.base.identity(self.c.t(x, objs[0]))
        prev = self.kappa(x, objs[:-1])
        step = self.c.tm_left(prev, objs[-1])
        return self.base.compose(self.c.alpha[(x, self.lbr(objs[:-1]), objs[-1])], step)

    def gamma(self, prefix: tuple[str, ...], fm: str, fdom: tuple[str, ...],
              loose_inner: bool, target: str) -> str:
        """lbr(prefix + fdom) -> lbr(prefix + (target,)) applying the inner
        map fm under a left context; loose inner maps carry a leading unit
        that is inserted with rho."""
        c, base = self.c, self.base
        x = self.lbr(prefix)
        if not loose_inner:
            k = self.kappa(x, fdom)
            return base.compose(c.tm_right(x, fm), k)
        ins = self.lbr_mor([c.rho[x]] + [base.identity(o) for o in fdom])
        k = self.kappa(x, (c.unit,) + fdom)
        return base.compose(c.tm_right(x, fm), base.compose(k, ins))


def _induced_tables(br: _Bracketer, flavours: dict[str, tuple[int, ...]]):
    """Tables, underlying-morphism map, and reverse wrap lookup."""
    c, base = br.c, br.base
    tables = {TIGHT: {}, LOOSE: {}}
    under: dict[str, str] = {}
    wrap_of: dict[tuple, str] = {}
    for flavour, arities in flavours.items():
        for n in arities:
            tables[flavour][n] = {}
            for dom in itertools.product(base.objects, repeat=n):
                for cod in base.objects:
                    prod = (c.unit,) + dom if flavour == LOOSE else dom
                    fs = []
                    for f in base.hom(br.lbr(prod), cod):
                        if flavour == TIGHT and n == 1:
                            w = f
                        else:
                            w = _wrap(flavour, n, dom, cod, f)
                        fs.append(w)
                        under[w] = f
                        wrap_of[(flavour, n, dom, cod, f)] = w
                    if fs and not (flavour == TIGHT and n == 1):
                        tables[flavour][n][(dom, cod)] = tuple(sorted(fs))
    return tables, under, wrap_of


def induce_short_skew(c: SkewMonCategory, name: Optional[str] = None) -> ShortSkewMulticategory:
    """The short skew multicategory of a skew monoidal category: tight maps
    out of left-bracketed products, loose maps with a leading unit factor,
    j given by the left unit map."""
    br = _Bracketer(c)
    base = c.base
    name = name or (c.name + ".induced")
    tables, under, wrap_of = _induced_tables(
        br, {TIGHT: (1, 2, 3, 4), LOOSE: (0, 1, 2)})

    def rewrap(flavour: str, n: int, dom: tuple[str, ...], cod: str, f: str) -> str:
        try:
            return wrap_of[(flavour, n, dom, cod, f)]
        except KeyError:
            raise MalformedTable(f"{name}: induced map {f} missing from {flavour}{n}{dom};{cod}")

    skeleton = ShortSkewMulticategory(
        name, base, {n: tables[TIGHT][n] for n in (2, 3, 4)},
        {n: tables[LOOSE][n] for n in (0, 1, 2)},
        j={}, pre={}, post={}, sub={})

    j: dict[str, str] = {}
    for n in (1, 2):
        for f in skeleton.multimaps(TIGHT, n):
            dom, cod = skeleton.dom(f), skeleton.cod(f)
            lam_slot = br.lbr_mor([c.lam[dom[0]]] + [base.identity(o) for o in dom[1:]])
            j[f] = rewrap(LOOSE, n, dom, cod, base.compose(under[f], lam_slot))

    skeleton = ShortSkewMulticategory(
        name, base, {n: tables[TIGHT][n] for n in (2, 3, 4)},
        {n: tables[LOOSE][n] for n in (0, 1, 2)},
        j=j, pre={}, post={}, sub={})

    def front(f: str) -> tuple[str, ...]:
        return (c.unit,) if skeleton.is_loose(f) and not skeleton.is_tight(f) else ()

    pre = {}
    for (f, i, p) in skeleton.required_pre_keys():
        n, dom, cod, fl = skeleton.info(f)
        flavour = LOOSE if LOOSE in fl else TIGHT
        full = front(f) + dom
        slot = i + len(front(f))
        newdom = dom[:i - 1] + (base.dom(p),) + dom[i:]
        pre[(f, i, p)] = rewrap(flavour, n, newdom, cod,
                                base.compose(under[f], br.slot_mor(
                                    full[:slot - 1] + (base.dom(p),) + full[slot:], slot, p)))
    post = {}
    for (q, f) in skeleton.required_post_keys():
        n, dom, _, fl = skeleton.info(f)
        flavour = LOOSE if LOOSE in fl else TIGHT
        post[(q, f)] = rewrap(flavour, n, dom, base.cod(q), base.compose(q, under[f]))

    sub = {}
    for (g, i, f) in skeleton.required_sub_keys():
        case = skeleton.sub_case(g, i, f)
        ng, x, nf, y = case
        gdom, gcod = skeleton.dom(g), skeleton.cod(g)
        fdom = skeleton.dom(f)
        blist = ((c.unit,) if x == LOOSE else ()) + gdom
        idx = (1 if x == LOOSE else 0) + i - 1
        prefix, suffix = blist[:idx], blist[idx + 1:]
        if not prefix:
            gamma = under[f]
        else:
            gamma = br.gamma(prefix, under[f], fdom, y == LOOSE, blist[idx])
        ext = gamma
        for sobj in suffix:
            ext = br.c.tm_left(ext, sobj)
        result = base.compose(under[g], ext)
        flavour = sub_flavour(x, i, y)
        newdom = gdom[:i - 1] + fdom + gdom[i:]
        sub[(g, i, f)] = rewrap(flavour, ng + nf - 1, newdom, gcod, result)

    return ShortSkewMulticategory(
        name, base, {n: tables[TIGHT][n] for n in (2, 3, 4)},
        {n: tables[LOOSE][n] for n in (0, 1, 2)}, j, pre, post, sub)


def induce_short_multi(c: SkewMonCategory, name: Optional[str] = None) -> ShortMulticategory:
    """The plain induced structure, available when the left unit map is
    invertible: nullary maps are morphisms out of the unit, substituting a
    nullary map into the leading slot uses the unit inverse."""
    from .skewmon import classify_flavour
    fl = classify_flavour(c)
    if not fl.left_normal:
        raise MalformedTable(f"{c.name}: plain induction needs an invertible left unit map")
    lam_inv = fl.lam_inverses
    br = _Bracketer(c)
    base = c.base
    name = name or (c.name + ".induced")

    maps: dict[int, dict] = {n: {} for n in (0, 2, 3, 4)}
    under: dict[str, str] = {}
    wrap_of: dict[tuple, str] = {}
    for n in (0, 1, 2, 3, 4):
        for dom in itertools.product(base.objects, repeat=n):
            for cod in base.objects:
                prod = br.lbr(dom) if n else c.unit
                fs = []
                for f in base.hom(prod, cod):
                    w = f if n == 1 else _wrap("m", n, dom, cod, f)
                    fs.append(w)
                    under[w] = f
                    wrap_of[(n, dom, cod, f)] = w
                if fs and n != 1:
                    maps[n][(dom, cod)] = tuple(sorted(fs))

    def rewrap(n, dom, cod, f):
        try:
            return wrap_of[(n, dom, cod, f)]
        except KeyError:
            raise MalformedTable(f"{name}: induced map {f} missing from m{n}{dom};{cod}")

    skeleton = ShortMulticategory(name, base, maps, {}, {}, {})
    pre = {}
    for (f, i, p) in skeleton.required_pre_keys():
        n, dom, cod = skeleton.info(f)
        newdom = dom[:i - 1] + (base.dom(p),) + dom[i:]
        pre[(f, i, p)] = rewrap(n, newdom, cod,
                                base.compose(under[f], br.slot_mor(newdom, i, p)))
    post = {}
    for (q, f) in skeleton.required_post_keys():
        n, dom, _ = skeleton.info(f)
        post[(q, f)] = rewrap(n, dom, base.cod(q), base.compose(q, under[f]))

    sub = {}
    for (g, i, f) in skeleton.required_sub_keys():
        ng, gdom, gcod = skeleton.info(g)
        nf, fdom, _ = skeleton.info(f)
        prefix, suffix = gdom[:i - 1], gdom[i:]
        if not prefix:
            if nf == 0:
                # use the unit inverse to grow the leading unit factor
                if not suffix:
                    raise MalformedTable(f"{name}: nullary into unary slot")
                grow = br.lbr_mor([lam_inv[suffix[0]]]
                                  + [base.identity(o) for o in suffix[1:]])
                feed = br.lbr_mor([under[f]] + [base.identity(o) for o in suffix])
                result = base.compose(under[g], base.compose(feed, grow))
                sub[(g, i, f)] = rewrap(ng - 1, suffix, gcod, result)
                continue
            gamma = under[f]
        else:
            gamma = br.gamma(prefix, under[f], fdom, nf == 0, gdom[i - 1])
        ext = gamma
        for sobj in suffix:
            ext = br.c.tm_left(ext, sobj)
        result = base.compose(under[g], ext)
        newdom = gdom[:i - 1] + fdom + gdom[i:]
        sub[(g, i, f)] = rewrap(ng + nf - 1, newdom, gcod, result)

    return ShortMulticategory(name, base, maps, pre, post, sub)


def induced_multimap_sets(c: SkewMonCategory, cap: int = 4):
    """Induced multimap families up to an arity cap.

    With cap <= 4 this returns the short structure (plain when the left unit
    map is invertible, skew otherwise). Larger caps return the raw table
    family, keyed (flavour, arity, domain, codomain), listing the underlying
    morphisms out of the left-bracketed products."""
    if cap <= 4:
        from .skewmon import classify_flavour
        if classify_flavour(c).left_normal:
            return induce_short_multi(c)
        return induce_short_skew(c)
    br = _Bracketer(c)
    base = c.base
    out: dict[tuple, tuple[str, ...]] = {}
    for n in range(0, cap + 1):
        for dom in itertools.product(base.objects, repeat=n):
            for cod in base.objects:
                if n >= 1:
                    tight = base.hom(br.lbr(dom), cod)
                    if tight:
                        out[(TIGHT, n, dom, cod)] = tight
                loose = base.hom(br.lbr((c.unit,) + dom), cod)
                if loose:
                    out[(LOOSE, n, dom, cod)] = loose
    return out


# --------------------------------------------------------------------------
# induction from a skew closed category
# --------------------------------------------------------------------------

class _Currier:
    """Iterated-hom calculus over a skew closed category."""

    def __init__(self, c: SkewClosedCategory):
        self.c = c
        self.base = c.base

    def curry(self, objs: tuple[str, ...], cod: str) -> str:
        """[a1,[a2,...[an,cod]...]] (cod itself when the list is empty)."""
        out = cod
        for o in reversed(objs):
            out = self.c.h(o, out)
        return out

    def nest(self, objs: tuple[str, ...], f: str) -> str:
        """[a1,[...,[an, f]...]]: the covariant action under hom layers."""
        out = f
        for o in reversed(objs):
            out = self.c.hm_right(o, out)
            if out is None:
                raise MalformedTable("hom action undefined")
        return out

    def sub_map(self, fm: str, fdom: tuple[str, ...], loose_inner: bool,
                b: str, tail: str) -> str:
        """The map [b, tail] -> [a1,...[am, tail]...] that precomposes a
        b-consumer with the inner map: iterate L over the inner layers, feed
        the inner map contravariantly, and for a loose inner map strip the
        resulting unit layer with I."""
        c, base = self.c, self.base
        layers = fdom if loose_inner else fdom[1:]
        cur_in, cur_tail = b, tail
        acc = base.identity(c.h(b, tail))
        for o in reversed(layers):
            acc = base.compose(c.ell[(o, cur_in, cur_tail)], acc)
            cur_in, cur_tail = c.h(o, cur_in), c.h(o, cur_tail)
        acc = base.compose(c.hm(fm, base.identity(cur_tail)), acc)
        if loose_inner:
            acc = base.compose(c.iu[cur_tail], acc)
        return acc


def induce_closed_skew(x: SkewClosedCategory, name: Optional[str] = None) -> ShortSkewMulticategory:
    """The closed short skew multicategory of a skew closed category: tight
    n-ary maps (a1,...,an;b) are morphisms a1 -> [a2,...[an,b]], loose ones
    are morphisms out of the unit into the full curried hom."""
    c = x
    base = c.base
    name = name or (c.name + ".induced")
    cur = _Currier(c)

    tables = {TIGHT: {}, LOOSE: {}}
    under: dict[str, str] = {}
    wrap_of: dict[tuple, str] = {}
    for flavour, arities in ((TIGHT, (1, 2, 3, 4)), (LOOSE, (0, 1, 2))):
        for n in arities:
            tables[flavour][n] = {}
            for dom in itertools.product(base.objects, repeat=n):
                for cod in base.objects:
                    if flavour == TIGHT:
                        src, tgt = dom[0], cur.curry(dom[1:], cod)
                    else:
                        src, tgt = c.unit, cur.curry(dom, cod)
                    fs = []
                    for f in base.hom(src, tgt):
                        w = f if (flavour == TIGHT and n == 1) else _wrap(flavour, n, dom, cod, f)
                        fs.append(w)
                        under[w] = f
                        wrap_of[(flavour, n, dom, cod, f)] = w
                    if fs and not (flavour == TIGHT and n == 1):
                        tables[flavour][n][(dom, cod)] = tuple(sorted(fs))

    def rewrap(flavour, n, dom, cod, f):
        try:
            return wrap_of[(flavour, n, dom, cod, f)]
        except KeyError:
            raise MalformedTable(f"{name}: induced map {f} missing from {flavour}{n}{dom};{cod}")

    skeleton = ShortSkewMulticategory(
        name, base, {n: tables[TIGHT][n] for n in (2, 3, 4)},
        {n: tables[LOOSE][n] for n in (0, 1, 2)}, j={}, pre={}, post={}, sub={})

    j: dict[str, str] = {}
    for n in (1, 2):
        for f in skeleton.multimaps(TIGHT, n):
            dom, cod = skeleton.dom(f), skeleton.cod(f)
            a1 = dom[0]
            lifted = base.compose(c.hm_right(a1, under[f]), c.ju[a1])
            j[f] = rewrap(LOOSE, n, dom, cod, lifted)

    skeleton = ShortSkewMulticategory(
        name, base, {n: tables[TIGHT][n] for n in (2, 3, 4)},
        {n: tables[LOOSE][n] for n in (0, 1, 2)}, j=j, pre={}, post={}, sub={})

    def pre_action(f: str, i: int, p: str) -> str:
        _, dom, cod, fl = skeleton.info(f)
        loose = LOOSE in fl and TIGHT not in fl
        if not loose and i == 1:
            return base.compose(under[f], p)
        before = dom[:i - 1] if loose else dom[1:i - 1]
        rest = cur.curry(dom[i:], cod)
        action = c.hm(p, base.identity(rest))
        return base.compose(cur.nest(before, action), under[f])

    pre = {}
    for (f, i, p) in skeleton.required_pre_keys():
        n, dom, cod, fl = skeleton.info(f)
        flavour = LOOSE if (LOOSE in fl and TIGHT not in fl) else TIGHT
        newdom = dom[:i - 1] + (base.dom(p),) + dom[i:]
        pre[(f, i, p)] = rewrap(flavour, n, newdom, cod, pre_action(f, i, p))

    post = {}
    for (q, f) in skeleton.required_post_keys():
        n, dom, _, fl = skeleton.info(f)
        flavour = LOOSE if (LOOSE in fl and TIGHT not in fl) else TIGHT
        layers = dom[1:] if flavour == TIGHT else dom
        post[(q, f)] = rewrap(flavour, n, dom, base.cod(q),
                              base.compose(cur.nest(layers, q), under[f]))

    sub = {}
    for (g, i, f) in skeleton.required_sub_keys():
        case = skeleton.sub_case(g, i, f)
        ng, xfl, nf, yfl = case
        gdom, gcod = skeleton.dom(g), skeleton.cod(g)
        fdom = skeleton.dom(f)
        flavour = sub_flavour(xfl, i, yfl)
        newdom = gdom[:i - 1] + fdom + gdom[i:]
        tail = cur.curry(gdom[i:], gcod)
        if xfl == TIGHT and i == 1:
            # feed the whole consumer through the inner map's codomain layer
            lifted = cur.nest(fdom[1:] if yfl == TIGHT else fdom, under[g])
            result = base.compose(lifted, under[f])
        else:
            outer_layers = gdom[1:i - 1] if xfl == TIGHT else gdom[:i - 1]
            action = cur.sub_map(under[f], fdom, yfl == LOOSE, gdom[i - 1], tail)
            result = base.compose(cur.nest(outer_layers, action), under[g])
        sub[(g, i, f)] = rewrap(flavour, ng + nf - 1, newdom, gcod, result)

    return ShortSkewMulticategory(
        name, base, {n: tables[TIGHT][n] for n in (2, 3, 4)},
        {n: tables[LOOSE][n] for n in (0, 1, 2)}, j, pre, post, sub)
