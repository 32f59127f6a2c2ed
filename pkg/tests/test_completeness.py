"""Validator completeness: every single-entry redirect of an action or
substitution table in a passing catalogue structure must flip at least one
reported instance. Exhaustive over the entries, one representative redirect
each (the domains are finite, so this is the property itself rather than a
sample of it)."""
import dataclasses

from shortcat.catalogue import (
    catalogue_short_multis, heyting2_skew_closed, monoid_skew_monoidal,
    poset2_first_short_skew, z2_monoid,
)
from shortcat.shortmulti import validate_short_multicategory
from shortcat.shortskew import validate_short_skew
from shortcat.skewmon import validate_skew_closed, validate_skew_monoidal


def _each_redirect(m, table_names, pool_of):
    for tname in table_names:
        table = getattr(m, tname)
        for key in sorted(table):
            pool = pool_of(table[key])
            if not pool:
                continue
            patched = dict(table)
            patched[key] = pool[0]
            yield tname, key, dataclasses.replace(m, **{tname: patched})


def test_short_multi_mutations_all_flip():
    m = catalogue_short_multis()["z2"]

    def pool(current):
        return [x for x in m.multimaps(m.arity(current)) if x != current]

    tried = 0
    for tname, key, bad in _each_redirect(m, ("sub", "pre", "post"), pool):
        assert not validate_short_multicategory(bad).ok, (tname, key)
        tried += 1
    assert tried > 100


def test_short_skew_mutations_all_flip():
    m = poset2_first_short_skew()

    def pool(current):
        n, _, _, fl = m.info(current)
        return [x for x in sorted(m._index)
                if x != current and m.info(x)[0] == n and fl <= m.info(x)[3]]

    tried = 0
    for tname, key, bad in _each_redirect(m, ("sub", "pre", "post"), pool):
        assert not validate_short_skew(bad).ok, (tname, key)
        tried += 1
    j = dict(m.j)
    for key in sorted(j):
        n = m.info(j[key])[0]
        pool_j = [x for x in m.multimaps("l", n) if x != j[key]]
        if not pool_j:
            continue
        patched = dict(j)
        patched[key] = pool_j[0]
        assert not validate_short_skew(dataclasses.replace(m, j=patched)).ok, key
        tried += 1
    assert tried > 40


def test_skew_monoidal_mutations_all_flip():
    c = monoid_skew_monoidal(z2_monoid())
    mors = c.base.morphisms()
    tried = 0
    for tname in ("alpha", "lam", "rho", "tensor_mor"):
        table = getattr(c, tname)
        for key in sorted(table):
            pool = [x for x in mors if x != table[key]]
            patched = dict(table)
            patched[key] = pool[0]
            bad = dataclasses.replace(c, **{tname: patched})
            assert not validate_skew_monoidal(bad).ok, (tname, key)
            tried += 1
    for key in sorted(c.tensor_obj):
        pool = [o for o in c.base.objects if o != c.tensor_obj[key]]
        patched = dict(c.tensor_obj)
        patched[key] = pool[0]
        bad = dataclasses.replace(c, tensor_obj=patched)
        assert not validate_skew_monoidal(bad).ok, key
        tried += 1
    assert tried >= 20


def test_skew_closed_mutations_all_flip():
    c = heyting2_skew_closed()
    mors = c.base.morphisms()
    tried = 0
    for tname in ("hom_mor", "iu", "ju", "ell"):
        table = getattr(c, tname)
        for key in sorted(table):
            pool = [x for x in mors if x != table[key]]
            patched = dict(table)
            patched[key] = pool[0]
            bad = dataclasses.replace(c, **{tname: patched})
            assert not validate_skew_closed(bad).ok, (tname, key)
            tried += 1
    assert tried > 15
