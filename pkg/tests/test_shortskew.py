import dataclasses

from shortcat.catalogue import (
    catalogue_short_multis, catalogue_short_skews, monoid_short_multi,
    poset2_first_short_skew, z2_monoid,
)
from shortcat.shortmulti import validate_short_multicategory
from shortcat.shortskew import (
    LOOSE, TIGHT, embed_plain, identity_skew_morphism, validate_short_skew,
    validate_skew_multi_morphism,
)


def test_embedded_catalogue_structures_pass():
    for name, m in catalogue_short_multis().items():
        r = validate_short_skew(embed_plain(m))
        assert r.ok, f"{name}: {r.failures[:3]}"
        assert r.counts["j-nat"] > 0


def test_poset2_first_skew_passes_and_j_not_surjective():
    m = poset2_first_short_skew()
    r = validate_short_skew(m)
    assert r.ok, r.failures[:5]
    # tight (a1..;b) inhabited iff a1 <= b, loose always inhabited
    assert m.mapset(TIGHT, 2, ("1", "1"), "0") == ()
    assert m.mapset(LOOSE, 2, ("1", "1"), "0") != ()
    image = {m.j[f] for f in m.j}
    assert "l2(1,1;0)" not in image


def test_embed_plain_tables_coincide_and_j_is_identity():
    m = monoid_short_multi(z2_monoid())
    s = embed_plain(m)
    assert all(k == v for k, v in s.j.items())
    for n in (0, 2):
        for key in s.mapset_keys(LOOSE, n):
            flavour_tight = s.mapset(TIGHT, n, *key) if n == 2 else tuple(m.mapset(0, *key))
            assert s.mapset(LOOSE, n, *key) == flavour_tight


def test_embed_counts_match_plain_on_shared_families():
    m = monoid_short_multi(z2_monoid())
    plain = validate_short_multicategory(m)
    skew = validate_short_skew(embed_plain(m))
    for family in ("assoc-line-a", "assoc-line-b", "assoc-notline-a",
                   "assoc-notline-b", "assoc-notline-c", "assoc-notline-d"):
        assert plain.counts[family] == skew.counts[family]
    assert skew.counts["j-nat"] > 0 and skew.counts["j-derived"] > 0
    assert skew.total_checked() > plain.total_checked()


def test_j_naturality_mutation_fails_at_named_instance():
    m = poset2_first_short_skew()
    sub = dict(m.sub)
    key = ("l1(0;1)", 1, "l0(;0)")   # j(le) substituted by a nullary map
    assert sub[key] == "l0(;1)"
    sub[key] = "l0(;0)"
    bad = dataclasses.replace(m, sub=sub)
    r = validate_short_skew(bad)
    assert not r.ok
    assert r.has_failure("j-nat", ("into-nullary", "le", "l0(;0)"))


def test_identity_skew_morphisms_validate():
    for name, m in catalogue_short_skews().items():
        r = validate_skew_multi_morphism(identity_skew_morphism(m))
        assert r.ok, f"{name}: {r.failures[:3]}"
