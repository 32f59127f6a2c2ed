import dataclasses

import pytest

from shortcat.braiding import (
    ShortBraiding, braidings_equal, check_short_symmetry, derive_beta2,
    s_from_short_braiding, short_braiding_from_s, short_braidings_equal,
    validate_braided_transport_functor, validate_short_braiding,
)
from shortcat.catalogue import (
    catalogue_morphisms, catalogue_short_braidings, forced_short_braiding,
)
from shortcat.classify import certify
from shortcat.errors import NoSolution
from shortcat.shortskew import TIGHT, embed_multi_morphism, identity_skew_morphism
from shortcat.skewmon import check_symmetry, validate_braiding
from shortcat.transport import ks_object


def _setup(key):
    sk, beta = catalogue_short_braidings()[key]
    cert = certify(sk)
    return sk, beta, cert, ks_object(sk, cert)


def test_short_braidings_validate_and_are_symmetries():
    for key, (sk, beta) in catalogue_short_braidings().items():
        r = validate_short_braiding(sk, beta)
        assert r.ok, (key, r.failures[:4])
        assert r.counts["braid-yang-baxter"] > 0
        assert check_short_symmetry(sk, beta)


def test_braiding_axiom_mutation_is_caught():
    sk, beta = catalogue_short_braidings()["klein.beta"]
    b42 = dict(beta.b42)
    key = sorted(b42)[0]
    pool = [f for f in sk.multimaps(TIGHT, 4) if f != b42[key]]
    b42[key] = pool[0]
    bad = ShortBraiding(beta.name, dict(beta.b32), b42, dict(beta.b43))
    r = validate_short_braiding(sk, bad)
    assert not r.ok
    assert any(f.family == "b42-typing" for f in r.failures)
    # the edited entry is the image of a ternary-into-binary substitution,
    # so the corresponding compatibility axiom instance fails as well
    assert any(f.family == "braid-3-in-2-slot1" for f in r.failures)


def test_transport_forward_backward_identity():
    for key in ("z2.beta", "klein.beta", "terminal.beta"):
        sk, beta, cert, mon = _setup(key)
        s = s_from_short_braiding(sk, cert, beta)
        assert validate_braiding(mon, s).ok
        assert check_symmetry(mon, s)  # symmetry transfers forward
        beta2 = short_braiding_from_s(sk, cert, s)
        assert short_braidings_equal(beta, beta2)
        s2 = s_from_short_braiding(sk, cert, beta2)
        assert braidings_equal(s, s2)
        assert check_short_symmetry(sk, beta2)  # and backward


def test_non_braidable_mutation_raises():
    sk, beta, cert, mon = _setup("klein.beta")
    b32 = dict(beta.b32)
    # send one universal ternary image somewhere unrelated
    from shortcat.braiding import theta3
    key = theta3(sk, cert, "01", "10", "11")
    pool = sorted(f for f in sk.multimaps(TIGHT, 3) if f != b32[key])
    b32[key] = pool[0]
    bad = ShortBraiding(beta.name, b32, dict(beta.b42), dict(beta.b43))
    with pytest.raises(NoSolution):
        s_from_short_braiding(sk, cert, bad)


def test_derived_binary_swap():
    sk, beta, cert, _ = _setup("z2.beta")
    table = derive_beta2(sk, cert, beta)
    for r, img in table.items():
        _, dom, cod, _ = sk.info(r)
        assert sk.info(img)[1] == (dom[1], dom[0])
        assert sk.info(img)[2] == cod


def test_braided_functor_lemma_and_transport():
    data = {k.split(".")[0]: _setup(k) for k in ("z2.beta", "klein.beta", "terminal.beta")}
    ms = catalogue_morphisms()
    cases = [("id", identity_skew_morphism(data["klein"][0]), "klein", "klein")]
    for mname, s, t in (("klein-swap", "klein", "klein"),
                        ("z2-into-klein", "z2", "klein"),
                        ("z2-collapse", "z2", "terminal")):
        cases.append((mname, embed_multi_morphism(ms[mname], data[s][0], data[t][0]), s, t))
    for label, F, s, t in cases:
        r = validate_braided_transport_functor(
            F, data[s][1], data[t][1], data[s][2], data[t][2],
            data[s][3], data[t][3])
        assert r.ok, (label, r.failures[:4])
        assert r.counts["preserve-b32"] > 0
        assert r.counts["preserve-b42"] > 0 and r.counts["preserve-b43"] > 0


def test_broken_functor_fails_ternary_preservation():
    sk, beta, cert, mon = _setup("klein.beta")
    F = identity_skew_morphism(sk)
    tight = {n: dict(F.tight_maps[n]) for n in (2, 3, 4)}
    key = sorted(tight[3])[0]
    pool = sorted(f for f in sk.multimaps(TIGHT, 3) if f != tight[3][key])
    tight[3][key] = pool[0]
    bad = dataclasses.replace(F, tight_maps=tight)
    r = validate_braided_transport_functor(bad, beta, beta, cert, cert, mon, mon)
    assert not r.ok
