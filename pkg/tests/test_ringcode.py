import random

import pytest

from vcodes.errors import CharacteristicTwoUnsupported, EmptyCode, SearchSpaceTooLarge, ShapeError
from vcodes.fieldcode import LinearCodeFq
from vcodes.ring import ring_over
from vcodes.ringcode import ComponentTriple, LinearCodeR, combine_components, random_code_r


R2 = ring_over(2)
R3 = ring_over(3)


def words_of(code, budget=1 << 22):
    return {tuple(map(int, w)) for w in code.codewords(budget)}


def test_construction_examples():
    zero = LinearCodeR.zero_code(R3, 2)
    assert zero.size == 1
    e1 = LinearCodeR(R3, 3, [[1, 0, 0]])
    assert e1.size == 27  # free rank 1
    cv = LinearCodeR(R2, 1, [[R2.q]])
    assert cv.size == 4
    assert words_of(cv) == {(0,), (R2.q,), (R2.q**2,), (R2.q + R2.q**2,)}


def test_ragged_generators_rejected():
    with pytest.raises(ShapeError):
        LinearCodeR(R3, 2, [[1, 2], [1]])


def test_enumeration_matches_closure_oracle():
    rng = random.Random(2024)
    for _ in range(40):
        q = rng.choice([2, 3])
        ring = ring_over(q)
        n = rng.randrange(1, 3)
        code = random_code_r(ring, n, rng)
        assert words_of(code) == code.closure_codewords()


def test_enumeration_budget():
    with pytest.raises(SearchSpaceTooLarge):
        LinearCodeR.full_space(R3, 4).codewords(budget=100)


def test_zero_code_enumerates_single_word():
    assert words_of(LinearCodeR.zero_code(R3, 3)) == {(0, 0, 0)}


def test_iter_codewords_streams_each_exactly_once():
    code = LinearCodeR(R3, 2, [[1, R3.q]])
    seen = list(code.iter_codewords())
    assert len(seen) == code.size == len(set(seen))
    assert list(LinearCodeR.zero_code(R3, 2).iter_codewords()) == [(0, 0)]


def test_components_crt_examples():
    full = LinearCodeR.full_space(R3, 2)
    t = full.components_crt()
    assert t.dims == (2, 2, 2)
    z = LinearCodeR.zero_code(R3, 2).components_crt()
    assert z.dims == (0, 0, 0)
    cv = LinearCodeR(R3, 1, [[R3.q]])
    tv = cv.components_crt()
    assert (tv.c1.size, tv.c2.size, tv.c3.size) == (3, 3, 1)
    assert tv.size_product() == cv.size == 9


def test_components_crt_needs_odd_q():
    with pytest.raises(CharacteristicTwoUnsupported):
        LinearCodeR(R2, 1, [[1]]).components_crt()


def test_components_paper_examples():
    cv = LinearCodeR(R3, 1, [[R3.q]])
    t = cv.components_paper()
    assert t.provenance == "paper-literal"
    assert (t.c1.k, t.c2.k, t.c3.k) == (0, 1, 1)
    z = LinearCodeR.zero_code(R3, 2).components_paper()
    assert z.dims == (0, 0, 0)
    f = LinearCodeR.full_space(R3, 2).components_paper()
    assert f.dims == (2, 2, 2)


def test_combine_components_examples():
    field = R3.field
    zero = ComponentTriple(
        LinearCodeFq.zero_code(field, 2), LinearCodeFq.zero_code(field, 2), LinearCodeFq.zero_code(field, 2), "crt"
    )
    assert combine_components(R3, zero, "idempotent").size == 1
    assert combine_components(R3, zero, "paper-literal").size == 1
    full = ComponentTriple(
        LinearCodeFq.full_space(field, 2), LinearCodeFq.full_space(field, 2), LinearCodeFq.full_space(field, 2), "crt"
    )
    assert combine_components(R3, full, "idempotent") == LinearCodeR.full_space(R3, 2)
    assert combine_components(R3, full, "paper-literal") == LinearCodeR.full_space(R3, 2)
    tri = ComponentTriple(
        LinearCodeFq.full_space(field, 1), LinearCodeFq.full_space(field, 1), LinearCodeFq.zero_code(field, 1), "crt"
    )
    assert combine_components(R3, tri, "idempotent") == LinearCodeR(R3, 1, [[R3.q]])


def test_combine_idempotent_needs_odd_q():
    field = R2.field
    tri = ComponentTriple(
        LinearCodeFq.full_space(field, 1), LinearCodeFq.full_space(field, 1), LinearCodeFq.zero_code(field, 1), "crt"
    )
    with pytest.raises(CharacteristicTwoUnsupported):
        combine_components(R2, tri, "idempotent")


def test_crt_split_and_combine_roundtrip_random():
    rng = random.Random(5)
    for _ in range(30):
        code = random_code_r(R3, rng.randrange(1, 4), rng)
        assert combine_components(R3, code.components_crt(), "idempotent") == code


def test_dual_examples():
    full = LinearCodeR.full_space(R3, 2)
    assert full.dual().size == 1
    cv = LinearCodeR(R2, 1, [[R2.q]])
    assert words_of(cv.dual()) == {(0,), (1 + R2.q**2,)}
    c11 = LinearCodeR(R3, 2, [[1, 1]])
    d = c11.dual()
    assert d.size == 27
    assert d.contains([1, 2])


def test_crt_dual_matches_brute_force():
    rng = random.Random(99)
    for _ in range(25):
        code = random_code_r(R3, rng.randrange(1, 3), rng)
        assert code.dual() == code.brute_force_dual()


def test_dual_size_product_both_parities():
    rng = random.Random(123)
    for _ in range(30):
        q = rng.choice([2, 3])
        ring = ring_over(q)
        n = rng.randrange(1, 3)
        code = random_code_r(ring, n, rng)
        dual = code.dual() if q == 3 else code.brute_force_dual()
        assert code.size * dual.size == q ** (3 * n)
        for g in code.gens:
            for h in dual.gens:
                assert code.dot(g, h) == 0


def test_gray_image_examples():
    assert LinearCodeR.zero_code(R3, 2).gray_image().k == 0
    cv = LinearCodeR(R2, 1, [[R2.q]])
    image = cv.gray_image()
    assert (image.n, image.k) == (3, 2)
    img_words = {tuple(map(int, w)) for w in image.codewords()}
    assert img_words == {(0, 0, 0), (0, 0, 1), (0, 1, 0), (0, 1, 1)}
    full = LinearCodeR.full_space(R2, 2)
    assert full.gray_image() == LinearCodeFq.full_space(R2.field, 6)


def test_gray_image_preserves_size():
    rng = random.Random(17)
    for _ in range(30):
        q = rng.choice([2, 3])
        code = random_code_r(ring_over(q), rng.randrange(1, 4), rng)
        assert code.gray_image().size == code.size


def test_min_lee_distance_examples():
    cv = LinearCodeR(R2, 1, [[R2.q]])
    assert cv.min_lee_distance("exhaustive")[0] == 1
    for n in (1, 2, 3):
        rep = LinearCodeR(R3, n, [[1] * n])
        assert rep.min_lee_distance("exhaustive") == (n, "exhaustive")
    assert LinearCodeR.full_space(R3, 2).min_lee_distance("exhaustive")[0] == 1
    with pytest.raises(EmptyCode):
        LinearCodeR.zero_code(R3, 1).min_lee_distance("exhaustive")


def test_min_lee_strategies_agree():
    rng = random.Random(31)
    for _ in range(30):
        q = rng.choice([2, 3])
        code = random_code_r(ring_over(q), rng.randrange(1, 4), rng)
        if code.dim_fq == 0:
            continue
        exact = code.min_lee_distance("exhaustive")
        via_gray = code.min_lee_distance("gray-image")
        assert exact[0] == via_gray[0]
        assert exact[1] == "exhaustive" and via_gray[1] == "gray-image"


def test_component_lemma_strategy_is_tagged():
    code = LinearCodeR(R3, 2, [[1, 1]])
    value, tag = code.min_lee_distance("component-lemma")
    assert tag == "lemma5-based"
    assert value >= 1


def test_classify_duality_examples():
    cvv = LinearCodeR(R2, 2, [[R2.q, R2.q]])
    flags = cvv.classify_duality()
    assert flags.self_orthogonal and not flags.self_dual
    zflags = LinearCodeR.zero_code(R3, 2).classify_duality()
    assert zflags.self_orthogonal and not zflags.self_dual
    c11 = LinearCodeR(R3, 2, [[1, 1]])
    assert not c11.classify_duality().self_orthogonal


def test_self_dual_implies_chain():
    # the self-dual cyclic code of length 2 over q=2 found by exhaustive search
    members = [(0, 0), (6, 0), (3, 3), (5, 3), (3, 5), (5, 5), (0, 6), (6, 6)]
    code = LinearCodeR(R2, 2, members)
    assert code.size == 8
    flags = code.classify_duality()
    assert flags.self_dual and flags.self_orthogonal and flags.formally_self_dual


def test_self_orthogonal_transfers_to_gray_image():
    rng = random.Random(77)
    found = 0
    for _ in range(300):
        q = rng.choice([2, 3])
        ring = ring_over(q)
        code = random_code_r(ring, rng.randrange(1, 4), rng)
        if not all(code.dot(g, h) == 0 for g in code.gens for h in code.gens):
            continue
        found += 1
        image = code.gray_image()
        assert not ((image.gen @ image.gen.T) % q).any()
    assert found >= 3


def test_gray_dual_identity_random():
    rng = random.Random(13)
    for _ in range(40):
        q = rng.choice([2, 3])
        ring = ring_over(q)
        code = random_code_r(ring, rng.randrange(1, 4), rng)
        dual = code.dual() if q == 3 else code.brute_force_dual()
        assert code.gray_image().dual() == dual.gray_image()


def test_cardinality_identity_crt_vs_literal():
    rng = random.Random(55)
    literal_breaks = 0
    for _ in range(40):
        code = random_code_r(R3, rng.randrange(1, 4), rng)
        assert code.components_crt().size_product() == code.size
        if code.components_paper().size_product() != code.size:
            literal_breaks += 1
    # the idempotent-slot code over e1 is a concrete literal-projection failure
    e1code = LinearCodeR(R3, 1, [[R3.e1]])
    assert e1code.size == 3
    assert e1code.components_paper().size_product() == 9
    assert literal_breaks > 0
