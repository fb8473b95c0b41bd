import json
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from subspacecodes import multilevel as ml
from subspacecodes.channel import (
    ErrorEvent,
    decode_md,
    detect,
    error_patterns,
    perturb,
    transmit,
    verify_correction,
    verify_detection,
)
from subspacecodes.galois import field_new
from subspacecodes.multishot import MultishotCode, SubspaceTuple, extended_distance, product_code
from subspacecodes.subspace import projective_space, subspace_distance


def T(*shots):
    return SubspaceTuple(shots)


@pytest.fixture(scope="module")
def c3(P22):
    return ml.assemble(ml.plan(ml.default_tree(P22), 3, 2, "odd-parity"))


@pytest.fixture(scope="module")
def c8(P22):
    return ml.assemble(ml.plan(ml.default_tree(P22), 3, 3))


# -- perturb / transmit ------------------------------------------------------


def test_perturb_zero_weight(P22):
    for V in P22:
        assert perturb(P22, V, 0, seed=1) == V


def test_perturb_one_from_line(P22, fig1):
    seen = {perturb(P22, fig1["S1"], 1, seed=s) for s in range(40)}
    assert seen == {fig1["O"], fig1["W"]}


@given(st.integers(0, 15), st.integers(0, 3), st.integers(0, 10**6))
@settings(max_examples=150, deadline=None)
def test_perturb_distance_contract(idx, w, seed):
    space = projective_space(field_new(2), 3)
    V = space[idx]
    if not space.shell(V, w):
        with pytest.raises(ValueError):
            perturb(space, V, w, seed)
        return
    assert subspace_distance(perturb(space, V, w, seed), V) == w


def test_perturb_errors(P22, fig1):
    with pytest.raises(ValueError):
        perturb(P22, fig1["S1"], 3)
    with pytest.raises(ValueError):
        perturb(P22, fig1["S1"], -1)
    with pytest.raises(ValueError):
        ErrorEvent((1, -1))


def test_perturb_is_seeded(P22, fig1):
    a = [perturb(P22, fig1["O"], 1, seed=9) for _ in range(5)]
    assert len(set(a)) == 1


def test_transmit_zero_event_is_identity(c3):
    for word in c3.codewords[:10]:
        assert transmit(c3, word, ErrorEvent((0, 0, 0)), seed=0) == word


@given(st.integers(0, 61), st.tuples(st.integers(0, 2), st.integers(0, 2), st.integers(0, 2)), st.integers(0, 10**6))
@settings(max_examples=150, deadline=None)
def test_transmit_weights_add_up(idx, weights, seed):
    P22 = projective_space(field_new(2), 2)
    code = ml.assemble(ml.plan(ml.default_tree(P22), 3, 2, "odd-parity"))
    word = code.codewords[idx]
    received = transmit(code, word, ErrorEvent(weights), seed)
    per_shot = [subspace_distance(a, b) for a, b in zip(word.shots, received.shots)]
    assert per_shot == list(weights)
    assert extended_distance(word, received) == sum(weights)


def test_transmit_errors(c3, fig1):
    with pytest.raises(ValueError):
        transmit(c3, T(fig1["O"], fig1["O"], fig1["O"]), ErrorEvent((0, 0, 0)))  # odd-parity arrays exclude 000
    with pytest.raises(ValueError):
        transmit(c3, c3.codewords[0], ErrorEvent((1, 0)))


def test_error_patterns_count(P22, fig1):
    word = T(fig1["S1"], fig1["O"])
    pats = list(error_patterns(P22, word, 1))
    # weight 1 in shot 0: {O, W}; in shot 1: {S1, S2, S3}
    assert len(pats) == 5
    assert all(extended_distance(word, r) == e.total_weight == 1 for e, r in pats)


# -- detection ---------------------------------------------------------------


def test_detect_and_decode_basic(c3, fig1):
    word = c3.codewords[0]
    assert detect(c3, word) == "clean"
    decoded, ambiguous = decode_md(c3, word)
    assert decoded == word and not ambiguous


def test_detection_sweep_c3(c3):
    # d = 2, so every error of weight d-1 = 1 is detected
    rep = verify_detection(c3, 1)
    assert rep.events_tested > 0 and rep.failures == []
    assert rep.detected == rep.events_tested


def test_weight_two_can_go_undetected(fig1):
    S1, S2, S3 = fig1["S1"], fig1["S2"], fig1["S3"]
    c1 = product_code([S1, S2, S3], 3)
    sent = T(S1, S1, S1)
    received = T(S1, S1, S2)
    assert extended_distance(sent, received) == 2
    assert detect(c1, received) == "clean"
    rep = verify_detection(c1, 2)
    assert any(f["kind"] == "undetected" for f in rep.failures)


# -- correction --------------------------------------------------------------


def test_correction_sweep_c8(c8):
    # d >= 3 corrects every single error
    rep = verify_correction(c8, 1)
    assert rep.failures == []
    assert rep.corrected == rep.events_tested > 0


def test_ambiguous_decoding(fig1):
    S1, S2 = fig1["S1"], fig1["S2"]
    code = MultishotCode([T(S1), T(S2)])
    decoded, ambiguous = decode_md(code, T(fig1["O"]))
    assert ambiguous and decoded == T(S1)
    rep = verify_correction(code, 1)
    assert rep.failures and all(f["kind"] == "ambiguous" for f in rep.failures)


@pytest.mark.parametrize("seed", range(3))
def test_random_single_errors_corrected(c8, P22, seed):
    rng = random.Random(seed)
    for _ in range(50):
        word = rng.choice(c8.codewords)
        weights = [0, 0, 0]
        weights[rng.randrange(3)] = 1
        received = transmit(c8, word, ErrorEvent(tuple(weights)), rng)
        decoded, ambiguous = decode_md(c8, received)
        assert decoded == word and not ambiguous


def test_report_json(c3):
    rep = verify_detection(c3, 1)
    data = json.loads(json.dumps(rep.to_json()))
    assert data["code"] == {"q": 2, "m": 2, "n": 3, "count": 63, "min_distance": 2}
    assert data["events_tested"] == data["detected"]
    assert data["failures"] == []
