"""Initialization and the word-at-a-time encrypt/decrypt machine."""

import pytest

from reference_oracle import ref_encrypt_words, ref_initialize
from separ.core import (
    LFSR_FORCE_BIT,
    Separ,
    enc_block,
    lfsr_clock,
    modadd,
)

GOLDEN_INIT_STATES = [0x5E29, 0x9D44, 0x468C, 0x1F49,
                      0x1A3A, 0x0DBA, 0x57D3, 0xA281]
GOLDEN_INIT_LFSR = 0x09A3
GOLDEN_FIRST_CT = 0xB06A  # zero key, zero nonce, zero plaintext word


def test_initialize_golden_zero():
    st = Separ(bytes(32)).initialize(bytes(16))
    assert st.states == GOLDEN_INIT_STATES
    assert st.lfsr == GOLDEN_INIT_LFSR
    assert st.t == 0


def test_initialize_matches_reference_random(rng):
    for _ in range(20):
        key = rng.randbytes(32)
        nonce = rng.randbytes(16)
        ref_states, ref_lfsr = ref_initialize(key, nonce)
        st = Separ(key).initialize(nonce)
        assert st.states == ref_states and st.lfsr == ref_lfsr


def test_initialize_deterministic(rng):
    key = rng.randbytes(32)
    nonce = rng.randbytes(16)
    cipher = Separ(key)
    a = cipher.initialize(nonce)
    b = cipher.initialize(nonce)
    assert a.states == b.states and a.lfsr == b.lfsr and a.t == b.t


def test_initialize_forces_lfsr_bit(rng):
    for _ in range(1000):
        cipher = Separ(rng.randbytes(32))
        st = cipher.initialize(rng.randbytes(16))
        assert st.lfsr & LFSR_FORCE_BIT == LFSR_FORCE_BIT
        assert st.lfsr != 0


def test_initialize_nonce_sensitive(rng):
    for _ in range(1000):
        key = rng.randbytes(32)
        nonce = bytearray(rng.randbytes(16))
        cipher = Separ(key)
        base = cipher.initialize(bytes(nonce))
        bit = rng.randrange(128)
        nonce[bit // 8] ^= 0x80 >> (bit % 8)
        flipped = cipher.initialize(bytes(nonce))
        assert base.states != flipped.states


def test_initialize_accepts_word_sequence():
    st_bytes = Separ(bytes(32)).initialize(bytes(16))
    st_words = Separ(bytes(32)).initialize([0] * 8)
    assert st_bytes.states == st_words.states


def test_first_ct_golden():
    cipher = Separ(bytes(32))
    st = cipher.initialize(bytes(16))
    assert cipher.encrypt_word(st, 0x0000) == GOLDEN_FIRST_CT
    assert st.t == 1


def test_stream_matches_reference(rng):
    key = rng.randbytes(32)
    nonce = rng.randbytes(16)
    words = [rng.randrange(1 << 16) for _ in range(64)]
    cipher = Separ(key)
    st = cipher.initialize(nonce)
    got = [cipher.encrypt_word(st, w) for w in words]
    assert got == ref_encrypt_words(key, nonce, words)


def _whitebox_vs(cipher, st, pt):
    """Recompute the stage outputs independently from the pre-step state."""
    sk = cipher.subkeys
    v = modadd(pt, st.states[0])
    vs = []
    for i in range(8):
        v = enc_block(v, sk[i])
        vs.append(v)
        if i < 7:
            v = modadd(v, st.states[i + 1])
    return vs  # [v12, v23, v34, v45, v56, v67, v78, ct]


def test_whitebox_state_updates(rng):
    """state8' is the fourth stage output; state5' is the second stage
    output plus the freshly clocked LFSR."""
    key = rng.randbytes(32)
    cipher = Separ(key)
    st = cipher.initialize(rng.randbytes(16))
    for _ in range(64):
        pt = rng.randrange(1 << 16)
        vs = _whitebox_vs(cipher, st, pt)
        lfsr_next = lfsr_clock(st.lfsr)
        cipher.encrypt_word(st, pt)
        assert st.states[7] == vs[3]                      # V45
        assert st.states[4] == modadd(vs[1], lfsr_next)   # V23 + LFSR'
        assert st.lfsr == lfsr_next


def test_encrypt_decrypt_state_sync(rng):
    key = rng.randbytes(32)
    nonce = rng.randbytes(16)
    enc_cipher = Separ(key)
    dec_cipher = Separ(key)
    enc_st = enc_cipher.initialize(nonce)
    dec_st = dec_cipher.initialize(nonce)
    for k in range(64):
        pt = rng.randrange(1 << 16)
        ct = enc_cipher.encrypt_word(enc_st, pt)
        assert dec_cipher.decrypt_word(dec_st, ct) == pt
        assert enc_st.states == dec_st.states
        assert enc_st.lfsr == dec_st.lfsr
        assert enc_st.t == dec_st.t == k + 1


def test_decrypt_stream_of_encrypt_stream(rng):
    key = rng.randbytes(32)
    nonce = rng.randbytes(16)
    cipher = Separ(key)
    words = [rng.randrange(1 << 16) for _ in range(10_000)]
    enc_st = cipher.initialize(nonce)
    cts = [cipher.encrypt_word(enc_st, w) for w in words]
    dec_st = cipher.initialize(nonce)
    pts = [cipher.decrypt_word(dec_st, c) for c in cts]
    assert pts == words


def test_single_step_roundtrip_sampled(rng):
    """Round trip over random single words from a fixed initialized
    state, resetting the state each trial (exhaustive run lives in the
    acceptance suite)."""
    cipher = Separ(rng.randbytes(32))
    base = cipher.initialize(rng.randbytes(16))
    for _ in range(512):
        pt = rng.randrange(1 << 16)
        enc_st = base.copy()
        dec_st = base.copy()
        assert cipher.decrypt_word(dec_st, cipher.encrypt_word(enc_st, pt)) == pt


def test_state_is_144_bits():
    st = Separ(bytes(32)).initialize(bytes(16))
    assert len(st.states) == 8
    assert all(0 <= w <= 0xFFFF for w in st.states)
    assert 0 <= st.lfsr <= 0xFFFF
    # eight 16-bit words plus the 16-bit LFSR: 144 bits of secret state


def test_bad_nonce_rejected():
    cipher = Separ(bytes(32))
    with pytest.raises(ValueError):
        cipher.initialize(bytes(15))
    with pytest.raises(ValueError):
        cipher.initialize([0] * 7)
    with pytest.raises(ValueError):
        cipher.initialize([0x10000] * 8)
