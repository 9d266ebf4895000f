"""Independent straight-line reference for the cipher, used only to freeze
golden values and to cross-check the production implementation.

Everything here is written long-hand against the algorithm description,
deliberately sharing no code with the package: its own tables, its own
rotation arithmetic, bit-list LFSR, no vectorization.  Keep it boring.
"""

REF_S = [
    [1, 15, 11, 2, 0, 3, 5, 8, 6, 9, 12, 7, 13, 10, 14, 4],
    [6, 10, 15, 4, 14, 13, 9, 2, 1, 7, 12, 11, 0, 3, 5, 8],
    [12, 2, 6, 1, 0, 3, 5, 8, 7, 9, 11, 14, 10, 13, 15, 4],
    [13, 11, 2, 7, 0, 3, 5, 8, 6, 12, 15, 1, 10, 4, 9, 14],
]


def ref_rotl(x, n):
    n = n % 16
    hi = (x * (2 ** n)) % 65536
    lo = x // (2 ** (16 - n)) if n else 0
    return hi + lo if n else x


def ref_enc_block(m, k1, k2, k3, k4, k5, k6):
    for k in [k1, k2, k3, k4]:
        m = m ^ k
        # nibble A is the least significant hex digit
        na = m % 16
        nb = (m // 16) % 16
        nc = (m // 256) % 16
        nd = (m // 4096) % 16
        na = REF_S[0][na]
        nb = REF_S[1][nb]
        nc = REF_S[2][nc]
        nd = REF_S[3][nd]
        na = na ^ nc
        nb = nb ^ nd
        nc = nc ^ nb
        nd = nd ^ na
        m = nd * 4096 + nc * 256 + nb * 16 + na
        m = m ^ ref_rotl(m, 8) ^ ref_rotl(m, 12)
    m = m ^ k5
    na = REF_S[0][m % 16]
    nb = REF_S[1][(m // 16) % 16]
    nc = REF_S[2][(m // 256) % 16]
    nd = REF_S[3][(m // 4096) % 16]
    m = nd * 4096 + nc * 256 + nb * 16 + na
    return m ^ k6


def ref_subkeys(k1, k2, n):
    def window_sub(w):
        field = (w // 128) % 16
        return w - field * 128 + REF_S[0][field] * 128

    sk3 = window_sub(ref_rotl(k1, 6)) ^ (n + 2)
    sk4 = window_sub(ref_rotl(k2, 10)) ^ (n + 3)
    return [k1, k2, sk3, sk4, k1 ^ k2, sk3 ^ sk4]


def ref_schedule(key_bytes):
    subs = []
    for j in range(8):
        k1 = key_bytes[4 * j] * 256 + key_bytes[4 * j + 1]
        k2 = key_bytes[4 * j + 2] * 256 + key_bytes[4 * j + 3]
        subs.append(ref_subkeys(k1, k2, j + 1))
    return subs


def ref_initialize(key_bytes, nonce_bytes):
    subs = ref_schedule(key_bytes)
    s = [nonce_bytes[2 * i] * 256 + nonce_bytes[2 * i + 1] for i in range(8)]
    out = 0
    for _ in range(4):
        v12 = ref_enc_block(s[0] ^ s[2] ^ s[4] ^ s[6], *subs[0])
        v23 = ref_enc_block(v12 ^ s[1], *subs[1])
        v34 = ref_enc_block(v23 ^ s[2], *subs[2])
        v45 = ref_enc_block(v34 ^ s[3], *subs[3])
        v56 = ref_enc_block(v45 ^ s[4], *subs[4])
        v67 = ref_enc_block(v56 ^ s[5], *subs[5])
        v78 = ref_enc_block(v67 ^ s[6], *subs[6])
        out = ref_enc_block(v78 ^ s[7], *subs[7])
        s = [s[0] ^ out, s[1] ^ v12, s[2] ^ v23, s[3] ^ v34,
             s[4] ^ v45, s[5] ^ v56, s[6] ^ v67, s[7] ^ v78]
    lfsr = out | 256
    return s, lfsr


def ref_lfsr_step(state):
    # x^16 + x^15 + x^13 + x^4 + 1, register shifts left
    bits = [(state // (2 ** i)) % 2 for i in range(16)]
    fb = bits[15] ^ bits[14] ^ bits[12] ^ bits[3]
    bits = [fb] + bits[:15]
    return sum(b * (2 ** i) for i, b in enumerate(bits))


def ref_encrypt_words(key_bytes, nonce_bytes, words):
    subs = ref_schedule(key_bytes)
    s, lfsr = ref_initialize(key_bytes, nonce_bytes)
    cts = []
    for pt in words:
        v12 = ref_enc_block((pt + s[0]) % 65536, *subs[0])
        v23 = ref_enc_block((v12 + s[1]) % 65536, *subs[1])
        v34 = ref_enc_block((v23 + s[2]) % 65536, *subs[2])
        v45 = ref_enc_block((v34 + s[3]) % 65536, *subs[3])
        v56 = ref_enc_block((v45 + s[4]) % 65536, *subs[4])
        v67 = ref_enc_block((v56 + s[5]) % 65536, *subs[5])
        v78 = ref_enc_block((v67 + s[6]) % 65536, *subs[6])
        ct = ref_enc_block((v78 + s[7]) % 65536, *subs[7])
        cts.append(ct)
        lfsr = ref_lfsr_step(lfsr)
        new4 = (v12 + v45 + s[7]) % 65536
        s = [
            (v34 + v23 + v78 + s[4]) % 65536,
            (v12 + v56 + s[5]) % 65536,
            (v23 + new4 + s[0]) % 65536,
            new4,
            (v23 + lfsr) % 65536,
            (v12 + v45 + s[6]) % 65536,
            (v23 + v67) % 65536,
            v45,
        ]
    return cts


def ref_encrypt_bytes(key_bytes, nonce_bytes, data):
    words = [data[i] * 256 + data[i + 1] for i in range(0, len(data), 2)]
    cts = ref_encrypt_words(key_bytes, nonce_bytes, words)
    out = []
    for ct in cts:
        out.append(ct // 256)
        out.append(ct % 256)
    return bytes(out)
