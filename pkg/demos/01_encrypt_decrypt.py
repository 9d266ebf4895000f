"""
Encrypting and decrypting with SEPAR
====================================

A 256-bit key drives eight chained 16-bit permutations; a 128-bit nonce
fills the internal state.  Messages are processed two octets at a time,
and every processed word stirs the 144-bit state, so equal plaintext
words produce different ciphertext words.
"""

from separ import Separ

key = bytes.fromhex(
    "000102030405060708090A0B0C0D0E0F101112131415161718191A1B1C1D1E1F")
nonce = bytes.fromhex("000102030405060708090A0B0C0D0E0F")

cipher = Separ(key)

message = b"the same word, the same word, .."
ct = cipher.encrypt(nonce, message)
print("plaintext: ", message)
print("ciphertext:", ct.hex().upper())
print("restored:  ", cipher.decrypt(nonce, ct))

# identical plaintext words never repeat in the ciphertext
ct_words = [ct[i:i + 2].hex() for i in range(0, len(ct), 2)]
print("\nciphertext words:", ct_words)
print("distinct:", len(set(ct_words)), "of", len(ct_words))

# the word-level machine: both sides stay synchronized step by step
enc_state = cipher.initialize(nonce)
dec_state = cipher.initialize(nonce)
for pt_word in (0x1234, 0x1234, 0xBEEF):
    ct_word = cipher.encrypt_word(enc_state, pt_word)
    back = cipher.decrypt_word(dec_state, ct_word)
    print(f"\nword {pt_word:04X} -> {ct_word:04X} -> {back:04X} "
          f"(states equal: {enc_state.states == dec_state.states})")

# a keystream is just the ciphertext of zero words
print("\nkeystream sample:", cipher.keystream(nonce, 8).hex().upper())
