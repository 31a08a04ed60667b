#include "nuhuncc/cipher.hpp"
#include "nuhuncc/errors.hpp"

namespace nuhuncc::cipher {

namespace {

std::uint32_t mix32(std::uint32_t x) {
    x ^= x >> 16;
    x *= 0x7feb352dU;
    x ^= x >> 15;
    x *= 0x846ca68bU;
    x ^= x >> 16;
    return x;
}

} // namespace

BitVec NullCipher::encrypt_block(const BitVec& m, Rng&) const {
    if (m.size() > block_) throw UsageError("null cipher: block too large");
    return m;
}

BitVec NullCipher::decrypt_block(const BitVec& c) const {
    if (c.size() > block_) throw CryptoError("null cipher: block too large");
    return c;
}

XorToyCipher::XorToyCipher(std::uint64_t key_seed) {
    Rng rng(key_seed);
    k1_ = static_cast<std::uint32_t>(rng.next_u64());
    k2_ = static_cast<std::uint32_t>(rng.next_u64());
    k3_ = static_cast<std::uint32_t>(rng.next_u64());
}

BitVec XorToyCipher::encrypt_block(const BitVec& m, Rng& rng) const {
    if (m.size() != 32) throw UsageError("toy cipher: plaintext must be 32 bits");
    const auto mw = static_cast<std::uint32_t>(m.read_uint(0, 32));
    const auto nonce = static_cast<std::uint32_t>(rng.next_u64());
    BitVec out(96);
    out.write_uint(0, 32, mw ^ k1_ ^ mix32(nonce));
    out.write_uint(32, 32, nonce ^ k2_);
    out.write_uint(64, 32, mix32(mw ^ k3_ ^ nonce));
    return out;
}

BitVec XorToyCipher::decrypt_block(const BitVec& c) const {
    if (c.size() != 96) throw CryptoError("toy cipher: ciphertext must be 96 bits");
    const auto c1 = static_cast<std::uint32_t>(c.read_uint(0, 32));
    const auto c2 = static_cast<std::uint32_t>(c.read_uint(32, 32));
    const auto c3 = static_cast<std::uint32_t>(c.read_uint(64, 32));
    const std::uint32_t nonce = c2 ^ k2_;
    const std::uint32_t mw = c1 ^ k1_ ^ mix32(nonce);
    if (c3 != mix32(mw ^ k3_ ^ nonce)) throw CryptoError("toy cipher: check word mismatch");
    BitVec out(32);
    out.write_uint(0, 32, mw);
    return out;
}

} // namespace nuhuncc::cipher
