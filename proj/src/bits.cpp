#include "nuhuncc/bits.hpp"

namespace nuhuncc {

std::uint64_t fnv1a64(const std::uint8_t* data, std::size_t len, std::uint64_t h) {
    for (std::size_t i = 0; i < len; ++i) {
        h ^= data[i];
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::uint64_t fnv1a64(const std::string& s) {
    return fnv1a64(reinterpret_cast<const std::uint8_t*>(s.data()), s.size());
}

} // namespace nuhuncc
