#ifndef NUHUNCC_OPCOUNT_HPP
#define NUHUNCC_OPCOUNT_HPP

#include <cstdint>

namespace nuhuncc {

/// Binary-operation counters for complexity cross-checks.
///
/// Counting is off unless a scope is active on the current thread, so the
/// hot paths pay only a thread_local load and branch.
struct OpCounters {
    std::uint64_t polar_butterfly_ops = 0; // 3 per butterfly: one add, two moves
    std::uint64_t gf_mul = 0;              // field multiplications
    std::uint64_t gf_add = 0;              // field additions
    std::uint64_t bit_xor = 0;             // plain bit xors (seed padding etc.)
};

namespace opcount {

OpCounters* active();

class Scope {
public:
    Scope();
    ~Scope();
    Scope(const Scope&) = delete;
    Scope& operator=(const Scope&) = delete;
    const OpCounters& counts() const { return counters_; }

private:
    OpCounters counters_;
    OpCounters* previous_;
};

inline void add_polar_butterfly(std::uint64_t k) {
    if (OpCounters* c = active()) c->polar_butterfly_ops += k;
}
inline void add_gf_mul(std::uint64_t k) {
    if (OpCounters* c = active()) c->gf_mul += k;
}
inline void add_gf_add(std::uint64_t k) {
    if (OpCounters* c = active()) c->gf_add += k;
}
inline void add_bit_xor(std::uint64_t k) {
    if (OpCounters* c = active()) c->bit_xor += k;
}

} // namespace opcount
} // namespace nuhuncc

#endif
