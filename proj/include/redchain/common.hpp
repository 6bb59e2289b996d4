#ifndef REDCHAIN_COMMON_HPP
#define REDCHAIN_COMMON_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace redchain {

using Nat = std::uint64_t;

// Malformed input: bad structure, broken invariant, failed precondition.
// The CLI maps this to exit code 2.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A configured resource cap was exceeded (state budget, size cap, packed
// width). The CLI maps this to exit code 3.
class BudgetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline Nat pow2(int e) {
    if (e < 0 || e > 62)
        throw ValidationError("pow2 exponent out of range: " + std::to_string(e));
    return Nat{1} << e;
}

inline Nat checked_add(Nat a, Nat b) {
    Nat r = 0;
    if (__builtin_add_overflow(a, b, &r))
        throw ValidationError("unsigned overflow in addition");
    return r;
}

inline Nat checked_mul(Nat a, Nat b) {
    Nat r = 0;
    if (__builtin_mul_overflow(a, b, &r))
        throw ValidationError("unsigned overflow in multiplication");
    return r;
}

inline std::uint64_t fnv1a64(const void* data, std::size_t len,
                             std::uint64_t h = 0xcbf29ce484222325ULL) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline std::uint64_t fnv1a64(const std::string& s) {
    return fnv1a64(s.data(), s.size());
}

} // namespace redchain

#endif
