#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace support {

// FNV-1a, 64-bit. Used for transition ids and prompt/cache keys, which must be
// stable across runs and platforms (std::hash is neither).
class Fnv1a64 {
public:
    Fnv1a64& update(std::string_view bytes) {
        for (unsigned char c : bytes) {
            state_ ^= c;
            state_ *= kPrime;
        }
        return *this;
    }

    Fnv1a64& update_u64(std::uint64_t v) {
        for (int i = 0; i < 8; ++i) {
            state_ ^= (v >> (8 * i)) & 0xffu;
            state_ *= kPrime;
        }
        return *this;
    }

    Fnv1a64& update_i32(std::int32_t v) { return update_u64(static_cast<std::uint32_t>(v)); }

    std::uint64_t value() const { return state_; }

    std::string hex() const {
        static const char* digits = "0123456789abcdef";
        std::string out(16, '0');
        std::uint64_t v = state_;
        for (int i = 15; i >= 0; --i) {
            out[static_cast<size_t>(i)] = digits[v & 0xf];
            v >>= 4;
        }
        return out;
    }

private:
    static constexpr std::uint64_t kPrime = 1099511628211ull;
    std::uint64_t state_ = 14695981039346656037ull;
};

inline std::string fnv1a64_hex(std::string_view bytes) {
    return Fnv1a64{}.update(bytes).hex();
}

}  // namespace support
