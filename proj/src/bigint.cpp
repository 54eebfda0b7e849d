#include "cwire/bigint.hpp"

namespace cwire {

BigInt pow2(const BigInt& exponent) {
    if (exponent < 0) {
        throw FamilyError("pow2: negative exponent");
    }
    if (exponent > kMaxPow2Exponent) {
        throw FamilyError("schedule exponent too large: 2^" + brief(exponent) +
                          " exceeds the supported bit width of " +
                          std::to_string(kMaxPow2Exponent));
    }
    return BigInt(1) << static_cast<unsigned>(exponent);
}

BigInt ipow(std::uint64_t base, std::uint64_t exponent) {
    BigInt result = 1;
    BigInt b = base;
    std::uint64_t e = exponent;
    while (e > 0) {
        if (e & 1) result *= b;
        b *= b;
        e >>= 1;
    }
    return result;
}

std::string brief(const BigInt& value) {
    const std::string s = value.str();
    if (s.size() <= 24) return s;
    return s.substr(0, 8) + "..." + s.substr(s.size() - 4) + " (" +
           std::to_string(s.size()) + " digits)";
}

std::uint64_t to_u64(const BigInt& value, const char* what) {
    if (value < 0 || value > std::numeric_limits<std::uint64_t>::max()) {
        throw FamilyError(std::string(what) + " does not fit in 64 bits: " + brief(value));
    }
    return static_cast<std::uint64_t>(value);
}

} // namespace cwire
