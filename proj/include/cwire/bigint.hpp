#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "cwire/errors.hpp"

namespace cwire {

using BigInt = boost::multiprecision::cpp_int;

/// Largest exponent pow2 accepts. Keeps a single value below ~8 MiB; the
/// tower schedules blow past any memory budget shortly after this anyway.
inline constexpr std::uint64_t kMaxPow2Exponent = std::uint64_t{1} << 26;

/// 2^exponent with an explicit guard against unmaterializable towers.
BigInt pow2(const BigInt& exponent);

/// base^exponent for small bases (schedule plumbing).
BigInt ipow(std::uint64_t base, std::uint64_t exponent);

/// Compact rendering for reports: small values verbatim, huge values
/// abbreviated with a digit count.
std::string brief(const BigInt& value);

/// Checked narrowing; throws FamilyError when the value does not fit.
std::uint64_t to_u64(const BigInt& value, const char* what);

} // namespace cwire
