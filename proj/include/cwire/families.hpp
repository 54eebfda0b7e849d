#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "cwire/bigint.hpp"
#include "cwire/graph.hpp"
#include "cwire/ladder.hpp"

namespace cwire {

/// Total map n -> number of columns of the n-th family member.
/// Contract, checked on every evaluation: f(1) = 1 and 2 <= f(n) <= n for
/// n >= 2. Surjectivity and infinite preimages are documented properties of
/// the default rule, spot-checked in tests, never assumed by code paths.
class ColumnFunction {
public:
    ColumnFunction(std::string name, std::function<std::uint64_t(std::uint64_t)> rule);

    std::uint64_t operator()(std::uint64_t n) const;
    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
    std::function<std::uint64_t(std::uint64_t)> rule_;
};

/// n = 1 -> 1; otherwise 1 + (index of the smallest prime factor of n in the
/// prime enumeration p_1 = 2, p_2 = 3, ...).
std::uint64_t f_default(std::uint64_t n);

ColumnFunction default_column_function();

/// Column function by registry name ("default").
ColumnFunction parse_column_function(const std::string& name);

/// Rung spacings of the two families. Contract, checked on evaluation:
/// hx(n) >= 1 and hy(n) >= hx(n).
class HeightSchedule {
public:
    HeightSchedule(std::string name,
                   std::function<BigInt(std::uint64_t)> hx,
                   std::function<BigInt(std::uint64_t)> hy);

    BigInt hx(std::uint64_t n) const;
    BigInt hy(std::uint64_t n) const;
    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
    std::function<BigInt(std::uint64_t)> hx_;
    std::function<BigInt(std::uint64_t)> hy_;
};

/// hx(n) = 2^(2^(2n)), hy(n) = 2^(2^(2n+1)) = hx(n)^2.
HeightSchedule paper_schedule();

/// hx(n) = base^n, hy(n) = hx(n)^2. Desk-scale stand-in preserving hy = hx^2.
HeightSchedule toy_schedule(std::uint64_t base);

/// "paper" or "toy:<base>".
HeightSchedule parse_schedule(const std::string& text);

struct FamilyConfig {
    HeightSchedule schedule;
    ColumnFunction colfn;

    static FamilyConfig paper();
    static FamilyConfig toy(std::uint64_t base);
};

/// Materializes the n-th guest family member:
/// ladder(columns = f(n), spacing = hx(n), segments = f(n)), family label n.
Graph build_x(std::uint64_t n, const FamilyConfig& cfg,
              std::uint64_t cap = kDefaultMaterializationCap);

/// Host family member: same shape with spacing hy(n).
Graph build_y(std::uint64_t n, const FamilyConfig& cfg,
              std::uint64_t cap = kDefaultMaterializationCap);

/// Formula-level vertex counts, never materialized:
/// (hx(n)*f(n)+1)*f(n) and (hy(n)*f(n)+1)*f(n).
BigInt vol_x(std::uint64_t n, const FamilyConfig& cfg);
BigInt vol_y(std::uint64_t n, const FamilyConfig& cfg);

/// Membership in the index family I_k = { vol_x(n) : f(n) = k }.
bool in_i_k(std::uint64_t n, std::uint64_t k, const FamilyConfig& cfg);

/// First `count` values vol_x(n) with f(n) = k, by increasing n. Throws
/// FamilyError when the scan horizon is exhausted first.
std::vector<BigInt> enumerate_i_k(std::uint64_t k, std::size_t count,
                                  const FamilyConfig& cfg,
                                  std::uint64_t horizon = 100'000);

struct VerificationClaim {
    std::string description;
    bool holds = false;
};

struct VerificationReport {
    std::string title;
    std::vector<VerificationClaim> claims;

    bool all_hold() const;
};

std::string to_string(const VerificationReport& report);

/// Exact-integer checks behind the lower-bound contradiction chain, for
/// 1 <= m < n (throws otherwise):
///   (i)  hx(n) > m^2 * hy(m)
///   (ii) m^2 < hx(m)
///   (iii) hx(n)*f(n)^2 > (f(n)-1)*f(m)^2*hy(m)   (pigeonhole ratio bound)
VerificationReport verify_lower_bound_arithmetic(std::uint64_t n, std::uint64_t m,
                                                 const FamilyConfig& cfg = FamilyConfig::paper());

/// hy(n)*(f(n)*(f(n)+1))^2 >= vol_x(n)^2, cross-multiplied; n >= 2.
VerificationReport verify_profile_constants(std::uint64_t n,
                                            const FamilyConfig& cfg = FamilyConfig::paper());

/// Exact-integer checks behind both upper-bound chains, for n >= 2:
///   (hy(n-1)*(n-1)+1)*(n-1)^2 <= hx(n)
///   hx(n)*f(n)+1+hx(n) <= hx(n)*f(n)^2+1
///   hx(n)*f(n)^2+1 <= vol_x(n)
///   vol_x(n)+vol_x(n) <= 2*vol_x(n)
VerificationReport verify_upper_bound_chain(std::uint64_t n,
                                            const FamilyConfig& cfg = FamilyConfig::paper());

} // namespace cwire
