#include "cwire/families.hpp"

#include <algorithm>
#include <utility>

namespace cwire {

ColumnFunction::ColumnFunction(std::string name,
                               std::function<std::uint64_t(std::uint64_t)> rule)
    : name_(std::move(name)), rule_(std::move(rule)) {}

std::uint64_t ColumnFunction::operator()(std::uint64_t n) const {
    if (n == 0) {
        throw FamilyError("column function '" + name_ + "' is defined for n >= 1");
    }
    const std::uint64_t value = rule_(n);
    if (n == 1) {
        if (value != 1) {
            throw FamilyError("column function '" + name_ + "' must satisfy f(1) = 1, got " +
                              std::to_string(value));
        }
    } else if (value < 2 || value > n) {
        throw FamilyError("column function '" + name_ + "' must satisfy 2 <= f(n) <= n; f(" +
                          std::to_string(n) + ") = " + std::to_string(value));
    }
    return value;
}

namespace {

std::uint64_t smallest_prime_factor(std::uint64_t n) {
    if (n % 2 == 0) return 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return d;
    }
    return n;
}

// Index of prime p in the enumeration p_1 = 2, p_2 = 3, ...
std::uint64_t prime_index(std::uint64_t p) {
    std::vector<char> composite(p + 1, 0);
    std::uint64_t index = 0;
    for (std::uint64_t q = 2; q <= p; ++q) {
        if (composite[q]) continue;
        ++index;
        for (std::uint64_t m = q * q; m <= p; m += q) composite[m] = 1;
    }
    return index;
}

} // namespace

std::uint64_t f_default(std::uint64_t n) {
    if (n == 0) throw FamilyError("f_default is defined for n >= 1");
    if (n == 1) return 1;
    return prime_index(smallest_prime_factor(n)) + 1;
}

ColumnFunction default_column_function() {
    return ColumnFunction("default", [](std::uint64_t n) { return f_default(n); });
}

ColumnFunction parse_column_function(const std::string& name) {
    if (name == "default") return default_column_function();
    throw FamilyError("unknown column function '" + name + "' (registry knows: default)");
}

HeightSchedule::HeightSchedule(std::string name,
                               std::function<BigInt(std::uint64_t)> hx,
                               std::function<BigInt(std::uint64_t)> hy)
    : name_(std::move(name)), hx_(std::move(hx)), hy_(std::move(hy)) {}

BigInt HeightSchedule::hx(std::uint64_t n) const {
    if (n == 0) throw FamilyError("height schedule '" + name_ + "' is defined for n >= 1");
    BigInt v = hx_(n);
    if (v < 1) {
        throw FamilyError("schedule '" + name_ + "': hx(" + std::to_string(n) + ") = " +
                          brief(v) + " violates hx >= 1");
    }
    return v;
}

BigInt HeightSchedule::hy(std::uint64_t n) const {
    BigInt x = hx(n);
    BigInt y = hy_(n);
    if (y < x) {
        throw FamilyError("schedule '" + name_ + "': hy(" + std::to_string(n) + ") = " +
                          brief(y) + " violates hy >= hx");
    }
    return y;
}

HeightSchedule paper_schedule() {
    auto tower = [](std::uint64_t exp2) {
        // 2^(2^exp2); the inner exponent must itself stay materializable.
        if (exp2 >= 63) throw FamilyError("schedule exponent too large: 2^2^" + std::to_string(exp2));
        return pow2(BigInt(std::uint64_t{1} << exp2));
    };
    return HeightSchedule(
        "paper",
        [tower](std::uint64_t n) { return tower(2 * n); },
        [tower](std::uint64_t n) { return tower(2 * n + 1); });
}

HeightSchedule toy_schedule(std::uint64_t base) {
    if (base < 1) throw FamilyError("toy schedule base must be >= 1");
    return HeightSchedule(
        "toy:" + std::to_string(base),
        [base](std::uint64_t n) { return ipow(base, n); },
        [base](std::uint64_t n) { return ipow(base, n) * ipow(base, n); });
}

HeightSchedule parse_schedule(const std::string& text) {
    if (text == "paper") return paper_schedule();
    if (text.rfind("toy:", 0) == 0) {
        const std::string arg = text.substr(4);
        try {
            std::size_t used = 0;
            const unsigned long long base = std::stoull(arg, &used);
            if (used != arg.size()) throw std::invalid_argument(arg);
            return toy_schedule(base);
        } catch (const std::exception&) {
            throw FamilyError("bad toy schedule base '" + arg + "'");
        }
    }
    throw FamilyError("unknown schedule '" + text + "' (expected 'paper' or 'toy:<base>')");
}

FamilyConfig FamilyConfig::paper() {
    return FamilyConfig{paper_schedule(), default_column_function()};
}

FamilyConfig FamilyConfig::toy(std::uint64_t base) {
    return FamilyConfig{toy_schedule(base), default_column_function()};
}

namespace {

Graph build_family_member(std::uint64_t n, const FamilyConfig& cfg, std::uint64_t cap,
                          const BigInt& spacing, const char* prefix) {
    const std::uint64_t f = cfg.colfn(n);
    const BigInt count = (spacing * f + 1) * f;
    if (count > cap) {
        throw GraphError("instance too large: " + std::string(prefix) + "_" +
                         std::to_string(n) + " under schedule '" + cfg.schedule.name() +
                         "' has " + brief(count) + " vertices, exceeding the materialization cap of " +
                         std::to_string(cap) + " vertices");
    }
    LadderSpec spec{f, to_u64(spacing, "rung spacing"), f};
    return build_ladder(spec, static_cast<std::uint32_t>(n), cap,
                        std::string(prefix) + "_" + std::to_string(n));
}

} // namespace

Graph build_x(std::uint64_t n, const FamilyConfig& cfg, std::uint64_t cap) {
    return build_family_member(n, cfg, cap, cfg.schedule.hx(n), "X");
}

Graph build_y(std::uint64_t n, const FamilyConfig& cfg, std::uint64_t cap) {
    return build_family_member(n, cfg, cap, cfg.schedule.hy(n), "Y");
}

BigInt vol_x(std::uint64_t n, const FamilyConfig& cfg) {
    const BigInt f = cfg.colfn(n);
    return (cfg.schedule.hx(n) * f + 1) * f;
}

BigInt vol_y(std::uint64_t n, const FamilyConfig& cfg) {
    const BigInt f = cfg.colfn(n);
    return (cfg.schedule.hy(n) * f + 1) * f;
}

bool in_i_k(std::uint64_t n, std::uint64_t k, const FamilyConfig& cfg) {
    if (k < 1) throw FamilyError("I_k requires k >= 1");
    return cfg.colfn(n) == k;
}

std::vector<BigInt> enumerate_i_k(std::uint64_t k, std::size_t count,
                                  const FamilyConfig& cfg, std::uint64_t horizon) {
    if (k < 1) throw FamilyError("I_k requires k >= 1");
    std::vector<BigInt> out;
    for (std::uint64_t n = 1; n <= horizon && out.size() < count; ++n) {
        if (cfg.colfn(n) == k) out.push_back(vol_x(n, cfg));
    }
    if (out.size() < count) {
        throw FamilyError("I_" + std::to_string(k) + " enumeration horizon " +
                          std::to_string(horizon) + " exhausted after " +
                          std::to_string(out.size()) + " of " + std::to_string(count) +
                          " values");
    }
    return out;
}

bool VerificationReport::all_hold() const {
    return std::all_of(claims.begin(), claims.end(),
                       [](const VerificationClaim& c) { return c.holds; });
}

std::string to_string(const VerificationReport& report) {
    std::string out = report.title + "\n";
    for (const auto& claim : report.claims) {
        out += std::string(claim.holds ? "  [ok]   " : "  [FAIL] ") + claim.description + "\n";
    }
    return out;
}

VerificationReport verify_lower_bound_arithmetic(std::uint64_t n, std::uint64_t m,
                                                 const FamilyConfig& cfg) {
    if (m < 1 || m >= n) {
        throw FamilyError("lower-bound arithmetic requires 1 <= m < n, got m = " +
                          std::to_string(m) + ", n = " + std::to_string(n));
    }
    const BigInt hxn = cfg.schedule.hx(n);
    const BigInt hxm = cfg.schedule.hx(m);
    const BigInt hym = cfg.schedule.hy(m);
    const BigInt fn = cfg.colfn(n);
    const BigInt fm = cfg.colfn(m);
    const BigInt m2 = BigInt(m) * m;

    VerificationReport report;
    report.title = "lower-bound arithmetic, schedule '" + cfg.schedule.name() + "', n = " +
                   std::to_string(n) + ", m = " + std::to_string(m);
    report.claims.push_back(
        {"hx(n) > m^2 * hy(m): " + brief(hxn) + " > " + brief(m2 * hym),
         hxn > m2 * hym});
    report.claims.push_back(
        {"m^2 < hx(m): " + brief(m2) + " < " + brief(hxm), m2 < hxm});
    report.claims.push_back(
        {"hx(n)*f(n)^2 > (f(n)-1)*f(m)^2*hy(m): " + brief(hxn * fn * fn) + " > " +
             brief((fn - 1) * fm * fm * hym),
         hxn * fn * fn > (fn - 1) * fm * fm * hym});
    return report;
}

VerificationReport verify_profile_constants(std::uint64_t n, const FamilyConfig& cfg) {
    if (n < 2) {
        throw FamilyError("profile constants require n >= 2 (f(1) = 1 is degenerate)");
    }
    const BigInt hyn = cfg.schedule.hy(n);
    const BigInt fn = cfg.colfn(n);
    const BigInt vx = vol_x(n, cfg);
    const BigInt denom = fn * (fn + 1);

    VerificationReport report;
    report.title = "profile constants, schedule '" + cfg.schedule.name() + "', n = " +
                   std::to_string(n);
    report.claims.push_back(
        {"hy(n)*(f(n)*(f(n)+1))^2 >= vol_x(n)^2: " + brief(hyn * denom * denom) +
             " >= " + brief(vx * vx),
         hyn * denom * denom >= vx * vx});
    return report;
}

VerificationReport verify_upper_bound_chain(std::uint64_t n, const FamilyConfig& cfg) {
    if (n < 2) {
        throw FamilyError("upper-bound chain requires n >= 2");
    }
    const BigInt hxn = cfg.schedule.hx(n);
    const BigInt hyp = cfg.schedule.hy(n - 1);
    const BigInt fn = cfg.colfn(n);
    const BigInt vx = vol_x(n, cfg);
    const BigInt nm1 = BigInt(n) - 1;

    VerificationReport report;
    report.title = "upper-bound chain, schedule '" + cfg.schedule.name() + "', n = " +
                   std::to_string(n);
    report.claims.push_back(
        {"(hy(n-1)*(n-1)+1)*(n-1)^2 <= hx(n): " + brief((hyp * nm1 + 1) * nm1 * nm1) +
             " <= " + brief(hxn),
         (hyp * nm1 + 1) * nm1 * nm1 <= hxn});
    report.claims.push_back(
        {"hx(n)*f(n)+1+hx(n) <= hx(n)*f(n)^2+1",
         hxn * fn + 1 + hxn <= hxn * fn * fn + 1});
    report.claims.push_back(
        {"hx(n)*f(n)^2+1 <= vol_x(n)", hxn * fn * fn + 1 <= vx});
    report.claims.push_back(
        {"vol_x(n)+vol_x(n) <= 2*vol_x(n)", vx + vx <= 2 * vx});
    return report;
}

} // namespace cwire
