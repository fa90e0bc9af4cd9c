#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace fruit {

enum class OutputMode { Human, Json };

struct GlobalConfig {
    std::uint64_t cost_cap = 1'000'000'000ULL;        // >= 10^4
    std::size_t sieve_segment = std::size_t(1) << 26;  // power of two
    OutputMode output_mode = OutputMode::Human;

    /// Applies the FRUIT_COST_CAP environment override, then validates.
    static GlobalConfig from_environment();
    void validate() const;
};

/// Dispatches one subcommand (field, obstruct, search, density, curve).
/// JSON mode writes exactly one JSON document to `out`; diagnostics go to
/// `err`. Exit status: 0 success, 1 usage error, 2 domain error, 3 cost-cap
/// refusal.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fruit
