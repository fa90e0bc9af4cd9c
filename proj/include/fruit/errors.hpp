#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fruit {

/// Thrown when a residue map is requested at a modulus the stored root
/// precision cannot support.
struct PrecisionError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Thrown instead of starting a box search whose cost estimate exceeds the
/// configured cap. Carries the exact decimal estimate.
class CostCapError : public std::runtime_error {
public:
    CostCapError(std::string estimated, std::uint64_t cap)
        : std::runtime_error("box search would evaluate " + estimated +
                             " candidates, above the cost cap " + std::to_string(cap)),
          estimated_(std::move(estimated)),
          cap_(cap) {}

    const std::string& estimated() const noexcept { return estimated_; }
    std::uint64_t cap() const noexcept { return cap_; }

private:
    std::string estimated_;
    std::uint64_t cap_;
};

}  // namespace fruit
