#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fruit/quad_field.hpp"

namespace fruit {

struct SieveConfig {
    std::size_t segment_size = std::size_t(1) << 26;  // integers per segment; power of two
};

/// Square-free indicator over [0, limit]; entries 0 and 1 are false (the set
/// starts at t = 2). Requires limit >= 2.
std::vector<bool> squarefree_sieve(std::uint64_t limit);

/// Residue class t = r (mod N) within the square-free integers 2..X.
struct ResidueClassQuery {
    std::uint64_t residue = 0;  // 0 <= residue < modulus
    std::uint64_t modulus = 1;
    std::uint64_t limit = 2;  // X >= 2
};

std::uint64_t count_squarefree(std::uint64_t limit, const SieveConfig& cfg = {});
std::uint64_t count_residue_class(const ResidueClassQuery& q, const SieveConfig& cfg = {});

std::uint64_t euler_phi(std::uint64_t n);

/// Exact rational q in the asymptotic #N^sf_{r,N}(X) ~ q * (6/pi^2) * X;
/// q is also the predicted relative density of the class. Requires
/// gcd(r, N) square-free.
BigRat fs_asymptotic_constant(std::uint64_t r, std::uint64_t modulus);

struct DensityReport {
    ResidueClassQuery query;
    std::uint64_t count_class = 0;
    std::uint64_t count_squarefree = 0;
    BigRat rel_density_empirical;  // count_class / count_squarefree
    BigRat abs_density_empirical;  // count_class / X
    BigRat asymptotic_constant;    // q, exact
    BigRat predicted_rel_density;  // = q; the absolute prediction is q * (6/pi^2)
};

DensityReport density_report(const ResidueClassQuery& q, const SieveConfig& cfg = {});

/// Decimal rendering of an exact rational (12 significant digits by default;
/// pi enters only at render time).
std::string to_decimal(const BigRat& value, int significant_digits = 12);

}  // namespace fruit
