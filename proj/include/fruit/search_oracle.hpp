#pragma once

#include <cstdint>
#include <vector>

#include "fruit/quad_field.hpp"

namespace fruit {

/// Coordinate box: every integral-basis coordinate of x, y, z ranges over
/// [-bound, bound]. The box holds (2B+1)^6 triples over a quadratic field
/// and (2B+1)^3 over Q.
struct SearchBox {
    long long bound = 1;
};

struct Witness {
    QuadInt x, y, z;
    bool even_x = false;
};

struct SearchLimits {
    std::uint64_t cost_cap = 1'000'000'000ULL;  // candidate evaluations
    unsigned threads = 0;                       // 0 = hardware concurrency
};

/// Candidate evaluations a box search will perform: (2B+1)^2 over Q (the
/// inner quadratic in y is solved directly) and (2B+1)^6 over a quadratic
/// field (full coordinate scan).
BigInt box_cost_estimate(const Field& f, long long bound);

/// All witnesses of a x^d - y^2 - z^2 + xyz - c = 0 inside the box, in
/// lexicographic coordinate order (u_x, v_x, u_y, v_y, u_z, v_z). With
/// even_x_only, x must lie in 2*O_K. Throws CostCapError instead of starting
/// a search above the cost cap.
std::vector<Witness> enumerate_solutions(const Field& field, const QuadInt& a, const QuadInt& c,
                                         unsigned d, const SearchBox& box, bool even_x_only,
                                         const SearchLimits& limits = {});

/// Exact re-check of the equation at a single triple.
bool verify_witness(const Field& field, const QuadInt& a, const QuadInt& c, unsigned d,
                    const Witness& w);

}  // namespace fruit
