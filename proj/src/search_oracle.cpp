#include "fruit/search_oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "parallel_slices.hpp"

namespace fruit {

namespace {

int compare(const BigInt& a, const BigInt& b) { return cmp(a, b); }

bool witness_less(const Witness& a, const Witness& b) {
    if (int c = compare(a.x.u(), b.x.u())) return c < 0;
    if (int c = compare(a.x.v(), b.x.v())) return c < 0;
    if (int c = compare(a.y.u(), b.y.u())) return c < 0;
    if (int c = compare(a.y.v(), b.y.v())) return c < 0;
    if (int c = compare(a.z.u(), b.z.u())) return c < 0;
    return compare(a.z.v(), b.z.v()) < 0;
}

bool witness_eq(const Witness& a, const Witness& b) {
    return a.x == b.x && a.y == b.y && a.z == b.z;
}

void check_inputs(const Field& field, const QuadInt& a, const QuadInt& c, unsigned d,
                  long long bound) {
    if (a.field() != field || c.field() != field)
        throw std::invalid_argument("search: a and c must live in the given field");
    if (a.is_zero()) throw std::domain_error("search: a must be nonzero");
    if (d < 1) throw std::domain_error("search: d must be positive");
    if (bound < 1) throw std::domain_error("search: bound must be positive");
}

}  // namespace

BigInt box_cost_estimate(const Field& f, long long bound) {
    BigInt side = 2 * to_bigint(bound) + 1;
    BigInt est;
    mpz_pow_ui(est.get_mpz_t(), side.get_mpz_t(), f.is_rational() ? 2 : 6);
    return est;
}

std::vector<Witness> enumerate_solutions(const Field& field, const QuadInt& a, const QuadInt& c,
                                         unsigned d, const SearchBox& box, bool even_x_only,
                                         const SearchLimits& limits) {
    check_inputs(field, a, c, d, box.bound);
    const BigInt estimate = box_cost_estimate(field, box.bound);
    if (estimate > limits.cost_cap) throw CostCapError(estimate.get_str(), limits.cost_cap);

    const long long B = box.bound;
    std::vector<Witness> found;

    if (field.is_rational()) {
        // y^2 - (xz) y + (z^2 + c - a x^d) = 0
        BigInt disc, root;
        for (long long xi = -B; xi <= B; ++xi) {
            if (even_x_only && (xi & 1)) continue;
            BigInt x = to_bigint(xi);
            BigInt axd = a.u();
            for (unsigned i = 0; i < d; ++i) axd *= x;
            for (long long zi = -B; zi <= B; ++zi) {
                BigInt z = to_bigint(zi);
                BigInt q = x * z;
                BigInt p = z * z + c.u() - axd;
                disc = q * q - 4 * p;
                if (disc < 0) continue;
                if (!mpz_perfect_square_p(disc.get_mpz_t())) continue;
                mpz_sqrt(root.get_mpz_t(), disc.get_mpz_t());
                for (int sign : {-1, 1}) {
                    if (sign > 0 && root == 0) continue;
                    BigInt num = q + sign * root;
                    if (mpz_odd_p(num.get_mpz_t())) continue;
                    BigInt y = num / 2;
                    if (y < static_cast<long>(-B) || y > static_cast<long>(B)) continue;
                    found.push_back(Witness{QuadInt::integer(x, field),
                                            QuadInt::integer(std::move(y), field),
                                            QuadInt::integer(z, field), (xi & 1) == 0});
                }
            }
        }
        std::sort(found.begin(), found.end(), witness_less);
        found.erase(std::unique(found.begin(), found.end(), witness_eq), found.end());
        return found;
    }

    // Quadratic field: full lexicographic scan, sliced over u_x.
    const bool parallel = estimate >= 1'000'000;
    auto scan_slice = [&](long long ux_lo, long long ux_hi) {
        std::vector<Witness> part;
        for (long long ux = ux_lo; ux <= ux_hi; ++ux) {
            if (even_x_only && (ux & 1)) continue;
            for (long long vx = -B; vx <= B; ++vx) {
                if (even_x_only && (vx & 1)) continue;
                QuadInt x(to_bigint(ux), to_bigint(vx), field);
                QuadInt axd = a * x.pow(d);
                for (long long uy = -B; uy <= B; ++uy) {
                    for (long long vy = -B; vy <= B; ++vy) {
                        QuadInt y(to_bigint(uy), to_bigint(vy), field);
                        QuadInt t0 = axd - y * y - c;
                        QuadInt w = x * y;
                        for (long long uz = -B; uz <= B; ++uz) {
                            for (long long vz = -B; vz <= B; ++vz) {
                                QuadInt z(to_bigint(uz), to_bigint(vz), field);
                                if ((t0 - z * z + w * z).is_zero())
                                    part.push_back(Witness{x, y, z, divisible_by_two(x)});
                            }
                        }
                    }
                }
            }
        }
        return part;
    };
    return detail::run_sliced<Witness>(-B, B, parallel, limits.threads, scan_slice);
}

bool verify_witness(const Field& field, const QuadInt& a, const QuadInt& c, unsigned d,
                    const Witness& w) {
    if (a.field() != field || c.field() != field || w.x.field() != field ||
        w.y.field() != field || w.z.field() != field)
        throw std::invalid_argument("verify_witness: mixed fields");
    QuadInt value = a * w.x.pow(d) - w.y * w.y - w.z * w.z + w.x * w.y * w.z - c;
    return value.is_zero();
}

}  // namespace fruit
