#include "fruit/curves.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "parallel_slices.hpp"

namespace fruit {

namespace {

QuadInt scaled(const QuadInt& x, long long k) {
    return QuadInt(x.u() * static_cast<long>(k), x.v() * static_cast<long>(k), x.field());
}

bool point_less(const CurvePoint& a, const CurvePoint& b) {
    if (int c = cmp(a.x.u(), b.x.u())) return c < 0;
    if (int c = cmp(a.x.v(), b.x.v())) return c < 0;
    if (int c = cmp(a.y.u(), b.y.u())) return c < 0;
    return cmp(a.y.v(), b.y.v()) < 0;
}

}  // namespace

WeierstrassCurve WeierstrassCurve::from_coefficients(QuadInt a1, QuadInt a2, QuadInt a3,
                                                     QuadInt a4, QuadInt a6) {
    const Field& f = a1.field();
    if (a2.field() != f || a3.field() != f || a4.field() != f || a6.field() != f)
        throw std::invalid_argument("curve coefficients belong to different fields");

    QuadInt b2 = a1 * a1 + scaled(a2, 4);
    QuadInt b4 = scaled(a4, 2) + a1 * a3;
    QuadInt b6 = a3 * a3 + scaled(a6, 4);
    QuadInt b8 = a1 * a1 * a6 + scaled(a2 * a6, 4) - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
    QuadInt delta = -(b2 * b2 * b8) - scaled(b4 * b4 * b4, 8) - scaled(b6 * b6, 27) +
                    scaled(b2 * b4 * b6, 9);
    return WeierstrassCurve{std::move(a1), std::move(a2), std::move(a3), std::move(a4),
                            std::move(a6), std::move(b2), std::move(b4),  std::move(b6),
                            std::move(b8), std::move(delta)};
}

WeierstrassCurve curve_from_alpha(const QuadInt& alpha) {
    const Field& f = alpha.field();
    QuadInt zero = QuadInt::zero(f);
    QuadInt a6 = -(alpha * alpha + QuadInt::integer(5, f));
    return WeierstrassCurve::from_coefficients(-alpha, zero, zero, zero, std::move(a6));
}

QuadInt paper_discriminant_poly(const QuadInt& alpha) {
    const Field& f = alpha.field();
    QuadInt a2 = alpha * alpha;
    QuadInt a4 = a2 * a2;
    QuadInt a6 = a4 * a2;
    QuadInt a8 = a4 * a4;
    return a8 + scaled(a6, 5) - scaled(a4, 432) - scaled(a2, 5184) - QuadInt::integer(15552, f);
}

bool is_valid_alpha(const QuadInt& alpha) { return curve_from_alpha(alpha).is_elliptic(); }

bool point_on_curve(const WeierstrassCurve& curve, const CurvePoint& p) {
    QuadInt lhs = p.y * p.y + curve.a1 * p.x * p.y + curve.a3 * p.y;
    QuadInt rhs = p.x * p.x * p.x + curve.a2 * p.x * p.x + curve.a4 * p.x + curve.a6;
    return lhs == rhs;
}

BigInt curve_box_cost_estimate(const Field& f, long long bound) {
    BigInt side = 2 * to_bigint(bound) + 1;
    BigInt est;
    mpz_pow_ui(est.get_mpz_t(), side.get_mpz_t(), f.is_rational() ? 1 : 4);
    return est;
}

std::vector<CurvePoint> integral_point_search(const WeierstrassCurve& curve, long long bound,
                                              bool even_x_only, const SearchLimits& limits) {
    if (!curve.is_elliptic())
        throw std::domain_error("integral_point_search: curve is singular (delta = 0)");
    if (bound < 1) throw std::domain_error("integral_point_search: bound must be positive");
    const Field& f = curve.field();
    const BigInt estimate = curve_box_cost_estimate(f, bound);
    if (estimate > limits.cost_cap) throw CostCapError(estimate.get_str(), limits.cost_cap);

    const long long B = bound;
    if (f.is_rational()) {
        // y^2 + (a1 x + a3) y - (x^3 + a2 x^2 + a4 x + a6) = 0
        std::vector<CurvePoint> found;
        BigInt disc, root;
        for (long long xi = -B; xi <= B; ++xi) {
            if (even_x_only && (xi & 1)) continue;
            BigInt x = to_bigint(xi);
            BigInt lin = curve.a1.u() * x + curve.a3.u();
            BigInt rhs = ((x + curve.a2.u()) * x + curve.a4.u()) * x + curve.a6.u();
            disc = lin * lin + 4 * rhs;
            if (disc < 0) continue;
            if (!mpz_perfect_square_p(disc.get_mpz_t())) continue;
            mpz_sqrt(root.get_mpz_t(), disc.get_mpz_t());
            for (int sign : {-1, 1}) {
                if (sign > 0 && root == 0) continue;
                BigInt num = -lin + sign * root;
                if (mpz_odd_p(num.get_mpz_t())) continue;
                BigInt y = num / 2;
                if (y < static_cast<long>(-B) || y > static_cast<long>(B)) continue;
                found.push_back(
                    CurvePoint{QuadInt::integer(x, f), QuadInt::integer(std::move(y), f)});
            }
        }
        std::sort(found.begin(), found.end(), point_less);
        return found;
    }

    const bool parallel = estimate >= 1'000'000;
    auto scan_slice = [&](long long ux_lo, long long ux_hi) {
        std::vector<CurvePoint> part;
        for (long long ux = ux_lo; ux <= ux_hi; ++ux) {
            if (even_x_only && (ux & 1)) continue;
            for (long long vx = -B; vx <= B; ++vx) {
                if (even_x_only && (vx & 1)) continue;
                QuadInt x(to_bigint(ux), to_bigint(vx), f);
                QuadInt rhs = ((x + curve.a2) * x + curve.a4) * x + curve.a6;
                QuadInt lin = curve.a1 * x + curve.a3;
                for (long long uy = -B; uy <= B; ++uy) {
                    for (long long vy = -B; vy <= B; ++vy) {
                        QuadInt y(to_bigint(uy), to_bigint(vy), f);
                        if ((y * y + lin * y - rhs).is_zero()) part.push_back(CurvePoint{x, y});
                    }
                }
            }
        }
        return part;
    };
    return detail::run_sliced<CurvePoint>(-B, B, parallel, limits.threads, scan_slice);
}

Witness point_to_fruit_witness(const QuadInt& alpha, const CurvePoint& p) {
    if (!point_on_curve(curve_from_alpha(alpha), p))
        throw std::domain_error("point_to_fruit_witness: point is not on E_alpha");
    return Witness{p.x, p.y, alpha, divisible_by_two(p.x)};
}

namespace {

// Factorization by trial division up to 2e6; a larger cofactor is classified
// as prime, prime square, or a square-free semiprime, which is all the
// square-divisor enumeration needs. Throws for cofactors too large to class.
std::map<BigInt, unsigned> factor_for_square_divisors(BigInt m) {
    constexpr unsigned long kTrialLimit = 2'000'000;
    std::map<BigInt, unsigned> factors;
    if (m < 0) m = -m;
    if (m <= 1) return factors;
    for (unsigned long p = 2; p <= kTrialLimit; p += (p == 2 ? 1 : 2)) {
        if (BigInt(p) * p > m) break;
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
            ++factors[BigInt(p)];
        }
    }
    if (m == 1) return factors;
    if (BigInt(kTrialLimit) * kTrialLimit >= m || mpz_probab_prime_p(m.get_mpz_t(), 30) > 0) {
        ++factors[m];
        return factors;
    }
    if (mpz_perfect_square_p(m.get_mpz_t())) {
        BigInt s;
        mpz_sqrt(s.get_mpz_t(), m.get_mpz_t());
        factors[s] += 2;  // s has no factor below the trial limit, hence prime
        return factors;
    }
    BigInt cube = BigInt(kTrialLimit) * kTrialLimit * kTrialLimit;
    if (m < cube) {
        factors[m] += 1;  // square-free semiprime; contributes no square divisor
        return factors;
    }
    throw std::domain_error("torsion candidates: discriminant too large to factor");
}

std::vector<BigInt> square_divisor_roots(const std::map<BigInt, unsigned>& factors) {
    std::vector<BigInt> roots{1};
    for (const auto& [p, e] : factors) {
        const unsigned half = e / 2;
        if (half == 0) continue;
        std::vector<BigInt> next;
        next.reserve(roots.size() * (half + 1));
        for (const BigInt& r : roots) {
            BigInt pk = 1;
            for (unsigned i = 0; i <= half; ++i) {
                next.push_back(r * pk);
                pk *= p;
            }
        }
        roots = std::move(next);
    }
    return roots;
}

BigInt cubic_at(const BigInt& A, const BigInt& C, const BigInt& x) {
    return (x * x + A) * x + C;
}

// Exact integer roots of X^3 + AX + C by sign-change bisection over the
// monotone pieces cut at the derivative's critical points.
std::vector<BigInt> integer_roots_depressed_cubic(const BigInt& A, const BigInt& C) {
    std::vector<BigInt> breakpoints;
    BigInt bound = 1 + std::max(abs(A), abs(C));
    breakpoints.push_back(-bound);
    if (A < 0) {
        BigInt r;
        mpz_sqrt(r.get_mpz_t(), BigInt((-A) / 3).get_mpz_t());
        const BigInt near_critical[] = {BigInt(-r - 1), BigInt(-r), BigInt(-r + 1),
                                        BigInt(r - 1),  r,          BigInt(r + 1)};
        for (const BigInt& c : near_critical) breakpoints.push_back(c);
    }
    breakpoints.push_back(bound);
    std::sort(breakpoints.begin(), breakpoints.end());
    breakpoints.erase(std::unique(breakpoints.begin(), breakpoints.end()), breakpoints.end());

    std::vector<BigInt> roots;
    for (const BigInt& b : breakpoints)
        if (cubic_at(A, C, b) == 0) roots.push_back(b);
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        BigInt lo = breakpoints[i], hi = breakpoints[i + 1];
        BigInt flo = cubic_at(A, C, lo), fhi = cubic_at(A, C, hi);
        if (sgn(flo) * sgn(fhi) >= 0) continue;
        while (hi - lo > 1) {
            BigInt mid = (lo + hi) / 2;
            BigInt fmid = cubic_at(A, C, mid);
            if (fmid == 0) {
                roots.push_back(mid);
                break;
            }
            if (sgn(fmid) == sgn(flo)) {
                lo = mid;
                flo = fmid;
            } else {
                hi = mid;
                fhi = fmid;
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

}  // namespace

std::vector<TorsionCandidate> torsion_candidates_over_q(const WeierstrassCurve& curve) {
    if (!curve.field().is_rational())
        throw std::domain_error("torsion candidates are enumerated over Q only");
    if (!curve.is_elliptic())
        throw std::domain_error("torsion candidates: curve is singular (delta = 0)");

    const BigInt b2 = curve.b2.u(), b4 = curve.b4.u(), b6 = curve.b6.u();
    const BigInt c4 = b2 * b2 - 24 * b4;
    const BigInt c6 = -(b2 * b2 * b2) + 36 * b2 * b4 - 216 * b6;
    const BigInt A = -27 * c4;
    const BigInt B = -54 * c6;
    const BigInt D = 4 * A * A * A + 27 * B * B;

    std::vector<BigInt> y_candidates{0};
    for (const BigInt& m : square_divisor_roots(factor_for_square_divisors(D))) {
        y_candidates.push_back(m);
        y_candidates.push_back(-m);
    }

    const BigRat a1(curve.a1.u()), a2(curve.a2.u()), a3(curve.a3.u());
    const BigRat a4(curve.a4.u()), a6(curve.a6.u());
    std::vector<TorsionCandidate> out;
    for (const BigInt& Y : y_candidates) {
        for (const BigInt& X : integer_roots_depressed_cubic(A, B - Y * Y)) {
            BigRat x = BigRat(X - 3 * b2) / 36;
            BigRat y = BigRat(Y) / 216 - (a1 * x + a3) / 2;
            BigRat lhs = y * y + a1 * x * y + a3 * y;
            BigRat rhs = x * x * x + a2 * x * x + a4 * x + a6;
            if (lhs != rhs) continue;
            bool even_num = mpz_even_p(x.get_num().get_mpz_t());
            out.push_back(TorsionCandidate{std::move(x), std::move(y), even_num});
        }
    }
    std::sort(out.begin(), out.end(), [](const TorsionCandidate& a, const TorsionCandidate& b) {
        if (int c = cmp(a.x, b.x)) return c < 0;
        return cmp(a.y, b.y) < 0;
    });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const TorsionCandidate& a, const TorsionCandidate& b) {
                              return a.x == b.x && a.y == b.y;
                          }),
              out.end());
    return out;
}

}  // namespace fruit
