#include "fruit/obstruction.hpp"

#include <stdexcept>

namespace fruit {

FruitParams FruitParams::create(QuadInt a, QuadInt b, unsigned r, unsigned d) {
    if (a.field() != b.field())
        throw std::invalid_argument("FruitParams: a and b belong to different fields");
    if (a.is_zero() || b.is_zero())
        throw std::domain_error("FruitParams: a and b must be nonzero");
    if (r < 1 || d < 1) throw std::domain_error("FruitParams: r and d must be positive");
    QuadInt c = compute_c(b, r, d);
    return FruitParams{std::move(a), std::move(b), r, d, std::move(c)};
}

HypothesisReport HypothesisReport::evaluate(unsigned r, unsigned d) {
    HypothesisReport h;
    h.d_is_odd = (d % 2 == 1);
    h.d_at_least_2 = (d >= 2);
    h.r_at_least_2 = (r >= 2);
    h.r_is_odd = (r % 2 == 1);
    h.statement_satisfied = h.d_is_odd && h.r_at_least_2;
    h.proof_effective = h.d_at_least_2 && h.r_is_odd;
    return h;
}

const char* to_string(Verdict v) {
    return v == Verdict::NoSolutionWithEvenX ? "NoSolutionWithEvenX" : "Inconclusive";
}

QuadInt compute_c(const QuadInt& b, unsigned r, unsigned d) {
    BigInt three_r;
    mpz_ui_pow_ui(three_r.get_mpz_t(), 3, r);
    const BigInt two_d = pow2(d);
    return QuadInt(b.u() * two_d - three_r, b.v() * two_d, b.field());
}

std::pair<QuadInt, QuadInt> reduce_completed_square(const QuadInt& alpha1, const QuadInt& beta,
                                                    const QuadInt& gamma) {
    return {beta - alpha1 * gamma, gamma};
}

bool verify_reduction_identity(const QuadInt& alpha1, const QuadInt& beta, const QuadInt& gamma,
                               const QuadInt& a, const QuadInt& c, unsigned d) {
    const Field& f = alpha1.field();
    const QuadInt two = QuadInt::integer(2, f);
    auto [y, z] = reduce_completed_square(alpha1, beta, gamma);

    QuadInt lhs1 = beta * beta - two * alpha1 * beta * gamma + gamma * gamma;
    QuadInt rhs1 = a * (two * alpha1).pow(d) - c;
    QuadInt lhs2 = y * y - (alpha1 * alpha1 - QuadInt::one(f)) * (z * z);
    QuadInt rhs2 = QuadInt::integer(pow2(d), f) * alpha1.pow(d) * a - c;

    return lhs1 - rhs1 == lhs2 - rhs2;
}

bool local_obstruction_mod_p2(unsigned a_res, unsigned c_res, unsigned d) {
    if (d < 1) throw std::domain_error("local_obstruction_mod_p2: d must be positive");
    a_res %= 4;
    c_res %= 4;
    for (int x : {0, 2}) {
        int xd = 1;
        for (unsigned i = 0; i < d; ++i) xd = (xd * x) % 4;
        for (int y = 0; y < 4; ++y) {
            for (int z = 0; z < 4; ++z) {
                int value = int(a_res) * xd - y * y - z * z + x * y * z - int(c_res);
                if (((value % 4) + 4) % 4 == 0) return false;
            }
        }
    }
    return true;
}

namespace {

ObstructionReport decide_impl(const Field& field, const FruitParams& params,
                              const PrimeAbove2* prime) {
    if (params.a.field() != field || params.b.field() != field)
        throw std::invalid_argument("decide: parameters do not live in the given field");

    ObstructionReport report{field, params, t_k_nonempty(field), std::nullopt,
                             false,  HypothesisReport::evaluate(params.r, params.d),
                             Verdict::Inconclusive};
    if (!report.tk_nonempty) return report;

    PrimeAbove2 p = prime ? *prime : PrimeAbove2::above(field, 3);
    unsigned a_res = static_cast<unsigned>(residue_map(params.a, p, 2).get_ui());
    unsigned c_res = static_cast<unsigned>(residue_map(params.c, p, 2).get_ui());
    report.c_residue_mod4 = c_res;
    report.locally_obstructed = local_obstruction_mod_p2(a_res, c_res, params.d);
    if (report.locally_obstructed) report.verdict = Verdict::NoSolutionWithEvenX;
    return report;
}

}  // namespace

ObstructionReport decide(const Field& field, const FruitParams& params) {
    return decide_impl(field, params, nullptr);
}

ObstructionReport decide_with_prime(const Field& field, const FruitParams& params,
                                    const PrimeAbove2& prime) {
    if (prime.field() != field)
        throw std::invalid_argument("decide: prime does not lie over the given field");
    return decide_impl(field, params, &prime);
}

}  // namespace fruit
