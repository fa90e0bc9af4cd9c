#pragma once

#include <optional>
#include <utility>

#include "fruit/quad_field.hpp"

namespace fruit {

/// Parameters (a, b, r, d) of the generalized fruit equation
/// a x^d - y^2 - z^2 + xyz - c = 0 with the derived constant c = 2^d b - 3^r.
struct FruitParams {
    QuadInt a;
    QuadInt b;
    unsigned r = 0;
    unsigned d = 0;
    QuadInt c;

    /// Validates a, b != 0 and r, d >= 1, and computes c. Never accepts a
    /// user-supplied c.
    static FruitParams create(QuadInt a, QuadInt b, unsigned r, unsigned d);
};

/// The two hypothesis readings reported side by side: the statement asks for
/// d odd and r >= 2, while the proof actually uses d >= 2 and r odd.
struct HypothesisReport {
    bool d_is_odd = false;
    bool d_at_least_2 = false;
    bool r_at_least_2 = false;
    bool r_is_odd = false;
    bool statement_satisfied = false;  // d odd and r >= 2
    bool proof_effective = false;      // d >= 2 and r odd

    static HypothesisReport evaluate(unsigned r, unsigned d);
};

enum class Verdict { NoSolutionWithEvenX, Inconclusive };
const char* to_string(Verdict v);

struct ObstructionReport {
    Field field;
    FruitParams params;
    bool tk_nonempty = false;
    std::optional<unsigned> c_residue_mod4;
    bool locally_obstructed = false;
    HypothesisReport hypothesis;
    Verdict verdict = Verdict::Inconclusive;
};

/// c = 2^d b - 3^r, exactly.
QuadInt compute_c(const QuadInt& b, unsigned r, unsigned d);

/// Completed-square substitution (Y, Z) = (beta - alpha1*gamma, gamma).
std::pair<QuadInt, QuadInt> reduce_completed_square(const QuadInt& alpha1, const QuadInt& beta,
                                                    const QuadInt& gamma);

/// Checks that the completed-square reduction preserves the equation: the
/// residual of beta^2 - 2 alpha1 beta gamma + gamma^2 = a (2 alpha1)^d - c
/// equals the residual of Y^2 - (alpha1^2 - 1) Z^2 = 2^d alpha1^d a - c.
/// Holds identically; exposed as a testable oracle.
bool verify_reduction_identity(const QuadInt& alpha1, const QuadInt& beta, const QuadInt& gamma,
                               const QuadInt& a, const QuadInt& c, unsigned d);

/// True iff no triple (x, y, z) in (Z/4Z)^3 with x in {0, 2} satisfies
/// a x^d - y^2 - z^2 + xyz - c = 0 (mod 4). Decided by enumerating all
/// 2*4*4 = 32 residue triples.
bool local_obstruction_mod_p2(unsigned a_res, unsigned c_res, unsigned d);

/// Full decision procedure: verdict NoSolutionWithEvenX iff T_K is nonempty
/// and the mod-P^2 enumeration finds no residue solution; otherwise
/// Inconclusive (never claims a solution exists).
ObstructionReport decide(const Field& field, const FruitParams& params);

/// Same decision via an explicitly chosen prime above 2 (either residue-map
/// branch); used to check prime-choice independence.
ObstructionReport decide_with_prime(const Field& field, const FruitParams& params,
                                    const PrimeAbove2& prime);

}  // namespace fruit
