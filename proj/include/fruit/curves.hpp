#pragma once

#include <vector>

#include "fruit/quad_field.hpp"
#include "fruit/search_oracle.hpp"

namespace fruit {

/// Long Weierstrass model y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 with
/// the standard b-invariants and discriminant
/// delta = -b2^2 b8 - 8 b4^3 - 27 b6^2 + 9 b2 b4 b6.
struct WeierstrassCurve {
    QuadInt a1, a2, a3, a4, a6;
    QuadInt b2, b4, b6, b8;
    QuadInt delta;

    static WeierstrassCurve from_coefficients(QuadInt a1, QuadInt a2, QuadInt a3, QuadInt a4,
                                              QuadInt a6);

    const Field& field() const noexcept { return a1.field(); }
    bool is_elliptic() const { return !delta.is_zero(); }
};

struct CurvePoint {
    QuadInt x, y;
};

/// E_alpha: y^2 - alpha xy = x^3 - (alpha^2 + 5).
WeierstrassCurve curve_from_alpha(const QuadInt& alpha);

/// alpha^8 + 5 alpha^6 - 432 alpha^4 - 5184 alpha^2 - 15552: the degree-8
/// polynomial commonly quoted as the discriminant of E_alpha, evaluated for
/// auditing. It does not agree with the standard b-invariant discriminant
/// (see README).
QuadInt paper_discriminant_poly(const QuadInt& alpha);

/// True iff E_alpha is nonsingular, judged by the standard discriminant
/// (never by the published polynomial).
bool is_valid_alpha(const QuadInt& alpha);

bool point_on_curve(const WeierstrassCurve& curve, const CurvePoint& p);

/// (2B+1) over Q (y is solved from the quadratic), (2B+1)^4 over a quadratic
/// field (full coordinate scan).
BigInt curve_box_cost_estimate(const Field& f, long long bound);

/// All curve points with every integral-basis coordinate in [-bound, bound],
/// in lexicographic coordinate order. Requires a nonsingular curve.
std::vector<CurvePoint> integral_point_search(const WeierstrassCurve& curve, long long bound,
                                              bool even_x_only, const SearchLimits& limits = {});

/// Reads a point of E_alpha as the witness (x, y, alpha) of the generalized
/// fruit equation with a = 1, c = 5, d = 3. The point must lie on E_alpha.
Witness point_to_fruit_witness(const QuadInt& alpha, const CurvePoint& p);

/// A Nagell-Lutz torsion candidate of a curve over Q, mapped back from the
/// scaled integral short model; coordinates are exact rationals.
struct TorsionCandidate {
    BigRat x, y;
    bool even_x_numerator = false;
};

/// Candidate torsion points of a nonsingular curve over Q: transform to the
/// integral short model Y^2 = X^3 + AX + B (scaling by u = 6 after completing
/// the square), enumerate Y = 0 or Y^2 | 4A^3 + 27B^2, pull the survivors
/// back, and keep those on the curve.
std::vector<TorsionCandidate> torsion_candidates_over_q(const WeierstrassCurve& curve);

}  // namespace fruit
