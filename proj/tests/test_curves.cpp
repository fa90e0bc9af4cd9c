#include <doctest.h>

#include <algorithm>

#include "fruit/curves.hpp"
#include "test_support.hpp"

using namespace fruit;

namespace {

QuadInt ratint(long long v, const Field& f) { return QuadInt::integer(to_bigint(v), f); }

bool has_point(const std::vector<CurvePoint>& pts, const QuadInt& x, const QuadInt& y) {
    return std::any_of(pts.begin(), pts.end(),
                       [&](const CurvePoint& p) { return p.x == x && p.y == y; });
}

}  // namespace

TEST_CASE("curve_from_alpha over Q") {
    Field q = Field::rational();
    WeierstrassCurve e0 = curve_from_alpha(QuadInt::zero(q));
    CHECK(e0.a1.is_zero());
    CHECK(e0.a6 == ratint(-5, q));
    CHECK(e0.b6 == ratint(-20, q));
    CHECK(e0.delta == ratint(-10800, q));
    CHECK(e0.is_elliptic());

    WeierstrassCurve e1 = curve_from_alpha(QuadInt::one(q));
    CHECK(e1.a1 == ratint(-1, q));
    CHECK(e1.a6 == ratint(-6, q));
    CHECK(e1.delta == ratint(-15546, q));
}

TEST_CASE("curve_from_alpha over a quadratic field") {
    Field f = Field::quadratic(17);
    WeierstrassCurve ew = curve_from_alpha(QuadInt::omega(f));
    CHECK(ew.a1 == QuadInt(0, -1, f));
    CHECK(ew.a6 == QuadInt(-9, -1, f));  // -(w^2 + 5) = -(w + 9)
    CHECK(ew.delta == QuadInt(-35416, -7442, f));
    CHECK(ew.is_elliptic());

    WeierstrassCurve e1w = curve_from_alpha(QuadInt(1, 1, f));
    CHECK(e1w.delta == QuadInt(-45082, -21054, f));
    CHECK(e1w.is_elliptic());
}

TEST_CASE("b-invariant consistency identity") {
    auto rng = testsupport::make_rng(577);
    for (const Field& f : {Field::rational(), Field::quadratic(17)}) {
        for (int i = 0; i < 50; ++i) {
            QuadInt alpha = testsupport::random_quadint(rng, f, 40);
            WeierstrassCurve e = curve_from_alpha(alpha);
            CHECK(QuadInt(4, 0, f) * e.b8 == e.b2 * e.b6 - e.b4 * e.b4);
        }
        // and for a generic long model, not just E_alpha
        for (int i = 0; i < 50; ++i) {
            WeierstrassCurve e = WeierstrassCurve::from_coefficients(
                testsupport::random_quadint(rng, f, 32), testsupport::random_quadint(rng, f, 32),
                testsupport::random_quadint(rng, f, 32), testsupport::random_quadint(rng, f, 32),
                testsupport::random_quadint(rng, f, 32));
            CHECK(QuadInt(4, 0, f) * e.b8 == e.b2 * e.b6 - e.b4 * e.b4);
        }
    }
}

TEST_CASE("delta depends on alpha only through alpha^2") {
    auto rng = testsupport::make_rng(599);
    for (const Field& f : {Field::rational(), Field::quadratic(17)}) {
        for (int i = 0; i < 40; ++i) {
            QuadInt alpha = testsupport::random_quadint(rng, f, 40);
            CHECK(curve_from_alpha(alpha).delta == curve_from_alpha(-alpha).delta);
        }
    }
}

TEST_CASE("paper polynomial disagrees with the standard discriminant") {
    Field q = Field::rational();
    CHECK(paper_discriminant_poly(QuadInt::zero(q)) == ratint(-15552, q));
    // frozen values for |alpha| <= 3
    const long long deltas[4] = {-10800, -15546, -34416, -74466};
    const long long papers[4] = {-15552, -21162, -42624, -86994};
    for (long long a = -3; a <= 3; ++a) {
        QuadInt alpha = ratint(a, q);
        CAPTURE(a);
        CHECK(curve_from_alpha(alpha).delta == ratint(deltas[a < 0 ? -a : a], q));
        CHECK(paper_discriminant_poly(alpha) == ratint(papers[a < 0 ? -a : a], q));
        CHECK(curve_from_alpha(alpha).delta != paper_discriminant_poly(alpha));
    }
}

TEST_CASE("is_valid_alpha gates on the standard discriminant") {
    Field q = Field::rational();
    CHECK(is_valid_alpha(QuadInt::zero(q)));
    CHECK(is_valid_alpha(QuadInt::one(q)));
    CHECK(is_valid_alpha(QuadInt::omega(Field::quadratic(17))));
}

TEST_CASE("point_on_curve examples") {
    Field q = Field::rational();
    WeierstrassCurve e0 = curve_from_alpha(QuadInt::zero(q));
    CHECK_FALSE(point_on_curve(e0, {ratint(9, q), ratint(2, q)}));  // 4 vs 724

    WeierstrassCurve e2 = curve_from_alpha(ratint(2, q));
    CHECK_FALSE(point_on_curve(e2, {ratint(1, q), ratint(-2, q)}));  // 8 vs -8

    WeierstrassCurve e1 = curve_from_alpha(QuadInt::one(q));
    CHECK_FALSE(point_on_curve(e1, {ratint(0, q), ratint(0, q)}));  // a6 != 0

    WeierstrassCurve cusp = WeierstrassCurve::from_coefficients(
        QuadInt::zero(q), QuadInt::zero(q), QuadInt::zero(q), QuadInt::zero(q),
        QuadInt::zero(q));  // y^2 = x^3
    CHECK(point_on_curve(cusp, {ratint(0, q), ratint(0, q)}));
    CHECK(point_on_curve(cusp, {ratint(4, q), ratint(-8, q)}));
}

TEST_CASE("integral_point_search on the y^2 = x^3 + 1 control curve") {
    Field q = Field::rational();
    WeierstrassCurve e = WeierstrassCurve::from_coefficients(
        QuadInt::zero(q), QuadInt::zero(q), QuadInt::zero(q), QuadInt::zero(q), QuadInt::one(q));
    auto pts = integral_point_search(e, 30, false);
    // complete integral point list of this curve in the box
    REQUIRE(pts.size() == 5);
    CHECK(has_point(pts, ratint(-1, q), ratint(0, q)));
    CHECK(has_point(pts, ratint(0, q), ratint(-1, q)));
    CHECK(has_point(pts, ratint(0, q), ratint(1, q)));
    CHECK(has_point(pts, ratint(2, q), ratint(-3, q)));
    CHECK(has_point(pts, ratint(2, q), ratint(3, q)));
    // lexicographic order
    CHECK(pts.front().x == ratint(-1, q));
    CHECK(pts.back().y == ratint(3, q));

    auto even = integral_point_search(e, 30, true);
    REQUIRE(even.size() == 4);  // x = 0 and x = 2 survive
    CHECK(even[0].x.is_zero());
    CHECK(even[3].x == ratint(2, q));
}

TEST_CASE("E_alpha has no even-x integral points over Q at small scale") {
    Field q = Field::rational();
    for (long long a = -3; a <= 3; ++a) {
        CAPTURE(a);
        CHECK(integral_point_search(curve_from_alpha(ratint(a, q)), 50, true).empty());
    }
}

TEST_CASE("quadratic-field point search finds a known point") {
    // over Q(sqrt(-7)) with alpha = -2 + 2w the point (1, -2) lies on E_alpha
    Field f = Field::quadratic(-7);
    QuadInt alpha(-2, 2, f);
    WeierstrassCurve e = curve_from_alpha(alpha);
    REQUIRE(e.is_elliptic());
    CHECK(point_on_curve(e, {ratint(1, f), ratint(-2, f)}));

    auto pts = integral_point_search(e, 2, false);
    CHECK(has_point(pts, ratint(1, f), ratint(-2, f)));
    // every found point reduces to a fruit witness with a = 1, c = 5, d = 3
    for (const CurvePoint& p : pts) {
        Witness w = point_to_fruit_witness(alpha, p);
        CHECK(verify_witness(f, QuadInt::one(f), QuadInt(5, 0, f), 3, w));
    }
    // x = 1 is odd, so the even-x search stays empty as the obstruction demands
    CHECK(integral_point_search(e, 2, true).empty());
}

TEST_CASE("even-x search over Q(sqrt(17)) is empty for unit alphas") {
    Field f = Field::quadratic(17);
    for (const QuadInt& alpha : {QuadInt(1, 0, f), QuadInt(0, 1, f), QuadInt(1, 1, f)}) {
        WeierstrassCurve e = curve_from_alpha(alpha);
        REQUIRE(e.is_elliptic());
        CHECK(integral_point_search(e, 4, true).empty());
    }
}

TEST_CASE("singular curves are rejected by the point search") {
    Field q = Field::rational();
    WeierstrassCurve cusp = WeierstrassCurve::from_coefficients(
        QuadInt::zero(q), QuadInt::zero(q), QuadInt::zero(q), QuadInt::zero(q), QuadInt::zero(q));
    CHECK_FALSE(cusp.is_elliptic());
    CHECK_THROWS_AS(integral_point_search(cusp, 10, false), std::domain_error);
    CHECK_THROWS_AS(torsion_candidates_over_q(cusp), std::domain_error);
}

TEST_CASE("curve search cost cap") {
    Field f = Field::quadratic(17);
    WeierstrassCurve e = curve_from_alpha(QuadInt::omega(f));
    SearchLimits tight{10'000, 0};
    CHECK_THROWS_AS(integral_point_search(e, 10, false, tight), CostCapError);  // 21^4
    CHECK(curve_box_cost_estimate(f, 10) == 194481);
    CHECK(curve_box_cost_estimate(Field::rational(), 100) == 201);
}

TEST_CASE("point_to_fruit_witness") {
    Field f = Field::quadratic(-7);
    QuadInt alpha(-2, 2, f);
    CurvePoint p{ratint(1, f), ratint(-2, f)};
    Witness w = point_to_fruit_witness(alpha, p);
    CHECK(w.x == p.x);
    CHECK(w.y == p.y);
    CHECK(w.z == alpha);
    CHECK_FALSE(w.even_x);
    // the witness solves the fruit equation with a = 1, c = 5, d = 3
    CHECK(verify_witness(f, QuadInt::one(f), QuadInt(5, 0, f), 3, w));

    CHECK_THROWS_AS(point_to_fruit_witness(QuadInt::one(f), {ratint(0, f), ratint(0, f)}),
                    std::domain_error);
}

TEST_CASE("torsion candidates of the y^2 = x^3 + 1 control curve") {
    Field q = Field::rational();
    WeierstrassCurve e = WeierstrassCurve::from_coefficients(
        QuadInt::zero(q), QuadInt::zero(q), QuadInt::zero(q), QuadInt::zero(q), QuadInt::one(q));
    auto cand = torsion_candidates_over_q(e);
    REQUIRE(cand.size() == 5);
    const int xs[5] = {-1, 0, 0, 2, 2};
    const int ys[5] = {0, -1, 1, -3, 3};
    const bool even[5] = {false, true, true, true, true};
    for (int i = 0; i < 5; ++i) {
        CHECK(cand[i].x == BigRat(xs[i]));
        CHECK(cand[i].y == BigRat(ys[i]));
        CHECK(cand[i].even_x_numerator == even[i]);
    }
}

TEST_CASE("torsion candidates of E_alpha over Q are empty for small alpha") {
    Field q = Field::rational();
    for (long long a : {0LL, 1LL, 2LL}) {
        CAPTURE(a);
        CHECK(torsion_candidates_over_q(curve_from_alpha(ratint(a, q))).empty());
    }
}

TEST_CASE("torsion candidate enumeration is Q-only") {
    Field f = Field::quadratic(17);
    CHECK_THROWS_AS(torsion_candidates_over_q(curve_from_alpha(QuadInt::omega(f))),
                    std::domain_error);
}

TEST_CASE("torsion candidates all lie on the curve") {
    Field q = Field::rational();
    // y^2 = x^3 - 43 x + 166 has full 7-torsion candidates; use it as a
    // nontrivial control with a1 = 0 already integral-short
    WeierstrassCurve e = WeierstrassCurve::from_coefficients(
        QuadInt::zero(q), QuadInt::zero(q), QuadInt::zero(q), ratint(-43, q), ratint(166, q));
    auto cand = torsion_candidates_over_q(e);
    CHECK(!cand.empty());
    for (const TorsionCandidate& t : cand) {
        // integral candidates can be re-checked exactly on the curve
        if (t.x.get_den() == 1 && t.y.get_den() == 1) {
            CurvePoint p{QuadInt::integer(t.x.get_num(), q), QuadInt::integer(t.y.get_num(), q)};
            CHECK(point_on_curve(e, p));
        }
        BigRat lhs = t.y * t.y;
        BigRat rhs = t.x * t.x * t.x - BigRat(43) * t.x + BigRat(166);
        CHECK(lhs == rhs);
    }
}
