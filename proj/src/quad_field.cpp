#include "fruit/quad_field.hpp"

#include <climits>
#include <stdexcept>
#include <utility>

namespace fruit {

BigInt mod_floor(const BigInt& n, const BigInt& m) {
    BigInt r;
    mpz_fdiv_r(r.get_mpz_t(), n.get_mpz_t(), m.get_mpz_t());
    return r;
}

BigInt pow2(unsigned bits) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, bits);
    return r;
}

namespace {

// Trial-division bound; beyond it the cofactor is classified structurally.
constexpr unsigned long kTrialLimit = 2'000'000;

}  // namespace

bool is_squarefree(const BigInt& n) {
    if (n == 0) throw std::domain_error("is_squarefree: argument must be nonzero");
    BigInt m = abs(n);
    if (m <= 3) return true;
    if (mpz_divisible_ui_p(m.get_mpz_t(), 4)) return false;
    if (mpz_divisible_ui_p(m.get_mpz_t(), 2)) mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), 2);
    for (unsigned long p = 3; p <= kTrialLimit; p += 2) {
        if (BigInt(p) * p > m) break;
        if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
            if (mpz_divisible_ui_p(m.get_mpz_t(), p)) return false;
        }
    }
    if (BigInt(kTrialLimit) * kTrialLimit >= m) return true;  // fully factored
    if (mpz_perfect_square_p(m.get_mpz_t())) return false;
    if (mpz_probab_prime_p(m.get_mpz_t(), 30) > 0) return true;
    // Cofactor is composite, not a square, and has no prime factor below the
    // trial limit: below kTrialLimit^3 it must be a product of two distinct
    // primes, hence square-free.
    BigInt cube = BigInt(kTrialLimit) * kTrialLimit * kTrialLimit;
    if (m < cube) return true;
    throw std::domain_error("is_squarefree: argument too large to settle by trial division");
}

const char* to_string(SplitType s) {
    switch (s) {
        case SplitType::Split: return "Split";
        case SplitType::Inert: return "Inert";
        case SplitType::Ramified: return "Ramified";
        case SplitType::Rational: return "Rational";
    }
    return "?";
}

const char* to_string(BasisKind b) {
    return b == BasisKind::OmegaIsSqrt ? "OmegaIsSqrt" : "OmegaIsHalfOnePlusSqrt";
}

SquareFreeInt SquareFreeInt::of(long long t) {
    if (t == 0 || t == 1)
        throw std::domain_error("square-free field parameter must not be 0 or 1");
    if (t == LLONG_MIN || (t < 0 ? -t : t) > (1LL << 61))
        throw std::domain_error("field parameter out of supported range");
    if (!is_squarefree(to_bigint(t)))
        throw std::domain_error("field parameter " + std::to_string(t) + " is not square-free");
    return SquareFreeInt(t);
}

QuadField QuadField::of(SquareFreeInt t) {
    long long tv = t.value();
    long long m4 = ((tv % 4) + 4) % 4;
    if (m4 == 1)
        return QuadField(tv, BasisKind::OmegaIsHalfOnePlusSqrt, tv, (tv - 1) / 4, 1);
    return QuadField(tv, BasisKind::OmegaIsSqrt, 4 * tv, tv, 0);
}

const QuadField& Field::quad() const {
    if (!k_) throw std::domain_error("rational field has no quadratic data");
    return *k_;
}

std::string Field::to_string() const {
    return k_ ? std::to_string(k_->t()) : std::string("Q");
}

bool Field::operator==(const Field& o) const noexcept {
    if (k_.has_value() != o.k_.has_value()) return false;
    return !k_ || *k_ == *o.k_;
}

namespace {

bool is_signed_decimal(const std::string& s) {
    std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
    return true;
}

}  // namespace

Field Field::parse(const std::string& text) {
    if (text == "Q") return rational();
    if (!is_signed_decimal(text))
        throw std::invalid_argument("field parameter must be a signed decimal integer or \"Q\": " + text);
    try {
        return quadratic(std::stoll(text));
    } catch (const std::out_of_range&) {
        throw std::domain_error("field parameter out of supported range: " + text);
    }
}

QuadInt::QuadInt(BigInt u, BigInt v, Field field)
    : u_(std::move(u)), v_(std::move(v)), field_(std::move(field)) {
    if (field_.is_rational() && v_ != 0)
        throw std::domain_error("elements of Q have no omega coordinate");
}

QuadInt QuadInt::omega(const Field& f) {
    if (f.is_rational()) throw std::domain_error("omega is not defined over Q");
    return QuadInt(0, 1, f);
}

QuadInt QuadInt::parse(const std::string& text, const Field& f) {
    std::string us = text, vs = "0";
    if (auto pos = text.find(','); pos != std::string::npos) {
        us = text.substr(0, pos);
        vs = text.substr(pos + 1);
    }
    if (!is_signed_decimal(us) || !is_signed_decimal(vs))
        throw std::invalid_argument("malformed element \"" + text + "\": expected \"u,v\"");
    return QuadInt(BigInt(us), BigInt(vs), f);
}

void QuadInt::require_same_field(const QuadInt& o) const {
    if (field_ != o.field_)
        throw std::invalid_argument("operands belong to different fields");
}

QuadInt QuadInt::operator-() const { return QuadInt(-u_, -v_, field_, Unchecked{}); }

QuadInt QuadInt::operator+(const QuadInt& o) const {
    require_same_field(o);
    return QuadInt(u_ + o.u_, v_ + o.v_, field_, Unchecked{});
}

QuadInt QuadInt::operator-(const QuadInt& o) const {
    require_same_field(o);
    return QuadInt(u_ - o.u_, v_ - o.v_, field_, Unchecked{});
}

QuadInt QuadInt::operator*(const QuadInt& o) const {
    require_same_field(o);
    if (field_.is_rational())
        return QuadInt(u_ * o.u_, 0, field_, Unchecked{});
    const QuadField& k = field_.quad();
    BigInt vv = v_ * o.v_;
    BigInt u = u_ * o.u_ + vv * static_cast<long>(k.omega_sq_const());
    BigInt v = u_ * o.v_ + v_ * o.u_;
    if (k.omega_sq_omega()) v += vv;
    return QuadInt(std::move(u), std::move(v), field_, Unchecked{});
}

bool QuadInt::operator==(const QuadInt& o) const {
    require_same_field(o);
    return u_ == o.u_ && v_ == o.v_;
}

QuadInt QuadInt::pow(unsigned e) const {
    QuadInt result = one(field_);
    QuadInt base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

std::string QuadInt::to_string() const {
    return u_.get_str() + "," + v_.get_str();
}

bool divisible_by_two(const QuadInt& x) {
    return mpz_even_p(x.u().get_mpz_t()) && mpz_even_p(x.v().get_mpz_t());
}

SplitType splitting_of_two(SquareFreeInt t) {
    long long m8 = ((t.value() % 8) + 8) % 8;
    if (m8 == 1) return SplitType::Split;
    if (m8 == 5) return SplitType::Inert;
    return SplitType::Ramified;  // t = 2, 3 (mod 4)
}

SplitType splitting_of_two(const QuadField& k) {
    return splitting_of_two(SquareFreeInt::of(k.t()));
}

bool t_k_nonempty(const Field& f) {
    if (f.is_rational()) return true;  // the prime (2) itself has e = f = 1
    return splitting_of_two(f.quad()) == SplitType::Split;
}

BigInt hensel_sqrt(SquareFreeInt t, unsigned n) {
    const BigInt tt = to_bigint(t.value());
    if (mod_floor(tt, 8) != 1)
        throw std::domain_error("hensel_sqrt: t = " + std::to_string(t.value()) +
                                " has no 2-adic square root (t != 1 mod 8)");
    if (n < 3) throw std::domain_error("hensel_sqrt: need at least 3 bits of precision");
    BigInt s = 1;
    for (unsigned k = 3; k <= n; ++k) {
        if (mod_floor(s * s - tt, pow2(k + 1)) != 0) s += pow2(k - 1);
    }
    return s;
}

PrimeAbove2 PrimeAbove2::above(const Field& f, unsigned precision_bits) {
    if (precision_bits == 0)
        throw std::domain_error("PrimeAbove2: precision must be positive");
    if (f.is_rational())
        return PrimeAbove2(f, SplitType::Rational, precision_bits, std::nullopt);
    SplitType s = splitting_of_two(f.quad());
    if (s != SplitType::Split)
        return PrimeAbove2(f, s, precision_bits, std::nullopt);
    if (precision_bits < 3)
        throw std::domain_error("PrimeAbove2: a split prime needs at least 3 bits of precision");
    BigInt root = hensel_sqrt(SquareFreeInt::of(f.quad().t()), precision_bits);
    return PrimeAbove2(f, s, precision_bits, std::move(root));
}

PrimeAbove2 PrimeAbove2::conjugate() const {
    if (split_ != SplitType::Split) return *this;
    return PrimeAbove2(field_, split_, precision_, pow2(precision_) - *root_);
}

const BigInt& PrimeAbove2::canonical_root() const {
    if (!root_) throw std::domain_error("canonical root exists only for split primes");
    return *root_;
}

BigInt residue_map(const QuadInt& x, const PrimeAbove2& p, unsigned n) {
    if (x.field() != p.field())
        throw std::invalid_argument("residue_map: element and prime belong to different fields");
    if (n == 0) throw std::domain_error("residue_map: modulus exponent must be positive");
    if (p.split_type() == SplitType::Inert || p.split_type() == SplitType::Ramified)
        throw std::domain_error(
            "residue_map: no degree-one unramified residue map at an inert or ramified prime");
    if (p.precision() < n + 1)
        throw PrecisionError("residue_map: root precision " + std::to_string(p.precision()) +
                             " is below the required " + std::to_string(n + 1) + " bits");
    const BigInt m = pow2(n);
    if (p.split_type() == SplitType::Rational) return mod_floor(x.u(), m);

    BigInt s = mod_floor(p.canonical_root(), pow2(n + 1));
    BigInt sigma;
    if (x.field().quad().basis_kind() == BasisKind::OmegaIsSqrt) {
        sigma = mod_floor(s, m);
    } else {
        sigma = mod_floor((s + 1) / 2, m);  // s odd, so the division is exact
    }
    return mod_floor(x.u() + x.v() * sigma, m);
}

}  // namespace fruit
