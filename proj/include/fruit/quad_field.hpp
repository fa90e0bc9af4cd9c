#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

#include "fruit/errors.hpp"

namespace fruit {

using BigInt = mpz_class;
using BigRat = mpq_class;

/// BigInt from a 64-bit signed value (gmpxx lacks a long long constructor).
inline BigInt to_bigint(long long v) { return BigInt(static_cast<long>(v)); }

/// Residue of n modulo m with result in [0, m). Requires m > 0.
BigInt mod_floor(const BigInt& n, const BigInt& m);

/// 2^bits.
BigInt pow2(unsigned bits);

/// True iff no prime square divides |n|. Throws std::domain_error for n = 0
/// and for the rare composites too large to settle by trial division.
bool is_squarefree(const BigInt& n);

enum class SplitType { Split, Inert, Ramified, Rational };
enum class BasisKind { OmegaIsSqrt, OmegaIsHalfOnePlusSqrt };

const char* to_string(SplitType s);
const char* to_string(BasisKind b);

/// A validated square-free integer t with t not in {0, 1}. Negative values
/// are allowed (imaginary quadratic fields).
class SquareFreeInt {
public:
    static SquareFreeInt of(long long t);
    long long value() const noexcept { return t_; }

private:
    explicit SquareFreeInt(long long t) noexcept : t_(t) {}
    long long t_;
};

/// K = Q(sqrt(t)) with ring of integers Z[omega], where omega = sqrt(t) for
/// t = 2, 3 (mod 4) and omega = (1 + sqrt(t))/2 for t = 1 (mod 4).
class QuadField {
public:
    static QuadField of(SquareFreeInt t);
    static QuadField of(long long t) { return of(SquareFreeInt::of(t)); }

    long long t() const noexcept { return t_; }
    BasisKind basis_kind() const noexcept { return basis_; }
    long long discriminant() const noexcept { return disc_; }

    /// Minimal polynomial rewrite: omega^2 = omega_sq_const + omega_sq_omega * omega.
    long long omega_sq_const() const noexcept { return omega_sq_const_; }
    int omega_sq_omega() const noexcept { return omega_sq_omega_; }

    bool operator==(const QuadField& o) const noexcept { return t_ == o.t_; }

private:
    QuadField(long long t, BasisKind basis, long long disc, long long c0, int c1) noexcept
        : t_(t), basis_(basis), disc_(disc), omega_sq_const_(c0), omega_sq_omega_(c1) {}

    long long t_;
    BasisKind basis_;
    long long disc_;
    long long omega_sq_const_;
    int omega_sq_omega_;
};

/// Field parameter shared by every operation: the rational field Q or a
/// quadratic field Q(sqrt(t)).
class Field {
public:
    static Field rational() noexcept { return Field(std::nullopt); }
    static Field quadratic(long long t) { return Field(QuadField::of(t)); }
    static Field quadratic(QuadField k) noexcept { return Field(std::move(k)); }

    /// Accepts a signed decimal t or the literal "Q".
    static Field parse(const std::string& text);

    bool is_rational() const noexcept { return !k_.has_value(); }
    const QuadField& quad() const;
    std::string to_string() const;

    bool operator==(const Field& o) const noexcept;
    bool operator!=(const Field& o) const noexcept { return !(*this == o); }

private:
    explicit Field(std::optional<QuadField> k) noexcept : k_(std::move(k)) {}
    std::optional<QuadField> k_;
};

/// Element u + v*omega of O_K in integral-basis coordinates. Over Q the
/// omega coordinate is identically zero.
class QuadInt {
public:
    QuadInt(BigInt u, BigInt v, Field field);

    static QuadInt zero(const Field& f) { return QuadInt(0, 0, f); }
    static QuadInt one(const Field& f) { return QuadInt(1, 0, f); }
    static QuadInt integer(BigInt u, const Field& f) { return QuadInt(std::move(u), 0, f); }
    static QuadInt omega(const Field& f);

    /// Parses "u,v" (two signed decimals) or a bare "u" (v = 0).
    static QuadInt parse(const std::string& text, const Field& f);

    const BigInt& u() const noexcept { return u_; }
    const BigInt& v() const noexcept { return v_; }
    const Field& field() const noexcept { return field_; }

    bool is_zero() const noexcept { return u_ == 0 && v_ == 0; }

    QuadInt operator-() const;
    QuadInt operator+(const QuadInt& o) const;
    QuadInt operator-(const QuadInt& o) const;
    QuadInt operator*(const QuadInt& o) const;
    bool operator==(const QuadInt& o) const;
    bool operator!=(const QuadInt& o) const { return !(*this == o); }

    QuadInt pow(unsigned e) const;

    std::string to_string() const;  // "u,v"

private:
    struct Unchecked {};
    QuadInt(BigInt u, BigInt v, const Field& field, Unchecked) noexcept
        : u_(std::move(u)), v_(std::move(v)), field_(field) {}
    void require_same_field(const QuadInt& o) const;

    BigInt u_, v_;
    Field field_;
};

/// True iff x lies in 2*O_K, i.e. both integral-basis coordinates are even.
bool divisible_by_two(const QuadInt& x);

SplitType splitting_of_two(SquareFreeInt t);
SplitType splitting_of_two(const QuadField& k);

/// True iff some prime above 2 has e(P|2) = f(P|2) = 1. Always true over Q;
/// over Q(sqrt(t)) equivalent to 2 splitting, i.e. t = 1 (mod 8).
bool t_k_nonempty(const Field& f);

/// Canonical 2-adic square root of t modulo 2^n for t = 1 (mod 8), n >= 3:
/// the truncation of the 2-adic root congruent to 1 mod 4, built by the
/// deterministic bit-by-bit chain starting from s = 1.
BigInt hensel_sqrt(SquareFreeInt t, unsigned n);

/// Splitting datum of the rational prime 2, carrying the canonical root of t
/// when 2 splits.
class PrimeAbove2 {
public:
    static PrimeAbove2 above(const Field& f, unsigned precision_bits);

    /// The other prime above 2. For a split prime this swaps the residue-map
    /// branch (root s -> 2^precision - s); otherwise the prime is its own
    /// conjugate.
    PrimeAbove2 conjugate() const;

    SplitType split_type() const noexcept { return split_; }
    unsigned precision() const noexcept { return precision_; }
    const Field& field() const noexcept { return field_; }

    /// Defined only when split_type() == Split.
    const BigInt& canonical_root() const;

private:
    PrimeAbove2(Field f, SplitType s, unsigned precision, std::optional<BigInt> root) noexcept
        : field_(std::move(f)), split_(s), precision_(precision), root_(std::move(root)) {}

    Field field_;
    SplitType split_;
    unsigned precision_;
    std::optional<BigInt> root_;
};

/// Ring homomorphism O_K -> Z/2^n Z attached to a degree-one unramified
/// prime above 2, determined by sqrt(t) -> canonical root. Requires
/// p.precision() >= n + 1 (the halving step needs the root mod 2^(n+1)).
BigInt residue_map(const QuadInt& x, const PrimeAbove2& p, unsigned n);

}  // namespace fruit
