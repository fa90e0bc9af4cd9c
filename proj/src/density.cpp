#include "fruit/density.hpp"

#include <cmath>
#include <cstdio>
#include <numeric>
#include <stdexcept>

namespace fruit {

namespace {

std::uint64_t isqrt64(std::uint64_t n) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

std::vector<std::uint64_t> primes_upto(std::uint64_t n) {
    std::vector<std::uint64_t> primes;
    if (n < 2) return primes;
    std::vector<char> composite(n + 1, 0);
    for (std::uint64_t i = 2; i <= n; ++i) {
        if (composite[i]) continue;
        primes.push_back(i);
        for (std::uint64_t j = i * i; j <= n; j += i) composite[j] = 1;
    }
    return primes;
}

void check_query(const ResidueClassQuery& q) {
    if (q.modulus < 1) throw std::domain_error("residue class: modulus must be positive");
    if (q.residue >= q.modulus) throw std::domain_error("residue class: need 0 <= r < N");
    if (q.limit < 2) throw std::domain_error("residue class: sieve limit must be at least 2");
}

struct ClassCounts {
    std::uint64_t in_class = 0;
    std::uint64_t total = 0;
};

// Segmented square-free sieve over [2, X] striking multiples of p^2; counts
// all square-free t and those with t = r (mod N) in one pass. Segments are
// bit-packed so X = 10^9 stays at 8 MiB per segment.
ClassCounts count_sieved(std::uint64_t X, std::uint64_t N, std::uint64_t r,
                         std::size_t segment_size) {
    if (segment_size == 0 || (segment_size & (segment_size - 1)) != 0)
        throw std::domain_error("sieve segment size must be a power of two");
    const auto primes = primes_upto(isqrt64(X));
    ClassCounts counts;
    const std::uint64_t seg = std::min<std::uint64_t>(segment_size, X - 1);
    std::vector<std::uint64_t> words((seg + 63) / 64);
    for (std::uint64_t lo = 2; lo <= X; lo += seg) {
        const std::uint64_t hi = std::min<std::uint64_t>(lo + seg - 1, X);
        const std::uint64_t len = hi - lo + 1;
        std::fill(words.begin(), words.end(), ~std::uint64_t{0});
        for (std::uint64_t p : primes) {
            const std::uint64_t p2 = p * p;
            if (p2 > hi) break;
            for (std::uint64_t m = ((lo + p2 - 1) / p2) * p2; m <= hi; m += p2)
                words[(m - lo) >> 6] &= ~(std::uint64_t{1} << ((m - lo) & 63));
        }
        std::uint64_t residue = lo % N;
        for (std::uint64_t i = 0; i < len; ++i) {
            if (words[i >> 6] & (std::uint64_t{1} << (i & 63))) {
                ++counts.total;
                counts.in_class += (residue == r);
            }
            if (++residue == N) residue = 0;
        }
    }
    return counts;
}

}  // namespace

std::vector<bool> squarefree_sieve(std::uint64_t limit) {
    if (limit < 2) throw std::domain_error("squarefree_sieve: limit must be at least 2");
    std::vector<bool> indicator(limit + 1, true);
    indicator[0] = indicator[1] = false;
    for (std::uint64_t p : primes_upto(isqrt64(limit))) {
        for (std::uint64_t m = p * p; m <= limit; m += p * p) indicator[m] = false;
    }
    return indicator;
}

std::uint64_t count_squarefree(std::uint64_t limit, const SieveConfig& cfg) {
    return count_residue_class({0, 1, limit}, cfg);
}

std::uint64_t count_residue_class(const ResidueClassQuery& q, const SieveConfig& cfg) {
    check_query(q);
    return count_sieved(q.limit, q.modulus, q.residue, cfg.segment_size).in_class;
}

std::uint64_t euler_phi(std::uint64_t n) {
    if (n == 0) throw std::domain_error("euler_phi: argument must be positive");
    std::uint64_t phi = n;
    for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p) continue;
        phi -= phi / p;
        while (n % p == 0) n /= p;
    }
    if (n > 1) phi -= phi / n;
    return phi;
}

BigRat fs_asymptotic_constant(std::uint64_t r, std::uint64_t modulus) {
    if (modulus < 1) throw std::domain_error("fs_asymptotic_constant: modulus must be positive");
    const std::uint64_t s = std::gcd(r, modulus);
    if (!is_squarefree(BigInt(static_cast<unsigned long>(s))))
        throw std::domain_error("fs_asymptotic_constant: gcd(r, N) = " + std::to_string(s) +
                                " is not square-free, formula inapplicable");
    BigRat local_factor(1);
    std::uint64_t n = modulus;
    for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p) continue;
        local_factor *= BigRat(BigInt(static_cast<unsigned long>(p * p - 1))) /
                        BigRat(BigInt(static_cast<unsigned long>(p * p)));
        while (n % p == 0) n /= p;
    }
    if (n > 1)
        local_factor *= BigRat(BigInt(static_cast<unsigned long>(n)) * n - 1) /
                        BigRat(BigInt(static_cast<unsigned long>(n)) * n);

    BigRat numerator(BigInt(static_cast<unsigned long>(euler_phi(modulus))));
    BigRat denominator = BigRat(BigInt(static_cast<unsigned long>(s))) *
                         BigRat(BigInt(static_cast<unsigned long>(euler_phi(modulus / s)))) *
                         BigRat(BigInt(static_cast<unsigned long>(modulus))) * local_factor;
    BigRat q = numerator / denominator;
    q.canonicalize();
    return q;
}

DensityReport density_report(const ResidueClassQuery& q, const SieveConfig& cfg) {
    check_query(q);
    DensityReport report;
    report.query = q;
    report.asymptotic_constant = fs_asymptotic_constant(q.residue, q.modulus);
    report.predicted_rel_density = report.asymptotic_constant;
    const ClassCounts counts = count_sieved(q.limit, q.modulus, q.residue, cfg.segment_size);
    report.count_class = counts.in_class;
    report.count_squarefree = counts.total;
    report.rel_density_empirical =
        BigRat(BigInt(counts.in_class)) / BigRat(BigInt(counts.total));
    report.rel_density_empirical.canonicalize();
    report.abs_density_empirical = BigRat(BigInt(counts.in_class)) / BigRat(BigInt(q.limit));
    report.abs_density_empirical.canonicalize();
    return report;
}

std::string to_decimal(const BigRat& value, int significant_digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", significant_digits, value.get_d());
    return buf;
}

}  // namespace fruit
