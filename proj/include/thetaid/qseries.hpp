#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include <thetaid/cyclotomic.hpp>

namespace thetaid
{

// Truncated series sum_e c_e u^e in u = x^(1/D), x = exp(pi i tau).
//
// Every coefficient with exponent numerator e <= cutoff is known (stored or
// zero); coefficients above the cutoff are unknown, not zero. A cutoff of
// kExact marks a finite expression known exactly (constants, monomials).
class QSeries
{
public:
    struct Term {
        std::int64_t exponent;
        CycloNumber coeff;
    };

    static constexpr std::int64_t kExact = std::numeric_limits<std::int64_t>::max();

    QSeries(std::int64_t grading, std::int64_t cutoff);

    static QSeries zero(std::int64_t grading, std::int64_t cutoff) { return QSeries(grading, cutoff); }
    static QSeries constant(const CycloNumber &c, std::int64_t grading, std::int64_t cutoff = kExact);
    static QSeries monomial(std::int64_t exponent, const CycloNumber &c, std::int64_t grading,
                            std::int64_t cutoff = kExact);
    // Terms need not be sorted; duplicate exponents are summed, zeros and
    // terms above the cutoff dropped.
    static QSeries from_terms(std::int64_t grading, std::int64_t cutoff, std::vector<Term> terms);

    std::int64_t grading() const noexcept { return grading_; }
    std::int64_t cutoff() const noexcept { return cutoff_; }
    bool is_exact() const noexcept { return cutoff_ == kExact; }
    const std::vector<Term> &terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }

    // No stored coefficients within the known window.
    bool is_zero() const noexcept { return terms_.empty(); }
    std::optional<std::int64_t> lead() const;

    // Throws std::out_of_range beyond the cutoff.
    CycloNumber coefficient(std::int64_t exponent) const;

    QSeries truncate(std::int64_t cutoff) const;
    QSeries regrade(std::int64_t grading) const;
    QSeries rescale_tau(std::int64_t k) const;
    QSeries shift(std::int64_t offset) const;

    // Smallest common order of the stored coefficients.
    int coefficient_order() const;
    QSeries embed_coefficients(int order) const;

    QSeries operator-() const;
    friend QSeries operator+(const QSeries &a, const QSeries &b);
    friend QSeries operator-(const QSeries &a, const QSeries &b);
    friend QSeries operator*(const QSeries &a, const QSeries &b);

    // Same grading, same cutoff and same stored terms.
    friend bool operator==(const QSeries &a, const QSeries &b);

    std::string to_string() const;

private:
    std::int64_t grading_;
    std::int64_t cutoff_;
    std::vector<Term> terms_;
};

QSeries add(const QSeries &a, const QSeries &b);
QSeries sub(const QSeries &a, const QSeries &b);
QSeries mul(const QSeries &a, const QSeries &b);
QSeries scale(const QSeries &a, const CycloNumber &c);
QSeries pow(const QSeries &a, unsigned m);
// Multiplicative inverse up to the cutoff. The lowest coefficient must be a
// rational times a root of unity.
QSeries invert(const QSeries &a);

// True when both series agree on every exponent up to the smaller cutoff.
bool agree_to_cutoff(const QSeries &a, const QSeries &b);

// Multiplies in place by (1 + c u^step) for step >= 0; cheaper than a general mul.
void multiply_binomial(QSeries &a, const CycloNumber &c, std::int64_t step);

} // namespace thetaid
