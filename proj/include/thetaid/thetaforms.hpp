#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <thetaid/cyclotomic.hpp>
#include <thetaid/qseries.hpp>

namespace thetaid
{

// Rational characteristic [eps; eps'] of theta(0, scale * tau).
struct Characteristic {
    Rational eps;
    Rational epsp;
    std::int64_t scale = 1;

    friend bool operator==(const Characteristic &, const Characteristic &) = default;
};

std::string to_string(const Characteristic &c);

// Smallest N such that every phase exp(pi i (n + eps/2) eps') lies in Q(zeta_N).
int required_order(const Characteristic &c);
// Smallest D such that every exponent scale * (n + eps/2)^2 is a multiple of 1/D.
std::int64_t required_grading(const Characteristic &c);

// prod_n (1 - q^(m n))^e over the factors, times q^prefactor_exponent.
struct EtaQuotientSpec {
    std::vector<std::pair<std::int64_t, std::int64_t>> factors; // (scale m, exponent e)
    Rational prefactor_exponent;

    friend bool operator==(const EtaQuotientSpec &, const EtaQuotientSpec &) = default;
};

// eta(k tau) = q^(k/24) prod (1 - q^(k n)).
EtaQuotientSpec eta_spec(std::int64_t k);
std::int64_t required_grading(const EtaQuotientSpec &spec);

// In the builders below, `order` = 0 selects required_order(c); otherwise the
// coefficients are produced in Q(zeta_order), which must contain the phases.

// theta[eps; eps'](0, k tau) = sum_n rho(n) x^(k (n + eps/2)^2),
// rho(n) = exp(pi i (n + eps/2) eps').
QSeries theta_constant(const Characteristic &c, std::int64_t grading, std::int64_t cutoff, int order = 0);

// theta'[eps; eps'](0, k tau) / (2 pi i) = sum_n (n + eps/2) rho(n) x^(k (n + eps/2)^2).
QSeries theta_deriv_normalized(const Characteristic &c, std::int64_t grading, std::int64_t cutoff, int order = 0);

// Product form with z = 1, built factor by factor; requires |eps| <= 1.
QSeries triple_product_theta(const Characteristic &c, std::int64_t grading, std::int64_t cutoff, int order = 0);

QSeries eta_quotient(const EtaQuotientSpec &spec, std::int64_t grading, std::int64_t cutoff);

// prod_{n>=0} (1 - q^(3n+1)) (1 - q^(3n+2)) with q = x^2, computed as
// prod (1 - q^n) * invert(prod (1 - q^(3n))).
QSeries farkas_product(std::int64_t grading, std::int64_t cutoff);
// The same product expanded factor by factor.
QSeries farkas_product_direct(std::int64_t grading, std::int64_t cutoff);

// q^r = x^(2r) as an exact monomial.
QSeries q_power(const Rational &r, std::int64_t grading);

} // namespace thetaid
