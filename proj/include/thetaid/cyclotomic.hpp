#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace thetaid
{

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Order large enough for every phase the registry needs: lcm(64, 36, 128).
inline constexpr int kUniversalOrder = 1152;

int euler_phi(int n);

// Coefficients of the n-th cyclotomic polynomial, lowest degree first.
// Computed by exact division of x^n - 1 by Phi_d for the proper divisors d,
// memoized behind a lock.
const std::vector<BigInt> &cyclotomic_polynomial(int n);

// Exact element of Q(zeta_N) in the power basis 1, zeta_N, ..., zeta_N^(phi(N)-1).
//
// Stored as integer numerators over one positive common denominator with
// gcd(content, den) == 1, which makes the representation canonical for a
// given order. Binary operations on mixed orders embed both operands into
// Q(zeta_lcm) first.
class CycloNumber
{
public:
    CycloNumber();
    CycloNumber(std::int64_t value);
    CycloNumber(const Rational &value);

    // zeta_N^k, reduced mod N and mod Phi_N.
    static CycloNumber root_of_unity(int order, std::int64_t k);
    // Arbitrary coordinate vector (any length) interpreted as a polynomial in
    // zeta_N and reduced mod Phi_N.
    static CycloNumber from_coords(int order, const std::vector<Rational> &coords);
    // Integer polynomial in zeta_N (any length) over a positive denominator.
    static CycloNumber from_unreduced(int order, std::vector<BigInt> numerators, BigInt denominator);

    int order() const noexcept { return order_; }
    int degree() const noexcept { return static_cast<int>(num_.size()); }
    Rational coord(int j) const;
    std::vector<Rational> coords() const;
    const std::vector<BigInt> &numerators() const noexcept { return num_; }
    const BigInt &denominator() const noexcept { return den_; }

    bool is_zero() const;
    bool is_rational() const;
    // Number of nonzero coordinates.
    int support_size() const;

    CycloNumber embed(int m) const;
    std::complex<double> to_complex() const;

    // Inverse when *this is a nonzero rational times a root of unity.
    std::optional<CycloNumber> unit_inverse() const;

    // Smallest order M | N whose field visibly contains *this (checked by
    // re-embedding); used for human-readable output.
    int minimal_order() const;
    CycloNumber with_minimal_order() const;

    std::string to_string() const;

    CycloNumber operator-() const;
    CycloNumber &operator+=(const CycloNumber &other);
    CycloNumber &operator-=(const CycloNumber &other);
    CycloNumber &operator*=(const CycloNumber &other);

    friend CycloNumber operator+(CycloNumber a, const CycloNumber &b) { return a += b; }
    friend CycloNumber operator-(CycloNumber a, const CycloNumber &b) { return a -= b; }
    friend CycloNumber operator*(const CycloNumber &a, const CycloNumber &b);
    friend bool operator==(const CycloNumber &a, const CycloNumber &b);

private:
    CycloNumber(int order, std::vector<BigInt> num, BigInt den);
    void normalize();

    int order_;
    std::vector<BigInt> num_;
    BigInt den_;
};

CycloNumber scalar_mul(const CycloNumber &a, const Rational &r);

inline CycloNumber from_root_power(int order, std::int64_t k)
{
    return CycloNumber::root_of_unity(order, k);
}

// sqrt(2) = zeta_8 + zeta_8^-1, sqrt(3) = zeta_12 + zeta_12^-1, i = zeta_4.
CycloNumber sqrt2();
CycloNumber sqrt3();
CycloNumber imag_unit();

std::string rational_to_string(const Rational &r);
// Base-10 integer with an optional sign; leading zeros are not octal.
BigInt parse_decimal(std::string_view text);
Rational parse_rational(const std::string &text);

// Reduces an integer polynomial in zeta_N (in place) modulo Phi_N and trims it
// to phi(N) entries.
void reduce_mod_cyclotomic(int order, std::vector<BigInt> &poly);

} // namespace thetaid
