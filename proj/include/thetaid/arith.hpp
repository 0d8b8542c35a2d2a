#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <thetaid/qseries.hpp>

namespace thetaid::arith
{

// Number of positive divisors d of n with d = j (mod k).
std::int64_t divisor_class_count(std::int64_t n, std::int64_t j, std::int64_t k);

// Representation counts by the divisor-sum formulas; both return 1 at n = 0
// so generating functions start with their constant term.
std::int64_t s2_formula(std::int64_t n);
std::int64_t s12_formula(std::int64_t n);

// Brute-force lattice counts of n = x^2 + y^2 and n = x^2 + 2 y^2.
std::int64_t s2_lattice(std::int64_t n);
std::int64_t s12_lattice(std::int64_t n);

// (-1/n) and (-2/n) from their case tables.
int kronecker_m1(std::int64_t n);
int kronecker_m2(std::int64_t n);

// t_n = n (n + 1) / 2, for any integer n.
std::int64_t triangular(std::int64_t n);

enum class LambertVariant { half, quarter, three_quarter };

LambertVariant parse_lambert_variant(std::string_view name);
std::string_view to_string(LambertVariant v);

// (theta'/theta)[1; eps'] / (2 pi i) for eps' = 1/2, 1/4, 3/4 as the Lambert
// series i/2 + 2i sum_N x^(2N) (...) (and its quarter companions), with
// sin(pi d/4)-type weights taken from an exact table in Q(zeta_8).
QSeries lambert_logderiv_series(LambertVariant v, std::int64_t grading, std::int64_t cutoff);

// Arithmetic generating functions, all in x = exp(pi i tau):
//   s2        1 + sum S_2(n) x^n
//   s12       1 + sum S_{1,2}(n) x^n
//   tri       sum_{n>=0} (-1)^n (2n+1) q^(t_n)
//   kron2     sum_{n>=0} (-2/n) n q^(t_((n-1)/2))
//   kron1sq   sum_{n>=0} (-1/n) n q^(n^2/8)
//   kron2sq   sum_{n>=0} (-2/n) n q^(n^2/8)
enum class ArithSeries { s2, s12, tri, kron2, kron1sq, kron2sq };

ArithSeries parse_arith_series(std::string_view name);
std::string_view to_string(ArithSeries s);
std::int64_t required_grading(ArithSeries s);
QSeries arith_series(ArithSeries s, std::int64_t grading, std::int64_t cutoff);

} // namespace thetaid::arith
