#include <doctest.h>

#include <cmath>
#include <complex>

#include <thetaid/arith.hpp>

using namespace thetaid;
using namespace thetaid::arith;

namespace
{

using cplx = std::complex<double>;
constexpr double kPi = 3.14159265358979323846;

cplx value_at(const QSeries &s, cplx tau)
{
    cplx v = 0;
    for (const auto &t : s.terms()) {
        v += t.coeff.to_complex()
             * std::exp(cplx(0, kPi) * tau * (static_cast<double>(t.exponent) / static_cast<double>(s.grading())));
    }
    return v;
}

} // namespace

TEST_CASE("frozen representation counts")
{
    // lattice enumeration, n = 0..30
    const std::int64_t s2[] = {1, 4, 4, 0, 4, 8, 0, 0, 4, 4, 8, 0, 0, 8, 0, 0,
                               4, 8, 4, 0, 8, 0, 0, 0, 0, 12, 8, 0, 0, 8, 0};
    const std::int64_t s12[] = {1, 2, 2, 4, 2, 0, 4, 0, 2, 6, 0, 4, 4, 0, 0, 0,
                                2, 4, 6, 4, 0, 0, 4, 0, 4, 2, 0, 8, 0, 0, 0};
    for (std::int64_t n = 0; n <= 30; ++n) {
        CHECK(s2_formula(n) == s2[n]);
        CHECK(s12_formula(n) == s12[n]);
    }
    CHECK(s2_formula(5) == 8);
    CHECK(s2_formula(4225) == 36);
    CHECK(s2_formula(5000) == 20);
    CHECK(s12_formula(4913) == 8);
    CHECK(s12_formula(4995) == 0);
}

TEST_CASE("formula equals lattice count through 5000")
{
    for (std::int64_t n = 0; n <= 5000; ++n) {
        REQUIRE(s2_formula(n) == s2_lattice(n));
        REQUIRE(s12_formula(n) == s12_lattice(n));
    }
}

TEST_CASE("divisor classes")
{
    // divisors of 45: 1 3 5 9 15 45; 1 and 9 are 1 mod 8
    CHECK(divisor_class_count(45, 1, 4) == 4);
    CHECK(divisor_class_count(45, 3, 4) == 2);
    CHECK(divisor_class_count(45, 1, 8) == 2);
    CHECK(divisor_class_count(45, 0, 1) == 6);
    CHECK_THROWS(divisor_class_count(0, 1, 4));
    CHECK_THROWS(divisor_class_count(5, 1, 0));
}

TEST_CASE("kronecker symbols")
{
    const int m1[] = {0, 1, 0, -1};
    const int m2[] = {0, 1, 0, 1, 0, -1, 0, -1};
    for (std::int64_t n = 0; n < 64; ++n) {
        CHECK(kronecker_m1(n) == m1[n % 4]);
        CHECK(kronecker_m2(n) == m2[n % 8]);
    }
    CHECK(triangular(-1) == 0);
    CHECK(triangular(4) == 10);
    CHECK(triangular(-5) == 10);
}

TEST_CASE("generating series start")
{
    const auto s = arith_series(ArithSeries::s2, 1, 10);
    CHECK(s.coefficient(0) == CycloNumber(1));
    CHECK(s.coefficient(5) == CycloNumber(8));
    const auto k = arith_series(ArithSeries::kron2sq, 4, 4 * 20);
    // (-2/n) n q^(n^2/8) = (-2/n) n x^(n^2/4): 1 at x^1/4, 3 at x^9/4, -5 at x^25/4
    CHECK(k.coefficient(1) == CycloNumber(1));
    CHECK(k.coefficient(9) == CycloNumber(3));
    CHECK(k.coefficient(25) == CycloNumber(-5));
    CHECK(k.coefficient(49) == CycloNumber(-7));
    CHECK(required_grading(ArithSeries::kron1sq) == 4);
    CHECK(required_grading(ArithSeries::tri) == 1);
    CHECK(parse_arith_series(to_string(ArithSeries::kron2)) == ArithSeries::kron2);
    CHECK_THROWS(parse_arith_series("nope"));
}

TEST_CASE("lambert series against log-derivatives")
{
    const cplx tau(0.1, 1.1);
    struct Case {
        LambertVariant v;
        cplx expected;
    };
    // theta'/theta / (2 pi i) for [1; eps'], summed directly to 40 digits
    const Case cases[] = {
        {LambertVariant::half, {-0.0011730599655047861, 0.50161259346312658}},
        {LambertVariant::quarter, {-0.00082759340911197922, 0.20824644267911949}},
        {LambertVariant::three_quarter, {-0.00083136922340720887, 1.2082476695116129}},
    };
    for (const auto &c : cases) {
        const auto s = lambert_logderiv_series(c.v, 1, 120);
        CHECK(std::abs(value_at(s, tau) - c.expected) < 1e-13);
        CHECK(parse_lambert_variant(to_string(c.v)) == c.v);
    }
    CHECK(lambert_logderiv_series(LambertVariant::half, 1, 10).coefficient(0)
          == scalar_mul(imag_unit(), Rational(1, 2)));
    CHECK_THROWS(parse_lambert_variant("fifth"));
}
