#include <doctest.h>

#include <cmath>

#include <thetaid/numeric.hpp>

using namespace thetaid;
using namespace thetaid::numeric;

namespace
{

Characteristic chr(Rational e, Rational ep, std::int64_t k = 1)
{
    return {e, ep, k};
}

const Characteristic kSamples[] = {
    {0, 0, 1},
    {1, 0, 1},
    {1, 1, 1},
    {Rational(1, 4), Rational(1, 4), 1},
    {Rational(3, 4), Rational(3, 2), 1},
    {Rational(1, 3), Rational(-2, 3), 1},
    {1, Rational(1, 2), 2},
};

} // namespace

TEST_CASE("point values against direct summation")
{
    // 40-digit reference sums
    struct Case {
        Characteristic c;
        cplx zeta, tau, expected;
    };
    const Case cases[] = {
        {chr(0, 0), 0.0, {0, 1}, {1.086434811213308, 0}},
        {chr(1, 0), 0.0, {0, 1}, {0.91357913815611682, 0}},
        {chr(0, 1), 0.0, {0, 1}, {0.91357913815611682, 0}},
        {chr(Rational(1, 4), Rational(1, 4)), {0.1, 0.05}, {0.3, 1.2}, {0.94825114156296946, 0.13837659859396375}},
        {chr(Rational(1, 3), Rational(-2, 3)), {-0.2, 0.1}, {-0.45, 0.8}, {0.63842517471983021, -0.17890948646435965}},
    };
    for (const auto &k : cases) {
        CHECK(std::abs(theta_point(k.c, k.zeta, k.tau) - k.expected) < 1e-14);
    }
    const Case derivs[] = {
        {chr(1, 1), 0.0, {0, 1}, {-2.8486946039877873, 0}},
        {chr(Rational(1, 2), Rational(3, 2)), {0.1, -0.1}, {0, 0.7}, {-1.1205327686447435, 1.4458225184293883}},
    };
    for (const auto &k : derivs) {
        CHECK(std::abs(theta_deriv_point(k.c, k.zeta, k.tau) - k.expected) < 1e-13);
    }
}

TEST_CASE("triple product matches the sum")
{
    const auto samples = draw_samples({.seed = 5, .count = 20});
    for (const auto &c : kSamples) {
        for (const auto &s : samples) {
            const cplx a = theta_point(c, s.zeta, s.tau);
            const cplx b = triple_product_point(c, s.zeta, s.tau);
            CHECK(std::abs(a - b) <= 1e-11 * (1 + std::abs(a)));
        }
    }
}

TEST_CASE("quasi-periodicity and half periods over 50 samples")
{
    const auto samples = draw_samples({.seed = 9, .count = 50});
    double worst = 0.0;
    for (const auto &c : kSamples) {
        for (const auto &s : samples) {
            for (const auto &[m, n] : {std::pair{1, 0}, {0, 1}, {1, 1}, {-1, 2}}) {
                worst = std::max(worst, check_quasi_periodicity(c, s.zeta, s.tau, m, n));
                worst = std::max(worst, check_half_period(c, s.zeta, s.tau, m, n));
            }
        }
    }
    CHECK(worst < 1e-10);
}

TEST_CASE("zero location")
{
    const auto samples = draw_samples({.seed = 2, .count = 10});
    for (const auto &c : kSamples) {
        for (const auto &s : samples) {
            const cplx z = zero_location(c, s.tau);
            const double scale = std::abs(theta_point(c, 0.3, s.tau)) + std::abs(theta_point(c, 0.1, s.tau));
            CHECK(std::abs(theta_point(c, z, s.tau)) < 1e-9 * scale);
        }
    }
    CHECK(std::abs(zero_location(chr(1, 1), {0.2, 1.0})) < 1e-15);
}

TEST_CASE("determinant of A vanishes")
{
    for (const cplx tau : {cplx(0, 1), cplx(0.3, 1.2)}) {
        CHECK(det_A(tau).relative < 1e-10);
        CHECK(det_A(tau, true).relative > 1e-4);
    }
}

TEST_CASE("elliptic quotient is constant")
{
    const SamplePlan plan{.seed = 1, .count = 20};
    for (const auto v : {EllipticVariant::quarter, EllipticVariant::three_quarter}) {
        const auto r = check_elliptic_constancy(v, plan, 1e-8);
        CHECK(r.evaluated == 20);
        CHECK(r.worst() < 1e-8);
        CHECK(check_elliptic_constancy(v, plan, 1e-8, {true}).worst() > 1e-8);
    }
}

TEST_CASE("sampling is seeded and bounded")
{
    const SamplePlan plan{.seed = 42, .count = 30};
    const auto a = draw_samples(plan);
    const auto b = draw_samples(plan);
    REQUIRE(a.size() == 30);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].tau == b[i].tau);
        CHECK(a[i].zeta == b[i].zeta);
        CHECK(a[i].tau.imag() >= 0.3);
        CHECK(a[i].tau.imag() <= 2.0);
        CHECK(std::abs(a[i].zeta.real()) <= 0.4);
    }
    CHECK(draw_samples({.seed = 43, .count = 1})[0].tau != a[0].tau);
    CHECK_THROWS_AS(validate({.tau_im_min = -1.0}), std::invalid_argument);
    CHECK_THROWS_AS(validate({.tau_re_min = 1.0, .tau_re_max = 0.0}), std::invalid_argument);
}

TEST_CASE("lower half plane is rejected")
{
    CHECK_THROWS_AS(theta_point(chr(0, 0), 0.0, {0.0, -1.0}), std::domain_error);
    CHECK_THROWS_AS(theta_point(chr(0, 0), 0.0, {0.5, 0.0}), std::domain_error);
}
