#include <doctest.h>

#include <cmath>
#include <complex>

#include <thetaid/thetaforms.hpp>

using namespace thetaid;

namespace
{

using cplx = std::complex<double>;
constexpr double kPi = 3.14159265358979323846;

Characteristic chr(Rational e, Rational ep, std::int64_t k = 1)
{
    return {e, ep, k};
}

cplx value_at(const QSeries &s, cplx tau)
{
    cplx v = 0;
    for (const auto &t : s.terms()) {
        v += t.coeff.to_complex()
             * std::exp(cplx(0, kPi) * tau * (static_cast<double>(t.exponent) / static_cast<double>(s.grading())));
    }
    return v;
}

// series in x with integer exponents, read off as plain integers
std::vector<long> integer_coefficients(const QSeries &s, std::int64_t upto)
{
    std::vector<long> out;
    for (std::int64_t e = 0; e <= upto; ++e) {
        const auto c = s.coefficient(e * s.grading());
        REQUIRE(c.is_rational());
        out.push_back(static_cast<long>(c.coord(0)));
    }
    return out;
}

} // namespace

TEST_CASE("required order and grading")
{
    CHECK(required_order(chr(0, 0)) == 1);
    CHECK(required_grading(chr(0, 0)) == 1);
    CHECK(required_order(chr(1, Rational(1, 2))) == 8);
    CHECK(required_grading(chr(1, Rational(1, 2))) == 4);
    CHECK(required_order(chr(Rational(1, 4), Rational(1, 4))) == 64);
    CHECK(required_grading(chr(Rational(1, 4), Rational(1, 4))) == 64);
    CHECK(required_grading(chr(1, 0, 2)) == 2);
    CHECK(required_order(chr(Rational(1, 3), Rational(1, 3))) == 36);
}

TEST_CASE("theta[0;0] counts squares")
{
    const auto t = theta_constant(chr(0, 0), 1, 50);
    for (std::int64_t e = 0; e <= 50; ++e) {
        const auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(e)));
        const int expected = e == 0 ? 1 : (r * r == e ? 2 : 0);
        CHECK(t.coefficient(e) == CycloNumber(expected));
    }
}

TEST_CASE("fourth powers against frozen coefficient lists")
{
    // enumeration of x^(a^2 + b^2 + c^2 + d^2) over integer and half-integer lattices
    const std::vector<long> theta00_4 = {1,   8,   24,  32,  24,  48,  96,  64,  24,  104, 144, 96,  96,
                                         112, 192, 192, 24,  144, 312, 160, 144, 256, 288, 192, 96,  248};
    CHECK(integer_coefficients(pow(theta_constant(chr(0, 0), 1, 25), 4), 25) == theta00_4);

    const auto t10 = pow(theta_constant(chr(1, 0), 4, 100), 4);
    const std::vector<long> odd = {16, 64, 96, 128, 208, 192, 224, 384, 288, 320, 512, 384};
    for (std::size_t k = 0; k < odd.size(); ++k) {
        CHECK(t10.coefficient(4 * static_cast<std::int64_t>(2 * k + 1)) == CycloNumber(odd[k]));
        CHECK(t10.coefficient(4 * static_cast<std::int64_t>(2 * k)).is_zero());
    }
}

TEST_CASE("farkas product")
{
    const std::vector<long> frozen = {1, -1, -1, 1,  -1, 0,  2,  -1, -1, 3,  -2, -1, 4,
                                      -3, -2, 5, -4, -2, 8, -6, -4, 10, -7, -4, 14, -10};
    // in x the product only has even exponents
    const auto p = farkas_product(1, 60);
    for (std::size_t n = 0; n < frozen.size(); ++n) {
        CHECK(p.coefficient(2 * static_cast<std::int64_t>(n)) == CycloNumber(frozen[n]));
        CHECK(p.coefficient(2 * static_cast<std::int64_t>(n) + 1).is_zero());
    }
    CHECK(farkas_product(3, 120) == farkas_product_direct(3, 120));
}

TEST_CASE("eta cube")
{
    const auto e = eta_quotient({{{1, 3}}, Rational(0)}, 1, 2 * 300);
    std::int64_t next = 0;
    for (std::int64_t n = 0; 2 * n * (n + 1) / 2 <= 600; ++n) {
        CHECK(e.coefficient(n * (n + 1)) == CycloNumber((n % 2 ? -1 : 1) * (2 * n + 1)));
        next = n;
    }
    CHECK(next == 24);
    CHECK(e.size() == 25);
    CHECK(eta_spec(4).prefactor_exponent == Rational(1, 6));
    CHECK(required_grading(eta_spec(1)) == 12);
}

TEST_CASE("characteristic symmetries")
{
    const std::int64_t D = 64, T = 64 * 30;
    const Rational q(1, 4), h(1, 2);
    for (const auto &c : {chr(q, q), chr(1, h), chr(Rational(3, 4), Rational(5, 4)), chr(h, Rational(3, 2))}) {
        const auto base = theta_constant(c, D, T, 128);
        // shifting eps by 2 only reindexes the sum
        CHECK(theta_constant(chr(c.eps + 2, c.epsp), D, T, 128) == base);
        // shifting eps' by 2 multiplies by exp(pi i eps)
        const auto phase = CycloNumber::root_of_unity(128, static_cast<std::int64_t>(c.eps * 64));
        CHECK(theta_constant(chr(c.eps, c.epsp + 2), D, T, 128) == scale(base, phase));
        CHECK(theta_constant(chr(-c.eps, -c.epsp), D, T, 128) == base);
        CHECK(theta_deriv_normalized(chr(-c.eps, -c.epsp), D, T, 128) == -theta_deriv_normalized(c, D, T, 128));
    }
    CHECK(theta_deriv_normalized(chr(0, 0), 1, 40).is_zero());
    CHECK(theta_constant(chr(1, 1), 4, 400).is_zero());
}

TEST_CASE("scaled tau")
{
    const auto t = theta_constant(chr(1, Rational(1, 2)), 4, 200);
    CHECK(theta_constant(chr(1, Rational(1, 2), 3), 4, 600) == t.rescale_tau(3));
}

TEST_CASE("series against triple product")
{
    const Rational q(1, 4), h(1, 2);
    for (const auto &c : {chr(0, 0), chr(1, 0), chr(0, 1), chr(1, h), chr(q, q), chr(Rational(3, 4), Rational(7, 4)),
                          chr(Rational(1, 3), Rational(5, 3)), chr(-h, h, 2)}) {
        const std::int64_t D = required_grading(c);
        CHECK(theta_constant(c, D, 50 * D) == triple_product_theta(c, D, 50 * D));
    }
}

TEST_CASE("series values against direct summation")
{
    // reference values summed to 40 digits
    CHECK(std::abs(value_at(theta_constant(chr(0, 0), 1, 80), cplx(0, 1)) - 1.086434811213308) < 1e-14);
    CHECK(std::abs(value_at(theta_constant(chr(1, 0), 4, 320), cplx(0, 1)) - 0.91357913815611682) < 1e-14);
    CHECK(std::abs(value_at(theta_constant(chr(1, Rational(1, 2)), 4, 320), cplx(0.25, 0.9))
                   - cplx(0.68455215109019314, 0.13367660970946088))
          < 1e-14);
    // theta'[1;1](0, i) / (2 pi i)
    const cplx d = value_at(theta_deriv_normalized(chr(1, 1), 4, 320), cplx(0, 1));
    CHECK(std::abs(d - cplx(-2.8486946039877873, 0) / cplx(0, 2 * kPi)) < 1e-14);
    const cplx d2 = value_at(theta_deriv_normalized(chr(1, Rational(1, 4)), 4, 320), cplx(0.3, 1.2));
    CHECK(std::abs(d2 - cplx(-0.90915700205435475, -0.22179684963545594) / cplx(0, 2 * kPi)) < 1e-14);
}

TEST_CASE("q_power")
{
    const auto m = q_power(Rational(1, 8), 4);
    CHECK(m.is_exact());
    CHECK(m.lead() == 1);
    CHECK_THROWS(q_power(Rational(1, 16), 4));
}
