#include <doctest.h>

#include <cmath>
#include <random>

#include <thetaid/cyclotomic.hpp>

using namespace thetaid;

namespace
{

constexpr double kPi = 3.14159265358979323846;

CycloNumber random_element(std::mt19937_64 &rng, int order)
{
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 4);
    std::vector<Rational> c(static_cast<std::size_t>(euler_phi(order)));
    for (auto &x : c) {
        x = Rational(num(rng), den(rng));
    }
    return CycloNumber::from_coords(order, c);
}

std::vector<BigInt> ints(std::initializer_list<int> v)
{
    return {v.begin(), v.end()};
}

} // namespace

TEST_CASE("cyclotomic polynomials")
{
    CHECK(cyclotomic_polynomial(1) == ints({-1, 1}));
    CHECK(cyclotomic_polynomial(8) == ints({1, 0, 0, 0, 1}));
    CHECK(cyclotomic_polynomial(9) == ints({1, 0, 0, 1, 0, 0, 1}));
    CHECK(cyclotomic_polynomial(12) == ints({1, 0, -1, 0, 1}));
    // first cyclotomic polynomial with a coefficient outside {-1, 0, 1}
    CHECK(cyclotomic_polynomial(105)[7] == -2);
    CHECK(cyclotomic_polynomial(1152).size() == 385);
    CHECK(euler_phi(1152) == 384);
    CHECK(euler_phi(576) == 192);
}

TEST_CASE("roots of unity")
{
    for (int n : {1, 2, 3, 4, 8, 12, 16, 64, 128, 1152}) {
        const auto z = CycloNumber::root_of_unity(n, 1);
        CycloNumber p(1);
        for (int k = 0; k < n; ++k) {
            p *= z;
        }
        CHECK(p == CycloNumber(1));
        CHECK(CycloNumber::root_of_unity(n, -1) * z == CycloNumber(1));
        CHECK(CycloNumber::root_of_unity(n, n + 3) == CycloNumber::root_of_unity(n, 3));
    }
    CHECK(CycloNumber::root_of_unity(8, 4) == CycloNumber(-1));
    CHECK(imag_unit() * imag_unit() == CycloNumber(-1));
    CHECK(sqrt2() * sqrt2() == CycloNumber(2));
    CHECK(sqrt3() * sqrt3() == CycloNumber(3));
}

TEST_CASE("field axioms on random elements")
{
    std::mt19937_64 rng(7);
    for (int n : {1, 3, 8, 12, 16, 64, 1152}) {
        for (int trial = 0; trial < 4; ++trial) {
            const auto a = random_element(rng, n);
            const auto b = random_element(rng, n);
            const auto c = random_element(rng, n);
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a - a == CycloNumber());
            CHECK(a * CycloNumber(1) == a);
            CHECK((a + (-a)).is_zero());
        }
    }
}

TEST_CASE("mixed orders embed into the lcm")
{
    const auto z8 = CycloNumber::root_of_unity(8, 1);
    const auto z12 = CycloNumber::root_of_unity(12, 1);
    const auto p = z8 * z12;
    CHECK(p.order() == 24);
    CHECK(p == CycloNumber::root_of_unity(24, 5));
    CHECK(z8.embed(64) == CycloNumber::root_of_unity(64, 8));
    CHECK(z8.embed(1152) == z8);
    CHECK_THROWS_AS(z8.embed(12), std::invalid_argument);
}

TEST_CASE("embedding preserves arithmetic and complex value")
{
    std::mt19937_64 rng(11);
    for (int n : {4, 8, 16, 36, 64}) {
        const auto a = random_element(rng, n);
        const auto b = random_element(rng, n);
        const int m = n == 36 ? 1152 : 128 * (n == 64 ? 9 : 1);
        CHECK((a * b).embed(m) == a.embed(m) * b.embed(m));
        CHECK((a + b).embed(m) == a.embed(m) + b.embed(m));
        CHECK(std::abs(a.embed(m).to_complex() - a.to_complex()) < 1e-9 * (1 + std::abs(a.to_complex())));
    }
}

TEST_CASE("to_complex")
{
    for (int n : {3, 5, 8, 64, 1152}) {
        for (int k : {1, 2, 7}) {
            const auto z = CycloNumber::root_of_unity(n, k).to_complex();
            CHECK(std::abs(z - std::polar(1.0, 2 * kPi * k / n)) < 1e-12);
        }
    }
    CHECK(std::abs(sqrt2().to_complex() - std::sqrt(2.0)) < 1e-14);
    CHECK(std::abs(sqrt3().to_complex() - std::sqrt(3.0)) < 1e-14);
}

TEST_CASE("canonical form")
{
    // zeta_3^2 = -1 - zeta_3
    const auto z = CycloNumber::root_of_unity(3, 2);
    CHECK(z.coords() == std::vector<Rational>{-1, -1});
    const auto half = CycloNumber::from_coords(8, {Rational(2, 4), Rational(0), Rational(-6, 8)});
    CHECK(half.denominator() == 4);
    CHECK(half.coord(2) == Rational(-3, 4));
    CHECK(CycloNumber(Rational(0)).is_zero());
    CHECK(CycloNumber(5).is_rational());
    CHECK(!CycloNumber::root_of_unity(4, 1).is_rational());
}

TEST_CASE("minimal order")
{
    CHECK(sqrt2().embed(1152).minimal_order() == 8);
    CHECK(CycloNumber::root_of_unity(1152, 576).minimal_order() == 1);
    CHECK(CycloNumber::root_of_unity(1152, 288).with_minimal_order() == imag_unit());
    CHECK(CycloNumber::root_of_unity(64, 1).minimal_order() == 64);
}

TEST_CASE("unit inverse")
{
    const auto u = scalar_mul(CycloNumber::root_of_unity(16, 3), Rational(-2, 3));
    const auto inv = u.unit_inverse();
    REQUIRE(inv);
    CHECK(u * *inv == CycloNumber(1));
    CHECK(!(sqrt2() + CycloNumber(1)).unit_inverse());
}

TEST_CASE("rational text")
{
    CHECK(rational_to_string(Rational(-3, 6)) == "-1/2");
    CHECK(rational_to_string(Rational(4)) == "4");
    CHECK(parse_rational("-7/14") == Rational(-1, 2));
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
}
