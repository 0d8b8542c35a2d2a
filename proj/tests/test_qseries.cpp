#include <doctest.h>

#include <random>

#include <thetaid/qseries.hpp>

using namespace thetaid;

namespace
{

QSeries random_series(std::mt19937_64 &rng, std::int64_t grading, std::int64_t cutoff, int order)
{
    std::uniform_int_distribution<int> c(-5, 5);
    std::uniform_int_distribution<int> k(0, order - 1);
    std::vector<QSeries::Term> terms;
    for (std::int64_t e = 0; e <= cutoff; e += 1 + static_cast<std::int64_t>(rng() % 3)) {
        terms.push_back({e, scalar_mul(CycloNumber::root_of_unity(order, k(rng)), Rational(c(rng)))});
    }
    return QSeries::from_terms(grading, cutoff, std::move(terms));
}

// 1 - u
QSeries one_minus_u(std::int64_t cutoff)
{
    return QSeries::from_terms(1, cutoff, {{0, CycloNumber(1)}, {1, CycloNumber(-1)}});
}

} // namespace

TEST_CASE("ring laws")
{
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 5; ++trial) {
        const auto a = random_series(rng, 4, 40, 8);
        const auto b = random_series(rng, 4, 40, 8);
        const auto c = random_series(rng, 4, 40, 8);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("cutoff propagation")
{
    const auto a = QSeries::from_terms(1, 10, {{2, CycloNumber(1)}, {5, CycloNumber(3)}});
    const auto b = QSeries::from_terms(1, 20, {{1, CycloNumber(1)}});
    CHECK((a + b).cutoff() == 10);
    // a known to 10 with lead 2, b known to 20 with lead 1: min(10 + 1, 20 + 2)
    CHECK((a * b).cutoff() == 11);
    const auto c = QSeries::constant(CycloNumber(2), 1);
    CHECK(c.is_exact());
    CHECK((a * c).cutoff() == 10);
    CHECK_THROWS_AS((void)a.coefficient(11), std::out_of_range);
    CHECK(a.coefficient(3).is_zero());
    CHECK(a.coefficient(5) == CycloNumber(3));
    CHECK(a.lead() == 2);
    CHECK(!QSeries::zero(1, 10).lead());
}

TEST_CASE("geometric inverse")
{
    const auto inv = invert(one_minus_u(30));
    CHECK(inv.cutoff() == 30);
    for (std::int64_t e = 0; e <= 30; ++e) {
        CHECK(inv.coefficient(e) == CycloNumber(1));
    }
    CHECK((inv * one_minus_u(30)).truncate(30) == QSeries::constant(CycloNumber(1), 1, 30));
}

TEST_CASE("inverse with a root-of-unity lead")
{
    const auto a = QSeries::from_terms(2, 24, {{3, CycloNumber::root_of_unity(8, 3)}, {4, CycloNumber(1)}});
    const auto inv = invert(a);
    const auto p = a * inv;
    CHECK(p.lead() == 0);
    CHECK(p.truncate(p.cutoff()) == QSeries::constant(CycloNumber(1), 2, p.cutoff()));
    CHECK_THROWS((void)invert(QSeries::from_terms(1, 5, {{0, sqrt2() + CycloNumber(1)}})));
}

TEST_CASE("powers and binomials")
{
    // (1 - u)^5 has binomial coefficients
    const auto p = pow(one_minus_u(10), 5);
    const int expected[] = {1, -5, 10, -10, 5, -1};
    for (int e = 0; e <= 5; ++e) {
        CHECK(p.coefficient(e) == CycloNumber(expected[e]));
    }
    CHECK(pow(one_minus_u(9), 0) == QSeries::constant(CycloNumber(1), 1));
    auto b = QSeries::constant(CycloNumber(1), 1, 12);
    multiply_binomial(b, CycloNumber(-1), 1);
    multiply_binomial(b, CycloNumber(-1), 1);
    CHECK(b == pow(one_minus_u(12), 2));
}

TEST_CASE("truncate, regrade, shift")
{
    const auto a = QSeries::from_terms(2, 20, {{0, CycloNumber(1)}, {4, CycloNumber(2)}, {9, CycloNumber(-1)}});
    CHECK(a.truncate(5).size() == 2);
    CHECK(a.truncate(5).cutoff() == 5);
    const auto r = a.regrade(6);
    CHECK(r.grading() == 6);
    CHECK(r.coefficient(12) == CycloNumber(2));
    CHECK(r.cutoff() == 60);
    const auto s = a.shift(3);
    CHECK(s.lead() == 3);
    CHECK(s.coefficient(7) == CycloNumber(2));
    const auto t = a.rescale_tau(3);
    CHECK(t.coefficient(12) == CycloNumber(2));
    CHECK(t.cutoff() == 60);
}

TEST_CASE("agreement to the smaller cutoff")
{
    const auto a = QSeries::from_terms(1, 10, {{0, CycloNumber(1)}, {12, CycloNumber(5)}});
    const auto b = QSeries::from_terms(1, 12, {{0, CycloNumber(1)}});
    CHECK(agree_to_cutoff(a, b));
    CHECK(!agree_to_cutoff(a, QSeries::from_terms(1, 12, {{0, CycloNumber(1)}, {10, CycloNumber(1)}})));
}
