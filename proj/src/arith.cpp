#include <thetaid/arith.hpp>

#include <array>
#include <cmath>
#include <stdexcept>

namespace thetaid::arith
{

namespace
{

std::int64_t isqrt(std::int64_t n)
{
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) {
        --r;
    }
    while ((r + 1) * (r + 1) <= n) {
        ++r;
    }
    return r;
}

// sin(pi m / 4) for m = 0..7 as elements of Q(zeta_8).
const std::array<CycloNumber, 8> &sine_table()
{
    static const std::array<CycloNumber, 8> table = [] {
        std::array<CycloNumber, 8> t;
        // 1/(2i) = -i/2
        const CycloNumber half_over_i = scalar_mul(-imag_unit(), Rational(1, 2));
        for (int m = 0; m < 8; ++m) {
            t[static_cast<std::size_t>(m)] =
                (CycloNumber::root_of_unity(8, m) - CycloNumber::root_of_unity(8, -m)) * half_over_i;
        }
        return t;
    }();
    return table;
}

void require_grading(std::int64_t grading, std::int64_t need, const char *what)
{
    if (grading % need != 0) {
        throw std::invalid_argument(std::string(what) + " needs a grading divisible by " + std::to_string(need));
    }
}

} // namespace

std::int64_t divisor_class_count(std::int64_t n, std::int64_t j, std::int64_t k)
{
    if (n < 1) {
        throw std::invalid_argument("divisor_class_count: n must be positive");
    }
    if (k < 1) {
        throw std::invalid_argument("divisor_class_count: modulus must be positive");
    }
    const std::int64_t r = ((j % k) + k) % k;
    std::int64_t count = 0;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) {
            continue;
        }
        if (d % k == r) {
            ++count;
        }
        const std::int64_t e = n / d;
        if (e != d && e % k == r) {
            ++count;
        }
    }
    return count;
}

std::int64_t s2_formula(std::int64_t n)
{
    if (n == 0) {
        return 1;
    }
    return 4 * (divisor_class_count(n, 1, 4) - divisor_class_count(n, 3, 4));
}

std::int64_t s12_formula(std::int64_t n)
{
    if (n == 0) {
        return 1;
    }
    return 2
           * (divisor_class_count(n, 1, 8) + divisor_class_count(n, 3, 8) - divisor_class_count(n, 5, 8)
              - divisor_class_count(n, 7, 8));
}

std::int64_t s2_lattice(std::int64_t n)
{
    std::int64_t count = 0;
    const std::int64_t r = isqrt(n);
    for (std::int64_t x = -r; x <= r; ++x) {
        const std::int64_t rest = n - x * x;
        const std::int64_t y = isqrt(rest);
        if (y * y == rest) {
            count += (y == 0) ? 1 : 2;
        }
    }
    return count;
}

std::int64_t s12_lattice(std::int64_t n)
{
    std::int64_t count = 0;
    const std::int64_t r = isqrt(n / 2);
    for (std::int64_t y = -r; y <= r; ++y) {
        const std::int64_t rest = n - 2 * y * y;
        const std::int64_t x = isqrt(rest);
        if (x * x == rest) {
            count += (x == 0) ? 1 : 2;
        }
    }
    return count;
}

int kronecker_m1(std::int64_t n)
{
    const std::int64_t r = ((n % 4) + 4) % 4;
    if (r == 1) {
        return 1;
    }
    if (r == 3) {
        return -1;
    }
    return 0;
}

int kronecker_m2(std::int64_t n)
{
    const std::int64_t r = ((n % 8) + 8) % 8;
    if (r == 1 || r == 3) {
        return 1;
    }
    if (r == 5 || r == 7) {
        return -1;
    }
    return 0;
}

std::int64_t triangular(std::int64_t n)
{
    return n * (n + 1) / 2;
}

LambertVariant parse_lambert_variant(std::string_view name)
{
    if (name == "half") {
        return LambertVariant::half;
    }
    if (name == "quarter") {
        return LambertVariant::quarter;
    }
    if (name == "threequarter") {
        return LambertVariant::three_quarter;
    }
    throw std::invalid_argument("unknown lambert variant '" + std::string(name) + "'");
}

std::string_view to_string(LambertVariant v)
{
    switch (v) {
        case LambertVariant::half:
            return "half";
        case LambertVariant::quarter:
            return "quarter";
        case LambertVariant::three_quarter:
            return "threequarter";
    }
    return "?";
}

QSeries lambert_logderiv_series(LambertVariant v, std::int64_t grading, std::int64_t cutoff)
{
    const CycloNumber i = imag_unit();
    const CycloNumber half_i = scalar_mul(i, Rational(1, 2));
    const CycloNumber i_over_sqrt2 = scalar_mul(i * sqrt2(), Rational(1, 2));
    const CycloNumber two_i = scalar_mul(i, Rational(2));

    CycloNumber constant;
    switch (v) {
        case LambertVariant::half:
            constant = half_i;
            break;
        case LambertVariant::quarter:
            constant = i_over_sqrt2 - half_i;
            break;
        case LambertVariant::three_quarter:
            constant = i_over_sqrt2 + half_i;
            break;
    }

    std::vector<QSeries::Term> terms;
    terms.push_back({0, constant});
    const auto &sine = sine_table();
    for (std::int64_t n = 1; 2 * n * grading <= cutoff; ++n) {
        CycloNumber inner;
        if (v == LambertVariant::half) {
            inner = CycloNumber(divisor_class_count(n, 1, 4) - divisor_class_count(n, 3, 4));
        } else {
            const int mult = (v == LambertVariant::quarter) ? 1 : 3;
            for (int r = 1; r < 8; ++r) {
                const std::int64_t cnt = divisor_class_count(n, r, 8);
                if (cnt == 0) {
                    continue;
                }
                // (-1)^(d-1) depends only on d mod 2, which r carries.
                const std::int64_t sign = (r % 2 == 1) ? 1 : -1;
                inner += scalar_mul(sine[static_cast<std::size_t>((mult * r) % 8)], Rational(sign * cnt));
            }
        }
        if (!inner.is_zero()) {
            terms.push_back({2 * n * grading, inner * two_i});
        }
    }
    return QSeries::from_terms(grading, cutoff, std::move(terms));
}

ArithSeries parse_arith_series(std::string_view name)
{
    if (name == "s2") {
        return ArithSeries::s2;
    }
    if (name == "s12") {
        return ArithSeries::s12;
    }
    if (name == "tri") {
        return ArithSeries::tri;
    }
    if (name == "kron2") {
        return ArithSeries::kron2;
    }
    if (name == "kron1sq") {
        return ArithSeries::kron1sq;
    }
    if (name == "kron2sq") {
        return ArithSeries::kron2sq;
    }
    throw std::invalid_argument("unknown arithmetic series '" + std::string(name) + "'");
}

std::string_view to_string(ArithSeries s)
{
    switch (s) {
        case ArithSeries::s2:
            return "s2";
        case ArithSeries::s12:
            return "s12";
        case ArithSeries::tri:
            return "tri";
        case ArithSeries::kron2:
            return "kron2";
        case ArithSeries::kron1sq:
            return "kron1sq";
        case ArithSeries::kron2sq:
            return "kron2sq";
    }
    return "?";
}

std::int64_t required_grading(ArithSeries s)
{
    return (s == ArithSeries::kron1sq || s == ArithSeries::kron2sq) ? 4 : 1;
}

QSeries arith_series(ArithSeries s, std::int64_t grading, std::int64_t cutoff)
{
    require_grading(grading, required_grading(s), "arith_series");
    std::vector<QSeries::Term> terms;
    auto push = [&](const Rational &x_exponent, std::int64_t value) {
        const Rational e = x_exponent * grading;
        const auto num = static_cast<std::int64_t>(boost::multiprecision::numerator(e));
        if (num <= cutoff && value != 0) {
            terms.push_back({num, CycloNumber(value)});
        }
        return num <= cutoff;
    };
    switch (s) {
        case ArithSeries::s2:
            for (std::int64_t n = 0; push(Rational(n), s2_formula(n)) || n == 0; ++n) {
            }
            break;
        case ArithSeries::s12:
            for (std::int64_t n = 0; push(Rational(n), s12_formula(n)) || n == 0; ++n) {
            }
            break;
        case ArithSeries::tri:
            for (std::int64_t n = 0; push(Rational(2 * triangular(n)), (n % 2 == 0 ? 1 : -1) * (2 * n + 1)); ++n) {
            }
            break;
        case ArithSeries::kron2:
            for (std::int64_t n = 1; push(Rational(n * n - 1, 4), kronecker_m2(n) * n); n += 2) {
            }
            break;
        case ArithSeries::kron1sq:
            for (std::int64_t n = 1; push(Rational(n * n, 4), kronecker_m1(n) * n); ++n) {
            }
            break;
        case ArithSeries::kron2sq:
            for (std::int64_t n = 1; push(Rational(n * n, 4), kronecker_m2(n) * n); ++n) {
            }
            break;
    }
    return QSeries::from_terms(grading, cutoff, std::move(terms));
}

} // namespace thetaid::arith
