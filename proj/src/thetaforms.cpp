#include <thetaid/thetaforms.hpp>

#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace thetaid
{

namespace
{

std::int64_t den_of(const Rational &r)
{
    return static_cast<std::int64_t>(boost::multiprecision::denominator(r));
}

Rational floor_of(const Rational &r)
{
    BigInt q = boost::multiprecision::numerator(r) / boost::multiprecision::denominator(r);
    if (r < 0 && Rational(q) != r) {
        q -= 1;
    }
    return Rational(q);
}

// exp(2 pi i turns) in Q(zeta_order).
CycloNumber root_from_turns(const Rational &turns, int order)
{
    const Rational frac = turns - floor_of(turns);
    const std::int64_t q = den_of(frac);
    if (order % q != 0) {
        throw std::invalid_argument("phase exp(2 pi i * " + rational_to_string(frac) + ") needs zeta_"
                                    + std::to_string(q) + ", not contained in Q(zeta_" + std::to_string(order)
                                    + ")");
    }
    const auto p = static_cast<std::int64_t>(boost::multiprecision::numerator(frac));
    return CycloNumber::root_of_unity(order, p * (order / q));
}

std::int64_t exponent_numerator(const Rational &x_exponent, std::int64_t grading, const char *what)
{
    const Rational e = x_exponent * grading;
    if (boost::multiprecision::denominator(e) != 1) {
        throw std::invalid_argument(std::string(what) + ": exponent " + rational_to_string(x_exponent)
                                    + " is not a multiple of 1/" + std::to_string(grading));
    }
    return static_cast<std::int64_t>(boost::multiprecision::numerator(e));
}

int resolve_order(const Characteristic &c, int order)
{
    const int need = required_order(c);
    if (order == 0) {
        return need;
    }
    if (order % need != 0) {
        throw std::invalid_argument("characteristic " + to_string(c) + " needs zeta_" + std::to_string(need)
                                    + ", not contained in Q(zeta_" + std::to_string(order) + ")");
    }
    return order;
}

// Shared summation for theta and its normalized derivative.
QSeries theta_sum(const Characteristic &c, std::int64_t grading, std::int64_t cutoff, int order, bool derivative)
{
    if (c.scale < 1) {
        throw std::invalid_argument("characteristic scale must be positive");
    }
    if (cutoff == QSeries::kExact) {
        throw std::invalid_argument("theta series need a finite cutoff");
    }
    order = resolve_order(c, order);
    const Rational half_eps = c.eps / 2;
    std::vector<QSeries::Term> terms;
    if (cutoff >= 0) {
        // n ranges over |n + eps/2| <= sqrt(T / (k D)), widened by one on each side.
        const double radius = std::sqrt(static_cast<double>(cutoff) / static_cast<double>(c.scale * grading));
        const double centre = -static_cast<double>(half_eps);
        const auto n_lo = static_cast<std::int64_t>(std::floor(centre - radius)) - 1;
        const auto n_hi = static_cast<std::int64_t>(std::ceil(centre + radius)) + 1;
        for (std::int64_t n = n_lo; n <= n_hi; ++n) {
            const Rational a = Rational(n) + half_eps;
            const std::int64_t e = exponent_numerator(Rational(c.scale) * a * a, grading, "theta_constant");
            if (e > cutoff) {
                continue;
            }
            CycloNumber coeff = root_from_turns(a * c.epsp / 2, order);
            if (derivative) {
                coeff = scalar_mul(coeff, a);
            }
            terms.push_back({e, std::move(coeff)});
        }
    }
    return QSeries::from_terms(grading, cutoff, std::move(terms));
}

} // namespace

std::string to_string(const Characteristic &c)
{
    std::ostringstream os;
    os << "[" << rational_to_string(c.eps) << "," << rational_to_string(c.epsp) << "]";
    if (c.scale != 1) {
        os << "(" << c.scale << ")";
    }
    return os.str();
}

int required_order(const Characteristic &c)
{
    const auto a = den_of(c.epsp / 2);
    const auto b = den_of(c.eps * c.epsp / 4);
    return static_cast<int>(std::lcm(a, b));
}

std::int64_t required_grading(const Characteristic &c)
{
    const Rational k(c.scale);
    return std::lcm(den_of(k * c.eps), den_of(k * c.eps * c.eps / 4));
}

EtaQuotientSpec eta_spec(std::int64_t k)
{
    return EtaQuotientSpec{{{k, 1}}, Rational(k, 24)};
}

std::int64_t required_grading(const EtaQuotientSpec &spec)
{
    return den_of(spec.prefactor_exponent * 2);
}

QSeries theta_constant(const Characteristic &c, std::int64_t grading, std::int64_t cutoff, int order)
{
    return theta_sum(c, grading, cutoff, order, false);
}

QSeries theta_deriv_normalized(const Characteristic &c, std::int64_t grading, std::int64_t cutoff, int order)
{
    return theta_sum(c, grading, cutoff, order, true);
}

QSeries triple_product_theta(const Characteristic &c, std::int64_t grading, std::int64_t cutoff, int order)
{
    if (c.scale < 1) {
        throw std::invalid_argument("characteristic scale must be positive");
    }
    if (c.eps > 1 || c.eps < -1) {
        throw std::invalid_argument("triple_product_theta: |eps| must be at most 1 (reduce the characteristic first)");
    }
    if (cutoff == QSeries::kExact) {
        throw std::invalid_argument("triple product needs a finite cutoff");
    }
    order = resolve_order(c, order);
    const Rational k(c.scale);
    const std::int64_t lead = exponent_numerator(k * c.eps * c.eps / 4, grading, "triple_product_theta");
    const std::int64_t body_cutoff = cutoff - lead;
    const CycloNumber prefactor = root_from_turns(c.eps * c.epsp / 4, order);
    if (body_cutoff < 0) {
        return QSeries(grading, cutoff);
    }
    const CycloNumber plus = root_from_turns(c.epsp / 2, order);
    const CycloNumber minus = root_from_turns(-c.epsp / 2, order);
    QSeries body = QSeries::constant(CycloNumber(1), grading, body_cutoff);
    for (std::int64_t n = 1;; ++n) {
        const std::int64_t s_q = exponent_numerator(k * 2 * n, grading, "triple_product_theta");
        const std::int64_t s_plus = exponent_numerator(k * (Rational(2 * n - 1) + c.eps), grading,
                                                       "triple_product_theta");
        const std::int64_t s_minus = exponent_numerator(k * (Rational(2 * n - 1) - c.eps), grading,
                                                        "triple_product_theta");
        bool any = false;
        if (s_q <= body_cutoff) {
            multiply_binomial(body, CycloNumber(-1), s_q);
            any = true;
        }
        if (s_plus <= body_cutoff) {
            multiply_binomial(body, plus, s_plus);
            any = true;
        }
        if (s_minus <= body_cutoff) {
            multiply_binomial(body, minus, s_minus);
            any = true;
        }
        if (!any) {
            break;
        }
    }
    return scale(body, prefactor).shift(lead);
}

QSeries eta_quotient(const EtaQuotientSpec &spec, std::int64_t grading, std::int64_t cutoff)
{
    if (spec.factors.empty()) {
        throw std::invalid_argument("eta quotient needs at least one factor");
    }
    if (cutoff == QSeries::kExact) {
        throw std::invalid_argument("eta quotient needs a finite cutoff");
    }
    const std::int64_t lead = exponent_numerator(spec.prefactor_exponent * 2, grading, "eta_quotient");
    const std::int64_t span = cutoff - lead;
    if (span < 0) {
        return QSeries(grading, cutoff);
    }
    std::vector<BigInt> c(static_cast<std::size_t>(span + 1));
    c[0] = 1;
    for (const auto &[m, e] : spec.factors) {
        if (m < 1) {
            throw std::invalid_argument("eta quotient factor scale must be positive");
        }
        // q^(m n) = u^(2 m n D)
        for (std::int64_t step = 2 * m * grading; step <= span; step += 2 * m * grading) {
            if (e > 0) {
                for (std::int64_t rep = 0; rep < e; ++rep) {
                    for (std::int64_t k = span; k >= step; --k) {
                        c[static_cast<std::size_t>(k)] -= c[static_cast<std::size_t>(k - step)];
                    }
                }
            } else {
                for (std::int64_t rep = 0; rep < -e; ++rep) {
                    for (std::int64_t k = step; k <= span; ++k) {
                        c[static_cast<std::size_t>(k)] += c[static_cast<std::size_t>(k - step)];
                    }
                }
            }
        }
    }
    std::vector<QSeries::Term> terms;
    for (std::int64_t k = 0; k <= span; ++k) {
        if (c[static_cast<std::size_t>(k)] != 0) {
            terms.push_back({k + lead, CycloNumber(Rational(c[static_cast<std::size_t>(k)]))});
        }
    }
    return QSeries::from_terms(grading, cutoff, std::move(terms));
}

QSeries farkas_product(std::int64_t grading, std::int64_t cutoff)
{
    const QSeries all = eta_quotient(EtaQuotientSpec{{{1, 1}}, Rational(0)}, grading, cutoff);
    const QSeries thirds = eta_quotient(EtaQuotientSpec{{{3, 1}}, Rational(0)}, grading, cutoff);
    return all * invert(thirds);
}

QSeries farkas_product_direct(std::int64_t grading, std::int64_t cutoff)
{
    QSeries p = QSeries::constant(CycloNumber(1), grading, cutoff);
    for (std::int64_t n = 0;; ++n) {
        const std::int64_t s1 = 2 * (3 * n + 1) * grading;
        const std::int64_t s2 = 2 * (3 * n + 2) * grading;
        if (s1 > cutoff) {
            break;
        }
        multiply_binomial(p, CycloNumber(-1), s1);
        if (s2 <= cutoff) {
            multiply_binomial(p, CycloNumber(-1), s2);
        }
    }
    return p;
}

QSeries q_power(const Rational &r, std::int64_t grading)
{
    return QSeries::monomial(exponent_numerator(r * 2, grading, "q_power"), CycloNumber(1), grading);
}

} // namespace thetaid
