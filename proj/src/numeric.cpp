#include <thetaid/numeric.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <stdexcept>

#include <Eigen/Dense>

namespace thetaid::numeric
{

namespace
{

constexpr double kPi = 3.14159265358979323846;
const cplx kI(0.0, 1.0);

double to_double(const Rational &r)
{
    return static_cast<double>(r);
}

double unit_interval(std::mt19937_64 &rng)
{
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double draw(std::mt19937_64 &rng, double lo, double hi)
{
    return lo + (hi - lo) * unit_interval(rng);
}

// Sums exp(pi i a^2 tau + 2 pi i a zeta + pi i a eps') over a = n + eps/2,
// optionally weighted by 2 pi i a.
cplx theta_sum(const Characteristic &c, cplx zeta, cplx tau, double tol, bool derivative)
{
    if (c.scale < 1) {
        throw std::invalid_argument("characteristic scale must be positive");
    }
    if (!(tol > 0.0)) {
        throw std::invalid_argument("tolerance must be positive");
    }
    const cplx t = tau * static_cast<double>(c.scale);
    const double im_t = t.imag();
    if (!(im_t > 0.0)) {
        throw std::domain_error("theta needs Im(tau) > 0");
    }
    const double half_eps = to_double(c.eps) / 2.0;
    const double epsp = to_double(c.epsp);
    const double y = zeta.imag();
    // |term| = exp(-pi t a^2 - 2 pi y a), largest at a* = -y / t.
    const double a_star = -y / im_t;
    auto bound = [&](double a) { return std::exp(-kPi * im_t * a * a - 2.0 * kPi * y * a); };
    auto term = [&](double a) {
        cplx v = std::exp(kI * kPi * a * a * t + 2.0 * kI * kPi * a * zeta + kI * kPi * a * epsp);
        return derivative ? v * (2.0 * kI * kPi * a) : v;
    };
    auto done = [&](double a) {
        const double d = std::abs(a - a_star);
        if (d < 1.0) {
            return false;
        }
        const double ratio = std::exp(-kPi * im_t * (2.0 * d + 1.0));
        return bound(a) * (1.0 + 2.0 * kPi * std::abs(a)) * 4.0 / (1.0 - ratio) < tol;
    };

    const auto n0 = static_cast<std::int64_t>(std::llround(a_star - half_eps));
    cplx sum = term(static_cast<double>(n0) + half_eps);
    for (std::int64_t k = 1;; ++k) {
        if (k > kMaxTerms) {
            throw std::domain_error("theta summation needs more than the term cap");
        }
        const double up = static_cast<double>(n0 + k) + half_eps;
        const double down = static_cast<double>(n0 - k) + half_eps;
        sum += term(up) + term(down);
        if (done(up) && done(down)) {
            break;
        }
    }
    return sum;
}

cplx omega8(int k)
{
    return std::polar(1.0, kPi * k / 4.0);
}

} // namespace

void validate(const SamplePlan &plan)
{
    if (plan.count < 1) {
        throw std::invalid_argument("sample count must be positive");
    }
    if (plan.tau_re_min > plan.tau_re_max || plan.tau_im_min > plan.tau_im_max || plan.zeta_re_min > plan.zeta_re_max
        || plan.zeta_im_min > plan.zeta_im_max) {
        throw std::invalid_argument("sample box has min > max");
    }
    if (!(plan.tau_im_min > 0.0)) {
        throw std::invalid_argument("tau box must lie in the upper half plane");
    }
}

std::vector<Sample> draw_samples(const SamplePlan &plan, int n)
{
    validate(plan);
    if (n < 0) {
        n = plan.count;
    }
    std::mt19937_64 rng(plan.seed);
    std::vector<Sample> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        Sample s;
        const double tr = draw(rng, plan.tau_re_min, plan.tau_re_max);
        const double ti = draw(rng, plan.tau_im_min, plan.tau_im_max);
        const double zr = draw(rng, plan.zeta_re_min, plan.zeta_re_max);
        const double zi = draw(rng, plan.zeta_im_min, plan.zeta_im_max);
        s.tau = cplx(tr, ti);
        s.zeta = cplx(zr, zi);
        out.push_back(s);
    }
    return out;
}

cplx theta_point(const Characteristic &c, cplx zeta, cplx tau, double tol)
{
    return theta_sum(c, zeta, tau, tol, false);
}

cplx theta_deriv_point(const Characteristic &c, cplx zeta, cplx tau, double tol)
{
    return theta_sum(c, zeta, tau, tol, true);
}

cplx triple_product_point(const Characteristic &c, cplx zeta, cplx tau, double tol)
{
    const double eps = to_double(c.eps);
    const double epsp = to_double(c.epsp);
    if (std::abs(eps) > 1.0) {
        throw std::invalid_argument("triple product needs |eps| <= 1");
    }
    const cplx t = tau * static_cast<double>(c.scale);
    if (!(t.imag() > 0.0)) {
        throw std::domain_error("theta needs Im(tau) > 0");
    }
    const cplx x = std::exp(kI * kPi * t);
    const cplx z = std::exp(2.0 * kI * kPi * zeta);
    const cplx plus = std::exp(kI * kPi * epsp);
    const cplx minus = std::exp(-kI * kPi * epsp);
    cplx p = std::exp(kI * kPi * eps * epsp / 2.0) * std::exp(kI * kPi * t * eps * eps / 4.0)
             * std::exp(kI * kPi * eps * zeta);
    const double ax = std::abs(x);
    const double az = std::max(std::abs(z), 1.0 / std::abs(z));
    for (std::int64_t n = 1; n <= kMaxTerms; ++n) {
        const double e = static_cast<double>(2 * n - 1);
        p *= (1.0 - std::pow(x, 2.0 * n)) * (1.0 + plus * std::pow(x, e + eps) * z)
             * (1.0 + minus * std::pow(x, e - eps) / z);
        if (std::pow(ax, e - std::abs(eps)) * az < tol * 1e-2) {
            return p;
        }
    }
    throw std::domain_error("triple product needs more than the term cap");
}

double check_quasi_periodicity(const Characteristic &c, cplx zeta, cplx tau, int m, int n, double tol)
{
    const cplx t = tau * static_cast<double>(c.scale);
    const double eps = to_double(c.eps);
    const double epsp = to_double(c.epsp);
    const cplx lhs = theta_point(c, zeta + static_cast<double>(n) + static_cast<double>(m) * t, tau, tol);
    const cplx factor = std::exp(2.0 * kI * kPi
                                 * ((n * eps - m * epsp) / 2.0 - static_cast<double>(m) * zeta
                                    - static_cast<double>(m * m) * t / 2.0));
    const cplx rhs = factor * theta_point(c, zeta, tau, tol);
    const double scale = std::max(std::abs(lhs), std::abs(rhs));
    return scale == 0.0 ? 0.0 : std::abs(lhs - rhs) / scale;
}

double check_half_period(const Characteristic &c, cplx zeta, cplx tau, int m, int n, double tol)
{
    const cplx t = tau * static_cast<double>(c.scale);
    const double epsp = to_double(c.epsp);
    const cplx lhs = theta_point(c, zeta + (static_cast<double>(n) + static_cast<double>(m) * t) / 2.0, tau, tol);
    const cplx factor = std::exp(2.0 * kI * kPi
                                 * (-static_cast<double>(m) * zeta / 2.0 - static_cast<double>(m * m) * t / 8.0
                                    - m * (epsp + n) / 4.0));
    const Characteristic shifted{c.eps + m, c.epsp + n, c.scale};
    const cplx rhs = factor * theta_point(shifted, zeta, tau, tol);
    const double scale = std::max(std::abs(lhs), std::abs(rhs));
    return scale == 0.0 ? 0.0 : std::abs(lhs - rhs) / scale;
}

cplx zero_location(const Characteristic &c, cplx tau)
{
    const cplx t = tau * static_cast<double>(c.scale);
    return (1.0 - to_double(c.eps)) / 2.0 * t + (1.0 - to_double(c.epsp)) / 2.0;
}

EllipticResult check_elliptic_constancy(EllipticVariant v, const SamplePlan &plan, double tol,
                                        const EllipticConfig &config)
{
    validate(plan);
    if (!(tol > 0.0)) {
        throw std::invalid_argument("tolerance must be positive");
    }
    const double sum_tol = std::min(kDefaultTol, tol * 1e-6);
    const Rational a = (v == EllipticVariant::quarter) ? Rational(1, 4) : Rational(3, 4);
    // weights of theta[a; (2j+1)/4]^4, j = 0..3, as powers of zeta_8 with a sign
    const std::array<int, 4> powers = (v == EllipticVariant::quarter) ? std::array<int, 4>{0, 3, 6, 1}
                                                                      : std::array<int, 4>{0, 1, 2, 3};
    const std::array<double, 4> signs{1.0, -1.0, 1.0, -1.0};
    const int root = (v == EllipticVariant::quarter) ? 3 : 1;

    auto f = [&](cplx zeta, cplx tau, double &den_abs) {
        cplx num = 0.0;
        for (int j = 0; j < 4; ++j) {
            const cplx th = theta_point({a, Rational(2 * j + 1, 4)}, zeta, tau, sum_tol);
            num += signs[static_cast<std::size_t>(j)] * omega8(powers[static_cast<std::size_t>(j)]) * th * th * th * th;
        }
        cplx den = 1.0;
        for (int j = 0; j < 4; ++j) {
            den *= theta_point({a, Rational(j, 2)}, zeta, tau, sum_tol);
        }
        den_abs = std::abs(den);
        return num / den;
    };
    auto closed_form = [&](cplx tau) {
        auto th = [&](Rational e, Rational ep) { return theta_point({e, ep}, 0.0, tau, sum_tol); };
        auto dth = [&](Rational e, Rational ep) { return theta_deriv_point({e, ep}, 0.0, tau, sum_tol); };
        const cplx t14 = th(1, Rational(1, 4));
        const cplx t34 = th(1, Rational(3, 4));
        const cplx c = t14 * t14 * t14 * dth(1, Rational(1, 4)) - t34 * t34 * t34 * dth(1, Rational(3, 4));
        const cplx t12 = th(1, Rational(1, 2));
        const cplx rho = config.drop_root_factor ? cplx(1.0) : omega8(root);
        return -8.0 * rho * c / (dth(1, 1) * th(1, 0) * t12 * t12);
    };

    EllipticResult result;
    // One stream; redraws continue it so the outcome depends only on the seed.
    const int budget = plan.count + plan.count / 2 + 1;
    const auto pool = draw_samples(plan, budget);
    std::size_t next = 0;
    while (result.evaluated < plan.count) {
        if (next >= pool.size()) {
            throw std::runtime_error("elliptic constancy: more than half of the samples hit a theta zero");
        }
        const Sample s = pool[next++];
        double den0 = 0.0;
        double den = 0.0;
        const cplx f0 = f(0.0, s.tau, den0);
        const cplx fz = f(s.zeta, s.tau, den);
        if (den < 1e-10 || den0 < 1e-10) {
            ++result.resamples;
            if (result.resamples * 2 > plan.count) {
                throw std::runtime_error("elliptic constancy: more than half of the samples hit a theta zero");
            }
            continue;
        }
        ++result.evaluated;
        result.constancy = std::max(result.constancy, std::abs(fz - f0) / std::abs(f0));
        const cplx rhs = closed_form(s.tau);
        result.closed_form = std::max(result.closed_form, std::abs(f0 - rhs) / std::abs(rhs));
    }
    return result;
}

DetResult det_A(cplx tau, bool perturb)
{
    auto th = [&](Rational ep) { return theta_point({Rational(1), ep}, 0.0, tau); };
    const cplx a = th(Rational(1, 4));
    const cplx b = th(Rational(3, 4));
    const cplx t10 = th(Rational(0));
    const cplx t12 = th(Rational(1, 2));
    Eigen::Matrix4cd m;
    // clang-format off
    m <<        0.0,      a * b, t10 * t12,   a * a,
              -a * b,       0.0,     a * b, t12 * t12,
         -t10 * t12,     -a * b,       0.0,   b * b,
             -a * a, -t12 * t12,    -b * b,     0.0;
    // clang-format on
    if (perturb) {
        m(0, 3) *= 2.0;
        m(3, 0) *= 2.0;
    }
    DetResult r;
    r.det = m.determinant();
    r.scale = m.cwiseAbs().maxCoeff();
    r.relative = std::abs(r.det) / std::pow(r.scale, 4);
    return r;
}

} // namespace thetaid::numeric
