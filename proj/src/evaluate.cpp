#include <thetaid/evaluate.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <thetaid/dsl.hpp>
#include <thetaid/numeric.hpp>

namespace thetaid
{

namespace
{

using cplx = std::complex<double>;
constexpr double kPi = 3.14159265358979323846;
const cplx kI(0.0, 1.0);

// Value of an exact series at tau, assuming the tail beyond its cutoff is negligible.
cplx series_at(const QSeries &s, cplx tau)
{
    cplx sum = 0.0;
    const double d = static_cast<double>(s.grading());
    for (const auto &t : s.terms()) {
        sum += t.coeff.to_complex() * std::exp(kI * kPi * tau * (static_cast<double>(t.exponent) / d));
    }
    return sum;
}

// x-exponent beyond which |x|^X is below 1e-19.
std::int64_t numeric_window(cplx tau)
{
    return static_cast<std::int64_t>(std::ceil(44.0 / (kPi * tau.imag()))) + 10;
}

cplx product_in_q(cplx q, std::int64_t m, std::int64_t e)
{
    cplx p = 1.0;
    cplx qm = std::pow(q, static_cast<double>(m));
    cplx qmn = qm;
    for (int n = 1; n < 100000 && std::abs(qmn) > 1e-19; ++n) {
        p *= std::pow(1.0 - qmn, static_cast<double>(e));
        qmn *= qm;
    }
    return p;
}

} // namespace

ExactEvaluator::ExactEvaluator(EvalContext ctx) : ctx_(ctx)
{
    if (ctx_.grading < 1 || ctx_.order < 1) {
        throw std::invalid_argument("evaluation context needs positive grading and order");
    }
}

QSeries ExactEvaluator::eval(const Expr &e)
{
    if (is_constant(e.kind())) {
        return compute(e);
    }
    const std::string key = dsl::print(e);
    if (auto it = cache_.find(key); it != cache_.end()) {
        return it->second;
    }
    QSeries v = compute(e);
    cache_.emplace(key, v);
    return v;
}

QSeries ExactEvaluator::compute(const Expr &e)
{
    const auto &args = e.args();
    switch (e.kind()) {
        case NodeKind::add:
            return eval(args[0]) + eval(args[1]);
        case NodeKind::sub:
            return eval(args[0]) - eval(args[1]);
        case NodeKind::mul:
            return eval(args[0]) * eval(args[1]);
        case NodeKind::neg:
            return -eval(args[0]);
        case NodeKind::pow:
            return pow(eval(args[0]), e.node().exponent);
        default:
            break;
    }
    if (is_constant(e.kind())) {
        return QSeries::constant(constant_value(e).embed(ctx_.order), ctx_.grading);
    }
    return atom(e);
}

QSeries ExactEvaluator::atom(const Expr &e)
{
    const auto &n = e.node();
    const std::int64_t d = ctx_.grading;
    const std::int64_t t = ctx_.cutoff;
    switch (n.kind) {
        case NodeKind::theta:
            return theta_constant(n.chr, d, t, ctx_.order);
        case NodeKind::dtheta:
            return theta_deriv_normalized(n.chr, d, t, ctx_.order);
        case NodeKind::eta:
            return eta_quotient(eta_spec(n.scale), d, t);
        case NodeKind::etaq:
            return eta_quotient(n.etaq, d, t);
        case NodeKind::farkas:
            return farkas_product(d, t);
        case NodeKind::lambert:
            return arith::lambert_logderiv_series(n.lambert, d, t);
        case NodeKind::arith:
            return arith::arith_series(n.series, d, t);
        case NodeKind::qpow:
            return q_power(n.value, d);
        default:
            throw std::logic_error("unhandled expression node");
    }
}

NumericEvaluator::NumericEvaluator(std::complex<double> tau) : tau_(tau)
{
    if (!(tau.imag() > 0.0)) {
        throw std::domain_error("numeric evaluation needs Im(tau) > 0");
    }
}

NumericValue NumericEvaluator::eval(const Expr &e)
{
    const auto &args = e.args();
    switch (e.kind()) {
        case NodeKind::add:
        case NodeKind::sub: {
            const NumericValue a = eval(args[0]);
            const NumericValue b = eval(args[1]);
            return {e.kind() == NodeKind::add ? a.value + b.value : a.value - b.value, a.magnitude + b.magnitude};
        }
        case NodeKind::mul: {
            const NumericValue a = eval(args[0]);
            const NumericValue b = eval(args[1]);
            return {a.value * b.value, a.magnitude * b.magnitude};
        }
        case NodeKind::neg: {
            const NumericValue a = eval(args[0]);
            return {-a.value, a.magnitude};
        }
        case NodeKind::pow: {
            const NumericValue a = eval(args[0]);
            const unsigned m = e.node().exponent;
            cplx v = 1.0;
            double mag = 1.0;
            for (unsigned k = 0; k < m; ++k) {
                v *= a.value;
                mag *= a.magnitude;
            }
            return {v, mag};
        }
        default:
            break;
    }
    if (is_constant(e.kind())) {
        const cplx v = constant_value(e).to_complex();
        return {v, std::abs(v)};
    }
    const std::string key = dsl::print(e);
    if (auto it = cache_.find(key); it != cache_.end()) {
        return it->second;
    }
    NumericValue v = atom(e);
    cache_.emplace(key, v);
    return v;
}

namespace
{

// sum over n of |a|^k exp(-pi a^2 scale Im tau), a = n + eps/2: the scale of a
// theta atom that stays meaningful when the phases cancel it to zero.
double theta_abs_sum(const Characteristic &c, double y, bool deriv)
{
    const double h = c.eps.convert_to<double>() / 2.0;
    const double t = kPi * y * static_cast<double>(c.scale);
    double sum = 0.0;
    const long centre = std::lround(-h);
    for (long k = 0;; ++k) {
        double part = 0.0;
        for (const long n : {centre + k, centre - k - 1}) {
            const double a = static_cast<double>(n) + h;
            part += (deriv ? std::abs(a) : 1.0) * std::exp(-t * a * a);
        }
        sum += part;
        if (k > 2 && part < 1e-18 * sum) {
            break;
        }
    }
    return sum;
}

} // namespace

NumericValue NumericEvaluator::atom(const Expr &e)
{
    const auto &n = e.node();
    const cplx q = std::exp(2.0 * kI * kPi * tau_);
    cplx v;
    switch (n.kind) {
        case NodeKind::theta:
            v = numeric::theta_point(n.chr, 0.0, tau_);
            return {v, std::max(std::abs(v), theta_abs_sum(n.chr, tau_.imag(), false))};
        case NodeKind::dtheta:
            v = numeric::theta_deriv_point(n.chr, 0.0, tau_) / (2.0 * kI * kPi);
            return {v, std::max(std::abs(v), theta_abs_sum(n.chr, tau_.imag(), true))};
        case NodeKind::eta:
        case NodeKind::etaq: {
            const EtaQuotientSpec spec = n.kind == NodeKind::eta ? eta_spec(n.scale) : n.etaq;
            v = std::exp(2.0 * kI * kPi * tau_ * static_cast<double>(spec.prefactor_exponent));
            for (const auto &[m, ex] : spec.factors) {
                v *= product_in_q(q, m, ex);
            }
            break;
        }
        case NodeKind::farkas:
            v = product_in_q(q, 1, 1) / product_in_q(q, 3, 1);
            break;
        case NodeKind::lambert: {
            const std::int64_t d = 1;
            v = series_at(arith::lambert_logderiv_series(n.lambert, d, numeric_window(tau_) * d), tau_);
            break;
        }
        case NodeKind::arith: {
            const std::int64_t d = arith::required_grading(n.series);
            v = series_at(arith::arith_series(n.series, d, numeric_window(tau_) * d), tau_);
            break;
        }
        case NodeKind::qpow:
            v = std::exp(2.0 * kI * kPi * tau_ * static_cast<double>(n.value));
            break;
        default:
            throw std::logic_error("unhandled expression node");
    }
    return {v, std::abs(v)};
}

} // namespace thetaid
