#include <thetaid/expr.hpp>

#include <functional>
#include <numeric>
#include <stdexcept>

namespace thetaid
{

namespace
{

Expr make(NodeKind kind, std::vector<Expr> args = {})
{
    Expr::Node n;
    n.kind = kind;
    n.args = std::move(args);
    return Expr(std::move(n));
}

std::int64_t den_of(const Rational &r)
{
    return static_cast<std::int64_t>(boost::multiprecision::denominator(r));
}

bool same_node(const Expr::Node &a, const Expr::Node &b)
{
    if (a.kind != b.kind) {
        return false;
    }
    switch (a.kind) {
        case NodeKind::add:
        case NodeKind::sub:
        case NodeKind::mul:
        case NodeKind::neg:
            return a.args == b.args;
        case NodeKind::pow:
            return a.exponent == b.exponent && a.args == b.args;
        case NodeKind::theta:
        case NodeKind::dtheta:
            return a.chr == b.chr;
        case NodeKind::eta:
            return a.scale == b.scale;
        case NodeKind::etaq:
            return a.etaq == b.etaq;
        case NodeKind::lambert:
            return a.lambert == b.lambert;
        case NodeKind::arith:
            return a.series == b.series;
        case NodeKind::qpow:
        case NodeKind::literal:
            return a.value == b.value;
        case NodeKind::zeta:
            return a.zeta_order == b.zeta_order && a.zeta_power == b.zeta_power;
        case NodeKind::farkas:
        case NodeKind::sqrt2:
        case NodeKind::sqrt3:
        case NodeKind::imag:
            return true;
    }
    return false;
}

std::optional<Expr> rebuild_first(const Expr &e, const std::function<std::optional<Expr>(const Expr &)> &hit)
{
    if (auto r = hit(e)) {
        return r;
    }
    const auto &args = e.args();
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (auto r = rebuild_first(args[i], hit)) {
            Expr::Node n = e.node();
            n.args[i] = *r;
            return Expr(std::move(n));
        }
    }
    return std::nullopt;
}

} // namespace

bool is_atom(NodeKind k)
{
    switch (k) {
        case NodeKind::theta:
        case NodeKind::dtheta:
        case NodeKind::eta:
        case NodeKind::etaq:
        case NodeKind::farkas:
        case NodeKind::lambert:
        case NodeKind::arith:
        case NodeKind::qpow:
            return true;
        default:
            return false;
    }
}

bool is_constant(NodeKind k)
{
    switch (k) {
        case NodeKind::literal:
        case NodeKind::zeta:
        case NodeKind::sqrt2:
        case NodeKind::sqrt3:
        case NodeKind::imag:
            return true;
        default:
            return false;
    }
}

Expr::Expr() : node_(std::make_shared<const Node>()) {}

Expr::Expr(Node node) : node_(std::make_shared<const Node>(std::move(node))) {}

bool operator==(const Expr &a, const Expr &b)
{
    return a.node_ == b.node_ || same_node(*a.node_, *b.node_);
}

namespace ex
{

Expr theta(const Rational &eps, const Rational &epsp, std::int64_t scale)
{
    Expr::Node n;
    n.kind = NodeKind::theta;
    n.chr = Characteristic{eps, epsp, scale};
    return Expr(std::move(n));
}

Expr dtheta(const Rational &eps, const Rational &epsp, std::int64_t scale)
{
    Expr::Node n;
    n.kind = NodeKind::dtheta;
    n.chr = Characteristic{eps, epsp, scale};
    return Expr(std::move(n));
}

Expr eta(std::int64_t k)
{
    Expr::Node n;
    n.kind = NodeKind::eta;
    n.scale = k;
    return Expr(std::move(n));
}

Expr etaq(EtaQuotientSpec spec)
{
    Expr::Node n;
    n.kind = NodeKind::etaq;
    n.etaq = std::move(spec);
    return Expr(std::move(n));
}

Expr farkas()
{
    return make(NodeKind::farkas);
}

Expr lambert(arith::LambertVariant v)
{
    Expr::Node n;
    n.kind = NodeKind::lambert;
    n.lambert = v;
    return Expr(std::move(n));
}

Expr arith(arith::ArithSeries s)
{
    Expr::Node n;
    n.kind = NodeKind::arith;
    n.series = s;
    return Expr(std::move(n));
}

Expr qpow(const Rational &r)
{
    Expr::Node n;
    n.kind = NodeKind::qpow;
    n.value = r;
    return Expr(std::move(n));
}

Expr lit(const Rational &r)
{
    if (r < 0) {
        throw std::invalid_argument("literals are nonnegative; negate explicitly");
    }
    Expr::Node n;
    n.kind = NodeKind::literal;
    n.value = r;
    return Expr(std::move(n));
}

Expr zeta(int order, std::int64_t power)
{
    if (order < 1) {
        throw std::invalid_argument("zeta order must be positive");
    }
    Expr::Node n;
    n.kind = NodeKind::zeta;
    n.zeta_order = order;
    n.zeta_power = power;
    return Expr(std::move(n));
}

Expr sqrt2()
{
    return make(NodeKind::sqrt2);
}

Expr sqrt3()
{
    return make(NodeKind::sqrt3);
}

Expr imag()
{
    return make(NodeKind::imag);
}

Expr pow(const Expr &base, unsigned m)
{
    Expr::Node n;
    n.kind = NodeKind::pow;
    n.exponent = m;
    n.args = {base};
    return Expr(std::move(n));
}

} // namespace ex

Expr operator+(const Expr &a, const Expr &b)
{
    return make(NodeKind::add, {a, b});
}

Expr operator-(const Expr &a, const Expr &b)
{
    return make(NodeKind::sub, {a, b});
}

Expr operator*(const Expr &a, const Expr &b)
{
    return make(NodeKind::mul, {a, b});
}

Expr operator-(const Expr &a)
{
    return make(NodeKind::neg, {a});
}

CycloNumber constant_value(const Expr &e)
{
    const auto &n = e.node();
    switch (n.kind) {
        case NodeKind::literal:
            return CycloNumber(n.value);
        case NodeKind::zeta:
            return CycloNumber::root_of_unity(n.zeta_order, n.zeta_power);
        case NodeKind::sqrt2:
            return thetaid::sqrt2();
        case NodeKind::sqrt3:
            return thetaid::sqrt3();
        case NodeKind::imag:
            return imag_unit();
        default:
            throw std::invalid_argument("not a constant node");
    }
}

std::optional<Expr> flip_first_subtraction(const Expr &e)
{
    return rebuild_first(e, [](const Expr &x) -> std::optional<Expr> {
        if (x.kind() == NodeKind::sub) {
            return x.args()[0] + x.args()[1];
        }
        return std::nullopt;
    });
}

std::optional<Expr> replace_first_literal(const Expr &e, const Rational &from, const Rational &to)
{
    return rebuild_first(e, [&](const Expr &x) -> std::optional<Expr> {
        if (x.kind() == NodeKind::literal && x.node().value == from) {
            return ex::lit(to);
        }
        return std::nullopt;
    });
}

std::int64_t infer_grading(const Expr &e)
{
    const auto &n = e.node();
    std::int64_t g = 1;
    switch (n.kind) {
        case NodeKind::theta:
        case NodeKind::dtheta:
            g = required_grading(n.chr);
            break;
        case NodeKind::eta:
            g = required_grading(eta_spec(n.scale));
            break;
        case NodeKind::etaq:
            g = required_grading(n.etaq);
            break;
        case NodeKind::arith:
            g = arith::required_grading(n.series);
            break;
        case NodeKind::qpow:
            g = den_of(n.value * 2);
            break;
        default:
            break;
    }
    for (const auto &a : n.args) {
        g = std::lcm(g, infer_grading(a));
    }
    return g;
}

int infer_order(const Expr &e)
{
    const auto &n = e.node();
    int o = 1;
    switch (n.kind) {
        case NodeKind::theta:
        case NodeKind::dtheta:
            o = required_order(n.chr);
            break;
        case NodeKind::lambert:
            o = (n.lambert == arith::LambertVariant::half) ? 4 : 8;
            break;
        case NodeKind::zeta:
            o = n.zeta_order;
            break;
        case NodeKind::sqrt2:
            o = 8;
            break;
        case NodeKind::sqrt3:
            o = 12;
            break;
        case NodeKind::imag:
            o = 4;
            break;
        default:
            break;
    }
    for (const auto &a : n.args) {
        o = std::lcm(o, infer_order(a));
    }
    return o;
}

} // namespace thetaid
