#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include <thetaid/arith.hpp>
#include <thetaid/cyclotomic.hpp>
#include <thetaid/thetaforms.hpp>

namespace thetaid
{

enum class NodeKind {
    add,
    sub,
    mul,
    neg,
    pow,
    // atoms
    theta,
    dtheta, // theta' / (2 pi i)
    eta,
    etaq,
    farkas,
    lambert,
    arith,
    qpow,
    // constants
    literal, // nonnegative rational
    zeta,    // zeta_N^j
    sqrt2,
    sqrt3,
    imag,
};

bool is_atom(NodeKind k);
bool is_constant(NodeKind k);

// Immutable expression tree with shared nodes; copying is cheap.
class Expr
{
public:
    struct Node {
        NodeKind kind = NodeKind::literal;
        std::vector<Expr> args;
        unsigned exponent = 0;
        Characteristic chr;
        std::int64_t scale = 1;
        EtaQuotientSpec etaq;
        arith::LambertVariant lambert = arith::LambertVariant::half;
        arith::ArithSeries series = arith::ArithSeries::s2;
        Rational value;
        int zeta_order = 1;
        std::int64_t zeta_power = 0;
    };

    Expr();
    explicit Expr(Node node);

    const Node &node() const { return *node_; }
    NodeKind kind() const { return node_->kind; }
    const std::vector<Expr> &args() const { return node_->args; }

    friend bool operator==(const Expr &a, const Expr &b);

private:
    std::shared_ptr<const Node> node_;
};

namespace ex
{
Expr theta(const Rational &eps, const Rational &epsp, std::int64_t scale = 1);
Expr dtheta(const Rational &eps, const Rational &epsp, std::int64_t scale = 1);
Expr eta(std::int64_t k);
Expr etaq(EtaQuotientSpec spec);
Expr farkas();
Expr lambert(arith::LambertVariant v);
Expr arith(arith::ArithSeries s);
Expr qpow(const Rational &r);
Expr lit(const Rational &r);
Expr zeta(int order, std::int64_t power = 1);
Expr sqrt2();
Expr sqrt3();
Expr imag();
Expr pow(const Expr &base, unsigned m);
} // namespace ex

Expr operator+(const Expr &a, const Expr &b);
Expr operator-(const Expr &a, const Expr &b);
Expr operator*(const Expr &a, const Expr &b);
Expr operator-(const Expr &a);

struct IdentityAst {
    Expr lhs;
    Expr rhs;

    friend bool operator==(const IdentityAst &, const IdentityAst &) = default;
};

// Exact value of a constant node (literal, zeta, sqrt2, sqrt3, I).
CycloNumber constant_value(const Expr &e);

// Pre-order search for the first subtraction, turned into an addition.
std::optional<Expr> flip_first_subtraction(const Expr &e);
// Pre-order search for the first literal equal to `from`, replaced by `to`.
std::optional<Expr> replace_first_literal(const Expr &e, const Rational &from, const Rational &to);

// Smallest grading D and cyclotomic order N able to hold every atom and constant.
std::int64_t infer_grading(const Expr &e);
int infer_order(const Expr &e);

} // namespace thetaid
