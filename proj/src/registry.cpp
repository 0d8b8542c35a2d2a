#include <thetaid/identities.hpp>

#include <array>
#include <numeric>

#include <thetaid/dsl.hpp>

namespace thetaid
{

namespace
{

struct Spec {
    const char *name;
    const char *summary;
    const char *normalization;
    std::vector<std::pair<const char *, const char *>> readings; // (label, text)
    std::vector<const char *> guards;
    std::int64_t x_cutoff = 100;
    const char *mutation = nullptr;
};

IdentityRecord build(const Spec &s)
{
    IdentityRecord r;
    r.name = s.name;
    r.summary = s.summary;
    r.normalization = s.normalization;
    for (const auto &[label, text] : s.readings) {
        r.readings.push_back({label, dsl::parse(text)});
    }
    for (const char *g : s.guards) {
        r.nonvanishing.push_back(dsl::parse_expr(g));
    }
    if (s.mutation) {
        r.mutation = dsl::parse(s.mutation);
    }
    r.x_cutoff = s.x_cutoff;
    infer_context(r);
    return r;
}

// Common pieces, spelled once.
#define A4 "theta[1,1/4]^4"
#define B4 "theta[1,3/4]^4"
#define QUARTIC_COMBO "theta[1,1/4]^3 * dtheta[1,1/4] - theta[1,3/4]^3 * dtheta[1,3/4]"
#define BRACE4 "(theta[0,0](4)^2 + 3 * theta[1,0](4)^2)"
#define N1                                                                                                            \
    "(theta[1/4,1/4]^4 - zeta(8)^3 * theta[1/4,3/4]^4 + zeta(8)^6 * theta[1/4,5/4]^4 - zeta(8)^1 * theta[1/4,7/4]^4)"
#define N2                                                                                                            \
    "(theta[3/4,1/4]^4 - zeta(8)^1 * theta[3/4,3/4]^4 + zeta(8)^2 * theta[3/4,5/4]^4 - zeta(8)^3 * theta[3/4,7/4]^4)"
#define D1 "theta[1/4,0] * theta[1/4,1/2] * theta[1/4,1] * theta[1/4,3/2]"
#define D2 "theta[3/4,0] * theta[3/4,1/2] * theta[3/4,1] * theta[3/4,3/2]"
#define QPROD "theta[0,0] * theta[0,1] * theta[1,0]^2 * theta[1,1/2]^2"

const char *const kPiHalf = "-pi = 2 pi i * (i/2)";

std::vector<Spec> specs()
{
    return {
        {"jacobi", "Jacobi derivative formula for theta'[1,1]", kPiHalf,
         {{"", "dtheta[1,1] == I * 1/2 * theta[0,0] * theta[1,0] * theta[0,1]"}},
         {}},
        {"jacobi-eta-cube", "prod (1 - q^n)^3 as the alternating sum over triangular exponents", "none",
         {{"", "etaq{(1,3); 0} == arith(tri)"}},
         {},
         600},
        {"eta-cube-kronecker", "eta(tau)^3 = sum (-1/n) n q^(n^2/8)", "none",
         {{"", "eta(1)^3 == arith(kron1sq)"}},
         {},
         600},
        {"farkas-12", "third-characteristic derivative formula against the Farkas product",
         "both sides divided by 2 pi i; quotients cross-multiplied",
         {{"", "6 * dtheta[1,1/3] * farkasprod == qpow(1/12) * (zeta(6)^1 * theta[1/3,1/3]^3 + theta[1/3,1]^3 + "
               "zeta(6)^5 * theta[1/3,5/3]^3)"}},
         {"farkasprod", "zeta(6)^1 * theta[1/3,1/3]^3 + theta[1/3,1]^3 + zeta(6)^5 * theta[1/3,5/3]^3"},
         60},
        {"farkas-23", "Farkas product against theta[1,1/3] / theta[1/3,1](3 tau)",
         "both sides divided by 2 pi i; 1/sqrt3 = sqrt3/3 cleared",
         {{"", "sqrt3 * qpow(1/12) * theta[1/3,1](3) == zeta(12)^1 * theta[1,1/3] * farkasprod"}},
         {"farkasprod", "theta[1/3,1](3)"},
         60},
        {"farkas-34", "theta[1,1/3] against theta[1/3,1](9 tau)", "both sides divided by 2 pi i",
         {{"", "zeta(12)^1 * theta[1,1/3] == sqrt3 * theta[1/3,1](9)"}},
         {"theta[1/3,1](3)"},
         60},
        {"s2-gf", "theta[0,0]^2 generates S2(n)", "none", {{"", "theta[0,0]^2 == arith(s2)"}}, {}, 500},
        {"s12-gf", "theta[0,0](tau) theta[0,0](2 tau) generates S12(n)", "none",
         {{"", "theta[0,0] * theta[0,0](2) == arith(s12)"}},
         {},
         500},
        {"thm-1-1", "theta'[1,1/2] = -pi theta[0,0](2 tau)^2 theta[1,1/2]", kPiHalf,
         {{"", "dtheta[1,1/2] == I * 1/2 * theta[0,0](2)^2 * theta[1,1/2]"}},
         {}},
        {"pro-series", "eta-type product against sum (-2/n) n q^(t_((n-1)/2))", "none",
         {{"", "etaq{(2,9),(1,-3),(4,-3); 0} == arith(kron2)"}},
         {},
         600},
        {"thm-1-1-eta", "eta(2 tau)^9 / (eta(tau)^3 eta(4 tau)^3) = sum (-2/n) n q^(n^2/8)",
         "denominator cleared",
         {{"", "eta(2)^9 == eta(1)^3 * eta(4)^3 * arith(kron2sq)"}},
         {"eta(1)^3 * eta(4)^3"},
         300},
        {"thm-1-2-quarter", "theta'[1,1/4] in theta constants at tau, 2 tau, 4 tau", kPiHalf,
         {{"", "dtheta[1,1/4] == I * 1/2 * theta[1,1/4] * theta[0,0](4) * (sqrt2 * theta[0,0](2) - theta[0,0](4))"}},
         {}},
        {"thm-1-2-threequarter", "theta'[1,3/4] in theta constants at tau, 2 tau, 4 tau", kPiHalf,
         {{"", "dtheta[1,3/4] == I * 1/2 * theta[1,3/4] * theta[0,0](4) * (sqrt2 * theta[0,0](2) + theta[0,0](4))"}},
         {}},
        {"lambert-half", "Lambert series for theta'/theta at [1,1/2]", "theta'/(2 pi i)",
         {{"", "lambert(half) * theta[1,1/2] == dtheta[1,1/2]"}},
         {"theta[1,1/2]"}},
        {"lambert-quarter", "Lambert series for theta'/theta at [1,1/4]", "theta'/(2 pi i)",
         {{"", "lambert(quarter) * theta[1,1/4] == dtheta[1,1/4]"}},
         {"theta[1,1/4]"}},
        {"lambert-threequarter", "Lambert series for theta'/theta at [1,3/4]", "theta'/(2 pi i)",
         {{"", "lambert(threequarter) * theta[1,3/4] == dtheta[1,3/4]"}},
         {"theta[1,3/4]"}},
        {"prop-4-1-diff", "difference of log-derivatives at [1,1/4] and [1,3/4]",
         "2 pi = 2 pi i * (-i); denominators cleared",
         {{"", "dtheta[1,1/4] * theta[1,3/4] - dtheta[1,3/4] * theta[1,1/4] == -I * theta[0,0](4)^2 * theta[1,1/4] "
               "* theta[1,3/4]"}},
         {"theta[1,1/4] * theta[1,3/4]"}},
        {"prop-4-1-sum", "sum of log-derivatives at [1,1/4] and [1,3/4]",
         "-2 sqrt2 pi = 2 pi i * (i sqrt2); denominators cleared",
         {{"", "dtheta[1,1/4] * theta[1,3/4] + dtheta[1,3/4] * theta[1,1/4] == I * sqrt2 * theta[0,0](2) * "
               "theta[0,0](4) * theta[1,1/4] * theta[1,3/4]"}},
         {"theta[1,1/4] * theta[1,3/4]"}},
        {"cor-4-2-a", "quartic combination at [1/4,.] against the derivative combination",
         "pi / (8 zeta8^3) = 2 pi i * zeta8^3 / 16; denominator cleared",
         {{"", "(" QUARTIC_COMBO ") * " D1 " == 1/16 * zeta(8)^3 * " QPROD " * " N1}},
         {D1}},
        {"cor-4-2-b", "quartic combination at [3/4,.] against the derivative combination",
         "pi / (8 zeta8) = 2 pi i * zeta8^5 / 16; denominator cleared",
         {{"", "(" QUARTIC_COMBO ") * " D2 " == 1/16 * zeta(8)^5 * " QPROD " * " N2}},
         {D2}},
        {"prop-4-3", "derivative combination in theta constants at 4 tau", "-2 pi = 2 pi i * i",
         {{"", QUARTIC_COMBO " == I * theta[0,0](4)^2 * theta[1,0](4) * theta[0,1](4) * " BRACE4}},
         {},
         100,
         "theta[1,1/4]^3 * dtheta[1,1/4] - theta[1,3/4]^3 * dtheta[1,3/4] == I * theta[0,0](4)^2 * theta[1,0](4) "
         "* theta[0,1](4) * (theta[0,0](4)^2 + 2 * theta[1,0](4)^2)"},
        {"prop-4-3-square-1", "theta[1/4,1/4]^2 at 2 tau", "none",
         {{"", "theta[1/4,1/4]^2 == theta[1/4,1/2](2) * theta[0,0](2) + zeta(8)^5 * theta[3/4,3/2](2) * "
               "theta[1,0](2)"}},
         {}},
        {"prop-4-3-square-2", "theta[1/4,3/4]^2 at 2 tau", "none",
         {{"", "theta[1/4,3/4]^2 == theta[1/4,3/2](2) * theta[0,0](2) + zeta(8)^5 * theta[3/4,1/2](2) * "
               "theta[1,0](2)"}},
         {}},
        {"prop-4-3-square-3", "theta[1/4,5/4]^2 at 2 tau", "none",
         {{"", "theta[1/4,5/4]^2 == zeta(8)^1 * theta[1/4,1/2](2) * theta[0,0](2) + zeta(8)^2 * theta[3/4,3/2](2) * "
               "theta[1,0](2)"}},
         {}},
        {"prop-4-3-square-4", "theta[1/4,7/4]^2 at 2 tau", "none",
         {{"", "theta[1/4,7/4]^2 == zeta(8)^1 * theta[1/4,3/2](2) * theta[0,0](2) + zeta(8)^2 * theta[3/4,1/2](2) * "
               "theta[1,0](2)"}},
         {}},
        {"prop-4-3-quartic", "quartic combination at [1/4,.] in theta constants at 4 tau", "none",
         {{"", N1 " == 4 * theta[1/4,1](4) * theta[0,0](4) * " BRACE4}},
         {}},
        {"prop-4-3-quartic-mid", "quartic combination at [1/4,.] in squares at 2 tau", "none",
         {{"printed", N1 " == 2 * theta[0,0](2)^2 * (theta[1/4,1/2](2)^2 - zeta(8)^3 * theta[1/4,3/2](2)^2) - 2 * "
                      "zeta(8)^2 * theta[1,0](2)^2 * (zeta(8)^3 * theta[1/4,1/2](2)^2 - theta[3/4,3/2](2)^2)"},
          {"corrected", N1 " == 2 * theta[0,0](2)^2 * (theta[1/4,1/2](2)^2 - zeta(8)^3 * theta[1/4,3/2](2)^2) - 2 * "
                        "zeta(8)^2 * theta[1,0](2)^2 * (zeta(8)^3 * theta[3/4,1/2](2)^2 - theta[3/4,3/2](2)^2)"}},
         {}},
        {"prop-4-3-denominator", "product of the four theta[1/4,.] in theta constants at 4 tau", "none",
         {{"printed", D1 " == zeta(8)^1 * theta[1/4,1](4) * theta[0,1](4) * (theta[0,0](4)^2 - theta[1,0](4))"},
          {"squared", D1 " == zeta(8)^1 * theta[1/4,1](4) * theta[0,1](4) * (theta[0,0](4)^2 - theta[1,0](4)^2)"}},
         {}},
        {"prop-4-3-jacobi-product", "theta[0,0] theta[0,1] theta[1,0]^2 theta[1,1/2]^2 at 4 tau", "none",
         {{"", QPROD " == 4 * theta[0,0](4) * theta[1,0](4) * theta[0,1](4)^2 * (theta[0,0](4)^2 - "
                     "theta[1,0](4)^2)"}},
         {}},
        {"thm-4-5-theta10-square", "theta[1,0]^2 at 2 tau", "none",
         {{"", "theta[1,0]^2 == 2 * theta[0,0](2) * theta[1,0](2)"}},
         {}},
        {"thm-4-4-quarter", "theta'[1,1/4] over theta[1,1/4]^4 - theta[1,3/4]^4",
         "-2 pi = 2 pi i * i; denominator cleared",
         {{"", "dtheta[1,1/4] * (" A4 " - " B4 ") == I * theta[1,1/4] * theta[0,0](4)^2 * (theta[1,0](4) * "
               "theta[0,1](4) * " BRACE4 " + " B4 ")"}},
         {A4 " - " B4}},
        {"thm-4-4-threequarter", "theta'[1,3/4] over theta[1,1/4]^4 - theta[1,3/4]^4",
         "-2 pi = 2 pi i * i; denominator cleared",
         {{"", "dtheta[1,3/4] * (" A4 " - " B4 ") == I * theta[1,3/4] * theta[0,0](4)^2 * (theta[1,0](4) * "
               "theta[0,1](4) * " BRACE4 " + " A4 ")"}},
         {A4 " - " B4}},
        {"thm-4-5-quarter", "theta'[1,1/4] over theta[1,1/4]^4 + theta[1,3/4]^4",
         "-pi = 2 pi i * (i/2); denominator cleared",
         {{"printed", "dtheta[1,1/4] * (" A4 " + " B4 ") == I * 1/2 * theta[1,1/4] * theta[0,0](4) * (theta[1,0](2)^2 "
                      "* theta[1,0](4) * " BRACE4 " + 2 * sqrt2 * " B4 " * theta[0,0](2))"},
          {"corrected", "dtheta[1,1/4] * (" A4 " + " B4 ") == I * 1/2 * theta[1,1/4] * theta[0,0](4) * "
                        "(theta[1,0](2)^2 * theta[0,1](4) * " BRACE4 " + 2 * sqrt2 * " B4 " * theta[0,0](2))"}},
         {A4 " + " B4}},
        {"thm-4-5-threequarter", "theta'[1,3/4] over theta[1,1/4]^4 + theta[1,3/4]^4",
         "pi = 2 pi i * (-i/2); denominator cleared",
         {{"printed", "dtheta[1,3/4] * (" A4 " + " B4 ") == -I * 1/2 * theta[1,3/4] * theta[0,0](4) * "
                      "(theta[1,0](2)^2 * theta[1,0](4) * " BRACE4 " - 2 * sqrt2 * " A4 " * theta[0,0](2))"},
          {"corrected", "dtheta[1,3/4] * (" A4 " + " B4 ") == -I * 1/2 * theta[1,3/4] * theta[0,0](4) * "
                        "(theta[1,0](2)^2 * theta[0,1](4) * " BRACE4 " - 2 * sqrt2 * " A4 " * theta[0,0](2))"}},
         {A4 " + " B4}},
        {"sec5-1", "cubic relation among theta[1,.] constants", "none",
         {{"", "theta[1,0] * theta[1,1/2]^3 - theta[1,1/4] * theta[1,3/4]^3 - theta[1,3/4] * theta[1,1/4]^3 == 0"}},
         {}},
        {"sec5-2", "quartic relation among theta[1,.] constants", "none",
         {{"", "theta[1,0]^2 * theta[1,1/4] * theta[1,3/4] - theta[1,1/4]^2 * theta[1,1/2]^2 + theta[1,1/2]^2 * "
               "theta[1,3/4]^2 == 0"}},
         {}},
        {"sec5-3", "fourth powers of theta[1,1/4], theta[1,3/4]", "none",
         {{"", "theta[1,1/4]^4 - theta[1,3/4]^4 - theta[1,1/2] * theta[1,0]^3 == 0"}},
         {}},
    };
}

#undef A4
#undef B4
#undef QUARTIC_COMBO
#undef BRACE4
#undef N1
#undef N2
#undef D1
#undef D2
#undef QPROD

// theta[e; e'] vanishes identically at zeta = 0 iff e and e' are odd integers.
bool vanishes(const Rational &e, const Rational &ep)
{
    auto odd = [](const Rational &r) {
        return boost::multiprecision::denominator(r) == 1 && boost::multiprecision::numerator(r) % 2 != 0;
    };
    return odd(e) && odd(ep);
}

std::vector<IdentityRecord> lemma_grid()
{
    const std::array<Rational, 5> vals{Rational(0), Rational(1, 4), Rational(1, 2), Rational(3, 4), Rational(1)};
    std::vector<IdentityRecord> out;
    for (const auto &e : vals) {
        for (const auto &ep : vals) {
            for (const auto &d : vals) {
                for (const auto &dp : vals) {
                    const Rational s = (e + d) / 2;
                    const Rational t = (e - d) / 2;
                    IdentityAst ast;
                    ast.lhs = ex::theta(e, ep) * ex::theta(d, dp);
                    ast.rhs = ex::theta(s, ep + dp, 2) * ex::theta(t, ep - dp, 2)
                              + ex::theta(s + 1, ep + dp, 2) * ex::theta(t + 1, ep - dp, 2);
                    IdentityRecord r;
                    r.name = "lemma-2-1-grid/" + rational_to_string(e) + "," + rational_to_string(ep) + "|"
                             + rational_to_string(d) + "," + rational_to_string(dp);
                    r.summary = "product of two theta constants at tau as theta constants at 2 tau";
                    r.normalization = "none";
                    r.readings.push_back({"", ast});
                    if (vanishes(e, ep) || vanishes(d, dp)) {
                        // both sides vanish identically, so doubling would not discriminate
                        r.mutation = IdentityAst{ast.lhs, ast.rhs + ex::lit(1)};
                    }
                    infer_context(r);
                    out.push_back(std::move(r));
                }
            }
        }
    }
    return out;
}

IdentityRecord numeric_record(const char *name, const char *summary, NumericCheck check, double tol)
{
    IdentityRecord r;
    r.name = name;
    r.summary = summary;
    r.normalization = "none";
    r.mode = Mode::numeric;
    r.numeric = check;
    r.tol = tol;
    r.x_cutoff = 0;
    return r;
}

std::vector<IdentityRecord> build_registry()
{
    std::vector<IdentityRecord> out;
    for (const auto &s : specs()) {
        out.push_back(build(s));
    }
    for (auto &r : lemma_grid()) {
        out.push_back(std::move(r));
    }
    out.push_back(numeric_record("prop-4-2-quarter", "elliptic quotient in theta[1/4,.](zeta) is constant",
                                 NumericCheck::elliptic_quarter, 1e-8));
    out.push_back(numeric_record("prop-4-2-threequarter", "elliptic quotient in theta[3/4,.](zeta) is constant",
                                 NumericCheck::elliptic_three_quarter, 1e-8));
    out.push_back(numeric_record("det-A-zero", "skew-symmetric matrix of theta[1,.] products is singular",
                                 NumericCheck::det_a, 1e-10));
    return out;
}

} // namespace

std::string_view to_string(Mode m)
{
    switch (m) {
        case Mode::exact:
            return "exact";
        case Mode::numeric:
            return "numeric";
        case Mode::both:
            return "both";
    }
    return "?";
}

void infer_context(IdentityRecord &r)
{
    std::int64_t g = 1;
    int o = 1;
    auto take = [&](const Expr &e) {
        g = std::lcm(g, infer_grading(e));
        o = std::lcm(o, infer_order(e));
    };
    for (const auto &rd : r.readings) {
        take(rd.ast.lhs);
        take(rd.ast.rhs);
    }
    for (const auto &e : r.nonvanishing) {
        take(e);
    }
    if (r.mutation) {
        take(r.mutation->lhs);
        take(r.mutation->rhs);
    }
    if (kUniversalOrder % o != 0) {
        throw ConfigError("identity '" + r.name + "' needs phases in Q(zeta_" + std::to_string(o)
                          + "), which is not contained in Q(zeta_" + std::to_string(kUniversalOrder) + ")");
    }
    r.grading = g;
    r.order = o;
}

const std::vector<IdentityRecord> &registry()
{
    static const std::vector<IdentityRecord> records = build_registry();
    return records;
}

const IdentityRecord *find_record(std::string_view name)
{
    for (const auto &r : registry()) {
        if (r.name == name) {
            return &r;
        }
    }
    return nullptr;
}

IdentityAst default_mutation(const IdentityAst &ast)
{
    const bool rhs_zero = ast.rhs.kind() == NodeKind::literal && ast.rhs.node().value == 0;
    if (!rhs_zero) {
        return {ast.lhs, ex::lit(2) * ast.rhs};
    }
    if (auto flipped = flip_first_subtraction(ast.lhs)) {
        return {*flipped, ast.rhs};
    }
    return {ast.lhs + ex::lit(1), ast.rhs};
}

IdentityRecord mutate(const IdentityRecord &r)
{
    IdentityRecord m = r;
    m.mutated = true;
    for (auto &rd : m.readings) {
        rd.ast = r.mutation ? *r.mutation : default_mutation(rd.ast);
    }
    return m;
}

} // namespace thetaid
