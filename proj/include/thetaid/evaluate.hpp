#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string>

#include <thetaid/expr.hpp>
#include <thetaid/qseries.hpp>

namespace thetaid
{

struct EvalContext {
    std::int64_t grading = 1;
    std::int64_t cutoff = 100; // exponent numerator in u = x^(1/grading)
    int order = 1;
};

// Exact evaluation with every atom and repeated subexpression built once.
class ExactEvaluator
{
public:
    explicit ExactEvaluator(EvalContext ctx);

    const EvalContext &context() const { return ctx_; }
    QSeries eval(const Expr &e);

private:
    QSeries compute(const Expr &e);
    QSeries atom(const Expr &e);

    EvalContext ctx_;
    std::map<std::string, QSeries> cache_;
};

struct NumericValue {
    std::complex<double> value;
    // Same expression with every sign made positive and every atom replaced
    // by its modulus; the scale for residuals of cancelling sums.
    double magnitude;
};

class NumericEvaluator
{
public:
    explicit NumericEvaluator(std::complex<double> tau);

    NumericValue eval(const Expr &e);

private:
    NumericValue atom(const Expr &e);

    std::complex<double> tau_;
    std::map<std::string, NumericValue> cache_;
};

} // namespace thetaid
