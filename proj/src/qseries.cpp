#include <thetaid/qseries.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace thetaid
{

namespace
{

std::int64_t sat_add(std::int64_t a, std::int64_t b)
{
    if (a == QSeries::kExact || b == QSeries::kExact) {
        return QSeries::kExact;
    }
    return a + b;
}

// First exponent that may carry a nonzero coefficient.
std::int64_t effective_lead(const QSeries &s)
{
    if (auto l = s.lead()) {
        return *l;
    }
    return s.is_exact() ? QSeries::kExact : s.cutoff() + 1;
}

void require_same_grading(const QSeries &a, const QSeries &b, const char *op)
{
    if (a.grading() != b.grading()) {
        throw std::invalid_argument(std::string(op) + ": grading mismatch (" + std::to_string(a.grading())
                                    + " vs " + std::to_string(b.grading()) + "); regrade first");
    }
}

// Sparse view of one coefficient for the product kernel.
struct SparseCoeff {
    std::vector<int> idx;
    std::vector<BigInt> val;
    BigInt den;
};

SparseCoeff sparse_view(const CycloNumber &c)
{
    SparseCoeff s;
    const auto &num = c.numerators();
    for (int j = 0; j < static_cast<int>(num.size()); ++j) {
        if (num[static_cast<std::size_t>(j)] != 0) {
            s.idx.push_back(j);
            s.val.push_back(num[static_cast<std::size_t>(j)]);
        }
    }
    s.den = c.denominator();
    return s;
}

// Unreduced sum of products for one output exponent; reduced once at the end.
struct Accumulator {
    std::vector<BigInt> buf;
    BigInt den;
    bool used = false;

    void add_product(const SparseCoeff &a, const SparseCoeff &b, int width)
    {
        BigInt pd = a.den * b.den;
        BigInt factor = 1;
        if (!used) {
            buf.assign(static_cast<std::size_t>(width), BigInt(0));
            den = pd;
            used = true;
        } else if (pd != den) {
            const BigInt l = boost::multiprecision::lcm(den, pd);
            const BigInt up = l / den;
            if (up != 1) {
                for (auto &v : buf) {
                    v *= up;
                }
            }
            factor = l / pd;
            den = l;
        }
        const bool unit = factor == 1;
        for (std::size_t p = 0; p < a.idx.size(); ++p) {
            for (std::size_t q = 0; q < b.idx.size(); ++q) {
                auto &slot = buf[static_cast<std::size_t>(a.idx[p] + b.idx[q])];
                if (unit) {
                    slot += a.val[p] * b.val[q];
                } else {
                    slot += a.val[p] * b.val[q] * factor;
                }
            }
        }
    }
};

} // namespace

QSeries::QSeries(std::int64_t grading, std::int64_t cutoff) : grading_(grading), cutoff_(cutoff)
{
    if (grading < 1) {
        throw std::invalid_argument("QSeries grading must be positive");
    }
}

QSeries QSeries::constant(const CycloNumber &c, std::int64_t grading, std::int64_t cutoff)
{
    return monomial(0, c, grading, cutoff);
}

QSeries QSeries::monomial(std::int64_t exponent, const CycloNumber &c, std::int64_t grading, std::int64_t cutoff)
{
    QSeries s(grading, cutoff);
    if (!c.is_zero() && exponent <= cutoff) {
        s.terms_.push_back({exponent, c});
    }
    return s;
}

QSeries QSeries::from_terms(std::int64_t grading, std::int64_t cutoff, std::vector<Term> terms)
{
    QSeries s(grading, cutoff);
    std::sort(terms.begin(), terms.end(), [](const Term &a, const Term &b) { return a.exponent < b.exponent; });
    for (auto &t : terms) {
        if (t.exponent > cutoff) {
            break;
        }
        if (!s.terms_.empty() && s.terms_.back().exponent == t.exponent) {
            s.terms_.back().coeff += t.coeff;
            if (s.terms_.back().coeff.is_zero()) {
                s.terms_.pop_back();
            }
        } else if (!t.coeff.is_zero()) {
            s.terms_.push_back(std::move(t));
        }
    }
    // Summed duplicates may have cancelled mid-run; sweep once more.
    std::erase_if(s.terms_, [](const Term &t) { return t.coeff.is_zero(); });
    return s;
}

std::optional<std::int64_t> QSeries::lead() const
{
    if (terms_.empty()) {
        return std::nullopt;
    }
    return terms_.front().exponent;
}

CycloNumber QSeries::coefficient(std::int64_t exponent) const
{
    if (exponent > cutoff_) {
        throw std::out_of_range("coefficient at numerator " + std::to_string(exponent) + " is beyond the cutoff "
                                + std::to_string(cutoff_) + " (unknown, not zero)");
    }
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                               [](const Term &t, std::int64_t e) { return t.exponent < e; });
    if (it != terms_.end() && it->exponent == exponent) {
        return it->coeff;
    }
    return CycloNumber();
}

QSeries QSeries::truncate(std::int64_t cutoff) const
{
    QSeries s(grading_, std::min(cutoff_, cutoff));
    for (const auto &t : terms_) {
        if (t.exponent > s.cutoff_) {
            break;
        }
        s.terms_.push_back(t);
    }
    return s;
}

QSeries QSeries::regrade(std::int64_t grading) const
{
    if (grading < 1 || grading % grading_ != 0) {
        throw std::invalid_argument("regrade: " + std::to_string(grading_) + " does not divide "
                                    + std::to_string(grading));
    }
    const std::int64_t r = grading / grading_;
    QSeries s(grading, is_exact() ? kExact : cutoff_ * r);
    s.terms_.reserve(terms_.size());
    for (const auto &t : terms_) {
        s.terms_.push_back({t.exponent * r, t.coeff});
    }
    return s;
}

QSeries QSeries::rescale_tau(std::int64_t k) const
{
    if (k < 1) {
        throw std::invalid_argument("rescale_tau: scale must be positive");
    }
    QSeries s(grading_, is_exact() ? kExact : cutoff_ * k);
    s.terms_.reserve(terms_.size());
    for (const auto &t : terms_) {
        s.terms_.push_back({t.exponent * k, t.coeff});
    }
    return s;
}

QSeries QSeries::shift(std::int64_t offset) const
{
    QSeries s(grading_, sat_add(cutoff_, offset));
    s.terms_.reserve(terms_.size());
    for (const auto &t : terms_) {
        s.terms_.push_back({t.exponent + offset, t.coeff});
    }
    return s;
}

int QSeries::coefficient_order() const
{
    int order = 1;
    for (const auto &t : terms_) {
        order = std::lcm(order, t.coeff.order());
    }
    return order;
}

QSeries QSeries::embed_coefficients(int order) const
{
    QSeries s = *this;
    for (auto &t : s.terms_) {
        if (t.coeff.order() != order) {
            t.coeff = t.coeff.embed(order);
        }
    }
    return s;
}

QSeries QSeries::operator-() const
{
    QSeries s = *this;
    for (auto &t : s.terms_) {
        t.coeff = -t.coeff;
    }
    return s;
}

QSeries operator+(const QSeries &a, const QSeries &b)
{
    require_same_grading(a, b, "add");
    QSeries s(a.grading(), std::min(a.cutoff(), b.cutoff()));
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    const auto limit = s.cutoff();
    while (ia != a.terms_.end() || ib != b.terms_.end()) {
        if (ib == b.terms_.end() || (ia != a.terms_.end() && ia->exponent < ib->exponent)) {
            if (ia->exponent > limit) {
                ia = a.terms_.end();
                continue;
            }
            s.terms_.push_back(*ia++);
        } else if (ia == a.terms_.end() || ib->exponent < ia->exponent) {
            if (ib->exponent > limit) {
                ib = b.terms_.end();
                continue;
            }
            s.terms_.push_back(*ib++);
        } else {
            if (ia->exponent > limit) {
                break;
            }
            CycloNumber c = ia->coeff + ib->coeff;
            if (!c.is_zero()) {
                s.terms_.push_back({ia->exponent, std::move(c)});
            }
            ++ia;
            ++ib;
        }
    }
    return s;
}

QSeries operator-(const QSeries &a, const QSeries &b)
{
    return a + (-b);
}

QSeries operator*(const QSeries &a, const QSeries &b)
{
    require_same_grading(a, b, "mul");
    const std::int64_t cut = std::min(sat_add(a.cutoff(), effective_lead(b)), sat_add(b.cutoff(), effective_lead(a)));
    QSeries s(a.grading(), cut);
    if (a.terms_.empty() || b.terms_.empty()) {
        return s;
    }
    const int order = std::lcm(a.coefficient_order(), b.coefficient_order());
    const int deg = euler_phi(order);
    const int width = 2 * deg - 1;

    std::vector<std::int64_t> ea, eb;
    std::vector<SparseCoeff> ca, cb;
    for (const auto &t : a.terms_) {
        ea.push_back(t.exponent);
        ca.push_back(sparse_view(t.coeff.order() == order ? t.coeff : t.coeff.embed(order)));
    }
    for (const auto &t : b.terms_) {
        eb.push_back(t.exponent);
        cb.push_back(sparse_view(t.coeff.order() == order ? t.coeff : t.coeff.embed(order)));
    }

    const std::int64_t lo = ea.front() + eb.front();
    const std::int64_t hi = std::min(cut, ea.back() + eb.back());
    if (hi < lo) {
        return s;
    }
    std::vector<Accumulator> acc(static_cast<std::size_t>(hi - lo + 1));
    for (std::size_t i = 0; i < ea.size(); ++i) {
        if (ea[i] + eb.front() > hi) {
            break;
        }
        for (std::size_t j = 0; j < eb.size(); ++j) {
            const std::int64_t e = ea[i] + eb[j];
            if (e > hi) {
                break;
            }
            acc[static_cast<std::size_t>(e - lo)].add_product(ca[i], cb[j], width);
        }
    }
    for (std::size_t k = 0; k < acc.size(); ++k) {
        if (!acc[k].used) {
            continue;
        }
        CycloNumber c = CycloNumber::from_unreduced(order, std::move(acc[k].buf), std::move(acc[k].den));
        if (!c.is_zero()) {
            s.terms_.push_back({lo + static_cast<std::int64_t>(k), std::move(c)});
        }
    }
    return s;
}

bool operator==(const QSeries &a, const QSeries &b)
{
    if (a.grading_ != b.grading_ || a.cutoff_ != b.cutoff_ || a.terms_.size() != b.terms_.size()) {
        return false;
    }
    for (std::size_t k = 0; k < a.terms_.size(); ++k) {
        if (a.terms_[k].exponent != b.terms_[k].exponent || !(a.terms_[k].coeff == b.terms_[k].coeff)) {
            return false;
        }
    }
    return true;
}

std::string QSeries::to_string() const
{
    std::ostringstream os;
    if (terms_.empty()) {
        os << "0";
    }
    bool first = true;
    for (const auto &t : terms_) {
        if (!first) {
            os << " + ";
        }
        first = false;
        os << "(" << t.coeff.to_string() << ")";
        if (t.exponent != 0) {
            os << "*x^(" << rational_to_string(Rational(t.exponent, grading_)) << ")";
        }
    }
    if (!is_exact()) {
        os << " + O(x^(" << rational_to_string(Rational(cutoff_ + 1, grading_)) << "))";
    }
    return os.str();
}

QSeries add(const QSeries &a, const QSeries &b)
{
    return a + b;
}

QSeries sub(const QSeries &a, const QSeries &b)
{
    return a - b;
}

QSeries mul(const QSeries &a, const QSeries &b)
{
    return a * b;
}

QSeries scale(const QSeries &a, const CycloNumber &c)
{
    if (c.is_zero()) {
        return QSeries(a.grading(), a.cutoff());
    }
    std::vector<QSeries::Term> terms;
    terms.reserve(a.size());
    for (const auto &t : a.terms()) {
        terms.push_back({t.exponent, t.coeff * c});
    }
    return QSeries::from_terms(a.grading(), a.cutoff(), std::move(terms));
}

QSeries pow(const QSeries &a, unsigned m)
{
    QSeries result = QSeries::constant(CycloNumber(1), a.grading());
    QSeries base = a;
    while (m > 0) {
        if (m & 1u) {
            result = result * base;
        }
        m >>= 1u;
        if (m > 0) {
            base = base * base;
        }
    }
    return result;
}

QSeries invert(const QSeries &a)
{
    if (a.is_zero()) {
        throw std::domain_error("invert: series has no nonzero coefficient within its window");
    }
    if (a.is_exact()) {
        throw std::domain_error("invert: exact polynomial has no finite cutoff; truncate first");
    }
    const std::int64_t l = *a.lead();
    const auto inv_lead = a.terms().front().coeff.unit_inverse();
    if (!inv_lead) {
        throw std::domain_error("invert: leading coefficient " + a.terms().front().coeff.to_string()
                                + " is not a rational times a root of unity");
    }
    const std::int64_t span = a.cutoff() - l;
    // a = lead * u^l * (1 + sum_{j>0} r_j u^j)
    std::vector<std::pair<std::int64_t, CycloNumber>> r;
    for (std::size_t k = 1; k < a.size(); ++k) {
        const auto &t = a.terms()[k];
        r.emplace_back(t.exponent - l, t.coeff * *inv_lead);
    }
    std::vector<CycloNumber> s(static_cast<std::size_t>(span + 1));
    s[0] = CycloNumber(1);
    for (std::int64_t k = 1; k <= span; ++k) {
        CycloNumber acc;
        for (const auto &[j, rj] : r) {
            if (j > k) {
                break;
            }
            const auto &prev = s[static_cast<std::size_t>(k - j)];
            if (!prev.is_zero()) {
                acc -= rj * prev;
            }
        }
        s[static_cast<std::size_t>(k)] = std::move(acc);
    }
    std::vector<QSeries::Term> terms;
    for (std::int64_t k = 0; k <= span; ++k) {
        if (!s[static_cast<std::size_t>(k)].is_zero()) {
            terms.push_back({k - l, s[static_cast<std::size_t>(k)] * *inv_lead});
        }
    }
    return QSeries::from_terms(a.grading(), a.cutoff() - 2 * l, std::move(terms));
}

bool agree_to_cutoff(const QSeries &a, const QSeries &b)
{
    require_same_grading(a, b, "agree_to_cutoff");
    const std::int64_t t = std::min(a.cutoff(), b.cutoff());
    const QSeries d = a.truncate(t) - b.truncate(t);
    return d.is_zero();
}

void multiply_binomial(QSeries &a, const CycloNumber &c, std::int64_t step)
{
    if (step < 0) {
        throw std::invalid_argument("multiply_binomial: negative step");
    }
    if (step == 0) {
        a = scale(a, CycloNumber(1) + c);
        return;
    }
    std::vector<QSeries::Term> shifted;
    shifted.reserve(a.size());
    for (const auto &t : a.terms()) {
        if (t.exponent + step > a.cutoff()) {
            break;
        }
        shifted.push_back({t.exponent + step, t.coeff * c});
    }
    a = a + QSeries::from_terms(a.grading(), a.cutoff(), std::move(shifted));
}

} // namespace thetaid
