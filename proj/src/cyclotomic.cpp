#include <thetaid/cyclotomic.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace thetaid
{

namespace
{

struct Modulus {
    std::vector<BigInt> poly;
    int degree = 0;
    // Nonzero coefficients below the leading term: Phi_N = x^degree + sum tail.
    std::vector<std::pair<int, BigInt>> tail;
};

std::mutex modulus_mutex;
std::map<int, std::shared_ptr<const Modulus>> modulus_table;

std::vector<BigInt> compute_cyclotomic(int n)
{
    // x^n - 1
    std::vector<BigInt> rem(static_cast<std::size_t>(n) + 1);
    rem[0] = -1;
    rem[static_cast<std::size_t>(n)] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d != 0) {
            continue;
        }
        const auto &div = cyclotomic_polynomial(d);
        const int dd = static_cast<int>(div.size()) - 1;
        const int dr = static_cast<int>(rem.size()) - 1;
        std::vector<BigInt> quot(static_cast<std::size_t>(dr - dd + 1));
        // Divisor is monic; exact division.
        for (int k = dr; k >= dd; --k) {
            const BigInt c = rem[static_cast<std::size_t>(k)];
            quot[static_cast<std::size_t>(k - dd)] = c;
            if (c == 0) {
                continue;
            }
            for (int t = 0; t <= dd; ++t) {
                rem[static_cast<std::size_t>(k - dd + t)] -= c * div[static_cast<std::size_t>(t)];
            }
        }
        for (int k = 0; k < dd; ++k) {
            if (rem[static_cast<std::size_t>(k)] != 0) {
                throw std::logic_error("cyclotomic division left a remainder");
            }
        }
        rem = std::move(quot);
    }
    return rem;
}

std::shared_ptr<const Modulus> modulus(int n)
{
    if (n < 1) {
        throw std::invalid_argument("cyclotomic order must be positive, got " + std::to_string(n));
    }
    {
        std::lock_guard<std::mutex> lock(modulus_mutex);
        auto it = modulus_table.find(n);
        if (it != modulus_table.end()) {
            return it->second;
        }
    }
    auto m = std::make_shared<Modulus>();
    m->poly = compute_cyclotomic(n);
    m->degree = static_cast<int>(m->poly.size()) - 1;
    for (int t = 0; t < m->degree; ++t) {
        if (m->poly[static_cast<std::size_t>(t)] != 0) {
            m->tail.emplace_back(t, m->poly[static_cast<std::size_t>(t)]);
        }
    }
    std::lock_guard<std::mutex> lock(modulus_mutex);
    // First writer wins; concurrent builders produce identical tables.
    auto [it, inserted] = modulus_table.emplace(n, std::move(m));
    return it->second;
}

int lcm_order(int a, int b)
{
    return std::lcm(a, b);
}

} // namespace

int euler_phi(int n)
{
    if (n < 1) {
        throw std::invalid_argument("euler_phi of nonpositive argument");
    }
    int result = n;
    int m = n;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) {
                m /= p;
            }
            result -= result / p;
        }
    }
    if (m > 1) {
        result -= result / m;
    }
    return result;
}

const std::vector<BigInt> &cyclotomic_polynomial(int n)
{
    return modulus(n)->poly;
}

void reduce_mod_cyclotomic(int order, std::vector<BigInt> &poly)
{
    const auto mod = modulus(order);
    const int deg = mod->degree;
    for (int k = static_cast<int>(poly.size()) - 1; k >= deg; --k) {
        auto &top = poly[static_cast<std::size_t>(k)];
        if (top == 0) {
            continue;
        }
        const BigInt c = top;
        top = 0;
        for (const auto &[t, coef] : mod->tail) {
            poly[static_cast<std::size_t>(k - deg + t)] -= c * coef;
        }
    }
    poly.resize(static_cast<std::size_t>(deg));
}

CycloNumber::CycloNumber() : order_(1), num_(1), den_(1) {}

CycloNumber::CycloNumber(std::int64_t value) : order_(1), num_{BigInt(value)}, den_(1) {}

CycloNumber::CycloNumber(const Rational &value)
    : order_(1), num_{boost::multiprecision::numerator(value)}, den_(boost::multiprecision::denominator(value))
{
}

CycloNumber::CycloNumber(int order, std::vector<BigInt> num, BigInt den)
    : order_(order), num_(std::move(num)), den_(std::move(den))
{
    normalize();
}

CycloNumber CycloNumber::root_of_unity(int order, std::int64_t k)
{
    if (order < 1) {
        throw std::invalid_argument("root_of_unity: order must be positive");
    }
    std::int64_t r = k % order;
    if (r < 0) {
        r += order;
    }
    std::vector<BigInt> poly(static_cast<std::size_t>(r) + 1);
    poly[static_cast<std::size_t>(r)] = 1;
    return from_unreduced(order, std::move(poly), BigInt(1));
}

CycloNumber CycloNumber::from_coords(int order, const std::vector<Rational> &coords)
{
    BigInt den = 1;
    for (const auto &c : coords) {
        den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(c));
    }
    std::vector<BigInt> num;
    num.reserve(coords.size());
    for (const auto &c : coords) {
        num.push_back(boost::multiprecision::numerator(c) * (den / boost::multiprecision::denominator(c)));
    }
    return from_unreduced(order, std::move(num), std::move(den));
}

CycloNumber CycloNumber::from_unreduced(int order, std::vector<BigInt> numerators, BigInt denominator)
{
    if (denominator <= 0) {
        throw std::invalid_argument("CycloNumber denominator must be positive");
    }
    const int deg = euler_phi(order);
    if (static_cast<int>(numerators.size()) < deg) {
        numerators.resize(static_cast<std::size_t>(deg));
    }
    reduce_mod_cyclotomic(order, numerators);
    return CycloNumber(order, std::move(numerators), std::move(denominator));
}

void CycloNumber::normalize()
{
    if (den_ == 1) {
        return;
    }
    BigInt g = den_;
    for (const auto &n : num_) {
        if (n != 0) {
            g = boost::multiprecision::gcd(g, n);
            if (g == 1) {
                return;
            }
        }
    }
    if (is_zero()) {
        den_ = 1;
        return;
    }
    for (auto &n : num_) {
        n /= g;
    }
    den_ /= g;
}

Rational CycloNumber::coord(int j) const
{
    if (j < 0 || j >= degree()) {
        throw std::out_of_range("CycloNumber coordinate index out of range");
    }
    return Rational(num_[static_cast<std::size_t>(j)], den_);
}

std::vector<Rational> CycloNumber::coords() const
{
    std::vector<Rational> out;
    out.reserve(num_.size());
    for (const auto &n : num_) {
        out.emplace_back(n, den_);
    }
    return out;
}

bool CycloNumber::is_zero() const
{
    return std::all_of(num_.begin(), num_.end(), [](const BigInt &n) { return n == 0; });
}

bool CycloNumber::is_rational() const
{
    return std::all_of(num_.begin() + 1, num_.end(), [](const BigInt &n) { return n == 0; });
}

int CycloNumber::support_size() const
{
    return static_cast<int>(std::count_if(num_.begin(), num_.end(), [](const BigInt &n) { return n != 0; }));
}

CycloNumber CycloNumber::embed(int m) const
{
    if (m < 1 || m % order_ != 0) {
        throw std::invalid_argument("cannot embed Q(zeta_" + std::to_string(order_) + ") into Q(zeta_"
                                    + std::to_string(m) + ")");
    }
    if (m == order_) {
        return *this;
    }
    const int step = m / order_;
    std::vector<BigInt> poly(static_cast<std::size_t>(std::max(euler_phi(m), (degree() - 1) * step + 1)));
    for (int j = 0; j < degree(); ++j) {
        poly[static_cast<std::size_t>(j * step)] = num_[static_cast<std::size_t>(j)];
    }
    reduce_mod_cyclotomic(m, poly);
    return CycloNumber(m, std::move(poly), den_);
}

std::complex<double> CycloNumber::to_complex() const
{
    const double d = static_cast<double>(den_);
    std::complex<double> acc{0.0, 0.0};
    for (int j = 0; j < degree(); ++j) {
        const auto &n = num_[static_cast<std::size_t>(j)];
        if (n == 0) {
            continue;
        }
        const double angle = 2.0 * M_PI * static_cast<double>(j) / static_cast<double>(order_);
        acc += (static_cast<double>(n) / d) * std::polar(1.0, angle);
    }
    return acc;
}

std::optional<CycloNumber> CycloNumber::unit_inverse() const
{
    if (is_zero()) {
        return std::nullopt;
    }
    for (int k = 0; k < order_; ++k) {
        const CycloNumber shifted = *this * root_of_unity(order_, -k);
        if (shifted.order() == order_ && shifted.is_rational()) {
            const Rational c(shifted.num_[0], shifted.den_);
            return scalar_mul(root_of_unity(order_, -k), Rational(1) / c);
        }
    }
    return std::nullopt;
}

namespace
{

int radical(int n)
{
    int r = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            r *= p;
            while (n % p == 0) {
                n /= p;
            }
        }
    }
    return n > 1 ? r * n : r;
}

// Coordinates of x in Q(zeta_m), m | x.order(), by exact elimination against
// the embedded power basis of Q(zeta_m); nullopt when x lies outside.
std::optional<std::vector<Rational>> solve_in_subfield(const CycloNumber &x, int m)
{
    const int n = x.order();
    const int rows = euler_phi(n);
    const int cols = euler_phi(m);
    std::vector<std::vector<Rational>> a(static_cast<std::size_t>(rows),
                                         std::vector<Rational>(static_cast<std::size_t>(cols + 1)));
    for (int j = 0; j < cols; ++j) {
        const auto basis = CycloNumber::root_of_unity(m, j).embed(n);
        for (int i = 0; i < rows; ++i) {
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = basis.coord(i);
        }
    }
    for (int i = 0; i < rows; ++i) {
        a[static_cast<std::size_t>(i)][static_cast<std::size_t>(cols)] = x.coord(i);
    }
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = r;
        while (p < rows && a[static_cast<std::size_t>(p)][static_cast<std::size_t>(c)] == 0) {
            ++p;
        }
        if (p == rows) {
            continue;
        }
        std::swap(a[static_cast<std::size_t>(p)], a[static_cast<std::size_t>(r)]);
        auto &pr = a[static_cast<std::size_t>(r)];
        const Rational inv = Rational(1) / pr[static_cast<std::size_t>(c)];
        for (auto &v : pr) {
            v *= inv;
        }
        for (int i = 0; i < rows; ++i) {
            auto &row = a[static_cast<std::size_t>(i)];
            const Rational f = row[static_cast<std::size_t>(c)];
            if (i == r || f == 0) {
                continue;
            }
            for (int k = c; k <= cols; ++k) {
                row[static_cast<std::size_t>(k)] -= f * pr[static_cast<std::size_t>(k)];
            }
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (int i = r; i < rows; ++i) {
        if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(cols)] != 0) {
            return std::nullopt;
        }
    }
    std::vector<Rational> out(static_cast<std::size_t>(cols));
    for (int i = 0; i < r; ++i) {
        out[static_cast<std::size_t>(pivot_col[static_cast<std::size_t>(i)])] =
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(cols)];
    }
    return out;
}

} // namespace

int CycloNumber::minimal_order() const
{
    return with_minimal_order().order();
}

CycloNumber CycloNumber::with_minimal_order() const
{
    // Divisors with the same prime factors as the order: the power basis of
    // Q(zeta_m) is a subset of ours, so membership is a support check.
    const int rad = radical(order_);
    CycloNumber best = *this;
    for (int m = 1; m < order_; ++m) {
        if (order_ % m != 0 || radical(m) != rad) {
            continue;
        }
        const int step = order_ / m;
        const int deg_m = euler_phi(m);
        std::vector<BigInt> small(static_cast<std::size_t>(deg_m));
        bool fits = true;
        for (int j = 0; j < degree() && fits; ++j) {
            const auto &n = num_[static_cast<std::size_t>(j)];
            if (n == 0) {
                continue;
            }
            if (j % step != 0 || j / step >= deg_m) {
                fits = false;
            } else {
                small[static_cast<std::size_t>(j / step)] = n;
            }
        }
        if (fits) {
            best = CycloNumber(m, std::move(small), den_);
            break;
        }
    }
    // Smaller fields drop a prime; solve for coordinates there.
    const int base = best.order();
    for (int m = 1; m < base; ++m) {
        if (base % m != 0 || radical(m) == radical(base) || m % 4 == 2) {
            continue;
        }
        if (auto coords = solve_in_subfield(best, m)) {
            return from_coords(m, *coords);
        }
    }
    return best;
}

std::string CycloNumber::to_string() const
{
    if (is_zero()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (int j = 0; j < degree(); ++j) {
        const auto &n = num_[static_cast<std::size_t>(j)];
        if (n == 0) {
            continue;
        }
        Rational c(n, den_);
        const bool neg = c < 0;
        if (neg) {
            c = -c;
        }
        if (first) {
            os << (neg ? "-" : "");
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        if (j == 0) {
            os << rational_to_string(c);
        } else {
            if (c != 1) {
                os << rational_to_string(c) << "*";
            }
            os << "z" << order_;
            if (j != 1) {
                os << "^" << j;
            }
        }
    }
    return os.str();
}

CycloNumber CycloNumber::operator-() const
{
    CycloNumber out = *this;
    for (auto &n : out.num_) {
        n = -n;
    }
    return out;
}

CycloNumber &CycloNumber::operator+=(const CycloNumber &other)
{
    if (order_ != other.order_) {
        const int m = lcm_order(order_, other.order_);
        *this = embed(m);
        return *this += other.embed(m);
    }
    if (den_ == other.den_) {
        for (std::size_t j = 0; j < num_.size(); ++j) {
            num_[j] += other.num_[j];
        }
    } else {
        for (std::size_t j = 0; j < num_.size(); ++j) {
            num_[j] = num_[j] * other.den_ + other.num_[j] * den_;
        }
        den_ *= other.den_;
    }
    normalize();
    return *this;
}

CycloNumber &CycloNumber::operator-=(const CycloNumber &other)
{
    return *this += -other;
}

CycloNumber operator*(const CycloNumber &a, const CycloNumber &b)
{
    if (a.order_ != b.order_) {
        const int m = lcm_order(a.order_, b.order_);
        return a.embed(m) * b.embed(m);
    }
    const int deg = a.degree();
    std::vector<BigInt> prod(static_cast<std::size_t>(2 * deg - 1));
    std::vector<int> nz_b;
    for (int j = 0; j < deg; ++j) {
        if (b.num_[static_cast<std::size_t>(j)] != 0) {
            nz_b.push_back(j);
        }
    }
    for (int i = 0; i < deg; ++i) {
        const auto &ai = a.num_[static_cast<std::size_t>(i)];
        if (ai == 0) {
            continue;
        }
        for (int j : nz_b) {
            prod[static_cast<std::size_t>(i + j)] += ai * b.num_[static_cast<std::size_t>(j)];
        }
    }
    reduce_mod_cyclotomic(a.order_, prod);
    return CycloNumber(a.order_, std::move(prod), a.den_ * b.den_);
}

CycloNumber &CycloNumber::operator*=(const CycloNumber &other)
{
    *this = *this * other;
    return *this;
}

bool operator==(const CycloNumber &a, const CycloNumber &b)
{
    if (a.order_ != b.order_) {
        const int m = lcm_order(a.order_, b.order_);
        return a.embed(m) == b.embed(m);
    }
    return a.den_ == b.den_ && a.num_ == b.num_;
}

CycloNumber scalar_mul(const CycloNumber &a, const Rational &r)
{
    return a * CycloNumber(r);
}

CycloNumber sqrt2()
{
    return CycloNumber::root_of_unity(8, 1) + CycloNumber::root_of_unity(8, -1);
}

CycloNumber sqrt3()
{
    return CycloNumber::root_of_unity(12, 1) + CycloNumber::root_of_unity(12, -1);
}

CycloNumber imag_unit()
{
    return CycloNumber::root_of_unity(4, 1);
}

std::string rational_to_string(const Rational &r)
{
    std::ostringstream os;
    os << boost::multiprecision::numerator(r);
    if (boost::multiprecision::denominator(r) != 1) {
        os << "/" << boost::multiprecision::denominator(r);
    }
    return os.str();
}

BigInt parse_decimal(std::string_view text)
{
    std::size_t i = 0;
    const bool neg = !text.empty() && text[0] == '-';
    if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
        ++i;
    }
    if (i == text.size()) {
        throw std::invalid_argument("malformed integer '" + std::string(text) + "'");
    }
    BigInt v = 0;
    for (; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9') {
            throw std::invalid_argument("malformed integer '" + std::string(text) + "'");
        }
        v = v * 10 + (text[i] - '0');
    }
    return neg ? BigInt(-v) : v;
}

Rational parse_rational(const std::string &text)
{
    const auto slash = text.find('/');
    BigInt num, den = 1;
    try {
        num = parse_decimal(std::string_view(text).substr(0, slash));
        if (slash != std::string::npos) {
            den = parse_decimal(std::string_view(text).substr(slash + 1));
        }
    } catch (const std::invalid_argument &) {
        throw std::invalid_argument("malformed rational '" + text + "'");
    }
    if (den == 0) {
        throw std::invalid_argument("zero denominator in rational '" + text + "'");
    }
    return Rational(num, den);
}

} // namespace thetaid
