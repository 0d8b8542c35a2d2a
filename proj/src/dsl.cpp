#include <thetaid/dsl.hpp>

#include <cctype>
#include <sstream>

namespace thetaid::dsl
{

namespace
{

constexpr int kMaxDepth = 256;
constexpr std::int64_t kMaxNat = 1000000;
constexpr std::int64_t kMaxPower = 1000;

struct Token {
    enum Kind { ident, number, sym, eqeq, end } kind = end;
    std::string text;
    int line = 1;
    int col = 1;
};

std::string describe(const Token &t)
{
    return t.kind == Token::end ? std::string("end of input") : "'" + t.text + "'";
}

std::string escape_byte(unsigned char c)
{
    if (std::isprint(c)) {
        return std::string(1, static_cast<char>(c));
    }
    static const char *hex = "0123456789abcdef";
    return std::string("\\x") + hex[c >> 4] + hex[c & 15];
}

std::vector<Token> lex(std::string_view text, int first_line)
{
    std::vector<Token> out;
    int line = first_line;
    int col = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
            ++i;
        }
    };
    while (i < text.size()) {
        const auto c = static_cast<unsigned char>(text[i]);
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            advance(1);
            continue;
        }
        if (c == '#') {
            while (i < text.size() && text[i] != '\n') {
                advance(1);
            }
            continue;
        }
        Token t;
        t.line = line;
        t.col = col;
        if (std::isalpha(c) || c == '_') {
            std::size_t j = i;
            while (j < text.size()
                   && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) {
                ++j;
            }
            t.kind = Token::ident;
            t.text = std::string(text.substr(i, j - i));
            advance(j - i);
        } else if (std::isdigit(c)) {
            std::size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
                ++j;
            }
            t.kind = Token::number;
            t.text = std::string(text.substr(i, j - i));
            advance(j - i);
        } else if (c == '=' && i + 1 < text.size() && text[i + 1] == '=') {
            t.kind = Token::eqeq;
            t.text = "==";
            advance(2);
        } else if (std::string_view("[](){},;+-*^/").find(static_cast<char>(c)) != std::string_view::npos) {
            t.kind = Token::sym;
            t.text = std::string(1, static_cast<char>(c));
            advance(1);
        } else {
            throw ParseError(line, col, escape_byte(c), "unexpected character '" + escape_byte(c) + "'");
        }
        out.push_back(std::move(t));
    }
    Token end;
    end.line = line;
    end.col = col;
    out.push_back(end);
    return out;
}

class Parser
{
public:
    explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

    IdentityAst identity()
    {
        IdentityAst ast;
        ast.lhs = expr();
        if (peek().kind != Token::eqeq) {
            fail(peek(), "expected '==', found " + describe(peek()));
        }
        next();
        ast.rhs = expr();
        expect_end();
        return ast;
    }

    Expr whole_expr()
    {
        Expr e = expr();
        expect_end();
        return e;
    }

private:
    [[noreturn]] void fail(const Token &t, const std::string &msg) const
    {
        throw ParseError(t.line, t.col, t.kind == Token::end ? "" : t.text, msg);
    }

    const Token &peek() const { return toks_[pos_]; }
    const Token &next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

    bool is_sym(char c) const { return peek().kind == Token::sym && peek().text[0] == c; }

    void expect_sym(char c)
    {
        if (!is_sym(c)) {
            fail(peek(), std::string("expected '") + c + "', found " + describe(peek()));
        }
        next();
    }

    void expect_end()
    {
        if (peek().kind != Token::end) {
            fail(peek(), "unexpected " + describe(peek()) + " after expression");
        }
    }

    BigInt number()
    {
        if (peek().kind != Token::number) {
            fail(peek(), "expected a number, found " + describe(peek()));
        }
        return parse_decimal(next().text);
    }

    std::int64_t nat(std::int64_t limit, bool positive)
    {
        const Token &t = peek();
        const BigInt v = number();
        if (v > limit) {
            fail(t, "number " + t.text + " is too large (limit " + std::to_string(limit) + ")");
        }
        if (positive && v == 0) {
            fail(t, "expected a positive number");
        }
        return static_cast<std::int64_t>(v);
    }

    std::int64_t signed_int(std::int64_t limit)
    {
        const bool minus = is_sym('-');
        if (minus) {
            next();
        }
        const std::int64_t v = nat(limit, false);
        return minus ? -v : v;
    }

    Rational rational()
    {
        const BigInt p = number();
        if (!is_sym('/')) {
            return Rational(p);
        }
        next();
        const Token &t = peek();
        const BigInt q = number();
        if (q == 0) {
            fail(t, "zero denominator");
        }
        return Rational(p, q);
    }

    Rational signed_rational()
    {
        const bool minus = is_sym('-');
        if (minus) {
            next();
        }
        const Rational r = rational();
        return minus ? Rational(-r) : r;
    }

    std::string name_arg()
    {
        expect_sym('(');
        if (peek().kind != Token::ident) {
            fail(peek(), "expected a name, found " + describe(peek()));
        }
        std::string n = next().text;
        expect_sym(')');
        return n;
    }

    Expr expr()
    {
        Expr e = term();
        while (is_sym('+') || is_sym('-')) {
            const bool plus = next().text[0] == '+';
            Expr r = term();
            e = plus ? e + r : e - r;
        }
        return e;
    }

    Expr term()
    {
        Expr e = factor();
        while (is_sym('*')) {
            next();
            e = e * factor();
        }
        return e;
    }

    Expr factor()
    {
        Expr p = primary();
        if (is_sym('^')) {
            next();
            p = ex::pow(p, static_cast<unsigned>(nat(kMaxPower, false)));
        }
        return p;
    }

    Expr primary()
    {
        struct Depth {
            int &d;
            explicit Depth(int &x) : d(x) { ++d; }
            ~Depth() { --d; }
        } guard(depth_);
        if (depth_ > kMaxDepth) {
            fail(peek(), "expression nested too deeply");
        }
        const Token &t = peek();
        if (is_sym('(')) {
            next();
            Expr e = expr();
            expect_sym(')');
            return e;
        }
        if (is_sym('-')) {
            next();
            return -primary();
        }
        if (t.kind == Token::number) {
            return ex::lit(rational());
        }
        if (t.kind != Token::ident) {
            fail(t, "expected an expression, found " + describe(t));
        }
        const Token id = next();
        const std::string &w = id.text;
        if (w == "theta" || w == "dtheta") {
            expect_sym('[');
            const Rational e = signed_rational();
            expect_sym(',');
            const Rational ep = signed_rational();
            expect_sym(']');
            std::int64_t k = 1;
            if (is_sym('(')) {
                next();
                k = nat(kMaxNat, true);
                expect_sym(')');
            }
            return w == "theta" ? ex::theta(e, ep, k) : ex::dtheta(e, ep, k);
        }
        if (w == "eta") {
            expect_sym('(');
            const std::int64_t k = nat(kMaxNat, true);
            expect_sym(')');
            return ex::eta(k);
        }
        if (w == "etaq") {
            expect_sym('{');
            EtaQuotientSpec spec;
            for (;;) {
                expect_sym('(');
                const std::int64_t m = nat(kMaxNat, true);
                expect_sym(',');
                const std::int64_t e = signed_int(kMaxNat);
                expect_sym(')');
                spec.factors.emplace_back(m, e);
                if (!is_sym(',')) {
                    break;
                }
                next();
            }
            expect_sym(';');
            spec.prefactor_exponent = signed_rational();
            expect_sym('}');
            return ex::etaq(std::move(spec));
        }
        if (w == "farkasprod") {
            return ex::farkas();
        }
        if (w == "lambert" || w == "arith") {
            const Token &at = toks_[pos_ + 1 < toks_.size() ? pos_ + 1 : pos_];
            const std::string n = name_arg();
            try {
                return w == "lambert" ? ex::lambert(arith::parse_lambert_variant(n))
                                      : ex::arith(arith::parse_arith_series(n));
            } catch (const std::invalid_argument &err) {
                fail(at, err.what());
            }
        }
        if (w == "qpow") {
            expect_sym('(');
            const Rational r = signed_rational();
            expect_sym(')');
            return ex::qpow(r);
        }
        if (w == "zeta") {
            expect_sym('(');
            const auto n = static_cast<int>(nat(kMaxNat, true));
            expect_sym(')');
            std::int64_t j = 1;
            if (is_sym('^')) {
                next();
                j = signed_int(kMaxNat);
            }
            return ex::zeta(n, j);
        }
        if (w == "sqrt2") {
            return ex::sqrt2();
        }
        if (w == "sqrt3") {
            return ex::sqrt3();
        }
        if (w == "I") {
            return ex::imag();
        }
        fail(id, "unknown name '" + w + "'");
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    int depth_ = 0;
};

int precedence(NodeKind k)
{
    switch (k) {
        case NodeKind::add:
        case NodeKind::sub:
            return 1;
        case NodeKind::mul:
            return 2;
        case NodeKind::pow:
            return 3;
        default:
            return 4;
    }
}

void emit(std::ostringstream &os, const Expr &e, int min_prec);

void emit_raw(std::ostringstream &os, const Expr &e)
{
    const auto &n = e.node();
    switch (n.kind) {
        case NodeKind::add:
        case NodeKind::sub:
            emit(os, n.args[0], 1);
            os << (n.kind == NodeKind::add ? " + " : " - ");
            emit(os, n.args[1], 2);
            return;
        case NodeKind::mul:
            emit(os, n.args[0], 2);
            os << " * ";
            emit(os, n.args[1], 3);
            return;
        case NodeKind::pow:
            emit(os, n.args[0], 4);
            os << "^" << n.exponent;
            return;
        case NodeKind::neg:
            os << "-";
            emit(os, n.args[0], 4);
            return;
        case NodeKind::theta:
        case NodeKind::dtheta:
            os << (n.kind == NodeKind::theta ? "theta[" : "dtheta[") << rational_to_string(n.chr.eps) << ","
               << rational_to_string(n.chr.epsp) << "]";
            if (n.chr.scale != 1) {
                os << "(" << n.chr.scale << ")";
            }
            return;
        case NodeKind::eta:
            os << "eta(" << n.scale << ")";
            return;
        case NodeKind::etaq:
            os << "etaq{";
            for (std::size_t i = 0; i < n.etaq.factors.size(); ++i) {
                os << (i ? "," : "") << "(" << n.etaq.factors[i].first << "," << n.etaq.factors[i].second << ")";
            }
            os << "; " << rational_to_string(n.etaq.prefactor_exponent) << "}";
            return;
        case NodeKind::farkas:
            os << "farkasprod";
            return;
        case NodeKind::lambert:
            os << "lambert(" << arith::to_string(n.lambert) << ")";
            return;
        case NodeKind::arith:
            os << "arith(" << arith::to_string(n.series) << ")";
            return;
        case NodeKind::qpow:
            os << "qpow(" << rational_to_string(n.value) << ")";
            return;
        case NodeKind::literal:
            os << rational_to_string(n.value);
            return;
        case NodeKind::zeta:
            // the power is always written so that zeta(N)^j^m stays unambiguous
            os << "zeta(" << n.zeta_order << ")^" << n.zeta_power;
            return;
        case NodeKind::sqrt2:
            os << "sqrt2";
            return;
        case NodeKind::sqrt3:
            os << "sqrt3";
            return;
        case NodeKind::imag:
            os << "I";
            return;
    }
}

void emit(std::ostringstream &os, const Expr &e, int min_prec)
{
    if (precedence(e.kind()) < min_prec) {
        os << "(";
        emit_raw(os, e);
        os << ")";
    } else {
        emit_raw(os, e);
    }
}

std::string strip_comment(std::string_view line)
{
    const auto hash = line.find('#');
    std::string s(line.substr(0, hash));
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) {
        return {};
    }
    return s.substr(b);
}

std::size_t count_relations(const std::string &s)
{
    std::size_t n = 0;
    for (std::size_t p = s.find("=="); p != std::string::npos; p = s.find("==", p + 2)) {
        ++n;
    }
    return n;
}

} // namespace

ParseError::ParseError(int line, int column, std::string token, const std::string &message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line), column_(column), token_(std::move(token))
{
}

IdentityAst parse(std::string_view text, int first_line)
{
    Parser p(lex(text, first_line));
    return p.identity();
}

Expr parse_expr(std::string_view text, int first_line)
{
    Parser p(lex(text, first_line));
    return p.whole_expr();
}

std::string print(const Expr &e)
{
    std::ostringstream os;
    emit(os, e, 1);
    return os.str();
}

std::string print(const IdentityAst &ast)
{
    return print(ast.lhs) + " == " + print(ast.rhs);
}

std::vector<FileEntry> parse_file(std::string_view text)
{
    std::vector<std::string_view> lines;
    for (std::size_t start = 0;;) {
        const auto nl = text.find('\n', start);
        if (nl == std::string_view::npos) {
            lines.push_back(text.substr(start));
            break;
        }
        lines.push_back(text.substr(start, nl - start));
        start = nl + 1;
    }
    std::vector<FileEntry> out;
    std::size_t i = 0;
    while (i < lines.size()) {
        if (strip_comment(lines[i]).empty()) {
            ++i;
            continue;
        }
        std::size_t j = i;
        std::size_t relations = 0;
        while (j < lines.size() && !strip_comment(lines[j]).empty()) {
            relations += count_relations(strip_comment(lines[j]));
            ++j;
        }
        if (relations <= 1) {
            std::string block;
            for (std::size_t k = i; k < j; ++k) {
                block.append(lines[k]);
                block.push_back('\n');
            }
            out.push_back({static_cast<int>(i) + 1, parse(block, static_cast<int>(i) + 1)});
        } else {
            for (std::size_t k = i; k < j; ++k) {
                out.push_back({static_cast<int>(k) + 1, parse(lines[k], static_cast<int>(k) + 1)});
            }
        }
        i = j;
    }
    return out;
}

IdentityRecord elaborate(const IdentityAst &ast, const std::string &name, const ElaborateDefaults &defaults)
{
    if (defaults.x_cutoff < 1) {
        throw ConfigError("cutoff must be positive");
    }
    IdentityRecord r;
    r.name = name;
    r.summary = print(ast);
    r.mode = defaults.mode;
    r.readings.push_back({"as written", ast});
    r.x_cutoff = defaults.x_cutoff;
    infer_context(r);
    return r;
}

} // namespace thetaid::dsl
