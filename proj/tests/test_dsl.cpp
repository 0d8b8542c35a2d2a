#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include <thetaid/dsl.hpp>
#include <thetaid/identities.hpp>

using namespace thetaid;

namespace
{

const IdentityRecord &record(const char *name)
{
    const IdentityRecord *r = find_record(name);
    REQUIRE(r != nullptr);
    return *r;
}

class RandomAst
{
public:
    explicit RandomAst(std::uint64_t seed) : rng_(seed) {}

    Expr expr(int depth)
    {
        if (depth == 0 || pick(4) == 0) {
            return leaf();
        }
        switch (pick(5)) {
            case 0: return expr(depth - 1) + expr(depth - 1);
            case 1: return expr(depth - 1) - expr(depth - 1);
            case 2: return expr(depth - 1) * expr(depth - 1);
            case 3: return -expr(depth - 1);
            default: return ex::pow(expr(depth - 1), static_cast<unsigned>(pick(4)));
        }
    }

private:
    int pick(int n) { return static_cast<int>(rng_() % static_cast<std::uint64_t>(n)); }
    Rational quarter() { return Rational(pick(13) - 4, 4); }

    Expr leaf()
    {
        switch (pick(13)) {
            case 0: return ex::theta(quarter(), quarter(), 1 + pick(4));
            case 1: return ex::dtheta(quarter(), quarter(), 1 + pick(2));
            case 2: return ex::eta(1 + pick(6));
            case 3: return ex::etaq({{{1 + pick(4), pick(7) - 3}, {2, 1}}, Rational(pick(5), 24)});
            case 4: return ex::farkas();
            case 5: return ex::lambert(static_cast<arith::LambertVariant>(pick(3)));
            case 6: return ex::arith(static_cast<arith::ArithSeries>(pick(6)));
            case 7: return ex::qpow(Rational(pick(7) - 3, 12));
            case 8: return ex::lit(Rational(pick(20), 1 + pick(5)));
            case 9: return ex::zeta(1 + pick(64), pick(9) - 4);
            case 10: return ex::sqrt2();
            case 11: return ex::sqrt3();
            default: return ex::imag();
        }
    }

    std::mt19937_64 rng_;
};

// Returns true for a valid AST or a positioned ParseError; anything else fails.
bool parses_or_positions(const std::string &text)
{
    try {
        (void)dsl::parse(text);
        return true;
    } catch (const dsl::ParseError &e) {
        return e.line() >= 1 && e.column() >= 1 && std::string(e.what()).find("line ") == 0;
    } catch (...) {
        return false;
    }
}

} // namespace

TEST_CASE("examples")
{
    const auto jacobi = dsl::parse("dtheta[1,1] == (I * 1/2) * theta[0,0] * theta[1,0] * theta[0,1]");
    CHECK(jacobi == record("jacobi").readings.front().ast);

    const std::string s51 =
        "theta[1,0]*theta[1,1/2]^3 - theta[1,1/4]*theta[1,3/4]^3 - theta[1,3/4]*theta[1,1/4]^3 == 0";
    CHECK(dsl::parse(s51) == record("sec5-1").readings.front().ast);

    try {
        (void)dsl::parse("theta[0,0](");
        FAIL("expected a parse error");
    } catch (const dsl::ParseError &e) {
        CHECK(e.line() == 1);
        CHECK(e.column() == 12);
    }
}

TEST_CASE("printing")
{
    const auto same = [](const char *text) { return dsl::print(dsl::parse_expr(text)) == text; };
    CHECK(same("theta[0,0] - (theta[1,0] - theta[0,1])"));
    CHECK(same("theta[0,0] - theta[1,0] - theta[0,1]"));
    CHECK(same("(theta[0,0] * theta[1,0])^2"));
    // unary minus binds tighter than ^, so -a^2 is (-a)^2
    CHECK(dsl::parse_expr("-theta[0,0]^2") == ex::pow(-ex::theta(0, 0), 2));
    CHECK(same("-theta[0,0]^2"));
    CHECK(same("-(theta[0,0]^2)"));
    CHECK(same("theta[0,0] * (theta[1,0] * theta[0,1])"));
    CHECK(same("theta[1,-1/2](2) * dtheta[1,1](3)"));
    CHECK(same("zeta(8)^-3 * sqrt2 * sqrt3 * I"));
    CHECK(same("etaq{(2,9),(1,-3),(4,-3); -1/8}"));
    CHECK(dsl::print(dsl::parse_expr("theta[0,0](1)")) == "theta[0,0]");
    CHECK(dsl::print(dsl::parse_expr("zeta(8)")) == "zeta(8)^1");
    CHECK(dsl::print(dsl::parse_expr("theta [ 2/4 , 0 ]")) == "theta[1/2,0]");
    // leading zeros are decimal
    CHECK(dsl::parse_expr("theta[010,08/016]") == ex::theta(10, Rational(1, 2)));
    // comments are dropped
    CHECK(dsl::print(dsl::parse("theta[0,0] # left\n == eta(1) # right")) == "theta[0,0] == eta(1)");
}

TEST_CASE("round trip over the registry")
{
    std::size_t n = 0;
    for (const auto &r : registry()) {
        for (const auto &rd : r.readings) {
            const std::string text = dsl::print(rd.ast);
            CHECK_MESSAGE(dsl::parse(text) == rd.ast, r.name << ": " << text);
            CHECK(dsl::print(dsl::parse(text)) == text);
            ++n;
        }
        for (const auto &g : r.nonvanishing) {
            CHECK(dsl::parse_expr(dsl::print(g)) == g);
        }
    }
    CHECK(n > 650);
}

TEST_CASE("round trip over random trees")
{
    RandomAst gen(2024);
    for (int i = 0; i < 200; ++i) {
        const IdentityAst ast{gen.expr(4), gen.expr(3)};
        const std::string text = dsl::print(ast);
        CHECK_MESSAGE(dsl::parse(text) == ast, text);
    }
}

TEST_CASE("errors carry positions")
{
    struct Case {
        const char *text;
        int line, column;
    };
    const Case cases[] = {
        {"theta[0,0] ==", 1, 14},
        {"theta[0,0] == theta[1,0] $", 1, 26},
        {"theta[0,0]\n  * * eta(1) == 0", 2, 5},
        {"theta[0,0] == 0 == 1", 1, 17},
        {"dtheta[1,1]^-2 == 0", 1, 13},
        {"lambert(fifth) == 0", 1, 9},
        {"zeta(0) == 1", 1, 6},
        {"theta[1/0,0] == 1", 1, 9},
        {"", 1, 1},
    };
    for (const auto &c : cases) {
        try {
            (void)dsl::parse(c.text);
            FAIL("accepted: " << std::string(c.text));
        } catch (const dsl::ParseError &e) {
            CHECK_MESSAGE(e.line() == c.line, std::string(c.text) << " -> " << e.what());
            CHECK_MESSAGE(e.column() == c.column, std::string(c.text) << " -> " << e.what());
        }
    }
    try {
        (void)dsl::parse("theta[0,0] == 1", 7);
    } catch (...) {
        FAIL("valid text rejected");
    }
}

TEST_CASE("fuzzing never crashes")
{
    std::mt19937_64 rng(99);
    const std::string alphabet = "theta[]dzeta(),;/+-*^=#0123456789 \n{}Isqrt2etaqlambertquarter";
    std::vector<std::string> seeds;
    for (const auto &r : registry()) {
        if (!r.readings.empty() && seeds.size() < 40) {
            seeds.push_back(dsl::print(r.readings.front().ast));
        }
    }
    int accepted = 0;
    for (int i = 0; i < 10000; ++i) {
        std::string text;
        if (i % 2 == 0) {
            // raw bytes, including NUL and high bytes
            const std::size_t len = rng() % 40;
            for (std::size_t k = 0; k < len; ++k) {
                text.push_back(static_cast<char>(rng() % 256));
            }
        } else if (i % 4 == 1) {
            const std::size_t len = rng() % 60;
            for (std::size_t k = 0; k < len; ++k) {
                text.push_back(alphabet[rng() % alphabet.size()]);
            }
        } else {
            // a valid identity with a few bytes changed, dropped or duplicated
            text = seeds[rng() % seeds.size()];
            for (int k = 0; k < 3 && !text.empty(); ++k) {
                const std::size_t at = rng() % text.size();
                switch (rng() % 3) {
                    case 0: text[at] = alphabet[rng() % alphabet.size()]; break;
                    case 1: text.erase(at, 1); break;
                    default: text.insert(at, 1, text[at]); break;
                }
            }
        }
        const bool ok = parses_or_positions(text);
        CHECK_MESSAGE(ok, "input: " << text);
        try {
            (void)dsl::parse(text);
            ++accepted;
        } catch (...) {
        }
    }
    CHECK(accepted > 0);
    // deep nesting is reported, not a stack overflow
    CHECK(parses_or_positions(std::string(100000, '(') + "1" + " == 1"));
    CHECK(parses_or_positions("theta[0,0]^99999999999999999999 == 1"));
    CHECK(parses_or_positions("eta(99999999999999999999999) == 1"));
}

TEST_CASE("elaboration infers grading and order")
{
    const auto r = dsl::elaborate(dsl::parse("theta[1/4,1/4] == theta[1/4,1/4]"), "q");
    CHECK(r.order == 64);
    CHECK(r.grading == 64);
    const auto j = dsl::elaborate(record("jacobi").readings.front().ast, "j");
    CHECK(j.grading == 4);
    CHECK(j.order == 4);
    const auto e8 = dsl::elaborate(dsl::parse("etaq{(2,9),(1,-3),(4,-3); 1/8} == arith(kron2sq)"), "e8");
    CHECK(e8.grading == 4);
    CHECK(verify_exact(e8, {.x_cutoff = 200}).pass);
    CHECK_THROWS_AS(dsl::elaborate(dsl::parse("theta[1/5,1/5] == 0"), "bad"), ConfigError);
    CHECK_THROWS_AS(dsl::elaborate(dsl::parse("theta[0,0] == 0"), "bad", {.x_cutoff = 0}), ConfigError);
}

TEST_CASE("elaborated records reproduce built-in verdicts")
{
    for (const auto &r : registry()) {
        if (r.readings.empty() || (r.name.rfind("lemma-2-1-grid", 0) == 0 && r.name.find("|1/4") == std::string::npos)) {
            continue;
        }
        const auto builtin = verify_exact(r);
        REQUIRE(builtin.readings.size() == r.readings.size());
        for (std::size_t i = 0; i < r.readings.size(); ++i) {
            const auto text = dsl::print(r.readings[i].ast);
            auto e = dsl::elaborate(dsl::parse(text), r.name, {.x_cutoff = r.x_cutoff});
            CHECK_MESSAGE(verify_exact(e).pass == builtin.readings[i].pass, r.name << " / " << r.readings[i].label);
        }
    }
}

TEST_CASE("identity files")
{
    const std::string text = "# two blocks\n"
                             "theta[0,0]^2\n"
                             "  == arith(s2)\n"
                             "\n"
                             "theta[1,1] == 0   # vanishes\n"
                             "dtheta[0,0] == 0\n";
    const auto entries = dsl::parse_file(text);
    REQUIRE(entries.size() == 3);
    CHECK(entries[0].line == 2);
    CHECK(entries[1].line == 5);
    CHECK(entries[2].line == 6);
    try {
        (void)dsl::parse_file("theta[0,0] == 1\n\ntheta[0,0 == 1\n");
        FAIL("expected a parse error");
    } catch (const dsl::ParseError &e) {
        CHECK(e.line() == 3);
    }

    std::ifstream in(THETA_TEST_DATA "/sample.thid");
    REQUIRE(in);
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(dsl::parse_file(buf.str()).size() == 4);
}
