#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <thetaid/expr.hpp>
#include <thetaid/identities.hpp>

// Text syntax for identities:
//
//   identity := expr "==" expr
//   expr     := term (("+" | "-") term)*
//   term     := factor ("*" factor)*
//   factor   := primary ("^" nat)?
//   primary  := atom | const | rational | "(" expr ")" | "-" primary
//   atom     := ("theta" | "dtheta") "[" srat "," srat "]" ("(" nat ")")?
//             | "eta" "(" nat ")"
//             | "etaq" "{" "(" nat "," int ")" ("," "(" nat "," int ")")* ";" srat "}"
//             | "farkasprod" | "lambert" "(" name ")" | "arith" "(" name ")"
//             | "qpow" "(" srat ")"
//   const    := "zeta" "(" nat ")" ("^" int)? | "sqrt2" | "sqrt3" | "I"
//
// rational is p or p/q; srat and int may carry a leading minus. "#" starts a
// comment running to the end of the line. Comments are not preserved by print.
namespace thetaid::dsl
{

class ParseError : public std::runtime_error
{
public:
    ParseError(int line, int column, std::string token, const std::string &message);

    int line() const { return line_; }
    int column() const { return column_; }
    const std::string &token() const { return token_; }

private:
    int line_;
    int column_;
    std::string token_;
};

// `first_line` numbers the first line of `text` (for positions inside files).
IdentityAst parse(std::string_view text, int first_line = 1);
Expr parse_expr(std::string_view text, int first_line = 1);

// Canonical text with minimal parentheses; keeps the tree's own term order.
std::string print(const Expr &e);
std::string print(const IdentityAst &ast);

struct FileEntry {
    int line;
    IdentityAst ast;
};

// Blocks of non-blank lines hold one identity; a block with several "=="
// holds one identity per line.
std::vector<FileEntry> parse_file(std::string_view text);

struct ElaborateDefaults {
    std::int64_t x_cutoff = 100;
    Mode mode = Mode::both;
};

// Rewrites lhs == rhs into a record with the smallest grading and order its
// atoms need. Throws ConfigError when the order does not divide kUniversalOrder.
IdentityRecord elaborate(const IdentityAst &ast, const std::string &name, const ElaborateDefaults &defaults = {});

} // namespace thetaid::dsl
