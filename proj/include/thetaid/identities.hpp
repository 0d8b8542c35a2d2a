#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <thetaid/expr.hpp>
#include <thetaid/numeric.hpp>

namespace thetaid
{

// Bad input or an impossible configuration, as opposed to a failed identity.
class ConfigError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

enum class Mode { exact, numeric, both };

std::string_view to_string(Mode m);

// Checks that are not polynomial identities in theta constants.
enum class NumericCheck { none, elliptic_quarter, elliptic_three_quarter, det_a };

// One candidate form of a statement; records with several readings pass when
// at least one holds, and the failing ones are reported as errata.
struct Reading {
    std::string label;
    IdentityAst ast;
};

struct IdentityRecord {
    std::string name;
    std::string summary;
    // How pi and 2 pi i were absorbed into dtheta and constants.
    std::string normalization;
    Mode mode = Mode::both;
    std::vector<Reading> readings;
    // Series that must not vanish for the cross-multiplied form to be
    // equivalent to the quotient statement.
    std::vector<Expr> nonvanishing;
    // Replaces the default negative control (rhs doubled, or the first
    // subtraction flipped when rhs is 0).
    std::optional<IdentityAst> mutation;
    NumericCheck numeric = NumericCheck::none;
    bool mutated = false;

    std::int64_t grading = 1;
    int order = 1;
    std::int64_t x_cutoff = 100;
    double tol = 1e-9;
};

// Fills grading and order from the readings and guards.
void infer_context(IdentityRecord &r);

const std::vector<IdentityRecord> &registry();
const IdentityRecord *find_record(std::string_view name);

// Negative control for r: every reading mutated, or the numeric check perturbed.
IdentityRecord mutate(const IdentityRecord &r);
IdentityAst default_mutation(const IdentityAst &ast);

struct VerifyOptions {
    std::optional<std::int64_t> x_cutoff;
    std::optional<double> tol;
    // Used by the numeric-only records; exact records in mode "both" draw a
    // few samples from it as well.
    numeric::SamplePlan plan;
    bool numeric_for_exact = true;
};

struct ReadingOutcome {
    std::string label;
    bool pass = false;
    std::optional<Rational> first_bad_exponent; // in units of x
    std::optional<double> worst_residual;
};

struct VerificationReport {
    std::string name;
    Mode mode = Mode::exact;
    bool pass = false;
    std::optional<Rational> first_bad_exponent;
    std::optional<double> worst_residual;
    double elapsed_ms = 0.0;
    std::optional<std::int64_t> cutoff; // x-exponent
    std::vector<ReadingOutcome> readings;
    std::vector<std::string> notes;
};

VerificationReport verify_exact(const IdentityRecord &r, const VerifyOptions &opts = {});
VerificationReport verify_numeric(const IdentityRecord &r, const VerifyOptions &opts = {});
// Runs the record's declared mode(s).
VerificationReport verify(const IdentityRecord &r, const VerifyOptions &opts = {});

// Shell-style glob over record names ("*" and "?"); empty matches everything.
bool name_matches(std::string_view pattern, std::string_view name);

// Runs every matching record, in parallel when threads allow, and returns the
// reports sorted by name. THETA_CLI_THREADS caps the worker count.
std::vector<VerificationReport> verify_all(std::string_view filter = {}, const VerifyOptions &opts = {});
std::vector<VerificationReport> verify_records(const std::vector<IdentityRecord> &records,
                                               const VerifyOptions &opts = {});

} // namespace thetaid
