#pragma once

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

#include <thetaid/thetaforms.hpp>

namespace thetaid::numeric
{

using cplx = std::complex<double>;

// Seeded sampling of (tau, zeta) pairs. The same seed always yields the same
// sequence; samples are drawn sequentially before any parallel use.
struct SamplePlan {
    std::uint64_t seed = 1;
    int count = 20;
    double tau_re_min = -1.0, tau_re_max = 1.0;
    double tau_im_min = 0.3, tau_im_max = 2.0;
    double zeta_re_min = -0.4, zeta_re_max = 0.4;
    double zeta_im_min = -0.4, zeta_im_max = 0.4;
};

struct Sample {
    cplx tau;
    cplx zeta;
};

// Throws std::invalid_argument for an empty box or one leaving the upper half plane.
void validate(const SamplePlan &plan);

// Draws `n` samples (plan.count when n < 0) continuing a single stream.
std::vector<Sample> draw_samples(const SamplePlan &plan, int n = -1);

inline constexpr double kDefaultTol = 1e-16;
inline constexpr std::int64_t kMaxTerms = 100000;

// theta[eps; eps'](zeta, k tau) by direct summation; the discarded tail is
// bounded by tol. Throws std::domain_error when Im tau <= 0 or the bound needs
// more than kMaxTerms terms on either side.
cplx theta_point(const Characteristic &c, cplx zeta, cplx tau, double tol = kDefaultTol);
// d/dzeta of the above (not normalized by 2 pi i).
cplx theta_deriv_point(const Characteristic &c, cplx zeta, cplx tau, double tol = kDefaultTol);

// Product form of theta[eps; eps'](zeta, tau), |eps| <= 1.
cplx triple_product_point(const Characteristic &c, cplx zeta, cplx tau, double tol = kDefaultTol);

// Relative residual of theta(zeta + n + m tau) against its quasi-periodic factor.
double check_quasi_periodicity(const Characteristic &c, cplx zeta, cplx tau, int m, int n,
                               double tol = kDefaultTol);
// Relative residual of the half-period shift, which moves [eps; eps'] to [eps + m; eps' + n].
double check_half_period(const Characteristic &c, cplx zeta, cplx tau, int m, int n, double tol = kDefaultTol);

// The characteristic's zero in the fundamental parallelogram.
cplx zero_location(const Characteristic &c, cplx tau);

enum class EllipticVariant { quarter, three_quarter };

// Knobs used by negative controls.
struct EllipticConfig {
    bool drop_root_factor = false;
};

struct EllipticResult {
    double constancy = 0.0;   // max |f(zeta) - f(0)| / |f(0)|
    double closed_form = 0.0; // max |f(0) - rhs| / |rhs|
    int resamples = 0;
    int evaluated = 0;

    double worst() const { return constancy > closed_form ? constancy : closed_form; }
};

// f(zeta) = (quartic combination of theta[a; .](zeta)) / (product of four
// theta[a; .](zeta)), a = 1/4 or 3/4. f must be constant in zeta and equal to
// its closed form in theta constants. Samples whose denominator nearly
// vanishes are redrawn; more than half redrawn is an error (std::runtime_error).
EllipticResult check_elliptic_constancy(EllipticVariant v, const SamplePlan &plan, double tol,
                                        const EllipticConfig &config = {});

struct DetResult {
    cplx det;
    double scale;   // largest entry magnitude
    double relative; // |det| / scale^4
};

// Determinant of the 4x4 skew-symmetric matrix of products of theta[1; .]
// constants. `perturb` doubles one off-diagonal pair (negative control).
DetResult det_A(cplx tau, bool perturb = false);

} // namespace thetaid::numeric
