#pragma once

#include <cmath>
#include <stdexcept>

namespace wigner {

namespace detail {

inline constexpr double kPi = 3.14159265358979323846;

// Gauss-Chebyshev rule of the second kind on [-1, 1]:
//   int_{-1}^{1} g(t) sqrt(1 - t^2) dt  ~=  sum_i w_i g(t_i),
//   t_i = cos(i pi / (n+1)),  w_i = pi/(n+1) * sin^2(i pi / (n+1)).
// Exact for polynomials of degree <= 2n - 1.
template <class F>
double gauss_chebyshev2(F&& g, int nodes) {
    const double h = kPi / (nodes + 1);
    long double acc = 0.0L;
    for (int i = 1; i <= nodes; ++i) {
        const double phi = i * h;
        const double s = std::sin(phi);
        acc += static_cast<long double>(s * s * g(std::cos(phi)));
    }
    return static_cast<double>(acc * h);
}

// int_{-2}^{2} f(x) dmu_sc(x), refined by node doubling until the change
// drops below tol.
template <class F>
double integrate_semicircle(F&& f, double tol = 1e-12, int start_nodes = 256) {
    auto rescaled = [&f](double t) { return f(2.0 * t); };
    double prev = (2.0 / kPi) * gauss_chebyshev2(rescaled, start_nodes);
    for (int n = 2 * start_nodes; n <= 16384; n *= 2) {
        const double cur = (2.0 / kPi) * gauss_chebyshev2(rescaled, n);
        if (std::abs(cur - prev) <= 0.5 * tol) return cur;
        prev = cur;
    }
    return prev;
}

// Adaptive Simpson with Richardson correction.
template <class F>
double adaptive_simpson_step(F&& f, double a, double fa, double b, double fb,
                             double m, double fm, double whole, double tol,
                             int depth) {
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return adaptive_simpson_step(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
           adaptive_simpson_step(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

template <class F>
double adaptive_simpson(F&& f, double a, double b, double tol) {
    if (a == b) return 0.0;
    const double m = 0.5 * (a + b);
    const double fa = f(a), fb = f(b), fm = f(m);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return adaptive_simpson_step(f, a, fa, b, fb, m, fm, whole, tol, 48);
}

inline double ipow(double x, int k) {
    double r = 1.0;
    for (int i = 0; i < k; ++i) r *= x;
    return r;
}

}  // namespace detail

// Semicircle density (1/2pi) sqrt(4 - x^2) on [-2, 2], zero outside.
inline double semicircle_density(double x) {
    if (!(std::abs(x) < 2.0)) return 0.0;
    return std::sqrt(4.0 - x * x) / (2.0 * detail::kPi);
}

// Limiting scaled eigenvector-signal overlap law
//   p(x; theta) = 1 / (1 - theta x + theta^2),
// the form that stays regular at theta = 0; for theta > 0 it equals
// 1 / (theta (theta + 1/theta - x)) with a simple pole at theta + 1/theta.
inline double overlap_law(double x, double theta) {
    const double denom = 1.0 - theta * x + theta * theta;
    if (denom == 0.0)
        throw std::domain_error("overlap_law: x is at the pole theta + 1/theta");
    return 1.0 / denom;
}

// Location and fluctuation scale of the detached top eigenvalue.
struct TransitionConstants {
    double rho;     // theta + 1/theta
    double sigma2;  // 1 - 1/theta^2
};

inline TransitionConstants transition_constants(double theta) {
    if (!(theta > 0.0))
        throw std::domain_error("transition_constants: theta must be > 0");
    return {theta + 1.0 / theta, 1.0 - 1.0 / (theta * theta)};
}

// Semicircle mass above m: F(m) = int_m^2 dmu_sc, via the closed
// antiderivative. F(-2) = 1, F(2) = 0, strictly decreasing.
inline double semicircle_mass_above(double m) {
    return 0.5 - m * std::sqrt(4.0 - m * m) / (4.0 * detail::kPi) -
           std::asin(0.5 * m) / detail::kPi;
}

// Threshold m(c) in [-2, 2] solving c = int_m^2 dmu_sc, by bisection on the
// closed-form mass; |F(m) - c| <= 1e-12 on return.
inline double threshold_m(double c) {
    if (!(c > 0.0 && c <= 1.0))
        throw std::domain_error("threshold_m: c must be in (0, 1]");
    if (c == 1.0) return -2.0;
    double lo = -2.0, hi = 2.0;  // F(lo) = 1 >= c, F(hi) = 0 < c
    while (hi - lo > 1e-15) {
        const double mid = 0.5 * (lo + hi);
        const double f = semicircle_mass_above(mid);
        if (std::abs(f - c) <= 1e-13) return mid;
        if (f > c)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

// Energy functional P(theta; c) = int_m^2 p(x;theta) dmu_sc(x) with
// m = m(c). Evaluated after the substitution x = 2 cos(phi), which turns
// the integrand into the smooth function (2/pi) sin^2(phi) p(2 cos phi).
// Defined pre-transition (theta < 1), where the pole stays outside [-2, 2].
inline double energy_functional(double theta, double c) {
    if (!(theta >= 0.0 && theta < 1.0))
        throw std::domain_error("energy_functional: requires 0 <= theta < 1");
    if (!(c > 0.0 && c <= 1.0))
        throw std::domain_error("energy_functional: c must be in (0, 1]");
    const double m = threshold_m(c);
    const double phi_m = std::acos(0.5 * m);
    auto integrand = [theta](double phi) {
        const double s = std::sin(phi);
        return (2.0 / detail::kPi) * s * s * overlap_law(2.0 * std::cos(phi), theta);
    };
    return detail::adaptive_simpson(integrand, 0.0, phi_m, 1e-12);
}

// Moment of the overlap law against the semicircle measure,
//   int_{-2}^{2} x^k p(x;theta) dmu_sc(x),
// by Gauss-Chebyshev quadrature of the second kind (256 nodes, refined by
// doubling). The nodes live strictly inside (-2, 2), away from the pole.
inline double law_moment(int k, double theta) {
    if (k < 0)
        throw std::domain_error("law_moment: k must be >= 0");
    if (!(theta >= 0.0 && theta < 1.0))
        throw std::domain_error("law_moment: requires 0 <= theta < 1");
    return detail::integrate_semicircle(
        [k, theta](double x) { return detail::ipow(x, k) * overlap_law(x, theta); });
}

}  // namespace wigner
