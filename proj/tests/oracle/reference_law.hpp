#pragma once

// Test-only reference implementations, written without the library's vector
// types or helpers. Sums run in a different order and powers are expanded by
// hand so that agreement with the library is not a tautology.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace oracle {

struct Params
{
    double sigma, beta;
    int theta;
    double K, d0, d1, delta;
};

struct Flock
{
    std::vector<double> px, py, vx, vy;
    std::size_t size() const { return px.size(); }
};

inline double inv_power(double base, int n)
{
    double r = 1.0;
    for (int i = 0; i < n; ++i)
        r *= base;
    return 1.0 / r;
}

inline double weight(double r, const Params& p)
{
    return p.K * std::exp(-p.beta * std::log(p.sigma * p.sigma + r));
}

// Dispersion from ordered pairs: sum over i != j counts every pair twice.
inline double dispersion(const Flock& f)
{
    const std::size_t k = f.size();
    double s = 0.0;
    for (std::size_t i = k; i-- > 0;)
        for (std::size_t j = k; j-- > 0;)
            if (i != j) {
                const double dx = f.vx[i] - f.vx[j];
                const double dy = f.vy[i] - f.vy[j];
                s += dx * dx + dy * dy;
            }
    return std::sqrt(s / (2.0 * static_cast<double>(k)));
}

enum class Law
{
    Proposed,
    AlignmentOnly,
    AlignmentRepulsion,
};

inline void input(const Flock& f, std::size_t i, const Params& p, Law law, double& ux, double& uy)
{
    const double lam = law == Law::Proposed ? dispersion(f) : 1.0;
    double ax = 0.0, ay = 0.0, sx = 0.0, sy = 0.0, cx = 0.0, cy = 0.0;
    for (std::size_t j = f.size(); j-- > 0;) {
        if (j == i)
            continue;
        const double dx = f.px[i] - f.px[j];
        const double dy = f.py[i] - f.py[j];
        const double r = dx * dx + dy * dy;
        const double a = weight(r, p);
        ax += a * (f.vx[j] - f.vx[i]);
        ay += a * (f.vy[j] - f.vy[i]);
        if (law == Law::AlignmentOnly)
            continue;
        const double f0 = inv_power(r - p.d0, p.theta);
        sx += f0 * dx;
        sy += f0 * dy;
        if (law == Law::Proposed) {
            const double f1 = inv_power(r - p.d1, p.theta);
            cx += f1 * (f.px[j] - f.px[i]);
            cy += f1 * (f.py[j] - f.py[i]);
        }
    }
    ux = ax + lam * sx + lam * cx;
    uy = ay + lam * sy + lam * cy;
}

// Energy with the barrier integrals evaluated by adaptive Gauss-Kronrod
// quadrature, split at the midpoint so each half is resolved separately.
inline double energy_by_quadrature(const Flock& f, const Params& p)
{
    const std::size_t k = f.size();
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        mx += f.vx[i];
        my += f.vy[i];
    }
    mx /= static_cast<double>(k);
    my /= static_cast<double>(k);
    double res = 0.0;
    for (std::size_t i = 0; i < k; ++i)
        res += (f.vx[i] - mx) * (f.vx[i] - mx) + (f.vy[i] - my) * (f.vy[i] - my);

    // Each kernel is integrated in s = log|x - pole|, which keeps the
    // integrand smooth right up to the cutoff next to the pole.
    using boost::math::quadrature::gauss_kronrod;
    const double top = p.d1 - p.delta;
    auto integrate = [&](double pole, double a, double b) {
        const double side = a > pole ? 1.0 : -1.0;
        auto g = [&](double s) {
            const double off = side * std::exp(s);
            return inv_power(off, p.theta) * std::exp(s);
        };
        const double sa = std::log(std::fabs(a - pole));
        const double sb = std::log(std::fabs(b - pole));
        double err = 0.0;
        const double v = gauss_kronrod<double, 61>::integrate(g, std::min(sa, sb),
                                                              std::max(sa, sb), 15, 1e-15, &err);
        // dx = side * e^s ds, and the bounds swap when side < 0.
        return side > 0 ? (sa <= sb ? v : -v) : (sa <= sb ? -v : v);
    };
    double pot = 0.0;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < i; ++j) {
            const double dx = f.px[i] - f.px[j];
            const double dy = f.py[i] - f.py[j];
            const double r = dx * dx + dy * dy;
            pot += integrate(p.d0, r, top) - integrate(p.d1, r, top);
        }
    return std::sqrt(res) + 0.5 * pot;
}

}  // namespace oracle
