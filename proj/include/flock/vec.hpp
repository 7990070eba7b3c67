#pragma once

#include <array>
#include <cmath>
#include <cstddef>

namespace flock {

// Small fixed-dimension Euclidean vector. Only the planar instance is used by
// the simulation, but nothing below assumes N == 2.
template <std::size_t N>
struct VecN
{
    std::array<double, N> c{};

    constexpr VecN() = default;

    template <typename... T>
        requires(sizeof...(T) == N)
    constexpr VecN(T... values) : c{static_cast<double>(values)...}
    {
    }

    constexpr double& operator[](std::size_t i) { return c[i]; }
    constexpr double operator[](std::size_t i) const { return c[i]; }

    constexpr double x() const requires(N >= 1) { return c[0]; }
    constexpr double y() const requires(N >= 2) { return c[1]; }

    constexpr VecN& operator+=(const VecN& o)
    {
        for (std::size_t i = 0; i < N; ++i)
            c[i] += o.c[i];
        return *this;
    }
    constexpr VecN& operator-=(const VecN& o)
    {
        for (std::size_t i = 0; i < N; ++i)
            c[i] -= o.c[i];
        return *this;
    }
    constexpr VecN& operator*=(double s)
    {
        for (auto& v : c)
            v *= s;
        return *this;
    }

    friend constexpr VecN operator+(VecN a, const VecN& b) { return a += b; }
    friend constexpr VecN operator-(VecN a, const VecN& b) { return a -= b; }
    friend constexpr VecN operator*(VecN a, double s) { return a *= s; }
    friend constexpr VecN operator*(double s, VecN a) { return a *= s; }
    friend constexpr VecN operator-(VecN a) { return a *= -1.0; }
    friend constexpr bool operator==(const VecN&, const VecN&) = default;

    constexpr double dot(const VecN& o) const
    {
        double s = 0.0;
        for (std::size_t i = 0; i < N; ++i)
            s += c[i] * o.c[i];
        return s;
    }
    constexpr double squared_norm() const { return dot(*this); }
    double norm() const { return std::sqrt(squared_norm()); }

    bool finite() const
    {
        for (double v : c)
            if (!std::isfinite(v))
                return false;
        return true;
    }
};

using Vec2 = VecN<2>;

inline constexpr std::size_t kDim = 2;

}  // namespace flock
