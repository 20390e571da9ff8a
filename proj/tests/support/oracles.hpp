// Reference computations used by the tests. These are written from the
// textbook formulas and share no code with the library.
#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <random>
#include <vector>

namespace oracle {

inline constexpr double pi = std::numbers::pi;
inline constexpr double hbar = 1.054571817e-34;
inline constexpr double kb = 1.380649e-23;
inline constexpr double amu = 1.66053906660e-27;
inline constexpr double c = 299792458.0;
inline constexpr double eps0 = 8.8541878128e-12;

// --- harmonic oscillator ------------------------------------------------------

struct Series {
    double z;             // sum_n exp(-beta (n + 1/2))
    double mean_quanta;   // <E> / (hbar omega)
    double entropy_kb;    // S / k_B
    std::vector<double> p;
};

/// Plain Boltzmann sums, continued until the terms stop mattering.
inline Series thermal_series(double beta)
{
    std::vector<double> w;
    double sum = 0.0;
    for (int n = 0;; ++n) {
        const double t = std::exp(-beta * n);
        w.push_back(t);
        sum += t;
        if (t < 1e-20 * sum || n > 5'000'000)
            break;
    }
    Series s{0.0, 0.0, 0.0, {}};
    s.z = sum * std::exp(-beta / 2);
    for (std::size_t n = 0; n < w.size(); ++n) {
        const double p = w[n] / sum;
        s.p.push_back(p);
        s.mean_quanta += p * (static_cast<double>(n) + 0.5);
        if (p > 0)
            s.entropy_kb -= p * std::log(p);
    }
    return s;
}

/// -d/da sum_n P_n E_n(a) at fixed P_n, E_n = hbar^2 (n + 1/2) / (m a^2),
/// central differences with one Richardson step.
inline double pressure_fd(const std::vector<double>& p, double omega, double mass)
{
    const double a0 = std::sqrt(hbar / (mass * omega));
    const auto energy = [&](double a) {
        double e = 0.0;
        for (std::size_t n = 0; n < p.size(); ++n)
            e += p[n] * hbar * hbar * (static_cast<double>(n) + 0.5) / (mass * a * a);
        return e;
    };
    const auto d = [&](double h) { return (energy(a0 + h) - energy(a0 - h)) / (2 * h); };
    const double h = 1e-3 * a0;
    return -(4 * d(h / 2) - d(h)) / 3;
}

// --- Ermakov ramp ---------------------------------------------------------------

struct Quintic {
    double w0, wf, tf;

    double gamma() const { return std::sqrt(w0 / wf); }
    double b(double t) const
    {
        const double s = t / tf;
        return 1 + (gamma() - 1) * s * s * s * (10 + s * (-15 + 6 * s));
    }
    double b_ddot(double t) const
    {
        const double s = t / tf;
        return (gamma() - 1) * s * (60 + s * (-180 + 120 * s)) / (tf * tf);
    }
    double omega_sq(double t) const
    {
        const double bb = b(t);
        return w0 * w0 / (bb * bb * bb * bb) - b_ddot(t) / bb;
    }
};

/// RK4 for b'' = w0^2 / b^3 - w(t)^2 b from (1, 0); returns (b, b') at tf.
inline std::array<double, 2> integrate_ermakov(double w0, double tf,
                                               const std::function<double(double)>& omega_sq,
                                               int steps)
{
    const auto f = [&](double t, double b, double v) -> std::array<double, 2> {
        return {v, w0 * w0 / (b * b * b) - omega_sq(t) * b};
    };
    double b = 1, v = 0;
    const double h = tf / steps;
    for (int i = 0; i < steps; ++i) {
        const double t = i * h;
        const auto k1 = f(t, b, v);
        const auto k2 = f(t + h / 2, b + h / 2 * k1[0], v + h / 2 * k1[1]);
        const auto k3 = f(t + h / 2, b + h / 2 * k2[0], v + h / 2 * k2[1]);
        const auto k4 = f(t + h, b + h * k3[0], v + h * k3[1]);
        b += h / 6 * (k1[0] + 2 * k2[0] + 2 * k3[0] + k4[0]);
        v += h / 6 * (k1[1] + 2 * k2[1] + 2 * k3[1] + k4[1]);
    }
    return {b, v};
}

// --- collisions and losses ----------------------------------------------------

/// integral of N(0, s1^2) N(0, s2^2) over the line, by Simpson on +-12 sigma.
inline double gaussian_overlap_1d(double s1, double s2)
{
    const double span = 12 * std::max(s1, s2);
    const int n = 20000;
    const double h = 2 * span / n;
    const auto g = [&](double x) {
        return std::exp(-x * x / (2 * s1 * s1)) / std::sqrt(2 * pi * s1 * s1)
               * std::exp(-x * x / (2 * s2 * s2)) / std::sqrt(2 * pi * s2 * s2);
    };
    double sum = g(-span) + g(span);
    for (int i = 1; i < n; ++i)
        sum += (i % 2 ? 4 : 2) * g(-span + i * h);
    return sum * h / 3;
}

/// RK4 for dN/dt = -alpha n_b(t)^2 N from N(0) = 1.
inline double survival_ode(double alpha, const std::function<double(double)>& n_bath, double tf,
                           int steps = 4000)
{
    double y = 1;
    const double h = tf / steps;
    const auto f = [&](double t, double yy) {
        const double n = n_bath(t);
        return -alpha * n * n * yy;
    };
    for (int i = 0; i < steps; ++i) {
        const double t = i * h;
        const double k1 = f(t, y);
        const double k2 = f(t + h / 2, y + h / 2 * k1);
        const double k3 = f(t + h / 2, y + h / 2 * k2);
        const double k4 = f(t + h, y + h * k3);
        y += h / 6 * (k1 + 2 * k2 + 2 * k3 + k4);
    }
    return y;
}

// --- optical dipole trap ------------------------------------------------------

struct Line {
    double lambda, gamma, weight;
};

/// Two-level dipole potential per unit intensity, including the
/// counter-rotating term.
inline double potential_per_intensity(double lambda, const std::vector<Line>& lines)
{
    const double w = 2 * pi * c / lambda;
    double u = 0;
    for (const auto& l : lines) {
        const double w0 = 2 * pi * c / l.lambda;
        u -= l.weight * 3 * pi * c * c / (2 * w0 * w0 * w0)
             * (l.gamma / (w0 - w) + l.gamma / (w0 + w));
    }
    return u;
}

inline double scatter_per_intensity(double lambda, const std::vector<Line>& lines)
{
    const double w = 2 * pi * c / lambda;
    double r = 0;
    for (const auto& l : lines) {
        const double w0 = 2 * pi * c / l.lambda;
        const double k = l.gamma / (w0 - w) + l.gamma / (w0 + w);
        r += l.weight * 3 * pi * c * c / (2 * hbar * w0 * w0 * w0) * std::pow(w / w0, 3) * k * k;
    }
    return r;
}

/// Curvature of U(r, z) = u I0 (w0/w(z))^2 exp(-2 r^2 / w(z)^2) at the focus
/// by second differences, returned as trap frequencies (radial, axial).
inline std::array<double, 2> gaussian_beam_frequencies(double u_per_i, double power, double waist,
                                                       double lambda, double mass)
{
    const double i0 = 2 * power / (pi * waist * waist);
    const double zr = pi * waist * waist / lambda;
    const auto U = [&](double r, double z) {
        const double wz2 = waist * waist * (1 + z * z / (zr * zr));
        return u_per_i * i0 * waist * waist / wz2 * std::exp(-2 * r * r / wz2);
    };
    const auto curv = [&](auto fn, double h) { return (fn(h) - 2 * fn(0.0) + fn(-h)) / (h * h); };
    const double kr = curv([&](double x) { return U(x, 0); }, 1e-4 * waist);
    const double kz = curv([&](double x) { return U(0, x); }, 1e-4 * zr);
    return {std::sqrt(kr / mass), std::sqrt(kz / mass)};
}

// --- generators ---------------------------------------------------------------

struct Gen {
    std::mt19937_64 rng;
    explicit Gen(std::uint64_t seed) : rng(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }
    double log_uniform(double lo, double hi) { return std::exp(uniform(std::log(lo), std::log(hi))); }
    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
};

}  // namespace oracle
