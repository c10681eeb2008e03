#include "mcqw/line.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "mcqw/errors.hpp"
#include "mcqw/quadrature.hpp"

namespace mcqw::line {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr complex kI{0.0, 1.0};

// 1 - cos k without cancellation near k = 0.
double one_minus_cos(double k) {
    const double s = std::sin(0.5 * k);
    return 2.0 * s * s;
}

// 2 - cos^2 k - cos k, factored as (1 - cos k)(2 + cos k).
double velocity_radicand(double k) { return one_minus_cos(k) * (2.0 + std::cos(k)); }

double ipow(double x, int r) {
    double out = 1.0;
    for (int i = 0; i < r; ++i) out *= x;
    return out;
}

// Reflection 2|s><s| - 1 about the uniform channel vector s.
Channels reflect(const Channels& a) {
    return {(-a[0] + 2.0 * a[1] + 2.0 * a[2]) / 3.0, (2.0 * a[0] - a[1] + 2.0 * a[2]) / 3.0,
            (2.0 * a[0] + 2.0 * a[1] - a[2]) / 3.0};
}

}  // namespace

InitialState InitialState::make(complex alpha, complex beta, complex gamma, const Tolerances& tol) {
    const double total = std::norm(alpha) + std::norm(beta) + std::norm(gamma);
    if (std::abs(total - 1.0) > tol.line_normalization)
        throw Error(ErrorKind::InvalidInput,
                    "initial amplitudes are not normalized: |a|^2+|b|^2+|g|^2 = " + std::to_string(total));
    return {alpha, beta, gamma};
}

LineState::LineState(std::size_t radius, std::size_t time)
    : radius_(radius), time_(time), amps_(2 * radius + 1, Channels{}) {}

LineState LineState::launch(const InitialState& init, std::size_t radius) {
    LineState s(radius);
    s.at(0) = {init.alpha, init.beta, init.gamma};
    return s;
}

std::size_t LineState::index(long x) const {
    const long r = static_cast<long>(radius_);
    if (x < -r || x > r)
        throw Error(ErrorKind::InvalidInput, "site " + std::to_string(x) + " is outside the truncated lattice");
    return static_cast<std::size_t>(x + r);
}

double LineState::probability(long x) const {
    const Channels& a = at(x);
    return std::norm(a[0]) + std::norm(a[1]) + std::norm(a[2]);
}

double LineState::norm() const {
    double s = 0.0;
    for (const Channels& a : amps_) s += std::norm(a[0]) + std::norm(a[1]) + std::norm(a[2]);
    return std::sqrt(s);
}

std::optional<std::size_t> LineState::support_radius() const {
    const auto nonzero = [](const Channels& a) {
        return a[0] != complex{} || a[1] != complex{} || a[2] != complex{};
    };
    for (std::size_t d = radius_ + 1; d-- > 0;) {
        const long x = static_cast<long>(d);
        if (nonzero(at(x)) || nonzero(at(-x))) return d;
    }
    return std::nullopt;
}

LineState step(const LineState& s) {
    LineState out(s.radius(), s.time() + 1);
    const auto support = s.support_radius();
    if (!support) return out;
    const long r = static_cast<long>(*support);
    if (*support + 1 >= s.radius())
        throw Error(ErrorKind::LightConeOverflow, "walker support " + std::to_string(r) +
                                                      " would reach the truncation radius " +
                                                      std::to_string(s.radius()));

    // Reflect every site, then swap |x>|y> -> |y>|x>: channel Right of site x
    // becomes channel Left of site x + 1, and channel Left of x becomes
    // channel Right of x - 1.
    std::vector<Channels> g(static_cast<std::size_t>(2 * r + 1));
    for (long x = -r; x <= r; ++x) g[static_cast<std::size_t>(x + r)] = reflect(s.at(x));
    const auto reflected = [&](long x) -> const Channels* {
        return (x < -r || x > r) ? nullptr : &g[static_cast<std::size_t>(x + r)];
    };

    for (long x = -r - 1; x <= r + 1; ++x) {
        Channels& dst = out.at(x);
        if (const Channels* from = reflected(x - 1)) dst[Left] = (*from)[Right];
        if (const Channels* from = reflected(x)) dst[Stay] = (*from)[Stay];
        if (const Channels* from = reflected(x + 1)) dst[Right] = (*from)[Left];
    }
    return out;
}

double Distribution::at(long x) const {
    const long r = static_cast<long>(radius);
    if (x < -r || x > r) return 0.0;
    return p[static_cast<std::size_t>(x + r)];
}

double Distribution::total() const {
    double s = 0.0;
    for (double v : p) s += v;
    return s;
}

Distribution distribution(const LineState& s) {
    Distribution out{s.time(), s.radius(), RealVector(2 * s.radius() + 1)};
    const long r = static_cast<long>(s.radius());
    for (long x = -r; x <= r; ++x) out.p[static_cast<std::size_t>(x + r)] = s.probability(x);
    return out;
}

LineState simulate_state(const InitialState& init, std::size_t t, std::optional<std::size_t> radius) {
    LineState s = LineState::launch(init, radius.value_or(t + 2));
    for (std::size_t i = 0; i < t; ++i) s = step(s);
    return s;
}

Distribution simulate(const InitialState& init, std::size_t t, std::optional<std::size_t> radius) {
    return distribution(simulate_state(init, t, radius));
}

Matrix3 u_of_k(double k) {
    const complex ep = std::polar(1.0, k);
    const complex em = std::polar(1.0, -k);
    const Matrix3 shift{{{0.0, 0.0, ep}, {0.0, 1.0, 0.0}, {em, 0.0, 0.0}}};
    Matrix3 reflection{};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) reflection[i][j] = (i == j ? -1.0 : 2.0) / 3.0;
    Matrix3 out{};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            for (std::size_t l = 0; l < 3; ++l) out[i][j] += shift[i][l] * reflection[l][j];
    return out;
}

MomentumPoint eigen_line(double k, const Tolerances& tol) {
    const double omc = one_minus_cos(k);
    if (omc <= tol.singular_k)
        throw Error(ErrorKind::SingularK, "eigenvectors are undefined at k = " + std::to_string(k) +
                                              " (1 - cos k = 0)");
    const double c = std::cos(k);
    const double s = std::sin(k);
    const double root = std::sqrt(velocity_radicand(k));
    const complex ek = std::polar(1.0, k);

    MomentumPoint pt;
    pt.k = k;
    pt.uk = u_of_k(k);
    pt.eigenvalues = {complex{-1.0, 0.0}, complex{1.0 / 3.0 + 2.0 / 3.0 * c, 2.0 / 3.0 * root},
                      complex{1.0 / 3.0 + 2.0 / 3.0 * c, -2.0 / 3.0 * root}};

    const double n1 = std::sqrt(4.0 + 2.0 * c);
    pt.eigenvectors[0] = {ek / n1, (-1.0 - ek) / n1, 1.0 / n1};

    const double cot_half = s / omc;  // cot(k/2)
    const double c2 = 12.0 + 4.0 * std::cos(2.0 * k) + 12.0 * c - 8.0 * s * root +
                      (16.0 * s * s + 24.0 * s * root) / omc;
    const double c3 = 12.0 + 4.0 * std::cos(2.0 * k) + 12.0 * c + 8.0 * s * root +
                      (16.0 * s * s - 24.0 * s * root) / omc;
    const double n2 = std::sqrt(c2);
    const double n3 = std::sqrt(c3);
    pt.eigenvectors[1] = {ek * (-3.0 - 2.0 * c - 2.0 * root * s / omc) / n2,
                          (-s - root) * (cot_half + kI) / n2, 1.0 / n2};
    pt.eigenvectors[2] = {ek * (-3.0 - 2.0 * c + 2.0 * root * s / omc) / n3,
                          (-s + root) * (cot_half + kI) / n3, 1.0 / n3};

    const double h = s / root;
    pt.velocities = {0.0, h, -h};
    return pt;
}

double group_velocity(double k, int branch, const Tolerances& tol) {
    if (branch < 1 || branch > 3) throw Error(ErrorKind::InvalidInput, "branch must be 1, 2 or 3");
    if (branch == 1) return 0.0;
    const double radicand = velocity_radicand(k);
    if (radicand <= tol.singular_velocity)
        throw Error(ErrorKind::SingularK, "group velocity is undefined at k = " + std::to_string(k));
    const double h = std::sin(k) / std::sqrt(radicand);
    return branch == 2 ? h : -h;
}

double max_group_velocity(const Tolerances& tol) {
    // Smallest admissible k: h(k, 2) keeps growing as k -> 0+.
    double k_min = 1e-12;
    while (velocity_radicand(k_min) <= 4.0 * tol.singular_velocity) k_min *= 1.5;

    const auto h = [&](double k) { return group_velocity(k, 2, tol); };
    constexpr int kGrid = 4096;
    int best = 1;
    double best_value = h(k_min);
    std::vector<double> ks(kGrid + 1);
    for (int i = 0; i <= kGrid; ++i) ks[static_cast<std::size_t>(i)] = k_min + (kPi - k_min) * i / kGrid;
    for (int i = 0; i <= kGrid; ++i) {
        const double v = h(ks[static_cast<std::size_t>(i)]);
        if (v > best_value) {
            best_value = v;
            best = i;
        }
    }

    double lo = ks[static_cast<std::size_t>(std::max(best - 1, 0))];
    double hi = ks[static_cast<std::size_t>(std::min(best + 1, kGrid))];
    const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - ratio * (hi - lo);
    double x2 = lo + ratio * (hi - lo);
    double f1 = h(x1);
    double f2 = h(x2);
    for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + ratio * (hi - lo);
            f2 = h(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - ratio * (hi - lo);
            f1 = h(x1);
        }
    }
    return std::max({best_value, f1, f2, h(lo), h(hi)});
}

WeakLimitDensity density_coefficients(const InitialState& init) {
    const double sqrt3 = std::sqrt(3.0);
    const complex& a = init.alpha;
    const complex& b = init.beta;
    const complex& g = init.gamma;
    const double re_ab = (a * std::conj(b)).real();
    const double re_ag = (a * std::conj(g)).real();
    const double re_bg = (b * std::conj(g)).real();
    const double na = std::norm(a);
    const double nb = std::norm(b);
    const double ng = std::norm(g);

    WeakLimitDensity d;
    d.c = sqrt3 / 6.0 + (sqrt3 - 3.0) / 3.0 * re_ab + (3.0 - 2.0 * sqrt3) / 3.0 * re_ag +
          (sqrt3 - 3.0) / 3.0 * re_bg + (2.0 - sqrt3) / 2.0 * nb;
    d.a0 = 1.0 + nb + 2.0 * re_ag;
    d.a1 = 2.0 * na - 2.0 * ng + 2.0 * re_ab - 2.0 * re_bg;
    d.a2 = 1.0 - 3.0 * nb + 2.0 * re_ab - 4.0 * re_ag + 2.0 * re_bg;
    return d;
}

double density(const WeakLimitDensity& d, double y) {
    const double q = 2.0 - 3.0 * y * y;
    if (q < -1e-12) return 0.0;
    if (q <= 1e-12) return std::numeric_limits<double>::infinity();
    return (d.a0 + d.a1 * y + d.a2 * y * y) / (2.0 * kPi * (1.0 - y * y) * std::sqrt(q));
}

namespace {

// Continuous part integrated in theta with y = R sin(theta): the factor
// sqrt(2 - 3y^2) = sqrt(2) cos(theta) cancels dy = R cos(theta) dtheta,
// leaving poly(y) / (2 pi sqrt(3) (1 - y^2)).
double continuous_mass(const WeakLimitDensity& d, double y_hi, int power, const Tolerances& tol) {
    if (y_hi <= -kSupportEdge) return 0.0;
    const double theta_hi = std::asin(std::min(y_hi, kSupportEdge) / kSupportEdge);
    const auto integrand = [&](double theta) {
        const double y = kSupportEdge * std::sin(theta);
        return ipow(y, power) * (d.a0 + d.a1 * y + d.a2 * y * y) / (2.0 * kPi * std::sqrt(3.0) * (1.0 - y * y));
    };
    return adaptive_simpson(integrand, -0.5 * kPi, theta_hi, tol.quadrature_local, tol.quadrature_max_depth);
}

}  // namespace

double cdf(const WeakLimitDensity& d, double y, const Tolerances& tol) {
    return continuous_mass(d, y, 0, tol) + (y >= 0.0 ? d.c : 0.0);
}

double cdf_left(const WeakLimitDensity& d, double y, const Tolerances& tol) {
    return continuous_mass(d, y, 0, tol) + (y > 0.0 ? d.c : 0.0);
}

double limit_moment(const WeakLimitDensity& d, int r, const Tolerances& tol) {
    if (r < 0) throw Error(ErrorKind::InvalidInput, "moment order must be non-negative");
    return continuous_mass(d, kSupportEdge, r, tol) + (r == 0 ? d.c : 0.0);
}

double momentum_moment(const InitialState& init, int r, std::size_t grid) {
    if (r < 0) throw Error(ErrorKind::InvalidInput, "moment order must be non-negative");
    const Channels psi0{init.alpha, init.beta, init.gamma};
    double sum = 0.0;
    for (std::size_t i = 0; i < grid; ++i) {
        const double k = (static_cast<double>(i) + 0.5) * 2.0 * kPi / static_cast<double>(grid);
        const MomentumPoint pt = eigen_line(k);
        for (std::size_t j = 0; j < 3; ++j) {
            complex overlap{};
            for (std::size_t c = 0; c < 3; ++c) overlap += std::conj(pt.eigenvectors[j][c]) * psi0[c];
            sum += ipow(pt.velocities[j], r) * std::norm(overlap);
        }
    }
    return sum / static_cast<double>(grid);
}

EmpiricalCdf::EmpiricalCdf(const Distribution& p)
    : t_(p.t), radius_(static_cast<long>(p.radius)), cumulative_(p.p.size()) {
    if (p.t == 0) throw Error(ErrorKind::InvalidInput, "rescaled distribution needs t >= 1");
    double acc = 0.0;
    for (std::size_t i = 0; i < p.p.size(); ++i) cumulative_[i] = (acc += p.p[i]);
}

double EmpiricalCdf::at_site(long x) const {
    if (x < -radius_) return 0.0;
    if (x >= radius_) return cumulative_.back();
    return cumulative_[static_cast<std::size_t>(x + radius_)];
}

double EmpiricalCdf::before_site(long x) const { return at_site(x - 1); }

double EmpiricalCdf::operator()(double y) const {
    // The small offset keeps y = x/t on site x despite rounding in y * t.
    const double xf = std::floor(y * static_cast<double>(t_) + 1e-9);
    if (xf < static_cast<double>(-radius_)) return 0.0;
    if (xf >= static_cast<double>(radius_)) return cumulative_.back();
    return at_site(static_cast<long>(xf));
}

EmpiricalCdf empirical_rescaled_cdf(const Distribution& p) { return EmpiricalCdf(p); }

double moment(const Distribution& p, int r) {
    if (r < 0) throw Error(ErrorKind::InvalidInput, "moment order must be non-negative");
    if (p.t == 0) {
        if (r == 0) return p.total();
        throw Error(ErrorKind::InvalidInput, "rescaled moments need t >= 1");
    }
    const long radius = static_cast<long>(p.radius);
    const double t = static_cast<double>(p.t);
    double s = 0.0;
    for (long x = -radius; x <= radius; ++x) s += ipow(static_cast<double>(x) / t, r) * p.at(x);
    return s;
}

KolmogorovDistance kolmogorov_distance(const Distribution& p, const WeakLimitDensity& d, double exclude_radius,
                                       const Tolerances& tol) {
    const EmpiricalCdf emp(p);
    const long t = static_cast<long>(p.t);
    const long reach = std::min(t, static_cast<long>(p.radius));
    KolmogorovDistance out;
    const auto consider = [&](double gap, double y) {
        if (gap > out.distance) {
            out.distance = gap;
            out.at_y = y;
        }
    };
    // Between consecutive sites F_t is flat and F is continuous, so the sup is
    // attained at a site or as the left limit at the next one.
    for (long x = -reach; x <= reach; ++x) {
        const double y = static_cast<double>(x) / static_cast<double>(t);
        if (exclude_radius > 0.0 && std::abs(y) < exclude_radius) continue;
        consider(std::abs(emp.at_site(x) - cdf(d, y, tol)), y);
        consider(std::abs(emp.before_site(x) - cdf_left(d, y, tol)), y);
    }
    // Beyond the last site both CDFs are flat at their totals.
    consider(std::abs(emp.at_site(reach) - cdf(d, 1.0, tol)), 1.0);
    return out;
}

}  // namespace mcqw::line
