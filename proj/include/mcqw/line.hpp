#pragma once

// Quantized lazy random walk on the integers. Each site x carries three
// amplitudes in the fixed channel order [(x, x-1), (x, x), (x, x+1)].

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "mcqw/linalg.hpp"
#include "mcqw/tolerances.hpp"

namespace mcqw::line {

enum Channel : std::size_t { Left = 0, Stay = 1, Right = 2 };

using Channels = std::array<complex, 3>;
using Matrix3 = std::array<std::array<complex, 3>, 3>;

// Amplitudes of |0>|-1>, |0>|0>, |0>|1> at launch.
struct InitialState {
    complex alpha;
    complex beta;
    complex gamma;

    // Throws InvalidInput unless |alpha|^2 + |beta|^2 + |gamma|^2 = 1.
    static InitialState make(complex alpha, complex beta, complex gamma, const Tolerances& tol = {});
};

// Wave function on the truncated lattice -radius..radius.
class LineState {
public:
    LineState(std::size_t radius, std::size_t time = 0);
    static LineState launch(const InitialState& init, std::size_t radius);

    std::size_t radius() const noexcept { return radius_; }
    std::size_t time() const noexcept { return time_; }

    Channels& at(long x) { return amps_[index(x)]; }
    const Channels& at(long x) const { return amps_[index(x)]; }

    double probability(long x) const;
    double norm() const;
    // Largest |x| with a nonzero amplitude; nullopt for the zero state.
    std::optional<std::size_t> support_radius() const;

private:
    std::size_t index(long x) const;

    std::size_t radius_;
    std::size_t time_;
    std::vector<Channels> amps_;
};

// One application of U. Throws LightConeOverflow when the result could reach
// |x| = radius.
LineState step(const LineState& s);

// p_t(x) on -radius..radius.
struct Distribution {
    std::size_t t = 0;
    std::size_t radius = 0;
    RealVector p;

    double at(long x) const;
    double total() const;
};

Distribution distribution(const LineState& s);

// Evolves t steps from the origin; radius defaults to t + 2.
LineState simulate_state(const InitialState& init, std::size_t t, std::optional<std::size_t> radius = {});
Distribution simulate(const InitialState& init, std::size_t t, std::optional<std::size_t> radius = {});

// Fourier-space one-step operator: shift pattern times the reflection
// (1/3)[[-1,2,2],[2,-1,2],[2,2,-1]].
Matrix3 u_of_k(double k);

struct MomentumPoint {
    double k = 0.0;
    Matrix3 uk{};
    std::array<complex, 3> eigenvalues{};
    std::array<Channels, 3> eigenvectors{};
    std::array<double, 3> velocities{};
};

// Closed-form eigensystem at k. Throws SingularK when 1 - cos k <= tol.singular_k.
MomentumPoint eigen_line(double k, const Tolerances& tol = {});

// h(k, j) = conj(lambda_j) (-i d/dk) lambda_j for branch j in {1, 2, 3}.
double group_velocity(double k, int branch, const Tolerances& tol = {});

// sup_k h(k, 2), located by a grid scan refined with golden-section search.
double max_group_velocity(const Tolerances& tol = {});

inline constexpr double kSupportEdge = 0.81649658092772603273;  // sqrt(6)/3

// Weak limit of X_t / t: c delta_0 plus a continuous part
// (a0 + a1 y + a2 y^2) / (2 pi (1 - y^2) sqrt(2 - 3 y^2)) on (-sqrt(6)/3, sqrt(6)/3).
struct WeakLimitDensity {
    double c = 0.0;
    double a0 = 0.0;
    double a1 = 0.0;
    double a2 = 0.0;
};

WeakLimitDensity density_coefficients(const InitialState& init);

// Continuous part only; +infinity where 2 - 3y^2 <= 1e-12 inside the closed support.
double density(const WeakLimitDensity& d, double y);

// P(Y <= y), with the point mass entering through the Heaviside step H(0) = 1.
double cdf(const WeakLimitDensity& d, double y, const Tolerances& tol = {});
// P(Y < y)
double cdf_left(const WeakLimitDensity& d, double y, const Tolerances& tol = {});

// E[Y^r] by quadrature of the continuous part plus the point mass.
double limit_moment(const WeakLimitDensity& d, int r, const Tolerances& tol = {});

// Asymptotic E[(X_t/t)^r] from the momentum-space eigensystem: midpoint rule
// over `grid` points of sum_j h(k,j)^r |<v_j(k), Psi_0>|^2 dk / 2pi.
double momentum_moment(const InitialState& init, int r, std::size_t grid = 1 << 14);

// F_t(y) = sum_{x <= y t} p_t(x)
class EmpiricalCdf {
public:
    explicit EmpiricalCdf(const Distribution& p);

    double operator()(double y) const;
    // Value at x/t and the left limit there.
    double at_site(long x) const;
    double before_site(long x) const;
    std::size_t t() const noexcept { return t_; }

private:
    std::size_t t_;
    long radius_;
    RealVector cumulative_;
};

EmpiricalCdf empirical_rescaled_cdf(const Distribution& p);

// sum_x (x/t)^r p_t(x)
double moment(const Distribution& p, int r);

struct KolmogorovDistance {
    double distance = 0.0;
    double at_y = 0.0;
};

// sup_y |F_t(y) - F(y)| over every y, checking both sides of each jump.
// Sites with |x/t| < exclude_radius are skipped when exclude_radius > 0.
KolmogorovDistance kolmogorov_distance(const Distribution& p, const WeakLimitDensity& d,
                                       double exclude_radius = 0.0, const Tolerances& tol = {});

}  // namespace mcqw::line
