// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>

#include "mcqw/line.hpp"
#include "mcqw/markov.hpp"
#include "mcqw/random_chain.hpp"
#include "mcqw/szegedy.hpp"
#include "support.hpp"

using namespace mcqw;

namespace {

int failures = 0;

class Stopwatch {
public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void report(int id, const char* name, bool ok, const std::string& detail) {
    if (!ok) ++failures;
    std::printf("criterion %2d  %s  %-34s %s\n", id, ok ? "PASS" : "FAIL", name, detail.c_str());
}

std::string fmt(const char* f, auto... args) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

RealVector limit_of(const QuantizedWalk& w) {
    return limiting_distribution(w, spectral_basis(w), uniform_initial_state(w));
}

void reference_analytic() {
    Stopwatch clock;
    double err = 0.0;
    for (int g = 1; g <= 4; ++g) err = std::max(err, test::max_diff(limit_of(QuantizedWalk(test::reference_graph(g))), test::reference_limit(g)));
    const double s = clock.seconds();
    report(1, "reference limits, analytic", err <= 1e-9 && s < 1.0, fmt("max err %.2e (tol 1e-9), %.3f s (< 1 s)", err, s));
}

void reference_empirical() {
    Stopwatch clock;
    double err = 0.0;
    for (int g = 1; g <= 4; ++g) {
        const QuantizedWalk w(test::reference_graph(g));
        err = std::max(err, test::max_diff(cesaro_average(w, uniform_initial_state(w), 20000), test::reference_limit(g)));
    }
    const double s = clock.seconds();
    report(2, "reference limits, Cesaro T=20000", err <= 1e-2 && s < 30.0, fmt("max err %.2e (tol 1e-2), %.3f s (< 30 s)", err, s));
}

void reference_properties() {
    const char* labels[] = {"redu, reve", "ergodic, reve", "ergodic, not reve", "irred, periodic, reve"};
    bool labels_ok = true;
    double err = 0.0;
    for (int g = 1; g <= 4; ++g) {
        const auto profile = classify(test::reference_graph(g));
        labels_ok = labels_ok && property_label(profile) == labels[g - 1];
        if (!profile.stationary) {
            labels_ok = false;
            continue;
        }
        err = std::max(err, test::max_diff(*profile.stationary, test::reference_stationary(g)));
    }
    report(3, "reference chain properties and pi", labels_ok && err <= 1e-10,
           fmt("labels %s, pi max err %.2e (tol 1e-10)", labels_ok ? "match" : "DIFFER", err));
}

void symmetric_uniform() {
    SplitMix64 rng(4004);
    double err = 0.0;
    for (int i = 0; i < 50; ++i) {
        const std::size_t n = 2 + static_cast<std::size_t>(i % 7);
        const auto p = random_symmetric_chain(n, rng);
        err = std::max(err, test::max_diff(limit_of(QuantizedWalk(p)), RealVector(n, 1.0 / static_cast<double>(n))));
    }
    report(4, "symmetric chains -> uniform", err <= 1e-8, fmt("50 chains n=2..8, max err %.2e (tol 1e-8)", err));
}

void oracle_equivalence() {
    Stopwatch clock;
    SplitMix64 rng(5005);
    double err = 0.0;
    for (int i = 0; i < 30; ++i) {
        const std::size_t n = 2 + static_cast<std::size_t>(i % 5);
        const QuantizedWalk w(random_dirichlet_chain(n, rng));
        const auto a0 = uniform_initial_state(w);
        err = std::max(err, test::max_diff(limit_of(w), cesaro_average(w, a0, 50000)));
    }
    report(5, "analytic vs Cesaro T=50000", err <= 5e-3, fmt("30 chains n=2..6, max err %.2e (tol 5e-3), %.2f s", err, clock.seconds()));
}

void construction() {
    std::vector<TransitionMatrix> chains;
    for (int g = 1; g <= 4; ++g) chains.push_back(test::reference_graph(g));
    SplitMix64 rng(6006);
    for (int i = 0; i < 20; ++i) chains.push_back(random_dirichlet_chain(2 + static_cast<std::size_t>(i % 6), rng));
    double worst = 0.0;
    double complement = 0.0;
    for (const auto& p : chains) {
        const QuantizedWalk w(p);
        worst = std::max(worst, construction_defects(w).max());
        for (const auto& v : complement_basis(w)) {
            const auto uv = w.apply(v);
            const auto sv = apply_swap(w.n(), v);
            for (std::size_t i = 0; i < v.size(); ++i) complement = std::max(complement, std::abs(uv[i] + sv[i]));
        }
    }
    const double e = std::max(worst, complement);
    report(6, "construction identities", e <= 1e-10,
           fmt("max defect %.2e, U+S on complement %.2e (tol 1e-10)", worst, complement));
}

void momentum() {
    const double pi = std::numbers::pi;
    double residual = 0.0, modulus = 0.0, velocity = 0.0;
    const double dk = 1e-6;
    for (int i = 0; i < 1024; ++i) {
        const double k = 2.0 * pi * i / 1024.0;
        if (std::abs(1.0 - std::cos(k)) <= 1e-12) continue;
        const auto pt = line::eigen_line(k);
        for (int j = 0; j < 3; ++j) {
            modulus = std::max(modulus, std::abs(std::abs(pt.eigenvalues[j]) - 1.0));
            for (int r = 0; r < 3; ++r) {
                complex s{};
                for (int c = 0; c < 3; ++c) s += pt.uk[r][c] * pt.eigenvectors[j][c];
                residual = std::max(residual, std::abs(s - pt.eigenvalues[j] * pt.eigenvectors[j][r]));
            }
            // Phase derivative of the eigenvalue branch itself.
            const auto lp = line::eigen_line(k + dk).eigenvalues[j];
            const auto lm = line::eigen_line(k - dk).eigenvalues[j];
            const double fd = std::arg(lp / lm) / (2.0 * dk);
            velocity = std::max(velocity, std::abs(fd - pt.velocities[j]));
        }
    }
    const double vmax = std::abs(line::max_group_velocity() - std::sqrt(6.0) / 3.0);
    const bool ok = residual <= 1e-9 && modulus <= 1e-10 && velocity <= 1e-5 && vmax <= 1e-9;
    report(7, "momentum analysis", ok,
           fmt("residual %.1e, |lambda|-1 %.1e, velocity fd %.1e, max h - sqrt(6)/3 %.1e", residual, modulus, velocity,
               vmax));
}

void weak_limit() {
    Stopwatch clock;
    const double s3 = std::sqrt(3.0) / 3.0;
    const auto sym = line::InitialState::make(s3, s3, s3);
    const auto p_sym = line::simulate(sym, 2000);
    const auto d_sym = line::density_coefficients(sym);
    const double ks_sym = line::kolmogorov_distance(p_sym, d_sym).distance;
    const double m2 = line::moment(p_sym, 2);
    const double m2_lim = line::limit_moment(d_sym, 2);
    const double m2_rel = std::abs(m2 - m2_lim) / m2_lim;

    const auto loc = line::InitialState::make(1.0, 0.0, 0.0);
    const auto p_loc = line::simulate(loc, 2000);
    const auto d_loc = line::density_coefficients(loc);
    const auto ks_loc = line::kolmogorov_distance(p_loc, d_loc);
    const bool c_ok = std::abs(d_loc.c - std::sqrt(3.0) / 6.0) <= 1e-12;
    const double s = clock.seconds();

    const bool ok = ks_sym <= 0.05 && m2_rel <= 0.02 && ks_loc.distance <= 0.08 && c_ok && s < 60.0;
    report(8, "weak limit at t=2000", ok,
           fmt("KS sym %.4f (<= 0.05), m2 rel err %.2e (<= 2%%), KS (1,0,0) %.4f at y=%.4f (<= 0.08), c=%.6f, %.2f s",
               ks_sym, m2_rel, ks_loc.distance, ks_loc.at_y, d_loc.c, s));
    // Diagnostic: the localized atom sits on the sites next to the origin, so
    // the sup is attained beside y = 0 at every t. Away from that window:
    const double window = 5.0 / 2000.0;
    const auto away = line::kolmogorov_distance(p_loc, d_loc, window);
    std::printf("              info  KS (1,0,0) for |y| >= %.4f: %.4f; mass on x in {-1,0}: %.4f + %.4f\n", window,
                away.distance, p_loc.at(-1), p_loc.at(0));
}

void density_normalization() {
    SplitMix64 rng(9009);
    double err = 0.0;
    for (int i = 0; i < 20; ++i) {
        std::array<complex, 3> z;
        double total = 0.0;
        for (auto& v : z) {
            v = {rng.uniform() - 0.5, rng.uniform() - 0.5};
            total += std::norm(v);
        }
        const double sc = 1.0 / std::sqrt(total);
        const auto d = line::density_coefficients(line::InitialState::make(z[0] * sc, z[1] * sc, z[2] * sc));
        err = std::max(err, std::abs(line::limit_moment(d, 0) - 1.0));
    }
    report(9, "density normalization", err <= 1e-6, fmt("20 random states, max |c + int f - 1| %.2e (tol 1e-6)", err));
}

void lemmas() {
    Tolerances tol;
    tol.lemma = 1e-9;
    SplitMix64 rng(10010);
    int passed_sym = 0, passed_gen = 0;
    double err = 0.0;
    for (int i = 0; i < 20; ++i) {
        const QuantizedWalk w(random_symmetric_chain(2 + static_cast<std::size_t>(i % 7), rng));
        const auto r = verify_lemma_identities(w, tol, true);
        const bool ok = r.lemma1.status == CheckStatus::Passed && r.lemma2.status == CheckStatus::Passed &&
                        r.lemma3.status == CheckStatus::Passed;
        passed_sym += ok;
        err = std::max({err, r.lemma1.max_error, r.lemma2.max_error, r.lemma3.max_error});
    }
    for (int i = 0; i < 20; ++i) {
        const QuantizedWalk w(random_dirichlet_chain(2 + static_cast<std::size_t>(i % 7), rng));
        const auto r = verify_lemma_identities(w, tol);
        passed_gen += r.lemma1.status == CheckStatus::Passed;
        err = std::max(err, r.lemma1.max_error);
    }
    report(10, "lemma suite", passed_sym == 20 && passed_gen == 20,
           fmt("symmetric %d/20 (lemmas 1-3), general %d/20 (lemma 1), max err %.2e (tol 1e-9)", passed_sym,
               passed_gen, err));
}

}  // namespace

int main() {
    const auto guarded = [](auto f, int id) {
        try {
            f();
        } catch (const std::exception& e) {
            report(id, "exception", false, e.what());
        }
    };
    guarded(reference_analytic, 1);
    guarded(reference_empirical, 2);
    guarded(reference_properties, 3);
    guarded(symmetric_uniform, 4);
    guarded(oracle_equivalence, 5);
    guarded(construction, 6);
    guarded(momentum, 7);
    guarded(weak_limit, 8);
    guarded(density_normalization, 9);
    guarded(lemmas, 10);
    std::printf("%d of 10 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
