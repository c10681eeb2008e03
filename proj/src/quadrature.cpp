#include "mcqw/quadrature.hpp"

#include <cmath>
#include <string>

#include "mcqw/errors.hpp"

namespace mcqw {

namespace {

struct Panel {
    double a, b, fa, fm, fb, whole;
};

double simpson(double a, double b, double fa, double fm, double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double refine(const std::function<double(double)>& f, const Panel& p, double tolerance, int depth) {
    const double m = 0.5 * (p.a + p.b);
    const double lm = 0.5 * (p.a + m);
    const double rm = 0.5 * (m + p.b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = simpson(p.a, m, p.fa, flm, p.fm);
    const double right = simpson(m, p.b, p.fm, frm, p.fb);
    const double delta = left + right - p.whole;
    if (std::abs(delta) <= 15.0 * tolerance) return left + right + delta / 15.0;
    if (depth <= 0)
        throw Error(ErrorKind::QuadratureFailure,
                    "adaptive Simpson exceeded its depth limit near x = " + std::to_string(m));
    return refine(f, {p.a, m, p.fa, flm, p.fm, left}, 0.5 * tolerance, depth - 1) +
           refine(f, {m, p.b, p.fm, frm, p.fb, right}, 0.5 * tolerance, depth - 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tolerance,
                        int max_depth) {
    if (a == b) return 0.0;
    // A single starting panel can accept a wrong answer when the coarse
    // samples happen to agree (e.g. y^2 against a symmetric weight).
    constexpr int kPanels = 16;
    const double h = (b - a) / kPanels;
    double total = 0.0;
    double fa = f(a);
    for (int i = 0; i < kPanels; ++i) {
        const double lo = a + h * i;
        const double hi = i + 1 == kPanels ? b : a + h * (i + 1);
        const double fm = f(0.5 * (lo + hi));
        const double fb = f(hi);
        total += refine(f, {lo, hi, fa, fm, fb, simpson(lo, hi, fa, fm, fb)}, tolerance / kPanels, max_depth);
        fa = fb;
    }
    return total;
}

}  // namespace mcqw
