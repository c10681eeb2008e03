#include "mcqw/markov.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <set>
#include <string>

#include "mcqw/errors.hpp"

namespace mcqw {

TransitionMatrix::TransitionMatrix(RealMatrix entries, const Tolerances& tol)
    : entries_(std::move(entries)) {
    if (entries_.rows() == 0 || !entries_.square())
        throw Error(ErrorKind::InvalidInput, "transition matrix must be square and non-empty");
    for (std::size_t j = 0; j < n(); ++j) {
        double sum = 0.0;
        for (std::size_t k = 0; k < n(); ++k) {
            const double v = entries_(j, k);
            if (!(v >= 0.0 && v <= 1.0))
                throw Error(ErrorKind::InvalidInput, "entry (" + std::to_string(j + 1) + "," +
                                                         std::to_string(k + 1) + ") is outside [0, 1]");
            sum += v;
        }
        if (std::abs(sum - 1.0) > tol.row_sum)
            throw Error(ErrorKind::InvalidInput,
                        "row " + std::to_string(j + 1) + " does not sum to 1");
    }
}

bool TransitionMatrix::is_symmetric(double tol) const {
    for (std::size_t j = 0; j < n(); ++j)
        for (std::size_t k = j + 1; k < n(); ++k)
            if (std::abs(entries_(j, k) - entries_(k, j)) > tol) return false;
    return true;
}

TransitionMatrix from_adjacency(const std::vector<Edge>& edges, std::size_t n) {
    if (n == 0) throw Error(ErrorKind::InvalidInput, "graph has no vertices");
    std::vector<std::set<std::size_t>> out(n);
    for (const auto& [j, k] : edges) {
        if (j >= n || k >= n)
            throw Error(ErrorKind::InvalidInput, "edge (" + std::to_string(j) + "," + std::to_string(k) +
                                                     ") references a vertex outside [0, n)");
        out[j].insert(k);
    }
    RealMatrix m(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        if (out[j].empty())
            throw Error(ErrorKind::ZeroOutDegree, "vertex " + std::to_string(j + 1) + " has no outgoing edge");
        const double w = 1.0 / static_cast<double>(out[j].size());
        for (std::size_t k : out[j]) m(j, k) = w;
    }
    return TransitionMatrix(std::move(m));
}

RealVector stationary_distribution(const TransitionMatrix& p, const Tolerances& tol) {
    const std::size_t n = p.n();
    // Reduce (P^T - I) to row echelon form with partial pivoting.
    RealMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = p(j, i) - (i == j ? 1.0 : 0.0);

    std::vector<std::size_t> pivot_col;
    std::vector<bool> is_pivot(n, false);
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < n; ++col) {
        std::size_t best = row;
        for (std::size_t r = row + 1; r < n; ++r)
            if (std::abs(a(r, col)) > std::abs(a(best, col))) best = r;
        if (std::abs(a(best, col)) <= tol.rank) continue;
        if (best != row)
            for (std::size_t c = 0; c < n; ++c) std::swap(a(best, c), a(row, c));
        for (std::size_t r = row + 1; r < n; ++r) {
            const double f = a(r, col) / a(row, col);
            if (f == 0.0) continue;
            for (std::size_t c = col; c < n; ++c) a(r, c) -= f * a(row, c);
            a(r, col) = 0.0;
        }
        pivot_col.push_back(col);
        is_pivot[col] = true;
        ++row;
    }

    const std::size_t nullity = n - pivot_col.size();
    if (nullity > 1)
        throw Error(ErrorKind::NonUniqueStationary,
                    "stationary distribution is not unique (eigenvalue-1 eigenspace has dimension " +
                        std::to_string(nullity) + ")");
    if (nullity == 0)
        throw Error(ErrorKind::InvalidInput, "no stationary vector found; matrix is not stochastic");

    const auto free_col = static_cast<std::size_t>(
        std::find(is_pivot.begin(), is_pivot.end(), false) - is_pivot.begin());
    RealVector x(n, 0.0);
    x[free_col] = 1.0;
    for (std::size_t r = pivot_col.size(); r-- > 0;) {
        const std::size_t c = pivot_col[r];
        double s = 0.0;
        for (std::size_t cc = c + 1; cc < n; ++cc) s += a(r, cc) * x[cc];
        x[c] = -s / a(r, c);
    }

    const double total = std::accumulate(x.begin(), x.end(), 0.0);
    for (double& v : x) {
        v /= total;
        if (v <= 0.0 && v > -tol.rank) v = 0.0;
    }
    return x;
}

namespace {

std::vector<std::vector<bool>> reachability(const TransitionMatrix& p) {
    const std::size_t n = p.n();
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (std::size_t s = 0; s < n; ++s) {
        std::queue<std::size_t> q;
        q.push(s);
        reach[s][s] = true;
        while (!q.empty()) {
            const std::size_t u = q.front();
            q.pop();
            for (std::size_t v = 0; v < n; ++v)
                if (p(u, v) > 0.0 && !reach[s][v]) {
                    reach[s][v] = true;
                    q.push(v);
                }
        }
    }
    return reach;
}

std::size_t class_period(const TransitionMatrix& p, const std::vector<std::size_t>& cls) {
    const std::size_t n = p.n();
    std::vector<bool> member(n, false);
    for (std::size_t v : cls) member[v] = true;

    std::vector<long> level(n, -1);
    std::queue<std::size_t> q;
    level[cls.front()] = 0;
    q.push(cls.front());
    while (!q.empty()) {
        const std::size_t u = q.front();
        q.pop();
        for (std::size_t v = 0; v < n; ++v)
            if (member[v] && p(u, v) > 0.0 && level[v] < 0) {
                level[v] = level[u] + 1;
                q.push(v);
            }
    }
    long g = 0;
    for (std::size_t u : cls)
        for (std::size_t v : cls)
            if (p(u, v) > 0.0) g = std::gcd(g, std::abs(level[u] + 1 - level[v]));
    return g == 0 ? 1 : static_cast<std::size_t>(g);
}

}  // namespace

std::vector<std::vector<std::size_t>> strongly_connected_components(const TransitionMatrix& p) {
    const std::size_t n = p.n();
    const auto reach = reachability(p);
    std::vector<bool> assigned(n, false);
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t i = 0; i < n; ++i) {
        if (assigned[i]) continue;
        std::vector<std::size_t> comp;
        for (std::size_t j = i; j < n; ++j)
            if (reach[i][j] && reach[j][i]) {
                comp.push_back(j);
                assigned[j] = true;
            }
        out.push_back(std::move(comp));
    }
    return out;
}

ChainProfile classify(const TransitionMatrix& p, const Tolerances& tol) {
    const std::size_t n = p.n();
    ChainProfile out;
    const auto comps = strongly_connected_components(p);
    out.irreducible = comps.size() == 1;

    // Closed classes reachable from state 0; the first one is used for the period.
    const auto reach = reachability(p);
    const std::vector<std::size_t>* recurrent = nullptr;
    for (const auto& comp : comps) {
        if (!reach[0][comp.front()]) continue;
        bool closed = true;
        for (std::size_t u : comp)
            for (std::size_t v = 0; v < n && closed; ++v)
                if (p(u, v) > 0.0 && !std::binary_search(comp.begin(), comp.end(), v)) closed = false;
        if (closed) {
            recurrent = &comp;
            break;
        }
    }
    out.period = class_period(p, *recurrent);
    out.aperiodic = out.period == 1;
    out.ergodic = out.irreducible && out.aperiodic;

    try {
        RealVector pi = stationary_distribution(p, tol);
        bool balanced = true;
        for (std::size_t j = 0; j < n && balanced; ++j)
            for (std::size_t k = j + 1; k < n; ++k)
                if (std::abs(pi[j] * p(j, k) - pi[k] * p(k, j)) > tol.detailed_balance) {
                    balanced = false;
                    break;
                }
        out.reversible = balanced;
        out.stationary = std::move(pi);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::NonUniqueStationary) throw;
    }
    return out;
}

std::string property_label(const ChainProfile& profile) {
    std::string label;
    if (!profile.irreducible)
        label = "redu";
    else if (profile.aperiodic)
        label = "ergodic";
    else
        label = "irred, periodic";
    if (profile.reversible.has_value()) label += *profile.reversible ? ", reve" : ", not reve";
    return label;
}

}  // namespace mcqw
