#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <vector>

#include "CLI11.hpp"
#include "mcqw/errors.hpp"
#include "mcqw/io.hpp"
#include "mcqw/line.hpp"
#include "mcqw/markov.hpp"
#include "mcqw/random_chain.hpp"
#include "mcqw/szegedy.hpp"

namespace mcqw::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

TransitionMatrix load_chain(const RunConfig& cfg) {
    if (cfg.input && cfg.matrix) throw UsageError("give either --input or --matrix, not both");
    if (cfg.input) return io::read_graph_file(*cfg.input);
    if (cfg.matrix) return io::read_matrix_file(*cfg.matrix);
    throw UsageError(cfg.command + " needs --input <graph> or --matrix <file>");
}

double max_distance(const RealVector& a, const RealVector& b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
    return d;
}

RealVector uniform(std::size_t n) { return RealVector(n, 1.0 / static_cast<double>(n)); }

std::string format_matrix(const TransitionMatrix& p) {
    std::ostringstream s;
    s << std::setprecision(12) << '[';
    for (std::size_t j = 0; j < p.n(); ++j) {
        s << (j ? ", [" : "[");
        for (std::size_t k = 0; k < p.n(); ++k) s << (k ? ", " : "") << p(j, k);
        s << ']';
    }
    s << ']';
    return s.str();
}

// "re", "im i", "re+im i" or "re-im i".
std::optional<complex> parse_complex(std::string text) {
    text.erase(std::remove_if(text.begin(), text.end(), [](unsigned char ch) { return std::isspace(ch); }),
               text.end());
    if (text.empty()) return std::nullopt;
    const auto number = [](const std::string& s) -> std::optional<double> {
        if (s.empty() || s == "+") return 1.0;
        if (s == "-") return -1.0;
        try {
            std::size_t used = 0;
            const double v = std::stod(s, &used);
            if (used != s.size()) return std::nullopt;
            return v;
        } catch (const std::exception&) {
            return std::nullopt;
        }
    };
    if (text.back() != 'i') {
        if (text == "+" || text == "-") return std::nullopt;
        const auto v = number(text);
        return v ? std::optional<complex>(complex{*v, 0.0}) : std::nullopt;
    }
    text.pop_back();
    std::size_t split = std::string::npos;
    for (std::size_t i = text.size(); i-- > 1;)
        if ((text[i] == '+' || text[i] == '-') && text[i - 1] != 'e' && text[i - 1] != 'E') {
            split = i;
            break;
        }
    if (split == std::string::npos) {
        const auto im = number(text);
        return im ? std::optional<complex>(complex{0.0, *im}) : std::nullopt;
    }
    const std::string re_text = text.substr(0, split);
    const auto re = re_text == "+" || re_text == "-" ? std::nullopt : number(re_text);
    const auto im = number(text.substr(split));
    if (!re || !im) return std::nullopt;
    return complex{*re, *im};
}

line::InitialState parse_init(const std::string& text, std::ostream& err) {
    std::vector<complex> amps;
    std::stringstream fields(text);
    std::string field;
    while (std::getline(fields, field, ',')) {
        const auto z = parse_complex(field);
        if (!z) throw UsageError("cannot read amplitude '" + field + "' in --init");
        amps.push_back(*z);
    }
    if (amps.size() != 3) throw UsageError("--init needs exactly three amplitudes a,b,c");
    const double total = std::norm(amps[0]) + std::norm(amps[1]) + std::norm(amps[2]);
    // Rounded input such as 0.5774,0.5774,0.5774 is renormalized; anything
    // further off is rejected.
    if (std::abs(total - 1.0) > 1e-12) {
        if (std::abs(total - 1.0) > 1e-3)
            throw Error(ErrorKind::InvalidInput, "normalization failure: |a|^2+|b|^2+|c|^2 = " + std::to_string(total));
        err << "note: renormalized --init (|a|^2+|b|^2+|c|^2 was " << std::setprecision(12) << total << ")\n";
        const double scale = 1.0 / std::sqrt(total);
        for (complex& z : amps) z *= scale;
    }
    return line::InitialState::make(amps[0], amps[1], amps[2]);
}

// Writes to --out when given, otherwise to the supplied stream.
class Sink {
public:
    Sink(const std::optional<std::string>& path, std::ostream& fallback) {
        if (path) {
            file_.open(*path);
            if (!file_) throw std::runtime_error("cannot write '" + *path + "'");
        }
        stream_ = path ? static_cast<std::ostream*>(&file_) : &fallback;
    }
    std::ostream& get() { return *stream_; }

private:
    std::ofstream file_;
    std::ostream* stream_;
};

int cmd_analyze(const RunConfig& cfg, std::ostream& out) {
    const TransitionMatrix p = load_chain(cfg);
    const ChainProfile profile = classify(p);
    const QuantizedWalk walk(p);
    const SpectralBasis basis = spectral_basis(walk);
    const EdgeState alpha0 = uniform_initial_state(walk);
    const RealVector limit = limiting_distribution(walk, basis, alpha0);
    const RealVector empirical = cesaro_average(walk, alpha0, cfg.cesaro_steps);

    Sink sink(cfg.out, out);
    std::ostream& o = sink.get();
    o << std::setprecision(12);
    o << "P: " << format_matrix(p) << '\n';
    o << "properties: " << property_label(profile) << '\n';
    o << "period: " << profile.period << '\n';
    o << "pi: " << (profile.stationary ? io::format_vector(*profile.stationary) : std::string("non-unique")) << '\n';
    o << "P_inf (analytic): " << io::format_vector(limit) << '\n';
    o << "P_T (T=" << cfg.cesaro_steps << "): " << io::format_vector(empirical) << '\n';
    if (profile.stationary) {
        const double gap = max_distance(*profile.stationary, limit);
        o << "pi vs P_inf: " << (gap <= cfg.tol ? "equal" : "DIFFER") << " (max |diff| = " << gap << ")\n";
    } else {
        o << "pi vs P_inf: no unique stationary distribution\n";
    }
    return kOk;
}

int cmd_quantize(const RunConfig& cfg, std::ostream& out) {
    const QuantizedWalk walk(load_chain(cfg));
    const SpectralBasis basis = spectral_basis(walk);
    Sink sink(cfg.out, out);
    io::write_spectral_report(sink.get(), basis, uniform_initial_state(walk));
    return kOk;
}

int cmd_evolve(const RunConfig& cfg, std::ostream& out) {
    const QuantizedWalk walk(load_chain(cfg));
    const EdgeState state = evolve(walk, uniform_initial_state(walk), cfg.t.value_or(1));
    Sink sink(cfg.out, out);
    io::write_distribution_csv(sink.get(), position_distribution(state));
    return kOk;
}

int cmd_lemmas(const RunConfig& cfg, std::ostream& out) {
    const QuantizedWalk walk(load_chain(cfg));
    const LemmaReport report = verify_lemma_identities(walk);
    Sink sink(cfg.out, out);
    std::ostream& o = sink.get();
    o << std::setprecision(3);
    const auto line = [&](const char* name, const IdentityCheck& c) {
        o << name << ": " << to_string(c.status) << " (cases " << c.cases << ", max error " << c.max_error << ")\n";
    };
    line("lemma1", report.lemma1);
    line("lemma2", report.lemma2);
    line("lemma3", report.lemma3);
    return report.all_passed() ? kOk : kDomain;
}

int cmd_line(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const line::InitialState init = parse_init(cfg.init, err);
    const std::size_t t = cfg.t.value_or(2000);
    const std::size_t radius = cfg.radius.value_or(t + 2);
    const line::Distribution p = line::simulate(init, t, radius);
    const line::WeakLimitDensity d = line::density_coefficients(init);

    const std::filesystem::path dir = cfg.out.value_or(".");
    std::filesystem::create_directories(dir);
    const auto open = [&](const char* name) {
        std::ofstream f(dir / name);
        if (!f) throw std::runtime_error("cannot write '" + (dir / name).string() + "'");
        return f;
    };
    {
        auto f = open("line_distribution.csv");
        io::write_line_distribution_csv(f, p);
    }
    {
        auto f = open("line_density.csv");
        io::write_density_csv(f, d, -1.0, 1.0, 2001);
    }

    out << std::setprecision(12);
    out << "t: " << t << "\nL: " << radius << '\n';
    out << "total probability: " << p.total() << '\n';
    out << "c: " << d.c << "\na0: " << d.a0 << "\na1: " << d.a1 << "\na2: " << d.a2 << '\n';
    if (t == 0) {
        out << "rescaled CDF and moments need t >= 1; skipped\n";
        return kOk;
    }
    {
        auto f = open("line_cdf.csv");
        io::write_cdf_comparison_csv(f, p, d);
    }
    const line::KolmogorovDistance ks = line::kolmogorov_distance(p, d);
    out << "KS distance: " << ks.distance << " (at y = " << ks.at_y << ")\n";
    auto f = open("line_moments.csv");
    f << std::setprecision(12) << "r,empirical,limit\n";
    for (int r = 1; r <= 2; ++r) {
        const double emp = line::moment(p, r);
        const double lim = line::limit_moment(d, r);
        f << r << ',' << emp << ',' << lim << '\n';
        out << "moment " << r << ": empirical " << emp << ", limit " << lim << '\n';
    }
    return kOk;
}

int cmd_conjecture_probe(const RunConfig& cfg, std::ostream& out) {
    if (cfg.trials == 0) throw UsageError("--trials must be at least 1");
    Sink sink(cfg.out, out);
    std::ostream& o = sink.get();
    o << std::setprecision(6) << std::scientific;
    o << "trial,n,irreducible,reversible,dist_pinf_pi,dist_pinf_uniform,conjecture,candidate\n";

    std::size_t candidates = 0;
    const auto probe = [&](std::size_t trial, const TransitionMatrix& p) {
        const ChainProfile profile = classify(p);
        const QuantizedWalk walk(p);
        const RealVector limit = limiting_distribution(walk, spectral_basis(walk), uniform_initial_state(walk));
        const double to_pi = profile.stationary ? max_distance(limit, *profile.stationary) : NAN;
        const double to_uniform = max_distance(limit, uniform(p.n()));
        const bool reversible = profile.reversible.value_or(false);
        std::string conjecture = "-";
        bool candidate = false;
        if (profile.irreducible && reversible) {
            conjecture = "1";
            candidate = to_pi > cfg.tol;
        } else if (profile.irreducible && !reversible) {
            conjecture = "2";
            candidate = to_uniform > cfg.tol;
        }
        candidates += candidate ? 1 : 0;
        o << trial << ',' << p.n() << ',' << (profile.irreducible ? "yes" : "no") << ','
          << (profile.reversible ? (*profile.reversible ? "yes" : "no") : "n/a") << ',' << to_pi << ','
          << to_uniform << ',' << conjecture << ',' << (candidate ? "yes" : "no") << '\n';
    };

    if (cfg.input || cfg.matrix) {
        probe(0, load_chain(cfg));
    } else {
        if (cfg.n == 0) throw UsageError("--n must be at least 1");
        SplitMix64 rng(cfg.seed);
        // Alternate reversible and generic chains so both conjectures get exercised.
        for (std::size_t i = 0; i < cfg.trials; ++i)
            probe(i, i % 2 == 0 ? random_reversible_chain(cfg.n, rng) : random_dirichlet_chain(cfg.n, rng));
    }
    o << "# counterexample candidates (distance > " << cfg.tol << "): " << candidates << '\n';
    return kOk;
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        if (cfg.command == "analyze") return cmd_analyze(cfg, out);
        if (cfg.command == "quantize") return cmd_quantize(cfg, out);
        if (cfg.command == "evolve") return cmd_evolve(cfg, out);
        if (cfg.command == "lemmas") return cmd_lemmas(cfg, out);
        if (cfg.command == "line") return cmd_line(cfg, out, err);
        if (cfg.command == "conjecture-probe") return cmd_conjecture_probe(cfg, out);
        err << "error: unknown command '" << cfg.command << "'\n";
        return kUsage;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kParse;
    } catch (const Error& e) {
        err << "error [" << to_string(e.kind()) << "]: " << e.what() << '\n';
        return kDomain;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kDomain;
    }
}

int main_with_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Quantized Markov chain walks: limiting distributions and the lazy line walk"};
    app.require_subcommand(1);
    RunConfig cfg;

    app.add_option("--input", cfg.input, "Edge-list graph file (header 'n <count>', 1-indexed 'j k' lines)");
    app.add_option("--matrix", cfg.matrix, "JSON matrix file {\"n\": .., \"rows\": [[..], ..]}");
    app.add_option("--T", cfg.cesaro_steps, "Steps in the Cesaro average")->check(CLI::PositiveNumber);
    app.add_option("--t", cfg.t, "Time steps to evolve");
    app.add_option("--L", cfg.radius, "Lattice truncation radius (default t + 2)");
    app.add_option("--init", cfg.init, "Line initial amplitudes a,b,c (complex as re+imi)");
    app.add_option("--seed", cfg.seed, "Seed for random chains");
    app.add_option("--trials", cfg.trials, "Random chains to probe");
    app.add_option("--n", cfg.n, "Vertex count of random chains");
    app.add_option("--out", cfg.out, "Output file (directory for 'line')");
    app.add_option("--tol", cfg.tol, "Distance treated as equal in reports");

    const std::vector<std::pair<const char*, const char*>> commands{
        {"analyze", "Chain properties, stationary distribution and limiting walk distributions"},
        {"quantize", "Spectral report of the quantized walk"},
        {"evolve", "Vertex distribution after t steps from the uniform initial state"},
        {"line", "Lazy line walk: distribution, weak-limit CDF, density and moments"},
        {"conjecture-probe", "Compare limiting distributions with pi / uniform on random chains"},
        {"lemmas", "Check the D-eigenvector identities"},
    };
    for (const auto& [name, help] : commands) app.add_subcommand(name, help)->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n' << app.help();
        return kUsage;
    }
    cfg.command = app.get_subcommands().front()->get_name();
    return run(cfg, out, err);
}

}  // namespace mcqw::cli
