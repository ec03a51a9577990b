#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qbaker/io.hpp"
#include "qbaker/selftest.hpp"
#include "qbaker/version.hpp"

namespace {

using namespace qbaker;
using nlohmann::json;

constexpr int kExitValidation = 1;
constexpr int kExitInvariant = 2;
constexpr int kExitIo = 3;

PhasePoint parse_point(const std::string& text, const char* flag) {
    double q = 0.0, p = 0.0;
    char tail = 0;
    if (std::sscanf(text.c_str(), "%lf,%lf%c", &q, &p, &tail) != 2)
        throw CLI::ValidationError(flag, "expected two comma-separated reals, got '" + text + "'");
    return PhasePoint{q, p};
}

std::vector<int> parse_bits(const std::string& text, const char* flag) {
    std::vector<int> bits;
    for (char c : text) {
        if (c != '0' && c != '1')
            throw CLI::ValidationError(flag, "bit strings may contain only 0 and 1");
        bits.push_back(c - '0');
    }
    return bits;
}

// "p/q" or a bare integer; keeps the slope exact
std::pair<long, long> parse_rational(const std::string& text, const char* flag) {
    long num = 0, den = 1;
    char tail = 0;
    if (std::sscanf(text.c_str(), "%ld/%ld%c", &num, &den, &tail) == 2) return {num, den};
    if (std::sscanf(text.c_str(), "%ld%c", &num, &tail) == 1) return {num, 1};
    throw CLI::ValidationError(flag, "expected an integer or a ratio like 1/2, got '" + text + "'");
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string trimmed(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

// Flat key = value config support: the file's entries become --key=value
// tokens appended after the real command line, skipping keys the command
// line already sets, so explicit flags always win. All type conversion and
// range checking still happens in the regular parse.
std::vector<std::string> apply_config_file(const std::vector<std::string>& args) {
    std::string path;
    std::vector<std::string> out;
    for (std::size_t i = 0; i < args.size(); ++i) {
        const std::string& t = args[i];
        if (t == "--config") {
            if (i + 1 >= args.size())
                throw CLI::ValidationError("--config", "expected a file path");
            path = args[++i];
        } else if (t.rfind("--config=", 0) == 0) {
            path = t.substr(9);
        } else {
            out.push_back(t);
        }
    }
    if (path.empty()) return out;

    std::ifstream f(path);
    if (!f) throw CLI::ValidationError("--config", "cannot read " + path);
    auto given = [&](const std::string& key) {
        const std::string flag = "--" + key;
        for (const std::string& t : out)
            if (t == flag || t.rfind(flag + "=", 0) == 0) return true;
        return false;
    };
    std::string line;
    int lineno = 0;
    while (std::getline(f, line)) {
        ++lineno;
        const std::string text = trimmed(line);
        if (text.empty() || text[0] == '#') continue;
        const auto eq = text.find('=');
        if (eq == std::string::npos)
            throw CLI::ValidationError(
                "--config", path + ":" + std::to_string(lineno) + ": expected key = value");
        const std::string key = trimmed(text.substr(0, eq));
        std::string value = trimmed(text.substr(eq + 1));
        if (value.size() >= 2 && (value.front() == '"' || value.front() == '\'') &&
            value.back() == value.front())
            value = value.substr(1, value.size() - 2);
        if (key.empty())
            throw CLI::ValidationError(
                "--config", path + ":" + std::to_string(lineno) + ": empty key");
        if (!given(key)) out.push_back("--" + key + "=" + value);
    }
    return out;
}

void add_config_flag(CLI::App& sub) {
    static std::string sink;
    sub.add_option("--config", sink,
                   "flat key = value file supplying defaults for this command's flags; "
                   "explicit flags override it");
}

json meta_envelope(const std::string& command, json config, double wall_seconds) {
    return json{{"command", command},
                {"config", std::move(config)},
                {"version", kVersion},
                {"wall_time_seconds", wall_seconds}};
}

struct HusimiArgs {
    int N = 0;
    int n = -1;
    int r = -1;
    std::string state;
    int nq = 64;
    int np = 64;
    double eps = kDefaultEps;
    std::string out = "husimi";
};

int cmd_husimi(const HusimiArgs& a) {
    const auto t0 = std::chrono::steady_clock::now();
    const TorusSpace space = TorusSpace::qubits(a.N);

    const auto family = [&]() -> BakerFamilyParams {
        if (a.n >= 0 && a.r >= 0)
            throw CLI::ValidationError("--n/--r", "give at most one of the two");
        if (a.n >= 0) return BakerFamilyParams::from_n(a.N, a.n);
        if (a.r >= 0) return BakerFamilyParams::from_r(a.N, a.r);
        throw CLI::ValidationError("--state", "this state kind needs --n or --r");
    };

    StateVector state(space);
    const auto colon = a.state.find(':');
    const std::string kind = a.state.substr(0, colon);
    const std::string rest = colon == std::string::npos ? "" : a.state.substr(colon + 1);
    if (kind == "zero") {
        // stays the zero vector; the grid comes out identically zero
    } else if (kind == "coherent") {
        state = coherent_state(space, parse_point(rest, "--state"), a.eps);
    } else if (kind == "bimage") {
        state = baker_apply(coherent_state(space, parse_point(rest, "--state"), a.eps), family());
    } else if (kind == "pf") {
        const auto semi = rest.find(';');
        if (semi == std::string::npos)
            throw CLI::ValidationError("--state", "pf takes XBITS;ABITS");
        const std::vector<int> x = parse_bits(rest.substr(0, semi), "--state");
        const std::vector<int> ab = parse_bits(rest.substr(semi + 1), "--state");
        if (static_cast<int>(x.size() + ab.size()) != a.N)
            throw CLI::ValidationError("--state", "pf bit counts must add up to N");
        if (a.n >= 0 && a.n != static_cast<int>(x.size()))
            throw CLI::ValidationError("--state", "pf position bits disagree with --n");
        state = pf_basis_state(space, x, ab);
    } else {
        throw CLI::ValidationError("--state", "unknown state kind '" + kind + "'");
    }

    const HusimiGrid grid = husimi(state, a.nq, a.np, a.eps);
    io::write_husimi_csv(grid, a.out + ".csv");

    json config{{"N", a.N},   {"state", a.state}, {"nq", a.nq},
                {"np", a.np}, {"eps", a.eps},     {"out", a.out}};
    if (a.n >= 0) config["n"] = a.n;
    if (a.r >= 0) config["r"] = a.r;
    json envelope = meta_envelope("husimi", config, seconds_since(t0));
    envelope["grid"] = io::husimi_envelope(grid);
    io::write_json(envelope, a.out + "_meta.json");
    return 0;
}

struct CompareArgs {
    int N = 0;
    int n = -1;
    int r = -1;
    std::string theta;
    int s = 0;
    std::string a_text;
    int nq = 64;
    int np = 64;
    double eps = kDefaultEps;
    int kappa_window = -1;
    bool exact_normalization = false;
    std::string out = "compare";
};

int cmd_compare(const CompareArgs& c) {
    const auto t0 = std::chrono::steady_clock::now();
    const int picked = (c.n >= 0) + (c.r >= 0) + (!c.theta.empty());
    if (picked != 1)
        throw CLI::ValidationError("--n/--r/--theta", "give exactly one way to pick the family member");
    if (c.np % 2 != 0) throw CLI::ValidationError("--np", "momentum grid size must be even");

    BakerFamilyParams params = BakerFamilyParams::from_n(std::max(c.N, 1), 1);
    SemiclassicalRegime regime = SemiclassicalRegime::theta_zero();
    if (c.n >= 0) {
        params = BakerFamilyParams::from_n(c.N, c.n);
        regime = SemiclassicalRegime::theta_zero();
    } else if (c.r >= 0) {
        params = BakerFamilyParams::from_r(c.N, c.r);
        regime = SemiclassicalRegime::theta_one(c.r);
    } else {
        const auto [num, den] = parse_rational(c.theta, "--theta");
        const LimitPath path(num, den, c.s);
        params = BakerFamilyParams::from_n(c.N, path.n_of(c.N));
        if (num == 0)
            regime = SemiclassicalRegime::theta_zero();
        else if (num == den)
            regime = SemiclassicalRegime::theta_one(params.momentum_bits());
        else
            regime = SemiclassicalRegime::theta_mid();
    }

    const PhasePoint a = parse_point(c.a_text, "--a");
    const ComparisonReport rep = compare_exact_semiclassical(
        a, params, regime, c.nq, c.np, c.eps, c.kappa_window, c.exact_normalization);
    io::write_comparison_csvs(rep, c.out);

    json config{{"N", c.N},     {"a", c.a_text},
                {"nq", c.nq},   {"np", c.np},
                {"eps", c.eps}, {"kappa_window", c.kappa_window},
                {"exact_normalization", c.exact_normalization}, {"out", c.out}};
    if (c.n >= 0) config["n"] = c.n;
    if (c.r >= 0) config["r"] = c.r;
    if (!c.theta.empty()) {
        config["theta"] = c.theta;
        config["s"] = c.s;
    }
    json envelope = meta_envelope("compare", config, seconds_since(t0));
    envelope["report"] = io::comparison_json(rep);
    io::write_json(envelope, c.out + "_meta.json");
    return 0;
}

struct HumpsArgs {
    int r = 0;
    std::string a_text;
    double a1 = -1.0;
    double a2 = -1.0;
    int sweep_a2 = 0;
    std::string out = "humps";
};

int cmd_humps(const HumpsArgs& h) {
    const auto t0 = std::chrono::steady_clock::now();
    const bool point_full = !h.a_text.empty();
    const bool point_split = h.a1 >= 0.0 && h.a2 >= 0.0 && h.sweep_a2 == 0;
    const bool sweep = h.a1 >= 0.0 && h.sweep_a2 > 0;
    if (point_full + point_split + sweep != 1)
        throw CLI::ValidationError(
            "--a/--a1", "give --a Q,P, or --a1 with --a2, or --a1 with --sweep-a2");

    json config{{"r", h.r}, {"out", h.out}};
    json envelope;
    if (sweep) {
        io::write_psi_curves_csv(h.a1, h.r, h.sweep_a2, h.out + "_curves.csv");
        // every emitted sample must carry a normalized hump family
        const int R = 1 << h.r;
        for (int i = 0; i < h.sweep_a2; ++i) {
            const PhasePoint a{h.a1, (i + 0.5) / h.sweep_a2};
            double sum = 0.0;
            for (int kappa = 0; kappa < 2 * R; ++kappa) {
                const double psi = psi_kappa(a, h.r, kappa);
                sum += psi * psi;
            }
            if (std::abs(sum - 1.0) > 1e-10)
                throw std::runtime_error("hump weights failed to sum to 1 at a sweep sample");
        }
        config["a1"] = h.a1;
        config["sweep_a2"] = h.sweep_a2;
        envelope = meta_envelope("humps", config, seconds_since(t0));
    } else {
        const PhasePoint a = point_full ? parse_point(h.a_text, "--a") : PhasePoint{h.a1, h.a2};
        const auto humps = hump_catalog(a, h.r);
        double sum = 0.0;
        for (const auto& d : humps) sum += d.weight;
        if (std::abs(sum - 1.0) > 1e-10)
            throw std::runtime_error("hump weights failed to sum to 1");
        io::write_hump_catalog_csv(humps, h.out + "_catalog.csv");
        config["a"] = json{{"q", a.q}, {"p", a.p}};
        envelope = meta_envelope("humps", config, seconds_since(t0));
        envelope["weight_sum"] = sum;
    }
    io::write_json(envelope, h.out + "_meta.json");
    return 0;
}

struct SelftestArgs {
    int max_N = 10;
    double eps = kDefaultEps;
    unsigned long seed = 12345;
};

int cmd_selftest(const SelftestArgs& s) {
    SelftestOptions opt;
    opt.max_qubits = s.max_N;
    opt.eps = s.eps;
    opt.seed = s.seed;
    const auto rows = run_selftest(opt);
    std::printf("%-32s %12s %10s  %s\n", "invariant", "worst", "tol", "status");
    for (const auto& r : rows)
        std::printf("%-32s %12.3e %10.1e  %s\n", r.name.c_str(), r.worst, r.tolerance,
                    r.pass ? "pass" : "FAIL");
    const bool ok = all_pass(rows);
    std::printf("%s\n", ok ? "all invariants hold" : "invariant failure");
    return ok ? 0 : kExitInvariant;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quantum baker map numerics: propagators, Husimi grids, hump catalogs"};
    app.name("qbaker");
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);
    app.footer("Environment: QBAKER_THREADS caps worker threads (default 1).\n"
               "Exit codes: 0 ok, 1 bad arguments, 2 invariant failure, 3 I/O failure.");

    const auto eps_check = CLI::Range(1e-300, 0.999999, "eps in (0,1)");

    HusimiArgs ha;
    CLI::App* husimi = app.add_subcommand("husimi", "phase-space grid of a chosen state");
    add_config_flag(*husimi);
    husimi->add_option("--N", ha.N, "qubit count, dimension 2^N")->required()->check(CLI::Range(1, 12));
    husimi->add_option("--n", ha.n, "position bits kept by the map")->check(CLI::Range(0, 30));
    husimi->add_option("--r", ha.r, "momentum bits, n = N - r")->check(CLI::Range(0, 30));
    husimi->add_option("--state", ha.state,
                       "coherent:Q,P | pf:XBITS;ABITS | bimage:Q,P | zero")->required();
    husimi->add_option("--nq", ha.nq, "position grid size")->check(CLI::Range(1, 4096));
    husimi->add_option("--np", ha.np, "momentum grid size")->check(CLI::Range(1, 4096));
    husimi->add_option("--eps", ha.eps, "packet truncation tolerance")->check(eps_check);
    husimi->add_option("--out", ha.out, "output path prefix");

    CompareArgs ca;
    CLI::App* compare = app.add_subcommand("compare", "exact vs semiclassical propagator grids");
    add_config_flag(*compare);
    compare->add_option("--N", ca.N, "qubit count")->required()->check(CLI::Range(1, 20));
    compare->add_option("--n", ca.n, "position bits (theta = 0 regime)")->check(CLI::Range(1, 20));
    compare->add_option("--r", ca.r, "momentum bits (theta = 1 regime)")->check(CLI::Range(0, 20));
    compare->add_option("--theta", ca.theta, "limit slope, integer or ratio like 1/2");
    compare->add_option("--s", ca.s, "offset in n = theta N + s");
    compare->add_option("--a", ca.a_text, "initial phase-space point Q,P")->required();
    compare->add_option("--nq", ca.nq, "position grid size")->check(CLI::Range(1, 1024));
    compare->add_option("--np", ca.np, "momentum grid size (even)")->check(CLI::Range(2, 1024));
    compare->add_option("--eps", ca.eps, "packet truncation tolerance")->check(eps_check);
    compare->add_option("--kappa-window", ca.kappa_window,
                        "hump sum half-width; -1 picks the default");
    compare->add_flag("--exact-normalization", ca.exact_normalization,
                      "divide packets by their exact norms");
    compare->add_option("--out", ca.out, "output path prefix");

    HumpsArgs hu;
    CLI::App* humps = app.add_subcommand("humps", "hump catalog and weight curves");
    add_config_flag(*humps);
    humps->add_option("--r", hu.r, "momentum bits")->required()->check(CLI::Range(0, 12));
    humps->add_option("--a", hu.a_text, "phase-space point Q,P");
    humps->add_option("--a1", hu.a1, "position coordinate")->check(CLI::Range(0.0, 1.0));
    humps->add_option("--a2", hu.a2, "momentum coordinate")->check(CLI::Range(0.0, 1.0));
    humps->add_option("--sweep-a2", hu.sweep_a2, "sample count for a momentum sweep")
        ->check(CLI::Range(1, 1 << 20));
    humps->add_option("--out", hu.out, "output path prefix");

    SelftestArgs sa;
    CLI::App* selftest = app.add_subcommand("selftest", "run the full invariant suite");
    add_config_flag(*selftest);
    selftest->add_option("--max-N", sa.max_N, "largest register the suite touches")
        ->check(CLI::Range(1, 16));
    selftest->add_option("--eps", sa.eps, "packet truncation tolerance")->check(eps_check);
    selftest->add_option("--seed", sa.seed, "random point seed");

    try {
        std::vector<std::string> args(argv + 1, argv + argc);
        args = apply_config_file(args);
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitValidation;
    }

    try {
        if (husimi->parsed()) return cmd_husimi(ha);
        if (compare->parsed()) return cmd_compare(ca);
        if (humps->parsed()) return cmd_humps(hu);
        return cmd_selftest(sa);
    } catch (const CLI::ValidationError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitValidation;
    } catch (const io::IoError& e) {
        std::fprintf(stderr, "io error: %s\n", e.what());
        return kExitIo;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitValidation;
    } catch (const std::domain_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitValidation;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "invariant failure: %s\n", e.what());
        return kExitInvariant;
    }
}
