#include "qbaker/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace qbaker::io {

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream f(path);
    if (!f) throw IoError("cannot open " + path + " for writing");
    return f;
}

void close_checked(std::ofstream& f, const std::string& path) {
    f.flush();
    if (!f) throw IoError("write failed for " + path);
}

const char* regime_name(RegimeTag tag) {
    switch (tag) {
        case RegimeTag::ThetaZero: return "theta-zero";
        case RegimeTag::ThetaMid: return "theta-mid";
        case RegimeTag::ThetaOne: return "theta-one";
    }
    return "unknown";
}

void write_value_grid(const std::vector<double>& qs, const std::vector<double>& ps,
                      const std::vector<double>& values, const std::string& path) {
    std::ofstream f = open_out(path);
    f << "q,p,value\n";
    for (std::size_t i = 0; i < qs.size(); ++i)
        for (std::size_t k = 0; k < ps.size(); ++k)
            f << fmt(qs[i]) << ',' << fmt(ps[k]) << ','
              << fmt(values[i * ps.size() + k]) << '\n';
    close_checked(f, path);
}

}  // namespace

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_husimi_csv(const HusimiGrid& grid, const std::string& path) {
    write_value_grid(grid.qs, grid.ps, grid.values, path);
}

nlohmann::json husimi_envelope(const HusimiGrid& grid) {
    return nlohmann::json{{"D", grid.space.dim},   {"alpha", grid.space.alpha},
                          {"beta", grid.space.beta}, {"nq", grid.nq},
                          {"np", grid.np},           {"eps", grid.eps}};
}

void write_comparison_csvs(const ComparisonReport& rep, const std::string& prefix) {
    write_value_grid(rep.b1s, rep.b2s, rep.exact_sq, prefix + "_exact.csv");
    write_value_grid(rep.b1s, rep.b2s, rep.semi_sq, prefix + "_semi.csv");
}

nlohmann::json comparison_json(const ComparisonReport& rep) {
    nlohmann::json humps = nlohmann::json::array();
    for (std::size_t h = 0; h < rep.humps.size(); ++h) {
        const HumpDescriptor& d = rep.humps[h];
        humps.push_back({{"kappa", d.kappa},
                         {"b1", d.b1},
                         {"b2", d.b2},
                         {"weight", d.weight},
                         {"is_classical", d.is_classical},
                         {"limit_branch", d.limit_branch},
                         {"exact_sq", rep.hump_exact_sq[h]},
                         {"semi_sq", rep.hump_semi_sq[h]},
                         {"rel_error", rep.hump_rel_error[h]}});
    }
    return nlohmann::json{
        {"a", {{"q", rep.a.q}, {"p", rep.a.p}}},
        {"N", rep.params.num_qubits},
        {"n", rep.params.position_bits},
        {"regime", regime_name(rep.regime.tag)},
        {"r", rep.regime.momentum_bits},
        {"nq", rep.nq},
        {"np", rep.np},
        {"eps", rep.eps},
        {"kappa_window", rep.kappa_window},
        {"exact_normalization", rep.exact_normalization},
        {"linf_error", rep.linf_error},
        {"l2_error", rep.l2_error},
        {"humps", humps}};
}

void write_hump_catalog_csv(const std::vector<HumpDescriptor>& humps,
                            const std::string& path) {
    std::ofstream f = open_out(path);
    f << "kappa,b1,b2,weight,is_classical,limit_branch\n";
    for (const HumpDescriptor& d : humps)
        f << d.kappa << ',' << fmt(d.b1) << ',' << fmt(d.b2) << ',' << fmt(d.weight)
          << ',' << (d.is_classical ? 1 : 0) << ',' << (d.limit_branch ? 1 : 0) << '\n';
    close_checked(f, path);
}

void write_psi_curves_csv(double a1, int r, int samples, const std::string& path) {
    if (samples < 1) throw std::invalid_argument("write_psi_curves_csv: samples must be positive");
    const int R = 1 << r;
    const int x1 = static_cast<int>(std::floor(2.0 * a1));
    std::ofstream f = open_out(path);
    f << "a2,kappa,psi_sq,is_classical,limit_branch\n";
    for (int sidx = 0; sidx < samples; ++sidx) {
        const double a2 = (sidx + 0.5) / samples;
        const PhasePoint a{a1, a2};
        const bool limit = psi_kappa_limit_branch(a, r);
        for (int kappa = 0; kappa < 2 * R; ++kappa) {
            const double psi = psi_kappa(a, r, kappa);
            f << fmt(a2) << ',' << kappa << ',' << fmt(psi * psi) << ','
              << (kappa == x1 * R ? 1 : 0) << ',' << (limit ? 1 : 0) << '\n';
        }
    }
    close_checked(f, path);
}

void write_json(const nlohmann::json& j, const std::string& path) {
    std::ofstream f = open_out(path);
    f << j.dump(2) << '\n';
    close_checked(f, path);
}

}  // namespace qbaker::io
