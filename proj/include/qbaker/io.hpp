#ifndef QBAKER_IO_HPP
#define QBAKER_IO_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "qbaker/coherent.hpp"
#include "qbaker/semiclassical.hpp"

namespace qbaker::io {

// Filesystem failures get their own type so callers can tell them apart from
// numerical invariant failures.
struct IoError : std::runtime_error {
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

// Shortest round-trippable decimal form; identical input bits give identical
// text, which is what makes re-runs byte-identical.
std::string fmt(double v);

// Schema "q,p,value", one row per grid cell, position-major.
void write_husimi_csv(const HusimiGrid& grid, const std::string& path);
nlohmann::json husimi_envelope(const HusimiGrid& grid);

// Exact and approximate |<b|B|a>|^2 grids share the husimi CSV schema.
void write_comparison_csvs(const ComparisonReport& rep, const std::string& prefix);
nlohmann::json comparison_json(const ComparisonReport& rep);

void write_hump_catalog_csv(const std::vector<HumpDescriptor>& humps,
                            const std::string& path);

// Psi_kappa^2 over a momentum sweep, long format, one row per (a_p, kappa).
void write_psi_curves_csv(double a1, int r, int samples, const std::string& path);

void write_json(const nlohmann::json& j, const std::string& path);

}  // namespace qbaker::io

#endif
