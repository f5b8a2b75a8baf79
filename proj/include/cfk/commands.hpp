#pragma once

// Subcommands of the cfk tool. Each returns a RunReport; errors are thrown as
// cfk::Error subclasses and mapped to exit codes by the caller.

#include "cfk/report.hpp"

#include <filesystem>
#include <optional>
#include <string>

namespace cfk {

// $CFK_DATA_DIR if set, else the bundled data directory.
std::filesystem::path data_dir();
std::filesystem::path default_knot_table();

RunReport cmd_torus(int p, int q, const std::optional<std::filesystem::path>& emit_complex);
RunReport cmd_invariants(const std::filesystem::path& file);
RunReport cmd_distance(const std::filesystem::path& a, const std::filesystem::path& b);
RunReport cmd_tensor(const std::filesystem::path& a, const std::filesystem::path& b,
                     const std::filesystem::path& out);
RunReport cmd_kpq(int p, int q);

struct ObstructOptions {
    std::optional<std::string> name;            // one knot of the table; all when unset
    std::optional<std::filesystem::path> table;  // defaults to default_knot_table()
    std::optional<int> tau;                      // with qfile: a single user polynomial
    std::optional<std::filesystem::path> qfile;
};
RunReport cmd_obstruct(const ObstructOptions& opts);

RunReport cmd_validate(const std::filesystem::path& file);

// Coprime grid 1 < p <= pmax, p < q <= qmax. Cells are evaluated on `jobs`
// threads and reported in (p, q) order.
RunReport cmd_sweep(int pmax, int qmax, unsigned jobs, bool full_table);

} // namespace cfk
