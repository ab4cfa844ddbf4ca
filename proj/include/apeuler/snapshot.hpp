#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "apeuler/config.hpp"
#include "apeuler/grid.hpp"
#include "apeuler/integrator.hpp"

namespace apeuler {

/// In-memory form of a snapshot file. Every number is kept exactly as
/// printed with 17 significant digits, so writing a parsed snapshot
/// reproduces the original bytes.
struct Snapshot {
  static constexpr int kValues = 12;  // x y rho u v p rho_cons mx my E mach vorticity

  double time = 0.0;
  double epsilon = 0.0;
  double gamma = 0.0;
  int nx = 0;
  int ny = 0;
  std::array<double, 4> domain{};  // x_lo x_hi y_lo y_hi
  DtOverride dt_override;

  struct Row {
    int j = 0;
    int k = 0;
    std::array<double, kValues> values{};
  };
  std::vector<Row> rows;  // k-major, then j
};

Snapshot make_snapshot(const DualState& state, const GridSpec& grid, const SolverConfig& cfg);

void write_snapshot(std::ostream& os, const Snapshot& snap);
std::string snapshot_to_string(const Snapshot& snap);
/// Throws std::runtime_error on malformed input.
Snapshot parse_snapshot(std::istream& is);
Snapshot parse_snapshot(const std::string& text);

/// Writes the file; I/O failures are raised as std::runtime_error with the OS message.
void write_snapshot_file(const std::string& path, const Snapshot& snap);

}  // namespace apeuler
