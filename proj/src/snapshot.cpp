#include "apeuler/snapshot.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "apeuler/benchmarks.hpp"

namespace apeuler {

namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double parse_double(const std::string& s) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty()) {
    // stod rejects "nan"/"inf" spellings from some printf implementations.
    if (s == "nan" || s == "-nan") return std::nan("");
    if (s == "inf") return HUGE_VAL;
    if (s == "-inf") return -HUGE_VAL;
    throw std::runtime_error("snapshot: bad number '" + s + "'");
  }
  return v;
}

int parse_int(const std::string& s) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty()) throw std::runtime_error("snapshot: bad integer '" + s + "'");
  return v;
}

constexpr const char* kColumns = "j,k,x,y,rho,u,v,p,rho_cons,mx,my,E,mach,vorticity";

}  // namespace

Snapshot make_snapshot(const DualState& st, const GridSpec& grid, const SolverConfig& cfg) {
  Snapshot s;
  s.time = st.t;
  s.epsilon = cfg.epsilon;
  s.gamma = cfg.gamma;
  s.nx = grid.nx;
  s.ny = grid.ny;
  s.domain = {grid.x_lo, grid.x_hi, grid.y_lo, grid.y_hi};
  s.dt_override = cfg.dt_override;
  const ScalarField mach = local_mach(st.V, grid, cfg.gamma);
  const ScalarField w = vorticity(st.V, grid);
  s.rows.reserve(static_cast<std::size_t>(grid.nx) * grid.ny);
  for (int k = 0; k < grid.ny; ++k) {
    for (int j = 0; j < grid.nx; ++j) {
      Snapshot::Row r;
      r.j = j;
      r.k = k;
      r.values = {grid.xc(j),     grid.yc(k),     st.V.rho()(j, k), st.V.u()(j, k), st.V.v()(j, k), st.V.p()(j, k),
                  st.U[0](j, k),  st.U[1](j, k),  st.U[2](j, k),    st.U[3](j, k),  mach(j, k),     w(j, k)};
      s.rows.push_back(r);
    }
  }
  return s;
}

void write_snapshot(std::ostream& os, const Snapshot& s) {
  os << "# apeuler snapshot\n";
  os << "# time = " << num(s.time) << '\n';
  os << "# epsilon = " << num(s.epsilon) << '\n';
  os << "# gamma = " << num(s.gamma) << '\n';
  os << "# nx = " << s.nx << '\n';
  os << "# ny = " << s.ny << '\n';
  os << "# domain = " << num(s.domain[0]) << ' ' << num(s.domain[1]) << ' ' << num(s.domain[2]) << ' '
     << num(s.domain[3]) << '\n';
  if (s.dt_override.active()) os << "# dt_override = " << s.dt_override.steps << ':' << num(s.dt_override.value) << '\n';
  os << kColumns << '\n';
  for (const auto& r : s.rows) {
    os << r.j << ',' << r.k;
    for (double v : r.values) os << ',' << num(v);
    os << '\n';
  }
}

std::string snapshot_to_string(const Snapshot& s) {
  std::ostringstream os;
  write_snapshot(os, s);
  return os.str();
}

Snapshot parse_snapshot(std::istream& is) {
  Snapshot s;
  std::string line;
  bool saw_columns = false;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      const auto eq = line.find(" = ");
      if (eq == std::string::npos) continue;
      const std::string key = line.substr(2, eq - 2);
      const std::string val = line.substr(eq + 3);
      if (key == "time") s.time = parse_double(val);
      else if (key == "epsilon") s.epsilon = parse_double(val);
      else if (key == "gamma") s.gamma = parse_double(val);
      else if (key == "nx") s.nx = parse_int(val);
      else if (key == "ny") s.ny = parse_int(val);
      else if (key == "domain") {
        std::istringstream ds(val);
        for (double& d : s.domain) {
          std::string tok;
          if (!(ds >> tok)) throw std::runtime_error("snapshot: short domain line");
          d = parse_double(tok);
        }
      } else if (key == "dt_override") {
        const auto colon = val.find(':');
        if (colon == std::string::npos) throw std::runtime_error("snapshot: bad dt_override");
        s.dt_override = {parse_int(val.substr(0, colon)), parse_double(val.substr(colon + 1))};
      }
      continue;
    }
    if (!saw_columns) {
      if (line != kColumns) throw std::runtime_error("snapshot: unexpected column header '" + line + "'");
      saw_columns = true;
      continue;
    }
    std::vector<std::string> tok;
    std::size_t pos = 0;
    while (true) {
      const auto comma = line.find(',', pos);
      tok.push_back(line.substr(pos, comma - pos));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    if (tok.size() != 2 + Snapshot::kValues) throw std::runtime_error("snapshot: wrong field count in '" + line + "'");
    Snapshot::Row r;
    r.j = parse_int(tok[0]);
    r.k = parse_int(tok[1]);
    for (int i = 0; i < Snapshot::kValues; ++i) r.values[i] = parse_double(tok[2 + i]);
    s.rows.push_back(r);
  }
  if (!saw_columns) throw std::runtime_error("snapshot: missing column header");
  if (s.rows.size() != static_cast<std::size_t>(s.nx) * s.ny)
    throw std::runtime_error("snapshot: row count does not match nx*ny");
  return s;
}

Snapshot parse_snapshot(const std::string& text) {
  std::istringstream is(text);
  return parse_snapshot(is);
}

void write_snapshot_file(const std::string& path, const Snapshot& snap) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open '" + path + "': " + std::strerror(errno));
  write_snapshot(f, snap);
  f.flush();
  if (!f) throw std::runtime_error("write to '" + path + "' failed: " + std::strerror(errno));
}

}  // namespace apeuler
