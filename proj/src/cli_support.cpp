#include "apeuler/cli_support.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "apeuler/errors.hpp"

namespace apeuler::cli {

int exit_code_for(RunStatus s) {
  switch (s) {
    case RunStatus::Completed:
    case RunStatus::Stopped: return kOk;
    case RunStatus::NonPhysical: return kNonPhysical;
    case RunStatus::NoConvergence: return kNoConvergence;
  }
  return kBadConfig;
}

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double to_double(std::string_view s) {
  s = trim(s);
  double v = 0.0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || s.empty())
    throw ConfigError("not a number: '" + std::string(s) + "'");
  return v;
}

int to_int(std::string_view s) {
  s = trim(s);
  int v = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || s.empty())
    throw ConfigError("not an integer: '" + std::string(s) + "'");
  return v;
}

template <class T, class F>
std::vector<T> split_list(std::string_view text, F conv) {
  std::vector<T> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    const auto piece = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    out.push_back(conv(piece));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace

KeyValues parse_config_text(std::string_view text) {
  KeyValues kv;
  int lineno = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ConfigError("config line " + std::to_string(lineno) + ": expected key=value");
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view val = trim(line.substr(eq + 1));
    if (key.empty()) throw ConfigError("config line " + std::to_string(lineno) + ": empty key");
    kv.emplace_back(std::string(key), std::string(val));
  }
  return kv;
}

KeyValues read_config_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot read config file '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_config_text(ss.str());
}

std::vector<std::string> config_to_args(const KeyValues& kv) {
  std::vector<std::string> args;
  for (const auto& [k, v] : kv) {
    std::string key = k;
    for (char& c : key)
      if (c == '_') c = '-';
    if (v == "false") continue;
    args.push_back("--" + key);
    if (v != "true") args.push_back(v);
  }
  return args;
}

DtOverride parse_dt_override(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw ConfigError("dt override must look like N:VALUE");
  DtOverride o{to_int(text.substr(0, colon)), to_double(text.substr(colon + 1))};
  if (o.steps < 0 || !(o.value > 0.0)) throw ConfigError("dt override needs N >= 0 and VALUE > 0");
  return o;
}

std::vector<double> parse_double_list(std::string_view text) { return split_list<double>(text, to_double); }
std::vector<int> parse_int_list(std::string_view text) { return split_list<int>(text, to_int); }

}  // namespace apeuler::cli
