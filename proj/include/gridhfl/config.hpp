#pragma once

// Run configuration: resource caps, output format and the sampling seed.
// Settings come from defaults, then a key=value file, then the environment.

#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iterator>
#include <string>
#include <string_view>

#include "gridhfl/complex.hpp"
#include "gridhfl/errors.hpp"

namespace gridhfl {

/// Overrides both grid caps (full homology and boundary solves) when set.
inline constexpr const char* kMaxGridEnv = "GRIDHFL_MAX_K";

struct RunConfig {
  ResourceCaps caps;
  std::uint64_t seed = 20090511;
  std::string format = "json";  // json | table
  int threads = 1;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

template <class T>
T parse_number(std::string_view key, std::string_view value) {
  T out{};
  const auto* end = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc{} || ptr != end) {
    throw InputError("config: bad value '" + std::string(value) + "' for " + std::string(key));
  }
  return out;
}

inline int parse_cap(std::string_view key, std::string_view value) {
  const int v = parse_number<int>(key, value);
  if (v < 1) throw InputError("config: " + std::string(key) + " must be positive");
  return v;
}

}  // namespace detail

inline void apply_setting(RunConfig& cfg, std::string_view key, std::string_view value) {
  if (key == "max_k") {
    cfg.caps.homology_k = cfg.caps.boundary_k = detail::parse_cap(key, value);
  } else if (key == "homology_k") {
    cfg.caps.homology_k = detail::parse_cap(key, value);
  } else if (key == "boundary_k") {
    cfg.caps.boundary_k = detail::parse_cap(key, value);
  } else if (key == "minus_k") {
    cfg.caps.minus_k = detail::parse_cap(key, value);
  } else if (key == "seed") {
    cfg.seed = detail::parse_number<std::uint64_t>(key, value);
  } else if (key == "threads") {
    cfg.threads = detail::parse_cap(key, value);
  } else if (key == "format") {
    if (value != "json" && value != "table") throw InputError("config: format must be json or table");
    cfg.format = std::string(value);
  } else {
    throw InputError("config: unknown key '" + std::string(key) + "'");
  }
}

/// Lines of `key = value`; blank lines and lines starting with # are skipped.
inline void apply_config_text(RunConfig& cfg, std::string_view text) {
  int line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    auto line = detail::trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw InputError("config line " + std::to_string(line_no) + ": expected key=value");
    }
    apply_setting(cfg, detail::trim(line.substr(0, eq)), detail::trim(line.substr(eq + 1)));
  }
}

inline void apply_config_file(RunConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read config file " + path);
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  apply_config_text(cfg, text);
}

inline void apply_environment(RunConfig& cfg) {
  if (const char* v = std::getenv(kMaxGridEnv); v != nullptr && *v != '\0') apply_setting(cfg, "max_k", v);
}

}  // namespace gridhfl
