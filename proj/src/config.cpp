#include "zaqlms/config.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>
#include <vector>

#include "zaqlms/errors.hpp"

namespace zaqlms {

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::string_view trim(std::string_view s, std::size_t& offset) {
  std::size_t begin = 0;
  while (begin < s.size() && std::isspace(static_cast<unsigned char>(s[begin]))) {
    ++begin;
  }
  std::size_t end = s.size();
  while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1]))) {
    --end;
  }
  offset += begin;
  return s.substr(begin, end - begin);
}

std::vector<Token> split_list(const Token& value, std::size_t line) {
  std::vector<Token> items;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = value.text.find(',', start);
    const std::size_t stop = comma == std::string_view::npos ? value.text.size() : comma;
    std::size_t column = value.column + start;
    const std::string_view item = trim(value.text.substr(start, stop - start), column);
    if (item.empty()) {
      throw ConfigError("empty list element", line, column);
    }
    items.push_back({item, column});
    if (comma == std::string_view::npos) {
      break;
    }
    start = comma + 1;
  }
  return items;
}

double parse_real(const Token& tok, std::size_t line) {
  std::string_view s = tok.text;
  if (!s.empty() && s.front() == '+') {
    s.remove_prefix(1);
  }
  double v = 0.0;
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || end != s.data() + s.size() || std::isnan(v)) {
    throw ConfigError("expected a real number, got '" + std::string(tok.text) + "'", line,
                      tok.column);
  }
  return v;
}

template <typename Int>
Int parse_unsigned(const Token& tok, std::size_t line) {
  Int v = 0;
  auto [end, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), v);
  if (ec != std::errc{} || end != tok.text.data() + tok.text.size()) {
    throw ConfigError("expected a non-negative integer, got '" + std::string(tok.text) + "'", line,
                      tok.column);
  }
  return v;
}

std::string format_real(double v) {
  if (std::isinf(v)) {
    return v > 0 ? "inf" : "-inf";
  }
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), end);
}

const std::set<std::string_view> kRequired{"length", "active_taps", "mu",
                                           "rho",    "num_iterations", "num_runs"};

}  // namespace

ScenarioConfig parse_config(std::string_view text) {
  ScenarioConfig config;
  config.active_taps.clear();
  std::set<std::string, std::less<>> seen;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    if (!line.empty() && line.back() == '\r') {
      line.remove_suffix(1);
    }
    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    std::size_t key_col = 1;
    if (trim(line, key_col).empty()) {
      continue;
    }

    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("expected 'key = value'", line_no, key_col);
    }
    key_col = 1;
    const std::string_view key = trim(line.substr(0, eq), key_col);
    std::size_t value_col = eq + 2;
    const Token value{trim(line.substr(eq + 1), value_col), value_col};
    if (key.empty()) {
      throw ConfigError("missing key before '='", line_no, eq + 1);
    }
    if (value.text.empty()) {
      throw ConfigError("missing value for '" + std::string(key) + "'", line_no, eq + 1);
    }
    if (!seen.insert(std::string(key)).second) {
      throw ConfigError("duplicate key '" + std::string(key) + "'", line_no, key_col);
    }

    if (key == "length") {
      config.length = parse_unsigned<std::size_t>(value, line_no);
    } else if (key == "active_taps") {
      for (const Token& item : split_list(value, line_no)) {
        config.active_taps.push_back(parse_unsigned<std::size_t>(item, line_no));
      }
    } else if (key == "tap_values") {
      for (const Token& item : split_list(value, line_no)) {
        try {
          config.tap_values.push_back(parse_quaternion(item.text));
        } catch (const ParseError& e) {
          throw ConfigError(e.what(), line_no, item.column + e.column() - 1);
        }
      }
    } else if (key == "mu") {
      config.mu = parse_real(value, line_no);
    } else if (key == "rho") {
      config.rho = parse_real(value, line_no);
    } else if (key == "snr_db") {
      config.snr_db = parse_real(value, line_no);
    } else if (key == "num_iterations") {
      config.num_iterations = parse_unsigned<std::size_t>(value, line_no);
    } else if (key == "num_runs") {
      config.num_runs = parse_unsigned<std::size_t>(value, line_no);
    } else if (key == "coloring_len") {
      config.coloring_len = parse_unsigned<std::size_t>(value, line_no);
    } else if (key == "coloring") {
      const auto kind = parse_coloring(value.text);
      if (!kind) {
        throw ConfigError("coloring must be 'quaternion' or 'real'", line_no, value.column);
      }
      config.coloring = *kind;
    } else if (key == "input_power") {
      config.input_power = parse_real(value, line_no);
    } else if (key == "master_seed") {
      config.master_seed = parse_unsigned<std::uint64_t>(value, line_no);
    } else if (key == "algorithms") {
      config.algorithms.clear();
      for (const Token& item : split_list(value, line_no)) {
        const auto algorithm = parse_algorithm(item.text);
        if (!algorithm) {
          throw ConfigError("unknown algorithm '" + std::string(item.text) + "'", line_no,
                            item.column);
        }
        config.algorithms.push_back(*algorithm);
      }
    } else {
      throw ConfigError("unknown key '" + std::string(key) + "'", line_no, key_col);
    }
  }

  for (std::string_view key : kRequired) {
    if (!seen.contains(key)) {
      throw ConfigError(std::string(key) + ": required key is missing");
    }
  }
  validate(config);
  return config;
}

ScenarioConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ConfigError("cannot open config file '" + path.string() + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string render_config(const ScenarioConfig& config) {
  auto join = [](const auto& items, auto&& fmt) {
    std::string out;
    for (std::size_t t = 0; t < items.size(); ++t) {
      if (t > 0) out += ", ";
      out += fmt(items[t]);
    }
    return out;
  };

  std::string out;
  out += "length = " + std::to_string(config.length) + "\n";
  out += "active_taps = " +
         join(config.active_taps, [](std::size_t t) { return std::to_string(t); }) + "\n";
  if (!config.tap_values.empty()) {
    out += "tap_values = " +
           join(config.tap_values, [](const Quaternion& q) { return to_string(q); }) + "\n";
  }
  out += "mu = " + format_real(config.mu) + "\n";
  out += "rho = " + format_real(config.rho) + "\n";
  out += "snr_db = " + format_real(config.snr_db) + "\n";
  out += "num_iterations = " + std::to_string(config.num_iterations) + "\n";
  out += "num_runs = " + std::to_string(config.num_runs) + "\n";
  out += "coloring_len = " + std::to_string(config.coloring_len) + "\n";
  out += "coloring = " + std::string(label(config.coloring)) + "\n";
  out += "input_power = " + format_real(config.input_power) + "\n";
  out += "master_seed = " + std::to_string(config.master_seed) + "\n";
  out += "algorithms = " +
         join(config.algorithms, [](Algorithm a) { return std::string(label(a)); }) + "\n";
  return out;
}

}  // namespace zaqlms
