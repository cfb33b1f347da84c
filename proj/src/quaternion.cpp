#include "zaqlms/quaternion.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>

#include "zaqlms/errors.hpp"

namespace zaqlms {

namespace {

std::string format_real(double v) {
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), end);
}

void skip_spaces(std::string_view s, std::size_t& pos) {
  while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) {
    ++pos;
  }
}

}  // namespace

double max_abs_diff(const Quaternion& p, const Quaternion& q) {
  return std::max({std::abs(p.a - q.a), std::abs(p.b - q.b), std::abs(p.c - q.c),
                   std::abs(p.d - q.d)});
}

std::string to_string(const Quaternion& q) {
  std::string out = format_real(q.a);
  const std::array<std::pair<double, char>, 3> parts{{{q.b, 'i'}, {q.c, 'j'}, {q.d, 'k'}}};
  for (const auto& [v, unit] : parts) {
    if (std::signbit(v) && !std::isnan(v)) {
      out += " - " + format_real(-v);
    } else {
      out += " + " + format_real(v);
    }
    out += unit;
  }
  return out;
}

Quaternion parse_quaternion(std::string_view text) {
  Quaternion q;
  std::array<bool, 4> seen{};
  std::size_t pos = 0;
  bool first = true;

  skip_spaces(text, pos);
  if (pos == text.size()) {
    throw ParseError("empty quaternion literal", pos + 1);
  }

  while (pos < text.size()) {
    double sign = 1.0;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1.0 : 1.0;
      ++pos;
      skip_spaces(text, pos);
      if (pos == text.size() || text[pos] == '+' || text[pos] == '-') {
        throw ParseError("dangling sign", pos + 1);
      }
    } else if (!first) {
      throw ParseError("expected '+' or '-' between terms", pos + 1);
    }
    first = false;

    const std::size_t term_start = pos;
    double coeff = 1.0;
    bool has_number = false;
    if (pos < text.size() && text[pos] != 'i' && text[pos] != 'j' && text[pos] != 'k') {
      auto [end, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), coeff);
      if (ec != std::errc{}) {
        throw ParseError("expected a number", pos + 1);
      }
      pos = static_cast<std::size_t>(end - text.data());
      has_number = true;
    }

    std::size_t slot = 0;
    if (pos < text.size() && (text[pos] == 'i' || text[pos] == 'j' || text[pos] == 'k')) {
      slot = static_cast<std::size_t>(text[pos] - 'i') + 1;
      ++pos;
    } else if (!has_number) {
      throw ParseError("expected a number or unit", term_start + 1);
    }
    if (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) {
      throw ParseError("unknown quaternion unit", pos + 1);
    }
    if (seen[slot]) {
      throw ParseError("duplicate quaternion component", term_start + 1);
    }
    seen[slot] = true;

    const double v = sign * coeff;
    if (!std::isfinite(v)) {
      throw ParseError("non-finite quaternion component", term_start + 1);
    }
    switch (slot) {
      case 0: q.a = v; break;
      case 1: q.b = v; break;
      case 2: q.c = v; break;
      default: q.d = v; break;
    }
    skip_spaces(text, pos);
  }
  return q;
}

}  // namespace zaqlms
