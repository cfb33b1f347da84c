#include "zaqlms/csv.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <stdexcept>
#include <system_error>

#include "zaqlms/errors.hpp"

namespace zaqlms {

namespace {

void put_real(std::ostream& out, double v) {
  if (std::isinf(v)) {
    out << (v > 0 ? "inf" : "-inf");
    return;
  }
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  out.write(buf.data(), end - buf.data());
}

}  // namespace

void write_csv(const std::vector<LearningCurve>& curves, std::ostream& out) {
  if (curves.empty()) {
    throw std::invalid_argument("no learning curves to write");
  }
  const std::size_t n = curves.front().mse_linear.size();
  for (const auto& c : curves) {
    if (c.mse_linear.size() != n || c.mse_db.size() != n) {
      throw std::invalid_argument("learning curves differ in length");
    }
  }

  out << "iteration";
  for (const auto& c : curves) {
    out << ',' << label(c.algorithm) << "_mse," << label(c.algorithm) << "_mse_db";
  }
  out << '\n';
  for (std::size_t i = 0; i < n; ++i) {
    out << i;
    for (const auto& c : curves) {
      out << ',';
      put_real(out, c.mse_linear[i]);
      out << ',';
      put_real(out, c.mse_db[i]);
    }
    out << '\n';
  }
}

void emit_csv(const std::vector<LearningCurve>& curves, const std::filesystem::path& path) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw IoError("cannot open '" + tmp.string() + "' for writing");
    }
    try {
      write_csv(curves, out);
    } catch (...) {
      out.close();
      std::filesystem::remove(tmp);
      throw;
    }
    out.flush();
    if (!out) {
      std::error_code ignored;
      std::filesystem::remove(tmp, ignored);
      throw IoError("write to '" + tmp.string() + "' failed");
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::error_code ignored;
    std::filesystem::remove(tmp, ignored);
    throw IoError("cannot rename '" + tmp.string() + "' to '" + path.string() + "': " +
                  ec.message());
  }
}

}  // namespace zaqlms
