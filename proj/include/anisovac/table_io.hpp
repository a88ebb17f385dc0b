#pragma once

#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "anisovac/vacuum.hpp"

namespace anisovac {

namespace detail {

inline std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream is(line);
  while (std::getline(is, field, ',')) {
    std::size_t a = field.find_first_not_of(" \t\r");
    std::size_t b = field.find_last_not_of(" \t\r");
    out.push_back(a == std::string::npos ? std::string() : field.substr(a, b - a + 1));
  }
  return out;
}

inline const char* tensor_csv_columns[] = {
    "omega", "re_xx", "im_xx", "re_xy", "im_xy", "re_xz", "im_xz",
    "re_yx", "im_yx", "re_yy", "im_yy", "re_yz", "im_yz",
    "re_zx", "im_zx", "re_zy", "im_zy", "re_zz", "im_zz"};

}  // namespace detail

/// Reads a tabulated-vacuum CSV: header row
///   omega,re_xx,im_xx,re_xy,im_xy,... (9 complex components row-major)
/// with an optional trailing `norm` column holding the free-space strength;
/// when present, components are divided by it so the stored tensor is the
/// normalized one. Lines starting with `#` are comments.
inline TabulatedVacuum read_tabulated_csv(std::istream& in) {
  std::string line;
  bool header_seen = false;
  bool has_norm = false;
  std::vector<double> omegas;
  std::vector<CorrelationTensor> tensors;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    const auto fields = detail::split_csv_line(line);
    if (!header_seen) {
      if (fields.size() != 19 && fields.size() != 20)
        throw TableFormatError("tabulated CSV header must have 19 columns (plus optional norm)");
      for (std::size_t i = 0; i < 19; ++i)
        if (fields[i] != detail::tensor_csv_columns[i])
          throw TableFormatError("tabulated CSV header column " + std::to_string(i + 1) +
                                 " must be '" + detail::tensor_csv_columns[i] + "', got '" +
                                 fields[i] + "'");
      if (fields.size() == 20) {
        if (fields[19] != "norm")
          throw TableFormatError("trailing tabulated CSV column must be 'norm'");
        has_norm = true;
      }
      header_seen = true;
      continue;
    }
    const std::size_t expected = has_norm ? 20u : 19u;
    if (fields.size() != expected)
      throw TableFormatError("tabulated CSV line " + std::to_string(lineno) + " has " +
                             std::to_string(fields.size()) + " fields, expected " +
                             std::to_string(expected));
    std::vector<double> vals(fields.size());
    for (std::size_t i = 0; i < fields.size(); ++i) {
      std::size_t pos = 0;
      try {
        vals[i] = std::stod(fields[i], &pos);
      } catch (const std::exception&) {
        pos = std::string::npos;
      }
      if (pos != fields[i].size())
        throw TableFormatError("tabulated CSV line " + std::to_string(lineno) +
                               ": cannot parse '" + fields[i] + "'");
    }
    const double norm = has_norm ? vals[19] : 1.0;
    if (!(norm > 0.0))
      throw TableFormatError("tabulated CSV line " + std::to_string(lineno) +
                             ": norm must be > 0");
    CorrelationTensor t;
    t.omega = vals[0];
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        const std::size_t base = 1 + 2 * static_cast<std::size_t>(3 * i + j);
        t.m(i, j) = cplx(vals[base], vals[base + 1]) / norm;
      }
    omegas.push_back(t.omega);
    tensors.push_back(t);
  }
  if (!header_seen) throw TableFormatError("tabulated CSV has no header row");
  if (omegas.empty()) throw TableFormatError("tabulated CSV has no data rows");
  return TabulatedVacuum(std::move(omegas), std::move(tensors));
}

inline TabulatedVacuum read_tabulated_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw TableFormatError("cannot open tabulated CSV '" + path + "'");
  return read_tabulated_csv(in);
}

}  // namespace anisovac
