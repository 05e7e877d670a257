// Copyright 2026 The vrvi Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "vrvi/matrix_market.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <system_error>

#include "vrvi/errors.h"

namespace vrvi {
namespace {

std::string Lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

double ParseNumber(const std::string& tok) {
  double v = 0.0;
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  if (!tok.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) {
    throw InvalidInputError("MatrixMarket: bad number '" + tok + "'");
  }
  return v;
}

long long ParseIndex(const std::string& tok) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw InvalidInputError("MatrixMarket: bad integer '" + tok + "'");
  }
  return v;
}

// Next non-comment, non-blank line split into tokens.
bool NextTokens(std::istream& in, std::string& line,
                std::istringstream& tokens) {
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '%') continue;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    tokens.clear();
    tokens.str(line);
    return true;
  }
  return false;
}

}  // namespace

std::string FormatDouble(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc()) return "nan";
  return std::string(buf, ptr);
}

Eigen::MatrixXd ReadMatrixMarket(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) {
    throw InvalidInputError("MatrixMarket: empty input");
  }
  std::istringstream header(line);
  std::string banner, object, format, field, symmetry;
  header >> banner >> object >> format >> field >> symmetry;
  if (banner != "%%MatrixMarket" || Lower(object) != "matrix") {
    throw InvalidInputError("MatrixMarket: missing '%%MatrixMarket matrix'");
  }
  format = Lower(format);
  field = Lower(field);
  symmetry = Lower(symmetry);
  if (field != "real" && field != "integer" && field != "double") {
    throw InvalidInputError("MatrixMarket: unsupported field '" + field + "'");
  }
  if (symmetry != "general" && symmetry != "symmetric" &&
      symmetry != "skew-symmetric") {
    throw InvalidInputError("MatrixMarket: unsupported symmetry '" +
                            symmetry + "'");
  }
  std::istringstream tokens;
  if (!NextTokens(in, line, tokens)) {
    throw InvalidInputError("MatrixMarket: missing size line");
  }
  std::string t1, t2, t3;
  tokens >> t1 >> t2;
  const long long m = ParseIndex(t1), n = ParseIndex(t2);
  if (m < 1 || n < 1) throw InvalidInputError("MatrixMarket: bad shape");
  if (symmetry != "general" && m != n) {
    throw InvalidInputError("MatrixMarket: symmetric matrix must be square");
  }
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(m, n);
  const double mirror = symmetry == "skew-symmetric" ? -1.0 : 1.0;

  if (format == "coordinate") {
    if (!(tokens >> t3)) throw InvalidInputError("MatrixMarket: missing nnz");
    const long long count = ParseIndex(t3);
    for (long long k = 0; k < count; ++k) {
      if (!NextTokens(in, line, tokens)) {
        throw InvalidInputError("MatrixMarket: expected " +
                                std::to_string(count) + " entries, got " +
                                std::to_string(k));
      }
      std::string si, sj, sv;
      if (!(tokens >> si >> sj >> sv)) {
        throw InvalidInputError("MatrixMarket: short entry line '" + line +
                                "'");
      }
      const long long i = ParseIndex(si) - 1, j = ParseIndex(sj) - 1;
      if (i < 0 || i >= m || j < 0 || j >= n) {
        throw InvalidInputError("MatrixMarket: index out of range in '" +
                                line + "'");
      }
      const double v = ParseNumber(sv);
      a(i, j) = v;
      if (symmetry != "general" && i != j) a(j, i) = mirror * v;
    }
  } else if (format == "array") {
    if (symmetry != "general") {
      throw InvalidInputError("MatrixMarket: only general array supported");
    }
    // Column-major order.
    for (long long j = 0; j < n; ++j) {
      for (long long i = 0; i < m; ++i) {
        if (!NextTokens(in, line, tokens) || !(tokens >> t1)) {
          throw InvalidInputError("MatrixMarket: array data too short");
        }
        a(i, j) = ParseNumber(t1);
      }
    }
  } else {
    throw InvalidInputError("MatrixMarket: unknown format '" + format + "'");
  }
  if (!a.allFinite()) {
    throw InvalidInputError("MatrixMarket: non-finite entry");
  }
  return a;
}

Eigen::MatrixXd ReadMatrixMarket(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open matrix file: " + path);
  return ReadMatrixMarket(in);
}

void WriteMatrixMarket(std::ostream& out, const Eigen::MatrixXd& a,
                       MatrixMarketFormat format) {
  if (format == MatrixMarketFormat::kArray) {
    out << "%%MatrixMarket matrix array real general\n";
    out << a.rows() << ' ' << a.cols() << '\n';
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      for (Eigen::Index i = 0; i < a.rows(); ++i) {
        out << FormatDouble(a(i, j)) << '\n';
      }
    }
    return;
  }
  long long nnz = 0;
  for (Eigen::Index k = 0; k < a.size(); ++k) nnz += a.data()[k] != 0.0;
  out << "%%MatrixMarket matrix coordinate real general\n";
  out << a.rows() << ' ' << a.cols() << ' ' << nnz << '\n';
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      if (a(i, j) != 0.0) {
        out << i + 1 << ' ' << j + 1 << ' ' << FormatDouble(a(i, j)) << '\n';
      }
    }
  }
}

void WriteMatrixMarket(const std::string& path, const Eigen::MatrixXd& a,
                       MatrixMarketFormat format) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write matrix file: " + path);
  WriteMatrixMarket(out, a, format);
  if (!out) throw IoError("error while writing matrix file: " + path);
}

}  // namespace vrvi
