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


#ifndef VRVI_MATRIX_MARKET_H_
#define VRVI_MATRIX_MARKET_H_

#include <iosfwd>
#include <string>

#include <Eigen/Core>

namespace vrvi {

enum class MatrixMarketFormat { kCoordinate, kArray };

// Reads a real (or integer) matrix in MatrixMarket coordinate or array
// format. Coordinate files may be general, symmetric or skew-symmetric.
// Throws IoError if the file cannot be opened and InvalidInputError on
// malformed content.
Eigen::MatrixXd ReadMatrixMarket(const std::string& path);
Eigen::MatrixXd ReadMatrixMarket(std::istream& in);

// Writes `a` as a real general matrix with shortest round-trip decimals.
void WriteMatrixMarket(std::ostream& out, const Eigen::MatrixXd& a,
                       MatrixMarketFormat format);
void WriteMatrixMarket(const std::string& path, const Eigen::MatrixXd& a,
                       MatrixMarketFormat format);

// Shortest decimal string that round-trips to `v`; locale independent.
std::string FormatDouble(double v);

}  // namespace vrvi

#endif  // VRVI_MATRIX_MARKET_H_
