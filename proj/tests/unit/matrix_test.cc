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


#include <cmath>
#include <sstream>

#include <gtest/gtest.h>

#include "test_util.h"
#include "vrvi/errors.h"
#include "vrvi/generators.h"
#include "vrvi/matrix_game.h"
#include "vrvi/matrix_market.h"

namespace vrvi {
namespace {

TEST(MatrixGame, NormsAgainstEigen) {
  Rng rng(1);
  for (int t = 0; t < 10; ++t) {
    Eigen::MatrixXd a = testing::RandomMatrix(rng, 3 + t, 7 - t % 4);
    a(0, 0) = 0.0;
    const MatrixGame g(a);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(a);
    EXPECT_NEAR(g.spectral_norm(), svd.singularValues()[0],
                1e-6 * svd.singularValues()[0]);
    EXPECT_NEAR(g.frobenius_norm(), a.norm(), 1e-12);
    EXPECT_DOUBLE_EQ(g.max_norm(), a.cwiseAbs().maxCoeff());
    EXPECT_EQ(g.nnz(), (a.array() != 0.0).count());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      EXPECT_NEAR(g.row_squared_norm(i), a.row(i).squaredNorm(), 1e-12);
    }
  }
}

TEST(MatrixGame, ApplyAndSparseLists) {
  // 3 of 15 entries are nonzero.
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(3, 5);
  a(0, 1) = 2.0;
  a(2, 3) = -1.0;
  a(2, 0) = 0.5;
  const MatrixGame g(a);
  EXPECT_TRUE(g.prefers_sparse_access());
  const Eigen::VectorXd x = Eigen::VectorXd::LinSpaced(5, 1, 5);
  Eigen::VectorXd out(3);
  g.Apply(x, out);
  EXPECT_EQ(out, a * x);
  Eigen::VectorXd outt(5);
  g.ApplyTranspose(Eigen::Vector3d(1, -1, 2), outt);
  EXPECT_EQ(outt, a.transpose() * Eigen::Vector3d(1, -1, 2));
  EXPECT_EQ(g.row_nonzeros_end(2) - g.row_nonzeros_begin(2), 2);
  EXPECT_EQ(*g.col_nonzeros_begin(3), 2u);
}

TEST(MatrixGame, FingerprintDistinguishesMatrices) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Ones(2, 2);
  Eigen::MatrixXd b = a;
  b(1, 1) = 1.0 + 1e-15;
  EXPECT_EQ(MatrixGame(a).Fingerprint(), MatrixGame(a).Fingerprint());
  EXPECT_NE(MatrixGame(a).Fingerprint(), MatrixGame(b).Fingerprint());
}

TEST(Generators, MatchingPennies) {
  const Eigen::MatrixXd a = MatchingPenniesMatrix();
  EXPECT_DOUBLE_EQ(a.norm(), 2.0);
  EXPECT_DOUBLE_EQ(a(0, 1), -1.0);
}

TEST(Generators, RockPaperScissorsIsSkewCirculant) {
  const Eigen::MatrixXd a = RockPaperScissorsMatrix();
  EXPECT_EQ(a + a.transpose(), Eigen::MatrixXd::Zero(3, 3));
  EXPECT_LE((a * Eigen::Vector3d::Constant(1.0 / 3)).norm(), 1e-16);
}

TEST(Generators, PolicemanBurglarStructure) {
  const int n = 30;
  const Eigen::MatrixXd a = PolicemanBurglarMatrix(n, 4);
  // Recover w_i from the farthest entry of each row and check the law.
  for (int i = 0; i < n; ++i) {
    EXPECT_EQ(a(i, i), 0.0);
    const int far = i < n / 2 ? n - 1 : 0;
    const double wi = a(i, far) / (1.0 - std::exp(-kPolicemanBurglarTheta * std::abs(i - far)));
    for (int j = 0; j < n; ++j) {
      const double expect = wi * (1.0 - std::exp(-kPolicemanBurglarTheta * std::abs(i - j)));
      EXPECT_NEAR(a(i, j), expect, 1e-12 * (1 + wi));
      EXPECT_GE(a(i, j) / wi, 0.0);
      EXPECT_LT(a(i, j) / wi, 1.0);
    }
    for (int d = 1; i + d + 1 < n; ++d) EXPECT_LT(a(i, i + d), a(i, i + d + 1));
  }
  EXPECT_EQ(PolicemanBurglarMatrix(n, 4), a);
  EXPECT_NE(PolicemanBurglarMatrix(n, 5), a);
}

TEST(Generators, NemirovskiFamilyOneSmall) {
  const Eigen::MatrixXd a = NemirovskiTestMatrix(2, 1);
  EXPECT_DOUBLE_EQ(a(0, 0), 1.0 / 3);
  EXPECT_DOUBLE_EQ(a(0, 1), 2.0 / 3);
  EXPECT_DOUBLE_EQ(a(1, 0), 2.0 / 3);
  EXPECT_DOUBLE_EQ(a(1, 1), 1.0);
}

TEST(Generators, NemirovskiFamiliesInUnitIntervalAndSymmetric) {
  for (int family : {1, 2}) {
    const Eigen::MatrixXd a = NemirovskiTestMatrix(25, family);
    EXPECT_GE(a.minCoeff(), 0.0);
    EXPECT_LE(a.maxCoeff(), 1.0);
    EXPECT_EQ(a, a.transpose());
  }
  EXPECT_THROW(NemirovskiTestMatrix(5, 3), InvalidInputError);
}

TEST(MatrixMarket, RoundTripBothFormats) {
  Rng rng(2);
  Eigen::MatrixXd a = testing::RandomMatrix(rng, 4, 3);
  a(1, 1) = 0.0;
  for (auto fmt : {MatrixMarketFormat::kCoordinate, MatrixMarketFormat::kArray}) {
    std::stringstream s;
    WriteMatrixMarket(s, a, fmt);
    EXPECT_EQ(ReadMatrixMarket(s), a);
  }
}

TEST(MatrixMarket, SymmetricAndSkew) {
  std::istringstream sym(
      "%%MatrixMarket matrix coordinate real symmetric\n% c\n2 2 2\n1 1 3\n2 1 -4\n");
  const Eigen::MatrixXd s = ReadMatrixMarket(sym);
  EXPECT_EQ(s(0, 1), -4.0);
  EXPECT_EQ(s(1, 0), -4.0);
  std::istringstream skew(
      "%%MatrixMarket matrix coordinate integer skew-symmetric\n2 2 1\n2 1 5\n");
  const Eigen::MatrixXd k = ReadMatrixMarket(skew);
  EXPECT_EQ(k(1, 0), 5.0);
  EXPECT_EQ(k(0, 1), -5.0);
}

TEST(MatrixMarket, Errors) {
  std::istringstream bad("%%MatrixMarket matrix coordinate complex general\n1 1 1\n1 1 1 0\n");
  EXPECT_THROW(ReadMatrixMarket(bad), InvalidInputError);
  std::istringstream range("%%MatrixMarket matrix coordinate real general\n2 2 1\n3 1 1\n");
  EXPECT_THROW(ReadMatrixMarket(range), InvalidInputError);
  try {
    ReadMatrixMarket("/nonexistent/dir/m.mtx");
    FAIL();
  } catch (const IoError& e) {
    EXPECT_NE(std::string(e.what()).find("/nonexistent/dir/m.mtx"), std::string::npos);
  }
}

TEST(MatrixMarket, FormatDoubleIsShortestRoundTrip) {
  EXPECT_EQ(FormatDouble(0.1), "0.1");
  EXPECT_EQ(FormatDouble(1e-300), "1e-300");
  EXPECT_EQ(FormatDouble(3.0), "3");
  Rng rng(5);
  for (int k = 0; k < 1000; ++k) {
    const double v = rng.StandardNormal() * std::pow(10.0, rng.Uniform() * 40 - 20);
    EXPECT_EQ(std::stod(FormatDouble(v)), v);
  }
}

}  // namespace
}  // namespace vrvi
