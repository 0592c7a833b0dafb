// Copyright 2026 The ANSAC Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ansac/geometry.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <cmath>
#include <limits>

namespace ansac {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Relative singular-value cutoff for declaring the DLT design matrix
// rank-deficient.
constexpr double kRankTol = 1e-9;

// Hartley conditioning: centroid to the origin, mean distance sqrt(2).
// Returns false when the points are (numerically) coincident.
bool normalizing_transform(std::span<const Correspondence> sample,
                           bool second_point, Eigen::Matrix3d& T) {
  const auto pt = [&](const Correspondence& c) -> const Point2& {
    return second_point ? c.p2 : c.p1;
  };
  double cx = 0.0, cy = 0.0;
  for (const auto& c : sample) {
    cx += pt(c).x;
    cy += pt(c).y;
  }
  const double n = static_cast<double>(sample.size());
  cx /= n;
  cy /= n;
  double mean_dist = 0.0;
  for (const auto& c : sample) {
    mean_dist += std::hypot(pt(c).x - cx, pt(c).y - cy);
  }
  mean_dist /= n;
  if (!(mean_dist > 1e-12) || !std::isfinite(mean_dist)) return false;
  const double s = std::sqrt(2.0) / mean_dist;
  T << s, 0.0, -s * cx, 0.0, s, -s * cy, 0.0, 0.0, 1.0;
  return true;
}

// Frobenius normalization plus a canonical sign: the largest-magnitude
// entry is made positive so equal models compare bitwise equal.
Eigen::Matrix3d canonicalize(Eigen::Matrix3d m) {
  const double norm = m.norm();
  if (!(norm > 0.0) || !std::isfinite(norm)) return m;
  m /= norm;
  int r = 0, c = 0;
  m.cwiseAbs().maxCoeff(&r, &c);
  if (m(r, c) < 0.0) m = -m;
  return m;
}

bool all_finite(std::span<const Correspondence> sample) {
  for (const auto& c : sample) {
    if (!c.p1.finite() || !c.p2.finite()) return false;
  }
  return true;
}

// Smallest-singular-vector solve of the stacked DLT system. Fails when the
// design matrix does not reach rank 8.
bool nullspace_solve(const Eigen::MatrixXd& A, Eigen::Matrix<double, 9, 1>& h) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  if (sv.size() < 8) return false;
  if (!(sv(7) > kRankTol * sv(0))) return false;
  h = svd.matrixV().col(8);
  return h.allFinite();
}

}  // namespace

std::optional<Model> solve_homography(std::span<const Correspondence> sample) {
  const auto q = static_cast<Eigen::Index>(sample.size());
  if (q < 4 || !all_finite(sample)) return std::nullopt;

  Eigen::Matrix3d T1, T2;
  if (!normalizing_transform(sample, false, T1) ||
      !normalizing_transform(sample, true, T2)) {
    return std::nullopt;
  }

  Eigen::MatrixXd A(2 * q, 9);
  for (Eigen::Index i = 0; i < q; ++i) {
    const auto& c = sample[static_cast<std::size_t>(i)];
    const double x = T1(0, 0) * c.p1.x + T1(0, 2);
    const double y = T1(1, 1) * c.p1.y + T1(1, 2);
    const double u = T2(0, 0) * c.p2.x + T2(0, 2);
    const double v = T2(1, 1) * c.p2.y + T2(1, 2);
    A.row(2 * i) << -x, -y, -1.0, 0.0, 0.0, 0.0, u * x, u * y, u;
    A.row(2 * i + 1) << 0.0, 0.0, 0.0, -x, -y, -1.0, v * x, v * y, v;
  }

  Eigen::Matrix<double, 9, 1> h;
  if (!nullspace_solve(A, h)) return std::nullopt;

  Eigen::Matrix3d Hn;
  Hn << h(0), h(1), h(2), h(3), h(4), h(5), h(6), h(7), h(8);
  const Eigen::Matrix3d H = T2.inverse() * Hn * T1;
  if (!H.allFinite()) return std::nullopt;
  return Model{ModelKind::Homography, canonicalize(H)};
}

std::optional<Model> solve_fundamental(std::span<const Correspondence> sample) {
  const auto q = static_cast<Eigen::Index>(sample.size());
  if (q < 8 || !all_finite(sample)) return std::nullopt;

  Eigen::Matrix3d T1, T2;
  if (!normalizing_transform(sample, false, T1) ||
      !normalizing_transform(sample, true, T2)) {
    return std::nullopt;
  }

  // Rows encode x2' F x1 = 0 with f laid out row-major.
  Eigen::MatrixXd A(q, 9);
  for (Eigen::Index i = 0; i < q; ++i) {
    const auto& c = sample[static_cast<std::size_t>(i)];
    const double x = T1(0, 0) * c.p1.x + T1(0, 2);
    const double y = T1(1, 1) * c.p1.y + T1(1, 2);
    const double u = T2(0, 0) * c.p2.x + T2(0, 2);
    const double v = T2(1, 1) * c.p2.y + T2(1, 2);
    A.row(i) << u * x, u * y, u, v * x, v * y, v, x, y, 1.0;
  }

  Eigen::Matrix<double, 9, 1> f;
  if (!nullspace_solve(A, f)) return std::nullopt;

  Eigen::Matrix3d Fn;
  Fn << f(0), f(1), f(2), f(3), f(4), f(5), f(6), f(7), f(8);

  Eigen::JacobiSVD<Eigen::Matrix3d> svd(
      Fn, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Eigen::Vector3d sv = svd.singularValues();
  sv(2) = 0.0;
  Fn = svd.matrixU() * sv.asDiagonal() * svd.matrixV().transpose();

  const Eigen::Matrix3d F = T2.transpose() * Fn * T1;
  if (!F.allFinite()) return std::nullopt;
  return Model{ModelKind::Fundamental, canonicalize(F)};
}

std::optional<Model> solve_model(ModelKind kind,
                                 std::span<const Correspondence> sample) {
  return kind == ModelKind::Homography ? solve_homography(sample)
                                       : solve_fundamental(sample);
}

namespace {

double transfer_distance(const Eigen::Matrix3d& H, const Point2& from,
                         const Point2& to) {
  const double w = H(2, 0) * from.x + H(2, 1) * from.y + H(2, 2);
  if (std::abs(w) < 1e-15) return kInf;
  const double u = (H(0, 0) * from.x + H(0, 1) * from.y + H(0, 2)) / w;
  const double v = (H(1, 0) * from.x + H(1, 1) * from.y + H(1, 2)) / w;
  const double d = std::hypot(u - to.x, v - to.y);
  return std::isfinite(d) ? d : kInf;
}

double symmetric_transfer(const Model& model, const Correspondence& c) {
  const Eigen::Matrix3d& H = model.matrix;
  const double forward = transfer_distance(H, c.p1, c.p2);
  const double det = H.determinant();
  if (std::abs(det) < 1e-15) return kInf;
  const Eigen::Matrix3d Hinv = H.inverse();
  if (!Hinv.allFinite()) return kInf;
  const double backward = transfer_distance(Hinv, c.p2, c.p1);
  return 0.5 * (forward + backward);
}

double sampson_distance(const Model& model, const Correspondence& c) {
  const Eigen::Matrix3d& F = model.matrix;
  const Eigen::Vector3d x1(c.p1.x, c.p1.y, 1.0);
  const Eigen::Vector3d x2(c.p2.x, c.p2.y, 1.0);
  const Eigen::Vector3d Fx1 = F * x1;
  const Eigen::Vector3d Ftx2 = F.transpose() * x2;
  const double e = x2.dot(Fx1);
  const double denom =
      Fx1(0) * Fx1(0) + Fx1(1) * Fx1(1) + Ftx2(0) * Ftx2(0) + Ftx2(1) * Ftx2(1);
  if (!(denom > 0.0)) return e == 0.0 ? 0.0 : kInf;
  const double d = std::abs(e) / std::sqrt(denom);
  return std::isfinite(d) ? d : kInf;
}

}  // namespace

double residual(const Model& model, const Correspondence& c) {
  return model.kind == ModelKind::Homography ? symmetric_transfer(model, c)
                                             : sampson_distance(model, c);
}

std::pair<int, std::vector<bool>> count_inliers(
    const Model& model, std::span<const Correspondence> set,
    const ResidualConfig& cfg) {
  std::vector<bool> mask(set.size(), false);
  int count = 0;
  for (std::size_t j = 0; j < set.size(); ++j) {
    if (residual(model, set[j]) < cfg.inlier_threshold) {
      mask[j] = true;
      ++count;
    }
  }
  return {count, std::move(mask)};
}

}  // namespace ansac
