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

#include "ansac/synthdata.hpp"

#include <Eigen/Dense>
#include <Eigen/Geometry>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

#include "ansac/errors.hpp"

namespace ansac {
namespace {

constexpr int kMaxAttempts = 1000;
constexpr double kOutlierExclusionPx = 3.0;

Eigen::Matrix3d canonical(Eigen::Matrix3d m) {
  m /= m.norm();
  int r = 0, c = 0;
  m.cwiseAbs().maxCoeff(&r, &c);
  if (m(r, c) < 0.0) m = -m;
  return m;
}

double condition_number(const Eigen::Matrix3d& m) {
  Eigen::JacobiSVD<Eigen::Matrix3d> svd(m);
  const auto& sv = svd.singularValues();
  return sv(2) > 0.0 ? sv(0) / sv(2) : std::numeric_limits<double>::infinity();
}

Point2 apply_homography(const Eigen::Matrix3d& H, const Point2& p) {
  const double w = H(2, 0) * p.x + H(2, 1) * p.y + H(2, 2);
  return {(H(0, 0) * p.x + H(0, 1) * p.y + H(0, 2)) / w,
          (H(1, 0) * p.x + H(1, 1) * p.y + H(1, 2)) / w};
}

// Similarity plus a mild perspective component, rejected until the
// condition number is under 100 and the denominator stays well away from
// zero over the whole image.
Model random_homography(std::mt19937_64& rng, double w, double h) {
  std::uniform_real_distribution<double> scale(0.75, 1.3);
  std::uniform_real_distribution<double> angle(-0.5, 0.5);
  std::uniform_real_distribution<double> shift_x(-0.15 * w, 0.15 * w);
  std::uniform_real_distribution<double> shift_y(-0.15 * h, 0.15 * h);
  std::uniform_real_distribution<double> persp(-0.15 / (w + h), 0.15 / (w + h));

  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const double s = scale(rng);
    const double a = angle(rng);
    Eigen::Matrix3d H;
    H << s * std::cos(a), -s * std::sin(a), shift_x(rng),
         s * std::sin(a),  s * std::cos(a), shift_y(rng),
         persp(rng),       persp(rng),      1.0;
    const double d1 = H(2, 0) * w + H(2, 1) * h + 1.0;
    const double d2 = H(2, 0) * w + 1.0;
    const double d3 = H(2, 1) * h + 1.0;
    if (std::min({d1, d2, d3, 1.0}) < 0.5) continue;
    if (condition_number(H / H.norm()) >= 100.0) continue;
    return Model{ModelKind::Homography, canonical(H)};
  }
  throw GenerationFailed("could not draw a well-conditioned homography");
}

struct TwoViewScene {
  Model truth;
  Eigen::Matrix3d K;
  Eigen::Matrix3d R;
  Eigen::Vector3d t;
};

TwoViewScene random_two_view(std::mt19937_64& rng, double w, double h) {
  const double f = 1.1 * std::max(w, h);
  Eigen::Matrix3d K;
  K << f, 0.0, 0.5 * w, 0.0, f, 0.5 * h, 0.0, 0.0, 1.0;

  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::uniform_real_distribution<double> rot_angle(0.05, 0.25);
  std::uniform_real_distribution<double> base_len(0.5, 1.5);

  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    Eigen::Vector3d axis(unit(rng), unit(rng), unit(rng));
    if (axis.norm() < 1e-6) continue;
    axis.normalize();
    const Eigen::Matrix3d R =
        Eigen::AngleAxisd(rot_angle(rng), axis).toRotationMatrix();
    Eigen::Vector3d t(unit(rng), unit(rng), 0.25 * unit(rng));
    if (t.norm() < 0.2) continue;
    t = t.normalized() * base_len(rng);

    Eigen::Matrix3d tx;
    tx << 0.0, -t.z(), t.y(), t.z(), 0.0, -t.x(), -t.y(), t.x(), 0.0;
    const Eigen::Matrix3d Kinv = K.inverse();
    const Eigen::Matrix3d F = Kinv.transpose() * tx * R * Kinv;
    if (!F.allFinite() || F.norm() < 1e-15) continue;
    return {Model{ModelKind::Fundamental, canonical(F)}, K, R, t};
  }
  throw GenerationFailed("could not draw a two-view geometry");
}

bool inside(const Point2& p, double w, double h) {
  return p.x >= 0.0 && p.x <= w && p.y >= 0.0 && p.y <= h;
}

}  // namespace

SynthProblem generate(const SynthSpec& spec) {
  if (!spec.valid()) throw std::invalid_argument("invalid SynthSpec");
  std::mt19937_64 rng(spec.seed);
  const double w = spec.image_width;
  const double h = spec.image_height;
  std::uniform_real_distribution<double> ux(0.0, w);
  std::uniform_real_distribution<double> uy(0.0, h);
  std::normal_distribution<double> gauss(0.0, 1.0);

  const int n_inliers =
      static_cast<int>(std::lround(spec.n * spec.inlier_ratio));
  const int n_outliers = spec.n - n_inliers;

  SynthProblem out;
  std::vector<Correspondence> clean_inliers;
  clean_inliers.reserve(static_cast<std::size_t>(n_inliers));

  TwoViewScene scene;  // only populated for fundamental problems
  if (spec.kind == ModelKind::Homography) {
    out.truth_model = random_homography(rng, w, h);
    for (int i = 0; i < n_inliers; ++i) {
      Correspondence c;
      for (int attempt = 0;; ++attempt) {
        if (attempt >= kMaxAttempts) {
          throw GenerationFailed("could not place a homography inlier");
        }
        c.p1 = {ux(rng), uy(rng)};
        c.p2 = apply_homography(out.truth_model.matrix, c.p1);
        if (c.p1.finite() && c.p2.finite()) break;
      }
      clean_inliers.push_back(c);
    }
  } else {
    scene = random_two_view(rng, w, h);
    out.truth_model = scene.truth;
    std::uniform_real_distribution<double> span(-2.0, 2.0);
    std::uniform_real_distribution<double> depth(3.0, 8.0);
    for (int i = 0; i < n_inliers; ++i) {
      Correspondence c;
      for (int attempt = 0;; ++attempt) {
        if (attempt >= kMaxAttempts) {
          throw GenerationFailed("could not place a two-view inlier");
        }
        const Eigen::Vector3d X(span(rng), span(rng), depth(rng));
        const Eigen::Vector3d x1 = scene.K * X;
        const Eigen::Vector3d x2 = scene.K * (scene.R * X + scene.t);
        if (x1.z() <= 0.0 || x2.z() <= 0.0) continue;
        c.p1 = {x1.x() / x1.z(), x1.y() / x1.z()};
        c.p2 = {x2.x() / x2.z(), x2.y() / x2.z()};
        if (inside(c.p1, w, h) && inside(c.p2, w, h)) break;
      }
      clean_inliers.push_back(c);
    }
  }

  // Perturb the inliers, renewing the noise until each stays a bona fide
  // inlier of the truth model (within 3 sigma).
  std::vector<Correspondence> noisy_inliers = clean_inliers;
  if (spec.noise_sigma > 0.0) {
    const double bound = 3.0 * spec.noise_sigma + 1e-9;
    for (auto& c : noisy_inliers) {
      const Correspondence original = c;
      for (int attempt = 0;; ++attempt) {
        if (attempt >= kMaxAttempts) {
          throw GenerationFailed("could not perturb an inlier within bounds");
        }
        c = original;
        if (spec.kind == ModelKind::Homography) {
          c.p2.x += spec.noise_sigma * gauss(rng);
          c.p2.y += spec.noise_sigma * gauss(rng);
        } else {
          c.p1.x += spec.noise_sigma * gauss(rng);
          c.p1.y += spec.noise_sigma * gauss(rng);
          c.p2.x += spec.noise_sigma * gauss(rng);
          c.p2.y += spec.noise_sigma * gauss(rng);
        }
        if (residual(out.truth_model, c) <= bound) break;
      }
    }
  }

  // Outliers: uniform pairs, kept only when clearly off the truth model.
  std::vector<Correspondence> outliers;
  outliers.reserve(static_cast<std::size_t>(n_outliers));
  for (int i = 0; i < n_outliers; ++i) {
    for (int attempt = 0;; ++attempt) {
      if (attempt >= kMaxAttempts) {
        throw GenerationFailed("could not place an outlier");
      }
      Correspondence c;
      c.p1 = {ux(rng), uy(rng)};
      c.p2 = {ux(rng), uy(rng)};
      if (residual(out.truth_model, c) > kOutlierExclusionPx) {
        outliers.push_back(c);
        break;
      }
    }
  }

  // Quality scores: a separated component (inliers high, outliers low)
  // blended with an uninformative one according to quality_fidelity.
  std::uniform_real_distribution<double> good(0.7, 1.0);
  std::uniform_real_distribution<double> bad(0.0, 0.3);
  std::uniform_real_distribution<double> common(0.0, 1.0);
  const double rho = spec.quality_fidelity;
  for (auto& c : noisy_inliers) {
    c.quality = rho * good(rng) + (1.0 - rho) * common(rng);
  }
  for (auto& c : outliers) {
    c.quality = rho * bad(rng) + (1.0 - rho) * common(rng);
  }

  // Interleave inliers and outliers in a random order.
  std::vector<std::size_t> perm(static_cast<std::size_t>(spec.n));
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::shuffle(perm.begin(), perm.end(), rng);

  out.corrs.resize(perm.size());
  out.clean.resize(perm.size());
  out.truth_mask.assign(perm.size(), false);
  for (std::size_t slot = 0; slot < perm.size(); ++slot) {
    const std::size_t src = perm[slot];
    if (src < noisy_inliers.size()) {
      out.corrs[slot] = noisy_inliers[src];
      out.clean[slot] = clean_inliers[src];
      out.clean[slot].quality = noisy_inliers[src].quality;
      out.truth_mask[slot] = true;
    } else {
      const auto& o = outliers[src - noisy_inliers.size()];
      out.corrs[slot] = o;
      out.clean[slot] = o;
    }
  }
  return out;
}

}  // namespace ansac
