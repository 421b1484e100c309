// Copyright 2026 The Slider Docking Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "docking/qp_solver.hpp"

#include <Eigen/Cholesky>
#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>

#include "docking/errors.hpp"

namespace docking::qp {
namespace {

using SmallMat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::ColMajor,
                               kMaxDimension, kMaxDimension>;
using SmallVec = Eigen::Matrix<double, Eigen::Dynamic, 1, Eigen::ColMajor, kMaxDimension, 1>;

constexpr double kZeroNormal = 1e-13;
constexpr double kRankTol = 1e-11;
constexpr double kKktTol = 1e-12;
constexpr double kCertificateTol = 1e-9;
constexpr int kMaxConstraints = 24;

// Unit-normal copy of the constraint set; index maps back to the caller.
struct Normalized {
  Eigen::MatrixXd a;  // m x n, unit rows
  Eigen::VectorXd b;
  std::vector<int> index;
};

Normalized normalize(int n, std::span<const LinearConstraint> constraints) {
  Normalized out;
  std::vector<int> keep;
  for (int i = 0; i < static_cast<int>(constraints.size()); ++i) {
    const LinearConstraint& c = constraints[i];
    if (c.normal.size() != n) throw std::invalid_argument("qp::project: dimension mismatch");
    if (!c.normal.allFinite() || !std::isfinite(c.rhs))
      throw std::invalid_argument("qp::project: non-finite constraint");
    const double len = c.normal.norm();
    if (len < kZeroNormal) {
      // 0 . x >= rhs: either vacuous or impossible.
      if (c.rhs > kKktTol)
        throw InfeasibleQP("constraint " + std::to_string(i) + " has a zero normal and rhs > 0");
      continue;
    }
    keep.push_back(i);
  }
  const int m = static_cast<int>(keep.size());
  out.a.resize(m, n);
  out.b.resize(m);
  for (int r = 0; r < m; ++r) {
    const LinearConstraint& c = constraints[keep[r]];
    const double len = c.normal.norm();
    out.a.row(r) = c.normal.transpose() / len;
    out.b[r] = c.rhs / len;
  }
  out.index = std::move(keep);
  return out;
}

double max_violation(const Normalized& nc, const Eigen::VectorXd& x) {
  if (nc.b.size() == 0) return 0.0;
  return std::max(0.0, (nc.b - nc.a * x).maxCoeff());
}

// Calls visit(subset) for every k-subset of {0..m-1} in lexicographic order;
// stops early when visit returns true.
template <typename Visit>
bool for_each_subset(int m, int k, Visit&& visit) {
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  if (k > m) return false;
  while (true) {
    if (visit(std::span<const int>(idx))) return true;
    int i = k - 1;
    while (i >= 0 && idx[i] == m - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

struct Candidate {
  Eigen::VectorXd x;
  SmallVec multipliers;
};

// Projection of target onto {x : a_S x = b_S}; empty if the rows of a_S are
// linearly dependent.
std::optional<Candidate> project_onto_face(const Normalized& nc, std::span<const int> subset,
                                           const Eigen::VectorXd& target) {
  const int k = static_cast<int>(subset.size());
  const int n = static_cast<int>(target.size());
  if (k == 0) return Candidate{target, SmallVec(0)};
  SmallMat a(k, n);
  SmallVec b(k);
  for (int r = 0; r < k; ++r) {
    a.row(r) = nc.a.row(subset[r]);
    b[r] = nc.b[subset[r]];
  }
  const SmallMat gram = a * a.transpose();
  const Eigen::LDLT<SmallMat> ldlt(gram);
  if (ldlt.info() != Eigen::Success || ldlt.vectorD().minCoeff() < kRankTol) return std::nullopt;
  SmallVec lambda = ldlt.solve(b - a * target);
  Eigen::VectorXd x = target + a.transpose() * lambda;
  return Candidate{std::move(x), std::move(lambda)};
}

std::vector<int> tight_set(const Normalized& nc, const Eigen::VectorXd& x) {
  std::vector<int> active;
  for (int r = 0; r < nc.a.rows(); ++r)
    if (std::abs(nc.a.row(r).dot(x) - nc.b[r]) <= 1e-9) active.push_back(nc.index[r]);
  return active;
}

}  // namespace

Projection project(const Eigen::VectorXd& target, std::span<const LinearConstraint> constraints) {
  const int n = static_cast<int>(target.size());
  if (n < 1 || n > kMaxDimension) throw std::invalid_argument("qp::project: unsupported dimension");
  if (!target.allFinite()) throw std::invalid_argument("qp::project: non-finite target");
  if (static_cast<int>(constraints.size()) > kMaxConstraints)
    throw std::invalid_argument("qp::project: too many constraints for enumeration");

  const Normalized nc = normalize(n, constraints);
  const int m = static_cast<int>(nc.b.size());
  const double tol = kKktTol * (1.0 + target.lpNorm<Eigen::Infinity>() +
                                (m > 0 ? nc.b.lpNorm<Eigen::Infinity>() : 0.0));

  // KKT is sufficient for this strictly convex problem, so the first working
  // set that passes is the minimizer. The empty set comes first, which makes
  // already-feasible targets come back bit-identical.
  std::optional<Eigen::VectorXd> solution;
  for (int k = 0; k <= std::min(n, m) && !solution; ++k) {
    for_each_subset(m, k, [&](std::span<const int> subset) {
      auto cand = project_onto_face(nc, subset, target);
      if (!cand) return false;
      if (k > 0 && cand->multipliers.minCoeff() < -tol) return false;
      if (max_violation(nc, cand->x) > tol) return false;
      solution = std::move(cand->x);
      return true;
    });
  }

  if (!solution) {
    // No KKT point. Before declaring the polyhedron empty, look for any
    // feasible face projection or vertex at a looser tolerance; a hit means
    // the KKT test failed on round-off and the best such point is returned.
    double best = std::numeric_limits<double>::infinity();
    for (int k = 0; k <= std::min(n, m); ++k) {
      for_each_subset(m, k, [&](std::span<const int> subset) {
        auto cand = project_onto_face(nc, subset, target);
        if (!cand || max_violation(nc, cand->x) > kCertificateTol) return false;
        const double obj = (cand->x - target).squaredNorm();
        if (obj < best) {
          best = obj;
          solution = std::move(cand->x);
        }
        return false;
      });
    }
    if (!solution) throw InfeasibleQP("constraint polyhedron is empty");
  }

  Projection out;
  out.objective = (*solution - target).squaredNorm();
  out.active = tight_set(nc, *solution);
  out.x = std::move(*solution);
  return out;
}

}  // namespace docking::qp
