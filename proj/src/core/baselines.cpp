// Copyright 2026 The kkmds Authors
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

#include "kkmds/baselines.hpp"

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <algorithm>
#include <cmath>
#include <chrono>
#include <sstream>

#include "kkmds/error.hpp"
#include "kkmds/hooks.hpp"
#include "kkmds/random.hpp"

namespace kkmds {

namespace {

constexpr std::size_t kDenseEigenLimit = 2000;
constexpr double kEigenTolerance = 1e-10;

void validate(const GdParams& p) {
  if (!(p.lr > 0.0) || !std::isfinite(p.lr)) throw_parameter("gradient descent lr must be positive");
  if (!(p.init_radius > 0.0)) throw_parameter("gradient descent init radius must be positive");
}

GdResult run_gd(const DistanceMatrix& d, std::size_t dim, const GdParams& p) {
  validate(p);
  const std::size_t n = d.size();
  if (n < 2) throw_parameter("gradient descent needs at least two points");
  Layout x(n, dim);
  if (p.init) {
    if (p.init->size() != n || p.init->dim() != dim) throw_parameter("initial layout has the wrong shape");
    x = *p.init;
  } else {
    Rng rng(p.seed);
    const double scale = 0.1 * p.init_radius;
    for (double& v : x.coords()) v = scale * rng.normal();
  }

  GdResult out;
  Layout grad(n, dim);
  for (std::size_t step = 0;; ++step) {
    const double e = stress_and_gradient(x, d, grad);
    if (!std::isfinite(e) || !x.all_finite()) {
      throw_invariant("gradient descent produced a non-finite iterate at step " + std::to_string(step) +
                      " (lr = " + std::to_string(p.lr) + ")");
    }
    if (step == 0 || e < out.stress) {
      out.stress = e;
      out.best_step = step;
      out.layout = x;
    }
    if ((p.trace_every > 0 && step % p.trace_every == 0) || step == p.steps) out.trace.emplace_back(step, e);
    if (step == p.steps) {
      out.final_stress = e;
      break;
    }
    auto xs = x.coords();
    auto gs = grad.coords();
    for (std::size_t k = 0; k < xs.size(); ++k) xs[k] -= p.lr * gs[k];
  }
  return out;
}

struct Operator {
  std::vector<std::vector<Vertex>> adj;
  std::vector<double> inv_sqrt_deg;
  bool normalized;

  Eigen::VectorXd apply(const Eigen::VectorXd& v) const {
    const std::size_t n = adj.size();
    Eigen::VectorXd out(n);
    for (std::size_t i = 0; i < n; ++i) {
      double s = 0.0;
      for (Vertex j : adj[i]) s += normalized ? inv_sqrt_deg[i] * inv_sqrt_deg[j] * v[j] : v[j];
      out[i] = normalized ? v[i] - s : static_cast<double>(adj[i].size()) * v[i] - s;
    }
    return out;
  }
};

Operator make_operator(const Graph& g, bool normalized) {
  Operator op{g.adjacency(), {}, normalized};
  op.inv_sqrt_deg.resize(op.adj.size());
  for (std::size_t i = 0; i < op.adj.size(); ++i) {
    if (op.adj[i].empty() && g.vertex_count() > 1) throw_invariant("graph has an isolated vertex " + std::to_string(i));
    op.inv_sqrt_deg[i] = op.adj[i].empty() ? 0.0 : 1.0 / std::sqrt(static_cast<double>(op.adj[i].size()));
  }
  return op;
}

Eigen::MatrixXd dense_laplacian(const Graph& g, bool normalized) {
  const Operator op = make_operator(g, normalized);
  const std::size_t n = g.vertex_count();
  Eigen::MatrixXd L = Eigen::MatrixXd::Zero(static_cast<long>(n), static_cast<long>(n));
  for (std::size_t i = 0; i < n; ++i) {
    L(i, i) = normalized ? 1.0 : static_cast<double>(op.adj[i].size());
    for (Vertex j : op.adj[i]) L(i, j) = normalized ? -op.inv_sqrt_deg[i] * op.inv_sqrt_deg[j] : -1.0;
  }
  return L;
}

// Smallest `want` eigenpairs by shift-invert Lanczos: the largest eigenvalues
// of (L + shift I)^-1 are found with full reorthogonalisation, the Krylov
// dimension doubling until every Ritz pair meets the residual tolerance on L.
std::pair<Eigen::VectorXd, Eigen::MatrixXd> lanczos_smallest(const Operator& op, std::size_t want) {
  const long n = static_cast<long>(op.adj.size());
  double bound = 0.0;
  for (const auto& a : op.adj) bound = std::max(bound, 2.0 * static_cast<double>(a.size()));
  if (op.normalized) bound = 2.0;
  const double shift = 1e-3 * bound;

  std::vector<Eigen::Triplet<double>> entries;
  for (long i = 0; i < n; ++i) {
    const auto& adj = op.adj[static_cast<std::size_t>(i)];
    const double diag = op.normalized ? 1.0 : static_cast<double>(adj.size());
    entries.emplace_back(i, i, diag + shift);
    for (Vertex j : adj)
      entries.emplace_back(i, j, op.normalized ? -op.inv_sqrt_deg[i] * op.inv_sqrt_deg[j] : -1.0);
  }
  Eigen::SparseMatrix<double> shifted(n, n);
  shifted.setFromTriplets(entries.begin(), entries.end());
  Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> solver(shifted);
  if (solver.info() != Eigen::Success) throw_invariant("sparse factorisation of the shifted Laplacian failed");

  Rng rng(0x5eed);
  auto random_unit = [&](const Eigen::MatrixXd& Q, long cols) {
    Eigen::VectorXd v(n);
    for (long i = 0; i < n; ++i) v[i] = rng.uniform(-1.0, 1.0);
    for (int pass = 0; pass < 2; ++pass)
      if (cols > 0) v -= Q.leftCols(cols) * (Q.leftCols(cols).transpose() * v);
    return Eigen::VectorXd(v / v.norm());
  };

  const long k = static_cast<long>(want);
  for (long m = std::min<long>(n, std::max<long>(40, 4 * k));; m = std::min(n, 2 * m)) {
    Eigen::MatrixXd Q(n, m);
    Eigen::VectorXd alpha = Eigen::VectorXd::Zero(m);
    Eigen::VectorXd beta = Eigen::VectorXd::Zero(m);
    Q.col(0) = random_unit(Q, 0);
    for (long j = 0; j < m; ++j) {
      Eigen::VectorXd w = solver.solve(Q.col(j));
      alpha[j] = Q.col(j).dot(w);
      for (int pass = 0; pass < 2; ++pass) w -= Q.leftCols(j + 1) * (Q.leftCols(j + 1).transpose() * w);
      if (j + 1 == m) break;
      const double b = w.norm();
      if (b < 1e-12 / shift) {
        Q.col(j + 1) = random_unit(Q, j + 1);
      } else {
        beta[j] = b;
        Q.col(j + 1) = w / b;
      }
    }
    Eigen::MatrixXd T = Eigen::MatrixXd::Zero(m, m);
    for (long j = 0; j < m; ++j) {
      T(j, j) = alpha[j];
      if (j + 1 < m) T(j, j + 1) = T(j + 1, j) = beta[j];
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(T);
    Eigen::VectorXd values(k);
    Eigen::MatrixXd vectors(n, k);
    bool converged = true;
    for (long c = 0; c < k; ++c) {
      const long src = m - 1 - c;  // eigenvalues ascend; take the largest
      values[c] = 1.0 / es.eigenvalues()[src] - shift;
      vectors.col(c) = (Q * es.eigenvectors().col(src)).normalized();
      const double resid = (op.apply(vectors.col(c)) - values[c] * vectors.col(c)).norm();
      if (resid > kEigenTolerance * bound) converged = false;
    }
    if (converged || m == n) return {values, vectors};
  }
}

}  // namespace

GdResult gradient_descent(const DistanceMatrix& d, std::size_t dim, const GdParams& p) {
  GdResult out = run_gd(d, dim, p);
  notify_layout("grad", out.layout, d);
  return out;
}

std::string trace_to_csv(const std::vector<std::pair<std::size_t, double>>& trace) {
  std::ostringstream out;
  out.precision(17);
  out << "step,stress\n";
  for (auto [s, e] : trace) out << s << ',' << e << '\n';
  return out.str();
}

std::vector<double> laplacian_spectrum(const Graph& g, bool normalized) {
  if (g.vertex_count() > kDenseEigenLimit) throw_resource("full spectrum is only computed for n <= 2000");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(dense_laplacian(g, normalized), Eigen::EigenvaluesOnly);
  const auto& ev = es.eigenvalues();
  return std::vector<double>(ev.data(), ev.data() + ev.size());
}

Layout spectral_embed(const Graph& g, std::size_t dim, bool normalized) {
  const std::size_t n = g.vertex_count();
  if (dim == 0) throw_parameter("spectral dimension must be positive");
  if (dim + 1 > n) throw_parameter("spectral embedding needs dim <= n - 1");
  if (!is_connected(g)) throw_invariant("spectral embedding needs a connected graph");

  Eigen::MatrixXd vectors;
  if (n <= kDenseEigenLimit) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(dense_laplacian(g, normalized));
    vectors = es.eigenvectors().middleCols(1, static_cast<long>(dim));
  } else {
    vectors = lanczos_smallest(make_operator(g, normalized), dim + 1).second.middleCols(1, static_cast<long>(dim));
  }
  const Operator op = make_operator(g, normalized);
  Layout x(n, dim);
  for (std::size_t c = 0; c < dim; ++c) {
    Eigen::VectorXd v = vectors.col(static_cast<long>(c));
    if (normalized) {
      for (std::size_t i = 0; i < n; ++i) v[i] *= op.inv_sqrt_deg[i];
      v.normalize();
    }
    const double cutoff = 1e-10 * v.cwiseAbs().maxCoeff();
    for (std::size_t i = 0; i < n; ++i) {
      if (std::abs(v[i]) > cutoff) {
        if (v[i] < 0) v = -v;
        break;
      }
    }
    for (std::size_t i = 0; i < n; ++i) x(i, c) = v[i];
  }
  return x;
}

double stress_optimal_scale(const Layout& x, const DistanceMatrix& d) {
  if (x.size() != d.size()) throw_parameter("layout and metric sizes differ");
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      const double t = distance(x.point(i), x.point(j)) / d(i, j);
      num += t;
      den += t * t;
    }
  return den > 0.0 ? num / den : 1.0;
}

Layout scaled_layout(const Layout& x, double factor) {
  Layout y = x;
  for (double& v : y.coords()) v *= factor;
  return y;
}

CombinedResult greedy_then_grad(const DistanceMatrix& d, const SchemeParams& scheme, const GdParams& gd) {
  CombinedResult out;
  out.scheme = kk_scheme(d, scheme);
  GdParams refine = gd;
  refine.init = out.scheme.layout;
  out.refined = run_gd(d, scheme.dim, refine);
  notify_layout("greedy+grad", out.refined.layout, d);
  return out;
}

RestartResult gradient_restarts(const DistanceMatrix& d, std::size_t dim, const GdParams& gd, std::size_t trials) {
  if (trials < 1) throw_parameter("trials must be at least 1");
  RestartResult out;
  for (std::size_t t = 0; t < trials; ++t) {
    GdParams p = gd;
    p.seed = gd.seed + t;
    const auto start = std::chrono::steady_clock::now();
    GdResult r = gradient_descent(d, dim, p);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.trials.push_back({t, p.seed, r.stress, normalized_stress(r.stress, d.size()), secs});
    if (t == 0 || r.stress < out.best_stress) {
      out.best_stress = r.stress;
      out.best_trial = t;
      out.layout = std::move(r.layout);
    }
  }
  return out;
}

RestartResult greedy_grad_restarts(const DistanceMatrix& d, const SchemeParams& scheme, const GdParams& gd) {
  if (scheme.trials < 1) throw_parameter("trials must be at least 1");
  RestartResult out;
  for (std::size_t t = 0; t < scheme.trials; ++t) {
    SchemeParams s = scheme;
    s.seed = scheme.seed + t;
    const auto start = std::chrono::steady_clock::now();
    CombinedResult r = greedy_then_grad(d, s, gd);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.trials.push_back({t, s.seed, r.refined.stress, normalized_stress(r.refined.stress, d.size()), secs});
    if (t == 0 || r.refined.stress < out.best_stress) {
      out.best_stress = r.refined.stress;
      out.best_trial = t;
      out.layout = std::move(r.refined.layout);
    }
  }
  return out;
}

}  // namespace kkmds
