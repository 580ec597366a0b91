#include "balcut/krylov.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "balcut/error.hpp"

namespace balcut {

namespace {

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm(std::span<const double> a) { return std::sqrt(dot(a, a)); }

// Lanczos with full reorthogonalisation (classical Gram-Schmidt, twice).
class LanczosBasis {
 public:
  LanczosBasis(const Matvec& a, std::size_t n, std::size_t max_dim)
      : a_(a), n_(n), max_dim_(std::min(max_dim, n)), w_(n) {
    basis_.reserve(std::min<std::size_t>(max_dim_ + 1, 16) * n);
  }

  void start(std::span<const double> v0, std::span<const double> deflate = {}) {
    basis_.clear();
    alpha_.clear();
    beta_.clear();
    deflate_ = deflate;
    basis_.insert(basis_.end(), v0.begin(), v0.end());
    anorm_ = 0.0;
    broke_down_ = false;
  }

  std::size_t dim() const { return alpha_.size(); }
  std::size_t max_dim() const { return max_dim_; }
  bool broke_down() const { return broke_down_; }
  std::span<const double> alpha() const { return alpha_; }
  std::span<const double> beta() const { return beta_; }
  std::span<const double> vec(std::size_t j) const { return {basis_.data() + j * n_, n_}; }

  // Extends the basis by one vector; returns false once it cannot grow.
  bool step(std::size_t& matvecs) {
    if (broke_down_ || dim() >= max_dim_) return false;
    const std::size_t j = dim();
    a_(vec(j), w_);
    ++matvecs;
    // Classical Gram-Schmidt against the whole basis, applied twice.
    double alpha = 0.0;
    coef_.assign(j + 1, 0.0);
    for (int pass = 0; pass < 2; ++pass) {
      if (!deflate_.empty()) {
        double c = dot(deflate_, w_);
        for (std::size_t i = 0; i < n_; ++i) w_[i] -= c * deflate_[i];
      }
      std::fill(coef_.begin(), coef_.end(), 0.0);
      const double* base = basis_.data();
      for (std::size_t i = 0; i < n_; ++i) {
        const double wi = w_[i];
        for (std::size_t k = 0; k <= j; ++k) coef_[k] += base[k * n_ + i] * wi;
      }
      alpha += coef_[j];
      for (std::size_t i = 0; i < n_; ++i) {
        double t = 0.0;
        for (std::size_t k = 0; k <= j; ++k) t += coef_[k] * base[k * n_ + i];
        w_[i] -= t;
      }
    }
    alpha_.push_back(alpha);
    double beta = norm(w_);
    anorm_ = std::max(anorm_, std::abs(alpha) + beta + (j > 0 ? beta_[j - 1] : 0.0));
    beta_.push_back(beta);
    if (beta <= 1e-14 * anorm_ || beta == 0.0) {
      broke_down_ = true;
      return true;
    }
    if (dim() < max_dim_) {
      for (std::size_t i = 0; i < n_; ++i) basis_.push_back(w_[i] / beta);
    }
    return true;
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ritz() const {
    const std::size_t m = dim();
    Eigen::VectorXd diag(m), sub(m > 0 ? m - 1 : 0);
    for (std::size_t i = 0; i < m; ++i) diag[i] = alpha_[i];
    for (std::size_t i = 0; i + 1 < m; ++i) sub[i] = beta_[i];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
    return es;
  }

 private:
  const Matvec& a_;
  std::size_t n_;
  std::size_t max_dim_;
  std::vector<double> basis_;
  std::vector<double> alpha_;
  std::vector<double> beta_;
  std::vector<double> w_;
  std::vector<double> coef_;
  std::span<const double> deflate_;
  double anorm_ = 0.0;
  bool broke_down_ = false;
};

struct SmallExp {
  Eigen::VectorXd y;  // exp(-tau (T - theta_min)) e_1
  double theta_min = 0.0;
};

SmallExp small_exp(const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>& es, double tau) {
  const auto& theta = es.eigenvalues();
  const auto& q = es.eigenvectors();
  SmallExp r;
  r.theta_min = theta.minCoeff();
  Eigen::VectorXd coef(theta.size());
  for (Eigen::Index k = 0; k < theta.size(); ++k) {
    coef[k] = std::exp(-tau * (theta[k] - r.theta_min)) * q(0, k);
  }
  r.y = q * coef;
  return r;
}

bool check_due(std::size_t j) { return j <= 16 || j % 4 == 0; }

}  // namespace

std::vector<double> expv(const Matvec& a, std::span<const double> u, const ExpvOptions& options,
                         ExpvStats* stats) {
  ScaledVector sv = expv_scaled(a, u, options, stats);
  const double f = std::exp(sv.log_scale);
  for (auto& x : sv.direction) x *= f;
  return std::move(sv.direction);
}

ScaledVector expv_scaled(const Matvec& a, std::span<const double> u, const ExpvOptions& options,
                         ExpvStats* stats) {
  const std::size_t n = u.size();
  ScaledVector result{std::vector<double>(u.begin(), u.end()), 0.0};
  auto& w = result.direction;
  if (n == 0) return result;
  if (!(options.eta > 0.0) || options.max_dim == 0) fail(ErrorCode::InvalidParams, "expv options");
  ExpvStats local;
  LanczosBasis lanczos(a, n, options.max_dim);
  std::vector<double> v0(n);
  double remaining = 1.0;
  while (remaining > 0.0) {
    const double beta0 = norm(w);
    if (beta0 == 0.0) break;
    for (std::size_t i = 0; i < n; ++i) v0[i] = w[i] / beta0;
    lanczos.start(v0);
    double tau = remaining;
    SmallExp sol;
    bool accepted = false;
    while (!accepted) {
      bool grew = lanczos.step(local.matvecs);
      const std::size_t j = lanczos.dim();
      bool exhausted = !grew || lanczos.broke_down() || j >= lanczos.max_dim();
      if (!exhausted && !check_due(j)) continue;
      auto es = lanczos.ritz();
      sol = small_exp(es, tau);
      double err = lanczos.broke_down() ? 0.0 : lanczos.beta()[j - 1] * std::abs(sol.y[j - 1]);
      // below this the estimate is rounding noise in y
      const double floor = 8.0 * static_cast<double>(j) * std::numeric_limits<double>::epsilon() *
                           (lanczos.broke_down() ? 0.0 : lanczos.beta()[j - 1]);
      if (err <= std::max(options.eta * tau, floor)) {
        accepted = true;
        break;
      }
      if (!exhausted) continue;
      // Krylov space is full: shrink the time step until the estimate passes.
      while (!accepted) {
        tau *= 0.5;
        if (tau < 1e-12 * remaining) {
          fail(ErrorCode::BreakdownNotConverged,
               "Lanczos exponential did not converge within dimension " + std::to_string(j));
        }
        sol = small_exp(es, tau);
        err = lanczos.beta()[j - 1] * std::abs(sol.y[j - 1]);
        accepted = err <= std::max(options.eta * tau, floor);
      }
    }
    const std::size_t j = lanczos.dim();
    local.max_krylov_dim = std::max(local.max_krylov_dim, j);
    ++local.substeps;
    const double scale = beta0;
    result.log_scale -= tau * sol.theta_min;
    std::fill(w.begin(), w.end(), 0.0);
    for (std::size_t k = 0; k < j; ++k) {
      double c = scale * sol.y[static_cast<Eigen::Index>(k)];
      auto v = lanczos.vec(k);
      for (std::size_t i = 0; i < n; ++i) w[i] += c * v[i];
    }
    remaining -= tau;
    if (remaining < 1e-15) remaining = 0.0;
  }
  if (stats) {
    stats->matvecs += local.matvecs;
    stats->substeps += local.substeps;
    stats->max_krylov_dim = std::max(stats->max_krylov_dim, local.max_krylov_dim);
  }
  return result;
}

double lanczos_min_eigenvalue(const Matvec& a, std::size_t n, std::span<const double> deflate,
                              const EigenOptions& options) {
  if (n == 0) fail(ErrorCode::InvalidArgument, "empty operator");
  if (!deflate.empty() && deflate.size() != n) fail(ErrorCode::DimensionMismatch, "deflation vector size");
  std::mt19937_64 rng(options.seed);
  std::normal_distribution<double> normal;
  std::vector<double> v0(n);
  for (auto& x : v0) x = normal(rng);
  if (!deflate.empty()) {
    double c = dot(deflate, v0);
    for (std::size_t i = 0; i < n; ++i) v0[i] -= c * deflate[i];
  }
  double nv = norm(v0);
  if (nv == 0.0) fail(ErrorCode::InvalidArgument, "operator space is trivial after deflation");
  for (auto& x : v0) x /= nv;
  LanczosBasis lanczos(a, n, options.max_dim);
  lanczos.start(v0, deflate);
  std::size_t matvecs = 0;
  double theta = 0.0;
  while (true) {
    bool grew = lanczos.step(matvecs);
    const std::size_t j = lanczos.dim();
    bool exhausted = !grew || lanczos.broke_down() || j >= lanczos.max_dim();
    if (!exhausted && !check_due(j)) continue;
    auto es = lanczos.ritz();
    theta = es.eigenvalues()[0];
    double scale = std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
    double resid = lanczos.broke_down() ? 0.0 : lanczos.beta()[j - 1] * std::abs(es.eigenvectors()(j - 1, 0));
    if (resid <= options.tol * scale || exhausted) break;
  }
  return theta;
}

}  // namespace balcut
