#include "ndi/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace ndi {

std::vector<double> Matrix::column(std::size_t c) const {
  std::vector<double> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

SymmetricMatrix SymmetricMatrix::from_matrix(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("matrix is not square");
  SymmetricMatrix s(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = i; j < m.cols(); ++j) {
      if (m(i, j) != m(j, i)) throw std::invalid_argument("matrix is not symmetric");
      s.set(i, j, m(i, j));
    }
  }
  return s;
}

void SymmetricMatrix::multiply(std::span<const double> x, std::span<double> y) const {
  const std::size_t n = dim();
  for (std::size_t i = 0; i < n; ++i) {
    auto r = row(i);
    y[i] = std::inner_product(r.begin(), r.end(), x.begin(), 0.0);
  }
}

double SymmetricMatrix::max_abs() const {
  double best = 0.0;
  for (double v : m_.data()) best = std::max(best, std::abs(v));
  return best;
}

double SymmetricMatrix::inf_norm() const {
  double best = 0.0;
  for (std::size_t i = 0; i < dim(); ++i) {
    double s = 0.0;
    for (double v : row(i)) s += std::abs(v);
    best = std::max(best, s);
  }
  return best;
}

double SymmetricMatrix::trace() const {
  double t = 0.0;
  for (std::size_t i = 0; i < dim(); ++i) t += m_(i, i);
  return t;
}

namespace {

double norm2(std::span<const double> v) {
  return std::sqrt(std::inner_product(v.begin(), v.end(), v.begin(), 0.0));
}

void orient_nonnegative(std::vector<double>& v) {
  if (std::accumulate(v.begin(), v.end(), 0.0) < 0.0) {
    for (double& x : v) x = -x;
  }
}

}  // namespace

PowerIterationResult power_iteration_top(std::size_t dim, const LinearOperator& apply,
                                         const PowerIterationOptions& options) {
  if (dim == 0) throw std::invalid_argument("power iteration on an empty matrix");
  const double c = options.shift;

  std::vector<double> v(dim, 1.0 / std::sqrt(static_cast<double>(dim)));
  std::vector<double> w(dim);
  double prev_rq = 0.0;
  double residual = 0.0;

  for (std::size_t it = 0; it < options.max_iterations; ++it) {
    apply(v, w);
    if (it == 0 && std::all_of(w.begin(), w.end(), [](double x) { return x == 0.0; })) {
      // Nonnegative entries: A * (positive vector) == 0 only for A == 0.
      PowerIterationResult r;
      r.pair = {0.0, v};
      r.degenerate = true;
      r.iterations = 1;
      return r;
    }
    for (std::size_t i = 0; i < dim; ++i) w[i] += c * v[i];

    const double rq = std::inner_product(v.begin(), v.end(), w.begin(), 0.0);
    residual = 0.0;
    for (std::size_t i = 0; i < dim; ++i) residual = std::max(residual, std::abs(w[i] - rq * v[i]));

    const double lambda = rq - c;
    const double scale = std::max(1.0, std::abs(lambda));
    if (it > 0 && std::abs(rq - prev_rq) < options.rayleigh_tolerance * scale &&
        residual <= options.residual_tolerance * scale) {
      PowerIterationResult r;
      r.pair = {lambda, v};
      orient_nonnegative(r.pair.vector);
      r.iterations = it + 1;
      r.residual = residual;
      return r;
    }
    prev_rq = rq;

    const double nw = norm2(w);
    if (nw == 0.0) throw NumericalError("power iteration collapsed to the zero vector", residual);
    for (std::size_t i = 0; i < dim; ++i) v[i] = w[i] / nw;
  }
  throw NumericalError("power iteration did not converge within " +
                           std::to_string(options.max_iterations) +
                           " iterations (residual " + std::to_string(residual) + ")",
                       residual);
}

PowerIterationResult power_iteration_top(const SymmetricMatrix& a,
                                         const PowerIterationOptions& options) {
  return power_iteration_top(
      a.dim(), [&a](std::span<const double> x, std::span<double> y) { a.multiply(x, y); },
      options);
}

std::vector<EigenPair> jacobi_eigen(const SymmetricMatrix& input, std::size_t max_sweeps) {
  const std::size_t n = input.dim();
  for (double x : input.dense().data()) {
    if (!std::isfinite(x)) throw std::invalid_argument("jacobi_eigen: non-finite entry");
  }
  Matrix a = input.dense();
  Matrix v(n, n);
  for (std::size_t i = 0; i < n; ++i) v(i, i) = 1.0;

  const double tol = 1e-12 * std::max(1.0, input.max_abs());
  auto max_off = [&] {
    double m = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) m = std::max(m, std::abs(a(p, q)));
    return m;
  };

  std::size_t sweep = 0;
  for (; sweep <= max_sweeps; ++sweep) {
    if (max_off() < tol) break;
    if (sweep == max_sweeps) {
      throw NumericalError("jacobi_eigen did not converge in " + std::to_string(max_sweeps) +
                               " sweeps",
                           max_off());
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v(k, p);
          const double vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<EigenPair> pairs(n);
  for (std::size_t j = 0; j < n; ++j) {
    pairs[j].value = a(j, j);
    pairs[j].vector = v.column(j);
    auto& vec = pairs[j].vector;
    const double nrm = norm2(vec);
    for (double& x : vec) x /= nrm;
    auto big = std::max_element(vec.begin(), vec.end(),
                                 [](double x, double y) { return std::abs(x) < std::abs(y); });
    if (big != vec.end() && *big < 0.0) {
      for (double& x : vec) x = -x;
    }
  }
  std::stable_sort(pairs.begin(), pairs.end(),
                   [](const EigenPair& x, const EigenPair& y) { return x.value > y.value; });
  return pairs;
}

double mean(std::span<const double> xs) {
  if (xs.empty()) throw std::invalid_argument("mean of an empty sequence");
  return std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
}

double sample_variance(std::span<const double> xs) {
  if (xs.size() < 2) throw std::invalid_argument("sample variance needs at least two values");
  const double mu = mean(xs);
  double ss = 0.0;
  for (double x : xs) ss += (x - mu) * (x - mu);
  return ss / static_cast<double>(xs.size() - 1);
}

Standardized standardize_columns(const Matrix& values, StdDivisor divisor) {
  const std::size_t n = values.rows();
  const std::size_t k = values.cols();
  if (n < 3) throw std::invalid_argument("standardization needs at least 3 rows");

  Standardized out{Matrix(n, k), std::vector<double>(k), std::vector<double>(k), {}};
  const double denom = static_cast<double>(divisor == StdDivisor::sample ? n - 1 : n);
  for (std::size_t c = 0; c < k; ++c) {
    const auto col = values.column(c);
    const double mu = mean(col);
    double ss = 0.0;
    double max_abs = 0.0;
    for (double x : col) {
      ss += (x - mu) * (x - mu);
      max_abs = std::max(max_abs, std::abs(x));
    }
    const double s = std::sqrt(ss / denom);
    out.means[c] = mu;
    out.stddevs[c] = s;
    // Treat last-ulp noise (e.g. EVC on a vertex-transitive graph) as constant.
    if (s == 0.0 || s <= 1e-10 * max_abs) {
      out.degenerate_columns.push_back(c);
      continue;
    }
    for (std::size_t r = 0; r < n; ++r) out.data(r, c) = (col[r] - mu) / s;
  }
  return out;
}

SymmetricMatrix correlation_matrix(const Matrix& x) {
  const std::size_t n = x.rows();
  const std::size_t k = x.cols();
  if (n < 2) throw std::invalid_argument("correlation needs at least 2 rows");
  SymmetricMatrix c(k);
  for (std::size_t p = 0; p < k; ++p) {
    for (std::size_t q = p; q < k; ++q) {
      double s = 0.0;
      for (std::size_t r = 0; r < n; ++r) s += x(r, p) * x(r, q);
      c.set(p, q, s / static_cast<double>(n - 1));
    }
  }
  return c;
}

LinearFit linear_fit(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw std::invalid_argument("linear_fit: length mismatch");
  if (x.size() < 2) throw std::invalid_argument("linear_fit: need at least two points");
  const double mx = mean(x);
  const double my = mean(y);
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0.0) throw std::invalid_argument("linear_fit: predictor is constant");

  LinearFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  if (syy > 0.0) {
    double ss_res = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double e = y[i] - (fit.slope * x[i] + fit.intercept);
      ss_res += e * e;
    }
    fit.r_squared = std::clamp(1.0 - ss_res / syy, 0.0, 1.0);
  }
  return fit;
}

double euclidean_distance(std::span<const double> p, std::span<const double> q) {
  if (p.size() != q.size()) throw std::invalid_argument("euclidean_distance: dimension mismatch");
  if (p.empty()) throw std::invalid_argument("euclidean_distance: zero dimension");
  double s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) s += (p[i] - q[i]) * (p[i] - q[i]);
  return std::sqrt(s);
}

}  // namespace ndi
