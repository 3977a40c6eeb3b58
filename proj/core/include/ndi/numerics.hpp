#pragma once

// Dense linear algebra and descriptive statistics used by the NDI/NSI
// pipelines. Everything here works on small-to-medium dense matrices
// (hundreds of rows at most), so row-major std::vector storage is enough.

#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ndi {

/// Raised when an iterative solver fails to reach its tolerance.
class NumericalError : public std::runtime_error {
 public:
  NumericalError(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

/// Row-major dense matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<double> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const double> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  std::vector<double> column(std::size_t c) const;

  std::span<const double> data() const noexcept { return data_; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// Square matrix whose writes are mirrored, so a(i,j) == a(j,i) holds bitwise.
class SymmetricMatrix {
 public:
  SymmetricMatrix() = default;
  explicit SymmetricMatrix(std::size_t dim) : m_(dim, dim) {}

  /// Copies `m` after checking it is square and exactly symmetric.
  static SymmetricMatrix from_matrix(const Matrix& m);

  std::size_t dim() const noexcept { return m_.rows(); }

  double operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  void set(std::size_t i, std::size_t j, double v) {
    m_(i, j) = v;
    m_(j, i) = v;
  }

  std::span<const double> row(std::size_t i) const { return m_.row(i); }
  const Matrix& dense() const noexcept { return m_; }

  /// y = A x
  void multiply(std::span<const double> x, std::span<double> y) const;

  double max_abs() const;
  double inf_norm() const;  // max absolute row sum
  double trace() const;

 private:
  Matrix m_;
};

struct EigenPair {
  double value = 0.0;
  std::vector<double> vector;  // unit L2
};

/// Applies a symmetric linear operator: writes A*x into y.
using LinearOperator = std::function<void(std::span<const double> x, std::span<double> y)>;

struct PowerIterationOptions {
  double shift = 1.0;
  double rayleigh_tolerance = 1e-12;
  /// Relative to max(1, |lambda|).
  double residual_tolerance = 1e-12;
  std::size_t max_iterations = 100000;
};

struct PowerIterationResult {
  EigenPair pair;
  bool degenerate = false;  // zero operator; pair is (0, uniform)
  std::size_t iterations = 0;
  double residual = 0.0;  // ||Av - lambda v||_inf
};

/// Dominant eigenpair of a symmetric matrix with nonnegative entries.
///
/// Iterates on (A + shift*I) so that bipartite spectra (+lambda/-lambda pairs)
/// do not oscillate; the shift is subtracted from the returned value. The
/// returned vector is oriented so its entries sum to a nonnegative value.
/// Throws NumericalError when the iteration cap is reached.
PowerIterationResult power_iteration_top(const SymmetricMatrix& a,
                                         const PowerIterationOptions& options = {});

/// Same, for a matrix-free operator of dimension `dim`.
PowerIterationResult power_iteration_top(std::size_t dim, const LinearOperator& apply,
                                         const PowerIterationOptions& options = {});

/// Full eigendecomposition by cyclic Jacobi rotations, sorted by descending
/// eigenvalue. Each eigenvector is sign-normalized so that its largest
/// magnitude component is positive.
std::vector<EigenPair> jacobi_eigen(const SymmetricMatrix& a, std::size_t max_sweeps = 100);

/// Divisor used for the per-column standard deviation.
enum class StdDivisor { sample, population };

struct Standardized {
  Matrix data;
  std::vector<double> means;
  std::vector<double> stddevs;
  std::vector<std::size_t> degenerate_columns;
};

/// Column-wise z-scores. Zero-variance columns become all-zero and are listed
/// in degenerate_columns. Requires at least 3 rows.
Standardized standardize_columns(const Matrix& values, StdDivisor divisor = StdDivisor::sample);

/// (1/(n-1)) X^T X for a standardized n x k matrix X.
SymmetricMatrix correlation_matrix(const Matrix& standardized);

double mean(std::span<const double> xs);
double sample_variance(std::span<const double> xs);

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

/// Ordinary least squares y = slope*x + intercept. Throws std::invalid_argument
/// for mismatched lengths, fewer than two points, or constant x.
LinearFit linear_fit(std::span<const double> x, std::span<const double> y);

double euclidean_distance(std::span<const double> p, std::span<const double> q);

}  // namespace ndi
