#pragma once

#include <complex>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

namespace oscq::op {

using Complex = std::complex<double>;

/// Finite-dimensional linear operator over complex entries, sparse storage.
///
/// Entries that are exactly zero are never stored; computed near-zeros are
/// kept and judged by residual norms.  Values are immutable in normal use:
/// builders fill an operator once, algebra returns fresh values.
class SparseOperator {
 public:
  using Key = std::pair<int, int>;  // (row, col), row-major ordering
  using EntryMap = std::map<Key, Complex>;

  SparseOperator() : rows_(0), cols_(0) {}
  SparseOperator(int rows, int cols);
  explicit SparseOperator(int dim) : SparseOperator(dim, dim) {}

  static SparseOperator identity(int dim);
  static SparseOperator from_dense(const Eigen::MatrixXcd& m);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  /// Square operators only; throws std::logic_error otherwise.
  int dim() const;

  /// Accumulates into (row, col); an exactly-zero result is dropped.
  void add(int row, int col, Complex value);
  void set(int row, int col, Complex value);
  Complex at(int row, int col) const;

  const EntryMap& entries() const { return entries_; }
  std::size_t nnz() const { return entries_.size(); }

  SparseOperator scaled(Complex factor) const;
  Eigen::MatrixXcd dense() const;

  friend SparseOperator operator+(const SparseOperator& a, const SparseOperator& b);
  friend SparseOperator operator-(const SparseOperator& a, const SparseOperator& b);
  friend SparseOperator operator*(const SparseOperator& a, const SparseOperator& b);
  friend SparseOperator operator*(Complex factor, const SparseOperator& a);

 private:
  int rows_;
  int cols_;
  EntryMap entries_;

  void check_range(int row, int col) const;
};

/// (a . b) v = a(b(v)); requires a.cols() == b.rows().
SparseOperator compose(const SparseOperator& a, const SparseOperator& b);

/// Conjugate transpose.
SparseOperator adjoint(const SparseOperator& a);

/// a . b - b . a on square operators of equal dimension.
SparseOperator commutator(const SparseOperator& a, const SparseOperator& b);

/// Max entry modulus; 0 for an empty entry map.
double max_residual(const SparseOperator& a);

/// Dimension of {X : [X, op] = 0 for every op}, computed as the nullity of
/// the stacked Sylvester system.  Singular values below rank_tol times the
/// largest singular value count as zero.  Requires a nonempty list of square
/// operators of one common dimension d <= 200.
int commutant_dimension(std::span<const SparseOperator> ops, double rank_tol = 1e-8);

struct CheckResult {
  std::string name;
  double max_abs_residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

class VerificationReport {
 public:
  /// pass is derived: residual <= tolerance (false for NaN residuals).
  void add(std::string name, double max_abs_residual, double tolerance);
  void merge(const VerificationReport& other);

  const std::vector<CheckResult>& checks() const { return checks_; }
  bool all_pass() const;
  int passed() const;
  int failed() const;

 private:
  std::vector<CheckResult> checks_;
};

}  // namespace oscq::op
