#include "oscq/operator.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/SVD>

namespace oscq::op {

SparseOperator::SparseOperator(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("SparseOperator: negative dimension");
}

SparseOperator SparseOperator::identity(int dim) {
  SparseOperator id(dim);
  for (int i = 0; i < dim; ++i) id.set(i, i, Complex(1.0, 0.0));
  return id;
}

SparseOperator SparseOperator::from_dense(const Eigen::MatrixXcd& m) {
  SparseOperator out(static_cast<int>(m.rows()), static_cast<int>(m.cols()));
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) {
      if (m(r, c) != Complex(0.0, 0.0)) out.set(r, c, m(r, c));
    }
  }
  return out;
}

int SparseOperator::dim() const {
  if (!is_square()) throw std::logic_error("SparseOperator::dim on a non-square operator");
  return rows_;
}

void SparseOperator::check_range(int row, int col) const {
  if (row < 0 || row >= rows_ || col < 0 || col >= cols_) {
    throw std::out_of_range("SparseOperator: index out of range");
  }
}

void SparseOperator::add(int row, int col, Complex value) {
  check_range(row, col);
  if (value == Complex(0.0, 0.0)) return;
  auto [it, inserted] = entries_.try_emplace({row, col}, value);
  if (!inserted) {
    it->second += value;
    if (it->second == Complex(0.0, 0.0)) entries_.erase(it);
  }
}

void SparseOperator::set(int row, int col, Complex value) {
  check_range(row, col);
  if (value == Complex(0.0, 0.0)) {
    entries_.erase({row, col});
  } else {
    entries_[{row, col}] = value;
  }
}

Complex SparseOperator::at(int row, int col) const {
  check_range(row, col);
  auto it = entries_.find({row, col});
  return it == entries_.end() ? Complex(0.0, 0.0) : it->second;
}

SparseOperator SparseOperator::scaled(Complex factor) const {
  SparseOperator out(rows_, cols_);
  if (factor == Complex(0.0, 0.0)) return out;
  for (const auto& [key, value] : entries_) out.set(key.first, key.second, factor * value);
  return out;
}

Eigen::MatrixXcd SparseOperator::dense() const {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(rows_, cols_);
  for (const auto& [key, value] : entries_) m(key.first, key.second) = value;
  return m;
}

SparseOperator operator+(const SparseOperator& a, const SparseOperator& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    throw std::invalid_argument("SparseOperator: dimension mismatch in +");
  }
  SparseOperator out = a;
  for (const auto& [key, value] : b.entries_) out.add(key.first, key.second, value);
  return out;
}

SparseOperator operator-(const SparseOperator& a, const SparseOperator& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    throw std::invalid_argument("SparseOperator: dimension mismatch in -");
  }
  SparseOperator out = a;
  for (const auto& [key, value] : b.entries_) out.add(key.first, key.second, -value);
  return out;
}

SparseOperator operator*(const SparseOperator& a, const SparseOperator& b) { return compose(a, b); }

SparseOperator operator*(Complex factor, const SparseOperator& a) { return a.scaled(factor); }

SparseOperator compose(const SparseOperator& a, const SparseOperator& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("compose: dimension mismatch");
  SparseOperator out(a.rows(), b.cols());
  const auto& bmap = b.entries();
  for (const auto& [akey, avalue] : a.entries()) {
    const auto [arow, acol] = akey;
    // Row acol of b is a contiguous range in row-major key order.
    auto it = bmap.lower_bound({acol, 0});
    const auto end = bmap.lower_bound({acol + 1, 0});
    for (; it != end; ++it) {
      out.add(arow, it->first.second, avalue * it->second);
    }
  }
  return out;
}

SparseOperator adjoint(const SparseOperator& a) {
  SparseOperator out(a.cols(), a.rows());
  for (const auto& [key, value] : a.entries()) {
    out.set(key.second, key.first, std::conj(value));
  }
  return out;
}

SparseOperator commutator(const SparseOperator& a, const SparseOperator& b) {
  if (!a.is_square() || !b.is_square() || a.dim() != b.dim()) {
    throw std::invalid_argument("commutator: operators must be square and of equal dimension");
  }
  return compose(a, b) - compose(b, a);
}

double max_residual(const SparseOperator& a) {
  double worst = 0.0;
  for (const auto& [key, value] : a.entries()) {
    worst = std::max(worst, std::abs(value));
  }
  return worst;
}

int commutant_dimension(std::span<const SparseOperator> ops, double rank_tol) {
  if (ops.empty()) throw std::invalid_argument("commutant_dimension: empty operator list");
  const int d = ops[0].dim();
  for (const SparseOperator& o : ops) {
    if (!o.is_square() || o.dim() != d) {
      throw std::invalid_argument("commutant_dimension: operators must share one square dimension");
    }
  }
  if (d > 200) throw std::invalid_argument("commutant_dimension: dimension above the supported 200");
  const int dd = d * d;

  // vec(AX - XA) = (I (x) A - A^T (x) I) vec(X), column-major vec.
  Eigen::MatrixXcd stacked = Eigen::MatrixXcd::Zero(static_cast<int>(ops.size()) * dd, dd);
  for (std::size_t o = 0; o < ops.size(); ++o) {
    const Eigen::MatrixXcd a = ops[o].dense();
    const int base = static_cast<int>(o) * dd;
    for (int j = 0; j < d; ++j) {
      for (int i = 0; i < d; ++i) {
        for (int k = 0; k < d; ++k) {
          stacked(base + j * d + i, j * d + k) += a(i, k);
          stacked(base + k * d + i, j * d + i) -= a(j, k);
        }
      }
    }
  }

  Eigen::BDCSVD<Eigen::MatrixXcd> svd;
  svd.setThreshold(rank_tol);
  svd.compute(stacked);
  return dd - static_cast<int>(svd.rank());
}

void VerificationReport::add(std::string name, double max_abs_residual, double tolerance) {
  CheckResult result;
  result.name = std::move(name);
  result.max_abs_residual = max_abs_residual;
  result.tolerance = tolerance;
  result.pass = (max_abs_residual <= tolerance);
  checks_.push_back(std::move(result));
}

void VerificationReport::merge(const VerificationReport& other) {
  checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
}

bool VerificationReport::all_pass() const { return failed() == 0; }

int VerificationReport::passed() const {
  int count = 0;
  for (const CheckResult& c : checks_) count += c.pass ? 1 : 0;
  return count;
}

int VerificationReport::failed() const { return static_cast<int>(checks_.size()) - passed(); }

}  // namespace oscq::op
