#ifndef GWLINE_TYPES_HPP
#define GWLINE_TYPES_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace gwline {

/// Input failed a domain invariant (unsorted points, bad weights, ...).
class validation_error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Sizes of two arguments do not match.
class dimension_error : public validation_error {
public:
  using validation_error::validation_error;
};

/// A declared output file could not be written.
class io_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Cost function c(s,t) = |s-t|^alpha with alpha > 0.
class CostParams {
public:
  explicit CostParams(double alpha);

  double alpha() const { return alpha_; }

private:
  double alpha_;
};

/// Strictly increasing, pairwise distinct real coordinates.
class PointConfiguration {
public:
  explicit PointConfiguration(std::vector<double> points);

  std::size_t size() const { return points_.size(); }
  double operator[](std::size_t i) const { return points_[i]; }
  const std::vector<double>& points() const { return points_; }

  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }

private:
  std::vector<double> points_;
};

/// Bijection of {1,...,n}. Stored 0-based; all user-facing text is 1-based.
class Permutation {
public:
  Permutation() = default;

  static Permutation identity(std::size_t n);
  static Permutation anti_identity(std::size_t n);
  /// i -> i+1 for i < n, n -> 1 (1-based description).
  static Permutation cyclic(std::size_t n);
  static Permutation from_one_based(const std::vector<std::size_t>& images);
  static Permutation from_zero_based(std::vector<std::size_t> images);

  std::size_t size() const { return map_.size(); }
  /// 0-based image of 0-based index i.
  std::size_t operator[](std::size_t i) const { return map_[i]; }
  const std::vector<std::size_t>& mapping() const { return map_; }

  Permutation inverse() const;
  /// (*this after other)(i) = (*this)(other(i)).
  Permutation after(const Permutation& other) const;

  std::vector<std::size_t> one_based() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  /// Lexicographic order on the mapping; used for deterministic reporting.
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.map_ <=> b.map_;
  }

private:
  std::vector<std::size_t> map_;
};

/// 1-based images joined by '-', e.g. "2-3-1".
std::string format_permutation(const Permutation& sigma);

/// Parse a 1-based permutation string like "3,1,2".
Permutation parse_permutation(const std::string& text);

/// Finite discrete probability measure sum_i w_i * delta_{x_i}.
class DiscreteMeasure {
public:
  DiscreteMeasure(PointConfiguration support, std::vector<double> weights);

  static DiscreteMeasure uniform(PointConfiguration support);

  std::size_t size() const { return support_.size(); }
  const PointConfiguration& support() const { return support_; }
  const std::vector<double>& weights() const { return weights_; }

private:
  PointConfiguration support_;
  std::vector<double> weights_;
};

/// Non-negative n x m coupling matrix, row-major.
class TransportPlan {
public:
  TransportPlan(std::size_t rows, std::size_t cols, std::vector<double> entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  const std::vector<double>& entries() const { return entries_; }

  std::vector<double> row_sums() const;
  std::vector<double> col_sums() const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> entries_;
};

/// |a - b| <= tol * (1 + max(|a|, |b|)).
bool rel_close(double a, double b, double tol);

} // namespace gwline

#endif
