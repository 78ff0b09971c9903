#include "gwline/types.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace gwline {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw validation_error(msg); }

} // namespace

CostParams::CostParams(double alpha) : alpha_(alpha) {
  if (!std::isfinite(alpha) || alpha <= 0.0) {
    fail("cost exponent alpha must be a finite real > 0, got " + std::to_string(alpha));
  }
}

PointConfiguration::PointConfiguration(std::vector<double> points) : points_(std::move(points)) {
  if (points_.empty()) {
    fail("point configuration must contain at least one coordinate");
  }
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (!std::isfinite(points_[i])) {
      fail("coordinate " + std::to_string(i + 1) + " is not finite");
    }
  }
  for (std::size_t i = 0; i + 1 < points_.size(); ++i) {
    if (points_[i] >= points_[i + 1]) {
      std::ostringstream msg;
      msg << "coordinates must be strictly increasing: points " << (i + 1) << " and " << (i + 2)
          << " are " << points_[i] << " and " << points_[i + 1];
      fail(msg.str());
    }
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> m(n);
  std::iota(m.begin(), m.end(), std::size_t{0});
  Permutation p;
  p.map_ = std::move(m);
  return p;
}

Permutation Permutation::anti_identity(std::size_t n) {
  std::vector<std::size_t> m(n);
  for (std::size_t i = 0; i < n; ++i) m[i] = n - 1 - i;
  Permutation p;
  p.map_ = std::move(m);
  return p;
}

Permutation Permutation::cyclic(std::size_t n) {
  std::vector<std::size_t> m(n);
  for (std::size_t i = 0; i < n; ++i) m[i] = (i + 1) % n;
  Permutation p;
  p.map_ = std::move(m);
  return p;
}

Permutation Permutation::from_zero_based(std::vector<std::size_t> images) {
  const std::size_t n = images.size();
  if (n == 0) fail("permutation must not be empty");
  std::vector<bool> seen(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (images[i] >= n) {
      fail("permutation image " + std::to_string(images[i] + 1) + " at position " +
           std::to_string(i + 1) + " is out of range 1.." + std::to_string(n));
    }
    if (seen[images[i]]) {
      fail("permutation is not a bijection: image " + std::to_string(images[i] + 1) +
           " appears more than once");
    }
    seen[images[i]] = true;
  }
  Permutation p;
  p.map_ = std::move(images);
  return p;
}

Permutation Permutation::from_one_based(const std::vector<std::size_t>& images) {
  std::vector<std::size_t> zero(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (images[i] == 0) {
      fail("permutation images are 1-based; position " + std::to_string(i + 1) + " holds 0");
    }
    zero[i] = images[i] - 1;
  }
  return from_zero_based(std::move(zero));
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> inv(map_.size());
  for (std::size_t i = 0; i < map_.size(); ++i) inv[map_[i]] = i;
  Permutation p;
  p.map_ = std::move(inv);
  return p;
}

Permutation Permutation::after(const Permutation& other) const {
  if (size() != other.size()) {
    throw dimension_error("cannot compose permutations of sizes " + std::to_string(size()) +
                          " and " + std::to_string(other.size()));
  }
  std::vector<std::size_t> m(map_.size());
  for (std::size_t i = 0; i < map_.size(); ++i) m[i] = map_[other.map_[i]];
  Permutation p;
  p.map_ = std::move(m);
  return p;
}

std::vector<std::size_t> Permutation::one_based() const {
  std::vector<std::size_t> out(map_.size());
  for (std::size_t i = 0; i < map_.size(); ++i) out[i] = map_[i] + 1;
  return out;
}

std::string format_permutation(const Permutation& sigma) {
  std::string out;
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (i > 0) out += '-';
    out += std::to_string(sigma[i] + 1);
  }
  return out;
}

Permutation parse_permutation(const std::string& text) {
  std::vector<std::size_t> images;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    const std::string token =
        text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    std::size_t consumed = 0;
    unsigned long value = 0;
    try {
      value = std::stoul(token, &consumed);
    } catch (const std::exception&) {
      fail("cannot parse permutation entry '" + token + "'");
    }
    if (consumed != token.size()) {
      fail("cannot parse permutation entry '" + token + "'");
    }
    images.push_back(static_cast<std::size_t>(value));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return Permutation::from_one_based(images);
}

DiscreteMeasure::DiscreteMeasure(PointConfiguration support, std::vector<double> weights)
    : support_(std::move(support)), weights_(std::move(weights)) {
  if (weights_.size() != support_.size()) {
    throw dimension_error("measure has " + std::to_string(support_.size()) + " support points but " +
                          std::to_string(weights_.size()) + " weights");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (!std::isfinite(weights_[i]) || weights_[i] < 0.0) {
      fail("weight " + std::to_string(i + 1) + " must be a finite non-negative real");
    }
    sum += weights_[i];
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    fail("weights must sum to 1 within 1e-12, got " + std::to_string(sum));
  }
}

DiscreteMeasure DiscreteMeasure::uniform(PointConfiguration support) {
  const std::size_t n = support.size();
  std::vector<double> w(n, 1.0 / static_cast<double>(n));
  return DiscreteMeasure(std::move(support), std::move(w));
}

TransportPlan::TransportPlan(std::size_t rows, std::size_t cols, std::vector<double> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows_ == 0 || cols_ == 0) fail("transport plan must have positive dimensions");
  if (entries_.size() != rows_ * cols_) {
    throw dimension_error("transport plan expects " + std::to_string(rows_ * cols_) +
                          " entries, got " + std::to_string(entries_.size()));
  }
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (!std::isfinite(entries_[i]) || entries_[i] < 0.0) {
      fail("transport plan entry at flat index " + std::to_string(i) +
           " must be a finite non-negative real");
    }
  }
}

std::vector<double> TransportPlan::row_sums() const {
  std::vector<double> sums(rows_, 0.0);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) sums[i] += at(i, j);
  return sums;
}

std::vector<double> TransportPlan::col_sums() const {
  std::vector<double> sums(cols_, 0.0);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) sums[j] += at(i, j);
  return sums;
}

bool rel_close(double a, double b, double tol) {
  return std::abs(a - b) <= tol * (1.0 + std::max(std::abs(a), std::abs(b)));
}

} // namespace gwline
