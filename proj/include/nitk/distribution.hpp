#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace nitk {

inline constexpr double kProbSumTol = 1e-12;

// Probability mass function over a finite alphabet, validated on
// construction: entries nonnegative, total within kProbSumTol of 1.
class Distribution {
 public:
  Distribution() = default;
  explicit Distribution(std::vector<double> probs);

  // Renormalizes if the total deviates from 1 by at most `tol`, throws
  // otherwise. Used by file loaders, which accept slack up to 1e-9.
  static Distribution normalized(std::vector<double> probs, double tol);

  static Distribution uniform(std::size_t n);
  static Distribution point_mass(std::size_t n, std::size_t at);

  std::size_t size() const { return p_.size(); }
  double operator[](std::size_t i) const { return p_[i]; }
  std::span<const double> probs() const { return p_; }

 private:
  std::vector<double> p_;
};

// Row-stochastic matrix P(y|x); row x is a Distribution over the output
// alphabet.
class Channel {
 public:
  Channel() = default;
  explicit Channel(std::vector<Distribution> rows);

  std::size_t input_size() const { return rows_.size(); }
  std::size_t output_size() const { return rows_.empty() ? 0 : rows_[0].size(); }
  const Distribution& row(std::size_t x) const { return rows_[x]; }
  double operator()(std::size_t x, std::size_t y) const { return rows_[x][y]; }

  static Channel bsc(double crossover);

 private:
  std::vector<Distribution> rows_;
};

// Joint pmf over a product alphabet, stored row-major: table[x * ny + y].
class JointDistribution {
 public:
  JointDistribution() = default;
  JointDistribution(std::size_t nx, std::size_t ny, std::vector<double> table);

  static JointDistribution product(const Distribution& px, const Distribution& py);
  // Q_X(x) * P(y|x).
  static JointDistribution from_input_and_channel(const Distribution& px, const Channel& ch);

  std::size_t nx() const { return nx_; }
  std::size_t ny() const { return ny_; }
  double operator()(std::size_t x, std::size_t y) const { return table_[x * ny_ + y]; }
  std::span<const double> table() const { return table_; }

  Distribution marginal_x() const;
  Distribution marginal_y() const;
  // Conditional rows P(y|x); rows with zero marginal come back uniform so the
  // result is always a valid Channel (such rows carry no probability).
  Channel conditional_given_x() const;

 private:
  std::size_t nx_ = 0, ny_ = 0;
  std::vector<double> table_;
};

}  // namespace nitk
