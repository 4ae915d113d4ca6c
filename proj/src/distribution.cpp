#include "nitk/distribution.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace nitk {

namespace {
void check_mass(const std::vector<double>& p, double tol, const char* what) {
  if (p.empty()) throw std::invalid_argument(std::string(what) + ": empty alphabet");
  double sum = 0.0;
  for (double v : p) {
    if (!(v >= 0.0) || !std::isfinite(v))
      throw std::invalid_argument(std::string(what) + ": negative or non-finite entry");
    sum += v;
  }
  if (std::abs(sum - 1.0) > tol)
    throw std::invalid_argument(std::string(what) + ": entries sum to " + std::to_string(sum) +
                                ", not 1");
}
}  // namespace

Distribution::Distribution(std::vector<double> probs) : p_(std::move(probs)) {
  check_mass(p_, kProbSumTol, "Distribution");
}

Distribution Distribution::normalized(std::vector<double> probs, double tol) {
  check_mass(probs, tol, "Distribution");
  double sum = std::accumulate(probs.begin(), probs.end(), 0.0);
  for (double& v : probs) v /= sum;
  return Distribution(std::move(probs));
}

Distribution Distribution::uniform(std::size_t n) {
  return Distribution(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

Distribution Distribution::point_mass(std::size_t n, std::size_t at) {
  std::vector<double> p(n, 0.0);
  p.at(at) = 1.0;
  return Distribution(std::move(p));
}

Channel::Channel(std::vector<Distribution> rows) : rows_(std::move(rows)) {
  if (rows_.empty()) throw std::invalid_argument("Channel: no rows");
  for (const auto& r : rows_)
    if (r.size() != rows_[0].size()) throw std::invalid_argument("Channel: ragged rows");
}

Channel Channel::bsc(double crossover) {
  if (crossover < 0.0 || crossover > 1.0)
    throw std::invalid_argument("bsc: crossover not in [0,1]");
  return Channel({Distribution({1.0 - crossover, crossover}),
                  Distribution({crossover, 1.0 - crossover})});
}

JointDistribution::JointDistribution(std::size_t nx, std::size_t ny, std::vector<double> table)
    : nx_(nx), ny_(ny), table_(std::move(table)) {
  if (nx_ == 0 || ny_ == 0 || table_.size() != nx_ * ny_)
    throw std::invalid_argument("JointDistribution: dimension mismatch");
  check_mass(table_, kProbSumTol, "JointDistribution");
}

JointDistribution JointDistribution::product(const Distribution& px, const Distribution& py) {
  std::vector<double> t(px.size() * py.size());
  for (std::size_t x = 0; x < px.size(); ++x)
    for (std::size_t y = 0; y < py.size(); ++y) t[x * py.size() + y] = px[x] * py[y];
  return JointDistribution(px.size(), py.size(), std::move(t));
}

JointDistribution JointDistribution::from_input_and_channel(const Distribution& px,
                                                            const Channel& ch) {
  if (px.size() != ch.input_size())
    throw std::invalid_argument("from_input_and_channel: alphabet mismatch");
  std::vector<double> t(px.size() * ch.output_size());
  for (std::size_t x = 0; x < px.size(); ++x)
    for (std::size_t y = 0; y < ch.output_size(); ++y)
      t[x * ch.output_size() + y] = px[x] * ch(x, y);
  return JointDistribution(px.size(), ch.output_size(), std::move(t));
}

Distribution JointDistribution::marginal_x() const {
  std::vector<double> m(nx_, 0.0);
  for (std::size_t x = 0; x < nx_; ++x)
    for (std::size_t y = 0; y < ny_; ++y) m[x] += table_[x * ny_ + y];
  return Distribution::normalized(std::move(m), kProbSumTol);
}

Distribution JointDistribution::marginal_y() const {
  std::vector<double> m(ny_, 0.0);
  for (std::size_t x = 0; x < nx_; ++x)
    for (std::size_t y = 0; y < ny_; ++y) m[y] += table_[x * ny_ + y];
  return Distribution::normalized(std::move(m), kProbSumTol);
}

Channel JointDistribution::conditional_given_x() const {
  std::vector<Distribution> rows;
  rows.reserve(nx_);
  for (std::size_t x = 0; x < nx_; ++x) {
    double mass = 0.0;
    for (std::size_t y = 0; y < ny_; ++y) mass += table_[x * ny_ + y];
    if (mass <= 0.0) {
      rows.push_back(Distribution::uniform(ny_));
      continue;
    }
    std::vector<double> r(ny_);
    for (std::size_t y = 0; y < ny_; ++y) r[y] = table_[x * ny_ + y] / mass;
    rows.push_back(Distribution::normalized(std::move(r), 1e-9));
  }
  return Channel(std::move(rows));
}

}  // namespace nitk
