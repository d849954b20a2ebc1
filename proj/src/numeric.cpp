// Copyright 2026 The circbeta Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "circbeta/numeric.hpp"

#include <algorithm>
#include <cmath>

#include <boost/math/distributions/chi_squared.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include "circbeta/error.hpp"

namespace circbeta::num {

namespace {

boost::math::quadrature::tanh_sinh<double>& integrator() {
  thread_local boost::math::quadrature::tanh_sinh<double> ts;
  return ts;
}

}  // namespace

double integrate(const EndpointIntegrand& f, double lo, double hi, double rel_tol) {
  if (!(hi > lo) || !std::isfinite(lo) || !std::isfinite(hi)) throw InvalidArgument("integrate: need finite lo < hi");
  const double mid = 0.5 * (lo + hi);
  // Boost passes xc = lo - x (<= 0) on the left half and hi - x on the right.
  auto g = [&](double x, double xc) {
    if (x < mid) return f(x, -xc, hi - x);
    return f(x, x - lo, xc);
  };
  double error = 0.0;
  double l1 = 0.0;
  return integrator().integrate(g, lo, hi, rel_tol, &error, &l1);
}

double integrate(const std::function<double(double)>& f, double lo, double hi, double rel_tol) {
  return integrate([&](double x, double, double) { return f(x); }, lo, hi, rel_tol);
}

double integrate_2d(const std::function<double(double, double)>& f, double lo_x, double hi_x,
                    const std::function<double(double)>& lo_y, const std::function<double(double)>& hi_y,
                    double rel_tol) {
  // The inner integrator must be distinct from the outer one.
  boost::math::quadrature::tanh_sinh<double> inner;
  auto outer = [&](double x) {
    const double a = lo_y(x);
    const double b = hi_y(x);
    if (!(b > a)) return 0.0;
    double error = 0.0;
    return inner.integrate([&](double y) { return f(x, y); }, a, b, rel_tol, &error);
  };
  return integrate(outer, lo_x, hi_x, rel_tol);
}

void RunningStats::add(double x) {
  ++n_;
  const double delta = x - mean_;
  mean_ += delta / static_cast<double>(n_);
  m2_ += delta * (x - mean_);
}

double RunningStats::variance() const { return n_ < 2 ? 0.0 : m2_ / static_cast<double>(n_ - 1); }

double RunningStats::stderr_of_mean() const {
  return n_ < 2 ? 0.0 : std::sqrt(variance() / static_cast<double>(n_));
}

ChiSquareResult chi_square_test(const std::vector<std::uint64_t>& observed, const std::vector<double>& probabilities,
                                double min_expected) {
  if (observed.size() != probabilities.size() || observed.empty())
    throw InvalidArgument("chi_square_test: mismatched cell counts");
  double total = 0.0;
  for (auto o : observed) total += static_cast<double>(o);

  std::vector<double> obs;
  std::vector<double> expct;
  double acc_o = 0.0;
  double acc_e = 0.0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    acc_o += static_cast<double>(observed[i]);
    acc_e += probabilities[i] * total;
    if (acc_e >= min_expected) {
      obs.push_back(acc_o);
      expct.push_back(acc_e);
      acc_o = acc_e = 0.0;
    }
  }
  if (acc_e > 0.0 || acc_o > 0.0) {
    if (expct.empty()) {
      obs.push_back(acc_o);
      expct.push_back(acc_e);
    } else {
      obs.back() += acc_o;
      expct.back() += acc_e;
    }
  }

  ChiSquareResult out;
  out.cells = obs.size();
  for (std::size_t i = 0; i < obs.size(); ++i) {
    const double diff = obs[i] - expct[i];
    out.statistic += expct[i] > 0.0 ? diff * diff / expct[i] : (obs[i] > 0.0 ? INFINITY : 0.0);
  }
  out.dof = out.cells > 1 ? out.cells - 1 : 1;
  boost::math::chi_squared_distribution<double> law(static_cast<double>(out.dof));
  out.p_value = std::isfinite(out.statistic) ? boost::math::cdf(boost::math::complement(law, out.statistic)) : 0.0;
  return out;
}

double chi_square_critical(std::size_t dof, double alpha) {
  boost::math::chi_squared_distribution<double> law(static_cast<double>(dof));
  return boost::math::quantile(boost::math::complement(law, alpha));
}

long bin_index(double x, double lo, double hi, std::size_t bins) {
  if (!(x >= lo && x < hi)) return -1;
  const auto k = static_cast<long>((x - lo) / (hi - lo) * static_cast<double>(bins));
  return std::min(k, static_cast<long>(bins) - 1);
}

double relative_error(double a, double b) {
  return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300});
}

}  // namespace circbeta::num
