#include "distribution_checks.hpp"

#include <cmath>
#include <stdexcept>

namespace checks {

namespace {

// Series expansion of P(a, x); converges fast for x < a + 1.
double gamma_p_series(double a, double x) {
  double ap = a;
  double sum = 1.0 / a;
  double term = sum;
  for (int i = 0; i < 500; ++i) {
    ap += 1.0;
    term *= x / ap;
    sum += term;
    if (std::fabs(term) < std::fabs(sum) * 1e-15) break;
  }
  return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Lentz continued fraction for Q(a, x); converges fast for x >= a + 1.
double gamma_q_fraction(double a, double x) {
  const double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= 500; ++i) {
    const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < 1e-15) break;
  }
  return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

}  // namespace

double regularized_gamma_q(double a, double x) {
  if (a <= 0.0) throw std::invalid_argument("gamma Q needs a > 0");
  if (x < 0.0) throw std::invalid_argument("gamma Q needs x >= 0");
  if (x == 0.0) return 1.0;
  if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
  return gamma_q_fraction(a, x);
}

double chi_square_p_value(double statistic, double dof) {
  return regularized_gamma_q(dof / 2.0, statistic / 2.0);
}

double chi_square_statistic(const std::vector<std::uint64_t>& observed,
                            const std::vector<double>& expected_probability) {
  if (observed.size() != expected_probability.size())
    throw std::invalid_argument("observed and expected sizes differ");
  std::uint64_t total = 0;
  for (std::uint64_t c : observed) total += c;
  double stat = 0.0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    const double expected = expected_probability[i] * static_cast<double>(total);
    if (expected <= 0.0) throw std::invalid_argument("expected count must be positive");
    const double diff = static_cast<double>(observed[i]) - expected;
    stat += diff * diff / expected;
  }
  return stat;
}

std::vector<double> power_law_pmf(double exponent, std::uint32_t lo, std::uint32_t hi) {
  if (lo < 1 || lo > hi) throw std::invalid_argument("bad power-law support");
  std::vector<double> pmf(hi - lo + 1);
  double total = 0.0;
  for (std::uint32_t x = lo; x <= hi; ++x) {
    const double mass = std::pow(static_cast<double>(x), -exponent);
    pmf[x - lo] = mass;
    total += mass;
  }
  for (double& p : pmf) p /= total;
  return pmf;
}

double power_law_mean(double exponent, std::uint32_t lo, std::uint32_t hi) {
  const auto pmf = power_law_pmf(exponent, lo, hi);
  double mean = 0.0;
  for (std::uint32_t x = lo; x <= hi; ++x) mean += static_cast<double>(x) * pmf[x - lo];
  return mean;
}

double goodness_of_fit(const std::map<std::uint64_t, std::uint64_t>& counts,
                       const std::map<std::uint64_t, double>& expected_probability) {
  std::vector<std::uint64_t> observed;
  std::vector<double> expected;
  observed.reserve(expected_probability.size());
  expected.reserve(expected_probability.size());
  for (const auto& [key, prob] : expected_probability) {
    const auto it = counts.find(key);
    observed.push_back(it == counts.end() ? 0 : it->second);
    expected.push_back(prob);
  }
  for (const auto& entry : counts) {
    if (!expected_probability.contains(entry.first))
      throw std::invalid_argument("observed an outcome with zero expected probability");
  }
  const double stat = chi_square_statistic(observed, expected);
  return chi_square_p_value(stat, static_cast<double>(expected.size()) - 1.0);
}

}  // namespace checks
