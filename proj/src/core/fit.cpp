#include "core/fit.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

namespace ans {

std::vector<unsigned long> geometric_grid(unsigned long lo, unsigned long hi, std::size_t points) {
  std::vector<unsigned long> g;
  if (points < 2 || lo >= hi) return {lo};
  const double step = std::log(static_cast<double>(hi) / static_cast<double>(lo)) /
                      static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i) {
    auto n = static_cast<unsigned long>(std::llround(static_cast<double>(lo) * std::exp(step * static_cast<double>(i))));
    n = std::clamp(n, lo, hi);
    if (g.empty() || n > g.back()) g.push_back(n);
  }
  return g;
}

std::string FitReport::render() const {
  std::ostringstream out;
  out.precision(6);
  out << "fit points=" << n.size() << " min=" << min << " max=" << max << " spread=" << spread
      << " tol=" << tolerance << (pass ? " PASS" : " FAIL");
  return out.str();
}

FitReport fit_logs(const std::vector<unsigned long>& ns, const std::vector<double>& log_t,
                   const GrowthClass& cls, double tolerance) {
  FitReport r;
  r.n = ns;
  r.tolerance = tolerance;
  for (std::size_t i = 0; i < ns.size(); ++i) {
    const double n = static_cast<double>(ns[i]);
    const double ln = std::log(n);
    double value = 0;
    switch (cls.kind) {
      case GrowthClass::Kind::LogPower: {
        double f = (cls.f_lo + cls.f_hi) / 2, g = (cls.logexp_lo + cls.logexp_hi) / 2;
        value = std::exp(log_t[i] - f * ln - g * std::log(ln));
        break;
      }
      case GrowthClass::Kind::Power:
        value = std::exp(log_t[i] - to_double(cls.r) * ln);
        break;
      case GrowthClass::Kind::StretchedExp: {
        const double k = (cls.innerconst_lo + cls.innerconst_hi) / 2;
        const double inner = k * std::pow(n, to_double(cls.innerexp));
        value = (log_t[i] - to_double(cls.polyexp) * ln) / (cls.base.log_value() * inner);
        break;
      }
    }
    r.ratio.push_back(value);
  }
  if (!r.ratio.empty()) {
    r.min = *std::min_element(r.ratio.begin(), r.ratio.end());
    r.max = *std::max_element(r.ratio.begin(), r.ratio.end());
    r.spread = r.min > 0 ? r.max / r.min : INFINITY;
  }
  r.pass = r.min > 0 && r.spread <= tolerance;
  return r;
}

FitReport empirical_fit(const RecognizableSet& x, const GrowthClass& cls,
                        const std::vector<unsigned long>& grid, double tolerance) {
  std::vector<double> logs;
  for (unsigned long n : grid) {
    BigInt t = x.t(BigInt(n));
    logs.push_back(t > 0 ? log_big(t) : -INFINITY);
  }
  return fit_logs(grid, logs, cls, tolerance);
}

namespace {

double golden_min(const std::function<double(double)>& f, double lo, double hi, int iters,
                  double* arg = nullptr) {
  const double phi = (std::sqrt(5.0) - 1) / 2;
  double a = lo, b = hi;
  double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int i = 0; i < iters; ++i) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - phi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + phi * (b - a);
      f2 = f(x2);
    }
  }
  // Endpoints matter when the optimum sits on a parameter bound.
  double best_x = f1 <= f2 ? x1 : x2, best = std::min(f1, f2);
  for (double e : {lo, hi}) {
    double v = f(e);
    if (v < best) {
      best = v;
      best_x = e;
    }
  }
  if (arg) *arg = best_x;
  return best;
}

double range_of(const std::vector<double>& r) {
  auto [mn, mx] = std::minmax_element(r.begin(), r.end());
  return *mx - *mn;
}

// min over (x, y) in the box of range_i(y_i - x·u_i - y·w_i).
FamilyFit fit_two(const std::string& name, const std::vector<double>& target,
                  const std::vector<double>& u, double xlo, double xhi,
                  const std::vector<double>& w, double ylo, double yhi) {
  std::vector<double> res(target.size());
  auto spread = [&](double x, double y) {
    for (std::size_t i = 0; i < target.size(); ++i) res[i] = target[i] - x * u[i] - y * w[i];
    return range_of(res);
  };
  double best_x = 0, best_y = 0;
  auto inner = [&](double x) {
    return golden_min([&](double y) { return spread(x, y); }, ylo, yhi, 90);
  };
  double best = golden_min(inner, xlo, xhi, 90, &best_x);
  golden_min([&](double y) { return spread(best_x, y); }, ylo, yhi, 90, &best_y);
  return {name, {best_x, best_y}, best};
}

}  // namespace

std::vector<FamilyFit> minimax_family_fits(const std::vector<unsigned long>& ns,
                                           const std::vector<double>& log_t) {
  std::vector<double> ln, lln, zero(ns.size(), 0.0);
  for (unsigned long n : ns) {
    ln.push_back(std::log(static_cast<double>(n)));
    lln.push_back(std::log(ln.back()));
  }
  std::vector<FamilyFit> out;
  out.push_back(fit_two("logpower", log_t, ln, 1.0, 64.0, lln, -256.0, 256.0));
  out.push_back(fit_two("power", log_t, ln, 1.0, 64.0, zero, 0.0, 0.0));
  for (int d = 1; d <= 4; ++d) {
    std::vector<double> root;
    double s_max = 0;
    for (std::size_t i = 0; i < ns.size(); ++i) {
      root.push_back(std::pow(static_cast<double>(ns[i]), 1.0 / d));
      s_max = std::max(s_max, 2 * std::fabs(log_t[i]) / root.back());
    }
    out.push_back(fit_two("stretchedexp d=" + std::to_string(d), log_t, ln, 0.0, 64.0, root, 0.0,
                          s_max));
  }
  return out;
}

}  // namespace ans
