#include "periodgeom/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <iomanip>
#include <limits>
#include <mutex>
#include <sstream>
#include <thread>

#include "periodgeom/period.hpp"

namespace periodgeom {

namespace {

std::vector<double> y_grid(const SigmaRegion& region, int density) {
  const double lo = 2.0 * region.y_floor.to_double();
  std::vector<double> grid(static_cast<std::size_t>(density));
  if (!region.y_ceil.is_zero()) {
    const double hi = region.y_ceil.to_double();
    if (!(hi > lo)) throw ValidationError("y ceiling must exceed twice the floor");
    for (int j = 0; j < density; ++j)
      grid[static_cast<std::size_t>(j)] =
          density == 1 ? lo : lo * std::pow(hi / lo, double(j) / double(density - 1));
  } else {
    for (int j = 0; j < density; ++j)
      grid[static_cast<std::size_t>(j)] = lo * std::pow(10.0, double(j));
  }
  return grid;
}

Eigen::MatrixXcd real_to_complex(const RatMatrix& m) {
  Eigen::MatrixXcd out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) out(i, j) = {m(i, j).to_double(), 0.0};
  return out;
}

std::vector<double> point_y(const SamplePoint& z) {
  std::vector<double> y(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) y[i] = z[i].imag();
  return y;
}

// log-coordinates of the sigma monomial: ratios of consecutive y, then y_n.
std::vector<double> log_ratios(const std::vector<double>& y) {
  const std::size_t n = y.size();
  std::vector<double> ell(n);
  for (std::size_t i = 0; i + 1 < n; ++i) ell[i] = std::log(y[i] / y[i + 1]);
  ell[n - 1] = std::log(y[n - 1]);
  return ell;
}

double sigma_monomial(const std::vector<double>& y, const std::vector<int>& sigma) {
  double v = 1.0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    const double base = i + 1 < y.size() ? y[i] / y[i + 1] : y[i];
    v *= std::pow(base, sigma[i]);
  }
  return v;
}

void validate_ray(const RaySpec& ray, Index n) {
  if (static_cast<Index>(ray.base.size()) != n ||
      static_cast<Index>(ray.weights.size()) != n)
    throw DimensionError("ray dimensions do not match the cone");
  if (ray.lambdas.empty()) throw ValidationError("ray has no scale points");
  for (std::size_t i = 0; i + 1 < ray.lambdas.size(); ++i)
    if (!(ray.lambdas[i] < ray.lambdas[i + 1]))
      throw ValidationError("ray scales must increase");
  for (std::size_t i = 0; i < ray.weights.size(); ++i) {
    if (!(ray.weights[i] > 0)) throw ValidationError("ray weights must be positive");
    if (i > 0 && ray.weights[i] > ray.weights[i - 1])
      throw ValidationError("ray weights must be non-increasing");
  }
  for (std::size_t i = 0; i < ray.base.size(); ++i) {
    if (!(ray.base[i].imag() > 0)) throw ValidationError("ray base must have positive y");
    if (i > 0 && ray.base[i].imag() > ray.base[i - 1].imag())
      throw ValidationError("ray base y must be non-increasing");
  }
}

SamplePoint ray_point(const RaySpec& ray, double lambda) {
  SamplePoint z(ray.base.size());
  for (std::size_t i = 0; i < z.size(); ++i)
    z[i] = ray.base[i] + std::complex<double>(0.0, lambda * ray.weights[i]);
  return z;
}

std::array<double, 3> hermitian_defects(const Eigen::MatrixXcd& gram) {
  const Index m = gram.rows();
  std::array<double, 3> d = {0.0, 0.0, 0.0};
  for (Index i = 0; i < m; ++i)
    if (!(gram(i, i).real() > 0))
      throw UnpolarizedError("metric is not positive on the basis");
  for (Index i = 0; i < m; ++i)
    for (Index j = 0; j < m; ++j)
      d[0] = std::max(d[0], std::abs(gram(i, j)) / gram(i, i).real());
  for (Index i = 0; i < m; ++i)
    for (Index j = i; j < m; ++j)
      d[1] = std::max(d[1], gram(i, i).real() / gram(j, j).real());
  double prod = 1.0;
  for (Index i = 0; i < m; ++i) prod *= gram(i, i).real();
  const double det = gram.determinant().real();
  d[2] = det > 0 ? prod / det : std::numeric_limits<double>::infinity();
  return d;
}

}  // namespace

std::vector<SamplePoint> sample_sigma(const SigmaRegion& region, int density) {
  if (region.n < 1) throw DimensionError("region needs at least one coordinate");
  if (density < 1) throw ValidationError("density must be positive");
  if (region.y_floor < Rat(1)) throw ValidationError("y floor must be at least 1");
  const std::vector<double> grid = y_grid(region, density);
  const std::size_t n = static_cast<std::size_t>(region.n);

  std::vector<std::vector<std::size_t>> tuples;
  std::vector<std::size_t> idx(n, 0);
  for (;;) {
    tuples.push_back(idx);
    // next non-increasing index tuple in lexicographic order
    std::size_t j = n;
    while (j > 0) {
      --j;
      const std::size_t cap = j == 0 ? static_cast<std::size_t>(density - 1) : idx[j - 1];
      if (idx[j] < cap) {
        ++idx[j];
        for (std::size_t k = j + 1; k < n; ++k) idx[k] = 0;
        break;
      }
      if (j == 0) {
        j = n + 1;  // exhausted
        break;
      }
    }
    if (j == n + 1) break;
  }

  std::vector<SamplePoint> out;
  out.reserve(static_cast<std::size_t>(density) * tuples.size());
  for (int k = 0; k < density; ++k) {
    const double x = (2.0 * k + 1.0) / (2.0 * density);
    for (const auto& t : tuples) {
      SamplePoint z(n);
      for (std::size_t i = 0; i < n; ++i) z[i] = {x, grid[t[i]]};
      out.push_back(std::move(z));
    }
  }
  return out;
}

std::vector<RaySpec> default_rays(Index n, double lambda_max, int points) {
  if (n < 1) throw DimensionError("need at least one ray coordinate");
  if (points < 2 || !(lambda_max > 1.0)) throw ValidationError("bad ray scale grid");
  std::vector<RaySpec> rays;
  // consecutive weight ratios of 64 keep every ray deep in the regime where
  // the metric is a single sigma-monomial, so one constant fits all rays
  constexpr double kSeparation = 64.0;
  for (Index r = 0; r < n; ++r) {
    RaySpec ray;
    ray.base.resize(static_cast<std::size_t>(n));
    ray.weights.resize(static_cast<std::size_t>(n));
    for (Index i = 0; i < n; ++i) {
      ray.base[static_cast<std::size_t>(i)] = {0.5, double(n - i) + 1.0};
      ray.weights[static_cast<std::size_t>(i)] =
          std::pow(kSeparation, double(n - 1 - i) + (i < r ? 1.0 : 0.0));
    }
    ray.lambdas.resize(static_cast<std::size_t>(points));
    for (int k = 0; k < points; ++k)
      ray.lambdas[static_cast<std::size_t>(k)] =
          std::pow(lambda_max, double(k) / double(points - 1));
    rays.push_back(std::move(ray));
  }
  return rays;
}

FitResult fit_exponents(const NilpotentOrbitData& data, const RatVector& u,
                        const std::vector<RaySpec>& rays) {
  const Index n = data.variables();
  if (u.size() != data.rank()) throw DimensionError("vector size does not match the lattice");
  if (is_zero_matrix(u)) throw ValidationError("cannot fit the zero vector");
  if (rays.empty()) throw ValidationError("no rays given");
  for (const auto& ray : rays) validate_ray(ray, n);

  const AdaptedFlag flag = adapted_flag(data);
  Eigen::MatrixXcd uc(u.size(), 1);
  for (Index i = 0; i < u.size(); ++i) uc(i, 0) = {u(i).to_double(), 0.0};

  std::size_t total = 0;
  for (const auto& ray : rays) total += ray.lambdas.size();
  Eigen::MatrixXd a(static_cast<Index>(total), n + 1);
  Eigen::VectorXd b(static_cast<Index>(total));
  std::vector<Index> last_row(rays.size());

  Index row = 0;
  for (std::size_t r = 0; r < rays.size(); ++r) {
    for (double lambda : rays[r].lambdas) {
      const SamplePoint z = ray_point(rays[r], lambda);
      if (!is_polarized_at(data, flag, z))
        throw UnpolarizedError("unpolarized sample on a fitting ray");
      const double h = hodge_metric(data, flag, z, uc)(0, 0).real();
      if (!(h > 0)) throw UnpolarizedError("metric value is not positive");
      const std::vector<double> ell = log_ratios(point_y(z));
      for (Index j = 0; j < n; ++j) a(row, j) = ell[static_cast<std::size_t>(j)];
      a(row, n) = 1.0;
      b(row) = std::log(h);
      ++row;
    }
    last_row[r] = row - 1;
  }

  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(a);
  qr.setThreshold(1e-8);
  if (qr.rank() < n + 1)
    throw IllConditionedError("rays do not determine the exponents");
  const Eigen::VectorXd sol = qr.solve(b);

  FitResult out;
  out.raw.resize(static_cast<std::size_t>(n));
  out.exponents.resize(static_cast<std::size_t>(n));
  for (Index j = 0; j < n; ++j) {
    out.raw[static_cast<std::size_t>(j)] = sol(j);
    out.exponents[static_cast<std::size_t>(j)] = static_cast<int>(std::llround(sol(j)));
  }

  double c = 0.0;
  for (Index i = 0; i < a.rows(); ++i) {
    double fitted = 0.0;
    for (Index j = 0; j < n; ++j) fitted += out.exponents[static_cast<std::size_t>(j)] * a(i, j);
    c += b(i) - fitted;
  }
  c /= double(a.rows());

  out.residual = 0.0;
  for (Index i : last_row) {
    double fitted = c;
    for (Index j = 0; j < n; ++j) fitted += out.exponents[static_cast<std::size_t>(j)] * a(i, j);
    out.residual = std::max(out.residual, std::abs(std::expm1(fitted - b(i))));
  }
  return out;
}

std::vector<int> predicted_exponents(const GradedSplitting<Rat>& j, const RatVector& u) {
  if (is_zero_matrix(u)) throw ValidationError("zero vector has no multidegree");
  const std::vector<int>* found = nullptr;
  for (const auto& [deg, piece] : j.pieces) {
    if (piece.contains(u)) {
      if (found) throw ValidationError("vector lies in more than one splitting piece");
      found = &deg;
    }
  }
  if (!found)
    throw ValidationError("vector mixes splitting pieces; no single multidegree applies");
  return *found;
}

bool det_consistency(const GradedSplitting<Rat>& j) {
  std::vector<long long> sums;
  for (const auto& [deg, piece] : j.pieces) {
    if (sums.empty()) sums.assign(deg.size(), 0);
    for (std::size_t i = 0; i < deg.size(); ++i) sums[i] += piece.dim() * deg[i];
  }
  for (long long s : sums)
    if (s != 0) return false;
  return true;
}

MonomialCheck roughly_monomial_check(
    const std::vector<std::pair<SamplePoint, double>>& samples,
    const std::vector<int>& sigma) {
  if (samples.empty()) throw ValidationError("no samples");
  if (samples.front().first.size() != sigma.size())
    throw DimensionError("multidegree length does not match the samples");
  const double inf = std::numeric_limits<double>::infinity();
  double c_all = 0.0, c_two = 0.0, c_three = 0.0;
  bool seen_two = false, seen_mid = false;
  for (const auto& [z, value] : samples) {
    const std::vector<double> y = point_y(z);
    const double mono = sigma_monomial(y, sigma);
    const double r = std::abs(value) / mono;
    if (!(r > 0) || !std::isfinite(r)) return {false, inf};
    const double g = std::max(r, 1.0 / r);
    const double scale = y.front();
    c_all = std::max(c_all, g);
    if (scale <= 1e2) {
      c_two = std::max(c_two, g);
      seen_two = true;
    }
    if (scale <= 1e3) {
      c_three = std::max(c_three, g);
      if (scale > 1e2) seen_mid = true;
    }
  }
  if (!seen_two || !seen_mid)
    throw ValidationError("samples do not cover both comparison scales");
  return {c_three < 1.05 * c_two, c_all};
}

std::function<double(std::complex<double>)> curve_restriction(
    std::function<double(const SamplePoint&)> f, const std::vector<Rat>& alpha,
    const std::vector<double>& beta, const SamplePoint& zeta) {
  if (alpha.size() != beta.size()) throw DimensionError("curve coefficient sizes differ");
  if (alpha.empty()) throw ValidationError("curve needs at least one moving coordinate");
  std::vector<double> a(alpha.size());
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (!(alpha[i] > Rat(0))) throw ValidationError("curve slopes must be positive");
    a[i] = alpha[i].to_double();
  }
  return [f = std::move(f), a, beta, zeta](std::complex<double> w) {
    SamplePoint z(a.size() + zeta.size());
    for (std::size_t i = 0; i < a.size(); ++i) z[i] = (w - beta[i]) / a[i];
    for (std::size_t i = 0; i < zeta.size(); ++i) z[a.size() + i] = zeta[i];
    return f(z);
  };
}

std::pair<RatMatrix, std::vector<std::vector<int>>> adapted_integral_basis(
    const NilpotentOrbitData& data) {
  const GradedSplitting<Rat> j = rational_splitting(cone_weight_filtrations(data.cone));
  const Index d = data.rank();
  RatMatrix basis(d, d);
  std::vector<std::vector<int>> degrees;
  Index col = 0;
  for (const auto& [deg, piece] : j.pieces) {
    for (Index c = 0; c < piece.dim(); ++c) {
      RatVector v = piece.basis().col(c);
      BigInt den(1), num(0);
      for (Index i = 0; i < d; ++i) {
        den = boost::multiprecision::lcm(den, v(i).denominator());
        num = boost::multiprecision::gcd(num, v(i).numerator());
      }
      const Rat scale(den, num);  // v is nonzero, so num != 0
      for (Index i = 0; i < d; ++i) basis(i, col) = v(i) * scale;
      degrees.push_back(deg);
      ++col;
    }
  }
  if (col != d) throw IncompatibleFiltrationsError("splitting does not span the lattice");
  return {std::move(basis), std::move(degrees)};
}

SweepResult reducedness_sweep(const NilpotentOrbitData& data, const SigmaRegion& region,
                              int density, int jobs, bool wrong_basis) {
  if (region.n != data.variables())
    throw DimensionError("region dimension does not match the cone");
  auto [basis, degrees] = adapted_integral_basis(data);
  const AdaptedFlag flag = adapted_flag(data);
  const std::vector<SamplePoint> grid = sample_sigma(region, density);
  const Index d = data.rank();

  std::size_t deepest = 0;
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (std::lexicographical_compare(point_y(grid[deepest]).begin(),
                                     point_y(grid[deepest]).end(),
                                     point_y(grid[i]).begin(), point_y(grid[i]).end()))
      deepest = i;
  }
  if (!is_polarized_at(data, flag, grid[deepest]))
    throw UnpolarizedError("unpolarized at the deepest grid point");
  const Eigen::MatrixXcd g_deep = hodge_metric(data, flag, grid[deepest], real_to_complex(basis));

  SweepResult result;
  result.order.resize(static_cast<std::size_t>(d));
  for (Index i = 0; i < d; ++i) result.order[static_cast<std::size_t>(i)] = i;
  std::stable_sort(result.order.begin(), result.order.end(), [&](Index a, Index b) {
    return g_deep(a, a).real() < g_deep(b, b).real();
  });
  RatMatrix ordered(d, d);
  for (Index i = 0; i < d; ++i)
    ordered.col(i) = basis.col(result.order[static_cast<std::size_t>(i)]);
  if (wrong_basis && d >= 2) {
    const RatVector lo = ordered.col(0), hi = ordered.col(d - 1);
    ordered.col(0) = lo + hi;
    ordered.col(d - 1) = lo - hi;
  }
  result.basis = ordered;
  const Eigen::MatrixXcd bc = real_to_complex(ordered);

  result.rows.resize(grid.size());
  const int threads = std::max(1, std::min<int>(jobs, static_cast<int>(grid.size())));
  std::exception_ptr fail;
  std::mutex fail_mutex;
  auto worker = [&](std::size_t lo, std::size_t hi) {
    try {
      for (std::size_t i = lo; i < hi; ++i) {
        if (!is_polarized_at(data, flag, grid[i]))
          throw UnpolarizedError("unpolarized grid point");
        const Eigen::MatrixXcd g = hodge_metric(data, flag, grid[i], bc);
        SweepRow row;
        row.z = grid[i];
        row.h_diag.resize(static_cast<std::size_t>(d));
        for (Index k = 0; k < d; ++k) row.h_diag[static_cast<std::size_t>(k)] = g(k, k).real();
        row.defects = hermitian_defects(g);
        result.rows[i] = std::move(row);
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(fail_mutex);
      if (!fail) fail = std::current_exception();
    }
  };
  if (threads <= 1) {
    worker(0, grid.size());
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (grid.size() + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
      const std::size_t lo = static_cast<std::size_t>(t) * chunk;
      if (lo >= grid.size()) break;
      pool.emplace_back(worker, lo, std::min(grid.size(), lo + chunk));
    }
    for (auto& th : pool) th.join();
  }
  if (fail) std::rethrow_exception(fail);

  double y_max = 0.0;
  for (const auto& row : result.rows) y_max = std::max(y_max, row.z.front().imag());
  result.c_star = 0.0;
  result.truncated_c_star = 0.0;
  for (const auto& row : result.rows) {
    const double m = *std::max_element(row.defects.begin(), row.defects.end());
    result.c_star = std::max(result.c_star, m);
    if (row.z.front().imag() <= y_max / 10.0)
      result.truncated_c_star = std::max(result.truncated_c_star, m);
  }
  if (result.truncated_c_star == 0.0) result.truncated_c_star = result.c_star;
  result.growth_ratio = result.c_star / result.truncated_c_star;

  const RatMatrix t_inv = nilpotent_exp<Rat>(data.cone.generators.front(), Rat(-1));
  const Eigen::MatrixXcd shifted = real_to_complex(RatMatrix(t_inv * ordered));
  result.translate_absorption_verified = true;
  for (std::size_t pick : {std::size_t(0), grid.size() / 2, grid.size() - 1}) {
    SamplePoint z1 = grid[pick];
    z1[0] += 1.0;
    const Eigen::MatrixXcd lhs = hodge_metric(data, flag, z1, bc);
    const Eigen::MatrixXcd rhs = hodge_metric(data, flag, grid[pick], shifted);
    const double tol = 1e-9 * (1.0 + lhs.cwiseAbs().maxCoeff());
    if ((lhs - rhs).cwiseAbs().maxCoeff() > tol)
      result.translate_absorption_verified = false;
  }
  return result;
}

std::string sweep_to_csv(const SweepResult& result) {
  std::ostringstream out;
  out << std::setprecision(17);
  if (result.rows.empty()) return "";
  const std::size_t n = result.rows.front().z.size();
  const std::size_t d = result.rows.front().h_diag.size();
  for (std::size_t i = 1; i <= n; ++i) out << "x" << i << ",";
  for (std::size_t i = 1; i <= n; ++i) out << "y" << i << ",";
  for (std::size_t i = 1; i <= d; ++i) out << "h_" << i << ",";
  out << "defect1,defect2,defect3\n";
  for (const auto& row : result.rows) {
    for (const auto& z : row.z) out << z.real() << ",";
    for (const auto& z : row.z) out << z.imag() << ",";
    for (double h : row.h_diag) out << h << ",";
    out << row.defects[0] << "," << row.defects[1] << "," << row.defects[2] << "\n";
  }
  return out.str();
}

}  // namespace periodgeom
