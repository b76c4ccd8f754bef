#include "periodgeom/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <numbers>
#include <set>
#include <sstream>

#include "periodgeom/asymptotics.hpp"
#include "periodgeom/datasets.hpp"
#include "periodgeom/hodge_locus.hpp"
#include "periodgeom/reduction.hpp"
#include "periodgeom/rng.hpp"

namespace periodgeom {

namespace {

using Clock = std::chrono::steady_clock;

struct Check {
  bool ok = true;
  std::ostringstream why;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      if (!ok) why << "; ";
      ok = false;
      why << what;
    }
  }
};

bool close(std::complex<double> a, std::complex<double> b, double tol) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

// --- 1: weight filtration axioms on random nilpotents ----------------------

void criterion_weight_axioms(Check& check) {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const Index dim = 1 + trial % 6;
    const RatMatrix n = random_nilpotent(rng, dim);
    const Filtration<Rat> w = weight_filtration(n);
    for (int k = w.lo() - 1; k <= w.hi() + 1; ++k) {
      const Subspace<Rat> image = w.at(k).map_image(n);
      check.require(w.at(k - 2).contains(image), "N W_k not inside W_{k-2}");
    }
    for (int l = 0; l <= w.hi() + 1; ++l)
      check.require(w.graded_dim(l) == w.graded_dim(-l), "graded dimensions asymmetric");
    // N^l maps gr_l onto gr_{-l}: N^l W_l + W_{-l-1} = W_{-l}
    RatMatrix nl = RatMatrix::Identity(dim, dim);
    for (int l = 1; l <= w.hi() + 1; ++l) {
      nl = RatMatrix(nl * n);
      const Subspace<Rat> lhs = w.at(l).map_image(nl) + w.at(-l - 1);
      check.require(lhs == w.at(-l), "N^l does not surject gr_l onto gr_{-l}");
    }
    if (!check.ok) return;
  }
}

// --- 2: splitting reconstruction on curated datasets ------------------------

RatMatrix total_generator(const NilpotentOrbitData& data) {
  RatMatrix m = RatMatrix::Zero(data.rank(), data.rank());
  for (const auto& n : data.cone.generators) m += n;
  return m;
}

void criterion_splittings(Check& check) {
  for (const auto& name : dataset_names()) {
    const NilpotentOrbitData data = dataset_by_name(name);
    const int weight = data.cone.lattice.weight;
    const Filtration<Rat> w = weight_filtration(total_generator(data));
    const GradedSplitting<RatComplex> split = deligne_splitting(data.limit, w, weight);

    check.require(split.is_direct_sum(), name + ": splitting is not a direct sum");
    for (int s = data.limit.lo(); s <= data.limit.hi(); ++s) {
      Subspace<RatComplex> acc = Subspace<RatComplex>::zero(data.rank());
      for (const auto& [pq, piece] : split.pieces)
        if (pq[0] >= s) acc = acc + piece;
      check.require(acc == data.limit.at(s), name + ": F^s not reconstructed");
    }
    const Filtration<RatComplex> wc = w.cast<RatComplex>();
    for (int l = w.lo(); l <= w.hi(); ++l) {
      Subspace<RatComplex> acc = Subspace<RatComplex>::zero(data.rank());
      for (const auto& [pq, piece] : split.pieces)
        if (pq[0] + pq[1] - weight <= l) acc = acc + piece;
      check.require(acc == wc.at(l), name + ": W_l not reconstructed");
    }
  }

  // pure case: trivial weight filtration reduces to the Hodge decomposition
  const NilpotentOrbitData e1 = make_e1();
  const Filtration<RatComplex> fi = orbit_filtration(e1, {RatComplex(Rat(0), Rat(1))});
  const RatMatrix zero = RatMatrix::Zero(2, 2);
  const GradedSplitting<RatComplex> pure =
      deligne_splitting(fi, weight_filtration(zero), e1.cone.lattice.weight);
  const HodgePoint point = hodge_decomposition(fi, e1.cone.lattice);
  check.require(pure.pieces.size() == point.pieces.pieces.size(),
                "pure splitting piece count differs from the Hodge decomposition");
  for (const auto& [pq, piece] : point.pieces.pieces) {
    check.require(pure.at(pq) == piece, "pure splitting differs at a bidegree");
  }

  // rational splitting reconstructs every partial weight filtration
  const NilpotentOrbitData e2 = make_e2();
  const std::vector<Filtration<Rat>> ws = cone_weight_filtrations(e2.cone);
  const GradedSplitting<Rat> j = rational_splitting(ws);
  for (std::size_t jj = 0; jj < ws.size(); ++jj) {
    for (int s = ws[jj].lo() - 1; s <= ws[jj].hi() + 1; ++s) {
      Subspace<Rat> acc = Subspace<Rat>::zero(e2.rank());
      for (const auto& [sigma, piece] : j.pieces)
        if (sigma[jj] <= s) acc = acc + piece;
      check.require(acc == ws[jj].at(s), "rational splitting misses a W(M_j) level");
    }
  }
}

// --- 3: closed-form metric on the rank-2 orbit ------------------------------

void criterion_closed_form_metric(Check& check) {
  const NilpotentOrbitData e1 = make_e1();
  const AdaptedFlag flag = adapted_flag(e1);
  for (long long y : {2LL, 10LL, 100LL, 1000LL}) {
    const std::vector<RatComplex> z{RatComplex(Rat(0), Rat(y))};
    const CRatMatrix exact =
        hodge_metric_exact(e1, z, CRatMatrix(CRatMatrix::Identity(2, 2)));
    check.require(exact(0, 0) == RatComplex(Rat(y)), "exact h(e1,e1) != y");
    check.require(exact(1, 1) == RatComplex(Rat(1, y)), "exact h(e2,e2) != 1/y");
    check.require(scalar_is_zero(exact(0, 1)) && scalar_is_zero(exact(1, 0)),
                  "exact off-diagonal nonzero");

    const std::vector<std::complex<double>> zf{{0.0, double(y)}};
    const Eigen::MatrixXcd gram =
        hodge_metric(e1, flag, zf, Eigen::MatrixXcd::Identity(2, 2));
    check.require(std::abs(gram(0, 0).real() - double(y)) <= 1e-12 * double(y),
                  "float h(e1,e1) misses y beyond 1e-12");
    check.require(std::abs(gram(1, 1).real() - 1.0 / double(y)) <= 1e-12 / double(y),
                  "float h(e2,e2) misses 1/y beyond 1e-12");
    check.require(std::abs(gram(0, 1)) <= 1e-12 && std::abs(gram(1, 0)) <= 1e-12,
                  "float off-diagonal above 1e-12");
  }
}

// --- 4: fitted growth exponents match the splitting --------------------------

void criterion_exponent_fit(Check& check) {
  for (const std::string name : {"e1", "e2", "sym2e1"}) {
    const NilpotentOrbitData data = dataset_by_name(name);
    const GradedSplitting<Rat> j =
        rational_splitting(cone_weight_filtrations(data.cone));
    const auto [basis, degrees] = adapted_integral_basis(data);
    const std::vector<RaySpec> rays = default_rays(data.variables(), 1e3, 12);
    for (Index c = 0; c < basis.cols(); ++c) {
      const RatVector u = basis.col(c);
      const FitResult fit = fit_exponents(data, u, rays);
      const std::vector<int> predicted = predicted_exponents(j, u);
      check.require(fit.exponents == predicted,
                    name + ": fitted exponents differ from the splitting");
      check.require(fit.residual < 0.05, name + ": fit residual above 0.05");
    }
  }
}

// --- 5: reducedness sweep boundedness and negative control -------------------

void criterion_sweep(Check& check) {
  for (const std::string name : {"e1", "e2"}) {
    const NilpotentOrbitData data = dataset_by_name(name);
    SigmaRegion region;
    region.n = data.variables();
    region.y_ceil = Rat(1000);
    const SweepResult sweep = reducedness_sweep(data, region, 16, 2);
    check.require(std::isfinite(sweep.c_star), name + ": C* not finite");
    check.require(sweep.growth_ratio <= 1.05, name + ": growth ratio above 1.05");
    check.require(sweep.translate_absorption_verified,
                  name + ": translate absorption failed");
    const SweepResult wrong = reducedness_sweep(data, region, 16, 2, true);
    check.require(wrong.growth_ratio > 2.0,
                  name + ": mixed-basis control stayed bounded");
  }
}

// --- 6: wedge-minor chain agrees with direct orthogonalization ---------------

void criterion_wedge_chain(Check& check) {
  const NilpotentOrbitData e2 = make_e2();
  const AdaptedFlag flag = adapted_flag(e2);
  const int weight = e2.cone.lattice.weight;
  Eigen::MatrixXcd qc(4, 4);
  for (Index i = 0; i < 4; ++i)
    for (Index j = 0; j < 4; ++j)
      qc(i, j) = {e2.cone.lattice.form(i, j).to_double(), 0.0};

  Rng rng(6);
  for (int trial = 0; trial < 100; ++trial) {
    const double x1 = rng.uniform_real(0.05, 0.95);
    const double x2 = rng.uniform_real(0.05, 0.95);
    const double y2 = rng.uniform_real(2.0, 10.0);
    const double y1 = y2 * rng.uniform_real(1.0, 5.0);
    const std::vector<std::complex<double>> z{{x1, y1}, {x2, y2}};
    if (!is_polarized_at(e2, flag, z)) {
      check.require(false, "random sample unexpectedly unpolarized");
      return;
    }
    Eigen::VectorXcd u(4), v(4);
    for (Index i = 0; i < 4; ++i) {
      u(i) = {rng.uniform_real(-2.0, 2.0), rng.uniform_real(-2.0, 2.0)};
      v(i) = {rng.uniform_real(-2.0, 2.0), rng.uniform_real(-2.0, 2.0)};
    }
    const Index idx = rng.uniform_int(1, 4);

    const WedgeChainValue<std::complex<double>> chain =
        wedge_norm_chain(e2, flag, z, idx, u, v);

    const Eigen::MatrixXcd gflag = orbit_gamma(e2, z) * to_complex(flag.columns);
    const GramSchmidt<std::complex<double>> gs =
        gram_schmidt<std::complex<double>>(qc, gflag.leftCols(idx));
    const std::complex<double> b_norm = gs.norms.back();
    const std::complex<double> b_u =
        form_value<std::complex<double>>(qc, u, gs.basis.col(idx - 1));
    const std::complex<double> b_wv =
        form_value<std::complex<double>>(qc, gs.basis.col(idx - 1), v);
    const std::complex<double> h_uv =
        unit_i_power<std::complex<double>>(
            2 * flag.levels[static_cast<std::size_t>(idx - 1)] - weight) *
        b_u * b_wv / b_norm;

    check.require(close(chain.b_norm, b_norm, 1e-9), "B(w~_i) mismatch");
    check.require(close(chain.b_u, b_u, 1e-9), "B(u, w~_i) mismatch");
    check.require(close(chain.h_uv, h_uv, 1e-9), "h(u~_i, v~_i) mismatch");
    if (!check.ok) return;
  }
}

// --- 7: hecke degrees, orbit of i, reduction certificates --------------------

std::string point_key(const RatComplex& z) { return to_string(z); }

void criterion_hecke(Check& check) {
  for (long long p : {2LL, 3LL, 5LL}) {
    HeckeElement g{RatMatrix(2, 2)};
    g.g << Rat(p), Rat(0), Rat(0), Rat(1);
    check.require(hecke_degree(g) == p + 1, "hecke degree is not p+1");
  }

  HeckeElement two{RatMatrix(2, 2)};
  two.g << Rat(2), Rat(0), Rat(0), Rat(1);
  std::multiset<std::string> points;
  for (const auto& hp : hecke_points(RatComplex(Rat(0), Rat(1)), two))
    points.insert(point_key(hp.point));
  const std::multiset<std::string> expected{point_key(RatComplex(Rat(0), Rat(2))),
                                            point_key(RatComplex(Rat(0), Rat(2))),
                                            point_key(RatComplex(Rat(0), Rat(1)))};
  check.require(points == expected, "orbit of i under the degree-2 element wrong");

  Rng rng(7);
  for (int trial = 0; trial < 1000; ++trial) {
    const RatComplex z(rng.rational(20, 12), rng.positive_rational(15, 7));
    const Sl2Reduction red = reduce_sl2(z);
    for (Index i = 0; i < 2; ++i)
      for (Index j = 0; j < 2; ++j)
        check.require(red.gamma(i, j).denominator() == 1, "reduction matrix not integral");
    check.require(det_exact<Rat>(red.gamma) == Rat(1), "reduction matrix not unimodular");
    check.require(mobius(red.gamma, z) == red.z0, "reduction certificate fails");
    const Rat x = red.z0.real();
    check.require(Rat(-1, 2) < x && !(Rat(1, 2) < x), "reduced x outside (-1/2, 1/2]");
    check.require(!(abs2(red.z0) < Rat(1)), "reduced point inside the unit disk");
    if (abs2(red.z0) == Rat(1))
      check.require(!(x < Rat(0)), "unit-arc representative has x < 0");
    if (!check.ok) return;
  }
}

// --- 8: strip intersectors finite and stable ---------------------------------

std::set<std::string> matrix_set(const std::vector<RatMatrix>& ms) {
  std::set<std::string> out;
  for (const auto& m : ms) {
    std::ostringstream s;
    for (Index i = 0; i < m.rows(); ++i)
      for (Index j = 0; j < m.cols(); ++j) s << to_string(m(i, j)) << ";";
    out.insert(s.str());
  }
  return out;
}

void criterion_intersectors(Check& check) {
  const SiegelSetSpec strip = standard_strip();
  const IntersectorReport base = siegel_intersectors(strip, strip, 3);
  check.require(base.indeterminate.empty(), "indeterminate intersector candidates");
  check.require(base.stable, "intersector count not stable at twice the bound");

  std::vector<RatMatrix> expected;
  RatMatrix id = RatMatrix::Identity(2, 2);
  RatMatrix t(2, 2), tinv(2, 2);
  t << Rat(1), Rat(1), Rat(0), Rat(1);
  tinv << Rat(1), Rat(-1), Rat(0), Rat(1);
  for (const auto& m : {id, t, tinv}) {
    expected.push_back(m);
    expected.push_back(RatMatrix(-m));
  }
  check.require(matrix_set(base.members) == matrix_set(expected),
                "intersector set is not {±I, ±T, ±T^{-1}}");

  const IntersectorReport doubled = siegel_intersectors(strip, strip, 6);
  check.require(matrix_set(doubled.members) == matrix_set(base.members),
                "intersector set changed when the bound doubled");
}

// --- 9: hodge locus, monodromy shifts, q-relations ---------------------------

void criterion_locus(Check& check) {
  // floor 3/7: no integer quadratic with coefficients in [-5, 5] has a root
  // with Im z = 3/7, so the boundary tie judgment never fires on the trials
  const StripRegion strip{Rat(3, 7)};

  const NilpotentOrbitData sym2 = make_sym2e1();
  RatVector v(3);
  v << Rat(1), Rat(0), Rat(1);
  const LocusSystem system = hodge_vector_condition(sym2, v);
  const LocusSolution solution = locus_solve(system, strip);
  check.require(solution.kind == LocusKind::Finite && solution.points.size() == 1,
                "locus of f1+f3 is not a single point");
  if (!solution.points.empty()) {
    const LocusRoot& root = solution.points.front();
    check.require(root.exact && root.z[0] == RatComplex(Rat(0), Rat(1)),
                  "locus of f1+f3 is not exactly i");
    check.require(root.multiplicity == 1, "z=i reported with multiplicity != 1");
  }
  check.require(monodromy_shift_check(sym2, v, solution),
                "monodromy shift fails for f1+f3");

  Rng rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    RatVector rv(3);
    do {
      for (Index i = 0; i < 3; ++i) rv(i) = Rat(rng.uniform_int(-5, 5));
    } while (is_zero_matrix(rv));
    const LocusSolution rsol = locus_solve(hodge_vector_condition(sym2, rv), strip);
    check.require(monodromy_shift_check(sym2, rv, rsol),
                  "monodromy shift fails for a random vector");
    if (!check.ok) return;
  }

  const NilpotentOrbitData tensor = make_e2tensor();
  RatVector w(4);
  w << Rat(0), Rat(2), Rat(-1), Rat(0);
  const LocusSolution curve = locus_solve(hodge_vector_condition(tensor, w), strip);
  check.require(curve.kind == LocusKind::Curve && !curve.curves.empty(),
                "isogeny locus is not a curve");
  if (!curve.curves.empty()) {
    check.require(curve.curves.front().certified, "curve samples not certified");
    const double two_pi = 2.0 * std::numbers::pi_v<double>;
    double qerr = 0.0;
    for (const auto& sample : curve.curves.front().samples) {
      const std::complex<double> q1 = std::exp(std::complex<double>(0, two_pi) * sample[0]);
      const std::complex<double> q2 = std::exp(std::complex<double>(0, two_pi) * sample[1]);
      qerr = std::max(qerr, std::abs(q1 - q2) / std::max(std::abs(q1), std::abs(q2)));
    }
    check.require(qerr <= 1e-8, "q1 != q2 on the isogeny component");
    const AlgebraicityReport report = q_algebraicity_check(curve);
    check.require(report.algebraic && report.validation_error <= 1e-8,
                  "no validated q-relation on the isogeny component");
  }
}

// --- 10: boundary chart periodicity and cusp ---------------------------------

void criterion_boundary_chart(Check& check) {
  for (const Rat& x : {Rat(0), Rat(1, 3), Rat(7, 5), Rat(-2, 7)}) {
    const Rat t(1, 2);
    const std::complex<double> a = bs_to_bb(x, t);
    const std::complex<double> b = bs_to_bb(Rat(x + Rat(1)), t);
    check.require(a == b, "chart not exactly 1-periodic in x");
    check.require(bs_to_bb(x, Rat(0)) == std::complex<double>(0.0, 0.0),
                  "t = 0 does not reach the cusp");
  }
  const std::complex<double> z = bs_to_bb(Rat(1, 4), Rat(1));
  const std::complex<double> target(0.0, std::exp(-2.0 * std::numbers::pi_v<double>));
  check.require(std::abs(z - target) <= 1e-12, "z(1/4, 1) misses i e^{-2 pi}");
}

CriterionResult run_one(int id, const std::string& name, double budget_seconds,
                        void (*body)(Check&)) {
  CriterionResult result;
  result.id = id;
  result.name = name;
  const auto start = Clock::now();
  Check check;
  try {
    body(check);
  } catch (const std::exception& e) {
    check.require(false, std::string("exception: ") + e.what());
  }
  result.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  if (budget_seconds > 0 && result.seconds >= budget_seconds)
    check.require(false, "runtime budget exceeded");
  result.passed = check.ok;
  result.detail = check.why.str();
  return result;
}

}  // namespace

std::vector<CriterionResult> run_acceptance() {
  std::vector<CriterionResult> results;
  results.push_back(run_one(1, "weight filtration axioms on 200 random nilpotents", 10,
                            criterion_weight_axioms));
  results.push_back(run_one(2, "splitting reconstruction on curated datasets", 0,
                            criterion_splittings));
  results.push_back(run_one(3, "closed-form metric on the rank-2 orbit", 0,
                            criterion_closed_form_metric));
  results.push_back(run_one(4, "fitted growth exponents match the splitting", 60,
                            criterion_exponent_fit));
  results.push_back(run_one(5, "reducedness sweep bounded, mixed-basis control grows", 0,
                            criterion_sweep));
  results.push_back(run_one(6, "wedge-minor chain matches direct orthogonalization", 0,
                            criterion_wedge_chain));
  results.push_back(run_one(7, "hecke degrees, orbit of i, reduction certificates", 0,
                            criterion_hecke));
  results.push_back(run_one(8, "strip intersectors finite and stable", 0,
                            criterion_intersectors));
  results.push_back(run_one(9, "hodge locus points, monodromy shifts, q-relations", 30,
                            criterion_locus));
  results.push_back(run_one(10, "boundary chart periodicity and cusp", 0,
                            criterion_boundary_chart));
  return results;
}

bool all_criteria_passed(const std::vector<CriterionResult>& results) {
  for (const auto& r : results)
    if (!r.passed) return false;
  return true;
}

}  // namespace periodgeom
