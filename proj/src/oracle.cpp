#include "qcorr/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qcorr/entropy.hpp"

namespace qcorr::oracle {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kMaxRefinementIterations = 200000;

double wrap(double angle, double period) {
  double r = std::fmod(angle, period);
  if (r < 0.0) r += period;
  if (r >= period) r -= period;
  return r;
}

std::array<Vector2, 2> qubit_basis(double theta, double phi) {
  const double c = std::cos(0.5 * theta);
  const double s = std::sin(0.5 * theta);
  const cd phase = std::polar(1.0, phi);
  Vector2 v0, v1;
  v0 << c, s * phase;
  v1 << -s, c * phase;
  return {v0, v1};
}

double expectation(const Matrix4& rho, const Vector4& psi) {
  return psi.dot(rho * psi).real();
}

double expectation(const Matrix2& rho, const Vector2& psi) {
  return psi.dot(rho * psi).real();
}

Vector4 kron(const Vector2& a, const Vector2& b) {
  Vector4 out;
  out << a(0) * b(0), a(0) * b(1), a(1) * b(0), a(1) * b(1);
  return out;
}

// Dense tabulation shared by the grid, the refinement and the public
// r_coefficients_general.
ProbabilityTable tabulate(const Matrix4& rho, const Matrix2& rho_a,
                          const Matrix2& rho_b, const MeasurementBasis& basis) {
  const auto va = qubit_basis(basis.theta1, basis.phi1);
  const auto vb = qubit_basis(basis.theta2, basis.phi2);
  ProbabilityTable t;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) t.joint[i][j] = expectation(rho, kron(va[i], vb[j]));
  for (int i = 0; i < 2; ++i) {
    t.pa[i] = expectation(rho_a, va[i]);
    t.pb[i] = expectation(rho_b, vb[i]);
  }
  return t;
}

double criterion_value(const ProbabilityTable& t, BasisCriterion criterion) {
  return criterion == BasisCriterion::kRelativeEntropy
             ? joint_entropy(t)
             : table_mutual_information(t);
}

struct Refined {
  std::vector<double> x;
  double value;
  int iterations;
};

// Compass search: try +/- step along each coordinate, accept the first strict
// improvement, halve all steps when none exists.
template <class F>
Refined coordinate_descent(F&& f, std::vector<double> x, double value,
                           std::vector<double> step, double min_step) {
  int iterations = 0;
  auto largest = [&] { return *std::max_element(step.begin(), step.end()); };
  while (largest() >= min_step && iterations < kMaxRefinementIterations) {
    ++iterations;
    bool moved = false;
    for (std::size_t k = 0; k < x.size() && !moved; ++k) {
      for (double dir : {1.0, -1.0}) {
        std::vector<double> trial = x;
        trial[k] += dir * step[k];
        const double v = f(trial);
        if (v < value - 1e-15 * std::max(1.0, std::abs(value))) {
          x = std::move(trial);
          value = v;
          moved = true;
          break;
        }
      }
    }
    if (!moved)
      for (double& s : step) s *= 0.5;
  }
  return {std::move(x), value, iterations};
}

// First index (in evaluation order) whose value is within tol of the minimum.
std::size_t lexicographic_argmin(const std::vector<double>& values, double tol) {
  const double best = *std::min_element(values.begin(), values.end());
  for (std::size_t i = 0; i < values.size(); ++i)
    if (values[i] <= best + tol) return i;
  return 0;
}

// Minimises f over [0, periods[0]) x [0, periods[1]) on an n x n grid, then
// refines.
template <class F>
OptimizationResult minimize_2d(F&& f, std::array<double, 2> periods, int n,
                               const SearchOptions& opts) {
  std::vector<double> values(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      values[static_cast<std::size_t>(i) * n + j] =
          f({periods[0] * i / n, periods[1] * j / n});
  const std::size_t best = lexicographic_argmin(values, opts.tie_tolerance);
  const int i = static_cast<int>(best / n), j = static_cast<int>(best % n);
  std::vector<double> start{periods[0] * i / n, periods[1] * j / n};
  std::vector<double> step{0.5 * periods[0] / n, 0.5 * periods[1] / n};
  Refined r = coordinate_descent(f, start, values[best], step, opts.min_step);
  return {r.value, std::move(r.x), n, r.iterations};
}

Matrix2 partial_a(const Matrix4& rho) {
  Matrix2 r = Matrix2::Zero();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) r(i, j) += rho(2 * i + k, 2 * j + k);
  return r;
}

Matrix2 partial_b(const Matrix4& rho) {
  Matrix2 r = Matrix2::Zero();
  for (int k = 0; k < 2; ++k)
    for (int l = 0; l < 2; ++l)
      for (int i = 0; i < 2; ++i) r(k, l) += rho(2 * i + k, 2 * i + l);
  return r;
}

bool near_multiple_of_pi(double theta) {
  return std::abs(theta) < 1e-6 || std::abs(theta - kPi) < 1e-6;
}

bool near_half_pi(double theta) { return std::abs(theta - 0.5 * kPi) < 1e-6; }

}  // namespace

MeasurementBasis MeasurementBasis::canonical() const {
  auto fold = [](double theta, double phi) {
    theta = wrap(theta, kTwoPi);
    if (theta > kPi) {
      theta = kTwoPi - theta;
      phi += kPi;
    }
    return std::pair{theta, wrap(phi, kTwoPi)};
  };
  const auto [t1, p1] = fold(theta1, phi1);
  const auto [t2, p2] = fold(theta2, phi2);
  return {t1, p1, t2, p2};
}

Matrix2 local_unitary(double theta, double phi) {
  const auto v = qubit_basis(theta, phi);
  Matrix2 u;
  u.col(0) = v[0];
  u.col(1) = v[1];
  return u;
}

Matrix4 product_unitary(const MeasurementBasis& basis) {
  return qcorr::kron(local_unitary(basis.theta1, basis.phi1),
                    local_unitary(basis.theta2, basis.phi2));
}

double joint_entropy(const ProbabilityTable& t) {
  const std::array<double, 4> p{t.joint[0][0], t.joint[0][1], t.joint[1][0],
                                t.joint[1][1]};
  return entropy_bits(p);
}

double table_mutual_information(const ProbabilityTable& t) {
  double info = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      const double p = t.joint[i][j];
      if (p > 0.0) info += p * std::log2(p / (t.pa[i] * t.pb[j]));
    }
  return info;
}

ProbabilityTable r_coefficients(const BlochX& v, const MeasurementBasis& basis) {
  const double c1 = std::cos(basis.theta1), s1 = std::sin(basis.theta1);
  const double c2 = std::cos(basis.theta2), s2 = std::sin(basis.theta2);
  const double transverse =
      s1 * s2 *
      (v.t1 * std::cos(basis.phi1) * std::cos(basis.phi2) +
       v.t2 * std::sin(basis.phi1) * std::sin(basis.phi2));
  const double corr = v.t3 * c1 * c2 + transverse;
  ProbabilityTable t;
  for (int i = 0; i < 2; ++i) {
    const double si = i == 0 ? 1.0 : -1.0;
    for (int j = 0; j < 2; ++j) {
      const double sj = j == 0 ? 1.0 : -1.0;
      t.joint[i][j] = 0.25 * (1.0 + si * v.x3 * c1 + sj * v.y3 * c2 + si * sj * corr);
    }
    t.pa[i] = 0.5 * (1.0 + si * v.x3 * c1);
    t.pb[i] = 0.5 * (1.0 + si * v.y3 * c2);
  }
  return t;
}

ProbabilityTable r_coefficients_general(const DensityMatrix& m,
                                        const MeasurementBasis& basis) {
  return tabulate(m.matrix(), partial_a(m.matrix()), partial_b(m.matrix()), basis);
}

double dephased_entropy(const DensityMatrix& m, const MeasurementBasis& basis) {
  return joint_entropy(r_coefficients_general(m, basis));
}

MeasurementBasis basis_of(const OptimizationResult& r) {
  if (r.argument.size() < 4)
    throw std::invalid_argument("basis_of: result does not hold basis angles");
  return MeasurementBasis{r.argument[0], r.argument[1], r.argument[2], r.argument[3]};
}

OptimizationResult find_optimal_basis(const DensityMatrix& m,
                                      const SearchOptions& opts) {
  const Matrix4& rho = m.matrix();
  const Matrix2 rho_a = partial_a(rho), rho_b = partial_b(rho);
  const int n = opts.basis_grid;
  const int per_qubit = n * n;
  auto theta_at = [&](int k) { return kPi * k / n; };
  auto phi_at = [&](int k) { return kTwoPi * k / n; };

  // Single-qubit grid vectors, index = theta_index * n + phi_index.
  std::vector<std::array<Vector2, 2>> vectors(per_qubit);
  for (int t = 0; t < n; ++t)
    for (int f = 0; f < n; ++f) vectors[t * n + f] = qubit_basis(theta_at(t), phi_at(f));

  // Contracting A first leaves a 2x2 operator on B per A outcome.
  std::vector<std::array<Matrix2, 2>> on_b(per_qubit);
  for (int g = 0; g < per_qubit; ++g)
    for (int i = 0; i < 2; ++i) {
      const Vector2& v = vectors[g][i];
      Matrix2 op = Matrix2::Zero();
      for (int b = 0; b < 2; ++b)
        for (int bp = 0; bp < 2; ++bp)
          for (int k = 0; k < 2; ++k)
            for (int l = 0; l < 2; ++l)
              op(b, bp) += std::conj(v(k)) * v(l) * rho(2 * k + b, 2 * l + bp);
      on_b[g][i] = op;
    }

  std::vector<double> values(static_cast<std::size_t>(per_qubit) * per_qubit);
  for (int ga = 0; ga < per_qubit; ++ga) {
    for (int gb = 0; gb < per_qubit; ++gb) {
      ProbabilityTable t;
      for (int i = 0; i < 2; ++i) {
        t.pa[i] = on_b[ga][i].trace().real();
        for (int j = 0; j < 2; ++j) t.joint[i][j] = expectation(on_b[ga][i], vectors[gb][j]);
      }
      for (int j = 0; j < 2; ++j) t.pb[j] = t.joint[0][j] + t.joint[1][j];
      values[static_cast<std::size_t>(ga) * per_qubit + gb] =
          criterion_value(t, opts.criterion);
    }
  }

  const std::size_t best = lexicographic_argmin(values, opts.tie_tolerance);
  const int ga = static_cast<int>(best / per_qubit), gb = static_cast<int>(best % per_qubit);
  std::vector<double> start{theta_at(ga / n), phi_at(ga % n), theta_at(gb / n), phi_at(gb % n)};

  auto objective = [&](const std::vector<double>& x) {
    return criterion_value(tabulate(rho, rho_a, rho_b, {x[0], x[1], x[2], x[3]}),
                           opts.criterion);
  };
  const double half_theta = 0.5 * kPi / n, half_phi = 0.5 * kTwoPi / n;
  Refined r = coordinate_descent(objective, start, values[best],
                                 {half_theta, half_phi, half_theta, half_phi},
                                 opts.min_step);
  const MeasurementBasis canon =
      MeasurementBasis{r.x[0], r.x[1], r.x[2], r.x[3]}.canonical();
  return {r.value, {canon.theta1, canon.phi1, canon.theta2, canon.phi2}, n, r.iterations};
}

double complementary_mutual_information(const BlochX& v,
                                        const MeasurementBasis& computational,
                                        double psi1, double psi2) {
  const MeasurementBasis b = computational.canonical();
  const double transverse = v.t2 * std::sin(psi1) * std::sin(psi2);
  ProbabilityTable t;
  if (near_multiple_of_pi(b.theta1) && near_half_pi(b.theta2)) {
    const double local = v.y3 * std::cos(psi2);
    t.joint[0][0] = 0.25 * (1.0 + local + transverse);
    t.joint[0][1] = 0.25 * (1.0 - local - transverse);
    t.joint[1][0] = 0.25 * (1.0 + local - transverse);
    t.joint[1][1] = 0.25 * (1.0 - local + transverse);
    t.pa = {0.5, 0.5};
    t.pb = {0.5 * (1.0 + local), 0.5 * (1.0 - local)};
  } else if (near_half_pi(b.theta1) && near_multiple_of_pi(b.theta2)) {
    const double local = v.x3 * std::cos(psi1);
    t.joint[0][0] = 0.25 * (1.0 + local + transverse);
    t.joint[0][1] = 0.25 * (1.0 + local - transverse);
    t.joint[1][0] = 0.25 * (1.0 - local - transverse);
    t.joint[1][1] = 0.25 * (1.0 - local + transverse);
    t.pa = {0.5 * (1.0 + local), 0.5 * (1.0 - local)};
    t.pb = {0.5, 0.5};
  } else {
    throw std::invalid_argument(
        "complementary_mutual_information: computational basis is not of the "
        "(k pi, pi/2) or (pi/2, k pi) form");
  }
  return table_mutual_information(t);
}

OptimizationResult laqc_bruteforce(const DensityMatrix& m, const SearchOptions& opts) {
  return laqc_bruteforce(m, find_optimal_basis(m, opts), opts);
}

OptimizationResult laqc_bruteforce(const DensityMatrix& m,
                                   const OptimizationResult& computational,
                                   const SearchOptions& opts) {
  const Matrix4 u = product_unitary(basis_of(computational));
  const Matrix4 rotated = u.adjoint() * m.matrix() * u;
  const Matrix2 rot_a = partial_a(rotated), rot_b = partial_b(rotated);

  // The complementary basis is the theta = pi/2 member of the same family,
  // expressed in the optimal frame.
  auto negative_info = [&](const std::vector<double>& x) {
    return -table_mutual_information(
        tabulate(rotated, rot_a, rot_b, {0.5 * kPi, x[0], 0.5 * kPi, x[1]}));
  };
  OptimizationResult phases =
      minimize_2d(negative_info, {kTwoPi, kTwoPi}, opts.phase_grid, opts);

  OptimizationResult out;
  out.value = -phases.value;
  out.argument = computational.argument;
  out.argument.push_back(wrap(phases.argument[0], kTwoPi));
  out.argument.push_back(wrap(phases.argument[1], kTwoPi));
  out.grid_resolution = phases.grid_resolution;
  out.refinement_iterations = computational.refinement_iterations + phases.refinement_iterations;
  return out;
}

OptimizationResult classical_correlations_bruteforce(const DensityMatrix& m,
                                                     const SearchOptions& opts) {
  return classical_correlations_at(m, find_optimal_basis(m, opts));
}

OptimizationResult classical_correlations_at(const DensityMatrix& m,
                                             const OptimizationResult& computational) {
  OptimizationResult out = computational;
  out.value = table_mutual_information(r_coefficients_general(m, basis_of(computational)));
  return out;
}

OptimizationResult discord_b_bruteforce(const DensityMatrix& m, const SearchOptions& opts) {
  const Matrix4& rho = m.matrix();
  auto conditional_entropy = [&](const std::vector<double>& x) {
    const auto vb = qubit_basis(x[0], x[1]);
    double total = 0.0;
    for (const Vector2& v : vb) {
      Matrix2 k = Matrix2::Zero();
      for (int a = 0; a < 2; ++a)
        for (int ap = 0; ap < 2; ++ap)
          for (int b = 0; b < 2; ++b)
            for (int bp = 0; bp < 2; ++bp)
              k(a, ap) += std::conj(v(b)) * rho(2 * a + b, 2 * ap + bp) * v(bp);
      const double p = k.trace().real();
      if (p <= 0.0) continue;
      const auto ev = eigh2_values(k / p);
      total += p * entropy_bits(ev);
    }
    return total;
  };
  OptimizationResult best = minimize_2d(conditional_entropy, {kPi, kTwoPi}, opts.phase_grid, opts);
  const double s_b = von_neumann_entropy(reduced_b(m));
  const double s_ab = von_neumann_entropy(spectrum(m));
  best.value = s_b - s_ab + best.value;
  const MeasurementBasis canon =
      MeasurementBasis{0.0, 0.0, best.argument[0], best.argument[1]}.canonical();
  best.argument = {canon.theta2, canon.phi2};
  return best;
}

}  // namespace qcorr::oracle
