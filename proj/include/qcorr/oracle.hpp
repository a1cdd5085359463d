#pragma once

// Brute-force measurement optimisation. Everything here works from the dense
// density matrix (or, for the tabulated probabilities, from the Bloch
// parameters) and never calls the closed forms in correlations.hpp, so the
// two can be checked against each other.

#include <array>
#include <vector>

#include "qcorr/core.hpp"

namespace qcorr::oracle {

// Product basis |mu_i(theta1, phi1)> (x) |mu_j(theta2, phi2)> with
//   |mu_0> =  cos(theta/2)|0> + sin(theta/2) e^{i phi}|1>
//   |mu_1> = -sin(theta/2)|0> + cos(theta/2) e^{i phi}|1>
struct MeasurementBasis {
  double theta1 = 0.0;
  double phi1 = 0.0;
  double theta2 = 0.0;
  double phi2 = 0.0;

  // Same projectors with theta in [0, pi] and phi in [0, 2 pi).
  MeasurementBasis canonical() const;
};

// Columns are |mu_0>, |mu_1>.
Matrix2 local_unitary(double theta, double phi);
Matrix4 product_unitary(const MeasurementBasis& basis);

struct ProbabilityTable {
  std::array<std::array<double, 2>, 2> joint{};  // joint[i][j], i on A
  std::array<double, 2> pa{};
  std::array<double, 2> pb{};
};

double joint_entropy(const ProbabilityTable& t);
// sum_ij p_ij log2(p_ij / (pa_i pb_j)).
double table_mutual_information(const ProbabilityTable& t);

// Tabulated R_ij for an X state in Bloch form, marginals from the local Bloch
// components.
ProbabilityTable r_coefficients(const BlochX& v, const MeasurementBasis& basis);
// <mu_i, nu_j| rho |mu_i, nu_j> from the dense matrix; marginals from the
// reduced states.
ProbabilityTable r_coefficients_general(const DensityMatrix& m,
                                        const MeasurementBasis& basis);

// Entropy of the dephased state chi_rho = sum R_ij |ij><ij|. Differs from the
// relative entropy S(rho || chi_rho) by the basis-independent S(rho).
double dephased_entropy(const DensityMatrix& m, const MeasurementBasis& basis);

// What the computational-basis search minimises.
enum class BasisCriterion {
  // Mutual information of the measured table, I(chi_rho). This is the rule
  // that selects the theta = pi/2, 0 bases for asymmetric X states.
  kClassicalCorrelation,
  // S(chi_rho), equivalently S(rho || chi_rho).
  kRelativeEntropy,
};

struct SearchOptions {
  int basis_grid = 32;    // points per angle, 4-d computational-basis search
  int phase_grid = 64;    // points per angle, 2-d phase and discord searches
  double min_step = 1e-7;
  // Grid values within this of the minimum count as ties; ties go to the
  // lexicographically smallest angles.
  double tie_tolerance = 1e-12;
  BasisCriterion criterion = BasisCriterion::kClassicalCorrelation;
};

struct OptimizationResult {
  double value = 0.0;
  std::vector<double> argument;  // optimal angles, radians
  int grid_resolution = 0;
  int refinement_iterations = 0;
};

MeasurementBasis basis_of(const OptimizationResult& r);

// Minimises the selected criterion over all four basis angles: uniform grid,
// then coordinate descent with step halving down to min_step.
OptimizationResult find_optimal_basis(const DensityMatrix& m,
                                      const SearchOptions& opts = {});

// I(Psi1, Psi2) from the tabulated complementary-basis probabilities. The
// computational basis must be of the form (theta1, theta2) = (k pi, pi/2) or
// (pi/2, k pi); otherwise std::invalid_argument.
double complementary_mutual_information(const BlochX& v,
                                        const MeasurementBasis& computational,
                                        double psi1, double psi2);

// Two-stage LAQC search. argument holds the six angles
// (theta1, phi1, theta2, phi2, Phi1, Phi2).
OptimizationResult laqc_bruteforce(const DensityMatrix& m,
                                   const SearchOptions& opts = {});
// Same, reusing an already computed computational basis.
OptimizationResult laqc_bruteforce(const DensityMatrix& m,
                                   const OptimizationResult& computational,
                                   const SearchOptions& opts = {});

// I(X_rho) at the optimal computational basis.
OptimizationResult classical_correlations_bruteforce(
    const DensityMatrix& m, const SearchOptions& opts = {});
OptimizationResult classical_correlations_at(const DensityMatrix& m,
                                             const OptimizationResult& computational);

// S(rho_B) - S(rho) + min over B measurements of sum_j p_j S(rho_A|j).
// argument holds (theta2, phi2).
OptimizationResult discord_b_bruteforce(const DensityMatrix& m,
                                        const SearchOptions& opts = {});

}  // namespace qcorr::oracle
