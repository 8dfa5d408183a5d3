// Exact two-qubit pure-state and density-matrix arithmetic: Bell states,
// single-particle Pauli operations, projective spin measurement along
// arbitrary axes, and the analytic correlation oracles built on top.
//
// Conventions, fixed project-wide:
//   - amplitude order |00>, |01>, |10>, |11>, particle A in the left factor
//   - spin UP is the +1 eigenvalue of a.sigma, DOWN the -1 eigenvalue
//   - bit convention UP -> 0, DOWN -> 1 (so basis label = bit label)
//   - Bell-state identity is tested up to a global phase; the double-Pauli
//     identity sigma^2 = I is exact componentwise
#pragma once

#include <array>
#include <complex>
#include <cstddef>

namespace eprcoin {

using Complex = std::complex<double>;

// Stored states are normalized within kNormTol; algebraic identities hold
// within kAlgebraTol.
inline constexpr double kNormTol = 1e-9;
inline constexpr double kAlgebraTol = 1e-12;

enum class BellKind { PsiMinus, PsiPlus, PhiMinus, PhiPlus };
enum class PauliOp { X, Y, Z, Ident };
enum class Particle { A, B };
enum class SpinOutcome { Up, Down };

constexpr int spin_bit(SpinOutcome o) { return o == SpinOutcome::Up ? 0 : 1; }
constexpr SpinOutcome opposite(SpinOutcome o) {
  return o == SpinOutcome::Up ? SpinOutcome::Down : SpinOutcome::Up;
}

// Measurement direction; components must form a unit vector within kNormTol.
struct Axis {
  double x = 0.0;
  double y = 0.0;
  double z = 1.0;
};

bool is_unit(const Axis& a, double tol = kNormTol);
Axis z_axis();
double dot(const Axis& a, const Axis& b);
// Inverse-CDF sphere point: z = 2*u1 - 1, azimuth = 2*pi*u2.
Axis axis_from_uniforms(double u1, double u2);

// Joint state of one shared pair.
struct PureTwoQubitState {
  std::array<Complex, 4> amps{};

  double norm() const;
  bool is_normalized(double tol = kNormTol) const;
};

constexpr std::size_t basis_index(int bit_a, int bit_b) {
  return static_cast<std::size_t>(bit_a * 2 + bit_b);
}

bool equal_componentwise(const PureTwoQubitState& s1, const PureTwoQubitState& s2,
                         double tol = kAlgebraTol);
// True when s1 = c * s2 for some unit-modulus c.
bool equal_up_to_phase(const PureTwoQubitState& s1, const PureTwoQubitState& s2,
                       double tol = kNormTol);

PureTwoQubitState make_bell(BellKind kind);
PureTwoQubitState make_product(int bit_a, int bit_b);

// (U (x) I)|psi> for particle A, (I (x) U)|psi> for particle B.
PureTwoQubitState apply_pauli(const PureTwoQubitState& s, Particle p, PauliOp op);

// Born probability <psi|P|psi>, P the projector onto the +-1 eigenspace of
// a.sigma on the given particle (identity on the other). Throws
// std::invalid_argument for a non-unit axis.
double outcome_probability(const PureTwoQubitState& s, Particle p, const Axis& axis,
                           SpinOutcome outcome);

struct MeasurementResult {
  SpinOutcome outcome;
  PureTwoQubitState state;  // normalized post-measurement state
};

// Projective measurement. The caller supplies the uniform draw u in [0,1);
// the outcome is Up iff u < P(Up). All randomness is injected, so the
// quantum core itself is deterministic.
MeasurementResult measure_spin(const PureTwoQubitState& s, Particle p, const Axis& axis,
                               double u);

// P(outcome_A = oa and outcome_B = ob), A measured along axis_a and B along
// axis_b, computed exactly from the Born rule.
double joint_outcome_probability(const PureTwoQubitState& s, const Axis& axis_a,
                                 const Axis& axis_b, SpinOutcome oa, SpinOutcome ob);

// P(outcome_A != outcome_B); for the singlet this is (1 + a.b)/2.
double anticorrelation_probability(const PureTwoQubitState& s, const Axis& axis_a,
                                   const Axis& axis_b);

struct DensityMatrix2 {
  std::array<std::array<Complex, 2>, 2> m{};

  double trace_real() const;
  bool is_hermitian(double tol = kAlgebraTol) const;
  bool is_valid_density(double tol = kAlgebraTol) const;
};

struct DensityMatrix4 {
  std::array<std::array<Complex, 4>, 4> m{};

  double trace_real() const;
  bool is_hermitian(double tol = kAlgebraTol) const;
  bool is_valid_density(double tol = kAlgebraTol) const;
};

// Eigenvalues in ascending order (cyclic Jacobi on the Hermitian matrix).
std::array<double, 2> eigenvalues(const DensityMatrix2& rho);
std::array<double, 4> eigenvalues(const DensityMatrix4& rho);

DensityMatrix4 projector(const PureTwoQubitState& s);  // |psi><psi|

// Equal-weight average over U in {X, Y, Z, I} of (U (x) I)|bell><bell|(U (x) I)^dag.
// Equals I/4 for every Bell input.
DensityMatrix4 uniform_pauli_mixture(BellKind kind);

// Partial trace over the other particle.
DensityMatrix2 marginal(const PureTwoQubitState& s, Particle keep);
DensityMatrix2 marginal(const DensityMatrix4& rho, Particle keep);

}  // namespace eprcoin
