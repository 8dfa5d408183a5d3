#include "eprcoin/qstate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace eprcoin {

namespace {

using Mat2 = std::array<std::array<Complex, 2>, 2>;

Mat2 pauli_matrix(PauliOp op) {
  const Complex zero{0.0, 0.0};
  const Complex one{1.0, 0.0};
  const Complex i{0.0, 1.0};
  switch (op) {
    case PauliOp::X:
      return {{{zero, one}, {one, zero}}};
    case PauliOp::Y:
      return {{{zero, -i}, {i, zero}}};
    case PauliOp::Z:
      return {{{one, zero}, {zero, -one}}};
    case PauliOp::Ident:
      return {{{one, zero}, {zero, one}}};
  }
  return {};
}

// Projector (I + sgn * a.sigma) / 2.
Mat2 spin_projector(const Axis& a, SpinOutcome outcome) {
  const double sgn = outcome == SpinOutcome::Up ? 1.0 : -1.0;
  Mat2 p;
  p[0][0] = Complex{(1.0 + sgn * a.z) / 2.0, 0.0};
  p[0][1] = Complex{sgn * a.x / 2.0, -sgn * a.y / 2.0};
  p[1][0] = Complex{sgn * a.x / 2.0, sgn * a.y / 2.0};
  p[1][1] = Complex{(1.0 - sgn * a.z) / 2.0, 0.0};
  return p;
}

PureTwoQubitState apply_single(const PureTwoQubitState& s, Particle p, const Mat2& u) {
  PureTwoQubitState out{};
  if (p == Particle::A) {
    for (int a2 = 0; a2 < 2; ++a2)
      for (int b = 0; b < 2; ++b)
        for (int a = 0; a < 2; ++a)
          out.amps[basis_index(a2, b)] += u[a2][a] * s.amps[basis_index(a, b)];
  } else {
    for (int a = 0; a < 2; ++a)
      for (int b2 = 0; b2 < 2; ++b2)
        for (int b = 0; b < 2; ++b)
          out.amps[basis_index(a, b2)] += u[b2][b] * s.amps[basis_index(a, b)];
  }
  return out;
}

void require_unit_axis(const Axis& axis) {
  if (!is_unit(axis)) throw std::invalid_argument("axis is not unit length");
}

// Cyclic Jacobi for complex Hermitian matrices; returns the (real) spectrum.
template <std::size_t N>
std::array<double, N> jacobi_eigenvalues(std::array<std::array<Complex, N>, N> a) {
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < N; ++p)
      for (std::size_t q = p + 1; q < N; ++q) off = std::max(off, std::abs(a[p][q]));
    if (off < 1e-15) break;
    for (std::size_t p = 0; p < N; ++p) {
      for (std::size_t q = p + 1; q < N; ++q) {
        const double r = std::abs(a[p][q]);
        if (r < 1e-18) continue;
        const Complex phase = a[p][q] / r;  // e^{i phi}
        const double w = (a[p][p].real() - a[q][q].real()) / (2.0 * r);
        const double t =
            w >= 0.0 ? 1.0 / (w + std::sqrt(w * w + 1.0)) : 1.0 / (w - std::sqrt(w * w + 1.0));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        // A <- A R with R[:,p] = (c, s e^{-i phi}), R[:,q] = (-s e^{i phi}, c)
        for (std::size_t k = 0; k < N; ++k) {
          const Complex akp = a[k][p];
          const Complex akq = a[k][q];
          a[k][p] = c * akp + s * std::conj(phase) * akq;
          a[k][q] = -s * phase * akp + c * akq;
        }
        // A <- R^dag A
        for (std::size_t k = 0; k < N; ++k) {
          const Complex apk = a[p][k];
          const Complex aqk = a[q][k];
          a[p][k] = c * apk + s * phase * aqk;
          a[q][k] = -s * std::conj(phase) * apk + c * aqk;
        }
      }
    }
  }
  std::array<double, N> eig{};
  for (std::size_t k = 0; k < N; ++k) eig[k] = a[k][k].real();
  std::sort(eig.begin(), eig.end());
  return eig;
}

template <std::size_t N>
double trace_real_impl(const std::array<std::array<Complex, N>, N>& m) {
  double t = 0.0;
  for (std::size_t k = 0; k < N; ++k) t += m[k][k].real();
  return t;
}

template <std::size_t N>
bool hermitian_impl(const std::array<std::array<Complex, N>, N>& m, double tol) {
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      if (std::abs(m[i][j] - std::conj(m[j][i])) > tol) return false;
  return true;
}

}  // namespace

bool is_unit(const Axis& a, double tol) {
  return std::abs(a.x * a.x + a.y * a.y + a.z * a.z - 1.0) <= tol;
}

Axis z_axis() { return Axis{0.0, 0.0, 1.0}; }

double dot(const Axis& a, const Axis& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

Axis axis_from_uniforms(double u1, double u2) {
  const double z = 2.0 * u1 - 1.0;
  const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
  const double phi = 2.0 * std::numbers::pi * u2;
  return Axis{r * std::cos(phi), r * std::sin(phi), z};
}

double PureTwoQubitState::norm() const {
  double n2 = 0.0;
  for (const auto& amp : amps) n2 += std::norm(amp);
  return std::sqrt(n2);
}

bool PureTwoQubitState::is_normalized(double tol) const {
  const double n = norm();
  return std::isfinite(n) && std::abs(n * n - 1.0) <= tol;
}

bool equal_componentwise(const PureTwoQubitState& s1, const PureTwoQubitState& s2, double tol) {
  for (std::size_t k = 0; k < 4; ++k)
    if (std::abs(s1.amps[k] - s2.amps[k]) > tol) return false;
  return true;
}

bool equal_up_to_phase(const PureTwoQubitState& s1, const PureTwoQubitState& s2, double tol) {
  // Anchor the phase on s1's largest amplitude.
  std::size_t k0 = 0;
  for (std::size_t k = 1; k < 4; ++k)
    if (std::abs(s1.amps[k]) > std::abs(s1.amps[k0])) k0 = k;
  if (std::abs(s1.amps[k0]) <= tol) return equal_componentwise(s2, PureTwoQubitState{}, tol);
  if (std::abs(s2.amps[k0]) <= tol) return false;
  const Complex c = s1.amps[k0] / s2.amps[k0];
  if (std::abs(std::abs(c) - 1.0) > tol) return false;
  for (std::size_t k = 0; k < 4; ++k)
    if (std::abs(s1.amps[k] - c * s2.amps[k]) > tol) return false;
  return true;
}

PureTwoQubitState make_bell(BellKind kind) {
  const double h = 1.0 / std::sqrt(2.0);
  PureTwoQubitState s{};
  switch (kind) {
    case BellKind::PsiMinus:
      s.amps[basis_index(0, 1)] = Complex{h, 0.0};
      s.amps[basis_index(1, 0)] = Complex{-h, 0.0};
      break;
    case BellKind::PsiPlus:
      s.amps[basis_index(0, 1)] = Complex{h, 0.0};
      s.amps[basis_index(1, 0)] = Complex{h, 0.0};
      break;
    case BellKind::PhiMinus:
      s.amps[basis_index(0, 0)] = Complex{h, 0.0};
      s.amps[basis_index(1, 1)] = Complex{-h, 0.0};
      break;
    case BellKind::PhiPlus:
      s.amps[basis_index(0, 0)] = Complex{h, 0.0};
      s.amps[basis_index(1, 1)] = Complex{h, 0.0};
      break;
  }
  return s;
}

PureTwoQubitState make_product(int bit_a, int bit_b) {
  PureTwoQubitState s{};
  s.amps[basis_index(bit_a, bit_b)] = Complex{1.0, 0.0};
  return s;
}

PureTwoQubitState apply_pauli(const PureTwoQubitState& s, Particle p, PauliOp op) {
  return apply_single(s, p, pauli_matrix(op));
}

double outcome_probability(const PureTwoQubitState& s, Particle p, const Axis& axis,
                           SpinOutcome outcome) {
  require_unit_axis(axis);
  const PureTwoQubitState projected = apply_single(s, p, spin_projector(axis, outcome));
  const double n = projected.norm();
  return std::clamp(n * n, 0.0, 1.0);
}

MeasurementResult measure_spin(const PureTwoQubitState& s, Particle p, const Axis& axis,
                               double u) {
  require_unit_axis(axis);
  const double p_up = outcome_probability(s, p, axis, SpinOutcome::Up);
  const SpinOutcome outcome = u < p_up ? SpinOutcome::Up : SpinOutcome::Down;
  PureTwoQubitState projected = apply_single(s, p, spin_projector(axis, outcome));
  const double n = projected.norm();
  if (n < 1e-15) throw std::logic_error("measurement collapsed onto a zero-probability branch");
  for (auto& amp : projected.amps) amp /= n;
  return MeasurementResult{outcome, projected};
}

double joint_outcome_probability(const PureTwoQubitState& s, const Axis& axis_a,
                                 const Axis& axis_b, SpinOutcome oa, SpinOutcome ob) {
  require_unit_axis(axis_a);
  require_unit_axis(axis_b);
  PureTwoQubitState projected = apply_single(s, Particle::A, spin_projector(axis_a, oa));
  projected = apply_single(projected, Particle::B, spin_projector(axis_b, ob));
  const double n = projected.norm();
  return std::clamp(n * n, 0.0, 1.0);
}

double anticorrelation_probability(const PureTwoQubitState& s, const Axis& axis_a,
                                   const Axis& axis_b) {
  return joint_outcome_probability(s, axis_a, axis_b, SpinOutcome::Up, SpinOutcome::Down) +
         joint_outcome_probability(s, axis_a, axis_b, SpinOutcome::Down, SpinOutcome::Up);
}

double DensityMatrix2::trace_real() const { return trace_real_impl(m); }
double DensityMatrix4::trace_real() const { return trace_real_impl(m); }

bool DensityMatrix2::is_hermitian(double tol) const { return hermitian_impl(m, tol); }
bool DensityMatrix4::is_hermitian(double tol) const { return hermitian_impl(m, tol); }

std::array<double, 2> eigenvalues(const DensityMatrix2& rho) { return jacobi_eigenvalues(rho.m); }
std::array<double, 4> eigenvalues(const DensityMatrix4& rho) { return jacobi_eigenvalues(rho.m); }

bool DensityMatrix2::is_valid_density(double tol) const {
  return is_hermitian(tol) && std::abs(trace_real() - 1.0) <= tol &&
         eigenvalues(*this).front() >= -tol;
}

bool DensityMatrix4::is_valid_density(double tol) const {
  return is_hermitian(tol) && std::abs(trace_real() - 1.0) <= tol &&
         eigenvalues(*this).front() >= -tol;
}

DensityMatrix4 projector(const PureTwoQubitState& s) {
  DensityMatrix4 rho{};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) rho.m[i][j] = s.amps[i] * std::conj(s.amps[j]);
  return rho;
}

DensityMatrix4 uniform_pauli_mixture(BellKind kind) {
  const PureTwoQubitState bell = make_bell(kind);
  DensityMatrix4 rho{};
  for (PauliOp op : {PauliOp::X, PauliOp::Y, PauliOp::Z, PauliOp::Ident}) {
    const DensityMatrix4 term = projector(apply_pauli(bell, Particle::A, op));
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) rho.m[i][j] += 0.25 * term.m[i][j];
  }
  return rho;
}

DensityMatrix2 marginal(const PureTwoQubitState& s, Particle keep) {
  return marginal(projector(s), keep);
}

DensityMatrix2 marginal(const DensityMatrix4& rho, Particle keep) {
  DensityMatrix2 out{};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      Complex sum{0.0, 0.0};
      for (int k = 0; k < 2; ++k) {
        if (keep == Particle::A)
          sum += rho.m[basis_index(i, k)][basis_index(j, k)];
        else
          sum += rho.m[basis_index(k, i)][basis_index(k, j)];
      }
      out.m[i][j] = sum;
    }
  }
  return out;
}

}  // namespace eprcoin
