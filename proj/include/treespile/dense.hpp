#pragma once

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "treespile/circuit.hpp"
#include "treespile/mapping.hpp"
#include "treespile/pauli.hpp"

namespace treespile {

/// Dense statevector over up to 14 qubits. Amplitude index bit u holds the
/// basis value of qubit u (qubit 0 is the least-significant bit).
struct DenseState {
  std::size_t n_qubits = 0;
  std::vector<std::complex<double>> amp;

  explicit DenseState(std::size_t n) : n_qubits(n) {
    if (n > 14) throw std::invalid_argument("dense state: more than 14 qubits");
    amp.assign(std::size_t{1} << n, {0.0, 0.0});
    amp[0] = {1.0, 0.0};
  }

  static DenseState basis(std::size_t n, std::size_t index) {
    DenseState s(n);
    s.amp[0] = {0.0, 0.0};
    s.amp.at(index) = {1.0, 0.0};
    return s;
  }

  double norm() const {
    double n2 = 0;
    for (const auto& a : amp) n2 += std::norm(a);
    return std::sqrt(n2);
  }
};

/// |out> = P |in> including the string's i^phase factor.
inline DenseState apply_pauli(const DenseState& s, const PauliString& p) {
  if (p.width() != s.n_qubits) {
    throw std::invalid_argument("apply_pauli: width mismatch");
  }
  DenseState out(s.n_qubits);
  out.amp.assign(s.amp.size(), {0.0, 0.0});
  std::size_t xmask = 0, zmask = 0, ymask = 0;
  for (std::size_t q = 0; q < p.width(); ++q) {
    const char l = p.letter(q);
    if (l == 'X' || l == 'Y') xmask |= std::size_t{1} << q;
    if (l == 'Z') zmask |= std::size_t{1} << q;
    if (l == 'Y') ymask |= std::size_t{1} << q;
  }
  const std::complex<double> global = phase_factor(p.phase_exp());
  for (std::size_t i = 0; i < s.amp.size(); ++i) {
    if (s.amp[i] == std::complex<double>(0.0, 0.0)) continue;
    const std::size_t j = i ^ xmask;
    std::complex<double> f = global;
    // Z on |1> flips sign; Y contributes i on |0>, -i on |1>.
    const int zparity = std::popcount(i & zmask) & 1;
    if (zparity) f = -f;
    const int y0 = std::popcount(~i & ymask & (s.amp.size() - 1));
    const int y1 = std::popcount(i & ymask);
    const int ipow = ((y0 - y1) % 4 + 4) % 4;
    f *= phase_factor(static_cast<std::uint8_t>(ipow));
    out.amp[j] += f * s.amp[i];
  }
  return out;
}

/// exp(i * theta * P) |s> for Hermitian P (phase_exp 0 or 2), via the exact
/// cosine/sine update from P^2 = I.
inline DenseState apply_pauli_exp(const DenseState& s, const PauliString& p,
                                  double theta) {
  if (p.phase_exp() == 1 || p.phase_exp() == 3) {
    throw std::invalid_argument("apply_pauli_exp: string must be Hermitian");
  }
  DenseState px = apply_pauli(s, p);
  DenseState out(s.n_qubits);
  const double c = std::cos(theta), si = std::sin(theta);
  for (std::size_t i = 0; i < s.amp.size(); ++i) {
    out.amp[i] = c * s.amp[i] + std::complex<double>(0.0, si) * px.amp[i];
  }
  return out;
}

/// Applies exp(theta * T) for an anti-Hermitian sum T = sum_i (i*gamma_i) P_i
/// with pairwise-commuting terms (checked); exact product of term factors.
inline DenseState apply_generator_exp(const DenseState& s, const PauliSum& sum,
                                      double theta) {
  if (!sum.is_anti_hermitian()) {
    throw std::invalid_argument("apply_generator_exp: sum must be i*Hermitian");
  }
  const auto& terms = sum.terms();
  for (std::size_t a = 0; a < terms.size(); ++a) {
    for (std::size_t b = a + 1; b < terms.size(); ++b) {
      if (!terms[a].string.commutes_with(terms[b].string)) {
        throw std::invalid_argument(
            "apply_generator_exp: terms must pairwise commute");
      }
    }
  }
  DenseState out = s;
  for (const auto& term : terms) {
    out = apply_pauli_exp(out, term.string, theta * term.coeff.imag());
  }
  return out;
}

inline DenseState apply_sum(const DenseState& s, const PauliSum& sum) {
  DenseState out(s.n_qubits);
  out.amp.assign(s.amp.size(), {0.0, 0.0});
  for (const auto& term : sum.terms()) {
    DenseState t = apply_pauli(s, term.string);
    for (std::size_t i = 0; i < out.amp.size(); ++i) {
      out.amp[i] += term.coeff * t.amp[i];
    }
  }
  return out;
}

inline std::complex<double> expectation(const DenseState& s, const PauliSum& h) {
  if (h.width() != s.n_qubits) {
    throw std::invalid_argument("expectation: width mismatch");
  }
  const DenseState hs = apply_sum(s, h);
  std::complex<double> e{0.0, 0.0};
  for (std::size_t i = 0; i < s.amp.size(); ++i) {
    e += std::conj(s.amp[i]) * hs.amp[i];
  }
  return e;
}

// ---------------------------------------------------------------------------
// Unitaries

inline void apply_gate(std::vector<std::complex<double>>& amp, const Gate& g,
                       std::size_t n_qubits) {
  const std::size_t dim = std::size_t{1} << n_qubits;
  const std::size_t bit0 = std::size_t{1} << g.q0;
  switch (g.kind) {
    case GateKind::H: {
      const double inv = 1.0 / std::sqrt(2.0);
      for (std::size_t i = 0; i < dim; ++i) {
        if (i & bit0) continue;
        const auto a = amp[i], b = amp[i | bit0];
        amp[i] = inv * (a + b);
        amp[i | bit0] = inv * (a - b);
      }
      break;
    }
    case GateKind::S:
      for (std::size_t i = 0; i < dim; ++i) {
        if (i & bit0) amp[i] *= std::complex<double>(0.0, 1.0);
      }
      break;
    case GateKind::Sdg:
      for (std::size_t i = 0; i < dim; ++i) {
        if (i & bit0) amp[i] *= std::complex<double>(0.0, -1.0);
      }
      break;
    case GateKind::X:
      for (std::size_t i = 0; i < dim; ++i) {
        if (!(i & bit0)) std::swap(amp[i], amp[i | bit0]);
      }
      break;
    case GateKind::Cnot: {
      const std::size_t bit1 = std::size_t{1} << g.q1;
      for (std::size_t i = 0; i < dim; ++i) {
        if ((i & bit0) && !(i & bit1)) std::swap(amp[i], amp[i | bit1]);
      }
      break;
    }
    case GateKind::Rz: {
      const std::complex<double> e0 = std::exp(std::complex<double>(0, -g.angle / 2));
      const std::complex<double> e1 = std::exp(std::complex<double>(0, g.angle / 2));
      for (std::size_t i = 0; i < dim; ++i) {
        amp[i] *= (i & bit0) ? e1 : e0;
      }
      break;
    }
  }
}

inline DenseState apply_circuit(const DenseState& s, const Circuit& c) {
  if (c.n_qubits != s.n_qubits) {
    throw std::invalid_argument("apply_circuit: width mismatch");
  }
  DenseState out = s;
  for (const auto& g : c.gates) apply_gate(out.amp, g, s.n_qubits);
  return out;
}

/// Exact unitary of a circuit on up to 8 qubits.
inline Eigen::MatrixXcd circuit_unitary(const Circuit& c) {
  if (c.n_qubits > 8) {
    throw std::invalid_argument("circuit_unitary: more than 8 qubits");
  }
  const std::size_t dim = std::size_t{1} << c.n_qubits;
  Eigen::MatrixXcd u(dim, dim);
  for (std::size_t col = 0; col < dim; ++col) {
    std::vector<std::complex<double>> amp(dim, {0.0, 0.0});
    amp[col] = {1.0, 0.0};
    for (const auto& g : c.gates) apply_gate(amp, g, c.n_qubits);
    for (std::size_t row = 0; row < dim; ++row) {
      u(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = amp[row];
    }
  }
  return u;
}

inline Eigen::MatrixXcd pauli_matrix(const PauliString& p) {
  if (p.width() > 8) {
    throw std::invalid_argument("pauli_matrix: more than 8 qubits");
  }
  const std::size_t dim = std::size_t{1} << p.width();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (std::size_t col = 0; col < dim; ++col) {
    DenseState e = DenseState::basis(p.width(), col);
    DenseState pe = apply_pauli(e, p);
    for (std::size_t row = 0; row < dim; ++row) {
      m(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) =
          pe.amp[row];
    }
  }
  return m;
}

inline Eigen::MatrixXcd sum_matrix(const PauliSum& sum) {
  const std::size_t dim = std::size_t{1} << sum.width();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& term : sum.terms()) {
    m += term.coeff * pauli_matrix(term.string);
  }
  return m;
}

/// exp(theta * T) for the mapped generator T as a dense matrix.
inline Eigen::MatrixXcd generator_exponential(const PauliSum& sum,
                                              double theta) {
  const Eigen::MatrixXcd m = theta * sum_matrix(sum);
  return m.exp();
}

/// Global-phase-insensitive Frobenius distance min_phi |U - e^{i phi} V|_F,
/// computed elementwise at the optimal phi = arg tr(U^dag V).
inline double phase_insensitive_distance(const Eigen::MatrixXcd& u,
                                         const Eigen::MatrixXcd& v) {
  const std::complex<double> tr = (u.adjoint() * v).trace();
  const std::complex<double> phase =
      std::abs(tr) > 0 ? tr / std::abs(tr) : std::complex<double>(1.0, 0.0);
  return (u - v * std::conj(phase)).norm();
}

}  // namespace treespile
