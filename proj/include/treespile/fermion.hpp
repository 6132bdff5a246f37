#pragma once

#include <algorithm>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "treespile/pauli.hpp"

namespace treespile {

/// Product of Majorana operators m_{i1} m_{i2} ... times a complex
/// coefficient. Canonical form has strictly increasing indices; reordering
/// swaps flip the coefficient sign and equal adjacent pairs cancel (m_k^2 = 1).
struct MajoranaMonomial {
  std::vector<int> indices;
  std::complex<double> coeff{1.0, 0.0};

  MajoranaMonomial() = default;
  MajoranaMonomial(std::vector<int> idx, std::complex<double> c)
      : indices(std::move(idx)), coeff(c) {
    normalize();
  }

  void normalize() {
    // Insertion sort counting transpositions, then cancel equal neighbours.
    int swaps = 0;
    for (std::size_t i = 1; i < indices.size(); ++i) {
      int v = indices[i];
      std::size_t j = i;
      while (j > 0 && indices[j - 1] > v) {
        indices[j] = indices[j - 1];
        --j;
        ++swaps;
      }
      indices[j] = v;
    }
    if (swaps % 2 != 0) coeff = -coeff;
    std::vector<int> out;
    out.reserve(indices.size());
    for (int v : indices) {
      if (!out.empty() && out.back() == v) {
        out.pop_back();
      } else {
        out.push_back(v);
      }
    }
    indices = std::move(out);
  }

  MajoranaMonomial operator*(const MajoranaMonomial& rhs) const {
    MajoranaMonomial r;
    r.indices = indices;
    r.indices.insert(r.indices.end(), rhs.indices.begin(), rhs.indices.end());
    r.coeff = coeff * rhs.coeff;
    r.normalize();
    return r;
  }

  /// Hermitian conjugate: reverse index order and conjugate the coefficient.
  MajoranaMonomial adjoint() const {
    MajoranaMonomial r;
    r.indices.assign(indices.rbegin(), indices.rend());
    r.coeff = std::conj(coeff);
    r.normalize();
    return r;
  }
};

enum class GeneratorKind { Single, Double, Maj2, Maj4 };

inline const char* to_string(GeneratorKind k) {
  switch (k) {
    case GeneratorKind::Single: return "single";
    case GeneratorKind::Double: return "double";
    case GeneratorKind::Maj2: return "maj2";
    case GeneratorKind::Maj4: return "maj4";
  }
  return "?";
}

/// One parameterized generator of a real-angle unitary exp(theta * tau).
/// single/double index fermionic modes; maj2/maj4 index Majoranas.
struct FermionicGenerator {
  GeneratorKind kind = GeneratorKind::Maj2;
  std::vector<int> indices;
  double theta = 0.0;

  static FermionicGenerator single(int i, int j, double theta = 0.0) {
    return {GeneratorKind::Single, {i, j}, theta};
  }
  static FermionicGenerator excitation_double(int i, int j, int k, int l,
                                              double theta = 0.0) {
    return {GeneratorKind::Double, {i, j, k, l}, theta};
  }
  static FermionicGenerator maj2(int u, int v, double theta = 0.0) {
    return {GeneratorKind::Maj2, {u, v}, theta};
  }
  static FermionicGenerator maj4(int u, int v, int r, int s,
                                 double theta = 0.0) {
    return {GeneratorKind::Maj4, {u, v, r, s}, theta};
  }
};

struct FermionicAnsatz {
  int n_modes = 0;
  std::vector<int> reference_occupations;  // length n_modes, bits
  std::vector<FermionicGenerator> generators;

  void validate() const {
    if (n_modes <= 0) {
      throw std::invalid_argument("ansatz: n_modes must be positive");
    }
    if (static_cast<int>(reference_occupations.size()) != n_modes) {
      throw std::invalid_argument(
          "ansatz: reference_occupations length must equal n_modes");
    }
    for (int b : reference_occupations) {
      if (b != 0 && b != 1) {
        throw std::invalid_argument("ansatz: occupations must be 0 or 1");
      }
    }
    for (const auto& g : generators) {
      validate_generator(g, n_modes);
    }
  }

  static void validate_generator(const FermionicGenerator& g, int n_modes) {
    const bool mode_indexed =
        g.kind == GeneratorKind::Single || g.kind == GeneratorKind::Double;
    const int limit = mode_indexed ? n_modes : 2 * n_modes;
    const std::size_t arity =
        (g.kind == GeneratorKind::Single || g.kind == GeneratorKind::Maj2) ? 2
                                                                           : 4;
    if (g.indices.size() != arity) {
      throw std::invalid_argument("generator: wrong index count");
    }
    for (std::size_t a = 0; a < g.indices.size(); ++a) {
      if (g.indices[a] < 0 || g.indices[a] >= limit) {
        throw std::invalid_argument("generator: index out of range");
      }
      for (std::size_t b = a + 1; b < g.indices.size(); ++b) {
        if (g.indices[a] == g.indices[b]) {
          throw std::invalid_argument("generator: repeated indices");
        }
      }
    }
  }
};

struct HamiltonianSpec {
  int n_modes = 0;
  std::vector<MajoranaMonomial> terms;

  /// True iff the sum of canonicalized terms is self-adjoint.
  bool is_hermitian(double tol = 1e-12) const {
    // Group canonical monomials, then require coeff == conj(coeff) * sign of
    // index reversal for each group.
    std::vector<MajoranaMonomial> canon = terms;
    std::sort(canon.begin(), canon.end(),
              [](const MajoranaMonomial& a, const MajoranaMonomial& b) {
                return a.indices < b.indices;
              });
    std::vector<MajoranaMonomial> merged;
    for (auto& t : canon) {
      if (!merged.empty() && merged.back().indices == t.indices) {
        merged.back().coeff += t.coeff;
      } else {
        merged.push_back(t);
      }
    }
    for (const auto& t : merged) {
      if (std::abs(t.coeff) <= tol) continue;
      const auto adj = t.adjoint();
      if (std::abs(adj.coeff - t.coeff) > tol) return false;
    }
    return true;
  }

  void validate() const {
    if (n_modes <= 0) {
      throw std::invalid_argument("hamiltonian: n_modes must be positive");
    }
    for (const auto& t : terms) {
      for (std::size_t a = 0; a + 1 < t.indices.size(); ++a) {
        if (t.indices[a] >= t.indices[a + 1]) {
          throw std::invalid_argument(
              "hamiltonian: monomial indices must be strictly increasing");
        }
      }
      for (int idx : t.indices) {
        if (idx < 0 || idx >= 2 * n_modes) {
          throw std::invalid_argument("hamiltonian: Majorana index out of range");
        }
      }
    }
    if (!is_hermitian()) {
      throw std::invalid_argument("hamiltonian: terms are not Hermitian");
    }
  }
};

namespace detail {

// a_j or a_j^dag as a two-monomial Majorana polynomial:
// a_j = (m_{2j} + i m_{2j+1})/2, a_j^dag = (m_{2j} - i m_{2j+1})/2.
inline std::vector<MajoranaMonomial> ladder_op(int mode, bool dagger) {
  const std::complex<double> half(0.5, 0.0);
  const std::complex<double> ihalf(0.0, dagger ? -0.5 : 0.5);
  return {MajoranaMonomial({2 * mode}, half),
          MajoranaMonomial({2 * mode + 1}, ihalf)};
}

inline std::vector<MajoranaMonomial> poly_mul(
    const std::vector<MajoranaMonomial>& a,
    const std::vector<MajoranaMonomial>& b) {
  std::vector<MajoranaMonomial> out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a) {
    for (const auto& y : b) {
      out.push_back(x * y);
    }
  }
  return out;
}

inline void poly_collect(std::vector<MajoranaMonomial>& poly,
                         double tol = 1e-14) {
  std::sort(poly.begin(), poly.end(),
            [](const MajoranaMonomial& a, const MajoranaMonomial& b) {
              return a.indices < b.indices;
            });
  std::vector<MajoranaMonomial> out;
  for (auto& t : poly) {
    if (!out.empty() && out.back().indices == t.indices) {
      out.back().coeff += t.coeff;
    } else {
      out.push_back(std::move(t));
    }
  }
  poly.clear();
  for (auto& t : out) {
    if (std::abs(t.coeff) > tol) poly.push_back(std::move(t));
  }
}

}  // namespace detail

/// Expands a generator into its canonical Majorana-monomial form.
/// single(i,j): a_i^dag a_j - a_j^dag a_i; double(i,j,k,l):
/// a_i^dag a_j^dag a_k a_l - a_k^dag a_l^dag a_i a_j; maj2/maj4 are single
/// monomials with coefficients 1 and i. The result is anti-Hermitian as a sum.
inline std::vector<MajoranaMonomial> expand_generator(
    const FermionicGenerator& g, int n_modes) {
  FermionicAnsatz::validate_generator(g, n_modes);
  using detail::ladder_op;
  using detail::poly_mul;

  std::vector<MajoranaMonomial> poly;
  switch (g.kind) {
    case GeneratorKind::Maj2:
      poly.push_back(MajoranaMonomial({g.indices[0], g.indices[1]}, {1, 0}));
      break;
    case GeneratorKind::Maj4:
      poly.push_back(MajoranaMonomial(
          {g.indices[0], g.indices[1], g.indices[2], g.indices[3]}, {0, 1}));
      break;
    case GeneratorKind::Single: {
      const int i = g.indices[0], j = g.indices[1];
      poly = poly_mul(ladder_op(i, true), ladder_op(j, false));
      auto rev = poly_mul(ladder_op(j, true), ladder_op(i, false));
      for (auto& t : rev) {
        t.coeff = -t.coeff;
        poly.push_back(std::move(t));
      }
      break;
    }
    case GeneratorKind::Double: {
      const int i = g.indices[0], j = g.indices[1];
      const int k = g.indices[2], l = g.indices[3];
      poly = poly_mul(
          poly_mul(ladder_op(i, true), ladder_op(j, true)),
          poly_mul(ladder_op(k, false), ladder_op(l, false)));
      auto rev = poly_mul(
          poly_mul(ladder_op(k, true), ladder_op(l, true)),
          poly_mul(ladder_op(i, false), ladder_op(j, false)));
      for (auto& t : rev) {
        t.coeff = -t.coeff;
        poly.push_back(std::move(t));
      }
      break;
    }
  }
  detail::poly_collect(poly);
  return poly;
}

/// An adaptive-ansatz pool entry: either a fermionic generator (treespilable)
/// or a fixed qubit-space operator in the Jordan-Wigner frame (baseline only).
using PoolOperator = std::variant<FermionicGenerator, PauliSum>;

enum class PoolKind { Fermionic, Majoranic, Qeb, Qubit };

inline PoolKind pool_kind_from_string(const std::string& s) {
  if (s == "fermionic") return PoolKind::Fermionic;
  if (s == "majoranic") return PoolKind::Majoranic;
  if (s == "qeb") return PoolKind::Qeb;
  if (s == "qubit") return PoolKind::Qubit;
  throw std::invalid_argument("unknown pool kind: " + s);
}

namespace detail {

inline PauliSum qeb_single_sum(int i, int j, int n_modes) {
  const std::size_t w = static_cast<std::size_t>(n_modes);
  PauliSum sum(w);
  PauliString xy(w), yx(w);
  xy.set_letter(static_cast<std::size_t>(i), 'X');
  xy.set_letter(static_cast<std::size_t>(j), 'Y');
  yx.set_letter(static_cast<std::size_t>(i), 'Y');
  yx.set_letter(static_cast<std::size_t>(j), 'X');
  sum.add_term({0.0, 0.5}, xy);
  sum.add_term({0.0, -0.5}, yx);
  sum.simplify();
  return sum;
}

// The eight weight-4 letter patterns of the qubit-excitation double, with
// signs, acting on qubits (i, j, k, l).
inline const std::vector<std::pair<const char*, int>>& qeb_double_table() {
  static const std::vector<std::pair<const char*, int>> table = {
      {"XYXX", +1}, {"YXXX", +1}, {"YYYX", +1}, {"YYXY", +1},
      {"XXYX", -1}, {"XXXY", -1}, {"YXYY", -1}, {"XYYY", -1}};
  return table;
}

inline PauliSum qeb_double_sum(int i, int j, int k, int l, int n_modes) {
  const std::size_t w = static_cast<std::size_t>(n_modes);
  const int qubits[4] = {i, j, k, l};
  PauliSum sum(w);
  for (const auto& [letters, sign] : qeb_double_table()) {
    PauliString p(w);
    for (int a = 0; a < 4; ++a) {
      p.set_letter(static_cast<std::size_t>(qubits[a]), letters[a]);
    }
    sum.add_term({0.0, sign / 8.0}, p);
  }
  sum.simplify();
  return sum;
}

}  // namespace detail

/// Enumerates an operator pool over full index ranges (no spin or particle
/// symmetry filtering; callers may filter). Fermionic and Majoranic pools are
/// generator lists; qeb/qubit pools are Jordan-Wigner-frame Pauli sums.
inline std::vector<PoolOperator> enumerate_pool(PoolKind kind, int n_modes) {
  if (n_modes < 2) {
    throw std::invalid_argument("enumerate_pool: n_modes must be >= 2");
  }
  std::vector<PoolOperator> pool;
  switch (kind) {
    case PoolKind::Fermionic: {
      for (int i = 0; i < n_modes; ++i) {
        for (int j = i + 1; j < n_modes; ++j) {
          pool.push_back(FermionicGenerator::single(i, j));
        }
      }
      // Doubles over i<j, k<l, (i,j) < (k,l), all indices distinct.
      for (int i = 0; i < n_modes; ++i) {
        for (int j = i + 1; j < n_modes; ++j) {
          for (int k = 0; k < n_modes; ++k) {
            for (int l = k + 1; l < n_modes; ++l) {
              if (std::make_pair(i, j) >= std::make_pair(k, l)) continue;
              if (k == i || k == j || l == i || l == j) continue;
              pool.push_back(FermionicGenerator::excitation_double(i, j, k, l));
            }
          }
        }
      }
      break;
    }
    case PoolKind::Majoranic: {
      const int m = 2 * n_modes;
      for (int u = 0; u < m; ++u) {
        for (int v = u + 1; v < m; ++v) {
          pool.push_back(FermionicGenerator::maj2(u, v));
        }
      }
      for (int u = 0; u < m; ++u) {
        for (int v = u + 1; v < m; ++v) {
          for (int r = v + 1; r < m; ++r) {
            for (int s = r + 1; s < m; ++s) {
              pool.push_back(FermionicGenerator::maj4(u, v, r, s));
            }
          }
        }
      }
      break;
    }
    case PoolKind::Qeb: {
      for (int i = 0; i < n_modes; ++i) {
        for (int j = i + 1; j < n_modes; ++j) {
          pool.push_back(detail::qeb_single_sum(i, j, n_modes));
        }
      }
      for (int i = 0; i < n_modes; ++i) {
        for (int j = i + 1; j < n_modes; ++j) {
          for (int k = 0; k < n_modes; ++k) {
            for (int l = k + 1; l < n_modes; ++l) {
              if (std::make_pair(i, j) >= std::make_pair(k, l)) continue;
              if (k == i || k == j || l == i || l == j) continue;
              pool.push_back(detail::qeb_double_sum(i, j, k, l, n_modes));
            }
          }
        }
      }
      break;
    }
    case PoolKind::Qubit: {
      // Split each qeb element into its individual strings, deduplicated,
      // each as the generator i*P of the unitary exp(i theta P).
      std::vector<PauliString> seen;
      auto add_string = [&](const PauliString& p) {
        for (const auto& q : seen) {
          if (q.letters_equal(p)) return;
        }
        seen.push_back(p);
        PauliSum s(p.width());
        PauliString bare = p;
        bare.set_phase_exp(0);
        s.add_term({0.0, 1.0}, bare);
        s.simplify();
        pool.push_back(std::move(s));
      };
      for (auto& op : enumerate_pool(PoolKind::Qeb, n_modes)) {
        for (const auto& term : std::get<PauliSum>(op).terms()) {
          add_string(term.string);
        }
      }
      break;
    }
  }
  return pool;
}

}  // namespace treespile
