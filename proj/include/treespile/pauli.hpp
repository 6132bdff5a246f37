#pragma once

#include <algorithm>
#include <bit>
#include <complex>
#include <cstdint>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace treespile {

/// Phase-tracked Pauli string over a fixed number of qubits.
///
/// The operator represented is i^phase_exp * (tensor product of per-qubit
/// letters), with the letter on qubit u determined by the bit pair
/// (x,z) = (0,0)/(1,0)/(1,1)/(0,1) -> I/X/Y/Z. All arithmetic is exact
/// integer arithmetic; no floating-point phases.
class PauliString {
 public:
  PauliString() = default;

  explicit PauliString(std::size_t width)
      : width_(width), x_(word_count(width), 0), z_(word_count(width), 0) {}

  /// Single-letter string: `letter` in {'X','Y','Z'} on `qubit`, identity
  /// elsewhere, phase 0.
  static PauliString single(std::size_t width, std::size_t qubit, char letter) {
    PauliString p(width);
    p.set_letter(qubit, letter);
    return p;
  }

  /// Parses text of the form "[phase]LETTERS" with phase in {"", "i", "-",
  /// "-i"} and letters over {I,X,Y,Z}, qubit 0 leftmost. Example: "-iXIZY".
  static PauliString from_text(std::string_view text) {
    std::uint8_t phase = 0;
    if (!text.empty() && text.front() == '-') {
      phase = 2;
      text.remove_prefix(1);
    }
    if (!text.empty() && text.front() == 'i') {
      phase = static_cast<std::uint8_t>((phase + 1) & 3);
      text.remove_prefix(1);
    }
    PauliString p(text.size());
    for (std::size_t q = 0; q < text.size(); ++q) {
      const char c = text[q];
      if (c != 'I') {
        p.set_letter(q, c);
      }
    }
    p.phase_ = phase;
    return p;
  }

  std::size_t width() const { return width_; }
  std::uint8_t phase_exp() const { return phase_; }

  void set_phase_exp(std::uint8_t p) { phase_ = static_cast<std::uint8_t>(p & 3); }

  bool x_bit(std::size_t q) const { return bit(x_, q); }
  bool z_bit(std::size_t q) const { return bit(z_, q); }

  char letter(std::size_t q) const {
    check_qubit(q);
    const bool x = x_bit(q), z = z_bit(q);
    if (x && z) return 'Y';
    if (x) return 'X';
    if (z) return 'Z';
    return 'I';
  }

  void set_letter(std::size_t q, char letter) {
    check_qubit(q);
    bool x = false, z = false;
    switch (letter) {
      case 'I': break;
      case 'X': x = true; break;
      case 'Y': x = true; z = true; break;
      case 'Z': z = true; break;
      default:
        throw std::invalid_argument("PauliString: unknown letter");
    }
    set_bit(x_, q, x);
    set_bit(z_, q, z);
  }

  /// In-place right multiplication: *this = (*this) * rhs, exact phase.
  void mul_assign(const PauliString& rhs) {
    if (rhs.width_ != width_) {
      throw std::invalid_argument("PauliString multiply: width mismatch");
    }
    // Phase contribution per qubit from the single-qubit product table,
    // counted word-parallel: +1 for XY, YZ, ZX; -1 for YX, ZY, XZ.
    int plus = 0, minus = 0;
    for (std::size_t w = 0; w < x_.size(); ++w) {
      const std::uint64_t ax = x_[w], az = z_[w];
      const std::uint64_t bx = rhs.x_[w], bz = rhs.z_[w];
      const std::uint64_t aX = ax & ~az, aY = ax & az, aZ = ~ax & az;
      const std::uint64_t bX = bx & ~bz, bY = bx & bz, bZ = ~bx & bz;
      plus += std::popcount(aX & bY) + std::popcount(aY & bZ) +
              std::popcount(aZ & bX);
      minus += std::popcount(aY & bX) + std::popcount(aZ & bY) +
               std::popcount(aX & bZ);
      x_[w] = ax ^ bx;
      z_[w] = az ^ bz;
    }
    phase_ = static_cast<std::uint8_t>(
        static_cast<unsigned>(phase_ + rhs.phase_ + (plus - minus) % 4 + 8) & 3);
  }

  friend PauliString operator*(const PauliString& a, const PauliString& b) {
    PauliString r = a;
    r.mul_assign(b);
    return r;
  }

  /// True iff the two strings commute (symplectic form vanishes mod 2).
  bool commutes_with(const PauliString& other) const {
    if (other.width_ != width_) {
      throw std::invalid_argument("PauliString commutes: width mismatch");
    }
    int acc = 0;
    for (std::size_t w = 0; w < x_.size(); ++w) {
      acc ^= std::popcount(x_[w] & other.z_[w]) & 1;
      acc ^= std::popcount(z_[w] & other.x_[w]) & 1;
    }
    return acc == 0;
  }

  std::size_t weight() const {
    std::size_t k = 0;
    for (std::size_t w = 0; w < x_.size(); ++w) {
      k += static_cast<std::size_t>(std::popcount(x_[w] | z_[w]));
    }
    return k;
  }

  std::vector<std::size_t> support() const {
    std::vector<std::size_t> qs;
    for (std::size_t w = 0; w < x_.size(); ++w) {
      std::uint64_t m = x_[w] | z_[w];
      while (m != 0) {
        const int b = std::countr_zero(m);
        qs.push_back(w * 64 + static_cast<std::size_t>(b));
        m &= m - 1;
      }
    }
    return qs;
  }

  /// Per-word OR of the x and z masks: bit set iff the qubit is in the support.
  std::vector<std::uint64_t> support_mask() const {
    std::vector<std::uint64_t> m(x_.size());
    for (std::size_t w = 0; w < x_.size(); ++w) m[w] = x_[w] | z_[w];
    return m;
  }

  bool is_identity_letters() const {
    for (std::size_t w = 0; w < x_.size(); ++w) {
      if ((x_[w] | z_[w]) != 0) return false;
    }
    return true;
  }

  /// All letters are Z or I, with at least one Z.
  bool is_z_type() const {
    bool any = false;
    for (std::size_t w = 0; w < x_.size(); ++w) {
      if (x_[w] != 0) return false;
      any = any || z_[w] != 0;
    }
    return any;
  }

  bool letters_equal(const PauliString& other) const {
    return width_ == other.width_ && x_ == other.x_ && z_ == other.z_;
  }

  friend bool operator==(const PauliString& a, const PauliString& b) {
    return a.phase_ == b.phase_ && a.letters_equal(b);
  }

  /// Lexicographic order on the bit sequence (z_0..z_{Q-1}, x_0..x_{Q-1});
  /// ignores the phase. Used as the canonical term order.
  static bool canonical_less(const PauliString& a, const PauliString& b) {
    if (a.width_ != b.width_) return a.width_ < b.width_;
    if (int c = compare_bits(a.z_, b.z_); c != 0) return c < 0;
    return compare_bits(a.x_, b.x_) < 0;
  }

  std::string to_text() const {
    static const char* prefix[4] = {"", "i", "-", "-i"};
    std::string s = prefix[phase_];
    s.reserve(s.size() + width_);
    for (std::size_t q = 0; q < width_; ++q) s.push_back(letter(q));
    return s;
  }

  const std::vector<std::uint64_t>& x_words() const { return x_; }
  const std::vector<std::uint64_t>& z_words() const { return z_; }

 private:
  static std::size_t word_count(std::size_t width) { return (width + 63) / 64; }

  void check_qubit(std::size_t q) const {
    if (q >= width_) {
      throw std::invalid_argument("PauliString: qubit index out of range");
    }
  }

  static bool bit(const std::vector<std::uint64_t>& v, std::size_t q) {
    return ((v[q / 64] >> (q % 64)) & 1ULL) != 0;
  }

  static void set_bit(std::vector<std::uint64_t>& v, std::size_t q, bool b) {
    const std::uint64_t m = 1ULL << (q % 64);
    if (b) {
      v[q / 64] |= m;
    } else {
      v[q / 64] &= ~m;
    }
  }

  // -1/0/+1 comparing bit sequences in qubit order (bit 0 first).
  static int compare_bits(const std::vector<std::uint64_t>& a,
                          const std::vector<std::uint64_t>& b) {
    for (std::size_t w = 0; w < a.size(); ++w) {
      const std::uint64_t d = a[w] ^ b[w];
      if (d != 0) {
        const int i = std::countr_zero(d);
        return ((a[w] >> i) & 1ULL) ? 1 : -1;
      }
    }
    return 0;
  }

  std::size_t width_ = 0;
  std::uint8_t phase_ = 0;
  std::vector<std::uint64_t> x_, z_;
};

inline std::complex<double> phase_factor(std::uint8_t phase_exp) {
  switch (phase_exp & 3) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

struct PauliTerm {
  std::complex<double> coeff;
  PauliString string;  // phase_exp 0 after simplification
};

/// Linear combination of Pauli strings with complex coefficients. After
/// simplify(), terms are in canonical (z,x) order, letter patterns are unique,
/// string phases are folded into the coefficients and near-zero terms dropped.
class PauliSum {
 public:
  PauliSum() = default;
  explicit PauliSum(std::size_t width) : width_(width) {}

  std::size_t width() const { return width_; }
  const std::vector<PauliTerm>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  void add_term(std::complex<double> coeff, PauliString string) {
    if (terms_.empty() && width_ == 0) {
      width_ = string.width();
    }
    if (string.width() != width_) {
      throw std::invalid_argument("PauliSum: width mismatch");
    }
    coeff *= phase_factor(string.phase_exp());
    string.set_phase_exp(0);
    terms_.push_back({coeff, std::move(string)});
  }

  void simplify(double drop_tol = 1e-12) {
    std::sort(terms_.begin(), terms_.end(),
              [](const PauliTerm& a, const PauliTerm& b) {
                return PauliString::canonical_less(a.string, b.string);
              });
    std::vector<PauliTerm> merged;
    for (auto& t : terms_) {
      if (!merged.empty() && merged.back().string.letters_equal(t.string)) {
        merged.back().coeff += t.coeff;
      } else {
        merged.push_back(std::move(t));
      }
    }
    terms_.clear();
    for (auto& t : merged) {
      if (std::abs(t.coeff) > drop_tol) {
        terms_.push_back(std::move(t));
      }
    }
  }

  /// Every coefficient purely imaginary (within tol), i.e. the sum equals
  /// i times a Hermitian operator.
  bool is_anti_hermitian(double tol = 1e-10) const {
    for (const auto& t : terms_) {
      if (std::abs(t.coeff.real()) > tol) return false;
    }
    return true;
  }

  bool is_hermitian(double tol = 1e-10) const {
    for (const auto& t : terms_) {
      if (std::abs(t.coeff.imag()) > tol) return false;
    }
    return true;
  }

 private:
  std::size_t width_ = 0;
  std::vector<PauliTerm> terms_;
};

}  // namespace treespile
