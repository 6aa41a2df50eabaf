#pragma once

#include <iosfwd>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "epzeta/rational_function.hpp"

namespace epzeta {

/// A word in the generators, as 0-based generator indices.
using Word = std::vector<int>;

/// Generator subset, as sorted 0-based indices.
using GeneratorSet = std::vector<int>;

/// The ShortLex-least reduced word representing a group element. Two normal
/// forms compare equal exactly when the group elements are equal; the word
/// length equals the Coxeter length of the element.
class NormalForm {
public:
  NormalForm() = default;

  const Word& word() const { return word_; }
  int length() const { return static_cast<int>(word_.size()); }
  bool is_identity() const { return word_.empty(); }

  friend bool operator==(const NormalForm& a, const NormalForm& b) {
    return a.word_ == b.word_;
  }
  friend bool operator!=(const NormalForm& a, const NormalForm& b) {
    return !(a == b);
  }
  friend bool operator<(const NormalForm& a, const NormalForm& b) {
    if (a.word_.size() != b.word_.size()) return a.word_.size() < b.word_.size();
    return a.word_ < b.word_;
  }

  std::string str() const;

private:
  friend class CoxeterSystem;
  explicit NormalForm(Word w) : word_(std::move(w)) {}

  Word word_;
};

/// One irreducible factor of a finite Coxeter system.
struct FiniteTypeComponent {
  std::string type;             // "A3", "B2", "I2(7)", ...
  std::vector<int> vertices;    // generator indices, ascending
  std::vector<int> exponents;   // ascending
};

/// Classification result for a finite system: exponents m_i and degrees
/// d_i = m_i + 1, with one entry per generator across all components.
struct FiniteTypeDescriptor {
  std::vector<FiniteTypeComponent> components;

  std::vector<int> exponents() const;
  std::vector<int> degrees() const;
  /// |W| = prod (m_i + 1)
  BigInt order() const;
  std::string str() const;
};

/// A Coxeter system (W, S): a symmetric matrix of bond orders with m(s,s)=1
/// and m(s,t) in {2,3,...} or infinity off the diagonal. Immutable; all
/// operations are safe to call concurrently (the internal normal-form cache
/// is synchronized).
class CoxeterSystem {
public:
  /// Bond value encoding m(s,t) = infinity.
  static constexpr int kInfiniteBond = 0;

  CoxeterSystem(int rank, const std::vector<std::vector<int>>& matrix,
                std::vector<std::string> labels = {});

  /// Convenience constructors for the systems used throughout:
  /// a single dihedral bond (rank 2) or an all-equal-bond triangle etc.
  static CoxeterSystem dihedral(int m);  // I2(m); m = kInfiniteBond allowed
  static CoxeterSystem type_a(int n);

  int rank() const { return rank_; }
  int bond(int i, int j) const { return m_[idx(i, j)]; }
  const std::string& label(int i) const { return labels_[static_cast<std::size_t>(i)]; }

  // --- word problem -------------------------------------------------------

  NormalForm normal_form(const Word& w) const;
  NormalForm identity() const { return NormalForm(); }
  NormalForm generator(int s) const;
  int length(const Word& w) const { return normal_form(w).length(); }

  NormalForm mul(const NormalForm& a, const NormalForm& b) const;
  NormalForm inverse(const NormalForm& a) const;
  bool has_left_descent(const NormalForm& w, int s) const;
  bool has_right_descent(const NormalForm& w, int s) const;

  // --- enumeration --------------------------------------------------------

  /// All elements of length 0..max_length, grouped by length (BFS layer by
  /// layer, deduplicated through normal forms).
  std::vector<std::vector<NormalForm>> elements_by_length(int max_length) const;
  std::vector<std::size_t> counts_by_length(int max_length) const;

  // --- classification and growth ------------------------------------------

  /// Classification of the finite systems; nullopt when W is infinite.
  std::optional<FiniteTypeDescriptor> classify_finite() const;
  bool is_spherical() const { return classify_finite().has_value(); }

  /// For finite W: the polynomial sum_{w in W} t^{l(w)} = prod (1+t+...+t^{m_i});
  /// throws "not spherical" otherwise.
  Polynomial growth_polynomial() const;

  /// The rational form of the growth series, for any W. Finite systems give
  /// growth_polynomial()/1; infinite ones are resolved by the alternating
  /// recursion over proper parabolic subsystems, whose expansion is checked
  /// against enumeration by the verification suites.
  RationalFunction growth_series() const;

  /// The parabolic subsystem on the given generators; words in the result use
  /// indices 0..|gens|-1, in the ascending order of `gens`.
  CoxeterSystem subsystem(const GeneratorSet& gens) const;

  /// Growth polynomial of the (spherical) standard parabolic W_J.
  Polynomial parabolic_growth_polynomial(const GeneratorSet& J) const;

  // --- double cosets -------------------------------------------------------

  /// Minimal-length (W_J, W_K)-double coset representatives of length at most
  /// max_length: the x with l(sx) > l(x) for s in J and l(xs) > l(x) for s in K.
  std::vector<NormalForm> min_double_coset_reps(const GeneratorSet& J,
                                                const GeneratorSet& K,
                                                int max_length) const;

  /// Q(x) = { r in J : x r x^{-1} lies in J }; requires x in ^J W^J.
  GeneratorSet cross_section(const GeneratorSet& J, const NormalForm& x) const;

  struct ParabolicFactors {
    NormalForm left;    // in W_J
    NormalForm middle;  // in ^J W^K
    NormalForm right;   // in ^{K ∩ x^{-1} J x} W_K
  };

  /// The unique w = y x z factorization with additive lengths.
  ParabolicFactors parabolic_decompose(const GeneratorSet& J,
                                       const GeneratorSet& K,
                                       const NormalForm& w) const;

  // --- input format --------------------------------------------------------

  /// Plain-text format, one directive per line:
  ///   rank N
  ///   labels a b c ...        (optional)
  ///   m i j V                 (1-based; V >= 2 or "inf"; default 2)
  static CoxeterSystem parse(std::istream& in, const std::string& source = "<input>");
  static CoxeterSystem parse_string(const std::string& text);

  friend bool operator==(const CoxeterSystem& a, const CoxeterSystem& b) {
    return a.m_ == b.m_;
  }

private:
  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(rank_) +
           static_cast<std::size_t>(j);
  }
  Word normalize_word(Word w) const;
  RationalFunction growth_series_memo(
      std::map<std::vector<int>, RationalFunction>& memo) const;

  int rank_;
  std::vector<int> m_;  // rank x rank, row-major
  std::vector<std::string> labels_;

  struct Cache;
  std::shared_ptr<Cache> cache_;
};

}  // namespace epzeta
