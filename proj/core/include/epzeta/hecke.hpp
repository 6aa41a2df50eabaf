#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <vector>

#include "epzeta/coxeter.hpp"
#include "epzeta/measures.hpp"

namespace epzeta {

/// The Iwahori-Hecke presentation of the Hecke algebra of a Weyl-transitive
/// building action: basis {T_w} indexed by normal forms, products resolved
/// through  T_w T_s = T_{ws}            when l(ws) > l(w),
///          T_w T_s = q T_{ws} + (q-1) T_w   otherwise.
/// Coeff is the coefficient ring: BigRational at numeric q, or
/// RationalFunction with q a formal parameter.
template <class Coeff>
class HeckeAlgebra;

namespace detail {
template <class Coeff>
struct HeckeAlgebraData {
  CoxeterSystem sys;
  Coeff q;
};
}  // namespace detail

template <class Coeff>
class HeckeElement {
public:
  HeckeElement() = default;

  const std::map<NormalForm, Coeff>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Coeff coefficient(const NormalForm& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  /// The coefficient of T_e.
  Coeff trace() const { return coefficient(NormalForm()); }

  friend bool operator==(const HeckeElement& a, const HeckeElement& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const HeckeElement& a, const HeckeElement& b) {
    return !(a == b);
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [w, c] : terms_) {
      if (!out.empty()) out += " + ";
      out += "(" + c.str() + ")*T[" + w.str() + "]";
    }
    return out;
  }

private:
  friend class HeckeAlgebra<Coeff>;

  void set(const NormalForm& w, Coeff c) {
    if (c == Coeff(0)) terms_.erase(w);
    else terms_[w] = std::move(c);
  }

  std::map<NormalForm, Coeff> terms_;
  std::shared_ptr<const detail::HeckeAlgebraData<Coeff>> home_;  // null for 0
};

template <class Coeff>
class HeckeMatrix {
public:
  explicit HeckeMatrix(int n, HeckeElement<Coeff> fill = {})
      : n_(n), entries_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n),
                       std::move(fill)) {
    if (n < 1) throw Error("matrix dimension must be >= 1");
  }

  int dim() const { return n_; }
  HeckeElement<Coeff>& at(int i, int j) {
    return entries_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
                    static_cast<std::size_t>(j)];
  }
  const HeckeElement<Coeff>& at(int i, int j) const {
    return entries_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
                    static_cast<std::size_t>(j)];
  }

private:
  int n_;
  std::vector<HeckeElement<Coeff>> entries_;
};

template <class Coeff>
class HeckeAlgebra {
public:
  HeckeAlgebra(CoxeterSystem sys, Coeff q)
      : data_(std::make_shared<detail::HeckeAlgebraData<Coeff>>(
            detail::HeckeAlgebraData<Coeff>{std::move(sys), std::move(q)})) {}

  const CoxeterSystem& system() const { return data_->sys; }
  const Coeff& q() const { return data_->q; }

  HeckeElement<Coeff> zero() const { return {}; }

  HeckeElement<Coeff> unit() const { return basis(Word{}); }

  HeckeElement<Coeff> basis(const Word& w) const {
    HeckeElement<Coeff> e;
    e.home_ = data_;
    e.set(system().normal_form(w), Coeff(1));
    return e;
  }

  HeckeElement<Coeff> scale(const Coeff& c, const HeckeElement<Coeff>& a) const {
    claim(a);
    HeckeElement<Coeff> out = adopted();
    for (const auto& [w, cw] : a.terms()) out.set(w, c * cw);
    return out;
  }

  HeckeElement<Coeff> add(const HeckeElement<Coeff>& a,
                          const HeckeElement<Coeff>& b) const {
    claim(a);
    claim(b);
    HeckeElement<Coeff> out = adopted();
    out.terms_ = a.terms_;
    for (const auto& [w, c] : b.terms()) out.set(w, out.coefficient(w) + c);
    return out;
  }

  HeckeElement<Coeff> sub(const HeckeElement<Coeff>& a,
                          const HeckeElement<Coeff>& b) const {
    return add(a, scale(Coeff(-1), b));
  }

  /// Bilinear product through the quadratic/braid presentation.
  HeckeElement<Coeff> mult(const HeckeElement<Coeff>& a,
                           const HeckeElement<Coeff>& b) const {
    claim(a);
    claim(b);
    HeckeElement<Coeff> out = adopted();
    for (const auto& [v, cv] : b.terms()) {
      // a * T_v with T_v = T_{s_1} ... T_{s_k} along the reduced word of v.
      HeckeElement<Coeff> acc = a;
      for (int s : v.word()) acc = mult_generator(acc, s);
      for (const auto& [w, cw] : acc.terms())
        out.set(w, out.coefficient(w) + cv * cw);
    }
    return out;
  }

  /// The index character: eps(sum c_w T_w) = sum c_w q^{l(w)}.
  Coeff eps(const HeckeElement<Coeff>& a) const {
    claim(a);
    Coeff out(0);
    for (const auto& [w, c] : a.terms())
      out = out + c * coeff_pow(data_->q, w.length());
    return out;
  }

  /// The involution T_w -> T_{w^{-1}} (an anti-homomorphism).
  HeckeElement<Coeff> star(const HeckeElement<Coeff>& a) const {
    claim(a);
    HeckeElement<Coeff> out = adopted();
    for (const auto& [w, c] : a.terms()) out.set(system().inverse(w), c);
    return out;
  }

  /// e_J = (1/gamma_{W_J}(q)) sum_{w in W_J} T_w for spherical J; satisfies
  /// e_J^2 = e_J, T_s e_J = q e_J for s in J, and trace(e_J) = 1/gamma_{W_J}(q).
  HeckeElement<Coeff> standard_idempotent(GeneratorSet J) const {
    std::sort(J.begin(), J.end());
    J.erase(std::unique(J.begin(), J.end()), J.end());
    const CoxeterSystem sub = system().subsystem(J);
    if (!sub.is_spherical()) throw Error("non-spherical subset");
    Coeff gamma(0);
    HeckeElement<Coeff> sum = adopted();
    const int longest = sub.growth_polynomial().degree();
    for (const auto& layer : sub.elements_by_length(longest)) {
      for (const auto& w : layer) {
        Word parent;
        for (int s : w.word()) parent.push_back(J[static_cast<std::size_t>(s)]);
        sum = add(sum, basis(parent));
        gamma = gamma + coeff_pow(data_->q, w.length());
      }
    }
    return scale(Coeff(1) / gamma, sum);
  }

  HeckeMatrix<Coeff> mat_mult(const HeckeMatrix<Coeff>& a,
                              const HeckeMatrix<Coeff>& b) const {
    if (a.dim() != b.dim()) throw Error("matrix dimension mismatch");
    HeckeMatrix<Coeff> out(a.dim(), adopted());
    for (int i = 0; i < a.dim(); ++i)
      for (int j = 0; j < a.dim(); ++j) {
        HeckeElement<Coeff> acc = adopted();
        for (int k = 0; k < a.dim(); ++k)
          acc = add(acc, mult(a.at(i, k), b.at(k, j)));
        out.at(i, j) = acc;
      }
    return out;
  }

  bool is_idempotent(const HeckeMatrix<Coeff>& m) const {
    const HeckeMatrix<Coeff> sq = mat_mult(m, m);
    for (int i = 0; i < m.dim(); ++i)
      for (int j = 0; j < m.dim(); ++j)
        if (sq.at(i, j) != m.at(i, j)) return false;
    return true;
  }

  /// Sum of the diagonal traces of an idempotent matrix.
  Coeff matrix_trace(const HeckeMatrix<Coeff>& m) const {
    Coeff out(0);
    for (int i = 0; i < m.dim(); ++i) {
      claim(m.at(i, i));
      out = out + m.at(i, i).trace();
    }
    return out;
  }

private:
  static Coeff coeff_pow(const Coeff& base, int e) {
    Coeff acc(1);
    for (int i = 0; i < e; ++i) acc = acc * base;
    return acc;
  }

  HeckeElement<Coeff> adopted() const {
    HeckeElement<Coeff> e;
    e.home_ = data_;
    return e;
  }

  // The zero element (no home) belongs to every algebra; anything else must
  // come from an algebra with the same system and parameter.
  void claim(const HeckeElement<Coeff>& e) const {
    if (!e.home_ || e.home_ == data_) return;
    if (!(e.home_->sys == data_->sys) || !(e.home_->q == data_->q))
      throw Error("mixed Hecke systems");
  }

  HeckeElement<Coeff> mult_generator(const HeckeElement<Coeff>& a, int s) const {
    HeckeElement<Coeff> out = adopted();
    for (const auto& [w, c] : a.terms()) {
      Word v = w.word();
      v.push_back(s);
      const NormalForm ws = system().normal_form(v);
      if (ws.length() > w.length()) {
        out.set(ws, out.coefficient(ws) + c);
      } else {
        out.set(ws, out.coefficient(ws) + c * data_->q);
        out.set(w, out.coefficient(w) + c * (data_->q - Coeff(1)));
      }
    }
    return out;
  }

  std::shared_ptr<const detail::HeckeAlgebraData<Coeff>> data_;
};

/// The Hattori-Stallings rank of a verified idempotent matrix over a numeric
/// Hecke algebra: (sum_i trace(E_ii)) * mu[base]. Rejects non-idempotents.
HaarMeasure hattori_stallings_rank(const HeckeAlgebra<BigRational>& algebra,
                                   const HeckeMatrix<BigRational>& e,
                                   const std::string& base);

using HeckeAlgebraQ = HeckeAlgebra<BigRational>;
using HeckeAlgebraF = HeckeAlgebra<RationalFunction>;

}  // namespace epzeta
