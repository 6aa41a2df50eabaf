#include "epzeta/coxeter.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <numeric>
#include <sstream>

#include "epzeta/errors.hpp"

namespace epzeta {

namespace {

struct WordHash {
  std::size_t operator()(const Word& w) const {
    std::size_t h = 1469598103934665603ull;
    for (int g : w) {
      h ^= static_cast<std::size_t>(g) + 1;
      h *= 1099511628211ull;
    }
    return h;
  }
};

GeneratorSet sorted_unique(GeneratorSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

}  // namespace

struct CoxeterSystem::Cache {
  std::mutex mutex;
  std::unordered_map<Word, Word, WordHash> normal_forms;
};

std::string NormalForm::str() const {
  if (word_.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < word_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(word_[i] + 1);
  }
  return out;
}

std::vector<int> FiniteTypeDescriptor::exponents() const {
  std::vector<int> out;
  for (const auto& c : components)
    out.insert(out.end(), c.exponents.begin(), c.exponents.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> FiniteTypeDescriptor::degrees() const {
  auto out = exponents();
  for (auto& m : out) ++m;
  return out;
}

BigInt FiniteTypeDescriptor::order() const {
  BigInt n = 1;
  for (int m : exponents()) n *= (m + 1);
  return n;
}

std::string FiniteTypeDescriptor::str() const {
  std::string out;
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (i) out += " x ";
    out += components[i].type;
  }
  return out.empty() ? "trivial" : out;
}

CoxeterSystem::CoxeterSystem(int rank, const std::vector<std::vector<int>>& matrix,
                             std::vector<std::string> labels)
    : rank_(rank), labels_(std::move(labels)), cache_(std::make_shared<Cache>()) {
  if (rank < 0) throw Error("negative rank");
  if (static_cast<int>(matrix.size()) != rank)
    throw Error("Coxeter matrix size does not match rank");
  m_.assign(static_cast<std::size_t>(rank) * static_cast<std::size_t>(rank), 1);
  for (int i = 0; i < rank; ++i) {
    if (static_cast<int>(matrix[static_cast<std::size_t>(i)].size()) != rank)
      throw Error("Coxeter matrix is not square");
    for (int j = 0; j < rank; ++j) {
      const int v = matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (i == j) {
        if (v != 1) throw Error("Coxeter matrix diagonal must be 1");
      } else if (v != kInfiniteBond && v < 2) {
        throw Error("off-diagonal Coxeter matrix entries must be >= 2 or infinite");
      }
      if (v != matrix[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)])
        throw Error("Coxeter matrix must be symmetric");
      m_[idx(i, j)] = v;
    }
  }
  if (labels_.empty()) {
    for (int i = 0; i < rank; ++i) labels_.push_back("s" + std::to_string(i + 1));
  } else if (static_cast<int>(labels_.size()) != rank) {
    throw Error("label count does not match rank");
  }
}

CoxeterSystem CoxeterSystem::dihedral(int m) {
  return CoxeterSystem(2, {{1, m}, {m, 1}});
}

CoxeterSystem CoxeterSystem::type_a(int n) {
  std::vector<std::vector<int>> m(static_cast<std::size_t>(n),
                                  std::vector<int>(static_cast<std::size_t>(n), 2));
  for (int i = 0; i < n; ++i) {
    m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
    if (i + 1 < n) {
      m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + 1)] = 3;
      m[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(i)] = 3;
    }
  }
  return CoxeterSystem(n, m);
}

NormalForm CoxeterSystem::generator(int s) const {
  if (s < 0 || s >= rank_) throw Error("generator index out of range");
  return NormalForm(Word{s});
}

// Tits rewriting: a word is reduced iff no sequence of braid moves exposes an
// adjacent equal pair, and the braid moves act transitively on the reduced
// words of an element. Each round explores the braid orbit; when a repeated
// adjacent letter appears the pair is deleted and the search restarts on the
// shorter word. The final orbit consists of all reduced words, of which the
// ShortLex-least is returned.
Word CoxeterSystem::normalize_word(Word w) const {
  for (int g : w)
    if (g < 0 || g >= rank_) throw Error("generator index out of range");

  {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    auto it = cache_->normal_forms.find(w);
    if (it != cache_->normal_forms.end()) return it->second;
  }
  const Word original = w;

restart:
  std::unordered_map<Word, bool, WordHash> seen;
  std::deque<Word> queue;
  seen.emplace(w, true);
  queue.push_back(w);
  Word best = w;
  while (!queue.empty()) {
    Word cur = std::move(queue.front());
    queue.pop_front();
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      if (cur[i] == cur[i + 1]) {
        cur.erase(cur.begin() + static_cast<std::ptrdiff_t>(i),
                  cur.begin() + static_cast<std::ptrdiff_t>(i) + 2);
        w = std::move(cur);
        goto restart;
      }
    }
    if (cur < best) best = cur;
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      const int s = cur[i];
      const int t = cur[i + 1];
      const int m = bond(s, t);
      if (m == kInfiniteBond || i + static_cast<std::size_t>(m) > cur.size())
        continue;
      bool alternating = true;
      for (int k = 0; k < m; ++k) {
        if (cur[i + static_cast<std::size_t>(k)] != ((k % 2 == 0) ? s : t)) {
          alternating = false;
          break;
        }
      }
      if (!alternating) continue;
      Word next = cur;
      for (int k = 0; k < m; ++k)
        next[i + static_cast<std::size_t>(k)] = (k % 2 == 0) ? t : s;
      if (seen.emplace(next, true).second) queue.push_back(std::move(next));
    }
  }

  {
    // The final orbit consists of all reduced words of the element, so every
    // one of them shares the normal form.
    std::lock_guard<std::mutex> lock(cache_->mutex);
    cache_->normal_forms.emplace(original, best);
    for (const auto& [word, unused] : seen)
      cache_->normal_forms.emplace(word, best);
  }
  return best;
}

NormalForm CoxeterSystem::normal_form(const Word& w) const {
  return NormalForm(normalize_word(w));
}

NormalForm CoxeterSystem::mul(const NormalForm& a, const NormalForm& b) const {
  Word w = a.word();
  w.insert(w.end(), b.word().begin(), b.word().end());
  return normal_form(w);
}

NormalForm CoxeterSystem::inverse(const NormalForm& a) const {
  Word w(a.word().rbegin(), a.word().rend());
  return normal_form(w);
}

bool CoxeterSystem::has_left_descent(const NormalForm& w, int s) const {
  Word v{s};
  v.insert(v.end(), w.word().begin(), w.word().end());
  return length(v) < w.length();
}

bool CoxeterSystem::has_right_descent(const NormalForm& w, int s) const {
  Word v = w.word();
  v.push_back(s);
  return length(v) < w.length();
}

std::vector<std::vector<NormalForm>> CoxeterSystem::elements_by_length(
    int max_length) const {
  if (max_length < 0) throw Error("negative length bound");
  std::vector<std::vector<NormalForm>> layers(1, {identity()});
  std::set<NormalForm> seen{identity()};
  for (int k = 0; k < max_length; ++k) {
    std::set<NormalForm> next;
    for (const auto& w : layers[static_cast<std::size_t>(k)]) {
      for (int s = 0; s < rank_; ++s) {
        Word v = w.word();
        v.push_back(s);
        NormalForm nf = normal_form(v);
        if (nf.length() == k + 1 && !seen.count(nf)) next.insert(nf);
      }
    }
    seen.insert(next.begin(), next.end());
    layers.emplace_back(next.begin(), next.end());
    if (next.empty()) {
      layers.resize(static_cast<std::size_t>(max_length) + 1);
      break;
    }
  }
  return layers;
}

std::vector<std::size_t> CoxeterSystem::counts_by_length(int max_length) const {
  const auto layers = elements_by_length(max_length);
  std::vector<std::size_t> counts;
  counts.reserve(layers.size());
  for (const auto& layer : layers) counts.push_back(layer.size());
  return counts;
}

// --- finite type classification ---------------------------------------------

namespace {

std::vector<int> exponents_a(int n) {
  std::vector<int> e(static_cast<std::size_t>(n));
  std::iota(e.begin(), e.end(), 1);
  return e;
}

std::vector<int> exponents_b(int n) {
  std::vector<int> e;
  for (int i = 1; i <= n; ++i) e.push_back(2 * i - 1);
  return e;
}

std::vector<int> exponents_d(int n) {
  std::vector<int> e;
  for (int i = 1; i < n; ++i) e.push_back(2 * i - 1);
  e.push_back(n - 1);
  std::sort(e.begin(), e.end());
  return e;
}

}  // namespace

std::optional<FiniteTypeDescriptor> CoxeterSystem::classify_finite() const {
  // Components of the Coxeter graph (vertices joined when m >= 3 or infinite).
  std::vector<int> comp(static_cast<std::size_t>(rank_), -1);
  int ncomp = 0;
  for (int i = 0; i < rank_; ++i) {
    if (comp[static_cast<std::size_t>(i)] != -1) continue;
    std::deque<int> stack{i};
    comp[static_cast<std::size_t>(i)] = ncomp;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u = 0; u < rank_; ++u) {
        if (u == v || comp[static_cast<std::size_t>(u)] != -1) continue;
        const int m = bond(v, u);
        if (m == kInfiniteBond || m >= 3) {
          comp[static_cast<std::size_t>(u)] = ncomp;
          stack.push_back(u);
        }
      }
    }
    ++ncomp;
  }

  FiniteTypeDescriptor out;
  for (int c = 0; c < ncomp; ++c) {
    std::vector<int> verts;
    for (int i = 0; i < rank_; ++i)
      if (comp[static_cast<std::size_t>(i)] == c) verts.push_back(i);
    const int n = static_cast<int>(verts.size());

    FiniteTypeComponent fc;
    fc.vertices = verts;

    if (n == 1) {
      fc.type = "A1";
      fc.exponents = {1};
      out.components.push_back(std::move(fc));
      continue;
    }

    // Local adjacency restricted to the component.
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    int edges = 0;
    bool infinite_bond = false;
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        const int m = bond(verts[static_cast<std::size_t>(a)],
                           verts[static_cast<std::size_t>(b)]);
        if (m == kInfiniteBond) infinite_bond = true;
        if (m == kInfiniteBond || m >= 3) {
          adj[static_cast<std::size_t>(a)].push_back(b);
          adj[static_cast<std::size_t>(b)].push_back(a);
          ++edges;
        }
      }
    }
    if (infinite_bond) return std::nullopt;
    if (edges != n - 1) return std::nullopt;  // a cycle: affine or worse

    int branch = -1;
    for (int a = 0; a < n; ++a) {
      const auto deg = adj[static_cast<std::size_t>(a)].size();
      if (deg >= 4) return std::nullopt;
      if (deg == 3) {
        if (branch != -1) return std::nullopt;
        branch = a;
      }
    }

    auto bond_local = [&](int a, int b) {
      return bond(verts[static_cast<std::size_t>(a)], verts[static_cast<std::size_t>(b)]);
    };

    if (branch == -1) {
      // A path; walk it from one endpoint and read off the edge labels.
      int start = 0;
      for (int a = 0; a < n; ++a)
        if (adj[static_cast<std::size_t>(a)].size() == 1) { start = a; break; }
      std::vector<int> order{start};
      std::vector<bool> used(static_cast<std::size_t>(n), false);
      used[static_cast<std::size_t>(start)] = true;
      while (static_cast<int>(order.size()) < n) {
        bool advanced = false;
        for (int next : adj[static_cast<std::size_t>(order.back())]) {
          if (!used[static_cast<std::size_t>(next)]) {
            used[static_cast<std::size_t>(next)] = true;
            order.push_back(next);
            advanced = true;
            break;
          }
        }
        if (!advanced) return std::nullopt;
      }
      std::vector<int> labels;
      for (int k = 0; k + 1 < n; ++k)
        labels.push_back(bond_local(order[static_cast<std::size_t>(k)],
                                    order[static_cast<std::size_t>(k + 1)]));
      // Orient so that the larger terminal label comes first.
      if (labels.back() > labels.front())
        std::reverse(labels.begin(), labels.end());

      const int big = *std::max_element(labels.begin(), labels.end());
      const auto count_gt3 =
          std::count_if(labels.begin(), labels.end(), [](int v) { return v > 3; });

      if (n == 2) {
        const int m = labels[0];
        if (m == 3) fc.type = "A2";
        else if (m == 4) fc.type = "B2";
        else if (m == 6) fc.type = "G2";
        else fc.type = "I2(" + std::to_string(m) + ")";
        fc.exponents = {1, m - 1};
      } else if (big == 3) {
        fc.type = "A" + std::to_string(n);
        fc.exponents = exponents_a(n);
      } else if (count_gt3 > 1) {
        return std::nullopt;
      } else if (big == 4) {
        if (labels.front() == 4) {
          fc.type = "B" + std::to_string(n);
          fc.exponents = exponents_b(n);
        } else if (n == 4 && labels == std::vector<int>{3, 4, 3}) {
          fc.type = "F4";
          fc.exponents = {1, 5, 7, 11};
        } else {
          return std::nullopt;
        }
      } else if (big == 5 && labels.front() == 5 && n == 3) {
        fc.type = "H3";
        fc.exponents = {1, 5, 9};
      } else if (big == 5 && labels.front() == 5 && n == 4) {
        fc.type = "H4";
        fc.exponents = {1, 11, 19, 29};
      } else {
        return std::nullopt;
      }
    } else {
      // One branch vertex: D or E shapes, all bonds must be 3.
      for (int a = 0; a < n; ++a)
        for (int b : adj[static_cast<std::size_t>(a)])
          if (bond_local(a, b) != 3) return std::nullopt;
      std::vector<int> arms;
      for (int next : adj[static_cast<std::size_t>(branch)]) {
        int len = 1, prev = branch, cur = next;
        while (adj[static_cast<std::size_t>(cur)].size() == 2) {
          const auto& nb = adj[static_cast<std::size_t>(cur)];
          const int fwd = (nb[0] == prev) ? nb[1] : nb[0];
          prev = cur;
          cur = fwd;
          ++len;
        }
        arms.push_back(len);
      }
      std::sort(arms.begin(), arms.end());
      if (arms[0] == 1 && arms[1] == 1) {
        fc.type = "D" + std::to_string(n);
        fc.exponents = exponents_d(n);
      } else if (arms == std::vector<int>{1, 2, 2}) {
        fc.type = "E6";
        fc.exponents = {1, 4, 5, 7, 8, 11};
      } else if (arms == std::vector<int>{1, 2, 3}) {
        fc.type = "E7";
        fc.exponents = {1, 5, 7, 9, 11, 13, 17};
      } else if (arms == std::vector<int>{1, 2, 4}) {
        fc.type = "E8";
        fc.exponents = {1, 7, 11, 13, 17, 19, 23, 29};
      } else {
        return std::nullopt;
      }
    }
    out.components.push_back(std::move(fc));
  }
  return out;
}

Polynomial CoxeterSystem::growth_polynomial() const {
  const auto desc = classify_finite();
  if (!desc) throw Error("not spherical");
  Polynomial p(1);
  for (int m : desc->exponents()) p = p * Polynomial::geometric_sum(m);
  return p;
}

CoxeterSystem CoxeterSystem::subsystem(const GeneratorSet& gens) const {
  const GeneratorSet g = sorted_unique(gens);
  const int n = static_cast<int>(g.size());
  std::vector<std::vector<int>> m(static_cast<std::size_t>(n),
                                  std::vector<int>(static_cast<std::size_t>(n)));
  std::vector<std::string> labels;
  for (int a = 0; a < n; ++a) {
    if (g[static_cast<std::size_t>(a)] < 0 || g[static_cast<std::size_t>(a)] >= rank_)
      throw Error("generator index out of range");
    labels.push_back(label(g[static_cast<std::size_t>(a)]));
    for (int b = 0; b < n; ++b)
      m[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
          bond(g[static_cast<std::size_t>(a)], g[static_cast<std::size_t>(b)]);
  }
  return CoxeterSystem(n, m, std::move(labels));
}

Polynomial CoxeterSystem::parabolic_growth_polynomial(const GeneratorSet& J) const {
  return subsystem(J).growth_polynomial();
}

// Alternating recursion over proper parabolic subsystems:
//   sum_{J subseteq S} (-1)^{|J|} / gamma~_{W_J}(t) = 0  for W infinite,
// which resolves gamma~_W from the gamma~_{W_J}, J proper. Finite systems
// terminate the recursion through their growth polynomials.
RationalFunction CoxeterSystem::growth_series_memo(
    std::map<std::vector<int>, RationalFunction>& memo) const {
  std::vector<int> key = m_;
  key.push_back(rank_);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;

  RationalFunction result;
  if (auto desc = classify_finite()) {
    Polynomial p(1);
    for (int m : desc->exponents()) p = p * Polynomial::geometric_sum(m);
    result = RationalFunction(p);
  } else {
    RationalFunction sum;
    for (unsigned mask = 0; mask + 1 < (1u << rank_); ++mask) {
      GeneratorSet J;
      for (int s = 0; s < rank_; ++s)
        if (mask & (1u << s)) J.push_back(s);
      const RationalFunction gj = subsystem(J).growth_series_memo(memo);
      const RationalFunction term = gj.inverse();
      sum = (J.size() % 2 == 0) ? sum + term : sum - term;
    }
    if (rank_ % 2 == 0) sum = -sum;  // move the J =S term across
    if (sum.is_zero())
      throw Error("degenerate growth recursion");
    result = sum.inverse();
  }
  memo.emplace(std::move(key), result);
  return result;
}

RationalFunction CoxeterSystem::growth_series() const {
  std::map<std::vector<int>, RationalFunction> memo;
  return growth_series_memo(memo);
}

std::vector<NormalForm> CoxeterSystem::min_double_coset_reps(
    const GeneratorSet& J, const GeneratorSet& K, int max_length) const {
  const GeneratorSet js = sorted_unique(J);
  const GeneratorSet ks = sorted_unique(K);
  std::vector<NormalForm> out;
  for (const auto& layer : elements_by_length(max_length)) {
    for (const auto& x : layer) {
      bool minimal = true;
      for (int s : js)
        if (has_left_descent(x, s)) { minimal = false; break; }
      if (minimal)
        for (int s : ks)
          if (has_right_descent(x, s)) { minimal = false; break; }
      if (minimal) out.push_back(x);
    }
  }
  return out;
}

GeneratorSet CoxeterSystem::cross_section(const GeneratorSet& J,
                                          const NormalForm& x) const {
  const GeneratorSet js = sorted_unique(J);
  for (int s : js)
    if (has_left_descent(x, s) || has_right_descent(x, s))
      throw Error("not a minimal representative");
  GeneratorSet q;
  for (int r : js) {
    Word w = x.word();
    w.push_back(r);
    w.insert(w.end(), x.word().rbegin(), x.word().rend());
    const NormalForm conj = normal_form(w);
    if (conj.length() == 1 &&
        std::binary_search(js.begin(), js.end(), conj.word()[0]))
      q.push_back(r);
  }
  return q;
}

CoxeterSystem::ParabolicFactors CoxeterSystem::parabolic_decompose(
    const GeneratorSet& J, const GeneratorSet& K, const NormalForm& w) const {
  const GeneratorSet js = sorted_unique(J);
  const GeneratorSet ks = sorted_unique(K);

  // Strip left J-descents, then right K-descents. The first phase reaches the
  // minimal element of W_J w; the second then lands on the minimal double
  // coset representative, and the accumulated right factor is automatically
  // the minimal-coset part in ^{K ∩ x^{-1} J x} W_K.
  Word left, right;
  NormalForm cur = w;
  bool progress = true;
  while (progress) {
    progress = false;
    for (int s : js) {
      if (has_left_descent(cur, s)) {
        left.push_back(s);
        Word v{s};
        v.insert(v.end(), cur.word().begin(), cur.word().end());
        cur = normal_form(v);
        progress = true;
        break;
      }
    }
  }
  progress = true;
  while (progress) {
    progress = false;
    for (int s : ks) {
      if (has_right_descent(cur, s)) {
        right.push_back(s);
        Word v = cur.word();
        v.push_back(s);
        cur = normal_form(v);
        progress = true;
        break;
      }
    }
  }
  std::reverse(right.begin(), right.end());
  return {normal_form(left), cur, normal_form(right)};
}

CoxeterSystem CoxeterSystem::parse(std::istream& in, const std::string& source) {
  int rank = -1;
  std::vector<std::string> labels;
  std::vector<std::vector<int>> matrix;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string directive;
    if (!(ls >> directive) || directive[0] == '#') continue;
    if (directive == "rank") {
      if (!(ls >> rank) || rank <= 0)
        throw ParseError(source, lineno, "rank must be a positive integer");
      matrix.assign(static_cast<std::size_t>(rank),
                    std::vector<int>(static_cast<std::size_t>(rank), 2));
      for (int i = 0; i < rank; ++i)
        matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
    } else if (directive == "labels") {
      if (rank < 0) throw ParseError(source, lineno, "labels before rank");
      std::string l;
      while (ls >> l) labels.push_back(l);
      if (static_cast<int>(labels.size()) != rank)
        throw ParseError(source, lineno, "label count does not match rank");
    } else if (directive == "m") {
      if (rank < 0) throw ParseError(source, lineno, "m before rank");
      int i = 0, j = 0;
      std::string v;
      if (!(ls >> i >> j >> v))
        throw ParseError(source, lineno, "expected: m i j V");
      if (i < 1 || i > rank || j < 1 || j > rank || i == j)
        throw ParseError(source, lineno, "generator indices out of range");
      int value = 0;
      if (v == "inf") {
        value = kInfiniteBond;
      } else {
        try {
          value = std::stoi(v);
        } catch (const std::exception&) {
          throw ParseError(source, lineno, "bond value must be an integer >= 2 or 'inf'");
        }
        if (value < 2)
          throw ParseError(source, lineno, "bond value must be an integer >= 2 or 'inf'");
      }
      matrix[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = value;
      matrix[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i - 1)] = value;
    } else {
      throw ParseError(source, lineno, "unknown directive '" + directive + "'");
    }
  }
  if (rank < 0) throw ParseError(source, lineno, "missing rank directive");
  return CoxeterSystem(rank, matrix, std::move(labels));
}

CoxeterSystem CoxeterSystem::parse_string(const std::string& text) {
  std::istringstream in(text);
  return parse(in, "<string>");
}

}  // namespace epzeta
