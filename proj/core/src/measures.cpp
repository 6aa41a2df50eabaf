#include "epzeta/measures.hpp"

#include <istream>
#include <sstream>

#include "epzeta/errors.hpp"

namespace epzeta {

const std::string& SubgroupContext::root_of(const std::string& name) const {
  auto it = root_.find(name);
  if (it == root_.end())
    throw Error("incommensurable or undeclared pair: unknown subgroup '" + name + "'");
  return it->second;
}

void SubgroupContext::declare(const std::string& u, const std::string& v,
                              const BigInt& u_over_int, const BigInt& v_over_int) {
  if (u_over_int <= 0 || v_over_int <= 0)
    throw Error("commensurability indices must be positive");
  if (u == v) {
    if (u_over_int != v_over_int)
      throw Error("inconsistent commensurability declaration for pair (" + u +
                  ", " + v + "): |U:U| != 1");
    if (!potential_.count(u)) {
      root_[u] = u;
      potential_[u] = BigRational(1);
    }
    return;
  }
  const BigRational ratio(u_over_int, v_over_int);  // |U:V|

  const bool have_u = potential_.count(u) > 0;
  const bool have_v = potential_.count(v) > 0;
  if (!have_u && !have_v) {
    root_[u] = u;
    root_[v] = u;
    potential_[u] = BigRational(1);
    potential_[v] = potential_[u] / ratio;
    return;
  }
  if (have_u && !have_v) {
    root_[v] = root_[u];
    potential_[v] = potential_[u] / ratio;
    return;
  }
  if (!have_u && have_v) {
    root_[u] = root_[v];
    potential_[u] = potential_[v] * ratio;
    return;
  }
  if (root_[u] == root_[v]) {
    if (potential_[u] / potential_[v] != ratio)
      throw Error("inconsistent commensurability declaration for pair (" + u +
                  ", " + v + "): cycle ratio differs from 1");
    return;
  }
  // Merge v's component into u's, rescaling so that pot(u)/pot(v) = ratio.
  const std::string old_root = root_[v];
  const BigRational scale = potential_[u] / (ratio * potential_[v]);
  for (auto& [name, r] : root_) {
    if (r == old_root) {
      r = root_[u];
      potential_[name] *= scale;
    }
  }
}

bool SubgroupContext::related(const std::string& u, const std::string& v) const {
  if (u == v) return true;
  auto iu = root_.find(u);
  auto iv = root_.find(v);
  return iu != root_.end() && iv != root_.end() && iu->second == iv->second;
}

BigRational SubgroupContext::index(const std::string& u, const std::string& v) const {
  if (u == v) return BigRational(1);
  if (root_of(u) != root_of(v))
    throw Error("incommensurable or undeclared pair: (" + u + ", " + v + ")");
  return potential_.at(u) / potential_.at(v);
}

std::vector<std::string> SubgroupContext::names() const {
  std::vector<std::string> out;
  out.reserve(potential_.size());
  for (const auto& [name, p] : potential_) out.push_back(name);
  return out;
}

SubgroupContext SubgroupContext::parse(std::istream& in, const std::string& source) {
  SubgroupContext ctx;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string directive;
    if (!(ls >> directive) || directive[0] == '#') continue;
    if (directive != "pair")
      throw ParseError(source, lineno, "unknown directive '" + directive + "'");
    std::string u, v;
    BigInt a, b;
    std::string sa, sb;
    if (!(ls >> u >> v >> sa >> sb))
      throw ParseError(source, lineno, "expected: pair U V A B");
    try {
      a = BigInt(sa);
      b = BigInt(sb);
    } catch (const std::invalid_argument&) {
      throw ParseError(source, lineno, "indices must be integers");
    }
    try {
      ctx.declare(u, v, a, b);
    } catch (const Error& e) {
      throw ParseError(source, lineno, e.what());
    }
  }
  return ctx;
}

HaarMeasure HaarMeasure::rebase(const std::string& target,
                                const SubgroupContext& ctx) const {
  // mu_Y = |X:Y| * mu_X, hence c * mu_Y = (c * |X:Y|) * mu_X.
  return HaarMeasure(coeff_ * ctx.index(target, base_), target);
}

bool HaarMeasure::equals(const HaarMeasure& other, const SubgroupContext& ctx) const {
  if (base_ == other.base_) return coeff_ == other.coeff_;
  return rebase(other.base_, ctx).coefficient() == other.coeff_;
}

std::string HaarMeasure::str() const {
  return coeff_.str() + " * mu[" + base_ + "]";
}

}  // namespace epzeta
