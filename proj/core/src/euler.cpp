#include "epzeta/euler.hpp"

#include <algorithm>
#include <deque>

#include "epzeta/errors.hpp"

namespace epzeta {

int GraphOfGroups::vertex_id(const std::string& name) const {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i].name == name) return static_cast<int>(i);
  throw Error("unknown vertex '" + name + "'");
}

bool GraphOfGroups::connected() const {
  if (vertices.empty()) return false;
  std::vector<bool> seen(vertices.size(), false);
  std::deque<int> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (const auto& e : edges) {
      if (e.origin == v && !seen[static_cast<std::size_t>(e.terminal)]) {
        seen[static_cast<std::size_t>(e.terminal)] = true;
        queue.push_back(e.terminal);
      }
      if (e.terminal == v && !seen[static_cast<std::size_t>(e.origin)]) {
        seen[static_cast<std::size_t>(e.origin)] = true;
        queue.push_back(e.origin);
      }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

bool GraphOfGroups::all_orders_known() const {
  return std::all_of(vertices.begin(), vertices.end(),
                     [](const Vertex& v) { return v.order.has_value(); });
}

HaarMeasure euler_compact(const std::string& base) {
  return HaarMeasure(BigRational(1), base);
}

HaarMeasure euler_from_orbits(const OrbitComplexData& data,
                              const SubgroupContext& ctx,
                              const std::string& base) {
  if (static_cast<int>(data.orbits.size()) != data.dimension + 1)
    throw Error("orbit table does not match the stated dimension");
  BigRational total(0);
  for (int k = 0; k <= data.dimension; ++k) {
    for (const auto& stab : data.orbits[static_cast<std::size_t>(k)]) {
      const HaarMeasure m = HaarMeasure(BigRational(1), stab).rebase(base, ctx);
      total += (k % 2 == 0) ? m.coefficient() : -m.coefficient();
    }
  }
  return HaarMeasure(total, base);
}

namespace {

void validate_graph(const GraphOfGroups& g) {
  if (g.vertices.empty()) throw Error("empty graph of groups");
  if (!g.connected()) throw Error("graph of groups must be connected");
  for (const auto& e : g.edges) {
    if (e.index_terminal <= 0 || e.index_origin <= 0)
      throw Error("edge inclusion indices must be positive");
    for (int side : {0, 1}) {
      const auto& v = g.vertices[static_cast<std::size_t>(side ? e.terminal : e.origin)];
      const BigInt& index = side ? e.index_terminal : e.index_origin;
      if (v.order && e.order && *v.order != index * *e.order)
        throw Error("edge '" + e.name + "': vertex order " + v.order->get_str() +
                    " != index * edge order");
    }
  }
}

// Builds the commensurability context implied by the inclusions
// G_e <= G_{t(e)}, G_e <= G_{o(e)}; declaration failures are exactly the
// non-unimodular cycles.
SubgroupContext graph_context(const GraphOfGroups& g) {
  SubgroupContext ctx;
  for (const auto& e : g.edges) {
    ctx.declare(g.vertices[static_cast<std::size_t>(e.terminal)].name, e.name,
                e.index_terminal, 1);
    ctx.declare(g.vertices[static_cast<std::size_t>(e.origin)].name, e.name,
                e.index_origin, 1);
  }
  for (const auto& v : g.vertices)
    if (v.order) ctx.declare(v.name, "1", *v.order, 1);
  for (const auto& e : g.edges)
    if (e.order) ctx.declare(e.name, "1", *e.order, 1);
  return ctx;
}

}  // namespace

std::optional<std::string> unimodularity_violation(const GraphOfGroups& g) {
  validate_graph(g);
  SubgroupContext ctx;
  for (const auto& e : g.edges) {
    try {
      ctx.declare(g.vertices[static_cast<std::size_t>(e.terminal)].name, e.name,
                  e.index_terminal, 1);
      ctx.declare(g.vertices[static_cast<std::size_t>(e.origin)].name, e.name,
                  e.index_origin, 1);
    } catch (const Error&) {
      return e.name;
    }
  }
  return std::nullopt;
}

GraphOfGroupsEuler euler_graph_of_groups(const GraphOfGroups& g,
                                         const std::optional<std::string>& base) {
  validate_graph(g);
  if (auto bad = unimodularity_violation(g))
    throw Error("non-unimodular graph of groups: the cycle closed by edge '" +
                *bad + "' has index ratio != 1");
  const SubgroupContext ctx = graph_context(g);

  std::string target;
  std::string note;
  if (base) {
    target = *base;
  } else if (g.all_orders_known()) {
    target = "1";
    note = "all groups finite; counting-measure base";
  } else if (!g.edges.empty()) {
    target = std::min_element(g.edges.begin(), g.edges.end(),
                              [](const auto& a, const auto& b) {
                                return a.name < b.name;
                              })->name;
    note = "base: first edge group";
  } else {
    target = g.vertices.front().name;
    note = "single vertex; compact case";
  }

  BigRational total(0);
  for (const auto& v : g.vertices)
    total += HaarMeasure(BigRational(1), v.name).rebase(target, ctx).coefficient();
  for (const auto& e : g.edges)
    total -= HaarMeasure(BigRational(1), e.name).rebase(target, ctx).coefficient();
  return {HaarMeasure(total, target), true, note};
}

NonpositivityCertificate check_nonpositive(const GraphOfGroups& g) {
  validate_graph(g);
  if (auto bad = unimodularity_violation(g))
    throw Error("non-unimodular graph of groups: the cycle closed by edge '" +
                *bad + "' has index ratio != 1");

  // Collapse non-loop edges with a surjective inclusion (index 1): they do
  // not change the fundamental group. The absorbed vertex group sits in the
  // kept one with the index from the other side of the collapsed edge, so
  // reattached edges scale their inclusion index accordingly.
  GraphOfGroups reduced = g;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < reduced.edges.size(); ++i) {
      const auto e = reduced.edges[i];
      if (e.origin == e.terminal) continue;
      if (e.index_terminal != 1 && e.index_origin != 1) continue;
      const bool absorb_terminal = (e.index_terminal == 1);
      const int keep = absorb_terminal ? e.origin : e.terminal;
      const int gone = absorb_terminal ? e.terminal : e.origin;
      const BigInt scale = absorb_terminal ? e.index_origin : e.index_terminal;
      reduced.edges.erase(reduced.edges.begin() + static_cast<std::ptrdiff_t>(i));
      for (auto& f : reduced.edges) {
        if (f.origin == gone) {
          f.origin = keep;
          f.index_origin *= scale;
        }
        if (f.terminal == gone) {
          f.terminal = keep;
          f.index_terminal *= scale;
        }
        if (f.origin > gone) --f.origin;
        if (f.terminal > gone) --f.terminal;
      }
      reduced.vertices.erase(reduced.vertices.begin() +
                             static_cast<std::ptrdiff_t>(gone));
      changed = true;
      break;
    }
  }

  NonpositivityCertificate cert{false, true,
                                euler_graph_of_groups(reduced).chi, {}, ""};
  if (reduced.vertices.size() == 1 && reduced.edges.empty()) {
    cert.applicable = false;
    cert.nonpositive = cert.chi.sign() <= 0;
    cert.note = "compact case, proposition inapplicable";
    return cert;
  }
  cert.nonpositive = cert.chi.sign() <= 0;
  const SubgroupContext ctx = graph_context(reduced);
  for (const auto& e : reduced.edges) {
    const auto& t = reduced.vertices[static_cast<std::size_t>(e.terminal)].name;
    const auto& o = reduced.vertices[static_cast<std::size_t>(e.origin)].name;
    const BigRational lhs(1);
    const BigRational rhs = HaarMeasure(BigRational(1), t).rebase(e.name, ctx).coefficient() +
                            HaarMeasure(BigRational(1), o).rebase(e.name, ctx).coefficient();
    cert.edge_inequalities.push_back(
        "mu[" + e.name + "] >= mu[" + t + "] + mu[" + o + "]  (1 >= " +
        rhs.str() + ")");
    if (lhs < rhs) cert.nonpositive = false;  // cannot happen for indices >= 2
  }
  return cert;
}

HaarMeasure euler_from_lattice(const BigRational& chi_gamma,
                               const BigRational& covolume,
                               const std::string& base) {
  if (covolume.sign() <= 0) throw Error("covolume must be positive");
  return HaarMeasure(chi_gamma / covolume, base);
}

std::vector<int> chevalley_exponents(const std::string& type, int rank) {
  auto range_odd = [](int n) {
    std::vector<int> e;
    for (int i = 1; i <= n; ++i) e.push_back(2 * i - 1);
    return e;
  };
  if (type == "A" && rank >= 1) {
    std::vector<int> e;
    for (int i = 1; i <= rank; ++i) e.push_back(i);
    return e;
  }
  if ((type == "B" || type == "C") && rank >= 2) return range_odd(rank);
  if (type == "D" && rank >= 4) {
    auto e = range_odd(rank - 1);
    e.push_back(rank - 1);
    std::sort(e.begin(), e.end());
    return e;
  }
  if (type == "E" && rank == 6) return {1, 4, 5, 7, 8, 11};
  if (type == "E" && rank == 7) return {1, 5, 7, 9, 11, 13, 17};
  if (type == "E" && rank == 8) return {1, 7, 11, 13, 17, 19, 23, 29};
  if (type == "F" && rank == 4) return {1, 5, 7, 11};
  if (type == "G" && rank == 2) return {1, 5};
  throw Error("unknown Chevalley type " + type + std::to_string(rank));
}

HaarMeasure euler_chevalley(const ChevalleyDatum& d) {
  if (d.q < 2) throw Error("residue cardinality must be at least 2");
  const auto exps = chevalley_exponents(d.type, d.rank);
  BigRational coeff(1);
  for (int m : exps) {
    const BigInt qm = pow(d.q, static_cast<unsigned long>(m));
    BigInt geom = 0;  // 1 + q + ... + q^m
    BigInt p = 1;
    for (int i = 0; i <= m; ++i) {
      geom += p;
      p *= d.q;
    }
    coeff *= BigRational(qm - 1, geom);
  }
  if (exps.size() % 2 != 0) coeff = -coeff;
  return HaarMeasure(coeff, "I");
}

HaarMeasure euler_building(const CoxeterSystem& sys, const BigInt& q,
                           const std::string& base) {
  if (q < 2) throw Error("uniform thickness parameter q must be at least 2");
  const RationalFunction gamma = sys.growth_series();
  BigRational value;
  try {
    value = gamma.eval(BigRational(q));
  } catch (const PoleError&) {
    throw Error("growth series has a pole at t = " + q.get_str());
  }
  if (value.is_zero())
    throw Error("growth series vanishes at t = " + q.get_str());
  return HaarMeasure(value.inverse(), base);
}

std::string parabolic_name(const GeneratorSet& J) {
  if (J.empty()) return "B";
  std::string out = "P_{";
  for (std::size_t i = 0; i < J.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(J[i] + 1);
  }
  out += '}';
  return out;
}

std::pair<OrbitComplexData, SubgroupContext> davis_chamber_data(
    const CoxeterSystem& sys, const BigInt& q) {
  // Spherical subsets of S and the flag complex of their inclusion poset;
  // a k-simplex is a strict chain T_1 < ... < T_{k+1} with stabilizer
  // P_{T_1}.
  std::vector<GeneratorSet> spherical;
  for (unsigned mask = 0; mask < (1u << sys.rank()); ++mask) {
    GeneratorSet J;
    for (int s = 0; s < sys.rank(); ++s)
      if (mask & (1u << s)) J.push_back(s);
    if (sys.subsystem(J).is_spherical()) spherical.push_back(J);
  }

  SubgroupContext ctx;
  for (const auto& J : spherical) {
    if (J.empty()) continue;
    const BigRational order =
        sys.parabolic_growth_polynomial(J).eval(BigRational(q));
    ctx.declare(parabolic_name(J), "B", order.numerator(), 1);
  }

  auto contains = [](const GeneratorSet& big, const GeneratorSet& small) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
  };

  OrbitComplexData data;
  std::vector<std::vector<std::vector<GeneratorSet>>> chains;
  chains.push_back({});
  for (const auto& J : spherical) chains.back().push_back({J});
  while (!chains.back().empty()) {
    std::vector<std::vector<GeneratorSet>> next;
    for (const auto& chain : chains.back()) {
      for (const auto& J : spherical) {
        if (J.size() > chain.back().size() && contains(J, chain.back()) &&
            J != chain.back()) {
          auto extended = chain;
          extended.push_back(J);
          next.push_back(std::move(extended));
        }
      }
    }
    if (next.empty()) break;
    chains.push_back(std::move(next));
  }

  data.dimension = static_cast<int>(chains.size()) - 1;
  for (const auto& level : chains) {
    std::vector<std::string> stabs;
    for (const auto& chain : level) stabs.push_back(parabolic_name(chain.front()));
    data.orbits.push_back(std::move(stabs));
  }
  return {data, ctx};
}

}  // namespace epzeta
