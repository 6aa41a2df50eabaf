#pragma once

#include <optional>
#include <string>
#include <vector>

#include "epzeta/coxeter.hpp"
#include "epzeta/measures.hpp"

namespace epzeta {

/// Orbit data of a cocompact action on a finite-dimensional complex: for each
/// dimension k <= d, the stabilizers of the k-orbit representatives, as
/// subgroup names resolvable in a SubgroupContext.
struct OrbitComplexData {
  int dimension = 0;
  std::vector<std::vector<std::string>> orbits;  // orbits[k] = stabilizer ids
};

/// A finite connected graph of profinite groups. Edges carry the two
/// inclusion indices of the edge group in its endpoint groups; vertex and
/// edge group orders are optional (all-finite inputs collapse to the counting
/// measure base).
struct GraphOfGroups {
  struct Vertex {
    std::string name;
    std::optional<BigInt> order;
  };
  struct Edge {
    std::string name;
    int origin = 0;    // o(e)
    int terminal = 0;  // t(e)
    BigInt index_terminal{1};  // |G_{t(e)} : G_e|
    BigInt index_origin{1};    // |G_{o(e)} : G_e|
    std::optional<BigInt> order;
  };

  std::vector<Vertex> vertices;
  std::vector<Edge> edges;

  int vertex_id(const std::string& name) const;
  bool connected() const;
  bool all_orders_known() const;
};

struct GraphOfGroupsEuler {
  HaarMeasure chi;
  bool unimodular = true;
  std::string base_note;
};

struct NonpositivityCertificate {
  bool nonpositive = false;
  bool applicable = true;  // false for the compact (single collapsed vertex) case
  HaarMeasure chi;
  std::vector<std::string> edge_inequalities;
  std::string note;
};

/// Chevalley closed-form input: an irreducible finite Weyl type and the
/// residue cardinality q >= 2.
struct ChevalleyDatum {
  std::string type;  // "A", "B", "C", "D", "E", "F", "G"
  int rank = 0;
  BigInt q{2};
};

/// chi~ of a compact group: 1 * mu_G in its own base.
HaarMeasure euler_compact(const std::string& base);

/// The alternating orbit sum  sum_k (-1)^k sum_omega 1 * mu_{stab(omega)},
/// rebased to the requested base.
HaarMeasure euler_from_orbits(const OrbitComplexData& data,
                              const SubgroupContext& ctx,
                              const std::string& base);

/// The unimodularity decision for a graph of groups: spanning-tree potentials
/// must close every non-tree cycle with total index ratio 1. Returns the
/// violating edge when the input is not unimodular.
std::optional<std::string> unimodularity_violation(const GraphOfGroups& g);

/// chi~ = sum_v 1 * mu_{G_v} - sum_e 1 * mu_{G_e}. The base is mu[1] when all
/// orders are known, else the lexicographically first edge's group (or the
/// single vertex group when the graph has no edges); overridable. Throws on
/// non-unimodular input, naming the violating cycle edge.
GraphOfGroupsEuler euler_graph_of_groups(
    const GraphOfGroups& g, const std::optional<std::string>& base = std::nullopt);

/// Collapses index-1 edges, then checks chi~ <= 0 with a per-edge certificate
/// mu_{G_e} >= mu_{G_t} + mu_{G_o}.
NonpositivityCertificate check_nonpositive(const GraphOfGroups& g);

/// chi~_G = (chi_Gamma / covolume) * mu_base for a uniform lattice Gamma.
HaarMeasure euler_from_lattice(const BigRational& chi_gamma,
                               const BigRational& covolume,
                               const std::string& base);

/// Closed form (-1)^n prod (q^{m_i}-1)/(1+q+...+q^{m_i}) * mu[I] from the
/// exponents of the spherical Weyl group.
HaarMeasure euler_chevalley(const ChevalleyDatum& d);

/// chi~ = 1/gamma~_{W,S}(q) * mu[base] for a chamber-transitive action on a
/// building of uniform thickness q+1.
HaarMeasure euler_building(const CoxeterSystem& sys, const BigInt& q,
                           const std::string& base = "B");

/// The exponents of an irreducible finite Weyl type, by Cartan letter.
std::vector<int> chevalley_exponents(const std::string& type, int rank);

/// Chamber-orbit data of the flag complex of spherical subsets, with the
/// parabolic index context |P_T : B| = gamma_{W_T}(q); the third route to
/// chi~ for buildings.
std::pair<OrbitComplexData, SubgroupContext> davis_chamber_data(
    const CoxeterSystem& sys, const BigInt& q);

/// The parabolic's context name, "B" for the empty set else "P_{i,j,...}"
/// with 1-based generator indices.
std::string parabolic_name(const GeneratorSet& J);

}  // namespace epzeta
