#include "epzeta/io.hpp"

#include <fstream>
#include <istream>
#include <map>
#include <sstream>

#include "epzeta/errors.hpp"

namespace epzeta {

namespace {

BigInt parse_int(const std::string& token, const std::string& source, int lineno) {
  try {
    return BigInt(token);
  } catch (const std::invalid_argument&) {
    throw ParseError(source, lineno, "expected an integer, got '" + token + "'");
  }
}

}  // namespace

GraphOfGroups parse_graph_of_groups(std::istream& in, const std::string& source) {
  GraphOfGroups g;
  std::map<std::string, int> vertex_ids;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string directive;
    if (!(ls >> directive) || directive[0] == '#') continue;
    if (directive == "vertex") {
      GraphOfGroups::Vertex v;
      if (!(ls >> v.name))
        throw ParseError(source, lineno, "expected: vertex NAME [order M]");
      if (vertex_ids.count(v.name))
        throw ParseError(source, lineno, "duplicate vertex '" + v.name + "'");
      std::string kw;
      if (ls >> kw) {
        if (kw != "order") throw ParseError(source, lineno, "unexpected token '" + kw + "'");
        std::string val;
        if (!(ls >> val)) throw ParseError(source, lineno, "missing order value");
        v.order = parse_int(val, source, lineno);
        if (*v.order <= 0) throw ParseError(source, lineno, "order must be positive");
      }
      vertex_ids[v.name] = static_cast<int>(g.vertices.size());
      g.vertices.push_back(std::move(v));
    } else if (directive == "edge") {
      GraphOfGroups::Edge e;
      std::string from, to, kw1, kw2, i1, i2;
      if (!(ls >> e.name >> from >> to >> kw1 >> i1 >> kw2 >> i2) ||
          kw1 != "it" || kw2 != "io")
        throw ParseError(source, lineno,
                         "expected: edge NAME FROM TO it I1 io I2 [order K]");
      if (!vertex_ids.count(from))
        throw ParseError(source, lineno, "unknown vertex '" + from + "'");
      if (!vertex_ids.count(to))
        throw ParseError(source, lineno, "unknown vertex '" + to + "'");
      e.origin = vertex_ids[from];
      e.terminal = vertex_ids[to];
      e.index_terminal = parse_int(i1, source, lineno);
      e.index_origin = parse_int(i2, source, lineno);
      if (e.index_terminal <= 0 || e.index_origin <= 0)
        throw ParseError(source, lineno, "inclusion indices must be positive");
      std::string kw;
      if (ls >> kw) {
        if (kw != "order") throw ParseError(source, lineno, "unexpected token '" + kw + "'");
        std::string val;
        if (!(ls >> val)) throw ParseError(source, lineno, "missing order value");
        e.order = parse_int(val, source, lineno);
        if (*e.order <= 0) throw ParseError(source, lineno, "order must be positive");
      }
      g.edges.push_back(std::move(e));
    } else {
      throw ParseError(source, lineno, "unknown directive '" + directive + "'");
    }
  }
  if (g.vertices.empty()) throw ParseError(source, lineno, "no vertices declared");
  return g;
}

OrbitComplexData parse_orbit_complex(std::istream& in, const std::string& source) {
  OrbitComplexData data;
  bool have_dim = false;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string directive;
    if (!(ls >> directive) || directive[0] == '#') continue;
    if (directive == "dim") {
      if (!(ls >> data.dimension) || data.dimension < 0)
        throw ParseError(source, lineno, "dim must be a non-negative integer");
      data.orbits.assign(static_cast<std::size_t>(data.dimension) + 1, {});
      have_dim = true;
    } else if (directive == "orbit") {
      if (!have_dim) throw ParseError(source, lineno, "orbit before dim");
      int k = 0;
      std::string stab;
      if (!(ls >> k >> stab))
        throw ParseError(source, lineno, "expected: orbit K SUBGROUP_ID");
      if (k < 0 || k > data.dimension)
        throw ParseError(source, lineno, "orbit dimension out of range");
      data.orbits[static_cast<std::size_t>(k)].push_back(stab);
    } else {
      throw ParseError(source, lineno, "unknown directive '" + directive + "'");
    }
  }
  if (!have_dim) throw ParseError(source, lineno, "missing dim directive");
  return data;
}

HeckeInput parse_hecke_input(std::istream& in, const std::string& source) {
  HeckeInput input;
  bool in_block = false;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string directive;
    if (!(ls >> directive) || directive[0] == '#') continue;
    if (directive == "matrix") {
      int n = 0;
      if (!(ls >> n) || n < 1)
        throw ParseError(source, lineno, "matrix dimension must be >= 1");
      if (input.matrix_dim)
        throw ParseError(source, lineno, "duplicate matrix directive");
      input.matrix_dim = n;
    } else if (directive == "element") {
      input.elements.emplace_back();
      in_block = true;
    } else if (directive == "term") {
      if (!in_block) {
        input.elements.emplace_back();
        in_block = true;
      }
      std::string coeff, w;
      if (!(ls >> coeff >> w) || w != "w")
        throw ParseError(source, lineno, "expected: term COEFF w I1 I2 ...");
      BigRational c;
      try {
        c = BigRational::parse(coeff);
      } catch (const Error& e) {
        throw ParseError(source, lineno, e.what());
      }
      Word word;
      int idx = 0;
      while (ls >> idx) {
        if (idx < 1) throw ParseError(source, lineno, "generator indices are 1-based");
        word.push_back(idx - 1);
      }
      input.elements.back().emplace_back(std::move(c), std::move(word));
    } else {
      throw ParseError(source, lineno, "unknown directive '" + directive + "'");
    }
  }
  if (input.elements.empty())
    throw ParseError(source, lineno, "no element blocks in input");
  if (input.matrix_dim) {
    const std::size_t need = static_cast<std::size_t>(*input.matrix_dim) *
                             static_cast<std::size_t>(*input.matrix_dim);
    if (input.elements.size() != need)
      throw ParseError(source, lineno,
                       "matrix needs " + std::to_string(need) + " element blocks, got " +
                           std::to_string(input.elements.size()));
  }
  return input;
}

HeckeElement<BigRational> build_hecke_element(
    const HeckeAlgebra<BigRational>& algebra,
    const std::vector<std::pair<BigRational, Word>>& terms) {
  HeckeElement<BigRational> out = algebra.zero();
  for (const auto& [c, w] : terms)
    out = algebra.add(out, algebra.scale(c, algebra.basis(w)));
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace epzeta
