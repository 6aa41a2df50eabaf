#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "epzeta/euler.hpp"
#include "epzeta/hecke.hpp"

namespace epzeta {

/// Graph-of-groups file, one directive per line:
///   vertex NAME [order M]
///   edge NAME FROM TO it I1 io I2 [order K]
/// FROM is the origin o(e) and TO the terminal t(e); `it` is |G_t : G_e| and
/// `io` is |G_o : G_e|.
GraphOfGroups parse_graph_of_groups(std::istream& in,
                                    const std::string& source = "<input>");

/// Orbit-complex file:
///   dim D
///   orbit K SUBGROUP_ID
OrbitComplexData parse_orbit_complex(std::istream& in,
                                     const std::string& source = "<input>");

/// Hecke expression file: elements are blocks of lines
///   term COEFF w I1 I2 ...     (1-based generator indices; empty word allowed)
/// separated by lines reading "element". A leading "matrix N" line switches
/// to matrix mode with N*N element blocks, row-major.
struct HeckeInput {
  std::vector<std::vector<std::pair<BigRational, Word>>> elements;
  std::optional<int> matrix_dim;
};

HeckeInput parse_hecke_input(std::istream& in,
                             const std::string& source = "<input>");

/// Assembles a parsed element block over the given algebra.
HeckeElement<BigRational> build_hecke_element(
    const HeckeAlgebra<BigRational>& algebra,
    const std::vector<std::pair<BigRational, Word>>& terms);

std::string read_file(const std::string& path);

}  // namespace epzeta
