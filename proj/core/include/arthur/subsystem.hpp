#pragma once

#include "arthur/rootsys.hpp"

namespace arthur {

// Classification of a linearly independent simple system given by its integer
// Cartan matrix M[a][b] = <beta_a, beta_b^vee>.  Nodes of each irreducible
// component are returned in the canonical (Bourbaki) order of the identified
// type, which downstream code relies on when laying out weighted diagrams.
struct BaseComponent {
  TypeId type;
  std::vector<int> nodes;  // indices into the input base, canonical order
};

struct BaseClassification {
  std::vector<BaseComponent> components;  // descending rank, then family letter

  // "A1xA1xA1" style; "1" when empty.
  std::string coxeter_label() const;
  // "so12+sl2" style, with "+a" per central torus dimension.
  std::string algebra_label(int torus_dim = 0) const;
};

BaseClassification classify_base(const std::vector<IntVec>& cartan);

// Cartan matrix of the coroots {gamma^vee} of the given (signed) roots, viewed
// as a simple system of the dual root system: M[a][b] = <gamma_b, gamma_a^vee>
// (the primal pairing with the roles swapped).
std::vector<IntVec> dual_base_cartan(const RootSystem& rs, const std::vector<int>& roots);

// Cartan matrix of a set of roots of rs given by signed root indices.
std::vector<IntVec> root_base_cartan(const RootSystem& rs, const std::vector<int>& roots);

std::string algebra_name(TypeId t);

}  // namespace arthur
