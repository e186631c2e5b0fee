#pragma once

#include <vector>

#include "dualcat/complex.hpp"

namespace dualcat {

/// Components of a graded map src -> tgt, one typed matrix per source degree.
using TypedComponents = std::map<int, TypedMatrix>;

struct HomSpaceResult {
  std::size_t chain_dim = 0;     // solutions of the chain-map equations
  std::size_t boundary_dim = 0;  // null-homotopic subspace ds + sd
  std::size_t dim = 0;           // chain_dim - boundary_dim
  std::vector<TypedComponents> basis;  // class representatives
};

/// Hom space in the homotopy category, computed by exact linear algebra.
/// The source must be a free complex, so these are derived Homs.
HomSpaceResult hom_space(const FreeComplex& src, const ModuleComplex& tgt);

/// Solves f = d s + s d for the homotopy s; nullopt when the class of f
/// is nonzero.
std::optional<TypedComponents> solve_nullhomotopy(const FreeComplex& src,
                                                  const ModuleComplex& tgt,
                                                  const TypedComponents& f);

/// Writes the class of f as sum x_i * [gens_i]; nullopt when f is not in
/// the span of the given classes.
std::optional<FieldVector> solve_class_combination(const FreeComplex& src,
                                                   const ModuleComplex& tgt,
                                                   const std::vector<TypedComponents>& gens,
                                                   const TypedComponents& f);

TypedComponents typed_components(const ChainMap& f);
ChainMap chain_map_from_typed(const FreeComplex& src, const FreeComplex& tgt,
                              const TypedComponents& comps);

}  // namespace dualcat
