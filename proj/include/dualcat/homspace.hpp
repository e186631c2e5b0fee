#pragma once

#include "dualcat/decomp.hpp"
#include "dualcat/homsolve.hpp"

namespace dualcat {

/// Shape of hom(X_i, X_j[alpha]) in the homotopy category: dimension 0, 1 or
/// 2, with named generators of 1-type (identity on the overlap) and eps-type
/// (eps at the boundary).
struct HomDescriptor {
  bool has_one = false;
  bool has_eps = false;
  int dim() const { return int(has_one) + int(has_eps); }
};

/// Closed-form classification of hom(X_i, X_j[alpha]), including the
/// non-perfect X_infty rows and columns.
HomDescriptor hom_table(XIndex i, XIndex j, int alpha);

enum class GenKind { One, Eps };

/// A named generator of hom(X_i[h1], X_j[h2]).
struct GeneratorRef {
  XIndex i;
  int h1 = 0;
  XIndex j;
  int h2 = 0;
  GenKind kind = GenKind::One;

  int alpha() const { return h2 - h1; }
  bool exists() const;
  std::string str() const;
};

/// Concrete pinned representative of a generator between the canonical
/// realizations; finite indices only. Deterministic: scalar normalizations
/// are chosen so that the composition calculus below is exact.
ChainMap generator_rep(const Field& f, const GeneratorRef& g);

/// Coefficients (a, b) of the class of f on the generators of its hom space;
/// f must run between canonical X_i[h] realizations.
std::pair<FieldElem, FieldElem> identify(const ChainMap& f);

/// Recognizes a canonical X_i[h] realization; nullopt otherwise.
std::optional<std::pair<int, int>> recognize_indecomposable(const FreeComplex& c);

struct FreeHomResult {
  std::size_t dim = 0;
  std::vector<ChainMap> basis;
};

/// Hom space modulo homotopy by brute-force exact linear algebra. The source
/// must be free so homotopy Homs are derived Homs.
FreeHomResult hom_bruteforce(const FreeComplex& x, const FreeComplex& y);
HomSpaceResult hom_bruteforce(const FreeComplex& x, const ModuleComplex& y);

/// Morphism between formal objects in generator coordinates: for each
/// (source unit u, target unit v) a pair (a, b) on the 1- and eps-generators.
class SymMorphism {
public:
  SymMorphism() = default;
  SymMorphism(const Field& f, FormalObject source, FormalObject target);

  static SymMorphism identity(const Field& f, const FormalObject& obj);

  const FormalObject& source() const { return src_; }
  const FormalObject& target() const { return tgt_; }
  const Field& field() const { return field_; }
  std::size_t source_units() const { return su_.size(); }
  std::size_t target_units() const { return tu_.size(); }
  std::pair<XIndex, int> source_unit(std::size_t u) const { return su_[u]; }
  std::pair<XIndex, int> target_unit(std::size_t v) const { return tu_[v]; }

  const std::pair<FieldElem, FieldElem>& block(std::size_t u, std::size_t v) const;
  /// Throws when a nonzero coefficient is placed on a nonexistent generator.
  void set_block(std::size_t u, std::size_t v, FieldElem a, FieldElem b);

  SymMorphism scaled(const FieldElem& c) const;
  SymMorphism operator+(const SymMorphism& o) const;
  bool operator==(const SymMorphism& o) const;
  bool is_zero() const;

private:
  Field field_;
  FormalObject src_, tgt_;
  std::vector<std::pair<XIndex, int>> su_, tu_;
  std::vector<std::pair<FieldElem, FieldElem>> blocks_;  // [v * |su| + u]
};

/// Composition in generator coordinates. Generator-level rules, matching the
/// pinned representatives exactly: 1.1 = 1, 1.eps = eps, eps.1 = (-1)^a eps
/// (a the shift of the 1-factor), eps.eps = 0, each read as zero when the
/// composite generator does not exist.
SymMorphism compose_sym(const SymMorphism& g, const SymMorphism& f);

/// Generator as a one-unit symbolic morphism with the given coefficient.
SymMorphism sym_generator(const Field& f, const GeneratorRef& g, const FieldElem& coeff);

/// Decomposition of the cone of coeff * g. Finite generators are computed
/// concretely (cone then barcode); X_infty cases come from a catalog
/// validated by stabilized truncation.
FormalObject cone_symbolic(const GeneratorRef& g, const FieldElem& coeff);

/// Hom dimensions involving X_infty via stabilized truncation: X_infty
/// sources become X_N, X_infty targets the module complex k in degree -1.
/// N must be at least amplitude(target) + |alpha| + 2.
std::size_t hom_infty(const Field& f, XIndex i, XIndex j, int alpha, int n);

/// The smallest admissible truncation length for hom_infty.
int hom_infty_bound(XIndex j, int alpha);

}  // namespace dualcat
