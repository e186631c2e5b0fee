#pragma once

#include "dualcat/homspace.hpp"

namespace dualcat {

/// Key of a functor coefficient k^i_{j[alpha]}: one scalar per generator
/// position. At the two-dimensional endomorphism positions (i, i, 0) the
/// coefficient scales the eps generator; the identity component is fixed.
struct GenKey {
  int i = 1, j = 1, alpha = 0;
  auto operator<=>(const GenKey&) const = default;
  std::string str() const {
    return "k^" + std::to_string(i) + "_" + std::to_string(j) + "[" + std::to_string(alpha) + "]";
  }
};

/// Coefficient data of a shift-commuting k-linear endofunctor on a finite
/// window: one nonzero scalar per generator with i, j <= imax, |alpha| <=
/// amax, plus the uniform object shift.
class CoeffAssignment {
public:
  CoeffAssignment(const Field& f, int imax, int amax, int object_shift = 0);

  const Field& field() const { return field_; }
  int imax() const { return imax_; }
  int amax() const { return amax_; }
  int object_shift() const { return shift_; }

  /// All generator positions inside the window, in lexicographic order.
  const std::vector<GenKey>& keys() const { return keys_; }
  bool in_window(const GenKey& k) const;

  const FieldElem& coeff(const GenKey& k) const;
  void set_coeff(const GenKey& k, FieldElem v);

  /// Coefficient by which the functor scales a particular generator: 1 for
  /// the identity component of End(X_i), the stored scalar otherwise.
  FieldElem generator_coeff(GenKind kind, const GenKey& k) const;

  /// True when the stored eps coefficient applies (the key is an eps
  /// position, including the endomorphism positions).
  static bool eps_position(const GenKey& k);

  /// Throws unless every in-window coefficient is present and nonzero.
  void require_complete() const;

  /// The canonical assignment k^i_{j[alpha]} = lambda^alpha.
  static CoeffAssignment lambda_form(const Field& f, const FieldElem& lambda, int imax, int amax,
                                     int object_shift = 0);

private:
  Field field_;
  int imax_, amax_, shift_;
  std::vector<GenKey> keys_;
  std::map<GenKey, FieldElem> coeffs_;
};

struct FunctorialityViolation {
  GenKey f, g, composite;
  FieldElem expected, got;
  std::string str() const;
};

/// Checks coefficient multiplicativity over every composable generator pair
/// in the window whose composite generator exists.
std::vector<FunctorialityViolation> check_functorial(const CoeffAssignment& c);

struct RelationInstance {
  int relation = 1;  // R1..R5
  std::string description;
  bool pass = false;
};

struct RelationReport {
  std::vector<RelationInstance> instances;
  std::size_t failures = 0;
  bool all_pass() const { return failures == 0; }
};

/// Evaluates every instance of the five coefficient relations inside the
/// window (they characterize functors normalized to have trivial action on
/// endomorphisms).
RelationReport check_relations(const CoeffAssignment& c);

struct Normalization {
  int shift = 0;             // object shift h
  FieldElem mu;              // pushforward parameter, = k^1_{1[0]}
  std::vector<FieldElem> phi;  // natural-iso coefficients, phi[0] = phi_1 = 1
  FieldElem lambda;          // complete invariant after normalization
  CoeffAssignment normalized;
};

/// Divides the pushforward out of the eps coefficients, conjugates by the
/// natural isomorphism fixing the corner inclusions, and reads off lambda.
/// The result satisfies k^i_{j[alpha]} = lambda^alpha on the whole window.
Normalization normalize(const CoeffAssignment& c);

/// Inverse construction used to exercise normalize: scales eps positions by
/// mu, conjugates by phi (phi[0] corresponds to X_1), and sets the shift.
CoeffAssignment gauge_transform(const CoeffAssignment& c, int object_shift, const FieldElem& mu,
                                const std::vector<FieldElem>& phi);

/// The canonical functor determined by its coefficient k^2_{1[1]} = lambda.
class LambdaFunctor {
public:
  LambdaFunctor(const Field& f, FieldElem lambda) : field_(f), lambda_(std::move(lambda)) {
    if (lambda_.is_zero()) throw std::invalid_argument("lambda must be nonzero");
  }
  const Field& field() const { return field_; }
  const FieldElem& lambda() const { return lambda_; }

private:
  Field field_;
  FieldElem lambda_;
};

/// lambda^alpha; throws when the generator does not exist.
FieldElem lambda_coefficient(const FieldElem& lambda, int i, int j, int alpha);

/// Blockwise action on symbolic morphisms: every coefficient scales by
/// lambda^(relative shift).
SymMorphism apply(const LambdaFunctor& f, const SymMorphism& m);

/// Applies the functor to the triangle X_1 -> X_1 -> X_2 -> X_1[1] and
/// solves generically for a triangle isomorphism with identity on the X_1
/// vertices. True exactly when the system is solvable.
bool is_exact(const LambdaFunctor& f);

}  // namespace dualcat
