#pragma once

#include <complex>
#include <set>

#include "dualcat/homspace.hpp"

namespace dualcat {

/// Finite set of shifted indecomposables, read as the additive closure of
/// exactly these members (no implicit shifts).
struct HeartCandidate {
  std::set<std::pair<XIndex, int>> members;
  std::string str() const;
};

struct CheckWindow {
  int imax = 4;
  int hmax = 3;
  int depth = 3;  // bounded cone-closure depth for the generation test
};

enum class HeartStage { NegativeHom, Extension, Generation, Accepted };

struct HeartVerdict {
  bool accepted = false;
  HeartStage stage = HeartStage::Accepted;  // first failing stage when rejected
  std::string reason;
  // Witnessing triangle A -> E -> B for extension failures.
  std::string triangle;
};

/// Heart test: (a) no Homs downward between shifted members, (b) extension
/// closure via cones of generator morphisms, (c) bounded cone-closure must
/// reach both X_1 and X_infty.
HeartVerdict check_heart(const HeartCandidate& cand, const CheckWindow& window);

/// Smallest shift delta with hom(X_i, X_j[delta]) != 0 (the tables vanish
/// below it for every pair).
int min_nonzero_shift(XIndex i, XIndex j);

/// Indices reachable from `start` by repeatedly adding cone summands of
/// generator morphisms, up to `depth` rounds with |alpha| <= alpha_bound.
std::set<XIndex> cone_closure(std::set<XIndex> start, int alpha_bound, int depth);

/// Stability condition (h, v): heart shift h plus central charge vector
/// v = mass e^{i pi phi} with mass > 0 and phi in (0, 1].
struct StabilityCondition {
  int h = 0;
  double mass = 1.0;
  double phi = 1.0;

  double psi() const { return h + phi; }
  /// Splits a total phase: h = ceil(psi) - 1, phi = psi - h in (0, 1],
  /// snapping within 1e-9 of integers.
  static StabilityCondition from_psi(double psi, double mass);
};

/// Rotation-scaling element (kappa e^{i pi theta}, x -> x + theta).
struct GroupElem {
  double kappa = 1.0;
  double theta = 0.0;

  static GroupElem identity() { return {}; }
  GroupElem compose(const GroupElem& o) const { return {kappa * o.kappa, theta + o.theta}; }
  GroupElem inverse() const { return {1.0 / kappa, -theta}; }
};

/// Right action in chart coordinates: psi -> psi - theta, mass -> mass/kappa.
StabilityCondition act(const GroupElem& g, const StabilityCondition& s);

/// The unique g with act(g, from) = to.
GroupElem transitivity_witness(const StabilityCondition& from, const StabilityCondition& to);

/// Chart to the universal cover: z = ln(mass) + i pi psi. exp identifies the
/// base with C^*.
std::complex<double> chart(const StabilityCondition& s);
StabilityCondition chart_inv(std::complex<double> z);

struct HNFactor {
  double phase = 0.0;
  int heart_shift = 0;       // all summands live in the heart shifted by this
  FormalObject object;
};

/// Harder-Narasimhan filtration factors, phases strictly decreasing. X_1[h]
/// and X_infty[h] are semistable; X_i[h] contributes X_infty[h+i-1] and
/// X_infty[h].
std::vector<HNFactor> hn_filtration(const StabilityCondition& s, const FormalObject& f);

/// Sum of factor contributions count * mass * e^{i pi phase}; checked
/// internally against the K-class identity.
std::complex<double> central_charge(const StabilityCondition& s, const FormalObject& f);

struct SiltingMemberReport {
  XIndex i;
  int h = 0;
  bool self_silting = false;
  int witness_shift = 0;  // positive self-extension shift when not silting
};

struct SiltingPairConflict {
  std::pair<XIndex, int> a, b;
  int shift = 0;  // hom(a, b[shift]) != 0 with shift > 0
};

struct SiltingSubset {
  std::vector<std::pair<XIndex, int>> members;
  bool silting = true;
  bool generates = false;
  std::string witness;
};

struct SiltingReport {
  int imax = 0, hmax = 0;
  std::vector<SiltingMemberReport> members;
  std::vector<SiltingPairConflict> conflicts;
  std::vector<SiltingSubset> maximal_silting;
  bool generating_silting_exists = false;
  std::string certificate;
};

/// Silting search over the window {X_i[h] : i <= imax or infinite,
/// |h| <= hmax}. Every subset is covered: one that contains a
/// non-self-silting member or a conflicting pair is not silting (witnessed),
/// and the rest embed into the listed maximal silting subsets, none of which
/// generates the non-perfect part.
SiltingReport silting_search(int imax, int hmax);

}  // namespace dualcat
