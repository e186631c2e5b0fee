#include "dualcat/homspace.hpp"

#include <algorithm>
#include <cassert>

namespace dualcat {

namespace {

bool parity_binom2(long long a) {  // parity of a(a-1)/2
  long long v = a * (a - 1) / 2;
  return (v % 2 + 2) % 2 == 1;
}

FieldElem sign_elem(const Field& f, bool negative) { return negative ? -f.one() : f.one(); }

}  // namespace

HomDescriptor hom_table(XIndex i, XIndex j, int alpha) {
  HomDescriptor d;
  if (i.is_infinite() && j.is_infinite()) {
    d.has_one = alpha >= 0;
  } else if (i.is_infinite()) {
    d.has_eps = -j.value() < alpha && alpha <= 0;
  } else if (j.is_infinite()) {
    d.has_one = 0 <= alpha && alpha < i.value();
  } else {
    int iv = i.value(), jv = j.value();
    d.has_eps = (-jv < alpha) && (alpha <= std::min(0, iv - jv));
    d.has_one = (std::max(0, iv - jv) <= alpha) && (alpha < iv);
  }
  return d;
}

bool GeneratorRef::exists() const {
  HomDescriptor d = hom_table(i, j, alpha());
  return kind == GenKind::One ? d.has_one : d.has_eps;
}

std::string GeneratorRef::str() const {
  std::string k = kind == GenKind::One ? "1" : "eps";
  std::string out = k + "^" + i.str();
  if (h1 != 0) out += "[" + std::to_string(h1) + "]";
  out += "_" + j.str() + "[" + std::to_string(h2) + "]";
  return out;
}

ChainMap generator_rep(const Field& f, const GeneratorRef& g) {
  if (!g.exists())
    throw std::invalid_argument("generator does not exist: " + g.str());
  if (g.i.is_infinite() || g.j.is_infinite())
    throw std::invalid_argument("generator_rep needs finite indices: " + g.str());
  int i = g.i.value(), j = g.j.value(), a = g.alpha();
  FreeComplex src = FreeComplex::x_i(f, i);
  FreeComplex tgt = FreeComplex::x_i(f, j, a);
  ChainMap rep(src, tgt);
  if (g.kind == GenKind::One) {
    // Identity on the overlap [-i, -1-a], alternating so the squares commute
    // against the (-1)^a-twisted target differentials; the overall sign
    // (-1)^{a(a-1)/2} normalizes the composition table.
    for (int n = -i; n <= -1 - a; ++n) {
      bool neg = ((static_cast<long long>(a) * n) % 2 != 0) ^ parity_binom2(a);
      DualMatrix m(f, 1, 1);
      m.set(0, 0, DualScalar::of(sign_elem(f, neg)));
      rep.set_component(n, m);
    }
  } else {
    // eps at the top boundary position, degree -1.
    bool neg = parity_binom2(a) ^ ((a % 2 + 2) % 2 == 1);
    DualMatrix m(f, 1, 1);
    m.set(0, 0, DualScalar(f.zero(), sign_elem(f, neg)));
    rep.set_component(-1, m);
  }
  assert(!rep.validate());
  return g.h1 == 0 ? rep : rep.shifted(g.h1);
}

std::optional<std::pair<int, int>> recognize_indecomposable(const FreeComplex& c) {
  if (c.empty()) return std::nullopt;
  int lo = c.min_degree(), hi = c.max_degree();
  for (int n = lo; n <= hi; ++n)
    if (c.rank_at(n) != 1) return std::nullopt;
  int i = hi - lo + 1, h = -1 - hi;
  if (!(c == FreeComplex::x_i(c.field(), i, h))) return std::nullopt;
  return std::make_pair(i, h);
}

std::pair<FieldElem, FieldElem> identify(const ChainMap& f) {
  auto s = recognize_indecomposable(f.source());
  auto t = recognize_indecomposable(f.target());
  if (!s || !t)
    throw std::invalid_argument("identify: endpoints are not canonical X_i[h] realizations");
  const Field& field = f.source().field();
  auto [i, h1] = *s;
  auto [j, h2] = *t;
  GeneratorRef one{XIndex::finite(i), h1, XIndex::finite(j), h2, GenKind::One};
  GeneratorRef eps{XIndex::finite(i), h1, XIndex::finite(j), h2, GenKind::Eps};

  std::vector<TypedComponents> gens;
  std::vector<bool> present = {one.exists(), eps.exists()};
  if (present[0]) gens.push_back(typed_components(generator_rep(field, one)));
  if (present[1]) gens.push_back(typed_components(generator_rep(field, eps)));

  auto x = solve_class_combination(f.source(), ModuleComplex::embed(f.target()), gens,
                                   typed_components(f));
  if (!x) throw std::logic_error("identify: morphism outside the generator span");
  FieldElem a = field.zero(), b = field.zero();
  std::size_t k = 0;
  if (present[0]) a = (*x)[k++];
  if (present[1]) b = (*x)[k++];
  return {a, b};
}

FreeHomResult hom_bruteforce(const FreeComplex& x, const FreeComplex& y) {
  HomSpaceResult r = hom_space(x, ModuleComplex::embed(y));
  FreeHomResult out;
  out.dim = r.dim;
  for (auto& comps : r.basis) out.basis.push_back(chain_map_from_typed(x, y, comps));
  return out;
}

HomSpaceResult hom_bruteforce(const FreeComplex& x, const ModuleComplex& y) {
  return hom_space(x, y);
}

SymMorphism::SymMorphism(const Field& f, FormalObject source, FormalObject target)
    : field_(f), src_(std::move(source)), tgt_(std::move(target)) {
  su_ = src_.units();
  tu_ = tgt_.units();
  blocks_.assign(su_.size() * tu_.size(), {f.zero(), f.zero()});
}

SymMorphism SymMorphism::identity(const Field& f, const FormalObject& obj) {
  SymMorphism m(f, obj, obj);
  for (std::size_t u = 0; u < m.su_.size(); ++u) m.set_block(u, u, f.one(), f.zero());
  return m;
}

const std::pair<FieldElem, FieldElem>& SymMorphism::block(std::size_t u, std::size_t v) const {
  return blocks_.at(v * su_.size() + u);
}

void SymMorphism::set_block(std::size_t u, std::size_t v, FieldElem a, FieldElem b) {
  auto [si, sh] = su_.at(u);
  auto [ti, th] = tu_.at(v);
  HomDescriptor d = hom_table(si, ti, th - sh);
  if (!a.is_zero() && !d.has_one)
    throw std::invalid_argument("no 1-generator between X_" + si.str() + " and X_" + ti.str() +
                                " at shift " + std::to_string(th - sh));
  if (!b.is_zero() && !d.has_eps)
    throw std::invalid_argument("no eps-generator between X_" + si.str() + " and X_" + ti.str() +
                                " at shift " + std::to_string(th - sh));
  blocks_[v * su_.size() + u] = {std::move(a), std::move(b)};
}

SymMorphism SymMorphism::scaled(const FieldElem& c) const {
  SymMorphism m = *this;
  for (auto& [a, b] : m.blocks_) {
    a *= c;
    b *= c;
  }
  return m;
}

SymMorphism SymMorphism::operator+(const SymMorphism& o) const {
  if (!(src_ == o.src_) || !(tgt_ == o.tgt_))
    throw std::invalid_argument("symbolic sum between different hom spaces");
  SymMorphism m = *this;
  for (std::size_t k = 0; k < blocks_.size(); ++k) {
    m.blocks_[k].first += o.blocks_[k].first;
    m.blocks_[k].second += o.blocks_[k].second;
  }
  return m;
}

bool SymMorphism::operator==(const SymMorphism& o) const {
  if (!(src_ == o.src_) || !(tgt_ == o.tgt_)) return false;
  for (std::size_t k = 0; k < blocks_.size(); ++k)
    if (!(blocks_[k].first == o.blocks_[k].first) || !(blocks_[k].second == o.blocks_[k].second))
      return false;
  return true;
}

bool SymMorphism::is_zero() const {
  return std::all_of(blocks_.begin(), blocks_.end(), [](const auto& p) {
    return p.first.is_zero() && p.second.is_zero();
  });
}

SymMorphism compose_sym(const SymMorphism& g, const SymMorphism& f) {
  if (!(f.target() == g.source()))
    throw std::invalid_argument("compose_sym: middle objects differ");
  const Field& field = f.field();
  SymMorphism out(field, f.source(), g.target());
  for (std::size_t u = 0; u < f.source_units(); ++u) {
    auto [iu, hu] = f.source_unit(u);
    for (std::size_t w = 0; w < g.target_units(); ++w) {
      auto [iw, hw] = g.target_unit(w);
      HomDescriptor slot = hom_table(iu, iw, hw - hu);
      FieldElem a = field.zero(), b = field.zero();
      for (std::size_t t = 0; t < f.target_units(); ++t) {
        auto [it, ht] = f.target_unit(t);
        (void)it;
        auto [af, bf] = f.block(u, t);
        auto [ag, bg] = g.block(t, w);
        if (slot.has_one) a += ag * af;
        if (slot.has_eps) {
          b += ag * bf;  // 1 after eps
          // eps after 1 picks up the sign of the 1-factor's shift
          FieldElem s = sign_elem(field, ((ht - hu) % 2 + 2) % 2 == 1);
          b += s * (bg * af);
        }
      }
      out.set_block(u, w, std::move(a), std::move(b));
    }
  }
  return out;
}

SymMorphism sym_generator(const Field& f, const GeneratorRef& g, const FieldElem& coeff) {
  if (!g.exists()) throw std::invalid_argument("generator does not exist: " + g.str());
  FormalObject src, tgt;
  src.add(g.i, g.h1);
  tgt.add(g.j, g.h2);
  SymMorphism m(f, src, tgt);
  if (g.kind == GenKind::One)
    m.set_block(0, 0, coeff, f.zero());
  else
    m.set_block(0, 0, f.zero(), coeff);
  return m;
}

FormalObject cone_symbolic(const GeneratorRef& g, const FieldElem& coeff) {
  if (!g.exists()) throw std::invalid_argument("generator does not exist: " + g.str());
  if (coeff.is_zero()) throw std::invalid_argument("cone_symbolic needs a nonzero coefficient");
  const Field& f = coeff.field();
  int a = g.alpha();

  if (!g.i.is_infinite() && !g.j.is_infinite()) {
    ChainMap rep = generator_rep(f, g).scaled(DualScalar::of(coeff));
    return barcode(cone(rep));
  }

  // X_infty catalog, validated by stabilized truncation in the test suite.
  FormalObject out;
  if (g.i.is_infinite() && g.j.is_infinite()) {
    // cone(1: X_inf -> X_inf[a]) = X_a[1], empty for a = 0.
    if (a > 0) out.add(XIndex::finite(a), 1);
  } else if (g.i.is_infinite()) {
    // cone(eps: X_inf -> X_j[a]) = X_inf[a] + X_{j+a-1}[1].
    out.add(XIndex::infinity(), a);
    if (g.j.value() + a - 1 >= 1) out.add(XIndex::finite(g.j.value() + a - 1), 1);
  } else {
    // cone(1: X_i -> X_inf[a]) = X_inf[i] + X_a[1].
    out.add(XIndex::infinity(), g.i.value());
    if (a >= 1) out.add(XIndex::finite(a), 1);
  }
  return out.shifted(g.h1);
}

int hom_infty_bound(XIndex j, int alpha) {
  int amplitude = j.is_infinite() ? 1 : j.value();
  return amplitude + std::abs(alpha) + 2;
}

std::size_t hom_infty(const Field& f, XIndex i, XIndex j, int alpha, int n) {
  if (n < hom_infty_bound(j, alpha))
    throw std::invalid_argument("truncation length " + std::to_string(n) +
                                " below the stabilization bound " +
                                std::to_string(hom_infty_bound(j, alpha)));
  FreeComplex src = i.is_infinite() ? FreeComplex::x_i(f, n) : FreeComplex::x_i(f, i.value());
  ModuleComplex tgt = j.is_infinite()
                          ? ModuleComplex::k_point(f, -1 - alpha)
                          : ModuleComplex::embed(FreeComplex::x_i(f, j.value(), alpha));
  return hom_space(src, tgt).dim;
}

}  // namespace dualcat
