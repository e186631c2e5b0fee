#include "dualcat/homsolve.hpp"

#include <cassert>

namespace dualcat {

namespace {

// Flat indexing for the entries of one typed component matrix with free
// source: unit parts, then eps parts, then the A->k block.
struct EntryBlock {
  int n = 0;
  std::size_t f1 = 0, f2 = 0, t2 = 0;
  std::size_t off = 0;
  std::size_t aa_a(std::size_t r, std::size_t c) const { return off + r * f1 + c; }
  std::size_t aa_b(std::size_t r, std::size_t c) const { return off + f2 * f1 + r * f1 + c; }
  std::size_t ak(std::size_t r, std::size_t c) const { return off + 2 * f2 * f1 + r * f1 + c; }
  std::size_t size() const { return (2 * f2 + t2) * f1; }
};

struct Layout {
  std::vector<EntryBlock> blocks;
  std::size_t total = 0;

  const EntryBlock* find(int n) const {
    for (auto& b : blocks)
      if (b.n == n) return &b;
    return nullptr;
  }
};

// Components of maps src^n -> tgt^{n+delta}.
Layout make_layout(const FreeComplex& src, const ModuleComplex& tgt, int delta) {
  Layout l;
  for (auto& [n, f1] : src.ranks()) {
    ModShape t = tgt.term_at(n + delta);
    if (t.is_zero()) continue;
    EntryBlock b{n, f1, t.free_rank, t.k_rank, l.total};
    l.total += b.size();
    l.blocks.push_back(b);
  }
  return l;
}

// out += sign * (G . F) as rows linear in the F-entries of block `in`
// (G maps the typed target of `in` to the typed target of `out`).
void emit_left(FieldMatrix& m, const EntryBlock& out, const TypedMatrix& g,
               const EntryBlock& in, const FieldElem& sign) {
  assert(out.f1 == in.f1);
  for (std::size_t c = 0; c < out.f1; ++c) {
    for (std::size_t r = 0; r < out.f2; ++r) {
      for (std::size_t k = 0; k < in.f2; ++k) {
        const FieldElem& ga = g.aa.unit_part().at(r, k);
        const FieldElem& gb = g.aa.eps_part().at(r, k);
        if (!ga.is_zero()) {
          m.at(out.aa_a(r, c), in.aa_a(k, c)) += sign * ga;
          m.at(out.aa_b(r, c), in.aa_b(k, c)) += sign * ga;
        }
        if (!gb.is_zero()) m.at(out.aa_b(r, c), in.aa_a(k, c)) += sign * gb;
      }
      for (std::size_t t = 0; t < in.t2; ++t) {
        const FieldElem& gka = g.ka.at(r, t);
        if (!gka.is_zero()) m.at(out.aa_b(r, c), in.ak(t, c)) += sign * gka;
      }
    }
    for (std::size_t r = 0; r < out.t2; ++r) {
      for (std::size_t k = 0; k < in.f2; ++k) {
        const FieldElem& gak = g.ak.at(r, k);
        if (!gak.is_zero()) m.at(out.ak(r, c), in.aa_a(k, c)) += sign * gak;
      }
      for (std::size_t t = 0; t < in.t2; ++t) {
        const FieldElem& gkk = g.kk.at(r, t);
        if (!gkk.is_zero()) m.at(out.ak(r, c), in.ak(t, c)) += sign * gkk;
      }
    }
  }
}

// out += sign * (F . D) with D a map of free modules (src^{n} -> src of `in`).
void emit_right(FieldMatrix& m, const EntryBlock& out, const DualMatrix& d,
                const EntryBlock& in, const FieldElem& sign) {
  assert(out.f2 == in.f2 && out.t2 == in.t2 && d.rows() == in.f1 && d.cols() == out.f1);
  for (std::size_t c = 0; c < out.f1; ++c) {
    for (std::size_t k = 0; k < in.f1; ++k) {
      const FieldElem& da = d.unit_part().at(k, c);
      const FieldElem& db = d.eps_part().at(k, c);
      if (da.is_zero() && db.is_zero()) continue;
      for (std::size_t r = 0; r < out.f2; ++r) {
        if (!da.is_zero()) {
          m.at(out.aa_a(r, c), in.aa_a(r, k)) += sign * da;
          m.at(out.aa_b(r, c), in.aa_b(r, k)) += sign * da;
        }
        if (!db.is_zero()) m.at(out.aa_b(r, c), in.aa_a(r, k)) += sign * db;
      }
      if (!da.is_zero())
        for (std::size_t r = 0; r < out.t2; ++r) m.at(out.ak(r, c), in.ak(r, k)) += sign * da;
    }
  }
}

FieldVector vectorize(const Layout& l, const Field& f, const TypedComponents& comps) {
  FieldVector v(l.total, f.zero());
  for (auto& b : l.blocks) {
    auto it = comps.find(b.n);
    if (it == comps.end()) continue;
    const TypedMatrix& t = it->second;
    for (std::size_t r = 0; r < b.f2; ++r)
      for (std::size_t c = 0; c < b.f1; ++c) {
        v[b.aa_a(r, c)] = t.aa.unit_part().at(r, c);
        v[b.aa_b(r, c)] = t.aa.eps_part().at(r, c);
      }
    for (std::size_t r = 0; r < b.t2; ++r)
      for (std::size_t c = 0; c < b.f1; ++c) v[b.ak(r, c)] = t.ak.at(r, c);
  }
  return v;
}

TypedComponents unvectorize(const Layout& l, const Field& f, const FreeComplex& src,
                            const ModuleComplex& tgt, int delta, const FieldVector& v) {
  TypedComponents comps;
  for (auto& b : l.blocks) {
    TypedMatrix t(f, tgt.term_at(b.n + delta), ModShape{b.f1, 0});
    for (std::size_t r = 0; r < b.f2; ++r)
      for (std::size_t c = 0; c < b.f1; ++c)
        t.aa.set(r, c, DualScalar(v[b.aa_a(r, c)], v[b.aa_b(r, c)]));
    for (std::size_t r = 0; r < b.t2; ++r)
      for (std::size_t c = 0; c < b.f1; ++c) t.ak.at(r, c) = v[b.ak(r, c)];
    if (!t.is_zero()) comps[b.n] = std::move(t);
  }
  return comps;
}

// Chain-map equations d_tgt f - f d_src = 0 as a matrix over the layout.
FieldMatrix chain_equation_matrix(const FreeComplex& src, const ModuleComplex& tgt,
                                  const Layout& lf) {
  const Field& f = src.field();
  // Equation blocks live at (src degree n) x (tgt term n+1).
  std::vector<EntryBlock> eqs;
  std::size_t rows = 0;
  for (auto& [n, f1] : src.ranks()) {
    ModShape t = tgt.term_at(n + 1);
    if (t.is_zero()) continue;
    EntryBlock b{n, f1, t.free_rank, t.k_rank, rows};
    rows += b.size();
    eqs.push_back(b);
  }
  FieldMatrix m(f, rows, lf.total);
  FieldElem plus = f.one(), minus = -f.one();
  for (auto& eq : eqs) {
    if (const EntryBlock* in = lf.find(eq.n)) emit_left(m, eq, tgt.diff(eq.n), *in, plus);
    if (const EntryBlock* in = lf.find(eq.n + 1)) emit_right(m, eq, src.diff(eq.n), *in, minus);
  }
  return m;
}

// The boundary operator s -> ds + sd from homotopy components into chain-map
// coordinates.
FieldMatrix boundary_matrix(const FreeComplex& src, const ModuleComplex& tgt,
                            const Layout& lf, const Layout& ls) {
  const Field& f = src.field();
  FieldMatrix m(f, lf.total, ls.total);
  FieldElem plus = f.one();
  for (auto& out : lf.blocks) {
    if (const EntryBlock* in = ls.find(out.n)) emit_left(m, out, tgt.diff(out.n - 1), *in, plus);
    if (const EntryBlock* in = ls.find(out.n + 1)) emit_right(m, out, src.diff(out.n), *in, plus);
  }
  return m;
}

// Incremental row-space accumulator for picking independent representatives.
class EchelonAccumulator {
public:
  explicit EchelonAccumulator(const Field& f) : field_(f) {}

  // Returns true (and absorbs v) when v is independent of the rows so far.
  bool add(FieldVector v) {
    reduce(v);
    for (std::size_t c = 0; c < v.size(); ++c) {
      if (v[c].is_zero()) continue;
      FieldElem inv = v[c].inverse();
      for (auto& x : v) x *= inv;
      rows_.emplace_back(c, std::move(v));
      return true;
    }
    return false;
  }

  std::size_t rank() const { return rows_.size(); }

private:
  void reduce(FieldVector& v) const {
    for (auto& [pc, row] : rows_) {
      if (v[pc].is_zero()) continue;
      FieldElem c = v[pc];
      for (std::size_t j = 0; j < v.size(); ++j) v[j] -= c * row[j];
    }
  }
  Field field_;
  std::vector<std::pair<std::size_t, FieldVector>> rows_;
};

void require_free_source(const FreeComplex& src, const ModuleComplex& tgt) {
  if (src.field() != tgt.field()) throw FieldMismatch{};
  if (auto v = src.validate()) throw std::invalid_argument("invalid source complex: " + v->message);
  if (auto v = tgt.validate()) throw std::invalid_argument("invalid target complex: " + v->message);
}

}  // namespace

HomSpaceResult hom_space(const FreeComplex& src, const ModuleComplex& tgt) {
  require_free_source(src, tgt);
  const Field& f = src.field();
  Layout lf = make_layout(src, tgt, 0);
  Layout ls = make_layout(src, tgt, -1);

  FieldMatrix ceq = chain_equation_matrix(src, tgt, lf);
  auto sol = solve_affine(ceq, FieldVector(ceq.rows(), f.zero()));
  assert(sol);  // homogeneous systems are consistent

  FieldMatrix b = boundary_matrix(src, tgt, lf, ls);

  HomSpaceResult res;
  res.chain_dim = sol->nullspace.size();

  EchelonAccumulator acc(f);
  for (std::size_t j = 0; j < b.cols(); ++j) {
    FieldVector col(b.rows(), f.zero());
    for (std::size_t i = 0; i < b.rows(); ++i) col[i] = b.at(i, j);
    acc.add(std::move(col));
  }
  res.boundary_dim = acc.rank();
  for (auto& z : sol->nullspace)
    if (acc.add(z)) res.basis.push_back(unvectorize(lf, f, src, tgt, 0, z));
  res.dim = res.chain_dim - res.boundary_dim;
  assert(res.basis.size() == res.dim);
  return res;
}

std::optional<TypedComponents> solve_nullhomotopy(const FreeComplex& src,
                                                  const ModuleComplex& tgt,
                                                  const TypedComponents& f) {
  require_free_source(src, tgt);
  Layout lf = make_layout(src, tgt, 0);
  Layout ls = make_layout(src, tgt, -1);
  FieldMatrix b = boundary_matrix(src, tgt, lf, ls);
  auto sol = solve_affine(b, vectorize(lf, src.field(), f));
  if (!sol) return std::nullopt;
  return unvectorize(ls, src.field(), src, tgt, -1, sol->particular);
}

std::optional<FieldVector> solve_class_combination(const FreeComplex& src,
                                                   const ModuleComplex& tgt,
                                                   const std::vector<TypedComponents>& gens,
                                                   const TypedComponents& f) {
  require_free_source(src, tgt);
  const Field& field = src.field();
  Layout lf = make_layout(src, tgt, 0);
  Layout ls = make_layout(src, tgt, -1);
  FieldMatrix b = boundary_matrix(src, tgt, lf, ls);

  // [G | B] (x, s) = vec(f): the class of f equals sum x_i [g_i].
  FieldMatrix m(field, lf.total, gens.size() + ls.total);
  for (std::size_t j = 0; j < gens.size(); ++j) {
    FieldVector g = vectorize(lf, field, gens[j]);
    for (std::size_t i = 0; i < lf.total; ++i) m.at(i, j) = g[i];
  }
  for (std::size_t i = 0; i < lf.total; ++i)
    for (std::size_t j = 0; j < ls.total; ++j) m.at(i, gens.size() + j) = b.at(i, j);

  auto sol = solve_affine(m, vectorize(lf, field, f));
  if (!sol) return std::nullopt;
  return FieldVector(sol->particular.begin(), sol->particular.begin() + gens.size());
}

TypedComponents typed_components(const ChainMap& f) {
  TypedComponents comps;
  for (auto& [n, c] : f.components())
    if (!c.is_zero()) comps[n] = TypedMatrix::from_dual(c);
  return comps;
}

ChainMap chain_map_from_typed(const FreeComplex& src, const FreeComplex& tgt,
                              const TypedComponents& comps) {
  ChainMap f(src, tgt);
  for (auto& [n, t] : comps) f.set_component(n, t.aa);
  return f;
}

std::optional<Homotopy> is_nullhomotopic(const ChainMap& f) {
  if (auto v = f.validate())
    throw std::invalid_argument("is_nullhomotopic: not a chain map: " + v->message);
  auto s = solve_nullhomotopy(f.source(), ModuleComplex::embed(f.target()), typed_components(f));
  if (!s) return std::nullopt;
  Homotopy h;
  for (auto& [n, t] : *s) h.set_component(n, t.aa);
  return h;
}

}  // namespace dualcat
