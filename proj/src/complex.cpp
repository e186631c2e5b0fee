#include "dualcat/complex.hpp"

#include <stdexcept>

namespace dualcat {

std::size_t FreeComplex::rank_at(int n) const {
  auto it = ranks_.find(n);
  return it == ranks_.end() ? 0 : it->second;
}

std::size_t FreeComplex::total_rank() const {
  std::size_t t = 0;
  for (auto& [n, r] : ranks_) t += r;
  return t;
}

void FreeComplex::set_term(int degree, std::size_t rank) {
  if (rank == 0) throw std::invalid_argument("terms must have positive rank");
  ranks_[degree] = rank;
}

DualMatrix FreeComplex::diff(int n) const {
  auto it = diffs_.find(n);
  if (it != diffs_.end()) return it->second;
  return DualMatrix(field_, rank_at(n + 1), rank_at(n));
}

void FreeComplex::set_diff(int n, DualMatrix d) {
  if (d.rows() != rank_at(n + 1) || d.cols() != rank_at(n))
    throw std::invalid_argument("differential shape mismatch at degree " + std::to_string(n));
  if (d.field() != field_) throw FieldMismatch{};
  diffs_[n] = std::move(d);
}

std::optional<Violation> FreeComplex::validate() const {
  for (auto& [n, d] : diffs_) {
    if (d.rows() != rank_at(n + 1) || d.cols() != rank_at(n))
      return Violation{n, "differential shape mismatch"};
  }
  for (auto& [n, r] : ranks_) {
    (void)r;
    if (rank_at(n + 1) == 0 || rank_at(n + 2) == 0) continue;
    if (!(diff(n + 1) * diff(n)).is_zero())
      return Violation{n, "d^2 != 0 starting at degree " + std::to_string(n)};
  }
  return std::nullopt;
}

FreeComplex FreeComplex::x_i(const Field& f, int i, int h) {
  if (i <= 0) throw std::invalid_argument("X_i needs i > 0");
  FreeComplex c(f);
  for (int n = -i; n <= -1; ++n) c.set_term(n, 1);
  DualMatrix eps(f, 1, 1);
  eps.set(0, 0, DualScalar::eps(f));
  for (int n = -i; n <= -2; ++n) c.set_diff(n, eps);
  return h == 0 ? c : c.shifted(h);
}

FreeComplex FreeComplex::shifted(int n) const {
  FreeComplex c(field_);
  for (auto& [m, r] : ranks_) c.ranks_[m - n] = r;
  bool flip = (n % 2) != 0;
  for (auto& [m, d] : diffs_) c.diffs_[m - n] = flip ? -d : d;
  return c;
}

bool FreeComplex::operator==(const FreeComplex& o) const {
  if (field_ != o.field_ || ranks_ != o.ranks_) return false;
  for (auto& [n, r] : ranks_) {
    (void)r;
    if (!(diff(n) == o.diff(n))) return false;
  }
  return true;
}

FreeComplex direct_sum(const FreeComplex& a, const FreeComplex& b) {
  if (a.field() != b.field()) throw FieldMismatch{};
  FreeComplex c(a.field());
  for (auto& [n, r] : a.ranks()) c.set_term(n, r + b.rank_at(n));
  for (auto& [n, r] : b.ranks())
    if (a.rank_at(n) == 0) c.set_term(n, r);
  for (auto& [n, r] : c.ranks()) {
    (void)r;
    if (c.rank_at(n + 1) == 0) continue;
    DualMatrix d(c.field(), c.rank_at(n + 1), c.rank_at(n));
    DualMatrix da = a.diff(n), db = b.diff(n);
    std::size_t ra1 = a.rank_at(n + 1), ra0 = a.rank_at(n);
    for (std::size_t i = 0; i < da.rows(); ++i)
      for (std::size_t j = 0; j < da.cols(); ++j) d.set(i, j, da.at(i, j));
    for (std::size_t i = 0; i < db.rows(); ++i)
      for (std::size_t j = 0; j < db.cols(); ++j) d.set(ra1 + i, ra0 + j, db.at(i, j));
    c.set_diff(n, std::move(d));
  }
  return c;
}

TypedMatrix::TypedMatrix(const Field& f, ModShape target, ModShape source)
    : aa(f, target.free_rank, source.free_rank),
      ka(f, target.free_rank, source.k_rank),
      ak(f, target.k_rank, source.free_rank),
      kk(f, target.k_rank, source.k_rank),
      src_(source),
      dst_(target) {}

TypedMatrix TypedMatrix::operator*(const TypedMatrix& o) const {
  if (!(o.dst_ == src_)) throw std::invalid_argument("typed product shape mismatch");
  TypedMatrix r(aa.field(), dst_, o.src_);
  // A->A: through A, plus k-route contributing eps * (ka . ak)
  r.aa = aa * o.aa;
  r.aa.eps_part() = r.aa.eps_part() + ka * o.ak;
  // k->A: unit(A->A) after k->A, or k->A after k->k
  r.ka = aa.unit_part() * o.ka + ka * o.kk;
  // A->k: A->k after unit(A->A), or k->k after A->k
  r.ak = ak * o.aa.unit_part() + kk * o.ak;
  // k->k: only the k->k route survives (k->A->k is zero)
  r.kk = kk * o.kk;
  return r;
}

TypedMatrix TypedMatrix::operator+(const TypedMatrix& o) const {
  TypedMatrix r = *this;
  r.aa = r.aa + o.aa;
  r.ka = r.ka + o.ka;
  r.ak = r.ak + o.ak;
  r.kk = r.kk + o.kk;
  return r;
}

TypedMatrix TypedMatrix::operator-() const {
  TypedMatrix r = *this;
  r.aa = -r.aa;
  r.ka = -r.ka;
  r.ak = -r.ak;
  r.kk = -r.kk;
  return r;
}

bool TypedMatrix::operator==(const TypedMatrix& o) const {
  return src_ == o.src_ && dst_ == o.dst_ && aa == o.aa && ka == o.ka && ak == o.ak && kk == o.kk;
}

bool TypedMatrix::is_zero() const {
  return aa.is_zero() && ka.is_zero() && ak.is_zero() && kk.is_zero();
}

TypedMatrix TypedMatrix::from_dual(const DualMatrix& m) {
  TypedMatrix r(m.field(), ModShape{m.rows(), 0}, ModShape{m.cols(), 0});
  r.aa = m;
  return r;
}

ModShape ModuleComplex::term_at(int n) const {
  auto it = terms_.find(n);
  return it == terms_.end() ? ModShape{} : it->second;
}

void ModuleComplex::set_term(int degree, ModShape s) {
  if (s.is_zero()) throw std::invalid_argument("terms must be nonzero");
  terms_[degree] = s;
}

TypedMatrix ModuleComplex::diff(int n) const {
  auto it = diffs_.find(n);
  if (it != diffs_.end()) return it->second;
  return TypedMatrix(field_, term_at(n + 1), term_at(n));
}

void ModuleComplex::set_diff(int n, TypedMatrix d) {
  if (!(d.source_shape() == term_at(n)) || !(d.target_shape() == term_at(n + 1)))
    throw std::invalid_argument("differential shape mismatch at degree " + std::to_string(n));
  diffs_[n] = std::move(d);
}

std::optional<Violation> ModuleComplex::validate() const {
  for (auto& [n, s] : terms_) {
    (void)s;
    if (term_at(n + 1).is_zero() || term_at(n + 2).is_zero()) continue;
    if (!(diff(n + 1) * diff(n)).is_zero())
      return Violation{n, "d^2 != 0 starting at degree " + std::to_string(n)};
  }
  return std::nullopt;
}

ModuleComplex ModuleComplex::embed(const FreeComplex& c) {
  ModuleComplex m(c.field());
  for (auto& [n, r] : c.ranks()) m.set_term(n, ModShape{r, 0});
  for (auto& [n, r] : c.ranks()) {
    (void)r;
    if (c.rank_at(n + 1) > 0) m.set_diff(n, TypedMatrix::from_dual(c.diff(n)));
  }
  return m;
}

ModuleComplex ModuleComplex::k_point(const Field& f, int degree) {
  ModuleComplex m(f);
  m.set_term(degree, ModShape{0, 1});
  return m;
}

ModuleComplex ModuleComplex::shifted(int n) const {
  ModuleComplex c(field_);
  for (auto& [m, s] : terms_) c.terms_[m - n] = s;
  for (auto& [m, d] : diffs_) c.diffs_[m - n] = (n % 2) != 0 ? -d : d;
  return c;
}

bool ModuleComplex::is_free() const {
  for (auto& [n, s] : terms_) {
    (void)n;
    if (s.k_rank != 0) return false;
  }
  return true;
}

ChainMap::ChainMap(FreeComplex src, FreeComplex tgt) : src_(std::move(src)), tgt_(std::move(tgt)) {
  if (src_.field() != tgt_.field()) throw FieldMismatch{};
}

ChainMap ChainMap::identity(const FreeComplex& c) {
  ChainMap f(c, c);
  for (auto& [n, r] : c.ranks()) f.set_component(n, DualMatrix::identity(c.field(), r));
  return f;
}

DualMatrix ChainMap::component(int n) const {
  auto it = comps_.find(n);
  if (it != comps_.end()) return it->second;
  return DualMatrix(src_.field(), tgt_.rank_at(n), src_.rank_at(n));
}

void ChainMap::set_component(int n, DualMatrix m) {
  if (m.rows() != tgt_.rank_at(n) || m.cols() != src_.rank_at(n))
    throw std::invalid_argument("component shape mismatch at degree " + std::to_string(n));
  comps_[n] = std::move(m);
}

std::optional<Violation> ChainMap::validate() const {
  if (src_.empty()) return std::nullopt;
  for (int n = src_.min_degree() - 1; n <= src_.max_degree() + 1; ++n) {
    DualMatrix lhs = tgt_.diff(n) * component(n);       // (tgt n+1) x (src n)
    DualMatrix rhs = component(n + 1) * src_.diff(n);
    if (!( lhs == rhs ))
      return Violation{n, "does not commute with differentials at degree " + std::to_string(n)};
  }
  return std::nullopt;
}

ChainMap ChainMap::shifted(int n) const {
  ChainMap f(src_.shifted(n), tgt_.shifted(n));
  for (auto& [m, c] : comps_) f.comps_[m - n] = c;
  return f;
}

ChainMap ChainMap::scaled(const DualScalar& c) const {
  ChainMap f(src_, tgt_);
  for (auto& [n, m] : comps_) f.comps_[n] = m.scaled(c);
  return f;
}

ChainMap ChainMap::operator+(const ChainMap& o) const {
  if (!(src_ == o.src_) || !(tgt_ == o.tgt_))
    throw std::invalid_argument("chain map sum between different hom spaces");
  ChainMap f(src_, tgt_);
  for (auto& [n, r] : src_.ranks()) {
    (void)r;
    if (tgt_.rank_at(n) > 0) f.set_component(n, component(n) + o.component(n));
  }
  return f;
}

ChainMap ChainMap::operator-(const ChainMap& o) const { return *this + o.scaled(-DualScalar::one(src_.field())); }

bool ChainMap::operator==(const ChainMap& o) const {
  if (!(src_ == o.src_) || !(tgt_ == o.tgt_)) return false;
  for (auto& [n, r] : src_.ranks()) {
    (void)r;
    if (!(component(n) == o.component(n))) return false;
  }
  return true;
}

ChainMap compose(const ChainMap& g, const ChainMap& f) {
  if (!(f.target() == g.source()))
    throw std::invalid_argument("composition with mismatched middle object");
  ChainMap h(f.source(), g.target());
  for (auto& [n, r] : f.source().ranks()) {
    (void)r;
    if (g.target().rank_at(n) > 0) h.set_component(n, g.component(n) * f.component(n));
  }
  return h;
}

DualMatrix Homotopy::component(int n, const FreeComplex& src, const FreeComplex& tgt) const {
  auto it = comps_.find(n);
  if (it != comps_.end()) return it->second;
  return DualMatrix(src.field(), tgt.rank_at(n - 1), src.rank_at(n));
}

void Homotopy::set_component(int n, DualMatrix m) { comps_[n] = std::move(m); }

FreeComplex cone(const ChainMap& f) {
  if (auto v = f.source().validate()) throw std::invalid_argument("cone: invalid source: " + v->message);
  if (auto v = f.target().validate()) throw std::invalid_argument("cone: invalid target: " + v->message);
  if (auto v = f.validate()) throw std::invalid_argument("cone: not a chain map: " + v->message);

  const FreeComplex& x = f.source();
  const FreeComplex& y = f.target();
  FreeComplex c(x.field());
  auto rank_of = [&](int n) { return x.rank_at(n + 1) + y.rank_at(n); };
  if (x.empty() && y.empty()) return c;
  int lo = std::min(x.empty() ? INT32_MAX : x.min_degree() - 1, y.empty() ? INT32_MAX : y.min_degree());
  int hi = std::max(x.empty() ? INT32_MIN : x.max_degree() - 1, y.empty() ? INT32_MIN : y.max_degree());
  for (int n = lo; n <= hi; ++n)
    if (rank_of(n) > 0) c.set_term(n, rank_of(n));
  for (int n = lo; n <= hi; ++n) {
    if (rank_of(n) == 0 || rank_of(n + 1) == 0) continue;
    DualMatrix d(x.field(), rank_of(n + 1), rank_of(n));
    DualMatrix dx = x.diff(n + 1), dy = y.diff(n), fc = f.component(n + 1);
    std::size_t rx = x.rank_at(n + 2), rxc = x.rank_at(n + 1);
    for (std::size_t i = 0; i < dx.rows(); ++i)
      for (std::size_t j = 0; j < dx.cols(); ++j) d.set(i, j, -dx.at(i, j));
    for (std::size_t i = 0; i < fc.rows(); ++i)
      for (std::size_t j = 0; j < fc.cols(); ++j) d.set(rx + i, j, fc.at(i, j));
    for (std::size_t i = 0; i < dy.rows(); ++i)
      for (std::size_t j = 0; j < dy.cols(); ++j) d.set(rx + i, rxc + j, dy.at(i, j));
    c.set_diff(n, std::move(d));
  }
  if (auto v = c.validate()) throw std::logic_error("cone differential fails d^2 = 0: " + v->message);
  return c;
}

}  // namespace dualcat
