#include "dualcat/decomp.hpp"

#include <algorithm>
#include <cassert>

namespace dualcat {

void FormalObject::add(XIndex i, int h, std::size_t mult) {
  if (mult == 0) return;
  auto key = [](const Summand& s) { return std::make_pair(s.h, s.i); };
  Summand ns{i, h, mult};
  auto it = std::lower_bound(s_.begin(), s_.end(), ns, [&](const Summand& a, const Summand& b) {
    return key(a) < key(b);
  });
  if (it != s_.end() && it->i == i && it->h == h)
    it->mult += mult;
  else
    s_.insert(it, ns);
}

std::size_t FormalObject::unit_count() const {
  std::size_t n = 0;
  for (auto& s : s_) n += s.mult;
  return n;
}

bool FormalObject::is_perfect() const {
  return std::none_of(s_.begin(), s_.end(), [](const Summand& s) { return s.i.is_infinite(); });
}

std::vector<std::pair<XIndex, int>> FormalObject::units() const {
  std::vector<std::pair<XIndex, int>> u;
  for (auto& s : s_)
    for (std::size_t m = 0; m < s.mult; ++m) u.emplace_back(s.i, s.h);
  return u;
}

FormalObject FormalObject::shifted(int n) const {
  FormalObject f;
  for (auto& s : s_) f.add(s.i, s.h + n, s.mult);
  return f;
}

FormalObject FormalObject::operator+(const FormalObject& o) const {
  FormalObject f = *this;
  for (auto& s : o.s_) f.add(s.i, s.h, s.mult);
  return f;
}

std::string FormalObject::str() const {
  if (s_.empty()) return "0";
  std::string out;
  for (auto& s : s_) {
    if (!out.empty()) out += " + ";
    if (s.mult > 1) out += std::to_string(s.mult) + "*";
    out += "X_" + s.i.str();
    if (s.h != 0) out += "[" + std::to_string(s.h) + "]";
  }
  return out;
}

namespace {

DualMatrix drop_row_col(const DualMatrix& m, std::optional<std::size_t> row,
                        std::optional<std::size_t> col) {
  std::size_t nr = m.rows() - (row ? 1 : 0);
  std::size_t nc = m.cols() - (col ? 1 : 0);
  DualMatrix out(m.field(), nr, nc);
  for (std::size_t i = 0, oi = 0; i < m.rows(); ++i) {
    if (row && i == *row) continue;
    for (std::size_t j = 0, oj = 0; j < m.cols(); ++j) {
      if (col && j == *col) continue;
      out.set(oi, oj, m.at(i, j));
      ++oj;
    }
    ++oi;
  }
  return out;
}

struct Pivot {
  int degree;
  std::size_t row, col;
};

std::optional<Pivot> find_unit_pivot(const FreeComplex& c) {
  for (auto& [n, r] : c.ranks()) {
    (void)r;
    if (c.rank_at(n + 1) == 0) continue;
    DualMatrix d = c.diff(n);
    for (std::size_t i = 0; i < d.rows(); ++i)
      for (std::size_t j = 0; j < d.cols(); ++j)
        if (d.at(i, j).is_unit()) return Pivot{n, i, j};
  }
  return std::nullopt;
}

}  // namespace

MinimizeWitness minimize(const FreeComplex& c) {
  if (auto v = c.validate()) throw std::invalid_argument("minimize: invalid complex: " + v->message);
  const Field& f = c.field();

  FreeComplex cur = c;
  ChainMap f_tot = ChainMap::identity(c);  // C -> cur
  ChainMap g_tot = ChainMap::identity(c);  // cur -> C
  Homotopy s_tot;

  while (auto piv = find_unit_pivot(cur)) {
    int n = piv->degree;
    std::size_t r = piv->row, cidx = piv->col;
    DualMatrix d = cur.diff(n);
    DualScalar u = d.at(r, cidx);
    DualScalar ui = u.inverse();
    std::size_t kn = cur.rank_at(n), kn1 = cur.rank_at(n + 1);

    // Next complex: drop generator cidx in degree n and r in degree n+1.
    FreeComplex nxt(f);
    for (auto& [m, rk] : cur.ranks()) {
      std::size_t nrk = rk - (m == n ? 1 : 0) - (m == n + 1 ? 1 : 0);
      if (nrk > 0) nxt.set_term(m, nrk);
    }
    // delta - gamma u^{-1} beta
    DualMatrix delta = drop_row_col(d, r, cidx);
    DualMatrix gamma(f, kn1 - 1, 1), beta(f, 1, kn - 1);
    for (std::size_t i = 0, oi = 0; i < kn1; ++i) {
      if (i == r) continue;
      gamma.set(oi++, 0, d.at(i, cidx));
    }
    for (std::size_t j = 0, oj = 0; j < kn; ++j) {
      if (j == cidx) continue;
      beta.set(0, oj++, d.at(r, j));
    }
    for (auto& [m, rk] : nxt.ranks()) {
      (void)rk;
      if (nxt.rank_at(m + 1) == 0) continue;
      if (m == n)
        nxt.set_diff(m, delta - (gamma * beta).scaled(ui));
      else if (m == n - 1)
        nxt.set_diff(m, drop_row_col(cur.diff(m), cidx, std::nullopt));
      else if (m == n + 1)
        nxt.set_diff(m, drop_row_col(cur.diff(m), std::nullopt, r));
      else
        nxt.set_diff(m, cur.diff(m));
    }

    // Step maps cur <-> nxt and the step homotopy on cur.
    ChainMap fs(cur, nxt), gs(nxt, cur);
    for (auto& [m, rk] : cur.ranks()) {
      if (nxt.rank_at(m) == 0) continue;
      if (m == n) {
        DualMatrix fm(f, kn - 1, kn);  // drop coordinate cidx
        for (std::size_t j = 0, oj = 0; j < kn; ++j) {
          if (j == cidx) continue;
          fm.set(oj++, j, DualScalar::one(f));
        }
        fs.set_component(m, fm);
        DualMatrix gm(f, kn, kn - 1);  // row cidx = -u^{-1} beta
        for (std::size_t j = 0, oj = 0; j < kn; ++j) {
          if (j == cidx) continue;
          gm.set(j, oj++, DualScalar::one(f));
        }
        for (std::size_t j = 0; j < kn - 1; ++j) gm.set(cidx, j, -(ui * beta.at(0, j)));
        gs.set_component(m, gm);
      } else if (m == n + 1) {
        DualMatrix fm(f, kn1 - 1, kn1);  // column r = -gamma u^{-1}
        for (std::size_t i = 0, oi = 0; i < kn1; ++i) {
          if (i == r) continue;
          fm.set(oi, i, DualScalar::one(f));
          fm.set(oi, r, -(gamma.at(oi, 0) * ui));
          ++oi;
        }
        fs.set_component(m, fm);
        DualMatrix gm(f, kn1, kn1 - 1);  // zero row at r
        for (std::size_t i = 0, oi = 0; i < kn1; ++i) {
          if (i == r) continue;
          gm.set(i, oi++, DualScalar::one(f));
        }
        gs.set_component(m, gm);
      } else {
        fs.set_component(m, DualMatrix::identity(f, rk));
        gs.set_component(m, DualMatrix::identity(f, rk));
      }
    }
    // Step homotopy: s^{n+1} has u^{-1} at (cidx, r).
    DualMatrix sm(f, kn, kn1);
    sm.set(cidx, r, ui);

    // Compose with the accumulated equivalence: s' = s + g s_step f.
    Homotopy s_new;
    for (auto& [m, rk] : c.ranks()) {
      (void)rk;
      DualMatrix acc = s_tot.component(m, c, c);
      if (m == n + 1) {
        DualMatrix add = g_tot.component(n) * sm * f_tot.component(n + 1);
        acc = acc + add;
      }
      if (!acc.is_zero()) s_new.set_component(m, acc);
    }
    s_tot = std::move(s_new);
    f_tot = compose(fs, f_tot);
    g_tot = compose(g_tot, gs);
    cur = std::move(nxt);
  }

  return MinimizeWitness{cur, std::move(f_tot), std::move(g_tot), std::move(s_tot)};
}

FormalObject barcode(const FreeComplex& c) {
  FreeComplex m = minimize(c).minimal;
  FormalObject out;
  if (m.empty()) return out;

  int lo = m.min_degree(), hi = m.max_degree();
  auto dim = [&](int n) { return n < lo || n > hi ? 0 : m.rank_at(n); };
  // The eps parts form an equioriented type-A quiver representation: d^2 = 0
  // is automatic once unit parts vanish.
  auto nmat = [&](int n) {
    DualMatrix d = m.diff(n);
    if (!d.unit_part().is_zero())
      throw std::logic_error("minimal model has unit entries");
    return d.eps_part();
  };

  // rho[b][e] = rank of the composite map from degree b to degree e.
  std::map<int, std::map<int, std::size_t>> rho;
  for (int b = lo; b <= hi; ++b) {
    FieldMatrix p = FieldMatrix::identity(m.field(), dim(b));
    rho[b][b] = dim(b);
    for (int e = b + 1; e <= hi; ++e) {
      p = nmat(e - 1) * p;
      rho[b][e] = rank(p);
    }
  }
  auto rho_at = [&](int b, int e) -> std::size_t {
    if (b < lo || e > hi || b > e) return 0;
    return rho[b][e];
  };

  std::size_t covered = 0;
  for (int b = lo; b <= hi; ++b)
    for (int e = b; e <= hi; ++e) {
      long long mult = static_cast<long long>(rho_at(b, e)) - rho_at(b - 1, e) -
                       rho_at(b, e + 1) + rho_at(b - 1, e + 1);
      assert(mult >= 0);
      if (mult > 0) {
        out.add(XIndex::finite(e - b + 1), -1 - e, static_cast<std::size_t>(mult));
        covered += static_cast<std::size_t>(mult) * (e - b + 1);
      }
    }
  assert(covered == m.total_rank());
  return out;
}

CohomologyProfile cohomology(const FreeComplex& c) {
  CohomologyProfile p;
  auto bump = [&](int deg, bool is_a) {
    auto& g = p.groups[deg];
    (is_a ? g.first : g.second) += 1;
  };
  FormalObject bars = barcode(c);
  for (auto& s : bars.summands())
    for (std::size_t m = 0; m < s.mult; ++m) {
      int i = s.i.value();
      if (i == 1) {
        bump(-1 - s.h, true);
      } else {
        bump(-1 - s.h, false);
        bump(-i - s.h, false);
      }
    }
  return p;
}

long long k_class(const FormalObject& f) {
  long long total = 0;
  for (auto& s : f.summands()) {
    long long sign = (s.h % 2 == 0) ? 1 : -1;
    long long per;
    if (s.i.is_infinite())
      per = 1;
    else
      per = 1 + ((s.i.value() - 1) % 2 == 0 ? 1 : -1);
    total += sign * per * static_cast<long long>(s.mult);
  }
  return total;
}

FreeComplex realize(const Field& f, const FormalObject& obj) {
  if (!obj.is_perfect())
    throw std::invalid_argument("realize: only finite indecomposables have free realizations");
  FreeComplex c(f);
  for (auto& s : obj.summands())
    for (std::size_t m = 0; m < s.mult; ++m)
      c = direct_sum(c, FreeComplex::x_i(f, s.i.value(), s.h));
  return c;
}

}  // namespace dualcat
