#include "msolve/arrangement.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

#include "msolve/factor.hpp"

namespace msolve {

namespace {

int total_degree(const Monomial& m) {
  int d = 0;
  for (int e : m) d += e;
  return d;
}

bool divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  Monomial m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) m[i] = std::max(a[i], b[i]);
  return m;
}

Monomial mono_sub(const Monomial& a, const Monomial& b) {
  Monomial m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) m[i] = a[i] - b[i];
  return m;
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

struct Ascending {
  MonomialOrder order;
  bool operator()(const Monomial& a, const Monomial& b) const { return monomial_greater(b, a, order); }
};

using Terms = std::vector<std::pair<Monomial, Rational>>;

// Terms sorted by decreasing monomial.
Terms sorted_terms(const MultiPoly& f, MonomialOrder order) {
  Terms t(f.terms().begin(), f.terms().end());
  std::sort(t.begin(), t.end(), [order](const auto& x, const auto& y) { return monomial_greater(x.first, y.first, order); });
  return t;
}

MultiPoly extend_vars(const MultiPoly& f, int n) {
  MultiPoly g(n);
  for (const auto& [m, c] : f.terms()) {
    Monomial e = m;
    e.resize(n, 0);
    g.add_term(e, c);
  }
  return g;
}

}  // namespace

bool monomial_greater(const Monomial& a, const Monomial& b, MonomialOrder order) {
  if (order == MonomialOrder::Lex) return b < a;
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

MultiPoly MultiPoly::constant(int nvars, const Rational& c) {
  MultiPoly f(nvars);
  f.add_term(Monomial(nvars, 0), c);
  return f;
}

MultiPoly MultiPoly::var(int nvars, int i, const Rational& c) {
  MultiPoly f(nvars);
  Monomial m(nvars, 0);
  m[i] = 1;
  f.add_term(m, c);
  return f;
}

MultiPoly MultiPoly::linear(const std::vector<Rational>& c) {
  const int n = static_cast<int>(c.size());
  MultiPoly f(n);
  for (int i = 0; i < n; ++i) {
    Monomial m(n, 0);
    m[i] = 1;
    f.add_term(m, c[i]);
  }
  return f;
}

bool MultiPoly::is_constant() const { return degree() <= 0; }

int MultiPoly::degree() const {
  int d = -1;
  for (const auto& [m, c] : t_) d = std::max(d, total_degree(m));
  return d;
}

bool MultiPoly::is_homogeneous() const {
  int d = -1;
  for (const auto& [m, c] : t_) {
    int e = total_degree(m);
    if (d >= 0 && e != d) return false;
    d = e;
  }
  return true;
}

bool MultiPoly::is_linear_form() const { return !is_zero() && degree() == 1 && is_homogeneous(); }

std::vector<Rational> MultiPoly::linear_coeffs() const {
  if (degree() > 1) throw std::invalid_argument("linear_coeffs: degree above 1");
  std::vector<Rational> c(n_, Rational(0));
  for (const auto& [m, v] : t_)
    for (int i = 0; i < n_; ++i)
      if (m[i] == 1) c[i] = v;
  return c;
}

std::vector<int> MultiPoly::variables() const {
  std::vector<int> vs;
  for (int i = 0; i < n_; ++i)
    for (const auto& [m, c] : t_)
      if (m[i] > 0) {
        vs.push_back(i);
        break;
      }
  return vs;
}

Rational MultiPoly::coeff(const Monomial& m) const {
  auto it = t_.find(m);
  return it == t_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
  if (static_cast<int>(m.size()) != n_) throw std::invalid_argument("MultiPoly: monomial size mismatch");
  if (c == 0) return;
  auto [it, fresh] = t_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) t_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (o.n_ != n_) throw std::invalid_argument("MultiPoly: variable count mismatch");
  for (const auto& [m, c] : o.t_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  if (o.n_ != n_) throw std::invalid_argument("MultiPoly: variable count mismatch");
  for (const auto& [m, c] : o.t_) add_term(m, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& s) {
  if (s == 0) {
    t_.clear();
    return *this;
  }
  for (auto& [m, c] : t_) c *= s;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("MultiPoly: variable count mismatch");
  MultiPoly p(a.n_);
  Monomial m(a.n_);
  for (const auto& [ma, ca] : a.t_)
    for (const auto& [mb, cb] : b.t_) {
      for (int i = 0; i < a.n_; ++i) m[i] = ma[i] + mb[i];
      p.add_term(m, ca * cb);
    }
  return p;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly p = *this;
  for (auto& [m, c] : p.t_) c = -c;
  return p;
}

Rational MultiPoly::eval(const std::vector<Rational>& a) const {
  if (static_cast<int>(a.size()) != n_) throw std::invalid_argument("MultiPoly::eval: point size mismatch");
  Rational s = 0, t;
  for (const auto& [m, c] : t_) {
    t = c;
    for (int i = 0; i < n_; ++i)
      for (int e = 0; e < m[i]; ++e) t *= a[i];
    s += t;
  }
  return s;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly r = constant(n_, 1), b = *this;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& images) const {
  if (static_cast<int>(images.size()) != n_) throw std::invalid_argument("MultiPoly::substitute: wrong image count");
  const int m = images.empty() ? 0 : images[0].nvars();
  // Cache powers of each image.
  std::vector<std::vector<MultiPoly>> pw(n_);
  MultiPoly out(m);
  for (const auto& [mono, c] : t_) {
    MultiPoly t = constant(m, c);
    for (int i = 0; i < n_; ++i) {
      if (mono[i] == 0) continue;
      auto& cache = pw[i];
      if (cache.empty()) cache.push_back(constant(m, 1));
      while (static_cast<int>(cache.size()) <= mono[i]) cache.push_back(cache.back() * images[i]);
      t = t * cache[mono[i]];
    }
    out += t;
  }
  return out;
}

std::pair<Monomial, Rational> MultiPoly::leading_term(MonomialOrder order) const {
  if (t_.empty()) throw std::domain_error("leading_term of zero");
  auto best = t_.begin();
  for (auto it = std::next(t_.begin()); it != t_.end(); ++it)
    if (monomial_greater(it->first, best->first, order)) best = it;
  return *best;
}

MultiPoly MultiPoly::monic(MonomialOrder order) const {
  if (t_.empty()) return *this;
  Rational inv = 1 / leading_term(order).second;
  MultiPoly p = *this;
  return p *= inv;
}

std::string MultiPoly::to_string(const std::string& var) const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  Terms t = sorted_terms(*this, MonomialOrder::GrevLex);
  for (const auto& [m, c] : t) {
    Rational a = abs(c);
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    bool unit = total_degree(m) == 0;
    if (a != 1 || unit) os << a.get_str();
    bool need_star = a != 1 && !unit;
    for (int i = 0; i < n_; ++i) {
      if (m[i] == 0) continue;
      if (need_star) os << "*";
      need_star = true;
      os << var << (i + 1);
      if (m[i] > 1) os << "^" << m[i];
    }
  }
  return os.str();
}

MultiPoly reduce(const MultiPoly& f, const std::vector<MultiPoly>& basis, MonomialOrder order) {
  const int n = f.nvars();
  std::vector<Terms> bt;
  bt.reserve(basis.size());
  for (const auto& g : basis) {
    if (g.is_zero()) continue;
    bt.push_back(sorted_terms(g, order));
  }
  std::map<Monomial, Rational, Ascending> work(Ascending{order});
  for (const auto& [m, c] : f.terms()) work.emplace(m, c);
  MultiPoly r(n);
  Monomial q(n);
  while (!work.empty()) {
    auto top = std::prev(work.end());
    const Terms* div = nullptr;
    for (const auto& g : bt)
      if (divides(g.front().first, top->first)) {
        div = &g;
        break;
      }
    if (!div) {
      r.add_term(top->first, top->second);
      work.erase(top);
      continue;
    }
    Rational s = top->second / div->front().second;
    q = mono_sub(top->first, div->front().first);
    work.erase(top);
    for (std::size_t k = 1; k < div->size(); ++k) {
      const auto& [m, c] = (*div)[k];
      Monomial e(n);
      for (int i = 0; i < n; ++i) e[i] = m[i] + q[i];
      Rational v = -s * c;
      auto [it, fresh] = work.emplace(std::move(e), v);
      if (!fresh) {
        it->second += v;
        if (it->second == 0) work.erase(it);
      }
    }
  }
  return r;
}

std::vector<MultiPoly> groebner(const std::vector<MultiPoly>& gens, MonomialOrder order) {
  std::vector<MultiPoly> G;
  std::vector<Monomial> lm;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    MultiPoly h = reduce(g, G, order);
    if (h.is_zero()) continue;
    if (h.is_constant()) return {MultiPoly::constant(g.nvars(), 1)};
    G.push_back(h.monic(order));
    lm.push_back(G.back().leading_term(order).first);
  }
  if (G.empty()) return G;
  const int n = G[0].nvars();

  std::vector<std::pair<int, int>> pairs;
  for (int j = 0; j < static_cast<int>(G.size()); ++j)
    for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
  auto pending = [&](int i, int j) {
    if (i > j) std::swap(i, j);
    return std::find(pairs.begin(), pairs.end(), std::make_pair(i, j)) != pairs.end();
  };

  while (!pairs.empty()) {
    // Normal strategy: smallest lcm first.
    auto sel = pairs.begin();
    Monomial best = mono_lcm(lm[sel->first], lm[sel->second]);
    for (auto it = std::next(pairs.begin()); it != pairs.end(); ++it) {
      Monomial l = mono_lcm(lm[it->first], lm[it->second]);
      int dl = total_degree(l), db = total_degree(best);
      if (dl < db || (dl == db && monomial_greater(best, l, order))) {
        best = l;
        sel = it;
      }
    }
    auto [i, j] = *sel;
    pairs.erase(sel);
    if (coprime(lm[i], lm[j])) continue;
    bool chain = false;
    for (int k = 0; k < static_cast<int>(G.size()) && !chain; ++k)
      if (k != i && k != j && divides(lm[k], best) && !pending(i, k) && !pending(j, k)) chain = true;
    if (chain) continue;
    MultiPoly s(n);
    Monomial qi = mono_sub(best, lm[i]), qj = mono_sub(best, lm[j]);
    for (const auto& [m, c] : G[i].terms()) {
      Monomial e(n);
      for (int t = 0; t < n; ++t) e[t] = m[t] + qi[t];
      s.add_term(e, c);
    }
    for (const auto& [m, c] : G[j].terms()) {
      Monomial e(n);
      for (int t = 0; t < n; ++t) e[t] = m[t] + qj[t];
      s.add_term(e, -c);
    }
    MultiPoly h = reduce(s, G, order);
    if (h.is_zero()) continue;
    if (h.is_constant()) return {MultiPoly::constant(n, 1)};
    G.push_back(h.monic(order));
    lm.push_back(G.back().leading_term(order).first);
    const int k = static_cast<int>(G.size()) - 1;
    for (int t = 0; t < k; ++t) pairs.emplace_back(t, k);
  }

  // Minimal basis, then interreduce.
  std::vector<int> keep;
  for (int i = 0; i < static_cast<int>(G.size()); ++i) {
    bool redundant = false;
    for (int j = 0; j < static_cast<int>(G.size()) && !redundant; ++j) {
      if (i == j || !divides(lm[j], lm[i])) continue;
      // Equal leading monomials: keep the first.
      if (lm[j] != lm[i] || j < i) redundant = true;
    }
    if (!redundant) keep.push_back(i);
  }
  std::vector<MultiPoly> M;
  for (int i : keep) M.push_back(G[i]);
  std::vector<MultiPoly> R;
  for (std::size_t i = 0; i < M.size(); ++i) {
    std::vector<MultiPoly> others;
    for (std::size_t j = 0; j < M.size(); ++j)
      if (j != i) others.push_back(M[j]);
    R.push_back(reduce(M[i], others, order).monic(order));
  }
  std::sort(R.begin(), R.end(), [order](const MultiPoly& a, const MultiPoly& b) {
    return monomial_greater(b.leading_term(order).first, a.leading_term(order).first, order);
  });
  return R;
}

bool in_ideal(const MultiPoly& f, const std::vector<MultiPoly>& gb, MonomialOrder order) {
  return reduce(f, gb, order).is_zero();
}

bool in_radical(const MultiPoly& f, const std::vector<MultiPoly>& gens) {
  if (f.is_zero()) return true;
  const int n = f.nvars();
  std::vector<MultiPoly> ext;
  for (const auto& g : gens) ext.push_back(extend_vars(g, n + 1));
  MultiPoly t = MultiPoly::var(n + 1, n);
  ext.push_back(MultiPoly::constant(n + 1, 1) - t * extend_vars(f, n + 1));
  auto G = groebner(ext, MonomialOrder::GrevLex);
  return G.size() == 1 && G[0].is_constant();
}

namespace {

// f as a polynomial in x_k: f = l_k (x_k - mu) q with l = l_k x_k + ..., or nullopt.
std::optional<MultiPoly> divide_linear(const MultiPoly& f, const MultiPoly& l) {
  const int n = f.nvars();
  std::vector<Rational> c = l.linear_coeffs();
  int k = 0;
  while (k < n && c[k] == 0) ++k;
  if (k == n) throw std::invalid_argument("divide_linear: zero form");
  // x_k = mu(x') on l = 0.
  std::vector<Rational> mu(n, Rational(0));
  for (int i = 0; i < n; ++i)
    if (i != k) mu[i] = -c[i] / c[k];
  MultiPoly lam = MultiPoly::linear(mu);
  int D = 0;
  for (const auto& [m, v] : f.terms()) D = std::max(D, m[k]);
  if (D == 0) return std::nullopt;
  std::vector<MultiPoly> F(D + 1, MultiPoly(n));
  for (const auto& [m, v] : f.terms()) {
    Monomial e = m;
    e[k] = 0;
    F[m[k]].add_term(e, v);
  }
  std::vector<MultiPoly> q(D, MultiPoly(n));
  q[D - 1] = F[D];
  for (int d = D - 1; d >= 1; --d) q[d - 1] = F[d] + lam * q[d];
  if (!(F[0] + lam * q[0]).is_zero()) return std::nullopt;
  MultiPoly out(n);
  for (int d = 0; d < D; ++d)
    for (const auto& [m, v] : q[d].terms()) {
      Monomial e = m;
      e[k] = d;
      out.add_term(e, v / c[k]);
    }
  return out;
}

MultiPoly normalize_form(const MultiPoly& l) {
  std::vector<Rational> c = l.linear_coeffs();
  for (const auto& v : c)
    if (v != 0) {
      Rational inv = 1 / v;
      for (auto& w : c) w *= inv;
      break;
    }
  return MultiPoly::linear(c);
}

// f restricted to the line y_i = r_i (i != k), as a polynomial in y_k.
Poly restrict_line(const MultiPoly& f, int k, const std::vector<Rational>& r) {
  int D = 0;
  for (const auto& [m, v] : f.terms()) D = std::max(D, m[k]);
  std::vector<Rational> c(D + 1, Rational(0));
  for (const auto& [m, v] : f.terms()) {
    Rational t = v;
    for (int i = 0; i < f.nvars(); ++i)
      if (i != k)
        for (int e = 0; e < m[i]; ++e) t *= r[i];
    c[m[k]] += t;
  }
  return Poly(c);
}

// Candidate linear forms y_k - sum_j lambda_j y_j dividing g, with g monic in y_k of full degree.
std::vector<MultiPoly> candidate_factors(const MultiPoly& g, int k, std::mt19937& rng) {
  const int n = g.nvars();
  std::uniform_int_distribution<int> dist(-9, 9);
  std::vector<Rational> r0(n, Rational(0));
  for (int i = 0; i < n; ++i)
    if (i != k) r0[i] = dist(rng);
  std::vector<Rational> roots0 = rational_roots(restrict_line(g, k, r0));
  std::vector<int> others;
  for (int i = 0; i < n; ++i)
    if (i != k) others.push_back(i);
  std::vector<std::vector<Rational>> roots(others.size());
  for (std::size_t t = 0; t < others.size(); ++t) {
    std::vector<Rational> r = r0;
    r[others[t]] += 1;
    roots[t] = rational_roots(restrict_line(g, k, r));
    if (roots[t].empty()) return {};
  }
  std::vector<MultiPoly> out;
  for (const auto& rho0 : roots0) {
    // Depth-first over choices, checking lambda(r0) = rho0 at the end.
    std::vector<Rational> lam(others.size());
    std::vector<std::size_t> idx(others.size(), 0);
    std::size_t depth = 0;
    if (others.empty()) {
      if (rho0 == 0) out.push_back(MultiPoly::var(n, k));
      continue;
    }
    while (true) {
      if (depth == others.size()) {
        Rational s = 0;
        for (std::size_t t = 0; t < others.size(); ++t) s += lam[t] * r0[others[t]];
        if (s == rho0) {
          std::vector<Rational> c(n, Rational(0));
          c[k] = 1;
          for (std::size_t t = 0; t < others.size(); ++t) c[others[t]] = -lam[t];
          out.push_back(MultiPoly::linear(c));
        }
        --depth;
        ++idx[depth];
        continue;
      }
      if (idx[depth] == roots[depth].size()) {
        if (depth == 0) break;
        idx[depth] = 0;
        --depth;
        ++idx[depth];
        continue;
      }
      lam[depth] = roots[depth][idx[depth]] - rho0;
      ++depth;
    }
  }
  return out;
}

}  // namespace

LinearFactorization linear_factors(const MultiPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("linear_factors: zero polynomial");
  if (!f.is_homogeneous()) throw std::invalid_argument("linear_factors: polynomial must be homogeneous");
  LinearFactorization out;
  out.cofactor = f;
  const int n = f.nvars();
  std::mt19937 rng(0x5eed);
  while (out.cofactor.degree() >= 1) {
    const MultiPoly& g = out.cofactor;
    const int D = g.degree();
    // A variable with a pure power keeps every linear factor visible in that variable.
    int k = -1;
    for (int i = 0; i < n && k < 0; ++i) {
      Monomial m(n, 0);
      m[i] = D;
      if (g.coeff(m) != 0) k = i;
    }
    std::vector<Rational> shift(n, Rational(0));
    if (k < 0) {
      k = n - 1;
      std::uniform_int_distribution<int> dist(-5, 5);
      while (true) {
        std::vector<Rational> e(n);
        for (int i = 0; i < n; ++i) e[i] = i == k ? Rational(1) : Rational(dist(rng));
        if (g.eval(e) != 0) {
          shift = e;
          break;
        }
      }
    }
    // x_i = y_i + shift_i y_k for i != k, x_k = y_k.
    MultiPoly h = g;
    bool sheared = false;
    for (int i = 0; i < n; ++i) sheared = sheared || (i != k && shift[i] != 0);
    if (sheared) {
      std::vector<MultiPoly> img;
      for (int i = 0; i < n; ++i) {
        MultiPoly v = MultiPoly::var(n, i);
        if (i != k && shift[i] != 0) v += MultiPoly::var(n, k, shift[i]);
        img.push_back(v);
      }
      h = g.substitute(img);
    }
    std::vector<MultiPoly> back;
    if (sheared) {
      for (int i = 0; i < n; ++i) {
        MultiPoly v = MultiPoly::var(n, i);
        if (i != k && shift[i] != 0) v -= MultiPoly::var(n, k, shift[i]);
        back.push_back(v);
      }
    }
    bool found = false;
    for (const auto& cand : candidate_factors(h, k, rng)) {
      MultiPoly l = normalize_form(sheared ? cand.substitute(back) : cand);
      int mult = 0;
      while (auto q = divide_linear(out.cofactor, l)) {
        out.cofactor = *q;
        ++mult;
      }
      if (mult > 0) {
        out.factors.emplace_back(l, mult);
        found = true;
        break;
      }
    }
    if (!found) break;
  }
  std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
    return a.first.linear_coeffs() > b.first.linear_coeffs();
  });
  return out;
}

LinearComponent make_component(const std::vector<MultiPoly>& forms, int nvars) {
  RatMatrix A;
  for (const auto& l : forms) {
    if (l.is_zero()) continue;
    if (!l.is_linear_form()) throw std::invalid_argument("make_component: not a linear form");
    A.push_back(l.linear_coeffs());
  }
  rref(A);
  LinearComponent c;
  c.nvars = nvars;
  for (const auto& row : A) c.forms.push_back(MultiPoly::linear(row));
  if (A.empty()) {
    for (int i = 0; i < nvars; ++i) {
      std::vector<Rational> e(nvars, Rational(0));
      e[i] = 1;
      c.S.push_back(e);
    }
  } else {
    c.S = nullspace(A);
  }
  return c;
}

std::optional<RatMatrix> parametrize(const LinearComponent& comp) {
  if (comp.S.empty()) return std::nullopt;
  return comp.S;
}

bool component_contains(const LinearComponent& b, const LinearComponent& a) {
  for (const auto& l : b.forms)
    for (const auto& row : a.S)
      if (l.eval(row) != 0) return false;
  return true;
}

std::string component_to_string(const LinearComponent& c) {
  std::ostringstream os;
  os << "<";
  for (std::size_t i = 0; i < c.forms.size(); ++i) os << (i ? ", " : "") << c.forms[i].to_string();
  os << ">";
  return os.str();
}

namespace {

class Splitter {
 public:
  explicit Splitter(int n) : n_(n), rng_(0xa11) {}

  // Appends the components of V(gens); false with a reason when some part is not certified.
  bool run(const std::vector<MultiPoly>& gens, std::vector<LinearComponent>& out, int retries) {
    auto G = groebner(gens, MonomialOrder::Lex);
    if (G.size() == 1 && G[0].is_constant()) return true;
    bool linear = true;
    for (const auto& g : G) linear = linear && g.degree() == 1;
    if (linear) {
      out.push_back(make_component(G, n_));
      return true;
    }
    std::vector<const MultiPoly*> nonlin;
    for (const auto& g : G)
      if (g.degree() > 1) nonlin.push_back(&g);
    std::stable_sort(nonlin.begin(), nonlin.end(), [](const MultiPoly* a, const MultiPoly* b) {
      auto va = a->variables().size(), vb = b->variables().size();
      return va != vb ? va < vb : a->degree() < b->degree();
    });
    for (const MultiPoly* g : nonlin) {
      LinearFactorization lf = linear_factors(*g);
      if (lf.factors.empty()) continue;
      for (const auto& [l, m] : lf.factors) {
        auto H = G;
        H.push_back(l);
        if (!run(H, out, retries)) return false;
      }
      if (lf.cofactor.degree() >= 1) {
        auto H = G;
        H.push_back(lf.cofactor);
        if (!run(H, out, retries)) return false;
      }
      return true;
    }
    // Variables vanishing on the variety but not yet in the ideal.
    std::vector<MultiPoly> extra;
    for (int i = 0; i < n_; ++i) {
      MultiPoly v = MultiPoly::var(n_, i);
      if (!in_ideal(v, G, MonomialOrder::Lex) && in_radical(v, G)) extra.push_back(v);
    }
    if (!extra.empty()) {
      auto H = G;
      H.insert(H.end(), extra.begin(), extra.end());
      return run(H, out, retries);
    }
    for (const MultiPoly* g : nonlin)
      if (g->variables().size() == 2) {
        reason_ = "irreducible binary form " + g->to_string() + " has no rational linear factor";
        return false;
      }
    if (retries > 0) return run_sheared(G, out, retries - 1);
    reason_ = "no rational linear splitting found for " + nonlin.front()->to_string();
    return false;
  }

  const std::string& reason() const { return reason_; }

 private:
  // Solve in coordinates a = T y for a random unipotent T, then map back.
  bool run_sheared(const std::vector<MultiPoly>& G, std::vector<LinearComponent>& out, int retries) {
    std::uniform_int_distribution<int> dist(-3, 3);
    RatMatrix T(n_, std::vector<Rational>(n_, Rational(0)));
    for (int i = 0; i < n_; ++i) {
      T[i][i] = 1;
      for (int j = i + 1; j < n_; ++j) T[i][j] = dist(rng_);
    }
    std::vector<MultiPoly> img;
    for (int i = 0; i < n_; ++i) img.push_back(MultiPoly::linear(T[i]));
    std::vector<MultiPoly> H;
    for (const auto& g : G) H.push_back(g.substitute(img));
    std::vector<LinearComponent> local;
    if (!run(H, local, retries)) return false;
    for (const auto& c : local) {
      // Rows of S map as a = T y.
      RatMatrix S;
      for (const auto& y : c.S) {
        std::vector<Rational> a(n_, Rational(0));
        for (int i = 0; i < n_; ++i)
          for (int j = 0; j < n_; ++j) a[i] += T[i][j] * y[j];
        S.push_back(a);
      }
      std::vector<MultiPoly> forms;
      if (S.empty()) {
        for (int i = 0; i < n_; ++i) forms.push_back(MultiPoly::var(n_, i));
      } else {
        for (const auto& w : nullspace(S)) forms.push_back(MultiPoly::linear(w));
      }
      out.push_back(make_component(forms, n_));
    }
    return true;
  }

  int n_;
  std::mt19937 rng_;
  std::string reason_;
};

bool same_component(const LinearComponent& a, const LinearComponent& b) {
  return a.dim() == b.dim() && component_contains(a, b);
}

}  // namespace

Decomposition linear_decompose(const std::vector<MultiPoly>& gens, int nvars) {
  std::vector<MultiPoly> G;
  for (const auto& g : gens) {
    if (g.nvars() != nvars) throw std::invalid_argument("linear_decompose: variable count mismatch");
    if (!g.is_homogeneous()) throw std::invalid_argument("linear_decompose: generators must be homogeneous");
    if (!g.is_zero()) G.push_back(g);
  }
  std::vector<LinearComponent> comps;
  if (G.empty()) {
    comps.push_back(make_component({}, nvars));
    return comps;
  }
  Splitter sp(nvars);
  if (!sp.run(G, comps, 2)) return NonLinearSignal{sp.reason()};
  // Homogeneous gens always vanish at 0.
  if (comps.empty()) {
    std::vector<MultiPoly> all;
    for (int i = 0; i < nvars; ++i) all.push_back(MultiPoly::var(nvars, i));
    comps.push_back(make_component(all, nvars));
  }
  std::vector<LinearComponent> kept;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    bool drop = false;
    for (std::size_t j = 0; j < comps.size() && !drop; ++j) {
      if (i == j || !component_contains(comps[j], comps[i])) continue;
      if (!same_component(comps[i], comps[j]) || j < i) drop = true;
    }
    if (!drop) kept.push_back(comps[i]);
  }
  // Certificate: every generator vanishes identically on every component.
  for (const auto& c : kept) {
    if (c.S.empty()) continue;
    const int v = c.dim();
    std::vector<MultiPoly> img(nvars, MultiPoly(v));
    for (int i = 0; i < nvars; ++i) {
      std::vector<Rational> col(v);
      for (int t = 0; t < v; ++t) col[t] = c.S[t][i];
      img[i] = MultiPoly::linear(col);
    }
    for (const auto& g : G)
      if (!g.substitute(img).is_zero())
        throw std::logic_error("linear_decompose: component " + component_to_string(c) + " does not lie on the variety");
  }
  std::sort(kept.begin(), kept.end(), [](const LinearComponent& a, const LinearComponent& b) {
    if (a.dim() != b.dim()) return a.dim() > b.dim();
    return a.S > b.S;
  });
  return kept;
}

}  // namespace msolve
