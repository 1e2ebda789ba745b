#include "msolve/block.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "msolve/polymat.hpp"

namespace msolve {

RatFun specialize(const ParamRational& u, const std::vector<Rational>& g) {
  Poly n, d;
  for (int i = 0; i < u.params(); ++i) {
    if (g[i] == 0) continue;
    n += u.num[i] * g[i];
    d += u.den[i] * g[i];
  }
  if (d.is_zero()) throw std::domain_error("specialize: denominator vanishes");
  return RatFun(n, d);
}

RatFun specialize_unit(const ParamRational& u, int i) {
  std::vector<Rational> g(u.params(), Rational(0));
  g[i] = 1;
  return specialize(u, g);
}

ParamRational normalize(const ParamRational& u) {
  Poly g;
  for (int i = 0; i < u.params(); ++i) {
    g = gcd(g, u.num[i]);
    g = gcd(g, u.den[i]);
  }
  if (g.is_zero()) throw std::invalid_argument("normalize: zero family");
  int dd = 0, dn = 0;
  for (int i = 0; i < u.params(); ++i) {
    dd = std::max(dd, u.den[i].deg());
    dn = std::max(dn, u.num[i].deg());
  }
  RatMatrix rows;
  for (int i = 0; i < u.params(); ++i) {
    Poly n = exact_div(u.num[i], g), d = exact_div(u.den[i], g);
    std::vector<Rational> row;
    for (int e = 0; e <= dd; ++e) row.push_back(d.coeff(e));
    for (int e = 0; e <= dn; ++e) row.push_back(n.coeff(e));
    rows.push_back(row);
  }
  rref(rows);
  ParamRational out;
  for (const auto& row : rows) {
    std::vector<Rational> d(row.begin(), row.begin() + dd + 1), n(row.begin() + dd + 1, row.end());
    out.den.emplace_back(d);
    out.num.emplace_back(n);
  }
  return out;
}

int num_degree(const ParamRational& u) {
  int d = -1;
  for (const auto& p : u.num) d = std::max(d, p.deg());
  return d;
}

int den_degree(const ParamRational& u) {
  int d = -1;
  for (const auto& p : u.den) d = std::max(d, p.deg());
  return d;
}

bool family_contains(const ParamRational& big, const ParamRational& small) {
  for (int i = 0; i < small.params(); ++i) {
    // sum_j d_j (N_s D_j - N_j D_s) = 0 must have a nonzero solution.
    std::vector<Poly> cols;
    int deg = -1;
    for (int j = 0; j < big.params(); ++j) {
      cols.push_back(small.num[i] * big.den[j] - big.num[j] * small.den[i]);
      deg = std::max(deg, cols.back().deg());
    }
    if (deg < 0) continue;
    RatMatrix A(deg + 1, std::vector<Rational>(big.params()));
    for (int j = 0; j < big.params(); ++j)
      for (int e = 0; e <= deg; ++e) A[e][j] = cols[j].coeff(e);
    if (rank(A) == big.params()) return false;
  }
  return true;
}

ParamPoly ParamPoly::constant(int v, const Poly& p) {
  ParamPoly out(v);
  if (!p.is_zero()) out.terms_[std::vector<int>(v, 0)] = p;
  return out;
}

ParamPoly ParamPoly::linear(const std::vector<Poly>& forms) {
  return constant(static_cast<int>(forms.size()), Poly(1)).times_linear(forms);
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
  for (const auto& [e, p] : o.terms_) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, p);
    } else {
      it->second += p;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
  ParamPoly out(a.v_);
  for (const auto& [ea, pa] : a.terms_)
    for (const auto& [eb, pb] : b.terms_) {
      std::vector<int> e(ea);
      for (int i = 0; i < a.v_; ++i) e[i] += eb[i];
      ParamPoly t(a.v_);
      t.terms_[e] = pa * pb;
      out += t;
    }
  return out;
}

ParamPoly ParamPoly::times_linear(const std::vector<Poly>& forms) const {
  ParamPoly out(v_);
  for (const auto& [e, p] : terms_)
    for (int i = 0; i < v_; ++i) {
      if (forms[i].is_zero()) continue;
      std::vector<int> f(e);
      ++f[i];
      ParamPoly t(v_);
      t.terms_[f] = p * forms[i];
      out += t;
    }
  return out;
}

ParamPoly ParamPoly::scale(const Poly& p) const {
  ParamPoly out(v_);
  if (p.is_zero()) return out;
  for (const auto& [e, c] : terms_) out.terms_[e] = c * p;
  return out;
}

ParamPoly riccati_cleared_param(const MahlerOperator& L, const ParamRational& u) {
  const int r = L.order(), b = L.radix(), v = u.params();
  std::vector<std::vector<Poly>> MP(r), MQ(r);
  for (int j = 0; j < r; ++j)
    for (int i = 0; i < v; ++i) {
      MP[j].push_back(mahler_pow(u.num[i], b, j));
      MQ[j].push_back(mahler_pow(u.den[i], b, j));
    }
  ParamPoly acc(v);
  for (int k = 0; k <= r; ++k) {
    if (L.coeff(k).is_zero()) continue;
    ParamPoly term = ParamPoly::constant(v, L.coeff(k));
    for (int j = 0; j < k; ++j) term = term.times_linear(MP[j]);
    for (int j = k; j < r; ++j) term = term.times_linear(MQ[j]);
    acc += term;
  }
  return acc;
}

bool riccati_vanishes(const MahlerOperator& L, const ParamRational& u) {
  return riccati_cleared_param(L, u).is_zero();
}

Rational leading_ratio(const RatFun& u) {
  const Poly& n = u.num();
  const Poly& d = u.den();
  if (n.is_zero()) return 0;
  return n.coeff(n.val()) / d.coeff(d.val());
}

SolutionBlock make_block(const ParamRational& u, int q) {
  SolutionBlock blk;
  blk.u = normalize(u);
  blk.q = q;
  blk.lambda = leading_ratio(specialize_unit(blk.u, 0));
  return blk;
}

SolutionBlock reramify(const SolutionBlock& blk, int q) {
  if (q % blk.q != 0) throw std::invalid_argument("reramify: not a multiple");
  const int k = q / blk.q;
  SolutionBlock out = blk;
  out.q = q;
  for (auto& p : out.u.num) p = p.compose_pow(k);
  for (auto& p : out.u.den) p = p.compose_pow(k);
  return out;
}

SolutionBlock simplify_ramification(const SolutionBlock& blk) {
  SolutionBlock out = blk;
  for (int k = blk.q; k > 1; --k) {
    if (blk.q % k != 0) continue;
    bool ok = true;
    for (int i = 0; i < blk.s() && ok; ++i)
      ok = blk.u.num[i].divisible_exponents(k) && blk.u.den[i].divisible_exponents(k);
    if (!ok) continue;
    out.q = blk.q / k;
    for (auto& p : out.u.num) p = p.deflate(k);
    for (auto& p : out.u.den) p = p.deflate(k);
    return out;
  }
  return out;
}

namespace {

int valuation_of(const SolutionBlock& blk) {
  RatFun u = specialize_unit(blk.u, 0);
  return u.num().val() - u.den().val();
}

}  // namespace

void sort_blocks(std::vector<SolutionBlock>& blocks) {
  std::vector<std::tuple<Rational, Rational, int, std::string>> keys;
  for (const auto& b : blocks)
    keys.emplace_back(b.lambda, Rational(valuation_of(b), b.q),
                      std::max(num_degree(b.u), den_degree(b.u)), block_to_string(b));
  std::vector<std::size_t> idx(blocks.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
  std::vector<SolutionBlock> out;
  for (auto i : idx) out.push_back(blocks[i]);
  blocks = std::move(out);
}

namespace {

bool block_contains(const SolutionBlock& big, const SolutionBlock& small) {
  if (small.s() > big.s()) return false;
  int q = std::lcm(big.q, small.q);
  return family_contains(reramify(big, q).u, reramify(small, q).u);
}

}  // namespace

std::vector<SolutionBlock> dedupe_blocks(std::vector<SolutionBlock> blocks) {
  for (auto& b : blocks) b = simplify_ramification(make_block(b.u, b.q));
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < blocks.size() && !changed; ++i)
      for (std::size_t j = 0; j < blocks.size() && !changed; ++j) {
        if (i == j) continue;
        if (block_contains(blocks[j], blocks[i])) {
          blocks.erase(blocks.begin() + static_cast<long>(i));
          changed = true;
        }
      }
  }
  sort_blocks(blocks);
  return blocks;
}

bool same_blocks(const std::vector<SolutionBlock>& a, const std::vector<SolutionBlock>& b) {
  if (a.size() != b.size()) return false;
  for (const auto& x : a) {
    bool found = false;
    for (const auto& y : b)
      if (block_contains(x, y) && block_contains(y, x)) found = true;
    if (!found) return false;
  }
  return true;
}

std::string param_to_string(const ParamRational& u, const std::string& var, int q) {
  auto form = [&](const std::vector<Poly>& f) {
    if (f.size() == 1) return f[0].to_string(var, q);
    std::string s;
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (f[i].is_zero()) continue;
      if (!s.empty()) s += " + ";
      s += "g" + std::to_string(i + 1) + "*(" + f[i].to_string(var, q) + ")";
    }
    return s.empty() ? std::string("0") : s;
  };
  return "(" + form(u.num) + ")/(" + form(u.den) + ")";
}

std::string block_to_string(const SolutionBlock& blk) {
  return param_to_string(blk.u, "x", blk.q);
}

}  // namespace msolve
