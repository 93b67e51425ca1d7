#include "quatroid/groebner.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <set>

namespace quatroid {

namespace {
std::atomic<size_t> g_spair_budget{400000};
}

size_t default_spair_budget() { return g_spair_budget.load(); }
void set_default_spair_budget(size_t b) { g_spair_budget.store(b); }

Poly reduce_by(const Poly& p, const std::vector<Poly>& basis) {
  const auto& r = p.ring();
  Poly rem(r), h = p;
  while (!h.is_zero()) {
    bool reduced = false;
    for (const auto& g : basis) {
      if (g.is_zero()) continue;
      if (expo_divides(g.leading_expo(), h.leading_expo())) {
        Rat c = r->p == 0 ? h.leading_coeff() / g.leading_coeff()
                          : r->cnorm(h.leading_coeff() * r->cinv(g.leading_coeff()));
        h = h - g.mul_monomial(expo_sub(h.leading_expo(), g.leading_expo()), c);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      rem.add_term(h.leading_expo(), h.leading_coeff());
      h = h - Poly::monomial(r, h.leading_expo(), h.leading_coeff());
    }
  }
  return rem;
}

namespace {

Poly s_poly(const Poly& f, const Poly& g) {
  const auto& r = f.ring();
  Expo l = expo_lcm(f.leading_expo(), g.leading_expo());
  Rat cf = r->cinv(f.leading_coeff()), cg = r->cinv(g.leading_coeff());
  return f.mul_monomial(expo_sub(l, f.leading_expo()), cf) - g.mul_monomial(expo_sub(l, g.leading_expo()), cg);
}

std::vector<Poly> buchberger(const std::shared_ptr<const PolyRing>& ring, std::vector<Poly> gens,
                             size_t spair_budget) {
  std::vector<Poly> basis;
  for (auto& g : gens)
    if (!g.is_zero()) basis.push_back(g.normalized());
  if (basis.empty()) return {};

  struct Pair {
    size_t i, j;
    Expo lcm;
  };
  DegRevLexGreater gt;
  auto lcm_less = [&](const Pair& a, const Pair& b) {
    if (a.lcm != b.lcm) return gt(b.lcm, a.lcm);
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  };

  std::vector<Pair> pending;
  std::set<std::pair<size_t, size_t>> done;
  auto push_pairs = [&](size_t k) {
    for (size_t i = 0; i < k; ++i)
      pending.push_back({i, k, expo_lcm(basis[i].leading_expo(), basis[k].leading_expo())});
  };
  for (size_t k = 1; k < basis.size(); ++k) push_pairs(k);

  size_t reductions = 0;
  while (!pending.empty()) {
    auto it = std::min_element(pending.begin(), pending.end(), lcm_less);
    Pair pr = *it;
    pending.erase(it);
    done.insert({pr.i, pr.j});
    const Poly &f = basis[pr.i], &g = basis[pr.j];
    // first Buchberger criterion: coprime leading terms
    Expo prod(ring->nvars(), 0);
    bool coprime = true;
    for (int v = 0; v < ring->nvars(); ++v) {
      prod[v] = static_cast<uint16_t>(f.leading_expo()[v] + g.leading_expo()[v]);
      if (f.leading_expo()[v] && g.leading_expo()[v]) coprime = false;
    }
    if (coprime) continue;
    // chain criterion
    bool chained = false;
    for (size_t k = 0; k < basis.size() && !chained; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (!expo_divides(basis[k].leading_expo(), pr.lcm)) continue;
      auto key1 = std::minmax(pr.i, k), key2 = std::minmax(pr.j, k);
      if (done.count({key1.first, key1.second}) && done.count({key2.first, key2.second})) chained = true;
    }
    if (chained) continue;

    if (spair_budget && ++reductions > spair_budget)
      throw BudgetExceeded("Groebner S-pair budget exceeded (" + std::to_string(spair_budget) + ")");
    Poly rem = reduce_by(s_poly(f, g), basis);
    if (rem.is_zero()) continue;
    basis.push_back(rem.normalized());
    push_pairs(basis.size() - 1);
  }

  // minimalize: drop generators whose leading term another one divides
  std::vector<Poly> minimal;
  for (size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      if (expo_divides(basis[j].leading_expo(), basis[i].leading_expo())) {
        if (basis[j].leading_expo() == basis[i].leading_expo()) {
          redundant = j < i;  // keep the first among equal leading terms
        } else {
          redundant = true;
        }
      }
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  // interreduce to the unique reduced basis
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < minimal.size(); ++i) {
      std::vector<Poly> others;
      for (size_t j = 0; j < minimal.size(); ++j)
        if (j != i) others.push_back(minimal[j]);
      Poly red = reduce_by(minimal[i], others);
      if (red.is_zero()) {
        minimal.erase(minimal.begin() + static_cast<long>(i));
        changed = true;
        break;
      }
      red = red.normalized();
      if (red != minimal[i]) {
        minimal[i] = red;
        changed = true;
      }
    }
  }
  std::sort(minimal.begin(), minimal.end(), poly_less);
  return minimal;
}

}  // namespace

PolyIdeal::PolyIdeal(std::shared_ptr<const PolyRing> ring, std::vector<Poly> generators)
    : ring_(std::move(ring)), gens_(std::move(generators)) {
  for (const auto& g : gens_)
    if (!g.ring()->compatible(*ring_)) throw std::invalid_argument("generator from a different ring");
}

const std::vector<Poly>& PolyIdeal::groebner(size_t spair_budget) const {
  if (!gb_) gb_ = buchberger(ring_, gens_, spair_budget);
  return *gb_;
}

Poly PolyIdeal::normal_form(const Poly& p, size_t spair_budget) const { return reduce_by(p, groebner(spair_budget)); }

bool PolyIdeal::contains(const Poly& p, size_t spair_budget) const { return normal_form(p, spair_budget).is_zero(); }

bool PolyIdeal::contains_one(size_t spair_budget) const {
  const auto& gb = groebner(spair_budget);
  return gb.size() == 1 && gb[0].is_constant() && !gb[0].is_zero();
}

bool PolyIdeal::is_zero_ideal() const {
  for (const auto& g : gens_)
    if (!g.is_zero()) return false;
  return true;
}

SubstitutionResult extract_substitutions(const PolyIdeal& ideal, bool constant_coeff_only) {
  const auto& ring = ideal.ring();
  const auto& gb = ideal.groebner();
  SubstitutionResult out;

  // var -> (coeff, rest, source) with solved value -rest/coeff
  std::map<int, std::tuple<Poly, Poly, Poly>> raw;
  std::vector<Poly> residual;
  for (const auto& g : gb) {
    bool used = false;
    for (int v = 0; v < ring->nvars() && !used; ++v) {
      if (raw.count(v)) continue;
      Poly coeff(ring), rest(ring);
      if (!g.split_linear(v, coeff, rest)) continue;
      if (constant_coeff_only && !coeff.is_constant()) continue;
      if (coeff.is_zero()) continue;
      raw.emplace(v, std::make_tuple(coeff, rest, g));
      used = true;
    }
    if (!used) residual.push_back(g);
  }

  // evict members of dependency cycles so back-substitution terminates
  auto depends_on = [&](int v, int w) {
    const auto& [coeff, rest, src] = raw.at(v);
    return coeff.degree_in(w) > 0 || rest.degree_in(w) > 0;
  };
  while (true) {
    // find a cycle with a plain DFS over solved vars
    std::map<int, int> state;  // 0 unseen, 1 active, 2 done
    int evict = -1;
    std::function<bool(int)> dfs = [&](int v) -> bool {
      state[v] = 1;
      for (const auto& [w, t] : raw) {
        if (w == v || !depends_on(v, w)) continue;
        if (state[w] == 1) {
          evict = std::max(v, w);
          return true;
        }
        if (state[w] == 0 && dfs(w)) return true;
      }
      state[v] = 2;
      return false;
    };
    bool cyclic = false;
    for (const auto& [v, t] : raw)
      if (state[v] == 0 && dfs(v)) {
        cyclic = true;
        break;
      }
    if (!cyclic) break;
    residual.push_back(std::get<2>(raw.at(evict)));
    raw.erase(evict);
  }

  // back-substitute until every solved value mentions free variables only
  std::map<int, FracElem> values;
  for (const auto& [v, cr] : raw) values.emplace(v, FracElem(-std::get<1>(cr), std::get<0>(cr)));
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto& [v, val] : values) {
      std::map<int, FracElem> other;
      for (const auto& [w, wal] : values)
        if (w != v) other.emplace(w, wal);
      FracElem n = poly_substitute(val.num(), other);
      FracElem d = poly_substitute(val.den(), other);
      FracElem next = n / d;
      if (next != val) {
        val = next;
        changed = true;
      }
    }
  }

  for (const auto& [v, val] : values) out.solved.emplace(ring->vars[v], val);
  std::sort(residual.begin(), residual.end(), poly_less);
  out.residual = residual;
  for (int v = 0; v < ring->nvars(); ++v)
    if (!values.count(v)) out.free_vars.push_back(ring->vars[v]);
  return out;
}

}  // namespace quatroid
