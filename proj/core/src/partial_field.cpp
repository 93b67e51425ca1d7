#include "quatroid/partial_field.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <unordered_set>

namespace quatroid {

namespace {

std::vector<FracElem> parse_gens(const std::shared_ptr<const PolyRing>& r, const std::vector<std::string>& texts) {
  std::vector<FracElem> out;
  for (const auto& t : texts) out.push_back(FracElem::parse(r, t));
  return out;
}

}  // namespace

std::vector<std::string> pf_catalog_names() { return {"U2", "K2", "P4", "G", "PPap", "PT"}; }

PartialFieldPresentation pf_catalog(const std::string& name) {
  PartialFieldPresentation pf;
  pf.name = name;
  if (name == "U2") {
    pf.ring = PolyRing::make({"a1", "a2"});
    pf.generators = parse_gens(pf.ring, {"-1", "a1", "a2", "a1 - 1", "a2 - 1", "a1 - a2"});
  } else if (name == "K2") {
    pf.ring = PolyRing::make({"a"});
    pf.generators = parse_gens(pf.ring, {"-1", "a", "a - 1", "a + 1"});
  } else if (name == "P4") {
    pf.ring = PolyRing::make({"a"});
    pf.generators = parse_gens(pf.ring, {"-1", "a", "a - 1", "a + 1", "a - 2"});
  } else if (name == "G") {
    pf.ring = PolyRing::make({"t"});
    pf.defining_ideal = {Poly::parse(pf.ring, "t^2 - t - 1")};
    pf.generators = parse_gens(pf.ring, {"-1", "t"});
  } else if (name == "PPap") {
    pf.ring = PolyRing::make({"a1", "a2"});
    pf.generators = parse_gens(pf.ring, {"-1", "a1", "a2", "a1 - 1", "a2 - 1", "a1 - a2", "a1*a2 - a1 + 1",
                                         "a1*a2 - a2 + 1"});
  } else if (name == "PT") {
    pf.ring = PolyRing::make({"a"});
    pf.generators = parse_gens(pf.ring, {"-1", "a", "a + 1", "a - 1", "a + 2", "2*a + 1"});
  } else if (name.rfind("GF(", 0) == 0 && name.back() == ')') {
    pf.field_order = std::stoi(name.substr(3, name.size() - 4));
    (void)Field::gf(pf.field_order);
    pf.ring = PolyRing::make({});
    pf.generators = parse_gens(pf.ring, {"-1"});
  } else {
    throw std::invalid_argument("unknown partial field '" + name + "'");
  }
  return pf;
}

namespace {

// ---- golden-type quadratic quotient: exact unit test and discrete log ----
//
// The residual is v^2 - v - 1 or v^2 + v - 1 in one variable. Elements are
// a + b*tau with tau^2 = tau + 1 (after the sign flip v -> -v in the second
// case); units of Z[tau] are exactly +-tau^k.

struct GoldenCtx {
  int var = -1;
  bool flip = false;  // residual root theta = -tau
};

std::optional<GoldenCtx> golden_context(const std::vector<Poly>& residual) {
  if (residual.size() != 1) return std::nullopt;
  const Poly& q = residual[0];
  auto vars = q.support_vars();
  if (vars.size() != 1 || q.degree() != 2) return std::nullopt;
  int v = vars[0];
  Poly qn = q.normalized();
  auto r = q.ring();
  Poly plus = Poly::parse(r, r->vars[v] + "^2 + " + r->vars[v] + " - 1");
  Poly minus = Poly::parse(r, r->vars[v] + "^2 - " + r->vars[v] + " - 1");
  if (qn == minus) return GoldenCtx{v, false};
  if (qn == plus) return GoldenCtx{v, true};
  return std::nullopt;
}

struct GoldenElem {
  Rat a, b;  // a + b*tau
};

// reduce a polynomial in the quadratic quotient to a + b*tau
GoldenElem golden_reduce(const Poly& p, const GoldenCtx& g) {
  // tau^k = F(k-1) + F(k)*tau with Fibonacci F; theta = flip ? -tau : tau
  GoldenElem out{Rat(0), Rat(0)};
  for (const auto& [e, c] : p.terms()) {
    int deg = e[g.var];
    for (size_t v = 0; v < e.size(); ++v)
      if (static_cast<int>(v) != g.var && e[v] != 0)
        throw std::invalid_argument("golden reduction: polynomial involves other variables");
    // theta^deg
    Rat ta(deg == 0 ? 1 : 0), tb(deg == 0 ? 0 : 1);
    if (deg > 0) {
      // compute theta^deg: theta = s*tau with sign handling via tau-arithmetic
      Rat xa(0), xb(1);  // tau
      if (g.flip) {
        xa = 0;
        xb = -1;  // theta = -tau
      }
      Rat ra(1), rb(0);
      for (int k = 0; k < deg; ++k) {
        // (ra + rb t)(xa + xb t) = ra xa + (ra xb + rb xa) t + rb xb t^2; t^2 = t + 1
        Rat na = ra * xa + rb * xb;
        Rat nb = ra * xb + rb * xa + rb * xb;
        ra = na;
        rb = nb;
      }
      ta = ra;
      tb = rb;
    }
    out.a += c * ta;
    out.b += c * tb;
  }
  return out;
}

Rat golden_norm(const GoldenElem& x) { return x.a * x.a + x.a * x.b - x.b * x.b; }

GoldenElem golden_mul(const GoldenElem& x, const GoldenElem& y) {
  return {x.a * y.a + x.b * y.b, x.a * y.b + x.b * y.a + x.b * y.b};
}

GoldenElem golden_inv(const GoldenElem& x) {
  // (a + b t)^-1 = (conj)/(norm), conj(a + b t) = a + b - b t
  Rat n = golden_norm(x);
  if (n == 0) throw std::domain_error("golden inverse of zero");
  return {(x.a + x.b) / n, -x.b / n};
}

bool golden_is_integral(const GoldenElem& x) { return denominator(x.a) == 1 && denominator(x.b) == 1; }

// x must be a unit +-tau^k; returns (k, negative?) or nullopt
std::optional<std::pair<long long, bool>> golden_dlog(const GoldenElem& x) {
  Rat n = golden_norm(x);
  if (!golden_is_integral(x) || (n != 1 && n != -1)) return std::nullopt;
  auto height = [](const GoldenElem& e) { return (e.a < 0 ? -e.a : e.a) + (e.b < 0 ? -e.b : e.b); };
  Rat bound = height(x);
  GoldenElem tau{Rat(0), Rat(1)}, tau_inv{Rat(-1), Rat(1)};  // tau^-1 = tau - 1
  for (int dir : {+1, -1}) {
    GoldenElem y{Rat(1), Rat(0)};
    for (long long k = 0; k <= 4096; ++k) {
      if (x.a == y.a && x.b == y.b) return std::make_pair(dir * k, false);
      if (x.a == -y.a && x.b == -y.b) return std::make_pair(dir * k, true);
      y = golden_mul(y, dir > 0 ? tau : tau_inv);
      if (k > 2 && height(y) > bound + 2) break;  // powers outgrow x monotonically
    }
  }
  return std::nullopt;
}

MembershipResult golden_membership(const FracElem& x, const std::vector<FracElem>& gens, const GoldenCtx& g,
                                   const PolyIdeal& residual) {
  MembershipResult out;
  Poly num = residual.normal_form(x.num()), den = residual.normal_form(x.den());
  if (num.is_zero()) {
    out.member = true;
    return out;
  }
  GoldenElem xe = golden_mul(golden_reduce(num, g), golden_inv(golden_reduce(den, g)));
  auto xd = golden_dlog(xe);
  if (!xd) {
    out.reason = "not a unit of Z[tau]: " + x.str();
    return out;
  }
  // subgroup of exponents generated by the generators' dlogs
  long long lat = 0;
  for (const auto& gen : gens) {
    Poly gn = residual.normal_form(gen.num()), gd = residual.normal_form(gen.den());
    if (gn.is_zero()) continue;
    auto gdl = golden_dlog(golden_mul(golden_reduce(gn, g), golden_inv(golden_reduce(gd, g))));
    if (!gdl) {
      out.reason = "generator is not a unit of Z[tau]: " + gen.str();
      return out;
    }
    long long e = gdl->first < 0 ? -gdl->first : gdl->first;
    lat = lat == 0 ? e : std::gcd(lat, e);
  }
  long long k = xd->first < 0 ? -xd->first : xd->first;
  if (k == 0 || (lat != 0 && k % lat == 0)) {
    out.member = true;
    out.exponents["tau"] = static_cast<int>(xd->first);
    return out;
  }
  out.reason = "dlog " + std::to_string(xd->first) + " outside the generated exponent lattice";
  return out;
}

// ---- function-field membership by trial division ----

MembershipResult division_membership(const FracElem& x, const std::vector<FracElem>& gens) {
  MembershipResult out;
  // distinct nonconstant generator polynomials, largest degree first
  std::vector<Poly> gp;
  for (const auto& g : gens)
    for (const Poly* part : {&g.num(), &g.den()}) {
      if (part->is_constant()) continue;
      Poly n = part->normalized();
      bool seen = false;
      for (const auto& h : gp) seen = seen || h == n;
      if (!seen) gp.push_back(n);
    }
  std::stable_sort(gp.begin(), gp.end(), [](const Poly& a, const Poly& b) { return a.degree() > b.degree(); });

  Poly num = x.num(), den = x.den();
  std::map<std::string, int> expo;
  bool progress = true;
  while (progress) {
    progress = false;
    for (const auto& g : gp) {
      Poly q(num.ring());
      while (!num.is_constant() && num.try_div_exact(g, q)) {
        num = q;
        ++expo[g.str()];
        progress = true;
      }
      while (!den.is_constant() && den.try_div_exact(g, q)) {
        den = q;
        --expo[g.str()];
        progress = true;
      }
    }
  }
  if (!num.is_constant() || !den.is_constant()) {
    out.reason = "division stalled at " + num.str() + " / " + den.str();
    return out;
  }
  Rat c = num.constant_coeff() / den.constant_coeff();
  if (c == 1 || c == -1) {
    out.member = true;
    out.exponents = std::move(expo);
    return out;
  }
  out.reason = "leftover constant " + FracElem::of(Poly::constant(x.ring(), c)).str() + " is not a unit";
  return out;
}

}  // namespace

MembershipResult membership_against(const FracElem& x, const std::vector<FracElem>& generators,
                                    const std::vector<Poly>& residual_ideal) {
  MembershipResult out;
  if (x.is_zero()) {
    out.member = true;
    return out;
  }
  if (residual_ideal.empty()) return division_membership(x, generators);
  auto g = golden_context(residual_ideal);
  if (g) {
    PolyIdeal residual(x.ring(), residual_ideal);
    return golden_membership(x, generators, *g, residual);
  }
  // sound fallback: try plain division (valid since an identity of
  // polynomials holds in any quotient); otherwise report not-known
  auto div = division_membership(x, generators);
  if (div.member) return div;
  out.reason = "membership undecided modulo this defining ideal: " + div.reason;
  return out;
}

MembershipResult pf_membership(const FracElem& x, const PartialFieldPresentation& pf) {
  if (pf.is_field()) {
    MembershipResult out;
    out.member = true;  // every field element, including 0, lies in GF(q)
    return out;
  }
  return membership_against(x, pf.generators, pf.defining_ideal);
}

PMatrixResult pf_is_P_matrix(const std::vector<std::vector<FracElem>>& a, const std::vector<std::string>& row_labels,
                             const std::vector<std::string>& col_labels, const PartialFieldPresentation& pf) {
  PMatrixResult res;
  if (pf.is_field()) return res;
  const int m = static_cast<int>(a.size());
  const int n = m == 0 ? 0 : static_cast<int>(a[0].size());
  const int kmax = std::min(m, n);
  std::function<bool(int)> check = [&](int k) -> bool {
    // iterate all k-subsets of rows and columns
    std::vector<int> ri(k), ci(k);
    std::function<bool(int, int)> rec_rows = [&](int pos, int start) -> bool {
      if (pos == k) {
        std::function<bool(int, int)> rec_cols = [&](int cpos, int cstart) -> bool {
          if (cpos == k) {
            std::vector<std::vector<FracElem>> sub(k, std::vector<FracElem>(k, FracElem(pf.ring)));
            for (int i = 0; i < k; ++i)
              for (int j = 0; j < k; ++j) sub[i][j] = a[ri[i]][ci[j]];
            FracElem d = frac_det(sub);
            auto mem = membership_against(d, pf.generators, pf.defining_ideal);
            if (!mem.member) {
              res.ok = false;
              for (int i = 0; i < k; ++i) res.witness_rows.push_back(row_labels[ri[i]]);
              for (int j = 0; j < k; ++j) res.witness_cols.push_back(col_labels[ci[j]]);
              res.witness_det = d.str();
              return false;
            }
            return true;
          }
          for (int c = cstart; c < n; ++c) {
            ci[cpos] = c;
            if (!rec_cols(cpos + 1, c + 1)) return false;
          }
          return true;
        };
        return rec_cols(0, 0);
      }
      for (int r = start; r < m; ++r) {
        ri[pos] = r;
        if (!rec_rows(pos + 1, r + 1)) return false;
      }
      return true;
    };
    return rec_rows(0, 0);
  };
  for (int k = 1; k <= kmax; ++k)
    if (!check(k)) break;
  return res;
}

std::optional<std::map<std::string, std::string>> pf_hom_to_field(const PartialFieldPresentation& pf, int q) {
  const Field& f = Field::gf(q);
  if (pf.is_field()) throw std::invalid_argument("pf_hom_to_field expects a partial-field presentation");
  const int nv = pf.ring->nvars();
  std::vector<int> assign(nv, 0);
  auto ok = [&]() {
    for (const auto& g : pf.defining_ideal)
      if (g.eval_gf(f, assign) != 0) return false;
    for (const auto& g : pf.generators) {
      if (g.num().eval_gf(f, assign) == 0) return false;
      if (g.den().eval_gf(f, assign) == 0) return false;
    }
    return true;
  };
  // odometer over GF(q)^nv, element codes ascending
  while (true) {
    if (ok()) {
      std::map<std::string, std::string> witness;
      for (int v = 0; v < nv; ++v) witness[pf.ring->vars[v]] = f.element_name(assign[v]);
      return witness;
    }
    int v = nv - 1;
    while (v >= 0 && assign[v] == q - 1) {
      assign[v] = 0;
      --v;
    }
    if (v < 0) return std::nullopt;
    ++assign[v];
  }
}

CheckPFResult check_partial_field(const RepresentedMatroid& m, const std::vector<std::vector<FracElem>>& avar,
                                  const std::vector<std::string>& columns, const std::vector<FracElem>& generators,
                                  const std::vector<FracElem>& extra_determinants,
                                  const std::vector<Poly>& residual_ideal) {
  CheckPFResult res;
  const int r = m.rank();
  if (static_cast<int>(avar.size()) != r) throw std::invalid_argument("check_partial_field: row count != rank");
  std::map<std::string, int> col_of;
  for (size_t j = 0; j < columns.size(); ++j) col_of[columns[j]] = static_cast<int>(j);
  for (const auto& e : m.ground())
    if (!col_of.count(e)) throw std::invalid_argument("check_partial_field: missing column for element " + e);

  std::vector<FracElem> gens = generators;
  gens.insert(gens.end(), extra_determinants.begin(), extra_determinants.end());
  auto ring = avar.empty() || avar[0].empty() ? PolyRing::make({}) : avar[0][0].ring();
  PolyIdeal residual(ring, residual_ideal);

  // walk all r-subsets in ground order; classify via the cached basis set
  const auto& ground = m.ground();
  const int n = static_cast<int>(ground.size());
  std::unordered_set<uint64_t> bset(m.basis_masks().begin(), m.basis_masks().end());
  std::vector<int> idx(r);
  std::function<bool(int, int)> rec = [&](int pos, int start) -> bool {
    if (pos == r) {
      uint64_t mask = 0;
      std::vector<std::string> subset;
      for (int i : idx) {
        subset.push_back(ground[i]);
        mask |= (uint64_t{1} << i);
      }
      std::vector<std::vector<FracElem>> sub(r, std::vector<FracElem>(r, FracElem(ring)));
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) sub[i][j] = avar[i][col_of[subset[j]]];
      FracElem d = frac_det(sub);
      Poly dn = residual_ideal.empty() ? d.num() : residual.normal_form(d.num());
      if (bset.count(mask)) {
        if (dn.is_zero()) {
          throw std::domain_error("inconsistent representation: basis {" + subset[0] + ",...} has zero determinant");
        }
        FracElem reduced(dn, residual_ideal.empty() ? d.den() : residual.normal_form(d.den()));
        auto mem = membership_against(reduced, gens, residual_ideal);
        if (!mem.member) {
          res.ok = false;
          res.failing_basis = subset;
          res.failing_det = reduced.str();
          res.failing_det_value = reduced;
          return false;
        }
      } else {
        if (!dn.is_zero())
          throw std::domain_error("inconsistent representation: nonbasis subdeterminant " + dn.str() +
                                  " is nonzero modulo the residual ideal");
      }
      return true;
    }
    for (int i = start; i < n; ++i) {
      idx[pos] = i;
      if (!rec(pos + 1, i + 1)) return false;
    }
    return true;
  };
  if (r > 0) rec(0, 0);
  return res;
}

}  // namespace quatroid
