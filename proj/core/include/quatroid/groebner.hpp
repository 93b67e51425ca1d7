#pragma once

#include <optional>

#include "quatroid/fraction.hpp"

namespace quatroid {

struct BudgetExceeded : std::runtime_error {
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Global default S-pair budget for Buchberger runs (0 = unlimited).
size_t default_spair_budget();
void set_default_spair_budget(size_t);

/// Polynomial ideal with a lazily computed reduced Groebner basis
/// (degrevlex, Buchberger with normal pair selection). The reduced basis is
/// canonical for the ring's term order: generators content-normalized,
/// interreduced, sorted ascending by leading term.
class PolyIdeal {
 public:
  PolyIdeal(std::shared_ptr<const PolyRing> ring, std::vector<Poly> generators);

  const std::shared_ptr<const PolyRing>& ring() const { return ring_; }
  const std::vector<Poly>& generators() const { return gens_; }

  const std::vector<Poly>& groebner(size_t spair_budget = default_spair_budget()) const;
  bool groebner_ready() const { return gb_.has_value(); }

  Poly normal_form(const Poly& p, size_t spair_budget = default_spair_budget()) const;
  bool contains(const Poly& p, size_t spair_budget = default_spair_budget()) const;
  bool contains_one(size_t spair_budget = default_spair_budget()) const;
  bool is_zero_ideal() const;

 private:
  std::shared_ptr<const PolyRing> ring_;
  std::vector<Poly> gens_;
  mutable std::optional<std::vector<Poly>> gb_;
};

/// Full reduction of p by a list of polynomials (not necessarily a GB).
Poly reduce_by(const Poly& p, const std::vector<Poly>& basis);

/// Triangular solving of a Groebner basis: repeatedly rewrites variables
/// that occur linearly. Solved values are fractions over the free
/// variables; generators not consumed stay as the residual.
struct SubstitutionResult {
  std::map<std::string, FracElem> solved;
  std::vector<Poly> residual;
  std::vector<std::string> free_vars;
};

/// If constant_coeff_only, a variable is solved only when its coefficient is
/// a nonzero constant (no solutions are lost); otherwise polynomial
/// coefficients are inverted in the fraction field, as in hand derivations.
SubstitutionResult extract_substitutions(const PolyIdeal& ideal, bool constant_coeff_only = false);

}  // namespace quatroid
