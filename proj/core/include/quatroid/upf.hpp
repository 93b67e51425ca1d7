#pragma once

#include "quatroid/partial_field.hpp"

namespace quatroid {

/// Entry-variable representation: a finite-field matrix in standard form
/// plus a Z-coefficient polynomial matrix with the same zero-nonzero
/// pattern. For [I_r|D_r|P0] input the D block stays literal, each P0 column
/// is scaled so its last nonzero entry is 1, and a second 1 in a column is
/// seeded as -1; otherwise a spanning forest of the fundamental graph is
/// fixed to 1. Fresh variables z0, z1, ... are assigned column-major,
/// uppermost entry first.
struct VariableRepresentation {
  RepresentedMatroid matroid;
  ExactMatrix a_fixed;  // r x n standard form, columns scaled
  std::shared_ptr<const PolyRing> ring;
  std::vector<std::vector<Poly>> avar;  // r x n, same column order as a_fixed
  std::vector<std::string> columns;     // a_fixed column labels
  bool clique_template_path = false;    // [I|D|P0] shape detected
};

VariableRepresentation variable_representation(const ExactMatrix& a);

/// Generators are the determinants of the avar submatrices indexed by every
/// nonbasis of the matroid (deduplicated); the Groebner basis is attached
/// lazily via PolyIdeal.
PolyIdeal zero_determinant_ideal(const VariableRepresentation& vr);

struct UpfResult {
  std::vector<Poly> ideal_basis;  // reduced basis of the zero-determinant ideal
  SubstitutionResult subs;
  std::vector<std::vector<FracElem>> avar_solved;  // substituted matrix
  std::vector<std::string> columns;
  std::vector<FracElem> generators;  // verified multiplicative generators (with -1)
  std::vector<Poly> residual;
  int iterations = 0;
  std::string detected_name;  // catalog partial field, or "" when unmatched
};

/// The Appendix pipeline: variable representation, zero-determinant ideal,
/// substitution extraction, then repeated check_partial_field runs, each
/// failure appending the offending determinant as a generator.
UpfResult universal_partial_field(const ExactMatrix& a, std::vector<FracElem> seed_generators = {},
                                  int iteration_cap = 32);

/// Representability of M over GF(q): the entry-variable system plus field
/// equations v^q - v and a single Rabinowitsch generator w*P - 1 (P the
/// product of the distinct basis-determinant normal forms); solvable iff
/// the ideal over GF(char q) does not contain 1.
Tri is_representable_over(const RepresentedMatroid& m, int q, size_t spair_budget = default_spair_budget());

struct CharacteristicReport {
  std::vector<int> primes;
  std::map<int, Tri> at_prime;
  Tri at_zero = Tri::Unknown;
  bool zero_tested = false;
};

/// Solvability of the system over the algebraic closure, characteristic by
/// characteristic; reports only the primes asked about.
CharacteristicReport characteristic_set(const RepresentedMatroid& m, const std::vector<int>& primes = {2, 3, 5, 7, 11, 13},
                                        bool include_zero = true,
                                        size_t spair_budget = default_spair_budget());

/// Independent oracle: exhaustive assignment search over GF(q)^vars.
/// Returns nullopt when the variable count exceeds var_cap.
std::optional<bool> representable_bruteforce(const RepresentedMatroid& m, int q, int var_cap = 8);

}  // namespace quatroid
