#pragma once

#include "quatroid/groebner.hpp"
#include "quatroid/matroid.hpp"

namespace quatroid {

/// Presentation of a partial field: ambient indeterminates over Q, a
/// defining ideal (empty for the function-field cases), and a list of
/// multiplicative generators that always contains -1. Finite fields are
/// carried by field_order with no indeterminates.
struct PartialFieldPresentation {
  std::string name;
  std::shared_ptr<const PolyRing> ring;
  std::vector<Poly> defining_ideal;
  std::vector<FracElem> generators;
  int field_order = 0;

  bool is_field() const { return field_order != 0; }
};

/// Named presentations: U2, K2, P4, G, PPap, PT, or "GF(q)".
PartialFieldPresentation pf_catalog(const std::string& name);
std::vector<std::string> pf_catalog_names();

struct MembershipResult {
  bool member = false;
  std::map<std::string, int> exponents;  // certificate: generator text -> exponent
  std::string reason;
};

/// x = 0 or x = +-(product of generators^e). Function-field presentations
/// use trial division by the generator polynomials; a golden-type quadratic
/// defining ideal switches to the exact unit-norm / discrete-log test.
/// Division stalls report False with a reason, never a false positive.
MembershipResult pf_membership(const FracElem& x, const PartialFieldPresentation& pf);
MembershipResult membership_against(const FracElem& x, const std::vector<FracElem>& generators,
                                    const std::vector<Poly>& residual_ideal);

struct PMatrixResult {
  bool ok = true;
  std::vector<std::string> witness_rows, witness_cols;
  std::string witness_det;
};

/// Checks every square submatrix determinant for membership.
PMatrixResult pf_is_P_matrix(const std::vector<std::vector<FracElem>>& a, const std::vector<std::string>& row_labels,
                             const std::vector<std::string>& col_labels, const PartialFieldPresentation& pf);

/// Exhaustive search for a partial-field homomorphism into GF(q): an
/// assignment of the ambient variables with the defining ideal satisfied
/// and every generator (numerator and denominator) nonzero.
std::optional<std::map<std::string, std::string>> pf_hom_to_field(const PartialFieldPresentation& pf, int q);

struct CheckPFResult {
  bool ok = true;
  std::vector<std::string> failing_basis;
  std::string failing_det;
  FracElem failing_det_value{PolyRing::make({})};
};

/// For every basis of m, the corresponding subdeterminant of avar must be a
/// member of the group generated by `generators` (extra_determinants are
/// pre-declared known products); nonbasis subdeterminants must reduce to
/// zero modulo the residual ideal, otherwise the representation is
/// inconsistent and a domain_error is thrown.
CheckPFResult check_partial_field(const RepresentedMatroid& m, const std::vector<std::vector<FracElem>>& avar,
                                  const std::vector<std::string>& columns, const std::vector<FracElem>& generators,
                                  const std::vector<FracElem>& extra_determinants,
                                  const std::vector<Poly>& residual_ideal);

}  // namespace quatroid
