#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "quatroid/matrix.hpp"

namespace quatroid {

enum class Tri { False, True, Unknown };

/// Certificate for a minor claim: contract, then delete, then relabel.
struct MinorWitness {
  std::vector<std::string> contracted;
  std::vector<std::string> deleted;
  std::map<std::string, std::string> mapping;  // ground(N) -> surviving element of M
};

/// A matroid carried by a standard-form representation [I_r | A'] over a
/// fixed field. Values are immutable; the basis cache is built once on
/// demand. Ground sets are capped at 64 elements.
class RepresentedMatroid {
 public:
  static RepresentedMatroid from_matrix(const ExactMatrix& a);

  const Field& field() const;
  const ExactMatrix& rep() const;  // standard form [I_r | A']
  ExactMatrix rep_in_ground_order() const;
  const std::vector<std::string>& ground() const;
  int rank() const;
  int size() const;

  int rank_of(const std::vector<std::string>& subset) const;
  bool is_basis(const std::vector<std::string>& subset) const;
  bool is_loop(const std::string& e) const;
  std::vector<std::vector<std::string>> parallel_classes() const;  // non-loops, ground order
  bool is_simple() const;

  const std::vector<uint64_t>& basis_masks() const;  // sorted ascending
  std::vector<std::vector<std::string>> bases() const;
  std::vector<std::vector<std::string>> nonbases() const;
  long long n_bases() const { return static_cast<long long>(basis_masks().size()); }

  std::vector<std::string> fundamental_circuit(const std::vector<std::string>& basis, const std::string& e) const;

  RepresentedMatroid dual() const;
  RepresentedMatroid delete_elements(const std::vector<std::string>& s) const;
  RepresentedMatroid contract_elements(const std::vector<std::string>& s) const;
  RepresentedMatroid simplify() const;
  int epsilon() const;

  /// Abstract-matroid equality: identical ground label set and identical
  /// basis sets.
  bool equals(const RepresentedMatroid& n) const;

  /// Abstract-matroid isomorphism by invariant-pruned backtracking. Returns
  /// the element bijection ground(*this) -> ground(n) on success.
  std::optional<std::map<std::string, std::string>> isomorphism(const RepresentedMatroid& n) const;
  bool is_isomorphic(const RepresentedMatroid& n) const { return isomorphism(n).has_value(); }

  struct MinorResult {
    Tri found = Tri::False;
    std::optional<MinorWitness> witness;
  };
  /// Searches contraction sets (independent, parallel-class representatives)
  /// then keep-sets; a exhausted budget yields Unknown, never False.
  MinorResult has_minor(const RepresentedMatroid& n, double budget_seconds = 60.0) const;

  uint64_t mask_of(const std::vector<std::string>& subset) const;
  std::vector<std::string> labels_of(uint64_t mask) const;
  int ground_index(const std::string& e) const;

 private:
  struct Core;
  explicit RepresentedMatroid(std::shared_ptr<const Core> core) : core_(std::move(core)) {}
  std::shared_ptr<const Core> core_;
};

/// Replays a witness: applies contraction, deletion, and mapping to m and
/// checks the result equals n up to the witness relabeling.
bool witness_checks(const RepresentedMatroid& m, const RepresentedMatroid& n, const MinorWitness& w);

}  // namespace quatroid
