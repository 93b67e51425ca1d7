#pragma once

#include <string>
#include <vector>

#include "quatroid/field.hpp"

namespace quatroid {

struct RrefResult;

/// Dense exact matrix with unique row and column labels. The empty matrix
/// (zero columns, any row count) is a legal value.
class ExactMatrix {
 public:
  ExactMatrix(const Field& f, std::vector<std::string> row_labels, std::vector<std::string> col_labels);

  static ExactMatrix identity(const Field& f, int n, const std::string& prefix = "e");
  /// Signed incidence matrix of K_n: n x C(n,2), one column d(i,j) per pair
  /// i<j in lexicographic order, with +1 in row i and -1 in row j.
  static ExactMatrix build_Dn(const Field& f, int n);
  static ExactMatrix hconcat(const ExactMatrix& a, const ExactMatrix& b);

  const Field& field() const { return *f_; }
  int nrows() const { return static_cast<int>(rows_.size()); }
  int ncols() const { return static_cast<int>(cols_.size()); }
  const std::vector<std::string>& row_labels() const { return rows_; }
  const std::vector<std::string>& col_labels() const { return cols_; }
  int row_index(const std::string& label) const;
  int col_index(const std::string& label) const;

  const Scalar& at(int i, int j) const { return e_[i * ncols() + j]; }
  Scalar& at(int i, int j) { return e_[i * ncols() + j]; }
  const Scalar& at(const std::string& r, const std::string& c) const { return at(row_index(r), col_index(c)); }

  void set_row_labels(std::vector<std::string> labels);
  void set_col_labels(std::vector<std::string> labels);

  ExactMatrix submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const;
  ExactMatrix columns(const std::vector<std::string>& labels) const;
  ExactMatrix transpose() const;
  void scale_row(int i, const Scalar& c);
  void scale_col(int j, const Scalar& c);
  void add_multiple_of_row(int dst, int src, const Scalar& c);
  void swap_cols(int i, int j);
  void swap_rows(int i, int j);
  ExactMatrix negate() const;

  RrefResult rref() const;
  int rank() const;

  /// Pivot for a matrix in standard form [I|A']: makes column c a unit column
  /// on row r by row operations, then exchanges c with the basis column of
  /// row r so the result is again [I|A''].
  ExactMatrix pivot(const std::string& r, const std::string& c) const;
  bool is_standard_form() const;

  Scalar det() const;

  bool operator==(const ExactMatrix& o) const;

  /// Text format: header "field <order>", then one whitespace-separated row
  /// per line. Round-trips bit-exactly (labels are not part of the format).
  std::string to_text() const;
  static ExactMatrix parse_text(const std::string& text);

 private:
  const Field* f_;
  std::vector<std::string> rows_, cols_;
  std::vector<Scalar> e_;
};

struct RrefResult {
  ExactMatrix reduced;
  std::vector<std::string> pivot_cols;
  int rank = 0;
};

/// True iff A and B are row equivalent up to column scaling (same labels).
bool representation_equal(const ExactMatrix& a, const ExactMatrix& b);

}  // namespace quatroid
