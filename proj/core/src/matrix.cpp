#include "quatroid/matrix.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace quatroid {

namespace {
void check_unique(const std::vector<std::string>& labels, const char* what) {
  std::set<std::string> seen(labels.begin(), labels.end());
  if (seen.size() != labels.size()) throw std::invalid_argument(std::string(what) + " labels not unique");
}
}  // namespace

ExactMatrix::ExactMatrix(const Field& f, std::vector<std::string> row_labels, std::vector<std::string> col_labels)
    : f_(&f), rows_(std::move(row_labels)), cols_(std::move(col_labels)) {
  check_unique(rows_, "row");
  check_unique(cols_, "column");
  e_.assign(rows_.size() * cols_.size(), Scalar::zero(f));
}

ExactMatrix ExactMatrix::identity(const Field& f, int n, const std::string& prefix) {
  std::vector<std::string> r, c;
  for (int i = 1; i <= n; ++i) {
    r.push_back("r" + std::to_string(i));
    c.push_back(prefix + std::to_string(i));
  }
  ExactMatrix m(f, r, c);
  for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

ExactMatrix ExactMatrix::build_Dn(const Field& f, int n) {
  if (n < 0) throw std::invalid_argument("build_Dn: n < 0");
  std::vector<std::string> r, c;
  for (int i = 1; i <= n; ++i) r.push_back("r" + std::to_string(i));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) c.push_back("d(" + std::to_string(i) + "," + std::to_string(j) + ")");
  ExactMatrix m(f, r, c);
  int col = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++col) {
      m.at(i, col) = Scalar::one(f);
      m.at(j, col) = -Scalar::one(f);
    }
  return m;
}

ExactMatrix ExactMatrix::hconcat(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.f_ != b.f_) throw std::invalid_argument("hconcat: fields differ");
  if (a.rows_ != b.rows_) throw std::invalid_argument("hconcat: row labels differ");
  std::vector<std::string> cols = a.cols_;
  cols.insert(cols.end(), b.cols_.begin(), b.cols_.end());
  ExactMatrix m(*a.f_, a.rows_, cols);
  for (int i = 0; i < a.nrows(); ++i) {
    for (int j = 0; j < a.ncols(); ++j) m.at(i, j) = a.at(i, j);
    for (int j = 0; j < b.ncols(); ++j) m.at(i, a.ncols() + j) = b.at(i, j);
  }
  return m;
}

int ExactMatrix::row_index(const std::string& label) const {
  for (int i = 0; i < nrows(); ++i)
    if (rows_[i] == label) return i;
  throw std::invalid_argument("unknown row label '" + label + "'");
}

int ExactMatrix::col_index(const std::string& label) const {
  for (int j = 0; j < ncols(); ++j)
    if (cols_[j] == label) return j;
  throw std::invalid_argument("unknown column label '" + label + "'");
}

void ExactMatrix::set_row_labels(std::vector<std::string> labels) {
  if (static_cast<int>(labels.size()) != nrows()) throw std::invalid_argument("row label count mismatch");
  check_unique(labels, "row");
  rows_ = std::move(labels);
}

void ExactMatrix::set_col_labels(std::vector<std::string> labels) {
  if (static_cast<int>(labels.size()) != ncols()) throw std::invalid_argument("column label count mismatch");
  check_unique(labels, "column");
  cols_ = std::move(labels);
}

ExactMatrix ExactMatrix::submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const {
  std::vector<std::string> rl, cl;
  for (int i : rows) rl.push_back(rows_[i]);
  for (int j : cols) cl.push_back(cols_[j]);
  ExactMatrix m(*f_, rl, cl);
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < cols.size(); ++j) m.at(static_cast<int>(i), static_cast<int>(j)) = at(rows[i], cols[j]);
  return m;
}

ExactMatrix ExactMatrix::columns(const std::vector<std::string>& labels) const {
  std::vector<int> rows(nrows()), cols;
  for (int i = 0; i < nrows(); ++i) rows[i] = i;
  for (const auto& l : labels) cols.push_back(col_index(l));
  return submatrix(rows, cols);
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix m(*f_, cols_, rows_);
  for (int i = 0; i < nrows(); ++i)
    for (int j = 0; j < ncols(); ++j) m.at(j, i) = at(i, j);
  return m;
}

void ExactMatrix::scale_row(int i, const Scalar& c) {
  for (int j = 0; j < ncols(); ++j) at(i, j) = at(i, j) * c;
}

void ExactMatrix::scale_col(int j, const Scalar& c) {
  for (int i = 0; i < nrows(); ++i) at(i, j) = at(i, j) * c;
}

void ExactMatrix::add_multiple_of_row(int dst, int src, const Scalar& c) {
  for (int j = 0; j < ncols(); ++j) at(dst, j) = at(dst, j) + at(src, j) * c;
}

void ExactMatrix::swap_cols(int i, int j) {
  if (i == j) return;
  std::swap(cols_[i], cols_[j]);
  for (int r = 0; r < nrows(); ++r) std::swap(at(r, i), at(r, j));
}

void ExactMatrix::swap_rows(int i, int j) {
  if (i == j) return;
  std::swap(rows_[i], rows_[j]);
  for (int c = 0; c < ncols(); ++c) std::swap(at(i, c), at(j, c));
}

ExactMatrix ExactMatrix::negate() const {
  ExactMatrix m = *this;
  for (auto& x : m.e_) x = -x;
  return m;
}

RrefResult ExactMatrix::rref() const {
  RrefResult out{*this, {}, 0};
  ExactMatrix& m = out.reduced;
  int r = 0;
  for (int c = 0; c < m.ncols() && r < m.nrows(); ++c) {
    int piv = -1;
    for (int i = r; i < m.nrows(); ++i)
      if (!m.at(i, c).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    m.swap_rows(r, piv);
    m.scale_row(r, m.at(r, c).inverse());
    for (int i = 0; i < m.nrows(); ++i)
      if (i != r && !m.at(i, c).is_zero()) m.add_multiple_of_row(i, r, -m.at(i, c));
    out.pivot_cols.push_back(m.cols_[c]);
    ++r;
  }
  out.rank = r;
  return out;
}

int ExactMatrix::rank() const { return rref().rank; }

bool ExactMatrix::is_standard_form() const {
  if (ncols() < nrows()) return false;
  for (int i = 0; i < nrows(); ++i)
    for (int j = 0; j < nrows(); ++j)
      if (at(i, j) != (i == j ? Scalar::one(*f_) : Scalar::zero(*f_))) return false;
  return true;
}

ExactMatrix ExactMatrix::pivot(const std::string& rl, const std::string& cl) const {
  if (!is_standard_form()) throw std::invalid_argument("pivot: matrix not in standard form [I|A']");
  int r = row_index(rl), c = col_index(cl);
  if (at(r, c).is_zero()) throw std::invalid_argument("pivot: zero pivot entry");
  ExactMatrix m = *this;
  m.scale_row(r, m.at(r, c).inverse());
  for (int i = 0; i < m.nrows(); ++i)
    if (i != r && !m.at(i, c).is_zero()) m.add_multiple_of_row(i, r, -m.at(i, c));
  m.swap_cols(r, c);  // basis column of row r sits at column index r
  return m;
}

Scalar ExactMatrix::det() const {
  if (nrows() != ncols()) throw std::invalid_argument("det: matrix not square");
  int n = nrows();
  if (n == 0) return Scalar::one(*f_);
  if (!f_->is_rational()) {
    ExactMatrix m = *this;
    Scalar d = Scalar::one(*f_);
    for (int c = 0; c < n; ++c) {
      int piv = -1;
      for (int i = c; i < n; ++i)
        if (!m.at(i, c).is_zero()) {
          piv = i;
          break;
        }
      if (piv < 0) return Scalar::zero(*f_);
      if (piv != c) {
        m.swap_rows(c, piv);
        d = -d;
      }
      d = d * m.at(c, c);
      Scalar inv = m.at(c, c).inverse();
      for (int i = c + 1; i < n; ++i) {
        if (m.at(i, c).is_zero()) continue;
        Scalar f = m.at(i, c) * inv;
        for (int j = c; j < n; ++j) m.at(i, j) = m.at(i, j) - m.at(c, j) * f;
      }
    }
    return d;
  }
  // rationals: clear denominators per row, then fraction-free Bareiss
  std::vector<Int> a(n * n);
  Rat scale(1);
  for (int i = 0; i < n; ++i) {
    Int lcm_den = 1;
    for (int j = 0; j < n; ++j) {
      Int den = denominator(at(i, j).rat());
      lcm_den = lcm_den / gcd(lcm_den, den) * den;
    }
    scale *= Rat(1, lcm_den);
    for (int j = 0; j < n; ++j) {
      Rat v = at(i, j).rat() * lcm_den;
      a[i * n + j] = numerator(v);
    }
  }
  Int prev = 1;
  int sign = 1;
  for (int c = 0; c < n - 1; ++c) {
    int piv = -1;
    for (int i = c; i < n; ++i)
      if (a[i * n + c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) return Scalar::zero(*f_);
    if (piv != c) {
      for (int j = 0; j < n; ++j) std::swap(a[c * n + j], a[piv * n + j]);
      sign = -sign;
    }
    for (int i = c + 1; i < n; ++i) {
      for (int j = c + 1; j < n; ++j) a[i * n + j] = (a[i * n + j] * a[c * n + c] - a[i * n + c] * a[c * n + j]) / prev;
      a[i * n + c] = 0;
    }
    prev = a[c * n + c];
  }
  Rat d = Rat(a[(n - 1) * n + (n - 1)]) * scale;
  if (sign < 0) d = -d;
  return Scalar::of_rat(d);
}

bool ExactMatrix::operator==(const ExactMatrix& o) const {
  return f_ == o.f_ && rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

std::string ExactMatrix::to_text() const {
  std::ostringstream os;
  os << "field " << f_->order_token() << "\n";
  for (int i = 0; i < nrows(); ++i) {
    for (int j = 0; j < ncols(); ++j) {
      if (j) os << ' ';
      os << at(i, j).str();
    }
    os << "\n";
  }
  return os.str();
}

ExactMatrix ExactMatrix::parse_text(const std::string& text) {
  std::istringstream is(text);
  std::string header;
  if (!std::getline(is, header)) throw std::invalid_argument("matrix text: missing header");
  std::istringstream hs(header);
  std::string kw, tok;
  hs >> kw >> tok;
  if (kw != "field") throw std::invalid_argument("matrix text: header must be 'field <order>'");
  const Field& f = Field::by_order_token(tok);
  std::vector<std::vector<Scalar>> rows;
  std::string line;
  while (std::getline(is, line)) {
    std::istringstream ls(line);
    std::vector<Scalar> row;
    std::string t;
    while (ls >> t) row.push_back(Scalar::parse(f, t));
    rows.push_back(std::move(row));
  }
  size_t width = rows.empty() ? 0 : rows[0].size();
  for (auto& r : rows)
    if (r.size() != width) throw std::invalid_argument("matrix text: ragged rows");
  std::vector<std::string> rl, cl;
  for (size_t i = 1; i <= rows.size(); ++i) rl.push_back("r" + std::to_string(i));
  for (size_t j = 1; j <= width; ++j) cl.push_back("c" + std::to_string(j));
  ExactMatrix m(f, rl, cl);
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < width; ++j) m.at(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
  return m;
}

bool representation_equal(const ExactMatrix& a, const ExactMatrix& b) {
  if (&a.field() != &b.field() || a.col_labels() != b.col_labels() || a.nrows() != b.nrows()) return false;
  auto ra = a.rref(), rb = b.rref();
  if (ra.rank != rb.rank || ra.pivot_cols != rb.pivot_cols) return false;
  // row spaces agree up to column scaling iff the rrefs agree columnwise up
  // to a scalar once both are pivot-normalized; compare column ratios
  for (int j = 0; j < a.ncols(); ++j) {
    Scalar ratio = Scalar::zero(a.field());
    bool have = false;
    for (int i = 0; i < ra.rank; ++i) {
      const Scalar &x = ra.reduced.at(i, j), &y = rb.reduced.at(i, j);
      if (x.is_zero() != y.is_zero()) return false;
      if (x.is_zero()) continue;
      Scalar r = y / x;
      if (!have) {
        ratio = r;
        have = true;
      } else if (r != ratio) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace quatroid
