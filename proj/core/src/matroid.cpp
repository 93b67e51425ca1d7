#include "quatroid/matroid.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <functional>
#include <set>
#include <unordered_set>

namespace quatroid {

namespace {

template <class F>
void for_each_combination(int n, int k, F&& fn) {
  if (k < 0 || k > n) return;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (!fn(idx)) return;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// rank of a set of columns, each a vector of r scalars
int column_rank(std::vector<std::vector<Scalar>> cols, const Field& f) {
  if (cols.empty()) return 0;
  const int r = static_cast<int>(cols[0].size());
  int rank = 0;
  for (int row = 0; row < r && rank < static_cast<int>(cols.size()); ++row) {
    int piv = -1;
    for (int j = rank; j < static_cast<int>(cols.size()); ++j)
      if (!cols[j][row].is_zero()) {
        piv = j;
        break;
      }
    if (piv < 0) continue;
    std::swap(cols[rank], cols[piv]);
    Scalar inv = cols[rank][row].inverse();
    for (int j = rank + 1; j < static_cast<int>(cols.size()); ++j) {
      if (cols[j][row].is_zero()) continue;
      Scalar c = cols[j][row] * inv;
      for (int i = row; i < r; ++i) cols[j][i] = cols[j][i] - cols[rank][i] * c;
    }
    ++rank;
  }
  return rank;
}

}  // namespace

struct RepresentedMatroid::Core {
  const Field* f = nullptr;
  ExactMatrix rep;  // [I_r | A']
  std::vector<std::string> ground;
  std::vector<std::vector<Scalar>> col;  // per ground index, r scalars

  mutable std::once_flag cache_once;
  mutable std::vector<uint64_t> bases;
  mutable std::unordered_set<uint64_t> basis_set;
  mutable std::vector<long long> nonbasis_count;       // per ground index
  mutable std::vector<long long> tri_circuit_count;    // per ground index
  mutable std::vector<int8_t> pair_rank;               // n*n
  mutable std::vector<int> class_id, class_size;       // parallel classes (loops: id -1)

  Core(const Field& fld, ExactMatrix r, std::vector<std::string> g) : f(&fld), rep(std::move(r)), ground(std::move(g)) {
    for (const auto& e : ground) {
      int j = rep.col_index(e);
      std::vector<Scalar> v;
      for (int i = 0; i < rep.nrows(); ++i) v.push_back(rep.at(i, j));
      col.push_back(std::move(v));
    }
    build_parallel();
  }

  int n() const { return static_cast<int>(ground.size()); }
  int r() const { return rep.nrows(); }

  void build_parallel() {
    class_id.assign(n(), -1);
    class_size.assign(n(), 0);
    int next = 0;
    for (int i = 0; i < n(); ++i) {
      bool loop = true;
      for (const auto& s : col[i])
        if (!s.is_zero()) loop = false;
      if (loop) continue;
      if (class_id[i] >= 0) continue;
      class_id[i] = next;
      for (int j = i + 1; j < n(); ++j) {
        if (class_id[j] >= 0) continue;
        if (proportional(i, j)) class_id[j] = next;
      }
      ++next;
    }
    std::vector<int> cnt(next, 0);
    for (int i = 0; i < n(); ++i)
      if (class_id[i] >= 0) ++cnt[class_id[i]];
    for (int i = 0; i < n(); ++i) class_size[i] = class_id[i] >= 0 ? cnt[class_id[i]] : 0;
  }

  bool proportional(int i, int j) const {
    // both non-loop columns
    Scalar ratio = Scalar::zero(*f);
    bool have = false;
    for (int k = 0; k < r(); ++k) {
      const Scalar &x = col[i][k], &y = col[j][k];
      if (x.is_zero() != y.is_zero()) return false;
      if (x.is_zero()) continue;
      Scalar q = y / x;
      if (!have) {
        ratio = q;
        have = true;
      } else if (q != ratio) {
        return false;
      }
    }
    return have;
  }

  int rank_of_idx(const std::vector<int>& idxs) const {
    std::vector<std::vector<Scalar>> cols;
    cols.reserve(idxs.size());
    for (int i : idxs) cols.push_back(col[i]);
    return column_rank(std::move(cols), *f);
  }

  void build_cache() const {
    std::call_once(cache_once, [this] {
      nonbasis_count.assign(n(), 0);
      tri_circuit_count.assign(n(), 0);
      pair_rank.assign(n() * n(), 0);
      for (int i = 0; i < n(); ++i)
        for (int j = i; j < n(); ++j) {
          int rk = rank_of_idx(i == j ? std::vector<int>{i} : std::vector<int>{i, j});
          pair_rank[i * n() + j] = pair_rank[j * n() + i] = static_cast<int8_t>(rk);
        }
      for_each_combination(n(), r(), [&](const std::vector<int>& idx) {
        uint64_t m = 0;
        for (int i : idx) m |= (uint64_t{1} << i);
        if (rank_of_idx(idx) == r()) {
          bases.push_back(m);
        } else {
          for (int i : idx) ++nonbasis_count[i];
        }
        return true;
      });
      basis_set.insert(bases.begin(), bases.end());
      // 3-element circuits: dependent triples with independent 2-subsets
      for (int a = 0; a < n(); ++a)
        for (int b = a + 1; b < n(); ++b) {
          if (pair_rank[a * n() + b] != 2) continue;
          for (int c = b + 1; c < n(); ++c) {
            if (pair_rank[a * n() + c] != 2 || pair_rank[b * n() + c] != 2) continue;
            if (rank_of_idx({a, b, c}) == 2) {
              ++tri_circuit_count[a];
              ++tri_circuit_count[b];
              ++tri_circuit_count[c];
            }
          }
        }
    });
  }
};

RepresentedMatroid RepresentedMatroid::from_matrix(const ExactMatrix& a) {
  if (a.ncols() > 64) throw std::invalid_argument("ground sets larger than 64 are not supported");
  auto rr = a.rref();
  const int r = rr.rank;
  std::vector<std::string> ground = a.col_labels();
  // standard form: pivot columns first, then the rest, restricted to the
  // first r (nonzero) rows of the reduced matrix
  std::set<std::string> piv(rr.pivot_cols.begin(), rr.pivot_cols.end());
  std::vector<int> cols;
  for (const auto& l : rr.pivot_cols) cols.push_back(rr.reduced.col_index(l));
  for (int j = 0; j < a.ncols(); ++j)
    if (!piv.count(a.col_labels()[j])) cols.push_back(rr.reduced.col_index(a.col_labels()[j]));
  std::vector<int> rows(r);
  for (int i = 0; i < r; ++i) rows[i] = i;
  ExactMatrix rep = rr.reduced.submatrix(rows, cols);
  return RepresentedMatroid(std::make_shared<Core>(a.field(), std::move(rep), std::move(ground)));
}

const Field& RepresentedMatroid::field() const { return *core_->f; }
const ExactMatrix& RepresentedMatroid::rep() const { return core_->rep; }
const std::vector<std::string>& RepresentedMatroid::ground() const { return core_->ground; }
int RepresentedMatroid::rank() const { return core_->r(); }
int RepresentedMatroid::size() const { return core_->n(); }

ExactMatrix RepresentedMatroid::rep_in_ground_order() const { return core_->rep.columns(core_->ground); }

int RepresentedMatroid::ground_index(const std::string& e) const {
  for (int i = 0; i < core_->n(); ++i)
    if (core_->ground[i] == e) return i;
  throw std::invalid_argument("unknown element '" + e + "'");
}

uint64_t RepresentedMatroid::mask_of(const std::vector<std::string>& subset) const {
  uint64_t m = 0;
  for (const auto& e : subset) m |= (uint64_t{1} << ground_index(e));
  return m;
}

std::vector<std::string> RepresentedMatroid::labels_of(uint64_t mask) const {
  std::vector<std::string> out;
  for (int i = 0; i < core_->n(); ++i)
    if (mask & (uint64_t{1} << i)) out.push_back(core_->ground[i]);
  return out;
}

int RepresentedMatroid::rank_of(const std::vector<std::string>& subset) const {
  std::vector<int> idx;
  for (const auto& e : subset) idx.push_back(ground_index(e));
  return core_->rank_of_idx(idx);
}

bool RepresentedMatroid::is_basis(const std::vector<std::string>& subset) const {
  return static_cast<int>(subset.size()) == rank() && rank_of(subset) == rank();
}

bool RepresentedMatroid::is_loop(const std::string& e) const {
  int i = ground_index(e);
  for (const auto& s : core_->col[i])
    if (!s.is_zero()) return false;
  return true;
}

std::vector<std::vector<std::string>> RepresentedMatroid::parallel_classes() const {
  std::map<int, std::vector<std::string>> by_id;
  for (int i = 0; i < core_->n(); ++i)
    if (core_->class_id[i] >= 0) by_id[core_->class_id[i]].push_back(core_->ground[i]);
  std::vector<std::vector<std::string>> out;
  for (auto& [id, v] : by_id) out.push_back(std::move(v));
  return out;
}

bool RepresentedMatroid::is_simple() const {
  for (int i = 0; i < core_->n(); ++i)
    if (core_->class_id[i] < 0 || core_->class_size[i] != 1) return false;
  return true;
}

const std::vector<uint64_t>& RepresentedMatroid::basis_masks() const {
  core_->build_cache();
  return core_->bases;
}

std::vector<std::vector<std::string>> RepresentedMatroid::bases() const {
  std::vector<std::vector<std::string>> out;
  for (uint64_t m : basis_masks()) out.push_back(labels_of(m));
  return out;
}

std::vector<std::vector<std::string>> RepresentedMatroid::nonbases() const {
  core_->build_cache();
  std::vector<std::vector<std::string>> out;
  for_each_combination(core_->n(), core_->r(), [&](const std::vector<int>& idx) {
    uint64_t m = 0;
    for (int i : idx) m |= (uint64_t{1} << i);
    if (!core_->basis_set.count(m)) out.push_back(labels_of(m));
    return true;
  });
  return out;
}

std::vector<std::string> RepresentedMatroid::fundamental_circuit(const std::vector<std::string>& basis,
                                                                 const std::string& e) const {
  if (!is_basis(basis)) throw std::invalid_argument("fundamental_circuit: not a basis");
  for (const auto& b : basis)
    if (b == e) throw std::invalid_argument("fundamental_circuit: element lies in the basis");
  if (is_loop(e)) return {e};
  // standardize on the given basis, then read off the support of e's column
  std::vector<std::string> order = basis;
  for (const auto& g : core_->ground)
    if (std::find(basis.begin(), basis.end(), g) == basis.end()) order.push_back(g);
  auto rr = rep_in_ground_order().columns(order).rref();
  std::vector<std::string> circuit;
  int ej = rr.reduced.col_index(e);
  for (int i = 0; i < rank(); ++i)
    if (!rr.reduced.at(i, ej).is_zero()) circuit.push_back(order[i]);
  circuit.push_back(e);
  // report in ground order
  std::vector<std::string> out;
  for (const auto& g : core_->ground)
    if (std::find(circuit.begin(), circuit.end(), g) != circuit.end()) out.push_back(g);
  return out;
}

RepresentedMatroid RepresentedMatroid::dual() const {
  const int n = size(), r = rank();
  const Field& f = field();
  std::vector<std::string> rl;
  for (int i = 1; i <= n - r; ++i) rl.push_back("r" + std::to_string(i));
  ExactMatrix d(f, rl, core_->ground);
  // cobasis labels get identity columns; basis label b_i gets -(row i of A')
  std::vector<std::string> basis_lab, cobasis_lab;
  for (int j = 0; j < n; ++j)
    (j < r ? basis_lab : cobasis_lab).push_back(core_->rep.col_labels()[j]);
  for (int j = 0; j < n - r; ++j) d.at(j, d.col_index(cobasis_lab[j])) = Scalar::one(f);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < n - r; ++j) d.at(j, d.col_index(basis_lab[i])) = -core_->rep.at(i, r + j);
  return from_matrix(d);
}

RepresentedMatroid RepresentedMatroid::delete_elements(const std::vector<std::string>& s) const {
  std::set<std::string> del(s.begin(), s.end());
  for (const auto& e : s) (void)ground_index(e);
  std::vector<std::string> keep;
  for (const auto& g : core_->ground)
    if (!del.count(g)) keep.push_back(g);
  return from_matrix(rep_in_ground_order().columns(keep));
}

RepresentedMatroid RepresentedMatroid::contract_elements(const std::vector<std::string>& s) const {
  if (s.empty()) return *this;
  std::set<std::string> con(s.begin(), s.end());
  for (const auto& e : s) (void)ground_index(e);
  std::vector<std::string> order;
  for (const auto& g : core_->ground)
    if (con.count(g)) order.push_back(g);
  for (const auto& g : core_->ground)
    if (!con.count(g)) order.push_back(g);
  auto rr = rep_in_ground_order().columns(order).rref();
  // rows whose pivot lies in the contracted set disappear with it
  std::vector<int> keep_rows;
  for (int i = 0; i < rr.rank; ++i)
    if (!con.count(rr.pivot_cols[i])) keep_rows.push_back(i);
  std::vector<int> keep_cols;
  for (int j = 0; j < rr.reduced.ncols(); ++j)
    if (!con.count(rr.reduced.col_labels()[j])) keep_cols.push_back(j);
  ExactMatrix sub = rr.reduced.submatrix(keep_rows, keep_cols);
  // restore ground order among survivors
  std::vector<std::string> keep;
  for (const auto& g : core_->ground)
    if (!con.count(g)) keep.push_back(g);
  return from_matrix(sub.columns(keep));
}

RepresentedMatroid RepresentedMatroid::simplify() const {
  std::set<int> seen_class;
  std::vector<std::string> keep;
  for (int i = 0; i < core_->n(); ++i) {
    int id = core_->class_id[i];
    if (id < 0) continue;  // loop
    if (seen_class.insert(id).second) keep.push_back(core_->ground[i]);
  }
  return from_matrix(rep_in_ground_order().columns(keep));
}

int RepresentedMatroid::epsilon() const {
  std::set<int> ids;
  for (int i = 0; i < core_->n(); ++i)
    if (core_->class_id[i] >= 0) ids.insert(core_->class_id[i]);
  return static_cast<int>(ids.size());
}

bool RepresentedMatroid::equals(const RepresentedMatroid& n) const {
  std::vector<std::string> ga = core_->ground, gb = n.core_->ground;
  std::sort(ga.begin(), ga.end());
  std::sort(gb.begin(), gb.end());
  if (ga != gb) throw std::invalid_argument("matroids_equal: ground sets differ");
  if (rank() != n.rank()) return false;
  // translate both basis families to the shared sorted-label order
  auto translate = [&](const RepresentedMatroid& m) {
    std::map<std::string, int> pos;
    for (size_t i = 0; i < ga.size(); ++i) pos[ga[i]] = static_cast<int>(i);
    std::vector<uint64_t> out;
    for (uint64_t bm : m.basis_masks()) {
      uint64_t t = 0;
      for (int i = 0; i < m.size(); ++i)
        if (bm & (uint64_t{1} << i)) t |= (uint64_t{1} << pos[m.core_->ground[i]]);
      out.push_back(t);
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  return translate(*this) == translate(n);
}

std::optional<std::map<std::string, std::string>> RepresentedMatroid::isomorphism(const RepresentedMatroid& nm) const {
  const Core& A = *core_;
  const Core& B = *nm.core_;
  if (A.n() != B.n() || A.r() != B.r()) return std::nullopt;
  A.build_cache();
  B.build_cache();
  if (A.bases.size() != B.bases.size()) return std::nullopt;
  const int n = A.n(), r = A.r();

  // invariant keys: (loop, class size, #nonbases through e, #3-circuits through e)
  auto keys = [](const Core& c) {
    std::vector<std::array<long long, 4>> k(c.n());
    for (int i = 0; i < c.n(); ++i)
      k[i] = {c.class_id[i] < 0 ? 1LL : 0LL, static_cast<long long>(c.class_size[i]), c.nonbasis_count[i],
              c.tri_circuit_count[i]};
    return k;
  };
  auto ka = keys(A), kb = keys(B);
  {
    auto sa = ka, sb = kb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }

  // map rarest invariant classes first
  std::map<std::array<long long, 4>, int> freq;
  for (const auto& k : ka) ++freq[k];
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    if (freq[ka[x]] != freq[ka[y]]) return freq[ka[x]] < freq[ka[y]];
    if (ka[x] != ka[y]) return ka[x] < ka[y];
    return x < y;
  });

  std::vector<int> image(n, -1), used(n, 0);
  std::vector<int> mapped;  // indices of A already mapped, in mapping order

  // basis-status consistency for every r-subset of the mapped prefix that
  // contains the newly mapped element
  auto consistent = [&](int a_new) {
    int k = static_cast<int>(mapped.size());
    for (int j = 0; j + 1 < k; ++j) {
      int a = mapped[j];
      if (A.pair_rank[a * n + a_new] != B.pair_rank[image[a] * n + image[a_new]]) return false;
    }
    if (k < r) return true;
    bool ok = true;
    for_each_combination(k - 1, r - 1, [&](const std::vector<int>& pick) {
      uint64_t ma = uint64_t{1} << a_new, mb = uint64_t{1} << image[a_new];
      for (int p : pick) {
        ma |= uint64_t{1} << mapped[p];
        mb |= uint64_t{1} << image[mapped[p]];
      }
      if (A.basis_set.count(ma) != B.basis_set.count(mb)) {
        ok = false;
        return false;
      }
      return true;
    });
    return ok;
  };

  long long nodes = 0;
  const long long node_cap = 50'000'000;
  std::function<bool(int)> rec = [&](int depth) -> bool {
    if (depth == n) return true;
    int a = order[depth];
    for (int b = 0; b < n; ++b) {
      if (used[b] || kb[b] != ka[a]) continue;
      if (++nodes > node_cap) throw std::runtime_error("isomorphism search budget exceeded");
      image[a] = b;
      used[b] = 1;
      mapped.push_back(a);
      if (consistent(a) && rec(depth + 1)) return true;
      mapped.pop_back();
      used[b] = 0;
      image[a] = -1;
    }
    return false;
  };
  if (!rec(0)) return std::nullopt;
  std::map<std::string, std::string> out;
  for (int i = 0; i < n; ++i) out[A.ground[i]] = B.ground[image[i]];
  return out;
}

RepresentedMatroid::MinorResult RepresentedMatroid::has_minor(const RepresentedMatroid& nm,
                                                              double budget_seconds) const {
  MinorResult res;
  const int dr = rank() - nm.rank();
  if (dr < 0 || size() < nm.size() || size() - dr < nm.size()) return res;
  if (nm.size() == size() && dr == 0) {
    // same size: minor iff isomorphic
    auto iso = isomorphism(nm);
    if (iso) {
      MinorWitness w;
      for (auto& [a, b] : *iso) w.mapping[b] = a;  // ground(N) -> M
      res.found = Tri::True;
      res.witness = w;
    }
    return res;
  }
  const auto t0 = std::chrono::steady_clock::now();
  auto out_of_time = [&] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() > budget_seconds;
  };
  const bool target_simple = nm.is_simple();
  const Core& A = *core_;
  bool timed_out = false;

  // candidate contraction sets: independent, first-of-parallel-class only
  std::vector<std::vector<std::string>> contraction_sets;
  {
    std::vector<int> reps;
    for (int i = 0; i < A.n(); ++i) {
      if (A.class_id[i] < 0) continue;  // never contract loops
      bool first = true;
      for (int j = 0; j < i; ++j)
        if (A.class_id[j] == A.class_id[i]) first = false;
      if (first) reps.push_back(i);
    }
    for_each_combination(static_cast<int>(reps.size()), dr, [&](const std::vector<int>& pick) {
      std::vector<int> idx;
      for (int p : pick) idx.push_back(reps[p]);
      if (A.rank_of_idx(idx) == dr) {
        std::vector<std::string> s;
        for (int i : idx) s.push_back(A.ground[i]);
        contraction_sets.push_back(std::move(s));
      }
      return true;
    });
  }

  for (const auto& cset : contraction_sets) {
    if (out_of_time()) {
      timed_out = true;
      break;
    }
    RepresentedMatroid k = contract_elements(cset);
    if (k.size() < nm.size()) continue;
    const Core& K = *k.core_;
    // keep-set candidates
    std::vector<int> pool;
    for (int i = 0; i < K.n(); ++i) {
      if (target_simple && K.class_id[i] < 0) continue;
      pool.push_back(i);
    }
    if (static_cast<int>(pool.size()) < nm.size()) continue;
    bool done = false;
    for_each_combination(static_cast<int>(pool.size()), nm.size(), [&](const std::vector<int>& pick) {
      if (out_of_time()) {
        timed_out = true;
        return false;
      }
      std::vector<int> idx;
      for (int p : pick) idx.push_back(pool[p]);
      if (target_simple) {
        std::set<int> cls;
        for (int i : idx)
          if (!cls.insert(K.class_id[i]).second) return true;  // two parallel picks
      }
      if (K.rank_of_idx(idx) != nm.rank()) return true;
      std::vector<std::string> keep;
      for (int i : idx) keep.push_back(K.ground[i]);
      RepresentedMatroid restriction = k.delete_elements([&] {
        std::set<std::string> ks(keep.begin(), keep.end());
        std::vector<std::string> del;
        for (const auto& g : K.ground)
          if (!ks.count(g)) del.push_back(g);
        return del;
      }());
      auto iso = nm.isomorphism(restriction);
      if (iso) {
        MinorWitness w;
        w.contracted = cset;
        std::set<std::string> ks(keep.begin(), keep.end()), cs(cset.begin(), cset.end());
        for (const auto& g : A.ground)
          if (!ks.count(g) && !cs.count(g)) w.deleted.push_back(g);
        w.mapping = *iso;
        res.found = Tri::True;
        res.witness = std::move(w);
        done = true;
        return false;
      }
      return true;
    });
    if (done) return res;
    if (timed_out) break;
  }
  if (timed_out && res.found == Tri::False) res.found = Tri::Unknown;
  return res;
}

bool witness_checks(const RepresentedMatroid& m, const RepresentedMatroid& n, const MinorWitness& w) {
  RepresentedMatroid k = m.contract_elements(w.contracted).delete_elements(w.deleted);
  if (k.size() != n.size()) return false;
  // relabel k's elements back to n's names and compare basis sets
  std::map<std::string, std::string> inverse;
  for (const auto& [ne, me] : w.mapping) inverse[me] = ne;
  ExactMatrix km = k.rep_in_ground_order();
  std::vector<std::string> relabeled;
  for (const auto& c : km.col_labels()) {
    auto it = inverse.find(c);
    if (it == inverse.end()) return false;
    relabeled.push_back(it->second);
  }
  km.set_col_labels(relabeled);
  return RepresentedMatroid::from_matrix(km).equals(n);
}

}  // namespace quatroid
