#pragma once

// Based bigraded chain complexes of free Z-modules with explicit integer
// differentials, and the operations on them: degree shifts, mapping cones,
// homology with torsion via Smith normal form, Gaussian elimination of
// unit differential entries, and filtered homology over Q.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "khoma/exact_linalg.hpp"
#include "khoma/laurent.hpp"

namespace khoma {

struct Bideg {
  int i = 0;
  int j = 0;
  bool operator<(const Bideg& o) const { return i != o.i ? i < o.i : j < o.j; }
  bool operator==(const Bideg& o) const { return i == o.i && j == o.j; }
};

struct AbelianGroup {
  long rank = 0;
  std::vector<Int> torsion;  // prime-power orders, ascending
  bool operator==(const AbelianGroup& o) const { return rank == o.rank && torsion == o.torsion; }
  bool trivial() const { return rank == 0 && torsion.empty(); }
};

using HomologyTable = std::map<Bideg, AbelianGroup>;   // bigraded
using GradedHomology = std::map<int, AbelianGroup>;    // by primary degree only
using FiltrationTable = std::map<Bideg, long>;         // associated-graded Q-dimensions

inline HomologyTable shifted(const HomologyTable& t, int m, int n) {
  HomologyTable out;
  for (const auto& [bd, g] : t) out[{bd.i + m, bd.j + n}] = g;
  return out;
}

// How secondary degrees constrain differential entries.
enum class Grading {
  bigraded,  // every entry preserves j
  filtered,  // entries never decrease j
  none,      // only the primary grading is meaningful
};

class BasedComplex {
 public:
  struct Gen {
    int i = 0;
    int j = 0;
    uint64_t tag = 0;  // provenance payload, e.g. cube vertex and labeling
  };

  explicit BasedComplex(Grading grading = Grading::bigraded) : grading_(grading) {}

  Grading grading() const { return grading_; }
  void set_grading(Grading g) { grading_ = g; }

  int add_generator(int i, int j, uint64_t tag = 0) {
    gens_.push_back({i, j, tag});
    alive_.push_back(true);
    return static_cast<int>(gens_.size()) - 1;
  }

  const Gen& gen(int id) const { return gens_[id]; }
  bool alive(int id) const { return alive_[id]; }
  int gen_slots() const { return static_cast<int>(gens_.size()); }

  std::vector<int> alive_gens() const {
    std::vector<int> out;
    for (int g = 0; g < gen_slots(); ++g)
      if (alive_[g]) out.push_back(g);
    return out;
  }

  long alive_count() const {
    return static_cast<long>(std::count(alive_.begin(), alive_.end(), true));
  }

  void add_entry(int src, int tgt, const Int& coeff) {
    if (coeff == 0) return;
    check_degrees(src, tgt);
    auto& row = d_[src];
    auto it = row.find(tgt);
    if (it == row.end()) {
      row[tgt] = coeff;
    } else {
      it->second += coeff;
      if (it->second == 0) row.erase(it);
    }
    if (row.empty()) d_.erase(src);
  }

  Int entry(int src, int tgt) const {
    auto rit = d_.find(src);
    if (rit == d_.end()) return 0;
    auto it = rit->second.find(tgt);
    return it == rit->second.end() ? Int(0) : it->second;
  }

  const std::map<int, std::map<int, Int>>& differential() const { return d_; }

  // d composed with d must vanish; throws std::logic_error otherwise.
  void verify_d_squared() const {
    std::map<std::pair<int, int>, Int> sq;
    for (const auto& [a, row] : d_)
      for (const auto& [b, ab] : row) {
        auto rit = d_.find(b);
        if (rit == d_.end()) continue;
        for (const auto& [c, bc] : rit->second) {
          auto key = std::make_pair(a, c);
          sq[key] += ab * bc;
        }
      }
    for (const auto& [key, v] : sq)
      if (v != 0) throw std::logic_error("differential does not square to zero");
  }

  void shift(int m, int n) {
    for (auto& g : gens_) {
      g.i += m;
      g.j += n;
    }
  }

  // Remove the pair (src, tgt) across a unit entry, adding the usual
  // correction -alpha * phi^{-1} * beta to every bypassing entry.  The result
  // is chain equivalent to the input.  Throws on a non-unit pivot, and in
  // graded modes when a correction would break the declared grading.
  void eliminate(int src, int tgt) {
    Int phi = entry(src, tgt);
    if (!(phi == 1 || phi == -1)) throw std::invalid_argument("eliminate: pivot entry is not a unit");
    if (grading_ == Grading::bigraded && gens_[src].j != gens_[tgt].j)
      throw std::invalid_argument("eliminate: pivot must preserve j in a bigraded complex");
    if (grading_ == Grading::filtered && gens_[src].j > gens_[tgt].j)
      throw std::invalid_argument("eliminate: pivot must not decrease j in a filtered complex");

    // column slice u -> tgt and row slice src -> v
    std::vector<std::pair<int, Int>> col, row;
    for (const auto& [u, r] : d_) {
      if (u == src) continue;
      auto it = r.find(tgt);
      if (it != r.end()) col.emplace_back(u, it->second);
    }
    if (auto rit = d_.find(src); rit != d_.end())
      for (const auto& [v, beta] : rit->second)
        if (v != tgt) row.emplace_back(v, beta);

    for (const auto& [u, alpha] : col)
      for (const auto& [v, beta] : row) add_entry(u, v, -alpha * phi * beta);

    erase_generator(src);
    erase_generator(tgt);
  }

  // Gaussian elimination until no unit pivot remains.  In filtered mode only
  // pivots with equal secondary degree are taken, which keeps every
  // correction filtration-nondecreasing.  Pivots are chosen lowest
  // (i, j, src, tgt) first for deterministic output.
  void reduce_full() {
    while (true) {
      int best_src = -1, best_tgt = -1;
      for (const auto& [src, rowm] : d_)
        for (const auto& [tgt, coeff] : rowm) {
          if (!(coeff == 1 || coeff == -1)) continue;
          if (grading_ != Grading::none && gens_[src].j != gens_[tgt].j) continue;
          if (best_src != -1) {
            auto key = std::make_tuple(gens_[src].i, gens_[src].j, src, tgt);
            auto best = std::make_tuple(gens_[best_src].i, gens_[best_src].j, best_src, best_tgt);
            if (!(key < best)) continue;
          }
          best_src = src;
          best_tgt = tgt;
        }
      if (best_src == -1) break;
      eliminate(best_src, best_tgt);
    }
  }

  // Restriction of the differential to generators at primary degree i,
  // as a dense matrix rows = sources, cols = targets.
  DenseInt block(const std::vector<int>& srcs, const std::vector<int>& tgts) const {
    std::map<int, int> col_of;
    for (size_t k = 0; k < tgts.size(); ++k) col_of[tgts[k]] = static_cast<int>(k);
    DenseInt m(srcs.size(), std::vector<Int>(tgts.size(), 0));
    for (size_t r = 0; r < srcs.size(); ++r) {
      auto rit = d_.find(srcs[r]);
      if (rit == d_.end()) continue;
      for (const auto& [tgt, coeff] : rit->second) {
        auto it = col_of.find(tgt);
        if (it != col_of.end()) m[r][it->second] = coeff;
      }
    }
    return m;
  }

  Laurent graded_euler_characteristic() const {
    Laurent chi;
    for (int g = 0; g < gen_slots(); ++g)
      if (alive_[g]) chi += Laurent::term((gens_[g].i % 2 == 0) ? 1 : -1, gens_[g].j);
    return chi;
  }

 private:
  void check_degrees(int src, int tgt) const {
    if (gens_[tgt].i != gens_[src].i + 1)
      throw std::logic_error("differential entry must raise primary degree by 1");
    int dj = gens_[tgt].j - gens_[src].j;
    if (grading_ == Grading::bigraded && dj != 0)
      throw std::logic_error("bigraded differential entry must preserve j");
    if (grading_ == Grading::filtered && dj < 0)
      throw std::logic_error("filtered differential entry must not decrease j");
  }

  void erase_generator(int g) {
    alive_[g] = false;
    d_.erase(g);
    for (auto it = d_.begin(); it != d_.end();) {
      it->second.erase(g);
      it = it->second.empty() ? d_.erase(it) : std::next(it);
    }
  }

  Grading grading_;
  std::vector<Gen> gens_;
  std::vector<bool> alive_;
  std::map<int, std::map<int, Int>> d_;  // src gen -> (tgt gen -> coefficient)
};

// Mapping cone of a chain transformation w : c0 -> c1, given by entries
// between generator ids of the two complexes.  The result is c0 + c1[1]
// with d = (d0 + w, -d1); w is checked to commute with the differentials.
inline BasedComplex mapping_cone(const BasedComplex& c0, const BasedComplex& c1,
                                 const std::map<std::pair<int, int>, Int>& w,
                                 Grading grading = Grading::bigraded) {
  // chain map check: d1 w == w d0
  std::map<std::pair<int, int>, Int> lhs, rhs;
  for (const auto& [key, coeff] : w) {
    auto [a, b] = key;
    for (const auto& [brow, row] : c1.differential()) {
      if (brow != b) continue;
      for (const auto& [c, v] : row) lhs[{a, c}] += coeff * v;
    }
  }
  for (const auto& [arow, row] : c0.differential())
    for (const auto& [b, v] : row)
      for (const auto& [key, coeff] : w)
        if (key.first == b) rhs[{arow, key.second}] += v * coeff;
  for (const auto& [k, v] : lhs)
    if (v != (rhs.count(k) ? rhs.at(k) : Int(0)))
      throw std::invalid_argument("mapping_cone: w is not a chain map");
  for (const auto& [k, v] : rhs)
    if (v != (lhs.count(k) ? lhs.at(k) : Int(0)))
      throw std::invalid_argument("mapping_cone: w is not a chain map");

  BasedComplex cone(grading);
  std::vector<int> id0(c0.gen_slots(), -1), id1(c1.gen_slots(), -1);
  for (int g = 0; g < c0.gen_slots(); ++g)
    if (c0.alive(g)) id0[g] = cone.add_generator(c0.gen(g).i, c0.gen(g).j, c0.gen(g).tag);
  for (int g = 0; g < c1.gen_slots(); ++g)
    if (c1.alive(g)) id1[g] = cone.add_generator(c1.gen(g).i + 1, c1.gen(g).j, c1.gen(g).tag);
  for (const auto& [src, row] : c0.differential())
    for (const auto& [tgt, v] : row) cone.add_entry(id0[src], id0[tgt], v);
  for (const auto& [src, row] : c1.differential())
    for (const auto& [tgt, v] : row) cone.add_entry(id1[src], id1[tgt], -v);
  for (const auto& [key, v] : w) cone.add_entry(id0[key.first], id1[key.second], v);
  cone.verify_d_squared();
  return cone;
}

namespace detail {

inline AbelianGroup homology_group(long dim, const DenseInt& incoming, const DenseInt& outgoing) {
  auto in_factors = linalg::snf_invariant_factors(incoming);
  auto out_factors = linalg::snf_invariant_factors(outgoing);
  AbelianGroup g;
  g.rank = dim - static_cast<long>(in_factors.size()) - static_cast<long>(out_factors.size());
  for (const Int& f : in_factors)
    if (f > 1)
      for (const Int& pk : linalg::prime_power_factors(f)) g.torsion.push_back(pk);
  std::sort(g.torsion.begin(), g.torsion.end());
  return g;
}

}  // namespace detail

// Integral homology per bidegree; requires a j-preserving differential.
inline HomologyTable homology_z(const BasedComplex& c) {
  if (c.grading() != Grading::bigraded)
    throw std::invalid_argument("homology_z: complex is not bigraded");
  std::map<Bideg, std::vector<int>> gens;
  for (int g = 0; g < c.gen_slots(); ++g)
    if (c.alive(g)) gens[{c.gen(g).i, c.gen(g).j}].push_back(g);
  HomologyTable out;
  static const std::vector<int> kNone;
  for (const auto& [bd, ids] : gens) {
    auto find = [&](int i, int j) -> const std::vector<int>& {
      auto it = gens.find({i, j});
      return it == gens.end() ? kNone : it->second;
    };
    const auto& prev = find(bd.i - 1, bd.j);
    const auto& next = find(bd.i + 1, bd.j);
    AbelianGroup g = detail::homology_group(static_cast<long>(ids.size()),
                                            c.block(prev, ids), c.block(ids, next));
    if (!g.trivial()) out[bd] = g;
  }
  return out;
}

// Integral homology per primary degree, ignoring j.
inline GradedHomology homology_z_igraded(const BasedComplex& c) {
  std::map<int, std::vector<int>> gens;
  for (int g = 0; g < c.gen_slots(); ++g)
    if (c.alive(g)) gens[c.gen(g).i].push_back(g);
  GradedHomology out;
  static const std::vector<int> kNone;
  for (const auto& [deg, ids] : gens) {
    auto find = [&](int i) -> const std::vector<int>& {
      auto it = gens.find(i);
      return it == gens.end() ? kNone : it->second;
    };
    AbelianGroup g = detail::homology_group(static_cast<long>(ids.size()),
                                            c.block(find(deg - 1), ids), c.block(ids, find(deg + 1)));
    if (!g.trivial()) out[deg] = g;
  }
  return out;
}

// Q-dimension of homology per primary degree.
inline std::map<int, long> homology_q_dims(const BasedComplex& c) {
  std::map<int, std::vector<int>> gens;
  for (int g = 0; g < c.gen_slots(); ++g)
    if (c.alive(g)) gens[c.gen(g).i].push_back(g);
  std::map<int, long> out;
  static const std::vector<int> kNone;
  for (const auto& [deg, ids] : gens) {
    auto find = [&](int i) -> const std::vector<int>& {
      auto it = gens.find(i);
      return it == gens.end() ? kNone : it->second;
    };
    long dim = static_cast<long>(ids.size());
    long r_in = linalg::rank_q(c.block(find(deg - 1), ids));
    long r_out = linalg::rank_q(c.block(ids, find(deg + 1)));
    long h = dim - r_in - r_out;
    if (h != 0) out[deg] = h;
  }
  return out;
}

// Associated graded of the filtration by secondary degree on Q-homology:
// for each primary degree the classes are filtered by the largest j such
// that some representative has all components in degree >= j.
inline FiltrationTable filtered_homology_q(const BasedComplex& c) {
  if (c.grading() == Grading::none)
    throw std::invalid_argument("filtered_homology_q: complex carries no secondary grading");
  std::map<int, std::vector<int>> by_deg;
  for (int g = 0; g < c.gen_slots(); ++g)
    if (c.alive(g)) by_deg[c.gen(g).i].push_back(g);
  FiltrationTable out;
  static const std::vector<int> kNone;
  for (const auto& [deg, ids_unsorted] : by_deg) {
    // coordinates sorted by j descending: the span of a prefix is C^{>= j}
    std::vector<int> ids = ids_unsorted;
    std::stable_sort(ids.begin(), ids.end(),
                     [&](int a, int b) { return c.gen(a).j > c.gen(b).j; });
    const int dim = static_cast<int>(ids.size());
    auto find = [&](int i) -> const std::vector<int>& {
      auto it = by_deg.find(i);
      return it == by_deg.end() ? kNone : it->second;
    };

    // kernel of d restricted to degree `deg`, echelonized bottom-first
    DenseInt out_block = c.block(ids, find(deg + 1));  // rows = ids
    DenseInt out_t(out_block.empty() ? 0 : out_block[0].size(), std::vector<Int>(dim, 0));
    for (int r = 0; r < dim; ++r)
      for (size_t cc = 0; cc < out_block[r].size(); ++cc) out_t[cc][r] = out_block[r][cc];
    auto kernel = linalg::kernel_q(out_t, dim);
    auto z_ech = linalg::bottom_echelon(std::move(kernel));

    // image of d from degree deg-1, as columns in the same coordinates
    const auto& prev = find(deg - 1);
    DenseInt in_block = c.block(prev, ids);  // rows = prev, cols = ids
    std::vector<std::vector<Rat>> image_cols;
    for (size_t r = 0; r < in_block.size(); ++r) {
      std::vector<Rat> col(dim);
      bool nonzero = false;
      for (int k = 0; k < dim; ++k) {
        col[k] = in_block[r][k];
        if (in_block[r][k] != 0) nonzero = true;
      }
      if (nonzero) image_cols.push_back(std::move(col));
    }
    auto b_ech = linalg::bottom_echelon(std::move(image_cols));

    // dim F^{deg, >= j} = #(kernel pivots in prefix) - #(image pivots in prefix)
    auto prefix_count = [&](const std::vector<std::vector<Rat>>& ech, int prefix_len) {
      long n = 0;
      for (const auto& v : ech) {
        int p = -1;
        for (int k = dim - 1; k >= 0; --k)
          if (v[k] != 0) {
            p = k;
            break;
          }
        if (p >= 0 && p < prefix_len) ++n;
      }
      return n;
    };

    std::vector<int> jvals;
    for (int id : ids) jvals.push_back(c.gen(id).j);  // descending
    std::vector<int> thresholds;  // distinct j values descending
    for (int j : jvals)
      if (thresholds.empty() || thresholds.back() != j) thresholds.push_back(j);

    long prev_f = 0;
    for (int t = 0; t < static_cast<int>(thresholds.size()); ++t) {
      int j = thresholds[t];
      int prefix_len = 0;
      while (prefix_len < dim && jvals[prefix_len] >= j) ++prefix_len;
      long f = prefix_count(z_ech, prefix_len) - prefix_count(b_ech, prefix_len);
      long graded = f - prev_f;
      if (graded != 0) out[{deg, j}] = graded;
      prev_f = f;
    }
  }
  return out;
}

}  // namespace khoma
