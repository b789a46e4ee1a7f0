#include "polyforge/coset.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

#include "polyforge/errors.hpp"

namespace polyforge {

namespace {

// Internal signal: allocation bound hit; the driver compacts and retries.
struct TableFull {};

class Enumerator {
 public:
  Enumerator(const Presentation& p, const std::vector<Word>& sub_gens,
             long long max_cosets)
      : pres_(p), sub_gens_(sub_gens), limit_(std::max<long long>(max_cosets, 2)) {
    // Column layout: one column per letter; an involutory generator shares
    // the column with its inverse.
    col_of_letter_.assign(static_cast<std::size_t>(2 * p.n_generators), -1);
    for (int g = 0; g < p.n_generators; ++g) {
      int c = ncols_++;
      col_of_letter_[std::size_t(make_letter(g, false))] = c;
      if (p.involutory[std::size_t(g)])
        col_of_letter_[std::size_t(make_letter(g, true))] = c;
      else
        col_of_letter_[std::size_t(make_letter(g, true))] = ncols_++;
    }
    inv_col_.assign(std::size_t(ncols_), -1);
    for (int g = 0; g < p.n_generators; ++g) {
      int cf = col_of_letter_[std::size_t(make_letter(g, false))];
      int cb = col_of_letter_[std::size_t(make_letter(g, true))];
      inv_col_[std::size_t(cf)] = cb;
      inv_col_[std::size_t(cb)] = cf;
    }
    for (const Word& r : p.relators) {
      p.require_valid_word(r);
      auto cols = cols_of(p.normalize(r));
      if (!cols.empty()) relators_.push_back(std::move(cols));
    }
    for (const Word& w : sub_gens_) {
      p.require_valid_word(w);
      auto cols = cols_of(p.normalize(w));
      if (!cols.empty()) sub_cols_.push_back(std::move(cols));
    }
    new_coset();  // coset 0 = the subgroup
  }

  CosetTable run() {
    while (true) {
      try {
        for (const auto& w : sub_cols_) scan_and_fill(0, w);
        break;
      } catch (TableFull) {
        reclaim_or_throw();
      }
    }
    int cursor = 0;
    while (true) {
      while (cursor < nrows_ &&
             (p_[std::size_t(cursor)] != cursor || scanned_[std::size_t(cursor)]))
        ++cursor;
      if (cursor >= nrows_) break;
      int alpha = cursor;
      try {
        bool died = false;
        for (const auto& rel : relators_) {
          scan_and_fill(alpha, rel);
          if (p_[std::size_t(alpha)] != alpha) {
            died = true;
            break;
          }
        }
        if (!died) {
          for (int x = 0; x < ncols_; ++x)
            if (tab(alpha, x) < 0) define(alpha, x);
          scanned_[std::size_t(alpha)] = true;
        }
      } catch (TableFull) {
        // Compaction renumbers every coset, so restart the sweep; the
        // per-coset scanned flags survive and nothing is scanned twice.
        reclaim_or_throw();
        cursor = 0;
      }
    }
    return finish();
  }

 private:
  std::vector<int> cols_of(const Word& w) const {
    std::vector<int> out;
    out.reserve(w.letters.size());
    for (Letter l : w.letters) out.push_back(col_of_letter_[std::size_t(l)]);
    return out;
  }

  int& tab(int c, int x) { return tab_[std::size_t(c) * std::size_t(ncols_) + std::size_t(x)]; }

  int new_coset() {
    int n = nrows_++;
    tab_.resize(std::size_t(nrows_) * std::size_t(ncols_), -1);
    p_.push_back(n);
    scanned_.push_back(false);
    ++nlive_;
    return n;
  }

  int rep(int k) {
    int l = k;
    while (p_[std::size_t(l)] != l) l = p_[std::size_t(l)];
    int m = k;
    while (p_[std::size_t(m)] != l) {
      int nxt = p_[std::size_t(m)];
      p_[std::size_t(m)] = l;
      m = nxt;
    }
    return l;
  }

  void merge(int a, int b) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    p_[std::size_t(b)] = a;
    --nlive_;
    dead_.push_back(b);
  }

  void coincidence(int a, int b) {
    merge(a, b);
    while (!dead_.empty()) {
      int d = dead_.front();
      dead_.pop_front();
      for (int x = 0; x < ncols_; ++x) {
        int e = tab(d, x);
        if (e < 0) continue;
        tab(d, x) = -1;
        tab(e, inv_col_[std::size_t(x)]) = -1;
        int u = rep(d);
        int v = rep(e);
        int existing = tab(u, x);
        if (existing >= 0) {
          merge(v, existing);
        } else {
          int back = tab(v, inv_col_[std::size_t(x)]);
          if (back >= 0) {
            merge(u, back);
          } else {
            tab(u, x) = v;
            tab(v, inv_col_[std::size_t(x)]) = u;
          }
        }
      }
    }
  }

  void define(int c, int x) {
    if (nrows_ >= limit_) throw TableFull{};
    int n = new_coset();
    tab(c, x) = n;
    tab(n, inv_col_[std::size_t(x)]) = c;
  }

  void scan_and_fill(int alpha, const std::vector<int>& w) {
    int f = alpha, i = 0;
    int b = alpha, j = static_cast<int>(w.size()) - 1;
    while (true) {
      while (i <= j && tab(f, w[std::size_t(i)]) >= 0) f = tab(f, w[std::size_t(i++)]);
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && tab(b, inv_col_[std::size_t(w[std::size_t(j)])]) >= 0)
        b = tab(b, inv_col_[std::size_t(w[std::size_t(j--)])]);
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (j == i) {
        tab(f, w[std::size_t(i)]) = b;
        tab(b, inv_col_[std::size_t(w[std::size_t(i)])]) = f;
        return;
      }
      define(f, w[std::size_t(i)]);
    }
  }

  // Scan without defining; harvests coincidences and deductions only.
  void lookahead_scan(int alpha, const std::vector<int>& w) {
    int f = alpha, i = 0;
    int b = alpha, j = static_cast<int>(w.size()) - 1;
    while (i <= j && tab(f, w[std::size_t(i)]) >= 0) f = tab(f, w[std::size_t(i++)]);
    if (i > j) {
      if (f != b) coincidence(f, b);
      return;
    }
    while (j >= i && tab(b, inv_col_[std::size_t(w[std::size_t(j)])]) >= 0)
      b = tab(b, inv_col_[std::size_t(w[std::size_t(j--)])]);
    if (j < i) {
      coincidence(f, b);
    } else if (j == i) {
      tab(f, w[std::size_t(i)]) = b;
      tab(b, inv_col_[std::size_t(w[std::size_t(i)])]) = f;
    }
  }

  void reclaim_or_throw() {
    long long before = nlive_;
    for (int c = 0; c < nrows_; ++c) {
      if (p_[std::size_t(c)] != c) continue;
      for (const auto& rel : relators_) {
        lookahead_scan(c, rel);
        if (p_[std::size_t(c)] != c) break;
      }
    }
    // Give up unless the lookahead freed a usable amount of space.
    if (nlive_ >= limit_ - 1 || nlive_ > before - before / 10)
      throw LimitExceeded(
          "coset table exceeded " + std::to_string(limit_) +
              " cosets without closing (proves nothing about finiteness)",
          limit_);
    compact();
  }

  void compact() {
    std::vector<int> newid(std::size_t(nrows_), -1);
    int m = 0;
    for (int c = 0; c < nrows_; ++c)
      if (p_[std::size_t(c)] == c) newid[std::size_t(c)] = m++;
    std::vector<int> fresh(std::size_t(m) * std::size_t(ncols_), -1);
    std::vector<bool> fresh_scanned(std::size_t(m), false);
    for (int c = 0; c < nrows_; ++c) {
      if (p_[std::size_t(c)] != c) continue;
      int nc = newid[std::size_t(c)];
      fresh_scanned[std::size_t(nc)] = scanned_[std::size_t(c)];
      for (int x = 0; x < ncols_; ++x) {
        int e = tab(c, x);
        if (e >= 0)
          fresh[std::size_t(nc) * std::size_t(ncols_) + std::size_t(x)] =
              newid[std::size_t(rep(e))];
      }
    }
    tab_ = std::move(fresh);
    scanned_ = std::move(fresh_scanned);
    nrows_ = m;
    nlive_ = m;
    p_.resize(std::size_t(m));
    std::iota(p_.begin(), p_.end(), 0);
  }

  // Renumber cosets in breadth-first order and emit the final table.
  CosetTable finish() {
    compact();
    std::vector<int> order(std::size_t(nrows_), -1);
    std::vector<int> bfs;
    bfs.reserve(std::size_t(nrows_));
    order[0] = 0;
    bfs.push_back(0);
    for (std::size_t head = 0; head < bfs.size(); ++head) {
      int c = bfs[head];
      for (int x = 0; x < ncols_; ++x) {
        int e = tab(c, x);
        if (e >= 0 && order[std::size_t(e)] < 0) {
          order[std::size_t(e)] = static_cast<int>(bfs.size());
          bfs.push_back(e);
        }
      }
    }
    if (static_cast<int>(bfs.size()) != nrows_)
      throw std::logic_error("closed coset table is not transitive");

    CosetTable t;
    t.n_generators = pres_.n_generators;
    t.involutory = pres_.involutory;
    t.n_cosets = nrows_;
    t.subgroup_generators = sub_gens_;
    t.forward.assign(std::size_t(pres_.n_generators),
                     std::vector<int>(std::size_t(nrows_), -1));
    t.backward = t.forward;
    for (int c = 0; c < nrows_; ++c) {
      for (int g = 0; g < pres_.n_generators; ++g) {
        int cf = col_of_letter_[std::size_t(make_letter(g, false))];
        int cb = col_of_letter_[std::size_t(make_letter(g, true))];
        int img_f = tab(c, cf);
        int img_b = tab(c, cb);
        if (img_f < 0 || img_b < 0)
          throw std::logic_error("closed coset table has an undefined entry");
        t.forward[std::size_t(g)][std::size_t(order[std::size_t(c)])] =
            order[std::size_t(img_f)];
        t.backward[std::size_t(g)][std::size_t(order[std::size_t(c)])] =
            order[std::size_t(img_b)];
      }
    }
    return t;
  }

  const Presentation& pres_;
  std::vector<Word> sub_gens_;
  long long limit_;
  int ncols_ = 0;
  std::vector<int> col_of_letter_;
  std::vector<int> inv_col_;
  std::vector<std::vector<int>> relators_;
  std::vector<std::vector<int>> sub_cols_;
  std::vector<int> tab_;
  std::vector<int> p_;
  std::vector<bool> scanned_;
  std::deque<int> dead_;
  int nrows_ = 0;
  long long nlive_ = 0;
};

}  // namespace

CosetTable enumerate_cosets(const Presentation& p,
                            const std::vector<Word>& subgroup_gens,
                            const EnumerationOptions& opts) {
  return Enumerator(p, subgroup_gens, opts.max_cosets).run();
}

long long group_order(const Presentation& p, const EnumerationOptions& opts) {
  return enumerate_cosets(p, {}, opts).n_cosets;
}

void CosetTable::check_invariants(const Presentation& p) const {
  auto fail = [](const std::string& m) { throw std::logic_error("coset table: " + m); };
  if (n_cosets <= 0) fail("empty table");
  for (int g = 0; g < n_generators; ++g) {
    std::vector<bool> seen(std::size_t(n_cosets), false);
    for (int c = 0; c < n_cosets; ++c) {
      int img = forward[std::size_t(g)][std::size_t(c)];
      if (img < 0 || img >= n_cosets) fail("action out of range");
      if (seen[std::size_t(img)]) fail("action not a bijection");
      seen[std::size_t(img)] = true;
      if (backward[std::size_t(g)][std::size_t(img)] != c)
        fail("backward action is not the inverse");
      if (p.involutory[std::size_t(g)] &&
          forward[std::size_t(g)][std::size_t(img)] != c)
        fail("involutory generator does not act as an involution");
    }
  }
  for (const Word& r : p.relators)
    for (int c = 0; c < n_cosets; ++c)
      if (apply(c, r) != c) fail("relator does not fix coset " + std::to_string(c));
  for (const Word& w : subgroup_generators)
    if (apply(0, w) != 0) fail("subgroup generator moves coset 0");
  std::vector<bool> reach(std::size_t(n_cosets), false);
  std::vector<int> stack{0};
  reach[0] = true;
  int count = 0;
  while (!stack.empty()) {
    int c = stack.back();
    stack.pop_back();
    ++count;
    for (int g = 0; g < n_generators; ++g) {
      int ef = forward[std::size_t(g)][std::size_t(c)];
      int eb = backward[std::size_t(g)][std::size_t(c)];
      for (int e : {ef, eb}) {
        if (!reach[std::size_t(e)]) {
          reach[std::size_t(e)] = true;
          stack.push_back(e);
        }
      }
    }
  }
  if (count != n_cosets) fail("action not transitive");
}

}  // namespace polyforge
