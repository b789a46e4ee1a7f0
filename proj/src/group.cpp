#include "polyforge/group.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "polyforge/errors.hpp"

namespace polyforge {

ConcreteGroup ConcreteGroup::enumerate(const Presentation& p,
                                       const EnumerationOptions& opts) {
  return ConcreteGroup(p, enumerate_cosets(p, {}, opts));
}

ConcreteGroup::ConcreteGroup(Presentation provenance, CosetTable regular_action)
    : pres_(std::move(provenance)), reg_(std::move(regular_action)) {
  if (!reg_.subgroup_generators.empty())
    throw std::logic_error("regular action must be over the trivial subgroup");
  int n = reg_.n_cosets;
  tree_parent_.assign(std::size_t(n), -1);
  tree_letter_.assign(std::size_t(n), -1);
  std::vector<int> bfs{0};
  tree_parent_[0] = 0;
  for (std::size_t head = 0; head < bfs.size(); ++head) {
    int c = bfs[head];
    for (int g = 0; g < reg_.n_generators; ++g) {
      for (bool inv : {false, true}) {
        if (inv && pres_.involutory[std::size_t(g)]) continue;
        Letter l = make_letter(g, inv);
        int e = reg_.apply_letter(c, l);
        if (tree_parent_[std::size_t(e)] < 0) {
          tree_parent_[std::size_t(e)] = c;
          tree_letter_[std::size_t(e)] = l;
          bfs.push_back(e);
        }
      }
    }
  }
  if (static_cast<int>(bfs.size()) != n)
    throw std::logic_error("regular action not transitive");
}

Word ConcreteGroup::word_of(int e) const {
  std::vector<Letter> rev;
  while (e != 0) {
    rev.push_back(tree_letter_[std::size_t(e)]);
    e = tree_parent_[std::size_t(e)];
  }
  Word w;
  w.letters.assign(rev.rbegin(), rev.rend());
  return w;
}

int ConcreteGroup::mul(int a, int b) const {
  // walk b's tree word starting from a; left and right actions commute
  std::vector<Letter> rev;
  while (b != 0) {
    rev.push_back(tree_letter_[std::size_t(b)]);
    b = tree_parent_[std::size_t(b)];
  }
  for (auto it = rev.rbegin(); it != rev.rend(); ++it) a = reg_.apply_letter(a, *it);
  return a;
}

int ConcreteGroup::inverse(int a) const {
  int e = 0;
  std::vector<Letter> rev;
  while (a != 0) {
    rev.push_back(tree_letter_[std::size_t(a)]);
    a = tree_parent_[std::size_t(a)];
  }
  for (Letter l : rev) e = reg_.apply_letter(e, letter_inverse(l));
  return e;
}

int ConcreteGroup::conjugate(int a, int by) const {
  return mul(mul(inverse(by), a), by);
}

int ConcreteGroup::element_order_of(int e) const {
  int k = 1, x = e;
  while (x != 0) {
    x = mul(x, e);
    ++k;
  }
  return k;
}

std::vector<int> ConcreteGroup::right_multiplication(int e) const {
  std::vector<Letter> rev;
  int b = e;
  while (b != 0) {
    rev.push_back(tree_letter_[std::size_t(b)]);
    b = tree_parent_[std::size_t(b)];
  }
  std::vector<int> perm(static_cast<std::size_t>(order()));
  for (int x = 0; x < order(); ++x) {
    int y = x;
    for (auto it = rev.rbegin(); it != rev.rend(); ++it) y = reg_.apply_letter(y, *it);
    perm[std::size_t(x)] = y;
  }
  return perm;
}

std::vector<int> ConcreteGroup::left_multiplication_letter(Letter l) const {
  std::vector<int> perm(static_cast<std::size_t>(order()), -1);
  perm[0] = reg_.apply_letter(0, l);
  // sweep the spanning tree: (g*x)*t = g*(x*t)
  std::vector<int> bfs{0};
  std::vector<bool> seen(std::size_t(order()), false);
  seen[0] = true;
  for (std::size_t head = 0; head < bfs.size(); ++head) {
    int c = bfs[head];
    for (int g = 0; g < reg_.n_generators; ++g) {
      for (bool inv : {false, true}) {
        Letter t = make_letter(g, inv);
        int e = reg_.apply_letter(c, t);
        if (!seen[std::size_t(e)]) {
          seen[std::size_t(e)] = true;
          perm[std::size_t(e)] = reg_.apply_letter(perm[std::size_t(c)], t);
          bfs.push_back(e);
        }
      }
    }
  }
  return perm;
}

Bitset ConcreteGroup::subgroup(const std::vector<Word>& gens,
                               long long explicit_set_bound) const {
  if (order() > explicit_set_bound)
    throw LimitExceeded("group order exceeds the explicit-set bound",
                        explicit_set_bound);
  std::vector<int> ids;
  ids.reserve(gens.size());
  for (const Word& w : gens) {
    pres_.require_valid_word(w);
    ids.push_back(element_of(w));
  }
  return subgroup_of_elements(ids);
}

Bitset ConcreteGroup::subgroup_of_elements(const std::vector<int>& gen_ids) const {
  Bitset out{static_cast<std::size_t>(order())};
  out.set(0);
  std::vector<int> frontier{0};
  std::vector<std::vector<Letter>> words;
  for (int e : gen_ids) {
    std::vector<Letter> rev;
    int b = e;
    while (b != 0) {
      rev.push_back(tree_letter_[std::size_t(b)]);
      b = tree_parent_[std::size_t(b)];
    }
    std::reverse(rev.begin(), rev.end());
    words.push_back(std::move(rev));
  }
  while (!frontier.empty()) {
    int x = frontier.back();
    frontier.pop_back();
    for (const auto& w : words) {
      int y = x;
      for (Letter l : w) y = reg_.apply_letter(y, l);
      if (!out.test(std::size_t(y))) {
        out.set(std::size_t(y));
        frontier.push_back(y);
      }
      // inverse direction keeps the orbit a subgroup even mid-sweep
      y = x;
      for (auto it = w.rbegin(); it != w.rend(); ++it)
        y = reg_.apply_letter(y, letter_inverse(*it));
      if (!out.test(std::size_t(y))) {
        out.set(std::size_t(y));
        frontier.push_back(y);
      }
    }
  }
  return out;
}

Bitset ConcreteGroup::whole_set() const {
  Bitset b{std::size_t(order())};
  for (int i = 0; i < order(); ++i) b.set(std::size_t(i));
  return b;
}

Bitset ConcreteGroup::singleton_identity() const {
  Bitset b{std::size_t(order())};
  b.set(0);
  return b;
}

Bitset set_product(const ConcreteGroup& g, const Bitset& a, const Bitset& b) {
  Bitset out{std::size_t(g.order())};
  b.for_each([&](int e) {
    auto perm = g.right_multiplication(e);
    a.for_each([&](int x) { out.set(std::size_t(perm[std::size_t(x)])); });
  });
  return out;
}

Bitset conjugate_set(const ConcreteGroup& g, const Bitset& s, int phi) {
  Bitset out{std::size_t(g.order())};
  int inv = g.inverse(phi);
  s.for_each([&](int e) { out.set(std::size_t(g.mul(g.mul(inv, e), phi))); });
  return out;
}

Bitset right_coset(const ConcreteGroup& g, const Bitset& s, int e) {
  Bitset out{std::size_t(g.order())};
  auto perm = g.right_multiplication(e);
  s.for_each([&](int x) { out.set(std::size_t(perm[std::size_t(x)])); });
  return out;
}

Bitset inverse_set(const ConcreteGroup& g, const Bitset& s) {
  Bitset out{std::size_t(g.order())};
  s.for_each([&](int e) { out.set(std::size_t(g.inverse(e))); });
  return out;
}

bool generator_preserving_isomorphic(const ConcreteGroup& ga,
                                     const std::vector<int>& gens_a,
                                     const ConcreteGroup& gb,
                                     const std::vector<int>& gens_b) {
  if (gens_a.size() != gens_b.size()) return false;
  Bitset sub_a = ga.subgroup_of_elements(gens_a);
  Bitset sub_b = gb.subgroup_of_elements(gens_b);
  if (sub_a.count() != sub_b.count()) return false;

  std::vector<int> image(std::size_t(ga.order()), -1);
  image[0] = 0;
  std::vector<int> bfs{0};
  for (std::size_t head = 0; head < bfs.size(); ++head) {
    int x = bfs[head];
    int y = image[std::size_t(x)];
    for (std::size_t i = 0; i < gens_a.size(); ++i) {
      int xa = ga.mul(x, gens_a[i]);
      int yb = gb.mul(y, gens_b[i]);
      if (image[std::size_t(xa)] < 0) {
        image[std::size_t(xa)] = yb;
        bfs.push_back(xa);
      } else if (image[std::size_t(xa)] != yb) {
        return false;
      }
      int xi = ga.mul(x, ga.inverse(gens_a[i]));
      int yi = gb.mul(y, gb.inverse(gens_b[i]));
      if (image[std::size_t(xi)] < 0) {
        image[std::size_t(xi)] = yi;
        bfs.push_back(xi);
      } else if (image[std::size_t(xi)] != yi) {
        return false;
      }
    }
  }
  return bfs.size() == sub_a.count();
}

std::vector<int> extend_to_automorphism(const ConcreteGroup& g,
                                        const std::vector<int>& gens,
                                        const std::vector<int>& images) {
  std::vector<int> map(std::size_t(g.order()), -1);
  map[0] = 0;
  std::vector<int> bfs{0};
  for (std::size_t head = 0; head < bfs.size(); ++head) {
    int x = bfs[head];
    int y = map[std::size_t(x)];
    for (std::size_t i = 0; i < gens.size(); ++i) {
      for (bool inv : {false, true}) {
        int gx = inv ? g.inverse(gens[i]) : gens[i];
        int gy = inv ? g.inverse(images[i]) : images[i];
        int xa = g.mul(x, gx);
        int ya = g.mul(y, gy);
        if (map[std::size_t(xa)] < 0) {
          map[std::size_t(xa)] = ya;
          bfs.push_back(xa);
        } else if (map[std::size_t(xa)] != ya) {
          return {};
        }
      }
    }
  }
  if (static_cast<int>(bfs.size()) != g.order()) return {};  // gens do not generate
  std::vector<bool> hit(std::size_t(g.order()), false);
  for (int v : map) {
    if (hit[std::size_t(v)]) return {};  // endomorphism, not bijective
    hit[std::size_t(v)] = true;
  }
  return map;
}

ConcreteGroup subgroup_as_group(const ConcreteGroup& g, const Bitset& elements,
                                const std::vector<int>& gen_ids) {
  std::vector<int> members = elements.to_vector();
  std::vector<int> local(std::size_t(g.order()), -1);
  for (std::size_t i = 0; i < members.size(); ++i)
    local[std::size_t(members[i])] = static_cast<int>(i);
  if (members.empty() || members[0] != 0)
    throw std::logic_error("subgroup must contain the identity");

  CosetTable t;
  t.n_generators = static_cast<int>(gen_ids.size());
  t.n_cosets = static_cast<int>(members.size());
  t.involutory.assign(gen_ids.size(), false);
  for (std::size_t i = 0; i < gen_ids.size(); ++i)
    t.involutory[i] = g.is_involution(gen_ids[i]);
  t.forward.assign(gen_ids.size(), std::vector<int>(members.size(), -1));
  t.backward = t.forward;
  for (std::size_t i = 0; i < gen_ids.size(); ++i) {
    auto perm = g.right_multiplication(gen_ids[i]);
    auto iperm = g.right_multiplication(g.inverse(gen_ids[i]));
    for (std::size_t m = 0; m < members.size(); ++m) {
      int img = local[std::size_t(perm[std::size_t(members[m])])];
      int inv = local[std::size_t(iperm[std::size_t(members[m])])];
      if (img < 0 || inv < 0)
        throw std::logic_error("element set is not closed under the generators");
      t.forward[i][m] = img;
      t.backward[i][m] = inv;
    }
  }
  Presentation pres(t.n_generators, t.involutory, {});
  return ConcreteGroup(std::move(pres), std::move(t));
}

Presentation synthesize_presentation(const ConcreteGroup& g,
                                     const std::vector<int>& gen_ids) {
  int n = static_cast<int>(gen_ids.size());
  std::vector<bool> inv_flags(std::size_t(n), false);
  for (int i = 0; i < n; ++i) inv_flags[std::size_t(i)] = g.is_involution(gen_ids[i]);

  // breadth-first spanning tree over the word action of the chosen generators
  int order = g.order();
  std::vector<int> parent(std::size_t(order), -1);
  std::vector<Letter> via(std::size_t(order), -1);
  std::vector<int> bfs{0};
  parent[0] = 0;
  for (std::size_t head = 0; head < bfs.size(); ++head) {
    int x = bfs[head];
    for (int i = 0; i < n; ++i) {
      for (bool inv : {false, true}) {
        if (inv && inv_flags[std::size_t(i)]) continue;
        int e = inv ? g.inverse(gen_ids[std::size_t(i)]) : gen_ids[std::size_t(i)];
        int y = g.mul(x, e);
        if (parent[std::size_t(y)] < 0) {
          parent[std::size_t(y)] = x;
          via[std::size_t(y)] = make_letter(i, inv);
          bfs.push_back(y);
        }
      }
    }
  }
  if (static_cast<int>(bfs.size()) != order)
    throw std::logic_error("generators do not generate the group");

  auto word_to = [&](int x) {
    std::vector<Letter> rev;
    while (x != 0) {
      rev.push_back(via[std::size_t(x)]);
      x = parent[std::size_t(x)];
    }
    Word w;
    w.letters.assign(rev.rbegin(), rev.rend());
    return w;
  };

  std::vector<Word> relators;
  std::unordered_set<std::vector<int>, IntVecHash> seen;
  Presentation shape(n, inv_flags, {});
  for (int x : bfs) {
    Word wx = word_to(x);
    for (int i = 0; i < n; ++i) {
      int y = g.mul(x, gen_ids[std::size_t(i)]);
      if (parent[std::size_t(y)] == x && via[std::size_t(y)] == make_letter(i, false))
        continue;  // tree edge
      Word rel = shape.normalize(wx * Word::gen(i) * word_to(y).inverse());
      if (rel.empty()) continue;
      if (seen.insert(rel.letters).second) relators.push_back(std::move(rel));
    }
  }
  Presentation p(n, inv_flags, std::move(relators));
  EnumerationOptions opts;
  opts.max_cosets = 4LL * order + 64;
  if (group_order(p, opts) != order)
    throw std::logic_error("synthesized presentation failed the order cross-check");
  return p;
}

std::vector<Bitset> all_subgroups(const ConcreteGroup& g) {
  std::unordered_set<Bitset, BitsetHash> seen;
  std::vector<Bitset> out;
  std::vector<std::pair<Bitset, std::vector<int>>> work;

  Bitset trivial = g.singleton_identity();
  seen.insert(trivial);
  out.push_back(trivial);
  work.push_back({trivial, {}});

  while (!work.empty()) {
    auto [h, gens] = std::move(work.back());
    work.pop_back();
    for (int e = 1; e < g.order(); ++e) {
      if (h.test(std::size_t(e))) continue;
      auto gens2 = gens;
      gens2.push_back(e);
      Bitset k = g.subgroup_of_elements(gens2);
      if (seen.insert(k).second) {
        out.push_back(k);
        work.push_back({std::move(k), std::move(gens2)});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const Bitset& a, const Bitset& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return a.to_vector() < b.to_vector();
  });
  return out;
}

}  // namespace polyforge
