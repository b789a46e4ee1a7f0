#include "polyforge/cgroup.hpp"

#include <algorithm>
#include <stdexcept>

#include "polyforge/errors.hpp"

namespace polyforge {

const Bitset& StringCGroup::distinguished(unsigned mask) const {
  return masks[mask];
}

const Bitset& StringCGroup::gamma(int skip) const {
  unsigned full = (1u << rank) - 1;
  return masks[full & ~(1u << skip)];
}

Bitset StringCGroup::gamma_lt(int i) const {
  return masks[(1u << i) - 1];
}

Bitset StringCGroup::gamma_gt(int i) const {
  unsigned full = (1u << rank) - 1;
  return masks[full & ~((2u << i) - 1)];
}

CGroupCheck verify_string_cgroup(std::shared_ptr<const ConcreteGroup> g, int rank) {
  CGroupCheck out;
  if (rank < 1 || rank > g->presentation().n_generators) {
    out.failure.kind = CGroupFailure::Kind::NonInvolution;
    out.failure.message = "rank outside the presentation's generator range";
    return out;
  }
  if (rank > 30) throw UnsupportedRank("rank too large for subset enumeration");

  StringCGroup c;
  c.group = g;
  c.rank = rank;
  for (int i = 0; i < rank; ++i) {
    c.rho.push_back(Word::gen(i));
    c.rho_ids.push_back(g->element_of(Word::gen(i)));
  }

  for (int i = 0; i < rank; ++i) {
    int e = c.rho_ids[std::size_t(i)];
    if (!g->is_involution(e)) {
      out.failure.kind = CGroupFailure::Kind::NonInvolution;
      out.failure.i = i;
      out.failure.message =
          "generator " + std::to_string(i) + " is not an involution";
      return out;
    }
  }
  for (int i = 0; i < rank; ++i)
    for (int j = i + 2; j < rank; ++j) {
      int e = g->mul(c.rho_ids[std::size_t(i)], c.rho_ids[std::size_t(j)]);
      if (g->mul(e, e) != 0) {
        out.failure.kind = CGroupFailure::Kind::BrokenString;
        out.failure.i = i;
        out.failure.j = j;
        out.failure.message = "(rho" + std::to_string(i) + " rho" +
                              std::to_string(j) + ")^2 is not trivial";
        return out;
      }
    }

  // element sets of every distinguished subgroup
  unsigned full = (1u << rank);
  c.masks.resize(full);
  for (unsigned mask = 0; mask < full; ++mask) {
    std::vector<int> gens;
    for (int i = 0; i < rank; ++i)
      if (mask >> i & 1) gens.push_back(c.rho_ids[std::size_t(i)]);
    c.masks[mask] = g->subgroup_of_elements(gens);
  }

  // the intersection condition, brute force over all subset pairs
  for (unsigned a = 0; a < full; ++a)
    for (unsigned b = 0; b < full; ++b) {
      if ((c.masks[a] & c.masks[b]) == c.masks[a & b]) continue;
      out.failure.kind = CGroupFailure::Kind::Intersection;
      out.failure.mask_i = a;
      out.failure.mask_j = b;
      out.failure.message =
          "intersection condition fails for I=" + std::to_string(a) +
          ", J=" + std::to_string(b) + " (as generator-index bitmasks)";
      return out;
    }

  out.group = std::move(c);
  return out;
}

std::string SchlafliType::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(entries[i]);
  }
  return s + "}";
}

SchlafliType schlafli_type(const StringCGroup& c) {
  SchlafliType t;
  for (int j = 1; j < c.rank; ++j)
    t.entries.push_back(c.group->element_order_of(
        c.group->mul(c.rho_ids[std::size_t(j - 1)], c.rho_ids[std::size_t(j)])));
  return t;
}

namespace {

// element set of <sigma_i : i in mask> (bit i-1 stands for sigma_i)
Bitset sigma_subset(const ConcreteGroup& g, const std::vector<int>& sigma_ids,
                    unsigned mask) {
  std::vector<int> gens;
  for (std::size_t i = 0; i < sigma_ids.size(); ++i)
    if (mask >> i & 1) gens.push_back(sigma_ids[i]);
  return g.subgroup_of_elements(gens);
}

RotationSystem::Verdict classify(const RotationSystem& r);

}  // namespace

RotationCheck verify_rotation_system(std::shared_ptr<const ConcreteGroup> g,
                                     int rank, bool heuristic_high_rank) {
  RotationCheck out;
  int k = rank - 1;  // generator count
  if (rank < 3) {
    out.failure = "rotation systems need rank >= 3";
    return out;
  }
  if (k > g->presentation().n_generators) {
    out.failure = "rank outside the presentation's generator range";
    return out;
  }
  if (rank >= 5 && !heuristic_high_rank)
    throw UnsupportedRank(
        "the exact intersection condition for rank >= 5 rotation systems is "
        "not implemented; opt into the heuristic check explicitly");

  RotationSystem r;
  r.group = g;
  r.rank = rank;
  for (int i = 0; i < k; ++i) {
    r.sigma.push_back(Word::gen(i));
    r.sigma_ids.push_back(g->element_of(Word::gen(i)));
    r.periods.push_back(g->element_order_of(r.sigma_ids.back()));
    if (r.periods.back() < 2) {
      out.failure = "sigma" + std::to_string(i + 1) + " is trivial";
      return out;
    }
  }

  // (sigma_i ... sigma_j)^2 = identity for all i < j
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      int e = 0;
      for (int t = i; t <= j; ++t) e = g->mul(e, r.sigma_ids[std::size_t(t)]);
      if (g->mul(e, e) != 0) {
        out.failure = "(sigma" + std::to_string(i + 1) + "..sigma" +
                      std::to_string(j + 1) + ")^2 is not trivial";
        return out;
      }
    }

  if (rank == 3) {
    Bitset s1 = sigma_subset(*g, r.sigma_ids, 1u);
    Bitset s2 = sigma_subset(*g, r.sigma_ids, 2u);
    if ((s1 & s2).count() != 1) {
      out.failure = "<sigma1> meets <sigma2> beyond the identity";
      return out;
    }
  } else if (rank == 4) {
    Bitset s1 = sigma_subset(*g, r.sigma_ids, 1u);
    Bitset s2 = sigma_subset(*g, r.sigma_ids, 2u);
    Bitset s3 = sigma_subset(*g, r.sigma_ids, 4u);
    if ((s1 & s2).count() != 1) {
      out.failure = "<sigma1> meets <sigma2> beyond the identity";
      return out;
    }
    if ((s2 & s3).count() != 1) {
      out.failure = "<sigma2> meets <sigma3> beyond the identity";
      return out;
    }
    Bitset s12 = sigma_subset(*g, r.sigma_ids, 3u);
    Bitset s23 = sigma_subset(*g, r.sigma_ids, 6u);
    if (!((s12 & s23) == s2)) {
      out.failure = "<sigma1,sigma2> meets <sigma2,sigma3> beyond <sigma2>";
      return out;
    }
  } else {
    // all sub-tuple intersections; a heuristic stand-in, never "verified"
    unsigned full = 1u << k;
    std::vector<Bitset> sets(std::size_t(full));
    for (unsigned m = 0; m < full; ++m)
      sets[std::size_t(m)] = sigma_subset(*g, r.sigma_ids, m);
    for (unsigned a = 0; a < full; ++a)
      for (unsigned b = 0; b < full; ++b)
        if (!((sets[std::size_t(a)] & sets[std::size_t(b)]) == sets[std::size_t(a & b)])) {
          out.failure = "heuristic sub-tuple intersection fails for masks " +
                        std::to_string(a) + ", " + std::to_string(b);
          return out;
        }
    r.intersection_heuristic = true;
  }

  r.verdict = classify(r);
  out.system = std::move(r);
  return out;
}

DirectRegularity is_directly_regular(const RotationSystem& r) {
  const ConcreteGroup& g = *r.group;
  std::vector<int> images = r.sigma_ids;
  images[0] = g.inverse(r.sigma_ids[0]);
  if (r.sigma_ids.size() >= 2)
    images[1] = g.mul(g.mul(r.sigma_ids[0], r.sigma_ids[0]), r.sigma_ids[1]);
  DirectRegularity out;
  out.witness = extend_to_automorphism(g, r.sigma_ids, images);
  if (!out.witness.empty()) {
    bool involutory = true;
    for (int x = 0; x < g.order() && involutory; ++x)
      involutory = out.witness[std::size_t(out.witness[std::size_t(x)])] == x;
    out.directly_regular = involutory;
    if (!involutory) out.witness.clear();
  }
  return out;
}

namespace {

RotationSystem::Verdict classify(const RotationSystem& r) {
  return is_directly_regular(r).directly_regular
             ? RotationSystem::Verdict::DirectlyRegular
             : RotationSystem::Verdict::Chiral;
}

}  // namespace

RotationSubgroup rotation_subgroup(const StringCGroup& c) {
  const ConcreteGroup& g = *c.group;
  std::vector<Word> words;
  std::vector<int> ids;
  for (int i = 1; i < c.rank; ++i) {
    words.push_back(c.rho[std::size_t(i - 1)] * c.rho[std::size_t(i)]);
    ids.push_back(g.element_of(words.back()));
  }
  Bitset elems = g.subgroup_of_elements(ids);
  int index = static_cast<int>(std::size_t(g.order()) / elems.count());

  auto sub = std::make_shared<ConcreteGroup>(subgroup_as_group(g, elems, ids));
  RotationSystem r;
  r.group = sub;
  r.rank = c.rank;
  for (int i = 0; i < c.rank - 1; ++i) {
    r.sigma.push_back(Word::gen(i));
    r.sigma_ids.push_back(sub->element_of(Word::gen(i)));
    r.periods.push_back(sub->element_order_of(r.sigma_ids.back()));
  }
  r.verdict = index == 2 ? RotationSystem::Verdict::DirectlyRegular
                         : RotationSystem::Verdict::Unverified;
  return {std::move(r), index};
}

RotationSystem enantiomorph(const RotationSystem& r) {
  const ConcreteGroup& g = *r.group;
  RotationSystem out;
  out.group = r.group;
  out.rank = r.rank;
  out.sigma = r.sigma;
  out.sigma[0] = r.sigma[0].inverse().reduced();
  if (out.sigma.size() >= 2)
    out.sigma[1] = (r.sigma[0] * r.sigma[0] * r.sigma[1]).reduced();
  for (const Word& w : out.sigma) {
    out.sigma_ids.push_back(g.element_of(w));
    out.periods.push_back(g.element_order_of(out.sigma_ids.back()));
  }
  out.verdict = r.verdict;  // same group, mirrored base flag
  out.intersection_heuristic = r.intersection_heuristic;
  return out;
}

}  // namespace polyforge
