#ifndef POLYFORGE_CGROUP_HPP
#define POLYFORGE_CGROUP_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "polyforge/group.hpp"

namespace polyforge {

// Verified string C-group: distinguished involutions rho_0..rho_{n-1}
// satisfying the string relations and the intersection condition. The
// element sets of all 2^n distinguished subgroups are cached at
// verification time, so a verified value is immutable and safe to read
// concurrently.
struct StringCGroup {
  std::shared_ptr<const ConcreteGroup> group;
  int rank = 0;
  std::vector<Word> rho;      // single-letter generator words
  std::vector<int> rho_ids;   // their element ids

  const Bitset& distinguished(unsigned mask) const;  // <rho_i : i in mask>
  const Bitset& gamma(int skip) const;               // <rho_i : i != skip>
  Bitset gamma_lt(int i) const;                      // <rho_j : j < i>
  Bitset gamma_gt(int i) const;                      // <rho_j : j > i>

  std::vector<Bitset> masks;  // indexed by subset mask
};

struct CGroupFailure {
  enum class Kind { None, NonInvolution, BrokenString, Intersection };
  Kind kind = Kind::None;
  int i = -1, j = -1;          // generator indices for the first two kinds
  unsigned mask_i = 0, mask_j = 0;  // witness subsets for intersection failures
  std::string message;
};

struct CGroupCheck {
  std::optional<StringCGroup> group;
  CGroupFailure failure;
  bool ok() const { return group.has_value(); }
};

// Checks that the first `rank` generators of g form a string C-group.
CGroupCheck verify_string_cgroup(std::shared_ptr<const ConcreteGroup> g, int rank);

struct SchlafliType {
  std::vector<int> entries;  // p_1 .. p_{n-1}
  std::string to_string() const;
  bool operator==(const SchlafliType&) const = default;
};

SchlafliType schlafli_type(const StringCGroup& c);

// Rotation system: generators sigma_1..sigma_{n-1} with sigma_i^{p_i} and
// (sigma_i...sigma_j)^2 trivial, plus the rank-appropriate intersection
// condition. For rank >= 5 the exact condition is not implemented; an
// opt-in heuristic checks all sub-tuple intersections and is reported as
// heuristic, never as verified.
struct RotationSystem {
  enum class Verdict { Unverified, DirectlyRegular, Chiral };

  std::shared_ptr<const ConcreteGroup> group;
  int rank = 0;               // polytope rank n; generators are sigma_1..sigma_{n-1}
  std::vector<Word> sigma;
  std::vector<int> sigma_ids;
  std::vector<int> periods;   // p_1..p_{n-1}
  Verdict verdict = Verdict::Unverified;
  bool intersection_heuristic = false;
};

struct RotationCheck {
  std::optional<RotationSystem> system;
  std::string failure;
  bool ok() const { return system.has_value(); }
};

// Checks the first rank-1 generators of g as sigma_1..sigma_{n-1} and
// classifies the verified system as chiral or directly regular.
RotationCheck verify_rotation_system(std::shared_ptr<const ConcreteGroup> g,
                                     int rank, bool heuristic_high_rank = false);

// Rotation words sigma_i = rho_{i-1} rho_i as a system over the derived
// subgroup, together with its index in the full group (1 or 2).
struct RotationSubgroup {
  RotationSystem system;
  int index = 0;
};
RotationSubgroup rotation_subgroup(const StringCGroup& c);

struct DirectRegularity {
  bool directly_regular = false;
  std::vector<int> witness;  // induced permutation of elements when true
};

// Tests whether sigma_1 -> sigma_1^-1, sigma_2 -> sigma_1^2 sigma_2,
// sigma_i -> sigma_i extends to a group automorphism.
DirectRegularity is_directly_regular(const RotationSystem& r);

// The generator system seen from the 0-adjacent base flag:
// sigma_1^-1, sigma_1^2 sigma_2, sigma_3, ..., over the same group.
RotationSystem enantiomorph(const RotationSystem& r);

}  // namespace polyforge

#endif
