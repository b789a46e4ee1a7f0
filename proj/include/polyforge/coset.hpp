#ifndef POLYFORGE_COSET_HPP
#define POLYFORGE_COSET_HPP

#include <vector>

#include "polyforge/words.hpp"

namespace polyforge {

struct EnumerationOptions {
  long long max_cosets = 1'000'000;
};

// Closed, collapsed coset table for a subgroup of a finitely presented
// group. Coset 0 is the subgroup itself; the per-generator actions are
// permutations of {0,...,n_cosets-1}.
struct CosetTable {
  int n_generators = 0;
  std::vector<bool> involutory;
  int n_cosets = 0;
  std::vector<std::vector<int>> forward;   // [gen][coset] action of g
  std::vector<std::vector<int>> backward;  // [gen][coset] action of g^-1
  std::vector<Word> subgroup_generators;

  int apply_letter(int c, Letter l) const {
    const auto& col = letter_is_inverse(l) ? backward : forward;
    return col[static_cast<std::size_t>(letter_gen(l))][static_cast<std::size_t>(c)];
  }
  int apply(int c, const Word& w) const {
    for (Letter l : w.letters) c = apply_letter(c, l);
    return c;
  }

  // Throws std::logic_error on any violated table invariant. Used by tests.
  void check_invariants(const Presentation& p) const;
};

// Todd-Coxeter coset enumeration: relator-driven scan with immediate
// deductions; on hitting the allocation bound a lookahead pass plus table
// compaction is attempted before giving up. Throws LimitExceeded when the
// table cannot be closed within max_cosets (which proves nothing about
// the group being infinite). The returned table is standardized: cosets
// are renumbered in breadth-first order, so the result is deterministic
// for a given presentation and subgroup.
CosetTable enumerate_cosets(const Presentation& p,
                            const std::vector<Word>& subgroup_gens,
                            const EnumerationOptions& opts = {});

// Order of the presented group: cosets of the trivial subgroup.
long long group_order(const Presentation& p, const EnumerationOptions& opts = {});

}  // namespace polyforge

#endif
