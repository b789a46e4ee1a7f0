#ifndef POLYFORGE_GROUP_HPP
#define POLYFORGE_GROUP_HPP

#include <memory>
#include <vector>

#include "polyforge/coset.hpp"
#include "polyforge/util.hpp"
#include "polyforge/words.hpp"

namespace polyforge {

// A finite group realized as the permutation action on its own elements
// (the coset table over the trivial subgroup). Element 0 is the identity;
// two words are equal in the group iff they move 0 to the same element.
class ConcreteGroup {
 public:
  static ConcreteGroup enumerate(const Presentation& p,
                                 const EnumerationOptions& opts = {});

  ConcreteGroup(Presentation provenance, CosetTable regular_action);

  int order() const { return reg_.n_cosets; }
  const Presentation& presentation() const { return pres_; }
  const CosetTable& regular_action() const { return reg_; }

  int apply(int e, const Word& w) const { return reg_.apply(e, w); }
  int apply_letter(int e, Letter l) const { return reg_.apply_letter(e, l); }
  int element_of(const Word& w) const { return reg_.apply(0, w); }
  int mul(int a, int b) const;
  int inverse(int a) const;
  int conjugate(int a, int by) const;  // by^-1 * a * by
  int element_order_of(int e) const;
  int element_order(const Word& w) const { return element_order_of(element_of(w)); }
  bool is_involution(int e) const { return e != 0 && mul(e, e) == 0; }

  // Word over the presentation's generators evaluating to element e
  // (path in the breadth-first spanning tree of the regular action).
  Word word_of(int e) const;

  // Full permutation x -> x * e.
  std::vector<int> right_multiplication(int e) const;
  // Full permutation x -> g * x for a single generator letter; left and
  // right multiplications commute, which makes this a tree sweep.
  std::vector<int> left_multiplication_letter(Letter l) const;

  // Element set of <gens>, as the orbit of the identity under right
  // multiplication. Throws LimitExceeded when order() exceeds the bound.
  Bitset subgroup(const std::vector<Word>& gens,
                  long long explicit_set_bound = 1'000'000) const;
  Bitset subgroup_of_elements(const std::vector<int>& gen_ids) const;

  Bitset whole_set() const;
  Bitset singleton_identity() const;

 private:
  Presentation pres_;
  CosetTable reg_;
  std::vector<int> tree_parent_;
  std::vector<Letter> tree_letter_;
};

// Set arithmetic in the regular action.
Bitset set_product(const ConcreteGroup& g, const Bitset& a, const Bitset& b);
Bitset conjugate_set(const ConcreteGroup& g, const Bitset& s, int phi);
Bitset right_coset(const ConcreteGroup& g, const Bitset& s, int e);
Bitset inverse_set(const ConcreteGroup& g, const Bitset& s);

// Does gen_a[i] -> gen_b[i] extend to an isomorphism <gen_a> -> <gen_b>?
// Exact check on the two regular actions (joint breadth-first sweep).
bool generator_preserving_isomorphic(const ConcreteGroup& ga,
                                     const std::vector<int>& gens_a,
                                     const ConcreteGroup& gb,
                                     const std::vector<int>& gens_b);

// Does gens[i] -> images[i] extend to a group automorphism of g?
// Returns the induced permutation of elements, or empty if it does not.
std::vector<int> extend_to_automorphism(const ConcreteGroup& g,
                                        const std::vector<int>& gens,
                                        const std::vector<int>& images);

// Concrete group on the elements of a subgroup (relabeled 0..m-1 in
// ascending ambient id order, identity first). The returned presentation
// carries the generator arity and involution flags but no relators;
// synthesize_presentation recovers a faithful relator set when needed.
ConcreteGroup subgroup_as_group(const ConcreteGroup& g, const Bitset& elements,
                                const std::vector<int>& gen_ids);

// Faithful presentation for a concrete group on the given generators:
// spanning-tree relators harvested from the regular action, cross-checked
// by re-enumeration.
Presentation synthesize_presentation(const ConcreteGroup& g,
                                     const std::vector<int>& gen_ids);

// Every subgroup of g, as element bitsets (ascending by size, then
// lexicographic). Exhaustive: meant for small groups.
std::vector<Bitset> all_subgroups(const ConcreteGroup& g);

}  // namespace polyforge

#endif
