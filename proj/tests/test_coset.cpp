#include <algorithm>
#include <array>
#include <set>
#include <vector>

#include "doctest.h"
#include "polyforge/coset.hpp"
#include "polyforge/errors.hpp"

using namespace polyforge;

namespace {

// --- independent oracles -------------------------------------------------

using Mat3 = std::array<std::array<int, 3>, 3>;

Mat3 mat_mul(const Mat3& a, const Mat3& b) {
  Mat3 c{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      int s = 0;
      for (int k = 0; k < 3; ++k) s += a[i][k] * b[k][j];
      c[i][j] = s;
    }
  return c;
}

Mat3 mat_id() { return Mat3{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}; }

// all signed permutation matrices = symmetries of the 3-cube
std::vector<Mat3> signed_permutations3() {
  std::vector<Mat3> out;
  std::array<int, 3> perm{0, 1, 2};
  std::sort(perm.begin(), perm.end());
  do {
    for (int s = 0; s < 8; ++s) {
      Mat3 m{};
      for (int i = 0; i < 3; ++i) m[i][perm[i]] = (s >> i & 1) ? -1 : 1;
      out.push_back(m);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

int mat_order(const Mat3& m) {
  Mat3 x = m;
  int k = 1;
  while (x != mat_id()) {
    x = mat_mul(x, m);
    ++k;
  }
  return k;
}

std::vector<Mat3> matrix_closure(std::vector<Mat3> gens) {
  std::set<Mat3> seen(gens.begin(), gens.end());
  seen.insert(mat_id());
  std::vector<Mat3> work(seen.begin(), seen.end());
  while (!work.empty()) {
    Mat3 m = work.back();
    work.pop_back();
    for (const Mat3& g : gens) {
      Mat3 p = mat_mul(m, g);
      if (seen.insert(p).second) work.push_back(p);
    }
  }
  return {seen.begin(), seen.end()};
}

// mirrors of the cube group: z -> -z, swap(y,z), swap(x,y)
const Mat3 kRho0{{{1, 0, 0}, {0, 1, 0}, {0, 0, -1}}};
const Mat3 kRho1{{{1, 0, 0}, {0, 0, 1}, {0, 1, 0}}};
const Mat3 kRho2{{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}};

}  // namespace

TEST_CASE("oracle: cube symmetry counts") {
  auto all = signed_permutations3();
  CHECK(all.size() == 48);

  // mirror generators really satisfy the [4,3] Coxeter relations
  CHECK(mat_order(kRho0) == 2);
  CHECK(mat_order(kRho1) == 2);
  CHECK(mat_order(kRho2) == 2);
  CHECK(mat_order(mat_mul(kRho0, kRho1)) == 4);
  CHECK(mat_order(mat_mul(kRho1, kRho2)) == 3);
  CHECK(mat_order(mat_mul(kRho0, kRho2)) == 2);
  CHECK(matrix_closure({kRho0, kRho1, kRho2}).size() == 48);

  // orbit of a cube vertex under the full symmetry group
  std::set<std::array<int, 3>> orbit;
  for (const Mat3& m : all) {
    std::array<int, 3> v{};
    for (int i = 0; i < 3; ++i) v[i] = m[i][0] + m[i][1] + m[i][2];
    orbit.insert(v);
  }
  CHECK(orbit.size() == 8);

  // vertex stabilizer / intersection instances
  CHECK(matrix_closure({kRho1, kRho2}).size() == 6);
  auto a = matrix_closure({kRho0, kRho1});
  auto b = matrix_closure({kRho1, kRho2});
  std::vector<Mat3> meet;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(meet));
  CHECK(meet.size() == 2);
}

TEST_CASE("oracle: tetrahedron symmetry count") {
  // all 4! vertex permutations preserve the complete edge set
  int count = 0;
  std::array<int, 4> p{0, 1, 2, 3};
  do {
    ++count;
  } while (std::next_permutation(p.begin(), p.end()));
  CHECK(count == 24);
}

TEST_CASE("enumeration of small groups") {
  Presentation z2(1, {true}, {});
  CHECK(group_order(z2) == 2);

  CHECK(group_order(Presentation::coxeter_string({4, 3})) == 48);
  CHECK(group_order(Presentation::coxeter_string({3, 3})) == 24);
  CHECK(group_order(Presentation::coxeter_string({4, 3, 3})) == 384);
  CHECK(group_order(Presentation::coxeter_string({3, 3, 3})) == 120);
  CHECK(group_order(Presentation::coxeter_string({3, 4, 3})) == 1152);
}

TEST_CASE("the 4-cube count matches the signed permutation oracle") {
  // 2^4 * 4! signed permutation matrices in dimension 4
  long long oracle = 16 * 24;
  CHECK(group_order(Presentation::coxeter_string({4, 3, 3})) == oracle);
}

TEST_CASE("dihedral family") {
  for (int n = 1; n <= 12; ++n) {
    Presentation d(2, {true, true}, {(Word::gen(0) * Word::gen(1)).pow(n)});
    CHECK(group_order(d) == 2 * n);
  }
}

TEST_CASE("non-involutory generators") {
  Presentation z5(1, {false}, {Word::gen(0).pow(5)});
  CHECK(group_order(z5) == 5);

  // quaternion group: a^4, b^2 = a^2, b^-1 a b = a^-1
  Presentation q8(2, {false, false},
                  {Word::gen(0).pow(4), Word::gen(1).pow(2) * Word::gen(0, -2),
                   Word::gen(1, -1) * Word::gen(0) * Word::gen(1) * Word::gen(0)});
  CHECK(group_order(q8) == 8);

  // heavy collapse: <a | a^5, a^3> is cyclic of order gcd(5,3) = 1
  Presentation z1(1, {false}, {Word::gen(0).pow(5), Word::gen(0).pow(3)});
  CHECK(group_order(z1) == 1);
}

TEST_CASE("subgroup enumeration") {
  Presentation cube = Presentation::coxeter_string({4, 3});
  auto t = enumerate_cosets(cube, {Word::gen(1), Word::gen(2)});
  CHECK(t.n_cosets == 8);  // orbit of a cube vertex
  t.check_invariants(cube);

  auto t2 = enumerate_cosets(cube, {Word::gen(0), Word::gen(1)});
  CHECK(t2.n_cosets == 6);  // one per 2-face
}

TEST_CASE("table invariants hold across shapes") {
  std::vector<Presentation> ps;
  ps.push_back(Presentation::coxeter_string({4, 3}));
  ps.push_back(Presentation::coxeter_string({3, 3, 3}));
  ps.push_back(Presentation(2, {false, false},
                            {Word::gen(0).pow(4), Word::gen(1).pow(2) * Word::gen(0, -2),
                             Word::gen(1, -1) * Word::gen(0) * Word::gen(1) * Word::gen(0)}));
  ps.push_back(Presentation(2, {true, false},
                            {Word::gen(1).pow(3), (Word::gen(0) * Word::gen(1)).pow(2)}));
  for (const auto& p : ps) {
    auto t = enumerate_cosets(p, {});
    t.check_invariants(p);
  }
}

TEST_CASE("infinite groups hit the bound") {
  // the euclidean square tessellation group [4,4]
  Presentation p44 = Presentation::coxeter_string({4, 4});
  EnumerationOptions small;
  small.max_cosets = 20000;
  CHECK_THROWS_AS(group_order(p44, small), LimitExceeded);

  // (2,3,7) triangle group
  Presentation t237(2, {true, false},
                    {Word::gen(1).pow(3), (Word::gen(0) * Word::gen(1)).pow(7)});
  CHECK_THROWS_AS(group_order(t237, small), LimitExceeded);

  // free group of rank 1
  Presentation free1(1, {false}, {});
  CHECK_THROWS_AS(group_order(free1, small), LimitExceeded);
}

TEST_CASE("closure is stable under a larger budget") {
  Presentation p = Presentation::coxeter_string({4, 3, 3});
  EnumerationOptions a, b;
  a.max_cosets = 5000;
  b.max_cosets = 1000000;
  auto ta = enumerate_cosets(p, {}, a);
  auto tb = enumerate_cosets(p, {}, b);
  CHECK(ta.n_cosets == tb.n_cosets);
  CHECK(ta.forward == tb.forward);  // standardized tables are identical
}

TEST_CASE("tight budgets still close when the table fits") {
  Presentation z2(1, {true}, {});
  EnumerationOptions tiny;
  tiny.max_cosets = 2;
  CHECK(enumerate_cosets(z2, {}, tiny).n_cosets == 2);
}

TEST_CASE("malformed input is rejected") {
  Presentation p = Presentation::coxeter_string({4, 3});
  CHECK_THROWS_AS(enumerate_cosets(p, {parse_word("g7")}), MalformedPresentation);
}
