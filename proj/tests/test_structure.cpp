#include <gtest/gtest.h>

#include "gin/structure.hpp"

using namespace gin;

namespace {

std::vector<Monomial> parse_list(std::initializer_list<std::vector<int>> es) {
  std::vector<Monomial> out;
  for (const auto& e : es) out.emplace_back(std::span<const int>(e));
  return out;
}

StandardMonomialSet example_b(std::uint64_t seed) {
  const auto g = sample_guarded(DegreeType::parse("4:2,3,3,4"), 32003, seed, 9);
  return StandardMonomialSet::of(g.data.initial, 9);
}

}  // namespace

TEST(StructureB, ExampleCountsAndTildeSets) {
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    const auto b = example_b(seed);
    EXPECT_EQ(b.counts(), (std::vector<std::size_t>{1, 4, 9, 14, 16, 14, 9, 4, 1, 0}));
    const auto td = tilde_decompose(b);
    const auto tc = td.counts();
    EXPECT_EQ(std::vector<std::size_t>(tc.begin() + 1, tc.begin() + 5),
              (std::vector<std::size_t>{3, 5, 5, 2}));
    EXPECT_TRUE(same_set(td.tilde0[1], parse_list({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}})));
    EXPECT_TRUE(same_set(td.tilde0[2], parse_list({{1, 1, 0, 0}, {0, 2, 0, 0}, {1, 0, 1, 0}, {0, 1, 1, 0}, {0, 0, 2, 0}})));
    EXPECT_TRUE(same_set(td.tilde0[3], parse_list({{1, 1, 1, 0}, {0, 2, 1, 0}, {1, 0, 2, 0}, {0, 1, 2, 0}, {0, 0, 3, 0}})));
    EXPECT_TRUE(same_set(td.tilde0[4], parse_list({{0, 1, 3, 0}, {0, 0, 4, 0}})));
    EXPECT_TRUE(same_set(b.grade(5), times_power(b.grade(3), 4, 2)));
    EXPECT_TRUE(same_set(b.grade(8), parse_list({{0, 0, 0, 8}})));
    EXPECT_TRUE(check_structure_B(b, DegreeType::parse("4:2,3,3,4")).holds());
  }
}

TEST(StructureB, DetectsABrokenSet) {
  auto b = example_b(0);
  std::swap(b.grades[5][0], b.grades[4][0]);
  EXPECT_FALSE(check_structure_B(b, DegreeType::parse("4:2,3,3,4")).holds());
}

TEST(StructureB, MultiplesLieInIdeal) {
  const auto b = example_b(1);
  EXPECT_TRUE(verify_multiples_in_ideal(b, 5).empty());
  EXPECT_TRUE(verify_multiples_in_ideal(b, 4).empty());
  EXPECT_THROW(verify_multiples_in_ideal(b, 8), UsageError);
}

TEST(Incremental, ExtractS) {
  EXPECT_EQ(extract_S({0, 1, 2, 3, 20}, 4, 14), (std::vector<std::size_t>{1, 2, 3, 4}));
  EXPECT_EQ(extract_S({0, 3, 5}, 3, 9), (std::vector<std::size_t>{1, 4, 6}));
  EXPECT_FALSE(extract_S({0, 12}, 2, 9).has_value());
}

TEST(Incremental, ExampleWithOneStep) {
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    const auto setup = prepare_incremental(DegreeType::parse("5:2,3,3,4,5"), 32003, seed);
    EXPECT_EQ(setup.delta, 8);
    EXPECT_TRUE(check_E_grades(setup.e, setup.b).empty());
    EXPECT_TRUE(initial_matches_projection(setup.in_i, setup.in_j));
    const auto res = run_incremental(setup);
    ASSERT_TRUE(res.findings.empty());
    EXPECT_EQ(res.istar, 1);
    EXPECT_EQ(res.steps[0].added, (std::vector<Monomial>{Monomial{1, 1, 1, 2, 0}}));
    EXPECT_EQ(res.S, (std::vector<std::vector<std::size_t>>{{1, 2, 3, 4}}));
    const auto direct = initial_ideal(groebner(setup.instance.forms, 13, setup.instance.field()));
    EXPECT_EQ(res.assembled, direct);
    ASSERT_TRUE(res.F.has_value());
    EXPECT_EQ(res.F->counts(), (std::vector<std::size_t>{1, 5, 14, 28, 44, 57, 62, 57, 44, 28, 14, 5, 1, 0}));
    const auto fd = StandardMonomialSet::of(direct, 13);
    for (int i = 0; i <= 13; ++i) EXPECT_TRUE(same_set(res.F->grade(i), fd.grade(i))) << i;
  }
}

TEST(Incremental, ClosedFormBranch) {
  // base (3;2,2,3) has delta = 4; d = 4 >= delta.
  const auto setup = prepare_incremental(DegreeType::parse("4:2,2,3,4"), 32003, 0);
  const auto res = run_incremental(setup);
  EXPECT_TRUE(res.closed_form);
  EXPECT_TRUE(res.steps.empty());
  const auto direct = initial_ideal(groebner(setup.instance.forms, setup.delta + setup.d, setup.instance.field()));
  EXPECT_EQ(res.assembled, direct);
}

TEST(Incremental, EvenAndOddAssemblyAgreeWithDirect) {
  // delta - d: 1, 2, 1, 1
  for (const char* type : {"4:2,2,3,3", "4:2,3,3,3", "3:3,3,3", "4:2,2,2,2"}) {
    for (std::uint64_t seed = 0; seed < 2; ++seed) {
      const auto setup = prepare_incremental(DegreeType::parse(type), 32003, seed);
      const auto res = run_incremental(setup);
      ASSERT_TRUE(res.findings.empty()) << type;
      const int top = setup.delta + setup.d;
      const auto direct = initial_ideal(groebner(setup.instance.forms, top, setup.instance.field()));
      EXPECT_EQ(res.assembled, direct) << type;
      if (res.F) {
        const auto fd = StandardMonomialSet::of(direct, top);
        for (int i = 0; i <= top; ++i) EXPECT_TRUE(same_set(res.F->grade(i), fd.grade(i))) << type << " grade " << i;
      }
    }
  }
}

TEST(Incremental, RejectsTypesWithoutRowsEqualVariables) {
  EXPECT_THROW(split_last(DegreeType::parse("3:2,2")), UsageError);
  EXPECT_THROW(prepare_incremental(DegreeType::parse("1:2"), 32003, 0), UsageError);
}
