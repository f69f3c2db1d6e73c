#include <gtest/gtest.h>

#include "chainpaths/chain_map.hpp"
#include "chainpaths/errors.hpp"
#include "oracles.hpp"

namespace chainpaths {
namespace {

ChainMap sample_pc_map() { return ChainMap::make(4, 4, {{1, 1}, {3, 1}}); }

template <class F>
ErrorCode error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected chainpaths::Error";
  return ErrorCode::invalid_argument;
}

TEST(ChainMapMake, StoresPairsSortedByPoint) {
  const auto m = ChainMap::make(4, 4, {{3, 1}, {1, 1}});
  ASSERT_EQ(m.size(), 2u);
  EXPECT_EQ(m.pairs()[0], (MapPair{1, 1}));
  EXPECT_EQ(m.pairs()[1], (MapPair{3, 1}));
  EXPECT_EQ(m, sample_pc_map());
  EXPECT_EQ(to_display(m), "(1 3 / 1 1)");
}

TEST(ChainMapMake, EmptyMapIsValid) {
  const auto m = ChainMap::make(3, 3, {});
  EXPECT_TRUE(m.empty());
  EXPECT_EQ(m.dom_size(), 3);
  EXPECT_EQ(to_display(m), "( / )");
  EXPECT_TRUE(ChainMap::make(0, 0, {}).empty());
  EXPECT_TRUE(ChainMap::make(0, 1, {}).empty());
}

TEST(ChainMapMake, RejectsInvalidInput) {
  EXPECT_EQ(error_of([] { ChainMap::make(2, 2, {{0, 1}, {1, 0}}); }), ErrorCode::non_monotone_image);
  EXPECT_EQ(error_of([] { ChainMap::make(3, 3, {{1, 0}, {1, 1}}); }), ErrorCode::duplicate_domain_point);
  EXPECT_EQ(error_of([] { ChainMap::make(2, 2, {{2, 0}}); }), ErrorCode::point_out_of_range);
  EXPECT_EQ(error_of([] { ChainMap::make(2, 2, {{0, 2}}); }), ErrorCode::point_out_of_range);
  EXPECT_EQ(error_of([] { ChainMap::make(2, 2, {{-1, 0}}); }), ErrorCode::point_out_of_range);
  EXPECT_EQ(error_of([] { ChainMap::make(2, 4, {}); }), ErrorCode::invalid_size);
  EXPECT_EQ(error_of([] { ChainMap::make(-1, -1, {}); }), ErrorCode::invalid_size);
  // The extra codomain point is only reachable in the Delannoy model.
  EXPECT_NO_THROW(ChainMap::make(2, 3, {{0, 2}}));
}

TEST(ChainMapPredicates, Decreasing) {
  EXPECT_TRUE(is_decreasing(sample_pc_map()));
  EXPECT_TRUE(is_decreasing(ChainMap::identity(4)));
  EXPECT_FALSE(is_decreasing(ChainMap::make(2, 2, {{0, 1}})));
}

TEST(ChainMapPredicates, Full) {
  EXPECT_TRUE(is_full(ChainMap::identity(2)));
  EXPECT_FALSE(is_full(ChainMap::empty(2)));
  EXPECT_TRUE(is_full(ChainMap::make(2, 3, {{0, 0}, {1, 2}})));
}

TEST(ChainMapCompose, FollowsLeftToRightRule) {
  const auto f = ChainMap::make(2, 2, {{0, 0}});
  const auto g = ChainMap::make(2, 2, {{1, 0}});
  EXPECT_TRUE(compose(f, g).empty());

  const auto e = ChainMap::make(2, 2, {{0, 0}, {1, 0}});
  EXPECT_EQ(compose(e, e), e);

  // 0 -> 1 -> 1 and 1 -> 1 -> 1: the left factor acts first.
  const auto up = ChainMap::make(2, 2, {{0, 1}, {1, 1}});
  EXPECT_EQ(compose(up, ChainMap::identity(2)), up);
  EXPECT_EQ(compose(g, up), ChainMap::make(2, 2, {{1, 1}}));
  EXPECT_EQ(compose(up, g), ChainMap::make(2, 2, {{0, 0}, {1, 0}}));
}

TEST(ChainMapCompose, IdentityIsNeutralOnEveryPoMap) {
  for (int n = 0; n <= 4; ++n) {
    const auto id = ChainMap::identity(n);
    for (const auto& f : oracle::brute_class(ClassId::po, n)) {
      EXPECT_EQ(compose(id, f), f);
      EXPECT_EQ(compose(f, id), f);
    }
  }
}

TEST(ChainMapCompose, CrossesCodomainSizes) {
  const auto f = ChainMap::make(2, 3, {{0, 0}, {1, 2}});
  const auto g = ChainMap::make(3, 4, {{0, 1}, {2, 3}});
  EXPECT_EQ(error_of([&] { compose(f, g); }), ErrorCode::invalid_size);  // 2 -> 4 is not a valid size
  const auto h = ChainMap::make(3, 3, {{2, 2}});
  EXPECT_EQ(compose(f, h), ChainMap::make(2, 3, {{1, 2}}));
  EXPECT_EQ(error_of([&] { compose(h, f); }), ErrorCode::size_mismatch);
}

TEST(ChainMapCompose, AgreesWithPointwiseEvaluation) {
  for (int n = 1; n <= 3; ++n) {
    const auto po = oracle::brute_class(ClassId::po, n);
    for (const auto& f : po) {
      for (const auto& g : po) EXPECT_EQ(compose(f, g), oracle::compose_pointwise(f, g));
    }
  }
}

TEST(ChainMapIdempotent, SmallCases) {
  EXPECT_TRUE(is_idempotent(ChainMap::empty(2)));
  EXPECT_FALSE(is_idempotent(ChainMap::make(2, 2, {{1, 0}})));
  EXPECT_TRUE(is_idempotent(ChainMap::make(2, 2, {{0, 0}, {1, 0}})));
  EXPECT_EQ(error_of([] { is_idempotent(ChainMap::make(2, 3, {})); }), ErrorCode::size_mismatch);
}

TEST(ChainMapClasses, Membership) {
  const auto alpha = sample_pc_map();
  EXPECT_TRUE(belongs_to(alpha, ClassId::pc));
  EXPECT_FALSE(belongs_to(alpha, ClassId::c));
  EXPECT_TRUE(belongs_to(alpha, ClassId::po));
  EXPECT_TRUE(belongs_to(alpha, ClassId::qp));
  EXPECT_FALSE(belongs_to(alpha, ClassId::q));
  EXPECT_FALSE(belongs_to(alpha, ClassId::del));
  EXPECT_TRUE(belongs_to(alpha.widened(), ClassId::del));
  EXPECT_FALSE(belongs_to(alpha.widened(), ClassId::pc));

  EXPECT_TRUE(belongs_to(ChainMap::identity(2), ClassId::q));
  EXPECT_TRUE(belongs_to(ChainMap::identity(2), ClassId::c));
  EXPECT_TRUE(belongs_to(ChainMap::identity(2), ClassId::o));
  EXPECT_TRUE(belongs_to(ChainMap::empty(3), ClassId::qp));
  EXPECT_FALSE(belongs_to(ChainMap::make(2, 2, {{0, 1}, {1, 1}}), ClassId::c));
  EXPECT_TRUE(belongs_to(ChainMap::make(2, 2, {{0, 1}, {1, 1}}), ClassId::o));
}

TEST(ChainMapStats, Values) {
  const auto seven = ChainMap::make(7, 7, {{0, 0}, {2, 0}, {3, 0}, {5, 4}, {6, 4}});
  EXPECT_EQ(stats(seven), (MapStats{5, 2, 4}));
  EXPECT_EQ(stats(ChainMap::empty(3)), (MapStats{0, 0, std::nullopt}));
  EXPECT_EQ(stats(ChainMap::identity(3)), (MapStats{3, 3, 2}));
}

TEST(ChainMapPhiQ, MovesTheBottomPoint) {
  EXPECT_EQ(phi_q(ChainMap::identity(2)), ChainMap::make(2, 2, {{1, 1}}));
  EXPECT_EQ(phi_q(ChainMap::make(2, 2, {{0, 0}})), ChainMap::empty(2));
  EXPECT_EQ(phi_q_inv(ChainMap::make(2, 2, {{1, 0}})), ChainMap::make(2, 2, {{0, 0}, {1, 0}}));
  EXPECT_EQ(error_of([] { phi_q(ChainMap::make(2, 2, {{1, 0}})); }), ErrorCode::not_in_class);
  EXPECT_EQ(error_of([] { phi_q_inv(ChainMap::identity(2)); }), ErrorCode::not_in_class);
}

TEST(ChainMapText, JsonRoundTrip) {
  const auto alpha = sample_pc_map();
  EXPECT_EQ(to_json_text(alpha), R"({"n":4,"m":4,"map":[[1,1],[3,1]]})");
  EXPECT_EQ(parse_map(R"({"n": 4, "m": 4, "map": [[1,1],[3,1]]})"), alpha);
  EXPECT_EQ(parse_map(R"({"n":4,"map":[[3,1],[1,1]]})"), alpha);
  for (const auto& m : oracle::brute_class(ClassId::del, 3)) EXPECT_EQ(parse_map(to_json_text(m)), m);
}

TEST(ChainMapText, ParseErrors) {
  EXPECT_EQ(error_of([] { parse_map("not json"); }), ErrorCode::parse_error);
  EXPECT_EQ(error_of([] { parse_map(R"({"map":[]})"); }), ErrorCode::parse_error);
  EXPECT_EQ(error_of([] { parse_map(R"({"n":2,"map":[[0]]})"); }), ErrorCode::parse_error);
  EXPECT_EQ(error_of([] { parse_map(R"({"n":2,"map":[[0,1],[1,0]]})"); }), ErrorCode::non_monotone_image);
}

TEST(ChainMapClasses, ParseNames) {
  for (auto c : {ClassId::pc, ClassId::c, ClassId::po, ClassId::o, ClassId::del, ClassId::q, ClassId::qp}) {
    EXPECT_EQ(parse_class(class_name(c)), c);
  }
  EXPECT_FALSE(parse_class("pd").has_value());
}

}  // namespace
}  // namespace chainpaths
