#include "lutz/openbook.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace lutz;

namespace {

std::size_t count_hand(const OpenBook& ob, Handedness h) {
  return static_cast<std::size_t>(
      std::count_if(ob.monodromy().begin(), ob.monodromy().end(), [h](const Twist& t) { return t.hand == h; }));
}

// Genus part of a class: the first 2g coordinates.
bool genus_part_zero(const OpenBook& ob, const HomologyClass& v) {
  return std::all_of(v.begin(), v.begin() + 2 * ob.genus(), [](std::int64_t x) { return x == 0; });
}

// Sum of the boundary classes a curve encloses, read off its locus.
HomologyClass class_from_locus(const OpenBook& ob, const CurveDescriptor& c) {
  const CurveDescriptor* base = &c;
  while (const auto* pc = std::get_if<ParallelCopy>(&base->locus)) base = &ob.curve(pc->source);
  std::vector<BindingId> inside;
  if (const auto* bp = std::get_if<BoundaryParallel>(&base->locus)) inside.push_back(bp->binding);
  if (const auto* e = std::get_if<Encircles>(&base->locus)) {
    inside.push_back(e->binding);
    inside.insert(inside.end(), e->punctures.begin(), e->punctures.end());
  }
  HomologyClass v(ob.class_size(), 0);
  for (BindingId k : inside) v[2 * static_cast<std::size_t>(ob.genus()) + k.index] += 1;
  return ob.normalize(v);
}

}  // namespace

TEST(OpenBook, EulerCharacteristicAndBindings) {
  EXPECT_EQ(OpenBook(0, 1).euler_characteristic(), 1);
  EXPECT_EQ(OpenBook(0, 2).euler_characteristic(), 0);
  EXPECT_EQ(OpenBook(2, 3).euler_characteristic(), -5);
  EXPECT_EQ(OpenBook(1, 2).bindings().size(), 2u);
  EXPECT_THROW(OpenBook(-1, 1), std::invalid_argument);
  EXPECT_THROW(OpenBook(0, 0), std::invalid_argument);
}

TEST(OpenBook, BoundaryClassesSumToZero) {
  for (int g = 0; g <= 3; ++g)
    for (std::size_t b = 1; b <= 5; ++b) {
      const OpenBook ob(g, b);
      HomologyClass sum(ob.class_size(), 0);
      for (BindingId k : ob.bindings()) {
        const HomologyClass d = ob.boundary_class(k);
        for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += d[i];
        EXPECT_EQ(ob.null_homologous(d), b == 1);
      }
      EXPECT_TRUE(ob.null_homologous(sum));
    }
}

TEST(OpenBook, UnknownBindingAndCurve) {
  OpenBook ob(0, 2);
  EXPECT_THROW(ob.boundary_class({2}), UnknownBinding);
  EXPECT_THROW(ob.add_twist({"x"}, Handedness::right), UnknownCurve);
  EXPECT_THROW(ob.curve({"x"}), UnknownCurve);
  EXPECT_THROW(ob.add_curve({{"c"}, BoundaryParallel{{5}}, HomologyClass(2, 0)}), UnknownBinding);
  EXPECT_THROW(stabilize_at_binding(ob, {7}), UnknownBinding);
  EXPECT_THROW(full_lutz_on_binding(ob, {2}), UnknownBinding);
  ob.add_curve({{"c"}, BoundaryParallel{{0}}, ob.boundary_class({0})});
  EXPECT_THROW(ob.add_curve({{"c"}, BoundaryParallel{{1}}, ob.boundary_class({1})}), std::invalid_argument);
}

TEST(StabilizeAtBinding, DiskBecomesAnnulus) {
  const Stabilized s = stabilize_at_binding(OpenBook(0, 1), {0});
  EXPECT_EQ(s.book.genus(), 0);
  EXPECT_EQ(s.book.boundary_count(), 2u);
  EXPECT_EQ(s.book.euler_characteristic(), 0);
  EXPECT_EQ(s.new_binding, BindingId{1});
  ASSERT_EQ(s.book.monodromy().size(), 1u);
  EXPECT_EQ(s.book.monodromy()[0], (Twist{s.twist_curve, Handedness::right}));
  EXPECT_FALSE(s.book.null_homologous(s.book.curve(s.twist_curve).h1_class));
}

TEST(StabilizeAtBinding, LowersEulerCharacteristicByOne) {
  for (int g = 0; g <= 3; ++g)
    for (std::size_t b = 1; b <= 4; ++b) {
      const OpenBook ob(g, b);
      for (BindingId k : ob.bindings()) {
        const Stabilized s = stabilize_at_binding(ob, k);
        EXPECT_EQ(s.book.euler_characteristic(), ob.euler_characteristic() - 1);
        EXPECT_EQ(s.book.genus(), g);
      }
    }
}

TEST(RealizeBindingPushoff, StabilizesOnlyWhenBoundaryIsNullHomologous) {
  const RealizedCurve disk = realize_binding_pushoff(OpenBook(0, 1), {0});
  EXPECT_TRUE(disk.stabilized);
  EXPECT_EQ(disk.book.boundary_count(), 2u);
  EXPECT_FALSE(disk.book.null_homologous(disk.book.curve(disk.curve).h1_class));

  const RealizedCurve three = realize_binding_pushoff(OpenBook(0, 3), {1});
  EXPECT_FALSE(three.stabilized);
  EXPECT_EQ(three.book.boundary_count(), 3u);
  EXPECT_EQ(three.book.curve(three.curve).h1_class, three.book.boundary_class({1}));

  const RealizedCurve genus2 = realize_binding_pushoff(OpenBook(2, 1), {0});
  EXPECT_TRUE(genus2.stabilized);
  EXPECT_EQ(genus2.book.genus(), 2);
}

TEST(PushoffWithTwoZigzags, EncirclesTwoNewPunctures) {
  const OpenBook base(0, 4);
  const RealizedCurve l1 = realize_binding_pushoff(base, {0});
  const NewCurve l2 = pushoff_with_two_zigzags(l1.book, l1.curve, {0}, "L2");
  const OpenBook& ob = l2.book;
  ASSERT_EQ(ob.boundary_count(), 6u);
  const CurveDescriptor& c = ob.curve(l2.curve);
  EXPECT_EQ(c.locus, (CurveLocus{Encircles{{0}, {{4}, {5}}}}));

  // d0 + d4 + d5 = -(d1 + d2 + d3); the oracle uses the second form.
  HomologyClass expected(ob.class_size(), 0);
  for (std::size_t i : {1, 2, 3}) expected[i] = -1;
  EXPECT_EQ(ob.reduced(c.h1_class), ob.reduced(expected));
  EXPECT_EQ(ob.reduced(c.h1_class), (HomologyClass{0, -1, -1, -1, 0}));
  EXPECT_EQ(count_hand(ob, Handedness::right), 2u);
}

TEST(ParallelCopy, SameClassNoNewTwists) {
  const OpenBook base = annulus_open_book();
  const NewCurve copy = parallel_copy(base, {"core"});
  EXPECT_EQ(copy.book.curve(copy.curve).h1_class, base.curve({"core"}).h1_class);
  EXPECT_EQ(copy.book.monodromy(), base.monodromy());
  EXPECT_EQ(copy.book.curve(copy.curve).locus, (CurveLocus{ParallelCopy{{"core"}}}));
  EXPECT_THROW(parallel_copy(base, {"ghost"}), UnknownCurve);
}

TEST(FullLutzOnBinding, Disk) {
  const auto [after, trace] = full_lutz_on_binding(OpenBook(0, 1), {0});
  EXPECT_EQ(after.genus(), 0);
  EXPECT_EQ(after.boundary_count(), 6u);
  EXPECT_TRUE(trace.initial_stabilization);
  EXPECT_EQ(trace.right_twists_added, 5u);
  EXPECT_EQ(trace.left_twists_added, 4u);
  EXPECT_EQ(count_hand(after, Handedness::right), 5u);
  EXPECT_EQ(count_hand(after, Handedness::left), 4u);
  // The four link curves carry the left twists, last in the word.
  const auto& w = after.monodromy();
  const std::vector<CurveId> tail{w[5].curve, w[6].curve, w[7].curve, w[8].curve};
  EXPECT_EQ(tail, (std::vector<CurveId>{trace.l1, trace.l2, trace.l3, trace.l4}));
}

TEST(FullLutzOnBinding, Annulus) {
  const OpenBook ob = annulus_open_book();
  const auto [after, trace] = full_lutz_on_binding(ob, {0});
  EXPECT_FALSE(trace.initial_stabilization);
  EXPECT_EQ(after.boundary_count(), 6u);
  EXPECT_EQ(after.monodromy().size(), 1u + 8u);
  EXPECT_EQ(after.monodromy().front(), ob.monodromy().front());
}

TEST(FullLutzOnBinding, GenusThree) {
  const auto [after, trace] = full_lutz_on_binding(OpenBook(3, 2), {1});
  EXPECT_EQ(after.genus(), 3);
  EXPECT_EQ(after.boundary_count(), 6u);
  EXPECT_EQ(trace.right_twists_added, 4u);
}

TEST(FullLutzOnBinding, PropertiesOverSmallPages) {
  for (int g = 0; g <= 3; ++g)
    for (std::size_t b = 1; b <= 4; ++b) {
      const OpenBook ob(g, b);
      for (BindingId k : ob.bindings()) {
        const auto [after, trace] = full_lutz_on_binding(ob, k);
        const std::size_t extra = trace.initial_stabilization ? 5 : 4;
        EXPECT_EQ(trace.initial_stabilization, b == 1);
        EXPECT_EQ(after.genus(), g);
        EXPECT_EQ(after.boundary_count(), b + extra);
        EXPECT_EQ(after.euler_characteristic(), ob.euler_characteristic() - static_cast<long>(extra));
        EXPECT_EQ(count_hand(after, Handedness::right), extra);
        EXPECT_EQ(count_hand(after, Handedness::left), 4u);
        EXPECT_EQ(after.monodromy().size(), extra + 4);
        for (const CurveDescriptor& c : after.curves()) {
          EXPECT_TRUE(genus_part_zero(after, c.h1_class)) << c.id.name;
          EXPECT_FALSE(after.null_homologous(c.h1_class)) << c.id.name;
        }
        EXPECT_EQ(after.curve(trace.l2).h1_class, after.curve(trace.l3).h1_class);
        for (const CurveDescriptor& c : after.curves())
          EXPECT_EQ(c.h1_class, class_from_locus(after, c)) << c.id.name << " on " << g << "," << b;
      }
    }
}

TEST(FullLutzOnBinding, ClassesFollowLociOnAnnulus) {
  const auto [after, trace] = full_lutz_on_binding(annulus_open_book(), {0});
  for (const CurveDescriptor& c : after.curves()) EXPECT_EQ(c.h1_class, class_from_locus(after, c)) << c.id.name;
  EXPECT_EQ(after.curve({"core"}).h1_class, after.boundary_class({1}));
  // L4 encloses everything but circle 1.
  HomologyClass minus_d1 = after.boundary_class({1});
  for (auto& x : minus_d1) x = -x;
  EXPECT_EQ(after.curve(trace.l4).h1_class, minus_d1);
}

TEST(T2xIPiece, Shape) {
  const RelativeOpenBook piece = t2xI_relative_piece();
  EXPECT_TRUE(piece.planar());
  EXPECT_EQ(piece.page.boundary_count(), 6u);
  EXPECT_EQ(piece.count(BoundaryRole::manifold_boundary), 2u);
  EXPECT_EQ(piece.count(BoundaryRole::binding), 4u);
  EXPECT_EQ(piece.page.monodromy().size(), 8u);
  EXPECT_EQ(count_hand(piece.page, Handedness::right), 4u);
  EXPECT_EQ(count_hand(piece.page, Handedness::left), 4u);
  EXPECT_FALSE(piece.page.has_curve({"core"}));
  EXPECT_EQ(piece.roles[0], BoundaryRole::manifold_boundary);
  EXPECT_EQ(piece.roles[1], BoundaryRole::manifold_boundary);
}

TEST(WordReduce, CancelsAdjacentInversePairs) {
  OpenBook ob = annulus_open_book();
  ob.add_twist({"core"}, Handedness::left);
  EXPECT_TRUE(word_reduce(ob).monodromy().empty());

  OpenBook nested(0, 3);
  nested.add_curve({{"a"}, BoundaryParallel{{0}}, nested.boundary_class({0})});
  nested.add_curve({{"b"}, BoundaryParallel{{1}}, nested.boundary_class({1})});
  nested.set_monodromy({{{"a"}, Handedness::right},
                        {{"b"}, Handedness::right},
                        {{"b"}, Handedness::left},
                        {{"a"}, Handedness::left},
                        {{"b"}, Handedness::left}});
  EXPECT_EQ(word_reduce(nested).monodromy(), (std::vector<Twist>{{{"b"}, Handedness::left}}));

  OpenBook same(0, 2);
  same.add_curve({{"a"}, BoundaryParallel{{0}}, same.boundary_class({0})});
  same.set_monodromy({{{"a"}, Handedness::right}, {{"a"}, Handedness::right}});
  EXPECT_EQ(word_reduce(same).monodromy().size(), 2u);
}

TEST(WordReduce, OnlyAdjacentPairsCancel) {
  OpenBook ob(0, 3);
  ob.add_curve({{"c"}, BoundaryParallel{{0}}, ob.boundary_class({0})});
  ob.add_curve({{"d"}, BoundaryParallel{{1}}, ob.boundary_class({1})});
  ob.set_monodromy({{{"c"}, Handedness::right},
                    {{"d"}, Handedness::right},
                    {{"d"}, Handedness::left},
                    {{"c"}, Handedness::right}});
  const OpenBook once = word_reduce(ob);
  EXPECT_EQ(once.monodromy(), (std::vector<Twist>{{{"c"}, Handedness::right}, {{"c"}, Handedness::right}}));
  EXPECT_EQ(word_reduce(once), once);
}

TEST(WordReduce, LutzOnDiskDoesNotCollapse) {
  const auto [after, trace] = full_lutz_on_binding(OpenBook(0, 1), {0});
  EXPECT_EQ(word_reduce(after).monodromy(), after.monodromy());
}
