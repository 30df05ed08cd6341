#include <doctest.h>

#include <random>

#include "arthur/rootsys.hpp"
#include "arthur/subsystem.hpp"
#include "arthur/weyl.hpp"

using namespace arthur;

TEST_CASE("positive root counts by closure") {
  CHECK(RootSystem::get("G2").num_positive() == 6);
  CHECK(RootSystem::get("F4").num_positive() == 24);
  CHECK(RootSystem::get("E6").num_positive() == 36);
  CHECK(RootSystem::get("E7").num_positive() == 63);
  CHECK(RootSystem::get("E8").num_positive() == 120);
  CHECK(RootSystem::get("A1").num_positive() == 1);
  CHECK(RootSystem::get("A7").num_positive() == 28);
  CHECK(RootSystem::get("B4").num_positive() == 16);
  CHECK(RootSystem::get("C3").num_positive() == 9);
  CHECK(RootSystem::get("D8").num_positive() == 56);
}

TEST_CASE("marks of the highest root") {
  const auto& e8 = RootSystem::get("E8");
  CHECK(e8.marks() == IntVec{2, 3, 4, 6, 5, 4, 3, 2});
  const auto& f4 = RootSystem::get("F4");
  CHECK(f4.marks() == IntVec{2, 3, 4, 2});
  // dual affine marks (coroot coordinates of the dual highest root)
  CHECK(f4.dual_marks() == IntVec{2, 4, 3, 2});
  const auto& g2 = RootSystem::get("G2");
  CHECK(g2.marks() == IntVec{3, 2});
  CHECK(g2.dual_marks() == IntVec{2, 3});
}

TEST_CASE("unknown type ids rejected") {
  CHECK_THROWS_AS(RootSystem::get("H3"), std::invalid_argument);
  CHECK_THROWS_AS(RootSystem::get("E9"), std::invalid_argument);
  CHECK_THROWS_AS(RootSystem::get("D2"), std::invalid_argument);
}

TEST_CASE("fundamental weight / coroot pairing") {
  const auto& rs = RootSystem::get("F4");
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      CHECK(rs.pair(rs.fundamental_weight(i), j) == Rat(i == j ? 1 : 0));
  for (int i = 0; i < 4; ++i) CHECK(rs.pair(rs.rho(), i) == 1);
}

TEST_CASE("height of the highest E8 coroot") {
  const auto& e8 = RootSystem::get("E8");
  CHECK(e8.pair(e8.rho(), e8.highest_root()) == 29);
}

TEST_CASE("A1 is rank one with rho the fundamental weight") {
  const auto& a1 = RootSystem::get("A1");
  CHECK(a1.num_positive() == 1);
  CHECK(a1.rho() == a1.fundamental_weight(0));
}

TEST_CASE("weight coordinate conversions round-trip") {
  const auto& a2 = RootSystem::get("A2");
  auto wc = weight_coordinates(a2, a2.rho());
  CHECK(wc.simple_root == std::vector<Rat>{1, 1});
  CHECK(wc.dominant);

  const auto& f4 = RootSystem::get("F4");
  Weight alpha1 = weight_from_ints(f4.root_fund(f4.find_root({1, 0, 0, 0})));
  for (int j = 0; j < 4; ++j) CHECK(alpha1[j] == Rat(f4.cartan(0, j)));

  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    Weight w(4);
    for (auto& x : w) x = Rat((int)(rng() % 19) - 9, 1 + (int)(rng() % 3));
    auto c = f4.to_root_coords(w);
    CHECK(f4.from_root_coords(c) == w);
  }
}

TEST_CASE("rho is the half sum of positive roots") {
  for (auto name : {"G2", "F4", "E6"}) {
    const auto& rs = RootSystem::get(name);
    std::vector<Rat> sum(rs.rank(), Rat(0));
    for (int idx = 0; idx < rs.num_positive(); ++idx)
      for (int j = 0; j < rs.rank(); ++j) sum[j] += Rat(rs.root_fund(idx)[j]);
    for (int j = 0; j < rs.rank(); ++j) CHECK(sum[j] == 2);
  }
}

TEST_CASE("symmetrized pairing agrees with the inner product") {
  // (lambda, alpha) = (alpha,alpha)/2 * <lambda, alpha^vee>
  for (auto name : {"G2", "F4", "E6"}) {
    const auto& rs = RootSystem::get(name);
    std::mt19937 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
      Weight lam(rs.rank());
      for (auto& x : lam) x = Rat((int)(rng() % 15) - 7);
      int idx = (int)(rng() % rs.num_positive());
      Weight alpha = weight_from_ints(rs.root_fund(idx));
      Rat half_norm = rs.inner(alpha, alpha) / 2;
      CHECK(rs.inner(lam, alpha) == half_norm * rs.pair(lam, idx));
      CHECK(rs.is_long(idx) == (half_norm == 1));
    }
  }
}

TEST_CASE("Weyl invariance of the pairing") {
  const auto& rs = RootSystem::get("F4");
  std::mt19937 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<int> word;
    for (int k = 0; k < 10; ++k) word.push_back((int)(rng() % 4));
    auto w = WeylElement::from_word(rs, word);
    Weight lam(4);
    for (auto& x : lam) x = Rat((int)(rng() % 9) - 4);
    int t = (int)(rng() % (2 * rs.num_positive()));
    CHECK(rs.pair(apply_weyl(rs, w, lam), apply_weyl_root(rs, w, t)) == rs.pair(lam, t));
  }
}

TEST_CASE("simple reflections permute the remaining positive roots") {
  for (auto name : {"G2", "F4", "E6"}) {
    const auto& rs = RootSystem::get(name);
    for (int i = 0; i < rs.rank(); ++i) {
      int flipped = 0;
      for (int idx = 0; idx < rs.num_positive(); ++idx)
        if (rs.reflect(i, idx) >= rs.num_positive()) ++flipped;
      CHECK(flipped == 1);
    }
  }
}

TEST_CASE("classifier identifies standard sub-bases") {
  const auto& e8 = RootSystem::get("E8");
  // simple roots 1..7 of E8 form an E7
  std::vector<int> nodes{0, 1, 2, 3, 4, 5, 6};
  auto cls = classify_base(root_base_cartan(e8, nodes));
  REQUIRE(cls.components.size() == 1);
  CHECK(cls.components[0].type.str() == "E7");
  CHECK(cls.components[0].nodes == std::vector<int>{0, 1, 2, 3, 4, 5, 6});

  const auto& f4 = RootSystem::get("F4");
  auto b3 = classify_base(root_base_cartan(f4, {0, 1, 2}));
  CHECK(b3.components[0].type.str() == "B3");
  auto c3 = classify_base(root_base_cartan(f4, {1, 2, 3}));
  CHECK(c3.components[0].type.str() == "C3");
  CHECK(c3.components[0].nodes == std::vector<int>{2, 1, 0});  // short, short, long
  CHECK(c3.algebra_label() == "sp6");
  CHECK(b3.algebra_label(1) == "so7+a");
}
