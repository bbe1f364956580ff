#include <doctest.h>

#include <numeric>
#include <random>

#include "cartan.hpp"
#include "helpers.hpp"

using namespace kmc;
using kmctest::make_cartan;

TEST_CASE("validation accepts generalized Cartan matrices") {
  CHECK_NOTHROW(CartanMatrix::from_entries({{2, -1}, {-1, 2}}));
  CHECK_NOTHROW(CartanMatrix::from_entries({{2, -6}, {-4, 2}}));
  CHECK_NOTHROW(CartanMatrix::from_entries({{2}}));
}

TEST_CASE("validation rejects malformed matrices") {
  auto code_of = [](std::vector<std::vector<Int>> entries) {
    try {
      CartanMatrix::from_entries(std::move(entries));
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::Internal;
  };
  CHECK(code_of({{1, -1}, {-1, 2}}) == ErrorCode::BadDiagonal);
  CHECK(code_of({{2, 1}, {-1, 2}}) == ErrorCode::PositiveOffDiagonal);
  CHECK(code_of({{2, 0}, {-1, 2}}) == ErrorCode::AsymmetricZeroPattern);
  CHECK(code_of({{2, -1}, {-1, 2}, {-1, -1}}) == ErrorCode::Parse);
  CHECK(code_of({}) == ErrorCode::Parse);
}

TEST_CASE("named types expand to the documented matrices") {
  CHECK(CartanMatrix::named("A2") == CartanMatrix::from_entries({{2, -1}, {-1, 2}}));
  CHECK(CartanMatrix::named("B2") == CartanMatrix::from_entries({{2, -1}, {-2, 2}}));
  CHECK(CartanMatrix::named("C2") == CartanMatrix::from_entries({{2, -2}, {-1, 2}}));
  CHECK(CartanMatrix::named("G2") == CartanMatrix::from_entries({{2, -1}, {-3, 2}}));
  CHECK(CartanMatrix::named("B3").at(2, 1) == -2);
  CHECK(CartanMatrix::named("B3").at(1, 2) == -1);
  CHECK(CartanMatrix::named("D4").at(1, 3) == -1);
  CHECK(CartanMatrix::named("F4").at(2, 1) == -2);
  CHECK(CartanMatrix::named("E6").rank() == 6);
  CHECK_THROWS_AS((void)CartanMatrix::named("H3"), Error);
  CHECK_THROWS_AS((void)CartanMatrix::named("E9"), Error);
}

TEST_CASE("affine extensions attach node 0 against the highest root") {
  auto a1t = CartanMatrix::named("A1~");
  CHECK(a1t.rank() == 2);
  CHECK(a1t.at(0, 1) == -2);
  CHECK(a1t.at(1, 0) == -2);

  auto a2t = CartanMatrix::named("A2~");
  CHECK(a2t.rank() == 3);
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j)
      CHECK(a2t.at(i, j) == (i == j ? 2 : -1));  // 3-cycle

  auto c2t = CartanMatrix::named("C2~");
  // 0 => 1 <= 2 chain of the affine symplectic diagram
  CHECK(c2t.at(0, 1) == -1);
  CHECK(c2t.at(1, 0) == -2);
  CHECK(c2t.at(2, 1) == -1);
  CHECK(c2t.at(1, 2) == -2);
  CHECK(c2t.at(0, 2) == 0);

  // affine matrices are symmetrizable but not finite type
  CHECK_NOTHROW(symmetrize(a2t));
  CHECK_THROWS_AS((void)positive_roots(a2t), Error);
}

TEST_CASE("JSON round trip and parse forms") {
  auto m = CartanMatrix::parse(R"({"labels": ["1","2"], "matrix": [[2,-6],[-4,2]]})");
  CHECK(m.at(0, 1) == -6);
  CHECK(m.label(1) == "2");
  CHECK(CartanMatrix::from_json(m.to_json()) == m);

  auto bare = CartanMatrix::parse("[[2,-2],[-1,2]]");
  CHECK(bare.labels() == std::vector<std::string>{"1", "2"});
  CHECK(CartanMatrix::parse("  A2 ") == CartanMatrix::named("A2"));
  CHECK_THROWS_AS((void)CartanMatrix::parse("[[2,-1],[-1"), Error);
}

TEST_CASE("symmetrizer on the worked examples") {
  CHECK(symmetrize(*make_cartan({{2, -1}, {-1, 2}})).d == std::vector<Int>{1, 1});
  CHECK(symmetrize(*make_cartan({{2, -6}, {-4, 2}})).d == std::vector<Int>{2, 3});
  CHECK(symmetrize(*make_cartan({{2, -2}, {-1, 2}})).d == std::vector<Int>{1, 2});
  CHECK(symmetrize(*make_cartan({{2}})).d == std::vector<Int>{1});
}

TEST_CASE("symmetrizer normalizes gcd globally over components") {
  // disconnected: a simply-laced node next to a (1,2)-component
  auto m = make_cartan({{2, 0, 0}, {0, 2, -2}, {0, -1, 2}});
  CHECK(symmetrize(*m).d == std::vector<Int>{1, 1, 2});
  // both components scale: gcd stays 1 even when every ratio is even
  auto doubled = make_cartan({{2, -2, 0}, {-1, 2, 0}, {0, 0, 2}});
  CHECK(symmetrize(*doubled).d == std::vector<Int>{1, 2, 1});
}

TEST_CASE("inconsistent ratio cycle is not symmetrizable") {
  auto m = make_cartan({{2, -1, -1}, {-1, 2, -1}, {-1, -2, 2}});
  CHECK_THROWS_AS((void)symmetrize(*m), Error);
  try {
    symmetrize(*m);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotSymmetrizable);
  }
}

TEST_CASE("symmetrizer properties on a random corpus") {
  std::mt19937 rng(20240811);
  for (int trial = 0; trial < 200; ++trial) {
    size_t rank = 2 + static_cast<size_t>(trial % 3);
    auto entries = kmctest::random_symmetrizable(rng, rank);
    auto m = make_cartan(entries);
    Symmetrizer sym = symmetrize(*m);

    Int g = 0;
    for (Int v : sym.d) {
      CHECK(v > 0);
      g = std::gcd(g, v);
    }
    CHECK(g == 1);
    // DA symmetric everywhere; on connected pairs this is exactly the
    // cross-multiplied ratio d_a/d_b = A_ba/A_ab
    for (size_t a = 0; a < rank; ++a)
      for (size_t b = 0; b < rank; ++b)
        CHECK(sym.d[a] * m->at(a, b) == sym.d[b] * m->at(b, a));
  }
}

TEST_CASE("pairing expands by linearity") {
  auto a2 = make_cartan({{2, -1}, {-1, 2}});
  CHECK(pairing(*a2, 0, Weight::fundamental(2, 0)) == 1);
  CHECK(pairing(*a2, 1, Weight::fundamental(2, 0)) == 0);
  Weight neg_alpha1 = Weight::zero(2) - Weight::simple_root(2, 0);
  CHECK(pairing(*a2, 0, neg_alpha1) == -2);
  Weight w = Weight::fundamental(2, 0) + Weight::fundamental(2, 1) - Weight::simple_root(2, 0);
  CHECK(pairing(*a2, 1, w) == 2);
  CHECK_THROWS_AS((void)pairing(*a2, 5, w), Error);
}

TEST_CASE("positive root closure") {
  auto roots_a1 = positive_roots(*make_cartan({{2}}));
  CHECK(roots_a1.size() == 1);

  auto roots_a2 = positive_roots(*make_cartan({{2, -1}, {-1, 2}}));
  CHECK(roots_a2.size() == 3);
  std::vector<std::vector<Int>> expected{{0, 1}, {1, 0}, {1, 1}};
  CHECK(roots_a2 == expected);

  CHECK(positive_roots(*make_cartan({{2, -2}, {-1, 2}})).size() == 4);
  CHECK(positive_roots(*make_cartan({{2, -1}, {-3, 2}})).size() == 6);
  CHECK(positive_roots(*kmctest::named("D4")).size() == 12);

  CHECK_THROWS_AS((void)positive_roots(*make_cartan({{2, -2}, {-2, 2}})), Error);
  try {
    positive_roots(*make_cartan({{2, -2}, {-2, 2}}));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotFiniteType);
  }
}

TEST_CASE("Weyl dimension formula") {
  auto a1 = make_cartan({{2}});
  for (Int k = 0; k <= 50; ++k) {
    Weight w = Weight::zero(1);
    w.lambda[0] = k;
    CHECK(weyl_dimension(*a1, w) == k + 1);
  }

  auto a2 = make_cartan({{2, -1}, {-1, 2}});
  CHECK(weyl_dimension(*a2, Weight::fundamental(2, 0)) == 3);
  CHECK(weyl_dimension(*a2, Weight::fundamental(2, 0) + Weight::fundamental(2, 1)) == 8);
  CHECK(weyl_dimension(*a2, Weight::zero(2)) == 1);

  // adjoint of the rank-2 exceptional type
  auto g2 = make_cartan({{2, -1}, {-3, 2}});
  CHECK(weyl_dimension(*g2, Weight::fundamental(2, 0)) == 14);
  CHECK(weyl_dimension(*g2, Weight::fundamental(2, 1)) == 7);

  Weight bad = Weight::fundamental(2, 0);
  bad.lambda[1] = -1;
  CHECK_THROWS_AS((void)weyl_dimension(*a2, bad), Error);
  Weight mixed = Weight::fundamental(2, 0) + Weight::simple_root(2, 0);
  CHECK_THROWS_AS((void)weyl_dimension(*a2, mixed), Error);
}

TEST_CASE("unknown index label") {
  auto a2 = kmctest::named("A2");
  CHECK(a2->index_of("2") == 1);
  CHECK_THROWS_AS((void)a2->index_of("7"), Error);
}
