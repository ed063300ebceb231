#include <doctest.h>

#include <random>

#include "braid_oracle.hpp"
#include "zcat/braid.hpp"

using namespace zcat;
using namespace zcat::braid;

namespace {

BraidWord W(const char* text, int n) { return parse_word(text, n); }

}  // namespace

TEST_CASE("word syntax") {
  CHECK(W("s1 S2 s1", 3).letters == std::vector<int>{1, -2, 1});
  CHECK(to_string(W("s1  S2\ts1", 3)) == "s1 S2 s1");
  CHECK_THROWS_AS((void)W("s3", 3), MalformedInput);
  CHECK_THROWS_AS((void)W("x1", 3), MalformedInput);
  CHECK_THROWS_AS((void)W("s", 3), MalformedInput);
}

TEST_CASE("compose and tensor") {
  auto w = W("s1 S2", 3);
  CHECK(compose_braids(w, identity_word(3)) == w);
  CHECK(braids_equal(compose_braids(W("s1", 2), W("S1", 2)), identity_word(2)));
  CHECK(compose_braids(W("s1", 3), W("s2", 3)).letters == std::vector<int>{1, 2});
  CHECK_THROWS_AS((void)compose_braids(W("s1", 2), W("s1", 3)), MalformedInput);
  CHECK(tensor_braids(W("s1", 2), W("s1", 2)) == W("s1 s3", 4));
  CHECK(tensor_braids(identity_word(0), w) == w);

  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    auto a = oracle::random_word(rng, 3, 6);
    auto b = oracle::random_word(rng, 2, 6);
    auto left = compose_braids(tensor_braids(identity_word(3), b), tensor_braids(a, identity_word(2)));
    auto right = compose_braids(tensor_braids(a, identity_word(2)), tensor_braids(identity_word(3), b));
    CHECK(braids_equal(left, right));
  }
}

TEST_CASE("permutations") {
  CHECK(permutation_of(identity_word(4)) == Permutation{0, 1, 2, 3});
  CHECK(permutation_of(W("s1", 2)) == Permutation{1, 0});
  // s1 then s2: the strand starting at 1 ends at 3, 2 -> 1, 3 -> 2.
  CHECK(permutation_of(W("s1 s2", 3)) == Permutation{2, 0, 1});
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    auto w = oracle::random_word(rng, 5, 12);
    CHECK(permutation_of(w) == oracle::track_strands(w));
  }
}

TEST_CASE("defining relations hold for n <= 6") {
  for (int n = 2; n <= 6; ++n) {
    for (int i = 1; i < n; ++i) {
      for (int j = 1; j < n; ++j) {
        if (std::abs(i - j) >= 2) {
          CHECK(braids_equal(BraidWord{n, {i, j}}, BraidWord{n, {j, i}}));
        }
      }
      if (i + 1 < n) {
        CHECK(braids_equal(BraidWord{n, {i + 1, i, i + 1}}, BraidWord{n, {i, i + 1, i}}));
      }
    }
  }
  CHECK(braids_equal(W("s1 s2 s1", 3), W("s2 s1 s2", 3)));
  CHECK_FALSE(braids_equal(W("s1", 3), W("s2", 3)));
  CHECK_FALSE(braids_equal(W("s1 s1", 2), identity_word(2)));
}

TEST_CASE("normal form basics") {
  auto nf = normal_form(identity_word(4));
  CHECK(nf.infimum == 0);
  CHECK(nf.factors.empty());
  CHECK(to_string(nf) == "D^0 |");
  CHECK(to_string(normal_form(W("s1 s2 s1", 3))) == "D^1 |");
  CHECK(to_string(normal_form(W("S1", 2))) == "D^-1 |");
  CHECK(to_string(normal_form(W("s1 s2", 3))) == "D^0 | [3 1 2]");
  CHECK(to_string(normal_form(W("s1 s1", 3))) == "D^0 | [2 1 3] . [2 1 3]");
  CHECK(normal_form(identity_word(1)).factors.empty());
}

TEST_CASE("normal form is idempotent, left-weighted and agrees with the Artin action") {
  std::mt19937 rng(20261018);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + trial % 4;
    auto a = oracle::random_word(rng, n, 1 + trial % 10);
    auto nf = normal_form(a);
    CHECK(normal_form(to_word(nf)) == nf);
    CHECK(oracle::artin_equal(to_word(nf), a));
    for (const auto& f : nf.factors) {
      CHECK(f != permutation_of(identity_word(n)));
    }
    auto b = oracle::random_word(rng, n, 1 + trial % 10);
    CHECK(braids_equal(a, b) == oracle::artin_equal(a, b));
    CHECK(braids_equal(compose_braids(a, inverse(a)), identity_word(n)));
  }
}

TEST_CASE("random relation rewrites keep the normal form and the permutation") {
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 2 + trial % 5;
    auto w = oracle::random_word(rng, n, 8);
    const auto nf = normal_form(w);
    const auto perm = permutation_of(w);
    auto v = w;
    for (int step = 0; step < 6; ++step) {
      oracle::random_rewrite(rng, v);
    }
    CHECK(normal_form(v) == nf);
    CHECK(permutation_of(v) == perm);
  }
}

TEST_CASE("braiding words") {
  CHECK(braiding_word(0, 3) == identity_word(3));
  CHECK(braiding_word(2, 0) == identity_word(2));
  CHECK(braiding_word(1, 1) == W("s1", 2));
  const auto p = permutation_of(braiding_word(2, 3));
  for (int i = 1; i <= 5; ++i) {
    CHECK(p[i - 1] + 1 == (i <= 2 ? i + 3 : i - 2));
  }
  for (int m = 0; m <= 4; ++m) {
    for (int n = 0; n <= 4; ++n) {
      CHECK(oracle::track_strands(braiding_word(m, n)) == permutation_of(braiding_word(m, n)));
    }
  }
}

TEST_CASE("hexagons and naturality of c") {
  std::mt19937 rng(99);
  for (int m = 0; m <= 4; ++m) {
    for (int n = 0; n <= 4; ++n) {
      for (int p = 0; p <= 4; ++p) {
        // c_{m+n,p} = (id_m (x) c_{n,p}) then (c_{m,p} (x) id_n)
        CHECK(braids_equal(braiding_word(m + n, p),
                           compose_braids(tensor_braids(identity_word(m), braiding_word(n, p)),
                                          tensor_braids(braiding_word(m, p), identity_word(n)))));
        // c_{m,n+p} = (c_{m,n} (x) id_p) then (id_n (x) c_{m,p})
        CHECK(braids_equal(braiding_word(m, n + p),
                           compose_braids(tensor_braids(braiding_word(m, n), identity_word(p)),
                                          tensor_braids(identity_word(n), braiding_word(m, p)))));
      }
      auto a = oracle::random_word(rng, m, 6);
      auto b = oracle::random_word(rng, n, 6);
      CHECK(braids_equal(compose_braids(braiding_word(m, n), tensor_braids(b, a)),
                         compose_braids(tensor_braids(a, b), braiding_word(m, n))));
    }
  }
}

TEST_CASE("framed braids") {
  auto x = framed_compose(twist(3, 2), framed(W("s1 S2", 3)));
  CHECK(framed_equal(framed_compose(framed(identity_word(3)), x), x));
  CHECK(framed_equal(framed_compose(x, framed(identity_word(3))), x));

  // twist ribbon 2, then cross: the twist ends on ribbon 1.
  auto moved = framed_compose(twist(2, 2), framed(W("s1", 2)));
  CHECK(moved.framings == std::vector<std::int64_t>{1, 0});

  for (int n = 2; n <= 5; ++n) {
    const auto s = [n](int k) { return ribbon_generator(n, k); };
    auto lhs = framed_compose(framed_compose(s(n - 1), s(n)), framed_compose(s(n - 1), s(n)));
    auto rhs = framed_compose(framed_compose(s(n), s(n - 1)), framed_compose(s(n), s(n - 1)));
    CHECK(framed_equal(lhs, rhs));
    // Both sides are t_{n-1} t_n s_{n-1}^2.
    auto expected = framed_compose(framed_compose(twist(n, n - 1), twist(n, n)),
                                   framed(BraidWord{n, {n - 1, n - 1}}));
    CHECK(framed_equal(lhs, expected));
    CHECK_FALSE(framed_equal(framed_compose(s(n - 1), s(n)), framed_compose(s(n), s(n - 1))));
  }
  auto t = framed_tensor(twist(1, 1), framed(W("s1", 2)));
  CHECK(t.word == W("s2", 3));
  CHECK(t.framings == std::vector<std::int64_t>{1, 0, 0});
}

TEST_CASE("truncated braid category") {
  auto b = braid_as_finmoncat(2, 2);
  CHECK(b->is_partial());
  CHECK(b->num_objects() == 3);
  // hom(2,2): id, s1, S1, s1 s1, S1 S1
  CHECK(b->hom(b->object("2"), b->object("2")).size() == 5);
  CHECK(b->hom(b->object("0"), b->object("0")).size() == 1);
  for (Obj m : b->objects()) {
    for (Obj n : b->objects()) {
      if (m != n) {
        CHECK(b->hom(m, n).empty());
      }
    }
  }
  CHECK(b->unit() == b->object("0"));
  CHECK(b->name(b->braiding(b->object("1"), b->object("1"))) == "2:s1");
  auto report = validate_category(*b);
  for (const auto& v : report.violations) {
    MESSAGE(v.law << ": " << v.detail);
  }
  CHECK(report.ok());
  CHECK_FALSE(report.notes.empty());
  CHECK_FALSE(b->try_compose(b->arrow("2:s1 s1"), b->arrow("2:s1")).has_value());
  CHECK_THROWS_AS((void)b->compose(b->arrow("2:s1 s1"), b->arrow("2:s1")), PartialTable);
  CHECK_THROWS_AS((void)braid_as_finmoncat(3, 0), MalformedInput);
  CHECK(validate_category(*braid_as_finmoncat(6, 1)).ok());
}

TEST_CASE("braid theorem checks") {
  for (std::uint64_t seed : {1u, 2u, 12345u}) {
    auto checks = braid_theorem_checks(seed);
    REQUIRE(checks.size() == 3);
    for (const auto& c : checks) {
      CHECK_MESSAGE(c.passed, c.id << ": " << c.detail);
    }
  }
  CHECK(braid_theorem_checks(5)[2].detail == braid_theorem_checks(5)[2].detail);
}
