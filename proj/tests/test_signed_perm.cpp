#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "weyld/oracle.hpp"
#include "weyld/signed_perm.hpp"

using namespace weyld;

TEST_CASE("group arithmetic") {
  const SignedPerm c1 = parse_one_line("(-5,-2,-3,-4,1)");
  CHECK(c1.compose(c1.inverse()) == SignedPerm::identity(5));
  CHECK(format_one_line(c1.inverse()) == "(5,-2,-3,-4,-1)");  // d_{1}

  const SignedPerm s4w0 = simple_reflection(4, 5).compose(longest_element(5));
  CHECK(format_one_line(s4w0) == "(-1,-2,-3,-5,4)");  // c_{4}

  CHECK_THROWS_AS(SignedPerm::identity(5).compose(SignedPerm::identity(7)),
                  std::invalid_argument);
}

TEST_CASE("action on roots") {
  const SignedPerm w0 = longest_element(5);
  CHECK(w0.apply(simple_root(1, 5)) ==
        Root{RootKind::Minus, 1, 2, -1});  // w_0(alpha_1) = -alpha_1

  const SignedPerm c1 = parse_one_line("(-5,-2,-3,-4,1)");
  CHECK(c1.apply(plus_root(1, 5)) == Root{RootKind::Minus, 1, 5, +1});

  const SignedPerm id = SignedPerm::identity(5);
  for (const Root& beta : positive_roots(5)) CHECK(id.apply(beta) == beta);
}

TEST_CASE("apply respects composition") {
  const SignedPerm u = parse_one_line("(-3,-2,-5,-4,1)");
  const SignedPerm v = parse_one_line("(4,-1,2,5,-3)");
  const SignedPerm uv = u.compose(v);
  for (const Root& beta : positive_roots(5)) {
    Root via_both = u.apply(v.apply(beta));
    CHECK(uv.apply(beta) == via_both);
  }
}

TEST_CASE("simple reflections") {
  for (const int rank : {5, 7})
    for (int a = 1; a <= rank; ++a) {
      const SignedPerm s = simple_reflection(a, rank);
      CHECK(s.apply(simple_root(a, rank)) ==
            Root{simple_root(a, rank).kind, simple_root(a, rank).i,
                 simple_root(a, rank).j, -1});
      CHECK(s.compose(s) == SignedPerm::identity(rank));
    }
  const SignedPerm s5 = simple_reflection(5, 5);
  CHECK(s5.image(4) == 5);
  CHECK(s5.sign(4) == -1);
  CHECK(s5.image(5) == 4);
  CHECK(s5.sign(5) == -1);
  CHECK_THROWS_AS(simple_reflection(6, 5), std::invalid_argument);
}

TEST_CASE("length") {
  CHECK(length(SignedPerm::identity(5)) == 0);
  CHECK(length(longest_element(5)) == 20);
  CHECK(length(longest_element(7)) == 42);
  CHECK(length(parse_one_line("(-5,-2,-3,-4,1)")) == 13);  // c_{1}
}

TEST_CASE("longest element") {
  const SignedPerm w0 = longest_element(5);
  CHECK(format_one_line(w0) == "(-1,-2,-3,-4,5)");
  for (const Root& beta : positive_roots(5)) CHECK(w0.apply(beta).sign < 0);
  CHECK_THROWS_AS(longest_element(4), std::invalid_argument);
  CHECK_THROWS_AS(longest_element(3), std::invalid_argument);
}

TEST_CASE("tau conjugation") {
  const SignedPerm c234 = parse_one_line("(-1,-3,-4,-5,2)");
  CHECK(format_one_line(tau_conjugate(c234)) == "(-1,-3,-4,5,-2)");  // d_{2,3,4}
  CHECK(tau_conjugate(tau_conjugate(c234)) == c234);
  CHECK(tau_conjugate(longest_element(5)) == longest_element(5));
}

TEST_CASE("one-line notation") {
  CHECK(parse_one_line("(1,2,3,4,5)") == SignedPerm::identity(5));
  CHECK_THROWS_AS(parse_one_line("(-1,2,3,4,5)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_one_line("(1,1,3,4,5)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_one_line("1,2,3,4,5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_one_line("(1,2,3,4,6)"), std::invalid_argument);
}

TEST_CASE("exhaustive invariants over W(D_5)") {
  std::uint64_t seen = 0;
  enumerate_group(5, [&](const SignedPerm& u) {
    ++seen;
    // Round-trip through text.
    CHECK(parse_one_line(format_one_line(u)) == u);
    // Parity is preserved by the group operations and by tau.
    CHECK(u.negative_sign_count() % 2 == 0);
    CHECK(u.inverse().negative_sign_count() % 2 == 0);
    CHECK(tau_conjugate(u).negative_sign_count() % 2 == 0);
    // Length criterion for left multiplication by a simple reflection.
    const int len = length(u);
    const SignedPerm uinv = u.inverse();
    for (int a = 1; a <= 5; ++a) {
      const int moved = length(simple_reflection(a, 5).compose(u));
      const bool ascent = uinv.apply(simple_root(a, 5)).sign > 0;
      CHECK(moved == len + (ascent ? 1 : -1));
    }
  });
  CHECK(seen == 1920);
}
