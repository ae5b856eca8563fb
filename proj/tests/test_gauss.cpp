#include <set>

#include "doctest.h"
#include "support.hpp"
#include "vk/gauss.hpp"

using namespace vk;
using vk::testing::Rng;

namespace {

ErrorKind parse_error(const char* text) {
  try {
    parse_gauss_code(text);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected a parse error for " << text);
  return ErrorKind::SyntaxError;
}

// Planarity oracle: some choice of local rotation at each crossing closes up into a sphere.
bool planar_by_rotation_search(const GaussDiagram& d) {
  int n = d.size();
  if (n == 0) return true;
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<Sign> signs(n);
    for (int a = 0; a < n; ++a) signs[a] = ((mask >> a) & 1) ? Sign::Minus : Sign::Plus;
    if (carter_genus(GaussDiagram::from_sequence(d.sequence(), signs)) == 0) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("parse examples") {
  GaussDiagram kink = parse_gauss_code("O1+,U1+");
  CHECK(kink.size() == 1);
  CHECK(kink.sign(0) == Sign::Plus);

  GaussDiagram vt = parse_gauss_code("O1+,O2+,U1+,U2+");
  CHECK(vt.size() == 2);
  CHECK(interlaced(vt, 0, 1));

  CHECK(parse_error("O1+,U2+") == ErrorKind::UnmatchedLabel);
  CHECK(parse_error("O1+") == ErrorKind::UnmatchedLabel);
  CHECK(parse_error("O1+,U1+,O1+") == ErrorKind::UnmatchedLabel);
  CHECK(parse_error("O1+,U1-") == ErrorKind::SignMismatch);
  CHECK(parse_error("O1+,O1+") == ErrorKind::RoleMismatch);
  CHECK(parse_error("X1+,U1+") == ErrorKind::SyntaxError);
  CHECK(parse_error("O0+,U0+") == ErrorKind::SyntaxError);
  CHECK(parse_error("O1+, U1+") == ErrorKind::SyntaxError);
  CHECK(parse_error("O1+,,U1+") == ErrorKind::SyntaxError);
  CHECK(parse_error("O01+,U01+") == ErrorKind::SyntaxError);
  CHECK(parse_error("O1,U1") == ErrorKind::SyntaxError);
}

TEST_CASE("labels are renumbered by first appearance") {
  GaussDiagram d = parse_gauss_code("U7-,O42+,O7-,U42+");
  CHECK(serialize_raw(d) == "U1-,O2+,O1-,U2+");
}

TEST_CASE("serialize picks the least rotation") {
  CHECK(serialize(GaussDiagram{}).empty());
  CHECK(serialize(parse_gauss_code("U1+,O1+")) == "O1+,U1+");
  CHECK(serialize(parse_gauss_code("U1+,U2+,O1+,O2+")) == "O1+,O2+,U1+,U2+");
  // Labels compare numerically; U sorts after O; + before -.
  CHECK(serialize(parse_gauss_code("O1-,U1-,O2+,U2+")) == "O1+,U1+,O2-,U2-");
}

TEST_CASE("serialize round trip on random diagrams") {
  Rng rng(11);
  for (int i = 0; i < 100; ++i) {
    GaussDiagram d = vk::testing::random_diagram(rng, static_cast<int>(rng() % 9));
    std::string text = serialize(d);
    GaussDiagram back = parse_gauss_code(text);
    CHECK(diagrams_equal(back, d));
    CHECK(serialize(back) == text);
    CHECK(back == canonical(d));
  }
}

TEST_CASE("diagrams_equal is rotation invariant and not reflection invariant") {
  Rng rng(12);
  for (int i = 0; i < 50; ++i) {
    GaussDiagram d = vk::testing::random_diagram(rng, 1 + static_cast<int>(rng() % 7));
    for (int k = 0; k < d.length(); ++k) CHECK(diagrams_equal(d, rotate(d, k)));
  }
  CHECK_FALSE(diagrams_equal(parse_gauss_code("O1+,U1+"), parse_gauss_code("O1-,U1-")));
  // The orientation-reversed kink-free chain O1 O2 U1 O3 U2 U3 needs reflection to match itself.
  GaussDiagram d = parse_gauss_code("O1+,O2+,U1+,O3+,U2+,U3+");
  CHECK_FALSE(diagrams_equal(d, inverse(d)));
}

TEST_CASE("virtual trefoil is its own inverse") {
  GaussDiagram vt = parse_gauss_code("O1+,O2+,U1+,U2+");
  CHECK(diagrams_equal(vt, inverse(vt)));
}

TEST_CASE("writhe") {
  CHECK(writhe(GaussDiagram{}) == 0);
  CHECK(writhe(parse_gauss_code("O1+,O2+,U1+,U2+")) == 2);
  CHECK(writhe(parse_gauss_code("O1+,U2-,U1+,O2-")) == 0);
}

TEST_CASE("crossing change, virtualization, mirror, inverse") {
  GaussDiagram kink = parse_gauss_code("O1+,U1+");
  CHECK(serialize(crossing_change(kink, 1)) == "O1-,U1-");
  CHECK(serialize_raw(crossing_change(kink, 1)) == "U1-,O1-");
  CHECK(serialize(virtualize(kink, 1)) == "O1+,U1+");
  CHECK(mirror(GaussDiagram{}).empty());
  CHECK(inverse(GaussDiagram{}).empty());
  CHECK_THROWS_AS(crossing_change(kink, 2), Error);
  CHECK_THROWS_AS(virtualize(kink, 0), Error);

  Rng rng(13);
  for (int i = 0; i < 200; ++i) {
    GaussDiagram d = vk::testing::random_diagram(rng, 1 + static_cast<int>(rng() % 8));
    int label = 1 + static_cast<int>(rng() % d.size());
    CHECK(crossing_change(crossing_change(d, label), label) == d);
    CHECK(virtualize(virtualize(d, label), label) == d);
    CHECK(crossing_change(d, label) == flip_sign(virtualize(d, label), label));
    CHECK(std::abs(writhe(crossing_change(d, label)) - writhe(d)) == 2);
    CHECK(writhe(virtualize(d, label)) == writhe(d));
    CHECK(mirror(mirror(d)) == d);
    CHECK(writhe(mirror(d)) == -writhe(d));
    CHECK(diagrams_equal(inverse(inverse(d)), d));
    GaussDiagram all = d;
    for (int l = 1; l <= d.size(); ++l) all = crossing_change(all, l);
    CHECK(all == mirror(d));
  }
}

TEST_CASE("involutions are bijections on small diagram sets") {
  for (int n = 1; n <= 3; ++n) {
    std::set<std::vector<int>> classes;
    vk::testing::for_each_diagram(n, [&](const GaussDiagram& d) { classes.insert(canonical_key(d)); });
    for (auto op : {+[](const GaussDiagram& d) { return mirror(d); },
                    +[](const GaussDiagram& d) { return inverse(d); },
                    +[](const GaussDiagram& d) { return crossing_change(d, 1); },
                    +[](const GaussDiagram& d) { return virtualize(d, 1); }}) {
      std::set<std::vector<int>> image;
      vk::testing::for_each_diagram(n, [&](const GaussDiagram& d) { image.insert(canonical_key(op(d))); });
      CHECK(image == classes);
    }
  }
}

TEST_CASE("realizability examples") {
  CHECK(is_realizable(GaussDiagram{}));
  CHECK_FALSE(is_realizable(parse_gauss_code("O1+,O2+,U1+,U2+")));
  CHECK(is_realizable(parse_gauss_code("O1+,U2+,O3+,U1+,O2+,U3+")));
  CHECK(is_realizable(parse_gauss_code("O1-,U2-,O3+,U4+,O2-,U1-,O4+,U3+")));
  CHECK(is_realizable(parse_gauss_code("O1+,U1+")));
  // Planar word, inconsistent signs.
  CHECK(word_realizable(parse_gauss_code("O1+,U2-,O3+,U1+,O2-,U3+")));
  CHECK_FALSE(is_realizable(parse_gauss_code("O1+,U2-,O3+,U1+,O2-,U3+")));
}

TEST_CASE("interlacement criterion agrees with a rotation search on every small word") {
  for (int n = 0; n <= 5; ++n) {
    int planar = 0;
    vk::testing::for_each_matching(n, [&](const std::vector<int>& partner) {
      std::vector<Endpoint> seq(2 * n);
      int next = 0;
      for (int i = 0; i < 2 * n; ++i) {
        if (i < partner[i]) {
          seq[i] = {next, Role::Over};
          seq[partner[i]] = {next, Role::Under};
          ++next;
        }
      }
      GaussDiagram d = GaussDiagram::from_sequence(seq, std::vector<Sign>(n, Sign::Plus));
      bool expected = planar_by_rotation_search(d);
      CHECK(word_realizable(d) == expected);
      planar += expected;
    });
    // Counts of planar double occurrence words on 2n labeled positions.
    static const int known[] = {1, 1, 2, 6, 24, 113};
    CHECK(planar == known[n]);
  }
}

TEST_CASE("realizable diagrams interlace evenly") {
  Rng rng(14);
  int realizable = 0;
  for (int i = 0; i < 3000; ++i) {
    GaussDiagram d = vk::testing::random_diagram(rng, 1 + static_cast<int>(rng() % 6));
    if (!is_realizable(d)) continue;
    ++realizable;
    for (int a = 0; a < d.size(); ++a) CHECK(interlacement_degree(d, a) % 2 == 0);
  }
  CHECK(realizable > 0);
}

TEST_CASE("classical corpus is realizable") {
  auto corpus = vk::testing::classical_corpus(8, 10, 5);
  CHECK(corpus.size() >= 20);
  for (const GaussDiagram& d : corpus) {
    INFO(serialize(d));
    CHECK(is_realizable(d));
  }
}
