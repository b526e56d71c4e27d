#include "doctest.h"
#include "obc/diagram.hpp"
#include "obc/engine.hpp"

using namespace obc;

static Params p1() { return make_params(1, 0, {"1"}, {"0"}); }
static Params p2() { return make_params(2, 0, {"0", "2"}, {"0", "1"}); }

TEST_CASE("word classes and order") {
  CHECK(class_of("ud").r == 1);
  CHECK(class_of("ud").s == 1);
  CHECK(class_of("").r == 0);
  CHECK(order_leq(class_of("ud"), ClassIndex{0, 0}));
  CHECK(!order_leq(ClassIndex{0, 0}, class_of("ud")));
  CHECK(order_leq(ClassIndex{2, 1}, ClassIndex{1, 0}));
  CHECK(!order_leq(ClassIndex{2, 1}, ClassIndex{0, 1}));
  CHECK(words_in_class(ClassIndex{1, 1}).size() == 2);
  CHECK(words_in_class(ClassIndex{2, 1}).size() == 3);
  CHECK(valid_word("udu"));
  CHECK(!valid_word("uxd"));
}

TEST_CASE("scalar arithmetic") {
  Fq half = Fq::parse(0, "1/2");
  CHECK((half + half) == Fq::one(0));
  Fq a = Fq::parse(5, "1/2");  // inverse of 2 mod 5 is 3
  CHECK(a == Fq::from_int(5, 3));
  CHECK((Fq::from_int(7, 3) * Fq::from_int(7, 5)) == Fq::from_int(7, 1));
  CHECK((-Fq::one(3)) == Fq::from_int(3, 2));
}

TEST_CASE("hom space dimensions") {
  for (auto P : {p1(), p2()}) {
    long l = P.level;
    CHECK((long)enumerate_basis("ud", "ud", P).size() == 2 * l * l);
    CHECK((long)enumerate_basis("", "ud", P).size() == l);
    CHECK((long)enumerate_basis("", "", P).size() == 1);
    CHECK(enumerate_basis("u", "d", P).empty());
  }
}

TEST_CASE("diagram json round trip") {
  Params P = p2();
  for (auto& pair : {std::pair<Word, Word>{"ud", "ud"}, {"", "udud"}, {"uud", "u"}}) {
    for (const auto& d : enumerate_basis(pair.first, pair.second, P)) {
      NormalDiagram back = diagram_from_json(d.json());
      CHECK(back == d);
    }
  }
}

TEST_CASE("tau and sigma diagrams") {
  Params P = p2();
  for (const auto& d : enumerate_basis("ud", "uudd", P)) CHECK(tau_diagram(tau_diagram(d)) == d);
  CHECK(sigma_diagram("ud", "ud") == identity_diagram("ud"));
  // composing the two transport diagrams gives the identity matching
  Morphism s1 = Morphism::unit(sigma_diagram("ud", "du"), Fq::one(0));
  Morphism s2 = Morphism::unit(sigma_diagram("du", "ud"), Fq::one(0));
  CHECK(compose(s1, s2, P) == identity_morphism("ud", P));
}

TEST_CASE("subset families Y H X") {
  Params P = p1();
  CHECK(enumerate_YHX(YHX::X, "u", "uud", P).size() == 2);
  CHECK(enumerate_YHX(YHX::H, "ud", "ud", P).size() == 1);
  Params Q = p2();
  CHECK(enumerate_YHX(YHX::H, "ud", "ud", Q).size() == 4);
  CHECK(enumerate_YHX(YHX::Y, "ud", "", Q).size() == 2);
}

TEST_CASE("loop value series") {
  Params P = p2();
  CHECK(P.delta(0) == Fq::from_int(0, 1));
  CHECK(P.delta(1) == Fq::from_int(0, 2));
  CHECK(P.delta(2) == Fq::from_int(0, 4));
  CHECK(P.deltaprime(0) == Fq::from_int(0, 1));
  CHECK(P.deltaprime(1) == Fq::from_int(0, 1));
  CHECK(P.deltaprime(2) == Fq::from_int(0, 1));
  // (1 + sum delta t^i)(1 - sum delta' t^j) = 1 up to order 6
  for (auto Q : {p1(), p2()}) {
    SeriesCoeffs s = delta_series(Q, 6);
    for (int n = 1; n <= 6; ++n) {
      Fq acc = s.deltas[n - 1] - s.deltaprimes[n - 1];
      for (int i = 1; i < n; ++i) acc -= s.deltas[i - 1] * s.deltaprimes[n - i - 1];
      CHECK(acc.is_zero());
    }
  }
}
