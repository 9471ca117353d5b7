#include <doctest.h>

#include <random>

#include "gamma0fd/words.hpp"
#include "support/oracles.hpp"

using namespace gamma0fd;

TEST_CASE("generator matrices and two-factor form") {
  CHECK(word_to_matrix(group_word{}) == mat2::identity());
  CHECK(word_to_matrix(group_word{{0, 0}}) == -mat2::identity());  // S*S

  for (i64 j : {-5, 0, 3, 7})
    for (i64 m : {0, 1, 2, 9}) {
      const mat2 g = word_to_matrix(group_word::stst(j, m));
      CHECK(g == mat2{-1, -m, j, m * j - 1});
      CHECK(g.det() == 1);
    }
}

TEST_CASE("word serialization grammar") {
  CHECK(group_word{}.str() == "");
  CHECK(group_word::st(0).str() == "S");
  CHECK(group_word::st(1).str() == "ST");
  CHECK(group_word::st(-5).str() == "ST^-5");
  CHECK(group_word::st(6).str() == "ST^6");
  CHECK(group_word::stst(0, 0).str() == "SS");
  CHECK(group_word::stst(6, 0).str() == "ST^6S");
  CHECK(group_word::stst(3, 1).str() == "ST^3ST");
  CHECK(group_word::stst(-2, 1).str() == "ST^-2ST");
  CHECK(group_word::stst(-3, 12).str() == "ST^-3ST^12");
}

TEST_CASE("mobius action on cusps") {
  const cusp inf{1, 0};
  CHECK(mobius_cusp(word_to_matrix(group_word::stst(7, 3)), inf) == make_cusp(-1, 7));
  CHECK(mobius_cusp(mat2::gen_s(), inf) == make_cusp(0, 1));
  CHECK(mobius_cusp(mat2::identity(), make_cusp(3, 7)) == make_cusp(3, 7));
  CHECK(mobius_cusp(-mat2::identity(), make_cusp(3, 7)) == make_cusp(3, 7));
  CHECK(mobius_cusp(mat2::gen_t(), inf) == inf);
}

TEST_CASE("cusp normalization") {
  CHECK(make_cusp(2, 4) == cusp{1, 2});
  CHECK(make_cusp(-1, -7) == cusp{1, 7});
  CHECK(make_cusp(3, -7) == cusp{-3, 7});
  CHECK(make_cusp(-5, 0) == cusp{1, 0});
  CHECK(make_cusp(0, -3) == cusp{0, 1});
  CHECK(cusp_str(cusp{1, 0}) == "oo");
  CHECK(cusp_str(make_cusp(-1, 3)) == "-1/3");
}

TEST_CASE("membership test") {
  for (i64 n : {2, 5, 12, 97}) {
    CHECK(in_gamma0(mat2::gen_t(), modulus(n)));
    CHECK_FALSE(in_gamma0(mat2::gen_s(), modulus(n)));
  }
  // Witness of the self-opposed vertical pair at level 12.
  const mat2 gamma = word_to_matrix(group_word::stst(6, 0));
  const mat2 witness = gamma * mat2::gen_t() * gamma.inverse();
  CHECK(witness == mat2{7, 1, -36, -5});
  CHECK(in_gamma0(witness, modulus(12)));
}

TEST_CASE("inverse is the adjugate") {
  CHECK(mat2::gen_s().inverse() == -mat2::gen_s());
  CHECK(mat2::gen_t().inverse() == mat2::gen_t(-1));
  for (i64 j : {2, -4})
    for (i64 m : {1, 5}) {
      const mat2 g{-1, -m, j, m * j - 1};
      CHECK(g.inverse() == mat2{m * j - 1, m, -j, -1});
      CHECK(g * g.inverse() == mat2::identity());
    }
}

TEST_CASE("word evaluation is multiplicative; mobius composes") {
  std::mt19937_64 rng(20240901);
  for (int iter = 0; iter < 400; ++iter) {
    const group_word w1 = oracle::random_word(rng, 6, 20);
    const group_word w2 = oracle::random_word(rng, 6, 20);
    group_word cat;
    cat.exps = w1.exps;
    cat.exps.insert(cat.exps.end(), w2.exps.begin(), w2.exps.end());
    const mat2 m1 = word_to_matrix(w1);
    const mat2 m2 = word_to_matrix(w2);
    CHECK(word_to_matrix(cat) == m1 * m2);
    CHECK(m1.det() == 1);

    std::uniform_int_distribution<i64> coord(-30, 30);
    i64 p = coord(rng), q = coord(rng);
    if (p == 0 && q == 0) p = 1;
    const cusp s = make_cusp(p, q);
    CHECK(mobius_cusp(m1 * m2, s) == mobius_cusp(m1, mobius_cusp(m2, s)));
    const cusp img = mobius_cusp(m1, s);
    CHECK(gcd(img.num, img.den) == 1);
    CHECK(img.den >= 0);
    if (img.den == 0) CHECK(img.num == 1);
  }
}

TEST_CASE("sign conventions") {
  CHECK(eq_up_to_sign(mat2::gen_s(), -mat2::gen_s()));
  CHECK_FALSE(eq_up_to_sign(mat2::gen_s(), mat2::gen_t()));
  CHECK(in_gamma0(-mat2::gen_t(), modulus(7)));
}
