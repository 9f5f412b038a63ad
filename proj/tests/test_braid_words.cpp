#include "ecm/braid_words.hpp"

#include "reference_words.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace ecm;

namespace {

GeneratorWord product_of_locals(const TupleDeformation& t, std::size_t locals) {
  GeneratorWord w;
  for (std::size_t i = 0; i < locals; ++i) w = concat(w, t[i]);
  return free_reduce(w);
}

GeneratorWord w(std::initializer_list<Letter> ls) { return GeneratorWord(ls); }

}  // namespace

TEST_CASE("word operations") {
  CHECK(invert(w({{1, 1}, {2, -1}})) == w({{2, 1}, {1, -1}}));
  CHECK(conjugate(w({{2, 1}}), w({{1, 1}})) == w({{2, -1}, {1, 1}, {2, 1}}));
  CHECK(conjugate_inverse(w({{2, 1}}), w({{1, 1}})) == w({{2, 1}, {1, 1}, {2, -1}}));
  CHECK(free_reduce(w({{1, 1}, {1, -1}, {2, 1}})) == w({{2, 1}}));
  CHECK(free_reduce(w({{3, 1}, {1, 1}, {2, 1}, {2, -1}, {1, -1}, {3, -1}})).empty());
  // Only adjacent inverse pairs cancel.
  CHECK(free_reduce(w({{1, 1}, {1, 1}})) == w({{1, 1}, {1, 1}}));
  CHECK(to_string(w({{1, 1}, {2, -1}})) == to_string(w({{1, 1}, {2, -1}})));
}

TEST_CASE("braid steps") {
  const TupleDeformation id = identity_deformation(4);
  const TupleDeformation s = braid_step(1, id);
  CHECK(s[0] == w({{2, 1}}));
  CHECK(s[1] == w({{2, -1}, {1, 1}, {2, 1}}));
  CHECK(s[2] == id[2]);
  CHECK(s[3] == id[3]);
  CHECK(free_reduce(braid_step(-1, s)) == id);
  CHECK(free_reduce(braid_step(1, braid_step(-1, id))) == id);
  CHECK(product_of_locals(s, 2) == w({{1, 1}, {2, 1}}));
  CHECK_THROWS_AS(braid_step(2, id), std::out_of_range);
  CHECK_THROWS_AS(braid_step(0, id), std::out_of_range);
  CHECK_THROWS_AS(braid_step(-2, id), std::out_of_range);
}

TEST_CASE("braid actions") {
  const TupleDeformation id = identity_deformation(16);
  CHECK(braid_action({}, id) == id);
  CHECK(braid_action({7, 7}, id) == braid_step(7, braid_step(7, id)));
  CHECK(braid_action(delta_words()[18], id) == braid_action({7, 7}, id));
}

TEST_CASE("delta words") {
  const auto& d = delta_words();
  REQUIRE(d.size() == 19);
  CHECK(d[18] == BraidWord{7, 7});
  CHECK(d[17] == BraidWord{7, 6, 6, 8, 8, -7});
  CHECK(d[16] == BraidWord{7, 6, 8, 7, 7, -8, -6, -7});
  for (const auto& word : d)
    for (int k : word) CHECK((k != 0 && std::abs(k) <= 13));
}

TEST_CASE("local braids fix the boundary word and are inverted by their inverse") {
  const TupleDeformation id = identity_deformation(16);
  const GeneratorWord boundary = product_of_locals(id, 14);
  for (std::size_t k = 0; k < 19; ++k) {
    CAPTURE(k + 1);
    const BraidWord& word = delta_words()[k];
    const TupleDeformation t = braid_action(word, id);
    CHECK(product_of_locals(t, 14) == boundary);
    CHECK(t[14] == id[14]);
    CHECK(t[15] == id[15]);
    CHECK(free_reduce(braid_action(invert(word), t)) == id);
  }
}

TEST_CASE("random braids preserve the boundary word") {
  std::mt19937_64 rng(5);
  for (std::size_t strands : {3u, 5u, 8u}) {
    const TupleDeformation id = identity_deformation(strands + 2);
    for (int trial = 0; trial < 10; ++trial) {
      const BraidWord b = ecm::testing::random_braid(strands, 12, rng);
      const TupleDeformation t = braid_action(b, id);
      CHECK(product_of_locals(t, strands) == product_of_locals(id, strands));
      CHECK(free_reduce(braid_action(invert(b), t)) == id);
    }
  }
}

TEST_CASE("braid relations") {
  for (std::size_t n : {3u, 4u, 6u, 14u}) {
    const BraidRelationReport r = check_braid_relations(n);
    CAPTURE(n);
    CHECK(r.all_pass());
    CHECK(r.strands == n);
  }
  const auto b1 = check_braid_relations(4);
  CHECK(b1.results.size() == 2 + 1);  // B1 for i = 1, 2; B2 for (1, 3)

  // A step that forgets to conjugate breaks the braid relation.
  const BraidStepFn broken = [](int j, const TupleDeformation& t) {
    TupleDeformation out = t;
    const auto i = static_cast<std::size_t>(std::abs(j) - 1);
    std::swap(out[i], out[i + 1]);
    if (j > 0) out[i] = concat(out[i], t[i]);
    return out;
  };
  CHECK_FALSE(check_braid_relations(4, broken).all_pass());
}

TEST_CASE("global deformations") {
  const TupleDeformation a = global_alpha_deformation(7, 7);
  const TupleDeformation b = global_beta_deformation(7, 7);
  REQUIRE(a.size() == 16);
  CHECK(free_reduce(a) == free_reduce(ecm::testing::alpha_hat_reference()));
  CHECK(free_reduce(b) == free_reduce(ecm::testing::beta_hat_reference()));
  CHECK(free_reduce(a[0]) == w({{14, -1}, {13, -1}, {12, -1}, {11, -1}, {10, -1}, {9, -1}, {8, -1}, {1, 1},
                                {8, 1}, {9, 1}, {10, 1}, {11, 1}, {12, 1}, {13, 1}, {14, 1}}));
  CHECK(free_reduce(b[15]) == w({{16, 1}}));

  const TupleDeformation small = global_alpha_deformation(1, 1);
  // α_{p+j} ↦ α α_{p+j} α^{-1}, as in the literal lists above.
  CHECK(free_reduce(small[1]) == w({{3, 1}, {2, 1}, {3, -1}}));
}
