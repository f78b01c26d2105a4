#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>
#include <set>

#include "aqecc/families.hpp"
#include "aqecc/lincode.hpp"
#include "aqecc/verify.hpp"
#include "doctest.h"

using namespace aqecc;

namespace {

LinearCode hamming7() {
  return LinearCode(FiniteField::make(2, 1), 7,
                    {{1, 0, 0, 0, 1, 1, 0},
                     {0, 1, 0, 0, 1, 0, 1},
                     {0, 0, 1, 0, 0, 1, 1},
                     {0, 0, 0, 1, 1, 1, 1}});
}

LinearCode extend_to_eight() {
  // [8,4,4]: the order-1 length-8 evaluation code
  auto [c, spec] = grm(FiniteField::make(2, 1), 3, 1);
  return c;
}

}  // namespace

TEST_CASE("from_generator canonicalizes") {
  auto f2 = FiniteField::make(2, 1);
  LinearCode rep(f2, 4, {{1, 1, 1, 1}});
  CHECK(rep.n() == 4);
  CHECK(rep.k() == 1);
  CHECK(hamming7().k() == 4);
  LinearCode dup(f2, 2, {{1, 1}, {1, 1}});
  CHECK(dup.k() == 1);
  CHECK_THROWS_AS(LinearCode(f2, 3, {{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(LinearCode(f2, 2, {{1, 2}}), std::invalid_argument);
  // row-scrambled generators give the identical canonical matrix
  LinearCode h = hamming7();
  LinearCode scrambled(f2, 7,
                       {{1, 1, 0, 0, 0, 1, 1},
                        {0, 1, 0, 0, 1, 0, 1},
                        {0, 1, 1, 0, 1, 1, 0},
                        {1, 1, 1, 1, 1, 1, 1}});
  CHECK(scrambled == h);
}

TEST_CASE("dual codes") {
  LinearCode h = hamming7();
  LinearCode s = dual(h);
  CHECK(s.n() == 7);
  CHECK(s.k() == 3);
  CHECK(min_distance(s).value == 4);  // simplex
  CHECK(dual(s) == h);
  auto f2 = FiniteField::make(2, 1);
  CHECK(dual(LinearCode::full(f2, 5)).k() == 0);
  CHECK(dual(LinearCode::zero(f2, 5)).k() == 5);
  auto f3 = FiniteField::make(3, 1);
  LinearCode rep3(f3, 4, {{1, 1, 1, 1}});
  LinearCode rep3d = dual(rep3);
  CHECK(rep3d.k() == 3);
  CHECK(min_distance(rep3d).value == 2);
}

TEST_CASE("minimum distance oracle") {
  auto rep = min_distance(hamming7());
  CHECK(rep.status == OracleStatus::exact);
  CHECK(rep.value == 3);
  CHECK(rep.enumerated == 16);
  CHECK(rep.method == OracleMethod::exhaustive);

  auto f3 = FiniteField::make(3, 1);
  CHECK(min_distance(LinearCode(f3, 4, {{1, 1, 1, 1}})).value == 4);
  CHECK(min_distance(extend_to_eight()).value == 4);
}

TEST_CASE("zero code and budget outcomes") {
  auto f2 = FiniteField::make(2, 1);
  auto zero_rep = min_distance(LinearCode::zero(f2, 4));
  CHECK(zero_rep.status == OracleStatus::undefined_zero_code);
  Budget tiny{8, 1};
  auto capped = min_distance(hamming7(), tiny);
  CHECK(capped.status == OracleStatus::budget_exceeded);
}

TEST_CASE("relative minimum weight") {
  LinearCode h = hamming7();
  LinearCode s = dual(h);
  REQUIRE(is_subcode(s, h));
  auto rel = relative_min_weight(h, s);
  CHECK(rel.value == 3);
  CHECK(rel.enumerated == 16 - 8);
  CHECK(rel.method == OracleMethod::coset_exhaustive);
  // C2 = zero subcode: relative weight equals the distance
  auto f2 = FiniteField::make(2, 1);
  auto rel0 = relative_min_weight(h, LinearCode::zero(f2, 7));
  CHECK(rel0.value == min_distance(h).value);
  // full space against the repetition code
  LinearCode full3 = LinearCode::full(f2, 3);
  LinearCode rep3(f2, 3, {{1, 1, 1}});
  CHECK(relative_min_weight(full3, rep3).value == 1);
  // not nested
  CHECK_THROWS_AS(relative_min_weight(rep3, LinearCode(f2, 3, {{1, 0, 0}})),
                  std::invalid_argument);
}

TEST_CASE("even-like and odd-like weights") {
  auto eo = even_odd_weights(hamming7());
  CHECK(eo.odd == 3);
  CHECK(eo.even == 4);
  auto f2 = FiniteField::make(2, 1);
  auto rep_eo = even_odd_weights(LinearCode(f2, 4, {{1, 1, 1, 1}}));
  CHECK(rep_eo.even == 4);
  CHECK_FALSE(rep_eo.odd.has_value());
  // all words even-like by construction
  auto ext_eo = even_odd_weights(extend_to_eight());
  CHECK_FALSE(ext_eo.odd.has_value());
}

TEST_CASE("expansion of a length-5 quaternary code") {
  auto f4 = FiniteField::make(2, 2);
  QrCodes codes = qr(5, f4);
  CHECK(codes.Q().k() == 3);
  CHECK(min_distance(codes.Q()).value == 3);
  auto tower = FieldTower::make(FiniteField::make(2, 1), f4);
  FieldBasis b(tower, {1, 2});
  LinearCode e = expand(codes.Q(), b);
  CHECK(e.n() == 10);
  CHECK(e.k() == 6);
  CHECK(min_distance(e).value >= 3);
  // zero code expands to the zero code
  LinearCode z = expand(LinearCode::zero(f4, 4), b);
  CHECK(z.n() == 8);
  CHECK(z.k() == 0);
}

TEST_CASE("dual of the expansion, fixed quaternary code") {
  auto f4 = FiniteField::make(2, 2);
  auto tower = FieldTower::make(FiniteField::make(2, 1), f4);
  LinearCode c(f4, 6, {{1, 2, 0, 3, 1, 0}, {0, 1, 1, 2, 0, 3}, {0, 0, 1, 1, 2, 2}});
  FieldBasis b(tower, {1, 2});
  CHECK(dual(expand(c, b)) == expand(dual(c), b.dual()));
  // as codeword sets too
  auto lhs = all_codewords(dual(expand(c, b)));
  auto rhs = all_codewords(expand(dual(c), b.dual()));
  CHECK(std::set(lhs.begin(), lhs.end()) == std::set(rhs.begin(), rhs.end()));
}

TEST_CASE("coordinate predicates") {
  LinearCode h = hamming7();
  auto at0 = has_min_weight_word_at(h, 0);
  REQUIRE(at0.has_value());
  CHECK(*at0);
  LinearCode s = dual(h);
  for (std::size_t i = 0; i < 7; ++i) {
    auto at = has_min_weight_word_at(s, i);
    REQUIRE(at.has_value());
    CHECK(*at);  // all simplex words have full-weight support pattern
  }
  auto f2 = FiniteField::make(2, 1);
  LinearCode rep(f2, 4, {{1, 1, 1, 1}});
  CHECK_FALSE(has_zero_coordinate_word(rep, 2));
  CHECK(has_zero_coordinate_word(h, 0));
  Budget tiny{2, 1};
  CHECK_FALSE(has_min_weight_word_at(h, 0, tiny).has_value());
}

TEST_CASE("encode and contains") {
  LinearCode h = hamming7();
  std::vector<GfElem> msg{1, 0, 1, 0};
  auto w = h.encode(msg);
  CHECK(h.contains(w));
  w[0] = w[0] ^ 1u;
  CHECK_FALSE(h.contains(w));
}

namespace {

// straight-line recomputation, independent of the incremental scan
std::vector<GfElem> encode_index(const LinearCode& c, std::uint64_t idx) {
  const FiniteField& F = *c.field();
  std::vector<GfElem> msg(c.k());
  for (std::size_t j = 0; j < c.k(); ++j) {
    msg[j] = static_cast<GfElem>(idx % F.q());
    idx /= F.q();
  }
  return c.encode(msg);
}

std::uint32_t naive_min_distance(const LinearCode& c) {
  std::uint32_t best = UINT32_MAX;
  std::uint64_t total = pow_sat(c.field()->q(), c.k());
  for (std::uint64_t idx = 1; idx < total; ++idx) {
    auto w = encode_index(c, idx);
    std::uint32_t wt = 0;
    for (auto e : w) wt += (e != 0);
    best = std::min(best, wt);
  }
  return best;
}

}  // namespace

TEST_CASE("incremental oracle agrees with straight-line recomputation") {
  std::mt19937_64 rng(2024);
  for (std::uint64_t q : {2, 3, 4, 5}) {
    std::uint32_t p = (q == 4) ? 2 : static_cast<std::uint32_t>(q);
    std::uint32_t m = (q == 4) ? 2 : 1;
    auto f = FiniteField::make(p, m);
    for (int it = 0; it < 12; ++it) {
      LinearCode c = random_code(rng, f, 4 + rng() % 4, 4);
      if (c.k() == 0) continue;
      CHECK(min_distance(c).value == naive_min_distance(c));
      // relative weight against a random subcode, recomputed word by word
      CssPair pr = random_css_pair(rng, f, 5 + rng() % 3, 4);
      std::uint32_t naive_rel = UINT32_MAX;
      std::uint64_t total = pow_sat(q, pr.c1().k());
      for (std::uint64_t idx = 1; idx < total; ++idx) {
        auto w = encode_index(pr.c1(), idx);
        if (pr.c2().contains(w)) continue;
        std::uint32_t wt = 0;
        for (auto e : w) wt += (e != 0);
        naive_rel = std::min(naive_rel, wt);
      }
      CHECK(relative_min_weight(pr.c1(), pr.c2()).value == naive_rel);
      // even/odd split, recomputed
      std::optional<std::uint32_t> ne, no;
      const FiniteField& F = *f;
      for (std::uint64_t idx = 1; idx < pow_sat(q, c.k()); ++idx) {
        auto w = encode_index(c, idx);
        std::uint32_t wt = 0;
        GfElem sum = 0;
        for (auto e : w) {
          wt += (e != 0);
          sum = F.add(sum, e);
        }
        auto& slot = (sum == 0) ? ne : no;
        if (!slot || wt < *slot) slot = wt;
      }
      auto eo = even_odd_weights(c);
      CHECK(eo.even == ne);
      CHECK(eo.odd == no);
    }
  }
}

TEST_CASE("cached distance is reused and consistent") {
  LinearCode h = hamming7();
  CHECK_FALSE(h.cached_distance().has_value());
  auto first = min_distance(h);
  REQUIRE(h.cached_distance().has_value());
  CHECK(*h.cached_distance() == first.value);
  auto second = min_distance(h);
  CHECK(second.value == first.value);
  CHECK(second.enumerated == first.enumerated);
}

TEST_CASE("multithreaded scan matches single-threaded") {
  std::mt19937_64 rng(99);
  auto f3 = FiniteField::make(3, 1);
  for (int it = 0; it < 5; ++it) {
    LinearCode c = random_code(rng, f3, 8, 6);
    if (c.k() == 0) continue;
    Budget one{1u << 26, 1}, four{1u << 26, 4};
    CHECK(min_distance(c, one).value == min_distance(c, four).value);
  }
}
