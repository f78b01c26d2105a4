#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "aqecc/families.hpp"
#include "doctest.h"

using namespace aqecc;

TEST_CASE("GRM parameter formulas and codes") {
  auto f2 = FiniteField::make(2, 1);
  auto [rm, spec] = grm(f2, 3, 1);
  CHECK(rm.n() == 8);
  CHECK(rm.k() == 4);
  CHECK(spec.predicted_k == 4);
  CHECK(spec.predicted_d == 4);
  CHECK(min_distance(rm).value == 4);

  auto f3 = FiniteField::make(3, 1);
  auto [rm3, spec3] = grm(f3, 2, 1);
  CHECK(rm3.n() == 9);
  CHECK(rm3.k() == 3);
  CHECK(spec3.predicted_d == 6);
  CHECK(min_distance(rm3).value == 6);

  auto [rep, rep_spec] = grm(f3, 2, 0);
  CHECK(rep.k() == 1);
  CHECK(min_distance(rep).value == 9);

  CHECK_THROWS_AS(grm(f2, 2, 2), std::invalid_argument);  // alpha >= m(q-1)
}

TEST_CASE("GRM duality") {
  auto f4 = FiniteField::make(2, 2);
  for (std::uint32_t alpha = 0; alpha < 3; ++alpha) {
    auto [c, spec] = grm(f4, 1, alpha);
    auto [cd, sd] = grm(f4, 1, spec.alpha_dual);
    CHECK(dual(c) == cd);
  }
}

TEST_CASE("GRM quantum code, binary order pair") {
  AqeccDerivation d = grm_aqecc(2, 1, 3, 1, 2);
  CHECK(d.claim.theorem == "mainGRM");
  CHECK(d.claim.status == ClaimStatus::verified_exact);
  CHECK(*d.claim.claimed_n == 8);
  CHECK(*d.claim.claimed_k == 3);  // k(2) - k(1) = 7 - 4
  CHECK(*d.claim.claimed_dz == 2);
  CHECK(*d.claim.claimed_dx == 4);
  CHECK(d.params->dz.value >= 2);
  CHECK(d.params->dx.value >= 4);
  CHECK_THROWS_AS(grm_aqecc(2, 1, 3, 1, 1), std::invalid_argument);
}

TEST_CASE("GRM quantum code, expanded quaternary pair") {
  Budget budget{1u << 20, 1};
  AqeccDerivation d = grm_aqecc(2, 2, 2, 1, 3, std::nullopt, budget);
  CHECK(*d.claim.claimed_n == 32);
  CHECK(*d.claim.claimed_k ==
        2 * (grm_dimension(4, 2, 3) - grm_dimension(4, 2, 1)));
  CHECK(d.pair->k() == *d.claim.claimed_k);
  CHECK(d.claim.status != ClaimStatus::hypothesis_failed);
  CHECK(d.claim.status != ClaimStatus::violated);
  CHECK(d.claim.bounds_hold());
}

TEST_CASE("character codes") {
  auto f3 = FiniteField::make(3, 1);
  LinearCode c0 = character_code(f3, 0, 2);
  CHECK(c0.n() == 4);
  CHECK(c0.k() == 1);
  CHECK(min_distance(c0).value == 4);
  LinearCode c1 = character_code(f3, 1, 2);
  CHECK(c1.k() == 3);
  CHECK(min_distance(c1).value == 2);
  auto f5 = FiniteField::make(5, 1);
  LinearCode c5 = character_code(f5, 1, 3);
  CHECK(c5.n() == 8);
  CHECK(c5.k() == 4);
  CHECK(min_distance(c5).value == 4);
  CHECK_THROWS_AS(character_code(FiniteField::make(2, 1), 1, 2),
                  std::invalid_argument);
}

TEST_CASE("character quantum codes") {
  AqeccDerivation d = character_aqecc(3, 1, 2, 0, 1);
  CHECK(d.claim.theorem == "lagchar");
  CHECK(d.claim.status == ClaimStatus::verified_exact);
  CHECK(*d.claim.claimed_n == 4);
  CHECK(*d.claim.claimed_k == 2);
  CHECK(d.params->dz.value >= 2);
  CHECK(d.params->dx.value >= 2);
  // the expanded nonprime variant
  AqeccDerivation d9 = character_aqecc(3, 2, 2, 0, 1);
  CHECK(*d9.claim.claimed_n == 8);
  CHECK(*d9.claim.claimed_k == 4);
  CHECK(d9.claim.status == ClaimStatus::verified_exact);
  CHECK_THROWS_AS(character_aqecc(3, 1, 2, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(character_aqecc(2, 1, 2, 0, 1), std::invalid_argument);
}

TEST_CASE("BCH codes") {
  auto f2 = FiniteField::make(2, 1);
  auto [c15, s15] = bch(f2, 15, 1, 5);
  CHECK(c15.n() == 15);
  CHECK(c15.k() == 7);
  CHECK(min_distance(c15).value == 5);
  CHECK(s15.cosets.size() == 2);
  CHECK(s15.gen_poly.size() == 9);  // degree 8
  auto [c7, s7] = bch(f2, 7, 1, 3);
  CHECK(c7.k() == 4);
  CHECK(min_distance(c7).value == 3);
  // single-root case over a length dividing q - 1
  auto f5 = FiniteField::make(5, 1);
  auto [rs, srs] = bch(f5, 4, 1, 2);
  CHECK(rs.k() == 3);
  CHECK(min_distance(rs).value == 2);
  CHECK_THROWS_AS(bch(f2, 8, 1, 3), std::invalid_argument);  // gcd(2,8) != 1
}

TEST_CASE("BCH distances at textbook parameters") {
  auto f2 = FiniteField::make(2, 1);
  auto [c157, s157] = bch(f2, 15, 1, 7);
  CHECK(c157.k() == 5);
  CHECK(min_distance(c157).value == 7);
  auto [c31, s31] = bch(f2, 31, 1, 7);
  CHECK(c31.k() == 16);
  CHECK(min_distance(c31).value == 7);
  auto [c316, s316] = bch(f2, 31, 1, 5);
  CHECK(c316.k() == 21);
  CHECK(min_distance(c316).value == 5);
}

TEST_CASE("cyclotomic cosets") {
  CHECK(cyclotomic_coset(2, 15, 1) == std::vector<std::uint32_t>{1, 2, 4, 8});
  CHECK(cyclotomic_coset(2, 15, 3) == std::vector<std::uint32_t>{3, 6, 9, 12});
  CHECK(cyclotomic_coset(3, 26, 13) == std::vector<std::uint32_t>{13});
  CHECK(multiplicative_order(2, 15) == 4);
  CHECK(multiplicative_order(4, 15) == 2);
}

TEST_CASE("nested BCH quantum codes") {
  // fully oracle-checked instance
  AqeccDerivation d = bch_nested_aqecc(2, 1, 15, 2, 4);
  CHECK(d.claim.theorem == "BCHNested");
  CHECK(d.claim.status == ClaimStatus::verified_exact);
  CHECK(*d.claim.claimed_n == 15);
  CHECK(*d.claim.claimed_k == 3);  // 15 - 4*1 - 4*2
  CHECK(*d.claim.claimed_dz == 4);
  CHECK(*d.claim.claimed_dx == 2);
  CHECK(d.params->dz.value >= 4);
  CHECK(d.params->dx.value >= 2);
  // coinciding coset unions are rejected by the hypothesis gate
  AqeccDerivation gate = bch_nested_aqecc(2, 1, 15, 2, 3);
  CHECK(gate.claim.status == ClaimStatus::hypothesis_failed);
  // a longer instance where only one side stays within budget
  Budget budget{1u << 22, 1};
  AqeccDerivation d31 = bch_nested_aqecc(2, 1, 31, 2, 4, std::nullopt, budget);
  CHECK(*d31.claim.claimed_k == 16);  // 31 - 5*1 - 5*2
  CHECK(d31.claim.status == ClaimStatus::verified_bound);
  CHECK(d31.claim.oracle_dz.has_value());
  CHECK(*d31.claim.oracle_dz >= 4);
}

TEST_CASE("the odd-characteristic BCH family reconstruction is gated") {
  // the smallest in-range instance: the reconstructed pair exists but its
  // dimension disagrees with the claimed formula, which the checker reports
  AqeccDerivation d = bch_abch1_aqecc(3, 1, 4, 1);
  CHECK(d.claim.theorem == "ABCH1");
  CHECK(d.claim.status == ClaimStatus::hypothesis_failed);
  CHECK(*d.claim.claimed_k == 50);
  CHECK(d.claim.note.find("k = 44") != std::string::npos);
  // out-of-budget splitting fields degrade to bound-only claims
  AqeccDerivation d7 = bch_abch1_aqecc(7, 1, 4, 1);
  CHECK(d7.claim.status == ClaimStatus::budget_exceeded);
  CHECK(*d7.claim.claimed_n == 2400);
  CHECK_THROWS_AS(bch_abch1_aqecc(3, 1, 3, 1), std::invalid_argument);
  CHECK_THROWS_AS(bch_abch1_aqecc(2, 1, 4, 1), std::invalid_argument);
}

TEST_CASE("quadratic residue codes") {
  auto f4 = FiniteField::make(2, 2);
  QrCodes q5 = qr(5, f4);
  CHECK(q5.Q().k() == 3);
  CHECK(min_distance(q5.Q()).value == 3);
  CHECK(q5.Qd().k() == 2);
  CHECK(min_distance(q5.Qd()).value == 4);
  CHECK(q5.Qd() == dual(q5.C()));  // p = 4k+1 pairing

  auto f2 = FiniteField::make(2, 1);
  QrCodes q7 = qr(7, f2);
  CHECK(q7.Q().k() == 4);
  CHECK(min_distance(q7.Q()).value == 3);
  CHECK(q7.Qd() == dual(q7.Q()));  // p = 4k+3 pairing

  CHECK_THROWS_AS(qr(5, f2), std::invalid_argument);  // 2 is not a square mod 5
  CHECK_THROWS_AS(qr(9, f2), std::invalid_argument);  // length must be prime
}

TEST_CASE("QR distances at textbook parameters") {
  auto f3 = FiniteField::make(3, 1);
  QrCodes q13 = qr(13, f3);
  CHECK(q13.Q().k() == 7);
  CHECK(min_distance(q13.Q()).value == 5);
  auto f2 = FiniteField::make(2, 1);
  QrCodes q17 = qr(17, f2, 1024);
  CHECK(q17.Q().k() == 9);
  CHECK(min_distance(q17.Q()).value == 5);
  AqeccDerivation d17 = qr_aqecc(17, 2, 1);
  CHECK(d17.claim.status == ClaimStatus::verified_exact);
  CHECK(*d17.claim.claimed_dz == 5);  // ceil(sqrt(17))
  CHECK(d17.params->dz.value >= 5);
  CHECK(d17.params->dx.value >= 5);
}

TEST_CASE("expanded quadratic residue quantum codes") {
  AqeccDerivation d5 = qr_aqecc(5, 2, 2);
  CHECK(d5.claim.theorem == "qrexp1");
  CHECK(d5.claim.status == ClaimStatus::verified_exact);
  CHECK(d5.params->n == 10);
  CHECK(d5.params->k == 2);
  CHECK(d5.params->dz.value >= 3);
  CHECK(d5.params->dx.value >= 3);

  AqeccDerivation d7 = qr_aqecc(7, 2, 1);
  CHECK(d7.claim.theorem == "qrexp2");
  CHECK(d7.claim.status == ClaimStatus::verified_exact);
  CHECK(d7.params->n == 7);
  CHECK(d7.params->k == 1);
  CHECK(*d7.claim.claimed_dz == 3);  // smallest d with d^2 - d + 1 >= 7
  CHECK(d7.params->dz.value >= 3);
  CHECK(d7.params->dx.value >= 3);

  AqeccDerivation d13 = qr_aqecc(13, 3, 1);
  CHECK(d13.claim.theorem == "qrexp1");
  CHECK(d13.claim.status == ClaimStatus::verified_exact);
  CHECK(d13.params->n == 13);
  CHECK(d13.params->k == 1);
  CHECK(*d13.claim.claimed_dz == 4);  // ceil(sqrt(13))
  CHECK(d13.params->dz.value >= 4);
}

TEST_CASE("bound helpers") {
  CHECK(sqrt_bound(5) == 3);
  CHECK(sqrt_bound(13) == 4);
  CHECK(qr3_bound(7) == 3);
  CHECK(qr3_bound(11) == 4);
  CHECK(grm_dimension(2, 3, 2) == 7);
  CHECK(grm_distance(2, 3, 2) == 2);
  CHECK(character_dimension(2, 1) == 3);
}
