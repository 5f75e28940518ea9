#include <catch2/catch_amalgamated.hpp>

#include "duple/picard.hpp"

using duple::CoverDatum;
using duple::kDefaultPrime;
using duple::MilnorData;
using duple::SurjectivityCertificate;

TEST_CASE("summand condition is exactly m >= 3") {
  auto chk = duple::summand_condition(CoverDatum(2, 3));
  REQUIRE(chk.holds);
  REQUIRE(chk.lhs == 0);
  REQUIRE(chk.rhs == 0);

  chk = duple::summand_condition(CoverDatum(5, 2));
  REQUIRE_FALSE(chk.holds);
  REQUIRE(chk.lhs == 5);
  REQUIRE(chk.rhs == 6);

  chk = duple::summand_condition(CoverDatum(2, 2));
  REQUIRE_FALSE(chk.holds);
  REQUIRE(chk.lhs == -1);
  REQUIRE(chk.rhs == 0);

  for (std::int64_t d = 2; d <= 10; ++d) {
    for (std::int64_t m = 1; m <= 10; ++m) {
      REQUIRE(duple::summand_condition(CoverDatum(d, m)).holds == (m >= 3));
    }
  }
}

TEST_CASE("t-level surjectivity: d=3 m=3") {
  auto cert = duple::t_level_surjective(CoverDatum(3, 3));
  REQUIRE(cert.map_label == "T-level");
  REQUIRE(cert.source_dim == 605);  // 55 * 11
  REQUIRE(cert.target_dim == 146);  // dim T_12 = 91 + 55
  REQUIRE(cert.rank == 146);
  REQUIRE(cert.surjective());
}

TEST_CASE("t-level surjectivity: d=2 degenerate tensor factor") {
  auto cert = duple::t_level_surjective(CoverDatum(2, 3));
  REQUIRE(cert.source_dim == 28);  // S'_6 (x) T_0
  REQUIRE(cert.target_dim == 28);
  REQUIRE(cert.rank == 28);
  REQUIRE(cert.surjective());

  cert = duple::t_level_surjective(CoverDatum(2, 4));
  REQUIRE(cert.source_dim == 135);  // 45 * 3
  REQUIRE(cert.target_dim == 55);
  REQUIRE(cert.rank == 55);
  REQUIRE(cert.surjective());
}

TEST_CASE("t-level vacuous below the degree threshold") {
  auto cert = duple::t_level_surjective(CoverDatum(2, 2));  // md-m-3 = -1
  REQUIRE(cert.verdict == SurjectivityCertificate::Verdict::vacuous);
  REQUIRE_FALSE(cert.surjective());
}

TEST_CASE("t-level surjective across the grid the theorem covers") {
  for (std::int64_t d = 2; d <= 4; ++d) {
    for (std::int64_t m = 3; m <= 5; ++m) {
      auto cert = duple::t_level_surjective(CoverDatum(d, m));
      INFO("d=" << d << " m=" << m);
      REQUIRE(cert.surjective());
    }
  }
}

TEST_CASE("r-level: d=2 m=3 Fermat, one-dimensional tensor factor") {
  CoverDatum cover(2, 3);
  auto md = MilnorData::make(cover, duple::fermat_branch_curve(cover));
  auto cert = duple::r_level_surjective(md);
  REQUIRE(cert.map_label == "R-level");
  REQUIRE(cert.source_dim == 19);  // R_6 (x) R_0
  REQUIRE(cert.target_dim == 19);
  REQUIRE(cert.rank == 19);
  REQUIRE(cert.surjective());
}

TEST_CASE("r-level: random branch curves hit the series dimensions") {
  CoverDatum c24(2, 4);
  auto md24 = MilnorData::make(c24, duple::random_branch_curve(c24, 1));
  auto cert24 = duple::r_level_surjective(md24, kDefaultPrime, 1);
  REQUIRE(cert24.target_dim == 37);
  REQUIRE(cert24.surjective());

  CoverDatum c33(3, 3);
  auto md33 = MilnorData::make(c33, duple::random_branch_curve(c33, 1));
  auto cert33 = duple::r_level_surjective(md33, kDefaultPrime, 1);
  REQUIRE(cert33.target_dim == 92);
  REQUIRE(cert33.surjective());
}

TEST_CASE("certificate invariants") {
  CoverDatum cover(2, 4);
  auto md = MilnorData::make(cover, duple::random_branch_curve(cover, 1));
  for (auto cert : {duple::t_level_surjective(cover), duple::r_level_surjective(md)}) {
    REQUIRE(cert.rank <= std::min(cert.source_dim, cert.target_dim));
    REQUIRE((cert.verdict == SurjectivityCertificate::Verdict::surjective) ==
            (cert.rank == cert.target_dim));
  }
}

TEST_CASE("two primes agree (soundness cross-check)") {
  CoverDatum cover(3, 3);
  auto md = MilnorData::make(cover, duple::random_branch_curve(cover, 2));
  auto a = duple::r_level_surjective(md, kDefaultPrime, 2);
  auto b = duple::r_level_surjective(md, 1000003, 2);
  REQUIRE(a.surjective());
  REQUIRE(b.surjective());
  REQUIRE(a.rank == b.rank);
}

TEST_CASE("dC multiple class identity k = L.C") {
  auto r = duple::dC_multiple_class(CoverDatum(2, 3), 3);
  REQUIRE(r.k == duple::Rational(3));
  REQUIRE(r.integral);
  r = duple::dC_multiple_class(CoverDatum(5, 3), 1);
  REQUIRE(r.k == duple::Rational(1));
  r = duple::dC_multiple_class(CoverDatum(3, 4), 7);
  REQUIRE(r.k == duple::Rational(7));
  REQUIRE_THROWS_AS(duple::dC_multiple_class(CoverDatum(2, 3), 0), std::invalid_argument);
}

TEST_CASE("picard witness: positive verdict for d=2 m=4") {
  auto w = duple::picard_rank_one_witness(CoverDatum(2, 4), 1);
  REQUIRE(w.verified);
  REQUIRE(w.smoothness.pass);
  REQUIRE(w.summand.holds);
  REQUIRE(w.t_level.surjective());
  REQUIRE(w.r_level.surjective());
  REQUIRE(w.verdict_text.find("very general") != std::string::npos);
}

TEST_CASE("picard witness: d=3 m=3 target dimensions") {
  auto w = duple::picard_rank_one_witness(CoverDatum(3, 3), 1);
  REQUIRE(w.verified);
  REQUIRE(w.t_level.target_dim == 146);
  REQUIRE(w.r_level.target_dim == 92);
}

TEST_CASE("picard witness refuses m < 3") {
  REQUIRE_THROWS_AS(duple::picard_rank_one_witness(CoverDatum(2, 2), 1), duple::hypothesis_error);
  REQUIRE_FALSE(duple::summand_condition(CoverDatum(2, 2)).holds);
  try {
    duple::picard_rank_one_witness(CoverDatum(2, 2), 1);
  } catch (const duple::hypothesis_error& e) {
    REQUIRE(std::string(e.what()).find("m >= 3") != std::string::npos);
    REQUIRE(std::string(e.what()).find("Picard-rank-1") != std::string::npos);
  }
}
