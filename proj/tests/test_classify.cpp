#include <doctest.h>

#include "oracle.hpp"
#include "quadric/classify.hpp"
#include "support.hpp"

using namespace quadric;
using oracle::q;

TEST_SUITE("classify") {
  TEST_CASE("semiexceptional and existence") {
    const auto& c = support::cache(7);
    CHECK(is_semiexceptional(KClass(6, -2, -2, 0), c));
    CHECK_FALSE(is_semiexceptional(KClass(4, -1, -1, 0), c));
    CHECK(is_semiexceptional(KClass(1, 0, 0, 1), c));
    CHECK(exists_semistable(KClass(2, 0, -1, 0), c));
    CHECK(exists_semistable(KClass(4, -1, -1, 0), c));
    CHECK_FALSE(exists_semistable(KClass(2, 0, 0, 1), c));
  }

  TEST_CASE("bad witnesses") {
    const auto& c = support::cache(7);
    KClass v(4, -1, -1, 0);
    auto ws = bad_witnesses(v, c);
    REQUIRE(ws.size() == 1);
    CHECK(ws[0].v1 == KClass(2, 0, -1, 0));
    CHECK(ws[0].v2 == KClass(2, -1, 0, 0));
    CHECK(ws[0].k == -2);
    CHECK(oracle::euler_hom(ws[0].v1, ws[0].v2) == -1);
    CHECK(validate_witness(v, ws[0], c));
    CHECK(bad_witnesses(KClass(2, 0, 0, 0), c).empty());
    auto w2 = bad_witnesses(KClass(6, -1, -2, 0), c);
    bool found = false;
    for (const auto& w : w2) found = found || (w.v1 == KClass(2, 0, -1, 0) && w.v2 == KClass(4, -1, -1, 0));
    CHECK(found);
    // a forged witness is rejected
    BadWitness forged{KClass(2, 0, 0, 0), KClass(2, -1, -1, 0), 0};
    CHECK_FALSE(validate_witness(v, forged, c));
  }

  TEST_CASE("shatz codimension") {
    CHECK(shatz_codim({KClass(2, 0, -1, 0), KClass(2, -1, 0, 0)}) == 1);
    CHECK(shatz_codim({KClass(4, -1, -1, 0)}) == 0);
    KClass o(1, 0, 0, 1);
    // chi(O, (3,-1,-1,-1)) = -1
    REQUIRE(oracle::euler_hom(o, KClass(3, -1, -1, -1)) == -1);
    CHECK(shatz_codim({o, KClass(3, -1, -1, -1)}) == 1);
  }

  TEST_CASE("codimension one strata") {
    const auto& c = support::cache(7);
    auto s = codim1_strata(KClass(4, -1, -1, 0), c);
    int half = 0, exc = 0;
    for (const auto& st : s) {
      CHECK(st.codim == 1);
      if (st.kind == "half_discriminant") ++half;
      if (st.kind == "exceptional") {
        ++exc;
        CHECK(st.parts[0] == KClass(1, 0, 0, 1));
      }
    }
    CHECK(half == 1);
    CHECK(exc == 1);
    auto s2 = codim1_strata(KClass(2, 0, 0, 0), c);
    REQUIRE(s2.size() == 1);
    CHECK(s2[0].kind == "exceptional");
    CHECK(codim1_strata(KClass(2, 0, 0, -2), c).empty());
  }

  TEST_CASE("picard reports") {
    const auto& c = support::cache(7);
    auto r = classify_picard(KClass(4, -1, -1, 0), c);
    CHECK(r.nonempty);
    CHECK(r.delta == q(9, 16));
    CHECK(r.position->kind == PositionKind::SingleBranch);
    CHECK(r.bad());
    CHECK(*r.rho == 1);
    CHECK(*r.pic == "Z");
    CHECK(*r.torsion_free);
    CHECK(r.status == ProofStatus::Proved);

    auto half = classify_picard(KClass(2, -1, 0, 0), c);
    CHECK(*half.pic == "Z");
    CHECK(half.theorem_case == "half_discriminant");

    auto good = classify_picard(KClass(2, 0, 0, 0), c);
    CHECK(*good.rho == 2);
    CHECK(*good.pic == "Z^2");
    REQUIRE(good.kernel_generators.size() == 1);
    CHECK(good.kernel_generators[0] == KClass(1, 0, 0, 1));

    auto multi = classify_picard(KClass(2, 1, 1, 3), c);
    CHECK(*multi.rho == 1);
    CHECK(*multi.pic == "Z");
    CHECK(multi.status == ProofStatus::Proved);

    auto above = classify_picard(KClass(2, 0, 0, -2), c);
    CHECK(*above.pic == "Z^3");
    CHECK(above.theorem_case == "above_shifted");

    auto empty = classify_picard(KClass(2, 0, 0, 1), c);
    CHECK_FALSE(empty.nonempty);
    CHECK(empty.theorem_case == "empty");

    auto semi = classify_picard(KClass(6, -2, -2, 0), c);
    CHECK(semi.semiexceptional);
    CHECK(semi.multiplicity == 2);
  }

  TEST_CASE("bad scan") {
    const auto& c = support::cache(12);
    BadScanOptions opts;
    opts.rank_lo = 4;
    opts.rank_hi = 12;
    opts.box = {q(-1, 4), q(-1, 12), q(-5, 12), q(-1, 4)};
    auto entries = bad_scan(opts, c);
    std::vector<KClass> wk{KClass(4, -1, -1, 0), KClass(6, -1, -2, 0), KClass(8, -1, -3, 0), KClass(10, -1, -4, 0),
                           KClass(12, -1, -5, 0)};
    for (const auto& w : wk) {
      bool seen = false;
      for (const auto& e : entries) seen = seen || e.v == w;
      CHECK(seen);
    }
    BadScanOptions none = opts;
    none.box = {q(1, 3), q(1, 3), q(1, 7), q(1, 7)};
    none.rank_lo = none.rank_hi = 4;
    CHECK(bad_scan(none, c).empty());
  }

  TEST_CASE("pair seeds") {
    const auto& c = support::cache(24);
    auto seeds = half_pair_seeds(2, 12, c);
    REQUIRE(seeds.size() == 2);
    CHECK(seeds[1].v1 == KClass::from_rnd(12, {q(-1, 4), q(-1, 3)}, q(1, 2)));
    CHECK(seeds[1].v2 == KClass::from_rnd(12, {q(-1, 3), q(-1, 4)}, q(1, 2)));
    CHECK(seeds[1].w1.discriminant() == q(289, 576));
    CHECK(seeds[1].w1.slope() == Slope{q(-7, 24), q(-7, 24)});
  }
}
