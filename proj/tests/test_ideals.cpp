#include <doctest.h>

#include "fixtures.hpp"
#include "osg/enumeration.hpp"
#include "osg/ideals.hpp"

using namespace osg;
using namespace osg::testing;

namespace {

const Potency m1(1);

}  // namespace

TEST_SUITE("ideals") {
  TEST_CASE("is_ideal examples") {
    const auto c = ch2(), l = lz2(), g = g2(), n = n2();
    CHECK(is_ideal(c, set(c, {0}), IdealKind::MLeft, m1));
    CHECK_FALSE(is_ideal(l, set(l, {0}), IdealKind::MLeft, m1));
    CHECK(is_ideal(l, set(l, {0}), IdealKind::MRight, m1));
    CHECK(is_ideal(l, set(l, {0}), IdealKind::MBiInterior, m1));
    CHECK_FALSE(is_ideal(g, set(g, {0}), IdealKind::MBiInterior, m1));
    CHECK(is_ideal(n, set(n, {0}), IdealKind::MInterior, m1));
  }

  TEST_CASE("is_ideal error paths") {
    const auto c = ch2();
    try {
      is_ideal(c, Subset::empty(2), IdealKind::MLeft, m1);
      FAIL("expected EmptySubset");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::EmptySubset);
    }
    try {
      is_ideal(c, set(ch3(), {0}), IdealKind::MLeft, m1);
      FAIL("expected BindingMismatch");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::BindingMismatch);
    }
  }

  TEST_CASE("bi-interior ideals need not be subsemigroups; the strict flag adds that requirement") {
    // G2 = Z2: {1} is not a subsemigroup. In the null semigroup N2 every
    // downward-closed set containing 0 qualifies; {1} alone does not.
    const auto n = n2();
    CHECK_FALSE(is_ideal(n, set(n, {1}), IdealKind::MBiInterior, m1));
    // Find a structure of order <= 3 where the two readings differ.
    bool differ = false;
    for (const auto& s : brute_labeled_structures(3))
      for (Mask b = 1; b < 8 && !differ; ++b)
        if (is_ideal(s, Subset(3, b), IdealKind::MBiInterior, m1) !=
            is_ideal(s, Subset(3, b), IdealKind::MBiInterior, m1, {true})) {
          differ = true;
          CHECK_FALSE(is_subsemigroup(s, Subset(3, b)));
        }
    CHECK(differ);
  }

  TEST_CASE("principal_set examples") {
    CHECK(principal_set(g2(), 0, PrincipalPattern::aSma, m1) == g2().universe());
    CHECK(principal_set(ch2(), 0, PrincipalPattern::SmaSm, m1) == set(ch2(), {0}));
    CHECK(principal_set(lz2(), 1, PrincipalPattern::aSm, Potency(2)) == set(lz2(), {1}));
    CHECK(principal_set(ch2(), 1, PrincipalPattern::Sma, m1) == ch2().universe());
    try {
      principal_set(ch2(), 2, PrincipalPattern::aSma, m1);
      FAIL("expected IndexOutOfRange");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::IndexOutOfRange);
    }
  }

  TEST_CASE("regularity examples") {
    CHECK(is_m_regular_element(lz2(), 0, m1));
    CHECK_FALSE(is_m_regular_element(n2(), 1, m1));
    CHECK(is_m_regular_element(g2(), 1, Potency(2)));
    CHECK(is_m_regular(lz2(), m1));
    CHECK_FALSE(is_m_regular(n2(), m1));
    CHECK(is_m_regular(ch2(), Potency(3)));
    CHECK_THROWS_AS(is_m_regular_element(n2(), 5, m1), Error);
  }

  TEST_CASE("simplicity examples") {
    CHECK(simplicity(g2(), SimplicityKind::Simple, m1));
    CHECK(simplicity(lz2(), SimplicityKind::LeftSimple, m1));
    CHECK_FALSE(simplicity(lz2(), SimplicityKind::RightSimple, m1));
    CHECK_FALSE(simplicity(ch2(), SimplicityKind::BiInteriorSimple, m1));
    CHECK(simplicity(g2(), SimplicityKind::BiInteriorSimple, m1));
    CHECK(simplicity_counterexample(lz2(), SimplicityKind::RightSimple, m1) == set(lz2(), {0}));
  }

  TEST_CASE("exempting singletons changes simplicity only through one-element ideals") {
    SimplicityOptions lenient;
    lenient.exempt_singletons = true;
    // CH2's only proper bi-interior ideal is {0}.
    CHECK(simplicity(ch2(), SimplicityKind::BiInteriorSimple, m1, lenient));
    // CH3 also has {0,1}.
    CHECK_FALSE(simplicity(ch3(), SimplicityKind::BiInteriorSimple, m1, lenient));
  }

  TEST_CASE("library predicates agree with the definitional oracle on every structure of order <= 3") {
    for (unsigned n = 1; n <= 3; ++n)
      for (const auto& s : brute_labeled_structures(n))
        for (unsigned m = 1; m <= 3; ++m)
          for (Mask b = 1; b <= Subset::full_mask(n); ++b)
            for (int k = 0; k < 7; ++k) {
              const IdealKind kind = kAllIdealKinds[static_cast<std::size_t>(k)];
              REQUIRE(is_ideal(s, Subset(n, b), kind, Potency(m)) == oracle_is_ideal(s, b, k, m));
              if (kind == IdealKind::MBiInterior)
                REQUIRE(is_ideal(s, Subset(n, b), kind, Potency(m), {true}) == oracle_is_ideal(s, b, k, m, true));
            }
  }

  TEST_CASE("ideal invariants across the order <= 3 corpus") {
    for (unsigned n = 1; n <= 3; ++n)
      for (const auto& s : brute_labeled_structures(n))
        for (unsigned mv = 1; mv <= 3; ++mv) {
          const Potency m(mv);
          for (IdealKind k : kAllIdealKinds) CHECK(is_ideal(s, s.universe(), k, m));

          for (IdealKind k : {IdealKind::MLeft, IdealKind::MRight, IdealKind::MTwoSided, IdealKind::MQuasi,
                              IdealKind::MBi, IdealKind::MInterior})
            for (const Subset& b : enumerate_ideals(s, k, m).subsets)
              CHECK(is_ideal(s, b, IdealKind::MBiInterior, m));

          const auto bis = enumerate_ideals(s, IdealKind::MBiInterior, m).subsets;
          const auto rights = enumerate_ideals(s, IdealKind::MRight, m).subsets;
          for (const Subset& a : bis) {
            for (const Subset& b : bis)
              if (!(a & b).empty()) CHECK(is_ideal(s, a & b, IdealKind::MBiInterior, m));
            for (const Subset& t : rights)
              if (!(a & t).empty()) CHECK(is_ideal(s, a & t, IdealKind::MBiInterior, m));
            CHECK(is_ideal(s, downward_closure(s, subset_product(s, a, s.universe())), IdealKind::MBiInterior, m));
            CHECK(is_ideal(s, downward_closure(s, subset_product(s, s.universe(), a)), IdealKind::MBiInterior, m));
          }

          // three formulations of m-regularity agree
          bool by_element = true, by_principal = true;
          for (Element a = 0; a < n; ++a) {
            by_element = by_element && is_m_regular_element(s, a, m);
            by_principal = by_principal && principal_set(s, a, PrincipalPattern::aSma, m).contains(a);
          }
          CHECK(is_m_regular(s, m) == by_element);
          CHECK(is_m_regular(s, m) == by_principal);
        }
  }

  TEST_CASE("kind names round-trip") {
    for (IdealKind k : kAllIdealKinds) CHECK(parse_kind(kind_name(k)) == k);
    CHECK_FALSE(parse_kind("m_sideways").has_value());
  }
}
