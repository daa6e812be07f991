#include <doctest.h>

#include <random>
#include <set>

#include "fixtures.hpp"
#include "osg/conjecture.hpp"
#include "osg/enumeration.hpp"
#include "osg/verifier.hpp"
#include "random_structures.hpp"

using namespace osg;
using namespace osg::testing;

namespace {

const Potency m1(1);

std::vector<OrderedSemigroup> corpus_upto(unsigned n) {
  std::vector<OrderedSemigroup> out;
  for (unsigned k = 1; k <= n; ++k)
    for (auto& s : brute_labeled_structures(k)) out.push_back(std::move(s));
  return out;
}

CheckResult fake_fail(const OrderedSemigroup& s, std::string id, unsigned m, std::vector<WitnessBinding> w,
                      std::string direction = {}) {
  return CheckResult{s.name(), std::move(id), m, Status::Fails, std::move(w), std::move(direction), {}};
}

}  // namespace

TEST_SUITE("verifier") {
  TEST_CASE("registry order and expectations") {
    std::vector<std::string> ids;
    for (const auto& c : check_registry()) ids.push_back(c.id);
    const std::vector<std::string> expected = {"L1", "L2",  "L3",  "L4",  "L5",  "L6",  "L7", "T1",  "T1'",
                                               "T2", "T3",  "T4",  "T5",  "T6",  "T7",  "T8", "T9",  "T10",
                                               "T11", "T11'", "T12", "T13", "T14", "T15", "T16", "R1", "R2",
                                               "E1", "E2"};
    CHECK(ids == expected);
    for (const auto& c : check_registry()) {
      static const std::set<std::string> theorems = {"L1", "L2", "L3", "L4", "L5", "L6", "L7", "T1", "T1'",
                                                     "T2", "T3", "T4", "T5", "T6", "T7", "T8", "T9"};
      const bool theorem = theorems.count(c.id) == 1;
      CHECK_MESSAGE((c.expected == Expectation::Theorem) == theorem, c.id);
      CHECK(c.experimental == (c.id[0] == 'E'));
    }
    try {
      find_check("T99");
      FAIL("expected UnknownCheckId");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::UnknownCheckId);
    }
    CHECK(parse_check_list("T2,L1,T1'") == std::vector<std::string>{"L1", "T1'", "T2"});
    CHECK(parse_check_list("all").size() == expected.size());
    CHECK_THROWS_AS(parse_check_list("L1,nope"), Error);
  }

  TEST_CASE("run_check examples") {
    CHECK(run_check(ch2(), "T5", m1).status == Status::Holds);
    CHECK(run_check(g2(), "T12", m1).status == Status::Holds);
    // N2 is not 1-regular; the converse direction is decided by direct enumeration
    const auto r = run_check(n2(), "T13", m1);
    CHECK(r.status != Status::Error);
    CHECK(r.status != Status::Skipped);
    bool body = true;
    const auto bis = enumerate_ideals(n2(), IdealKind::MBiInterior, m1).subsets;
    const auto ids = enumerate_ideals(n2(), IdealKind::MTwoSided, m1).subsets;
    const auto ls = enumerate_ideals(n2(), IdealKind::MLeft, m1).subsets;
    for (const auto& b : bis)
      for (const auto& i : ids)
        for (const auto& l : ls)
          body = body && (b & i & l).subset_of(downward_closure(n2(), subset_product(n2(), subset_product(n2(), b, i), l)));
    CHECK((r.status == Status::Fails) == body);
    if (r.status == Status::Fails) {
      CHECK(r.direction == "converse");
      CHECK(validate_witness(n2(), r));
    }
    CHECK_THROWS_AS(run_check(ch2(), "nope", m1), Error);
  }

  TEST_CASE("run_suite examples") {
    const auto l = run_suite({ch2()}, {1}, parse_check_list("L1,L2,L3,L4,L5,L6,L7"));
    CHECK(l.results.size() == 7);
    for (const auto& r : l.results) CHECK(r.status == Status::Holds);

    const auto t1 = run_suite({lz2(), g2()}, {1, 2}, {"T1"});
    CHECK(t1.results.size() == 4);
    for (const auto& r : t1.results) CHECK(r.status == Status::Holds);
    REQUIRE(t1.summary.size() == 1);
    CHECK(t1.summary[0] == CheckSummary{"T1", 4, 0, 0, 0});

    const auto t10 = run_suite({n2()}, {1}, {"T10"});
    REQUIRE(t10.results.size() == 1);
    CHECK(t10.results[0].status == Status::Skipped);
    CHECK(t10.summary[0].skipped == 1);
  }

  TEST_CASE("run_suite orders rows by structure, potency, check") {
    const auto rep = run_suite({lz2(), ch2()}, {1, 2}, {"L1", "T1"}, {}, "x");
    REQUIRE(rep.results.size() == 8);
    const char* names[] = {"LZ2", "LZ2", "LZ2", "LZ2", "CH2", "CH2", "CH2", "CH2"};
    const unsigned ms[] = {1, 1, 2, 2, 1, 1, 2, 2};
    for (std::size_t i = 0; i < 8; ++i) {
      CHECK(rep.results[i].structure == names[i]);
      CHECK(rep.results[i].m == ms[i]);
      CHECK(rep.results[i].check == (i % 2 == 0 ? "L1" : "T1"));
    }
    CHECK(rep.corpus_id == "x");
    CHECK(rep.potencies == std::vector<unsigned>{1, 2});
    CHECK(rep.version == kToolkitVersion);
  }

  TEST_CASE("theorem-status checks hold on the order <= 3 corpus") {
    const auto corpus = corpus_upto(3);
    const auto rep = run_suite(corpus, {1, 2, 3}, parse_check_list("L1,L2,L3,L4,L5,L6,L7,T1,T1',T2,T3,T4,T5,T6,T7,T8,T9"));
    for (const auto& s : rep.summary) {
      CHECK_MESSAGE(s.fails == 0, s.id);
      CHECK_MESSAGE(s.errors == 0, s.id);
      CHECK(s.holds + s.skipped == corpus.size() * 3);
    }
    CHECK_FALSE(has_blocking_failures(rep));
  }

  TEST_CASE("parallel and serial suites produce identical reports") {
    const auto corpus = corpus_upto(3);
    const auto checks = parse_check_list("all");
    const auto par = run_suite(corpus, {1, 2}, checks, {}, "c");
    const auto ser = run_suite_serial(corpus, {1, 2}, checks, {}, "c");
    CHECK(par.results == ser.results);
    CHECK(par.summary == ser.summary);
  }

  TEST_CASE("claim checks on random larger structures: every failure validates") {
    std::mt19937 rng(99);
    const auto checks = parse_check_list("T10,T11,T11',T12,T13,T14,T15,T16,R1,R2,E1,E2");
    std::vector<OrderedSemigroup> corpus;
    for (int i = 0; i < 40; ++i) corpus.push_back(random_structure(std::uniform_int_distribution<unsigned>(2, 5)(rng), rng));
    const auto rep = run_suite(corpus, {1, 2}, checks);
    for (std::size_t i = 0; i < rep.results.size(); ++i) {
      const auto& r = rep.results[i];
      CHECK(r.status != Status::Error);
      if (r.status == Status::Fails) CHECK(validate_witness(corpus[i / (2 * checks.size())], r));
    }
  }

  TEST_CASE("biconditional directions agree with running each direction as its own conjecture") {
    struct Iff {
      const char* id;
      const char* body;
      Guard property;
    };
    const Iff iffs[] = {
        {"T12", "forall a in elements: cl(S^M * {a} * S^M) & cl({a} * S^M * {a}) = S", Guard::BiIntSimple},
        {"T13", "forall B in kind(m_bi_interior) forall I in kind(m_two_sided) forall L in kind(m_left): "
                "B & I & L <= cl(B * I * L)",
         Guard::Regular},
        {"T15", "forall B in kind(m_bi_interior): cl(B * S^M * B) & cl(S^M * B * S^M) = B", Guard::Regular},
        {"R1", "forall R in kind(m_right) forall L in kind(m_left): cl(R * L) = R & L", Guard::Regular},
    };
    std::mt19937 rng(5);
    auto corpus = corpus_upto(3);
    for (int i = 0; i < 30; ++i) corpus.push_back(random_structure(std::uniform_int_distribution<unsigned>(3, 5)(rng), rng));
    for (const auto& iff : iffs) {
      const auto plain = parse_conjecture(iff.body);
      for (const auto& s : corpus)
        for (unsigned mv = 1; mv <= 2; ++mv) {
          const Potency m(mv);
          const bool prop = eval_guard(s, iff.property, m);
          const bool body = check_conjecture(s, plain, m).status == Status::Holds;
          const auto r = run_check(s, iff.id, m);
          const std::string want = prop && !body ? "forward" : (!prop && body ? "converse" : "");
          REQUIRE_MESSAGE(r.direction == want, iff.id, " on ", s.name());
          CHECK((r.status == Status::Fails) == !want.empty());
        }
    }
  }

  TEST_CASE("validate_witness rejects malformed witnesses") {
    auto expect_malformed = [](const OrderedSemigroup& s, const CheckResult& r) {
      try {
        validate_witness(s, r);
        FAIL("expected MalformedWitness");
      } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::MalformedWitness);
      }
    };
    const auto c = ch2();
    expect_malformed(c, fake_fail(c, "L1", 1, {{"A", Sort::Subset, 0b100}}));  // beyond width
    expect_malformed(c, fake_fail(c, "L1", 1, {}));
    expect_malformed(c, fake_fail(c, "L1", 1, {{"Z", Sort::Subset, 0b01}}));
    expect_malformed(c, fake_fail(c, "L1", 1, {{"A", Sort::Element, 0}}));
    expect_malformed(c, fake_fail(c, "T12", 1, {{"a", Sort::Element, 5}}, "forward"));
    expect_malformed(c, fake_fail(c, "T12", 1, {{"a", Sort::Element, 0}}, "sideways"));
    expect_malformed(c, fake_fail(c, "T13", 1, {{"a", Sort::Element, 9}}, "converse"));
    expect_malformed(c, fake_fail(c, "E2", 1, {{"A", Sort::Subset, 1}, {"B", Sort::Subset, 1}}, "m2=1"));
    CHECK_THROWS_AS(validate_witness(c, CheckResult{"CH2", "L1", 1, Status::Holds, {}, {}, {}}), Error);
  }

  TEST_CASE("tampered witnesses on theorem-status checks do not validate") {
    // Every assignment satisfies a theorem, so a fabricated failure built by
    // flipping bits of a genuine in-range value must be rejected.
    for (const auto& s : corpus_upto(2))
      for (unsigned mv = 1; mv <= 2; ++mv) {
        const Potency m(mv);
        for (const auto& l : enumerate_ideals(s, IdealKind::MLeft, m).subsets)
          for (unsigned bit = 0; bit < s.size(); ++bit) {
            const unsigned flipped = l.bits() ^ (1u << bit);
            CHECK_FALSE(validate_witness(s, fake_fail(s, "T1", mv, {{"L", Sort::Subset, l.bits()}})));
            if (flipped != 0) CHECK_FALSE(validate_witness(s, fake_fail(s, "T1", mv, {{"L", Sort::Subset, flipped}})));
          }
        for (Mask a = 0; a <= Subset::full_mask(s.size()); ++a)
          CHECK_FALSE(validate_witness(s, fake_fail(s, "L1", mv, {{"A", Sort::Subset, a}})));
      }
  }

  TEST_CASE("converse witnesses name a refuting element or ideal") {
    // N2 is not 1-regular (element 1) and not bi-interior simple ({0}); a
    // converse witness must refute the property and the body must hold.
    const auto n = n2();
    const auto t15 = run_check(n, "T15", m1);
    if (t15.status == Status::Fails) {
      CHECK(t15.direction == "converse");
      CHECK(validate_witness(n, t15));
    }
    CHECK_FALSE(validate_witness(n, fake_fail(n, "T15", 1, {{"a", Sort::Element, 0}}, "converse")));
  }

  TEST_CASE("error rows do not abort the suite") {
    const auto rep = run_suite({ch2()}, {1, kMaxPotency + 1}, {"L1"});
    REQUIRE(rep.results.size() == 2);
    CHECK(rep.results[0].status == Status::Holds);
    CHECK(rep.results[1].status == Status::Error);
    CHECK_FALSE(rep.results[1].error.empty());
    CHECK(rep.summary[0].errors == 1);
    CHECK(has_blocking_failures(rep));
    CHECK_THROWS_AS(run_suite({ch2()}, {1}, {"L1", "T99"}), Error);
  }
}
