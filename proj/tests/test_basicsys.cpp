#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bilat/basicsys.hpp"
#include "support/reference.hpp"

using namespace bilat;

TEST_CASE("load examples") {
  BasicSystem s = load_basic_system("+b. +a <- b.");
  CHECK(s.rules() == std::vector<BasicRule>{{{}, "b"}, {{"b"}, "a"}});
  CHECK(s.negative_axioms().empty());

  BasicSystem t = load_basic_system("-c. +a <- b, c.");
  CHECK(t.negative_axioms() == std::set<std::string>{"c"});
  CHECK(t.rules() == std::vector<BasicRule>{{{"b", "c"}, "a"}});

  BasicSystem u = load_basic_system("# comment\n+a.   # trailing\n\n-b.\n");
  CHECK(u.rules().size() == 1);
  CHECK(u.negative_axioms() == std::set<std::string>{"b"});
}

TEST_CASE("cycles are rejected with the atom cycle") {
  try {
    load_basic_system("+a <- b. +b <- a.");
    FAIL("accepted");
  } catch (const CycleError& e) {
    auto c = e.cycle();
    REQUIRE(c.size() == 3);
    CHECK(c.front() == c.back());
    CHECK(std::set<std::string>(c.begin(), c.end()) == std::set<std::string>{"a", "b"});
    CHECK(std::string(e.what()).find("a <~ b <~ a") != std::string::npos);
  }
  CHECK_THROWS_AS(load_basic_system("+a <- a."), CycleError);
  CHECK_THROWS_AS(load_basic_system("+a <- b. +b <- c. +c <- a. +d."), CycleError);
  CHECK_THROWS_AS(load_basic_system(ref::read_text(ref::data_file("cyclic.basic"))), CycleError);
  CHECK_NOTHROW(load_basic_system("+a <- b, c. +b <- c. +c."));
}

TEST_CASE("parse errors") {
  for (const char* bad : {"+a", "a.", "+A.", "+a <- .", "+a <- b,.", "-a <- b.", "+a <- b c.", "+."})
    CHECK_THROWS_AS_MESSAGE(load_basic_system(bad), ParseError, bad);
}

TEST_CASE("derivable_plus") {
  BasicSystem s = load_basic_system("+b. +a <- b.");
  CHECK(derivable_plus(s, "a"));
  CHECK_FALSE(derivable_plus(BasicSystem{}, "p"));
  CHECK_FALSE(derivable_plus(load_basic_system("+a <- c."), "a"));
}

TEST_CASE("is_consistent") {
  CHECK_FALSE(is_consistent(load_basic_system("+a. -a.")));
  CHECK(is_consistent(load_basic_system("+a. -b.")));
  CHECK(is_consistent(load_basic_system("+a <- b. -a.")));
  CHECK_FALSE(is_consistent(load_basic_system(ref::read_text(ref::data_file("inconsistent.basic")))));
}

TEST_CASE("height examples") {
  BasicSystem s = load_basic_system("+b. +a <- b.");
  CHECK(height(s, "b") == 0);
  CHECK(height(s, "a") == 1);
  CHECK(height(load_basic_system("-c."), "c") == 0);
  BasicSystem t = load_basic_system("+a <- b, c. +b. +c <- b.");
  CHECK(height(t, "c") == 1);
  CHECK(height(t, "a") == 2);
  CHECK(height(t, "a", HeightMode::MinPremise) == 1);
}

TEST_CASE("height errors") {
  BasicSystem s = load_basic_system("+a <- b.");
  try {
    height(s, "zzz");
    FAIL("no error");
  } catch (const HeightError& e) {
    CHECK(e.reason() == HeightError::Reason::UnknownAtom);
  }
  try {
    height(s, "a");
    FAIL("no error");
  } catch (const HeightError& e) {
    CHECK(e.reason() == HeightError::Reason::Undefined);
  }
  CHECK_FALSE(s.try_height("b").has_value());
}

TEST_CASE("save and load round-trip") {
  const char* text = "+b.\n+a <- b, c.\n-c.\n";
  BasicSystem s = load_basic_system(text);
  CHECK(save_basic_system(s) == text);
  std::mt19937 rng(0);
  for (int i = 0; i < 200; ++i) {
    auto r = ref::random_acyclic_system(rng, 6, 6, true);
    BasicSystem b(r.rules, r.axioms);
    std::string saved = save_basic_system(b);
    BasicSystem back = load_basic_system(saved);
    CHECK(back.rules() == b.rules());
    CHECK(back.negative_axioms() == b.negative_axioms());
    CHECK(save_basic_system(back) == saved);
  }
}

TEST_CASE("height matches the brute-force evaluator on random systems") {
  std::mt19937 rng(0);
  for (int i = 0; i < 300; ++i) {
    auto r = ref::random_acyclic_system(rng, 6, 8, true);
    BasicSystem b(r.rules, r.axioms);
    for (const auto& a : b.atoms()) {
      CHECK(b.try_height(a) == ref::brute_height(r.rules, r.axioms, a, true));
      CHECK(b.try_height(a, HeightMode::MinPremise) == ref::brute_height(r.rules, r.axioms, a, false));
    }
  }
}

TEST_CASE("height is strictly above some minimising rule's premises") {
  std::mt19937 rng(1);
  for (int i = 0; i < 300; ++i) {
    auto r = ref::random_acyclic_system(rng, 6, 8, false);
    BasicSystem b(r.rules, r.axioms);
    for (const auto& a : b.atoms()) {
      auto h = b.try_height(a);
      CHECK(h.has_value() == b.derivable_plus(a));
      if (!h || *h == 0) continue;
      bool witnessed = false;
      for (const auto& rule : b.rules()) {
        if (rule.conclusion != a || rule.premises.empty()) continue;
        std::size_t top = 0;
        bool ok = true;
        for (const auto& p : rule.premises) {
          auto hp = b.try_height(p);
          if (!hp) ok = false;
          else top = std::max(top, *hp);
        }
        if (ok && top + 1 == *h) {
          witnessed = true;
          for (const auto& p : rule.premises) CHECK(*b.try_height(p) < *h);
        }
      }
      CHECK(witnessed);
    }
  }
}

TEST_CASE("derivable_plus is monotone in the rule set") {
  std::mt19937 rng(2);
  for (int i = 0; i < 200; ++i) {
    auto r = ref::random_acyclic_system(rng, 6, 6, false);
    BasicSystem small(std::vector<BasicRule>(r.rules.begin(), r.rules.begin() + r.rules.size() / 2), {});
    BasicSystem full(r.rules, {});
    for (const auto& a : small.derivable_atoms()) CHECK(full.derivable_plus(a));
  }
}
