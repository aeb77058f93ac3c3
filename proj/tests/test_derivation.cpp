#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "bilat/basicsys.hpp"
#include "bilat/check.hpp"
#include "bilat/deriv_format.hpp"
#include "bilat/enumerate.hpp"
#include "support/reference.hpp"

using namespace bilat;
using R = RuleKind;

namespace {

Statement st(const char* text) { return parse_statement(text); }
Derivation leaf(const char* label, const char* text) { return Derivation::assume(label, st(text)); }

Derivation excluded_middle() {
  Derivation hyp = leaf("u", "-p | ~p");
  Derivation left = Derivation::make(
      R::PlusOrI2, st("+p | ~p"),
      {Derivation::make(R::PlusNegI, st("+~p"), {Derivation::make(R::MinusOrE1, st("-p"), {hyp})})});
  Derivation bot = Derivation::make(R::Falsum, Judgement::falsum(), {left, hyp});
  return Derivation::make(R::Raa, st("+p | ~p"), {bot}, {"u"});
}

std::vector<Statement> statements(const std::vector<OpenAssumption>& open) {
  std::vector<Statement> out;
  for (const auto& a : open) out.push_back(a.statement);
  return out;
}

std::string check_error(const Derivation& d, const BasicSystem& b = {}) {
  try {
    check_derivation(d, b);
  } catch (const CheckError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("check: direct schema instances") {
  Derivation d = Derivation::make(R::PlusAndI, st("+p & q"), {leaf("x", "+p"), leaf("y", "+q")});
  Sequent s = check_derivation(d, {});
  CHECK(s.assumptions == std::vector<Statement>{st("+p"), st("+q")});
  CHECK(s.conclusion == Judgement(st("+p & q")));
  CHECK(format_sequent(s) == "+p, +q |- +(p & q)");

  Derivation raa = Derivation::make(
      R::Raa, st("+p"), {Derivation::make(R::Falsum, Judgement::falsum(), {leaf("x", "+p"), leaf("y", "-p")})},
      {"y"});
  CHECK(format_sequent(check_derivation(raa, {})) == "+p |- +p");
}

TEST_CASE("check: excluded middle is closed and has seven nodes") {
  Derivation em = excluded_middle();
  Sequent s = check_derivation(em, {});
  CHECK(s.assumptions.empty());
  CHECK(format_sequent(s) == "|- +(p | ~p)");
  CHECK(size(em) == 7);
  CHECK(open_assumptions(em).empty());
  CHECK(is_closed(em));
}

TEST_CASE("open assumptions") {
  CHECK(statements(open_assumptions(leaf("x", "+p"))) == std::vector<Statement>{st("+p")});
  Derivation imp = Derivation::make(R::PlusImpI, st("+p -> p"), {leaf("x", "+p")}, {"x"});
  CHECK(open_assumptions(imp).empty());
  // Multiset: the same label twice is reported twice.
  Derivation twice = Derivation::make(R::PlusAndI, st("+p & p"), {leaf("x", "+p"), leaf("x", "+p")});
  CHECK(open_assumptions(twice).size() == 2);
  // Vacuous discharge is allowed.
  Derivation vac = Derivation::make(R::PlusImpI, st("+q -> p"), {leaf("x", "+p")}, {"z"});
  CHECK(format_sequent(check_derivation(vac, {})) == "+p |- +(q -> p)");
}

TEST_CASE("size") {
  CHECK(size(leaf("x", "+p")) == 1);
  CHECK(size(Derivation::make(R::PlusAndI, st("+p & q"), {leaf("x", "+p"), leaf("y", "+q")})) == 3);
}

TEST_CASE("check: diagnostics") {
  Derivation dangling =
      Derivation::make(R::PlusAndI, st("+p & q"), {leaf("x", "+p"), leaf("y", "+q")}, {"zed"});
  std::string msg = check_error(dangling);
  CHECK(msg.find("dangling discharge label 'zed'") != std::string::npos);
  CHECK(msg.find("at root (+&I)") == 0);

  Derivation wrong = Derivation::make(
      R::PlusAndI, st("+q & p"), {Derivation::make(R::PlusAndE1, st("+p"), {leaf("x", "+p & q")}), leaf("y", "+q")});
  msg = check_error(wrong);
  CHECK(msg.find("at root (+&I)") == 0);

  Derivation deep = Derivation::make(R::PlusOrI1, st("+q | p"),
                                     {Derivation::make(R::PlusAndE1, st("+q"), {leaf("x", "+p & q")})});
  try {
    check_derivation(deep, {});
    FAIL("accepted");
  } catch (const CheckError& e) {
    CHECK(e.path() == Path{0});
    CHECK(e.rule() == "+&E1");
  }

  BasicSystem b = load_basic_system("+a.");
  CHECK(check_error(Derivation::basic(3, st("+a"), {}), b).find("out of range") != std::string::npos);
  CHECK(check_error(Derivation::basic(0, st("+b"), {}), b).find("does not match") != std::string::npos);
  CHECK(check_error(Derivation::axiom(st("-a")), b).find("not a negative axiom") != std::string::npos);

  Derivation missing = Derivation::make(R::PlusImpI, st("+p -> p"), {leaf("x", "+p")});
  CHECK_FALSE(check_error(missing).empty());

  Derivation shadow = Derivation::make(
      R::PlusImpI, st("+p -> p -> p"), {Derivation::make(R::PlusImpI, st("+p -> p"), {leaf("x", "+p")}, {"x"})},
      {"x"});
  CHECK(check_error(shadow).find("shadows") != std::string::npos);

  Derivation mismatch = Derivation::make(R::PlusImpI, st("+q -> p"), {leaf("x", "+p")}, {"x"});
  CHECK(check_error(mismatch).find("binder discharges") != std::string::npos);

  Derivation conflict = Derivation::make(R::PlusAndI, st("+p & q"), {leaf("x", "+p"), leaf("x", "+q")});
  CHECK(check_error(conflict).find("open label 'x'") != std::string::npos);
}

TEST_CASE("check: falsum premises in either order") {
  Derivation a = Derivation::make(R::Falsum, Judgement::falsum(), {leaf("x", "+p"), leaf("y", "-p")});
  Derivation b = Derivation::make(R::Falsum, Judgement::falsum(), {leaf("y", "-p"), leaf("x", "+p")});
  CHECK(is_well_formed(a, {}));
  CHECK(is_well_formed(b, {}));
  CHECK_FALSE(is_well_formed(
      Derivation::make(R::Falsum, Judgement::falsum(), {leaf("y", "+p"), leaf("x", "+p")}), {}));
}

TEST_CASE("check: basic rules and axioms") {
  BasicSystem b = load_basic_system("-c. +a <- b, c. +b.");
  Derivation d = Derivation::basic(0, st("+a"), {Derivation::basic(1, st("+b"), {}), leaf("x", "+c")});
  CHECK(format_sequent(check_derivation(d, b)) == "+c |- +a");
  CHECK(is_well_formed(Derivation::axiom(st("-c")), b));
}

TEST_CASE("substitute") {
  Derivation x = leaf("x", "+p");
  BasicSystem b = load_basic_system("+p. +q.");
  Derivation dp = Derivation::basic(0, st("+p"), {});
  Derivation dq = Derivation::basic(1, st("+q"), {});
  CHECK(substitute(x, {{"x", dp}}) == dp);
  Derivation conj = Derivation::make(R::PlusAndI, st("+p & q"), {leaf("x", "+p"), leaf("y", "+q")});
  CHECK(substitute(conj, {}) == conj);
  Derivation closed = substitute(conj, {{"x", dp}, {"y", dq}});
  CHECK(check_derivation(closed, b).assumptions.empty());

  CHECK_THROWS_AS(substitute(x, {{"x", dq}}), SubstitutionError);
  Derivation imp = Derivation::make(R::PlusImpI, st("+p -> p"), {leaf("x", "+p")}, {"x"});
  CHECK_THROWS_AS(substitute(imp, {{"x", dp}}), SubstitutionError);
  CHECK_THROWS_AS(substitute(x, {{"x", leaf("y", "+p")}}), SubstitutionError);

  // An image with its own binder, inserted twice.
  Derivation image = Derivation::make(R::PlusImpI, st("+q -> q"), {leaf("x", "+q")}, {"x"});
  Derivation open_pair =
      Derivation::make(R::PlusAndI, st("+(q -> q) & (q -> q)"), {leaf("h", "+q -> q"), leaf("h", "+q -> q")});
  Derivation filled = substitute(open_pair, {{"h", image}});
  CHECK(is_well_formed(filled, {}));
  CHECK(is_closed(filled));
}

TEST_CASE("substitution properties") {
  BasicSystem b = load_basic_system("+p. +q.");
  Derivation dp = Derivation::basic(0, st("+p"), {});
  Derivation dq = Derivation::basic(1, st("+q"), {});
  Derivation d = Derivation::make(
      R::PlusAndI, st("+(p & q) & p"),
      {Derivation::make(R::PlusAndI, st("+p & q"), {leaf("x", "+p"), leaf("y", "+q")}), leaf("z", "+p")});
  Bindings m1{{"x", dp}}, m2{{"y", dq}};
  Bindings both{{"x", dp}, {"y", dq}};
  CHECK(substitute(substitute(d, m1), m2) == substitute(d, both));
  auto open = open_assumptions(substitute(d, m1));
  CHECK(open == std::vector<OpenAssumption>{{"y", st("+q")}, {"z", st("+p")}});
}

TEST_CASE("canonical labelling") {
  Derivation a = Derivation::make(R::PlusImpI, st("+p -> p & q"),
                                  {Derivation::make(R::PlusAndI, st("+p & q"), {leaf("h", "+p"), leaf("k", "+q")})},
                                  {"h"});
  Derivation b = Derivation::make(R::PlusImpI, st("+p -> p & q"),
                                  {Derivation::make(R::PlusAndI, st("+p & q"), {leaf("w", "+p"), leaf("k", "+q")})},
                                  {"w"});
  CHECK(alpha_equivalent(a, b));
  CHECK(canonicalize(a) == canonicalize(b));
  CHECK(canonicalize(canonicalize(a)) == canonicalize(a));
  CHECK(open_assumptions(canonicalize(a)) == std::vector<OpenAssumption>{{"x0", st("+q")}});
  CHECK(canonicalize(a).discharges() == std::vector<std::string>{"u0"});
}

TEST_CASE("schema soundness: every enumerated node re-checks locally") {
  BasicSystem b = load_basic_system("+a.");
  std::size_t nodes = 0;
  enumerate_derivations(b, {"a", "p"}, {4, 2}, [&](const Derivation& d) {
    std::vector<const Derivation*> stack{&d};
    while (!stack.empty()) {
      const Derivation& n = *stack.back();
      stack.pop_back();
      for (const auto& c : n.premises()) stack.push_back(&c);
      if (n.kind() == R::Assume || n.kind() == R::Basic || n.kind() == R::Axiom) continue;
      std::vector<Judgement> premises;
      for (const auto& c : n.premises()) premises.push_back(c.conclusion());
      auto slots = ref::local_rule(n.kind(), premises, n.conclusion());
      REQUIRE_MESSAGE(slots.has_value(), print_derivation_inline(n));
      CHECK(slots->size() == n.discharges().size());
      ++nodes;
    }
  });
  CHECK(nodes > 100);
}
