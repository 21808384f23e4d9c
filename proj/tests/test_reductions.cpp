// monvar - equational reasoning for monoid varieties

#include <algorithm>  // for shuffle, find
#include <random>     // for mt19937_64
#include <string>     // for string
#include <vector>     // for vector

#include "catch_amalgamated.hpp"

#include "monvar/monoids.hpp"
#include "monvar/reductions.hpp"
#include "monvar/rewrite.hpp"
#include "support.hpp"

using namespace monvar;
using namespace monvar::literals;
using testing::random_string;
using testing::str;
using testing::word_of;

namespace {

  using Kind = PhiMember::Kind;

  Identity id(std::string_view text) {
    return parse_identity(text);
  }

  std::vector<Identity> with(std::vector<Identity> basis,
                             std::vector<Identity> const& more) {
    basis.insert(basis.end(), more.begin(), more.end());
    return basis;
  }

  // Shuffles each block of a random word; the result is well-balanced but
  // need not hold in F ∨ E.
  Identity random_balanced(std::mt19937_64& rng, std::size_t max_len) {
    std::string const u = random_string(rng, "xyzt", max_len, 3);
    auto const        d = decompose(word_of(u));
    Word              v;
    for (std::size_t i = 0; i < d.blocks.size(); ++i) {
      std::string b = str(d.blocks[i]);
      std::shuffle(b.begin(), b.end(), rng);
      v *= word_of(b);
      if (i < d.dividers.size()) {
        v *= d.dividers[i];
      }
    }
    return Identity(word_of(u), v);
  }

  // A copy of a repeated letter inserted at a random place.
  Identity random_unbalanced(std::mt19937_64& rng) {
    std::string const u = random_string(rng, "xyzt", 7, 3);
    std::string       v = u;
    std::uniform_int_distribution<std::size_t> at(0, v.size());
    std::uniform_int_distribution<std::size_t> pick(0, v.size() - 1);
    v.insert(v.begin() + static_cast<long>(at(rng)), u[pick(rng)]);
    return Identity(word_of(u), word_of(v));
  }

  bool adjacent_difference_is_swap(Word const& a, Word const& b) {
    std::size_t k = 0;
    while (k < a.size() && k < b.size() && a[k] == b[k]) {
      ++k;
    }
    return a.size() == b.size() && k + 1 < a.size() && a[k] == b[k + 1]
           && a[k + 1] == b[k] && a.sub(k + 2, a.size() - k - 2)
           == b.sub(k + 2, b.size() - k - 2);
  }

  SearchBudget roomy(Identity const& e) {
    SearchBudget b;
    b.max_steps    = 18;
    b.max_states   = 400'000;
    b.max_word_len = std::max(e.lhs.size(), e.rhs.size()) + 5;
    return b;
  }

  std::vector<std::string> labels(PhiBasisResult const& r) {
    std::vector<std::string> out;
    for (auto const& s : r.log) {
      out.push_back(s.label + (s.mirrored ? "m" : ""));
    }
    return out;
  }

}  // namespace

TEST_CASE("well_balance", "[reductions][balance]") {
  auto const a = well_balance(id("xyx == xyx^2"));
  REQUIRE(a.identity == id("xyx^2 == xyx^2"));
  REQUIRE_FALSE(a.used_D);
  REQUIRE(a.log == std::vector<std::string>{"pad x in block 1 of the lhs by ID-A"});

  auto const same = well_balance(ids::C());
  REQUIRE(same.identity.lhs == ids::C().lhs);
  REQUIRE(same.identity.rhs == ids::C().rhs);
  REQUIRE_FALSE(same.used_D);
  REQUIRE(same.log.empty());

  auto const d = well_balance(id("x^2 t1 t2 x == x^2 t1 x t2 x"));
  REQUIRE(d.used_D);
  REQUIRE(d.identity.trivial());

  auto const dd = well_balance(ids::D());
  REQUIRE(dd.used_D);
  REQUIRE(dd.identity.trivial());

  REQUIRE_THROWS_AS(well_balance(id("xy == yx")), PreconditionError);
}

TEST_CASE("well_balance results are balanced consequences",
          "[reductions][balance][property]") {
  std::mt19937_64 rng(73);
  std::size_t     tested = 0, with_D = 0;
  for (int i = 0; tested < 200 && i < 200000; ++i) {
    Identity const e = random_unbalanced(rng);
    if (!fve_holds(e) || is_well_balanced(e).balanced) {
      continue;
    }
    ++tested;
    INFO(e.text());
    auto const r = well_balance(e);
    with_D += r.used_D;
    REQUIRE(is_well_balanced(r.identity).balanced);
    REQUIRE(fve_holds(r.identity));
    // each side only grows, by the identities the log names
    auto const tools = r.used_D ? std::vector<Identity>{ids::A(), ids::D()}
                                : std::vector<Identity>{ids::A()};
    SearchBudget b;
    b.max_steps = 6;
    REQUIRE(derivable(e.lhs, r.identity.lhs, tools, b).found());
    REQUIRE(derivable(e.rhs, r.identity.rhs, tools, b).found());
  }
  REQUIRE(tested == 200);
  REQUIRE(with_D > 0);
}

TEST_CASE("phi_basis on the members of the set", "[reductions][phi]") {
  struct Case {
    Identity                 input;
    PhiMember                member;
    std::vector<std::string> labels;
  };
  std::vector<Case> const cases{
      {ids::C(), {Kind::C, 0}, {"1.1"}},
      {ids::C().flipped(), {Kind::C, 0}, {"1.1"}},
      {ids::K(), {Kind::K, 0}, {"2.1m"}},
      {ids::K().flipped(), {Kind::K, 0}, {"2.1"}},
      {ids::L(), {Kind::L, 0}, {"3.1"}},
      {family(Family::alpha, 1), {Kind::alpha, 1}, {"1.2"}},
      {family(Family::alpha, 2), {Kind::alpha, 2}, {"1.2"}},
      {family(Family::beta, 1), {Kind::beta, 1}, {"2.2m"}},
      {family(Family::beta, 3), {Kind::beta, 3}, {"2.2m"}},
      {family(Family::gamma, 1), {Kind::gamma, 1}, {"3.2"}},
      {family(Family::gamma, 2), {Kind::gamma, 2}, {"3.2"}},
      {family(Family::gamma_prime, 1), {Kind::gamma_prime, 1}, {"3.2"}},
      {family(Family::gamma_prime, 2), {Kind::gamma_prime, 2}, {"3.2"}},
  };
  for (auto const& c : cases) {
    INFO(c.input.text());
    auto const r = phi_basis(c.input);
    REQUIRE(r.complete);
    REQUIRE(r.members == std::vector<PhiMember>{c.member});
    REQUIRE(labels(r) == c.labels);
    REQUIRE(r.log.front().v == c.input.rhs);
    REQUIRE(r.log.back().w == c.input.lhs);
  }
  REQUIRE(PhiMember{Kind::gamma_prime, 2}.name() == "gammap_2");
  REQUIRE(PhiMember{Kind::K, 0}.identity() == ids::K());
  PhiMember const c{Kind::C, 0};
  REQUIRE_THROWS_AS(c.family_kind(), PreconditionError);
}

TEST_CASE("phi_basis on identities of O", "[reductions][phi]") {
  REQUIRE(phi_basis(id("xyzxy == xyzxy")).members.empty());
  REQUIRE(phi_basis(id("xyzxy == xyzxy")).log.empty());
  auto const b = phi_basis(ids::B());
  REQUIRE(b.members.empty());
  REQUIRE(labels(b) == std::vector<std::string>{"0.2", "0.1", "0.3", "0.2"});
  REQUIRE(phi_basis(ids::H()).members.empty());
  REQUIRE_THROWS_AS(phi_basis(id("xyx == xyx^2")), PreconditionError);
}

TEST_CASE("phi_basis budget", "[reductions][phi]") {
  auto const r = phi_basis(ids::B(), 2);
  REQUIRE_FALSE(r.complete);
  REQUIRE(r.log.size() <= 2);
  REQUIRE(phi_basis(ids::B(), 4).complete);
}

TEST_CASE("phi_basis steps are sound", "[reductions][phi][property]") {
  // Each step v -> w follows from O and the emitted member, and the
  // member follows from O and the step.
  std::mt19937_64 rng(79);
  auto const      O      = presets::O();
  std::size_t     tested = 0, emitted = 0;
  for (int i = 0; tested < 40 && i < 20000; ++i) {
    Identity const e = random_balanced(rng, 9);
    if (e.trivial() || !fve_holds(e)) {
      continue;
    }
    ++tested;
    auto const r = phi_basis(e);
    REQUIRE(r.complete);
    for (auto const& st : r.log) {
      Identity const step(st.v, st.w);
      INFO(e.text() << ": case " << st.label << " on " << step.text());
      REQUIRE(adjacent_difference_is_swap(st.v, st.w));
      if (st.member) {
        ++emitted;
        REQUIRE(derivable(step, with(O, {st.member->identity()}), roomy(step))
                    .found());
        REQUIRE(derivable(st.member->identity(), with(O, {step}),
                          roomy(st.member->identity()))
                    .found());
      } else {
        REQUIRE(derivable(step, O, roomy(step)).found());
      }
    }
  }
  REQUIRE(tested == 40);
  REQUIRE(emitted > 5);
}

TEST_CASE("subvariety_basis", "[reductions][subvariety]") {
  auto const c = subvariety_basis({ids::C()});
  REQUIRE(c.complete);
  REQUIRE(c.basis == std::vector<Identity>{ids::B(), ids::E(), ids::C()});
  REQUIRE_FALSE(c.used_D);

  REQUIRE(subvariety_basis({}).basis == presets::O());

  auto const a = subvariety_basis(
      {family(Family::alpha, 1), family(Family::alpha, 2)});
  REQUIRE(a.basis
          == std::vector<Identity>{ids::B(), ids::E(), family(Family::alpha, 1)});
  // the dropped member is a consequence of the kept one
  REQUIRE(derivable(family(Family::alpha, 2), a.basis).found());

  auto const d = subvariety_basis({ids::D()});
  REQUIRE(d.used_D);
  REQUIRE(d.basis == std::vector<Identity>{ids::B(), ids::E(), ids::D()});

  auto const mixed = subvariety_basis({ids::K(), family(Family::beta, 2),
                                       family(Family::beta, 1), ids::A()});
  REQUIRE(mixed.basis
          == std::vector<Identity>{ids::B(), ids::E(), ids::K(),
                                   family(Family::beta, 1)});
  REQUIRE_FALSE(mixed.log.empty());

  REQUIRE_THROWS_AS(subvariety_basis({id("xy == yx")}), PreconditionError);
}

TEST_CASE("family members grow weaker with the index",
          "[reductions][families]") {
  for (auto k : {Family::alpha, Family::beta, Family::gamma,
                 Family::gamma_prime}) {
    for (std::size_t n = 1; n <= 3; ++n) {
      INFO(family_name(k) << " " << n);
      auto const next = family(k, n + 1);
      REQUIRE(derivable(next, with(presets::O(), {family(k, n)}), roomy(next))
                  .found());
    }
  }
}

TEST_CASE("tau_term_violation", "[reductions][tau]") {
  auto const xyx = rees_quotient({"xyx"_w});
  REQUIRE_FALSE(tau_term_violation("x"_w, xyx).has_value());

  auto const E1 = free_object(preset("E"), {Letter('x')}).monoid;
  REQUIRE(tau_equiv("x^3"_w, "x^2"_w));
  REQUIRE_FALSE(tau_term_violation("x^3"_w, E1).has_value());

  FiniteMonoid const trivial({"1"}, 0, std::nullopt, {0});
  REQUIRE(tau_term_violation("xy"_w, trivial) == "yx"_w);
  // fresh letters come first in the alphabet
  REQUIRE(tau_term_violation("x"_w, trivial) == "ax"_w);
  TauSearchBudget b;
  b.extension = 0;
  REQUIRE(tau_term_violation("x"_w, trivial, b) == "x^2"_w);
  b.max_len = 1;
  REQUIRE_FALSE(tau_term_violation("x"_w, trivial, b).has_value());
}

TEST_CASE("tau_term_violation witnesses are genuine",
          "[reductions][tau][property]") {
  std::vector<FiniteMonoid> const models{
      rees_quotient({"xyx"_w}), rees_quotient({"x^2y"_w}),
      FiniteMonoid({"e", "g"}, 0, std::nullopt, {0, 1, 1, 0}),
      free_object(preset("E"), {Letter('x'), Letter('y')}).monoid};
  std::mt19937_64 rng(83);
  std::size_t     found = 0;
  for (int i = 0; i < 60; ++i) {
    Word const w = testing::random_word(rng, "xy", 3, 1);
    auto const& M = models[static_cast<std::size_t>(i) % models.size()];
    auto const  v = tau_term_violation(w, M);
    if (!v) {
      continue;
    }
    ++found;
    LetterSet const c = content(*v);
    for (Letter a : w) {
      REQUIRE(c.count(a) == 1);
    }
    REQUIRE_FALSE(tau_equiv(w, *v));
    REQUIRE(satisfies(M, Identity(w, *v)).holds);
  }
  REQUIRE(found > 10);
}
