// monvar - equational reasoning for monoid varieties

#include <algorithm>  // for find, sort
#include <cstdio>     // for remove
#include <filesystem>  // for temp_directory_path
#include <random>     // for mt19937_64
#include <set>        // for set
#include <string>     // for string
#include <vector>     // for vector

#include "catch_amalgamated.hpp"

#include "monvar/monoids.hpp"
#include "support.hpp"

using namespace monvar;
using namespace monvar::literals;
using testing::random_word;
using testing::str;

namespace {

  std::size_t element(FiniteMonoid const& M, std::string const& name) {
    auto const i = M.find(name);
    REQUIRE(i.has_value());
    return *i;
  }

  std::string name_of(std::string const& w) {
    return w.empty() ? "1" : render(testing::word_of(w));
  }

  // All factors of the strings in W, as strings.
  std::set<std::string> string_factors(std::vector<std::string> const& W) {
    std::set<std::string> out{""};
    for (auto const& w : W) {
      for (std::size_t a = 0; a < w.size(); ++a) {
        for (std::size_t n = 1; a + n <= w.size(); ++n) {
          out.insert(w.substr(a, n));
        }
      }
    }
    return out;
  }

  // Rees quotient products straight from the definition.
  void check_rees_table(std::vector<std::string> const& W) {
    std::vector<Word> words;
    for (auto const& w : W) {
      words.push_back(testing::word_of(w));
    }
    FiniteMonoid const M     = rees_quotient(words);
    auto const         elems = string_factors(W);
    REQUIRE(M.size() == elems.size() + 1);
    std::size_t const zero = element(M, "0");
    REQUIRE(M.zero() == zero);
    REQUIRE(M.name(M.identity()) == "1");
    for (auto const& a : elems) {
      for (auto const& b : elems) {
        std::size_t const ab = M.product(element(M, name_of(a)),
                                         element(M, name_of(b)));
        if (elems.count(a + b) != 0) {
          REQUIRE(ab == element(M, name_of(a + b)));
        } else {
          REQUIRE(ab == zero);
        }
      }
    }
  }

  // Every substitution in order, the first letter (by first occurrence,
  // left side then right side) varying slowest.
  std::optional<ElementSubstitution> naive_counterexample(FiniteMonoid const& M,
                                                          Identity const& id) {
    std::vector<Letter> letters;
    for (Word const* w : {&id.lhs, &id.rhs}) {
      for (Letter a : *w) {
        if (std::find(letters.begin(), letters.end(), a) == letters.end()) {
          letters.push_back(a);
        }
      }
    }
    std::vector<std::size_t> digits(letters.size(), 0);
    while (true) {
      ElementSubstitution s;
      for (std::size_t k = 0; k < letters.size(); ++k) {
        s[letters[k]] = digits[k];
      }
      auto value = [&](Word const& w) {
        std::size_t v = M.identity();
        for (Letter a : w) {
          v = M.product(v, s.at(a));
        }
        return v;
      };
      if (value(id.lhs) != value(id.rhs)) {
        return s;
      }
      std::size_t k = letters.size();
      while (k > 0 && ++digits[k - 1] == M.size()) {
        digits[--k] = 0;
      }
      if (k == 0) {
        return std::nullopt;
      }
    }
  }

  FiniteMonoid two_element_group() {
    return FiniteMonoid({"e", "g"}, 0, std::nullopt, {0, 1, 1, 0});
  }

}  // namespace

TEST_CASE("Rees quotients", "[monoids][rees]") {
  auto const M = rees_quotient({"xyx"_w});
  REQUIRE(M.size() == 7);
  REQUIRE(M.names()
          == std::vector<std::string>{"1", "x", "y", "xy", "yx", "xyx", "0"});
  REQUIRE(rees_quotient({"xzxyty"_w}).size() == 21);
  REQUIRE(rees_quotient({"x"_w}).size() == 3);
  REQUIRE(rees_quotient({"xy"_w, "yx"_w}).size() == 6);
  REQUIRE(validate(M).ok());
  REQUIRE_THROWS_AS(rees_quotient({}), PreconditionError);
  REQUIRE_THROWS_AS(rees_quotient({Word()}), PreconditionError);
}

TEST_CASE("Rees quotient tables match the definition",
          "[monoids][rees][oracle]") {
  check_rees_table({"xyx"});
  check_rees_table({"xzxyty"});
  check_rees_table({"xx"});
  check_rees_table({"xyzxy", "yxx"});
  std::mt19937_64 rng(41);
  for (int i = 0; i < 30; ++i) {
    std::vector<std::string> W;
    for (int k = 0; k < 2; ++k) {
      W.push_back(testing::random_string(rng, "xyz", 6, 1));
    }
    check_rees_table(W);
    std::vector<Word> words;
    for (auto const& w : W) {
      words.push_back(testing::word_of(w));
    }
    REQUIRE(validate(rees_quotient(words)).ok());
  }
}

TEST_CASE("tau quotients", "[monoids][tau]") {
  auto const S  = saturate_j_generator(2, 2);
  auto const Q  = tau_quotient_words(S.words);
  auto const& M = Q.monoid;
  REQUIRE(validate(M).ok());
  std::size_t const x = element(M, "x"), x2 = element(M, "x^2");
  REQUIRE(M.product(x, x) == x2);
  REQUIRE(M.product(x2, x) == x2);
  REQUIRE(M.product(element(M, "zy"), x2) == element(M, "zyx^2"));
  REQUIRE(M.product(element(M, "zy"), element(M, "z")) == *M.zero());
  for (std::size_t a = 0; a < M.size(); ++a) {
    REQUIRE(M.product(M.identity(), a) == a);
  }
  // products from the definition: reduce, then look up
  for (std::size_t a = 0; a < Q.words.size(); ++a) {
    for (std::size_t b = 0; b < Q.words.size(); ++b) {
      Word const r  = reduce(Q.words[a] * Q.words[b]);
      auto const at = Q.index_of(r);
      REQUIRE(M.product(a, b) == (at ? *at : *M.zero()));
    }
  }
  REQUIRE_THROWS_AS(tau_quotient({"x^3"_w}), PreconditionError);
  // xy is present but its factor y is not
  REQUIRE_THROWS_AS(tau_quotient({"x"_w, "xy"_w}), PreconditionError);
  // factors of xzyx^2 are missing: x·x = 0 but xzyx·x = xzyx
  REQUIRE_THROWS_WITH(tau_quotient(saturate_j_generator(1, 1).words),
                      Catch::Matchers::ContainsSubstring("not associative"));
}

TEST_CASE("saturation of the J generator", "[monoids][tau]") {
  auto const one = saturate_j_generator(1, 1);
  REQUIRE(std::find(one.words.begin(), one.words.end(), "xzyxty"_w)
          != one.words.end());
  for (Word const& f : factors("xzyxty"_w)) {
    REQUIRE(std::find(one.words.begin(), one.words.end(), f)
            != one.words.end());
  }
  REQUIRE_FALSE(saturate_j_generator(2, 2).stabilized);
  auto const three = saturate_j_generator(3, 3);
  REQUIRE(three.stabilized);
  REQUIRE(three.words == saturate_j_generator(2, 2).words);
  REQUIRE(three.words.size() == 33);
  for (Word const& w : three.words) {
    REQUIRE(is_reduced(w));
  }
  REQUIRE(std::is_sorted(three.words.begin(), three.words.end()));
  REQUIRE_THROWS_AS(saturate_j_generator(0, 2), PreconditionError);
}

TEST_CASE("idempotents and aperiodicity", "[monoids]") {
  auto const M = rees_quotient({"xyx"_w});
  REQUIRE(idempotents(M)
          == std::vector<std::size_t>{M.identity(), element(M, "0")});
  REQUIRE(idempotents_commute(M));
  REQUIRE(is_aperiodic(rees_quotient({"xzxyty"_w})));
  REQUIRE_FALSE(is_aperiodic(two_element_group()));
  REQUIRE(idempotents_commute(two_element_group()));

  auto const J = tau_quotient(saturate_j_generator(2, 2).words);
  REQUIRE(idempotents_commute(J));
  REQUIRE(is_aperiodic(J));
}

TEST_CASE("evaluate", "[monoids]") {
  auto const M = rees_quotient({"xyx"_w});
  Letter const x('x'), y('y');
  std::size_t const ex = element(M, "x"), ey = element(M, "y");
  REQUIRE(M.name(evaluate(M, "xyx"_w, {{x, ex}, {y, ey}})) == "xyx");
  REQUIRE(evaluate(M, Word(), {}) == M.identity());
  REQUIRE(M.name(evaluate(M, "x^2"_w, {{x, ex}})) == "0");
  REQUIRE_THROWS_AS(evaluate(M, "xy"_w, {{x, ex}}), PreconditionError);
}

TEST_CASE("satisfies", "[monoids][satisfies]") {
  auto const M = rees_quotient({"xyx"_w});
  auto const r = satisfies(M, ids::A());
  REQUIRE_FALSE(r.holds);
  REQUIRE(describe(M, *r.counterexample) == "x->x, y->y");
  REQUIRE(M.name(r.lhs_value) == "xyx");
  REQUIRE(M.name(r.rhs_value) == "0");
  REQUIRE(satisfies(M, ids::G()).holds);
  REQUIRE(satisfies(M, parse_identity("xyzx == xyzx")).holds);
  REQUIRE(satisfies(two_element_group(), parse_identity("x^2y == y")).holds);
  REQUIRE_FALSE(satisfies(two_element_group(), ids::G()).holds);

  auto const report = satisfies_all(M, {ids::G(), ids::A(), ids::B()});
  REQUIRE_FALSE(report.all_hold());
  REQUIRE(report.results.size() == 3);
  REQUIRE(report.results[0].second.holds);
  REQUIRE_FALSE(report.results[1].second.holds);
}

TEST_CASE("the J generator satisfies its defining identities",
          "[monoids][satisfies]") {
  auto const J = tau_quotient(saturate_j_generator(2, 2).words);
  REQUIRE(J.size() == 34);
  REQUIRE(satisfies_all(J, preset("J")).all_hold());
  REQUIRE_FALSE(satisfies(J, ids::E()).holds);
}

TEST_CASE("satisfies agrees with naive enumeration",
          "[monoids][satisfies][oracle]") {
  std::vector<FiniteMonoid> const models{
      rees_quotient({"xyx"_w}), rees_quotient({"xzxyty"_w}),
      rees_quotient({"x^2y"_w, "yx"_w}), two_element_group(),
      tau_quotient(saturate_j_generator(2, 2).words)};
  std::mt19937_64 rng(43);
  std::size_t     failing = 0;
  for (int i = 0; i < 3000; ++i) {
    auto const&    M = models[static_cast<std::size_t>(i) % models.size()];
    Identity const e(random_word(rng, "xyz", 6), random_word(rng, "xyz", 6));
    auto const     expected = naive_counterexample(M, e);
    auto const     got      = satisfies(M, e);
    INFO(e.text());
    REQUIRE(got.holds == !expected.has_value());
    if (expected) {
      ++failing;
      REQUIRE(got.counterexample == expected);
      REQUIRE(got.lhs_value == evaluate(M, e.lhs, *expected));
      REQUIRE(got.rhs_value == evaluate(M, e.rhs, *expected));
    }
  }
  REQUIRE(failing > 100);
  REQUIRE(failing < 2900);
}

TEST_CASE("satisfaction is stable under substitution",
          "[monoids][satisfies][property]") {
  auto const      M = rees_quotient({"xzxyty"_w});
  std::mt19937_64 rng(47);
  std::size_t     tested = 0;
  for (int i = 0; tested < 300 && i < 100000; ++i) {
    Identity const e(random_word(rng, "xyz", 6, 1),
                     random_word(rng, "xyz", 6, 1));
    if (e.trivial() || !satisfies(M, e).holds) {
      continue;
    }
    ++tested;
    auto const s = testing::random_substitution(rng, "xyz", "abc", 3);
    Identity const image(testing::apply(s, e.lhs), testing::apply(s, e.rhs));
    INFO(e.text() << " -> " << image.text());
    REQUIRE(satisfies(M, image).holds);
  }
  REQUIRE(tested == 300);
}

TEST_CASE("validate reports problems", "[monoids][validate]") {
  REQUIRE_FALSE(validate(FiniteMonoid()).ok());
  FiniteMonoid const bad_assoc({"1", "a", "b"}, 0, std::nullopt,
                               {0, 1, 2, 1, 2, 1, 2, 2, 2});
  auto const r = validate(bad_assoc);
  REQUIRE(r.problems == std::vector<std::string>{"not associative at (a, a, a)"});
  FiniteMonoid const bad_identity({"1", "a"}, 0, std::nullopt, {0, 0, 1, 1});
  REQUIRE_FALSE(validate(bad_identity).ok());
  FiniteMonoid const bad_zero({"1", "a"}, 0, 1, {0, 1, 1, 0});
  REQUIRE_FALSE(validate(bad_zero).ok());
  FiniteMonoid const short_table({"1", "a"}, 0, std::nullopt, {0, 1, 1});
  REQUIRE_FALSE(validate(short_table).ok());
  REQUIRE(validate(two_element_group()).ok());
}

TEST_CASE("serialization round-trips", "[monoids][serialize]") {
  for (auto const& M : {rees_quotient({"xyx"_w}), two_element_group(),
                        tau_quotient(saturate_j_generator(2, 2).words)}) {
    REQUIRE(deserialize(serialize(M)) == M);
  }
  auto const path = (std::filesystem::temp_directory_path()
                     / "monvar_test_monoid.json")
                        .string();
  auto const M = rees_quotient({"xzxyty"_w});
  save_monoid(M, path);
  REQUIRE(load_monoid(path) == M);
  std::remove(path.c_str());
  REQUIRE_THROWS_AS(load_monoid(path), Error);
}

TEST_CASE("deserialize rejects malformed input", "[monoids][serialize]") {
  auto message = [](std::string const& text) {
    try {
      deserialize(text);
    } catch (Error const& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  REQUIRE_THAT(message(R"({"elements": ["1", "a", "b"], "identity": 0,
      "zero": null, "table": [[0, 1, 2], [1, 2, 1], [2, 2, 2]]})"),
               Catch::Matchers::ContainsSubstring("(a, a, a)"));
  REQUIRE_THAT(message(R"({"elements": ["1", "a"], "identity": 0,
      "zero": null, "table": [[1, 1]]})"),
               Catch::Matchers::ContainsSubstring("one row per element"));
  REQUIRE_THAT(message(R"({"elements": ["1"], "zero": null, "table": [[0]]})"),
               Catch::Matchers::ContainsSubstring("identity"));
  REQUIRE_THAT(message("{"), Catch::Matchers::ContainsSubstring("JSON"));
  REQUIRE_THAT(message(R"({"elements": ["1", "a"], "identity": 0,
      "zero": null, "table": [[0, 1], [1, 5]]})"),
               Catch::Matchers::ContainsSubstring("invalid entry"));
  REQUIRE_THAT(message(R"({"elements": ["1", "a"], "identity": 0,
      "zero": null, "table": [[0, 0], [1, 1]]})"),
               Catch::Matchers::ContainsSubstring("not neutral"));
}
