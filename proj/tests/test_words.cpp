// monvar - equational reasoning for monoid varieties

#include <algorithm>  // for count
#include <random>     // for mt19937_64
#include <set>        // for set
#include <string>     // for string
#include <vector>     // for vector

#include "catch_amalgamated.hpp"

#include "monvar/word.hpp"
#include "monvar/words.hpp"
#include "support.hpp"

using namespace monvar;
using namespace monvar::literals;
using testing::random_string;
using testing::str;
using testing::word_of;

namespace {

  // Test-side oracles work on plain strings of single-character letters.

  bool oracle_is_reduced(std::string const& w) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i] == w[i + 1] && w.substr(0, i).find(w[i]) != std::string::npos) {
        return false;
      }
    }
    return true;
  }

  std::string oracle_run_letters(std::string const& w) {
    std::string out;
    for (char c : w) {
      if (out.empty() || out.back() != c) {
        out += c;
      }
    }
    return out;
  }

  // first two occurrences adjacent, per letter
  std::set<char> oracle_adjacent(std::string const& w) {
    std::set<char> out;
    for (char c : w) {
      auto const a = w.find(c);
      if (a + 1 < w.size() && w[a + 1] == c) {
        out.insert(c);
      }
    }
    return out;
  }

  std::set<char> oracle_simple(std::string const& w) {
    std::set<char> out;
    for (char c : w) {
      if (std::count(w.begin(), w.end(), c) == 1) {
        out.insert(c);
      }
    }
    return out;
  }

  // r(w) by its defining properties: the reduced words obtained from w by
  // choosing each run exponent in {1, 2} that keep the type and the simple
  // letters. Exactly one is expected.
  std::vector<std::string> oracle_reduce(std::string const& w) {
    std::vector<std::pair<char, std::size_t>> runs;
    for (char c : w) {
      if (!runs.empty() && runs.back().first == c) {
        ++runs.back().second;
      } else {
        runs.emplace_back(c, 1);
      }
    }
    std::vector<std::string> out;
    for (std::size_t mask = 0; mask < (std::size_t(1) << runs.size());
         ++mask) {
      std::string cand;
      for (std::size_t i = 0; i < runs.size(); ++i) {
        cand += std::string((mask >> i) & 1 ? 2 : 1, runs[i].first);
      }
      if (oracle_is_reduced(cand)
          && oracle_run_letters(cand) == oracle_run_letters(w)
          && oracle_adjacent(cand) == oracle_adjacent(w)
          && oracle_simple(cand) == oracle_simple(w)) {
        out.push_back(cand);
      }
    }
    return out;
  }

}  // namespace

TEST_CASE("parse_word compact syntax", "[words][parse]") {
  Letter const x('x'), y('y');
  REQUIRE(parse_word("xyx^2", WordSyntax::compact) == Word{x, y, x, x});
  REQUIRE(parse_word("1", WordSyntax::compact).empty());
  REQUIRE(parse_word("  x y x ", WordSyntax::compact) == Word{x, y, x});
  REQUIRE(parse_word("x^10").size() == 10);
}

TEST_CASE("parse_word token syntax", "[words][parse]") {
  Letter const z1('z', 1), x('x');
  REQUIRE(parse_word("z1 x z1^2", WordSyntax::tokens)
          == Word{z1, x, z1, z1});
  REQUIRE(parse_word("1", WordSyntax::tokens).empty());
  // auto-detection picks tokens for indexed names
  REQUIRE(parse_word("z1 x z1^2") == Word{z1, x, z1, z1});
  REQUIRE(parse_word("t12").size() == 1);
  REQUIRE(parse_word("t12")[0] == Letter('t', 12));
}

TEST_CASE("parse_word errors carry positions", "[words][parse]") {
  auto position_of = [](std::string const& text, WordSyntax s) {
    try {
      parse_word(text, s);
    } catch (ParseError const& e) {
      return static_cast<long>(e.position());
    }
    return -1L;
  };
  REQUIRE(position_of("xY", WordSyntax::compact) == 1);
  REQUIRE(position_of("x^0", WordSyntax::compact) == 1);
  REQUIRE(position_of("x^", WordSyntax::compact) == 1);
  REQUIRE(position_of("^2", WordSyntax::compact) == 0);
  REQUIRE(position_of("x2", WordSyntax::compact) == 1);
  REQUIRE(position_of("x^2^3", WordSyntax::compact) == 3);
  REQUIRE(position_of("", WordSyntax::compact) == 0);
  REQUIRE(position_of("x Y", WordSyntax::tokens) == 2);
  REQUIRE(position_of("x1a", WordSyntax::tokens) == 2);
}

TEST_CASE("render round-trips with parse_word", "[words][parse]") {
  for (auto const* text : {"xyx^2", "1", "x^3zy^2x", "z1 x z1^2", "t1 t2^3"}) {
    REQUIRE(render(parse_word(text)) == text);
  }
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    Word const w = word_of(random_string(rng, "xyzt", 10));
    REQUIRE(parse_word(render(w)) == w);
  }
  Word const mixed{Letter('x'), Letter('t', 3), Letter('t', 3)};
  REQUIRE(render(mixed) == "x t3^2");
  REQUIRE(parse_word(render(mixed)) == mixed);
}

TEST_CASE("letters order by base character, then index", "[words]") {
  REQUIRE(Letter('x') < Letter('y'));
  REQUIRE(Letter('t') < Letter('t', 0));
  REQUIRE(Letter('t', 2) < Letter('t', 10));
  REQUIRE(Letter('t', 10) < Letter('x'));
  REQUIRE(Letter::from_name("z12") == Letter('z', 12));
  REQUIRE_THROWS_AS(Letter::from_name("Z"), ParseError);
}

TEST_CASE("words compare shortlex", "[words]") {
  REQUIRE("y"_w < "xx"_w);
  REQUIRE("xy"_w < "yx"_w);
  REQUIRE(Word() < "x"_w);
}

TEST_CASE("letter_stats", "[words]") {
  auto const s = letter_stats("xzxyty"_w);
  REQUIRE(s.content == LetterSet{Letter('x'), Letter('y'), Letter('z'),
                                 Letter('t')});
  REQUIRE(s.simple == LetterSet{Letter('z'), Letter('t')});
  REQUIRE(s.multiple == LetterSet{Letter('x'), Letter('y')});
  REQUIRE(s.occurrences(Letter('x')) == 2);
  REQUIRE(s.occurrences(Letter('q')) == 0);

  auto const e = letter_stats(Word());
  REQUIRE(e.content.empty());
  REQUIRE(e.simple.empty());
  REQUIRE(e.multiple.empty());

  auto const c = letter_stats("x^3"_w);
  REQUIRE(c.simple.empty());
  REQUIRE(c.multiple == LetterSet{Letter('x')});
  REQUIRE(c.occurrences(Letter('x')) == 3);
}

TEST_CASE("project", "[words]") {
  Letter const x('x'), y('y'), z('z');
  REQUIRE(project("xzxyty"_w, {x, y}) == "xxyy"_w);
  REQUIRE(project("xzxyty"_w, content("xzxyty"_w)) == "xzxyty"_w);
  REQUIRE(project("xyzxy"_w, {z}) == "z"_w);
  REQUIRE(project("xy"_w, {Letter('q')}).empty());
}

TEST_CASE("factors", "[words]") {
  REQUIRE(is_factor("zx"_w, "xzxyty"_w));
  REQUIRE_FALSE(is_factor("xx"_w, "xyx"_w));
  REQUIRE(is_factor(Word(), Word()));
  REQUIRE(factors("xyx"_w).size() == 6);

  // against distinct substrings of the string form
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    std::string const     s = random_string(rng, "xyz", 9);
    std::set<std::string> oracle{""};
    for (std::size_t a = 0; a < s.size(); ++a) {
      for (std::size_t n = 1; a + n <= s.size(); ++n) {
        oracle.insert(s.substr(a, n));
      }
    }
    auto const f = factors(word_of(s));
    REQUIRE(f.size() == oracle.size());
    for (auto const& u : f) {
      REQUIRE(oracle.count(str(u)) == 1);
      REQUIRE(is_factor(u, word_of(s)));
    }
  }
}

TEST_CASE("decompose", "[words][decomposition]") {
  Letter const x('x'), y('y'), z('z'), t('t');
  auto const   d = decompose("xzxyty"_w);
  REQUIRE(d.dividers == std::vector<Letter>{z, t});
  REQUIRE(d.blocks == std::vector<Word>{"x"_w, "xy"_w, "y"_w});
  REQUIRE(d.divider(0).is_sentinel());
  REQUIRE(d.divider(0).to_string() == "⊥");
  REQUIRE(d.divider(2).to_string() == "t");

  auto const e = decompose("xyzxy"_w);
  REQUIRE(e.dividers == std::vector<Letter>{z});
  REQUIRE(e.blocks == std::vector<Word>{"xy"_w, "xy"_w});

  auto const empty = decompose(Word());
  REQUIRE(empty.m() == 0);
  REQUIRE(empty.blocks == std::vector<Word>{Word()});

  auto const simple_only = decompose("xy"_w);
  REQUIRE(simple_only.dividers == std::vector<Letter>{x, y});
  REQUIRE(simple_only.blocks == std::vector<Word>(3));
  (void) t;
}

TEST_CASE("decompose agrees with a string oracle", "[words][decomposition]") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 500; ++i) {
    std::string const        s      = random_string(rng, "xyztab", 12);
    auto const               simple = oracle_simple(s);
    std::vector<std::string> blocks{""};
    std::string              dividers;
    for (char c : s) {
      if (simple.count(c) != 0) {
        dividers += c;
        blocks.emplace_back();
      } else {
        blocks.back() += c;
      }
    }
    auto const d = decompose(word_of(s));
    REQUIRE(str(Word(d.dividers)) == dividers);
    REQUIRE(d.blocks.size() == blocks.size());
    for (std::size_t k = 0; k < blocks.size(); ++k) {
      REQUIRE(str(d.blocks[k]) == blocks[k]);
    }
  }
}

TEST_CASE("divider queries", "[words][decomposition]") {
  Letter const x('x'), y('y'), z('z'), t('t');
  REQUIRE(divider_query("xzxyty"_w, x, 2).to_string() == "z");
  REQUIRE(divider_query("xzxyty"_w, x, 1).is_sentinel());
  REQUIRE(last_divider("xzxyty"_w, y).to_string() == "t");
  REQUIRE(divider_query("xzxyty"_w, x, 2).index == 1);
  // a divider is not its own predecessor
  REQUIRE(divider_query("xzxyty"_w, t, 1).to_string() == "z");
  REQUIRE(divider_query("xzxyty"_w, z, 1).is_sentinel());
  REQUIRE_THROWS_AS(divider_query("xzxyty"_w, Letter('q'), 1),
                    PreconditionError);
  REQUIRE_THROWS_AS(divider_query("xzxyty"_w, x, 3), PreconditionError);
  REQUIRE_THROWS_AS(divider_query("xzxyty"_w, x, 0), PreconditionError);
}

TEST_CASE("divider references compare by name", "[words][decomposition]") {
  auto const a = divider_query("xtx"_w, Letter('x'), 2);
  auto const b = divider_query("yytx"_w, Letter('x'), 1);
  REQUIRE(a.index == 1);
  REQUIRE(b.index == 1);
  REQUIRE(a == b);
  auto const c = divider_query("stx"_w, Letter('x'), 1);
  REQUIRE(c.index == 2);
  REQUIRE(c == a);
  REQUIRE_FALSE(divider_query("xsx"_w, Letter('x'), 2) == a);
}

TEST_CASE("reverse", "[words]") {
  REQUIRE(reverse("xzy"_w) == "yzx"_w);
  REQUIRE(reverse(Word()).empty());
  REQUIRE(reverse(reverse("xzxyty"_w)) == "xzxyty"_w);
}

TEST_CASE("reduce", "[words][tau]") {
  REQUIRE(reduce("x^3"_w) == "x^2"_w);
  REQUIRE(reduce("xzyx^3ty^2"_w) == "xzyxty"_w);
  REQUIRE(reduce("xzyxty"_w) == "xzyxty"_w);
  REQUIRE(is_reduced("xzyxty"_w));
  REQUIRE_FALSE(is_reduced("x^3"_w));
  REQUIRE_FALSE(is_reduced("xyx^2"_w));
  REQUIRE(is_reduced("x^2yx"_w));
  REQUIRE(reduce(Word()).empty());
}

TEST_CASE("reduce agrees with its defining properties",
          "[words][tau][oracle]") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 2000; ++i) {
    std::string const s     = random_string(rng, "xyz", 10);
    auto const        cands = oracle_reduce(s);
    REQUIRE(cands.size() == 1);
    REQUIRE(str(reduce(word_of(s))) == cands.front());
    REQUIRE(is_reduced(word_of(s)) == oracle_is_reduced(s));
  }
}

TEST_CASE("same_type and tau", "[words][tau]") {
  REQUIRE(same_type("xy^4xz^3x^5y"_w, "xy^3x^4z^2x^2y^2"_w));
  REQUIRE(tau_equiv("x^3"_w, "x^2"_w));
  REQUIRE_FALSE(tau_equiv("x^2"_w, "x"_w));
  REQUIRE_FALSE(same_type("xyx"_w, "xy"_w));
  REQUIRE_FALSE(same_type("x^2y"_w, "xy"_w));
  REQUIRE(same_type("xyx^2"_w, "xyx"_w));
}

TEST_CASE("same_type agrees with a string oracle", "[words][tau][oracle]") {
  std::mt19937_64 rng(19);
  for (int i = 0; i < 2000; ++i) {
    std::string const a = random_string(rng, "xy", 7);
    std::string const b = random_string(rng, "xy", 7);
    bool const oracle   = oracle_run_letters(a) == oracle_run_letters(b)
                        && oracle_adjacent(a) == oracle_adjacent(b);
    REQUIRE(same_type(word_of(a), word_of(b)) == oracle);
  }
}
