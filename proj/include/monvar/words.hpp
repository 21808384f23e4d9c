// monvar - equational reasoning for monoid varieties
//
// Combinatorics on words: letter statistics, projections, factors,
// divider/block decompositions, divider queries, reversal, reduced words
// and the congruence tau.

#ifndef MONVAR_WORDS_HPP_
#define MONVAR_WORDS_HPP_

#include <algorithm>      // for reverse, find
#include <cstddef>        // for size_t
#include <map>            // for map
#include <optional>       // for optional
#include <set>            // for set
#include <string>         // for string
#include <unordered_set>  // for unordered_set
#include <vector>         // for vector

#include "word.hpp"

namespace monvar {

  using LetterSet = std::set<Letter>;

  struct LetterStats {
    LetterSet                content;
    std::map<Letter, size_t> occ;
    LetterSet                simple;
    LetterSet                multiple;

    [[nodiscard]] std::size_t occurrences(Letter a) const {
      auto it = occ.find(a);
      return it == occ.end() ? 0 : it->second;
    }
  };

  inline LetterStats letter_stats(Word const& w) {
    LetterStats s;
    for (Letter a : w) {
      ++s.occ[a];
    }
    for (auto const& [a, n] : s.occ) {
      s.content.insert(a);
      (n == 1 ? s.simple : s.multiple).insert(a);
    }
    return s;
  }

  inline LetterSet content(Word const& w) {
    return LetterSet(w.begin(), w.end());
  }

  inline std::size_t occurrences(Word const& w, Letter a) {
    return static_cast<std::size_t>(std::count(w.begin(), w.end(), a));
  }

  //! Letters of `w` in order of first occurrence.
  inline std::vector<Letter> letters_by_first_occurrence(Word const& w) {
    std::vector<Letter> out;
    LetterSet           seen;
    for (Letter a : w) {
      if (seen.insert(a).second) {
        out.push_back(a);
      }
    }
    return out;
  }

  //! Deletes every letter of `w` not in `keep`.
  inline Word project(Word const& w, LetterSet const& keep) {
    Word out;
    for (Letter a : w) {
      if (keep.count(a) != 0) {
        out.push_back(a);
      }
    }
    return out;
  }

  inline Word reverse(Word const& w) {
    std::vector<Letter> v(w.begin(), w.end());
    std::reverse(v.begin(), v.end());
    return Word(std::move(v));
  }

  //! Subwords are contiguous factors throughout.
  inline bool is_factor(Word const& u, Word const& w) {
    if (u.empty()) {
      return true;
    }
    if (u.size() > w.size()) {
      return false;
    }
    return std::search(w.begin(), w.end(), u.begin(), u.end()) != w.end();
  }

  //! All distinct factors of `w`, including the empty word.
  inline std::unordered_set<Word> factors(Word const& w) {
    std::unordered_set<Word> out;
    out.insert(Word());
    for (std::size_t i = 0; i < w.size(); ++i) {
      for (std::size_t len = 1; i + len <= w.size(); ++len) {
        out.insert(w.sub(i, len));
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Decompositions
  ////////////////////////////////////////////////////////////////////////

  //! A divider t_index of some word; index 0 is the sentinel t_0 (the
  //! empty word, written ⊥). Two references compare equal when they name
  //! the same divider letter, so references into different words can be
  //! compared directly.
  struct DividerRef {
    std::size_t           index = 0;
    std::optional<Letter> name;

    [[nodiscard]] bool is_sentinel() const noexcept {
      return !name.has_value();
    }

    friend bool operator==(DividerRef const& a, DividerRef const& b) {
      return a.name == b.name;
    }

    [[nodiscard]] std::string to_string() const {
      return name ? name->name() : std::string("⊥");
    }
  };

  //! t_0 w_0 t_1 w_1 ... t_m w_m with t_0 the sentinel.
  struct Decomposition {
    std::vector<Letter> dividers;  // t_1 .. t_m
    std::vector<Word>   blocks;    // w_0 .. w_m

    [[nodiscard]] std::size_t m() const noexcept {
      return dividers.size();
    }

    [[nodiscard]] DividerRef divider(std::size_t i) const {
      return i == 0 ? DividerRef{0, std::nullopt}
                    : DividerRef{i, dividers[i - 1]};
    }

    //! Interleaves dividers and blocks back into a word.
    [[nodiscard]] Word assemble() const {
      Word w = blocks[0];
      for (std::size_t i = 0; i < dividers.size(); ++i) {
        w *= dividers[i];
        w *= blocks[i + 1];
      }
      return w;
    }

    friend bool operator==(Decomposition const&, Decomposition const&)
        = default;
  };

  inline Decomposition decompose(Word const& w) {
    LetterStats const s = letter_stats(w);
    Decomposition     d;
    d.blocks.emplace_back();
    for (Letter a : w) {
      if (s.simple.count(a) != 0) {
        d.dividers.push_back(a);
        d.blocks.emplace_back();
      } else {
        d.blocks.back().push_back(a);
      }
    }
    return d;
  }

  //! The right-most divider of `w` strictly preceding the `i`-th (1-based)
  //! occurrence of `x`.
  inline DividerRef divider_query(Word const& w, Letter x, std::size_t i) {
    LetterStats const s = letter_stats(w);
    std::size_t const n = s.occurrences(x);
    if (n == 0) {
      throw PreconditionError("letter " + x.name() + " does not occur in "
                              + render(w));
    }
    if (i == 0 || i > n) {
      throw PreconditionError("occurrence index " + std::to_string(i)
                              + " out of range for letter " + x.name());
    }
    DividerRef  last{0, std::nullopt};
    std::size_t seen = 0;
    for (Letter a : w) {
      if (a == x && ++seen == i) {
        return last;
      }
      if (s.simple.count(a) != 0) {
        last = DividerRef{last.index + 1, a};
      }
    }
    return last;  // unreachable
  }

  inline DividerRef last_divider(Word const& w, Letter x) {
    return divider_query(w, x, occurrences(w, x));
  }

  ////////////////////////////////////////////////////////////////////////
  // Reduced words, types and tau
  ////////////////////////////////////////////////////////////////////////

  //! A maximal power a^exponent inside a word.
  struct Run {
    Letter      letter;
    std::size_t exponent;
    friend bool operator==(Run const&, Run const&) = default;
  };

  inline std::vector<Run> runs(Word const& w) {
    std::vector<Run> out;
    for (Letter a : w) {
      if (!out.empty() && out.back().letter == a) {
        ++out.back().exponent;
      } else {
        out.push_back({a, 1});
      }
    }
    return out;
  }

  //! True iff no factor a^2 of `w` has `a` occurring to its left.
  inline bool is_reduced(Word const& w) {
    LetterSet seen;
    for (Run const& r : runs(w)) {
      if (r.exponent >= 2 && seen.count(r.letter) != 0) {
        return false;
      }
      if (r.exponent >= 3) {
        return false;  // a^3 = a · a^2
      }
      seen.insert(r.letter);
    }
    return true;
  }

  //! The unique reduced word r(w) of the same type as `w`.
  //!
  //! Each maximal power a^e becomes a^2 when it is the first run of `a`
  //! and e >= 2, and a otherwise.
  inline Word reduce(Word const& w) {
    Word      out;
    LetterSet seen;
    for (Run const& r : runs(w)) {
      out.push_back(r.letter);
      if (r.exponent >= 2 && seen.count(r.letter) == 0) {
        out.push_back(r.letter);
      }
      seen.insert(r.letter);
    }
    return out;
  }

  //! Same sequence of maximal powers up to exponents, and for every letter
  //! the first two occurrences are adjacent in `u` iff they are in `v`.
  inline bool same_type(Word const& u, Word const& v) {
    auto const ru = runs(u);
    auto const rv = runs(v);
    if (ru.size() != rv.size()) {
      return false;
    }
    LetterSet seen;
    for (std::size_t i = 0; i < ru.size(); ++i) {
      if (ru[i].letter != rv[i].letter) {
        return false;
      }
      if (seen.insert(ru[i].letter).second
          && (ru[i].exponent >= 2) != (rv[i].exponent >= 2)) {
        return false;
      }
    }
    return true;
  }

  inline bool tau_equiv(Word const& u, Word const& v) {
    return reduce(u) == reduce(v);
  }

}  // namespace monvar

#endif  // MONVAR_WORDS_HPP_
