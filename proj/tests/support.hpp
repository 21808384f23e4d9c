// monvar - equational reasoning for monoid varieties
//
// Helpers shared by the unit tests: plain-string views of words and fixed
// seed generators.

#ifndef MONVAR_TESTS_SUPPORT_HPP_
#define MONVAR_TESTS_SUPPORT_HPP_

#include <map>     // for map
#include <random>  // for mt19937_64, uniform_int_distribution
#include <string>  // for string

#include "monvar/word.hpp"

namespace testing {

  inline std::string str(monvar::Word const& w) {
    std::string out;
    for (monvar::Letter a : w) {
      out += a.name();
    }
    return out;
  }

  inline monvar::Word word_of(std::string const& s) {
    monvar::Word w;
    for (char c : s) {
      w.push_back(monvar::Letter(c));
    }
    return w;
  }

  inline std::string random_string(std::mt19937_64&   rng,
                                   std::string const& abc,
                                   std::size_t        max_len,
                                   std::size_t        min_len = 0) {
    std::uniform_int_distribution<std::size_t> len(min_len, max_len);
    std::uniform_int_distribution<std::size_t> pick(0, abc.size() - 1);
    std::string                                s;
    for (std::size_t n = len(rng); n > 0; --n) {
      s += abc[pick(rng)];
    }
    return s;
  }

  inline monvar::Word random_word(std::mt19937_64&   rng,
                                  std::string const& abc,
                                  std::size_t        max_len,
                                  std::size_t        min_len = 0) {
    return word_of(random_string(rng, abc, max_len, min_len));
  }

  // Each letter of `letters` goes to a random word over `abc` of length at
  // most `max_len`, possibly empty.
  inline std::map<monvar::Letter, monvar::Word>
  random_substitution(std::mt19937_64&   rng,
                      std::string const& letters,
                      std::string const& abc,
                      std::size_t        max_len) {
    std::map<monvar::Letter, monvar::Word> s;
    for (char c : letters) {
      s[monvar::Letter(c)] = random_word(rng, abc, max_len);
    }
    return s;
  }

  inline monvar::Word apply(std::map<monvar::Letter, monvar::Word> const& s,
                            monvar::Word const&                           w) {
    monvar::Word out;
    for (monvar::Letter a : w) {
      auto it = s.find(a);
      if (it == s.end()) {
        out.push_back(a);
      } else {
        out *= it->second;
      }
    }
    return out;
  }

}  // namespace testing

#endif  // MONVAR_TESTS_SUPPORT_HPP_
