// monvar - equational reasoning for monoid varieties
//
// The acceptance suite: ten end-to-end checks with pinned expectations and
// time limits, shared by the acceptance test and `monvar accept`.

#ifndef MONVAR_ACCEPTANCE_HPP_
#define MONVAR_ACCEPTANCE_HPP_

#include <algorithm>   // for find
#include <chrono>      // for steady_clock
#include <cstddef>     // for size_t
#include <cstdint>     // for uint64_t
#include <filesystem>  // for directory_iterator
#include <functional>  // for function
#include <random>      // for mt19937_64
#include <sstream>     // for ostringstream
#include <string>      // for string
#include <vector>      // for vector

#include "identities.hpp"
#include "monoids.hpp"
#include "reductions.hpp"
#include "rewrite.hpp"
#include "word.hpp"
#include "words.hpp"

namespace monvar {

  struct CriterionResult {
    int         number = 0;
    std::string title;
    bool        passed = false;
    std::string detail;
    double      seconds       = 0;
    double      limit_seconds = 0;
  };

  struct AcceptanceOptions {
    std::string   traces_dir;
    std::uint64_t seed          = 20240607;
    std::size_t   random_words  = 10'000;
    std::size_t   random_sample = 1'000;
  };

  namespace acceptance {

    //! Collects failed expectations for one criterion.
    class Checker {
     public:
      void expect(bool ok, std::string const& what) {
        ++_checks;
        if (!ok && _failures.size() < 5) {
          _failures.push_back(what);
        }
        _failed += ok ? 0 : 1;
      }

      void note(std::string const& s) {
        _notes.push_back(s);
      }

      [[nodiscard]] bool ok() const {
        return _failed == 0;
      }

      [[nodiscard]] std::string summary() const {
        std::ostringstream os;
        os << _checks - _failed << "/" << _checks << " checks";
        for (auto const& n : _notes) {
          os << "; " << n;
        }
        for (auto const& f : _failures) {
          os << "; FAILED: " << f;
        }
        if (_failed > _failures.size()) {
          os << "; ... " << _failed - _failures.size() << " more";
        }
        return os.str();
      }

     private:
      std::size_t              _checks = 0;
      std::size_t              _failed = 0;
      std::vector<std::string> _failures;
      std::vector<std::string> _notes;
    };

    inline Word random_word(std::mt19937_64&           rng,
                            std::vector<Letter> const& alphabet,
                            std::size_t                min_len,
                            std::size_t                max_len) {
      std::uniform_int_distribution<std::size_t> len(min_len, max_len);
      std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
      Word                                       w;
      for (std::size_t n = len(rng); n > 0; --n) {
        w.push_back(alphabet[pick(rng)]);
      }
      return w;
    }

    //! All words over `alphabet` of length at most `max_len`.
    inline std::vector<Word> all_words(std::vector<Letter> const& alphabet,
                                       std::size_t                max_len) {
      std::vector<Word> out{Word()};
      std::size_t       begin = 0;
      for (std::size_t len = 1; len <= max_len; ++len) {
        std::size_t const end = out.size();
        for (std::size_t i = begin; i < end; ++i) {
          for (Letter a : alphabet) {
            out.push_back(out[i] * a);
          }
        }
        begin = end;
      }
      return out;
    }

    inline bool interderivable(Identity const&              a,
                               std::vector<Identity> const& from_a_extra,
                               Identity const&              b,
                               std::vector<Identity> const& from_b_extra,
                               SearchBudget                 budget) {
      auto basis_a = presets::O();
      basis_a.push_back(a);
      basis_a.insert(basis_a.end(), from_a_extra.begin(), from_a_extra.end());
      auto basis_b = presets::O();
      basis_b.push_back(b);
      basis_b.insert(basis_b.end(), from_b_extra.begin(), from_b_extra.end());
      return derivable(b, basis_a, budget).found()
             && derivable(a, basis_b, budget).found();
    }

    inline void construction(Checker& c, AcceptanceOptions const&) {
      auto const s1 = rees_quotient({parse_word("xyx")});
      auto const s2 = rees_quotient({parse_word("xzxyty")});
      c.expect(s1.size() == 7, "|S(xyx)| = 7, got " + std::to_string(s1.size()));
      c.expect(s2.size() == 21,
               "|S(xzxyty)| = 21, got " + std::to_string(s2.size()));
      c.expect(validate(s1).ok(), "S(xyx) validates");
      c.expect(validate(s2).ok(), "S(xzxyty) validates");
    }

    inline void commuting_idempotents(Checker& c, AcceptanceOptions const& o) {
      auto structural = [&](FiniteMonoid const& m, std::string const& name) {
        c.expect(is_aperiodic(m), name + " is aperiodic");
        c.expect(idempotents_commute(m), name + " has commuting idempotents");
        auto const e = idempotents(m);
        auto has = [&e](std::size_t a) {
          return std::find(e.begin(), e.end(), a) != e.end();
        };
        c.expect(e.size() == 2 && m.zero() && has(m.identity())
                     && has(*m.zero()),
                 name + " has idempotents {1, 0}");
      };
      structural(rees_quotient({parse_word("xzxyty")}), "S(xzxyty)");
      structural(rees_quotient({parse_word("xyzxty"), parse_word("xtyzxy")}),
                 "S(xyzxty, xtyzxy)");
      std::mt19937_64           rng(o.seed);
      std::vector<Letter> const alphabet{
          Letter('x'), Letter('y'), Letter('z'), Letter('t')};
      std::uniform_int_distribution<int> count(1, 3);
      for (int i = 0; i < 50; ++i) {
        std::vector<Word> ws;
        for (int k = count(rng); k > 0; --k) {
          ws.push_back(random_word(rng, alphabet, 1, 7));
        }
        std::string name = "S(";
        for (auto const& w : ws) {
          name += render(w) + (&w == &ws.back() ? ")" : ",");
        }
        auto const m = rees_quotient(ws);
        c.expect(validate(m).ok(), name + " validates");
        structural(m, name);
      }
    }

    inline void model_spot_checks(Checker& c, AcceptanceOptions const&) {
      auto const m = rees_quotient({parse_word("xyx")});
      auto const a = satisfies(m, ids::A());
      c.expect(!a.holds, "S(xyx) violates ID-A");
      c.expect(!a.holds && describe(m, *a.counterexample) == "x->x, y->y",
               "witness x->x, y->y");
      c.expect(satisfies(m, ids::G()).holds, "S(xyx) satisfies ID-G");
    }

    inline void decision_values(Checker& c, AcceptanceOptions const&) {
      c.expect(fve_holds(ids::C()), "ID-C holds in F ∨ E");
      c.expect(fve_holds(ids::E()), "ID-E holds in F ∨ E");
      c.expect(!fve_holds(parse_identity("xy == yx")),
               "xy == yx fails in F ∨ E");
      c.expect(fve_holds(ids::A()), "ID-A holds in F ∨ E");
    }

    inline void cross_validation(Checker& c, AcceptanceOptions const& o) {
      Letter const x('x'), y('y'), z('z');
      auto const   f2 = free_object(presets::F(), {x, y});
      auto const   e2 = free_object(presets::E(), {x, y});
      c.expect(f2.stable, "free object of F on {x,y} is stable");
      c.expect(e2.stable, "free object of E on {x,y} is stable");
      auto const f3 = free_object(presets::F(), {x, y, z});
      auto const e3 = free_object(presets::E(), {x, y, z});
      c.expect(f3.stable, "free object of F on {x,y,z} is stable");
      c.expect(e3.stable, "free object of E on {x,y,z} is stable");
      if (!c.ok()) {
        return;
      }
      std::size_t agree = 0, holding = 0;
      auto        compare = [&](Identity const& id,
                         FreeObjectResult const& f,
                         FreeObjectResult const& e) {
        bool const oracle = holds_in(f, id) == Verdict::holds
                            && holds_in(e, id) == Verdict::holds;
        bool const fast = fve_holds(id);
        c.expect(oracle == fast, "agreement on " + id.text());
        agree += oracle == fast ? 1 : 0;
        holding += fast ? 1 : 0;
      };
      auto const words = all_words({x, y}, 5);
      std::size_t pairs = 0;
      for (std::size_t i = 0; i < words.size(); ++i) {
        for (std::size_t j = i; j < words.size(); ++j) {
          compare(Identity(words[i], words[j]), f2, e2);
          ++pairs;
        }
      }
      std::mt19937_64           rng(o.seed + 5);
      std::vector<Letter> const abc{x, y, z};
      std::uniform_int_distribution<int> coin(0, 3);
      for (std::size_t n = 0; n < o.random_sample; ++n) {
        Word const u = random_word(rng, abc, 0, 6);
        Word       v;
        if (coin(rng) == 0 || u.size() < 2) {
          v = random_word(rng, abc, 0, 6);
        } else {
          // small edits of u are far more likely to give identities of
          // F ∨ E than independent pairs
          std::vector<Letter> l(u.begin(), u.end());
          std::uniform_int_distribution<std::size_t> at(0, l.size() - 1);
          std::size_t const                          p = at(rng);
          switch (coin(rng)) {
            case 1:
              if (p + 1 < l.size()) {
                std::swap(l[p], l[p + 1]);
              }
              break;
            case 2:
              if (l.size() < 6) {
                l.insert(l.begin() + static_cast<long>(p), l[p]);
              }
              break;
            default:
              l.erase(l.begin() + static_cast<long>(p));
              break;
          }
          v = Word(std::move(l));
        }
        compare(Identity(u, v), f3, e3);
      }
      c.note(std::to_string(pairs) + " exhaustive + "
             + std::to_string(o.random_sample) + " sampled identities, "
             + std::to_string(holding) + " hold in F ∨ E, |F(x,y,z)| = "
             + std::to_string(f3.monoid.size()) + ", |E(x,y,z)| = "
             + std::to_string(e3.monoid.size()));
    }

    inline void golden_traces(Checker& c, AcceptanceOptions const& o) {
      std::vector<std::string> const required{
          "power_padding.json",
          "x2y_to_x2yx.json",
          "x2yx_to_xyx.json",
          "move_past_square.json",
          "insert_square.json",
          "xyxztx_to_xyxzxtx.json",
          "xyx_to_xyx2_in_O.json",
          "xtyzxy_to_xtyzyx_in_O.json"};
      namespace fs = std::filesystem;
      for (auto const& name : required) {
        c.expect(fs::exists(fs::path(o.traces_dir) / name),
                 "trace file " + name + " present");
      }
      std::size_t n = 0;
      for (auto const& entry : fs::directory_iterator(o.traces_dir)) {
        if (entry.path().extension() != ".json") {
          continue;
        }
        auto const file  = entry.path().filename().string();
        try {
          TraceFile const f     = load_trace(entry.path().string());
          TraceCheck const chk  = verify_trace(f.trace, f.allowed_identities());
          c.expect(chk.ok, file + ": " + chk.reason);
        } catch (Error const& e) {
          c.expect(false, file + ": " + e.what());
        }
        ++n;
      }
      c.note(std::to_string(n) + " traces verified");
    }

    inline void j_generator(Checker& c, AcceptanceOptions const&) {
      auto const s22 = saturate_j_generator(2, 2);
      auto const s33 = saturate_j_generator(3, 3);
      c.expect(s33.stabilized, "saturation at (3,3) is stabilized");
      c.expect(s22.words == s33.words,
               "reduced factors agree at (2,2) and (3,3)");
      FiniteMonoid m;
      try {
        m = tau_quotient(s33.words);
      } catch (Error const& e) {
        c.expect(false, std::string("tau quotient builds: ") + e.what());
        return;
      }
      c.expect(validate(m).ok(), "tau quotient validates");
      for (auto const& id : presets::J(2)) {
        c.expect(satisfies(m, id).holds, "generator satisfies " + id.name());
      }
      c.note("|S_tau| = " + std::to_string(m.size()));
    }

    inline void reductions(Checker& c, AcceptanceOptions const&) {
      SearchBudget budget;
      budget.max_steps = 8;
      auto const wb    = well_balance(ids::A());
      c.expect(is_well_balanced(wb.identity).balanced,
               "well_balance(ID-A) is well-balanced");
      c.expect(!wb.used_D, "well_balance(ID-A) does not need ID-D");
      c.expect(interderivable(ids::A(), {}, wb.identity, {}, budget),
               "ID-A and its balanced form are interderivable over O");
      using Kind = PhiMember::Kind;
      struct Case {
        Identity               id;
        std::vector<PhiMember> expected;
      };
      for (auto const& [id, expected] :
           {Case{ids::C(), {{Kind::C, 0}}},
            Case{family(Family::alpha, 1), {{Kind::alpha, 1}}}}) {
        auto const pb = phi_basis(id);
        c.expect(pb.complete && pb.members == expected,
                 "phi_basis(" + id.name() + ")");
        std::vector<Identity> out;
        for (auto const& m : pb.members) {
          out.push_back(m.identity());
        }
        auto basis_in = presets::O();
        basis_in.push_back(id);
        for (auto const& m : out) {
          c.expect(derivable(m, basis_in, budget).found(),
                   m.name() + " derivable from O + " + id.name());
        }
        auto basis_out = presets::O();
        basis_out.insert(basis_out.end(), out.begin(), out.end());
        c.expect(derivable(id, basis_out, budget).found(),
                 id.name() + " derivable from O + phi_basis");
      }
    }

    inline void family_monotonicity(Checker& c, AcceptanceOptions const&) {
      SearchBudget budget;
      budget.max_steps = 8;
      for (auto k : {Family::alpha, Family::beta, Family::gamma,
                     Family::gamma_prime}) {
        auto basis = presets::O();
        basis.push_back(family(k, 1));
        c.expect(derivable(family(k, 2), basis, budget).found(),
                 family_name(k) + "_2 from " + family_name(k) + "_1 and O");
      }
    }

    // A word τ-equivalent to `w`: exponents of runs change freely, except
    // that a first run of a letter stays a square or stays simple.
    inline Word tau_variant(Word const& w, std::mt19937_64& rng) {
      std::uniform_int_distribution<std::size_t> bump(0, 2);
      Word                                       out;
      LetterSet                                  seen;
      for (Run const& r : runs(w)) {
        std::size_t e = r.exponent;
        if (seen.insert(r.letter).second) {
          e = e >= 2 ? 2 + bump(rng) : 1;
        } else {
          e = 1 + bump(rng);
        }
        out *= power(r.letter, e);
      }
      return out;
    }

    inline void word_properties(Checker& c, AcceptanceOptions const& o) {
      std::mt19937_64           rng(o.seed + 10);
      std::vector<Letter> const alphabet{Letter('x'),
                                         Letter('y'),
                                         Letter('z'),
                                         Letter('t'),
                                         Letter('x', 1),
                                         Letter('t', 2)};
      std::vector<Letter> const small(alphabet.begin(), alphabet.begin() + 3);
      std::uniform_int_distribution<int> which(0, 1);
      for (std::size_t n = 0; n < o.random_words; ++n) {
        auto const& abc = which(rng) == 0 ? alphabet : small;
        Word const  w   = random_word(rng, abc, 0, 12);
        std::string const tag = " for " + render(w);
        Decomposition const d = decompose(w);
        c.expect(d.assemble() == w, "reassembly" + tag);
        LetterStats const s = letter_stats(w);
        for (auto const& blk : d.blocks) {
          for (Letter a : blk) {
            c.expect(s.multiple.count(a) != 0, "block content" + tag);
          }
        }
        for (Letter a : s.content) {
          std::size_t prev = 0;
          for (std::size_t i = 1; i <= s.occurrences(a); ++i) {
            std::size_t const idx = divider_query(w, a, i).index;
            c.expect(idx >= prev, "divider monotonicity" + tag);
            prev = idx;
          }
        }
        Word const r = reduce(w);
        c.expect(reduce(r) == r, "reduce idempotent" + tag);
        c.expect(is_reduced(r), "reduce gives a reduced word" + tag);
        c.expect(same_type(w, r), "type preserved" + tag);
        c.expect(letter_stats(r).simple == s.simple, "simple letters" + tag);
        Word const v = tau_variant(w, rng);
        c.expect(tau_equiv(w, v) && tau_equiv(v, w), "tau variant" + tag);
        Word const p = random_word(rng, small, 0, 3);
        Word const q = random_word(rng, small, 0, 3);
        c.expect(tau_equiv(p * w * q, p * v * q), "tau congruence" + tag);
        std::uniform_int_distribution<std::size_t> cut(0, w.size());
        std::size_t const                          k = cut(rng);
        LetterSet                                  keep;
        for (Letter a : abc) {
          if (which(rng) == 1) {
            keep.insert(a);
          }
        }
        Word const a = w.sub(0, k), b = w.sub(k, w.size() - k);
        c.expect(project(a * b, keep) == project(a, keep) * project(b, keep),
                 "projection homomorphism" + tag);
        c.expect(reverse(reverse(w)) == w, "reversal involution" + tag);
        Identity const id(w, v);
        c.expect(dual_identity(dual_identity(id)) == id,
                 "dual involution" + tag);
      }
    }

    struct Criterion {
      int                                                    number;
      std::string                                            title;
      double                                                 limit;
      std::function<void(Checker&, AcceptanceOptions const&)> run;
    };

    inline std::vector<Criterion> criteria() {
      return {
          {1, "construction sanity", 1, construction},
          {2, "commuting idempotents of Rees quotients", 5,
           commuting_idempotents},
          {3, "identity spot-checks on S(xyx)", 1, model_spot_checks},
          {4, "F ∨ E decision values", 1, decision_values},
          {5, "F ∨ E criterion against free objects", 600, cross_validation},
          {6, "golden proof chains", 1, golden_traces},
          {7, "J generator pipeline", 300, j_generator},
          {8, "reduction algorithms", 60, reductions},
          {9, "family monotonicity", 120, family_monotonicity},
          {10, "word machinery properties", 30, word_properties},
      };
    }
  }  // namespace acceptance

  //! Runs every criterion; `on_result` sees each result as it completes.
  inline std::vector<CriterionResult>
  run_acceptance(AcceptanceOptions const&                     o,
                 std::function<void(CriterionResult const&)> on_result = {}) {
    std::vector<CriterionResult> out;
    for (auto const& crit : acceptance::criteria()) {
      acceptance::Checker c;
      auto const          start = std::chrono::steady_clock::now();
      try {
        crit.run(c, o);
      } catch (std::exception const& e) {
        c.expect(false, std::string("exception: ") + e.what());
      }
      CriterionResult r;
      r.number        = crit.number;
      r.title         = crit.title;
      r.seconds       = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - start)
                      .count();
      r.limit_seconds = crit.limit;
      r.passed        = c.ok() && r.seconds < crit.limit;
      r.detail        = c.summary();
      if (r.seconds >= crit.limit) {
        r.detail += "; time limit exceeded";
      }
      if (on_result) {
        on_result(r);
      }
      out.push_back(std::move(r));
    }
    return out;
  }

  inline std::string format(CriterionResult const& r) {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(2);
    os << (r.passed ? "PASS" : "FAIL") << " criterion " << r.number << ": "
       << r.title << " (" << r.seconds << "s, limit " << r.limit_seconds
       << "s) - " << r.detail;
    return os.str();
  }

}  // namespace monvar

#endif  // MONVAR_ACCEPTANCE_HPP_
