// monvar - equational reasoning for monoid varieties
//
// Reductions inside the variety O = var{x²y² ≈ y²x², xzxyxty ≈ xzyxty}:
// turning an identity of F ∨ E into a well-balanced one, extracting a
// finite basis over O from a well-balanced identity, assembling bases for
// subvarieties of O, and searching for words that are not τ-terms.

#ifndef MONVAR_REDUCTIONS_HPP_
#define MONVAR_REDUCTIONS_HPP_

#include <algorithm>  // for find, find_if
#include <cstddef>    // for size_t
#include <optional>   // for optional
#include <string>     // for string
#include <vector>     // for vector

#include "identities.hpp"
#include "monoids.hpp"
#include "word.hpp"
#include "words.hpp"

namespace monvar {

  ////////////////////////////////////////////////////////////////////////
  // Well-balancing
  ////////////////////////////////////////////////////////////////////////

  struct BalancedReduction {
    Identity                 identity;
    bool                     used_D = false;
    std::vector<std::string> log;
  };

  //! Repairs an identity of F ∨ E until it is well-balanced, one letter and
  //! one block at a time (leftmost unbalanced letter, then leftmost
  //! unbalanced block). The side with fewer occurrences of x in block k is
  //! padded: an occurrence of x in the block preceded by an earlier x is
  //! raised to the missing power, or, when x is absent from the block, the
  //! block gets x^occ appended and ID-D is needed.
  inline BalancedReduction well_balance(Identity const& id) {
    if (!fve_holds(id)) {
      throw PreconditionError("identity " + id.text()
                              + " does not hold in F ∨ E");
    }
    BalancedReduction r;
    r.identity = id;
    while (true) {
      BalanceReport const rep = is_well_balanced(r.identity);
      if (rep.balanced) {
        return r;
      }
      auto const [x, k] = *rep.offender;
      auto [du, dv]     = aligned_decompositions(r.identity);
      bool const pad_lhs
          = occurrences(du.blocks[k], x) < occurrences(dv.blocks[k], x);
      Decomposition& s = pad_lhs ? du : dv;
      Decomposition& o = pad_lhs ? dv : du;
      std::size_t const have = occurrences(s.blocks[k], x);
      std::size_t const want = occurrences(o.blocks[k], x);
      std::string const side = pad_lhs ? "lhs" : "rhs";
      if (have != 0) {
        bool seen = false;
        for (std::size_t q = 0; q < k && !seen; ++q) {
          seen = occurrences(s.blocks[q], x) != 0;
        }
        Word const& blk = s.blocks[k];
        std::size_t pos = 0;
        for (; pos < blk.size(); ++pos) {
          if (blk[pos] == x) {
            if (seen) {
              break;
            }
            seen = true;
          }
        }
        if (pos == blk.size()) {
          throw Error("no occurrence of " + x.name() + " in block "
                      + std::to_string(k)
                      + " is preceded by another occurrence");
        }
        s.blocks[k] = blk.sub(0, pos) * power(x, want - have + 1)
                      * blk.sub(pos + 1, blk.size() - pos - 1);
        r.log.push_back("pad " + x.name() + " in block " + std::to_string(k)
                        + " of the " + side + " by ID-A");
      } else {
        s.blocks[k] = s.blocks[k] * power(x, want);
        r.used_D    = true;
        r.log.push_back("append " + render(power(x, want)) + " to block "
                        + std::to_string(k) + " of the " + side
                        + " by ID-D");
      }
      r.identity = Identity(du.assemble(), dv.assemble(), id.label);
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Bases over O
  ////////////////////////////////////////////////////////////////////////

  //! An element of Φ = {ID-C, ID-K, ID-L, α_n, β_n, γ_n, γ'_n}.
  struct PhiMember {
    enum class Kind { C, K, L, alpha, beta, gamma, gamma_prime };

    Kind        kind = Kind::C;
    std::size_t n    = 0;  // family index; 0 for ID-C, ID-K, ID-L

    [[nodiscard]] bool is_family() const noexcept {
      return kind >= Kind::alpha;
    }

    [[nodiscard]] Family family_kind() const {
      switch (kind) {
        case Kind::alpha:
          return Family::alpha;
        case Kind::beta:
          return Family::beta;
        case Kind::gamma:
          return Family::gamma;
        case Kind::gamma_prime:
          return Family::gamma_prime;
        default:
          throw PreconditionError("not a family member");
      }
    }

    [[nodiscard]] Identity identity() const {
      switch (kind) {
        case Kind::C:
          return ids::C();
        case Kind::K:
          return ids::K();
        case Kind::L:
          return ids::L();
        default:
          return family(family_kind(), n);
      }
    }

    [[nodiscard]] std::string name() const {
      return identity().label;
    }

    friend bool operator==(PhiMember const&, PhiMember const&) = default;
  };

  //! One induction step: v was replaced by w, and `member` was emitted
  //! unless the step holds in O alone.
  struct PhiStep {
    std::size_t              block = 0;
    Letter                   x;
    Letter                   y;
    bool                     mirrored = false;  // roles of x and y swapped
    std::string              label;             // case label, e.g. "2.2"
    std::optional<PhiMember> member;
    Word                     v;
    Word                     w;
  };

  struct PhiBasisResult {
    bool                   complete = true;  // false: chain budget ran out
    std::vector<PhiMember> members;
    std::vector<PhiStep>   log;
  };

  namespace detail {
    // {x, y}-content of the blocks after block i, with empty entries
    // dropped and equal neighbours merged. Only meaningful when no later
    // block contains both letters.
    inline std::vector<Letter> alternation(Decomposition const& d,
                                           std::size_t          i,
                                           Letter               x,
                                           Letter               y) {
      std::vector<Letter> seg;
      for (std::size_t k = i + 1; k < d.blocks.size(); ++k) {
        LetterSet const c = content(d.blocks[k]);
        for (Letter a : {x, y}) {
          if (c.count(a) != 0 && (seg.empty() || seg.back() != a)) {
            seg.push_back(a);
          }
        }
      }
      return seg;
    }

    inline bool co_occur_later(Decomposition const& d,
                               std::size_t          i,
                               Letter               x,
                               Letter               y) {
      for (std::size_t k = i + 1; k < d.blocks.size(); ++k) {
        LetterSet const c = content(d.blocks[k]);
        if (c.count(x) != 0 && c.count(y) != 0) {
          return true;
        }
      }
      return false;
    }

    inline std::size_t checked_index(long n, std::string const& label) {
      if (n < 1) {
        throw Error("case " + label
                    + " found no admissible family index; the identity is "
                      "not of the expected shape");
      }
      return static_cast<std::size_t>(n);
    }

    // Case analysis for a single swap v -> w.
    inline PhiStep classify(SwapStep const& s, Decomposition const& dv) {
      using Kind = PhiMember::Kind;
      PhiStep step;
      step.block = s.block;
      step.x     = s.x;
      step.y     = s.y;
      step.w     = s.w;

      LetterSet const pre = content(s.v_prefix * s.a);
      LetterSet const in_b = content(s.b);
      auto in_pre = [&](Letter a) { return pre.count(a) != 0; };
      auto in_b_  = [&](Letter a) { return in_b.count(a) != 0; };
      auto in_l   = [&](Letter a) { return in_pre(a) || in_b_(a); };

      if (in_l(s.x) && in_l(s.y)) {
        if (in_b_(s.x) && in_b_(s.y)) {
          step.label = "0.1";
        } else if (in_b_(s.x) || in_b_(s.y)) {
          step.label = "0.2";
        } else {
          step.label = "0.3";
        }
        return step;
      }
      Letter x = s.x;
      Letter y = s.y;
      if (in_l(y)) {
        std::swap(x, y);
        step.mirrored = true;
      }
      bool const xa = in_pre(x);
      bool const xb = in_b_(x);
      if (xa && xb) {
        step.label = "0.4";
        return step;
      }
      bool const both = co_occur_later(dv, s.block, x, y);
      auto const seg  = alternation(dv, s.block, x, y);
      long const segs = static_cast<long>(seg.size());
      if (!xa && !xb) {
        if (both) {
          step.label  = "1.1";
          step.member = PhiMember{Kind::C, 0};
        } else {
          step.label  = "1.2";
          step.member = PhiMember{Kind::alpha, checked_index(segs - 1, "1.2")};
        }
      } else if (!xa) {
        if (both) {
          step.label  = "2.1";
          step.member = PhiMember{Kind::K, 0};
        } else {
          long lead = 0;
          while (lead < segs && seg[lead] == x) {
            ++lead;
          }
          step.label  = "2.2";
          step.member
              = PhiMember{Kind::beta, checked_index(segs - lead, "2.2")};
        }
      } else {
        if (both) {
          step.label  = "3.1";
          step.member = PhiMember{Kind::L, 0};
        } else if (!seg.empty() && seg.front() == x) {
          step.label  = "3.2";
          step.member = PhiMember{Kind::gamma, checked_index(segs - 1, "3.2")};
        } else {
          step.label  = "3.2";
          step.member
              = PhiMember{Kind::gamma_prime, checked_index(segs, "3.2")};
        }
      }
      return step;
    }
  }  // namespace detail

  //! Members of Φ which, together with the basis of O, define the same
  //! subvariety of O as the well-balanced identity `id`.
  //!
  //! Walks from v towards u by adjacent transpositions inside blocks; at
  //! each step the configuration v = v'a yx b v'' is classified and the
  //! corresponding member (if any) is emitted. Running out of `max_steps`
  //! gives an incomplete result.
  inline PhiBasisResult phi_basis(Identity const& id,
                                  std::size_t     max_steps = 10'000) {
    if (!is_well_balanced(id).balanced) {
      throw PreconditionError("identity " + id.text()
                              + " is not well-balanced");
    }
    PhiBasisResult      r;
    Decomposition const du = decompose(id.lhs);
    Word                v  = id.rhs;
    while (v != id.lhs) {
      if (r.log.size() == max_steps) {
        r.complete = false;
        break;
      }
      Decomposition const dv = decompose(v);
      SwapStep const      s  = swap_towards(du, dv);
      PhiStep             st = detail::classify(s, dv);
      st.v                   = v;
      if (st.member
          && std::find(r.members.begin(), r.members.end(), *st.member)
                 == r.members.end()) {
        r.members.push_back(*st.member);
      }
      v = s.w;
      r.log.push_back(std::move(st));
    }
    return r;
  }

  struct SubvarietyBasis {
    bool                     complete = true;
    std::vector<Identity>    basis;
    bool                     used_D = false;
    std::vector<PhiMember>   members;  // after family minimization
    std::vector<std::string> log;
  };

  //! A finite basis of O ∧ var(ids) for identities of F ∨ E: O's basis, ID-D
  //! when some well-balancing step needed it, and the Φ-members found,
  //! keeping only the least index of each family.
  inline SubvarietyBasis subvariety_basis(std::vector<Identity> const& ids,
                                          std::size_t max_steps = 10'000) {
    for (auto const& id : ids) {
      if (!fve_holds(id)) {
        throw PreconditionError(
            "identity " + id.text()
            + " fails in F ∨ E; the subvariety then excludes E or F and is "
              "based by the presets K or Q");
      }
    }
    SubvarietyBasis        out;
    std::vector<PhiMember> found;
    for (auto const& id : ids) {
      BalancedReduction const br = well_balance(id);
      out.used_D |= br.used_D;
      for (auto const& line : br.log) {
        out.log.push_back(id.name() + ": " + line);
      }
      PhiBasisResult const pb = phi_basis(br.identity, max_steps);
      out.complete &= pb.complete;
      for (auto const& st : pb.log) {
        out.log.push_back(id.name() + ": case " + st.label
                          + (st.mirrored ? " (mirrored)" : "") + " -> "
                          + (st.member ? st.member->name() : "none"));
      }
      for (auto const& m : pb.members) {
        if (std::find(found.begin(), found.end(), m) == found.end()) {
          found.push_back(m);
        }
      }
    }
    for (auto const& m : found) {
      if (!m.is_family()) {
        out.members.push_back(m);
        continue;
      }
      auto it = std::find_if(
          out.members.begin(), out.members.end(), [&](PhiMember const& o) {
            return o.kind == m.kind;
          });
      if (it == out.members.end()) {
        out.members.push_back(m);
      } else if (m.n < it->n) {
        it->n = m.n;
      }
    }
    out.basis = presets::O();
    if (out.used_D) {
      out.basis.push_back(ids::D());
    }
    for (auto const& m : out.members) {
      out.basis.push_back(m.identity());
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // τ-terms
  ////////////////////////////////////////////////////////////////////////

  struct TauSearchBudget {
    std::size_t max_len   = 4;
    std::size_t extension = 1;  // fresh letters allowed besides con(w)
  };

  //! Looks for w' with con(w) ⊆ con(w') such that M satisfies w ≈ w' but
  //! w and w' are not τ-equivalent. Candidates are tried in shortlex order
  //! over con(w) plus `extension` fresh letters. Finding nothing says
  //! nothing about whether w is a τ-term.
  inline std::optional<Word> tau_term_violation(Word const&         w,
                                                FiniteMonoid const& m,
                                                TauSearchBudget budget = {}) {
    LetterSet const     base = content(w);
    std::vector<Letter> alphabet(base.begin(), base.end());
    for (char c = 'a'; c <= 'z' && alphabet.size() < base.size()
                                                         + budget.extension;
         ++c) {
      if (base.count(Letter(c)) == 0) {
        alphabet.emplace_back(c);
      }
    }
    std::sort(alphabet.begin(), alphabet.end());
    std::size_t const k = alphabet.size();
    for (std::size_t len = base.size(); len <= budget.max_len; ++len) {
      std::vector<std::size_t> digits(len, 0);
      while (true) {
        Word cand;
        for (auto d : digits) {
          cand.push_back(alphabet[d]);
        }
        LetterSet const c = content(cand);
        if (std::includes(c.begin(), c.end(), base.begin(), base.end())
            && !tau_equiv(w, cand) && satisfies(m, Identity(w, cand)).holds) {
          return cand;
        }
        std::size_t pos = len;
        while (pos > 0 && ++digits[pos - 1] == k) {
          digits[--pos] = 0;
        }
        if (pos == 0) {
          break;
        }
      }
    }
    return std::nullopt;
  }

}  // namespace monvar

#endif  // MONVAR_REDUCTIONS_HPP_
