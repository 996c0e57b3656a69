#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "holobraid/braid.hpp"

namespace holobraid {

// Garside left normal form Delta^inf P_1 ... P_r: no factor is trivial or a
// full half twist, and each factor is the longest fragment of Delta that can
// be pulled off the remaining positive part (adjacent pairs left-weighted).
struct NormalForm {
  int strands = 1;
  int inf = 0;
  std::vector<PermutationBraid> factors;

  int canonical_length() const { return static_cast<int>(factors.size()); }
  bool operator==(const NormalForm& o) const;
};

// A positive conjugator recorded as a chain of Delta fragments A_1...A_z;
// the product W conjugates the source to the target: W^{-1} src W = tgt.
struct ConjugationWitness {
  std::vector<PermutationBraid> steps;

  // The product A_1 A_2 ... A_z as a word on `strands` strands.
  BraidWord word(int strands) const;
};

struct SummitResult {
  NormalForm form;
  ConjugationWitness witness;
};

// Caps for the conjugacy-class searches; the closure over fragment
// conjugations grows factorially with the strand count.
struct GarsideConfig {
  int strand_cap = 6;
};

// The index-reversing map sigma_i -> sigma_{n-i}; equals conjugation by the
// half twist, Delta^{-1} w Delta.
BraidWord tau(const BraidWord& w);
Permutation tau(const Permutation& p);

// The decomposition sigma_i^{-1} = Delta^{-1} U_i with Delta = U_i sigma_i.
// Returns the canonical word for Delta^{-1} and the fragment U_i.
std::pair<BraidWord, PermutationBraid> negative_split(int i, int n);

// Rewrites w as Delta^{-q} Q with Q positive: every sigma_i^{-1} becomes
// Delta^{-1} U_i and the Delta^{-1} blocks are pushed to the left, twisting
// what they pass by tau.  q is the number of negative letters of w.
std::pair<int, BraidWord> delta_power_split(const BraidWord& w);

// Normal form of the element represented by w (unique, solves the word
// problem): negative letters are rewritten through Delta^{-1}-fragments,
// Delta powers combed to the left, then the positive part is factored
// left-greedily.
NormalForm left_normal_form(const BraidWord& w);

// A word spelling the normal form: Delta^inf followed by the factor words.
BraidWord to_word(const NormalForm& nf);

// Word-problem decision: componentwise equality of normal forms.
bool words_equal(const BraidWord& w1, const BraidWord& w2);

// Conjugation by the (tau^inf-twisted) leading factor; identity on pure
// Delta powers.  Returns the new form and the fragment conjugated by.
std::pair<NormalForm, PermutationBraid> cycling(const NormalForm& nf);

// Conjugation by the inverse of the final factor, realized as the positive
// conjugator Delta^2 P_r^{-1} = Delta . (Delta P_r^{-1}) so the recorded
// witness stays a chain of fragments.
std::pair<NormalForm, std::vector<PermutationBraid>> decycling(const NormalForm& nf);

// Summit form of the conjugacy class: cycle until inf stabilizes, then
// decycle until the canonical length stabilizes, alternating to a joint
// fixpoint.  inf is maximal and r minimal over the class; the witness maps
// w to the returned form.
SummitResult summit_form(const BraidWord& w);

// The full (super) summit set: closure of summit_form(w) under conjugation
// by all Delta fragments, keeping the (inf, r)-optimal slice.  Deterministic
// lexicographic order by (inf, r, factor image tuples).
std::vector<NormalForm> summit_set(const BraidWord& w, const GarsideConfig& cfg = {});

// Conjugacy decision with witness: returns c with c^{-1} w1 c = w2 when the
// summit sets meet, nullopt otherwise.
std::optional<BraidWord> conjugate_test(const BraidWord& w1, const BraidWord& w2,
                                        const GarsideConfig& cfg = {});

// "Δ^<k> | <factor words separated by ' . '>".  The strand count is not part
// of the serialization, so parsing needs it as context.
std::string serialize_normal_form(const NormalForm& nf);
NormalForm parse_normal_form(const std::string& text, int strands);

}  // namespace holobraid
