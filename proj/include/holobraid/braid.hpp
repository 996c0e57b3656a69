#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "holobraid/errors.hpp"

namespace holobraid {

// A word in the Artin generators of the braid group on `strands` strands.
// Letter i > 0 encodes sigma_i, letter i < 0 encodes sigma_i^{-1}; indices
// are 1-based and bounded by strands-1.  The empty word is the identity.
struct BraidWord {
  int strands = 1;
  std::vector<int> letters;

  BraidWord() = default;
  BraidWord(int n, std::vector<int> ls);

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  bool all_positive() const;
  bool all_negative() const;

  bool operator==(const BraidWord&) const = default;
};

// A bijection of {0,...,n-1}.  images[j] is the index of the strand that
// ends at position j when the permutation comes from a braid word.
struct Permutation {
  std::vector<int> images;

  Permutation() = default;
  explicit Permutation(std::vector<int> imgs);

  static Permutation identity(int n);
  // The order-reversing permutation, i.e. the image of the half twist.
  static Permutation reversal(int n);

  int size() const { return static_cast<int>(images.size()); }
  bool is_identity() const;
  bool is_reversal() const;
  Permutation inverse() const;
  // (a * b)(j) = a(b(j)): the permutation of the concatenated braid word ab.
  static Permutation compose(const Permutation& a, const Permutation& b);
  int inversions() const;

  bool operator==(const Permutation&) const = default;
  bool operator<(const Permutation& o) const { return images < o.images; }
};

// A positive braid in which each pair of strands crosses at most once,
// stored as its permutation together with the canonical word realizing it.
// These are exactly the fragments of the half twist Delta.
struct PermutationBraid {
  Permutation perm;
  BraidWord word;

  PermutationBraid() = default;
  // Builds the canonical word for `p` (see permutation_braid_word).
  explicit PermutationBraid(Permutation p);

  int strands() const { return perm.size(); }
  bool operator==(const PermutationBraid& o) const { return perm == o.perm; }
};

// --- elementary algebra ----------------------------------------------------

// Concatenation; throws StrandMismatchError unless both live in the same B_n.
BraidWord compose(const BraidWord& w1, const BraidWord& w2);

// Reversed letters with flipped signs.
BraidWord invert(const BraidWord& w);

// Cancels all adjacent sigma_i^{+-1} sigma_i^{-+1} pairs.
BraidWord free_reduce(const BraidWord& w);

// Image under the homomorphism B_n -> S_n sending sigma_i^{+-1} to (i i+1).
Permutation permutation_of(const BraidWord& w);

// Sum of letter signs (writhe of the closed diagram).
int exponent_sum(const BraidWord& w);

// Garside's half twist Delta_n = (s1...s_{n-1})(s1...s_{n-2})...(s1s2)(s1).
BraidWord delta(int n);

// If every strand pair crosses at most once along the positive word p,
// returns its permutation; otherwise nullopt.  Throws on non-positive input.
std::optional<Permutation> is_delta_fragment(const BraidWord& p);

// Canonical positive word for a permutation: record the adjacent swaps of a
// left-to-right bubble sort of the image sequence, then reverse them.  The
// length equals the inversion count, so the word is a Delta fragment.
BraidWord permutation_braid_word(const Permutation& perm);

// Test oracle for positive equivalence: breadth-first closure of p1 under
// the braid relations (they preserve length, so the space is finite).
// Throws CapExceededError once `cap` words have been visited.
bool positive_equivalent(const BraidWord& p1, const BraidWord& p2,
                         std::size_t cap = 1000000);

// --- descent sets of permutation braids -------------------------------------

// i is in the starting set iff sigma_i is a prefix of the braid of `p`.
bool in_starting_set(const Permutation& p, const Permutation& p_inv, int i);
// i is in the finishing set iff sigma_i is a suffix (equivalently, appending
// sigma_i would make the pair of strands ending at i, i+1 cross twice).
bool in_finishing_set(const Permutation& p, int i);

// --- text format -------------------------------------------------------------

// Braid-word text format: `n=<int>` followed by whitespace-separated nonzero
// letters, e.g. "n=3 1 -2 1".  serialize/parse round-trip bit-exactly.
std::string serialize_word(const BraidWord& w);
BraidWord parse_word(const std::string& text);

}  // namespace holobraid
