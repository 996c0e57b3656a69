#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "holobraid/braid.hpp"
#include "holobraid/garside.hpp"

namespace holobraid {

// A closed braid split as N|P: a negative prefix followed by a positive
// suffix.  The open braid is NP; the closed braid reads the word cyclically,
// so there is a second interface where P wraps around to N.
//
// Kept as a plain aggregate so that invalid intermediates (e.g. inside a
// corrupted certificate) stay representable; validate() reports violations.
struct HolonomicForm {
  int strands = 1;
  BraidWord negative_part{1, {}};
  BraidWord positive_part{1, {}};

  bool operator==(const HolonomicForm&) const = default;
};

HolonomicForm make_holonomic(int strands, std::vector<int> negative,
                             std::vector<int> positive);

// Empty string when the form satisfies its invariants, else the reason.
std::string validate(const HolonomicForm& h);

// The open braid word N P.
BraidWord open_word(const HolonomicForm& h);

// Conjugation by a positive word keeps the split shape:
// c^{-1} (N P) c = (c^{-1} N) | (P c).
HolonomicForm conjugate_positive(const HolonomicForm& h, const BraidWord& c);

// --- moves and certificates --------------------------------------------------

enum class MoveTag { V3a, V3b, V3c, M1, M2, ConjPos };

std::string tag_name(MoveTag tag);

// One certified isotopy step.  The payload fields used depend on the tag:
//   V3a      part ('N' or 'P')
//   V3b      iface ("main" or "wrap"); wrap transfers carry the positive
//            conjugator in `conj`
//   V3c, M1  sign and iface of the inserted/removed trivial loop
//   M2       nothing (the removed letter is recovered structurally)
//   ConjPos  conj = the positive conjugator
struct CertStep {
  MoveTag tag = MoveTag::V3a;
  char part = 0;
  std::string iface;
  int sign = 0;
  std::optional<BraidWord> conj;
  HolonomicForm result;
};

struct IsotopyCertificate {
  HolonomicForm start;
  std::vector<CertStep> steps;

  IsotopyCertificate() = default;
  explicit IsotopyCertificate(HolonomicForm s) : start(std::move(s)) {}
  const HolonomicForm& final_form() const {
    return steps.empty() ? start : steps.back().result;
  }
};

struct VerifyResult {
  bool ok = true;
  std::size_t failed_step = 0;  // 0 = start form itself, else 1-based step
  std::string reason;
  explicit operator bool() const { return ok; }
};

// Mechanical legality check of every step: V3a parts stay equal as elements
// with unchanged sign shape, V3b preserves the open element (main) or
// conjugates by the recorded positive word (wrap), V3c/M1/M2 are structural,
// ConjPos verifies the conjugation.  Every intermediate must validate.
VerifyResult verify_certificate(const IsotopyCertificate& cert);

// --- the Theorem 0 pipeline ---------------------------------------------------

// Splits w as N|P without changing the element or the strand count:
// each sigma_i^{-1} becomes Delta^{-1} U_i and the Delta^{-1}s move left.
HolonomicForm holonomize(const BraidWord& w);

// Brings the negative part to exactly q copies of the canonical Delta^{-1}
// word by negative equivalences plus interface transfers, recording V3a/V3b
// steps on the certificate when given.
HolonomicForm comb_to_delta_power(const HolonomicForm& h,
                                  IsotopyCertificate* cert = nullptr);

// Renders the form as the left normal form of its element: P becomes the
// factor concatenation (with any positive Delta power spelled out in front)
// and N the matching Delta^{-1} block.
HolonomicForm holonomic_normal_form(const HolonomicForm& h,
                                    IsotopyCertificate* cert = nullptr);

// Runs the whole pipeline to a summit form of the closed braid's conjugacy
// class; all conjugations are by positive fragments (tagged ConjPos).
std::pair<HolonomicForm, IsotopyCertificate> holonomic_summit(const HolonomicForm& h);

// --- V3 moves -----------------------------------------------------------------

struct V3Move {
  enum class Kind {
    PositiveEquivalence,  // (a) replace P by `word`
    NegativeEquivalence,  // (a) replace N by `word`
    Transfer,             // (b) re-split at the main interface: N,P := word, second
    WrapTransfer,         // (b) at the other interface: conjugate by positive `word`
    InsertPair,           // (b) special case: add sigma_index^{-1} sigma_index
    DeletePair,           // (b) special case: remove it
    Stabilize,            // (c) insert sigma_n^{sign}, strand count grows
    Destabilize           // (c) the inverse move
  };
  Kind kind;
  BraidWord word{1, {}};
  BraidWord second{1, {}};
  int index = 0;
  int sign = +1;
  bool at_wrap = false;
};

// Applies the move after checking its side condition; throws IllegalMoveError
// naming the failed check.  Appends a V3a/V3b/V3c step when `cert` is given.
HolonomicForm v3_move(const HolonomicForm& h, const V3Move& m,
                      IsotopyCertificate* cert = nullptr);

// Markov stabilization at the main interface: sign < 0 appends
// sigma_n^{-1} to N, sign > 0 prepends sigma_n to P; strand count grows by 1.
HolonomicForm markov_stabilize(const HolonomicForm& h, int sign,
                               IsotopyCertificate* cert = nullptr);

// Removes the trivial loop: sigma_{n-1}^{+-1} must occur exactly once in NP
// and sit at one of the four interface positions.
HolonomicForm markov_destabilize(const HolonomicForm& h,
                                 IsotopyCertificate* cert = nullptr);

// --- Markov script replay ------------------------------------------------------

// A user-supplied Markov sequence; the replay fills in the intra-class
// holonomic isotopies (positive conjugations, summit normalizations).
struct MarkovScriptOp {
  enum class Kind { Stabilize, Destabilize, Conjugate, Summit };
  Kind kind;
  int sign = +1;        // Stabilize
  BraidWord conj{1, {}};  // Conjugate: any word; realized positively via Delta^2
};

IsotopyCertificate replay_markov_script(const HolonomicForm& start,
                                        const std::vector<MarkovScriptOp>& script);

// --- certificate text format ---------------------------------------------------

// Line-oriented log:
//   START n=<n> N= <letters> P= <letters>
//   <tag> <payload> => n=<n> N= <letters> P= <letters>
std::string serialize_certificate(const IsotopyCertificate& cert);
IsotopyCertificate parse_certificate(const std::string& text);

// One-line form syntax shared with the certificate log:
//   n=<n> N= <letters> P= <letters>
std::string serialize_holonomic(const HolonomicForm& h);
HolonomicForm parse_holonomic(const std::string& text);

}  // namespace holobraid
