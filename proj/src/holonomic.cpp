#include "holobraid/holonomic.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <sstream>
#include <utility>

namespace holobraid {

namespace {

std::vector<int> repeat_block(const BraidWord& block, int times) {
  std::vector<int> out;
  out.reserve(block.size() * static_cast<std::size_t>(times));
  for (int j = 0; j < times; ++j) {
    out.insert(out.end(), block.letters.begin(), block.letters.end());
  }
  return out;
}

std::vector<int> tau_letters(std::vector<int> letters, int n, int twists) {
  if (twists % 2 == 0) return letters;
  for (int& l : letters) l = (l > 0 ? 1 : -1) * (n - std::abs(l));
  return letters;
}

void append_step(IsotopyCertificate* cert, CertStep step) {
  if (cert) cert->steps.push_back(std::move(step));
}

CertStep make_step(MoveTag tag, HolonomicForm result) {
  CertStep s;
  s.tag = tag;
  s.result = std::move(result);
  return s;
}

// A positive word conjugating like w (multiplied by central Delta powers).
BraidWord positivize(const BraidWord& w) {
  NormalForm nf = left_normal_form(w);
  if (nf.inf < 0) nf.inf += 2 * ((-nf.inf + 1) / 2);
  return to_word(nf);
}

}  // namespace

HolonomicForm make_holonomic(int strands, std::vector<int> negative,
                             std::vector<int> positive) {
  HolonomicForm h;
  h.strands = strands;
  h.negative_part = BraidWord(strands, std::move(negative));
  h.positive_part = BraidWord(strands, std::move(positive));
  const auto reason = validate(h);
  if (!reason.empty()) throw Error("invalid holonomic form: " + reason);
  return h;
}

std::string validate(const HolonomicForm& h) {
  if (h.strands < 1) return "strand count must be >= 1";
  if (h.negative_part.strands != h.strands || h.positive_part.strands != h.strands) {
    return "part strand counts disagree with the form";
  }
  for (int l : h.negative_part.letters) {
    if (l >= 0) return "negative part contains a non-negative letter";
    if (-l > h.strands - 1) return "negative part letter out of range";
  }
  for (int l : h.positive_part.letters) {
    if (l <= 0) return "positive part contains a non-positive letter";
    if (l > h.strands - 1) return "positive part letter out of range";
  }
  return {};
}

BraidWord open_word(const HolonomicForm& h) {
  BraidWord w;
  w.strands = h.strands;
  w.letters = h.negative_part.letters;
  w.letters.insert(w.letters.end(), h.positive_part.letters.begin(),
                   h.positive_part.letters.end());
  return w;
}

HolonomicForm conjugate_positive(const HolonomicForm& h, const BraidWord& c) {
  if (!c.all_positive()) throw Error("conjugate_positive needs a positive word");
  if (c.strands != h.strands) throw StrandMismatchError("conjugator strand count differs");
  HolonomicForm out;
  out.strands = h.strands;
  out.negative_part = compose(invert(c), h.negative_part);
  out.positive_part = compose(h.positive_part, c);
  return out;
}

std::string tag_name(MoveTag tag) {
  switch (tag) {
    case MoveTag::V3a: return "V3a";
    case MoveTag::V3b: return "V3b";
    case MoveTag::V3c: return "V3c";
    case MoveTag::M1: return "M1";
    case MoveTag::M2: return "M2";
    case MoveTag::ConjPos: return "CONJ-POS";
  }
  return "?";
}

namespace {

// Is `grown` exactly `base` with one trivial loop sigma_{base.strands}^{sign}
// inserted at the named interface?
bool is_loop_insertion(const HolonomicForm& base, const HolonomicForm& grown, int sign,
                       const std::string& iface) {
  if (grown.strands != base.strands + 1) return false;
  const int g = base.strands;
  const bool wrap = iface == "wrap";
  std::vector<int> n_expect = base.negative_part.letters;
  std::vector<int> p_expect = base.positive_part.letters;
  if (sign > 0) {
    if (wrap) {
      p_expect.push_back(g);
    } else {
      p_expect.insert(p_expect.begin(), g);
    }
  } else {
    if (wrap) {
      n_expect.insert(n_expect.begin(), -g);
    } else {
      n_expect.push_back(-g);
    }
  }
  return grown.negative_part.letters == n_expect && grown.positive_part.letters == p_expect;
}

bool loop_letter_unique(const HolonomicForm& h) {
  const int g = h.strands - 1;
  if (g < 1) return false;
  int count = 0;
  for (int l : h.negative_part.letters) count += (std::abs(l) == g);
  for (int l : h.positive_part.letters) count += (std::abs(l) == g);
  return count == 1;
}

bool is_loop_deletion(const HolonomicForm& base, const HolonomicForm& shrunk) {
  if (!loop_letter_unique(base)) return false;
  for (int sign : {+1, -1}) {
    for (const char* iface : {"main", "wrap"}) {
      if (is_loop_insertion(shrunk, base, sign, iface)) return true;
    }
  }
  return false;
}

HolonomicForm stabilize_impl(const HolonomicForm& h, int sign, bool at_wrap,
                             IsotopyCertificate* cert, MoveTag tag) {
  if (const auto reason = validate(h); !reason.empty()) {
    throw IllegalMoveError("stabilize on invalid form: " + reason);
  }
  const int n = h.strands;
  std::vector<int> nl = h.negative_part.letters;
  std::vector<int> pl = h.positive_part.letters;
  if (sign > 0) {
    if (at_wrap) {
      pl.push_back(n);
    } else {
      pl.insert(pl.begin(), n);
    }
  } else {
    if (at_wrap) {
      nl.insert(nl.begin(), -n);
    } else {
      nl.push_back(-n);
    }
  }
  HolonomicForm out;
  out.strands = n + 1;
  out.negative_part = BraidWord(n + 1, std::move(nl));
  out.positive_part = BraidWord(n + 1, std::move(pl));
  CertStep step = make_step(tag, out);
  step.sign = sign > 0 ? 1 : -1;
  step.iface = at_wrap ? "wrap" : "main";
  append_step(cert, std::move(step));
  return out;
}

HolonomicForm destabilize_impl(const HolonomicForm& h, IsotopyCertificate* cert,
                               MoveTag tag) {
  if (const auto reason = validate(h); !reason.empty()) {
    throw IllegalMoveError("destabilize on invalid form: " + reason);
  }
  const int n = h.strands;
  const int g = n - 1;
  if (g < 1) throw IllegalMoveError("destabilize: no loop strand in B_1");
  int count = 0;
  for (int l : h.negative_part.letters) count += (std::abs(l) == g);
  for (int l : h.positive_part.letters) count += (std::abs(l) == g);
  if (count != 1) {
    throw IllegalMoveError("destabilize: sigma_" + std::to_string(g) + " occurs " +
                           std::to_string(count) + " times, need exactly 1");
  }
  std::vector<int> nl = h.negative_part.letters;
  std::vector<int> pl = h.positive_part.letters;
  if (!pl.empty() && pl.front() == g) {
    pl.erase(pl.begin());
  } else if (!pl.empty() && pl.back() == g) {
    pl.pop_back();
  } else if (!nl.empty() && nl.back() == -g) {
    nl.pop_back();
  } else if (!nl.empty() && nl.front() == -g) {
    nl.erase(nl.begin());
  } else {
    throw IllegalMoveError("destabilize: the loop letter is not at an interface");
  }
  HolonomicForm out;
  out.strands = n - 1;
  out.negative_part = BraidWord(n - 1, std::move(nl));
  out.positive_part = BraidWord(n - 1, std::move(pl));
  append_step(cert, make_step(tag, out));
  return out;
}

}  // namespace

VerifyResult verify_certificate(const IsotopyCertificate& cert) {
  auto fail = [](std::size_t at, std::string reason) {
    return VerifyResult{false, at, std::move(reason)};
  };
  if (const auto reason = validate(cert.start); !reason.empty()) {
    return fail(0, "start form invalid: " + reason);
  }
  HolonomicForm cur = cert.start;
  for (std::size_t j = 0; j < cert.steps.size(); ++j) {
    const auto& step = cert.steps[j];
    const std::size_t at = j + 1;
    if (const auto reason = validate(step.result); !reason.empty()) {
      return fail(at, "intermediate form invalid: " + reason);
    }
    switch (step.tag) {
      case MoveTag::V3a: {
        if (step.result.strands != cur.strands) return fail(at, "V3a changed strand count");
        if (step.part == 'N') {
          if (step.result.positive_part.letters != cur.positive_part.letters) {
            return fail(at, "V3a on N also changed P");
          }
          if (!words_equal(cur.negative_part, step.result.negative_part)) {
            return fail(at, "V3a: negative parts are not equivalent");
          }
        } else if (step.part == 'P') {
          if (step.result.negative_part.letters != cur.negative_part.letters) {
            return fail(at, "V3a on P also changed N");
          }
          if (!words_equal(cur.positive_part, step.result.positive_part)) {
            return fail(at, "V3a: positive parts are not equivalent");
          }
        } else {
          return fail(at, "V3a step does not name a part");
        }
        break;
      }
      case MoveTag::V3b: {
        if (step.result.strands != cur.strands) return fail(at, "V3b changed strand count");
        if (step.iface == "wrap") {
          if (!step.conj || !step.conj->all_positive()) {
            return fail(at, "wrap transfer lacks a positive conjugator");
          }
          BraidWord c = *step.conj;
          c.strands = cur.strands;
          const auto expect = compose(compose(invert(c), open_word(cur)), c);
          if (!words_equal(open_word(step.result), expect)) {
            return fail(at, "wrap transfer is not the recorded conjugation");
          }
        } else {
          if (!words_equal(open_word(cur), open_word(step.result))) {
            return fail(at, "V3b: open braid element changed");
          }
        }
        break;
      }
      case MoveTag::V3c:
      case MoveTag::M1: {
        if (step.result.strands == cur.strands + 1) {
          const std::string iface = step.iface.empty() ? "main" : step.iface;
          if (!is_loop_insertion(cur, step.result, step.sign, iface)) {
            return fail(at, tag_name(step.tag) + ": not a trivial-loop insertion");
          }
        } else if (step.tag == MoveTag::V3c && step.result.strands == cur.strands - 1) {
          if (!is_loop_deletion(cur, step.result)) {
            return fail(at, "V3c: not a trivial-loop deletion");
          }
        } else {
          return fail(at, tag_name(step.tag) + ": strand count must change by one");
        }
        break;
      }
      case MoveTag::M2: {
        if (step.result.strands != cur.strands - 1) {
          return fail(at, "M2: strand count must drop by one");
        }
        if (!is_loop_deletion(cur, step.result)) {
          return fail(at, "M2: not a unique trivial-loop deletion at an interface");
        }
        break;
      }
      case MoveTag::ConjPos: {
        if (step.result.strands != cur.strands) {
          return fail(at, "CONJ-POS changed strand count");
        }
        if (!step.conj || !step.conj->all_positive()) {
          return fail(at, "CONJ-POS lacks a positive conjugator");
        }
        BraidWord c = *step.conj;
        c.strands = cur.strands;
        const auto expect = compose(compose(invert(c), open_word(cur)), c);
        if (!words_equal(open_word(step.result), expect)) {
          return fail(at, "CONJ-POS: conjugation does not match");
        }
        break;
      }
    }
    cur = step.result;
  }
  return {};
}

HolonomicForm holonomize(const BraidWord& w) {
  const int n = w.strands;
  auto [q, positive] = delta_power_split(w);
  HolonomicForm h;
  h.strands = n;
  h.negative_part = BraidWord(n, repeat_block(invert(delta(n)), q));
  h.positive_part = std::move(positive);
  return h;
}

HolonomicForm comb_to_delta_power(const HolonomicForm& h, IsotopyCertificate* cert) {
  if (const auto reason = validate(h); !reason.empty()) {
    throw Error("comb_to_delta_power: " + reason);
  }
  const int n = h.strands;
  if (h.negative_part.empty()) return h;

  HolonomicForm cur = h;
  const BraidWord neg_block = invert(delta(n));

  // Negative equivalences: comb the Delta^{-1} powers of N to the left.
  const NormalForm nf_inv = left_normal_form(invert(cur.negative_part));
  const int combed = nf_inv.inf;  // >= 0 since N^{-1} is positive
  BraidWord rest;
  rest.strands = n;
  for (const auto& f : nf_inv.factors) {
    rest.letters.insert(rest.letters.end(), f.word.letters.begin(), f.word.letters.end());
  }
  std::vector<int> remainder = tau_letters(invert(rest).letters, n, combed);
  {
    std::vector<int> new_n = repeat_block(neg_block, combed);
    new_n.insert(new_n.end(), remainder.begin(), remainder.end());
    if (new_n != cur.negative_part.letters) {
      cur.negative_part = BraidWord(n, std::move(new_n));
      CertStep step = make_step(MoveTag::V3a, cur);
      step.part = 'N';
      append_step(cert, std::move(step));
    }
  }

  // Interface transfers: the trailing sigma_j^{-1} splits as Delta^{-1} U_j;
  // the Delta^{-1} joins the block on the left (twisting what it passes) and
  // the fragment U_j crosses into P.
  int power = combed;
  while (!remainder.empty()) {
    const int j = -remainder.back();
    remainder.pop_back();
    remainder = tau_letters(std::move(remainder), n, 1);
    ++power;
    const auto [block, frag] = negative_split(j, n);
    (void)block;
    std::vector<int> new_n = repeat_block(neg_block, power);
    new_n.insert(new_n.end(), remainder.begin(), remainder.end());
    std::vector<int> new_p = frag.word.letters;
    new_p.insert(new_p.end(), cur.positive_part.letters.begin(),
                 cur.positive_part.letters.end());
    cur.negative_part = BraidWord(n, std::move(new_n));
    cur.positive_part = BraidWord(n, std::move(new_p));
    CertStep step = make_step(MoveTag::V3b, cur);
    step.iface = "main";
    append_step(cert, std::move(step));
  }
  return cur;
}

HolonomicForm holonomic_normal_form(const HolonomicForm& h, IsotopyCertificate* cert) {
  HolonomicForm cur = comb_to_delta_power(h, cert);
  const int n = cur.strands;
  const int dlen = n * (n - 1) / 2;
  const int q = dlen == 0 ? 0 : static_cast<int>(cur.negative_part.size()) / dlen;

  // Positive equivalence: comb Delta powers out of P and factor the rest.
  const NormalForm nf_p = left_normal_form(cur.positive_part);
  const int m = nf_p.inf;
  {
    std::vector<int> new_p = repeat_block(delta(n), m);
    for (const auto& f : nf_p.factors) {
      new_p.insert(new_p.end(), f.word.letters.begin(), f.word.letters.end());
    }
    if (new_p != cur.positive_part.letters) {
      cur.positive_part = BraidWord(n, std::move(new_p));
      CertStep step = make_step(MoveTag::V3a, cur);
      step.part = 'P';
      append_step(cert, std::move(step));
    }
  }

  // Cancel Delta^{-1} Delta pairs across the interface, one pair per step.
  for (int cancel = std::min(q, m); cancel > 0; --cancel) {
    std::vector<int> new_n(cur.negative_part.letters.begin(),
                           cur.negative_part.letters.end() - dlen);
    std::vector<int> new_p(cur.positive_part.letters.begin() + dlen,
                           cur.positive_part.letters.end());
    cur.negative_part = BraidWord(n, std::move(new_n));
    cur.positive_part = BraidWord(n, std::move(new_p));
    CertStep step = make_step(MoveTag::V3b, cur);
    step.iface = "main";
    append_step(cert, std::move(step));
  }
  return cur;
}

std::pair<HolonomicForm, IsotopyCertificate> holonomic_summit(const HolonomicForm& h) {
  IsotopyCertificate cert(h);
  HolonomicForm cur = holonomic_normal_form(h, &cert);

  const auto sr = summit_form(open_word(cur));
  for (const auto& frag : sr.witness.steps) {
    if (frag.perm.is_identity()) continue;
    BraidWord c = frag.word;
    c.strands = cur.strands;
    cur = conjugate_positive(cur, c);
    CertStep step = make_step(MoveTag::ConjPos, cur);
    step.conj = c;
    cert.steps.push_back(std::move(step));
    cur = holonomic_normal_form(cur, &cert);
  }
  return {std::move(cur), std::move(cert)};
}

HolonomicForm v3_move(const HolonomicForm& h, const V3Move& m, IsotopyCertificate* cert) {
  if (const auto reason = validate(h); !reason.empty()) {
    throw IllegalMoveError("v3_move on invalid form: " + reason);
  }
  const int n = h.strands;
  using Kind = V3Move::Kind;
  switch (m.kind) {
    case Kind::PositiveEquivalence: {
      if (!m.word.all_positive()) {
        throw IllegalMoveError("V3(a): replacement for P is not positive");
      }
      if (m.word.strands != n) throw IllegalMoveError("V3(a): strand count differs");
      if (!words_equal(h.positive_part, m.word)) {
        throw IllegalMoveError("V3(a): replacement is not positively equivalent to P");
      }
      HolonomicForm out = h;
      out.positive_part = m.word;
      CertStep step = make_step(MoveTag::V3a, out);
      step.part = 'P';
      append_step(cert, std::move(step));
      return out;
    }
    case Kind::NegativeEquivalence: {
      if (!m.word.all_negative()) {
        throw IllegalMoveError("V3(a): replacement for N is not negative");
      }
      if (m.word.strands != n) throw IllegalMoveError("V3(a): strand count differs");
      if (!words_equal(h.negative_part, m.word)) {
        throw IllegalMoveError("V3(a): replacement is not negatively equivalent to N");
      }
      HolonomicForm out = h;
      out.negative_part = m.word;
      CertStep step = make_step(MoveTag::V3a, out);
      step.part = 'N';
      append_step(cert, std::move(step));
      return out;
    }
    case Kind::Transfer: {
      if (!m.word.all_negative() || !m.second.all_positive()) {
        throw IllegalMoveError("V3(b): target split is not N|P shaped");
      }
      if (m.word.strands != n || m.second.strands != n) {
        throw IllegalMoveError("V3(b): strand count differs");
      }
      HolonomicForm out{n, m.word, m.second};
      if (!words_equal(open_word(h), open_word(out))) {
        throw IllegalMoveError("V3(b): transfer changes the open braid element");
      }
      CertStep step = make_step(MoveTag::V3b, out);
      step.iface = "main";
      append_step(cert, std::move(step));
      return out;
    }
    case Kind::WrapTransfer: {
      if (!m.word.all_positive()) {
        throw IllegalMoveError("V3(b) wrap: conjugator must be positive");
      }
      BraidWord c = m.word;
      c.strands = n;
      HolonomicForm out = conjugate_positive(h, c);
      CertStep step = make_step(MoveTag::V3b, out);
      step.iface = "wrap";
      step.conj = c;
      append_step(cert, std::move(step));
      return out;
    }
    case Kind::InsertPair: {
      if (m.index < 1 || m.index > n - 1) {
        throw IllegalMoveError("V3(b) pair: generator index out of range");
      }
      HolonomicForm out = h;
      if (m.at_wrap) {
        out.positive_part.letters.push_back(m.index);
        out.negative_part.letters.insert(out.negative_part.letters.begin(), -m.index);
        CertStep step = make_step(MoveTag::V3b, out);
        step.iface = "wrap";
        step.conj = BraidWord(n, {m.index});
        append_step(cert, std::move(step));
      } else {
        out.negative_part.letters.push_back(-m.index);
        out.positive_part.letters.insert(out.positive_part.letters.begin(), m.index);
        CertStep step = make_step(MoveTag::V3b, out);
        step.iface = "main";
        append_step(cert, std::move(step));
      }
      return out;
    }
    case Kind::DeletePair: {
      HolonomicForm out = h;
      auto& nl = out.negative_part.letters;
      auto& pl = out.positive_part.letters;
      if (m.at_wrap) {
        if (pl.empty() || nl.empty() || pl.back() != m.index || nl.front() != -m.index) {
          throw IllegalMoveError("V3(b) pair: no sigma_j sigma_j^{-1} at the wrap interface");
        }
        pl.pop_back();
        nl.erase(nl.begin());
        CertStep step = make_step(MoveTag::V3b, out);
        step.iface = "wrap";
        // Deleting at the wrap undoes conjugation by sigma_j, i.e. conjugates
        // by its inverse; record the equivalent positive word Delta^2 sigma_j^{-1}.
        step.conj = positivize(BraidWord(n, {-m.index}));
        append_step(cert, std::move(step));
      } else {
        if (nl.empty() || pl.empty() || nl.back() != -m.index || pl.front() != m.index) {
          throw IllegalMoveError("V3(b) pair: no sigma_j^{-1} sigma_j at the main interface");
        }
        nl.pop_back();
        pl.erase(pl.begin());
        CertStep step = make_step(MoveTag::V3b, out);
        step.iface = "main";
        append_step(cert, std::move(step));
      }
      return out;
    }
    case Kind::Stabilize:
      return stabilize_impl(h, m.sign, m.at_wrap, cert, MoveTag::V3c);
    case Kind::Destabilize:
      return destabilize_impl(h, cert, MoveTag::V3c);
  }
  throw IllegalMoveError("unknown move kind");
}

HolonomicForm markov_stabilize(const HolonomicForm& h, int sign, IsotopyCertificate* cert) {
  return stabilize_impl(h, sign, /*at_wrap=*/false, cert, MoveTag::M1);
}

HolonomicForm markov_destabilize(const HolonomicForm& h, IsotopyCertificate* cert) {
  return destabilize_impl(h, cert, MoveTag::M2);
}

IsotopyCertificate replay_markov_script(const HolonomicForm& start,
                                        const std::vector<MarkovScriptOp>& script) {
  IsotopyCertificate cert(start);
  HolonomicForm cur = start;
  for (const auto& op : script) {
    switch (op.kind) {
      case MarkovScriptOp::Kind::Stabilize:
        cur = markov_stabilize(cur, op.sign, &cert);
        break;
      case MarkovScriptOp::Kind::Destabilize:
        cur = markov_destabilize(cur, &cert);
        break;
      case MarkovScriptOp::Kind::Conjugate: {
        if (op.conj.strands != cur.strands) {
          throw StrandMismatchError("script conjugator lives in the wrong braid group");
        }
        const BraidWord c = positivize(op.conj);
        cur = conjugate_positive(cur, c);
        CertStep step = make_step(MoveTag::ConjPos, cur);
        step.conj = c;
        cert.steps.push_back(std::move(step));
        break;
      }
      case MarkovScriptOp::Kind::Summit: {
        auto [form, sub] = holonomic_summit(cur);
        for (auto& step : sub.steps) cert.steps.push_back(std::move(step));
        cur = std::move(form);
        break;
      }
    }
  }
  return cert;
}

// --- text format ---------------------------------------------------------------

namespace {

void write_form(std::ostream& os, const HolonomicForm& h) {
  os << "n=" << h.strands << " N=";
  for (int l : h.negative_part.letters) os << ' ' << l;
  os << " P=";
  for (int l : h.positive_part.letters) os << ' ' << l;
}

std::string letters_csv(const BraidWord& w) {
  std::ostringstream os;
  for (std::size_t j = 0; j < w.letters.size(); ++j) {
    if (j) os << ',';
    os << w.letters[j];
  }
  return os.str();
}

std::vector<int> csv_letters(const std::string& s, int line) {
  std::vector<int> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, ',')) {
    if (cur.empty()) continue;
    try {
      out.push_back(std::stoi(cur));
    } catch (const std::exception&) {
      throw ParseError("bad letter '" + cur + "' in conjugator", line, 1);
    }
  }
  return out;
}

HolonomicForm read_form(const std::vector<std::string>& toks, std::size_t at, int line) {
  if (at >= toks.size() || toks[at].rfind("n=", 0) != 0) {
    throw ParseError("expected n=<strands>", line, 1);
  }
  HolonomicForm h;
  try {
    h.strands = std::stoi(toks[at].substr(2));
  } catch (const std::exception&) {
    throw ParseError("bad strand count '" + toks[at] + "'", line, 1);
  }
  ++at;
  if (at >= toks.size() || toks[at] != "N=") throw ParseError("expected N=", line, 1);
  ++at;
  std::vector<int> neg, pos;
  while (at < toks.size() && toks[at] != "P=") {
    try {
      neg.push_back(std::stoi(toks[at]));
    } catch (const std::exception&) {
      throw ParseError("bad letter '" + toks[at] + "'", line, 1);
    }
    ++at;
  }
  if (at >= toks.size()) throw ParseError("expected P=", line, 1);
  ++at;
  while (at < toks.size()) {
    try {
      pos.push_back(std::stoi(toks[at]));
    } catch (const std::exception&) {
      throw ParseError("bad letter '" + toks[at] + "'", line, 1);
    }
    ++at;
  }
  h.negative_part = BraidWord(h.strands, std::move(neg));
  h.positive_part = BraidWord(h.strands, std::move(pos));
  return h;
}

std::vector<std::string> split_tokens(const std::string& line) {
  std::vector<std::string> toks;
  std::istringstream is(line);
  std::string t;
  while (is >> t) toks.push_back(t);
  return toks;
}

}  // namespace

std::string serialize_certificate(const IsotopyCertificate& cert) {
  std::ostringstream os;
  os << "START ";
  write_form(os, cert.start);
  os << '\n';
  for (const auto& step : cert.steps) {
    os << tag_name(step.tag);
    switch (step.tag) {
      case MoveTag::V3a:
        os << " part=" << step.part;
        break;
      case MoveTag::V3b:
        os << " iface=" << (step.iface.empty() ? "main" : step.iface);
        if (step.conj) os << " by=" << letters_csv(*step.conj);
        break;
      case MoveTag::V3c:
        os << " sign=" << (step.sign >= 0 ? "+1" : "-1") << " iface="
           << (step.iface.empty() ? "main" : step.iface);
        break;
      case MoveTag::M1:
        os << " sign=" << (step.sign >= 0 ? "+1" : "-1");
        break;
      case MoveTag::M2:
        break;
      case MoveTag::ConjPos:
        os << " by=" << letters_csv(*step.conj);
        break;
    }
    os << " => ";
    write_form(os, step.result);
    os << '\n';
  }
  return os.str();
}

std::string serialize_holonomic(const HolonomicForm& h) {
  std::ostringstream os;
  write_form(os, h);
  return os.str();
}

HolonomicForm parse_holonomic(const std::string& text) {
  const auto toks = split_tokens(text);
  if (toks.empty()) throw ParseError("empty holonomic form", 1, 1);
  const HolonomicForm h = read_form(toks, 0, 1);
  if (const auto reason = validate(h); !reason.empty()) {
    throw ParseError("invalid holonomic form: " + reason, 1, 1);
  }
  return h;
}

IsotopyCertificate parse_certificate(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  IsotopyCertificate cert;
  bool have_start = false;
  while (std::getline(is, line)) {
    ++lineno;
    const auto toks = split_tokens(line);
    if (toks.empty()) continue;
    if (!have_start) {
      if (toks[0] != "START") throw ParseError("certificate must begin with START", lineno, 1);
      cert.start = read_form(toks, 1, lineno);
      have_start = true;
      continue;
    }
    CertStep step;
    const std::string& tag = toks[0];
    std::size_t at = 1;
    std::optional<std::string> conj_csv;
    auto eat_payload = [&](auto&& use) {
      while (at < toks.size() && toks[at] != "=>") {
        use(toks[at]);
        ++at;
      }
    };
    if (tag == "V3a") {
      step.tag = MoveTag::V3a;
      eat_payload([&](const std::string& t) {
        if (t.rfind("part=", 0) == 0 && t.size() == 6) step.part = t[5];
      });
    } else if (tag == "V3b") {
      step.tag = MoveTag::V3b;
      eat_payload([&](const std::string& t) {
        if (t.rfind("iface=", 0) == 0) step.iface = t.substr(6);
        if (t.rfind("by=", 0) == 0) conj_csv = t.substr(3);
      });
    } else if (tag == "V3c") {
      step.tag = MoveTag::V3c;
      eat_payload([&](const std::string& t) {
        if (t.rfind("sign=", 0) == 0) step.sign = std::stoi(t.substr(5));
        if (t.rfind("iface=", 0) == 0) step.iface = t.substr(6);
      });
    } else if (tag == "M1") {
      step.tag = MoveTag::M1;
      eat_payload([&](const std::string& t) {
        if (t.rfind("sign=", 0) == 0) step.sign = std::stoi(t.substr(5));
      });
    } else if (tag == "M2") {
      step.tag = MoveTag::M2;
      eat_payload([](const std::string&) {});
    } else if (tag == "CONJ-POS") {
      step.tag = MoveTag::ConjPos;
      eat_payload([&](const std::string& t) {
        if (t.rfind("by=", 0) == 0) conj_csv = t.substr(3);
      });
    } else {
      throw ParseError("unknown certificate tag '" + tag + "'", lineno, 1);
    }
    if (at >= toks.size() || toks[at] != "=>") {
      throw ParseError("expected '=>' in certificate step", lineno, 1);
    }
    step.result = read_form(toks, at + 1, lineno);
    if (conj_csv) {
      step.conj = BraidWord(step.result.strands, csv_letters(*conj_csv, lineno));
    }
    cert.steps.push_back(std::move(step));
  }
  if (!have_start) throw ParseError("empty certificate", 1, 1);
  return cert;
}

}  // namespace holobraid
