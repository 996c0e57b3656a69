#include "holobraid/garside.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <utility>

namespace holobraid {

namespace {

int delta_length(int n) { return n * (n - 1) / 2; }

// a := a sigma_i, b := sigma_i^{-1} b, moving one head letter of b into the
// tail of a.  binv is kept in sync with b.
void move_letter(Permutation& a, Permutation& b, Permutation& binv, int i) {
  std::swap(a.images[i - 1], a.images[i]);
  const int p1 = binv.images[i - 1], p2 = binv.images[i];
  std::swap(b.images[p1], b.images[p2]);
  std::swap(binv.images[i - 1], binv.images[i]);
}

// Makes the adjacent pair left-weighted: every generator starting b must
// finish a.  Returns true if anything moved.
bool make_left_weighted(Permutation& a, Permutation& b) {
  const int n = a.size();
  Permutation binv = b.inverse();
  bool changed = false;
  for (;;) {
    int found = 0;
    for (int i = 1; i <= n - 1; ++i) {
      if (binv.images[i - 1] > binv.images[i] && a.images[i - 1] < a.images[i]) {
        found = i;
        break;
      }
    }
    if (!found) break;
    move_letter(a, b, binv, found);
    changed = true;
  }
  return changed;
}

// Left-greedy factorization of a product of permutation braids.  Returns the
// number of leading full twists combed off; `fs` holds the remaining factors.
int greedy_normalize(std::vector<Permutation>& fs) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t j = 0; j + 1 < fs.size(); ++j) {
      if (make_left_weighted(fs[j], fs[j + 1])) changed = true;
    }
    const auto tail = std::remove_if(fs.begin(), fs.end(),
                                     [](const Permutation& p) { return p.is_identity(); });
    if (tail != fs.end()) {
      fs.erase(tail, fs.end());
      changed = true;
    }
  }
  int deltas = 0;
  while (deltas < static_cast<int>(fs.size()) && fs[deltas].is_reversal()) ++deltas;
  fs.erase(fs.begin(), fs.begin() + deltas);
  return deltas;
}

// Packs a positive letter sequence into maximal fragments, left to right.
std::vector<Permutation> pack_letters(const std::vector<int>& letters, int n) {
  std::vector<Permutation> fs;
  Permutation cur = Permutation::identity(n);
  bool nonempty = false;
  for (int l : letters) {
    const int i = l;
    if (cur.images[i - 1] > cur.images[i]) {  // appending would cross a pair twice
      fs.push_back(cur);
      cur = Permutation::identity(n);
      nonempty = false;
    }
    std::swap(cur.images[i - 1], cur.images[i]);
    nonempty = true;
  }
  if (nonempty) fs.push_back(cur);
  return fs;
}

NormalForm build_form(int n, int inf, std::vector<Permutation> factors) {
  NormalForm nf;
  nf.strands = n;
  nf.inf = inf + greedy_normalize(factors);
  nf.factors.reserve(factors.size());
  for (auto& p : factors) nf.factors.emplace_back(std::move(p));
  return nf;
}

std::string form_key(const NormalForm& nf) {
  std::ostringstream os;
  os << nf.inf << ':';
  for (const auto& f : nf.factors) {
    for (int v : f.perm.images) os << v << ',';
    os << ';';
  }
  return os.str();
}

std::vector<Permutation> factor_perms(const NormalForm& nf) {
  std::vector<Permutation> ps;
  ps.reserve(nf.factors.size());
  for (const auto& f : nf.factors) ps.push_back(f.perm);
  return ps;
}

NormalForm conjugate_by_fragment(const NormalForm& nf, const Permutation& a) {
  // A^{-1} Delta^k P_1..P_r A = Delta^k tau^k(A)^{-1} P_1..P_r A; the inverse
  // prefix is handled by rebuilding from the full word instead.
  BraidWord w = to_word(nf);
  BraidWord aw = permutation_braid_word(a);
  aw.strands = nf.strands;
  return left_normal_form(compose(compose(invert(aw), w), aw));
}

}  // namespace

bool NormalForm::operator==(const NormalForm& o) const {
  if (strands != o.strands || inf != o.inf || factors.size() != o.factors.size()) return false;
  for (std::size_t j = 0; j < factors.size(); ++j) {
    if (!(factors[j].perm == o.factors[j].perm)) return false;
  }
  return true;
}

BraidWord ConjugationWitness::word(int strands) const {
  BraidWord w;
  w.strands = strands;
  for (const auto& s : steps) {
    w.letters.insert(w.letters.end(), s.word.letters.begin(), s.word.letters.end());
  }
  return w;
}

BraidWord tau(const BraidWord& w) {
  BraidWord r;
  r.strands = w.strands;
  r.letters.reserve(w.size());
  for (int l : w.letters) {
    const int i = std::abs(l);
    r.letters.push_back((l > 0 ? 1 : -1) * (w.strands - i));
  }
  return r;
}

Permutation tau(const Permutation& p) {
  const Permutation omega = Permutation::reversal(p.size());
  return Permutation::compose(omega, Permutation::compose(p, omega));
}

std::pair<BraidWord, PermutationBraid> negative_split(int i, int n) {
  if (i < 1 || i > n - 1) {
    throw Error("generator index " + std::to_string(i) + " out of range for B_" +
                std::to_string(n));
  }
  // Delta = U_i sigma_i, so the permutation of U_i is omega composed with the
  // transposition (i, i+1).
  Permutation u = Permutation::reversal(n);
  std::swap(u.images[i - 1], u.images[i]);
  BraidWord neg = invert(delta(n));
  PermutationBraid frag(u);
  frag.word.strands = n;
  return {std::move(neg), std::move(frag)};
}

std::pair<int, BraidWord> delta_power_split(const BraidWord& w) {
  const int n = w.strands;
  int q = 0;
  for (int l : w.letters)
    if (l < 0) ++q;

  BraidWord positive;
  positive.strands = n;
  positive.letters.reserve(w.size() * static_cast<std::size_t>(std::max(n - 1, 1)));
  int seen_neg = 0;
  for (int l : w.letters) {
    if (l > 0) {
      const int twists = q - seen_neg;
      positive.letters.push_back(twists % 2 == 0 ? l : n - l);
    } else {
      ++seen_neg;
      const int twists = q - seen_neg;
      const auto [neg, frag] = negative_split(-l, n);
      (void)neg;
      for (int fl : frag.word.letters) {
        positive.letters.push_back(twists % 2 == 0 ? fl : n - fl);
      }
    }
  }
  return {q, std::move(positive)};
}

NormalForm left_normal_form(const BraidWord& w) {
  const int n = w.strands;
  auto [q, positive] = delta_power_split(free_reduce(w));
  std::vector<Permutation> fs = pack_letters(positive.letters, n);
  return build_form(n, -q, std::move(fs));
}

BraidWord to_word(const NormalForm& nf) {
  BraidWord w;
  w.strands = nf.strands;
  const BraidWord block = nf.inf >= 0 ? delta(nf.strands) : invert(delta(nf.strands));
  for (int j = 0; j < std::abs(nf.inf); ++j) {
    w.letters.insert(w.letters.end(), block.letters.begin(), block.letters.end());
  }
  for (const auto& f : nf.factors) {
    w.letters.insert(w.letters.end(), f.word.letters.begin(), f.word.letters.end());
  }
  return w;
}

bool words_equal(const BraidWord& w1, const BraidWord& w2) {
  if (w1.strands != w2.strands) {
    throw StrandMismatchError("words_equal: strand counts differ");
  }
  return left_normal_form(w1) == left_normal_form(w2);
}

std::pair<NormalForm, PermutationBraid> cycling(const NormalForm& nf) {
  if (nf.factors.empty()) {
    return {nf, PermutationBraid(Permutation::identity(nf.strands))};
  }
  const Permutation a =
      (nf.inf % 2 == 0) ? nf.factors.front().perm : tau(nf.factors.front().perm);
  std::vector<Permutation> fs;
  fs.reserve(nf.factors.size());
  for (std::size_t j = 1; j < nf.factors.size(); ++j) fs.push_back(nf.factors[j].perm);
  fs.push_back(a);
  NormalForm out = build_form(nf.strands, nf.inf, std::move(fs));
  PermutationBraid conj(a);
  conj.word.strands = nf.strands;
  return {std::move(out), std::move(conj)};
}

std::pair<NormalForm, std::vector<PermutationBraid>> decycling(const NormalForm& nf) {
  if (nf.factors.empty()) return {nf, {}};
  const Permutation& last = nf.factors.back().perm;
  // P_r X P_r^{-1} = Delta^k tau^k(P_r) P_1 ... P_{r-1}; as a positive
  // conjugator this is Delta . C with Delta = C P_r.
  const Permutation twisted = (nf.inf % 2 == 0) ? last : tau(last);
  std::vector<Permutation> fs;
  fs.reserve(nf.factors.size());
  fs.push_back(twisted);
  for (std::size_t j = 0; j + 1 < nf.factors.size(); ++j) fs.push_back(nf.factors[j].perm);
  NormalForm out = build_form(nf.strands, nf.inf, std::move(fs));

  const Permutation c =
      Permutation::compose(Permutation::reversal(nf.strands), last.inverse());
  std::vector<PermutationBraid> conj;
  conj.emplace_back(Permutation::reversal(nf.strands));
  if (!c.is_identity()) conj.emplace_back(c);
  for (auto& frag : conj) frag.word.strands = nf.strands;
  return {std::move(out), std::move(conj)};
}

SummitResult summit_form(const BraidWord& w) {
  SummitResult res;
  res.form = left_normal_form(w);
  if (res.form.factors.empty()) return res;  // pure Delta power is its own summit

  const int dlen = std::max(delta_length(w.strands), 1);
  const long hard_cap =
      16L + 4L * (static_cast<long>(w.size()) + res.form.canonical_length() +
                  std::abs(res.form.inf) + 2) *
                dlen;
  long total = 0;

  for (;;) {
    bool improved_round = false;

    // Cycling phase: walk the cycling orbit until inf improves or it closes.
    {
      std::set<std::string> seen;
      long streak = 0;
      long cap = static_cast<long>(std::max(res.form.canonical_length(), 1)) * dlen;
      while (!res.form.factors.empty()) {
        if (!seen.insert(form_key(res.form)).second) break;
        auto [next, conj] = cycling(res.form);
        res.witness.steps.push_back(std::move(conj));
        if (++total > hard_cap) {
          throw CapExceededError("summit_form: cycling/decycling budget exhausted");
        }
        if (next.inf > res.form.inf) {
          improved_round = true;
          streak = 0;
          seen.clear();
          cap = static_cast<long>(std::max(next.canonical_length(), 1)) * dlen;
        } else if (++streak > cap) {
          throw CapExceededError("summit_form: cycling exceeded its iteration cap");
        }
        res.form = std::move(next);
      }
    }

    // Decycling phase: walk until r drops (or inf rises) or the orbit closes.
    {
      std::set<std::string> seen;
      long streak = 0;
      long cap = static_cast<long>(std::max(res.form.canonical_length(), 1)) * dlen;
      while (!res.form.factors.empty()) {
        if (!seen.insert(form_key(res.form)).second) break;
        auto [next, conj] = decycling(res.form);
        for (auto& frag : conj) res.witness.steps.push_back(std::move(frag));
        if (++total > hard_cap) {
          throw CapExceededError("summit_form: cycling/decycling budget exhausted");
        }
        if (next.canonical_length() < res.form.canonical_length() ||
            next.inf > res.form.inf) {
          improved_round = true;
          streak = 0;
          seen.clear();
          cap = static_cast<long>(std::max(next.canonical_length(), 1)) * dlen;
        } else if (++streak > cap) {
          throw CapExceededError("summit_form: decycling exceeded its iteration cap");
        }
        res.form = std::move(next);
      }
    }

    if (!improved_round) break;
  }
  return res;
}

namespace {

std::vector<Permutation> all_nontrivial_perms(int n) {
  std::vector<int> base(n);
  for (int j = 0; j < n; ++j) base[j] = j;
  std::vector<Permutation> out;
  do {
    Permutation p;
    p.images = base;
    if (!p.is_identity()) out.push_back(std::move(p));
  } while (std::next_permutation(base.begin(), base.end()));
  return out;
}

bool lex_less(const NormalForm& a, const NormalForm& b) {
  if (a.inf != b.inf) return a.inf < b.inf;
  if (a.factors.size() != b.factors.size()) return a.factors.size() < b.factors.size();
  for (std::size_t j = 0; j < a.factors.size(); ++j) {
    if (a.factors[j].perm.images != b.factors[j].perm.images) {
      return a.factors[j].perm.images < b.factors[j].perm.images;
    }
  }
  return false;
}

}  // namespace

std::vector<NormalForm> summit_set(const BraidWord& w, const GarsideConfig& cfg) {
  if (w.strands > cfg.strand_cap) {
    throw CapExceededError("summit_set: strand count " + std::to_string(w.strands) +
                           " exceeds cap " + std::to_string(cfg.strand_cap));
  }
  const auto [start, witness] = summit_form(w);
  (void)witness;
  const auto frags = all_nontrivial_perms(w.strands);
  const int inf = start.inf;
  const int len = start.canonical_length();

  std::map<std::string, NormalForm> found;
  std::deque<std::string> queue;
  found.emplace(form_key(start), start);
  queue.push_back(form_key(start));
  while (!queue.empty()) {
    const NormalForm cur = found.at(queue.front());
    queue.pop_front();
    for (const auto& a : frags) {
      NormalForm cand = conjugate_by_fragment(cur, a);
      if (cand.inf != inf || cand.canonical_length() != len) continue;
      auto key = form_key(cand);
      if (found.emplace(key, std::move(cand)).second) queue.push_back(std::move(key));
    }
  }

  std::vector<NormalForm> out;
  out.reserve(found.size());
  for (auto& [key, nf] : found) out.push_back(std::move(nf));
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

std::optional<BraidWord> conjugate_test(const BraidWord& w1, const BraidWord& w2,
                                        const GarsideConfig& cfg) {
  if (w1.strands != w2.strands) {
    throw StrandMismatchError("conjugate_test: strand counts differ");
  }
  const int n = w1.strands;
  if (words_equal(w1, w2)) {
    return BraidWord(n, {});
  }
  if (exponent_sum(free_reduce(w1)) != exponent_sum(free_reduce(w2))) return std::nullopt;

  // Cycle types of the underlying permutations are a conjugacy invariant.
  auto cycle_type = [](const Permutation& p) {
    std::vector<int> lens;
    std::vector<bool> seen(p.size(), false);
    for (int j = 0; j < p.size(); ++j) {
      if (seen[j]) continue;
      int len = 0, cur = j;
      while (!seen[cur]) {
        seen[cur] = true;
        cur = p.images[cur];
        ++len;
      }
      lens.push_back(len);
    }
    std::sort(lens.begin(), lens.end());
    return lens;
  };
  if (cycle_type(permutation_of(w1)) != cycle_type(permutation_of(w2))) return std::nullopt;

  const auto s1 = summit_form(w1);
  const auto s2 = summit_form(w2);
  if (s1.form.inf != s2.form.inf ||
      s1.form.canonical_length() != s2.form.canonical_length()) {
    return std::nullopt;
  }

  // Search the summit set of w1 for the summit form of w2, remembering the
  // fragment chain that reaches each member.
  if (n > cfg.strand_cap) {
    throw CapExceededError("conjugate_test: strand count exceeds cap");
  }
  const auto frags = all_nontrivial_perms(n);
  const std::string target = form_key(s2.form);

  struct Node {
    NormalForm nf;
    int parent;
    int via;  // index into frags
  };
  std::vector<Node> nodes;
  std::map<std::string, int> index;
  nodes.push_back({s1.form, -1, -1});
  index.emplace(form_key(s1.form), 0);

  std::optional<int> goal;
  if (form_key(s1.form) == target) goal = 0;
  std::deque<int> queue{0};
  while (!queue.empty() && !goal) {
    const int cur = queue.front();
    queue.pop_front();
    for (std::size_t fi = 0; fi < frags.size() && !goal; ++fi) {
      NormalForm cand = conjugate_by_fragment(nodes[cur].nf, frags[fi]);
      if (cand.inf != s1.form.inf ||
          cand.canonical_length() != s1.form.canonical_length()) {
        continue;
      }
      auto key = form_key(cand);
      if (index.count(key)) continue;
      nodes.push_back({std::move(cand), cur, static_cast<int>(fi)});
      const int id = static_cast<int>(nodes.size()) - 1;
      index.emplace(std::move(key), id);
      if (form_key(nodes[id].nf) == target) goal = id;
      queue.push_back(id);
    }
  }
  if (!goal) return std::nullopt;

  BraidWord chain(n, {});
  for (int at = *goal; nodes[at].parent >= 0; at = nodes[at].parent) {
    BraidWord frag = permutation_braid_word(frags[nodes[at].via]);
    frag.strands = n;
    chain = compose(frag, chain);
  }
  // c = W1 . chain . W2^{-1} conjugates w1 to w2.
  const BraidWord c =
      compose(compose(s1.witness.word(n), chain), invert(s2.witness.word(n)));
  return free_reduce(c);
}

std::string serialize_normal_form(const NormalForm& nf) {
  std::ostringstream os;
  os << "Δ^" << nf.inf << " |";
  for (std::size_t j = 0; j < nf.factors.size(); ++j) {
    if (j > 0) os << " .";
    for (int l : nf.factors[j].word.letters) os << ' ' << l;
  }
  return os.str();
}

NormalForm parse_normal_form(const std::string& text, int strands) {
  std::istringstream is(text);
  std::string head;
  is >> head;
  const std::string marker = "Δ^";
  if (head.rfind(marker, 0) != 0) {
    throw ParseError("normal form must start with Δ^<k>", 1, 1);
  }
  NormalForm nf;
  nf.strands = strands;
  try {
    nf.inf = std::stoi(head.substr(marker.size()));
  } catch (const std::exception&) {
    throw ParseError("bad Δ exponent in '" + head + "'", 1, 1);
  }
  std::string bar;
  is >> bar;
  if (bar != "|") throw ParseError("expected '|' after Δ power", 1, 1);

  std::vector<std::vector<int>> factor_letters(1);
  std::string tok;
  while (is >> tok) {
    if (tok == ".") {
      factor_letters.emplace_back();
    } else {
      factor_letters.back().push_back(std::stoi(tok));
    }
  }
  if (factor_letters.size() == 1 && factor_letters.front().empty()) factor_letters.clear();

  for (const auto& ls : factor_letters) {
    BraidWord w(strands, ls);
    auto p = is_delta_fragment(w);
    if (!p || p->is_identity() || p->is_reversal()) {
      throw ParseError("factor is not a proper Δ fragment", 1, 1);
    }
    nf.factors.emplace_back(*p);
  }
  return nf;
}

}  // namespace holobraid
