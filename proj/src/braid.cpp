#include "holobraid/braid.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>
#include <utility>

namespace holobraid {

namespace {

void check_letter(int letter, int strands) {
  if (letter == 0 || std::abs(letter) > strands - 1) {
    throw Error("letter " + std::to_string(letter) +
                " out of range for B_" + std::to_string(strands));
  }
}

}  // namespace

BraidWord::BraidWord(int n, std::vector<int> ls) : strands(n), letters(std::move(ls)) {
  if (n < 1) throw Error("strand count must be >= 1");
  for (int l : letters) check_letter(l, n);
}

bool BraidWord::all_positive() const {
  return std::all_of(letters.begin(), letters.end(), [](int l) { return l > 0; });
}

bool BraidWord::all_negative() const {
  return std::all_of(letters.begin(), letters.end(), [](int l) { return l < 0; });
}

Permutation::Permutation(std::vector<int> imgs) : images(std::move(imgs)) {
  std::vector<bool> seen(images.size(), false);
  for (int v : images) {
    if (v < 0 || v >= static_cast<int>(images.size()) || seen[v]) {
      throw Error("image sequence is not a bijection");
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  Permutation p;
  p.images.resize(n);
  std::iota(p.images.begin(), p.images.end(), 0);
  return p;
}

Permutation Permutation::reversal(int n) {
  Permutation p;
  p.images.resize(n);
  for (int j = 0; j < n; ++j) p.images[j] = n - 1 - j;
  return p;
}

bool Permutation::is_identity() const {
  for (int j = 0; j < size(); ++j)
    if (images[j] != j) return false;
  return true;
}

bool Permutation::is_reversal() const {
  const int n = size();
  for (int j = 0; j < n; ++j)
    if (images[j] != n - 1 - j) return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.images.resize(images.size());
  for (int j = 0; j < size(); ++j) r.images[images[j]] = j;
  return r;
}

Permutation Permutation::compose(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw StrandMismatchError("permutation sizes differ");
  Permutation r;
  r.images.resize(a.size());
  for (int j = 0; j < a.size(); ++j) r.images[j] = a.images[b.images[j]];
  return r;
}

int Permutation::inversions() const {
  int count = 0;
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j)
      if (images[i] > images[j]) ++count;
  return count;
}

PermutationBraid::PermutationBraid(Permutation p)
    : perm(std::move(p)), word(permutation_braid_word(perm)) {}

BraidWord compose(const BraidWord& w1, const BraidWord& w2) {
  if (w1.strands != w2.strands) {
    throw StrandMismatchError("cannot compose words on " + std::to_string(w1.strands) +
                              " and " + std::to_string(w2.strands) + " strands");
  }
  BraidWord r = w1;
  r.letters.insert(r.letters.end(), w2.letters.begin(), w2.letters.end());
  return r;
}

BraidWord invert(const BraidWord& w) {
  BraidWord r;
  r.strands = w.strands;
  r.letters.reserve(w.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) r.letters.push_back(-*it);
  return r;
}

BraidWord free_reduce(const BraidWord& w) {
  BraidWord r;
  r.strands = w.strands;
  for (int l : w.letters) {
    if (!r.letters.empty() && r.letters.back() == -l) {
      r.letters.pop_back();
    } else {
      r.letters.push_back(l);
    }
  }
  return r;
}

Permutation permutation_of(const BraidWord& w) {
  Permutation p = Permutation::identity(w.strands);
  for (int l : w.letters) {
    const int i = std::abs(l) - 1;
    std::swap(p.images[i], p.images[i + 1]);
  }
  return p;
}

int exponent_sum(const BraidWord& w) {
  int s = 0;
  for (int l : w.letters) s += (l > 0) ? 1 : -1;
  return s;
}

BraidWord delta(int n) {
  if (n < 1) throw Error("delta requires n >= 1");
  BraidWord d;
  d.strands = n;
  for (int block = n - 1; block >= 1; --block)
    for (int i = 1; i <= block; ++i) d.letters.push_back(i);
  return d;
}

std::optional<Permutation> is_delta_fragment(const BraidWord& p) {
  if (!p.all_positive()) throw Error("is_delta_fragment requires a positive word");
  const int n = p.strands;
  std::vector<int> arr(n);
  std::iota(arr.begin(), arr.end(), 0);
  std::set<std::pair<int, int>> crossed;
  for (int l : p.letters) {
    const int i = l - 1;
    const auto pair = std::minmax(arr[i], arr[i + 1]);
    if (!crossed.insert(pair).second) return std::nullopt;
    std::swap(arr[i], arr[i + 1]);
  }
  return Permutation(std::move(arr));
}

BraidWord permutation_braid_word(const Permutation& perm) {
  std::vector<int> arr = perm.images;
  const int n = static_cast<int>(arr.size());
  std::vector<int> swaps;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int j = 0; j + 1 < n; ++j) {
      if (arr[j] > arr[j + 1]) {
        std::swap(arr[j], arr[j + 1]);
        swaps.push_back(j + 1);
        changed = true;
      }
    }
  }
  BraidWord w;
  w.strands = std::max(n, 1);
  w.letters.assign(swaps.rbegin(), swaps.rend());
  return w;
}

bool in_starting_set(const Permutation& p, const Permutation& p_inv, int i) {
  (void)p;
  return p_inv.images[i - 1] > p_inv.images[i];
}

bool in_finishing_set(const Permutation& p, int i) {
  return p.images[i - 1] > p.images[i];
}

bool positive_equivalent(const BraidWord& p1, const BraidWord& p2, std::size_t cap) {
  if (!p1.all_positive() || !p2.all_positive()) {
    throw Error("positive_equivalent requires positive words");
  }
  if (p1.strands != p2.strands) {
    throw StrandMismatchError("positive_equivalent: strand counts differ");
  }
  if (p1.size() != p2.size()) return false;  // relations preserve length
  if (p1.letters == p2.letters) return true;

  std::set<std::vector<int>> visited;
  std::deque<std::vector<int>> frontier;
  visited.insert(p1.letters);
  frontier.push_back(p1.letters);
  while (!frontier.empty()) {
    std::vector<int> cur = std::move(frontier.front());
    frontier.pop_front();
    auto try_push = [&](std::vector<int>&& next) {
      if (next == p2.letters) return true;
      if (visited.insert(next).second) {
        if (visited.size() > cap) {
          throw CapExceededError("positive_equivalent: visited-word cap exceeded");
        }
        frontier.push_back(std::move(next));
      }
      return false;
    };
    for (std::size_t j = 0; j + 1 < cur.size(); ++j) {
      if (std::abs(cur[j] - cur[j + 1]) >= 2) {  // far commutation
        std::vector<int> next = cur;
        std::swap(next[j], next[j + 1]);
        if (try_push(std::move(next))) return true;
      }
      if (j + 2 < cur.size() && cur[j] == cur[j + 2] &&
          std::abs(cur[j] - cur[j + 1]) == 1) {  // braid relation (i j i) -> (j i j)
        std::vector<int> next = cur;
        std::swap(next[j], next[j + 1]);
        next[j + 2] = next[j];
        if (try_push(std::move(next))) return true;
      }
    }
  }
  return false;
}

std::string serialize_word(const BraidWord& w) {
  std::ostringstream os;
  os << "n=" << w.strands;
  for (int l : w.letters) os << ' ' << l;
  return os.str();
}

namespace {

struct Token {
  std::string text;
  int line;
  int column;
};

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> tokens;
  int line = 1, column = 1;
  std::string cur;
  int tok_line = 1, tok_col = 1;
  auto flush = [&]() {
    if (!cur.empty()) {
      tokens.push_back({cur, tok_line, tok_col});
      cur.clear();
    }
  };
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      flush();
      if (c == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    } else {
      if (cur.empty()) {
        tok_line = line;
        tok_col = column;
      }
      cur.push_back(c);
      ++column;
    }
  }
  flush();
  return tokens;
}

int parse_int(const Token& tok, const std::string& what) {
  std::size_t pos = 0;
  int value = 0;
  try {
    value = std::stoi(tok.text, &pos);
  } catch (const std::exception&) {
    throw ParseError("expected " + what + ", got '" + tok.text + "'", tok.line, tok.column);
  }
  if (pos != tok.text.size()) {
    throw ParseError("trailing characters in " + what + " '" + tok.text + "'", tok.line,
                     tok.column);
  }
  return value;
}

}  // namespace

BraidWord parse_word(const std::string& text) {
  const auto tokens = tokenize(text);
  if (tokens.empty()) throw ParseError("empty braid-word input", 1, 1);
  const Token& head = tokens.front();
  if (head.text.rfind("n=", 0) != 0) {
    throw ParseError("braid word must start with n=<strands>", head.line, head.column);
  }
  Token count_tok{head.text.substr(2), head.line, head.column + 2};
  const int n = parse_int(count_tok, "strand count");
  if (n < 1) throw ParseError("strand count must be >= 1", head.line, head.column);
  BraidWord w;
  w.strands = n;
  for (std::size_t j = 1; j < tokens.size(); ++j) {
    const int letter = parse_int(tokens[j], "letter");
    if (letter == 0 || std::abs(letter) > n - 1) {
      throw ParseError("letter " + tokens[j].text + " out of range for B_" + std::to_string(n),
                       tokens[j].line, tokens[j].column);
    }
    w.letters.push_back(letter);
  }
  return w;
}

}  // namespace holobraid
