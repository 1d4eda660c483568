#pragma once

// Braid words on n strands: construction, Markov-type moves and the
// classical transverse data (algebraic length, self-linking, components).

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gridhfl/errors.hpp"

namespace gridhfl {

/// A braid word in B_n. Letter e encodes sigma_{|e|}^{sign(e)}.
/// Equality is literal sequence equality; no free reduction is applied.
class BraidWord {
 public:
  BraidWord() : strands_(1) {}

  explicit BraidWord(int strands, std::vector<int> letters = {})
      : strands_(strands), letters_(std::move(letters)) {
    if (strands_ < 1) throw InputError("braid word needs at least one strand");
    for (int e : letters_) {
      if (e == 0 || std::abs(e) > strands_ - 1) {
        throw InputError("letter " + std::to_string(e) + " out of range for B_" +
                         std::to_string(strands_));
      }
    }
  }

  int strands() const noexcept { return strands_; }
  const std::vector<int>& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  /// Concatenation; both words must live on the same strand count.
  BraidWord operator*(const BraidWord& rhs) const {
    if (rhs.strands_ != strands_) throw InputError("strand counts differ in product");
    std::vector<int> out = letters_;
    out.insert(out.end(), rhs.letters_.begin(), rhs.letters_.end());
    return BraidWord(strands_, std::move(out));
  }

  BraidWord inverse() const {
    std::vector<int> out(letters_.rbegin(), letters_.rend());
    for (int& e : out) e = -e;
    return BraidWord(strands_, std::move(out));
  }

  BraidWord power(int exponent) const {
    if (exponent < 0) return inverse().power(-exponent);
    BraidWord out(strands_);
    for (int t = 0; t < exponent; ++t) out = out * *this;
    return out;
  }

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_;
  std::vector<int> letters_;
};

/// Text form `n: e1 e2 ... ek`.
inline std::string format_braid(const BraidWord& w) {
  std::ostringstream os;
  os << w.strands() << ':';
  for (int e : w.letters()) os << ' ' << e;
  return os.str();
}

inline BraidWord parse_braid(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw InputError("braid word must look like 'n: e1 e2 ...'");
  std::istringstream head{std::string(text.substr(0, colon))};
  int n = 0;
  if (!(head >> n)) throw InputError("bad strand count in braid word");
  std::string extra;
  if (head >> extra) throw InputError("unexpected text before ':' in braid word");
  std::istringstream body{std::string(text.substr(colon + 1))};
  std::vector<int> letters;
  std::string tok;
  while (body >> tok) {
    std::size_t used = 0;
    int e = 0;
    try {
      e = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw InputError("bad braid letter '" + tok + "'");
    }
    if (used != tok.size()) throw InputError("bad braid letter '" + tok + "'");
    letters.push_back(e);
  }
  return BraidWord(n, std::move(letters));
}

inline int algebraic_length(const BraidWord& w) {
  int a = 0;
  for (int e : w.letters()) a += e > 0 ? 1 : -1;
  return a;
}

/// sl(T_w) = a(w) - n.
inline int self_linking(const BraidWord& w) { return algebraic_length(w) - w.strands(); }

/// Underlying permutation of the closed braid: result[p] is the top
/// position (0-based) reached by the strand starting at bottom position p.
inline std::vector<int> braid_permutation(const BraidWord& w) {
  const int n = w.strands();
  std::vector<int> at(n);  // at[position] = strand
  std::iota(at.begin(), at.end(), 0);
  for (int e : w.letters()) {
    const int i = std::abs(e) - 1;
    std::swap(at[i], at[i + 1]);
  }
  std::vector<int> dest(n);
  for (int pos = 0; pos < n; ++pos) dest[at[pos]] = pos;
  return dest;
}

struct ComponentPartition {
  /// Cycles of 1-based strand indices, each sorted ascending; cycles are
  /// ordered by least element, which fixes the component labels T_1..T_l.
  std::vector<std::vector<int>> cycles;

  int component_count() const noexcept { return static_cast<int>(cycles.size()); }

  /// Label (0-based) of the component containing 1-based strand s.
  int component_of(int s) const {
    for (std::size_t c = 0; c < cycles.size(); ++c) {
      if (std::find(cycles[c].begin(), cycles[c].end(), s) != cycles[c].end()) return static_cast<int>(c);
    }
    throw InputError("strand " + std::to_string(s) + " not in partition");
  }
};

inline ComponentPartition component_partition(const BraidWord& w) {
  const auto dest = braid_permutation(w);
  const int n = w.strands();
  std::vector<bool> seen(n, false);
  ComponentPartition out;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<int> cycle;
    for (int t = s; !seen[t]; t = dest[t]) {
      seen[t] = true;
      cycle.push_back(t + 1);
    }
    std::sort(cycle.begin(), cycle.end());
    out.cycles.push_back(std::move(cycle));
  }
  return out;
}

/// Deletes the strands not in `keep` (1-based bottom positions). A letter
/// survives, re-indexed, iff both strands it crosses are kept.
inline BraidWord restrict_to_strands(const BraidWord& w, const std::vector<int>& keep) {
  const int n = w.strands();
  std::vector<bool> kept(n, false);
  for (int s : keep) {
    if (s < 1 || s > n) throw InputError("strand " + std::to_string(s) + " out of range");
    kept[s - 1] = true;
  }
  for (const auto& cycle : component_partition(w).cycles) {
    const bool first = kept[cycle.front() - 1];
    for (int s : cycle) {
      if (kept[s - 1] != first) throw InputError("strand selection splits a component of the closed braid");
    }
  }
  const int m = static_cast<int>(std::count(kept.begin(), kept.end(), true));
  if (m == 0) throw InputError("strand selection is empty");

  std::vector<int> at(n);
  std::iota(at.begin(), at.end(), 0);
  std::vector<int> letters;
  for (int e : w.letters()) {
    const int i = std::abs(e) - 1;
    if (kept[at[i]] && kept[at[i + 1]]) {
      int rank = 0;
      for (int p = 0; p < i; ++p) rank += kept[at[p]] ? 1 : 0;
      letters.push_back(e > 0 ? rank + 1 : -(rank + 1));
    }
    std::swap(at[i], at[i + 1]);
  }
  return BraidWord(m, std::move(letters));
}

/// sl of every sublink, keyed by sorted 0-based component labels.
struct SelfLinkingData {
  std::map<std::vector<int>, int> entries;

  friend bool operator==(const SelfLinkingData&, const SelfLinkingData&) = default;
};

inline SelfLinkingData self_linking_data(const BraidWord& w) {
  const auto parts = component_partition(w);
  const int l = parts.component_count();
  if (l > 20) throw InputError("too many components for self-linking data");
  SelfLinkingData out;
  for (unsigned mask = 1; mask < (1u << l); ++mask) {
    std::vector<int> labels;
    std::vector<int> strands;
    for (int c = 0; c < l; ++c) {
      if (mask & (1u << c)) {
        labels.push_back(c);
        strands.insert(strands.end(), parts.cycles[c].begin(), parts.cycles[c].end());
      }
    }
    out.entries[labels] = self_linking(restrict_to_strands(w, strands));
  }
  return out;
}

/// u w u^{-1}.
inline BraidWord conjugate(const BraidWord& w, const BraidWord& u) { return u * w * u.inverse(); }

/// Moves the first `shift` letters to the end (a conjugation by them).
inline BraidWord rotate_letters(const BraidWord& w, std::size_t shift) {
  std::vector<int> out = w.letters();
  if (!out.empty()) std::rotate(out.begin(), out.begin() + static_cast<long>(shift % out.size()), out.end());
  return BraidWord(w.strands(), std::move(out));
}

/// w in B_n  ->  w sigma_n^{sign} in B_{n+1}.
inline BraidWord stabilize(const BraidWord& w, int sign) {
  if (sign != 1 && sign != -1) throw InputError("stabilization sign must be +1 or -1");
  std::vector<int> out = w.letters();
  out.push_back(sign * w.strands());
  return BraidWord(w.strands() + 1, std::move(out));
}

/// Inverse of stabilize: needs the last letter to be the only sigma_{n-1}^{+-1}.
inline BraidWord destabilize(const BraidWord& w) {
  const int top = w.strands() - 1;
  if (top < 1 || w.empty() || std::abs(w.letters().back()) != top) {
    throw InputError("word does not end in sigma_{n-1}^{+-1}");
  }
  const auto uses = std::count_if(w.letters().begin(), w.letters().end(),
                                  [top](int e) { return std::abs(e) == top; });
  if (uses != 1) throw InputError("sigma_{n-1} occurs more than once; not destabilizable");
  std::vector<int> out(w.letters().begin(), w.letters().end() - 1);
  return BraidWord(top, std::move(out));
}

namespace detail {

inline void require_no_first_generator(const BraidWord& frag, const char* name) {
  for (int e : frag.letters()) {
    if (std::abs(e) == 1) throw InputError(std::string("fragment ") + name + " uses sigma_1");
  }
}

inline BraidWord sigma1_power(int n, int m) { return BraidWord(n, std::vector<int>(std::abs(m), m > 0 ? 1 : -1)); }

}  // namespace detail

/// (a s1 b s1^-1 c,  a s1^-1 b s1 c). Fragments must avoid sigma_1.
inline std::pair<BraidWord, BraidWord> exchange_move(const BraidWord& a, const BraidWord& b, const BraidWord& c) {
  detail::require_no_first_generator(a, "a");
  detail::require_no_first_generator(b, "b");
  detail::require_no_first_generator(c, "c");
  const int n = a.strands();
  const auto up = detail::sigma1_power(n, 1);
  const auto down = detail::sigma1_power(n, -1);
  return {a * up * b * down * c, a * down * b * up * c};
}

struct FlypePair {
  BraidWord w1;
  BraidWord w2;
  /// True when equal self-linking data is guaranteed: m odd, or m even and
  /// the two strands crossing in sigma_1^m lie on one component of T_{w1}.
  bool sl_data_guaranteed = false;
};

/// w1 = a s1^m b s1^-1 c,  w2 = a s1^-1 b s1^m c.
inline FlypePair negative_flype_pair(const BraidWord& a, const BraidWord& b, const BraidWord& c, int m) {
  if (m < 1) throw InputError("flype exponent must be >= 1");
  detail::require_no_first_generator(a, "a");
  detail::require_no_first_generator(b, "b");
  detail::require_no_first_generator(c, "c");
  const int n = a.strands();
  FlypePair out{a * detail::sigma1_power(n, m) * b * detail::sigma1_power(n, -1) * c,
                a * detail::sigma1_power(n, -1) * b * detail::sigma1_power(n, m) * c, false};
  if (m % 2 == 1) {
    out.sl_data_guaranteed = true;
  } else {
    // a never touches positions 1 and 2 as a pair, so the strands there after a
    // are the bottom strands 1 and 2 (a fixes position 1).
    std::vector<int> at(n);
    std::iota(at.begin(), at.end(), 1);
    for (int e : a.letters()) std::swap(at[std::abs(e) - 1], at[std::abs(e)]);
    const auto parts = component_partition(out.w1);
    out.sl_data_guaranteed = parts.component_of(at[0]) == parts.component_of(at[1]);
  }
  return out;
}

/// psi_{j,k,l}: B_j -> B_k, sigma_i -> sigma_{i+l}.
inline BraidWord translate_psi(const BraidWord& g, int j, int k, int l) {
  if (g.strands() != j) throw InputError("psi: word does not live in B_j");
  if (j < 1 || j > k || l < 0 || l > k - j) throw InputError("psi: need 1 <= j <= k and 0 <= l <= k - j");
  std::vector<int> out;
  out.reserve(g.length());
  for (int e : g.letters()) out.push_back(e > 0 ? e + l : e - l);
  return BraidWord(k, std::move(out));
}

/// g (n strands) # h (m strands) as the (n+m-1)-strand word g . psi(h).
inline BraidWord connected_sum_word(const BraidWord& g, const BraidWord& h) {
  const int n = g.strands();
  const int m = h.strands();
  const int total = n + m - 1;
  const BraidWord lifted_g(total, g.letters());
  return lifted_g * translate_psi(h, m, total, n - 1);
}

struct QuasipositiveFactor {
  BraidWord conjugator;
  int generator = 1;
};

/// Product of u sigma_i u^{-1} over the factors.
inline BraidWord quasipositive_witness(int strands, const std::vector<QuasipositiveFactor>& factors) {
  BraidWord out(strands);
  for (const auto& f : factors) {
    if (f.conjugator.strands() != strands) throw InputError("conjugator on wrong strand count");
    out = out * conjugate(BraidWord(strands, {f.generator}), f.conjugator);
  }
  return out;
}

/// Removes the positive letter at 1-based `position`.
inline BraidWord resolve_positive_letter(const BraidWord& w, std::size_t position) {
  if (position < 1 || position > w.length()) throw InputError("letter position out of range");
  if (w.letters()[position - 1] < 0) throw InputError("letter to resolve is negative");
  std::vector<int> out = w.letters();
  out.erase(out.begin() + static_cast<long>(position - 1));
  return BraidWord(w.strands(), std::move(out));
}

/// Cancels adjacent e, -e pairs until none remain.
inline BraidWord free_reduce(const BraidWord& w) {
  std::vector<int> out;
  for (int e : w.letters()) {
    if (!out.empty() && out.back() == -e) {
      out.pop_back();
    } else {
      out.push_back(e);
    }
  }
  return BraidWord(w.strands(), std::move(out));
}

}  // namespace gridhfl
