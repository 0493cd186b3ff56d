#include "schottky_lab/words.hpp"

#include <algorithm>
#include <cstdlib>

#include "schottky_lab/error.hpp"

namespace schottky_lab {
namespace {

void require_same_rank(const Word& a, const Word& b) {
  if (a.rank() != b.rank()) {
    throw SchottkyError(ErrorCode::RankMismatch, "ranks " + std::to_string(a.rank()) + " and " +
                                                     std::to_string(b.rank()) + " differ");
  }
}

// Is needle a cyclic rotation of hay? Both assumed equal length.
bool is_rotation(std::span<const int> hay, std::span<const int> needle) {
  if (hay.size() != needle.size()) return false;
  if (hay.empty()) return true;
  std::vector<int> doubled(hay.begin(), hay.end());
  doubled.insert(doubled.end(), hay.begin(), hay.end());
  return std::search(doubled.begin(), doubled.end(), needle.begin(), needle.end()) !=
         doubled.end();
}

}  // namespace

Word::Word(int rank, std::vector<int> letters) : rank_(rank), letters_(std::move(letters)) {
  if (rank < 1) throw SchottkyError(ErrorCode::InvalidArgument, "rank must be positive");
  for (int l : letters_) {
    if (l == 0 || std::abs(l) > rank) {
      throw SchottkyError(ErrorCode::InvalidIndex, "letter " + std::to_string(l) +
                                                       " outside rank " + std::to_string(rank));
    }
  }
}

Word Word::inverse() const {
  std::vector<int> out(letters_.rbegin(), letters_.rend());
  for (int& l : out) l = -l;
  return Word(rank_, std::move(out));
}

Word Word::operator*(const Word& rhs) const {
  require_same_rank(*this, rhs);
  std::vector<int> out = letters_;
  out.insert(out.end(), rhs.letters_.begin(), rhs.letters_.end());
  return Word(rank_, std::move(out));
}

Word Word::power(int k) const {
  if (k < 0) return inverse().power(-k);
  std::vector<int> out;
  out.reserve(letters_.size() * static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) out.insert(out.end(), letters_.begin(), letters_.end());
  return Word(rank_, std::move(out));
}

std::string Word::to_string() const {
  if (letters_.empty()) return "1";
  std::string out;
  if (rank_ <= 26) {
    for (int l : letters_) out += static_cast<char>((l > 0 ? 'a' : 'A') + std::abs(l) - 1);
    return out;
  }
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(letters_[i]);
  }
  return out;
}

Word reduce(const Word& w) {
  std::vector<int> stack;
  stack.reserve(w.size());
  for (int l : w.letters()) {
    if (!stack.empty() && stack.back() == -l) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return Word(w.rank(), std::move(stack));
}

CyclicReduction cyclic_reduce(const Word& w) {
  const Word r = reduce(w);
  const auto letters = r.letters();
  std::size_t lo = 0;
  std::size_t hi = letters.size();
  while (hi - lo >= 2 && letters[lo] == -letters[hi - 1]) {
    ++lo;
    --hi;
  }
  return {Word(r.rank(), std::vector<int>(letters.begin() + lo, letters.begin() + hi)),
          Word(r.rank(), std::vector<int>(letters.begin(), letters.begin() + lo))};
}

bool is_proper_power(const Word& w) {
  const Word core = cyclic_reduce(w).core;
  if (core.empty()) throw SchottkyError(ErrorCode::EmptyWord, "word reduces to the identity");
  const auto letters = core.letters();
  const std::size_t n = letters.size();
  for (std::size_t period = 1; period <= n / 2; ++period) {
    if (n % period != 0) continue;
    bool periodic = true;
    for (std::size_t i = period; i < n && periodic; ++i) periodic = letters[i] == letters[i - period];
    if (periodic) return true;
  }
  return false;
}

bool are_conjugate(const Word& w1, const Word& w2, bool allow_inverse) {
  require_same_rank(w1, w2);
  const Word c1 = cyclic_reduce(w1).core;
  const Word c2 = cyclic_reduce(w2).core;
  if (is_rotation(c1.letters(), c2.letters())) return true;
  return allow_inverse && is_rotation(c1.letters(), c2.inverse().letters());
}

PinchabilityReport pinchable_algebraic_check(std::span<const Word> words) {
  if (words.empty()) throw SchottkyError(ErrorCode::InvalidArgument, "no words to check");
  for (const Word& w : words) require_same_rank(words.front(), w);

  PinchabilityReport report;
  report.pass = true;
  for (const Word& w : words) {
    WordCheck check{w, cyclic_reduce(w).core};
    check.nontrivial = !check.core.empty();
    check.not_proper_power = check.nontrivial && !is_proper_power(w);
    report.pass = report.pass && check.nontrivial && check.not_proper_power;
    report.words.push_back(std::move(check));
  }
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = i + 1; j < words.size(); ++j) {
      PairCheck pair{i, j, !are_conjugate(words[i], words[j], true)};
      report.pass = report.pass && pair.non_conjugate;
      report.pairs.push_back(pair);
    }
  }
  return report;
}

Word pinchable_family(int n) {
  if (n < 1) throw SchottkyError(ErrorCode::InvalidIndex, "family index must be at least 1");
  const Word b1b2(2, {1, 2});
  const Word b2b1(2, {2, 1});
  return reduce(b1b2.power(n) * b2b1.power(-n));
}

Genus3Words genus3_pinchable_words() {
  return {Word(3, {1, 2, -3, -1, 3, -2}), Word(3, {1, 2, -1, -2}), Word(3, {1, -3, -1, 3})};
}

}  // namespace schottky_lab
