#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace schottky_lab {

// A word in the free group of rank p. Letters are signed generator indices:
// +i is generator i, -i its inverse, 1 <= i <= p. Words need not be reduced.
class Word {
 public:
  // Throws InvalidIndex for a letter outside [-rank, -1] u [1, rank] and
  // InvalidArgument for rank < 1.
  Word(int rank, std::vector<int> letters);
  Word() = default;  // empty word of rank 1

  static Word identity(int rank) { return Word(rank, {}); }
  static Word generator(int rank, int index) { return Word(rank, {index}); }

  int rank() const noexcept { return rank_; }
  std::span<const int> letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  int operator[](std::size_t i) const { return letters_[i]; }

  // Formal inverse: reversed letters, negated exponents.
  Word inverse() const;

  // Concatenation without reduction. Throws RankMismatch.
  Word operator*(const Word& rhs) const;

  Word power(int k) const;

  bool operator==(const Word& other) const = default;
  auto operator<=>(const Word& other) const = default;

  // "abAB" style for rank <= 26 (capital = inverse), signed integers otherwise.
  std::string to_string() const;

 private:
  int rank_ = 1;
  std::vector<int> letters_;
};

Word reduce(const Word& w);

struct CyclicReduction {
  Word core;
  Word conjugator;  // w = conjugator * core * conjugator^-1 after reduction
};

CyclicReduction cyclic_reduce(const Word& w);

// True iff the cyclically reduced core is u^k for some k >= 2.
// Throws EmptyWord when w reduces to the identity.
bool is_proper_power(const Word& w);

// Cores equal up to cyclic rotation (or rotation of the inverse when
// allow_inverse is set). Throws RankMismatch.
bool are_conjugate(const Word& w1, const Word& w2, bool allow_inverse);

struct WordCheck {
  Word word;
  Word core;
  bool nontrivial = false;
  bool not_proper_power = false;
};

struct PairCheck {
  std::size_t first = 0;
  std::size_t second = 0;
  bool non_conjugate = false;  // cyclic subgroups not conjugate
};

struct PinchabilityReport {
  std::vector<WordCheck> words;
  std::vector<PairCheck> pairs;
  bool pass = false;
};

// The algebraic half of pinchability: every word nontrivial and not a proper
// power, every pair generating non-conjugate cyclic subgroups. Primitivity is
// not tested. Throws InvalidArgument on an empty list, RankMismatch on mixed ranks.
PinchabilityReport pinchable_algebraic_check(std::span<const Word> words);

// w_n = (b1 b2)^n (b2 b1)^-n in rank 2, length 4n. Throws InvalidIndex for n < 1.
Word pinchable_family(int n);

struct Genus3Words {
  Word r1;
  Word r2;
  Word r3;
};

// r1 = d1 d2 d3^-1 d1^-1 d3 d2^-1, r2 = [d1, d2], r3 = d1 d3^-1 d1^-1 d3.
Genus3Words genus3_pinchable_words();

}  // namespace schottky_lab
