#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "schottky_lab/error.hpp"
#include "schottky_lab/words.hpp"

using namespace schottky_lab;

namespace {

ErrorCode code_of(const auto& fn) {
  try {
    fn();
  } catch (const SchottkyError& e) {
    return e.code();
  }
  FAIL("expected SchottkyError");
  return ErrorCode::InvalidArgument;
}

Word w2(std::vector<int> letters) { return Word(2, std::move(letters)); }

std::vector<int> as_vector(const Word& w) { return {w.letters().begin(), w.letters().end()}; }

Word random_word(oracle::Rng& rng, int rank, int max_len) {
  std::vector<int> letters;
  const int len = rng.integer(0, max_len);
  for (int i = 0; i < len; ++i) {
    int l = rng.integer(1, rank);
    if (rng.integer(0, 1)) l = -l;
    letters.push_back(l);
  }
  return Word(rank, letters);
}

}  // namespace

TEST_CASE("word construction") {
  CHECK(Word(3, {1, -3, 2}).size() == 3);
  CHECK(code_of([] { Word(2, {3}); }) == ErrorCode::InvalidIndex);
  CHECK(code_of([] { Word(2, {0}); }) == ErrorCode::InvalidIndex);
  CHECK(code_of([] { Word(0, {}); }) == ErrorCode::InvalidArgument);
  CHECK(Word::identity(2).empty());
  CHECK(Word().rank() == 1);
  CHECK(w2({1, 2, -1, -2}).to_string() == "abAB");
  CHECK(Word::identity(2).to_string() == "1");
}

TEST_CASE("inverse, product and power") {
  const Word w = w2({1, 2, -1});
  CHECK(as_vector(w.inverse()) == std::vector<int>{1, -2, -1});
  CHECK(as_vector(w * w2({2})) == std::vector<int>{1, 2, -1, 2});
  CHECK(code_of([&] { (void)(w * Word(3, {3})); }) == ErrorCode::RankMismatch);
  CHECK(as_vector(w2({1, 2}).power(2)) == std::vector<int>{1, 2, 1, 2});
  CHECK(as_vector(w2({1, 2}).power(-1)) == std::vector<int>{-2, -1});
  CHECK(w2({1, 2}).power(0).empty());
}

TEST_CASE("free reduction agrees with the stack oracle") {
  CHECK(reduce(w2({1, -1, 2})).size() == 1);
  CHECK(reduce(w2({1, 2, -2, -1})).empty());
  oracle::Rng rng(21);
  for (int trial = 0; trial < 2000; ++trial) {
    const Word w = random_word(rng, 3, 12);
    CHECK(as_vector(reduce(w)) == oracle::free_reduce(as_vector(w)));
  }
}

TEST_CASE("reduction properties") {
  oracle::Rng rng(22);
  for (int trial = 0; trial < 1000; ++trial) {
    const Word w = random_word(rng, 2, 10);
    const Word r = reduce(w);
    CHECK(reduce(r) == r);
    CHECK(reduce(w * w.inverse()).empty());
    for (std::size_t i = 1; i < r.size(); ++i) CHECK(r[i] != -r[i - 1]);
  }
}

TEST_CASE("cyclic reduction") {
  const auto cr = cyclic_reduce(w2({1, 2, 1, -1, -1}));
  CHECK(as_vector(cr.core) == std::vector<int>{2});
  CHECK(as_vector(cr.conjugator) == std::vector<int>{1});

  oracle::Rng rng(23);
  for (int trial = 0; trial < 1000; ++trial) {
    const Word w = random_word(rng, 2, 12);
    const auto c = cyclic_reduce(w);
    CHECK(as_vector(c.core) == oracle::cyclic_core(as_vector(w)));
    CHECK(reduce(c.conjugator * c.core * c.conjugator.inverse()) == reduce(w));
  }
}

TEST_CASE("proper powers") {
  CHECK(is_proper_power(w2({1, 1})));
  CHECK(is_proper_power(w2({1, 2, 1, 2})));
  CHECK(is_proper_power(w2({2, 1, 2, 1, 2, -2})));  // reduces to (ba)^2 after cancelling
  CHECK(is_proper_power(w2({-2, 1, 2, 1, 2, 2})));  // b^-1 (ab)^2 b
  CHECK_FALSE(is_proper_power(w2({-2, 1, 2, 1, 2})));
  CHECK_FALSE(is_proper_power(w2({1})));
  CHECK_FALSE(is_proper_power(w2({1, 2, -1, -2})));
  CHECK(code_of([] { (void)is_proper_power(w2({1, -1})); }) == ErrorCode::EmptyWord);
}

TEST_CASE("proper power against the prefix oracle on short rank-3 words") {
  int checked = 0;
  oracle::for_each_letter_sequence(3, 5, true, [&](const std::vector<int>& letters) {
    if (oracle::free_reduce(letters).empty()) return;
    CHECK(is_proper_power(Word(3, letters)) == oracle::prefix_power_oracle(letters));
    ++checked;
  });
  CHECK(checked > 9000);
}

TEST_CASE("conjugacy") {
  CHECK(are_conjugate(w2({1, 2}), w2({2, 1}), false));
  CHECK(are_conjugate(w2({1, 2, 2}), w2({-1, 2, 2, 1, 1}), false));
  CHECK_FALSE(are_conjugate(w2({1, 2}), w2({-1, -2}), false));
  CHECK(are_conjugate(w2({1, 2}), w2({-1, -2}), true));
  CHECK_FALSE(are_conjugate(w2({1}), w2({2}), true));
  CHECK(code_of([] { (void)are_conjugate(w2({1}), Word(3, {1}), false); }) ==
        ErrorCode::RankMismatch);

  // random conjugates stay conjugate; the inverse needs allow_inverse
  oracle::Rng rng(24);
  for (int trial = 0; trial < 500; ++trial) {
    const Word w = random_word(rng, 2, 8);
    if (reduce(w).empty()) continue;
    const Word g = random_word(rng, 2, 5);
    const Word conj = g * w * g.inverse();
    CHECK(are_conjugate(w, conj, false));
    CHECK(are_conjugate(w, conj.inverse(), true));
  }
}

TEST_CASE("conjugacy is an equivalence on short words") {
  std::vector<Word> words;
  oracle::for_each_letter_sequence(2, 3, false, [&](const std::vector<int>& l) { words.emplace_back(2, l); });
  for (const auto& a : words) {
    CHECK(are_conjugate(a, a, false));
    for (const auto& b : words) {
      CHECK(are_conjugate(a, b, false) == are_conjugate(b, a, false));
      CHECK(are_conjugate(a, b, true) ==
            (are_conjugate(a, b, false) || are_conjugate(a, b.inverse(), false)));
    }
  }
}

TEST_CASE("pinchable family") {
  CHECK(as_vector(pinchable_family(1)) == std::vector<int>{1, 2, -1, -2});
  for (int n = 1; n <= 6; ++n) CHECK(pinchable_family(n).size() == static_cast<std::size_t>(4 * n));
  CHECK(code_of([] { (void)pinchable_family(0); }) == ErrorCode::InvalidIndex);

  std::vector<Word> family;
  for (int n = 1; n <= 6; ++n) family.push_back(pinchable_family(n));
  const auto report = pinchable_algebraic_check(family);
  CHECK(report.pass);
  CHECK(report.pairs.size() == 15);
  for (const auto& p : report.pairs) CHECK(p.non_conjugate);
}

TEST_CASE("genus-3 words") {
  const auto g = genus3_pinchable_words();
  CHECK(as_vector(g.r1) == std::vector<int>{1, 2, -3, -1, 3, -2});
  CHECK(as_vector(g.r2) == std::vector<int>{1, 2, -1, -2});
  CHECK(as_vector(g.r3) == std::vector<int>{1, -3, -1, 3});
  const std::vector<Word> words{g.r1, g.r2, g.r3};
  const auto report = pinchable_algebraic_check(words);
  CHECK(report.pass);
  for (const auto& w : report.words) {
    CHECK(w.nontrivial);
    CHECK(w.not_proper_power);
  }
}

TEST_CASE("pinchability check failures") {
  const std::vector<Word> conj{w2({1, 2}), w2({2, 1})};
  const auto r = pinchable_algebraic_check(conj);
  CHECK_FALSE(r.pass);
  REQUIRE(r.pairs.size() == 1);
  CHECK_FALSE(r.pairs[0].non_conjugate);

  const std::vector<Word> inv{w2({1, 2}), w2({-2, -1})};
  CHECK_FALSE(pinchable_algebraic_check(inv).pass);

  const std::vector<Word> power{w2({1, 1})};
  const auto p = pinchable_algebraic_check(power);
  CHECK_FALSE(p.pass);
  CHECK_FALSE(p.words[0].not_proper_power);

  const std::vector<Word> trivial{w2({1, -1})};
  const auto t = pinchable_algebraic_check(trivial);
  CHECK_FALSE(t.pass);
  CHECK_FALSE(t.words[0].nontrivial);

  CHECK(code_of([] { (void)pinchable_algebraic_check(std::vector<Word>{}); }) ==
        ErrorCode::InvalidArgument);
}

TEST_CASE("documented examples") {
  const Word a = w2({1}), b = w2({2});
  CHECK(reduce(a * a.inverse()).empty());
  CHECK(as_vector(reduce(w2({1, 2, -2, 1}))) == std::vector<int>{1, 1});
  const auto cr = cyclic_reduce(w2({-2, 1, 2}));
  CHECK(as_vector(cr.core) == std::vector<int>{1});
  CHECK(as_vector(cr.conjugator) == std::vector<int>{-2});
  const auto same = cyclic_reduce(w2({1, 2, -1, -2}));
  CHECK(as_vector(same.core) == std::vector<int>{1, 2, -1, -2});
  CHECK(same.conjugator.empty());
  CHECK(cyclic_reduce(pinchable_family(2)).core == pinchable_family(2));
  CHECK(cyclic_reduce(pinchable_family(2)).core.size() == 8);

  CHECK(is_proper_power(a * a));
  CHECK(is_proper_power((a * b).power(3)));
  for (int n = 1; n <= 6; ++n) CHECK_FALSE(is_proper_power(pinchable_family(n)));

  CHECK(are_conjugate(a * b, b * a, false));
  CHECK_FALSE(are_conjugate(pinchable_family(2), pinchable_family(3), true));
  const auto g = genus3_pinchable_words();
  CHECK_FALSE(are_conjugate(g.r2, g.r3, true));

  CHECK_FALSE(pinchable_algebraic_check(std::vector<Word>{a, a}).pass);
  CHECK_FALSE(pinchable_algebraic_check(std::vector<Word>{a * a, b}).pass);
  CHECK(pinchable_family(2).size() == 8);
  CHECK(g.r1.size() == 6);
  CHECK(g.r2.size() == 4);
}

TEST_CASE("cyclic core is never longer than the reduced word") {
  oracle::Rng rng(25);
  for (int trial = 0; trial < 1000; ++trial) {
    const Word w = random_word(rng, 3, 14);
    CHECK(cyclic_reduce(w).core.size() <= reduce(w).size());
  }
}

TEST_CASE("proper power against the prefix oracle on rank-2 words up to length 8") {
  std::size_t checked = 0;
  oracle::for_each_letter_sequence(2, 8, false, [&](const std::vector<int>& letters) {
    CHECK(is_proper_power(Word(2, letters)) == oracle::prefix_power_oracle(letters));
    ++checked;
  });
  CHECK(checked == 13120);
}

TEST_CASE("family members are pairwise non-conjugate") {
  for (int n = 1; n <= 6; ++n) {
    for (int m = n + 1; m <= 6; ++m) {
      CHECK_FALSE(are_conjugate(pinchable_family(n), pinchable_family(m), true));
    }
  }
}

TEST_CASE("conjugacy is transitive on a random sample") {
  oracle::Rng rng(26);
  for (int trial = 0; trial < 300; ++trial) {
    const Word w = random_word(rng, 2, 6);
    if (reduce(w).empty()) continue;
    const Word g = random_word(rng, 2, 4), h = random_word(rng, 2, 4);
    const Word u = g * w * g.inverse(), v = h * u * h.inverse();
    CHECK(are_conjugate(w, u, false));
    CHECK(are_conjugate(u, v, false));
    CHECK(are_conjugate(w, v, false));
  }
}
