// Acceptance checks: one line per criterion.
//   PASS       the criterion holds as stated
//   DEVIATION  the stated expectation is provably wrong; the corrected claim
//              is checked instead and the detail line says what differs
//   FAIL       anything else
// Exit status is non-zero iff some criterion FAILs.

#include <algorithm>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "support.hpp"
#include "tribraid/burau.hpp"
#include "tribraid/classify.hpp"
#include "tribraid/conjugacy.hpp"
#include "tribraid/harness.hpp"
#include "tribraid/jones.hpp"

using namespace tribraid;
using namespace tribraid::testing;

namespace {

enum class Status { Pass, Deviation, Fail };

struct Outcome {
  Status status;
  std::string detail;
};

Outcome pass(std::string d = {}) { return {Status::Pass, std::move(d)}; }
Outcome fail(std::string d) { return {Status::Fail, std::move(d)}; }
Outcome check(bool ok, std::string d) { return {ok ? Status::Pass : Status::Fail, std::move(d)}; }

struct ReferenceRow {
  FlypeTriple triple;
  int beta;
  int c_b;
};

// Reference list of non-transversally-simple closed 3-braids, c_b <= 12.
const std::vector<ReferenceRow> kTable3 = {
    {{3, -2, 2, -1}, -1, 8},    {{5, -2, 2, -1}, 1, 10},    {{3, -2, 4, -1}, 1, 10},   {{3, -4, 2, -1}, -3, 10},
    {{-5, -2, 2, -1}, -9, 10},  {{3, -2, -4, -1}, -7, 10},  {{5, 3, 3, -1}, 7, 12},    {{7, -2, 2, -1}, 3, 12},
    {{5, -2, 4, -1}, 3, 12},    {{3, -2, 6, -1}, 3, 12},    {{3, -6, 2, -1}, -5, 12},  {{5, -4, 2, -1}, -1, 12},
    {{3, -4, 4, -1}, -1, 12},   {{5, -3, 3, -1}, 1, 12},    {{-7, -2, 2, -1}, -11, 12}, {{-5, -3, 3, -1}, -9, 12},
    {{-3, -4, 4, -1}, -7, 12},  {{-3, -3, 5, -1}, -5, 12},  {{-3, -4, -4, -1}, -15, 12}, {{-3, -5, 3, -1}, -9, 12},
};

std::set<FlypeTriple> unordered(const FlypeTriple& t) { return {t, flype_partner(t)}; }

std::pair<XuSymbol, XuSymbol> class_pair(const FlypeTriple& t) {
  XuSymbol a = xu_invariant(flype_word(t));
  XuSymbol b = xu_invariant(flype_word(flype_partner(t)));
  if (XuSymbolLess{}(b, a)) std::swap(a, b);
  return {a, b};
}

Outcome criterion1() {
  const std::string got = format_normal_form(normalize(parse_word("a1^-2 a2^-3 a1^5 a2")));
  return check(got == "d^-4 a2^2 a3 a1^5 a2", got);
}

Outcome criterion2() {
  const NormalForm w{-3, {{1, 4}, {2, 1}, {3, 3}, {1, 2}, {2, 1}}};
  const NormalForm mid{-1, {{1, 1}, {2, 3}, {3, 1}, {1, 2}}};
  const XuSymbol s = xu_invariant(to_word(w));
  const bool in_orbit = summit_orbit(to_word(w)).count(mid) == 1;
  return check(s == XuSymbol{-1, {1, 2, 1, 3}} && in_orbit,
               format_symbol(s) + (in_orbit ? ", orbit contains d^-1 a1 a2^3 a3 a1^2" : ", orbit misses it"));
}

Outcome criterion3() {
  const std::vector<Word> w = {parse_word("s1^-5 s2^3 s1^-3 s2^-1"), parse_word("s1^2 s2^-2 s1^-5 s2^-1"),
                               parse_word("s1^-3 s2^-4 s1^2 s2^-1")};
  const bool ok = are_conjugate(w[0], w[1]) && are_conjugate(w[1], w[2]) && are_conjugate(w[0], w[2]);
  return check(ok, "common symbol " + format_symbol(xu_invariant(w[0])));
}

Outcome criterion4() {
  const VerificationReport r = verify_table1(-8, 8);
  if (r.unexpected() != 0) return fail(std::to_string(r.unexpected()) + " unexplained mismatches");
  int inconsistent_rows = 0;
  int noncanonical = 0;
  for (const auto& e : r.entries) {
    if (e.match) continue;
    if (e.label == "a1^k a2, k >= 3") {
      if (e.reference_conserves) return fail("k >= 3 row not flagged by conservation at " + e.word);
      ++inconsistent_rows;
    } else if (e.reference_conjugate == true) {
      ++noncanonical;
    } else {
      return fail("unexplained mismatch at " + e.word);
    }
  }
  if (inconsistent_rows != 6) return fail("expected the k >= 3 row to fail conservation for k = 3..8");
  // The stated replacement (1;(k-1)) is the conjugate delta a1^(k-1) = a2 a1^k,
  // which is not at summit power: a1^3 a2 ~ (s1 s2)^2 ~ delta^2.
  for (int k = 3; k <= 8; ++k) {
    const Word w({{1, k}, {2, 1}});
    const Word stated = to_word(NormalForm{1, {{1, k - 1}}});
    if (!are_conjugate(w, stated)) return fail("replacement (1;(k-1)) is not even conjugate");
    if (!(xu_invariant(w) == XuSymbol{2, k == 3 ? std::vector<int>{} : std::vector<int>{k - 3}}))
      return fail("computed replacement is not (2;(k-3))");
    if (summit_set_full(w).begin()->power != 2) return fail("exhaustive summit power differs from 2");
  }
  if (noncanonical == 0) return pass("only the k >= 3 row differs");
  std::ostringstream os;
  os << "k >= 3 row flagged (conservation fails); its true replacement is (2;(k-3)), not (1;(k-1)), "
        "certified by exhaustive summit search; "
     << noncanonical
     << " further reference rows (a1^k a2^-1, k >= 2 and k <= -3) name conjugates that are non-canonical "
        "(more syllables or below summit power)";
  return {Status::Deviation, os.str()};
}

Outcome criterion5() {
  const VerificationReport r = verify_table2(5);
  return check(r.mismatches() == 0 && !r.entries.empty(),
               std::to_string(r.entries.size()) + " non-degenerate triples, " + std::to_string(r.mismatches()) +
                   " mismatches");
}

Outcome criterion6() {
  const auto rows = enumerate_table3(12);
  if (rows.size() != 20) return fail(std::to_string(rows.size()) + " rows");
  std::map<std::pair<XuSymbol, XuSymbol>, const Table3Row*,
           std::function<bool(const std::pair<XuSymbol, XuSymbol>&, const std::pair<XuSymbol, XuSymbol>&)>>
      by_class([](const auto& a, const auto& b) {
        XuSymbolLess less;
        if (less(a.first, b.first)) return true;
        if (less(b.first, a.first)) return false;
        return less(a.second, b.second);
      });
  for (const auto& r : rows) by_class[class_pair(r.triple)] = &r;
  if (by_class.size() != 20) return fail("class pairs not distinct");
  int literal = 0;
  std::set<const Table3Row*> used;
  std::vector<std::string> differing;
  for (const auto& p : kTable3) {
    const auto it = by_class.find(class_pair(p.triple));
    if (it == by_class.end()) return fail("no row for reference " + format_triple(p.triple));
    const Table3Row& r = *it->second;
    if (!used.insert(&r).second) return fail("two reference rows map to one computed row");
    if (r.bennequin != p.beta || r.c_b != p.c_b) return fail("beta or c_b differs at " + format_triple(p.triple));
    if (unordered(r.triple) == unordered(p.triple)) ++literal;
    else differing.push_back(format_triple(p.triple) + "~" + format_triple(r.triple));
  }
  if (literal == 20) return pass("20 rows, all triple pairs, beta and c_b match");
  std::ostringstream os;
  os << "20 rows; beta and c_b match; all 20 reference pairs realize the same two conjugacy classes as a computed row, "
     << "but only " << literal << "/20 triple pairs are literally equal because the required lexicographic tie-break "
     << "picks other members of the same class pair:";
  for (const auto& d : differing) os << ' ' << d;
  return {Status::Deviation, os.str()};
}

Outcome criterion7() {
  for (int s = 2; s <= 9; ++s)
    if (!(torus_jones(2, s) == jones_closure(Word({{1, s}, {2, 1}})))) return fail("(2," + std::to_string(s) + ")");
  for (int s = 2; s <= 6; ++s)
    if (!(torus_jones(3, s) == jones_closure(delta().pow(s)))) return fail("(3," + std::to_string(s) + ")");
  const std::string trefoil = torus_jones(2, 3).str();
  return check(trefoil == "-t^4 + t^3 + t", "(2,2..9), (3,2..6) agree; V(2,3) = " + trefoil);
}

Outcome criterion8() {
  int pairs = 0;
  for (const auto& r : enumerate_table3(12)) {
    if (!(jones_closure(flype_word(r.triple)) == jones_closure(flype_word(r.partner))))
      return fail(format_triple(r.triple));
    ++pairs;
  }
  for (const auto& p : kTable3) {
    if (!(jones_closure(flype_word(p.triple)) == jones_closure(flype_word(flype_partner(p.triple)))))
      return fail("reference " + format_triple(p.triple));
    ++pairs;
  }
  return pass(std::to_string(pairs) + " flype pairs (computed and reference representatives)");
}

Outcome criterion9() {
  constexpr int kCases = 1000;
  {
    Rng rng(9001);
    for (int i = 0; i < kCases; ++i) {
      const Word w = random_word(rng, 6, 3);
      const Word c = random_word(rng, 3, 3);
      if (!(xu_invariant(c * w * invert(c)) == xu_invariant(w))) return fail("conjugation invariance: " + format_word(w));
    }
  }
  {
    Rng rng(9002);
    for (int i = 0; i < kCases; ++i) {
      const Word a = random_word(rng, 4, 2);
      const Word b = i % 2 ? to_word(normalize(a * random_word(rng, 2, 2))) : random_word(rng, 4, 2);
      if (words_equal(a, b) != (burau(a) == burau(b))) return fail("burau agreement");
      if (!(burau(to_word(normalize(a))) == burau(a))) return fail("burau soundness");
    }
  }
  {
    Rng rng(9003);
    for (int i = 0; i < kCases; ++i) {
      const Word w = random_word(rng, 7, 4);
      const NormalForm nf = normalize(w);
      const XuSymbol s = xu_invariant(w);
      int sum = 0;
      for (int l : s.exponents) sum += l;
      if (2 * nf.power + static_cast<int>(nf.tail_letters()) != exponent_sum(w) || 2 * s.power + sum != exponent_sum(w))
        return fail("conservation: " + format_word(w));
    }
  }
  {
    Rng rng(9004);
    for (int i = 0; i < kCases; ++i) {
      const Word w = random_word(rng, 6, 3);
      if (!(invert(invert(w)) == w)) return fail("invert involution");
      if (!(reverse(reverse(to_classical(w))) == to_classical(w))) return fail("reverse involution");
    }
  }
  {
    Rng rng(9005);
    for (int i = 0; i < kCases; ++i) {
      const Word w = random_letters(rng, uniform(rng, 1, 6));
      const auto orbit = summit_orbit(w);
      const auto full = summit_set_full(w);
      if (!std::includes(full.begin(), full.end(), orbit.begin(), orbit.end())) return fail("orbit not in summit set");
      std::optional<XuSymbol> best;
      for (const auto& nf : full) {
        const XuSymbol s = canonical(symbol_of(nf));
        if (!best || XuSymbolLess{}(s, *best)) best = s;
      }
      if (!(*best == xu_invariant(w))) return fail("summit minimum differs: " + format_word(w));
    }
  }
  return pass("5 suites x 1000 cases");
}

Outcome criterion10() {
  int flype_words = 0;
  for (const auto& p : kTable3) {
    for (const FlypeTriple& t : {p.triple, flype_partner(p.triple)}) {
      const Invertibility r = is_invertible(flype_word(t));
      if (!r.applicable || r.invertible != true || r.reason != InvertibilityReason::FlypeAdmissible)
        return fail(format_triple(t) + " reports " + to_string(r.reason));
      ++flype_words;
    }
  }
  // Exhaustive search over band words a_i^{+-1} with at most 8 letters.
  // Words whose first and last syllables share a subscript are conjugate to
  // shorter words and are skipped.
  std::set<std::pair<int, std::vector<int>>> classes;
  std::vector<Syllable> letters;
  for (int i = 1; i <= 3; ++i) letters.insert(letters.end(), {{i, 1}, {i, -1}});
  const int base = static_cast<int>(letters.size());
  for (int len = 1; len <= 8; ++len) {
    std::vector<int> idx(static_cast<std::size_t>(len), 0);
    bool done = false;
    while (!done) {
      std::vector<Syllable> s;
      for (int k : idx) s.push_back(letters[static_cast<std::size_t>(k)]);
      const Word w(std::move(s));
      const auto& syl = w.syllables();
      const bool reduced = w.letter_count() == static_cast<std::size_t>(len) &&
                           (syl.size() < 2 || syl.front().subscript != syl.back().subscript);
      if (reduced) {
        const Invertibility r = is_invertible(w);
        if (r.applicable && r.invertible == false) {
          const XuSymbol sw = xu_invariant(w);
          if (sw == xu_invariant(reverse(w)) || !detect_flype(w).empty()) return fail("uncertified " + format_word(w));
          classes.insert({sw.power, sw.exponents});
        }
      }
      int pos = 0;
      while (pos < len && ++idx[static_cast<std::size_t>(pos)] == base) idx[static_cast<std::size_t>(pos++)] = 0;
      done = pos == len;
    }
  }
  return check(classes.size() >= 10, std::to_string(flype_words) + " flype words invertible; " +
                                         std::to_string(classes.size()) + " certified non-invertible classes");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"normal form golden vector", criterion1},
      {"conjugacy golden vector", criterion2},
      {"conjugate triple", criterion3},
      {"braid index < 3 table", criterion4},
      {"flype table oracle", criterion5},
      {"non-transversally-simple table", criterion6},
      {"Jones cross-validation", criterion7},
      {"flype pair Jones equality", criterion8},
      {"property suites", criterion9},
      {"invertibility", criterion10},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = fail(std::string("exception: ") + e.what());
    }
    const char* tag = o.status == Status::Pass ? "PASS" : o.status == Status::Deviation ? "DEVIATION" : "FAIL";
    failures += o.status == Status::Fail;
    std::cout << "criterion " << (i + 1) << " " << tag << ": " << criteria[i].first;
    if (!o.detail.empty()) std::cout << " -- " << o.detail;
    std::cout << '\n';
  }
  return failures == 0 ? 0 : 1;
}
