#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tribraid/conjugacy.hpp"
#include "tribraid/errors.hpp"
#include "tribraid/word.hpp"

namespace tribraid {

/// Exponents of the flype-position braid s1^u s2^v s1^w s2^epsilon.
struct FlypeTriple {
  int u = 1;
  int v = 1;
  int w = 1;
  int epsilon = 1;

  FlypeTriple() = default;
  FlypeTriple(int u_, int v_, int w_, int eps);

  friend bool operator==(const FlypeTriple&, const FlypeTriple&) = default;
  friend auto operator<=>(const FlypeTriple&, const FlypeTriple&) = default;
};

Word flype_word(const FlypeTriple& t);
FlypeTriple flype_partner(const FlypeTriple& t);

/// Triple of flype_word(t)^-1 up to cyclic conjugation: (-w, -v, -u, -epsilon).
FlypeTriple inverse_triple(const FlypeTriple& t);

/// Non-degeneracy: |v| >= 2, u, v+eps, w pairwise distinct,
/// u and w not in {0, eps, 2 eps}.
bool is_nondegenerate(const FlypeTriple& t);

/// For a negative flype: the class also admits a positive flype iff
/// u = 1 or w = 1 or v = 2 (signed values). Throws PreconditionError for eps = +1.
bool admits_positive_variant(const FlypeTriple& t);

/// Index (0..7) of the tabulated sign pattern of t, if any. Rows 0-3 have
/// eps = +1, rows 4-7 eps = -1; within each block the sign patterns are
/// (+,+,+), (-,+,+), (+,-,+), (+,+,-).
std::optional<int> table2_row(const FlypeTriple& t);

/// Raw (uncanonicalized) tabulated symbol for a row and p, q, r >= 1.
XuSymbol table2_row_symbol(int row, int p, int q, int r);

/// Canonical Xu symbol of a non-degenerate flype braid from its table row.
/// Throws PreconditionError if t is degenerate or its sign pattern is not
/// one of the eight tabulated rows (query inverse_triple(t) instead).
XuSymbol table2_symbol(const FlypeTriple& t);

struct FlypeMatch {
  FlypeTriple triple;
  bool nondegenerate = false;
  bool via_inverse = false;

  friend bool operator==(const FlypeMatch&, const FlypeMatch&) = default;
  friend auto operator<=>(const FlypeMatch&, const FlypeMatch&) = default;
};

/// All triples whose tabulated symbol matches the class of w (directly, or
/// for w^-1 and then inverted back), including degenerate matches.
std::vector<FlypeMatch> flype_matches(const Word& w);

/// Non-degenerate flype triples conjugate to w, sorted. Empty means the
/// class admits no non-degenerate flype.
std::vector<FlypeTriple> detect_flype(const Word& w);

struct BraidIndex {
  int index = 3;
  std::optional<int> reduced_k;
  std::optional<int> reduced_sign;

  friend bool operator==(const BraidIndex&, const BraidIndex&) = default;
};

BraidIndex braid_index(const Word& w);

struct BraidIndexLow {
  int index = 2;
  int k = 0;
  int sign = 1;
};
struct UniqueClass {
  XuSymbol symbol;
};
struct FlypePair {
  FlypeTriple triple;
  XuSymbol partner_symbol;
  XuSymbol own_symbol;
};
using LinkClassification = std::variant<BraidIndexLow, UniqueClass, FlypePair>;

/// FlypePair reports the detected triple of least braid crossing number
/// (ties broken lexicographically).
LinkClassification classify(const Word& w);

enum class InvertibilityReason { SymbolsEqual, FlypeAdmissible, Neither };

struct Invertibility {
  bool applicable = false;
  std::optional<bool> invertible;
  InvertibilityReason reason = InvertibilityReason::Neither;
};

Invertibility is_invertible(const Word& w);

struct TransversalPair {
  FlypeTriple triple;
  FlypeTriple partner;
  int bennequin = 0;
  int c_b = 0;
};

/// Pair of closed braids with equal topological type and Bennequin number
/// but distinct transversal types. Requires epsilon = -1.
std::optional<TransversalPair> transversal_pair(const FlypeTriple& t);

/// Self-linking number of the closed 3-braid: writhe - 3.
int bennequin(const Word& w);

/// |u| + |v| + |w| + 1.
int braid_crossing_number(const FlypeTriple& t);

std::string to_string(InvertibilityReason r);
std::string format_triple(const FlypeTriple& t);

}  // namespace tribraid
