// Brute-force enumeration of elements and geodesic words, straight from the
// defining relations. Serves as ground truth for the matrix methods.

#ifndef RAGROWTH_ORACLE_HPP
#define RAGROWTH_ORACLE_HPP

#include "ragrowth/graph.hpp"
#include "ragrowth/structure.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace ragrowth {

/// x_node^sign. sign is always +1 in the monoid and the Coxeter group.
struct Letter {
  int node = 1;
  int sign = 1;

  friend bool operator==(const Letter&, const Letter&) = default;
};

/// By node, then +1 before -1.
bool letter_less(const Letter& a, const Letter& b);

using ReducedWord = std::vector<Letter>;

std::string to_string(const ReducedWord& w);

/// The generators of the structure in letter_less order.
std::vector<Letter> alphabet(const Graph& g, Structure s);

/// Two letters commute when their nodes are distinct and adjacent.
bool letters_commute(const Graph& g, const Letter& a, const Letter& b);

struct AppendResult {
  ReducedWord word;
  /// True when the appended letter cancelled against an earlier one.
  bool cancelled = false;
};

/// Appends letter to the reduced word w. For RAAG / RACG the word is scanned
/// from the right for a partner (inverse / equal letter) that commutes past
/// every letter after it; if one exists it is removed instead.
AppendResult append_and_reduce(const ReducedWord& w, const Letter& letter, const Graph& g, Structure s);

/// Lexicographically least (letter_less) word among the shuffles of w.
ReducedWord canonical_form(const ReducedWord& w, const Graph& g);

/// Nodes whose letter can be shuffled to the end of w.
Clique word_type(const ReducedWord& w, const Graph& g);

inline constexpr std::size_t kDefaultEnumerationCap = 2'000'000;

class EnumerationCapExceeded : public std::runtime_error {
 public:
  EnumerationCapExceeded(int depth, std::size_t cap);
  int depth() const { return depth_; }

 private:
  int depth_;
};

/// Elements by (length, type), found breadth-first and deduplicated by canonical form.
TypeCountTable count_elements_by_type(const Graph& g, Structure s, int depth,
                                      std::size_t cap = kDefaultEnumerationCap);

/// Reduced words by (length, type), found depth-first without deduplication.
GeodesicCountTable count_geodesics_by_type(const Graph& g, Structure s, int depth,
                                           std::size_t cap = kDefaultEnumerationCap);

}  // namespace ragrowth

#endif  // RAGROWTH_ORACLE_HPP
