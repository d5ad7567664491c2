// End-to-end self-check of one graph: every closed form and matrix method
// against brute-force enumeration, plus the functional relations.

#ifndef RAGROWTH_VERIFY_HPP
#define RAGROWTH_VERIFY_HPP

#include "ragrowth/graph.hpp"
#include "ragrowth/io.hpp"
#include "ragrowth/oracle.hpp"

#include <string>
#include <vector>

namespace ragrowth {

struct VerificationCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerificationReport {
  int depth = 0;
  std::vector<VerificationCheck> checks;

  bool passed() const;
};

/// Subsets of the node set are only enumerated for the restricted identity
/// when the graph has at most this many nodes.
inline constexpr int kMaxRestrictedSubsetNodes = 12;

VerificationReport run_verification(const Graph& g, int depth, std::size_t cap = kDefaultEnumerationCap);

Json to_json(const VerificationReport& r);

}  // namespace ragrowth

#endif  // RAGROWTH_VERIFY_HPP
