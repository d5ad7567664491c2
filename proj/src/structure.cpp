#include "ragrowth/structure.hpp"

#include <set>
#include <stdexcept>

namespace ragrowth {

std::string_view to_string(Structure s) {
  switch (s) {
    case Structure::Monoid:
      return "monoid";
    case Structure::Raag:
      return "raag";
    case Structure::Racg:
      return "racg";
  }
  return "?";
}

Structure parse_structure(std::string_view name) {
  if (name == "monoid") return Structure::Monoid;
  if (name == "raag") return Structure::Raag;
  if (name == "racg") return Structure::Racg;
  throw std::invalid_argument("unknown structure '" + std::string(name) + "' (expected monoid, raag or racg)");
}

void CountTable::add(int length, const Clique& type, const Integer& amount) {
  if (length < 0 || length > order_) throw std::out_of_range("length outside table range");
  if (sgn(amount) == 0) return;
  auto key = std::make_pair(length, type);
  auto it = entries_.find(key);
  if (it == entries_.end()) {
    entries_.emplace(std::move(key), amount);
  } else {
    it->second += amount;
    if (sgn(it->second) == 0) entries_.erase(it);
  }
}

Integer CountTable::count(int length, const Clique& type) const {
  auto it = entries_.find({length, type});
  return it == entries_.end() ? Integer(0) : it->second;
}

std::vector<Integer> CountTable::totals() const {
  std::vector<Integer> out(static_cast<std::size_t>(order_) + 1);
  for (const auto& [key, value] : entries_) out[static_cast<std::size_t>(key.first)] += value;
  return out;
}

std::vector<Integer> CountTable::restricted_totals(std::span<const int> allowed) const {
  std::vector<Integer> out(static_cast<std::size_t>(order_) + 1);
  for (const auto& [key, value] : entries_) {
    if (key.second.is_subset_of(allowed)) out[static_cast<std::size_t>(key.first)] += value;
  }
  return out;
}

std::vector<Integer> CountTable::type_counts(const Clique& type) const {
  std::vector<Integer> out(static_cast<std::size_t>(order_) + 1);
  for (int n = 0; n <= order_; ++n) out[static_cast<std::size_t>(n)] = count(n, type);
  return out;
}

std::vector<std::string> diff_tables(const CountTable& expected, const CountTable& actual, std::size_t limit) {
  std::vector<std::string> out;
  if (expected.order() != actual.order()) {
    out.push_back("order " + std::to_string(expected.order()) + " vs " + std::to_string(actual.order()));
  }
  std::set<std::pair<int, Clique>> keys;
  for (const auto& [k, v] : expected.entries()) keys.insert(k);
  for (const auto& [k, v] : actual.entries()) keys.insert(k);
  for (const auto& key : keys) {
    Integer a = expected.count(key.first, key.second);
    Integer b = actual.count(key.first, key.second);
    if (a != b) {
      if (out.size() >= limit) {
        out.emplace_back("...");
        break;
      }
      out.push_back("n=" + std::to_string(key.first) + " type=" + to_string(key.second) + ": expected " +
                    a.get_str() + ", got " + b.get_str());
    }
  }
  return out;
}

}  // namespace ragrowth
