#include "ragrowth/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <unordered_set>

namespace ragrowth {

bool letter_less(const Letter& a, const Letter& b) {
  if (a.node != b.node) return a.node < b.node;
  return a.sign > b.sign;
}

std::string to_string(const ReducedWord& w) {
  if (w.empty()) return "e";
  std::ostringstream os;
  for (const auto& l : w) {
    os << 'x' << l.node;
    if (l.sign < 0) os << "^-1";
  }
  return os.str();
}

std::vector<Letter> alphabet(const Graph& g, Structure s) {
  std::vector<Letter> out;
  for (int i = 1; i <= g.node_count(); ++i) {
    out.push_back({i, 1});
    if (s == Structure::Raag) out.push_back({i, -1});
  }
  return out;
}

bool letters_commute(const Graph& g, const Letter& a, const Letter& b) {
  return a.node != b.node && g.adjacent(a.node, b.node);
}

AppendResult append_and_reduce(const ReducedWord& w, const Letter& letter, const Graph& g, Structure s) {
  if (letter.node < 1 || letter.node > g.node_count()) throw std::invalid_argument("letter outside the alphabet");
  if (letter.sign != 1 && (letter.sign != -1 || s != Structure::Raag)) {
    throw std::invalid_argument("letter sign not allowed in " + std::string(to_string(s)));
  }
  if (s != Structure::Monoid) {
    const int partner_sign = s == Structure::Raag ? -letter.sign : letter.sign;
    for (std::size_t p = w.size(); p-- > 0;) {
      const Letter& other = w[p];
      if (other.node == letter.node) {
        if (other.sign == partner_sign) {
          AppendResult r{w, true};
          r.word.erase(r.word.begin() + static_cast<std::ptrdiff_t>(p));
          return r;
        }
        break;
      }
      if (!g.adjacent(other.node, letter.node)) break;
    }
  }
  AppendResult r{w, false};
  r.word.push_back(letter);
  return r;
}

ReducedWord canonical_form(const ReducedWord& w, const Graph& g) {
  std::vector<Letter> rest = w;
  ReducedWord out;
  out.reserve(w.size());
  while (!rest.empty()) {
    std::size_t best = rest.size();
    for (std::size_t p = 0; p < rest.size(); ++p) {
      bool available = true;
      for (std::size_t q = 0; q < p; ++q) {
        if (!letters_commute(g, rest[q], rest[p])) {
          available = false;
          break;
        }
      }
      if (available && (best == rest.size() || letter_less(rest[p], rest[best]))) best = p;
    }
    out.push_back(rest[best]);
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return out;
}

Clique word_type(const ReducedWord& w, const Graph& g) {
  std::vector<int> nodes;
  for (std::size_t p = 0; p < w.size(); ++p) {
    bool last = true;
    for (std::size_t q = p + 1; q < w.size(); ++q) {
      if (!letters_commute(g, w[p], w[q])) {
        last = false;
        break;
      }
    }
    if (last) nodes.push_back(w[p].node);
  }
  std::sort(nodes.begin(), nodes.end());
  return Clique(std::move(nodes));
}

EnumerationCapExceeded::EnumerationCapExceeded(int depth, std::size_t cap)
    : std::runtime_error("enumeration cap of " + std::to_string(cap) + " words exceeded at depth " +
                         std::to_string(depth)),
      depth_(depth) {}

namespace {

// One byte per letter while nodes fit, so short keys stay in the small-string buffer.
std::string encode(const ReducedWord& w, bool compact) {
  std::string key;
  if (compact) {
    key.reserve(w.size());
    for (const auto& l : w) key.push_back(static_cast<char>(2 * l.node + (l.sign < 0 ? 1 : 0)));
    return key;
  }
  key.reserve(w.size() * sizeof(int));
  for (const auto& l : w) {
    const int code = 2 * l.node + (l.sign < 0 ? 1 : 0);
    key.append(reinterpret_cast<const char*>(&code), sizeof(code));
  }
  return key;
}

}  // namespace

TypeCountTable count_elements_by_type(const Graph& g, Structure s, int depth, std::size_t cap) {
  if (depth < 0) throw std::invalid_argument("depth must be non-negative");
  TypeCountTable table(s, depth);
  table.add(0, Clique{}, 1);
  const auto letters = alphabet(g, s);
  std::vector<ReducedWord> level{ReducedWord{}};
  std::size_t seen = 1;
  const bool compact = g.node_count() < 127;
  for (int n = 1; n <= depth; ++n) {
    std::vector<ReducedWord> next;
    std::unordered_set<std::string> keys;
    std::map<Clique, unsigned long long> by_type;
    for (const auto& x : level) {
      for (const auto& letter : letters) {
        AppendResult r = append_and_reduce(x, letter, g, s);
        if (r.cancelled) continue;
        ReducedWord canon = canonical_form(r.word, g);
        if (!keys.insert(encode(canon, compact)).second) continue;
        if (++seen > cap) throw EnumerationCapExceeded(n, cap);
        ++by_type[word_type(canon, g)];
        if (n < depth) next.push_back(std::move(canon));
      }
    }
    for (const auto& [type, count] : by_type) table.add(n, type, Integer(static_cast<unsigned long>(count)));
    level = std::move(next);
  }
  return table;
}

GeodesicCountTable count_geodesics_by_type(const Graph& g, Structure s, int depth, std::size_t cap) {
  if (depth < 0) throw std::invalid_argument("depth must be non-negative");
  const auto letters = alphabet(g, s);
  // Accumulate in machine integers, then move into the table once.
  std::map<std::pair<int, Clique>, unsigned long long> counts;
  counts[{0, Clique{}}] = 1;
  std::size_t seen = 1;
  ReducedWord word;
  std::function<void()> descend = [&]() {
    const int n = static_cast<int>(word.size()) + 1;
    if (n > depth) return;
    for (const auto& letter : letters) {
      AppendResult r = append_and_reduce(word, letter, g, s);
      if (r.cancelled) continue;
      if (++seen > cap) throw EnumerationCapExceeded(n, cap);
      word.push_back(letter);
      ++counts[{n, word_type(word, g)}];
      descend();
      word.pop_back();
    }
  };
  descend();
  GeodesicCountTable table(s, depth);
  for (const auto& [key, value] : counts) table.add(key.first, key.second, Integer(static_cast<unsigned long>(value)));
  return table;
}

}  // namespace ragrowth
