#include "qharmonic/composition.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qharmonic {

Composition::Composition(std::vector<int> entries)
    : entries_(std::move(entries)) {
  for (int e : entries_) {
    if (e < 0) {
      throw std::invalid_argument("composition entries must be >= 0");
    }
  }
}

Composition Composition::ones(int m) {
  if (m < 0) throw std::invalid_argument("negative length");
  return Composition(std::vector<int>(static_cast<size_t>(m), 1));
}

int Composition::weight() const {
  return std::accumulate(entries_.begin(), entries_.end(), 0);
}

bool Composition::all_positive() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](int e) { return e >= 1; });
}

std::string Composition::to_string() const {
  std::ostringstream out;
  for (size_t i = 0; i < entries_.size(); ++i) {
    if (i) out << ",";
    out << entries_[i];
  }
  return out.str();
}

namespace {

[[noreturn]] void parse_fail(const std::string& text, size_t pos,
                             const std::string& what) {
  throw std::invalid_argument("composition parse error at position " +
                              std::to_string(pos) + ": " + what + " in '" +
                              text + "'");
}

size_t skip_ws(const std::string& t, size_t i) {
  while (i < t.size() && std::isspace(static_cast<unsigned char>(t[i]))) ++i;
  return i;
}

int parse_int(const std::string& t, size_t& i) {
  size_t start = i;
  while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) ++i;
  if (i == start) parse_fail(t, start, "expected integer");
  if (i - start > 7) parse_fail(t, start, "integer too large");
  return std::stoi(t.substr(start, i - start));
}

}  // namespace

Composition parse_composition(const std::string& text) {
  std::vector<int> entries;
  size_t i = skip_ws(text, 0);
  if (i == text.size()) parse_fail(text, i, "empty input");
  while (true) {
    i = skip_ws(text, i);
    if (i < text.size() && text[i] == '{') {
      ++i;
      i = skip_ws(text, i);
      int value = parse_int(text, i);
      i = skip_ws(text, i);
      if (i >= text.size() || text[i] != '}') {
        parse_fail(text, i, "expected '}'");
      }
      ++i;
      i = skip_ws(text, i);
      if (i >= text.size() || text[i] != '^') {
        parse_fail(text, i, "expected '^' after '}'");
      }
      ++i;
      i = skip_ws(text, i);
      int count = parse_int(text, i);
      for (int r = 0; r < count; ++r) entries.push_back(value);
    } else {
      int value = parse_int(text, i);
      i = skip_ws(text, i);
      if (i < text.size() && text[i] == '^') {
        parse_fail(text, i, "repeat applies only to a braced item");
      }
      entries.push_back(value);
    }
    i = skip_ws(text, i);
    if (i == text.size()) break;
    if (text[i] != ',') parse_fail(text, i, "expected ','");
    ++i;
    i = skip_ws(text, i);
    if (i == text.size()) parse_fail(text, i, "trailing ','");
  }
  return Composition(std::move(entries));
}

std::vector<int> partial_sums(const Composition& s) {
  if (s.empty()) {
    throw std::invalid_argument("partial_sums: empty composition");
  }
  if (!s.all_positive()) {
    throw std::invalid_argument("partial_sums: entries must be >= 1");
  }
  std::vector<int> t;
  t.reserve(static_cast<size_t>(s.size()));
  int acc = 0;
  for (int e : s.entries()) {
    acc += e;
    t.push_back(acc);
  }
  return t;
}

Composition first_differences(const std::vector<int>& t) {
  if (t.empty()) {
    throw std::invalid_argument("first_differences: empty sequence");
  }
  std::vector<int> s;
  s.reserve(t.size());
  int prev = 0;
  for (int v : t) {
    if (v <= prev) {
      throw std::invalid_argument(
          "first_differences: sequence must be strictly increasing and "
          "positive");
    }
    s.push_back(v - prev);
    prev = v;
  }
  return Composition(std::move(s));
}

std::vector<int> complement_keep_max(const std::vector<int>& t) {
  if (t.empty()) {
    throw std::invalid_argument("complement_keep_max: empty sequence");
  }
  int prev = 0;
  for (int v : t) {
    if (v <= prev) {
      throw std::invalid_argument(
          "complement_keep_max: sequence must be strictly increasing and "
          "positive");
    }
    prev = v;
  }
  const int top = t.back();
  std::vector<bool> removed(static_cast<size_t>(top) + 1, false);
  for (size_t i = 0; i + 1 < t.size(); ++i) {
    removed[static_cast<size_t>(t[i])] = true;
  }
  std::vector<int> out;
  for (int v = 1; v <= top; ++v) {
    if (!removed[static_cast<size_t>(v)]) out.push_back(v);
  }
  return out;
}

Composition dual(const Composition& s) {
  return first_differences(complement_keep_max(partial_sums(s)));
}

std::vector<Composition> coarsenings(const Composition& s) {
  if (s.empty()) {
    throw std::invalid_argument("coarsenings: empty composition");
  }
  const int m = s.size();
  const int gaps = m - 1;
  std::vector<Composition> out;
  out.reserve(static_cast<size_t>(1) << gaps);
  for (long mask = 0; mask < (1L << gaps); ++mask) {
    std::vector<int> merged;
    merged.push_back(s[0]);
    for (int i = 0; i < gaps; ++i) {
      // Low mask bit is the rightmost comma, so gap i (between entries i
      // and i+1) corresponds to bit gaps-1-i.
      const bool plus = (mask >> (gaps - 1 - i)) & 1;
      if (plus) {
        merged.back() += s[i + 1];
      } else {
        merged.push_back(s[i + 1]);
      }
    }
    out.emplace_back(std::move(merged));
  }
  return out;
}

std::pair<Composition, Composition> dual_pair_from_blocks(
    const std::vector<int>& a, const std::vector<int>& b) {
  if (a.empty() || a.size() != b.size()) {
    throw std::invalid_argument(
        "dual_pair_from_blocks: block lists must be nonempty and of equal "
        "length");
  }
  for (size_t j = 0; j < a.size(); ++j) {
    if (a[j] < 1 || b[j] < 1) {
      throw std::invalid_argument(
          "dual_pair_from_blocks: block entries must be >= 1");
    }
  }
  const size_t r = a.size();
  std::vector<int> first;
  for (size_t j = 0; j + 1 < r; ++j) {
    first.insert(first.end(), static_cast<size_t>(a[j] - 1), 1);
    first.push_back(b[j] + 1);
  }
  first.insert(first.end(), static_cast<size_t>(a[r - 1] - 1), 1);
  first.push_back(b[r - 1]);

  std::vector<int> second;
  second.push_back(a[0]);
  second.insert(second.end(), static_cast<size_t>(b[0] - 1), 1);
  for (size_t j = 1; j < r; ++j) {
    second.push_back(a[j] + 1);
    second.insert(second.end(), static_cast<size_t>(b[j] - 1), 1);
  }
  return {Composition(std::move(first)), Composition(std::move(second))};
}

std::pair<std::vector<int>, std::vector<int>> blocks_from_composition(
    const Composition& s) {
  if (s.empty() || !s.all_positive()) {
    throw std::invalid_argument(
        "blocks_from_composition: composition must be nonempty with "
        "entries >= 1");
  }
  // Entries >= 2 close a block as b_j + 1, except that the final entry is
  // b_r itself (whatever its size); runs of ones supply a_j - 1.
  std::vector<int> a, b;
  int ones = 0;
  const int m = s.size();
  for (int i = 0; i < m; ++i) {
    const int e = s[i];
    if (i == m - 1) {
      // The final entry is b_r as-is (size 1 included); the run of ones
      // before it supplies a_r - 1.
      a.push_back(ones + 1);
      b.push_back(e);
      ones = 0;
    } else if (e == 1) {
      ++ones;
    } else {
      a.push_back(ones + 1);
      b.push_back(e - 1);
      ones = 0;
    }
  }
  return {a, b};
}

}  // namespace qharmonic
