#include "rsklab/greene.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "rsklab/errors.hpp"

namespace rsklab {

namespace {

void check_cap(const Biword& b, const GreeneLimits& limits) {
  if (static_cast<int>(b.size()) > limits.max_weight) {
    throw CapExceeded("Greene oracle refuses weight " + std::to_string(b.size()) +
                      " (cap " + std::to_string(limits.max_weight) + ")");
  }
}

// Each letter is either discarded or appended to one of k chains whose tail
// is <= the letter. Chains are identified only by their tails (0 = empty
// chain), kept sorted, so the memo key is (position, multiset of tails).
class ChainSearch {
 public:
  ChainSearch(std::vector<int> word, int k) : word_(std::move(word)), k_(k) {}

  int run() {
    return best_from(0, std::string(static_cast<std::size_t>(k_), '\0'));
  }

 private:
  int best_from(std::size_t pos, const std::string& tails) {
    if (pos == word_.size()) return 0;
    auto key = std::make_pair(pos, tails);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const int remaining = static_cast<int>(word_.size() - pos);
    const char letter = static_cast<char>(word_[pos]);
    int best = best_from(pos + 1, tails);
    char last_tried = -1;
    for (std::size_t c = 0; c < tails.size() && best < remaining; ++c) {
      const char tail = tails[c];
      if (tail > letter) break;
      if (tail == last_tried) continue;
      last_tried = tail;
      std::string next = tails;
      next[c] = letter;
      std::sort(next.begin(), next.end());
      best = std::max(best, 1 + best_from(pos + 1, next));
    }
    memo_.emplace(std::move(key), best);
    return best;
  }

  std::vector<int> word_;
  int k_;
  std::map<std::pair<std::size_t, std::string>, int> memo_;
};

}  // namespace

int max_k_increasing(const Biword& b, int k, const GreeneLimits& limits) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  check_cap(b, limits);
  if (k >= static_cast<int>(b.size())) return static_cast<int>(b.size());
  for (const auto& l : b.letters()) {
    if (l.bottom > 127) throw std::invalid_argument("biword letter too large for the Greene oracle");
  }
  return ChainSearch(b.bottoms(), k).run();
}

std::vector<int> greene_profile(const Biword& b, const GreeneLimits& limits) {
  check_cap(b, limits);
  std::vector<int> profile;
  const int total = static_cast<int>(b.size());
  for (int k = 1; total > 0 && (profile.empty() || profile.back() < total); ++k) {
    profile.push_back(max_k_increasing(b, k, limits));
  }
  return profile;
}

Partition greene_shape(const Biword& b, const GreeneLimits& limits) {
  const auto profile = greene_profile(b, limits);
  std::vector<int> parts;
  int prev = 0;
  for (int value : profile) {
    parts.push_back(value - prev);
    prev = value;
  }
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  return Partition(std::move(parts));
}

Partition greene_shape(const Matrix& m, const GreeneLimits& limits) {
  return greene_shape(to_biword(m), limits);
}

std::vector<std::size_t> longest_increasing_positions(std::span<const int> word) {
  // tails[len-1] = position of the smallest possible last element of a
  // weakly increasing subsequence of length len.
  std::vector<std::size_t> tails;
  std::vector<std::ptrdiff_t> pred(word.size(), -1);
  for (std::size_t i = 0; i < word.size(); ++i) {
    auto it = std::upper_bound(tails.begin(), tails.end(), word[i],
                               [&](int value, std::size_t pos) { return value < word[pos]; });
    const auto len = static_cast<std::size_t>(it - tails.begin());
    if (len > 0) pred[i] = static_cast<std::ptrdiff_t>(tails[len - 1]);
    if (it == tails.end()) {
      tails.push_back(i);
    } else {
      *it = i;
    }
  }
  std::vector<std::size_t> out;
  if (tails.empty()) return out;
  for (auto p = static_cast<std::ptrdiff_t>(tails.back()); p >= 0; p = pred[static_cast<std::size_t>(p)]) {
    out.push_back(static_cast<std::size_t>(p));
  }
  std::reverse(out.begin(), out.end());
  return out;
}

int greedy_k_increasing(std::span<const int> word, int k) {
  std::vector<int> rest(word.begin(), word.end());
  int total = 0;
  for (int round = 0; round < k && !rest.empty(); ++round) {
    const auto picked = longest_increasing_positions(rest);
    total += static_cast<int>(picked.size());
    std::vector<int> next;
    std::size_t cursor = 0;
    for (std::size_t i = 0; i < rest.size(); ++i) {
      if (cursor < picked.size() && picked[cursor] == i) {
        ++cursor;
      } else {
        next.push_back(rest[i]);
      }
    }
    rest = std::move(next);
  }
  return total;
}

}  // namespace rsklab
