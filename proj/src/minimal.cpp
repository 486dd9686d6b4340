#include "rsklab/minimal.hpp"

#include <algorithm>
#include <stdexcept>

namespace rsklab {

HankelParams split_params(const Partition& p, const SplitChoice& choice) {
  const int n = p.length();
  if (n == 0) throw std::invalid_argument("empty partition has no Hankel split");
  const auto r = column_multiplicities(p);
  auto at = [&](int k) { return r[static_cast<std::size_t>(k - 1)]; };  // 1-based r_k

  HankelParams params;
  params.values.assign(static_cast<std::size_t>(2 * n - 1), 0);
  // 1-based anti-diagonal label s_a lives at values[a - 2].
  auto s = [&](int a) -> int& { return params.values[static_cast<std::size_t>(a - 2)]; };

  s(n + 1) = at(n);
  if (n == 1) return params;

  if (choice.end_split < 0 || choice.end_split > at(1)) {
    throw std::invalid_argument("end split outside [0, r_1]");
  }
  s(2) = choice.end_split;
  s(2 * n) = at(1) - choice.end_split;

  if (choice.ceil_on_lower.size() != static_cast<std::size_t>(n - 2)) {
    throw std::invalid_argument("split choice needs one entry per r_2..r_{n-1}");
  }
  for (int k = 2; k <= n - 1; ++k) {
    const int lo = at(k) / 2;
    const int hi = at(k) - lo;
    const bool ceil_low = choice.ceil_on_lower[static_cast<std::size_t>(k - 2)];
    s(k + 1) = ceil_low ? hi : lo;
    s(2 * n - k + 1) = ceil_low ? lo : hi;
  }
  return params;
}

std::vector<SplitChoice> enumerate_splits(const Partition& p) {
  const int n = p.length();
  if (n == 0) return {};
  if (n == 1) return {SplitChoice{}};
  const auto r = column_multiplicities(p);

  std::vector<SplitChoice> orders{SplitChoice{}};
  for (int k = 2; k <= n - 1; ++k) {
    const bool odd = r[static_cast<std::size_t>(k - 1)] % 2 == 1;
    std::vector<SplitChoice> next;
    for (const auto& partial : orders) {
      for (bool ceil_low : {false, true}) {
        if (!odd && ceil_low) continue;
        auto extended = partial;
        extended.ceil_on_lower.push_back(ceil_low);
        next.push_back(std::move(extended));
      }
    }
    orders = std::move(next);
  }

  std::vector<SplitChoice> out;
  for (int e = 0; e <= r[0]; ++e) {
    for (auto choice : orders) {
      choice.end_split = e;
      out.push_back(std::move(choice));
    }
  }
  return out;
}

std::size_t candidate_count(const Partition& p) {
  const int n = p.length();
  if (n <= 1) return n == 1 ? 1 : 0;
  const auto r = column_multiplicities(p);
  std::size_t count = static_cast<std::size_t>(r[0]) + 1;
  for (int k = 2; k <= n - 1; ++k) {
    if (r[static_cast<std::size_t>(k - 1)] % 2 == 1) count *= 2;
  }
  return count;
}

std::vector<Matrix> minimal_hankel_candidates(const Partition& p) {
  std::vector<Matrix> out;
  for (const auto& choice : enumerate_splits(p)) {
    out.push_back(hankel_from_params(split_params(p, choice)));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

TwoRowMinimal two_row_minimal(int l1, int l2) {
  if (l2 < 1 || l1 < l2) throw std::invalid_argument("two-row shape needs l1 >= l2 >= 1");
  TwoRowMinimal out;
  out.min_inversions = static_cast<std::int64_t>(l2) * l2;
  for (int k = 0; k <= l1 - l2; ++k) {
    out.matrices.push_back(Matrix::from_rows({{k, l2}, {l2, l1 - l2 - k}}));
  }
  return out;
}

std::int64_t choose2(std::int64_t x) { return x < 2 ? 0 : x * (x - 1) / 2; }

std::int64_t minimal_inversion_formula(const Partition& p) {
  const auto cols = conjugate(p).parts();
  const std::int64_t n = p.length();
  const auto height = [&](std::size_t i) { return static_cast<std::int64_t>(cols[i - 1]); };

  std::int64_t total = 0;
  for (std::size_t i = 1; i <= cols.size(); ++i) {
    total += static_cast<std::int64_t>(i / 2 + 1) * choose2(height(i));
  }
  for (std::size_t i = 1; i <= cols.size(); i += 2) {
    for (std::size_t j = 2; j <= cols.size(); j += 2) {
      total += choose2(height(i) + height(j) - n);
    }
  }
  return total;
}

}  // namespace rsklab
