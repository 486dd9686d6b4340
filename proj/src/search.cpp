#include "rsklab/search.hpp"

#include <algorithm>
#include <chrono>
#include <set>

#include "rsklab/errors.hpp"
#include "rsklab/greene.hpp"
#include "rsklab/minimal.hpp"
#include "rsklab/parallel.hpp"
#include "rsklab/rsk.hpp"
#include "rsklab/tableau.hpp"

namespace rsklab {

void SearchCaps::check(const Partition& p) const {
  const int n = p.length();
  if (n < 1) throw CapExceeded("empty partition has no shape class");
  if (n > max_n) {
    throw CapExceeded("partition " + p.to_string() + " has " + std::to_string(n) +
                      " parts; cap is n <= " + std::to_string(max_n));
  }
  if (p.weight() > weight_cap(n)) {
    throw CapExceeded("partition " + p.to_string() + " has weight " + std::to_string(p.weight()) +
                      "; cap for n = " + std::to_string(n) + " is " + std::to_string(weight_cap(n)));
  }
}

SearchCaps SearchCaps::uniform(int max_weight, int max_n) {
  return SearchCaps{max_weight, max_weight, max_n};
}

namespace {

// Row-major fill of an n x n matrix with a fixed total. heaviest_[c] is the
// weight of the heaviest right-down path ending at cell c; it only grows as
// cells are filled, so exceeding the first part is a safe cut.
class CompositionScan {
 public:
  explicit CompositionScan(const Partition& target)
      : target_(target),
        n_(target.length()),
        limit_(target.part(0)),
        cells_(static_cast<std::size_t>(n_ * n_), 0),
        heaviest_(cells_.size(), 0) {}

  std::vector<Matrix> run_with_corner(int corner) {
    std::vector<Matrix> found;
    const int total = target_.weight();
    if (corner > total || corner > limit_) return found;
    if (n_ == 1) {
      if (corner == total) found.push_back(Matrix::from_rows({{corner}}));
      return found;
    }
    cells_[0] = corner;
    heaviest_[0] = corner;
    place(1, total - corner, found);
    return found;
  }

 private:
  void place(int idx, int remaining, std::vector<Matrix>& found) {
    const int last = n_ * n_ - 1;
    if (idx == last) {
      if (!set_cell(idx, remaining)) return;
      if (heaviest_[static_cast<std::size_t>(last)] != limit_) return;
      Matrix m(n_);
      for (int c = 0; c <= last; ++c) m.set(c / n_, c % n_, cells_[static_cast<std::size_t>(c)]);
      if (shape_of_matrix(m) == target_) found.push_back(std::move(m));
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      if (!set_cell(idx, v)) return;  // larger v only makes the path heavier
      place(idx + 1, remaining - v, found);
    }
  }

  bool set_cell(int idx, int v) {
    const int i = idx / n_;
    const int j = idx % n_;
    int before = 0;
    if (i > 0) before = heaviest_[static_cast<std::size_t>(idx - n_)];
    if (j > 0) before = std::max(before, heaviest_[static_cast<std::size_t>(idx - 1)]);
    cells_[static_cast<std::size_t>(idx)] = v;
    heaviest_[static_cast<std::size_t>(idx)] = before + v;
    return before + v <= limit_;
  }

  Partition target_;
  int n_;
  int limit_;
  std::vector<int> cells_;
  std::vector<int> heaviest_;
};

}  // namespace

std::vector<Matrix> enumerate_shape_class(const Partition& p, const SearchCaps& caps, int jobs) {
  caps.check(p);
  const auto corners = static_cast<std::size_t>(p.weight()) + 1;
  auto chunks = parallel_map(corners, jobs, [&](std::size_t corner) {
    return CompositionScan(p).run_with_corner(static_cast<int>(corner));
  });
  std::vector<Matrix> out;
  for (auto& chunk : chunks) {
    std::move(chunk.begin(), chunk.end(), std::back_inserter(out));
  }
  return out;  // corner-major row-major scan is already sorted
}

std::vector<Matrix> enumerate_via_inverse_rsk(const Partition& p, const SearchCaps& caps) {
  caps.check(p);
  const int n = p.length();
  const auto tableaux = enumerate_ssyt(p, n);
  std::vector<Matrix> out;
  out.reserve(tableaux.size() * tableaux.size());
  for (const auto& ptab : tableaux) {
    for (const auto& qtab : tableaux) out.push_back(rsk_inverse(ptab, qtab, n));
  }
  std::sort(out.begin(), out.end());
  return out;
}

MinimumResult minimum_over(const std::vector<Matrix>& shape_class) {
  MinimumResult result;
  result.class_size = shape_class.size();
  bool first = true;
  for (const auto& m : shape_class) {
    const auto inv = inversion_count(m);
    if (first || inv < result.min_inversions) {
      result.min_inversions = inv;
      result.minimal_set.clear();
      first = false;
    }
    if (inv == result.min_inversions) result.minimal_set.push_back(m);
  }
  std::sort(result.minimal_set.begin(), result.minimal_set.end());
  return result;
}

MinimumResult brute_force_minimum(const Partition& p, const SearchCaps& caps, int jobs) {
  return minimum_over(enumerate_shape_class(p, caps, jobs));
}

VerificationRecord verify_partition(const Partition& p, const VerifyOptions& options) {
  const auto started = std::chrono::steady_clock::now();
  VerificationRecord rec;
  rec.partition = p;
  rec.n = p.length();
  rec.weight = p.weight();

  try {
    options.caps.check(p);
  } catch (const CapExceeded& e) {
    rec.skipped = true;
    rec.skip_reason = e.what();
    return rec;
  }

  const GreeneLimits greene{std::max(GreeneLimits{}.max_weight, p.weight())};
  auto disagree = [&](std::string what) { rec.oracle_disagreements.push_back(std::move(what)); };

  const auto by_filter = enumerate_shape_class(p, options.caps, options.jobs);
  const auto by_inverse = enumerate_via_inverse_rsk(p, options.caps);
  rec.enumeration_strategies_agree = by_filter == by_inverse;
  if (!rec.enumeration_strategies_agree) {
    disagree("composition filter found " + std::to_string(by_filter.size()) +
             " matrices, inverse RSK found " + std::to_string(by_inverse.size()));
  }

  const auto minimum = minimum_over(by_filter);
  rec.class_size = minimum.class_size;
  rec.min_inversions_bruteforce = minimum.min_inversions;
  rec.minimal_set = minimum.minimal_set;

  rec.all_minimal_symmetric = true;
  rec.all_minimal_hankel = true;
  for (const auto& m : rec.minimal_set) {
    rec.all_minimal_symmetric = rec.all_minimal_symmetric && is_symmetric(m);
    rec.all_minimal_hankel = rec.all_minimal_hankel && is_hankel(m);
    if (greene_shape(m, greene) != p) {
      disagree("Greene shape of minimal matrix " + m.to_string() + " is not " + p.to_string());
    }
    if (!std::binary_search(rec.minimal_set.begin(), rec.minimal_set.end(), transpose(m))) {
      disagree("minimal set is not closed under transpose at " + m.to_string());
    }
  }

  const auto candidates = minimal_hankel_candidates(p);
  rec.candidate_count = candidates.size();
  if (candidates.size() != candidate_count(p)) {
    disagree("Hankel candidate count " + std::to_string(candidates.size()) +
             " differs from the split count " + std::to_string(candidate_count(p)));
  }
  for (const auto& c : candidates) {
    const auto rsk_shape = shape_of_matrix(c);
    if (rsk_shape != p) ++rec.candidates_with_other_shape;
    if (greene_shape(c, greene) != rsk_shape) {
      disagree("RSK and Greene shapes differ for candidate " + c.to_string());
    }
  }
  rec.candidate_set_equals_minimal_set = candidates == rec.minimal_set;
  rec.candidates_subset_of_minimal = std::includes(
      rec.minimal_set.begin(), rec.minimal_set.end(), candidates.begin(), candidates.end());

  rec.formula_value = minimal_inversion_formula(p);
  rec.formula_matches_bruteforce = rec.formula_value == rec.min_inversions_bruteforce;

  rec.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return rec;
}

std::vector<Partition> sweep_partitions(const SweepRange& range) {
  std::set<int> parts(range.parts.begin(), range.parts.end());
  const int lo = std::max(1, range.min_weight.value_or(range.max_weight));
  std::vector<Partition> out;
  for (int w = lo; w <= range.max_weight; ++w) {
    for (int n : parts) {
      auto batch = enumerate_partitions(w, n);
      std::move(batch.begin(), batch.end(), std::back_inserter(out));
    }
  }
  return out;
}

std::vector<VerificationRecord> sweep(
    const SweepRange& range, const VerifyOptions& options,
    const std::function<void(const VerificationRecord&)>& on_record,
    const std::function<bool(const Partition&)>& skip) {
  std::vector<Partition> todo;
  for (auto& p : sweep_partitions(range)) {
    if (!skip || !skip(p)) todo.push_back(std::move(p));
  }
  // Parallelism goes across partitions; each verification runs serially.
  VerifyOptions inner = options;
  inner.jobs = 1;
  auto records = parallel_map(todo.size(), options.jobs,
                              [&](std::size_t i) { return verify_partition(todo[i], inner); });
  if (on_record) {
    for (const auto& rec : records) on_record(rec);
  }
  return records;
}

}  // namespace rsklab
