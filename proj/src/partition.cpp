#include "rsklab/partition.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

#include "rsklab/errors.hpp"

namespace rsklab {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) {
      throw std::invalid_argument("partition parts must be positive");
    }
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

Partition Partition::parse(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw ParseError("empty partition text");
  std::vector<int> parts;
  while (true) {
    auto comma = text.find(',');
    auto token = trim(text.substr(0, comma));
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
      throw ParseError("bad partition part '" + std::string(token) + "'");
    }
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  try {
    return Partition(std::move(parts));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

Partition conjugate(const Partition& p) {
  std::vector<int> out(static_cast<std::size_t>(p.part(0)), 0);
  for (int part : p.parts()) {
    for (int j = 0; j < part; ++j) ++out[static_cast<std::size_t>(j)];
  }
  return Partition(std::move(out));
}

std::vector<int> column_multiplicities(const Partition& p) {
  std::vector<int> r(static_cast<std::size_t>(p.length()));
  for (int i = 0; i < p.length(); ++i) {
    r[static_cast<std::size_t>(i)] = p.part(i) - p.part(i + 1);
  }
  return r;
}

Partition from_column_multiplicities(std::span<const int> r) {
  std::vector<int> parts(r.size());
  int suffix = 0;
  for (std::size_t k = r.size(); k-- > 0;) {
    if (r[k] < 0) throw std::invalid_argument("negative column multiplicity");
    suffix += r[k];
    parts[k] = suffix;
  }
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  return Partition(std::move(parts));
}

namespace {

void extend(int remaining, int slots, int cap, std::vector<int>& prefix,
            std::vector<Partition>& out) {
  if (slots == 0) {
    if (remaining == 0) out.emplace_back(prefix);
    return;
  }
  // Each remaining slot needs at least 1 and at most `cap`.
  for (int part = std::min(cap, remaining - (slots - 1)); part >= 1; --part) {
    if (part * slots < remaining) break;
    prefix.push_back(part);
    extend(remaining - part, slots - 1, part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int weight, int exact_parts) {
  std::vector<Partition> out;
  if (weight < 1 || exact_parts < 1 || exact_parts > weight) return out;
  std::vector<int> prefix;
  extend(weight, exact_parts, weight, prefix, out);
  return out;
}

}  // namespace rsklab
