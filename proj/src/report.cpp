#include "rsklab/report.hpp"

#include <cstdio>

#include "json.hpp"

namespace rsklab {

namespace {

using Json = nlohmann::ordered_json;

Json matrix_json(const Matrix& m) { return Json(m.rows()); }

const char* yes_no(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string to_jsonl_line(const VerificationRecord& rec, bool include_elapsed) {
  Json j;
  j["partition"] = rec.partition.parts();
  j["n"] = rec.n;
  j["weight"] = rec.weight;
  j["status"] = rec.skipped ? "skipped" : "verified";
  if (rec.skipped) {
    j["skip_reason"] = rec.skip_reason;
    for (const char* key : {"class_size", "min_inversions_bruteforce", "minimal_set",
                            "all_minimal_symmetric", "all_minimal_hankel", "candidate_count",
                            "candidates_with_other_shape", "candidate_set_equals_minimal_set",
                            "candidates_subset_of_minimal", "formula_value",
                            "formula_matches_bruteforce", "enumeration_strategies_agree"}) {
      j[key] = nullptr;
    }
  } else {
    j["class_size"] = rec.class_size;
    j["min_inversions_bruteforce"] = rec.min_inversions_bruteforce;
    Json minimal = Json::array();
    for (const auto& m : rec.minimal_set) minimal.push_back(matrix_json(m));
    j["minimal_set"] = std::move(minimal);
    j["all_minimal_symmetric"] = rec.all_minimal_symmetric;
    j["all_minimal_hankel"] = rec.all_minimal_hankel;
    j["candidate_count"] = rec.candidate_count;
    j["candidates_with_other_shape"] = rec.candidates_with_other_shape;
    j["candidate_set_equals_minimal_set"] = rec.candidate_set_equals_minimal_set;
    j["candidates_subset_of_minimal"] = rec.candidates_subset_of_minimal;
    j["formula_value"] = rec.formula_value;
    j["formula_matches_bruteforce"] = rec.formula_matches_bruteforce;
    j["enumeration_strategies_agree"] = rec.enumeration_strategies_agree;
  }
  j["oracle_disagreements"] = rec.oracle_disagreements;
  if (include_elapsed) j["elapsed_seconds"] = rec.elapsed_seconds;
  return j.dump();
}

std::optional<Partition> partition_of_jsonl_line(std::string_view line) {
  auto j = Json::parse(line.begin(), line.end(), nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded() || !j.is_object() || !j.contains("partition")) return std::nullopt;
  try {
    return Partition(j["partition"].get<std::vector<int>>());
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

std::string csv_header() {
  return "partition,min_inversions_bruteforce,formula_value,all_minimal_symmetric,"
         "all_minimal_hankel,candidate_set_equals_minimal_set,formula_matches_bruteforce";
}

std::string to_csv_row(const VerificationRecord& rec) {
  std::string row = "\"" + rec.partition.to_string() + "\",";
  if (rec.skipped) return row + ",,,,,";
  row += std::to_string(rec.min_inversions_bruteforce) + ',';
  row += std::to_string(rec.formula_value) + ',';
  row += yes_no(rec.all_minimal_symmetric);
  row += ',';
  row += yes_no(rec.all_minimal_hankel);
  row += ',';
  row += yes_no(rec.candidate_set_equals_minimal_set);
  row += ',';
  row += yes_no(rec.formula_matches_bruteforce);
  return row;
}

std::string render_text(const VerificationRecord& rec) {
  std::string out = "(" + rec.partition.to_string() + ")";
  if (rec.skipped) return out + " skipped: " + rec.skip_reason;
  char buf[256];
  std::snprintf(buf, sizeof buf,
                " class=%zu min=%lld minimal=%zu symmetric=%s hankel=%s candidates=%s formula=%lld%s",
                rec.class_size, static_cast<long long>(rec.min_inversions_bruteforce),
                rec.minimal_set.size(), yes_no(rec.all_minimal_symmetric),
                yes_no(rec.all_minimal_hankel),
                rec.candidate_set_equals_minimal_set ? "equal"
                : rec.candidates_subset_of_minimal   ? "subset"
                                                     : "differ",
                static_cast<long long>(rec.formula_value),
                rec.formula_matches_bruteforce ? "" : " DISAGREE");
  out += buf;
  for (const auto& d : rec.oracle_disagreements) out += " ORACLE: " + d;
  return out;
}

}  // namespace rsklab
