#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "joinlat/config.hpp"

namespace joinlat {

enum class CheckStatus { Pass, Fail, Skipped };

std::string to_string(CheckStatus s);

struct CheckRecord {
  std::string id;
  std::string paper_ref;
  CheckStatus status = CheckStatus::Skipped;
  double elapsed = 0.0;
  std::string detail;
};

struct VerificationReport {
  std::string suite;
  std::vector<CheckRecord> checks;

  std::size_t count(CheckStatus s) const;
  /// Nonzero iff some check failed.
  int exit_code() const { return count(CheckStatus::Fail) ? 1 : 0; }
};

void to_json(nlohmann::json &j, const VerificationReport &r);

struct VerifyOptions {
  std::size_t max_order = 200;
  bool include_648 = false;
  /// Wall-clock allowance per check in seconds. A check running past it,
  /// or past its own fixed limit, is reported as skipped.
  double budget_seconds = 600.0;
  /// Corpus groups with more subgroups are left out and listed in the
  /// corpus check's detail.
  std::size_t corpus_subgroup_cap = 1000;
  Limits limits;
};

/// Spec strings of the default corpus: every generated spec of order
/// 2..max_order, sorted and deduplicated.
std::vector<std::string> default_corpus(std::size_t max_order);

/// The paper suite: one check per acceptance criterion in fixed order,
/// followed by the partner-soundness checks.
VerificationReport verify_suite(const VerifyOptions &options);

} // namespace joinlat
