// Copyright 2026 The qfw Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QFW_CAMPAIGN_HPP
#define QFW_CAMPAIGN_HPP

#include <string>
#include <utility>
#include <vector>

namespace qfw {

struct CaseRecord {
  std::string digest;
  std::string expected;
  std::string observed;
  bool agree = false;
};

struct CampaignReport {
  std::string name;
  std::vector<std::pair<std::string, std::string>> params;  // ordered
  std::vector<CaseRecord> cases;
  bool exploratory = false;  // observations only; no assertion intended
  double duration_seconds = 0.0;

  int agree_count() const;
  int disagree_count() const;
  bool all_agree() const { return disagree_count() == 0; }

  void add_case(std::string digest, std::string expected, std::string observed,
                bool agree);
};

/// Machine format: one tab-separated line per case plus '#'-prefixed
/// header/summary lines. Byte-reproducible for fixed (params, seed): no
/// timing data is included.
std::string to_records(const CampaignReport& report);

/// Human-readable summary; includes wall-clock duration and every
/// disagreeing case.
std::string to_text(const CampaignReport& report);

/// 0 when every case agrees, 1 otherwise (0 for exploratory reports).
int report_exit_code(const CampaignReport& report);

}  // namespace qfw

#endif  // QFW_CAMPAIGN_HPP
