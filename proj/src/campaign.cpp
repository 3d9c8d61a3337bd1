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

#include "qfw/campaign.hpp"

#include <algorithm>
#include <cstdio>

namespace qfw {

int CampaignReport::agree_count() const {
  return static_cast<int>(
      std::count_if(cases.begin(), cases.end(),
                    [](const CaseRecord& c) { return c.agree; }));
}

int CampaignReport::disagree_count() const {
  return static_cast<int>(cases.size()) - agree_count();
}

void CampaignReport::add_case(std::string digest, std::string expected,
                              std::string observed, bool agree) {
  cases.push_back(CaseRecord{std::move(digest), std::move(expected),
                             std::move(observed), agree});
}

std::string to_records(const CampaignReport& report) {
  std::string out = "#campaign\t" + report.name + "\n";
  for (const auto& [k, v] : report.params)
    out += "#param\t" + k + "\t" + v + "\n";
  for (std::size_t i = 0; i < report.cases.size(); ++i) {
    const CaseRecord& c = report.cases[i];
    out += std::to_string(i) + "\t" + c.digest + "\t" + c.expected + "\t" +
           c.observed + "\t" + (c.agree ? "ok" : "DISAGREE") + "\n";
  }
  out += "#summary\tcases\t" + std::to_string(report.cases.size()) +
         "\tagree\t" + std::to_string(report.agree_count()) + "\tdisagree\t" +
         std::to_string(report.disagree_count()) + "\n";
  return out;
}

std::string to_text(const CampaignReport& report) {
  std::string out = "campaign " + report.name + "\n";
  for (const auto& [k, v] : report.params) out += "  " + k + " = " + v + "\n";
  out += "  cases: " + std::to_string(report.cases.size()) +
         ", agree: " + std::to_string(report.agree_count()) +
         ", disagree: " + std::to_string(report.disagree_count()) + "\n";
  for (std::size_t i = 0; i < report.cases.size(); ++i) {
    const CaseRecord& c = report.cases[i];
    if (c.agree) continue;
    out += "  DISAGREE case " + std::to_string(i) + ": " + c.digest +
           " expected " + c.expected + " observed " + c.observed + "\n";
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", report.duration_seconds);
  out += std::string("  duration: ") + buf + "s\n";
  out += report.all_agree()
             ? std::string("  verdict: all cases agree\n")
             : (report.exploratory
                    ? std::string("  verdict: observations recorded "
                                  "(exploratory run)\n")
                    : std::string("  verdict: DISAGREEMENT FOUND\n"));
  return out;
}

int report_exit_code(const CampaignReport& report) {
  if (report.exploratory) return 0;
  return report.all_agree() ? 0 : 1;
}

}  // namespace qfw
