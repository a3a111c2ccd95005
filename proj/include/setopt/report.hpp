#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "setopt/harness.hpp"

namespace setopt {

enum class ReportFormat { Human, Kv };

/// 64-bit FNV-1a.
std::uint64_t fnv1a(std::string_view bytes);
/// Hash of the exported instance text, as 16 hex digits.
std::string instance_hash(const Instance& inst);

/// Rows of an upper set as "a1 a2 <= c" joined by "; ", or "Z" / "empty".
std::string describe_set(const UpperSet& a);

std::string render_certify(const Instance& inst, const std::vector<ConditionVerdict>& verdicts, ReportFormat fmt);
std::string render_harness(const Instance& inst, const HarnessReport& rep, ReportFormat fmt);
std::string render_derive(const Instance& inst, const Vec& x, const Vec& u, ReportFormat fmt);
std::string render_campaign(const CampaignOptions& opts, const CampaignSummary& s, ReportFormat fmt);

}  // namespace setopt
