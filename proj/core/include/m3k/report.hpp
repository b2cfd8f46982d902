#pragma once

#include <string>
#include <vector>

#include "m3k/checks.hpp"

namespace m3k {

enum class ReportFormat { text, json };

std::string render_report(const CheckReport& rep, ReportFormat fmt);
std::string render_reports(const std::vector<CheckReport>& reps, ReportFormat fmt);

}  // namespace m3k
