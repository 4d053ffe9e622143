#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "lots/arrangement.hpp"
#include "lots/market.hpp"
#include "lots/montecarlo.hpp"
#include "lots/procedures.hpp"

namespace lots {

// Market files: {"regions": [...], "workers": [{id, category, region,
// exam_rank}], "jobs": [{id, category, region}]}. Unknown fields are
// rejected. Plan files carry worker_order + job_orders, partition files the
// four id arrays, preference files a preferences map.

Market load_market(const std::filesystem::path& path);
void save_market(const Market& market, const std::filesystem::path& path);

AssignmentPlan load_plan(const std::filesystem::path& path);
void save_plan(const AssignmentPlan& plan, const std::filesystem::path& path);

QingPartition load_partition(const std::filesystem::path& path);
void save_partition(const QingPartition& partition, const std::filesystem::path& path);

std::map<std::string, std::vector<std::string>>
load_preferences(const std::filesystem::path& path);
void save_preferences(const std::map<std::string, std::vector<std::string>>& preferences,
                      const std::filesystem::path& path);

// Report fragments (key order fixed for byte-stable output).
nlohmann::ordered_json matching_to_json(const Matching& mu);
nlohmann::ordered_json level_vector_to_json(const LevelVector& v);
nlohmann::ordered_json trial_stats_to_json(const TrialStats& stats);

} // namespace lots
