#include "lots/io.hpp"

#include <algorithm>
#include <fstream>

namespace lots {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

json read_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw io_error("cannot open '" + path.string() + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw parse_error(path.string() + ": " + e.what());
    }
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path);
    if (!out)
        throw io_error("cannot write '" + path.string() + "'");
    out << text;
    if (!out)
        throw io_error("write failed for '" + path.string() + "'");
}

void check_keys(const json& obj, const std::vector<std::string>& allowed,
                const std::string& context) {
    if (!obj.is_object())
        throw parse_error(context + ": expected an object");
    for (const auto& [key, value] : obj.items()) {
        (void)value;
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
            throw parse_error(context + ": unknown field '" + key + "'");
    }
    for (const auto& key : allowed)
        if (!obj.contains(key))
            throw parse_error(context + ": missing field '" + key + "'");
}

std::vector<std::string> string_array(const json& value, const std::string& context) {
    if (!value.is_array())
        throw parse_error(context + ": expected an array of strings");
    std::vector<std::string> out;
    for (const auto& item : value) {
        if (!item.is_string())
            throw parse_error(context + ": expected an array of strings");
        out.push_back(item.get<std::string>());
    }
    return out;
}

std::string string_field(const json& obj, const char* key, const std::string& context) {
    if (!obj.at(key).is_string())
        throw parse_error(context + ": field '" + key + "' must be a string");
    return obj.at(key).get<std::string>();
}

std::map<std::string, std::vector<std::string>> order_map(const json& value,
                                                          const std::string& context) {
    if (!value.is_object())
        throw parse_error(context + ": expected an object of id arrays");
    std::map<std::string, std::vector<std::string>> out;
    for (const auto& [key, arr] : value.items())
        out[key] = string_array(arr, context + "." + key);
    return out;
}

} // namespace

Market load_market(const std::filesystem::path& path) {
    json doc = read_json(path);
    check_keys(doc, {"regions", "workers", "jobs"}, path.string());

    std::vector<std::string> regions = string_array(doc["regions"], "regions");

    std::vector<Worker> workers;
    if (!doc["workers"].is_array())
        throw parse_error("workers: expected an array");
    for (const auto& entry : doc["workers"]) {
        check_keys(entry, {"id", "category", "region", "exam_rank"}, "worker");
        Worker w;
        w.id = string_field(entry, "id", "worker");
        std::string cat = string_field(entry, "category", "worker");
        if (cat == "A") w.category = WorkerCategory::A;
        else if (cat == "B") w.category = WorkerCategory::B;
        else throw parse_error("worker '" + w.id + "': category must be \"A\" or \"B\"");
        w.region = string_field(entry, "region", "worker");
        if (!entry["exam_rank"].is_number_integer())
            throw parse_error("worker '" + w.id + "': exam_rank must be an integer");
        w.exam_rank = entry["exam_rank"].get<int>();
        workers.push_back(std::move(w));
    }

    std::vector<Job> jobs;
    if (!doc["jobs"].is_array())
        throw parse_error("jobs: expected an array");
    for (const auto& entry : doc["jobs"]) {
        check_keys(entry, {"id", "category", "region"}, "job");
        Job j;
        j.id = string_field(entry, "id", "job");
        std::string cat = string_field(entry, "category", "job");
        if (cat == "A") j.category = JobCategory::A;
        else if (cat == "AB") j.category = JobCategory::AB;
        else if (cat == "B") j.category = JobCategory::B;
        else throw parse_error("job '" + j.id + "': category must be \"A\", \"AB\" or \"B\"");
        j.region = string_field(entry, "region", "job");
        jobs.push_back(std::move(j));
    }

    return Market(std::move(regions), std::move(workers), std::move(jobs));
}

void save_market(const Market& market, const std::filesystem::path& path) {
    ordered_json doc;
    doc["regions"] = market.regions();
    doc["workers"] = ordered_json::array();
    for (const auto& w : market.workers()) {
        ordered_json entry;
        entry["id"] = w.id;
        entry["category"] = to_string(w.category);
        entry["region"] = w.region;
        entry["exam_rank"] = w.exam_rank;
        doc["workers"].push_back(entry);
    }
    doc["jobs"] = ordered_json::array();
    for (const auto& j : market.jobs()) {
        ordered_json entry;
        entry["id"] = j.id;
        entry["category"] = to_string(j.category);
        entry["region"] = j.region;
        doc["jobs"].push_back(entry);
    }
    write_text(path, doc.dump(2) + "\n");
}

AssignmentPlan load_plan(const std::filesystem::path& path) {
    json doc = read_json(path);
    check_keys(doc, {"worker_order", "job_orders"}, path.string());
    AssignmentPlan plan;
    plan.worker_order = string_array(doc["worker_order"], "worker_order");
    plan.job_orders = order_map(doc["job_orders"], "job_orders");
    return plan;
}

void save_plan(const AssignmentPlan& plan, const std::filesystem::path& path) {
    ordered_json doc;
    doc["worker_order"] = plan.worker_order;
    doc["job_orders"] = ordered_json::object();
    for (const auto& [w, order] : plan.job_orders)
        doc["job_orders"][w] = order;
    write_text(path, doc.dump(2) + "\n");
}

QingPartition load_partition(const std::filesystem::path& path) {
    json doc = read_json(path);
    check_keys(doc, {"wa1", "wa2", "wb1", "wb2"}, path.string());
    QingPartition p;
    p.wa1 = string_array(doc["wa1"], "wa1");
    p.wa2 = string_array(doc["wa2"], "wa2");
    p.wb1 = string_array(doc["wb1"], "wb1");
    p.wb2 = string_array(doc["wb2"], "wb2");
    return p;
}

void save_partition(const QingPartition& partition, const std::filesystem::path& path) {
    ordered_json doc;
    doc["wa1"] = partition.wa1;
    doc["wa2"] = partition.wa2;
    doc["wb1"] = partition.wb1;
    doc["wb2"] = partition.wb2;
    write_text(path, doc.dump(2) + "\n");
}

std::map<std::string, std::vector<std::string>>
load_preferences(const std::filesystem::path& path) {
    json doc = read_json(path);
    check_keys(doc, {"preferences"}, path.string());
    return order_map(doc["preferences"], "preferences");
}

void save_preferences(const std::map<std::string, std::vector<std::string>>& preferences,
                      const std::filesystem::path& path) {
    ordered_json doc;
    doc["preferences"] = ordered_json::object();
    for (const auto& [w, order] : preferences)
        doc["preferences"][w] = order;
    write_text(path, doc.dump(2) + "\n");
}

ordered_json matching_to_json(const Matching& mu) {
    ordered_json pairs = ordered_json::array();
    for (const auto& [w, j] : mu.pairs())
        pairs.push_back(ordered_json::array({w, j}));
    return pairs;
}

ordered_json level_vector_to_json(const LevelVector& v) {
    ordered_json out;
    out["total_matched"] = v.total_matched;
    out["a_workers_matched"] = v.a_workers_matched;
    out["a_jobs_filled"] = v.a_jobs_filled;
    out["ab_jobs_filled"] = v.ab_jobs_filled;
    return out;
}

ordered_json trial_stats_to_json(const TrialStats& stats) {
    ordered_json out;
    out["procedure"] = to_token(stats.procedure);
    out["trials"] = stats.trials;
    out["mean_size"] = stats.mean_size;
    out["size_histogram"] = ordered_json::object();
    for (const auto& [size, count] : stats.size_histogram)
        out["size_histogram"][std::to_string(size)] = count;
    out["frac_maximum"] = stats.frac_maximum;
    if (stats.frac_hl_optimal)
        out["frac_hl_optimal"] = *stats.frac_hl_optimal;
    else
        out["frac_hl_optimal"] = nullptr;
    out["seed"] = stats.seed;
    return out;
}

} // namespace lots
