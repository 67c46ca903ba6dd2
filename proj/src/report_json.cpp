#include "woi/report_json.hpp"

#include <stdexcept>

#include <json.hpp>

namespace woi {

namespace {

using ordered_json = nlohmann::ordered_json;

ConceptStatus status_from_string(const std::string& s)
{
    if (s == "active") return ConceptStatus::active;
    if (s == "satisficing") return ConceptStatus::satisficing;
    if (s == "exhausted") return ConceptStatus::exhausted;
    throw std::invalid_argument("report: unknown concept status '" + s + "'");
}

StopReason stop_reason_from_string(const std::string& s)
{
    if (s == "target_reached") return StopReason::target_reached;
    if (s == "budget_exhausted") return StopReason::budget_exhausted;
    throw std::invalid_argument("report: unknown stop reason '" + s + "'");
}

} // namespace

std::string report_to_json(const RunReport& report)
{
    ordered_json doc;
    doc["mode"] = to_string(report.mode);
    doc["seed"] = report.seed;
    doc["stop_reason"] = to_string(report.stop_reason);

    ordered_json sat = ordered_json::array();
    for (const SatisficingEntry& entry : report.satisficing)
        sat.push_back({{"id", entry.id}, {"generation", entry.generation}});
    doc["satisficing"] = std::move(sat);

    doc["totals"] = {{"generations", report.total_generations},
                     {"evaluations", report.total_evaluations}};

    ordered_json progress = ordered_json::array();
    for (const auto& [evals, best] : report.progress)
        progress.push_back({evals, best});
    doc["progress"] = std::move(progress);

    ordered_json concepts = ordered_json::array();
    for (const ConceptReport& cr : report.concepts) {
        ordered_json c;
        c["id"] = cr.id;
        c["generations"] = cr.generations;
        c["evaluations"] = cr.evaluations;
        c["final_category"] = cr.final_category;
        c["status"] = to_string(cr.status);
        c["satisficing_generation"] = cr.satisficing_generation;
        ordered_json traj = ordered_json::array();
        for (const auto& [g, d] : cr.trajectory)
            traj.push_back({g, d});
        c["trajectory"] = std::move(traj);
        ordered_json pop = ordered_json::array();
        for (const MemberSnapshot& m : cr.final_population)
            pop.push_back({{"x", m.x}, {"y", m.y}});
        c["final_population"] = std::move(pop);
        concepts.push_back(std::move(c));
    }
    doc["concepts"] = std::move(concepts);
    return doc.dump(2) + "\n";
}

RunReport report_from_json(const std::string& text)
{
    const ordered_json doc = ordered_json::parse(text);
    RunReport report;
    report.mode = run_mode_from_string(doc.at("mode").get<std::string>());
    report.seed = doc.at("seed").get<std::uint64_t>();
    report.stop_reason = stop_reason_from_string(doc.at("stop_reason").get<std::string>());
    for (const auto& entry : doc.at("satisficing"))
        report.satisficing.push_back(
            {entry.at("id").get<std::string>(), entry.at("generation").get<int>()});
    report.total_generations = doc.at("totals").at("generations").get<std::int64_t>();
    report.total_evaluations = doc.at("totals").at("evaluations").get<std::uint64_t>();
    for (const auto& point : doc.at("progress"))
        report.progress.emplace_back(point.at(0).get<std::uint64_t>(),
                                     point.at(1).get<double>());
    for (const auto& c : doc.at("concepts")) {
        ConceptReport cr;
        cr.id = c.at("id").get<std::string>();
        cr.generations = c.at("generations").get<int>();
        cr.evaluations = c.at("evaluations").get<std::uint64_t>();
        cr.final_category = c.at("final_category").get<int>();
        cr.status = status_from_string(c.at("status").get<std::string>());
        cr.satisficing_generation = c.at("satisficing_generation").get<int>();
        for (const auto& point : c.at("trajectory"))
            cr.trajectory.emplace_back(point.at(0).get<int>(), point.at(1).get<double>());
        for (const auto& m : c.at("final_population")) {
            MemberSnapshot snap;
            snap.x = m.at("x").get<std::vector<double>>();
            snap.y = m.at("y").get<std::vector<double>>();
            cr.final_population.push_back(std::move(snap));
        }
        report.concepts.push_back(std::move(cr));
    }
    return report;
}

} // namespace woi
