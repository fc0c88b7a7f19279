#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "motarr/cohomology.hpp"
#include "motarr/io.hpp"

namespace motarr {

struct RunOptions {
    std::string command;
    std::optional<Field> backend;
    std::optional<std::vector<std::size_t>> order;  // 1-based
    std::uint64_t seed = 0;
    std::size_t trials = 100;
    std::string word;
    std::string left;
    std::string right;
};

const std::vector<std::string>& commands();

// Report for one command; keys are sorted, so dump() is byte-deterministic.
// Throws Error (cross_check_mismatch when an independent check disagrees).
nlohmann::json run(const RunOptions& options, const ArrangementDocument& doc);

// One "key: value" line per result entry, then the provenance lines.
std::string render_text(const nlohmann::json& report);

nlohmann::json element_json(const CohomologyElement& x);

}  // namespace motarr
