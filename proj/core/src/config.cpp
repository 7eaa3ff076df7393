#include "uag/config.hpp"

#include <fstream>

#include "json.hpp"
#include "uag/errors.hpp"

namespace uag {

void RunConfig::validate() const {
    if (max_carrier < 1 || max_enumeration < 1 || max_closure < 1)
        throw PreconditionError("capacity bounds must be positive");
    if (witness_depth < 0) throw PreconditionError("witness depth must be non-negative");
    if (threads < 1) throw PreconditionError("thread count must be positive");
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open config '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("bad config JSON: ") + e.what(), 1, 1);
    }
    RunConfig cfg;
    for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string& key = it.key();
        if (key == "max_carrier") cfg.max_carrier = it.value().get<std::int64_t>();
        else if (key == "max_enumeration") cfg.max_enumeration = it.value().get<std::int64_t>();
        else if (key == "max_closure") cfg.max_closure = it.value().get<std::int64_t>();
        else if (key == "witness_depth") cfg.witness_depth = it.value().get<int>();
        else if (key == "threads") cfg.threads = it.value().get<int>();
        else if (key == "seed") cfg.seed = it.value().get<std::uint64_t>();
        else throw PreconditionError("unknown config key '" + key + "'");
    }
    cfg.validate();
    return cfg;
}

} // namespace uag
