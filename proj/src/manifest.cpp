#include "adeg/manifest.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace adeg {

std::string prop_status_name(PropStatus s) {
    switch (s) {
        case PropStatus::CertifiedExact: return "CERTIFIED_EXACT";
        case PropStatus::Reported: return "REPORTED";
        case PropStatus::Failed: return "FAILED";
    }
    return "FAILED";
}

void RunManifest::add_input(const std::string& path) {
    inputs.emplace_back(path, file_digest(path));
}

void RunManifest::certified(const std::string& name, const std::string& lhs,
                            const std::string& relation, const std::string& rhs,
                            const std::string& note) {
    properties.push_back({name, PropStatus::CertifiedExact, lhs, relation, rhs, note});
}

void RunManifest::reported(const std::string& name, const std::string& lhs,
                           const std::string& relation, const std::string& rhs,
                           const std::string& note) {
    properties.push_back({name, PropStatus::Reported, lhs, relation, rhs, note});
}

void RunManifest::failed(const std::string& name, const std::string& lhs,
                         const std::string& relation, const std::string& rhs,
                         const std::string& note) {
    properties.push_back({name, PropStatus::Failed, lhs, relation, rhs, note});
}

void RunManifest::check(const std::string& name, bool ok, const std::string& lhs,
                        const std::string& relation, const std::string& rhs) {
    if (ok)
        certified(name, lhs, relation, rhs);
    else
        failed(name, lhs, relation, rhs);
}

nlohmann::ordered_json RunManifest::to_json() const {
    nlohmann::ordered_json j;
    j["command"] = command;
    nlohmann::ordered_json ins = nlohmann::ordered_json::array();
    for (const auto& [path, digest] : inputs)
        ins.push_back({{"path", path}, {"digest", digest}});
    j["inputs"] = std::move(ins);
    j["params"] = params;
    nlohmann::ordered_json props = nlohmann::ordered_json::array();
    for (const auto& p : properties) {
        nlohmann::ordered_json e;
        e["name"] = p.name;
        e["status"] = prop_status_name(p.status);
        if (!p.lhs.empty()) e["lhs"] = p.lhs;
        if (!p.relation.empty()) e["relation"] = p.relation;
        if (!p.rhs.empty()) e["rhs"] = p.rhs;
        if (!p.note.empty()) e["note"] = p.note;
        props.push_back(std::move(e));
    }
    j["properties"] = std::move(props);
    j["wall_seconds"] = wall_seconds;
    return j;
}

void RunManifest::write_atomic(const std::string& path) const {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) throw std::runtime_error("cannot write '" + tmp + "'");
        out << to_json().dump(2) << "\n";
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw std::runtime_error("cannot move manifest into place at '" + path + "'");
}

int RunManifest::exit_code() const {
    bool any_reported = false;
    for (const auto& p : properties) {
        if (p.status == PropStatus::Failed) return 1;
        if (p.status == PropStatus::Reported) any_reported = true;
    }
    return any_reported ? 2 : 0;
}

std::string file_digest(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot digest '" + path + "'");
    uint64_t h = 0xcbf29ce484222325ULL;
    char c;
    while (in.get(c)) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string("fnv1a64:") + buf;
}

}  // namespace adeg
