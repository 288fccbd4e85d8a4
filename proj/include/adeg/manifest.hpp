#ifndef ADEG_MANIFEST_HPP
#define ADEG_MANIFEST_HPP

#include <json.hpp>
#include <string>
#include <vector>

namespace adeg {

enum class PropStatus { CertifiedExact, Reported, Failed };

std::string prop_status_name(PropStatus s);

// One named property per pipeline check: exact certifications carry the
// proved relation, reported entries carry both sides of an inequality the
// desk scale cannot force.
struct PropertyEntry {
    std::string name;
    PropStatus status = PropStatus::CertifiedExact;
    std::string lhs;
    std::string relation;
    std::string rhs;
    std::string note;
};

struct RunManifest {
    std::string command;
    std::vector<std::pair<std::string, std::string>> inputs;  // path -> digest
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    std::vector<PropertyEntry> properties;
    double wall_seconds = 0.0;

    void add_input(const std::string& path);
    void certified(const std::string& name, const std::string& lhs,
                   const std::string& relation = "", const std::string& rhs = "",
                   const std::string& note = "");
    void reported(const std::string& name, const std::string& lhs, const std::string& relation,
                  const std::string& rhs, const std::string& note = "");
    void failed(const std::string& name, const std::string& lhs,
                const std::string& relation = "", const std::string& rhs = "",
                const std::string& note = "");
    // records pass/fail in one call
    void check(const std::string& name, bool ok, const std::string& lhs,
               const std::string& relation = "", const std::string& rhs = "");

    nlohmann::ordered_json to_json() const;
    void write_atomic(const std::string& path) const;

    // 0: everything certified; 2: reported-only gaps; 1: failures
    int exit_code() const;
};

// FNV-1a 64-bit over the file bytes, as fixed-width hex.
std::string file_digest(const std::string& path);

}  // namespace adeg

#endif
