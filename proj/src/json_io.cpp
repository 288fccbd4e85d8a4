#include "adeg/json_io.hpp"

#include <fstream>

namespace adeg {

namespace {

FnKind kind_from_name(const std::string& name) {
    if (name == "or") return FnKind::Or;
    if (name == "and") return FnKind::And;
    if (name == "maj") return FnKind::Maj;
    if (name == "parity") return FnKind::Parity;
    if (name == "const") return FnKind::Const;
    if (name == "surj") return FnKind::Surj;
    throw std::invalid_argument("unknown function kind '" + name + "'");
}

}  // namespace

ojson function_to_json(const BooleanFunction& f) {
    ojson j;
    j["n"] = f.n();
    if (f.domain_kind() == DomainKind::All)
        j["domain"] = "all";
    else if (f.domain_kind() == DomainKind::MaxWeight)
        j["domain"] = ojson{{"max_weight", f.weight_cap()}};
    else
        j["domain"] = "explicit";
    ojson table = ojson::object();
    for (uint64_t x : f.domain_points()) table[mask_to_bits(x, f.n())] = f.value(x);
    j["table"] = std::move(table);
    return j;
}

BooleanFunction function_from_json(const ojson& j) {
    if (j.contains("kind")) {
        const std::string kind = j.at("kind").get<std::string>();
        const auto& params = j.at("params");
        if (kind == "surj")
            return surjectivity(params.at("N").get<int>(), params.at("R").get<int>());
        if (kind == "const")
            return make_basic(FnKind::Const, params.at("n").get<int>(),
                              params.value("sign", 1));
        if (kind == "compose") {
            auto f = function_from_json(params.at("outer"));
            auto g = function_from_json(params.at("inner"));
            return block_compose(f, g);
        }
        return make_basic(kind_from_name(kind), params.at("n").get<int>());
    }
    const int n = j.at("n").get<int>();
    const auto& table = j.at("table");
    auto value_of = [&](uint64_t x) {
        return table.at(mask_to_bits(x, n)).get<int>();
    };
    if (j.at("domain").is_string() && j.at("domain").get<std::string>() == "all")
        return BooleanFunction::total(n, value_of);
    std::vector<uint64_t> pts;
    for (const auto& [key, val] : table.items()) pts.push_back(bits_to_mask(key));
    DomainKind dk = DomainKind::Explicit;
    int cap = 0;
    if (j.at("domain").is_object() && j.at("domain").contains("max_weight")) {
        dk = DomainKind::MaxWeight;
        cap = j.at("domain").at("max_weight").get<int>();
    }
    return BooleanFunction::on_points(n, std::move(pts), value_of, dk, cap);
}

ojson witness_to_json(const DualWitness& w) {
    ojson j;
    j["n"] = w.n();
    ojson entries = ojson::array();
    for (const auto& [x, v] : w.entries())
        entries.push_back(ojson{{"x", mask_to_bits(x, w.n())}, {"v", rat_str(v)}});
    j["entries"] = std::move(entries);
    return j;
}

DualWitness witness_from_json(const ojson& j) {
    DualWitness w(j.at("n").get<int>());
    for (const auto& e : j.at("entries"))
        w.set(bits_to_mask(e.at("x").get<std::string>()), rat_parse(e.at("v").get<std::string>()));
    return w;
}

ojson profile_to_json(const SymmetricProfile& w) {
    ojson j;
    j["k"] = w.k;
    ojson vals = ojson::array();
    for (const Rat& v : w.values) vals.push_back(rat_str(v));
    j["values"] = std::move(vals);
    return j;
}

SymmetricProfile profile_from_json(const ojson& j) {
    SymmetricProfile w;
    w.k = j.at("k").get<int>();
    for (const auto& v : j.at("values")) w.values.push_back(rat_parse(v.get<std::string>()));
    if (static_cast<int>(w.values.size()) != w.k + 1)
        throw std::invalid_argument("profile_from_json: need k+1 values");
    return w;
}

ojson polynomial_to_json(const MultilinearPolynomial& p) {
    ojson j;
    j["n"] = p.n();
    ojson terms = ojson::array();
    for (const auto& [S, c] : p.coefficients())
        terms.push_back(ojson{{"vars", mask_to_bits(S, p.n())}, {"c", rat_str(c)}});
    j["terms"] = std::move(terms);
    return j;
}

MultilinearPolynomial polynomial_from_json(const ojson& j) {
    MultilinearPolynomial p(j.at("n").get<int>());
    for (const auto& t : j.at("terms"))
        p.set(bits_to_mask(t.at("vars").get<std::string>()),
              rat_parse(t.at("c").get<std::string>()));
    return p;
}

ojson certificate_to_json(const LpCertificate& c) {
    ojson j;
    j["degree_bound"] = c.degree_bound;
    j["primal_eps"] = rat_str(c.primal_eps);
    j["primal_poly"] = polynomial_to_json(c.primal_poly);
    j["dual_correlation"] = rat_str(c.dual_correlation);
    j["witness"] = witness_to_json(c.witness);
    j["strong_duality"] = c.strong_duality;
    return j;
}

ojson scheme_to_json(const SharingScheme& s) {
    ojson j;
    j["function"] = function_to_json(s.f);
    j["witness"] = witness_to_json(s.psi);
    auto dist = [&](const std::vector<std::pair<uint64_t, Rat>>& d) {
        ojson arr = ojson::array();
        for (const auto& [x, p] : d)
            arr.push_back(ojson{{"x", mask_to_bits(x, s.f.n())}, {"p", rat_str(p)}});
        return arr;
    };
    j["dist_plus"] = dist(s.dist_plus);
    j["dist_minus"] = dist(s.dist_minus);
    return j;
}

SharingScheme scheme_from_json(const ojson& j) {
    auto f = function_from_json(j.at("function"));
    auto psi = witness_from_json(j.at("witness"));
    SharingScheme s = scheme_from_witness(f, psi);
    // the stored distributions must match the witness they came from
    auto check = [&](const char* key, const std::vector<std::pair<uint64_t, Rat>>& built) {
        const auto& arr = j.at(key);
        if (arr.size() != built.size())
            throw std::invalid_argument("scheme_from_json: stale distribution table");
        size_t i = 0;
        for (const auto& e : arr) {
            if (bits_to_mask(e.at("x").get<std::string>()) != built[i].first ||
                rat_parse(e.at("p").get<std::string>()) != built[i].second)
                throw std::invalid_argument("scheme_from_json: stale distribution table");
            ++i;
        }
    };
    check("dist_plus", s.dist_plus);
    check("dist_minus", s.dist_minus);
    return s;
}

ojson load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    ojson j;
    in >> j;
    return j;
}

void save_json_file(const std::string& path, const ojson& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << j.dump(2) << "\n";
}

}  // namespace adeg
