#ifndef ADEG_JSON_IO_HPP
#define ADEG_JSON_IO_HPP

#include <json.hpp>
#include <string>

#include "adeg/boolfn.hpp"
#include "adeg/degree.hpp"
#include "adeg/shareapp.hpp"
#include "adeg/symprofile.hpp"
#include "adeg/witness.hpp"

namespace adeg {

using ojson = nlohmann::ordered_json;

// Function file: {"n": int, "domain": "all" | {"max_weight": k}, "table":
// {bitstring: 1|-1}} or a structured constructor {"kind": ..., "params": ...}.
ojson function_to_json(const BooleanFunction& f);
BooleanFunction function_from_json(const ojson& j);

// Witness file: {"n": int, "entries": [{"x": bitstring, "v": "p/q"}]}.
ojson witness_to_json(const DualWitness& w);
DualWitness witness_from_json(const ojson& j);

// Layer profile: {"k": int, "values": ["p/q", ...]}.
ojson profile_to_json(const SymmetricProfile& w);
SymmetricProfile profile_from_json(const ojson& j);

ojson polynomial_to_json(const MultilinearPolynomial& p);
MultilinearPolynomial polynomial_from_json(const ojson& j);

// Certificate: degree bound, both optima, and the strong-duality flag.
ojson certificate_to_json(const LpCertificate& c);

// Scheme file embeds the function, the witness, and both distributions.
ojson scheme_to_json(const SharingScheme& s);
SharingScheme scheme_from_json(const ojson& j);

ojson load_json_file(const std::string& path);
void save_json_file(const std::string& path, const ojson& j);

}  // namespace adeg

#endif
