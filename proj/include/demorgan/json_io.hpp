#pragma once

#include <json.hpp>

#include "demorgan/algebra.hpp"
#include "demorgan/congruence.hpp"
#include "demorgan/dual_space.hpp"
#include "demorgan/duality.hpp"
#include "demorgan/generator.hpp"
#include "demorgan/isomorphism.hpp"

namespace demorgan {

// Insertion-ordered, so serialized key order is fixed.
using Json = nlohmann::ordered_json;

// Parsers reject unknown keys, missing keys and wrongly typed values with
// InputError. Axioms are not checked here.
AlgebraTables algebra_tables_from_json(const Json& j);
DualSpaceTables dual_space_tables_from_json(const Json& j);
Congruence congruence_from_json(const Json& j);

// Parses and validates; InputError on any failure.
DeMorganAlgebra algebra_from_json(const Json& j);
DualSpace dual_space_from_json(const Json& j);

Json to_json(const DeMorganAlgebra& m);
Json to_json(const DualSpace& x);
Json to_json(const Congruence& c);
Json to_json(const CongruenceSet& s);
Json to_json(const SubalgebraEmbedding& e);
Json to_json(const std::vector<AxiomViolation>& violations);
Json to_json(const ExtensionReport& r);
Json to_json(const FactorDecomposition& d);
Json to_json(const IsoWitness& w);
Json to_json(const BooleanProductReport& r);
Json to_json(const CorpusEntry& e);

// Text parse; InputError on malformed JSON.
Json parse_json(const std::string& text);

}  // namespace demorgan
