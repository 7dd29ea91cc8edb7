#pragma once

#include <string>

#include "json.hpp"
#include "recipair/graph.hpp"
#include "recipair/group.hpp"
#include "recipair/poly.hpp"
#include "recipair/reciprocity.hpp"
#include "recipair/search.hpp"

namespace recipair {

/// Serialization preserves insertion order, keeping output byte-stable.
using Json = nlohmann::ordered_json;

/// Polynomials travel as arrays of decimal coefficient strings in ascending
/// degree, so arbitrary-precision values survive any JSON reader.
Json to_json(const IntPolynomial& p);
IntPolynomial polynomial_from_json(const Json& j);

/// {"n": ..., "edges": [[u,v], ...]} with sorted normalized edges.
Json to_json(const SimpleGraph& g);
SimpleGraph graph_from_json(const Json& j);

/// {"degree": ..., "order": ..., "generators": ["(1,2)", ...]}.
/// Reading reconstructs the group by closure and ignores "order".
Json to_json(const PermGroup& g);
PermGroup group_from_json(const Json& j);

std::string classification_tag_name(Classification::Tag tag);
Classification::Tag classification_tag_from_name(const std::string& name);

Json to_json(const Classification& c);
Classification classification_from_json(const Json& j);

Json to_json(const PairReport& report);
PairReport pair_report_from_json(const Json& j);

Json to_json(const SearchResult& result);

/// Parses "null:N", "complete:N", "cycle:N", "kstar:K,N", or inline JSON.
SimpleGraph graph_from_spec(const std::string& spec);

/// Parses "trivial:N", "sym:N", "alt:N", "cyclic:N", "dihedral:N",
/// "product:A,B", "wreath:A,B" (A and B again group specs), or inline JSON.
PermGroup group_from_spec(const std::string& spec);

}  // namespace recipair
