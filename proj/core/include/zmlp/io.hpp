#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "zmlp/divisibility.hpp"
#include "zmlp/graph.hpp"
#include "zmlp/laurent.hpp"
#include "zmlp/mutation.hpp"
#include "zmlp/toric.hpp"
#include "zmlp/zmlp.hpp"

namespace zmlp {

using Json = nlohmann::ordered_json;

// Writers produce stable key order so that dumps are byte-for-byte reproducible.
Json to_json(Point p);
Json to_json(const LatticePolygon& poly);
Json to_json(const LaurentPoly& f);
Json to_json(const AffineFunctional& phi);
Json to_json(const UnimodularAffineMap& g);
Json to_json(const MutationSpec& spec);
Json to_json(const MutationCertificate& cert);
Json to_json(const Multiplicity& m);
Json to_json(const DivTuple& t);
Json to_json(const Partition& p);
Json to_json(const DualPair& p);
Json to_json(const TriangularCertificate& cert);
Json to_json(const PairReport& r);
Json to_json(const SmallReport& r);
Json to_json(const ResidueCount& c);
Json to_json(const MutationGraph& g);
Json to_json(const Vec3& v);
Json to_json(const Cone3& c);
Json to_json(const Fan3& f);
Json to_json(const QuotientSingularity& s);
Json to_json(const WallFunction& w);
Json to_json(const WallReport& r);
Json to_json(const ExtractionResult& r);

// Readers throw std::invalid_argument on malformed input.
Point point_from_json(const Json& j);
LatticePolygon polygon_from_json(const Json& j);
// Accepts {"terms": [...]} or a string expression.
LaurentPoly poly_from_json(const Json& j);
MutationSpec spec_from_json(const Json& j);
UnimodularAffineMap map_from_json(const Json& j);
MutationCertificate certificate_from_json(const Json& j);
Partition partition_from_json(const Json& j);
DualPair pair_from_json(const Json& j);
DivTuple div_tuple_from_json(const Json& j);

Json read_json_file(const std::string& path);
// Two-space indentation and a trailing newline.
void write_json_file(const std::string& path, const Json& j);
std::string dump(const Json& j);

}  // namespace zmlp
