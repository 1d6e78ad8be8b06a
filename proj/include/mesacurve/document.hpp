/**
 * JSON curve documents.
 *
 *   {
 *     "format_version": 1,
 *     "monoid_rank": r,
 *     "vertices": [{"id": 0, "genus": 0, "markings": [{"id": 0}]}],
 *     "edges": [{"id": 0, "ends": [0, 1], "delta": [1, 0]}],
 *     "pl": {"vertex_values": {"0": [1, 0]}, "marking_slopes": {"0": 0}},
 *     "geometry": {
 *       "vertices": {"0": {"model": "P1",
 *                          "coords": {"e0": "0", "e3": ["1", "inf"],
 *                                     "h0": "1/2", "a0": "5"}}},
 *       "edges": {"0": {"alpha": "2"}}
 *     },
 *     "options": {"truncation": 6, "mode": "guaranteed"}
 *   }
 *
 * Integers may be JSON numbers or decimal strings (for values beyond 64
 * bits); rationals are strings "p/q". A loop's coordinate entry lists its two
 * ends in order. Serialization sorts object keys and is byte-stable.
 */
#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "mesacurve/acyclicity.hpp"
#include "mesacurve/errors.hpp"
#include "mesacurve/geometry.hpp"
#include "mesacurve/pl_mesa.hpp"

namespace mesacurve {

/// Parse failure located by a JSON path such as "$.edges[2].delta".
class DocumentError : public Error {
 public:
  DocumentError(ErrorCode code, std::string path, const std::string& message);
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

struct DocumentOptions {
  std::optional<std::size_t> truncation;
  std::optional<AcyclicityMode> mode;

  bool operator==(const DocumentOptions&) const = default;
};

struct CurveDocument {
  int format_version = 1;
  DualGraph graph;
  PLFunction pl;
  std::optional<ExplicitCurve> geometry;
  DocumentOptions options;

  bool operator==(const CurveDocument&) const = default;
};

/// SyntaxError, SchemaError or IntegrityError, as DocumentError.
CurveDocument parse_document(std::string_view text);
CurveDocument document_from_json(const nlohmann::json& j);

nlohmann::json to_json(const CurveDocument& doc);
/// Pretty-printed JSON with sorted keys and a trailing newline.
std::string serialize(const CurveDocument& doc);

/// Number when it fits in 64 bits, decimal string otherwise.
nlohmann::json integer_to_json(const Integer& x);
nlohmann::json to_json(const MonoidElement& x);
nlohmann::json to_json(const GroupElement& x);

}  // namespace mesacurve
