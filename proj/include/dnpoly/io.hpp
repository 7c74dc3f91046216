#ifndef DNPOLY_IO_HPP
#define DNPOLY_IO_HPP

// JSON forms of elements, diagrams, cells, triangles and census records.

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "dnpoly/ar_bridge.hpp"
#include "dnpoly/cells.hpp"
#include "dnpoly/census.hpp"
#include "dnpoly/polygon.hpp"
#include "dnpoly/ptolemy.hpp"

namespace dnpoly {

using Json = nlohmann::ordered_json;

/// Malformed or invalid input; the CLI maps it to exit status 2.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json to_json(const ArcElement& e);
Json to_json(const Diagram& d);

/// {"kind":"pair","a":..,"b":..} or {"kind":"diameter","a":..,"color":..}.
/// Vertices must lie in [0, 2n); edges and diameter chords given as pairs are
/// rejected. The result is canonical.
ArcElement element_from_json(Rank rank, const Json& j);
/// Rejects duplicates after canonicalisation.
Diagram diagram_from_json(const Json& j);

Json cells_to_json(const CellDecomposition& cells);
Json triangle_to_json(const MutationTriangle& t);
Json violation_to_json(const PtolemyViolation& v);

Json census_record(const DiagramIndex& index, std::size_t id, Mask m);
/// One census_record per line, ids in mask order.
std::string census_jsonl(const DiagramIndex& index, const std::vector<Mask>& masks);
Json graph_to_json(const DiagramIndex& index, const MutationGraph& g);

/// Whole file, or standard input for "-". Throws FormatError.
std::string read_text(const std::string& path);
/// Parses text; throws FormatError with the parser message.
Json parse_json(const std::string& text);
Diagram load_diagram(const std::string& path);
/// Throws FormatError when the file cannot be written.
void write_text(const std::string& path, const std::string& text);

}  // namespace dnpoly

#endif  // DNPOLY_IO_HPP
