#pragma once

#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "qfq/cohomology.hpp"
#include "qfq/fiber.hpp"
#include "qfq/index_set.hpp"
#include "qfq/qparams.hpp"
#include "qfq/scalar.hpp"
#include "qfq/structure_table.hpp"
#include "qfq/word_rewrite.hpp"

namespace qfq {

using json = nlohmann::ordered_json;

/// Malformed or schema-violating JSON input.
class JsonFormatError : public std::runtime_error {
public:
  JsonFormatError(const std::string& what, std::size_t byte = 0) : std::runtime_error(what), byte_(byte) {}
  /// Byte offset reported by the parser; 0 when the error is not positional.
  std::size_t byte() const { return byte_; }

private:
  std::size_t byte_;
};

json to_json(Mod5 x);
json to_json(const CycNum& x);
CycNum cycnum_from_json(const json& j);

json to_json(const QMatrix& m);
QMatrix qmatrix_from_json(const json& j);
/// Parses a matrix document; parse errors carry the byte position.
QMatrix parse_qmatrix(const std::string& text);

json to_json(const MultiIndex& a);
MultiIndex multi_index_from_json(const json& j);

/// {"matrix": [[..]], "entries": [{"a":[..], "b":[..], "target":[..], "exp":k, "carry":[bool x5]}, ...]}
/// Written incrementally; the full table is about 40 MB of text.
void write_table(std::ostream& os, const StructureTable& t);
/// Entries are consumed as they are parsed. Every ordered pair must appear
/// exactly once.
StructureTable read_table(std::istream& is);

json to_json(const ClassificationReport& r);
json to_json(const VerifyResult& r);
json to_json(const Violation& v);
json to_json(const CyCertificate& c);
json to_json(const AlgElement& x);
json to_json(const FiberReport& r);
json to_json(const RatPolynomial& p);

/// Plain "key: value" rendering of a JSON document.
std::string render_human(const json& j);

}  // namespace qfq
