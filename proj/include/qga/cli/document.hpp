#pragma once

#include <string>

#include "json.hpp"
#include "qga/model/model.hpp"

namespace qga::cli {

using json = nlohmann::json;

// Float scalars are JSON numbers; exact rationals are strings ("-1/2").
// Both forms are accepted on input.
template <class S>
json scalar_to_json(const S& v);
template <class S>
S scalar_from_json(const json& j);

// {"kind": ..., "n": ..., "data": {"terms": [{"generators": [...], "coeff": ...}], ...}}
template <class S>
json object_document(std::string_view kind, const Multivector<S>& mv, int n);

template <class S>
json matrix_to_json(const QuadricMatrix<S>& m);
template <class S>
QuadricMatrix<S> matrix_from_json(const json& j);

template <class S>
json point_to_json(const BasePoint<S>& p);
template <class S>
BasePoint<S> point_from_text(std::string_view text);

template <class S>
json result_to_json(const InversionResult<S>& r);

struct ParsedDocument {
  std::string kind;
  int n = 0;
  json data;
};

// Checks kind, n and the term layout; throws InvalidDocument. A document
// without terms is read from its "matrix" (through chi) or "coords" view.
ParsedDocument parse_document(const json& doc);

template <class S>
Multivector<S> document_multivector(const ParsedDocument& doc, const QgaContext<S>& ctx);

}  // namespace qga::cli
