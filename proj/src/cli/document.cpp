#include "qga/cli/document.hpp"

#include <set>

#include "qga/core/error.hpp"

namespace qga::cli {

namespace {

const std::set<std::string> kKinds = {"point", "line", "plane", "quadric", "blade", "versor"};

[[noreturn]] void invalid(const std::string& message) { throw Error(ErrorCode::InvalidDocument, message); }

}  // namespace

template <class S>
json scalar_to_json(const S& v) {
  if constexpr (ScalarTraits<S>::exact) {
    return ScalarTraits<S>::to_string(v);
  } else {
    return v == 0 ? 0.0 : v;
  }
}

template <class S>
S scalar_from_json(const json& j) {
  if (j.is_string()) return ScalarTraits<S>::parse(j.get<std::string>());
  if (j.is_number_integer()) return S(j.get<long long>());
  if (j.is_number()) return ScalarTraits<S>::parse(j.dump());
  invalid("expected a number or a numeric string, got " + j.dump());
}

template <class S>
json object_document(std::string_view kind, const Multivector<S>& mv, int n) {
  json terms = json::array();
  for (const auto& [m, c] : mv.terms()) {
    terms.push_back({{"generators", m.indices()}, {"coeff", scalar_to_json(c)}});
  }
  return {{"kind", std::string(kind)}, {"n", n}, {"data", {{"terms", terms}}}};
}

template <class S>
json matrix_to_json(const QuadricMatrix<S>& m) {
  json rows = json::array();
  for (const auto& row : m.entries()) {
    json r = json::array();
    for (const auto& v : row) r.push_back(scalar_to_json(v));
    rows.push_back(r);
  }
  return rows;
}

template <class S>
QuadricMatrix<S> matrix_from_json(const json& j) {
  if (!j.is_array()) invalid("matrix must be an array of rows");
  std::vector<std::vector<S>> rows;
  for (const auto& r : j) {
    if (!r.is_array()) invalid("matrix rows must be arrays");
    std::vector<S> row;
    for (const auto& v : r) row.push_back(scalar_from_json<S>(v));
    rows.push_back(std::move(row));
  }
  return QuadricMatrix<S>(std::move(rows));
}

template <class S>
json point_to_json(const BasePoint<S>& p) {
  json out = json::array();
  for (const auto& c : p.coords) out.push_back(scalar_to_json(c));
  return out;
}

template <class S>
BasePoint<S> point_from_text(std::string_view text) {
  BasePoint<S> p;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string_view part = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    try {
      p.coords.push_back(ScalarTraits<S>::parse(part));
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidArgument, "bad coordinate list: " + std::string(text));
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return p;
}

template <class S>
json result_to_json(const InversionResult<S>& r) {
  if (const auto* p = std::get_if<BasePoint<S>>(&r)) return {{"point", point_to_json(*p)}};
  return {{"point", "infinity"}};
}

ParsedDocument parse_document(const json& doc) {
  if (!doc.is_object()) invalid("document must be a JSON object");
  if (!doc.contains("kind") || !doc["kind"].is_string()) invalid("document needs a string \"kind\"");
  if (!doc.contains("n") || !doc["n"].is_number_integer()) invalid("document needs an integer \"n\"");
  if (!doc.contains("data") || !doc["data"].is_object()) invalid("document needs a \"data\" object");
  ParsedDocument out{doc["kind"].get<std::string>(), doc["n"].get<int>(), doc["data"]};
  if (!kKinds.count(out.kind)) invalid("unknown kind \"" + out.kind + "\"");
  if (out.n < 1 || out.n > QgaContext<double>::max_n) invalid("n out of range");
  if (!out.data.contains("terms")) {
    if (out.data.contains("matrix") || out.data.contains("coords")) return out;
    invalid("data needs a \"terms\" array, a \"matrix\" or \"coords\"");
  }
  if (!out.data["terms"].is_array()) invalid("\"terms\" must be an array");
  for (const auto& t : out.data["terms"]) {
    if (!t.is_object() || !t.contains("generators") || !t.contains("coeff") || !t["generators"].is_array()) {
      invalid("each term needs \"generators\" and \"coeff\"");
    }
    int last = 0;
    for (const auto& g : t["generators"]) {
      if (!g.is_number_integer()) invalid("generator indices must be integers");
      const int i = g.get<int>();
      if (i <= last) invalid("generators must be strictly increasing and positive");
      if (i > 3 * out.n) invalid("generator e" + std::to_string(i) + " exceeds 3n = " + std::to_string(3 * out.n));
      last = i;
    }
  }
  return out;
}

template <class S>
Multivector<S> document_multivector(const ParsedDocument& doc, const QgaContext<S>& ctx) {
  if (doc.n != ctx.n()) {
    throw Error(ErrorCode::DimensionMismatch,
                "document has n = " + std::to_string(doc.n) + ", context has n = " + std::to_string(ctx.n()));
  }
  if (!doc.data.contains("terms")) {
    if (doc.data.contains("matrix")) return quadric_to_vector(matrix_from_json<S>(doc.data["matrix"]), ctx);
    if (!doc.data["coords"].is_array()) invalid("\"coords\" must be an array");
    BasePoint<S> p;
    for (const auto& c : doc.data["coords"]) p.coords.push_back(scalar_from_json<S>(c));
    return embed(p, ctx);
  }
  Multivector<S> out = ctx.zero();
  for (const auto& t : doc.data["terms"]) {
    const auto indices = t["generators"].get<std::vector<int>>();
    out += Multivector<S>::monomial(ctx.algebra(), BasisMonomial::from_indices(indices), scalar_from_json<S>(t["coeff"]));
  }
  return out;
}

#define QGA_INSTANTIATE_DOCUMENT(S)                                                   \
  template json scalar_to_json(const S&);                                             \
  template S scalar_from_json<S>(const json&);                                        \
  template json object_document(std::string_view, const Multivector<S>&, int);        \
  template json matrix_to_json(const QuadricMatrix<S>&);                              \
  template QuadricMatrix<S> matrix_from_json<S>(const json&);                         \
  template json point_to_json(const BasePoint<S>&);                                   \
  template BasePoint<S> point_from_text<S>(std::string_view);                         \
  template json result_to_json(const InversionResult<S>&);                            \
  template Multivector<S> document_multivector(const ParsedDocument&, const QgaContext<S>&);

QGA_INSTANTIATE_DOCUMENT(double)
QGA_INSTANTIATE_DOCUMENT(Rational)

}  // namespace qga::cli
