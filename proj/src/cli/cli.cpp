#include "qga/cli/cli.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "qga/cli/document.hpp"
#include "qga/cli/sampler.hpp"
#include "qga/core/error.hpp"
#include "qga/oracle/oracle.hpp"
#include "qga/transform/motion.hpp"
#include "qga/transform/point_map.hpp"

namespace qga::cli {

namespace {

struct Options {
  std::string command;
  std::optional<int> n;
  std::string mode = "float";
  double eps = 1e-9;
  std::string variant = "conjugate";

  std::vector<std::string> points;
  std::string point;
  std::string object;
  std::string quadric;
  std::string vector;
  std::string matrix;
  std::string matrix_file;
  std::string direction = "to-ipns";
  std::string space = "ipns";
  std::string box = "-2,2";
  double step = 0.01;
  int max_grade = 1;
  bool slope_params = false;
  // Motor factors in command-line order: ('r' | 't', values).
  std::vector<std::pair<char, std::string>> factors;
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse_json(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::InvalidDocument, what + ": " + e.what());
  }
}

ParsedDocument load_document(const std::string& path) { return parse_document(parse_json(read_file(path), path)); }

std::vector<double> split_doubles(const std::string& text) {
  std::vector<double> out;
  for (const auto& c : point_from_text<double>(text).coords) out.push_back(c);
  return out;
}

std::string_view hyperplane_kind(int n) { return n == 2 ? "line" : n == 3 ? "plane" : "quadric"; }

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

template <class S>
class Runner {
 public:
  Runner(const Options& o, std::ostream& out) : o_(o), out_(out) {
    tol_.compare = o.eps;
    tol_.zero = std::min(tol_.zero, o.eps);
  }

  void run() {
    const std::string& c = o_.command;
    if (c == "embed") return embed_cmd();
    if (c == "classify") return classify_cmd();
    if (c == "quadric-from-points") return quadric_from_points_cmd();
    if (c == "hyperplane") return hyperplane_cmd();
    if (c == "chi") return chi_cmd();
    if (c == "dualize") return dualize_cmd();
    if (c == "invert") return invert_cmd();
    if (c == "motor") return motor_cmd();
    if (c == "gipns") return gipns_cmd();
    if (c == "sample") return sample_cmd();
    if (c == "cayley") return cayley_cmd();
    throw UsageError("a subcommand is required");
  }

 private:
  QgaContext<S> context(int n) const {
    if (o_.n && *o_.n != n) {
      throw Error(ErrorCode::DimensionMismatch,
                  "--n " + std::to_string(*o_.n) + " does not match the input dimension " + std::to_string(n));
    }
    if (n < 1 || n > QgaContext<S>::max_n) throw Error(ErrorCode::InvalidArgument, "n out of range");
    return QgaContext<S>(n, tol_);
  }

  int required_n() const {
    if (!o_.n) throw UsageError("--n is required");
    return *o_.n;
  }

  std::vector<BasePoint<S>> points() const {
    std::vector<BasePoint<S>> out;
    for (const auto& p : o_.points) out.push_back(point_from_text<S>(p));
    if (out.empty()) throw UsageError("at least one -p point is required");
    for (const auto& p : out) {
      if (p.dim() != out.front().dim()) throw Error(ErrorCode::DimensionMismatch, "points differ in dimension");
    }
    return out;
  }

  json quadric_document(const Multivector<S>& v, const QgaContext<S>& ctx, std::string_view kind = "quadric") const {
    json doc = object_document(kind, v, ctx.n());
    doc["data"]["matrix"] = matrix_to_json(vector_to_quadric(v, ctx));
    return doc;
  }

  void embed_cmd() {
    const auto p = point_from_text<S>(o_.point);
    const auto ctx = context(static_cast<int>(p.dim()));
    json doc = object_document("point", embed(p, ctx), ctx.n());
    doc["data"]["coords"] = point_to_json(p);
    emit(out_, doc);
  }

  void classify_cmd() {
    std::optional<QgaContext<S>> ctx;
    Multivector<S> v = [&] {
      if (!o_.object.empty()) {
        const auto doc = load_document(o_.object);
        ctx.emplace(context(doc.n));
        return document_multivector(doc, *ctx);
      }
      if (o_.vector.empty()) throw UsageError("classify needs --object or --vector");
      const auto coeffs = point_from_text<S>(o_.vector).coords;
      if (coeffs.size() % 3 != 0) throw Error(ErrorCode::DimensionMismatch, "--vector needs 3n coefficients");
      ctx.emplace(context(static_cast<int>(coeffs.size() / 3)));
      return ctx->vector(coeffs);
    }();
    const auto cls = classify_vector(v, *ctx);
    json out = {{"classification", std::string(to_string(cls))}};
    if (cls == VectorClassification::NormalizedPoint || cls == VectorClassification::ScaledPoint) {
      out["point"] = point_to_json(unembed(v, *ctx));
    }
    if (cls == VectorClassification::QuadricVector) {
      out["matrix"] = matrix_to_json(vector_to_quadric(v, *ctx));
      if (ctx->n() == 2) out["conic"] = std::string(to_string(classify_conic(v, *ctx)));
    }
    emit(out_, out);
  }

  void quadric_from_points_cmd() {
    const auto pts = points();
    const auto ctx = context(static_cast<int>(pts.front().dim()));
    emit(out_, quadric_document(quadric_through_points(pts, ctx), ctx));
  }

  void hyperplane_cmd() {
    const auto pts = points();
    const auto ctx = context(static_cast<int>(pts.front().dim()));
    emit(out_, quadric_document(hyperplane_through_points(pts, ctx), ctx, hyperplane_kind(ctx.n())));
  }

  void chi_cmd() {
    if (!o_.object.empty()) {
      const auto doc = load_document(o_.object);
      const auto ctx = context(doc.n);
      emit(out_, json{{"matrix", matrix_to_json(vector_to_quadric(document_multivector(doc, ctx), ctx))}});
      return;
    }
    std::string text = o_.matrix;
    if (!o_.matrix_file.empty()) text = read_file(o_.matrix_file);
    if (text.empty()) throw UsageError("chi needs --matrix, --matrix-file or --object");
    json j = parse_json(text, "matrix");
    if (j.is_object() && j.contains("matrix")) j = j["matrix"];
    const auto m = matrix_from_json<S>(j);
    const auto ctx = context(m.n());
    emit(out_, quadric_document(quadric_to_vector(m, ctx), ctx));
  }

  void dualize_cmd() {
    const auto doc = load_document(o_.object);
    const auto ctx = context(doc.n);
    const auto dir = o_.direction == "to-ipns" ? DualDirection::ToInner : DualDirection::ToOuter;
    const auto d = dualize(document_multivector(doc, ctx), dir, ctx);
    emit(out_, object_document(d.homogeneous_grade() == 1 ? "quadric" : "blade", d, ctx.n()));
  }

  SandwichVariant variant() const {
    return o_.variant == "inverse" ? SandwichVariant::Inverse : SandwichVariant::Conjugate;
  }

  void invert_cmd() {
    const auto qdoc = load_document(o_.quadric);
    const auto ctx = context(qdoc.n);
    const auto a = document_multivector(qdoc, ctx);
    if (!o_.point.empty()) {
      const auto p = point_from_text<S>(o_.point);
      if (static_cast<int>(p.dim()) != ctx.n()) throw Error(ErrorCode::DimensionMismatch, "point dimension differs from n");
      emit(out_, result_to_json(invert_point(a, p, ctx)));
      return;
    }
    if (o_.object.empty()) throw UsageError("invert needs --point or --object");
    const auto odoc = load_document(o_.object);
    const auto x = document_multivector(odoc, ctx);
    if (a.homogeneous_grade() != 1) throw Error(ErrorCode::NotAQuadric, "the inverting object must be a grade-1 vector");
    const auto image = variant() == SandwichVariant::Conjugate ? invert_blade(a, x) : sandwich(a, x, variant());
    if (image.homogeneous_grade() == 1) {
      emit(out_, quadric_document(image, ctx));
    } else {
      emit(out_, object_document(odoc.kind, image, ctx.n()));
    }
  }

  Direction<S> direction(const std::string& text) const {
    if constexpr (ScalarTraits<S>::exact) {
      return Direction<S>::from_slope_parameter(ScalarTraits<S>::parse(text));
    } else {
      const double v = ScalarTraits<double>::parse(text);
      return o_.slope_params ? Direction<S>::from_slope_parameter(v) : Direction<S>::from_angle(v);
    }
  }

  static std::vector<std::string> split(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) out.push_back(part);
    return out;
  }

  void motor_cmd() {
    const auto ctx = context(2);
    if (o_.factors.empty()) throw UsageError("motor needs at least one --rotor or --translator");
    std::optional<Versor<S>> g;
    for (const auto& [kind, text] : o_.factors) {
      const auto parts = split(text);
      std::optional<Versor<S>> f;
      if (kind == 'r') {
        if (parts.size() != 2) throw UsageError("--rotor takes phi,psi");
        f.emplace(rotor_from_lines(direction(parts[0]), direction(parts[1]), ctx));
      } else {
        if (parts.size() != 3) throw UsageError("--translator takes phi,t1,t2");
        f.emplace(translator_from_lines(direction(parts[0]), ScalarTraits<S>::parse(parts[1]),
                                        ScalarTraits<S>::parse(parts[2]), ctx));
      }
      g = g ? *f * *g : *f;
    }
    const auto q = se2_to_dual_quaternion(*g);
    json out = {{"versor", object_document("versor", g->value(), 2)},
                {"dual_quaternion",
                 {{"real", scalar_to_json(q.real)},
                  {"i", scalar_to_json(q.i)},
                  {"ej", scalar_to_json(q.ej)},
                  {"ek", scalar_to_json(q.ek)}}}};
    if (!o_.point.empty()) {
      const auto p = point_from_text<S>(o_.point);
      if (p.dim() != 2) throw Error(ErrorCode::DimensionMismatch, "motor points are 2D");
      out["image"] = result_to_json(PointMap<S>(*g, ctx)(p))["point"];
    }
    emit(out_, out);
  }

  void gipns_cmd() {
    const auto doc = load_document(o_.object);
    const auto ctx = context(doc.n);
    const auto kind = o_.space == "ipns" ? NullSpace::Inner : NullSpace::Outer;
    const auto sys = blade_to_system(document_multivector(doc, ctx), kind, ctx);
    json comps = json::array();
    for (const auto& [m, poly] : sys.components) {
      comps.push_back({{"monomial", m.indices()}, {"polynomial", poly.to_string()}});
    }
    emit(out_, json{{"n", ctx.n()}, {"space", o_.space}, {"rank", sys.rank()}, {"components", comps}});
  }

  void sample_cmd() {
    const auto doc = load_document(o_.quadric);
    const auto ctx = context(doc.n);
    const auto poly = quadric_polynomial(vector_to_quadric(document_multivector(doc, ctx), ctx));
    ImplicitPolynomial<double> f(poly.vars());
    for (const auto& [e, c] : poly.terms()) f.add_term(e, ScalarTraits<S>::to_double(c));
    const auto bounds = split_doubles(o_.box);
    Box box;
    const auto n = static_cast<std::size_t>(ctx.n());
    if (bounds.size() == 2) {
      box = Box::cube(ctx.n(), bounds[0], bounds[1]);
    } else if (bounds.size() == 2 * n) {
      for (std::size_t k = 0; k < n; ++k) {
        box.lo.push_back(bounds[2 * k]);
        box.hi.push_back(bounds[2 * k + 1]);
      }
    } else {
      throw UsageError("--box takes lo,hi or one lo,hi pair per axis");
    }
    write_csv(out_, sample_zero_set(f, box, o_.step), ctx.n());
  }

  void cayley_cmd() {
    const auto ctx = context(required_n());
    const int dim = 3 * ctx.n();
    if (o_.max_grade < 0 || o_.max_grade > dim) throw Error(ErrorCode::GradeOutOfRange, "--max-grade out of range");
    if (dim > 12 && o_.max_grade > 2) throw Error(ErrorCode::InvalidArgument, "table too large");
    std::vector<BasisMonomial> basis;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << dim); ++mask) {
      if (std::popcount(mask) <= o_.max_grade) basis.emplace_back(static_cast<Mask>(mask));
    }
    json entries = json::array();
    for (const auto& a : basis) {
      for (const auto& b : basis) {
        const auto ma = Multivector<S>::monomial(ctx.algebra(), a);
        const auto mb = Multivector<S>::monomial(ctx.algebra(), b);
        json terms = object_document("blade", ma * mb, ctx.n())["data"]["terms"];
        entries.push_back({{"left", a.indices()}, {"right", b.indices()}, {"product", terms}});
      }
    }
    emit(out_, json{{"n", ctx.n()}, {"max_grade", o_.max_grade}, {"entries", entries}});
  }

  const Options& o_;
  std::ostream& out_;
  Tolerance tol_;
};

void error_object(std::ostream& err, std::string_view code, const std::string& message) {
  err << json{{"error", {{"code", std::string(code)}, {"message", message}}}}.dump() << "\n";
}

}  // namespace

int execute_command(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Quadric geometric algebra toolkit", argv.empty() ? "qga" : argv.front()};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--n", o.n, "Base dimension")->check(CLI::Range(1, QgaContext<double>::max_n));
  app.add_option("--mode", o.mode, "Scalar mode (QGA_MODE overrides)")->check(CLI::IsMember({"float", "rational"}));
  app.add_option("--eps", o.eps, "Float comparison tolerance")->check(CLI::PositiveNumber);
  app.add_option("--variant", o.variant, "Sandwich variant")->check(CLI::IsMember({"conjugate", "inverse"}));

  auto* embed = app.add_subcommand("embed", "Embed a base point");
  embed->add_option("--point", o.point, "x,y[,...]")->required();

  auto* classify = app.add_subcommand("classify", "Classify a grade-1 element");
  classify->add_option("--object", o.object, "Object document");
  classify->add_option("--vector", o.vector, "Comma-separated coefficients of e1..e3n");

  auto* qfp = app.add_subcommand("quadric-from-points", "Quadric through 2n points");
  qfp->add_option("-p,--point", o.points, "x,y[,...]")->required();

  auto* hyper = app.add_subcommand("hyperplane", "Hyperplane through n points");
  hyper->add_option("-p,--point", o.points, "x,y[,...]")->required();

  auto* chi = app.add_subcommand("chi", "Convert between quadric matrices and vectors");
  chi->add_option("--matrix", o.matrix, "Matrix as JSON rows");
  chi->add_option("--matrix-file", o.matrix_file, "File holding the matrix JSON");
  chi->add_option("--object", o.object, "Quadric document to convert to a matrix");

  auto* dual = app.add_subcommand("dualize", "Switch between outer and inner null spaces");
  dual->add_option("--object", o.object, "Object document")->required();
  dual->add_option("--direction", o.direction)->check(CLI::IsMember({"to-ipns", "to-opns"}));

  auto* invert = app.add_subcommand("invert", "Invert a point or object in a quadric");
  invert->add_option("--quadric", o.quadric, "Quadric document")->required();
  invert->add_option("--point", o.point, "x,y[,...]");
  invert->add_option("--object", o.object, "Object document");

  auto* motor = app.add_subcommand("motor", "Compose rotors and translators (n = 2)");
  motor->add_option("--rotor", "phi,psi: line directions")->each([&](const std::string& v) {
    o.factors.emplace_back('r', v);
  });
  motor->add_option("--translator", "phi,t1,t2: normal direction and offsets")->each([&](const std::string& v) {
    o.factors.emplace_back('t', v);
  });
  motor->add_flag("--param", o.slope_params, "Directions are slope parameters (always in rational mode)");
  motor->add_option("--point", o.point, "Point to transform");

  auto* gipns = app.add_subcommand("gipns", "Implicit polynomials of a blade's null space");
  gipns->add_option("--object", o.object, "Object document")->required();
  gipns->add_option("--space", o.space)->check(CLI::IsMember({"ipns", "opns"}));

  auto* sample = app.add_subcommand("sample", "Points on the zero set of a quadric (CSV)");
  sample->add_option("--quadric", o.quadric, "Quadric document")->required();
  sample->add_option("--box", o.box, "lo,hi or lo1,hi1,lo2,hi2,...");
  sample->add_option("--step", o.step)->check(CLI::PositiveNumber);

  auto* cayley = app.add_subcommand("cayley", "Product table of basis monomials");
  cayley->add_option("--max-grade", o.max_grade, "Largest monomial grade in the table");

  std::vector<std::string> args(argv.size() > 1 ? argv.begin() + 1 : argv.end(), argv.end());
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    error_object(err, "UsageError", e.what());
    return 2;
  }
  o.command = app.get_subcommands().front()->get_name();
  if (const char* env = std::getenv("QGA_MODE"); env && *env) {
    const std::string mode = env;
    if (mode != "float" && mode != "rational") {
      error_object(err, "UsageError", "QGA_MODE must be float or rational");
      return 2;
    }
    o.mode = mode;
  }

  try {
    if (o.mode == "rational") {
      Runner<Rational>(o, out).run();
    } else {
      Runner<double>(o, out).run();
    }
  } catch (const UsageError& e) {
    error_object(err, "UsageError", e.what());
    return 2;
  } catch (const Error& e) {
    error_object(err, to_string(e.code()), e.what());
    return 1;
  } catch (const std::exception& e) {
    error_object(err, "InternalError", e.what());
    return 1;
  }
  return 0;
}

}  // namespace qga::cli
