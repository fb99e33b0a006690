#include "mfcat/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace mfcat {

using json = nlohmann::json;

namespace {

std::string locate(std::size_t line, std::size_t column, const std::string& path, const std::string& detail) {
  if (line > 0) return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + detail;
  return (path.empty() ? std::string("document") : path) + ": " + detail;
}

[[noreturn]] void bad(const std::string& path, const std::string& detail) { throw SyntaxError(0, 0, path, detail); }

std::string join(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }

const json& member(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) bad(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) bad(path, "missing key '" + key + "'");
  return *it;
}

const json* optional_member(const json& obj, const std::string& key) {
  auto it = obj.find(key);
  return it == obj.end() ? nullptr : &*it;
}

std::string text(const json& j, const std::string& path) {
  if (!j.is_string()) bad(path, "expected a string");
  return j.get<std::string>();
}

std::size_t count(const json& j, const std::string& path) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
    bad(path, "expected a non-negative integer");
  return j.get<std::size_t>();
}

std::vector<int> ints(const json& j, const std::string& path) {
  if (!j.is_array()) bad(path, "expected an array of integers");
  std::vector<int> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number_integer()) bad(path + "[" + std::to_string(i) + "]", "expected an integer");
    out.push_back(j[i].get<int>());
  }
  return out;
}

Poly poly(const json& j, const RingPtr& ring, const std::string& path) {
  std::string s = text(j, path);
  try {
    return parse_poly(s, ring);
  } catch (const Error& e) {
    bad(path, std::string(to_string(e.kind())) + ": " + e.detail());
  }
}

PolyMatrix matrix(const json& j, const RingPtr& ring, std::size_t rows, std::size_t cols, const std::string& path) {
  if (!j.is_array() || j.size() != rows)
    bad(path, "expected a " + std::to_string(rows) + "x" + std::to_string(cols) + " matrix");
  PolyMatrix m(ring, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const std::string rp = path + "[" + std::to_string(r) + "]";
    if (!j[r].is_array() || j[r].size() != cols) bad(rp, "expected a row of " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = poly(j[r][c], ring, rp + "[" + std::to_string(c) + "]");
  }
  return m;
}

json matrix_json(const PolyMatrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
    out.push_back(std::move(row));
  }
  return out;
}

json labels_json(const DegreeLabels& l) { return json{{"p0", l.p0}, {"p1", l.p1}}; }

std::optional<DegreeLabels> labels_from(const json& payload, const std::string& path) {
  const json* l = optional_member(payload, "labels");
  if (!l) return std::nullopt;
  const std::string lp = join(path, "labels");
  return DegreeLabels{ints(member(*l, "p1", lp), join(lp, "p1")), ints(member(*l, "p0", lp), join(lp, "p0"))};
}

json ring_json(const RingPtr& ring) {
  json out{{"field", ring->field().name()}, {"vars", ring->vars()}};
  if (ring->has_modulus()) out["modulus"] = modulus_of(ring).to_string();
  if (ring->grading()) out["grading"] = *ring->grading();
  return out;
}

RingPtr ring_from(const json& j, const std::string& path) {
  FieldSpec field = FieldSpec::rationals();
  try {
    field = FieldSpec::parse(text(member(j, "field", path), join(path, "field")));
  } catch (const SyntaxError&) {
    throw;
  } catch (const Error& e) {
    bad(join(path, "field"), e.detail());
  }
  const json& vars = member(j, "vars", path);
  if (!vars.is_array()) bad(join(path, "vars"), "expected an array of variable names");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < vars.size(); ++i) names.push_back(text(vars[i], join(path, "vars") + "[" + std::to_string(i) + "]"));
  std::optional<std::vector<int>> grading;
  if (const json* g = optional_member(j, "grading")) grading = ints(*g, join(path, "grading"));
  RingPtr ring;
  try {
    ring = RingSpec::make(field, names, grading);
  } catch (const Error& e) {
    bad(path, e.detail());
  }
  if (const json* m = optional_member(j, "modulus")) {
    Poly f = poly(*m, ring, join(path, "modulus"));
    try {
      ring = make_quotient(ring, f);
    } catch (const Error& e) {
      bad(join(path, "modulus"), std::string(to_string(e.kind())) + ": " + e.detail());
    }
  }
  return ring;
}

struct Context {
  RingPtr ring;     // as declared, possibly with a modulus
  RingPtr ambient;  // the free ring underneath
  Poly omega;       // over the ring objects are stored in
  std::filesystem::path base_dir;
  SolveOptions opts;
};

RingPtr require_free(const Context& c, const std::string& kind) {
  if (c.ring->has_modulus()) bad("ring", kind + " documents are stored over a ring without modulus");
  return c.ring;
}

void require_modulus(const Context& c, const std::string& kind) {
  if (!c.ring->has_modulus()) bad("ring", kind + " documents need the hypersurface as ring modulus");
}

// ---- per-kind payloads -------------------------------------------------

json mf_payload(const MFObject& x) {
  json p{{"rank", x.rank()}, {"rho0", matrix_json(x.rho0)}, {"rho1", matrix_json(x.rho1)}};
  if (x.labels) p["labels"] = labels_json(*x.labels);
  return p;
}

MFObject mf_from(const json& p, const Context& c, const std::string& path) {
  std::size_t n = count(member(p, "rank", path), join(path, "rank"));
  PolyMatrix rho1 = matrix(member(p, "rho1", path), c.ring, n, n, join(path, "rho1"));
  PolyMatrix rho0 = matrix(member(p, "rho0", path), c.ring, n, n, join(path, "rho0"));
  return mf_make(c.ring, c.omega, std::move(rho1), std::move(rho0), labels_from(p, path));
}

json mon_payload(const MonObject& m) {
  json p{{"g1", matrix_json(m.g1)}, {"rank", m.rank()}};
  auto w = m.omega.homogeneous_degree(m.ring->weights());
  std::optional<DegreeLabels> inferred = w ? infer_map_labels(m.g1) : std::nullopt;
  if (m.labels && m.labels != inferred) p["labels"] = labels_json(*m.labels);
  return p;
}

MonObject mon_from(const json& p, const Context& c, const std::string& path, bool checked) {
  std::size_t n = count(member(p, "rank", path), join(path, "rank"));
  PolyMatrix g1 = matrix(member(p, "g1", path), c.ring, n, n, join(path, "g1"));
  auto labels = labels_from(p, path);
  if (!checked) {
    try {
      MonObject m = mon_validate(c.ring, c.omega, g1, c.opts);
      if (labels) m.labels = labels;
      return m;
    } catch (const Error&) {
      MonObject m = mon_unchecked(c.ring, c.omega, g1);
      m.labels = labels;
      return m;
    }
  }
  MonObject m = mon_validate(c.ring, c.omega, g1, c.opts);
  if (labels) {
    if (labels->p1.size() != n || labels->p0.size() != n) bad(join(path, "labels"), "labels do not match the rank");
    m.labels = labels;
  }
  return m;
}

json presentation_json(const GPModule& g) {
  const MFObject& x = g.presentation;
  return json{{"rank", x.rank()}, {"rho0", matrix_json(x.rho0)}, {"rho1", matrix_json(x.rho1)}};
}

GPModule presentation_from(const json& p, const Context& c, const std::string& path) {
  std::size_t n = count(member(p, "rank", path), join(path, "rank"));
  PolyMatrix rho1 = matrix(member(p, "rho1", path), c.ambient, n, n, join(path, "rho1"));
  PolyMatrix rho0 = matrix(member(p, "rho0", path), c.ambient, n, n, join(path, "rho0"));
  Poly f = modulus_of(c.ring).in_ring(c.ambient);
  return gp_make(mf_make(c.ambient, f, std::move(rho1), std::move(rho0)));
}

json gp_map_json(const GPMorphism& m) { return json{{"u", matrix_json(m.u)}, {"v", matrix_json(m.v)}}; }

GPMorphism gp_map_from(const json& p, const GPModule& source, const GPModule& target, const Context& c,
                       const std::string& path) {
  PolyMatrix v = matrix(member(p, "v", path), c.ambient, target.rank(), source.rank(), join(path, "v"));
  std::optional<PolyMatrix> u;
  if (const json* uj = optional_member(p, "u")) u = matrix(*uj, c.ambient, target.rank(), source.rank(), join(path, "u"));
  return gp_morphism(source, target, std::move(v), std::move(u), c.opts);
}

json rmod_payload(const RModulePresentation& x) {
  json p{{"A", matrix_json(x.A)}, {"cols", x.A.cols()}, {"rows", x.A.rows()}};
  if (x.labels) p["labels"] = labels_json(*x.labels);
  return p;
}

RModulePresentation rmod_from(const json& p, const Context& c, const std::string& path) {
  std::size_t rows = count(member(p, "rows", path), join(path, "rows"));
  std::size_t cols = count(member(p, "cols", path), join(path, "cols"));
  PolyMatrix a = matrix(member(p, "A", path), c.ring, rows, cols, join(path, "A"));
  return rmod_make(c.omega, std::move(a), labels_from(p, path));
}

Object object_from(const std::string& kind, const json& payload, const Context& c, const std::string& path);

json object_payload(const Object& x);

// A morphism end: {"file": path} or {"kind": k, "payload": {...}}.
Object end_from(const json& j, const Context& c, const std::string& path);

template <class Obj>
Obj end_as(const json& j, const Context& c, const std::string& path, const char* kind) {
  Object o = end_from(j, c, path);
  if (!std::holds_alternative<Obj>(o)) bad(path, std::string("expected a ") + kind + " object");
  return std::get<Obj>(std::move(o));
}

Object end_from(const json& j, const Context& c, const std::string& path) {
  if (const json* f = optional_member(j, "file")) {
    std::filesystem::path file = c.base_dir / text(*f, join(path, "file"));
    Object o = read_object(file, c.opts);
    return o;
  }
  std::string kind = text(member(j, "kind", path), join(path, "kind"));
  return object_from(kind, member(j, "payload", path), c, join(path, "payload"));
}

template <class Obj>
void require_same_data(const Obj& end, const Context& c, const std::string& path) {
  if (!same_ring(end.ring, c.ring) || end.omega != c.omega) bad(path, "referenced object has a different ring or omega");
}

Object morphism_from(const json& p, const Context& c, const std::string& path) {
  std::string category = text(member(p, "category", path), join(path, "category"));
  const std::string sp = join(path, "source"), tp = join(path, "target");
  if (category == "mf") {
    MFObject s = end_as<MFObject>(member(p, "source", path), c, sp, "mf");
    MFObject t = end_as<MFObject>(member(p, "target", path), c, tp, "mf");
    require_same_data(s, c, sp);
    require_same_data(t, c, tp);
    PolyMatrix phi1 = matrix(member(p, "phi1", path), c.ring, t.rank(), s.rank(), join(path, "phi1"));
    PolyMatrix phi0 = matrix(member(p, "phi0", path), c.ring, t.rank(), s.rank(), join(path, "phi0"));
    return mf_morphism(s, t, std::move(phi1), std::move(phi0));
  }
  if (category == "mon") {
    MonObject s = end_as<MonObject>(member(p, "source", path), c, sp, "mon");
    MonObject t = end_as<MonObject>(member(p, "target", path), c, tp, "mon");
    require_same_data(s, c, sp);
    require_same_data(t, c, tp);
    PolyMatrix phi1 = matrix(member(p, "phi1", path), c.ring, t.rank(), s.rank(), join(path, "phi1"));
    PolyMatrix phi0 = matrix(member(p, "phi0", path), c.ring, t.rank(), s.rank(), join(path, "phi0"));
    return mon_morphism(s, t, std::move(phi1), std::move(phi0));
  }
  bad(join(path, "category"), "expected 'mf' or 'mon'");
}

json end_json(const Object& x) { return json{{"kind", kind_name(x)}, {"payload", object_payload(x)}}; }

json maps_json(const PolyMatrix& phi1, const PolyMatrix& phi0) {
  return json{{"phi0", matrix_json(phi0)}, {"phi1", matrix_json(phi1)}};
}

ConflationData conflation_from(const json& p, const Context& c, const std::string& path) {
  MonObject left = mon_from(member(p, "left", path), c, join(path, "left"), false);
  MonObject middle = mon_from(member(p, "middle", path), c, join(path, "middle"), false);
  MonObject right = mon_from(member(p, "right", path), c, join(path, "right"), false);
  auto maps = [&](const char* key, const MonObject& s, const MonObject& t) {
    const std::string mp = join(path, key);
    const json& m = member(p, key, path);
    MonMorphism f{s, t, matrix(member(m, "phi1", mp), c.ring, t.rank(), s.rank(), join(mp, "phi1")),
                  matrix(member(m, "phi0", mp), c.ring, t.rank(), s.rank(), join(mp, "phi0"))};
    if (t.g1 * f.phi1 != f.phi0 * s.g1) throw Error(ErrorKind::SquareFails, std::string(key) + ": g1'*phi1 != phi0*g1");
    return f;
  };
  return {maps("inflation", left, middle), maps("deflation", middle, right)};
}

Object object_from(const std::string& kind, const json& payload, const Context& c, const std::string& path) {
  if (!payload.is_object()) bad(path, "expected an object");
  if (kind == "mf") return mf_from(payload, c, path);
  if (kind == "mon") return mon_from(payload, c, path, true);
  if (kind == "rmod") return rmod_from(payload, c, path);
  if (kind == "morphism") return morphism_from(payload, c, path);
  if (kind == "conflation") return conflation_from(payload, c, path);
  if (kind == "gp") {
    require_modulus(c, kind);
    return presentation_from(member(payload, "presentation", path), c, join(path, "presentation"));
  }
  if (kind == "mfg" || kind == "mong") {
    require_modulus(c, kind);
    GPModule first = presentation_from(member(payload, "first", path), c, join(path, "first"));
    GPModule second = presentation_from(member(payload, "second", path), c, join(path, "second"));
    GPMorphism g1 = gp_map_from(member(payload, "g1", path), first, second, c, join(path, "g1"));
    if (kind == "mong") return mong_validate(c.ambient, first.f, c.omega, g1, c.opts);
    GPMorphism g0 = gp_map_from(member(payload, "g0", path), second, first, c, join(path, "g0"));
    return mfg_make(c.omega, g1, g0, c.opts);
  }
  bad(join(path, "kind"), "unknown kind '" + kind + "'");
}

json object_payload(const Object& x) {
  return std::visit(
      [](const auto& o) -> json {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, MFObject>) {
          return mf_payload(o);
        } else if constexpr (std::is_same_v<T, MonObject>) {
          return mon_payload(o);
        } else if constexpr (std::is_same_v<T, GPModule>) {
          return json{{"presentation", presentation_json(o)}};
        } else if constexpr (std::is_same_v<T, MFGObject>) {
          return json{{"first", presentation_json(o.first())},
                      {"g0", gp_map_json(o.g0)},
                      {"g1", gp_map_json(o.g1)},
                      {"second", presentation_json(o.second())}};
        } else if constexpr (std::is_same_v<T, MonGObject>) {
          return json{{"first", presentation_json(o.first())},
                      {"g1", gp_map_json(o.g1)},
                      {"second", presentation_json(o.second())}};
        } else if constexpr (std::is_same_v<T, RModulePresentation>) {
          return rmod_payload(o);
        } else if constexpr (std::is_same_v<T, MFMorphism> || std::is_same_v<T, MonMorphism>) {
          json p = maps_json(o.phi1, o.phi0);
          p["category"] = std::is_same_v<T, MFMorphism> ? "mf" : "mon";
          p["source"] = end_json(Object(o.source));
          p["target"] = end_json(Object(o.target));
          return p;
        } else {
          return json{{"deflation", maps_json(o.deflation.phi1, o.deflation.phi0)},
                      {"inflation", maps_json(o.inflation.phi1, o.inflation.phi0)},
                      {"left", mon_payload(o.inflation.source)},
                      {"middle", mon_payload(o.inflation.target)},
                      {"right", mon_payload(o.deflation.target)}};
        }
      },
      x);
}

// Ring and omega of the document header.
std::pair<RingPtr, Poly> header_of(const Object& x) {
  return std::visit(
      [](const auto& o) -> std::pair<RingPtr, Poly> {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, MFObject> || std::is_same_v<T, MonObject> ||
                      std::is_same_v<T, RModulePresentation>) {
          return {o.ring, o.omega};
        } else if constexpr (std::is_same_v<T, GPModule>) {
          RingPtr s = make_quotient(o.ambient, o.f);
          return {s, o.f};
        } else if constexpr (std::is_same_v<T, MFGObject> || std::is_same_v<T, MonGObject>) {
          return {make_quotient(o.ambient, o.f), o.omega};
        } else if constexpr (std::is_same_v<T, MFMorphism> || std::is_same_v<T, MonMorphism>) {
          return {o.source.ring, o.source.omega};
        } else {
          return {o.inflation.source.ring, o.inflation.source.omega};
        }
      },
      x);
}

// Two-space indent; arrays of scalars (matrix rows, labels) stay on one line.
void pretty(const json& j, std::string& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
  if (j.is_object()) {
    if (j.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    std::size_t i = 0;
    for (const auto& [key, value] : j.items()) {
      out += pad + json(key).dump() + ": ";
      pretty(value, out, indent + 2);
      out += ++i < j.size() ? ",\n" : "\n";
    }
    out += std::string(static_cast<std::size_t>(indent), ' ') + "}";
  } else if (j.is_array() && std::any_of(j.begin(), j.end(), [](const json& e) { return e.is_structured(); })) {
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      out += pad;
      pretty(j[i], out, indent + 2);
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out += std::string(static_cast<std::size_t>(indent), ' ') + "]";
  } else if (j.is_array()) {
    out += "[";
    for (std::size_t i = 0; i < j.size(); ++i) out += (i ? ", " : "") + j[i].dump();
    out += "]";
  } else {
    out += j.dump();
  }
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

}  // namespace

SyntaxError::SyntaxError(std::size_t line, std::size_t column, std::string path, const std::string& detail)
    : Error(ErrorKind::Syntax, locate(line, column, path, detail)),
      line_(line),
      column_(column),
      path_(std::move(path)) {}

ValidationError::ValidationError(const Error& cause)
    : Error(ErrorKind::Validation, std::string(to_string(cause.kind())) + ": " + cause.detail(), cause.certainty()),
      cause_(cause.kind()) {}

std::string kind_name(const Object& x) {
  static const char* names[] = {"mf", "mon", "mfg", "mong", "gp", "rmod", "morphism", "morphism", "conflation"};
  return names[x.index()];
}

Object parse_object(std::string_view text_in, const std::filesystem::path& base_dir, const SolveOptions& opts) {
  json doc;
  try {
    doc = json::parse(text_in.begin(), text_in.end());
  } catch (const json::parse_error& e) {
    auto [line, column] = line_column(text_in, e.byte);
    std::string what = e.what();
    auto colon = what.find("]: ");
    throw SyntaxError(line, column, "", colon == std::string::npos ? what : what.substr(colon + 3));
  }
  try {
    if (!doc.is_object()) bad("", "expected a JSON object");
    std::string version = text(member(doc, "version", ""), "version");
    if (version != format_version) bad("version", "unsupported version '" + version + "'");
    Context c;
    c.ring = ring_from(member(doc, "ring", ""), "ring");
    c.ambient = c.ring->base();
    std::string kind = text(member(doc, "kind", ""), "kind");
    const bool quotient_kind = kind == "gp" || kind == "mfg" || kind == "mong";
    if (quotient_kind)
      require_modulus(c, kind);
    else
      require_free(c, kind);
    c.omega = poly(member(doc, "omega", ""), quotient_kind ? c.ambient : c.ring, "omega");
    if (kind == "gp" && c.omega != modulus_of(c.ring).in_ring(c.ambient))
      bad("omega", "a gp document's omega is the ring modulus");
    c.base_dir = base_dir;
    c.opts = opts;
    return object_from(kind, member(doc, "payload", ""), c, "payload");
  } catch (const SyntaxError&) {
    throw;
  } catch (const ValidationError&) {
    throw;
  } catch (const Error& e) {
    throw ValidationError(e);
  } catch (const json::exception& e) {
    throw SyntaxError(0, 0, "", e.what());
  }
}

Object read_object(const std::filesystem::path& file, const SolveOptions& opts) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw Error(ErrorKind::Syntax, "cannot read " + file.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_object(buf.str(), file.parent_path(), opts);
}

std::string serialize(const Object& x) {
  auto [ring, omega] = header_of(x);
  json doc{{"kind", kind_name(x)},
           {"omega", omega.to_string()},
           {"payload", object_payload(x)},
           {"ring", ring_json(ring)},
           {"version", std::string(format_version)}};
  std::string out;
  pretty(doc, out, 0);
  return out + "\n";
}

}  // namespace mfcat
