#include "dnoether/report.hpp"

#include "dnoether/duality.hpp"
#include "dnoether/errors.hpp"
#include "dnoether/preorder.hpp"
#include "dnoether/semigroup.hpp"
#include "dnoether/verdict.hpp"
#include "dnoether/window.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <limits>
#include <map>
#include <sstream>

namespace dnoether {

using Json = nlohmann::ordered_json;

const std::vector<std::string>& known_commands() {
  static const std::vector<std::string> order{"std-expr", "scored", "s2", "eset", "omega", "verdict", "plot"};
  return order;
}

namespace {

Integer parse_integer(const std::string& token) {
  std::size_t i = (!token.empty() && (token[0] == '-' || token[0] == '+')) ? 1 : 0;
  if (i == token.size() || !std::all_of(token.begin() + static_cast<std::ptrdiff_t>(i), token.end(), ::isdigit))
    throw ParseError("not an integer: '" + token + "'");
  return Integer(token[0] == '+' ? token.substr(1) : token);
}

Integer json_integer(const Json& v) {
  if (v.is_number_integer()) return Integer(v.get<long long>());
  if (v.is_number_unsigned()) return Integer(std::to_string(v.get<unsigned long long>()));
  if (v.is_string()) return parse_integer(v.get<std::string>());
  throw ParseError("matrix entries must be integers, got " + v.dump());
}

GeneratorMatrix from_rows(const std::vector<std::vector<Integer>>& rows, bool rows_are_generators) {
  if (rows.empty()) throw ParseError("empty matrix");
  const std::size_t width = rows.front().size();
  for (const auto& r : rows)
    if (r.size() != width) throw ParseError("ragged matrix: rows of length " + std::to_string(width) + " and " + std::to_string(r.size()));
  std::vector<IntVector> cols;
  if (rows_are_generators) {
    for (const auto& r : rows) {
      IntVector c(static_cast<Eigen::Index>(width));
      for (std::size_t i = 0; i < width; ++i) c[static_cast<Eigen::Index>(i)] = r[i];
      cols.push_back(std::move(c));
    }
    return GeneratorMatrix::from_columns(static_cast<Eigen::Index>(width), std::move(cols));
  }
  for (std::size_t j = 0; j < width; ++j) {
    IntVector c(static_cast<Eigen::Index>(rows.size()));
    for (std::size_t i = 0; i < rows.size(); ++i) c[static_cast<Eigen::Index>(i)] = rows[i][j];
    cols.push_back(std::move(c));
  }
  return GeneratorMatrix::from_columns(static_cast<Eigen::Index>(rows.size()), std::move(cols));
}

Json jint(const Integer& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return Json(to_int64(x));
  return Json(to_string(x));
}

Json jvec(const IntVector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(jint(v[i]));
  return out;
}

Json jvalues(const ValueSet& v) {
  Json sporadic = Json::array();
  for (const auto& x : v.sporadic()) sporadic.push_back(jint(x));
  return Json{{"sporadic", sporadic}, {"tail", jint(v.tail())}, {"text", v.to_string()}};
}

Json jcosets(const CombinatorialSet& s) {
  Json out = Json::array();
  for (std::size_t i = 0; i < s.excluded().size(); ++i) {
    const auto& e = s.excluded()[i];
    out.push_back(Json{{"index", i},
                       {"face", s.cone().face_name(e.face)},
                       {"codim", s.cone().codim(e.face)},
                       {"rep", jvec(e.rep)},
                       {"anchor", jvec(e.anchor)}});
  }
  return out;
}

Json jexpression(const CombinatorialSet& s) {
  Json values = Json::array();
  for (int k = 0; k < s.cone().facet_count(); ++k)
    values.push_back(Json{{"facet", s.cone().face_name(s.cone().facet_face(k))},
                          {"values", jvalues(s.facet_values()[static_cast<std::size_t>(k)])}});
  return Json{{"facet_values", values}, {"cosets", jcosets(s)}};
}

Json jtuple(const FaceLattice& cone, const BTuple& b) {
  Json out = Json::object();
  for (std::size_t i = 0; i < b.faces.size(); ++i) out[cone.face_name(b.faces[i])] = jvec(b.reps[i]);
  return out;
}

FaceId resolve_face(const FaceLattice& cone, const std::string& name) {
  for (FaceId id = 0; id < cone.face_count(); ++id)
    if (cone.face_name(id) == name) return id;
  try {
    std::size_t used = 0;
    const int id = std::stoi(name, &used);
    if (used == name.size() && id >= 0 && id < cone.face_count()) return id;
  } catch (const std::exception&) {
  }
  throw ParseError("unknown face '" + name + "'");
}

std::string glyph(bool in_cone, bool member) {
  if (!in_cone) return "·";
  return member ? "●" : "○";
}

// Name of the facet lying along coordinate axis `axis` (0 = horizontal), if there is one.
std::string axis_name(const FaceLattice& cone, int axis, const std::string& fallback) {
  for (int k = 0; k < cone.facet_count(); ++k) {
    const auto& n = cone.facet(k).normal;
    if (n[axis] == 0) return cone.face_name(cone.facet_face(k));
  }
  return fallback;
}

struct Context {
  const AnalysisRequest& request;
  ConePtr cone;
  std::optional<CombinatorialSet> s;
  InferenceReport inference;
  std::optional<std::vector<BTuple>> b;
  Json timings = Json::object();

  const CombinatorialSet& set() {
    if (!s) s = standard_expression(cone, {}, &inference);
    return *s;
  }
  const std::vector<BTuple>& tuples() {
    if (!b) b = compute_b(set());
    return *b;
  }
  std::optional<BTuple> chosen() {
    const auto& all = tuples();
    const std::size_t k = request.btuple.value_or(0);
    if (all.empty()) {
      if (request.btuple) throw ParseError("--btuple given but the set of compatible tuples is empty");
      return std::nullopt;
    }
    if (k >= all.size()) throw ParseError("--btuple " + std::to_string(k) + " out of range: " + std::to_string(all.size()) + " tuples");
    return all[k];
  }
};

Json cmd_std_expr(Context& c) {
  const auto& s = c.set();
  Json out = jexpression(s);
  out["M"] = jint(s.big_m());
  out["citation"] = "standard-expression-unique-irredundant";
  return out;
}

Json cmd_scored(Context& c) {
  const auto& s = c.set();
  Json facets = Json::array();
  for (int k = 0; k < s.cone().facet_count(); ++k)
    facets.push_back(Json{{"facet", s.cone().face_name(s.cone().facet_face(k))},
                          {"normal", jvec(s.cone().facet(k).normal)},
                          {"values", jvalues(s.facet_values()[static_cast<std::size_t>(k)])}});
  const bool scored = s.excluded().empty();
  return Json{{"facets", facets}, {"is_scored", scored}, {"citation", "scored-closure-from-facet-values"}};
}

Json cmd_s2(Context& c) {
  const auto& s = c.set();
  const auto& cone = s.cone();
  Json out = jexpression(s.s2());
  out["is_s2"] = s.is_s2();
  Json deep = Json::array();
  bool finite = true;
  for (const auto& e : s.excluded()) {
    if (cone.codim(e.face) <= 1) continue;
    if (e.face != cone.zero_face()) finite = false;
    deep.push_back(Json{{"face", cone.face_name(e.face)}, {"rep", jvec(e.rep)}});
  }
  out["added"] = deep;
  out["added_is_finite"] = finite;
  out["citation"] = "s2-closure-keeps-facet-cosets";
  return out;
}

Json cmd_eset(Context& c) {
  const auto& s = c.set();
  const auto& cone = s.cone();
  const IntVector alpha = c.request.eset_alpha.value_or(IntVector(IntVector::Zero(cone.dim())));
  std::vector<FaceId> faces;
  if (c.request.eset_face)
    faces.push_back(resolve_face(cone, *c.request.eset_face));
  else
    for (FaceId id = 0; id < cone.face_count(); ++id) faces.push_back(id);
  Json rows = Json::array();
  for (FaceId t : faces) {
    const auto e = e_set(s, t, alpha);
    Json elems = Json::array();
    for (const auto& x : e.elements) elems.push_back(jvec(x));
    rows.push_back(Json{{"face", cone.face_name(t)}, {"elements", elems}});
  }
  return Json{{"alpha", jvec(alpha)}, {"sets", rows}, {"citation", "e-set-finite-fingerprint"}};
}

Json cmd_omega(Context& c) {
  const auto& s = c.set();
  Json tuples = Json::array();
  for (const auto& b : c.tuples()) tuples.push_back(jtuple(s.cone(), b));
  Json out{{"B", tuples}};
  const auto b = c.chosen();
  if (!b) {
    out["omega"] = nullptr;
    out["citation"] = "omega-needs-compatible-tuple";
    return out;
  }
  const auto w = omega(s, *b);
  out["chosen"] = c.request.btuple.value_or(0);
  out["omega"] = jexpression(w.base);
  const auto shift = self_duality_shift(s, w);
  out["shift"] = shift ? jvec(*shift) : Json(nullptr);
  out["involution_holds"] = reflect(s, *b).same_expression(s);
  out["citation"] = "omega-is-an-involution";
  return out;
}

Json cmd_verdict(Context& c) {
  const auto& s = c.set();
  const auto& cone = s.cone();
  const auto v = verdict(s);
  Json left{{"answer", to_string(v.left)}, {"reason", to_string(v.reason)}, {"citation", citation(v.reason)}};
  if (v.s2) left["sub_reason"] = Json{{"reason", to_string(Reason::S2Condition)}, {"citation", citation(Reason::S2Condition)}};
  Json rows = Json::array();
  for (const auto& r : v.condition_four.rows) {
    Json aligned = Json::array();
    for (auto j : r.aligned) aligned.push_back(j);
    rows.push_back(Json{{"coset", r.coset},
                        {"face", cone.face_name(r.face)},
                        {"intersection", cone.face_name(r.intersection)},
                        {"aligned", aligned},
                        {"holds", r.holds()}});
  }
  Json out{{"right", Json{{"answer", "YES"}, {"citation", right_citation()}}},
           {"left", left},
           {"condition_four", Json{{"rows", rows}, {"holds", v.condition_four.holds()}}},
           {"b_nonempty", v.b_nonempty},
           {"sufficient_facet_origin", v.sufficient_origin},
           {"d_le_2_decisive", v.d_le_2_decisive}};
  if (v.witness) {
    const auto& w = *v.witness;
    Json choices = Json::array();
    for (const auto& ch : w.sigma_choices)
      choices.push_back(Json{{"coset", ch.coset}, {"facet", cone.face_name(cone.facet_face(ch.facet))}});
    Json checks = Json::array();
    for (std::int64_t k = w.k0; k < w.k0 + 6; ++k) checks.push_back(Json{{"k", k}, {"ok", check_witness(s, w, k).ok()}});
    out["witness"] = Json{{"bad_coset", w.bad_coset},
                          {"intersection", cone.face_name(w.intersection)},
                          {"ray", jvec(w.ray_direction)},
                          {"d_rho", jvec(w.d_rho)},
                          {"sigma_m", cone.face_name(cone.facet_face(w.sigma_m))},
                          {"sigma_choices", choices},
                          {"k0", w.k0},
                          {"E_k", w.describe(s)},
                          {"checks", checks},
                          {"citation", citation(Reason::NecessaryConditionViolated)}};
  }
  if (v.b_nonempty) {
    const auto shift = self_duality_shift(s, *c.chosen());
    out["omega_shift"] = shift ? jvec(*shift) : Json(nullptr);
  }
  return out;
}

Json cmd_plot(Context& c) {
  const auto& s = c.set();
  const auto win = c.request.window.value_or(default_plot_window(c.request.matrix));
  Json rows = Json::array();
  for (const auto& r : render_plot(s, win)) rows.push_back(r);
  return Json{{"window", Json{{"x", {win.x0, win.x1}}, {"y", {win.y0, win.y1}}}}, {"rows", rows}};
}

}  // namespace

GeneratorMatrix parse_matrix(const std::string& text, bool transpose) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw ParseError("empty input");
  if (text[first] == '{') {
    Json doc;
    try {
      doc = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.contains("columns") || !doc["columns"].is_array()) throw ParseError("JSON input needs a \"columns\" array");
    std::vector<std::vector<Integer>> cols;
    for (const auto& col : doc["columns"]) {
      if (!col.is_array()) throw ParseError("each column must be an array");
      std::vector<Integer> c;
      for (const auto& x : col) c.push_back(json_integer(x));
      cols.push_back(std::move(c));
    }
    if (cols.empty()) throw ParseError("no columns");
    if (doc.contains("d")) {
      if (!doc["d"].is_number_integer()) throw ParseError("\"d\" must be an integer");
      const auto d = doc["d"].get<long long>();
      for (const auto& c : cols)
        if (static_cast<long long>(c.size()) != d)
          throw ParseError("column of length " + std::to_string(c.size()) + " but d = " + std::to_string(d));
    }
    return from_rows(cols, true);
  }
  std::vector<std::vector<Integer>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<Integer> row;
    std::string tok;
    while (ls >> tok) row.push_back(parse_integer(tok));
    if (!row.empty()) rows.push_back(std::move(row));
  }
  return from_rows(rows, transpose);
}

PlotWindow parse_window(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw ParseError("window must be 'a,b' or 'x0:x1,y0:y1'");
  auto range = [](const std::string& part) -> std::pair<std::int64_t, std::int64_t> {
    const auto colon = part.find(':');
    try {
      if (colon == std::string::npos) return {0, to_int64(parse_integer(part))};
      return {to_int64(parse_integer(part.substr(0, colon))), to_int64(parse_integer(part.substr(colon + 1)))};
    } catch (const std::overflow_error&) {
      throw ParseError("window bound out of range");
    }
  };
  const auto [x0, x1] = range(text.substr(0, comma));
  const auto [y0, y1] = range(text.substr(comma + 1));
  if (x0 > x1 || y0 > y1) throw ParseError("empty plot window");
  if ((x1 - x0 + 1) * (y1 - y0 + 1) > 40000) throw ParseError("plot window larger than 40000 points");
  return {x0, x1, y0, y1};
}

IntVector parse_vector(const std::string& text) {
  std::vector<Integer> xs;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) xs.push_back(parse_integer(tok));
  if (xs.empty()) throw ParseError("empty vector");
  IntVector v(static_cast<Eigen::Index>(xs.size()));
  for (std::size_t i = 0; i < xs.size(); ++i) v[static_cast<Eigen::Index>(i)] = xs[i];
  return v;
}

void validate(const AnalysisRequest& request) {
  for (const auto& c : request.commands)
    if (c != "analyze" && std::find(known_commands().begin(), known_commands().end(), c) == known_commands().end())
      throw ParseError("unknown command '" + c + "'");
  if (request.eset_alpha && request.eset_alpha->size() != request.matrix.dim)
    throw ParseError("--alpha has " + std::to_string(request.eset_alpha->size()) + " coordinates, d = " +
                     std::to_string(request.matrix.dim));
  const bool plot = std::find(request.commands.begin(), request.commands.end(), "plot") != request.commands.end();
  if (plot && request.matrix.dim != 2) throw UnsupportedDimension("plot needs d = 2");
  build_cone(request.matrix);
}

PlotWindow default_plot_window(const GeneratorMatrix& a) {
  Integer top = 1;
  for (const auto& c : a.columns)
    for (Eigen::Index i = 0; i < c.size(); ++i) top = std::max(top, Integer(abs(c[i])));
  const auto w = to_int64(2 * top);
  return {0, w, 0, w};
}

std::vector<std::string> render_plot(const CombinatorialSet& s, const PlotWindow& win) {
  const auto& cone = s.cone();
  if (cone.dim() != 2) throw UnsupportedDimension("plot needs d = 2");
  const Box box{{win.x0, win.y0}, {win.x1, win.y1}};
  const auto oracle = box_oracle(s, box);
  auto width = [](std::int64_t x) { return std::to_string(x).size(); };
  const std::size_t cell = std::max(width(win.x0), width(win.x1));
  const std::size_t margin = std::max(width(win.y0), width(win.y1));
  auto pad = [](const std::string& t, std::size_t w) { return std::string(w > t.size() ? w - t.size() : 0, ' ') + t; };

  std::vector<std::string> rows{std::string(margin + 1, ' ') + axis_name(cone, 1, "y")};
  for (std::int64_t y = win.y1; y >= win.y0; --y) {
    std::string line = pad(std::to_string(y), margin) + " │";
    for (std::int64_t x = win.x0; x <= win.x1; ++x) {
      const std::int64_t p[2] = {x, y};
      line += std::string(cell, ' ') + glyph(cone.in_cone(make_vector({x, y})), oracle.member(p));
    }
    rows.push_back(line);
  }
  std::string axis = std::string(margin + 1, ' ') + "└";
  for (std::int64_t x = win.x0; x <= win.x1; ++x)
    for (std::size_t i = 0; i <= cell; ++i) axis += "─";
  rows.push_back(axis + " " + axis_name(cone, 0, "x"));
  std::string ticks = std::string(margin + 2, ' ');
  for (std::int64_t x = win.x0; x <= win.x1; ++x) ticks += " " + pad(std::to_string(x), cell);
  rows.push_back(ticks);
  return rows;
}

Json run(const AnalysisRequest& request) {
  validate(request);
  Context c{request, build_cone(request.matrix), std::nullopt, {}, std::nullopt};
  std::vector<std::string> todo;
  const bool all = std::find(request.commands.begin(), request.commands.end(), "analyze") != request.commands.end();
  for (const auto& name : known_commands()) {
    const bool asked = std::find(request.commands.begin(), request.commands.end(), name) != request.commands.end();
    if (asked || (all && (name != "plot" || request.matrix.dim == 2))) todo.push_back(name);
  }

  Json input{{"d", request.matrix.dim}, {"columns", Json::array()}};
  for (const auto& col : request.matrix.columns) input["columns"].push_back(jvec(col));
  Json results = Json::object();
  const std::map<std::string, std::function<Json(Context&)>> table{
      {"std-expr", cmd_std_expr}, {"scored", cmd_scored}, {"s2", cmd_s2},     {"eset", cmd_eset},
      {"omega", cmd_omega},       {"verdict", cmd_verdict}, {"plot", cmd_plot}};
  for (const auto& name : todo) {
    const auto t0 = std::chrono::steady_clock::now();
    try {
      results[name] = table.at(name)(c);
    } catch (const InternalAssertion& e) {
      throw InternalAssertion(name + ": " + e.what());
    }
    c.timings[name] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  }

  Json report{{"schema", kReportSchema}, {"input", input}, {"results", results}};
  if (request.metadata) {
    report["metadata"] = Json{{"inference", Json{{"window", c.inference.window},
                                                 {"rounds", c.inference.rounds},
                                                 {"points", c.inference.points},
                                                 {"holes", c.inference.holes}}},
                              {"timings_ms", c.timings}};
  }
  return report;
}

namespace {

std::string vec_text(const Json& v) {
  if (v.is_null()) return "none";
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + (v[i].is_string() ? v[i].get<std::string>() : v[i].dump());
  return out + ")";
}

void expression_text(std::ostream& o, const Json& e) {
  for (const auto& f : e["facet_values"]) o << "  F_" << f["facet"].get<std::string>() << "(S_c) = " << f["values"]["text"].get<std::string>() << "\n";
  if (e["cosets"].empty()) o << "  no excluded cosets\n";
  for (const auto& c : e["cosets"])
    o << "  minus " << vec_text(c["rep"]) << " + Z(A∩" << c["face"].get<std::string>() << ")\n";
}

}  // namespace

std::string render_text(const Json& report) {
  std::ostringstream o;
  o << "A (columns):";
  for (const auto& c : report["input"]["columns"]) o << " " << vec_text(c);
  o << "\n";
  const auto& r = report["results"];
  if (r.contains("std-expr")) {
    o << "\nstandard expression  [" << r["std-expr"]["citation"].get<std::string>() << "]\n";
    expression_text(o, r["std-expr"]);
    o << "  M = " << r["std-expr"]["M"].dump() << "\n";
  }
  if (r.contains("scored")) {
    o << "\nscored closure  [" << r["scored"]["citation"].get<std::string>() << "]\n";
    for (const auto& f : r["scored"]["facets"])
      o << "  " << f["facet"].get<std::string>() << ": normal " << vec_text(f["normal"]) << ", values "
        << f["values"]["text"].get<std::string>() << "\n";
    o << "  S is scored: " << (r["scored"]["is_scored"].get<bool>() ? "yes" : "no") << "\n";
  }
  if (r.contains("s2")) {
    const auto& s2 = r["s2"];
    o << "\nS2 closure  [" << s2["citation"].get<std::string>() << "]\n";
    expression_text(o, s2);
    o << "  S satisfies (S2): " << (s2["is_s2"].get<bool>() ? "yes" : "no") << "\n";
    for (const auto& a : s2["added"]) o << "  adds " << vec_text(a["rep"]) << " + Z(A∩" << a["face"].get<std::string>() << ")\n";
  }
  if (r.contains("eset")) {
    o << "\nE-sets at alpha = " << vec_text(r["eset"]["alpha"]) << "  [" << r["eset"]["citation"].get<std::string>() << "]\n";
    for (const auto& e : r["eset"]["sets"]) {
      o << "  " << e["face"].get<std::string>() << ": {";
      for (std::size_t i = 0; i < e["elements"].size(); ++i) o << (i ? ", " : "") << vec_text(e["elements"][i]);
      o << "}\n";
    }
  }
  if (r.contains("omega")) {
    const auto& w = r["omega"];
    o << "\nomega  [" << w["citation"].get<std::string>() << "]\n";
    o << "  |B| = " << w["B"].size() << "\n";
    for (const auto& b : w["B"]) {
      o << "  tuple:";
      for (const auto& [face, rep] : b.items()) o << " b_" << face << "=" << vec_text(rep);
      o << "\n";
    }
    if (!w["omega"].is_null()) {
      expression_text(o, w["omega"]);
      o << "  omega(S) = a + S for a = " << vec_text(w["shift"]) << "\n";
      o << "  omega(omega(S)) = S: " << (w["involution_holds"].get<bool>() ? "yes" : "no") << "\n";
    }
  }
  if (r.contains("verdict")) {
    const auto& v = r["verdict"];
    o << "\nverdict\n";
    o << "  right Noetherian: YES  [" << v["right"]["citation"].get<std::string>() << "]\n";
    o << "  left Noetherian: " << v["left"]["answer"].get<std::string>() << " (" << v["left"]["reason"].get<std::string>()
      << ")  [" << v["left"]["citation"].get<std::string>() << "]\n";
    if (v["left"].contains("sub_reason")) o << "  also: " << v["left"]["sub_reason"]["reason"].get<std::string>() << "\n";
    for (const auto& row : v["condition_four"]["rows"])
      o << "  deep coset " << row["coset"].dump() << " on " << row["face"].get<std::string>() << ": aligned facets meet in "
        << row["intersection"].get<std::string>() << (row["holds"].get<bool>() ? "" : " (fails)") << "\n";
    if (v.contains("omega_shift")) o << "  omega shift: " << vec_text(v["omega_shift"]) << "\n";
    if (v.contains("witness")) {
      const auto& w = v["witness"];
      o << "  witness: coset " << w["bad_coset"].dump() << ", ray " << vec_text(w["ray"]) << ", d_rho " << vec_text(w["d_rho"])
        << ", sigma_m " << w["sigma_m"].get<std::string>() << ", k0 " << w["k0"].dump() << "\n";
      o << "  E(k) = " << w["E_k"].get<std::string>() << "\n";
    }
  }
  if (r.contains("plot")) {
    o << "\n";
    for (const auto& row : r["plot"]["rows"]) o << row.get<std::string>() << "\n";
  }
  return o.str();
}

}  // namespace dnoether
