#include "hfcontact/io.hpp"

#include <cctype>
#include <cstring>
#include <fstream>
#include <map>
#include <regex>
#include <set>
#include <sstream>

#include "json_text.hpp"

namespace hf {

namespace {

using json = nlohmann::ordered_json;

std::string join_diags(const std::string& source, const std::vector<Diagnostic>& diags) {
  std::string s;
  for (const auto& d : diags) {
    if (!s.empty()) s += "\n";
    s += source + ":" + (d.line > 0 ? std::to_string(d.line) + ": " : " ") + d.message;
  }
  return s;
}

std::string pointer_escape(const std::string& k) {
  std::string o;
  for (char c : k) {
    if (c == '~')
      o += "~0";
    else if (c == '/')
      o += "~1";
    else
      o += c;
  }
  return o;
}

// Line of every value in a syntactically valid JSON text, keyed by JSON pointer.
class Positions {
 public:
  explicit Positions(const std::string& text) : t_(text) { value(""); }

  int line(std::string ptr) const {
    while (true) {
      auto it = lines_.find(ptr);
      if (it != lines_.end()) return it->second;
      if (ptr.empty()) return 0;
      ptr.erase(ptr.rfind('/'));
    }
  }

  std::vector<Diagnostic> duplicates;

 private:
  void ws() {
    while (pos_ < t_.size() && std::isspace(static_cast<unsigned char>(t_[pos_]))) {
      if (t_[pos_] == '\n') ++line_;
      ++pos_;
    }
  }
  std::string str() {
    ++pos_;
    std::string out;
    while (pos_ < t_.size() && t_[pos_] != '"') {
      if (t_[pos_] == '\\') {
        out += t_[pos_ + 1];
        pos_ += 2;
        continue;
      }
      out += t_[pos_++];
    }
    ++pos_;
    return out;
  }
  void value(const std::string& ptr) {
    ws();
    if (pos_ >= t_.size()) return;
    lines_[ptr] = line_;
    char c = t_[pos_];
    if (c == '{') {
      ++pos_;
      std::set<std::string> keys;
      ws();
      if (t_[pos_] == '}') {
        ++pos_;
        return;
      }
      while (true) {
        ws();
        int kl = line_;
        std::string k = str();
        if (!keys.insert(k).second) duplicates.push_back({kl, "duplicate key \"" + k + "\""});
        ws();
        ++pos_;  // ':'
        value(ptr + "/" + pointer_escape(k));
        ws();
        if (t_[pos_++] != ',') break;
      }
    } else if (c == '[') {
      ++pos_;
      ws();
      if (t_[pos_] == ']') {
        ++pos_;
        return;
      }
      for (int i = 0;; ++i) {
        value(ptr + "/" + std::to_string(i));
        ws();
        if (t_[pos_++] != ',') break;
      }
    } else if (c == '"') {
      str();
    } else {
      while (pos_ < t_.size() && !std::strchr(",]} \t\r\n", t_[pos_])) ++pos_;
    }
  }

  const std::string& t_;
  size_t pos_ = 0;
  int line_ = 1;
  std::map<std::string, int> lines_;
};

class Reader {
 public:
  explicit Reader(const Positions& p) : pos_(p) {}

  void err(const std::string& ptr, const std::string& msg) { diags.push_back({pos_.line(ptr), msg}); }

  bool object(const json& j, const std::string& ptr, const std::string& what, std::initializer_list<const char*> required,
              std::initializer_list<const char*> optional = {}) {
    if (!j.is_object()) {
      err(ptr, what + " must be an object");
      return false;
    }
    bool ok = true;
    for (const char* k : required)
      if (!j.contains(k)) {
        err(ptr, what + " is missing \"" + k + "\"");
        ok = false;
      }
    for (auto it = j.begin(); it != j.end(); ++it) {
      bool known = false;
      for (const char* k : required) known |= it.key() == k;
      for (const char* k : optional) known |= it.key() == k;
      if (!known) err(ptr + "/" + pointer_escape(it.key()), "unknown key \"" + it.key() + "\" in " + what);
    }
    return ok;
  }

  std::optional<int> integer(const json& j, const std::string& ptr, const std::string& what) {
    if (!j.is_number_integer()) {
      err(ptr, what + " must be an integer");
      return std::nullopt;
    }
    auto v = j.get<long long>();
    if (v < -1000000000LL || v > 1000000000LL) {
      err(ptr, what + " is out of range");
      return std::nullopt;
    }
    return static_cast<int>(v);
  }

  std::optional<std::vector<int>> int_list(const json& j, const std::string& ptr, const std::string& what) {
    if (!j.is_array()) {
      err(ptr, what + " must be an array of integers");
      return std::nullopt;
    }
    std::vector<int> out;
    bool ok = true;
    for (size_t i = 0; i < j.size(); ++i) {
      auto v = integer(j[i], ptr + "/" + std::to_string(i), what + " entry");
      if (v)
        out.push_back(*v);
      else
        ok = false;
    }
    if (!ok) return std::nullopt;
    return out;
  }

  std::optional<std::string> string(const json& j, const std::string& ptr, const std::string& what) {
    if (!j.is_string()) {
      err(ptr, what + " must be a string");
      return std::nullopt;
    }
    return j.get<std::string>();
  }

  std::vector<Diagnostic> diags;

 private:
  const Positions& pos_;
};

// Records with an "id" field are placed by id; ids must be 0..n-1 without repeats.
template <class F>
std::vector<int> place_by_id(Reader& r, const json& arr, const std::string& ptr, const std::string& what, F&& each) {
  std::vector<int> index_of_id(arr.size(), -1);
  for (size_t i = 0; i < arr.size(); ++i) {
    std::string p = ptr + "/" + std::to_string(i);
    if (!arr[i].is_object() || !arr[i].contains("id")) {
      r.err(p, what + " " + std::to_string(i) + " needs an \"id\"");
      continue;
    }
    auto id = r.integer(arr[i]["id"], p + "/id", what + " id");
    if (!id) continue;
    if (*id < 0 || *id >= static_cast<int>(arr.size())) {
      r.err(p + "/id", what + " id " + std::to_string(*id) + " is out of range 0.." + std::to_string(arr.size() - 1));
      continue;
    }
    if (index_of_id[*id] >= 0) {
      r.err(p + "/id", "duplicate " + what + " id " + std::to_string(*id));
      continue;
    }
    index_of_id[*id] = static_cast<int>(i);
    each(*id, arr[i], p);
  }
  return index_of_id;
}

void read_finger_moves(Reader& r, const json& j, const std::string& ptr, std::vector<FingerMove>& out) {
  if (!j.is_array()) {
    r.err(ptr, "\"finger_moves\" must be an array");
    return;
  }
  for (size_t i = 0; i < j.size(); ++i) {
    std::string p = ptr + "/" + std::to_string(i);
    if (!r.object(j[i], p, "finger move", {"base", "path"})) continue;
    auto b = r.integer(j[i]["base"], p + "/base", "finger move base");
    auto path = r.int_list(j[i]["path"], p + "/path", "finger move path");
    if (b && path) out.push_back({*b, *path});
  }
}

void read_annotations(Reader& r, const json& j, const std::string& ptr, Annotations& out) {
  if (!r.object(j, ptr, "\"annotations\"", {}, {"generators", "regions"})) return;
  std::set<std::string> names;
  if (j.contains("generators")) {
    const auto& g = j["generators"];
    if (!g.is_array()) r.err(ptr + "/generators", "generator annotations must be an array");
    for (size_t i = 0; g.is_array() && i < g.size(); ++i) {
      std::string p = ptr + "/generators/" + std::to_string(i);
      if (!r.object(g[i], p, "generator annotation", {"name", "points"})) continue;
      auto n = r.string(g[i]["name"], p + "/name", "generator name");
      auto pts = r.int_list(g[i]["points"], p + "/points", "generator points");
      if (n && !names.insert(*n).second) r.err(p + "/name", "duplicate generator name \"" + *n + "\"");
      if (n && pts) out.generators.push_back({*n, *pts});
    }
  }
  std::set<std::string> labels;
  if (j.contains("regions")) {
    const auto& g = j["regions"];
    if (!g.is_array()) r.err(ptr + "/regions", "region annotations must be an array");
    for (size_t i = 0; g.is_array() && i < g.size(); ++i) {
      std::string p = ptr + "/regions/" + std::to_string(i);
      if (!r.object(g[i], p, "region annotation", {"label", "region"})) continue;
      auto n = r.string(g[i]["label"], p + "/label", "region label");
      auto id = r.integer(g[i]["region"], p + "/region", "region id");
      if (n && !labels.insert(*n).second) r.err(p + "/label", "duplicate region label \"" + *n + "\"");
      if (n && id) out.regions.push_back({*n, *id});
    }
  }
}

void read_open_book(Reader& r, const json& j, Document& d) {
  if (r.object(j["surface"], "/surface", "\"surface\"", {"rotations"})) {
    const auto& rot = j["surface"]["rotations"];
    if (!rot.is_array() || rot.empty()) r.err("/surface/rotations", "rotations must be a non-empty array of vertex rotations");
    for (size_t v = 0; rot.is_array() && v < rot.size(); ++v) {
      auto l = r.int_list(rot[v], "/surface/rotations/" + std::to_string(v), "rotation");
      if (l) d.rotations.push_back(*l);
    }
  }
  const auto& arcs = j["arcs"];
  if (!arcs.is_array()) r.err("/arcs", "\"arcs\" must be an array");
  for (size_t i = 0; arcs.is_array() && i < arcs.size(); ++i) {
    std::string p = "/arcs/" + std::to_string(i);
    if (!r.object(arcs[i], p, "arc", {"cocore"})) continue;
    auto h = r.integer(arcs[i]["cocore"], p + "/cocore", "co-core half-edge");
    if (h) d.arcs.push_back(*h);
  }
  const auto& mono = j["monodromy"];
  if (!mono.is_array()) r.err("/monodromy", "\"monodromy\" must be an array");
  for (size_t i = 0; mono.is_array() && i < mono.size(); ++i) {
    std::string p = "/monodromy/" + std::to_string(i);
    if (!r.object(mono[i], p, "twist", {"sign"}, {"boundary", "walk"})) continue;
    TwistSpec t;
    auto s = r.integer(mono[i]["sign"], p + "/sign", "twist sign");
    if (s && *s != 1 && *s != -1) r.err(p + "/sign", "twist sign must be +1 or -1");
    if (s) t.sign = *s;
    bool hb = mono[i].contains("boundary"), hw = mono[i].contains("walk");
    if (hb == hw) {
      r.err(p, "twist needs exactly one of \"boundary\" or \"walk\"");
      continue;
    }
    if (hb) {
      auto b = r.integer(mono[i]["boundary"], p + "/boundary", "boundary component");
      if (b) t.boundary = *b;
    } else {
      auto w = r.int_list(mono[i]["walk"], p + "/walk", "twist walk");
      if (w) t.walk = *w;
    }
    d.monodromy.push_back(t);
  }
}

void read_diagram(Reader& r, const json& j, Document& doc, std::map<std::string, std::vector<int>>& ids) {
  auto& d = doc.diagram;
  if (auto n = r.integer(j["curves"], "/curves", "\"curves\"")) d.num_curves = *n;
  const auto& vs = j["vertices"];
  const auto& es = j["edges"];
  const auto& fs = j["faces"];
  for (auto [key, arr] : {std::pair{"vertices", &vs}, std::pair{"edges", &es}, std::pair{"faces", &fs}})
    if (!arr->is_array()) r.err(std::string("/") + key, std::string("\"") + key + "\" must be an array");
  if (vs.is_array()) {
    d.vertices.assign(vs.size(), {});
    ids["vertex"] = place_by_id(r, vs, "/vertices", "vertex", [&](int id, const json& o, const std::string& p) {
      if (!r.object(o, p, "vertex", {"id", "alpha", "beta"}, {"side"})) return;
      auto a = r.integer(o["alpha"], p + "/alpha", "alpha index");
      auto b = r.integer(o["beta"], p + "/beta", "beta index");
      if (a) d.vertices[id].alpha = *a;
      if (b) d.vertices[id].beta = *b;
      if (o.contains("side"))
        if (auto s = r.integer(o["side"], p + "/side", "side")) d.vertices[id].side = *s;
    });
  }
  if (es.is_array()) {
    d.edges.assign(es.size(), {});
    ids["edge"] = place_by_id(r, es, "/edges", "edge", [&](int id, const json& o, const std::string& p) {
      if (!r.object(o, p, "edge", {"id", "family", "curve", "tail", "head"})) return;
      auto f = r.string(o["family"], p + "/family", "edge family");
      if (f && *f != "alpha" && *f != "beta") r.err(p + "/family", "edge family must be \"alpha\" or \"beta\"");
      if (f) d.edges[id].family = *f == "beta" ? Family::Beta : Family::Alpha;
      if (auto c = r.integer(o["curve"], p + "/curve", "edge curve")) d.edges[id].curve = *c;
      if (auto t = r.integer(o["tail"], p + "/tail", "edge tail")) d.edges[id].tail = *t;
      if (auto h = r.integer(o["head"], p + "/head", "edge head")) d.edges[id].head = *h;
    });
  }
  if (fs.is_array()) {
    d.regions.assign(fs.size(), {});
    ids["region"] = place_by_id(r, fs, "/faces", "face", [&](int id, const json& o, const std::string& p) {
      if (!r.object(o, p, "face", {"id", "boundary"}, {"genus"})) return;
      if (o.contains("genus"))
        if (auto g = r.integer(o["genus"], p + "/genus", "face genus")) d.regions[id].genus = *g;
      const auto& b = o["boundary"];
      if (!b.is_array() || b.empty()) {
        r.err(p + "/boundary", "face boundary must be a non-empty array of dart cycles");
        return;
      }
      for (size_t c = 0; c < b.size(); ++c)
        if (auto cyc = r.int_list(b[c], p + "/boundary/" + std::to_string(c), "face boundary cycle"))
          d.regions[id].boundary.push_back(*cyc);
    });
  }
  if (auto b = r.integer(j["basepoint"], "/basepoint", "\"basepoint\"")) d.basepoint = *b;
  if (j.contains("contact")) doc.contact = r.int_list(j["contact"], "/contact", "\"contact\"");
}

void read_surgery(Reader& r, const json& j, Document& doc) {
  auto& s = doc.surgery;
  const auto& cs = j["components"];
  if (!cs.is_array()) {
    r.err("/components", "\"components\" must be an array");
    return;
  }
  s.components.assign(cs.size(), {});
  place_by_id(r, cs, "/components", "component", [&](int id, const json& o, const std::string& p) {
    if (!r.object(o, p, "component", {"id", "tb", "rot", "contact"})) return;
    if (auto v = r.integer(o["tb"], p + "/tb", "tb")) s.components[id].tb = *v;
    if (auto v = r.integer(o["rot"], p + "/rot", "rot")) s.components[id].rot = *v;
    if (auto v = r.integer(o["contact"], p + "/contact", "contact coefficient")) {
      if (*v != 1 && *v != -1) r.err(p + "/contact", "contact coefficient must be +1 or -1");
      s.components[id].coefficient = *v;
    }
  });
  const auto& lk = j["linking"];
  if (!lk.is_array() || lk.size() != cs.size()) {
    r.err("/linking", "\"linking\" must be a " + std::to_string(cs.size()) + "x" + std::to_string(cs.size()) + " matrix");
    return;
  }
  for (size_t i = 0; i < lk.size(); ++i) {
    std::string p = "/linking/" + std::to_string(i);
    auto row = r.int_list(lk[i], p, "linking row");
    if (!row) {
      s.linking.emplace_back(cs.size(), 0);
      continue;
    }
    if (row->size() != cs.size()) r.err(p, "linking row " + std::to_string(i) + " must have " + std::to_string(cs.size()) + " entries");
    row->resize(cs.size(), 0);
    s.linking.push_back(*row);
  }
  for (size_t i = 0; i < cs.size(); ++i) {
    if (s.linking[i][i] != 0) r.err("/linking/" + std::to_string(i) + "/" + std::to_string(i), "linking matrix diagonal must be zero (framings come from tb)");
    for (size_t k = i + 1; k < cs.size(); ++k)
      if (s.linking[i][k] != s.linking[k][i])
        r.err("/linking/" + std::to_string(k) + "/" + std::to_string(i),
              "linking matrix is not symmetric at (" + std::to_string(i) + "," + std::to_string(k) + ")");
  }
}

// Messages from check() name elements by id; point them at that element's line.
int locate(const std::string& msg, const Positions& pos, const std::map<std::string, std::vector<int>>& ids) {
  static const std::regex re("^(vertex|edge|region|dart) ([0-9]+)");
  std::smatch m;
  if (!std::regex_search(msg, m, re)) return 0;
  std::string what = m[1];
  int id = std::stoi(m[2]);
  if (what == "dart") {
    what = "edge";
    id /= 2;
  }
  static const std::map<std::string, std::string> section{{"vertex", "/vertices"}, {"edge", "/edges"}, {"region", "/faces"}};
  auto it = ids.find(what);
  if (it == ids.end() || id < 0 || id >= static_cast<int>(it->second.size()) || it->second[id] < 0) return 0;
  return pos.line(section.at(what) + "/" + std::to_string(it->second[id]));
}

OpenBook build_open_book(const Document& d, Reader* r) {
  auto fail = [&](const std::string& ptr, const std::string& msg) {
    if (r)
      r->err(ptr, msg);
    else
      throw InputError("<open book>", {{0, msg}});
  };
  OpenBook ob;
  try {
    ob.page = PageSurface(d.rotations);
  } catch (const std::exception& e) {
    fail("/surface/rotations", std::string("invalid surface: ") + e.what());
    return ob;
  }
  const auto& s = ob.page;
  for (size_t i = 0; i < d.arcs.size(); ++i) {
    int h = d.arcs[i];
    if (h < 0 || h >= s.num_half_edges()) {
      fail("/arcs/" + std::to_string(i) + "/cocore", "arc " + std::to_string(i) + ": half-edge " + std::to_string(h) + " does not exist");
      continue;
    }
    ob.basis.push_back(cocore_arc(s, h));
  }
  for (size_t i = 0; i < d.monodromy.size(); ++i) {
    const auto& t = d.monodromy[i];
    std::string p = "/monodromy/" + std::to_string(i);
    CurvePath c;
    if (t.boundary) {
      if (*t.boundary < 0 || *t.boundary >= s.num_boundary_components()) {
        fail(p + "/boundary", "twist " + std::to_string(i) + ": boundary component " + std::to_string(*t.boundary) + " does not exist");
        continue;
      }
      c = s.boundary_curve(*t.boundary);
    } else {
      c = CurvePath::closed(t.walk);
      try {
        s.check_path(c);
      } catch (const std::exception& e) {
        fail(p + "/walk", "twist " + std::to_string(i) + ": " + e.what());
        continue;
      }
      if (!is_simple(s, reduce(s, c))) {
        fail(p + "/walk", "twist " + std::to_string(i) + ": curve is not simple");
        continue;
      }
    }
    ob.monodromy.push_back({c, t.sign});
  }
  if (ob.basis.size() == d.arcs.size()) {
    bool ok = false;
    std::string why = "arcs do not form a basis (cutting along them must leave a single disk)";
    try {
      ok = validate_basis(s, ob.basis);
    } catch (const std::exception& e) {
      why = e.what();
    }
    if (!ok) fail("/arcs", why);
  }
  return ob;
}

json moves_json(const std::vector<FingerMove>& moves) {
  json a = json::array();
  for (const auto& m : moves) a.push_back(json{{"base", m.base}, {"path", m.path}});
  return a;
}

json annotations_json(const Annotations& an) {
  json o = json::object();
  if (!an.generators.empty()) {
    json g = json::array();
    for (const auto& [n, p] : an.generators) g.push_back(json{{"name", n}, {"points", p}});
    o["generators"] = g;
  }
  if (!an.regions.empty()) {
    json g = json::array();
    for (const auto& [n, id] : an.regions) g.push_back(json{{"label", n}, {"region", id}});
    o["regions"] = g;
  }
  return o;
}

void write_value(std::ostringstream& os, const json& v, int depth) {
  const std::string pad(2 * (depth + 1), ' ');
  const std::string close(2 * depth, ' ');
  bool structured_items = v.is_array() && !v.empty();
  for (const auto& x : v)
    if (v.is_array() && !x.is_structured()) structured_items = false;
  if (v.is_object() && depth < 2 && !v.empty()) {
    os << "{\n";
    size_t i = 0;
    for (auto it = v.begin(); it != v.end(); ++it, ++i) {
      os << pad << json(it.key()).dump() << ": ";
      write_value(os, it.value(), depth + 1);
      os << (i + 1 < v.size() ? ",\n" : "\n");
    }
    os << close << "}";
  } else if (structured_items && depth < 3) {
    os << "[\n";
    for (size_t i = 0; i < v.size(); ++i) os << pad << v[i].dump() << (i + 1 < v.size() ? ",\n" : "\n");
    os << close << "]";
  } else {
    os << v.dump();
  }
}

}  // namespace

std::string write_json(const json& v) {
  std::ostringstream os;
  write_value(os, v, 0);
  os << "\n";
  return os.str();
}

InputError::InputError(std::string source, std::vector<Diagnostic> diags)
    : std::runtime_error(join_diags(source, diags)), diags_(std::move(diags)) {}

const char* kind_name(DocumentKind k) {
  switch (k) {
    case DocumentKind::OpenBook:
      return "openbook";
    case DocumentKind::Diagram:
      return "diagram";
    case DocumentKind::Surgery:
      return "surgery";
  }
  return "?";
}

Document parse_document(const std::string& text, const std::string& source) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    int line = 1;
    for (size_t i = 0; i + 1 < e.byte && i < text.size(); ++i)
      if (text[i] == '\n') ++line;
    std::string what = e.what();
    auto colon = what.find(": ", what.find("parse error"));
    throw InputError(source, {{line, colon == std::string::npos ? what : what.substr(colon + 2)}});
  }
  Positions pos(text);
  Reader r(pos);
  r.diags = pos.duplicates;
  Document d;
  if (!j.is_object()) throw InputError(source, {{1, "top level must be an object"}});
  auto kind = j.contains("kind") && j["kind"].is_string() ? j["kind"].get<std::string>() : "";
  std::map<std::string, std::vector<int>> ids;
  if (kind == "openbook") {
    d.kind = DocumentKind::OpenBook;
    r.object(j, "", "open book", {"kind", "surface", "arcs", "monodromy"}, {"name", "description", "finger_moves", "annotations"});
    if (r.diags.empty()) read_open_book(r, j, d);
  } else if (kind == "diagram") {
    d.kind = DocumentKind::Diagram;
    r.object(j, "", "diagram", {"kind", "curves", "vertices", "edges", "faces", "basepoint"},
             {"name", "description", "contact", "finger_moves", "annotations"});
    if (r.diags.empty()) read_diagram(r, j, d, ids);
  } else if (kind == "surgery") {
    d.kind = DocumentKind::Surgery;
    r.object(j, "", "surgery presentation", {"kind", "components", "linking"}, {"name", "description"});
    if (r.diags.empty()) read_surgery(r, j, d);
  } else {
    r.err(j.contains("kind") ? "/kind" : "", "\"kind\" must be \"openbook\", \"diagram\" or \"surgery\"");
  }
  if (j.contains("name"))
    if (auto s = r.string(j["name"], "/name", "\"name\"")) d.name = *s;
  if (j.contains("description"))
    if (auto s = r.string(j["description"], "/description", "\"description\"")) d.description = *s;
  if (j.contains("finger_moves") && d.kind != DocumentKind::Surgery) read_finger_moves(r, j["finger_moves"], "/finger_moves", d.finger_moves);
  if (j.contains("annotations") && d.kind != DocumentKind::Surgery) read_annotations(r, j["annotations"], "/annotations", d.annotations);
  if (!r.diags.empty()) throw InputError(source, r.diags);

  if (d.kind == DocumentKind::OpenBook) {
    build_open_book(d, &r);
  } else if (d.kind == DocumentKind::Diagram) {
    for (const auto& p : check(d.diagram).problems) r.diags.push_back({locate(p, pos, ids), p});
    if (r.diags.empty() && d.contact) {
      const auto& c = *d.contact;
      if (static_cast<int>(c.size()) != d.diagram.num_curves) r.err("/contact", "contact generator needs one vertex per alpha curve");
      std::set<int> betas;
      for (size_t i = 0; i < c.size(); ++i) {
        if (c[i] < 0 || c[i] >= static_cast<int>(d.diagram.vertices.size())) {
          r.err("/contact/" + std::to_string(i), "contact generator references missing vertex " + std::to_string(c[i]));
          continue;
        }
        if (d.diagram.vertices[c[i]].alpha != static_cast<int>(i))
          r.err("/contact/" + std::to_string(i), "contact vertex " + std::to_string(c[i]) + " is not on alpha " + std::to_string(i));
        betas.insert(d.diagram.vertices[c[i]].beta);
      }
      if (r.diags.empty() && static_cast<int>(betas.size()) != d.diagram.num_curves)
        r.err("/contact", "contact generator must meet every beta curve once");
    }
  }
  if (!r.diags.empty()) throw InputError(source, r.diags);
  return d;
}

Document load_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path, {{0, "cannot open file"}});
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str(), path);
}

OpenBook to_open_book(const Document& d) { return build_open_book(d, nullptr); }

std::string serialize(const Document& d) {
  json o;
  o["kind"] = kind_name(d.kind);
  if (!d.name.empty()) o["name"] = d.name;
  if (!d.description.empty()) o["description"] = d.description;
  if (d.kind == DocumentKind::OpenBook) {
    o["surface"] = json{{"rotations", d.rotations}};
    json arcs = json::array();
    for (int h : d.arcs) arcs.push_back(json{{"cocore", h}});
    o["arcs"] = arcs;
    json mono = json::array();
    for (const auto& t : d.monodromy) {
      json x;
      if (t.boundary)
        x["boundary"] = *t.boundary;
      else
        x["walk"] = t.walk;
      x["sign"] = t.sign;
      mono.push_back(x);
    }
    o["monodromy"] = mono;
  } else if (d.kind == DocumentKind::Diagram) {
    const auto& g = d.diagram;
    o["curves"] = g.num_curves;
    json vs = json::array();
    for (size_t v = 0; v < g.vertices.size(); ++v) {
      json x{{"id", v}, {"alpha", g.vertices[v].alpha}, {"beta", g.vertices[v].beta}};
      if (g.vertices[v].side != -1) x["side"] = g.vertices[v].side;
      vs.push_back(x);
    }
    o["vertices"] = vs;
    json es = json::array();
    for (size_t e = 0; e < g.edges.size(); ++e)
      es.push_back(json{{"id", e}, {"family", family_name(g.edges[e].family)}, {"curve", g.edges[e].curve},
                        {"tail", g.edges[e].tail}, {"head", g.edges[e].head}});
    o["edges"] = es;
    json fs = json::array();
    for (size_t r = 0; r < g.regions.size(); ++r)
      fs.push_back(json{{"id", r}, {"genus", g.regions[r].genus}, {"boundary", g.regions[r].boundary}});
    o["faces"] = fs;
    o["basepoint"] = g.basepoint;
    if (d.contact) o["contact"] = *d.contact;
  } else {
    json cs = json::array();
    for (size_t i = 0; i < d.surgery.components.size(); ++i) {
      const auto& c = d.surgery.components[i];
      cs.push_back(json{{"id", i}, {"tb", c.tb}, {"rot", c.rot}, {"contact", c.coefficient}});
    }
    o["components"] = cs;
    o["linking"] = d.surgery.linking;
  }
  if (d.kind != DocumentKind::Surgery) {
    if (!d.finger_moves.empty()) o["finger_moves"] = moves_json(d.finger_moves);
    if (!d.annotations.empty()) o["annotations"] = annotations_json(d.annotations);
  }
  return write_json(o);
}

Document diagram_document(std::string name, std::string description, const HeegaardDiagram& g,
                          std::optional<std::vector<int>> contact, Annotations annotations) {
  Document d;
  d.kind = DocumentKind::Diagram;
  d.name = std::move(name);
  d.description = std::move(description);
  d.diagram = g;
  d.contact = std::move(contact);
  d.annotations = std::move(annotations);
  return d;
}

}  // namespace hf
