#include "adelic/model_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <map>
#include <memory>
#include <set>
#include <sstream>

#include "adelic/errors.hpp"

namespace adelic {

namespace {

// Character iterator that remembers the line of the last non-blank character
// consumed, so SAX events can be attributed to a source line.
struct LineState {
  int line = 1;
  int last_line = 1;
};

class TrackingIterator {
public:
  using iterator_category = std::input_iterator_tag;
  using value_type = char;
  using difference_type = std::ptrdiff_t;
  using pointer = const char*;
  using reference = const char&;

  TrackingIterator(const char* p, LineState* st) : p_(p), st_(st) {}
  reference operator*() const { return *p_; }
  TrackingIterator& operator++() {
    const char c = *p_;
    if (c == '\n') ++st_->line;
    else if (c != ' ' && c != '\t' && c != '\r') st_->last_line = st_->line;
    ++p_;
    return *this;
  }
  TrackingIterator operator++(int) {
    auto t = *this;
    ++*this;
    return t;
  }
  friend bool operator==(const TrackingIterator& a, const TrackingIterator& b) { return a.p_ == b.p_; }
  friend bool operator!=(const TrackingIterator& a, const TrackingIterator& b) { return a.p_ != b.p_; }

private:
  const char* p_;
  LineState* st_;
};

// Builds the DOM and a JSON-pointer -> line table.
class LineSax {
public:
  LineSax(Json& root, const LineState& st, std::map<std::string, int>& lines) : dom_(root), st_(st), lines_(lines) {}

  bool null() { return scalar() && dom_.null(); }
  bool boolean(bool v) { return scalar() && dom_.boolean(v); }
  bool number_integer(Json::number_integer_t v) { return scalar() && dom_.number_integer(v); }
  bool number_unsigned(Json::number_unsigned_t v) { return scalar() && dom_.number_unsigned(v); }
  bool number_float(Json::number_float_t v, const std::string& s) { return scalar() && dom_.number_float(v, s); }
  bool string(std::string& v) { return scalar() && dom_.string(v); }
  bool binary(Json::binary_t& v) { return scalar() && dom_.binary(v); }
  bool start_object(std::size_t n) {
    open(false);
    return dom_.start_object(n);
  }
  bool end_object() {
    close();
    return dom_.end_object();
  }
  bool start_array(std::size_t n) {
    open(true);
    return dom_.start_array(n);
  }
  bool end_array() {
    close();
    return dom_.end_array();
  }
  bool key(std::string& k) {
    stack_.back().key = k;
    return dom_.key(k);
  }
  bool parse_error(std::size_t pos, const std::string& tok, const nlohmann::detail::exception& ex) {
    return dom_.parse_error(pos, tok, ex);
  }

private:
  struct Frame {
    bool array;
    std::size_t index = 0;
    std::string key;
    std::string path;
  };

  static std::string escape(const std::string& k) {
    std::string out;
    for (char c : k) {
      if (c == '~') out += "~0";
      else if (c == '/') out += "~1";
      else out += c;
    }
    return out;
  }

  std::string child_path() const {
    if (stack_.empty()) return "";
    const Frame& f = stack_.back();
    return f.path + "/" + (f.array ? std::to_string(f.index) : escape(f.key));
  }
  void finish_child() {
    if (!stack_.empty() && stack_.back().array) ++stack_.back().index;
  }
  bool scalar() {
    lines_[child_path()] = st_.last_line;
    finish_child();
    return true;
  }
  void open(bool array) {
    const std::string path = child_path();
    lines_[path] = st_.last_line;
    stack_.push_back(Frame{array, 0, {}, path});
  }
  void close() {
    stack_.pop_back();
    finish_child();
  }

  nlohmann::detail::json_sax_dom_parser<Json> dom_;
  const LineState& st_;
  std::map<std::string, int>& lines_;
  std::vector<Frame> stack_;
};

class Loader {
public:
  Loader(const Json& root, std::map<std::string, int> lines, std::string source)
      : root_(root), lines_(std::move(lines)), source_(std::move(source)) {}

  [[noreturn]] void fail(const std::string& path, const std::string& msg) const {
    // Fall back to the nearest ancestor that has a recorded line.
    std::string p = path;
    int line = 1;
    for (;;) {
      auto it = lines_.find(p);
      if (it != lines_.end()) {
        line = it->second;
        break;
      }
      if (p.empty()) break;
      p = p.substr(0, p.rfind('/'));
    }
    throw ValidationError(source_ + ":" + std::to_string(line) + ": " + msg + (path.empty() ? "" : " (at " + path + ")"));
  }

  const Json& object(const Json& j, const std::string& path, const std::set<std::string>& allowed) const {
    if (!j.is_object()) fail(path, "expected an object");
    for (auto it = j.begin(); it != j.end(); ++it)
      if (!allowed.count(it.key())) fail(path + "/" + it.key(), "unknown key '" + it.key() + "'");
    return j;
  }
  const Json& need(const Json& obj, const std::string& path, const std::string& key) const {
    if (!obj.contains(key)) fail(path, "missing key '" + key + "'");
    return obj.at(key);
  }
  std::int64_t integer(const Json& j, const std::string& path) const {
    if (!j.is_number_integer()) fail(path, "expected an integer");
    return j.get<std::int64_t>();
  }
  bool boolean(const Json& j, const std::string& path) const {
    if (!j.is_boolean()) fail(path, "expected true or false");
    return j.get<bool>();
  }
  std::string string(const Json& j, const std::string& path) const {
    if (!j.is_string()) fail(path, "expected a string");
    return j.get<std::string>();
  }
  const Json& array(const Json& j, const std::string& path) const {
    if (!j.is_array()) fail(path, "expected an array");
    return j;
  }

  NumberFieldDesc field(const Json& j, const std::string& path) const {
    object(j, path, {"label", "degree", "r1", "r2", "abs_disc", "dedekind", "D"});
    const std::string tag = string(need(j, path, "dedekind"), path + "/dedekind");
    NumberFieldDesc k;
    try {
      if (tag == "rational") {
        k = NumberFieldDesc::rational();
      } else if (tag == "quadratic") {
        k = NumberFieldDesc::quadratic(static_cast<long>(integer(need(j, path, "D"), path + "/D")));
      } else if (tag == "none") {
        k.tag = DedekindTag::none;
        k.D = 0;
        for (const char* key : {"label", "degree", "r1", "r2", "abs_disc"}) need(j, path, key);
      } else {
        fail(path + "/dedekind", "dedekind must be rational, quadratic or none");
      }
    } catch (const ValidationError& e) {
      if (std::string(e.what()).rfind(source_, 0) == 0) throw;
      fail(path, e.what());
    }
    auto check = [&](const char* key, long& slot) {
      if (!j.contains(key)) return;
      const long v = static_cast<long>(integer(j.at(key), path + "/" + key));
      if (k.tag != DedekindTag::none && v != slot) fail(path + "/" + key, std::string(key) + " contradicts the dedekind tag");
      slot = v;
    };
    check("degree", k.degree);
    check("r1", k.r1);
    check("r2", k.r2);
    check("abs_disc", k.abs_disc);
    if (tag != "quadratic") check("D", k.D);
    if (j.contains("label")) k.label = string(j.at("label"), path + "/label");
    try {
      k.validate();
    } catch (const ValidationError& e) {
      fail(path, e.what());
    }
    return k;
  }

  CurveFF component(const Json& j, const std::string& path) const {
    object(j, path, {"q", "genus", "P", "family"});
    const auto q = integer(need(j, path, "q"), path + "/q");
    const auto g = integer(need(j, path, "genus"), path + "/genus");
    std::vector<std::int64_t> P;
    const Json& arr = array(need(j, path, "P"), path + "/P");
    for (std::size_t i = 0; i < arr.size(); ++i) P.push_back(integer(arr[i], path + "/P/" + std::to_string(i)));
    CurveFamily fam = CurveFamily::generic;
    try {
      if (j.contains("family")) fam = parse_family(string(j.at("family"), path + "/family"));
      CurveFF c = CurveFF::make(q, static_cast<int>(g), P, fam);
      if (!c.functional_equation_holds()) fail(path + "/P", "zeta numerator fails the functional equation");
      return c;
    } catch (const ValidationError& e) {
      if (std::string(e.what()).rfind(source_, 0) == 0) throw;
      fail(path, e.what());
    }
  }

  FibreDesc fibre(const Json& j, const std::string& path, long genus) const {
    object(j, path, {"p", "components", "nodes", "good"});
    FibreDesc fd;
    fd.p = integer(need(j, path, "p"), path + "/p");
    fd.good = boolean(need(j, path, "good"), path + "/good");
    const Json& comps = array(need(j, path, "components"), path + "/components");
    for (std::size_t i = 0; i < comps.size(); ++i) fd.components.push_back(component(comps[i], path + "/components/" + std::to_string(i)));
    if (j.contains("nodes")) {
      const Json& nodes = array(j.at("nodes"), path + "/nodes");
      for (std::size_t i = 0; i < nodes.size(); ++i)
        fd.nodes.push_back(static_cast<long>(integer(nodes[i], path + "/nodes/" + std::to_string(i))));
    }
    try {
      validate_fibre(fd, genus);
    } catch (const ValidationError& e) {
      fail(path, e.what());
    }
    return fd;
  }

  SurfaceModel model() const {
    object(root_, "", {"genus", "base", "fibres", "horizontals", "p_max", "zeta_source"});
    SurfaceModel m;
    m.g = static_cast<long>(integer(need(root_, "", "genus"), "/genus"));
    if (m.g < 0) fail("/genus", "genus must be nonnegative");
    m.base = field(need(root_, "", "base"), "/base");
    const Json& fibres = array(need(root_, "", "fibres"), "/fibres");
    std::set<std::int64_t> seen;
    for (std::size_t i = 0; i < fibres.size(); ++i) {
      const std::string path = "/fibres/" + std::to_string(i);
      m.fibres.push_back(fibre(fibres[i], path, m.g));
      if (!seen.insert(m.fibres.back().p).second) fail(path + "/p", "duplicate fibre");
    }
    if (root_.contains("horizontals")) {
      const Json& hs = array(root_.at("horizontals"), "/horizontals");
      for (std::size_t i = 0; i < hs.size(); ++i) m.horizontals.push_back(field(hs[i], "/horizontals/" + std::to_string(i)));
    }
    m.p_max = static_cast<long>(integer(need(root_, "", "p_max"), "/p_max"));
    if (root_.contains("zeta_source")) {
      try {
        m.zeta_source = parse_zeta_source(string(root_.at("zeta_source"), "/zeta_source"));
      } catch (const ValidationError& e) {
        if (std::string(e.what()).rfind(source_, 0) == 0) throw;
        fail("/zeta_source", e.what());
      }
    }
    try {
      m.validate();
    } catch (const ValidationError& e) {
      fail("", e.what());
    }
    return m;
  }

private:
  const Json& root_;
  std::map<std::string, int> lines_;
  std::string source_;
};

void format_into(std::string& out, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
  switch (j.type()) {
  case Json::value_t::object: {
    if (j.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    bool first = true;
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (!first) out += ",\n";
      first = false;
      out += pad + Json(it.key()).dump() + ": ";
      format_into(out, it.value(), indent + 2);
    }
    out += "\n" + std::string(static_cast<std::size_t>(indent), ' ') + "}";
    return;
  }
  case Json::value_t::array: {
    if (j.empty()) {
      out += "[]";
      return;
    }
    const bool flat = std::all_of(j.begin(), j.end(), [](const Json& e) { return e.is_primitive(); });
    if (flat) {
      out += "[";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ", ";
        format_into(out, j[i], indent);
      }
      out += "]";
      return;
    }
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (i) out += ",\n";
      out += pad;
      format_into(out, j[i], indent + 2);
    }
    out += "\n" + std::string(static_cast<std::size_t>(indent), ' ') + "]";
    return;
  }
  case Json::value_t::number_float: {
    const double v = j.get<double>();
    if (!std::isfinite(v)) {
      out += "null";
      return;
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    out += buf;
    return;
  }
  default:
    out += j.dump();
  }
}

} // namespace

SurfaceModel load_model_text(const std::string& text, const std::string& source) {
  LineState st;
  Json root;
  std::map<std::string, int> lines;
  LineSax sax(root, st, lines);
  TrackingIterator first(text.data(), &st), last(text.data() + text.size(), &st);
  try {
    Json::sax_parse(first, last, &sax);
  } catch (const Json::exception&) {
    throw ValidationError(source + ":" + std::to_string(st.line) + ": malformed JSON");
  }
  return Loader(root, std::move(lines), source).model();
}

SurfaceModel load_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError(path + ": cannot open model file");
  std::stringstream ss;
  ss << in.rdbuf();
  return load_model_text(ss.str(), path);
}

Json field_to_json(const NumberFieldDesc& k) {
  return Json{{"label", k.label}, {"degree", k.degree}, {"r1", k.r1}, {"r2", k.r2},
              {"abs_disc", k.abs_disc}, {"dedekind", to_string(k.tag)}, {"D", k.D}};
}

Json model_to_json(const SurfaceModel& m) {
  Json fibres = Json::array();
  for (const auto& fd : m.fibres) {
    Json comps = Json::array();
    for (const auto& c : fd.components)
      comps.push_back(Json{{"q", c.q}, {"genus", c.g}, {"P", c.P}, {"family", to_string(c.family)}});
    fibres.push_back(Json{{"p", fd.p}, {"good", fd.good}, {"components", comps}, {"nodes", fd.nodes}});
  }
  Json hs = Json::array();
  for (const auto& k : m.horizontals) hs.push_back(field_to_json(k));
  return Json{{"genus", m.g},     {"base", field_to_json(m.base)}, {"fibres", fibres},
              {"horizontals", hs}, {"p_max", m.p_max},            {"zeta_source", to_string(m.zeta_source)}};
}

std::string format_json(const Json& j) {
  std::string out;
  format_into(out, j, 0);
  out += "\n";
  return out;
}

void write_json(std::ostream& os, const Json& j) { os << format_json(j); }

} // namespace adelic
