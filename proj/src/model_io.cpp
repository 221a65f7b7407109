#include <map>
#include <set>

#include "json.hpp"

#include "selfsim/io.hpp"

namespace selfsim {

namespace {

using nlohmann::json;

struct Position {
  int line = 1;
  int column = 1;
};

// Start positions of every value in an already well-formed document, keyed by
// field path ("slots[2][0]").
class Locator {
 public:
  explicit Locator(std::string_view text) : text_(text) {
    skip_ws();
    value("");
  }
  Position at(const std::string& path) const {
    auto it = where_.find(path);
    return it == where_.end() ? Position{} : it->second;
  }

 private:
  void advance() {
    if (text_[i_] == '\n') {
      ++pos_.line;
      pos_.column = 1;
    } else {
      ++pos_.column;
    }
    ++i_;
  }
  void skip_ws() {
    while (i_ < text_.size() && (text_[i_] == ' ' || text_[i_] == '\t' || text_[i_] == '\n' ||
                                 text_[i_] == '\r')) {
      advance();
    }
  }
  std::string string() {
    std::string out;
    advance();
    while (i_ < text_.size() && text_[i_] != '"') {
      if (text_[i_] == '\\') {
        advance();
      }
      out.push_back(text_[i_]);
      advance();
    }
    advance();
    return out;
  }
  void value(const std::string& path) {
    where_[path] = pos_;
    if (i_ >= text_.size()) return;
    const char c = text_[i_];
    if (c == '{') {
      advance();
      skip_ws();
      while (i_ < text_.size() && text_[i_] != '}') {
        std::string key = string();
        skip_ws();
        advance();  // ':'
        skip_ws();
        value(path.empty() ? key : path + "." + key);
        skip_ws();
        if (text_[i_] == ',') {
          advance();
          skip_ws();
        }
      }
      advance();
    } else if (c == '[') {
      advance();
      skip_ws();
      for (std::size_t k = 0; i_ < text_.size() && text_[i_] != ']'; ++k) {
        value(path + "[" + std::to_string(k) + "]");
        skip_ws();
        if (text_[i_] == ',') {
          advance();
          skip_ws();
        }
      }
      advance();
    } else if (c == '"') {
      string();
    } else {
      while (i_ < text_.size() && text_[i_] != ',' && text_[i_] != ']' && text_[i_] != '}' &&
             text_[i_] != ' ' && text_[i_] != '\n' && text_[i_] != '\r' && text_[i_] != '\t') {
        advance();
      }
    }
  }

  std::string_view text_;
  std::size_t i_ = 0;
  Position pos_;
  std::map<std::string, Position> where_;
};

class Reader {
 public:
  Reader(std::string_view text, const json& doc) : locator_(text), doc_(doc) {}

  [[noreturn]] void fail(const std::string& path, const std::string& why) const {
    const Position p = locator_.at(path);
    throw InputError("model: line " + std::to_string(p.line) + ", column " +
                     std::to_string(p.column) + ": " + (path.empty() ? "document" : path) +
                     ": " + why);
  }

  std::uint64_t natural(const json& v, const std::string& path) const {
    if (!v.is_number_integer()) fail(path, "expected a non-negative integer");
    if (v.is_number_unsigned()) return v.get<std::uint64_t>();
    const auto s = v.get<std::int64_t>();
    if (s < 0) fail(path, "expected a non-negative integer");
    return static_cast<std::uint64_t>(s);
  }

  std::vector<VertexId> id_list(const json& v, const std::string& path, std::uint64_t vertices,
                                std::optional<std::size_t> arity) const {
    if (!v.is_array()) fail(path, "expected an array of vertex ids");
    if (arity && v.size() != *arity) {
      fail(path, "expected " + std::to_string(*arity) + " entries, got " +
                     std::to_string(v.size()));
    }
    std::vector<VertexId> out;
    std::set<VertexId> seen;
    for (std::size_t i = 0; i < v.size(); ++i) {
      const std::string p = path + "[" + std::to_string(i) + "]";
      const std::uint64_t id = natural(v[i], p);
      if (id >= vertices) {
        fail(p, "id " + std::to_string(id) + " out of range (vertices = " +
                    std::to_string(vertices) + ")");
      }
      if (!seen.insert(static_cast<VertexId>(id)).second) {
        fail(p, "id " + std::to_string(id) + " repeated");
      }
      out.push_back(static_cast<VertexId>(id));
    }
    return out;
  }

  CellModel read() const {
    if (!doc_.is_object()) fail("", "expected an object");
    static const std::set<std::string> known{"name", "vertices", "boundary", "slots",
                                             "anchor_slot"};
    for (const auto& [key, value] : doc_.items()) {
      if (!known.count(key)) fail(key, "unknown field");
    }
    for (const char* key : {"vertices", "boundary", "slots"}) {
      if (!doc_.contains(key)) fail("", std::string("missing field '") + key + "'");
    }
    CellModel m;
    m.name = "model";
    if (doc_.contains("name")) {
      if (!doc_["name"].is_string()) fail("name", "expected a string");
      m.name = doc_["name"].get<std::string>();
    }
    const std::uint64_t vertices = natural(doc_["vertices"], "vertices");
    if (vertices == 0 || vertices > std::numeric_limits<VertexId>::max()) {
      fail("vertices", "vertex count out of range");
    }
    m.vertex_count = static_cast<std::size_t>(vertices);
    m.boundary = id_list(doc_["boundary"], "boundary", vertices, std::nullopt);
    const json& slots = doc_["slots"];
    if (!slots.is_array()) fail("slots", "expected an array of slots");
    for (std::size_t s = 0; s < slots.size(); ++s) {
      m.slots.push_back(id_list(slots[s], "slots[" + std::to_string(s) + "]", vertices,
                                m.boundary.size()));
    }
    if (doc_.contains("anchor_slot")) {
      const std::uint64_t a = natural(doc_["anchor_slot"], "anchor_slot");
      if (a >= m.slots.size()) fail("anchor_slot", "anchor_slot out of range");
      m.anchor_slot = static_cast<std::size_t>(a);
    }
    return m;
  }

 private:
  Locator locator_;
  const json& doc_;
};

}  // namespace

CellModel parse_model(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw InputError(std::string("model: syntax error: ") + e.what());
  }
  return Reader(text, doc).read();
}

std::string serialize_model(const CellModel& m) {
  nlohmann::ordered_json doc;
  doc["name"] = m.name;
  doc["vertices"] = m.vertex_count;
  doc["boundary"] = m.boundary;
  doc["slots"] = m.slots;
  doc["anchor_slot"] = m.anchor_slot;
  return doc.dump(2) + "\n";
}

}  // namespace selfsim
