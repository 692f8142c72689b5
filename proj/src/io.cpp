#include "tropohull/io.hpp"

#include "tropohull/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <climits>
#include <fstream>
#include <iterator>
#include <map>
#include <sstream>

namespace tropohull {

using nlohmann::json;

namespace {

// Forward iterator over the text that tracks the line of the last
// non-whitespace character read. The lexer reads at most one character past a
// token, and that character is either whitespace or on the same line.
struct LineTracker {
  std::size_t line = 1;
  std::size_t significant = 1;
};

class CountingIterator {
 public:
  using iterator_category = std::input_iterator_tag;
  using value_type = char;
  using difference_type = std::ptrdiff_t;
  using pointer = const char*;
  using reference = const char&;

  CountingIterator() = default;
  CountingIterator(const char* p, LineTracker* t) : p_(p), tracker_(t) {}
  reference operator*() const {
    if (tracker_ && !std::isspace(static_cast<unsigned char>(*p_))) tracker_->significant = tracker_->line;
    return *p_;
  }
  CountingIterator& operator++() {
    if (tracker_ && *p_ == '\n') ++tracker_->line;
    ++p_;
    return *this;
  }
  CountingIterator operator++(int) {
    auto old = *this;
    ++*this;
    return old;
  }
  friend bool operator==(const CountingIterator& a, const CountingIterator& b) { return a.p_ == b.p_; }

 private:
  const char* p_ = nullptr;
  LineTracker* tracker_ = nullptr;
};

// JSON pointer of every value, mapped to the line where it starts.
class LineMap {
 public:
  explicit LineMap(const LineTracker& t) : tracker_(t) {}

  bool on_event(json::parse_event_t event, const json& parsed) {
    switch (event) {
      case json::parse_event_t::object_start:
      case json::parse_event_t::array_start:
        lines_[child_path()] = tracker_.significant;
        frames_.push_back({event == json::parse_event_t::array_start, 0, {}});
        break;
      case json::parse_event_t::object_end:
      case json::parse_event_t::array_end:
        frames_.pop_back();
        advance();
        break;
      case json::parse_event_t::key:
        frames_.back().key = parsed.get<std::string>();
        break;
      case json::parse_event_t::value:
        lines_[child_path()] = tracker_.significant;
        advance();
        break;
    }
    return true;
  }

  std::size_t line(const std::string& pointer) const {
    const auto it = lines_.find(pointer);
    return it == lines_.end() ? 0 : it->second;
  }

 private:
  struct Frame {
    bool array;
    std::size_t index;
    std::string key;
  };
  std::string child_path() const {
    std::string p;
    for (const auto& f : frames_) p += "/" + (f.array ? std::to_string(f.index) : f.key);
    return p;
  }
  void advance() {
    if (!frames_.empty() && frames_.back().array) ++frames_.back().index;
  }

  const LineTracker& tracker_;
  std::vector<Frame> frames_;
  std::map<std::string, std::size_t> lines_;
};

std::size_t line_of_byte(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) line += text[i] == '\n';
  return line;
}

class Reader {
 public:
  Reader(const json& doc, const LineMap& lines) : doc_(doc), lines_(lines) {}

  [[noreturn]] void fail(const std::string& pointer, const std::string& what) const {
    throw ParseError(what + (pointer.empty() ? "" : " at " + pointer), lines_.line(pointer));
  }

  const json& at(const std::string& pointer) const { return doc_.at(json::json_pointer(pointer)); }

  Rational rational(const std::string& pointer) const {
    const json& v = at(pointer);
    if (v.is_number_integer()) return Rational(v.dump());
    if (v.is_string()) {
      try {
        return parse_rational(v.get<std::string>());
      } catch (const InputError& e) {
        fail(pointer, e.what());
      }
    }
    if (v.is_number_float()) fail(pointer, "decimal numbers are not exact; write \"p/q\"");
    fail(pointer, "expected an integer or a \"p/q\" string");
  }

  long integer(const std::string& pointer) const {
    const json& v = at(pointer);
    if (!v.is_number_integer()) fail(pointer, "expected an integer");
    if (v.is_number_unsigned() && v.get<unsigned long long>() > static_cast<unsigned long long>(LONG_MAX))
      fail(pointer, "integer out of range");
    return v.get<long>();
  }

  const json& array(const std::string& pointer, bool nonempty) const {
    const json& v = at(pointer);
    if (!v.is_array()) fail(pointer, "expected an array");
    if (nonempty && v.empty()) fail(pointer, "expected a nonempty array");
    return v;
  }

 private:
  const json& doc_;
  const LineMap& lines_;
};

}  // namespace

TropicalPoint parse_point(std::string_view s) {
  RationalVector coords;
  std::size_t start = 0;
  while (true) {
    const auto comma = s.find(',', start);
    coords.push_back(parse_rational(s.substr(start, comma == std::string_view::npos ? comma : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return TropicalPoint(std::move(coords));
}

InputDocument parse_input(std::string_view text) {
  LineTracker tracker;
  LineMap lines(tracker);
  json doc;
  try {
    doc = json::parse(CountingIterator(text.data(), &tracker), CountingIterator(text.data() + text.size(), nullptr),
                      [&](int, json::parse_event_t e, json& parsed) { return lines.on_event(e, parsed); });
  } catch (const json::parse_error& e) {
    std::string what = e.what();
    if (const auto pos = what.find("syntax error"); pos != std::string::npos) what = what.substr(pos);
    throw ParseError(what, line_of_byte(text, e.byte));
  }
  const Reader r(doc, lines);
  if (!doc.is_object()) r.fail("", "the input must be a JSON object");
  const bool has_points = doc.contains("points"), has_ideal = doc.contains("ideal");
  if (has_points == has_ideal) r.fail("", "the input needs exactly one of \"points\" and \"ideal\"");

  InputDocument out;
  if (has_points) {
    out.kind = InputDocument::Kind::points;
    const json& pts = r.array("/points", true);
    std::size_t dim = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const std::string p = "/points/" + std::to_string(i);
      const json& row = r.array(p, true);
      if (i == 0) dim = row.size();
      if (row.size() != dim)
        r.fail(p, "point has " + std::to_string(row.size()) + " coordinates, expected " + std::to_string(dim));
      RationalVector coords;
      for (std::size_t j = 0; j < row.size(); ++j) coords.push_back(r.rational(p + "/" + std::to_string(j)));
      out.points.emplace_back(std::move(coords));
    }
    if (dim < 2) r.fail("/points/0", "points need at least two coordinates");
    return out;
  }

  out.kind = InputDocument::Kind::ideal;
  if (!doc["ideal"].is_object()) r.fail("/ideal", "expected an object");
  if (!doc["ideal"].contains("nvars")) r.fail("/ideal", "missing \"nvars\"");
  if (!doc["ideal"].contains("generators")) r.fail("/ideal", "missing \"generators\"");
  const long nvars = r.integer("/ideal/nvars");
  if (nvars < 1) r.fail("/ideal/nvars", "an ideal needs at least one variable");
  out.ideal.nvars = static_cast<std::size_t>(nvars);
  const json& gens = r.array("/ideal/generators", true);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const std::string p = "/ideal/generators/" + std::to_string(i);
    const json& row = r.array(p, false);
    if (row.size() != out.ideal.nvars)
      r.fail(p, "generator has " + std::to_string(row.size()) + " exponents, expected " + std::to_string(nvars));
    Exponent e;
    for (std::size_t j = 0; j < row.size(); ++j) {
      const std::string q = p + "/" + std::to_string(j);
      e.push_back(r.integer(q));
      if (e.back() < 0) r.fail(q, "exponents must be nonnegative");
    }
    out.ideal.generators.push_back(std::move(e));
  }
  out.warnings = out.ideal.normalize();
  out.points = tropicalize(out.ideal);
  return out;
}

InputDocument read_input_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_input(buf.str());
}

}  // namespace tropohull
