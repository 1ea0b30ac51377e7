// Copyright 2026 The smallcat Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "smallcat/spec_format.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <sstream>

#include "smallcat/action.hpp"

namespace smallcat {

ParseError::ParseError(int line, int column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

constexpr std::pair<DocKind, const char*> kKindNames[] = {
    {DocKind::category, "category"}, {DocKind::groupoid, "groupoid"},       {DocKind::group, "group"},
    {DocKind::bundle, "bundle"},     {DocKind::action, "action"},           {DocKind::group_action, "group-action"},
    {DocKind::iso_witness, "iso-witness"},
};

struct Token {
  std::string text;
  int line = 0;
  int column = 0;
};

struct Field {
  std::string key;
  int line = 0;
  int column = 0;
  std::vector<Token> values;
  std::vector<std::vector<Token>> rows;
};

struct RawDoc {
  int line = 0;
  std::vector<Field> fields;
};

[[noreturn]] void fail(const Token& t, const std::string& message) { throw ParseError(t.line, t.column, message); }
[[noreturn]] void fail(const Field& f, const std::string& message) { throw ParseError(f.line, f.column, message); }

std::vector<Token> split(std::string_view text, int line, int offset) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == ' ' || text[i] == '\t') {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < text.size() && text[i] != ' ' && text[i] != '\t') ++i;
    out.push_back({std::string(text.substr(start, i - start)), line, offset + static_cast<int>(start) + 1});
  }
  return out;
}

std::vector<RawDoc> tokenize(std::string_view text) {
  std::vector<RawDoc> docs(1);
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string_view::npos) continue;
    const auto last = line.find_last_not_of(" \t");

    if (first == 0 && line.substr(0, last + 1) == "---") {
      docs.emplace_back();
      continue;
    }
    RawDoc& doc = docs.back();
    if (first > 0) {
      if (doc.fields.empty()) throw ParseError(line_no, static_cast<int>(first) + 1, "table row outside a key");
      Field& f = doc.fields.back();
      if (!f.values.empty()) throw ParseError(line_no, static_cast<int>(first) + 1, "key '" + f.key + "' takes no rows");
      f.rows.push_back(split(line, line_no, 0));
      continue;
    }
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) throw ParseError(line_no, 1, "expected 'key: value'");
    const std::string key(line.substr(0, colon));
    if (key.empty() || key.find_first_of(" \t") != std::string::npos)
      throw ParseError(line_no, 1, "malformed key '" + key + "'");
    if (doc.fields.empty()) doc.line = line_no;
    doc.fields.push_back({key, line_no, 1, split(line.substr(colon + 1), line_no, static_cast<int>(colon) + 1), {}});
  }
  docs.erase(std::remove_if(docs.begin(), docs.end(), [](const RawDoc& d) { return d.fields.empty(); }), docs.end());
  return docs;
}

Index integer(const Token& t) {
  Index v = 0;
  auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
  if (ec != std::errc() || ptr != t.text.data() + t.text.size() || v < 0)
    fail(t, "expected a nonnegative integer, got '" + t.text + "'");
  return v;
}

Index index_in(const Token& t, Index bound, bool undefined_ok, const char* what) {
  if (t.text == "-") {
    if (!undefined_ok) fail(t, std::string("undefined entry not allowed in ") + what);
    return kUndefined;
  }
  const Index v = integer(t);
  if (v >= bound) fail(t, std::string(what) + " index " + t.text + " out of range (" + std::to_string(bound) + ")");
  return v;
}

bool valid_name(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '-';
  });
}

// Field access for one document.
class Reader {
 public:
  explicit Reader(RawDoc& doc) : doc_(doc) {}

  const Field& take(const std::string& key) {
    const Field* found = nullptr;
    for (const Field& f : doc_.fields) {
      if (f.key != key) continue;
      if (found) fail(f, "duplicate key '" + key + "'");
      found = &f;
    }
    if (!found) throw ParseError(doc_.line, 1, "missing key '" + key + "'");
    used_.insert(key);
    return *found;
  }

  const Token& single(const std::string& key) {
    const Field& f = take(key);
    if (f.values.size() != 1 || !f.rows.empty()) fail(f, "key '" + key + "' takes exactly one value");
    return f.values.front();
  }

  Index count(const std::string& key) { return integer(single(key)); }

  IndexMap vector(const std::string& key, Index length, Index bound, const char* what) {
    const Field& f = take(key);
    if (!f.rows.empty()) fail(f, "key '" + key + "' takes inline values");
    if (static_cast<Index>(f.values.size()) != length)
      fail(f, "key '" + key + "' needs " + std::to_string(length) + " values, got " + std::to_string(f.values.size()));
    IndexMap out;
    for (const Token& t : f.values) out.push_back(index_in(t, bound, false, what));
    return out;
  }

  Table table(const std::string& key, Index rows, Index cols, Index bound, bool undefined_ok, const char* what,
              std::vector<std::vector<Token>>* tokens = nullptr) {
    const Field& f = take(key);
    if (!f.values.empty()) fail(f, "key '" + key + "' takes table rows");
    // Rows of an empty-column table are blank and therefore absent.
    if (cols == 0 && f.rows.empty()) return Table(rows, 0);
    if (static_cast<Index>(f.rows.size()) != rows)
      fail(f, "table '" + key + "' needs " + std::to_string(rows) + " rows, got " + std::to_string(f.rows.size()));
    Table out(rows, cols);
    for (Index r = 0; r < rows; ++r) {
      const auto& row = f.rows[r];
      if (static_cast<Index>(row.size()) != cols)
        fail(row.front(), "row needs " + std::to_string(cols) + " entries, got " + std::to_string(row.size()));
      for (Index c = 0; c < cols; ++c) out(r, c) = index_in(row[c], bound, undefined_ok, what);
    }
    if (tokens) *tokens = f.rows;
    return out;
  }

  void finish() const {
    for (const Field& f : doc_.fields)
      if (!used_.count(f.key)) fail(f, "unexpected key '" + f.key + "'");
  }

  RawDoc& doc() { return doc_; }

 private:
  RawDoc& doc_;
  std::set<std::string> used_;
};

bool category_like(DocKind k) { return k == DocKind::category || k == DocKind::groupoid || k == DocKind::group; }

// Objects and endpoints of a category-like document.
struct Shape {
  Index n_objects = 0;
  IndexMap source, target;
  Index n_morphisms() const { return static_cast<Index>(source.size()); }
};

Shape shape_of(const SpecDocument& d) {
  if (d.kind == DocKind::group) {
    const Index n = static_cast<Index>(std::get<GroupDoc>(d.payload).table.rows());
    return {1, IndexMap(n, 0), IndexMap(n, 0)};
  }
  const auto& raw = std::get<RawCategory>(d.payload);
  return {raw.n_objects, raw.source, raw.target};
}

class Resolver {
 public:
  Resolver(const SpecFile& context, const SpecFile& local) : context_(context), local_(local) {}

  const SpecDocument& lookup(const Token& t, bool (*accept)(DocKind), const char* expected) const {
    const SpecDocument* d = local_.find(t.text);
    if (!d) d = context_.find(t.text);
    if (!d) fail(t, "unknown document '" + t.text + "'");
    if (!accept(d->kind)) fail(t, "document '" + t.text + "' is a " + to_string(d->kind) + ", expected " + expected);
    return *d;
  }

 private:
  const SpecFile& context_;
  const SpecFile& local_;
};

SpecDocument read_category(Reader& r, DocKind kind, std::string name) {
  RawCategory raw;
  raw.n_objects = r.count("objects");
  const Index m = r.count("morphisms");
  raw.source = r.vector("source", m, raw.n_objects, "object");
  raw.target = r.vector("target", m, raw.n_objects, "object");
  raw.identity = r.vector("identity", raw.n_objects, m, "morphism");
  raw.compose = r.table("compose", m, m, m, true, "morphism");
  return {kind, std::move(name), std::move(raw)};
}

SpecDocument read_group(Reader& r, std::string name) {
  const Index n = r.count("order");
  if (n == 0) fail(r.take("order"), "group order must be positive");
  return {DocKind::group, std::move(name), GroupDoc{r.table("table", n, n, n, false, "element")}};
}

SpecDocument read_bundle(Reader& r, const Resolver& res, std::string name) {
  BundleDoc b;
  b.n_points = r.count("points");
  std::size_t next_field = 0;
  const auto& fields = r.doc().fields;
  // class/fiber lines alternate, in order.
  const Field* pending_class = nullptr;
  for (; next_field < fields.size(); ++next_field) {
    const Field& f = fields[next_field];
    if (f.key == "class") {
      if (pending_class) fail(f, "class without a fiber");
      if (!f.rows.empty()) fail(f, "key 'class' takes inline values");
      IndexMap points;
      for (const Token& t : f.values) {
        const Index p = integer(t);
        if (p >= b.n_points) fail(t, "class refers to unknown point " + t.text);
        points.push_back(p);
      }
      b.classes.push_back(std::move(points));
      pending_class = &f;
    } else if (f.key == "fiber") {
      if (!pending_class) fail(f, "fiber without a class");
      if (f.values.size() != 1 || !f.rows.empty()) fail(f, "key 'fiber' takes exactly one value");
      res.lookup(f.values.front(), [](DocKind k) { return k == DocKind::group; }, "group");
      b.fibers.push_back(f.values.front().text);
      pending_class = nullptr;
    } else if (f.key != "kind" && f.key != "name" && f.key != "points") {
      fail(f, "unexpected key '" + f.key + "'");
    }
  }
  if (pending_class) fail(*pending_class, "class without a fiber");
  return {DocKind::bundle, std::move(name), std::move(b)};
}

SpecDocument read_action(Reader& r, const Resolver& res, std::string name) {
  ActionDoc a;
  const Token acting = r.single("acting");
  const Token on = r.single("on");
  const Shape g = shape_of(res.lookup(acting, category_like, "category"));
  const Shape h = shape_of(res.lookup(on, category_like, "category"));
  a.acting = acting.text;
  a.acted_on = on.text;
  a.phi = r.vector("phi", h.n_objects, g.n_objects, "object");
  std::vector<std::vector<Token>> tokens;
  a.table = r.table("table", g.n_morphisms(), h.n_morphisms(), h.n_morphisms(), true, "morphism", &tokens);

  const BoolTable mask = domain_mask(g.source, h.source, h.target, a.phi);
  for (Index x = 0; x < g.n_morphisms(); ++x)
    for (Index y = 0; y < h.n_morphisms(); ++y) {
      const bool defined = a.table(x, y) != kUndefined;
      const std::string pair = "(" + std::to_string(x) + ", " + std::to_string(y) + ")";
      if (mask(x, y) && !defined) fail(tokens[x][y], "action table misses domain pair " + pair);
      if (!mask(x, y) && defined) fail(tokens[x][y], "action table defines pair " + pair + " outside the domain");
    }
  return {DocKind::action, std::move(name), std::move(a)};
}

SpecDocument read_group_action(Reader& r, const Resolver& res, std::string name) {
  GroupActionDoc a;
  const Token group = r.single("group");
  const auto& gdoc = res.lookup(group, [](DocKind k) { return k == DocKind::group; }, "group");
  a.group = group.text;
  a.n_points = r.count("points");
  const Index order = static_cast<Index>(std::get<GroupDoc>(gdoc.payload).table.rows());
  a.table = r.table("table", order, a.n_points, a.n_points, false, "point");
  return {DocKind::group_action, std::move(name), std::move(a)};
}

SpecDocument read_witness(Reader& r, const Resolver& res, std::string name) {
  IsoWitnessDoc w;
  const Token from = r.single("from");
  const Token to = r.single("to");
  const Shape a = shape_of(res.lookup(from, category_like, "category"));
  const Shape b = shape_of(res.lookup(to, category_like, "category"));
  w.from = from.text;
  w.to = to.text;
  w.witness.object_map = r.vector("objects", a.n_objects, b.n_objects, "object");
  w.witness.morphism_map = r.vector("morphisms", a.n_morphisms(), b.n_morphisms(), "morphism");
  return {DocKind::iso_witness, std::move(name), std::move(w)};
}

std::string join(const IndexMap& v) {
  std::string out;
  for (Index x : v) {
    out += ' ';
    out += x == kUndefined ? std::string("-") : std::to_string(x);
  }
  return out;
}

void emit_table(std::ostringstream& os, const char* key, const Table& t) {
  os << key << ":\n";
  for (Index r = 0; r < t.rows(); ++r) {
    os << ' ';
    for (Index c = 0; c < t.cols(); ++c) os << ' ' << (t(r, c) == kUndefined ? std::string("-") : std::to_string(t(r, c)));
    os << '\n';
  }
}

}  // namespace

std::string to_string(DocKind kind) {
  for (const auto& [k, name] : kKindNames)
    if (k == kind) return name;
  throw InternalError("unknown document kind");
}

const SpecDocument* SpecFile::find(const std::string& name) const {
  for (const auto& d : documents)
    if (d.name == name) return &d;
  return nullptr;
}

SpecFile parse_spec(std::string_view text, const SpecFile& context) {
  std::vector<RawDoc> raw = tokenize(text);
  SpecFile out;
  Resolver res(context, out);

  struct Header {
    DocKind kind;
    std::string name;
  };
  std::vector<Header> headers;
  std::set<std::string> names;
  for (RawDoc& d : raw) {
    Reader r(d);
    const Token& kind_tok = r.single("kind");
    std::optional<DocKind> kind;
    for (const auto& [k, n] : kKindNames)
      if (kind_tok.text == n) kind = k;
    if (!kind) fail(kind_tok, "unknown kind '" + kind_tok.text + "'");
    const Token& name_tok = r.single("name");
    if (!valid_name(name_tok.text)) fail(name_tok, "invalid name '" + name_tok.text + "'");
    if (names.count(name_tok.text) || context.find(name_tok.text)) fail(name_tok, "duplicate name '" + name_tok.text + "'");
    names.insert(name_tok.text);
    headers.push_back({*kind, name_tok.text});
  }

  // Category-like documents reference nothing, so they are read first; the
  // output keeps file order.
  std::vector<std::optional<SpecDocument>> docs(raw.size());
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t i = 0; i < raw.size(); ++i) {
      const DocKind kind = headers[i].kind;
      if (category_like(kind) != (pass == 0)) continue;
      Reader r(raw[i]);
      r.take("kind");
      r.take("name");
      std::string name = headers[i].name;
      switch (kind) {
        case DocKind::category:
        case DocKind::groupoid: docs[i] = read_category(r, kind, std::move(name)); break;
        case DocKind::group: docs[i] = read_group(r, std::move(name)); break;
        case DocKind::bundle: docs[i] = read_bundle(r, res, std::move(name)); break;
        case DocKind::action: docs[i] = read_action(r, res, std::move(name)); break;
        case DocKind::group_action: docs[i] = read_group_action(r, res, std::move(name)); break;
        case DocKind::iso_witness: docs[i] = read_witness(r, res, std::move(name)); break;
      }
      if (kind != DocKind::bundle) r.finish();
      if (pass == 0) out.documents.push_back(*docs[i]);
    }
  }
  out.documents.clear();
  for (auto& d : docs) out.documents.push_back(std::move(*d));
  return out;
}

std::string emit(const SpecDocument& doc) {
  std::ostringstream os;
  os << "kind: " << to_string(doc.kind) << "\nname: " << doc.name << '\n';
  std::visit(
      [&](const auto& p) {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, RawCategory>) {
          os << "objects: " << p.n_objects << "\nmorphisms: " << p.n_morphisms() << '\n';
          os << "source:" << join(p.source) << "\ntarget:" << join(p.target) << "\nidentity:" << join(p.identity)
             << '\n';
          emit_table(os, "compose", p.compose);
        } else if constexpr (std::is_same_v<P, GroupDoc>) {
          os << "order: " << p.table.rows() << '\n';
          emit_table(os, "table", p.table);
        } else if constexpr (std::is_same_v<P, BundleDoc>) {
          os << "points: " << p.n_points << '\n';
          for (std::size_t i = 0; i < p.classes.size(); ++i)
            os << "class:" << join(p.classes[i]) << "\nfiber: " << p.fibers[i] << '\n';
        } else if constexpr (std::is_same_v<P, ActionDoc>) {
          os << "acting: " << p.acting << "\non: " << p.acted_on << "\nphi:" << join(p.phi) << '\n';
          emit_table(os, "table", p.table);
        } else if constexpr (std::is_same_v<P, GroupActionDoc>) {
          os << "group: " << p.group << "\npoints: " << p.n_points << '\n';
          emit_table(os, "table", p.table);
        } else {
          os << "from: " << p.from << "\nto: " << p.to << "\nobjects:" << join(p.witness.object_map)
             << "\nmorphisms:" << join(p.witness.morphism_map) << '\n';
        }
      },
      doc.payload);
  return os.str();
}

std::string emit(const SpecFile& file) {
  std::string out;
  for (std::size_t i = 0; i < file.documents.size(); ++i) {
    if (i > 0) out += "---\n";
    out += emit(file.documents[i]);
  }
  return out;
}

SpecDocument category_document(std::string name, const FiniteCategory& c, bool groupoid) {
  return {groupoid ? DocKind::groupoid : DocKind::category, std::move(name), c.raw()};
}

SpecDocument group_document(std::string name, const Table& table) {
  return {DocKind::group, std::move(name), GroupDoc{table}};
}

SpecDocument witness_document(std::string name, std::string from, std::string to, IsoWitness w) {
  return {DocKind::iso_witness, std::move(name), IsoWitnessDoc{std::move(from), std::move(to), std::move(w)}};
}

}  // namespace smallcat
