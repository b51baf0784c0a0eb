#pragma once

#include <openssl/evp.h>

#include <algorithm>
#include <array>
#include <cstddef>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hopfpi/hopfpi.hpp"
#include "json.hpp"

namespace hopfpi::io {

using json = nlohmann::ordered_json;

inline std::string sha256_hex(std::string_view data) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), digest.data(), &len, EVP_sha256(), nullptr);
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4U];
    out += hex[digest[i] & 0xFU];
  }
  return out;
}

/// Canonical bytes of a document: two-space indentation plus a final newline.
inline std::string render(const json& j) { return j.dump(2) + "\n"; }

/// A parsed input file together with its raw text, kept for line lookup.
class Document {
 public:
  Document(std::string text, std::string origin) : text_(std::move(text)), origin_(std::move(origin)) {
    try {
      root_ = json::parse(text_);
    } catch (const json::parse_error& e) {
      throw ParseError(line_at(e.byte == 0 ? 0 : e.byte - 1), origin_ + ": " + strip_prefix(e.what()));
    }
  }

  static Document load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(0, path + ": cannot open file");
    std::stringstream ss;
    ss << in.rdbuf();
    return Document(ss.str(), path);
  }

  const json& root() const { return root_; }
  const std::string& text() const { return text_; }
  std::string sha256() const { return sha256_hex(text_); }

  std::size_t line_at(std::size_t byte) const {
    byte = std::min(byte, text_.size());
    return 1 + static_cast<std::size_t>(std::count(text_.begin(), text_.begin() + static_cast<long>(byte), '\n'));
  }

  /// Line of the first occurrence of `token`, or 0.
  std::size_t line_of(const std::string& token) const {
    const auto pos = text_.find(token);
    return pos == std::string::npos ? 0 : line_at(pos);
  }

  std::string kind() const {
    if (!root_.is_object()) throw ParseError(1, origin_ + ": top level must be an object");
    const auto it = root_.find("kind");
    if (it == root_.end() || !it->is_string()) throw ShapeMismatch("kind: missing");
    return it->get<std::string>();
  }

  std::optional<FieldSpec> field() const {
    if (!root_.is_object()) return std::nullopt;
    const auto it = root_.find("field");
    if (it == root_.end()) return std::nullopt;
    if (!it->is_string()) throw ParseError(line_of("\"field\""), "field must be a string");
    try {
      return FieldSpec::parse(it->get<std::string>());
    } catch (const ParseError& e) {
      throw ParseError(line_of("\"field\""), e.what());
    }
  }

 private:
  static std::string strip_prefix(const std::string& what) {
    const auto pos = what.find("] ");
    return pos == std::string::npos ? what : what.substr(pos + 2);
  }

  std::string text_;
  std::string origin_;
  json root_;
};

inline std::string pair_key(std::size_t a, std::size_t b) { return std::to_string(a) + "," + std::to_string(b); }

/// Typed reader over one document. Missing keys raise ShapeMismatch naming
/// the field; malformed scalars raise ParseError with the line of the token.
template <ExactField K>
class Reader {
 public:
  explicit Reader(const Document& doc) : doc_(doc) {}

  const json& at(const json& j, const std::string& key, const std::string& where) const {
    if (!j.is_object()) throw ShapeMismatch(where + ": expected an object");
    const auto it = j.find(key);
    if (it == j.end()) throw ShapeMismatch(join(where, key) + ": missing");
    return *it;
  }

  std::size_t count(const json& j, const std::string& where) const {
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
      throw ParseError(doc_.line_of(j.dump()), where + ": expected a non-negative integer");
    return j.get<std::size_t>();
  }

  K scalar(const json& j, const std::string& where) const {
    std::string token;
    if (j.is_string())
      token = j.get<std::string>();
    else if (j.is_number_integer())
      token = j.dump();
    else
      throw ParseError(doc_.line_of(j.dump()), where + ": scalar must be a string or an integer, got " + j.dump());
    try {
      return K::parse(token);
    } catch (const ParseError& e) {
      throw ParseError(doc_.line_of(j.dump()), where + ": " + e.what());
    } catch (const Error& e) {
      throw ParseError(doc_.line_of(j.dump()), where + ": " + e.what());
    }
  }

  Vec<K> vector(const json& j, std::size_t expected, const std::string& where) const {
    if (!j.is_array()) throw ShapeMismatch(where + ": expected an array");
    if (j.size() != expected)
      throw ShapeMismatch(where + ": expected length " + std::to_string(expected) + ", got " +
                          std::to_string(j.size()));
    Vec<K> v;
    for (const auto& x : j) v.push_back(scalar(x, where));
    return v;
  }

  /// {rows, cols, triples} or a bare triple list of the expected shape.
  Matrix<K> matrix(const json& j, std::size_t rows, std::size_t cols, const std::string& where) const {
    const json* triples = &j;
    if (j.is_object()) {
      const auto r = count(at(j, "rows", where), join(where, "rows"));
      const auto c = count(at(j, "cols", where), join(where, "cols"));
      if (r != rows || c != cols)
        throw ShapeMismatch(where + ": expected " + std::to_string(rows) + "x" + std::to_string(cols) + ", got " +
                            std::to_string(r) + "x" + std::to_string(c));
      triples = &at(j, "triples", where);
    }
    if (!triples->is_array()) throw ShapeMismatch(where + ": expected a triple list");
    Matrix<K> m(rows, cols);
    std::vector<bool> seen(rows * cols, false);
    for (const auto& t : *triples) {
      if (!t.is_array() || t.size() != 3) throw ParseError(doc_.line_of(t.dump()), where + ": bad triple " + t.dump());
      const auto r = count(t[0], where);
      const auto c = count(t[1], where);
      if (r >= rows || c >= cols)
        throw ShapeMismatch(where + ": entry (" + std::to_string(r) + "," + std::to_string(c) + ") outside " +
                            std::to_string(rows) + "x" + std::to_string(cols));
      if (seen[r * cols + c])
        throw ParseError(0, where + ": duplicate entry (" + std::to_string(r) + "," + std::to_string(c) + ")");
      seen[r * cols + c] = true;
      m(r, c) = scalar(t[2], where);
    }
    return m;
  }

  GroupTable group(const json& j) const {
    const auto& t = at(j, "table", "group");
    if (!t.is_array()) throw ShapeMismatch("group.table: expected an array of rows");
    GroupTable::Table table;
    for (const auto& row : t) {
      if (!row.is_array()) throw ShapeMismatch("group.table: expected an array of rows");
      std::vector<std::size_t> r;
      for (const auto& x : row) r.push_back(count(x, "group.table"));
      table.push_back(std::move(r));
    }
    if (j.contains("order") && count(j["order"], "group.order") != table.size())
      throw ShapeMismatch("group.order: table has " + std::to_string(table.size()) + " rows");
    return validate_group(std::move(table));
  }

  CoalgebraFamily<K> coalgebra(const json& j, const std::vector<std::size_t>* dims_hint = nullptr) const {
    CoalgebraFamily<K> c;
    c.group = group(at(j, "group", ""));
    c.field = field_of(j);
    const std::size_t n = c.order();
    if (dims_hint) {
      c.dims = *dims_hint;
    } else {
      const auto& d = at(j, "dims", "");
      if (!d.is_array() || d.size() != n) throw ShapeMismatch("dims: expected " + std::to_string(n) + " entries");
      for (const auto& x : d) c.dims.push_back(count(x, "dims"));
    }
    const auto& delta = at(j, "delta", "");
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        const auto key = pair_key(a, b);
        c.delta.push_back(matrix(at(delta, key, "delta"), c.dims[a] * c.dims[b], c.dims[c.group.mul(a, b)],
                                 "delta." + key));
      }
    c.counit = vector(at(j, "counit", ""), c.dims[0], "counit");
    return c;
  }

  HopfFamily<K> hopf(const json& j) const {
    const GroupTable g = group(at(j, "group", ""));
    const std::size_t n = g.order();
    const auto& comps = at(j, "components", "");
    std::vector<std::size_t> dims;
    std::vector<AlgebraComponent<K>> components;
    for (std::size_t a = 0; a < n; ++a) {
      const std::string where = "components." + std::to_string(a);
      const auto& cj = at(comps, std::to_string(a), "components");
      AlgebraComponent<K> comp;
      comp.dim = count(at(cj, "dim", where), where + ".dim");
      if (comp.dim == 0) throw ShapeMismatch(where + ".dim: must be at least 1");
      comp.mul = matrix(at(cj, "mul", where), comp.dim, comp.dim * comp.dim, where + ".mul");
      comp.unit = vector(at(cj, "unit", where), comp.dim, where + ".unit");
      dims.push_back(comp.dim);
      components.push_back(std::move(comp));
    }
    HopfFamily<K> h;
    static_cast<CoalgebraFamily<K>&>(h) = coalgebra(j, &dims);
    h.components = std::move(components);
    const auto& s = at(j, "antipode", "");
    for (std::size_t a = 0; a < n; ++a)
      h.antipode.push_back(
          matrix(at(s, std::to_string(a), "antipode"), dims[g.inv(a)], dims[a], "antipode." + std::to_string(a)));
    h.validate_shapes();
    return h;
  }

  ComoduleFamily<K> comodule(const json& j, const CoalgebraFamily<K>& over) const {
    ComoduleFamily<K> m;
    const auto& side = at(j, "side", "");
    if (side == "right")
      m.side = Side::right;
    else if (side == "left")
      m.side = Side::left;
    else
      throw ShapeMismatch("side: expected \"right\" or \"left\"");
    const std::size_t n = over.order();
    const auto& d = at(j, "dims", "");
    if (!d.is_array() || d.size() != n) throw ShapeMismatch("dims: expected " + std::to_string(n) + " entries");
    for (const auto& x : d) m.dims.push_back(count(x, "dims"));
    const auto& co = at(j, "coaction", "");
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        const auto key = pair_key(a, b);
        const std::size_t rows = m.side == Side::right ? m.dims[a] * over.dim(b) : over.dim(a) * m.dims[b];
        m.coaction.push_back(matrix(at(co, key, "coaction"), rows, m.dims[over.group.mul(a, b)], "coaction." + key));
      }
    m.validate_shapes(over);
    return m;
  }

  /// Per-component maps keyed by element index with shape rows(a) x cols(a).
  template <class Rows, class Cols>
  std::vector<Matrix<K>> maps(const json& j, std::size_t n, Rows rows, Cols cols, const std::string& where) const {
    std::vector<Matrix<K>> out;
    for (std::size_t a = 0; a < n; ++a)
      out.push_back(matrix(at(j, std::to_string(a), where), rows(a), cols(a), where + "." + std::to_string(a)));
    return out;
  }

  Cosection<K> cosection(const json& j, const HopfFamily<K>& h) const {
    Cosection<K> c;
    c.maps = maps(
        at(j, "maps", ""), h.order(), [&](std::size_t a) { return h.dim(a); }, [&](std::size_t) { return h.dim(0); },
        "maps");
    return c;
  }

  Section<K> section(const json& j, const QuotientPair<K>& p) const {
    const auto& h = p.ambient;
    const auto& c = p.C();
    Section<K> s;
    s.g = maps(
        at(j, "g", "section"), h.order(), [&](std::size_t a) { return h.dim(a); },
        [&](std::size_t a) { return c.dim(a); }, "section.g");
    s.ginv = maps(
        at(j, "ginv", "section"), h.order(), [&](std::size_t a) { return h.dim(a); },
        [&](std::size_t a) { return c.dim(h.group.inv(a)); }, "section.ginv");
    return s;
  }

  /// The ambient comes from the file's "ambient" key unless supplied.
  QuotientPair<K> pair(const json& j, const std::optional<HopfFamily<K>>& ambient) const {
    QuotientPair<K> p;
    if (ambient)
      p.ambient = *ambient;
    else
      p.ambient = hopf(at(j, "ambient", "pair"));
    const auto& variant = at(j, "variant", "pair");
    if (variant == "subcoalgebra")
      p.variant = PairVariant::pi_subcoalgebra;
    else if (variant == "coisotropic")
      p.variant = PairVariant::coisotropic;
    else
      throw ShapeMismatch("variant: expected \"subcoalgebra\" or \"coisotropic\"");
    const auto& t = at(j, "target", "pair");
    if (t.is_object() && t.contains("components"))
      p.target = hopf(t);
    else
      p.target = coalgebra(t);
    const auto& h = p.ambient;
    const auto& c = p.C();
    if (!(c.group == h.group)) throw ShapeMismatch("target.group: differs from the ambient group");
    p.sigma = maps(
        at(j, "sigma", "pair"), h.order(), [&](std::size_t a) { return c.dim(a); },
        [&](std::size_t a) { return h.dim(a); }, "sigma");
    if (j.contains("omega"))
      p.omega = maps(
          j["omega"], h.order(), [&](std::size_t a) { return c.dim(a); },
          [&](std::size_t a) { return h.dim(a) * c.dim(a); }, "omega");
    p.validate_shapes();
    return p;
  }

  std::optional<Section<K>> embedded_section(const json& j, const QuotientPair<K>& p) const {
    if (!j.contains("section")) return std::nullopt;
    return section(j["section"], p);
  }

  std::vector<Subspace<K>> subspaces(const json& j, const HopfFamily<K>& h, const std::string& where) const {
    std::vector<Subspace<K>> out;
    for (std::size_t a = 0; a < h.order(); ++a) {
      const auto& sj = at(j, std::to_string(a), where);
      const auto d = count(at(sj, "dim", where), where + ".dim");
      out.push_back(Subspace<K>::span(matrix(at(sj, "basis", where), d, h.dim(a), where + "." + std::to_string(a))));
    }
    return out;
  }

  SubHopfFamily<K> subhopf(const json& j) const {
    SubHopfFamily<K> s;
    s.ambient = hopf(at(j, "ambient", ""));
    s.subspaces = subspaces(at(j, "subspaces", ""), s.ambient, "subspaces");
    if (j.contains("complement")) s.complement = subspaces(j["complement"], s.ambient, "complement");
    return s;
  }

 private:
  static std::string join(const std::string& where, const std::string& key) {
    return where.empty() ? key : where + "." + key;
  }

  FieldSpec field_of(const json& j) const {
    if (!j.contains("field")) return {};
    if (!j["field"].is_string()) throw ParseError(doc_.line_of("\"field\""), "field must be a string");
    return FieldSpec::parse(j["field"].get<std::string>());
  }

  const Document& doc_;
};

// Writers. Scalars are always strings, matrices always {rows, cols, triples}.

template <ExactField K>
json to_json(const Matrix<K>& m) {
  json triples = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_zero()) triples.push_back(json::array({r, c, m(r, c).str()}));
  json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  j["triples"] = std::move(triples);
  return j;
}

template <ExactField K>
json to_json(const Vec<K>& v) {
  json j = json::array();
  for (const auto& x : v) j.push_back(x.str());
  return j;
}

inline json to_json(const GroupTable& g) {
  json j;
  j["order"] = g.order();
  j["table"] = g.table();
  return j;
}

template <ExactField K>
json maps_json(const std::vector<Matrix<K>>& maps) {
  json j = json::object();
  for (std::size_t a = 0; a < maps.size(); ++a) j[std::to_string(a)] = to_json(maps[a]);
  return j;
}

template <ExactField K>
json family_maps_json(const std::vector<Matrix<K>>& maps, std::size_t n) {
  json j = json::object();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) j[pair_key(a, b)] = to_json(maps[a * n + b]);
  return j;
}

template <ExactField K>
json to_json(const CoalgebraFamily<K>& c) {
  json j;
  j["kind"] = "coalgebra";
  j["field"] = c.field.str();
  j["group"] = to_json(c.group);
  j["dims"] = c.dims;
  j["delta"] = family_maps_json(c.delta, c.order());
  j["counit"] = to_json(c.counit);
  return j;
}

template <ExactField K>
json to_json(const HopfFamily<K>& h) {
  json j;
  j["kind"] = "hopf";
  j["field"] = h.field.str();
  j["group"] = to_json(h.group);
  json comps = json::object();
  for (std::size_t a = 0; a < h.order(); ++a) {
    json c;
    c["dim"] = h.components[a].dim;
    c["mul"] = to_json(h.components[a].mul);
    c["unit"] = to_json(h.components[a].unit);
    comps[std::to_string(a)] = std::move(c);
  }
  j["components"] = std::move(comps);
  j["delta"] = family_maps_json(h.delta, h.order());
  j["counit"] = to_json(h.counit);
  j["antipode"] = maps_json(h.antipode);
  return j;
}

template <ExactField K>
json to_json(const ComoduleFamily<K>& m, const FieldSpec& field, std::size_t n) {
  json j;
  j["kind"] = "comodule";
  j["field"] = field.str();
  j["side"] = to_string(m.side);
  j["dims"] = m.dims;
  j["coaction"] = family_maps_json(m.coaction, n);
  return j;
}

template <ExactField K>
json to_json(const Section<K>& s) {
  json j;
  j["g"] = maps_json(s.g);
  j["ginv"] = maps_json(s.ginv);
  return j;
}

template <ExactField K>
json to_json(const QuotientPair<K>& p, const std::optional<Section<K>>& s) {
  json j;
  j["kind"] = "pair";
  j["field"] = p.ambient.field.str();
  j["variant"] = to_string(p.variant);
  j["ambient"] = to_json(p.ambient);
  if (const auto* h = p.target_hopf())
    j["target"] = to_json(*h);
  else
    j["target"] = to_json(p.C());
  j["sigma"] = maps_json(p.sigma);
  if (p.omega) j["omega"] = maps_json(*p.omega);
  if (s) j["section"] = to_json(*s);
  return j;
}

template <ExactField K>
json to_json(const Cosection<K>& c, const FieldSpec& field) {
  json j;
  j["kind"] = "cosection";
  j["field"] = field.str();
  j["maps"] = maps_json(c.maps);
  return j;
}

template <ExactField K>
json subspaces_json(const std::vector<Subspace<K>>& s) {
  json j = json::object();
  for (std::size_t a = 0; a < s.size(); ++a) {
    json e;
    e["dim"] = s[a].dim();
    e["basis"] = to_json(s[a].basis());
    j[std::to_string(a)] = std::move(e);
  }
  return j;
}

template <ExactField K>
json to_json(const SubHopfFamily<K>& s) {
  json j;
  j["kind"] = "subhopf";
  j["field"] = s.ambient.field.str();
  j["ambient"] = to_json(s.ambient);
  j["subspaces"] = subspaces_json(s.subspaces);
  if (s.complement) j["complement"] = subspaces_json(*s.complement);
  return j;
}

template <ExactField K>
json to_json(const InducedComodule<K>& ind, const FieldSpec& field, const std::string& pair_sha, std::size_t n) {
  json j;
  j["kind"] = "induced";
  j["field"] = field.str();
  j["source_pair_sha256"] = pair_sha;
  j["flattening"] = "v*dim(H_a)+h";
  j["spaces"] = subspaces_json(ind.spaces);
  j["coaction"] = family_maps_json(ind.coaction, n);
  return j;
}

template <ExactField K>
json to_json(const CoinducedComodule<K>& w, const FieldSpec& field, const std::string& pair_sha, std::size_t n) {
  json j;
  j["kind"] = "coinduced";
  j["field"] = field.str();
  j["source_pair_sha256"] = pair_sha;
  j["flattening"] = "column-major:j*dim(H_a)+i";
  j["spaces"] = subspaces_json(w.spaces);
  j["coaction"] = family_maps_json(w.coaction, n);
  return j;
}

}  // namespace hopfpi::io
