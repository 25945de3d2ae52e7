#include "ncat/category_io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <tuple>

namespace ncat {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw Error(Errc::parse, where + ": " + what);
}

const json& require(const json& obj, const char* field, const std::string& where) {
  if (!obj.is_object()) fail(where, "expected an object");
  auto it = obj.find(field);
  if (it == obj.end()) fail(where, std::string("missing field '") + field + "'");
  return *it;
}

std::string require_string(const json& obj, const char* field, const std::string& where) {
  const auto& v = require(obj, field, where);
  if (!v.is_string()) fail(where + "." + field, "expected a string");
  return v.get<std::string>();
}

int require_int(const json& obj, const char* field, const std::string& where) {
  const auto& v = require(obj, field, where);
  if (!v.is_number_integer()) fail(where + "." + field, "expected an integer");
  return v.get<int>();
}

struct RawCell {
  std::string id;
  int dim;
  std::optional<std::string> src;
  std::optional<std::string> tgt;
  std::string where;
};

}  // namespace

StrictNCategory parse_category(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(Errc::parse, e.what());
  }
  return parse_category(doc);
}

StrictNCategory parse_category(const json& doc) {
  const int n = require_int(doc, "dimension", "category");
  if (n < 1) fail("category.dimension", "must be at least 1");

  const auto& cells = require(doc, "cells", "category");
  if (!cells.is_array()) fail("category.cells", "expected an array");

  std::vector<RawCell> raw;
  std::map<std::string, int> dims;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const std::string where = "cells[" + std::to_string(i) + "]";
    RawCell rc{require_string(cells[i], "id", where), require_int(cells[i], "dim", where),
               std::nullopt, std::nullopt, where};
    if (rc.dim < 0 || rc.dim > n) {
      fail(where + ".dim", "must lie in 0.." + std::to_string(n));
    }
    for (const char* field : {"src", "tgt"}) {
      auto it = cells[i].find(field);
      if (it == cells[i].end() || it->is_null()) continue;
      if (!it->is_string()) fail(where + "." + field, "expected a string");
      (std::string(field) == "src" ? rc.src : rc.tgt) = it->get<std::string>();
    }
    if (!dims.emplace(rc.id, rc.dim).second) {
      throw Error(Errc::duplicate_id, where + ".id: duplicate cell id '" + rc.id + "'");
    }
    raw.push_back(std::move(rc));
  }
  for (const auto& rc : raw) {
    for (const auto& [field, ref] : {std::pair{"src", rc.src}, std::pair{"tgt", rc.tgt}}) {
      if (!ref) {
        if (rc.dim > 0) fail(rc.where, std::string("missing field '") + field + "'");
        continue;
      }
      auto it = dims.find(*ref);
      if (it == dims.end()) {
        throw Error(Errc::dangling_reference,
                    rc.where + "." + field + ": unknown cell '" + *ref + "'");
      }
      if (rc.dim == 0) fail(rc.where + "." + field, "objects have no boundary");
      if (it->second != rc.dim - 1) {
        fail(rc.where + "." + field, "'" + *ref + "' must have dimension " +
                                         std::to_string(rc.dim - 1));
      }
    }
  }

  StrictNCategory c(n);
  std::stable_sort(raw.begin(), raw.end(),
                   [](const RawCell& a, const RawCell& b) { return a.dim < b.dim; });
  for (const auto& rc : raw) {
    std::optional<CellId> s;
    std::optional<CellId> t;
    if (rc.src) s = c.at(*rc.src);
    if (rc.tgt) t = c.at(*rc.tgt);
    c.add_cell(rc.id, rc.dim, s, t);
  }

  auto lookup = [&](const std::string& name, const std::string& where) {
    auto id = c.find(name);
    if (!id) throw Error(Errc::dangling_reference, where + ": unknown cell '" + name + "'");
    return *id;
  };

  if (auto it = doc.find("identities"); it != doc.end() && !it->is_null()) {
    if (!it->is_array()) fail("category.identities", "expected an array");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string where = "identities[" + std::to_string(i) + "]";
      const auto of = lookup(require_string((*it)[i], "of", where), where + ".of");
      const auto id = lookup(require_string((*it)[i], "id_cell", where), where + ".id_cell");
      c.set_identity(of, id);
    }
  }
  synthesize_identities(c);

  if (auto it = doc.find("compositions"); it != doc.end() && !it->is_null()) {
    if (!it->is_array()) fail("category.compositions", "expected an array");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string where = "compositions[" + std::to_string(i) + "]";
      const auto& e = (*it)[i];
      const int along = require_int(e, "along", where);
      if (along < 0 || along >= n) fail(where + ".along", "must lie in 0.." + std::to_string(n - 1));
      const auto first = lookup(require_string(e, "first", where), where + ".first");
      const auto then = lookup(require_string(e, "then", where), where + ".then");
      const auto result = lookup(require_string(e, "result", where), where + ".result");
      c.set_composite(along, first, then, result);
    }
  }
  synthesize_forced_composites(c);
  return c;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::parse, "cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

StrictNCategory load_category(const std::filesystem::path& path) {
  try {
    const std::string text = read_text_file(path);
    return parse_category(std::string_view(text));
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

json to_json(const StrictNCategory& c) {
  json cells = json::array();
  for (int d = 0; d <= c.dimension(); ++d) {
    for (CellId x : c.cells_of_dim(d)) {
      json cell = {{"id", c.name(x)}, {"dim", d}};
      if (d > 0) {
        cell["src"] = c.name(*c.cell(x).src);
        cell["tgt"] = c.name(*c.cell(x).tgt);
      }
      cells.push_back(std::move(cell));
    }
  }
  json identities = json::array();
  for (int d = 0; d < c.dimension(); ++d) {
    for (CellId x : c.cells_of_dim(d)) {
      if (auto id = c.identity(x)) {
        identities.push_back({{"of", c.name(x)}, {"id_cell", c.name(*id)}});
      }
    }
  }
  json compositions = json::array();
  for (int j = 0; j < c.dimension(); ++j) {
    std::vector<std::tuple<CellId, CellId, CellId>> entries;
    c.for_each_composite(j, [&](CellId a, CellId b, CellId r) { entries.emplace_back(a, b, r); });
    std::sort(entries.begin(), entries.end());
    for (const auto& [a, b, r] : entries) {
      compositions.push_back(
          {{"along", j}, {"first", c.name(a)}, {"then", c.name(b)}, {"result", c.name(r)}});
    }
  }
  return {{"dimension", c.dimension()},
          {"cells", std::move(cells)},
          {"identities", std::move(identities)},
          {"compositions", std::move(compositions)}};
}

}  // namespace ncat
