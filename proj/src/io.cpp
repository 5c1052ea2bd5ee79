#include "latmat/io.hpp"

#include <sstream>

namespace latmat {

using nlohmann::json;

namespace {

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

Elem label_to_elem(const Lattice& L, const std::string& label,
                   const char* where) {
  const auto e = L.element(label);
  if (!e) {
    throw UnknownElement("unknown element label \"" + label + "\" in " +
                         where);
  }
  return *e;
}

std::vector<std::string> parse_names(const json& j) {
  if (!j.contains("elements") || !j["elements"].is_array()) {
    throw ParseError("lattice needs an \"elements\" array");
  }
  std::vector<std::string> names;
  for (const auto& v : j["elements"]) {
    if (!v.is_string()) throw ParseError("element labels must be strings");
    names.push_back(v.get<std::string>());
  }
  return names;
}

}  // namespace

std::shared_ptr<const Lattice> parse_lattice(const std::string& text) {
  const json j = parse_json(text);
  if (!j.is_object()) throw ParseError("lattice file must be a JSON object");
  const auto names = parse_names(j);
  auto find = [&](const std::string& label) -> Elem {
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (names[i] == label) return static_cast<Elem>(i);
    }
    throw UnknownElement("unknown element label \"" + label +
                         "\" in lattice file");
  };

  if (j.contains("covers")) {
    std::vector<std::pair<Elem, Elem>> covers;
    for (const auto& pair : j["covers"]) {
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() ||
          !pair[1].is_string()) {
        throw ParseError("covers must be [lower, upper] label pairs");
      }
      covers.emplace_back(find(pair[0].get<std::string>()),
                          find(pair[1].get<std::string>()));
    }
    return std::make_shared<const Lattice>(
        Lattice::from_covers(names, covers));
  }

  if (j.contains("join") && j.contains("meet")) {
    auto table = [&](const json& t, const char* which) {
      if (!t.is_array()) {
        throw ParseError(std::string(which) + " table must be an array");
      }
      std::vector<std::vector<Elem>> rows;
      for (const auto& row : t) {
        std::vector<Elem> r;
        for (const auto& v : row) {
          if (!v.is_string()) {
            throw ParseError("table entries must be element labels");
          }
          r.push_back(find(v.get<std::string>()));
        }
        rows.push_back(std::move(r));
      }
      return rows;
    };
    return std::make_shared<const Lattice>(Lattice::from_tables(
        names, table(j["join"], "join"), table(j["meet"], "meet")));
  }

  throw ParseError("lattice file needs either \"covers\" or both \"join\" "
                   "and \"meet\"");
}

std::shared_ptr<const Lattice> resolve_lattice(
    const std::string& name_or_json) {
  const auto first = name_or_json.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && name_or_json[first] == '{') {
    return parse_lattice(name_or_json);
  }
  return Lattice::builtin_shared(name_or_json);
}

json lattice_to_json(const Lattice& lattice) {
  json j;
  j["elements"] = json::array();
  for (Elem a = 0; a < lattice.size(); ++a) {
    j["elements"].push_back(lattice.label(a));
  }
  j["covers"] = json::array();
  for (const auto& [lo, hi] : lattice.cover_pairs()) {
    j["covers"].push_back({lattice.label(lo), lattice.label(hi)});
  }
  if (!lattice.name().empty()) j["name"] = lattice.name();
  return j;
}

LatMatrix parse_matrix(const json& entries,
                       std::shared_ptr<const Lattice> lattice) {
  if (!entries.is_array() || entries.empty()) {
    throw ParseError("matrix entries must be a nonempty array of rows");
  }
  const int n = static_cast<int>(entries.size());
  std::vector<Elem> out;
  for (const auto& row : entries) {
    if (!row.is_array() || static_cast<int>(row.size()) != n) {
      throw ParseError("matrix entries must be square");
    }
    for (const auto& v : row) {
      if (!v.is_string()) {
        throw ParseError("matrix entries must be element labels");
      }
      out.push_back(
          label_to_elem(*lattice, v.get<std::string>(), "matrix entries"));
    }
  }
  return LatMatrix(std::move(lattice), n, std::move(out));
}

LatMatrix parse_matrix_file(const std::string& text,
                            std::shared_ptr<const Lattice> expected) {
  const json j = parse_json(text);
  if (!j.is_object() || !j.contains("entries")) {
    throw ParseError("matrix file needs an \"entries\" field");
  }
  std::shared_ptr<const Lattice> lattice = expected;
  if (j.contains("lattice")) {
    std::shared_ptr<const Lattice> own;
    if (j["lattice"].is_string()) {
      own = Lattice::builtin_shared(j["lattice"].get<std::string>());
    } else {
      own = parse_lattice(j["lattice"].dump());
    }
    if (expected && !(*expected == *own)) {
      throw LatticeMismatch(
          "matrix file names a lattice different from the requested one");
    }
    lattice = own;
  }
  if (!lattice) {
    throw ParseError("matrix file has no lattice and none was supplied");
  }
  return parse_matrix(j["entries"], std::move(lattice));
}

json matrix_to_json(const LatMatrix& a) {
  json rows = json::array();
  for (int i = 0; i < a.dim(); ++i) {
    json row = json::array();
    for (int j = 0; j < a.dim(); ++j) {
      row.push_back(a.lattice().label(a(i, j)));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

json matrix_file_to_json(const LatMatrix& a) {
  json j;
  j["lattice"] = a.lattice().name().empty() ? lattice_to_json(a.lattice())
                                            : json(a.lattice().name());
  j["entries"] = matrix_to_json(a);
  return j;
}

BoolRel parse_relation(const std::string& text) {
  const json j = parse_json(text);
  if (j.is_array()) {
    const int n = static_cast<int>(j.size());
    BoolRel r(n);
    for (int i = 0; i < n; ++i) {
      if (!j[static_cast<std::size_t>(i)].is_array() ||
          static_cast<int>(j[static_cast<std::size_t>(i)].size()) != n) {
        throw ParseError("relation matrix must be square");
      }
      for (int k = 0; k < n; ++k) {
        const auto& v = j[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
        if (!v.is_number_integer() ||
            (v.get<int>() != 0 && v.get<int>() != 1)) {
          throw ParseError("relation entries must be 0 or 1");
        }
        if (v.get<int>() == 1) r.set(i, k, true);
      }
    }
    return r;
  }
  if (j.is_object() && j.contains("n") && j.contains("edges")) {
    if (!j["n"].is_number_integer() || j["n"].get<int>() < 1) {
      throw ParseError("\"n\" must be a positive integer");
    }
    const int n = j["n"].get<int>();
    BoolRel r(n);
    for (const auto& e : j["edges"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
          !e[1].is_number_integer()) {
        throw ParseError("edges must be [i, j] integer pairs");
      }
      const int i = e[0].get<int>(), k = e[1].get<int>();
      if (i < 1 || i > n || k < 1 || k > n) {
        throw ParseError("edge endpoint out of range (vertices are 1-based)");
      }
      r.set(i - 1, k - 1, true);
    }
    return r;
  }
  throw ParseError("relation must be a 0/1 matrix or {\"n\":, \"edges\":}");
}

json relation_to_json(const BoolRel& a) {
  json rows = json::array();
  for (int i = 0; i < a.dim(); ++i) {
    json row = json::array();
    for (int j = 0; j < a.dim(); ++j) {
      row.push_back(a.get(i, j) ? 1 : 0);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

LatVector parse_vector(const json& entries,
                       std::shared_ptr<const Lattice> lattice) {
  if (!entries.is_array() || entries.empty()) {
    throw ParseError("vector must be a nonempty array of element labels");
  }
  std::vector<Elem> out;
  for (const auto& v : entries) {
    if (!v.is_string()) {
      throw ParseError("vector entries must be element labels");
    }
    out.push_back(label_to_elem(*lattice, v.get<std::string>(), "vector"));
  }
  return LatVector(std::move(lattice), std::move(out));
}

json vector_to_json(const LatVector& x) {
  json out = json::array();
  for (int i = 0; i < x.dim(); ++i) {
    out.push_back(x.lattice().label(x(i)));
  }
  return out;
}

json permutation_to_json(const Permutation& pi) {
  json out = json::array();
  for (int i = 0; i < pi.degree(); ++i) out.push_back(pi(i) + 1);
  return out;
}

std::string relation_to_dot(const BoolRel& a) {
  std::ostringstream os;
  os << "digraph rel {\n";
  for (int i = 0; i < a.dim(); ++i) {
    os << "  " << (i + 1) << ";\n";
  }
  for (int i = 0; i < a.dim(); ++i) {
    for (int j = 0; j < a.dim(); ++j) {
      if (a.get(i, j)) os << "  " << (i + 1) << " -> " << (j + 1) << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace latmat
