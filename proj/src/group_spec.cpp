#include "normgraph/group_spec.hpp"

#include <fstream>
#include <sstream>

#include "normgraph/representations.hpp"

namespace normgraph {

using nlohmann::json;

SpecError::SpecError(std::string field, std::size_t line, const std::string& message)
    : std::runtime_error((line ? "line " + std::to_string(line) + ": " : std::string()) +
                         (field.empty() ? std::string() : field + ": ") + message),
      field_(std::move(field)),
      line_(line) {}

std::string to_string(SpecKind k) {
  switch (k) {
    case SpecKind::cyclic: return "cyclic";
    case SpecKind::dihedral: return "dihedral";
    case SpecKind::symmetric: return "symmetric";
    case SpecKind::direct_product: return "direct-product";
    case SpecKind::permutation: return "permutation";
    case SpecKind::matrix_semidirect: return "matrix-semidirect";
    case SpecKind::table: return "table";
  }
  return "unknown";
}

namespace {

std::string join_path(const std::string& base, const std::string& field) {
  return base.empty() ? field : base + "." + field;
}

const json& require(const json& doc, const std::string& key, const std::string& path) {
  if (!doc.is_object()) throw SpecError(path, 0, "expected an object");
  auto it = doc.find(key);
  if (it == doc.end()) throw SpecError(join_path(path, key), 0, "missing field");
  return *it;
}

long long as_int(const json& v, const std::string& path) {
  if (!v.is_number_integer()) throw SpecError(path, 0, "expected an integer");
  return v.get<long long>();
}

std::uint32_t as_positive(const json& v, const std::string& path) {
  const long long x = as_int(v, path);
  if (x < 1 || x > 0xFFFFFFFFll) throw SpecError(path, 0, "expected a positive integer");
  return static_cast<std::uint32_t>(x);
}

const json& as_array(const json& v, const std::string& path) {
  if (!v.is_array()) throw SpecError(path, 0, "expected a list");
  return v;
}

SpecKind parse_kind(const json& v, const std::string& path) {
  if (!v.is_string()) throw SpecError(path, 0, "expected a string");
  const std::string s = v.get<std::string>();
  if (s == "cyclic") return SpecKind::cyclic;
  if (s == "dihedral") return SpecKind::dihedral;
  if (s == "symmetric") return SpecKind::symmetric;
  if (s == "direct-product") return SpecKind::direct_product;
  if (s == "permutation") return SpecKind::permutation;
  if (s == "matrix-semidirect") return SpecKind::matrix_semidirect;
  if (s == "table") return SpecKind::table;
  throw SpecError(path, 0, "unknown kind '" + s + "'");
}

}  // namespace

GroupSpec spec_from_json(const json& doc, const std::string& path) {
  GroupSpec spec;
  spec.kind = parse_kind(require(doc, "kind", path), join_path(path, "kind"));
  if (auto it = doc.find("name"); it != doc.end() && it->is_string()) spec.name = it->get<std::string>();

  switch (spec.kind) {
    case SpecKind::cyclic:
    case SpecKind::dihedral:
    case SpecKind::symmetric:
      spec.n = as_positive(require(doc, "n", path), join_path(path, "n"));
      break;
    case SpecKind::permutation: {
      spec.degree = as_positive(require(doc, "degree", path), join_path(path, "degree"));
      const std::string gpath = join_path(path, "generators");
      const json& gens = as_array(require(doc, "generators", path), gpath);
      for (std::size_t i = 0; i < gens.size(); ++i) {
        const std::string ipath = gpath + "[" + std::to_string(i) + "]";
        std::vector<std::vector<std::uint32_t>> cycles;
        for (std::size_t c = 0; c < as_array(gens[i], ipath).size(); ++c) {
          const std::string cpath = ipath + "[" + std::to_string(c) + "]";
          std::vector<std::uint32_t> cycle;
          for (const json& pt : as_array(gens[i][c], cpath)) {
            const std::uint32_t x = as_positive(pt, cpath);
            if (x > spec.degree) throw SpecError(cpath, 0, "point " + std::to_string(x) + " exceeds degree");
            cycle.push_back(x);
          }
          cycles.push_back(std::move(cycle));
        }
        spec.cycles.push_back(std::move(cycles));
      }
      break;
    }
    case SpecKind::matrix_semidirect: {
      spec.p = as_positive(require(doc, "p", path), join_path(path, "p"));
      if (!is_prime(spec.p)) throw SpecError(join_path(path, "p"), 0, "not a prime");
      spec.dim = as_positive(require(doc, "dim", path), join_path(path, "dim"));
      const std::string mpath = join_path(path, "matrices");
      const json& mats = as_array(require(doc, "matrices", path), mpath);
      for (std::size_t i = 0; i < mats.size(); ++i) {
        const std::string ipath = mpath + "[" + std::to_string(i) + "]";
        const json& rows = as_array(mats[i], ipath);
        if (rows.size() != spec.dim) throw SpecError(ipath, 0, "expected " + std::to_string(spec.dim) + " rows");
        std::vector<std::vector<long long>> values;
        for (std::size_t r = 0; r < rows.size(); ++r) {
          const std::string rpath = ipath + "[" + std::to_string(r) + "]";
          const json& row = as_array(rows[r], rpath);
          if (row.size() != spec.dim) throw SpecError(rpath, 0, "expected " + std::to_string(spec.dim) + " entries");
          std::vector<long long> vals;
          for (const json& x : row) vals.push_back(as_int(x, rpath));
          values.push_back(std::move(vals));
        }
        Matrix m = Matrix::from_rows(spec.p, values);
        if (determinant(m) == 0) throw SpecError(ipath, 0, "singular matrix");
        spec.matrices.push_back(std::move(m));
      }
      break;
    }
    case SpecKind::direct_product: {
      const std::string fpath = join_path(path, "factors");
      const json& factors = as_array(require(doc, "factors", path), fpath);
      if (factors.empty()) throw SpecError(fpath, 0, "needs at least one factor");
      for (std::size_t i = 0; i < factors.size(); ++i)
        spec.factors.push_back(spec_from_json(factors[i], fpath + "[" + std::to_string(i) + "]"));
      break;
    }
    case SpecKind::table: {
      spec.order = as_positive(require(doc, "order", path), join_path(path, "order"));
      const std::string tpath = join_path(path, "table");
      const json& rows = as_array(require(doc, "table", path), tpath);
      if (rows.size() != spec.order) throw SpecError(tpath, 0, "expected " + std::to_string(spec.order) + " rows");
      for (std::size_t r = 0; r < rows.size(); ++r) {
        const std::string rpath = tpath + "[" + std::to_string(r) + "]";
        const json& row = as_array(rows[r], rpath);
        if (row.size() != spec.order) throw SpecError(rpath, 0, "wrong row length");
        for (const json& x : row) {
          const long long v = as_int(x, rpath);
          if (v < 0 || v >= spec.order) throw SpecError(rpath, 0, "entry out of range");
          spec.table.push_back(static_cast<ElementId>(v));
        }
      }
      break;
    }
  }
  return spec;
}

GroupSpec parse_group_spec(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text, nullptr, true, /*ignore_comments=*/true);
  } catch (const json::parse_error& e) {
    std::size_t line = 1;
    for (std::size_t i = 0; i < e.byte && i < text.size(); ++i)
      if (text[i] == '\n') ++line;
    throw SpecError("", line, std::string("syntax error: ") + e.what());
  }
  return spec_from_json(doc);
}

GroupSpec load_group_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("", 0, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_group_spec(ss.str());
}

FiniteGroup build(const GroupSpec& spec) {
  auto named = [&](FiniteGroup g) {
    if (spec.name.empty()) return g;
    return FiniteGroup(g.backend_ptr(), g.generators(), spec.name);
  };
  try {
    switch (spec.kind) {
      case SpecKind::cyclic: return named(make_cyclic(spec.n));
      case SpecKind::dihedral: return named(make_dihedral(spec.n));
      case SpecKind::symmetric: return named(make_symmetric(spec.n));
      case SpecKind::permutation: {
        std::vector<Permutation> gens;
        for (const auto& cycles : spec.cycles) gens.push_back(from_cycles(spec.degree, cycles));
        return named(make_permutation_group(spec.degree, gens));
      }
      case SpecKind::matrix_semidirect: return named(semidirect_product(spec.p, spec.dim, spec.matrices));
      case SpecKind::direct_product: {
        FiniteGroup g = build(spec.factors.front());
        for (std::size_t i = 1; i < spec.factors.size(); ++i) g = direct_product(g, build(spec.factors[i]));
        return named(g);
      }
      case SpecKind::table: return named(make_table_group(spec.order, spec.table));
    }
  } catch (const GroupError& e) {
    throw SpecError(to_string(spec.kind), 0, e.what());
  }
  throw SpecError("kind", 0, "unsupported kind");
}

}  // namespace normgraph
