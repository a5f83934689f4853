#include "catalog_data.hpp"

#include <golden/catalog.hpp>
#include <golden/errors.hpp>

#include <algorithm>
#include <array>
#include <set>
#include <unordered_set>
#include <utility>

namespace golden {

namespace {

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? pos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::vector<std::string> split_names(std::string_view s) {
  std::vector<std::string> out;
  for (auto& name : split(s, ',')) {
    if (!name.empty()) out.push_back(std::move(name));
  }
  return out;
}

bool contains_kind(const Expr& e, std::initializer_list<NodeKind> kinds) {
  if (std::find(kinds.begin(), kinds.end(), e.kind()) != kinds.end()) return true;
  for (const auto& c : e.children()) {
    if (contains_kind(c, kinds)) return true;
  }
  return false;
}

void collect_bound_names(const Expr& e, std::set<std::string>& out) {
  if (e.kind() == NodeKind::Sum) {
    out.merge(free_variables(e.child(0)));
    out.merge(free_variables(e.child(1)));
  }
  for (const auto& c : e.children()) collect_bound_names(c, out);
}

struct Family {
  std::string_view code;
  std::string_view name;
};

constexpr std::array<Family, 19> kFamilies = {{
    {"A", "base-reps"},
    {"B", "hoggatt-alpha"},
    {"C", "intro-binomial"},
    {"D", "addition"},
    {"E", "multiplication"},
    {"F", "cassini-catalan"},
    {"G", "ap-sums"},
    {"H", "generating-functions"},
    {"I", "three-index-addition"},
    {"J", "four-term-products"},
    {"K", "binomial-generic"},
    {"L", "binomial-fibonacci"},
    {"M", "jennings-generic"},
    {"N", "jennings-fibonacci"},
    {"P", "alternating-sums"},
    {"Q", "geometric-generic"},
    {"R", "geometric-fibonacci"},
    {"S", "weighted-ap-sums"},
    {"T", "gibonacci"},
}};

std::vector<IdentityEntry> build_catalog() {
  std::vector<IdentityEntry> out;
  for (const auto& family : kFamilies) {
    for (const auto& row : detail::catalog_rows()) {
      if (family.code != row.family) continue;
      out.push_back(make_entry(row.id, row.family, row.dsl, split_names(row.int_params),
                               split_names(row.rat_params), row.constraints, row.anchor));
    }
    for (const auto& row : detail::series_rows()) {
      if (family.code != row.family) continue;
      out.push_back(make_entry(row.id, row.family, row.dsl, split_names(row.int_params), {},
                               "", row.anchor, row.series_var, row.order_var, row.kind));
    }
  }
  std::unordered_set<std::string> ids;
  for (const auto& e : out) {
    if (!ids.insert(e.id).second) throw Error("duplicate catalog id " + e.id);
  }
  return out;
}

}  // namespace

std::string_view to_string(IdentityKind kind) {
  switch (kind) {
    case IdentityKind::Scalar: return "scalar";
    case IdentityKind::Ring: return "ring";
    case IdentityKind::Series: return "series";
  }
  return "?";
}

IdentityEntry make_entry(std::string id, std::string family, std::string dsl,
                         std::vector<std::string> int_params,
                         std::vector<std::string> rat_params, std::string constraints,
                         std::string anchor, std::string series_var, std::string order_var,
                         std::optional<SeriesKind> series_kind) {
  auto where = [&] { return "identity " + id + ": "; };
  if (id.empty()) throw Error("identity with empty id");

  std::optional<IdentityAst> parsed;
  try {
    parsed = parse_identity(dsl);
    parsed->constraints = parse_constraints(constraints);
  } catch (const SyntaxError& err) {
    throw Error(where() + err.what());
  }
  const IdentityAst& ast = *parsed;

  std::set<std::string> declared;
  for (const auto& list : {&int_params, &rat_params}) {
    for (const auto& name : *list) {
      if (!declared.insert(name).second) throw Error(where() + "parameter '" + name + "' declared twice");
    }
  }
  bool series = !series_var.empty();
  if (series) {
    if (order_var.empty()) throw Error(where() + "series identity without an order variable");
    for (const auto* name : {&series_var, &order_var}) {
      if (!declared.insert(*name).second) {
        throw Error(where() + "series variable '" + *name + "' also declared as a parameter");
      }
    }
  }

  for (const auto& name : free_variables(ast)) {
    if (!declared.contains(name)) throw Error(where() + "undeclared variable '" + name + "'");
  }
  if (series) {
    for (const auto& c : ast.constraints) {
      auto vars = free_variables(c.lhs);
      vars.merge(free_variables(c.rhs));
      if (vars.contains(series_var)) {
        throw Error(where() + "constraint mentions the formal variable '" + series_var + "'");
      }
    }
  }

  std::set<std::string> bound;
  collect_bound_names(ast.lhs, bound);
  collect_bound_names(ast.rhs, bound);
  std::vector<std::string> bound_params;
  for (const auto& name : int_params) {
    if (bound.contains(name)) bound_params.push_back(name);
  }

  auto has = [&](std::initializer_list<NodeKind> kinds) {
    return contains_kind(ast.lhs, kinds) || contains_kind(ast.rhs, kinds);
  };
  IdentityKind kind = IdentityKind::Scalar;
  if (series) {
    kind = IdentityKind::Series;
  } else if (has({NodeKind::Alpha, NodeKind::Beta, NodeKind::Sqrt5})) {
    kind = IdentityKind::Ring;
  }
  bool gib = has({NodeKind::Gib});
  std::string constraint_text = format(ast.constraints);

  return IdentityEntry{
      .id = std::move(id),
      .family = std::move(family),
      .dsl = std::move(dsl),
      .int_params = std::move(int_params),
      .rat_params = std::move(rat_params),
      .constraints = std::move(constraint_text),
      .anchor = std::move(anchor),
      .kind = kind,
      .series_var = std::move(series_var),
      .order_var = std::move(order_var),
      .series_kind = series_kind,
      .ast = std::move(*parsed),
      .uses_gibonacci = gib,
      .bound_params = std::move(bound_params),
  };
}

const std::vector<IdentityEntry>& load_catalog() {
  static const std::vector<IdentityEntry> catalog = build_catalog();
  return catalog;
}

const IdentityEntry* find_entry(std::string_view id) {
  for (const auto& e : load_catalog()) {
    if (e.id == id) return &e;
  }
  return nullptr;
}

std::string_view family_name(std::string_view family) {
  for (const auto& f : kFamilies) {
    if (f.code == family) return f.name;
  }
  return {};
}

bool in_family(const IdentityEntry& entry, std::string_view filter) {
  return entry.family == filter || family_name(entry.family) == filter;
}

std::string export_line(const IdentityEntry& entry) {
  return entry.id + " | " + entry.family + " | " + entry.constraints + " | " +
         format(IdentityAst{entry.ast.lhs, entry.ast.rhs, {}}) + " | " + entry.anchor;
}

std::string export_catalog(std::span<const IdentityEntry> entries) {
  std::string out = "# id | family | constraints | dsl | anchor\n";
  for (const auto& e : entries) out += export_line(e) + "\n";
  return out;
}

namespace {

struct Annotations {
  std::string id;
  std::optional<std::string> params;
  std::string constraints;
  std::string series_var;
  std::string order_var;
  std::optional<SeriesKind> series_kind;
};

bool is_rational_name(const std::string& name) {
  return name == "x" || name == "y" || name == "z";
}

IdentityEntry inferred_entry(std::string id, std::string family, const std::string& dsl,
                             std::string constraints, std::string anchor,
                             std::string series_var, std::string order_var,
                             std::optional<SeriesKind> series_kind) {
  IdentityAst ast = parse_identity(dsl);
  ast.constraints = parse_constraints(constraints);
  std::vector<std::string> ints;
  std::vector<std::string> rats;
  for (const auto& name : free_variables(ast)) {
    if (name == series_var || name == order_var) continue;
    (is_rational_name(name) ? rats : ints).push_back(name);
  }
  return make_entry(std::move(id), std::move(family), dsl, std::move(ints), std::move(rats),
                    std::move(constraints), std::move(anchor), std::move(series_var),
                    std::move(order_var), series_kind);
}

}  // namespace

std::vector<IdentityEntry> read_identity_file(std::string_view text) {
  std::vector<IdentityEntry> out;
  Annotations pending;
  int line_no = 0;
  for (const auto& raw : split(text, '\n')) {
    ++line_no;
    std::string line = raw;
    auto fail = [&](const std::string& why) -> Error {
      return Error("line " + std::to_string(line_no) + ": " + why);
    };
    if (line.empty() || line[0] == '#') continue;
    try {
      if (line[0] == '@') {
        auto space = line.find_first_of(" \t");
        std::string key = line.substr(1, space == std::string::npos ? space : space - 1);
        std::string value = space == std::string::npos ? "" : trim(line.substr(space));
        if (key == "id") {
          pending.id = value;
        } else if (key == "params") {
          pending.params = value;
        } else if (key == "constraints") {
          pending.constraints = value;
        } else if (key == "series") {
          auto space2 = value.find_first_of(" \t");
          if (space2 == std::string::npos) throw fail("@series needs a variable and an order name");
          pending.series_var = trim(value.substr(0, space2));
          pending.order_var = trim(value.substr(space2));
        } else if (key == "series-kind") {
          if (value == "fib") {
            pending.series_kind = SeriesKind::Fib;
          } else if (value == "lucas") {
            pending.series_kind = SeriesKind::Lucas;
          } else {
            throw fail("@series-kind must be fib or lucas");
          }
        } else {
          throw fail("unknown annotation '@" + key + "'");
        }
        continue;
      }

      if (line.find('|') != std::string::npos) {
        auto fields = split(line, '|');
        if (fields.size() != 5) throw fail("expected 5 '|'-separated fields");
        bool series = fields[1] == "H";
        out.push_back(inferred_entry(fields[0], fields[1], fields[3], fields[2], fields[4],
                                     series ? "y" : "", series ? "n" : "", std::nullopt));
        pending = {};
        continue;
      }

      std::string id = pending.id.empty() ? "line" + std::to_string(line_no) : pending.id;
      if (pending.params) {
        std::vector<std::string> ints;
        std::vector<std::string> rats;
        for (const auto& p : split_names(*pending.params)) {
          auto colon = p.find(':');
          if (colon == std::string::npos) {
            ints.push_back(p);
          } else if (trim(p.substr(colon + 1)) == "rat") {
            rats.push_back(trim(p.substr(0, colon)));
          } else if (trim(p.substr(colon + 1)) == "int") {
            ints.push_back(trim(p.substr(0, colon)));
          } else {
            throw fail("parameter type must be int or rat in '" + p + "'");
          }
        }
        out.push_back(make_entry(id, "user", line, std::move(ints), std::move(rats),
                                 pending.constraints, "user file line " + std::to_string(line_no),
                                 pending.series_var, pending.order_var, pending.series_kind));
      } else {
        out.push_back(inferred_entry(id, "user", line, pending.constraints,
                                     "user file line " + std::to_string(line_no),
                                     pending.series_var, pending.order_var,
                                     pending.series_kind));
      }
      pending = {};
    } catch (const SyntaxError& err) {
      throw fail(err.what());
    } catch (const Error& err) {
      std::string what = err.what();
      if (what.rfind("line ", 0) == 0) throw;
      throw fail(what);
    }
  }
  return out;
}

}  // namespace golden
