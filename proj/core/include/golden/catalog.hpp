#pragma once

// The built-in corpus of Fibonacci/Lucas identities, plus the line-oriented
// text format used to export it and to read user identity files.
//
// Export format, one identity per line, "#" comments:
//
//   id | family | constraints | dsl | anchor
//
// User files may instead hold bare DSL lines, each optionally preceded by
// annotation lines that apply to the next identity only:
//
//   @id        name
//   @params    p, q, x:rat        (":rat" marks a rational parameter)
//   @constraints n >= 0, p != 0
//   @series    y n                (formal variable, truncation-order variable)
//   @series-kind fib|lucas        (optional cross-check against the direct builder)
//
// Export-format lines carry no parameter signature. Their free variables x, y
// and z are rational and all others integer; lines of family H are series in
// y truncated at degree n.

#include <golden/expr.hpp>

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace golden {

enum class IdentityKind { Scalar, Ring, Series };
enum class SeriesKind { Fib, Lucas };

std::string_view to_string(IdentityKind kind);

struct IdentityEntry {
  std::string id;
  /// Family code, a single letter for built-ins ("D").
  std::string family;
  std::string dsl;
  std::vector<std::string> int_params;
  std::vector<std::string> rat_params;
  /// Constraint text, e.g. "n >= 0, p != 0".
  std::string constraints;
  std::string anchor;
  IdentityKind kind = IdentityKind::Scalar;

  /// Series entries: lhs and rhs are compared as power series in
  /// series_var, truncated at the degree bound to order_var.
  std::string series_var;
  std::string order_var;
  std::optional<SeriesKind> series_kind;

  /// Parsed dsl with constraints attached.
  IdentityAst ast;
  bool uses_gibonacci = false;
  /// Integer parameters occurring in a summation bound; sweeps draw them
  /// from the bound range instead of the index range.
  std::vector<std::string> bound_params;
};

/// Parses and validates an entry: the dsl must parse, every free variable
/// must be declared, constraints may reference declared names only. The kind
/// is Ring when alpha, beta or sqrt5 occur, Scalar otherwise, unless
/// series_var is set. Throws golden::Error describing the defect.
IdentityEntry make_entry(std::string id, std::string family, std::string dsl,
                         std::vector<std::string> int_params,
                         std::vector<std::string> rat_params, std::string constraints,
                         std::string anchor, std::string series_var = {},
                         std::string order_var = {},
                         std::optional<SeriesKind> series_kind = std::nullopt);

/// Full corpus in a fixed order with unique ids. Parsed once, then shared.
const std::vector<IdentityEntry>& load_catalog();

const IdentityEntry* find_entry(std::string_view id);

/// Long name for a family code ("D" -> "addition"); empty if unknown.
std::string_view family_name(std::string_view family);

/// True when `filter` names the entry's family by code or by long name.
bool in_family(const IdentityEntry& entry, std::string_view filter);

std::string export_line(const IdentityEntry& entry);
std::string export_catalog(std::span<const IdentityEntry> entries);

/// Reads an identity file in export format or annotated bare DSL. Errors
/// carry the 1-based line number in their message.
std::vector<IdentityEntry> read_identity_file(std::string_view text);

}  // namespace golden
