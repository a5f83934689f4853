#pragma once

#include <golden/catalog.hpp>

#include <vector>

namespace golden::detail {

struct CatalogRow {
  const char* id;
  const char* family;
  const char* dsl;
  const char* int_params;
  const char* rat_params;
  const char* constraints;
  const char* anchor;
};

struct SeriesRow {
  const char* id;
  const char* family;
  const char* dsl;
  const char* int_params;
  const char* anchor;
  const char* series_var;
  const char* order_var;
  SeriesKind kind;
};

const std::vector<CatalogRow>& catalog_rows();
const std::vector<SeriesRow>& series_rows();

}  // namespace golden::detail
