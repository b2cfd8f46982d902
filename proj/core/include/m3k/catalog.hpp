#pragma once

#include <string>
#include <vector>

#include "m3k/matroid.hpp"

namespace m3k {

enum class LineFormat { lex01, revlex_star };

struct CatalogEntry {
  Matroid m;
  std::string id;      // stable within a catalog spec
  std::string source;  // file:line or generator tag
};

struct Catalog {
  std::string spec;
  std::vector<CatalogEntry> entries;
};

// "<n> <r> <bits>"; lex01 marks bases '1' over r-subsets in lex tuple order,
// revlex_star marks them '*' (non-bases '0') in reverse-lex (colex) order.
std::string encode_line(const Matroid& m, LineFormat fmt);
Matroid decode_line(const std::string& line, LineFormat fmt);

// Parses a whole file; '#' lines are comments. Errors carry line numbers.
// Every entry is validated through from_bases and deduplicated by
// isomorphism class (first occurrence wins).
Catalog load_catalog(const std::string& path, LineFormat fmt);

// All simple GF(p)-representable matroids on at most max_n elements, plus the
// named constructions that fit, deduplicated.
Catalog gen_catalog(int p, int max_n);

// Catalog spec grammar: comma-separated union of "gen:gf2:K", "gen:gf3:K"
// and file paths (format autodetected). Dedup across the union.
Catalog load_catalog_spec(const std::string& spec, int max_n_filter = 0);

}  // namespace m3k
