#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "cov/program.hpp"

namespace cov {

struct CatalogEntry {
  std::string label;
  int root;              // node in the catalog's arena
  int declared_degree = -1;
  int declared_order = -1;
};

// A parsed catalog: named generator programs over one binary form, all
// sharing a hash-consed arena.  Labels must be defined before use.
struct Catalog {
  int n = 0;
  std::shared_ptr<ProgramArena> arena;
  std::vector<CatalogEntry> entries;
  std::map<std::string, int> by_label;  // label -> index into entries

  const CatalogEntry& entry(const std::string& label) const;
  std::vector<int> roots() const;
};

// Parses the catalog DSL:
//   n = <int>                      (header pragma, required first)
//   label = expr   [# d=<D> m=<M>] (one entry per line)
//   expr := f | label | tr(expr, expr, int) | mul(expr, expr)
//         | pow(expr, int) | sum(expr, expr)
// '#' starts a comment; a trailing "d=<D> m=<M>" comment declares the
// entry's bidegree.  Errors carry 1-based line numbers.
Catalog parse_catalog(const std::string& text);
Catalog load_catalog_file(const std::string& path);

// Default shipped data location (override with COVTK_DATA env var).
std::string data_dir();
Catalog load_shipped_catalog(int n);        // cov9.cat / cov10.cat
Catalog load_reference_basis(int n);        // s6.cat / s8.cat

// Checks every entry's computed (degree, order) against its declaration;
// returns the list of mismatched labels (empty = all consistent).
std::vector<std::string> integrity_mismatches(const Catalog& cat);

struct CatalogTable {
  std::map<std::pair<int, int>, int> cells;  // (degree, order) -> count
  std::map<int, int> row_totals;             // degree -> count
  std::map<int, int> col_totals;             // order -> count
  std::map<int, int> cumulative;             // degree -> running total
  int total = 0;
};

CatalogTable table_counts(const Catalog& cat);

// The invariant h.s.o.p. generator programs from the published propositions,
// built in the given arena: for n=9 degrees 4,4,8,12,14,16,30; for n=10
// degrees 2,4,6,6,8,9,10,14 (the degree-14 one needs a Sum node).
struct HsopProgram {
  std::string label;
  int root;
  int declared_degree;
};
std::vector<HsopProgram> hsop_programs(int n, ProgramArena& arena);

}  // namespace cov
