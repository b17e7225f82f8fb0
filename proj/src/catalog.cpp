#include "cov/catalog.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace cov {

const CatalogEntry& Catalog::entry(const std::string& label) const {
  auto it = by_label.find(label);
  if (it == by_label.end())
    throw std::out_of_range("no catalog entry " + label);
  return entries[it->second];
}

std::vector<int> Catalog::roots() const {
  std::vector<int> r;
  r.reserve(entries.size());
  for (const auto& e : entries) r.push_back(e.root);
  return r;
}

namespace {

struct Parser {
  const std::string& src;
  std::size_t pos = 0;
  int line = 1;

  [[noreturn]] void fail(const std::string& msg) const {
    throw std::runtime_error("catalog line " + std::to_string(line) + ": " +
                             msg);
  }
  void skip_ws() {
    while (pos < src.size() && (src[pos] == ' ' || src[pos] == '\t')) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < src.size() && src[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }
  std::string ident() {
    skip_ws();
    std::size_t start = pos;
    while (pos < src.size() && (std::isalnum(src[pos]) || src[pos] == '_'))
      ++pos;
    if (start == pos) fail("expected identifier");
    return src.substr(start, pos - start);
  }
  int integer() {
    skip_ws();
    std::size_t start = pos;
    while (pos < src.size() && std::isdigit(src[pos])) ++pos;
    if (start == pos) fail("expected integer");
    return std::atoi(src.substr(start, pos - start).c_str());
  }

  Catalog* cat = nullptr;

  int expr() {
    std::string name = ident();
    ProgramArena& arena = *cat->arena;
    if (name == "f") return arena.leaf();
    if (name == "tr") {
      expect('(');
      int a = expr();
      expect(',');
      int b = expr();
      expect(',');
      int r = integer();
      expect(')');
      int lo = std::min(arena.order(a), arena.order(b));
      if (r > lo) fail("transvectant index " + std::to_string(r) +
                       " exceeds operand orders");
      return arena.transvect(a, b, r);
    }
    if (name == "mul") {
      expect('(');
      int a = expr();
      expect(',');
      int b = expr();
      expect(')');
      return arena.product({{a, 1}, {b, 1}});
    }
    if (name == "pow") {
      expect('(');
      int a = expr();
      expect(',');
      int e = integer();
      expect(')');
      if (e < 1) fail("power exponent must be positive");
      return arena.product({{a, e}});
    }
    if (name == "sum") {
      expect('(');
      int a = expr();
      expect(',');
      int b = expr();
      expect(')');
      if (arena.degree(a) != arena.degree(b) ||
          arena.order(a) != arena.order(b))
        fail("sum terms must share bidegree");
      return arena.sum({a, b});
    }
    auto it = cat->by_label.find(name);
    if (it == cat->by_label.end()) fail("undefined label " + name);
    return cat->entries[it->second].root;
  }
};

}  // namespace

Catalog parse_catalog(const std::string& text) {
  Catalog cat;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    // split off comment; a "d=<D> m=<M>" comment is a bidegree declaration
    int decl_d = -1, decl_m = -1;
    std::string line = raw;
    if (auto h = line.find('#'); h != std::string::npos) {
      std::string comment = line.substr(h + 1);
      line = line.substr(0, h);
      int d, m;
      if (std::sscanf(comment.c_str(), " d=%d m=%d", &d, &m) == 2) {
        decl_d = d;
        decl_m = m;
      }
    }
    // trim
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    auto last = line.find_last_not_of(" \t\r");
    line = line.substr(first, last - first + 1);

    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error("catalog line " + std::to_string(lineno) +
                               ": expected 'name = expr'");
    std::string name = line.substr(0, eq);
    name.erase(name.find_last_not_of(" \t") + 1);
    std::string rhs = line.substr(eq + 1);

    if (name == "n") {
      if (cat.arena)
        throw std::runtime_error("catalog line " + std::to_string(lineno) +
                                 ": duplicate n pragma");
      cat.n = std::atoi(rhs.c_str());
      if (cat.n < 1)
        throw std::runtime_error("catalog: bad form degree");
      cat.arena = std::make_shared<ProgramArena>(cat.n);
      continue;
    }
    if (!cat.arena)
      throw std::runtime_error("catalog line " + std::to_string(lineno) +
                               ": missing 'n = <degree>' header");
    if (cat.by_label.count(name))
      throw std::runtime_error("catalog line " + std::to_string(lineno) +
                               ": duplicate label " + name);
    Parser p{rhs, 0, lineno, &cat};
    int root = p.expr();
    p.skip_ws();
    if (p.pos != rhs.size())
      p.fail("trailing input");
    CatalogEntry e{name, root, decl_d, decl_m};
    cat.by_label[name] = static_cast<int>(cat.entries.size());
    cat.entries.push_back(std::move(e));
  }
  if (!cat.arena) throw std::runtime_error("catalog: empty input");
  return cat;
}

Catalog load_catalog_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open catalog file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_catalog(ss.str());
}

std::string data_dir() {
  if (const char* env = std::getenv("COVTK_DATA")) return env;
#ifdef COVTK_DATA_DIR
  return COVTK_DATA_DIR;
#else
  return "data";
#endif
}

Catalog load_shipped_catalog(int n) {
  if (n != 9 && n != 10)
    throw std::invalid_argument("shipped catalogs cover n=9,10 only");
  return load_catalog_file(data_dir() + "/cov" + std::to_string(n) + ".cat");
}

Catalog load_reference_basis(int n) {
  if (n != 6 && n != 8)
    throw std::invalid_argument("reference bases cover n=6,8 only");
  return load_catalog_file(data_dir() + "/s" + std::to_string(n) + ".cat");
}

std::vector<std::string> integrity_mismatches(const Catalog& cat) {
  std::vector<std::string> bad;
  for (const auto& e : cat.entries) {
    if (e.declared_degree < 0) continue;
    if (cat.arena->degree(e.root) != e.declared_degree ||
        cat.arena->order(e.root) != e.declared_order)
      bad.push_back(e.label);
  }
  return bad;
}

CatalogTable table_counts(const Catalog& cat) {
  CatalogTable t;
  for (const auto& e : cat.entries) {
    int d = cat.arena->degree(e.root), m = cat.arena->order(e.root);
    ++t.cells[{d, m}];
    ++t.row_totals[d];
    ++t.col_totals[m];
    ++t.total;
  }
  int running = 0;
  for (const auto& [d, cnt] : t.row_totals) {
    running += cnt;
    t.cumulative[d] = running;
  }
  return t;
}

std::vector<HsopProgram> hsop_programs(int n, ProgramArena& arena) {
  std::vector<HsopProgram> out;
  int f = arena.leaf();
  auto tr = [&](int a, int b, int r) { return arena.transvect(a, b, r); };
  auto powr = [&](int a, int e) {
    return arena.product({{a, e}});
  };
  if (n == 9) {
    int h1 = tr(f, f, 8), h2 = tr(f, f, 6), h3 = tr(f, f, 4), h4 = tr(f, f, 2);
    int h5 = tr(f, h2, 6), h7 = tr(f, h5, 1);
    int h8 = tr(h2, h2, 4), h9 = tr(h5, h5, 2);
    int h10 = tr(h8, h9, 0), h11 = tr(h8, h9, 1);
    out.push_back({"p4", tr(h1, h1, 2), 4});
    out.push_back({"q4", tr(h2, h2, 6), 4});
    out.push_back({"p8", tr(powr(h1, 3), h2, 6), 8});
    out.push_back({"p12", tr(powr(h1, 5), h3, 10), 12});
    out.push_back({"p14", tr(powr(h1, 5), h7, 10), 14});
    out.push_back({"p16", tr(powr(h1, 7), h4, 14), 16});
    out.push_back({"p30", tr(tr(h10, h10, 4), h11, 4), 30});
    return out;
  }
  if (n == 10) {
    int h1 = tr(f, f, 8), h2 = tr(f, h1, 4), h3 = tr(f, f, 6);
    int h4 = tr(h3, f, 8), h5 = tr(h3, h3, 8), h6 = tr(h2, h2, 4);
    int h7 = tr(h3, h5, 4);
    out.push_back({"p2", tr(f, f, 10), 2});
    out.push_back({"p4", tr(h1, h1, 4), 4});
    out.push_back({"p6", tr(h2, h2, 2), 6});
    out.push_back({"q6", tr(h4, h4, 2), 6});
    out.push_back({"p8", tr(h1, h6, 4), 8});
    out.push_back({"p9", tr(tr(h2, h1, 1), powr(h1, 2), 8), 9});
    out.push_back({"p10", tr(tr(h2, h2, 2), powr(h1, 2), 8), 10});
    int t1 = tr(tr(h5, h5, 2), h7, 4);
    int t2 = tr(powr(tr(h1, h1, 2), 2), tr(h2, h2, 2), 8);
    out.push_back({"p14", arena.sum({t1, t2}), 14});
    return out;
  }
  throw std::invalid_argument("h.s.o.p. programs stored for n=9,10 only");
}

}  // namespace cov
