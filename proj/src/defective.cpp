#include <triquad/defective.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace triquad {

DefectiveTable DefectiveTable::embedded() {
  DefectiveTable t;
  t.rows_[7] = {{1, -7}, {1, -19}, {3, -5}, {5, -7}, {13, -3}, {14, -22}};
  t.rows_[11] = {};
  t.rows_[13] = {{1, -7}};
  t.rows_[17] = {};
  t.rows_[19] = {};
  t.rows_[23] = {};
  t.rows_[29] = {};
  return t;
}

DefectiveTable DefectiveTable::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("defective table: cannot open " + path);
  DefectiveTable t;
  std::vector<DefectivePair>* block = nullptr;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;  // blank
    auto fail = [&](const char* what) {
      throw std::runtime_error("defective table: " + path + ":" +
                               std::to_string(lineno) + ": " + what);
    };
    if (first == "n") {
      long idx;
      if (!(ls >> idx) || idx < 7) fail("bad block header");
      block = &t.rows_[static_cast<unsigned>(idx)];
      continue;
    }
    if (!block) fail("pair before any 'n' header");
    i64 a, b;
    std::istringstream pr(line);
    if (!(pr >> a >> b)) fail("expected 'a b'");
    block->push_back({a, b});
  }
  return t;
}

const std::vector<DefectivePair>& DefectiveTable::rows(unsigned n) const {
  if (n < 7) throw std::invalid_argument("defective table: applies to n >= 7 only");
  static const std::vector<DefectivePair> kEmpty;
  auto it = rows_.find(n);
  return it == rows_.end() ? kEmpty : it->second;
}

std::vector<unsigned> DefectiveTable::indices() const {
  std::vector<unsigned> out;
  for (const auto& [n, _] : rows_) out.push_back(n);
  return out;
}

void DefectiveTable::add(unsigned n, DefectivePair pr) { rows_[n].push_back(pr); }

namespace {

std::optional<u64> square_root_exact(u64 m) {
  if (m == 0) return 0;
  mpz_class z = static_cast<unsigned long>(m);
  SqrtResult r = integer_sqrt(z);
  if (!r.exact) return std::nullopt;
  return static_cast<u64>(r.root.get_ui());
}

}  // namespace

std::vector<ShapeMatch> shape_matches(const DefectiveTable& t, unsigned n) {
  std::vector<ShapeMatch> out;
  for (const DefectivePair& pr : t.rows(n)) {
    if (pr.a <= 0 || pr.a % 12 != 0) continue;
    if (pr.b >= 0 || (-pr.b) % 8 != 0) continue;
    auto u = square_root_exact(static_cast<u64>(pr.a) / 12);
    auto v = square_root_exact(static_cast<u64>(-pr.b) / 8);
    if (!u || !v || *u == 0 || *v == 0) continue;
    out.push_back({pr, *u, *v});
  }
  return out;
}

}  // namespace triquad
