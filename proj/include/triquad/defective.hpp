#pragma once

#include <triquad/ntheory.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace triquad {

// A Lehmer pair (alpha, beta) is recorded by (a, b) = ((alpha+beta)^2,
// (alpha-beta)^2).  The n-th Lehmer number can be free of primitive divisors
// ("defective") only for the finitely many pairs tabulated per n when
// 7 <= n <= 29, and for no pair at all when n >= 31 is prime.
struct DefectivePair {
  i64 a = 0;
  i64 b = 0;
  bool operator==(const DefectivePair&) const = default;
};

class DefectiveTable {
 public:
  // The published tables for prime 7 <= n <= 29, compiled in.
  static DefectiveTable embedded();

  // Parse the text format of data/defective_pairs.txt: blank lines and
  // '#' comments ignored; a line "n <prime>" opens a block; every other
  // line holds two integers "a b".  Throws std::runtime_error on bad input.
  static DefectiveTable load(const std::string& path);

  // Pairs recorded for index n; empty when none (in particular for every
  // prime n >= 31).  Throws for n < 7, where the tables do not apply.
  const std::vector<DefectivePair>& rows(unsigned n) const;

  // Indices with an explicit block (for diagnostics / round-trip tests).
  std::vector<unsigned> indices() const;

  void add(unsigned n, DefectivePair pr);

 private:
  std::map<unsigned, std::vector<DefectivePair>> rows_;
};

// A term f_n(u, v) = +-1 (u, v >= 1) would make (gamma, conj gamma) a
// defective Lehmer pair with (a, b) = (12u^2, -8v^2).  This returns the
// table rows of that shape, decoded back to (u, v); an empty result proves
// |f_n(u, v)| > 1 for all u, v >= 1.
struct ShapeMatch {
  DefectivePair pair;
  u64 u = 0;
  u64 v = 0;
};
std::vector<ShapeMatch> shape_matches(const DefectiveTable& t, unsigned n);

}  // namespace triquad
