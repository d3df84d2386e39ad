#pragma once

#include "hyperconv/arrangement.hpp"
#include "hyperconv/quiver.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperconv {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// {"n": .., "k": .., "A": [["p/q", ..], ..], "w": [..], "xi": [..], "c": ".."}; xi and c optional.
struct ArrangementDoc {
  Arrangement base;
  std::optional<RationalVector> xi;
  std::optional<Rational> c;

  bool polarized() const { return xi.has_value(); }
  // Throws InputError without xi.
  PolarizedArrangement polarization() const;
};

ArrangementDoc parse_arrangement(const std::string& text);
ArrangementDoc load_arrangement(const std::string& path);
std::string dump_arrangement(const ArrangementDoc& doc);
std::string dump_arrangement(const PolarizedArrangement& V);

struct RankEntry {
  std::string src, tgt;
  MultiDegree degree;
  std::size_t rank = 0;
};

struct RankTable {
  std::string algebra;
  int window = 0;
  std::vector<RankEntry> entries;
};

std::string dump_rank_table(const RankTable& t);

}  // namespace hyperconv
