#pragma once
// Symbolic motion planner synthesis for cell complexes filtered by skeleta,
// and the tc bracket for connected sums of real projective spaces.

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "tc/certificate.hpp"

namespace tc {

// Cell counts per dimension, a chosen point v_k in every skeleton V^k, and
// a chosen path gamma_{k,l} from v_k to v_l.
struct CellComplexDescription {
  int dimension = 0;
  std::vector<long> cells;                           // size dimension + 1, counts >= 1
  std::map<int, std::string> points;                 // overrides for v<k>
  std::map<std::pair<int, int>, std::string> paths;  // overrides for g<k>_<l>

  std::string point(int k) const;
  std::string path(int k, int l) const;
  void validate() const;
};

// On the block V^k x V^l of F_i (k + l = i): contract the first coordinate
// into v_k, run gamma_{k,l}, expand to the second coordinate.
struct PlannerRule {
  int k = 0;
  int l = 0;
  std::string contract_to;
  std::string path;
  std::string expand_from;
};

struct PlannerDomain {
  int index = 0;
  std::vector<PlannerRule> blocks;
};

struct PlannerTable {
  int dimension = 0;
  std::vector<PlannerDomain> domains;  // 2 dimension + 1 of them

  std::string to_text() const;
  std::string to_json() const;
};

PlannerTable synthesize(const CellComplexDescription& d);

// One 0-cell, g cells in every dimension 1..n-1, one n-cell.
CellComplexDescription standard_connected_sum_description(int n, int g);

// Line grammar: "dimension <n>", "cells <c0> .. <cn>", optional
// "point <k> <label>" and "path <k> <l> <label>"; '#' starts a comment.
CellComplexDescription parse_description(std::istream& in);
CellComplexDescription load_description(const std::string& file);

struct TcBracket {
  int lower = 0;
  int upper = 0;
  bool optimal = false;
  Verdict verdict = Verdict::inconclusive;
};

// Upper bound 2n read off the synthesized table; lower bound 2n when the
// certificate pipeline verifies.  Requires n >= 3 and g >= 2.
TcBracket tc_bracket(int n, int g, const CertifyOptions& opts = {});

}  // namespace tc
